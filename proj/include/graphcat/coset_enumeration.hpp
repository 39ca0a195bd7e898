#ifndef GRAPHCAT_COSET_ENUMERATION_HPP
#define GRAPHCAT_COSET_ENUMERATION_HPP

#include "graphcat/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace graphcat {

/// Complete coset table of the trivial subgroup, i.e. the right regular action
/// of a finite group generated by involutions. Coset 0 is the identity.
class FiniteModel {
public:
    FiniteModel() = default;
    FiniteModel(std::size_t alphabet_size, std::vector<std::vector<std::size_t>> table)
        : alphabet_size_(alphabet_size), table_(std::move(table))
    {
    }

    std::size_t order() const { return table_.size(); }
    std::size_t alphabet_size() const { return alphabet_size_; }

    /// Coset reached from the identity by reading w left to right.
    std::size_t trace(const Word& w) const
    {
        std::size_t c = 0;
        for (Letter x : w.letters) c = table_[c][x];
        return c;
    }

    bool is_identity(const Word& w) const { return trace(w) == 0; }

private:
    std::size_t alphabet_size_ = 0;
    std::vector<std::vector<std::size_t>> table_;
};

namespace detail {

/// HLT-style Todd-Coxeter enumeration over the trivial subgroup. Generators
/// are involutions: a definition c.x = d always records d.x = c as well.
class ToddCoxeter {
public:
    ToddCoxeter(std::size_t alphabet_size, std::vector<Word> relators, std::size_t cap)
        : ngens_(alphabet_size), relators_(std::move(relators)), cap_(cap)
    {
    }

    std::optional<FiniteModel> run()
    {
        new_coset();
        for (std::size_t c = 0; c < table_.size(); ++c) {
            if (!live(c)) continue;
            for (const Word& r : relators_) {
                if (!scan_and_fill(c, r)) return std::nullopt;
                if (!live(c)) break;
            }
            if (!live(c)) continue;
            for (Letter x = 0; x < ngens_; ++x) {
                if (table_[c][x] == kUndefined && !define(c, x)) return std::nullopt;
            }
        }
        return compact();
    }

private:
    static constexpr std::int64_t kUndefined = -1;

    bool live(std::size_t c) const { return forward_[c] == static_cast<std::int64_t>(c); }

    std::size_t new_coset()
    {
        table_.emplace_back(ngens_, kUndefined);
        forward_.push_back(static_cast<std::int64_t>(table_.size() - 1));
        return table_.size() - 1;
    }

    bool define(std::size_t c, Letter x)
    {
        if (table_.size() >= cap_) return false;
        std::size_t d = new_coset();
        table_[c][x] = static_cast<std::int64_t>(d);
        table_[d][x] = static_cast<std::int64_t>(c);
        return true;
    }

    std::size_t rep(std::size_t c)
    {
        std::size_t root = c;
        while (forward_[root] != static_cast<std::int64_t>(root)) root = static_cast<std::size_t>(forward_[root]);
        while (forward_[c] != static_cast<std::int64_t>(root)) {
            std::size_t next = static_cast<std::size_t>(forward_[c]);
            forward_[c] = static_cast<std::int64_t>(root);
            c = next;
        }
        return root;
    }

    void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue)
    {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        forward_[b] = static_cast<std::int64_t>(a);
        queue.push_back(b);
    }

    void coincidence(std::size_t a, std::size_t b)
    {
        std::vector<std::size_t> queue;
        merge(a, b, queue);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::size_t dead = queue[qi];
            for (Letter x = 0; x < ngens_; ++x) {
                const std::int64_t target = table_[dead][x];
                if (target == kUndefined) continue;
                const std::size_t d = static_cast<std::size_t>(target);
                table_[d][x] = kUndefined;
                table_[dead][x] = kUndefined;
                const std::size_t mu = rep(dead);
                const std::size_t nu = rep(d);
                if (table_[mu][x] != kUndefined) {
                    merge(nu, static_cast<std::size_t>(table_[mu][x]), queue);
                } else if (table_[nu][x] != kUndefined) {
                    merge(mu, static_cast<std::size_t>(table_[nu][x]), queue);
                } else {
                    table_[mu][x] = static_cast<std::int64_t>(nu);
                    table_[nu][x] = static_cast<std::int64_t>(mu);
                }
            }
        }
    }

    // Returns false when the coset cap is hit. Letters are their own inverses,
    // so the backward scan reads the relator's letters unchanged.
    bool scan_and_fill(std::size_t c, const Word& r)
    {
        if (r.letters.empty()) return true;
        std::size_t f = c, b = c;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(r.letters.size()) - 1;
        while (true) {
            while (i <= j && table_[f][r.letters[i]] != kUndefined) {
                f = static_cast<std::size_t>(table_[f][r.letters[i]]);
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j >= i && table_[b][r.letters[j]] != kUndefined) {
                b = static_cast<std::size_t>(table_[b][r.letters[j]]);
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (i == j) {
                const Letter x = r.letters[i];
                table_[f][x] = static_cast<std::int64_t>(b);
                table_[b][x] = static_cast<std::int64_t>(f);
                return true;
            }
            if (!define(f, r.letters[i])) return false;
        }
    }

    FiniteModel compact()
    {
        std::vector<std::size_t> index(table_.size(), 0);
        std::size_t next = 0;
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (live(c)) index[c] = next++;
        std::vector<std::vector<std::size_t>> out(next, std::vector<std::size_t>(ngens_, 0));
        for (std::size_t c = 0; c < table_.size(); ++c) {
            if (!live(c)) continue;
            for (Letter x = 0; x < ngens_; ++x) out[index[c]][x] = index[rep(static_cast<std::size_t>(table_[c][x]))];
        }
        return FiniteModel(ngens_, std::move(out));
    }

    std::size_t ngens_;
    std::vector<Word> relators_;
    std::size_t cap_;
    std::vector<std::vector<std::int64_t>> table_;
    std::vector<std::int64_t> forward_;
};

} // namespace detail

/// Enumerates Z2^{*alphabet} / <<relators>>. Returns nullopt when more than
/// `coset_cap` cosets would be defined (the group may be infinite).
inline std::optional<FiniteModel> enumerate_cosets(std::size_t alphabet_size, const std::vector<Word>& relators,
                                                   std::size_t coset_cap)
{
    std::vector<Word> cleaned;
    for (const Word& r : relators) {
        Word c = cyclic_reduce(r);
        if (!c.empty()) cleaned.push_back(std::move(c));
    }
    return detail::ToddCoxeter(alphabet_size, std::move(cleaned), coset_cap).run();
}

} // namespace graphcat

#endif
