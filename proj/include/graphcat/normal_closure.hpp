#ifndef GRAPHCAT_NORMAL_CLOSURE_HPP
#define GRAPHCAT_NORMAL_CLOSURE_HPP

#include "graphcat/coset_enumeration.hpp"
#include "graphcat/error.hpp"
#include "graphcat/limits.hpp"
#include "graphcat/word.hpp"

#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace graphcat {

enum class Membership { Yes, No, Unknown };

inline const char* to_string(Membership m)
{
    switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    default: return "unknown";
    }
}

/// How membership in a normal closure is decided.
///  - Racg: every generator is (a conjugate of) xyxy; exact.
///  - FiniteModel: coset enumeration of the quotient; exact when it completes.
///  - BoundedBfs: searches products of conjugates of generators; proves Yes,
///    proves No only through the abelianisation, otherwise Unknown.
///  - Auto: the first of Racg, FiniteModel, BoundedBfs that applies.
struct Strategy {
    enum class Kind { Auto, FiniteModel, Racg, BoundedBfs };
    Kind kind = Kind::Auto;
    std::size_t depth = 6;
    std::size_t max_len = 24;

    static Strategy automatic() { return {}; }
    static Strategy finite_model() { return {Kind::FiniteModel}; }
    static Strategy racg() { return {Kind::Racg}; }
    static Strategy bounded_bfs(std::size_t depth = 6, std::size_t max_len = 24)
    {
        return {Kind::BoundedBfs, depth, max_len};
    }

    bool operator==(const Strategy&) const = default;
};

inline std::string to_string(const Strategy& s)
{
    switch (s.kind) {
    case Strategy::Kind::Auto: return "auto";
    case Strategy::Kind::FiniteModel: return "finite-model";
    case Strategy::Kind::Racg: return "racg";
    default: return "bounded-bfs(" + std::to_string(s.depth) + "," + std::to_string(s.max_len) + ")";
    }
}

/// The normal closure <<generators>> inside Z2^{*alphabet}.
struct NormalClosureSpec {
    std::size_t alphabet_size = 0;
    std::vector<Word> generators;
    Strategy strategy;

    void validate() const
    {
        for (const Word& g : generators)
            for (Letter x : g.letters)
                if (x >= alphabet_size)
                    throw ValidationError("generator letter " + std::to_string(x) + " outside alphabet of size "
                                          + std::to_string(alphabet_size));
    }
};

/// Commutation pairs {x, y} when every non-trivial generator is conjugate to
/// xyxy with x != y; nullopt otherwise.
inline std::optional<std::vector<std::vector<char>>> racg_commutation(const NormalClosureSpec& spec)
{
    std::vector<std::vector<char>> commute(spec.alphabet_size, std::vector<char>(spec.alphabet_size, 0));
    for (const Word& g : spec.generators) {
        Word c = cyclic_reduce(g);
        if (c.empty()) continue;
        if (c.size() != 4 || c.letters[0] != c.letters[2] || c.letters[1] != c.letters[3]) return std::nullopt;
        commute[c.letters[0]][c.letters[1]] = commute[c.letters[1]][c.letters[0]] = 1;
    }
    return commute;
}

/// Shuffle reduction in the right-angled Coxeter group: cancels a pair of
/// equal letters whenever every letter between them commutes with both.
/// The word is trivial iff nothing remains.
inline Word racg_normal_form(const Word& w, const std::vector<std::vector<char>>& commute)
{
    std::vector<Letter> s = reduce(w).letters;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 1; j < s.size() && !changed; ++j) {
            for (std::size_t i = j; i-- > 0;) {
                if (s[i] == s[j]) {
                    s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
                    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
                if (!commute[s[i]][s[j]]) break;
            }
        }
    }
    return Word(std::move(s));
}

/// Order of Z2^{*alphabet}/A when coset enumeration finishes under the cap.
inline std::optional<std::size_t> quotient_order_if_finite(const NormalClosureSpec& spec, const Limits& limits = {})
{
    spec.validate();
    auto model = enumerate_cosets(spec.alphabet_size, spec.generators, limits.coset_cap);
    if (!model) return std::nullopt;
    return model->order();
}

/// Prepared membership oracle. Construction does the expensive work (coset
/// enumeration, relator tables) once; member() is const.
class NormalClosure {
public:
    NormalClosure() = default;

    explicit NormalClosure(NormalClosureSpec spec, const Limits& limits = {}) : spec_(std::move(spec)), limits_(limits)
    {
        spec_.validate();
        for (const Word& g : spec_.generators) {
            Word c = cyclic_reduce(g);
            if (!c.empty()) relators_.push_back(std::move(c));
        }
        const auto kind = spec_.strategy.kind;
        if (kind == Strategy::Kind::Racg || kind == Strategy::Kind::Auto) {
            auto commute = racg_commutation(spec_);
            if (commute) {
                commute_ = std::move(*commute);
                resolved_ = Strategy::Kind::Racg;
                return;
            }
            if (kind == Strategy::Kind::Racg)
                throw PreconditionError("racg strategy needs every generator of the form xyxy with x != y");
        }
        if (kind == Strategy::Kind::FiniteModel || kind == Strategy::Kind::Auto) {
            auto model = enumerate_cosets(spec_.alphabet_size, relators_, limits_.coset_cap);
            if (model) {
                model_ = std::make_shared<const FiniteModel>(std::move(*model));
                resolved_ = Strategy::Kind::FiniteModel;
                return;
            }
            if (kind == Strategy::Kind::FiniteModel) {
                resolved_ = Strategy::Kind::FiniteModel;
                return;  // model_ stays empty: every non-trivial query is Unknown
            }
        }
        resolved_ = Strategy::Kind::BoundedBfs;
        prepare_bfs();
    }

    const NormalClosureSpec& spec() const { return spec_; }

    /// The strategy actually in use after Auto was resolved.
    Strategy::Kind resolved_strategy() const { return resolved_; }

    /// True when every answer is Yes or No.
    bool exact() const
    {
        return resolved_ == Strategy::Kind::Racg || (resolved_ == Strategy::Kind::FiniteModel && model_);
    }

    Membership member(const Word& w) const
    {
        for (Letter x : w.letters)
            if (x >= spec_.alphabet_size)
                throw ValidationError("letter " + std::to_string(x) + " outside alphabet of size "
                                      + std::to_string(spec_.alphabet_size));
        Word r = reduce(w);
        if (r.empty()) return Membership::Yes;
        switch (resolved_) {
        case Strategy::Kind::Racg:
            return racg_normal_form(r, commute_).empty() ? Membership::Yes : Membership::No;
        case Strategy::Kind::FiniteModel:
            if (!model_) return parity_excludes(r) ? Membership::No : Membership::Unknown;
            return model_->is_identity(r) ? Membership::Yes : Membership::No;
        default:
            return bfs_member(r);
        }
    }

    std::optional<std::size_t> quotient_order() const
    {
        if (model_) return model_->order();
        return std::nullopt;
    }

private:
    void prepare_bfs()
    {
        std::set<Word> seen;
        for (const Word& r : relators_) {
            for (const Word& base : {r, Word(std::vector<Letter>(r.letters.rbegin(), r.letters.rend()))}) {
                for (std::size_t k = 0; k < base.size(); ++k) {
                    Word rot(std::vector<Letter>(base.letters.begin() + static_cast<std::ptrdiff_t>(k), base.letters.end()));
                    rot.letters.insert(rot.letters.end(), base.letters.begin(),
                                       base.letters.begin() + static_cast<std::ptrdiff_t>(k));
                    if (seen.insert(rot).second) insertions_.push_back(rot);
                }
            }
        }
    }

    // w is outside A when its abelianised image is outside the span of the
    // generators' images over GF(2).
    bool parity_excludes(const Word& w) const
    {
        const std::size_t n = spec_.alphabet_size;
        std::vector<std::vector<char>> basis;
        std::vector<std::size_t> pivots;
        auto eliminate = [&](std::vector<char> v) {
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (v[pivots[b]])
                    for (std::size_t x = 0; x < n; ++x) v[x] ^= basis[b][x];
            return v;
        };
        for (const Word& r : relators_) {
            auto v = eliminate(letter_parity(r, n));
            for (std::size_t x = 0; x < n; ++x) {
                if (v[x]) {
                    basis.push_back(v);
                    pivots.push_back(x);
                    break;
                }
            }
        }
        auto v = eliminate(letter_parity(w, n));
        for (char bit : v)
            if (bit) return true;
        return false;
    }

    Membership bfs_member(const Word& w) const
    {
        if (parity_excludes(w)) return Membership::No;
        std::set<Word> seen{w};
        std::deque<std::pair<Word, std::size_t>> queue{{w, 0}};
        while (!queue.empty()) {
            auto [s, depth] = queue.front();
            queue.pop_front();
            if (depth >= spec_.strategy.depth) continue;
            for (std::size_t p = 0; p <= s.size(); ++p) {
                for (const Word& u : insertions_) {
                    Word t(std::vector<Letter>(s.letters.begin(), s.letters.begin() + static_cast<std::ptrdiff_t>(p)));
                    t.letters.insert(t.letters.end(), u.letters.begin(), u.letters.end());
                    t.letters.insert(t.letters.end(), s.letters.begin() + static_cast<std::ptrdiff_t>(p), s.letters.end());
                    t = reduce(t);
                    if (t.empty()) return Membership::Yes;
                    if (t.size() > spec_.strategy.max_len) continue;
                    if (seen.size() >= limits_.bfs_state_cap) return Membership::Unknown;
                    if (seen.insert(t).second) queue.emplace_back(std::move(t), depth + 1);
                }
            }
        }
        return Membership::Unknown;
    }

    NormalClosureSpec spec_;
    Limits limits_;
    std::vector<Word> relators_;
    Strategy::Kind resolved_ = Strategy::Kind::Racg;
    std::vector<std::vector<char>> commute_;
    std::shared_ptr<const FiniteModel> model_;
    std::vector<Word> insertions_;
};

inline Membership member(const Word& w, const NormalClosureSpec& spec, const Limits& limits = {})
{
    return NormalClosure(spec, limits).member(w);
}

} // namespace graphcat

#endif
