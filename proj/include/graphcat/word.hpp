#ifndef GRAPHCAT_WORD_HPP
#define GRAPHCAT_WORD_HPP

#include "graphcat/error.hpp"
#include "graphcat/graph.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace graphcat {

using Letter = std::size_t;

/// Element of the free product of copies of Z2 indexed by letters. Every
/// letter is an involution, so the inverse of a word is the word reversed.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> l) : letters(l) {}
    explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    /// "abab" style for alphabets up to 26 letters, "v0.v1" beyond.
    std::string to_string(std::size_t alphabet_size = 26) const
    {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (alphabet_size <= 26) {
                s.push_back(static_cast<char>('a' + letters[i]));
            } else {
                if (i) s.push_back('.');
                s += "v" + std::to_string(letters[i]);
            }
        }
        return s.empty() ? std::string("e") : s;
    }
};

/// Word from "abab" notation: 'a' is letter 0.
inline Word word_from_string(const std::string& s)
{
    Word w;
    for (char c : s) {
        if (c < 'a' || c > 'z') throw ValidationError(std::string("letter '") + c + "' is not in a..z");
        w.letters.push_back(static_cast<Letter>(c - 'a'));
    }
    return w;
}

/// Cancels adjacent equal letters until none remain. The rewriting system
/// xx -> e is confluent, so a single stack pass gives the unique reduced form.
inline Word reduce(const Word& w)
{
    Word out;
    out.letters.reserve(w.letters.size());
    for (Letter x : w.letters) {
        if (!out.letters.empty() && out.letters.back() == x)
            out.letters.pop_back();
        else
            out.letters.push_back(x);
    }
    return out;
}

inline bool is_reduced(const Word& w)
{
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        if (w.letters[i] == w.letters[i - 1]) return false;
    return true;
}

inline Word multiply(const Word& u, const Word& v)
{
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return reduce(w);
}

inline Word inverse(const Word& w)
{
    Word r(std::vector<Letter>(w.letters.rbegin(), w.letters.rend()));
    return reduce(r);
}

/// Relabels letters through a symbol map, then reduces.
inline Word apply_map(const VertexMap& phi, const Word& w)
{
    Word out;
    out.letters.reserve(w.letters.size());
    for (Letter x : w.letters) {
        if (x >= phi.size()) throw ValidationError("letter " + std::to_string(x) + " outside the map's domain");
        out.letters.push_back(phi(x));
    }
    return reduce(out);
}

inline Word conjugate(Letter x, const Word& w) { return multiply(multiply(Word{x}, w), Word{x}); }

/// Strips matching first/last letters of a reduced word; the result generates
/// the same normal closure.
inline Word cyclic_reduce(const Word& w)
{
    Word r = reduce(w);
    std::size_t lo = 0, hi = r.letters.size();
    while (hi - lo >= 2 && r.letters[lo] == r.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(std::vector<Letter>(r.letters.begin() + lo, r.letters.begin() + hi));
}

/// Least rotation of a cyclically reduced word or of its inverse: equal for
/// words that are conjugate up to rotation and inversion.
inline Word conjugacy_representative(const Word& w)
{
    Word c = cyclic_reduce(w);
    Word best = c;
    for (const Word& base : {c, Word(std::vector<Letter>(c.letters.rbegin(), c.letters.rend()))}) {
        for (std::size_t r = 0; r < base.letters.size(); ++r) {
            Word rot(std::vector<Letter>(base.letters.begin() + r, base.letters.end()));
            rot.letters.insert(rot.letters.end(), base.letters.begin(), base.letters.begin() + r);
            if (rot < best) best = rot;
        }
    }
    return best;
}

/// g_{a* b}: the input tuple read backwards followed by the output tuple.
inline Word label_word(const std::vector<Vertex>& inputs, const std::vector<Vertex>& outputs)
{
    Word w(std::vector<Letter>(inputs.rbegin(), inputs.rend()));
    w.letters.insert(w.letters.end(), outputs.begin(), outputs.end());
    return reduce(w);
}

/// g_{a b*}: the first tuple followed by the second read backwards.
inline Word label_word_ab_star(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    Word w(a);
    w.letters.insert(w.letters.end(), b.rbegin(), b.rend());
    return reduce(w);
}

/// Every letter's occurrence count mod 2 (the image in the abelianisation).
inline std::vector<char> letter_parity(const Word& w, std::size_t alphabet_size)
{
    std::vector<char> parity(alphabet_size, 0);
    for (Letter x : w.letters) parity[x] ^= 1;
    return parity;
}

} // namespace graphcat

#endif
