#ifndef GRAPHCAT_TENSOR_HPP
#define GRAPHCAT_TENSOR_HPP

#include "graphcat/error.hpp"
#include "graphcat/limits.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace graphcat {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CapacityError("integer overflow in tensor addition (use --bigint)");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw CapacityError("integer overflow in tensor subtraction (use --bigint)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("integer overflow in tensor product (use --bigint)");
    return r;
}

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }

/// n^e, or CapacityError once it passes `bound`.
inline std::size_t bounded_power(std::size_t n, std::size_t e, std::size_t bound, const char* what)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (n != 0 && r > bound / n) throw CapacityError(std::string(what) + " exceeds the configured bound");
        r *= n;
    }
    if (r > bound) throw CapacityError(std::string(what) + " exceeds the configured bound");
    return r;
}

} // namespace detail

/// Base-n row-major position of a tuple.
inline std::size_t multi_index(const std::vector<std::size_t>& tuple, std::size_t n)
{
    std::size_t idx = 0;
    for (std::size_t x : tuple) idx = idx * n + x;
    return idx;
}

inline std::vector<std::size_t> multi_index_tuple(std::size_t idx, std::size_t n, std::size_t len)
{
    std::vector<std::size_t> t(len, 0);
    for (std::size_t p = len; p-- > 0;) {
        t[p] = idx % n;
        idx /= n;
    }
    return t;
}

inline std::string tuple_to_string(const std::vector<std::size_t>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

/// A linear map (C^n)^{(x)k} -> (C^n)^{(x)l} stored densely as an n^l x n^k
/// integer matrix. Row = output multi-index j, column = input multi-index i.
template <class Scalar>
class BasicTensor {
public:
    using value_type = Scalar;

    BasicTensor() : BasicTensor(1, 0, 0) {}

    BasicTensor(std::size_t n, std::size_t k, std::size_t l, const Limits& limits = {}) : n_(n), k_(k), l_(l)
    {
        rows_ = detail::bounded_power(n, l, limits.tuple_count, "tensor row count");
        cols_ = detail::bounded_power(n, k, limits.tuple_count, "tensor column count");
        if (rows_ != 0 && cols_ > limits.tuple_count / rows_) throw CapacityError("tensor size exceeds the configured bound");
        entries_.assign(rows_ * cols_, Scalar(0));
    }

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t l() const { return l_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }

    const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    Scalar& at(std::size_t row, std::size_t col) { return entries_[row * cols_ + col]; }

    /// Entry for output tuple j and input tuple i.
    const Scalar& entry(const std::vector<std::size_t>& j, const std::vector<std::size_t>& i) const
    {
        return at(multi_index(j, n_), multi_index(i, n_));
    }

    void increment(std::size_t row, std::size_t col, const Scalar& by = Scalar(1))
    {
        Scalar& e = at(row, col);
        e = detail::checked_add(e, by);
    }

    const std::vector<Scalar>& entries() const { return entries_; }
    std::vector<Scalar>& entries() { return entries_; }

    bool is_zero() const
    {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    bool same_shape(const BasicTensor& o) const { return n_ == o.n_ && k_ == o.k_ && l_ == o.l_; }

    bool operator==(const BasicTensor& o) const { return same_shape(o) && entries_ == o.entries_; }

    BasicTensor& operator+=(const BasicTensor& o)
    {
        require_same_shape(o, "add");
        for (std::size_t x = 0; x < entries_.size(); ++x) entries_[x] = detail::checked_add(entries_[x], o.entries_[x]);
        return *this;
    }

    BasicTensor& operator-=(const BasicTensor& o)
    {
        require_same_shape(o, "subtract");
        for (std::size_t x = 0; x < entries_.size(); ++x) entries_[x] = detail::checked_sub(entries_[x], o.entries_[x]);
        return *this;
    }

    BasicTensor& operator*=(const Scalar& c)
    {
        for (auto& e : entries_) e = detail::checked_mul(e, c);
        return *this;
    }

    friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
    friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
    friend BasicTensor operator*(BasicTensor a, const Scalar& c) { return a *= c; }

    void require_same_shape(const BasicTensor& o, const char* op) const
    {
        if (!same_shape(o))
            throw ShapeError(std::string("cannot ") + op + " tensors of shape " + shape_string() + " and "
                             + o.shape_string());
    }

    std::string shape_string() const
    {
        return "n=" + std::to_string(n_) + " k=" + std::to_string(k_) + " l=" + std::to_string(l_);
    }

private:
    std::size_t n_ = 1, k_ = 0, l_ = 0;
    std::size_t rows_ = 1, cols_ = 1;
    std::vector<Scalar> entries_;
};

using IntTensor = BasicTensor<std::int64_t>;
using BigTensor = BasicTensor<BigInt>;

inline BigTensor to_big(const IntTensor& t)
{
    BigTensor out(t.n(), t.k(), t.l(), Limits{.tuple_count = t.size() + 1});
    for (std::size_t x = 0; x < t.size(); ++x) out.entries()[x] = t.entries()[x];
    return out;
}

/// Kronecker product: legs of A first, then legs of B, on both sides.
template <class S>
BasicTensor<S> tensor_product(const BasicTensor<S>& a, const BasicTensor<S>& b, const Limits& limits = {})
{
    if (a.n() != b.n())
        throw ShapeError("tensor product needs equal base dimension, got " + std::to_string(a.n()) + " and "
                         + std::to_string(b.n()));
    BasicTensor<S> out(a.n(), a.k() + b.k(), a.l() + b.l(), limits);
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const S& x = a.at(ra, ca);
            if (x == 0) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    out.at(ra * b.rows() + rb, ca * b.cols() + cb) = detail::checked_mul(x, b.at(rb, cb));
        }
    return out;
}

/// outer . inner (apply inner first): the matrix product.
template <class S>
BasicTensor<S> compose(const BasicTensor<S>& outer, const BasicTensor<S>& inner, const Limits& limits = {})
{
    if (outer.n() != inner.n() || outer.k() != inner.l())
        throw ShapeError("cannot compose " + outer.shape_string() + " after " + inner.shape_string());
    BasicTensor<S> out(outer.n(), inner.k(), outer.l(), limits);
    for (std::size_t r = 0; r < outer.rows(); ++r)
        for (std::size_t m = 0; m < outer.cols(); ++m) {
            const S& x = outer.at(r, m);
            if (x == 0) continue;
            for (std::size_t c = 0; c < inner.cols(); ++c) {
                const S& y = inner.at(m, c);
                if (y == 0) continue;
                out.at(r, c) = detail::checked_add(out.at(r, c), detail::checked_mul(x, y));
            }
        }
    return out;
}

/// Transpose; entries are real so this is the adjoint.
template <class S>
BasicTensor<S> adjoint(const BasicTensor<S>& t, const Limits& limits = {})
{
    BasicTensor<S> out(t.n(), t.l(), t.k(), limits);
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c) out.at(c, r) = t.at(r, c);
    return out;
}

template <class S>
struct EntryDifference {
    std::vector<std::size_t> output;  // j
    std::vector<std::size_t> input;   // i
    S lhs;
    S rhs;

    std::string to_string() const
    {
        std::ostringstream os;
        os << "entry j=" << tuple_to_string(output) << " i=" << tuple_to_string(input) << ": " << lhs
           << " != " << rhs;
        return os.str();
    }
};

/// First differing entry in row-major order, or nullopt when equal. Shape
/// mismatch throws.
template <class S>
std::optional<EntryDifference<S>> first_difference(const BasicTensor<S>& a, const BasicTensor<S>& b)
{
    a.require_same_shape(b, "compare");
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c))
                return EntryDifference<S>{multi_index_tuple(r, a.n(), a.l()), multi_index_tuple(c, a.n(), a.k()),
                                          a.at(r, c), b.at(r, c)};
    return std::nullopt;
}

/// Identity on one leg.
template <class S = std::int64_t>
BasicTensor<S> identity_tensor(std::size_t n, const Limits& limits = {})
{
    BasicTensor<S> t(n, 1, 1, limits);
    for (std::size_t x = 0; x < n; ++x) t.at(x, x) = 1;
    return t;
}

} // namespace graphcat

#endif
