#ifndef GRAPHCAT_EXACT_RANK_HPP
#define GRAPHCAT_EXACT_RANK_HPP

#include "graphcat/tensor.hpp"

#include <vector>

namespace graphcat {

using BigMatrix = std::vector<std::vector<BigInt>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline std::size_t exact_rank(BigMatrix m)
{
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t x = c + 1; x < cols; ++x)
                m[r][x] = (m[rank][c] * m[r][x] - m[r][c] * m[rank][x]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Rank of the flattened tensors viewed as row vectors.
template <class S>
std::size_t stacked_rank(const std::vector<BasicTensor<S>>& tensors)
{
    BigMatrix m;
    for (const auto& t : tensors) {
        std::vector<BigInt> row;
        row.reserve(t.size());
        for (const auto& e : t.entries()) row.emplace_back(e);
        m.push_back(std::move(row));
    }
    return exact_rank(std::move(m));
}

} // namespace graphcat

#endif
