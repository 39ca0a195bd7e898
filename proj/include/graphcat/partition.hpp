#ifndef GRAPHCAT_PARTITION_HPP
#define GRAPHCAT_PARTITION_HPP

#include "graphcat/error.hpp"
#include "graphcat/graph.hpp"
#include "graphcat/limits.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace graphcat {

/// Partition of k upper points followed by l lower points. Point p < k is the
/// p-th upper point, point k + q the q-th lower point. Block ids follow first
/// occurrence; blocks without points (empty blocks) take the trailing ids.
class SetPartition {
public:
    SetPartition() = default;

    /// `block_of` assigns a block id to each of the k + l points; ids are
    /// renumbered by first occurrence. `num_blocks` may exceed the number of
    /// used ids to carry empty blocks.
    SetPartition(std::size_t k, std::size_t l, const std::vector<std::size_t>& block_of, std::size_t num_blocks = 0)
        : k_(k), l_(l)
    {
        if (block_of.size() != k + l) throw ValidationError("block assignment size differs from k + l");
        std::vector<std::size_t> remap;
        block_of_.reserve(block_of.size());
        std::size_t next = 0;
        for (std::size_t id : block_of) {
            if (id >= remap.size()) remap.resize(id + 1, SIZE_MAX);
            if (remap[id] == SIZE_MAX) remap[id] = next++;
            block_of_.push_back(remap[id]);
        }
        num_blocks_ = std::max(next, num_blocks);
    }

    /// From explicit blocks of point indices (upper 0..k-1, lower k..k+l-1);
    /// empty blocks are kept.
    static SetPartition from_blocks(std::size_t k, std::size_t l, const std::vector<std::vector<std::size_t>>& blocks)
    {
        std::vector<std::size_t> block_of(k + l, SIZE_MAX);
        std::size_t empty = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) ++empty;
            for (std::size_t p : blocks[b]) {
                if (p >= k + l) throw ValidationError("partition block references point " + std::to_string(p));
                if (block_of[p] != SIZE_MAX) throw ValidationError("point " + std::to_string(p) + " is in two blocks");
                block_of[p] = b;
            }
        }
        for (std::size_t id : block_of)
            if (id == SIZE_MAX) throw ValidationError("partition leaves a point without a block");
        SetPartition out(k, l, block_of);
        out.num_blocks_ += empty;
        return out;
    }

    std::size_t upper() const { return k_; }
    std::size_t lower() const { return l_; }
    std::size_t num_points() const { return block_of_.size(); }
    std::size_t num_blocks() const { return num_blocks_; }
    std::size_t block_of(std::size_t point) const { return block_of_[point]; }
    const std::vector<std::size_t>& assignment() const { return block_of_; }

    std::vector<std::vector<std::size_t>> blocks() const
    {
        std::vector<std::vector<std::size_t>> out(num_blocks_);
        for (std::size_t p = 0; p < block_of_.size(); ++p) out[block_of_[p]].push_back(p);
        return out;
    }

    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition&) const = default;

private:
    std::size_t k_ = 0;
    std::size_t l_ = 0;
    std::vector<std::size_t> block_of_;
    std::size_t num_blocks_ = 0;
};

/// ker(a, b): points share a block iff their symbols are equal.
template <class Symbol>
SetPartition ker(std::span<const Symbol> upper, std::span<const Symbol> lower)
{
    std::vector<Symbol> seen;
    std::vector<std::size_t> block_of;
    auto id_of = [&](const Symbol& s) {
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == s) return i;
        seen.push_back(s);
        return seen.size() - 1;
    };
    for (const auto& s : upper) block_of.push_back(id_of(s));
    for (const auto& s : lower) block_of.push_back(id_of(s));
    return SetPartition(upper.size(), lower.size(), block_of);
}

inline SetPartition ker(const std::vector<Vertex>& upper, const std::vector<Vertex>& lower)
{
    return ker<Vertex>(std::span<const Vertex>(upper), std::span<const Vertex>(lower));
}

inline SetPartition ker(std::string_view upper, std::string_view lower)
{
    return ker<char>(std::span<const char>(upper.data(), upper.size()),
                     std::span<const char>(lower.data(), lower.size()));
}

/// Visits every restricted growth string of length m in lexicographic order.
template <class Fn>
void for_each_restricted_growth(std::size_t m, Fn&& fn)
{
    std::vector<std::size_t> rgs(m, 0);
    if (m == 0) {
        fn(static_cast<const std::vector<std::size_t>&>(rgs));
        return;
    }
    std::vector<std::size_t> prefix_max(m, 0);
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(rgs));
        // Rightmost position that can still grow; position 0 is always 0.
        std::size_t i = m - 1;
        while (i >= 1 && rgs[i] > prefix_max[i - 1]) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < m; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
}

/// All Bell(m) one-line partitions of m points (k = 0, l = m).
inline std::vector<SetPartition> enumerate_partitions(std::size_t m, const Limits& limits = {})
{
    detail::require_capacity(m, limits.partition_points, "partition point count");
    std::vector<SetPartition> out;
    for_each_restricted_growth(m, [&](const std::vector<std::size_t>& rgs) { out.emplace_back(0, m, rgs); });
    return out;
}

/// All partitions of a k + l point set, as two-row partitions.
inline std::vector<SetPartition> enumerate_partitions(std::size_t k, std::size_t l, const Limits& limits = {})
{
    detail::require_capacity(k + l, limits.partition_points, "partition point count");
    std::vector<SetPartition> out;
    for_each_restricted_growth(k + l, [&](const std::vector<std::size_t>& rgs) { out.emplace_back(k, l, rgs); });
    return out;
}

/// Partitions of the vertex set 0..n-1, in restricted-growth order.
inline std::vector<VertexPartition> enumerate_vertex_partitions(std::size_t n, const Limits& limits = {})
{
    detail::require_capacity(n, limits.partition_points, "partition point count");
    std::vector<VertexPartition> out;
    for_each_restricted_growth(n, [&](const std::vector<std::size_t>& rgs) {
        out.push_back(VertexPartition::from_assignment(rgs));
    });
    return out;
}

} // namespace graphcat

#endif
