#ifndef GRAPHCAT_LIMITS_HPP
#define GRAPHCAT_LIMITS_HPP

#include <cstddef>

namespace graphcat {

/// Desk-scale bounds. Every exhaustive routine checks the relevant field and
/// throws CapacityError instead of running away.
struct Limits {
    std::size_t canonical_vertices = 8;  // canonical forms enumerate all vertex orders
    std::size_t partition_points = 10;   // Bell(10) = 115975
    std::size_t tuple_count = 1u << 20;  // n^(k+l) for orbit and tensor index spaces
    std::size_t coset_cap = 200000;      // Todd-Coxeter coset definitions
    std::size_t bfs_depth = 6;
    std::size_t bfs_max_len = 24;
    std::size_t bfs_state_cap = 200000;
};

} // namespace graphcat

#endif
