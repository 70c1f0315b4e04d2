#pragma once

// Transparently exhaustive brute-force counters for the combinatorial models
// behind T(n,m). These are the ground truth every fast computation is checked
// against, so they deliberately avoid transfer matrices and memoized DP.

#include <stdexcept>

#include "zigzag/exact.hpp"

namespace zigzag::oracles {

// Raised when the raw search space (m+1)^n exceeds the enumeration budget.
class budget_error : public std::runtime_error {
 public:
  budget_error() : std::runtime_error("oracle search space exceeds budget") {}
};

inline constexpr double kSearchBudget = 1e8;

// Weighted graphs of the path L_n: assignments (m_1..m_n) in [0,m]^n with
// m_i + m_{i+1} <= m. n = 0 counts the single empty assignment.
Int count_weighted_path(int n, int m);

// Integer points of the dilated graph polytope m*P(L_n): a direct filter
// over the box [0,m]^n, kept as a separate code path from
// count_weighted_path.
Int count_lattice_points(int n, int m);

// Magic labellings of the looped path with magic sum s: path-edge labels
// (m_1..m_n) in [0,s]^n; loop labels are forced as l_i = s - m_{i-1} - m_i
// (with m_0 = m_{n+1} = 0) and must be nonnegative. n >= 1.
Int count_magic_labellings(int n, int s);

// Weighted k-cycles: (m_1..m_k) in [0,m]^k with m_i + m_{i+1} <= m
// cyclically. k >= 3.
Int count_weighted_cycle(int k, int m);

}  // namespace zigzag::oracles
