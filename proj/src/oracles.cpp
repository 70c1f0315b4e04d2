#include "zigzag/oracles.hpp"

#include <cmath>
#include <vector>

namespace zigzag::oracles {

namespace {

void check_budget(int n, int m) {
  if (n > 0 && std::pow(double(m) + 1.0, double(n)) > kSearchBudget)
    throw budget_error();
}

// Nested enumeration with early pruning on the adjacency constraint only.
Int count_path_from(int remaining, int m, int prev) {
  if (remaining == 0) return 1;
  Int acc = 0;
  for (int w = 0; w + prev <= m; ++w)
    acc += count_path_from(remaining - 1, m, w);
  return acc;
}

}  // namespace

Int count_weighted_path(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("count_weighted_path");
  check_budget(n, m);
  return count_path_from(n, m, 0);
}

Int count_lattice_points(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("count_lattice_points");
  check_budget(n, m);
  if (n == 0) return 1;
  // Odometer over the full box, then the inequality filter.
  std::vector<int> x(size_t(n), 0);
  Int count = 0;
  while (true) {
    bool feasible = true;
    for (int i = 0; i + 1 < n; ++i)
      if (x[size_t(i)] + x[size_t(i) + 1] > m) {
        feasible = false;
        break;
      }
    if (feasible) ++count;
    int pos = 0;
    while (pos < n && ++x[size_t(pos)] > m) x[size_t(pos++)] = 0;
    if (pos == n) break;
  }
  return count;
}

namespace {

Int count_magic_from(int remaining, int s, int prev) {
  // prev is the previous edge label; the loop at the shared vertex is forced
  // to s - prev - current, pruned when negative.
  if (remaining == 0) return prev <= s ? Int(1) : Int(0);
  Int acc = 0;
  for (int w = 0; w + prev <= s; ++w)
    acc += count_magic_from(remaining - 1, s, w);
  return acc;
}

}  // namespace

Int count_magic_labellings(int n, int s) {
  if (n < 1) throw std::invalid_argument("count_magic_labellings: n >= 1");
  if (s < 0) throw std::invalid_argument("count_magic_labellings");
  check_budget(n, s);
  return count_magic_from(n, s, 0);
}

namespace {

Int count_cycle_from(int remaining, int m, int prev, int first) {
  if (remaining == 0) return prev + first <= m ? Int(1) : Int(0);
  Int acc = 0;
  for (int w = 0; w + prev <= m; ++w)
    acc += count_cycle_from(remaining - 1, m, w, first);
  return acc;
}

}  // namespace

Int count_weighted_cycle(int k, int m) {
  if (k < 3) throw std::invalid_argument("count_weighted_cycle: k >= 3");
  if (m < 0) throw std::invalid_argument("count_weighted_cycle");
  check_budget(k, m);
  Int acc = 0;
  for (int first = 0; first <= m; ++first)
    acc += count_cycle_from(k - 1, m, first, first);
  return acc;
}

}  // namespace zigzag::oracles
