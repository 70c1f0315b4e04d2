#pragma once

// The central array T(n,m) (OEIS A050446) and everything built from it:
// row polynomials, row/column generating functions, continued fractions,
// the M array and the rational generating functions M_m(x).

#include <map>
#include <mutex>
#include <vector>

#include "zigzag/exact.hpp"

namespace zigzag::kekule {

// Memoized store of T(n,m) driven by the defining recursion
//   T(n,m) = T(n,m-1) + sum_{k=0}^{floor((n-1)/2)} T(2k,m-1) T(n-1-2k,m)
// with T(n,0) = T(0,m) = 1. Concurrent readers and fillers are safe; values
// are deterministic so fills are idempotent. Entries are never evicted.
class TTable {
 public:
  Int value(int n, int m);

 private:
  void fill_locked(int n, int m);
  std::mutex mutex_;
  std::map<std::pair<int, int>, Int> values_;
};

// Process-wide memoized T(n,m).
Int t_value(int n, int m);

// The unique degree-<=n polynomial through T(n, 0..n), by Newton forward
// differences. Postcondition (checked): it also matches T(n, n+1) and
// T(n, n+2).
Poly poly_of_row(int n);

// H_n(x), the numerator of the row generating function, from the finite
// alternating-binomial sum h_j = sum_k (-1)^k C(n+1,k) T(n, j-k). Checked to
// vanish beyond degree max(0, n-2).
Poly row_numerator(int n);

// T(n,x) = H_n(x)/(1-x)^{n+1}.
RatFn row_gf(int n);

// F(m,x) = P_m(-x)/P_{m+1}(x).
RatFn col_gf(int m);

// F(m,x) by the continued-fraction recurrence F(m,x) = 1/(-x + F(m-1,-x))
// from F(0,x) = 1/(1-x), in exact rational-function arithmetic.
RatFn col_gf_cf(int m);

// M_{i,j} = sum_{k=0}^{j} (-1)^k C(n+1,k) T(n, j-k) with n = i+j+2.
Int m_entry(int i, int j);

// M_m(x) = x^{-m-2} sum_{k=0}^{m} (-1)^k d^k(x F(m-k,x))/dx^k * x^{k-1}/k!,
// with the series head n <= m+1 (identically zero except at m = 0) removed
// before the division. The transient negative x powers must cancel; if they
// do not, an internal consistency error is thrown.
RatFn m_row_gf(int m);

// The structural (unreduced) denominator prod_{k=1}^{m+1} P_k(x)^{m+2-k}.
Poly m_row_gf_structural_den(int m);

// First `count` coefficients of CF(n,x) = floor((n+1)/2) x
// - x P'_{n+1}(x)/P_{n+1}(x). Coefficient 0 is 0 (the sum starts at k = 1).
std::vector<Int> cycle_gf_coeffs(int n, int count);

}  // namespace zigzag::kekule
