#pragma once

// Floating-point realization of the closed forms for the spectrum of the
// unit-primitive matrix: eigenvalues, eigenvectors, partial fractions and
// asymptotics. Everything here is double precision and is checked against
// the exact modules by the test suites.

#include <vector>

#include "zigzag/exact.hpp"

namespace zigzag::spectral {

struct EigenData {
  int order = 0;
  std::vector<double> eigenvalues;  // lambda_{n,j}, j = 1..n
  std::vector<double> angles;       // theta_j = (2j-1) pi / (2n+1)
};

// lambda_{n,j} = (-1)^{n+1} / (2 cos theta_j). n >= 1.
EigenData eigenvalues(int n);

// 1 / (2 sin(pi / (2(2n+1)))). Equals max_j |lambda_{n,j}|.
double spectral_radius(int n);

// Unit eigenvector for lambda_{n,j} by the trigonometric closed form. n >= 2.
std::vector<double> eigenvector(int n, int j);

struct PartialFraction {
  std::vector<double> rates;    // x_{n,j}
  std::vector<double> weights;  // gamma_{n,j}
};

// Decomposition F(n-1,x) = sum_j gamma_{n,j} / (1 - x_{n,j} x). n >= 1.
PartialFraction partial_fractions(int n);

// Asymptotic value of WL_N(n-1):
// (csc(pi/(2(2n+1))))^{N-1} cot^2(pi/(2(2n+1))) / (2^{N-1} (2n+1)).
double asymp_weighted_path(int n, int N);

// Diagonal asymptotic T(n-1,n-1) ~ 2^{n+1} n^{n-1} sqrt(e) / pi^n.
double asymp_diagonal(int n);

// Empirical column growth M(nmax,m)/M(nmax-1,m) as a double (exact ratio,
// converted last). Compared against both candidate limits by the verifier.
double m_column_growth(int m, int nmax);

// The two candidate limits for the column growth of M.
double m_growth_candidate_u(int m);      // U_m(cos(pi/(2m+3)))
double m_growth_candidate_csc(int m);    // 1/(2 sin(pi/(2(2m+1))))

}  // namespace zigzag::spectral
