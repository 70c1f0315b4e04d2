#include "zigzag/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zigzag/kekule.hpp"
#include "zigzag/polyfam.hpp"

namespace zigzag::spectral {

namespace {

using std::numbers::pi;

double parity_sign(int n) { return (n % 2 == 0) ? -1.0 : 1.0; }  // (-1)^{n+1}

}  // namespace

EigenData eigenvalues(int n) {
  if (n < 1) throw std::invalid_argument("eigenvalues: n >= 1");
  EigenData d;
  d.order = n;
  for (int j = 1; j <= n; ++j) {
    double theta = (2 * j - 1) * pi / (2 * n + 1);
    d.angles.push_back(theta);
    d.eigenvalues.push_back(parity_sign(n) / (2 * std::cos(theta)));
  }
  return d;
}

double spectral_radius(int n) {
  if (n < 1) throw std::invalid_argument("spectral_radius: n >= 1");
  return 1.0 / (2 * std::sin(pi / (2 * (2 * n + 1))));
}

std::vector<double> eigenvector(int n, int j) {
  if (n < 2) throw std::invalid_argument("eigenvector: n >= 2");
  if (j < 1 || j > n) throw std::out_of_range("eigenvector: j out of range");
  double theta = (2 * j - 1) * pi / (2 * n + 1);
  std::vector<double> eta(size_t(n), 0.0);
  eta[0] = std::cos((2 * n - 3) / 2.0 * theta) / (2 * std::cos(theta));
  for (int k = 2; k <= n; ++k)
    eta[size_t(k - 1)] =
        ((k % 2 == 1) ? 1.0 : -1.0) * std::cos((2 * n - 4 * k + 3) / 2.0 * theta);
  double scale = 2.0 / std::sqrt(2.0 * n + 1);
  for (auto& v : eta) v *= scale;
  return eta;
}

PartialFraction partial_fractions(int n) {
  if (n < 1) throw std::invalid_argument("partial_fractions: n >= 1");
  PartialFraction pf;
  for (int j = 1; j <= n; ++j) {
    double theta = (2 * j - 1) * pi / (2 * n + 1);
    double c = std::cos(theta), t = std::tan(theta);
    pf.rates.push_back(parity_sign(n) / (2 * c));
    pf.weights.push_back(parity_sign(n) * 2 * c * t * t / (2 * n + 1));
  }
  return pf;
}

double asymp_weighted_path(int n, int N) {
  if (n < 1) throw std::invalid_argument("asymp_weighted_path: n >= 1");
  double a = pi / (2 * (2 * n + 1));
  double csc = 1.0 / std::sin(a);
  double cot = std::cos(a) / std::sin(a);
  return std::pow(csc / 2, N - 2) * cot * cot / (2 * n + 1);
}

double asymp_diagonal(int n) {
  if (n < 1) throw std::invalid_argument("asymp_diagonal: n >= 1");
  return std::pow(2.0, n + 1) * std::pow(double(n), n - 1) *
         std::sqrt(std::numbers::e) / std::pow(pi, n);
}

double m_column_growth(int m, int nmax) {
  if (nmax < m + 10)
    throw std::invalid_argument("m_column_growth: nmax too small");
  Rat ratio(kekule::m_entry(nmax, m), kekule::m_entry(nmax - 1, m));
  return ratio.convert_to<double>();
}

double m_growth_candidate_u(int m) {
  double x = std::cos(pi / (2 * m + 3));
  double um2 = 1, um1 = 2 * x;
  if (m == 0) return um2;
  if (m == 1) return um1;
  double u = 0;
  for (int k = 2; k <= m; ++k) {
    u = 2 * x * um1 - um2;
    um2 = um1;
    um1 = u;
  }
  return u;
}

double m_growth_candidate_csc(int m) {
  return 1.0 / (2 * std::sin(pi / (2 * (2 * m + 1))));
}

}  // namespace zigzag::spectral
