#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zigzag/kekule.hpp"
#include "zigzag/matrixcore.hpp"
#include "zigzag/polyfam.hpp"
#include "zigzag/spectral.hpp"

using namespace zigzag;
using namespace zigzag::spectral;

namespace {

double eval_double(const Poly& p, double x) {
  double acc = 0;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + p.coeff(i).convert_to<double>();
  return acc;
}

}  // namespace

TEST_CASE("eigenvalues are roots of the characteristic polynomial") {
  for (int n = 1; n <= 12; ++n) {
    EigenData e = eigenvalues(n);
    REQUIRE(e.order == n);
    REQUIRE(int(e.eigenvalues.size()) == n);
    Poly f = polyfam::char_poly_a(n);
    Poly fd = poly_derivative(f);
    for (double lam : e.eigenvalues) {
      // Newton-style residual, robust against the huge leading growth.
      double r = eval_double(f, lam) / eval_double(fd, lam);
      CHECK(std::abs(r) < 1e-9);
    }
  }
}

TEST_CASE("spectral_radius") {
  CHECK(spectral_radius(1) == doctest::Approx(1.0));
  for (int n = 1; n <= 12; ++n) {
    EigenData e = eigenvalues(n);
    double biggest = 0;
    for (double lam : e.eigenvalues) biggest = std::max(biggest, std::abs(lam));
    CHECK(spectral_radius(n) == doctest::Approx(biggest).epsilon(1e-12));
  }
}

TEST_CASE("eigenvectors") {
  for (int n = 2; n <= 10; ++n) {
    EigenData e = eigenvalues(n);
    matrixcore::IntMatrix a = matrixcore::unit_primitive(n);
    for (int j = 1; j <= n; ++j) {
      std::vector<double> v = eigenvector(n, j);
      REQUIRE(int(v.size()) == n);
      double norm2 = 0;
      for (double c : v) norm2 += c * c;
      CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-10));
      double lam = e.eigenvalues[size_t(j - 1)];
      for (int i = 1; i <= n; ++i) {
        double av = 0;
        for (int k = 1; k <= n; ++k)
          av += a.at(i, k).convert_to<double>() * v[size_t(k - 1)];
        CHECK(av == doctest::Approx(lam * v[size_t(i - 1)]).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("partial fractions reproduce the column") {
  for (int n = 1; n <= 6; ++n) {
    PartialFraction pf = partial_fractions(n);
    REQUIRE(pf.rates.size() == pf.weights.size());
    for (int k = 0; k <= 12; ++k) {
      double acc = 0;
      for (size_t j = 0; j < pf.rates.size(); ++j)
        acc += pf.weights[j] * std::pow(pf.rates[j], k);
      double exact = kekule::t_value(k, n - 1).convert_to<double>();
      CHECK(acc == doctest::Approx(exact).epsilon(1e-8));
    }
  }
}

TEST_CASE("asymp_weighted_path") {
  for (int n = 1; n <= 5; ++n) {
    const int N = 60;
    double exact = kekule::t_value(N - 1, n - 1).convert_to<double>();
    CHECK(asymp_weighted_path(n, N) == doctest::Approx(exact).epsilon(1e-8));
    CHECK(asymp_weighted_path(n, N + 1) / asymp_weighted_path(n, N) ==
          doctest::Approx(spectral_radius(n)).epsilon(1e-12));
  }
}

TEST_CASE("asymp_diagonal tracks the diagonal") {
  // Slowly converging: just demand the stated rough accuracy and improvement.
  double r20 = asymp_diagonal(20) /
               kekule::t_value(19, 19).convert_to<double>();
  CHECK(std::abs(r20 - 1) < 0.15);
  double r10 = asymp_diagonal(10) /
               kekule::t_value(9, 9).convert_to<double>();
  CHECK(std::abs(r20 - 1) < std::abs(r10 - 1));
}

TEST_CASE("m_column_growth") {
  CHECK(m_column_growth(0, 30) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(m_growth_candidate_u(0) == doctest::Approx(1.0));
  CHECK(m_growth_candidate_csc(0) == doctest::Approx(0.5));
  // m = 1: the growth approaches U_1(cos(pi/5)) = golden ratio.
  double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(m_growth_candidate_u(1) == doctest::Approx(phi).epsilon(1e-12));
  CHECK(m_column_growth(1, 40) == doctest::Approx(phi).epsilon(1e-6));
  CHECK_THROWS_AS(m_column_growth(3, 5), std::invalid_argument);
}
