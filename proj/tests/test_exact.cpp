#include <doctest.h>

#include <algorithm>
#include <random>

#include "zigzag/exact.hpp"
#include "zigzag/polyfam.hpp"
#include "zigzag/serialize.hpp"

using namespace zigzag;

namespace {

std::mt19937 rng(20240815);

Rat random_rat() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rat(num(rng), den(rng));
}

Poly random_poly(int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rat> c;
  for (int i = 0; i <= d; ++i) c.push_back(random_rat());
  return Poly(std::move(c));
}

Poly random_nonzero_poly(int max_degree) {
  for (;;) {
    Poly p = random_poly(max_degree);
    if (!p.is_zero()) return p;
  }
}

RatFn random_ratfn(int max_degree) {
  return RatFn(random_poly(max_degree), random_nonzero_poly(max_degree));
}

}  // namespace

TEST_CASE("poly_add") {
  CHECK(Poly{1, -1} + Poly{0, 1} == Poly(1));
  Poly p = random_poly(6);
  CHECK(Poly() + p == p);
  CHECK(Poly{1, -1, -1} + Poly{1, -2, -1, 1} == Poly{2, -3, -2, 1});
}

TEST_CASE("poly_mul") {
  CHECK(Poly{1, -1} * Poly{1, 1} == Poly{1, 0, -1});
  CHECK(random_poly(6) * Poly() == Poly());
  // Product of the printed factors of the M_2 denominator.
  Poly den = poly_pow(Poly{1, -1}, 3) * poly_pow(Poly{1, -1, -1}, 2) *
             Poly{1, -2, -1, 1};
  CHECK(den.degree() == 10);
  CHECK(den == poly_pow(polyfam::p_poly(1), 3) *
                   poly_pow(polyfam::p_poly(2), 2) * polyfam::p_poly(3));
}

TEST_CASE("poly_reflect") {
  CHECK(poly_reflect(Poly{1, -1}) == Poly{1, 1});
  Poly p = random_poly(8);
  CHECK(poly_reflect(poly_reflect(p)) == p);
  CHECK(poly_reflect(p).degree() == p.degree());
  CHECK(poly_reflect(polyfam::p_poly(2)) == Poly{1, 1, -1});
}

TEST_CASE("poly_derivative") {
  CHECK(poly_derivative(Poly{1, -1, -1}) == Poly{-1, -2});
  CHECK(poly_derivative(Poly(7)) == Poly());
  CHECK(poly_derivative(Poly::monomial(1, 3)) == Poly{0, 0, 3});
}

TEST_CASE("ratfn_make normalization") {
  CHECK(RatFn(Poly{1, 0, -1}, Poly{1, -1}) == RatFn(Poly{1, 1}));
  CHECK(RatFn(Poly(), random_nonzero_poly(5)) == RatFn(0));
  // F(1,x) = P_1(-x)/P_2(x) = (1+x)/(1-x-x^2)
  RatFn f(poly_reflect(polyfam::p_poly(1)), polyfam::p_poly(2));
  CHECK(f.num() == Poly{1, 1});
  CHECK(f.den() == Poly{1, -1, -1});
  CHECK_THROWS_AS(RatFn(Poly(1), Poly()), zero_denominator_error);
}

TEST_CASE("ratfn arithmetic") {
  RatFn geom(Poly(1), Poly{1, -1});
  CHECK((geom - geom).is_zero());
  CHECK(geom * geom == RatFn(Poly(1), poly_pow(Poly{1, -1}, 2)));
  // F(1,x) = 1/(-x + F(0,-x)) with F(0,x) = 1/(1-x).
  RatFn f0_reflected(Poly(1), Poly{1, 1});
  RatFn f1 = RatFn(1) / (RatFn(Poly::monomial(-1, 1)) + f0_reflected);
  CHECK(f1 == RatFn(Poly{1, 1}, Poly{1, -1, -1}));
  CHECK_THROWS_AS(geom / RatFn(0), zero_denominator_error);
}

TEST_CASE("ratfn_nth_derivative") {
  RatFn f = random_ratfn(4);
  CHECK(ratfn_nth_derivative(f, 0) == f);
  RatFn g(Poly{0, 1}, poly_pow(Poly{1, -1}, 2));
  CHECK(ratfn_derivative(g) == RatFn(Poly{1, 1}, poly_pow(Poly{1, -1}, 3)));
  RatFn xf0(Poly{0, 1}, Poly{1, -1});
  CHECK(ratfn_derivative(xf0) == RatFn(Poly(1), poly_pow(Poly{1, -1}, 2)));
}

TEST_CASE("ratfn_series") {
  RatFn geom(Poly(1), Poly{1, -1});
  CHECK(ratfn_series(geom, 4) == std::vector<Rat>{1, 1, 1, 1});
  RatFn f1(Poly{1, 1}, Poly{1, -1, -1});
  CHECK(ratfn_series(f1, 6) == std::vector<Rat>{1, 2, 3, 5, 8, 13});
  RatFn f4(poly_reflect(polyfam::p_poly(4)), polyfam::p_poly(5));
  CHECK(ratfn_series(f4, 6) == std::vector<Rat>{1, 5, 15, 55, 190, 671});
  CHECK_THROWS_AS(ratfn_series(RatFn(Poly(1), Poly::x()), 3),
                  zero_denominator_error);
}

TEST_CASE("ratfn degree") {
  CHECK(RatFn(Poly(1), Poly{1, -1}).degree() == -1);
  CHECK(RatFn(Poly{1, 1}, Poly{1, -1, -1}).degree() == -1);
  CHECK(RatFn(0).degree() == kNegInfDegree);
}

TEST_CASE("field axiom spot-checks") {
  for (int trial = 0; trial < 30; ++trial) {
    RatFn a = random_ratfn(3), b = random_ratfn(3), c = random_ratfn(3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("gcd cancellation property") {
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(4), q = random_nonzero_poly(4);
    CHECK(RatFn(p * q, q) == RatFn(p));
  }
}

TEST_CASE("series satisfies denominator recurrence") {
  for (int trial = 0; trial < 20; ++trial) {
    RatFn f = random_ratfn(4);
    if (f.den().coeff(0) == 0) continue;
    const int N = 20;
    auto s = ratfn_series(f, N);
    // max() guards the zero function, whose degree is kNegInfDegree.
    for (int k = std::max(0, f.num().degree() + 1); k < N; ++k) {
      Rat acc = 0;
      for (int j = 0; j <= f.den().degree() && j <= k; ++j)
        acc += f.den().coeff(j) * s[size_t(k - j)];
      CHECK(acc == (k <= f.num().degree() ? f.num().coeff(k) : Rat(0)));
    }
  }
}

TEST_CASE("derivative composition") {
  RatFn f = random_ratfn(3);
  CHECK(ratfn_nth_derivative(ratfn_nth_derivative(f, 2), 1) ==
        ratfn_nth_derivative(f, 3));
}

TEST_CASE("serialization round-trip") {
  CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_from_string("-3/7") == Rat(-3, 7));
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = random_poly(6);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    RatFn f = random_ratfn(4);
    RatFn back = ratfn_from_json(ratfn_to_json(f));
    CHECK(back == f);
  }
}
