#include <doctest.h>

#include <string>

#include "zigzag/kekule.hpp"
#include "zigzag/matrixcore.hpp"
#include "zigzag/polyfam.hpp"

using namespace zigzag;
using namespace zigzag::matrixcore;

namespace {

IntMatrix from_rows(int order, std::initializer_list<int> rows) {
  IntMatrix m(order);
  auto it = rows.begin();
  for (int i = 1; i <= order; ++i)
    for (int j = 1; j <= order; ++j) m.at(i, j) = *it++;
  return m;
}

std::vector<Poly> id_minus_xa(int n) {
  IntMatrix a = unit_primitive(n);
  std::vector<Poly> e;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Poly p = Poly::monomial(-a.at(i, j), 1);
      if (i == j) p = p + Poly(1);
      e.push_back(p);
    }
  return e;
}

}  // namespace

TEST_CASE("unit_primitive entries") {
  CHECK(unit_primitive(1) == from_rows(1, {1}));
  CHECK(unit_primitive(3) == from_rows(3, {1, 1, 1, 1, 1, 0, 1, 0, 0}));
  IntMatrix a5 = unit_primitive(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(a5.at(i, j) == (i + j <= 6 ? 1 : 0));
  CHECK_THROWS_AS(unit_primitive(0), std::invalid_argument);
}

TEST_CASE("special_matrices") {
  CHECK(special_matrices(3, SpecialKind::X) ==
        from_rows(3, {0, 0, 1, 0, 1, 0, 1, 0, 0}));
  CHECK(special_matrices(3, SpecialKind::J) ==
        from_rows(3, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(special_matrices(3, SpecialKind::Tprime) ==
        from_rows(3, {0, 1, 0, 1, 0, 1, 0, 1, 0}));
  CHECK(special_matrices(3, SpecialKind::T) ==
        from_rows(3, {1, 1, 0, 1, 0, 1, 0, 1, 0}));
  for (int n = 1; n <= 8; ++n)
    CHECK(special_matrices(n, SpecialKind::Abar) + special_matrices(n, SpecialKind::X) ==
          unit_primitive(n));
}

TEST_CASE("matrix arithmetic and trace") {
  IntMatrix a = unit_primitive(3);
  CHECK(a.trace() == 2);
  CHECK(a - a + a == a);
  CHECK(a * IntMatrix::identity(3) == a);
  CHECK((a * a).trace() == 6);
  CHECK_THROWS_AS(a + unit_primitive(2), dimension_mismatch_error);
}

TEST_CASE("mat_pow") {
  IntMatrix a = unit_primitive(4);
  IntMatrix p = IntMatrix::identity(4);
  for (unsigned k = 0; k <= 9; ++k) {
    CHECK(mat_pow(a, k) == p);
    p = p * a;
  }
}

TEST_CASE("bilinear matches explicit powers") {
  IntMatrix a = unit_primitive(4);
  IntVector u = ones_vector(4), v = unit_vector(4, 1);
  for (unsigned k = 0; k <= 12; ++k) {
    IntMatrix p = mat_pow(a, k);
    Int expect = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) expect += u[size_t(i - 1)] * p.at(i, j) * v[size_t(j - 1)];
    CHECK(bilinear(u, a, k, v) == expect);
  }
  CHECK_THROWS_AS(bilinear(ones_vector(3), a, 2, v), dimension_mismatch_error);
}

TEST_CASE("bilinear_series example") {
  std::vector<Int> s = bilinear_series(ones_vector(3), unit_primitive(3),
                                       unit_vector(3, 3), 4);
  CHECK(s == std::vector<Int>{1, 1, 3, 6});
}

TEST_CASE("tbar against the recursion") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= 10; ++n)
      CHECK(tbar(n, m) == kekule::t_value(n, m - 1));
}

TEST_CASE("char_poly_generic") {
  CHECK(char_poly_generic(IntMatrix::identity(3)) == poly_pow(Poly{-1, 1}, 3));
  for (int n = 1; n <= 8; ++n) {
    CHECK(char_poly_generic(unit_primitive(n)) == polyfam::char_poly_a(n));
    CHECK(char_poly_generic(special_matrices(n, SpecialKind::T)) ==
          polyfam::char_poly_t(n));
    CHECK(char_poly_generic(special_matrices(n, SpecialKind::Tprime)) ==
          polyfam::char_poly_tprime(n));
  }
}

TEST_CASE("poly_matrix_det") {
  CHECK(poly_matrix_det({Poly{1, -1}}, 1) == Poly{1, -1});
  // Needs a pivot swap: zero polynomial in the corner.
  CHECK(poly_matrix_det({Poly(), Poly(1), Poly::x(), Poly()}, 2) ==
        Poly::monomial(-1, 1));
  for (int n = 1; n <= 6; ++n)
    CHECK(poly_matrix_det(id_minus_xa(n), n) == polyfam::p_poly(n));
}

TEST_CASE("adjugate identity") {
  for (int n = 2; n <= 5; ++n) {
    Poly det = polyfam::p_poly(n);
    std::vector<Poly> m = id_minus_xa(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        // (adj * (I - xA))_{ij}
        Poly acc;
        for (int k = 1; k <= n; ++k)
          acc = acc + adjugate_entry(n, i, k) * m[size_t(k - 1) * n + size_t(j - 1)];
        CHECK(acc == (i == j ? det : Poly()));
      }
  }
}

TEST_CASE("matrix_to_json") {
  CHECK(matrix_to_json(unit_primitive(2)) == "[[\"1\",\"1\"],[\"1\",\"0\"]]");
}
