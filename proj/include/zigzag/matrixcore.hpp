#pragma once

// Exact integer matrices for the unit-primitive family and its relatives:
// powers, bilinear forms, a generic characteristic-polynomial routine, and
// polynomial-entry adjugates of I - x*A_n.

#include <vector>

#include "zigzag/exact.hpp"

namespace zigzag::matrixcore {

class dimension_mismatch_error : public std::invalid_argument {
 public:
  dimension_mismatch_error()
      : std::invalid_argument("vector length does not match matrix order") {}
};

// Dense square matrix of arbitrary-precision integers, order >= 1.
class IntMatrix {
 public:
  explicit IntMatrix(int order) : order_(order), e_(size_t(order) * order) {
    if (order < 1) throw std::invalid_argument("IntMatrix: order must be >= 1");
  }
  static IntMatrix identity(int order);

  int order() const { return order_; }
  // 1-based, matching standard matrix index notation.
  Int& at(int i, int j) { return e_[size_t(i - 1) * order_ + size_t(j - 1)]; }
  const Int& at(int i, int j) const {
    return e_[size_t(i - 1) * order_ + size_t(j - 1)];
  }

  Int trace() const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.order_ == b.order_ && a.e_ == b.e_;
  }

 private:
  int order_;
  std::vector<Int> e_;
};

using IntVector = std::vector<Int>;

IntVector ones_vector(int length);
// 1-based unit vector e_i of the given length.
IntVector unit_vector(int length, int i);

// A_n: entry (i,j) = 1 iff i+j <= n+1 (1-based). n >= 1.
IntMatrix unit_primitive(int n);

enum class SpecialKind { X, Abar, J, T, Tprime };

// X: exchange (anti-identity); Abar = A_n - X; J: all ones;
// Tprime: 0/1 tridiagonal |i-j| = 1; T: Tprime plus 1 at (1,1). n >= 1.
IntMatrix special_matrices(int n, SpecialKind kind);

// M^k by binary exponentiation; M^0 = I.
IntMatrix mat_pow(IntMatrix m, unsigned k);

// alpha^T M^k beta by iterated matrix-vector products (M^k is never formed).
Int bilinear(const IntVector& alpha, const IntMatrix& m, unsigned k,
             const IntVector& beta);

// T-bar(n, m) = u_m^T A_m^n v_{m,1}. m >= 1.
Int tbar(int n, int m);

// Coefficients alpha^T M^k beta for k = 0..count-1.
std::vector<Int> bilinear_series(const IntVector& alpha, const IntMatrix& m,
                                 const IntVector& beta, int count);

// det(xI - M) by the Faddeev-LeVerrier iteration; exact, monic of degree
// order(M).
Poly char_poly_generic(const IntMatrix& m);

// The (i,j) entry of adj(I - x*A_n) as a polynomial (1-based indices), i.e.
// the signed (j,i)-minor, by fraction-free elimination over Poly entries.
Poly adjugate_entry(int n, int i, int j);

// Determinant of a square matrix of polynomials (row-major, order*order
// entries), fraction-free Bareiss with row pivoting.
Poly poly_matrix_det(const std::vector<Poly>& entries, int order);

// JSON array of arrays of decimal strings, for CLI debugging.
std::string matrix_to_json(const IntMatrix& m);

}  // namespace zigzag::matrixcore
