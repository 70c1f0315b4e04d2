#pragma once

// Exact scalar, polynomial and rational-function arithmetic. Everything in
// this header is immutable value types and pure functions; all other modules
// compute on top of these.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace zigzag {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Degree of the zero polynomial. Ordered below every honest degree so that
// degree laws need no special-casing in callers.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

class zero_denominator_error : public std::domain_error {
 public:
  zero_denominator_error() : std::domain_error("denominator is zero") {}
};

// Dense univariate polynomial over Rat, coefficient i belongs to x^i.
// Invariant: the highest stored coefficient is nonzero; the zero polynomial
// stores nothing.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const Rat& constant) : c_{constant} { trim(); }  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rat(constant)) {}           // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rat& coeff, int power);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDegree : int(c_.size()) - 1; }
  // Coefficient of x^i; zero outside the stored range.
  Rat coeff(int i) const {
    return (i >= 0 && i < int(c_.size())) ? c_[size_t(i)] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// p(-x): negates every odd-index coefficient. An involution.
Poly poly_reflect(const Poly& p);
// Formal derivative.
Poly poly_derivative(const Poly& p);
Poly poly_pow(const Poly& p, unsigned k);
// Long division over Rat: a = q*b + r with deg r < deg b. b must be nonzero.
struct PolyDivMod {
  Poly quot;
  Poly rem;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b);
// Exact quotient; throws std::invalid_argument if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);
// Gcd over Q via the subresultant PRS on integer polynomials (denominators
// cleared first). The result is primitive with positive leading coefficient;
// gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Normalized quotient of two polynomials. Invariants: den != 0,
// gcd(num, den) = 1, and the lowest-degree nonzero coefficient of den is 1
// (so the familiar generating-function denominators, all with constant
// term 1, print verbatim). The zero function is 0/1.
class RatFn {
 public:
  RatFn() : num_(), den_(1) {}
  RatFn(Poly num, Poly den);
  RatFn(const Poly& p) : RatFn(p, Poly(1)) {}  // NOLINT(google-explicit-constructor)
  RatFn(int constant) : RatFn(Poly(constant)) {}  // NOLINT(google-explicit-constructor)

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // degree(num) - degree(den); kNegInfDegree for the zero function.
  int degree() const {
    return num_.is_zero() ? kNegInfDegree : num_.degree() - den_.degree();
  }

  // Exact evaluation; throws zero_denominator_error on a pole.
  Rat eval(const Rat& x) const;

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

// f(-x).
RatFn ratfn_reflect(const RatFn& f);
// Formal derivative by the quotient rule, normalized.
RatFn ratfn_derivative(const RatFn& f);
RatFn ratfn_nth_derivative(RatFn f, unsigned k);
// First `count` Taylor coefficients at 0 via the recurrence induced by the
// denominator. Throws zero_denominator_error if den(0) = 0.
std::vector<Rat> ratfn_series(const RatFn& f, int count);

}  // namespace zigzag
