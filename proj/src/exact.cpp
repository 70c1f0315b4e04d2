#include "zigzag/exact.hpp"

#include <algorithm>

namespace zigzag {

Poly Poly::monomial(const Rat& coeff, int power) {
  if (coeff == 0) return Poly();
  std::vector<Rat> c(size_t(power) + 1, Rat(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  Poly r = p;
  for (auto& v : r.c_) v *= s;
  return r;
}

Poly poly_reflect(const Poly& p) {
  std::vector<Rat> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(std::move(c));
}

Poly poly_derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<Rat> c(size_t(p.degree()), Rat(0));
  for (int i = 1; i <= p.degree(); ++i) c[size_t(i) - 1] = Rat(i) * p.coeff(i);
  return Poly(std::move(c));
}

Poly poly_pow(const Poly& p, unsigned k) {
  Poly acc(1), base = p;
  while (k) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return acc;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw zero_denominator_error();
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> quot(size_t(a.degree() - db) + 1, Rat(0));
  Rat lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rat q = rem[size_t(i)] / lead;
    if (q == 0) continue;
    quot[size_t(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[size_t(i - db + j)] -= q * b.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::invalid_argument("poly_divexact: not divisible");
  return q;
}

namespace {

using IntPoly = std::vector<Int>;  // low-to-high, trimmed

void ip_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int ip_content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

void ip_make_primitive(IntPoly& p) {
  Int g = ip_content(p);
  if (g == 0) return;
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
}

// Clears denominators; content is irrelevant to the gcd over Q.
IntPoly to_int_poly(const Poly& p) {
  Int lcm = 1;
  for (const auto& c : p.coeffs())
    lcm = boost::multiprecision::lcm(lcm, denominator(c));
  IntPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs())
    r.push_back(numerator(c) * (lcm / denominator(c)));
  return r;
}

// prem(a, b): remainder of lc(b)^(da-db+1) * a by b. The scaling power is
// fixed even when cancellation skips degrees, so later exact divisions in the
// subresultant sequence hold.
IntPoly ip_prem(IntPoly a, const IntPoly& b) {
  int db = int(b.size()) - 1;
  int scalings_left = int(a.size()) - db;  // da - db + 1
  Int lead = b.back();
  while (int(a.size()) - 1 >= db) {
    int shift = int(a.size()) - 1 - db;
    Int q = a.back();
    for (auto& c : a) c *= lead;
    --scalings_left;
    for (int j = 0; j <= db; ++j) a[size_t(shift + j)] -= q * b[size_t(j)];
    ip_trim(a);
    if (a.empty()) break;
  }
  for (; scalings_left > 0; --scalings_left)
    for (auto& c : a) c *= lead;
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero() || b.is_zero()) {
    IntPoly p = to_int_poly(a.is_zero() ? b : a);
    ip_make_primitive(p);
    std::vector<Rat> c(p.begin(), p.end());
    return Poly(std::move(c));
  }
  IntPoly f = to_int_poly(a), g = to_int_poly(b);
  if (int(f.size()) < int(g.size())) std::swap(f, g);
  ip_make_primitive(f);
  ip_make_primitive(g);
  // Subresultant PRS; keeps coefficient growth polynomial.
  Int h = 1, s = 1;
  while (true) {
    int delta = int(f.size()) - int(g.size());
    IntPoly r = ip_prem(f, g);
    if (r.empty()) break;
    Int divisor = s * boost::multiprecision::pow(h, unsigned(delta));
    for (auto& c : r) c /= divisor;
    f = std::move(g);
    g = std::move(r);
    s = f.back();
    if (delta >= 1)
      h = boost::multiprecision::pow(s, unsigned(delta)) /
          boost::multiprecision::pow(h, unsigned(delta - 1));
  }
  if (int(g.size()) == 1) return Poly(1);
  ip_make_primitive(g);
  std::vector<Rat> c(g.begin(), g.end());
  return Poly(std::move(c));
}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw zero_denominator_error();
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  // Scale so the lowest-degree nonzero coefficient of den is 1.
  Rat low = 0;
  for (int i = 0; i <= den_.degree(); ++i)
    if ((low = den_.coeff(i)) != 0) break;
  Rat inv = 1 / low;
  num_ = inv * num_;
  den_ = inv * den_;
}

Rat RatFn::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw zero_denominator_error();
  return num_.eval(x) / d;
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_); }

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw zero_denominator_error();
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn ratfn_reflect(const RatFn& f) {
  return RatFn(poly_reflect(f.num()), poly_reflect(f.den()));
}

RatFn ratfn_derivative(const RatFn& f) {
  return RatFn(
      poly_derivative(f.num()) * f.den() - f.num() * poly_derivative(f.den()),
      f.den() * f.den());
}

RatFn ratfn_nth_derivative(RatFn f, unsigned k) {
  for (unsigned i = 0; i < k; ++i) f = ratfn_derivative(f);
  return f;
}

std::vector<Rat> ratfn_series(const RatFn& f, int count) {
  if (f.den().coeff(0) == 0) throw zero_denominator_error();
  std::vector<Rat> out;
  out.reserve(size_t(std::max(count, 0)));
  Rat d0 = f.den().coeff(0);
  int dd = f.den().degree();
  for (int k = 0; k < count; ++k) {
    Rat acc = f.num().coeff(k);
    for (int j = 1; j <= dd && j <= k; ++j)
      acc -= f.den().coeff(j) * out[size_t(k - j)];
    out.push_back(acc / d0);
  }
  return out;
}

}  // namespace zigzag
