#include "zigzag/kekule.hpp"

#include <stdexcept>

#include "zigzag/polyfam.hpp"

namespace zigzag::kekule {

namespace {

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

Int TTable::value(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("t_value: negative index");
  std::scoped_lock lock(mutex_);
  fill_locked(n, m);
  return values_[{n, m}];
}

void TTable::fill_locked(int n, int m) {
  // Iterative fill: column m needs column m-1 up to n, and smaller rows of
  // column m itself.
  for (int col = 1; col <= m; ++col) {
    for (int row = 1; row <= n; ++row) {
      auto key = std::make_pair(row, col);
      if (values_.count(key)) continue;
      auto get = [&](int r, int c) -> Int {
        if (r == 0 || c == 0) return 1;
        return values_.at({r, c});
      };
      Int acc = get(row, col - 1);
      for (int k = 0; 2 * k <= row - 1; ++k)
        acc += get(2 * k, col - 1) * get(row - 1 - 2 * k, col);
      values_[key] = std::move(acc);
    }
  }
}

Int t_value(int n, int m) {
  if (n == 0 || m == 0) {
    if (n < 0 || m < 0) throw std::invalid_argument("t_value: negative index");
    return 1;
  }
  static TTable table;
  return table.value(n, m);
}

Poly poly_of_row(int n) {
  // Newton forward differences on T(n, 0..n).
  std::vector<Rat> diffs;
  diffs.reserve(size_t(n) + 1);
  for (int m = 0; m <= n; ++m) diffs.emplace_back(t_value(n, m));
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      diffs[size_t(i)] -= diffs[size_t(i) - 1];
  Poly p;
  Poly basis(1);  // x(x-1).../k! built incrementally
  for (int k = 0; k <= n; ++k) {
    p = p + diffs[size_t(k)] * basis;
    basis = Rat(1, k + 1) * basis * Poly{-k, 1};
  }
  for (int m = n + 1; m <= n + 2; ++m)
    if (p.eval(m) != t_value(n, m))
      throw std::logic_error("poly_of_row: interpolation postcondition failed");
  return p;
}

Poly row_numerator(int n) {
  std::vector<Rat> h(size_t(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Int acc = 0;
    for (int k = 0; k <= j; ++k) {
      Int term = binom(n + 1, k) * t_value(n, j - k);
      acc += (k % 2 == 0) ? term : -term;
    }
    h[size_t(j)] = Rat(acc);
  }
  Poly hn(std::move(h));
  if (n >= 2 && hn.degree() > n - 2)
    throw std::logic_error("row_numerator: coefficients fail to vanish");
  return hn;
}

RatFn row_gf(int n) {
  return RatFn(row_numerator(n), poly_pow(Poly{1, -1}, unsigned(n) + 1));
}

RatFn col_gf(int m) {
  return RatFn(poly_reflect(polyfam::p_poly(m)), polyfam::p_poly(m + 1));
}

RatFn col_gf_cf(int m) {
  RatFn f(Poly(1), Poly{1, -1});  // F(0,x) = 1/(1-x)
  RatFn x(Poly::x());
  for (int i = 1; i <= m; ++i) f = RatFn(1) / (-x + ratfn_reflect(f));
  return f;
}

Int m_entry(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("m_entry: negative index");
  int n = i + j + 2;
  Int acc = 0;
  for (int k = 0; k <= j; ++k) {
    Int term = binom(n + 1, k) * t_value(n, j - k);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

RatFn m_row_gf(int m) {
  if (m < 0) throw std::invalid_argument("m_row_gf: m must be >= 0");
  // Sum of (-1)^k/k! d^k(x F(m-k,x)) * x^k; the formal x^{-1} of the k=0
  // term and the x^{-m-2} prefactor combine into one division by x^{m+3} at
  // the end, so every intermediate is a genuine RatFn.
  RatFn x(Poly::x());
  RatFn sum(0);
  Rat factorial(1);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) factorial *= k;
    RatFn dk = ratfn_nth_derivative(x * col_gf(m - k), unsigned(k));
    RatFn term = RatFn(Poly::monomial(1 / factorial, k)) * dk;
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  // The sum equals x * sum_n c_n x^n with c_n the alternating binomial sum
  // over T; the array's generating function only starts at n = m+2, so the
  // head n <= m+1 must be removed before dividing. The head is identically
  // zero for m >= 1 but not for m = 0, where c_0 = c_1 = 1.
  std::vector<Rat> head(size_t(m) + 3);
  for (int n = 0; n <= m + 1; ++n) {
    Int acc = 0;
    for (int k = 0; k <= m; ++k) {
      Int term = binom(n + 1, k) * t_value(n, m - k);
      acc += (k % 2 == 0) ? term : -term;
    }
    head[size_t(n) + 1] = Rat(acc);
  }
  sum = sum - RatFn(Poly(std::move(head)));
  // Divide by x^{m+3}: the numerator must be divisible.
  const Poly& num = sum.num();
  for (int i = 0; i < m + 3; ++i)
    if (num.coeff(i) != 0)
      throw std::logic_error("m_row_gf: pole at the origin did not cancel");
  std::vector<Rat> shifted;
  for (int i = m + 3; i <= num.degree(); ++i) shifted.push_back(num.coeff(i));
  return RatFn(Poly(std::move(shifted)), sum.den());
}

Poly m_row_gf_structural_den(int m) {
  Poly d(1);
  for (int k = 1; k <= m + 1; ++k)
    d = d * poly_pow(polyfam::p_poly(k), unsigned(m + 2 - k));
  return d;
}

std::vector<Int> cycle_gf_coeffs(int n, int count) {
  if (count < 1) throw std::invalid_argument("cycle_gf_coeffs: count >= 1");
  Poly p = polyfam::p_poly(n + 1);
  RatFn log_deriv(Poly::monomial(-1, 1) * poly_derivative(p), p);
  std::vector<Rat> series = ratfn_series(log_deriv, count);
  series[0] = 0;
  if (count > 1) series[1] += Rat((n + 1) / 2);
  std::vector<Int> out;
  out.reserve(series.size());
  for (const auto& c : series) {
    if (denominator(c) != 1)
      throw std::logic_error("cycle_gf_coeffs: non-integer coefficient");
    out.push_back(numerator(c));
  }
  return out;
}

}  // namespace zigzag::kekule
