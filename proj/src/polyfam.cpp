#include "zigzag/polyfam.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace zigzag::polyfam {

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

std::mutex memo_mutex;

}  // namespace

Poly chebyshev_u(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: n must be >= 0");
  std::scoped_lock lock(memo_mutex);
  static std::vector<Poly> memo = {Poly(1), Poly{0, 2}};
  Poly two_x{0, 2};
  while (int(memo.size()) <= n)
    memo.push_back(two_x * memo[memo.size() - 1] - memo[memo.size() - 2]);
  return memo[size_t(n)];
}

Poly p_poly(int n) {
  if (n < 0) throw std::invalid_argument("p_poly: n must be >= 0");
  std::scoped_lock lock(memo_mutex);
  static std::vector<Poly> memo;
  while (int(memo.size()) <= n) {
    int m = int(memo.size());
    std::vector<Rat> c(size_t(m) + 1);
    for (int k = 0; k <= m; ++k) {
      Int b = binom((m + k) / 2, k);
      c[size_t(k)] = Rat((3 * k / 2) % 2 == 0 ? b : -b);
    }
    memo.emplace_back(std::move(c));
  }
  return memo[size_t(n)];
}

Poly char_poly_tprime(int n) {
  if (n < 0) throw std::invalid_argument("char_poly_tprime: n must be >= 0");
  if (n == 0) return Poly(1);
  Poly u = chebyshev_u(n);
  std::vector<Rat> c(size_t(n) + 1);
  Rat half(1, 2), scale(1);
  for (int k = 0; k <= n; ++k) {
    c[size_t(k)] = u.coeff(k) * scale;
    scale *= half;
  }
  return Poly(std::move(c));
}

Poly char_poly_t(int n) {
  if (n < 1) throw std::invalid_argument("char_poly_t: n must be >= 1");
  return char_poly_tprime(n) - char_poly_tprime(n - 1);
}

Poly char_poly_a(int n) {
  if (n < 1) throw std::invalid_argument("char_poly_a: n must be >= 1");
  std::vector<Rat> c(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Int b = binom((n + k) / 2, k);
    c[size_t(n - k)] = Rat((3 * k / 2) % 2 == 0 ? b : -b);
  }
  return Poly(std::move(c));
}

Int euler_number(int n) {
  if (n < 0) throw std::invalid_argument("euler_number: n must be >= 0");
  std::scoped_lock lock(memo_mutex);
  // Boustrophedon: row k holds the Entringer numbers; the last entry of row n
  // is E_n.
  static std::vector<Int> memo = {1};
  static std::vector<Int> row = {1};
  while (int(memo.size()) <= n) {
    std::vector<Int> next(row.size() + 1);
    next[0] = 0;
    for (size_t i = 1; i < next.size(); ++i)
      next[i] = next[i - 1] + row[row.size() - i];
    row = std::move(next);
    memo.push_back(row.back());
  }
  return memo[size_t(n)];
}

}  // namespace zigzag::polyfam
