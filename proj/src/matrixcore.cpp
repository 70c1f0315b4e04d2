#include "zigzag/matrixcore.hpp"

#include <sstream>
#include <utility>

namespace zigzag::matrixcore {

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order);
  for (int i = 1; i <= order; ++i) m.at(i, i) = 1;
  return m;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (int i = 1; i <= order_; ++i) t += at(i, i);
  return t;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.order_ != b.order_) throw dimension_mismatch_error();
  IntMatrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.order_ != b.order_) throw dimension_mismatch_error();
  IntMatrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.order_ != b.order_) throw dimension_mismatch_error();
  int n = a.order_;
  IntMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 1; j <= n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntVector ones_vector(int length) { return IntVector(size_t(length), Int(1)); }

IntVector unit_vector(int length, int i) {
  if (i < 1 || i > length) throw std::out_of_range("unit_vector index");
  IntVector v(size_t(length), Int(0));
  v[size_t(i - 1)] = 1;
  return v;
}

IntMatrix unit_primitive(int n) {
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n + 1 - i; ++j) m.at(i, j) = 1;
  return m;
}

IntMatrix special_matrices(int n, SpecialKind kind) {
  IntMatrix m(n);
  switch (kind) {
    case SpecialKind::X:
      for (int i = 1; i <= n; ++i) m.at(i, n + 1 - i) = 1;
      break;
    case SpecialKind::Abar:
      return unit_primitive(n) - special_matrices(n, SpecialKind::X);
    case SpecialKind::J:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = 1;
      break;
    case SpecialKind::Tprime:
      for (int i = 1; i < n; ++i) {
        m.at(i, i + 1) = 1;
        m.at(i + 1, i) = 1;
      }
      break;
    case SpecialKind::T:
      m = special_matrices(n, SpecialKind::Tprime);
      m.at(1, 1) = 1;
      break;
  }
  return m;
}

IntMatrix mat_pow(IntMatrix m, unsigned k) {
  IntMatrix acc = IntMatrix::identity(m.order());
  while (k) {
    if (k & 1u) acc = acc * m;
    k >>= 1u;
    if (k) m = m * m;
  }
  return acc;
}

namespace {

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  if (int(v.size()) != m.order()) throw dimension_mismatch_error();
  int n = m.order();
  IntVector r(size_t(n), Int(0));
  for (int i = 1; i <= n; ++i) {
    Int acc = 0;
    for (int j = 1; j <= n; ++j) acc += m.at(i, j) * v[size_t(j - 1)];
    r[size_t(i - 1)] = std::move(acc);
  }
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw dimension_mismatch_error();
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

Int bilinear(const IntVector& alpha, const IntMatrix& m, unsigned k,
             const IntVector& beta) {
  if (int(alpha.size()) != m.order() || int(beta.size()) != m.order())
    throw dimension_mismatch_error();
  IntVector w = beta;
  for (unsigned i = 0; i < k; ++i) w = mat_vec(m, w);
  return dot(alpha, w);
}

Int tbar(int n, int m) {
  if (m < 1) throw std::invalid_argument("tbar: m must be >= 1");
  return bilinear(ones_vector(m), unit_primitive(m), unsigned(n),
                  unit_vector(m, 1));
}

std::vector<Int> bilinear_series(const IntVector& alpha, const IntMatrix& m,
                                 const IntVector& beta, int count) {
  if (int(alpha.size()) != m.order() || int(beta.size()) != m.order())
    throw dimension_mismatch_error();
  std::vector<Int> out;
  out.reserve(size_t(std::max(count, 0)));
  IntVector w = beta;
  for (int k = 0; k < count; ++k) {
    out.push_back(dot(alpha, w));
    if (k + 1 < count) w = mat_vec(m, w);
  }
  return out;
}

Poly char_poly_generic(const IntMatrix& m) {
  int n = m.order();
  std::vector<Rat> coeffs(size_t(n) + 1);
  coeffs[size_t(n)] = 1;
  IntMatrix aux = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    aux = m * aux;
    Int c = -aux.trace() / k;  // exact by Faddeev-LeVerrier
    coeffs[size_t(n - k)] = Rat(c);
    for (int i = 1; i <= n; ++i) aux.at(i, i) += c;
  }
  return Poly(std::move(coeffs));
}

Poly poly_matrix_det(const std::vector<Poly>& entries, int order) {
  if (order == 0) return Poly(1);
  std::vector<Poly> a = entries;
  auto at = [&](int i, int j) -> Poly& {
    return a[size_t(i) * order + size_t(j)];
  };
  bool negate = false;
  Poly prev_pivot(1);
  for (int k = 0; k < order - 1; ++k) {
    if (at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < order; ++i)
        if (!at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Poly();  // singular column
      for (int j = 0; j < order; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < order; ++i) {
      for (int j = k + 1; j < order; ++j)
        at(i, j) = poly_divexact(at(i, j) * at(k, k) - at(i, k) * at(k, j),
                                 prev_pivot);
      at(i, k) = Poly();
    }
    prev_pivot = at(k, k);
  }
  Poly det = at(order - 1, order - 1);
  return negate ? -det : det;
}

Poly adjugate_entry(int n, int i, int j) {
  if (n < 1) throw std::invalid_argument("adjugate_entry: n must be >= 1");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("adjugate_entry: index out of range");
  if (n == 1) return Poly(1);
  IntMatrix a = unit_primitive(n);
  // Minor of I - xA with row j and column i removed; the adjugate transposes.
  std::vector<Poly> minor;
  minor.reserve(size_t(n - 1) * size_t(n - 1));
  for (int r = 1; r <= n; ++r) {
    if (r == j) continue;
    for (int c = 1; c <= n; ++c) {
      if (c == i) continue;
      Poly e = Poly::monomial(Rat(-a.at(r, c)), 1);
      if (r == c) e = e + Poly(1);
      minor.push_back(std::move(e));
    }
  }
  Poly det = poly_matrix_det(minor, n - 1);
  return ((i + j) % 2 == 0) ? det : -det;
}

std::string matrix_to_json(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= m.order(); ++i) {
    os << (i == 1 ? "[" : ",[");
    for (int j = 1; j <= m.order(); ++j)
      os << (j == 1 ? "\"" : ",\"") << m.at(i, j) << '"';
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace zigzag::matrixcore
