#include "sl2green/exact.hpp"

#include "sl2green/labels.hpp"

namespace sl2green {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    out[r].reserve(m[r].size());
    for (long long x : m[r]) out[r].emplace_back(x);
  }
  return out;
}

RationalMatrix identity_rational(std::size_t n) {
  RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k) out[k][k] = 1;
  return out;
}

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  const std::size_t n = x.size();
  const std::size_t inner = y.size();
  const std::size_t m = inner == 0 ? 0 : y[0].size();
  RationalMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    if (x[r].size() != inner) throw InternalError("multiply: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[r][k] == 0) continue;
      for (std::size_t c = 0; c < m; ++c) out[r][c] += x[r][k] * y[k][c];
    }
  }
  return out;
}

std::vector<Rational> multiply(const RationalMatrix& x, const std::vector<Rational>& v) {
  std::vector<Rational> out(x.size(), Rational(0));
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (x[r].size() != v.size()) throw InternalError("multiply: shape mismatch");
    for (std::size_t k = 0; k < v.size(); ++k) out[r] += x[r][k] * v[k];
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = identity_rational(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= scale;
      inv[col][c] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace sl2green
