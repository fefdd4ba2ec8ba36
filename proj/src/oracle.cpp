#include "sl2green/oracle.hpp"

#include <algorithm>

#include "sl2green/exact.hpp"

namespace sl2green::oracle {

namespace {

int md(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

// Row-reduces m in place; returns pivot columns.
std::vector<int> rref(FpMatrix& m) {
  const int p = m.p();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = row;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    }
    const long long s = inv_mod(m.at(row, col), p);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = md(m.at(row, c) * s, p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const long long f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (m.at(row, c) != 0) m.at(r, c) = md(m.at(r, c) - f * m.at(row, c), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

FpMatrix transpose(const FpMatrix& m) {
  FpMatrix t(m.p(), m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  }
  return t;
}

// Basis of {x : m x = 0}, one vector per row.
FpMatrix right_kernel(const FpMatrix& m) {
  FpMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  const int free_count = m.cols() - static_cast<int>(pivots.size());
  FpMatrix out(m.p(), free_count, m.cols());
  int k = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out.at(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.at(k, pivots[i]) = md(-r.at(static_cast<int>(i), f), m.p());
    ++k;
  }
  return out;
}

int discrete_log(const PrimeContext& ctx, int x) {
  const int p = ctx.p();
  x = md(x, p);
  long long acc = 1;
  for (int k = 0; k < p - 1; ++k) {
    if (acc == x) return k;
    acc = acc * ctx.zeta() % p;
  }
  throw InternalError("discrete_log: " + std::to_string(x) + " is not a unit");
}

void require_square(const FpMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw InternalError(std::string(what) + ": matrix is not square");
}

}  // namespace

long long inv_mod(long long x, int p) {
  x = md(x, p);
  if (x == 0) throw InternalError("inv_mod: zero is not invertible");
  long long r = 1, b = x, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

FpMatrix::FpMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, 0) {}

FpMatrix FpMatrix::identity(int p, int n) {
  FpMatrix m(p, n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("FpMatrix: shape mismatch in product");
  FpMatrix out(p_, rows_, o.cols_);
  std::vector<long long> acc(o.cols_);
  for (int r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < cols_; ++k) {
      const long long x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < o.cols_; ++c) acc[c] += x * o.at(k, c);
    }
    for (int c = 0; c < o.cols_; ++c) out.at(r, c) = static_cast<int>(acc[c] % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("FpMatrix: shape mismatch in sum");
  FpMatrix out = *this;
  for (std::size_t k = 0; k < d_.size(); ++k) out.d_[k] = (d_[k] + o.d_[k]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const { return *this + o.scaled(-1); }

FpMatrix FpMatrix::scaled(long long s) const {
  FpMatrix out = *this;
  const long long f = md(s, p_);
  for (auto& x : out.d_) x = static_cast<int>(x * f % p_);
  return out;
}

FpMatrix FpMatrix::pow(long long e) const {
  require_square(*this, "pow");
  if (e < 0) return inverse().pow(-e);
  FpMatrix r = identity(p_, rows_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FpMatrix FpMatrix::inverse() const {
  require_square(*this, "inverse");
  FpMatrix aug = hstack(identity(p_, rows_));
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < rows_ || pivots.back() >= rows_) {
    throw InternalError("FpMatrix: singular matrix");
  }
  FpMatrix out(p_, rows_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < rows_; ++c) out.at(r, c) = aug.at(r, rows_ + c);
  }
  return out;
}

int FpMatrix::rank() const {
  FpMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

FpMatrix FpMatrix::left_kernel() const { return right_kernel(transpose(*this)); }

FpMatrix FpMatrix::hstack(const FpMatrix& o) const {
  if (rows_ != o.rows_) throw InternalError("FpMatrix: hstack row mismatch");
  FpMatrix out(p_, rows_, cols_ + o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (int c = 0; c < o.cols_; ++c) out.at(r, cols_ + c) = o.at(r, c);
  }
  return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix& o) const {
  if (cols_ != o.cols_) throw InternalError("FpMatrix: vstack column mismatch");
  FpMatrix out(p_, rows_ + o.rows_, cols_);
  std::copy(d_.begin(), d_.end(), out.d_.begin());
  std::copy(o.d_.begin(), o.d_.end(), out.d_.begin() + static_cast<std::ptrdiff_t>(d_.size()));
  return out;
}

SL2 mul(const PrimeContext& ctx, const SL2& x, const SL2& y) {
  const int p = ctx.p();
  return SL2{md(1LL * x.a * y.a + 1LL * x.b * y.c, p), md(1LL * x.a * y.b + 1LL * x.b * y.d, p),
             md(1LL * x.c * y.a + 1LL * x.d * y.c, p), md(1LL * x.c * y.b + 1LL * x.d * y.d, p)};
}

SL2 inv(const PrimeContext& ctx, const SL2& x) {
  const int p = ctx.p();
  return SL2{x.d, md(-x.b, p), md(-x.c, p), x.a};
}

SL2 gen_g() { return SL2{1, 1, 0, 1}; }

SL2 gen_lambda(const PrimeContext& ctx) {
  return SL2{ctx.zeta(), 0, 0, static_cast<int>(inv_mod(ctx.zeta(), ctx.p()))};
}

SL2 gen_w(const PrimeContext& ctx) { return SL2{0, ctx.p() - 1, 1, 0}; }

SL2 random_sl2(const PrimeContext& ctx, std::mt19937_64& rng) {
  const int p = ctx.p();
  std::uniform_int_distribution<int> dist(0, p - 1);
  while (true) {
    SL2 h{dist(rng), dist(rng), dist(rng), 0};
    if (h.a != 0) {
      // d = (1 + b c) / a
      h.d = md((1LL + 1LL * h.b * h.c) * inv_mod(h.a, p), p);
      return h;
    }
    if (h.b != 0) {
      // a = 0 forces -b c = 1
      h.c = md(-inv_mod(h.b, p), p);
      h.d = dist(rng);
      return h;
    }
  }
}

std::vector<SL2> all_elements(const PrimeContext& ctx) {
  const int p = ctx.p();
  std::vector<SL2> out;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        for (int d = 0; d < p; ++d) {
          if (md(1LL * a * d - 1LL * b * c, p) == 1) out.push_back(SL2{a, b, c, d});
        }
      }
    }
  }
  return out;
}

void check_b_relations(const PrimeContext& ctx, const BMatrixModule& m) {
  const int p = ctx.p();
  const auto id = FpMatrix::identity(p, m.dim());
  if (m.g.pow(p) != id) throw InternalError("B-module: g^p != 1");
  if (m.lambda.pow(p - 1) != id) throw InternalError("B-module: lambda^(p-1) != 1");
  const long long z2 = 1LL * ctx.zeta() * ctx.zeta() % p;
  if (m.lambda * m.g * m.lambda.inverse() != m.g.pow(z2)) {
    throw InternalError("B-module: lambda g lambda^-1 != g^(zeta^2)");
  }
}

FpMatrix act_b(const PrimeContext& ctx, const BMatrixModule& m, const SL2& b) {
  if (b.c != 0) throw InternalError("act_b: element is not upper triangular");
  const int k = discrete_log(ctx, b.a);
  const long long u = md(1LL * b.b * inv_mod(b.a, ctx.p()), ctx.p());
  return m.lambda.pow(k) * m.g.pow(u);
}

FpMatrix act(const PrimeContext& ctx, const GMatrixModule& m, const SL2& h) {
  const BMatrixModule bm{m.g, m.lambda};
  if (h.c == 0) return act_b(ctx, bm, h);
  const int p = ctx.p();
  const long long ci = inv_mod(h.c, p);
  const long long u = md(1LL * h.a * ci, p);
  const SL2 b{h.c, h.d, 0, static_cast<int>(ci)};
  return m.g.pow(u) * m.w * act_b(ctx, bm, b);
}

void check_homomorphism(const PrimeContext& ctx, const GMatrixModule& m, int pairs,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (act(ctx, m, gen_w(ctx)) != m.w) throw InternalError("G-module: evaluator disagrees on w");
  for (int k = 0; k < pairs; ++k) {
    const SL2 x = random_sl2(ctx, rng);
    const SL2 y = random_sl2(ctx, rng);
    if (act(ctx, m, mul(ctx, x, y)) != act(ctx, m, x) * act(ctx, m, y)) {
      throw InternalError("G-module: rho(xy) != rho(x) rho(y)");
    }
  }
}

FpMatrix polynomial_action(const PrimeContext& ctx, int t, const SL2& h) {
  const int p = ctx.p();
  if (t < 1 || t > p) throw DomainError("simple index t outside [1, p]");
  // Polynomials in y with x implicit: coefficient index = power of y.
  auto times = [p](const std::vector<int>& f, int cx, int cy) {
    std::vector<int> out(f.size() + 1, 0);
    for (std::size_t k = 0; k < f.size(); ++k) {
      out[k] = md(out[k] + 1LL * f[k] * cx, p);
      out[k + 1] = md(out[k + 1] + 1LL * f[k] * cy, p);
    }
    return out;
  };
  FpMatrix m(p, t, t);
  for (int k = 0; k < t; ++k) {
    std::vector<int> f{1};
    for (int e = 0; e < t - 1 - k; ++e) f = times(f, h.a, h.b);
    for (int e = 0; e < k; ++e) f = times(f, h.c, h.d);
    for (int j = 0; j < t; ++j) m.at(k, j) = f[j];
  }
  return m;
}

GMatrixModule build_simple_g(const PrimeContext& ctx, int t) {
  return GMatrixModule{polynomial_action(ctx, t, gen_g()), polynomial_action(ctx, t, gen_lambda(ctx)),
                       polynomial_action(ctx, t, gen_w(ctx))};
}

BMatrixModule build_u(const PrimeContext& ctx, const ULabel& raw) {
  const ULabel u = validate_ulabel(ctx, raw.a, raw.b);
  const int p = ctx.p(), b = u.b;
  FpMatrix n(p, b, b);
  for (int k = 1; k < b; ++k) n.at(k, k - 1) = 1;  // e_k N = e_{k-1}; e_0 spans the socle
  // g = exp(N); N^b = 0 and b <= p, so every factorial below is invertible.
  FpMatrix g = FpMatrix::identity(p, b), term = FpMatrix::identity(p, b);
  for (int k = 1; k < b; ++k) {
    term = (term * n).scaled(inv_mod(k, p));
    g = g + term;
  }
  FpMatrix lam(p, b, b);
  long long z = 1;
  for (int k = 0; k < ctx.reduce_weight(u.a); ++k) z = z * ctx.zeta() % p;
  const long long z2 = 1LL * ctx.zeta() * ctx.zeta() % p;
  for (int k = 0; k < b; ++k) {
    lam.at(k, k) = static_cast<int>(z);
    z = z * z2 % p;
  }
  BMatrixModule m{g, lam};
  check_b_relations(ctx, m);
  return m;
}

BMatrixModule direct_sum(const PrimeContext& ctx, const std::vector<BMatrixModule>& parts) {
  int n = 0;
  for (const auto& m : parts) n += m.dim();
  BMatrixModule out{FpMatrix(ctx.p(), n, n), FpMatrix(ctx.p(), n, n)};
  int off = 0;
  for (const auto& m : parts) {
    for (int r = 0; r < m.dim(); ++r) {
      for (int c = 0; c < m.dim(); ++c) {
        out.g.at(off + r, off + c) = m.g.at(r, c);
        out.lambda.at(off + r, off + c) = m.lambda.at(r, c);
      }
    }
    off += m.dim();
  }
  return out;
}

namespace {

SL2 coset_rep(const PrimeContext& ctx, int j, Transversal kind) {
  const int p = ctx.p();
  if (kind == Transversal::Standard) {
    if (j == p) return SL2{};
    return SL2{0, p - 1, 1, j};
  }
  if (j == p) return SL2{1, 1, 0, 1};
  return SL2{1, md(j - 1, p), 1, j};
}

// Index of the coset B x: the point of P^1 given by the bottom row of x.
int coset_of(const PrimeContext& ctx, const SL2& x) {
  if (x.c == 0) return ctx.p();
  return md(1LL * x.d * inv_mod(x.c, ctx.p()), ctx.p());
}

FpMatrix induced_generator(const PrimeContext& ctx, const BMatrixModule& m, const SL2& h,
                           Transversal kind) {
  const int p = ctx.p(), n = m.dim();
  FpMatrix out(p, (p + 1) * n, (p + 1) * n);
  for (int j = 0; j <= p; ++j) {
    const SL2 x = mul(ctx, coset_rep(ctx, j, kind), h);
    const int k = coset_of(ctx, x);
    const SL2 b = mul(ctx, x, inv(ctx, coset_rep(ctx, k, kind)));
    if (b.c != 0) throw InternalError("induce: coset representative bookkeeping failed");
    const FpMatrix blk = act_b(ctx, m, b);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) out.at(j * n + r, k * n + c) = blk.at(r, c);
    }
  }
  return out;
}

}  // namespace

GMatrixModule induce(const PrimeContext& ctx, const BMatrixModule& m, Transversal kind) {
  return GMatrixModule{induced_generator(ctx, m, gen_g(), kind),
                       induced_generator(ctx, m, gen_lambda(ctx), kind),
                       induced_generator(ctx, m, gen_w(ctx), kind)};
}

BMatrixModule restrict(const PrimeContext& ctx, const GMatrixModule& m) {
  BMatrixModule out{m.g, m.lambda};
  check_b_relations(ctx, out);
  return out;
}

BDecomposition decompose_b_module(const PrimeContext& ctx, const BMatrixModule& m) {
  const int p = ctx.p(), n = m.dim();
  const auto id = FpMatrix::identity(p, n);
  const FpMatrix nil = m.g - id;

  std::vector<int> powers(p - 1);
  long long z = 1;
  for (int a = 0; a < p - 1; ++a) {
    powers[a] = static_cast<int>(z);
    z = z * ctx.zeta() % p;
  }

  // f[k][a] = dim(ker N  cap  im N^{k-1}  cap  zeta^a-eigenspace of lambda).
  std::vector<std::vector<int>> f(p + 2, std::vector<int>(p - 1, 0));
  std::vector<FpMatrix> socle_weight(p - 1);
  for (int a = 0; a < p - 1; ++a) {
    socle_weight[a] = nil.hstack(m.lambda - id.scaled(powers[a])).left_kernel();
  }
  FpMatrix image = id;
  for (int k = 1; k <= p + 1; ++k) {
    const int r_img = image.rank();
    for (int a = 0; a < p - 1; ++a) {
      const auto& kern = socle_weight[a];
      if (kern.rows() == 0 || r_img == 0) continue;
      f[k][a] = kern.rows() + r_img - kern.vstack(image).rank();
    }
    image = image * nil;
  }

  BDecomposition out;
  for (int a = 0; a < p - 1; ++a) {
    for (int b = 1; b <= p; ++b) {
      const int c = f[b][a] - f[b + 1][a];
      if (c < 0) throw InternalError("decompose_b_module: negative multiplicity");
      out.add(ULabel{a, b}, c);
    }
  }

  if (out.dim() != n) throw InternalError("decompose_b_module: summand dimensions do not add up");
  for (int c = 0; c < p - 1; ++c) {
    long long expect = 0;
    for (const auto& [u, k] : out.mult) {
      for (int j = 0; j < u.b; ++j) {
        if (ctx.reduce_weight(u.a + 2LL * j) == c) expect += k;
      }
    }
    const int seen = (m.lambda - id.scaled(powers[c])).left_kernel().rows();
    if (seen != expect) throw InternalError("decompose_b_module: lambda weight census mismatch");
  }
  return out;
}

namespace {

bool is_square_mod(long long x, int p) {
  x = md(x, p);
  if (x == 0) return true;
  long long r = 1, b = x, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1;
}

// Kernel dimensions of f(rho(h)) over the p-regular class representatives and the
// irreducible polynomials f that can occur, each divided by deg f.
std::vector<long long> eigen_features(const PrimeContext& ctx, const GMatrixModule& m) {
  const int p = ctx.p(), n = m.dim();
  const auto id = FpMatrix::identity(p, n);
  std::vector<SL2> reps{SL2{}, SL2{p - 1, 0, 0, p - 1}};
  for (int tau = 0; tau < p; ++tau) {
    if (tau == 2 || tau == p - 2) continue;
    reps.push_back(SL2{0, p - 1, 1, tau});
  }
  std::vector<int> quad;
  for (int s = 0; s < p; ++s) {
    if (!is_square_mod(1LL * s * s - 4, p)) quad.push_back(s);
  }
  std::vector<long long> out;
  for (const auto& h : reps) {
    const FpMatrix x = act(ctx, m, h);
    const FpMatrix x2 = x * x;
    for (int mu = 1; mu < p; ++mu) out.push_back(n - (x - id.scaled(mu)).rank());
    for (int s : quad) out.push_back((n - (x2 - x.scaled(s) + id).rank()) / 2);
  }
  return out;
}

}  // namespace

std::map<int, Multiplicity> brauer_factors_g(const PrimeContext& ctx, const GMatrixModule& m) {
  const int p = ctx.p();
  std::vector<std::vector<long long>> simple_features;
  for (int t = 1; t <= p; ++t) simple_features.push_back(eigen_features(ctx, build_simple_g(ctx, t)));
  const auto target = eigen_features(ctx, m);
  const std::size_t rows = target.size();

  // Solve sum_t ell_t features(V_t) = features(m) exactly over Q.
  RationalMatrix aug(rows, std::vector<Rational>(p + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (int t = 0; t < p; ++t) aug[r][t] = simple_features[t][r];
    aug[r][p] = target[r];
  }
  std::size_t row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < p && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && aug[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[piv], aug[row]);
    const Rational s = aug[row][col];
    for (auto& x : aug[row]) x /= s;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      const Rational fct = aug[r][col];
      for (int c = 0; c <= p; ++c) aug[r][c] -= fct * aug[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivots.size()) != p) throw InternalError("brauer_factors_g: simple features are dependent");
  for (std::size_t r = row; r < rows; ++r) {
    if (aug[r][p] != 0) throw InternalError("brauer_factors_g: eigenvalue data is not a sum of simples");
  }
  std::map<int, Multiplicity> out;
  for (int t = 0; t < p; ++t) {
    const Rational& q = aug[t][p];
    if (!is_integer(q) || q < 0) {
      throw InternalError("brauer_factors_g: multiplicity of V_" + std::to_string(t + 1) + " is " + to_string(q));
    }
    const auto v = static_cast<Multiplicity>(boost::multiprecision::numerator(q));
    if (v != 0) out[t + 1] = v;
  }
  return out;
}

int hom_dim(const PrimeContext& ctx, const GMatrixModule& x, const GMatrixModule& y) {
  // g and w generate SL2(F_p). Unknown Phi with rho_x(h) Phi = Phi rho_y(h).
  const int p = ctx.p(), dx = x.dim(), dy = y.dim();
  const int vars = dx * dy;
  FpMatrix eq(p, 2 * vars, vars);
  int base = 0;
  for (const auto* pair : {&x.g, &x.w}) {
    const FpMatrix& a = *pair;
    const FpMatrix& b = (pair == &x.g) ? y.g : y.w;
    for (int r = 0; r < dx; ++r) {
      for (int c = 0; c < dy; ++c) {
        const int e = base + r * dy + c;
        for (int k = 0; k < dx; ++k) {
          if (a.at(r, k) != 0) eq.at(e, k * dy + c) = md(eq.at(e, k * dy + c) + a.at(r, k), p);
        }
        for (int k = 0; k < dy; ++k) {
          if (b.at(k, c) != 0) eq.at(e, r * dy + k) = md(eq.at(e, r * dy + k) - b.at(k, c), p);
        }
      }
    }
    base += vars;
  }
  return vars - eq.rank();
}

}  // namespace sl2green::oracle
