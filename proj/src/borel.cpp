#include "sl2green/borel.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace sl2green {

namespace {

long long floor_div(long long x, long long d) {
  long long q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

long long ceil_div(long long x, long long d) { return -floor_div(-x, d); }

void require_nonprojective(const PrimeContext& ctx, const ULabel& u, const char* op) {
  validate_ulabel(ctx, u.a, u.b);
  if (u.a < 0 || u.a > ctx.p() - 2) throw DomainError(std::string(op) + ": weight a not reduced");
  if (u.is_projective(ctx)) {
    throw DomainError(std::string(op) + ": projective label " + to_string(u) + " not allowed");
  }
}

void require_block(int i) {
  if (i != 0 && i != 1) throw DomainError("block index must be 0 or 1");
}

}  // namespace

Multiplicity theta(const PrimeContext& ctx, int a, int b, long long c) {
  const int p = ctx.p();
  if (a < 0 || a > p - 2) throw DomainError("theta: a = " + std::to_string(a) + " outside [0, p-2]");
  if (b < 1 || b > p) throw DomainError("theta: b = " + std::to_string(b) + " outside [1, p]");
  if (c < 0 || c > p - 2) return 0;
  if ((c - a) % 2 != 0) return 0;
  return floor_div(2LL * (b - 1) + a - c, p - 1) - ceil_div(a - c, p - 1) + 1;
}

const BCartan& b_cartan(const PrimeContext& ctx, int i) {
  require_block(i);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<BCartan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{ctx.p(), i}];
  if (slot) return *slot;

  const int n = ctx.half();
  const int p = ctx.p();
  auto c = std::make_unique<BCartan>();
  c->block = i;
  c->gamma.assign(n, std::vector<long long>(n, 2));
  c->delta.assign(n, std::vector<Rational>(n, Rational(-2, p)));
  for (int r = 0; r < n; ++r) {
    c->gamma[r][r] = 3;
    c->delta[r][r] = Rational(p - 2, p);
  }
  // Cross-check the closed-form inverse against the Cartan matrix from theta.
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      if (theta(ctx, i + 2 * col, p, i + 2 * r) != c->gamma[r][col]) {
        throw InternalError("b_cartan: gamma disagrees with composition factors of U_{a,p}");
      }
    }
  }
  if (multiply(to_rational(c->gamma), c->delta) != identity_rational(n)) {
    throw InternalError("b_cartan: gamma * delta != I");
  }
  slot = std::move(c);
  return *slot;
}

ULabel omega2(const PrimeContext& ctx, const ULabel& u) {
  require_nonprojective(ctx, u, "omega2");
  return ULabel{ctx.reduce_weight(u.a - 2), u.b};
}

AlmostSplitSeq almost_split(const PrimeContext& ctx, const ULabel& u) {
  require_nonprojective(ctx, u, "almost_split");
  AlmostSplitSeq seq;
  seq.left = u;
  seq.middle.push_back(ULabel{u.a, u.b + 1});
  if (u.b > 1) seq.middle.push_back(ULabel{ctx.reduce_weight(u.a + 2), u.b - 1});
  seq.right = ULabel{ctx.reduce_weight(u.a + 2), u.b};
  return seq;
}

BBoundaries b_boundaries(const PrimeContext& ctx, const ULabel& u) {
  require_nonprojective(ctx, u, "b_boundaries");
  const int p = ctx.p();
  return BBoundaries{ULabel{u.a, p - 1}, p - 1 - u.b,
                     ULabel{ctx.reduce_weight(u.a + 2LL * (u.b - 1)), 1}, u.b - 1};
}

int b_hook_distance(const PrimeContext& ctx, int a, int a_prime, BRim) {
  const int p = ctx.p();
  if (a < 0 || a > p - 2 || a_prime < 0 || a_prime > p - 2) {
    throw DomainError("b_hook_distance: weights must lie in [0, p-2]");
  }
  if ((a - a_prime) % 2 != 0) {
    throw DomainError("b_hook_distance: hooks " + std::to_string(a) + " and " +
                      std::to_string(a_prime) + " lie in different blocks");
  }
  // Both rims are cycles of (p-1)/2 hooks advanced by a -> a+2.
  return ctx.reduce_weight(a_prime - a);
}

std::vector<std::pair<ULabel, ULabel>> b_quiver_arrows(const PrimeContext& ctx) {
  std::vector<std::pair<ULabel, ULabel>> out;
  for (const auto& u : nonprojective_ulabels(ctx)) {
    if (u.b + 1 < ctx.p()) out.emplace_back(u, ULabel{u.a, u.b + 1});
    if (u.b > 1) out.emplace_back(u, ULabel{ctx.reduce_weight(u.a + 2), u.b - 1});
  }
  return out;
}

std::vector<std::vector<ULabel>> omega2_orbits(const PrimeContext& ctx) {
  std::vector<std::vector<ULabel>> out;
  std::set<ULabel> seen;
  for (const auto& u : nonprojective_ulabels(ctx)) {
    if (seen.count(u)) continue;
    std::vector<ULabel> orbit;
    ULabel v = u;
    do {
      orbit.push_back(v);
      seen.insert(v);
      v = omega2(ctx, v);
    } while (v != u);
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Multiplicity> b_factor_vector(const PrimeContext& ctx, int i, const BDecomposition& d) {
  require_block(i);
  std::vector<Multiplicity> kappa(ctx.half(), 0);
  for (const auto& [u, n] : d.mult) {
    if (u.block() != i) continue;
    for (int r = 0; r < ctx.half(); ++r) kappa[r] += n * theta(ctx, u.a, u.b, i + 2 * r);
  }
  return kappa;
}

BDecomposition decompose_projective_b(const PrimeContext& ctx, int i,
                                      const std::vector<Multiplicity>& kappa) {
  const auto& cart = b_cartan(ctx, i);
  const auto n = static_cast<std::size_t>(ctx.half());
  if (kappa.size() != n) {
    throw DomainError("decompose_projective_b: factor vector must have " + std::to_string(n) +
                      " entries");
  }
  std::vector<Rational> k(kappa.begin(), kappa.end());
  const auto sol = multiply(cart.delta, k);
  BDecomposition out;
  for (std::size_t r = 0; r < n; ++r) {
    if (!is_integer(sol[r]) || sol[r] < 0) {
      throw InconsistentData("not a projective composition-factor vector: multiplicity of U(" +
                             std::to_string(i + 2 * r) + "," + std::to_string(ctx.p()) + ") would be " +
                             to_string(sol[r]));
    }
    out.add(ULabel{i + 2 * static_cast<int>(r), ctx.p()},
            static_cast<Multiplicity>(boost::multiprecision::numerator(sol[r])));
  }
  return out;
}

}  // namespace sl2green
