#include "sl2green/indres.hpp"

#include "sl2green/borel.hpp"
#include "sl2green/correspondence.hpp"
#include "sl2green/exact.hpp"
#include "sl2green/gtree.hpp"

namespace sl2green {

namespace {

void require_t(const PrimeContext& ctx, int t) {
  if (t < 1 || t > ctx.p()) {
    throw DomainError("simple index t = " + std::to_string(t) + " outside [1, " +
                      std::to_string(ctx.p()) + "]");
  }
}

}  // namespace

ULabel res_simple_g(const PrimeContext& ctx, int t) {
  require_t(ctx, t);
  return ULabel{ctx.reduce_weight(ctx.p() - t), t};
}

FactorVectorG ind_simple_b_factors(const PrimeContext& ctx, int a) {
  if (a < 0 || a > ctx.p() - 2) throw DomainError("weight a = " + std::to_string(a) + " outside [0, p-2]");
  FactorVectorG out;
  ++out[a + 1];
  ++out[ctx.p() - a];
  return out;
}

Multiplicity ell(const PrimeContext& ctx, int a, int b, int t) {
  require_t(ctx, t);
  return theta(ctx, a, b, t - 1) + theta(ctx, a, b, ctx.p() - t);
}

FactorVectorG ell_vector(const PrimeContext& ctx, const ULabel& u) {
  FactorVectorG out;
  for (int t = 1; t <= ctx.p(); ++t) {
    const auto n = ell(ctx, u.a, u.b, t);
    if (n != 0) out[t] = n;
  }
  return out;
}

GDecomposition decompose_projective_g(const PrimeContext& ctx, const FactorVectorG& alpha) {
  const int p = ctx.p();
  for (const auto& [t, n] : alpha) {
    require_t(ctx, t);
    if (n < 0) throw InconsistentData("negative composition-factor multiplicity for V_" + std::to_string(t));
  }
  auto get = [&](int t) {
    const auto it = alpha.find(t);
    return it == alpha.end() ? Multiplicity{0} : it->second;
  };
  GDecomposition out;
  out.add_projective(p, get(p));
  for (int i : {0, 1}) {
    const auto& cart = g_cartan(ctx, i);
    std::vector<Rational> a_block;
    for (int j = 1; j <= ctx.half(); ++j) a_block.emplace_back(get(edge_to_simple(ctx, i, j).t));
    const auto n = multiply(cart.Gamma, a_block);
    for (int j = 1; j <= ctx.half(); ++j) {
      const Rational& q = n[j - 1];
      const int t = edge_to_simple(ctx, i, j).t;
      if (!is_integer(q) || q < 0) {
        throw InconsistentData("not a projective composition-factor vector: multiplicity of P(" +
                               std::to_string(t) + ") would be " + to_string(q));
      }
      out.add_projective(t, static_cast<Multiplicity>(boost::multiprecision::numerator(q)));
    }
  }
  return out;
}

GDecomposition ind_u(const PrimeContext& ctx, const ULabel& raw) {
  const ULabel u = validate_ulabel(ctx, raw.a, raw.b);
  FactorVectorG alpha = ell_vector(ctx, u);
  GDecomposition out;
  if (!u.is_projective(ctx)) {
    out.add_walk(green_of_u(ctx, u));
    for (int t = 1; t <= ctx.p(); ++t) {
      const auto c = c_abt(ctx, u.a, u.b, t);
      if (c == 0) continue;
      alpha[t] -= c;
      if (alpha[t] == 0) alpha.erase(t);
    }
  }
  try {
    out.add(decompose_projective_g(ctx, alpha));
  } catch (const InconsistentData& e) {
    throw InternalError("ind_u(" + to_string(u) + "): " + e.what());
  }
  return out;
}

GDecomposition ind_b(const PrimeContext& ctx, const BDecomposition& d) {
  GDecomposition out;
  for (const auto& [u, n] : d.mult) out.add(ind_u(ctx, u), n);
  return out;
}

BDecomposition res_projective_g(const PrimeContext& ctx, int t) {
  require_t(ctx, t);
  const int p = ctx.p();
  BDecomposition out;
  if (t == 1 || t == p) {
    out.add(ULabel{0, p});
  } else {
    out.add(ULabel{t - 1, p});
    out.add(ULabel{p - t, p});
  }
  return out;
}

BDecomposition res_walk(const PrimeContext& ctx, const WalkLabel& raw) {
  const WalkLabel w = canonicalize_walk(ctx, raw);
  const ULabel head = green_of_walk(ctx, w);
  const int i = w.block;
  std::vector<Multiplicity> kappa(ctx.half(), 0);
  const auto factors = walk_factors(ctx, w);
  for (int r = 0; r < ctx.half(); ++r) {
    const int c = i + 2 * r;
    Multiplicity k = 0;
    for (const auto& [t, n] : factors) {
      const ULabel rt = res_simple_g(ctx, t);
      k += n * theta(ctx, rt.a, rt.b, c);
    }
    kappa[r] = k - theta(ctx, head.a, head.b, c);
  }
  BDecomposition out;
  out.add(head);
  try {
    out.add(decompose_projective_b(ctx, i, kappa));
  } catch (const InconsistentData& e) {
    throw InternalError("res_walk(" + to_string(w) + "): " + e.what());
  }
  return out;
}

BDecomposition res_g(const PrimeContext& ctx, const GDecomposition& d) {
  BDecomposition out;
  for (const auto& [w, n] : d.walks) out.add(res_walk(ctx, w), n);
  for (const auto& [t, n] : d.proj) out.add(res_projective_g(ctx, t), n);
  return out;
}

GDecomposition lift_decomposition(const PrimeContext& ctx, const FactorVectorG& ell_vec,
                                  const BDecomposition& res_mults) {
  FactorVectorG alpha;
  for (const auto& [t, n] : ell_vec) {
    require_t(ctx, t);
    if (n < 0) throw DomainError("negative multiplicity for V_" + std::to_string(t));
    if (n != 0) alpha[t] = n;
  }
  GDecomposition out;
  for (const auto& [raw, n] : res_mults.mult) {
    const ULabel u = validate_ulabel(ctx, raw.a, raw.b);
    if (u.is_projective(ctx)) {
      throw DomainError("lift: restriction multiplicities must be non-projective, got " + to_string(u));
    }
    if (n < 0) throw DomainError("lift: negative multiplicity for " + to_string(u));
    out.add_walk(green_of_u(ctx, u), n);
    for (int t = 1; t < ctx.p(); ++t) alpha[t] -= n * c_abt(ctx, u.a, u.b, t);
  }
  for (auto it = alpha.begin(); it != alpha.end();) {
    if (it->second < 0) {
      throw InconsistentData("inconsistent module data: V_" + std::to_string(it->first) +
                             " occurs fewer times than the non-projective part requires");
    }
    it = it->second == 0 ? alpha.erase(it) : std::next(it);
  }
  out.add(decompose_projective_g(ctx, alpha));
  return out;
}

RegularCheckReport induced_regular_check(const PrimeContext& ctx) {
  RegularCheckReport rep;
  for (int a = 0; a <= ctx.p() - 2; ++a) rep.induced.add(ind_u(ctx, ULabel{a, ctx.p()}));
  for (int t = 1; t <= ctx.p(); ++t) rep.expected.add_projective(t, t);
  return rep;
}

}  // namespace sl2green
