// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle_support.hpp"
#include "sl2green/borel.hpp"
#include "sl2green/correspondence.hpp"
#include "sl2green/gtree.hpp"
#include "sl2green/indres.hpp"

using namespace sl2green;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double time_limit;  // seconds, 0 for none
  std::function<void(Outcome&)> body;
};

std::vector<int> primes_upto(int n) {
  std::vector<int> out;
  for (int p = 3; p <= n; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

void cartan_inversion(Outcome& o) {
  for (int p : {3, 5, 7, 11, 13, 17}) {
    const PrimeContext ctx(p);
    const int h = ctx.half();
    for (int i : {0, 1}) {
      const auto& g = g_cartan(ctx, i);
      o.require(multiply(to_rational(g.B), g.Gamma) == identity_rational(h), "B*Gamma != I at p=" + std::to_string(p));
      o.require(inverse(to_rational(g.B)) == g.Gamma, "closed-form Gamma != inverse(B) at p=" + std::to_string(p));
      const auto& b = b_cartan(ctx, i);
      o.require(multiply(to_rational(b.gamma), b.delta) == identity_rational(h), "gamma*delta != I at p=" + std::to_string(p));
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < h; ++c)
          o.require(b.gamma[r][c] == testing::enumerate_theta(ctx, i + 2 * c, p, i + 2 * r), "gamma entry");
    }
  }
}

void bijection(Outcome& o) {
  for (int p : {3, 5, 7, 11, 13, 17}) {
    const PrimeContext ctx(p);
    std::set<WalkLabel> image;
    for (const auto& u : nonprojective_ulabels(ctx)) {
      const auto w = green_of_u(ctx, u);
      o.require(is_canonical(ctx, w), "non-canonical image " + to_string(w));
      o.require(green_of_walk(ctx, w) == u, "green_of_walk not a left inverse at " + to_string(u));
      image.insert(w);
    }
    std::set<WalkLabel> all;
    for (int i : {0, 1}) {
      const auto walks = canonical_walks(ctx, i);
      o.require(static_cast<int>(walks.size()) == (p - 1) * (p - 1) / 2, "canonical count at p=" + std::to_string(p));
      for (const auto& w : walks) {
        all.insert(w);
        o.require(green_of_u(ctx, green_of_walk(ctx, w)) == w, "green_of_walk not a right inverse at " + to_string(w));
      }
    }
    // Independent count: enumerate every raw quadruple and canonicalize.
    std::set<WalkLabel> raw;
    for (int i : {0, 1})
      for (int l = 0; l <= (p - 3) / 2; ++l)
        for (int s = 1; l + s <= p - 1; ++s)
          for (int eps : {-1, 1}) raw.insert(canonicalize_walk(ctx, i, l, s, eps));
    o.require(image == all && all == raw && static_cast<int>(image.size()) == (p - 1) * (p - 1),
              "image is not the canonical set at p=" + std::to_string(p));
  }
}

void dimension_congruence(Outcome& o) {
  for (int p : primes_upto(17)) {
    const PrimeContext ctx(p);
    for (const auto& u : nonprojective_ulabels(ctx)) {
      const auto w = green_of_u(ctx, u);
      o.require(L(ctx, w.block, w.start, w.length) == u.b, "L != b at " + to_string(u));
      long long dim = 0;
      for (int j : expand_walk(ctx, w).edges) dim += edge_to_simple(ctx, w.block, j).t;
      o.require(dim == walk_dim(ctx, w) && dim % p == u.b % p, "dim mod p at " + to_string(u));
    }
  }
}

void factor_consistency(Outcome& o) {
  for (int p : primes_upto(13)) {
    const PrimeContext ctx(p);
    for (const auto& u : nonprojective_ulabels(ctx)) {
      const auto w = green_of_u(ctx, u);
      std::map<int, Multiplicity> theta_w;
      for (int j : expand_walk(ctx, w).edges) theta_w[edge_to_simple(ctx, w.block, j).t] += 1;
      for (int t = 1; t <= p; ++t) {
        const Multiplicity expect = theta_w.count(t) ? theta_w.at(t) : 0;
        o.require(c_abt_table(ctx, u.a, u.b, t) == expect,
                  "c_abt table vs walk at " + to_string(u) + " t=" + std::to_string(t));
      }
    }
  }
}

void theta_oracle(Outcome& o) {
  for (int p : primes_upto(13)) {
    const PrimeContext ctx(p);
    for (int a = 0; a <= p - 2; ++a)
      for (int b = 1; b <= p; ++b)
        for (int c = 0; c <= p - 2; ++c)
          o.require(theta(ctx, a, b, c) == testing::enumerate_theta(ctx, a, b, c), "theta at p=" + std::to_string(p));
  }
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int a = 0; a <= p - 2; ++a)
      for (int b = 1; b <= p; ++b)
        for (int c = 0; c <= p - 2; ++c)
          o.require(theta(ctx, a, b, c) == testing::oracle_theta(ctx, a, b, c), "theta vs eigenspaces");
  }
}

void regular_module(Outcome& o) {
  for (int p : primes_upto(13)) {
    const PrimeContext ctx(p);
    GDecomposition sum, expect;
    for (int a = 0; a <= p - 2; ++a) sum.add(ind_u(ctx, ULabel{a, p}));
    for (int t = 1; t <= p; ++t) expect.add_projective(t, t);
    o.require(sum == expect, "sum of Ind(U_{a,p}) at p=" + std::to_string(p) + ": " + to_string(sum));
  }
}

void lifting(Outcome& o) {
  for (int p : {5, 7, 11}) {
    const PrimeContext ctx(p);
    std::vector<WalkLabel> walks;
    for (int i : {0, 1})
      for (const auto& w : canonical_walks(ctx, i)) walks.push_back(w);
    std::mt19937_64 rng(2024 + p);
    std::uniform_int_distribution<std::size_t> pick(0, walks.size() - 1);
    std::uniform_int_distribution<int> tpick(1, p), count(0, 4), mult(1, 3);
    for (int trial = 0; trial < 1000; ++trial) {
      GDecomposition d;
      for (int k = count(rng); k > 0; --k) d.add_walk(walks[pick(rng)], mult(rng));
      for (int k = count(rng); k > 0; --k) d.add_projective(tpick(rng), mult(rng));
      const auto back = lift_decomposition(ctx, g_factors(ctx, d), res_g(ctx, d).nonprojective_part(ctx));
      o.require(back == d, "lift " + to_string(d) + " -> " + to_string(back));
    }
  }
}

void oracle_end_to_end(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int a = 0; a <= p - 2; ++a) {
      for (int b = 1; b <= p; ++b) {
        const ULabel u{a, b};
        const auto x = oracle::induce(ctx, oracle::build_u(ctx, u));
        auto ell_f = ell_vector(ctx, u);
        std::erase_if(ell_f, [](const auto& kv) { return kv.second == 0; });
        o.require(oracle::brauer_factors_g(ctx, x) == ell_f, "Brauer factors of Ind " + to_string(u));
        const auto got = oracle::decompose_b_module(ctx, oracle::restrict(ctx, x));
        const auto expect = res_g(ctx, ind_u(ctx, u));
        o.require(got == expect, "Res Ind " + to_string(u) + ": oracle " + to_string(got) + ", formula " + to_string(expect));
      }
    }
  }
}

void simple_restriction(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int t = 1; t <= p; ++t) {
      BDecomposition expect;
      expect.add(ULabel{ctx.reduce_weight(p - t), t});
      o.require(oracle::decompose_b_module(ctx, oracle::restrict(ctx, oracle::build_simple_g(ctx, t))) == expect,
                "Res V_" + std::to_string(t) + " at p=" + std::to_string(p));
      o.require(res_simple_g(ctx, t) == expect.mult.begin()->first, "res_simple_g formula");
    }
  }
}

void hooks_and_boundaries(Outcome& o) {
  for (int p : primes_upto(17)) {
    const PrimeContext ctx(p);
    for (int i : {0, 1}) {
      const auto hooks = g_hooks(ctx, i);
      int on_one = 0, on_other = 0;
      for (const auto& h : hooks) {
        const int r = static_cast<int>(walk_dim(ctx, h.walk) % p);
        on_one += r == 1;
        on_other += r == p - 1;
        o.require(r == h.boundary, "boundary tag of " + to_string(h.walk));
        const auto b = g_boundaries(ctx, h.walk);
        o.require(b.left == h.walk || b.right == h.walk, "hook not on its own boundary: " + to_string(h.walk));
      }
      o.require(static_cast<int>(hooks.size()) == p - 1, "hook count at p=" + std::to_string(p));
      o.require(on_one == ctx.half() && on_other == ctx.half(), "hook split at p=" + std::to_string(p));
    }
    for (const auto& u : nonprojective_ulabels(ctx)) {
      const auto gb = g_boundaries(ctx, green_of_u(ctx, u));
      const auto bb = b_boundaries(ctx, u);
      const std::set<WalkLabel> g{gb.left, gb.right};
      const std::set<WalkLabel> b{green_of_u(ctx, bb.top_rim), green_of_u(ctx, bb.simple_rim)};
      o.require(g == b, "boundary compatibility at " + to_string(u));
    }
  }
}

void ar_quiver(Outcome& o) {
  for (int p : primes_upto(17)) {
    const PrimeContext ctx(p);
    for (const auto& u : nonprojective_ulabels(ctx)) {
      ULabel v = u;
      for (int k = 0; k < ctx.half(); ++k) v = omega2(ctx, v);
      o.require(v == u, "Omega^(p-1) != id at " + to_string(u));
      const auto s = almost_split(ctx, u);
      long long mid = 0;
      for (const auto& m : s.middle) mid += m.b;
      o.require(s.left.b + s.right.b == mid, "almost split balance at " + to_string(u));
    }
    for (const auto& orbit : omega2_orbits(ctx))
      o.require(ctx.half() % static_cast<int>(orbit.size()) == 0, "orbit length at p=" + std::to_string(p));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Cartan inversion, p <= 17", 1.0, cartan_inversion},
      {2, "bijection green_of_u / green_of_walk, p <= 17", 1.0, bijection},
      {3, "dimension congruence", 0.0, dimension_congruence},
      {4, "interval-table factors equal walk expansion, p <= 13", 0.0, factor_consistency},
      {5, "theta closed form equals enumeration", 0.0, theta_oracle},
      {6, "regular-module identity, p <= 13", 0.0, regular_module},
      {7, "lifting round-trip, 1000 random per p in {5,7,11}", 0.0, lifting},
      {8, "matrix-oracle Res(Ind U) and Brauer factors, p <= 7", 60.0, oracle_end_to_end},
      {9, "simple restriction via oracle", 0.0, simple_restriction},
      {10, "hooks and boundaries", 0.0, hooks_and_boundaries},
      {11, "stable AR-quiver structure", 0.0, ar_quiver},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0) {
      std::ostringstream lim;
      lim << "runtime " << secs << " s exceeds " << c.time_limit << " s";
      o.require(secs < c.time_limit, lim.str());
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " (" << secs
              << " s)";
    if (!o.pass) std::cout << " -- " << o.detail;
    std::cout << "\n";
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
