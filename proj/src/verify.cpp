#include "sl2green/verify.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "sl2green/borel.hpp"
#include "sl2green/correspondence.hpp"
#include "sl2green/gtree.hpp"
#include "sl2green/indres.hpp"
#include "sl2green/labels.hpp"
#include "sl2green/oracle.hpp"

namespace sl2green {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Check {
 public:
  explicit Check(InvariantResult& r) : r_(r) {}
  void operator()(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (ok) return;
    r_.pass = false;
    if (r_.counterexamples.size() < kMaxCounterexamples) r_.counterexamples.push_back(what());
  }

 private:
  InvariantResult& r_;
};

using Body = void (*)(const PrimeContext&, Check&);

struct Invariant {
  const char* name;
  bool oracle;
  Body body;
};

std::vector<WalkLabel> all_canonical(const PrimeContext& ctx) {
  auto out = canonical_walks(ctx, 0);
  const auto b1 = canonical_walks(ctx, 1);
  out.insert(out.end(), b1.begin(), b1.end());
  return out;
}

std::vector<WalkLabel> all_raw(const PrimeContext& ctx) {
  std::vector<WalkLabel> out;
  for (int i : {0, 1}) {
    for (int l = 0; l <= (ctx.p() - 3) / 2; ++l) {
      for (int s = 1; l + s <= ctx.p() - 1; ++s) {
        for (int e : {-1, 1}) out.push_back(WalkLabel{i, l, s, e});
      }
    }
  }
  return out;
}

std::multiset<int> edge_multiset(const PrimeContext& ctx, const WalkLabel& w) {
  const auto ex = expand_walk(ctx, w);
  return {ex.edges.begin(), ex.edges.end()};
}

std::string str(const WalkLabel& w) { return to_string(w); }
std::string str(const ULabel& u) { return to_string(u); }

const std::vector<Invariant>& registry() {
  static const std::vector<Invariant> inv = {
      {"labels.canonical_count", false,
       [](const PrimeContext& ctx, Check& check) {
         const int expect = (ctx.p() - 1) * (ctx.p() - 1) / 2;
         for (int i : {0, 1}) {
           const auto n = static_cast<int>(canonical_walks(ctx, i).size());
           check(n == expect, [&] { return "block " + std::to_string(i) + ": " + std::to_string(n); });
         }
       }},
      {"labels.canonicalize_idempotent", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& w : all_raw(ctx)) {
           const auto c = canonicalize_walk(ctx, w);
           check(canonicalize_walk(ctx, c) == c && is_canonical(ctx, c), [&] { return str(w); });
         }
       }},
      {"labels.canonicalize_preserves_walk", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& w : all_raw(ctx)) {
           const auto c = canonicalize_walk(ctx, w);
           check(edge_multiset(ctx, w) == edge_multiset(ctx, c) &&
                     L(ctx, w.block, w.start, w.length) == L(ctx, c.block, c.start, c.length),
                 [&] { return str(w) + " vs " + str(c); });
         }
       }},
      {"labels.weight_reduction", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int a = -3 * ctx.p(); a <= 3 * ctx.p(); ++a) {
           check(validate_ulabel(ctx, a, 1) == validate_ulabel(ctx, a + 7LL * (ctx.p() - 1), 1),
                 [&] { return std::to_string(a); });
         }
       }},
      {"borel.theta_bruteforce", false,
       [](const PrimeContext& ctx, Check& check) {
         const int p = ctx.p();
         for (int a = 0; a <= p - 2; ++a) {
           for (int b = 1; b <= p; ++b) {
             for (int c = -2; c <= p; ++c) {
               Multiplicity brute = 0;
               if (c >= 0 && c <= p - 2) {
                 for (int j = 0; j < b; ++j) brute += ((a + 2 * j - c) % (p - 1) == 0);
               }
               check(theta(ctx, a, b, c) == brute, [&] {
                 return "theta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
               });
             }
           }
         }
       }},
      {"borel.theta_column_sums", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int a = 0; a <= ctx.p() - 2; ++a) {
           Multiplicity s = 0;
           for (int c = 0; c <= ctx.p() - 2; ++c) s += theta(ctx, a, ctx.p(), c);
           check(s == ctx.p(), [&] { return "a = " + std::to_string(a); });
         }
       }},
      {"borel.cartan_inverse", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int i : {0, 1}) {
           const auto& c = b_cartan(ctx, i);
           check(multiply(to_rational(c.gamma), c.delta) == identity_rational(ctx.half()),
                 [&] { return "block " + std::to_string(i); });
         }
       }},
      {"borel.boundary_lengths", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto b = b_boundaries(ctx, u);
           const auto o = b_boundaries(ctx, omega2(ctx, u));
           check(b.top_distance + b.simple_distance == ctx.p() - 2 &&
                     o.top_distance == b.top_distance && o.simple_distance == b.simple_distance,
                 [&] { return str(u); });
         }
       }},
      {"borel.omega2_period", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           ULabel v = u;
           for (int k = 0; k < ctx.half(); ++k) {
             v = omega2(ctx, v);
             check(v.b == u.b, [&] { return str(u); });
           }
           check(v == u, [&] { return str(u); });
         }
         for (const auto& orbit : omega2_orbits(ctx)) {
           check(ctx.half() % static_cast<int>(orbit.size()) == 0, [&] { return str(orbit.front()); });
         }
       }},
      {"borel.almost_split_balance", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto s = almost_split(ctx, u);
           int mid = 0;
           for (const auto& m : s.middle) mid += m.b;
           check(s.left.b + s.right.b == mid && s.right == omega2(ctx, ULabel{ctx.reduce_weight(u.a + 4), u.b}),
                 [&] { return str(u); });
         }
       }},
      {"borel.projective_roundtrip", false,
       [](const PrimeContext& ctx, Check& check) {
         std::mt19937_64 rng(1000 + ctx.p());
         std::uniform_int_distribution<int> dist(0, 4);
         for (int trial = 0; trial < 200; ++trial) {
           for (int i : {0, 1}) {
             BDecomposition d;
             for (int r = 0; r < ctx.half(); ++r) d.add(ULabel{i + 2 * r, ctx.p()}, dist(rng));
             const auto back = decompose_projective_b(ctx, i, b_factor_vector(ctx, i, d));
             check(back == d, [&] { return to_string(d); });
           }
         }
       }},
      {"gtree.edge_bijection", false,
       [](const PrimeContext& ctx, Check& check) {
         std::set<int> seen;
         for (int i : {0, 1}) {
           for (int j = 1; j <= ctx.half(); ++j) {
             const int t = edge_to_simple(ctx, i, j).t;
             seen.insert(t);
             check(simple_to_edge(ctx, t) == std::make_pair(i, j) && g_block_of_simple(ctx, t) == i,
                   [&] { return "edge " + std::to_string(j) + " of block " + std::to_string(i); });
           }
         }
         check(static_cast<int>(seen.size()) == ctx.p() - 1, [] { return std::string("image size"); });
       }},
      {"gtree.walk_dim_congruence", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& w : all_canonical(ctx)) {
           Multiplicity d = 0;
           for (const auto& [t, n] : walk_factors(ctx, w)) d += t * n;
           check(d == walk_dim(ctx, w) && walk_dim(ctx, w) % ctx.p() == L(ctx, w.block, w.start, w.length),
                 [&] { return str(w); });
         }
       }},
      {"gtree.top_socle_partition", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& w : all_canonical(ctx)) {
           if (w.length < 2) continue;
           const auto ts = walk_top_socle(ctx, w);
           auto both = ts.top;
           for (const auto& [t, n] : ts.socle) both[t] += n;
           check(both == walk_factors(ctx, w), [&] { return str(w); });
         }
       }},
      {"gtree.cartan_inverse", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int i : {0, 1}) {
           const auto& c = g_cartan(ctx, i);
           check(multiply(to_rational(c.B), c.Gamma) == identity_rational(ctx.half()),
                 [&] { return "B*Gamma, block " + std::to_string(i); });
           for (int r = 0; r < ctx.half(); ++r) {
             for (int s = 0; s < ctx.half(); ++s) {
               const auto den = boost::multiprecision::denominator(c.Gamma[r][s]);
               check(c.Gamma[r][s] == c.Gamma[s][r] && ctx.p() % den == 0,
                     [&] { return "Gamma entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ")"; });
             }
           }
         }
       }},
      {"gtree.hooks", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int i : {0, 1}) {
           const auto hooks = g_hooks(ctx, i);
           int on_one = 0;
           for (const auto& h : hooks) {
             on_one += h.boundary == 1;
             const auto u = green_of_walk(ctx, h.walk);
             const bool rim = (u.b == 1 && h.boundary == 1) || (u.b == ctx.p() - 1 && h.boundary == ctx.p() - 1);
             const int ref_a = i;
             check(rim && b_hook_distance(ctx, ref_a, u.a, u.b == 1 ? BRim::Simple : BRim::Top) == h.distance,
                   [&] { return str(h.walk); });
           }
           check(static_cast<int>(hooks.size()) == ctx.p() - 1 && on_one == ctx.half(),
                 [&] { return "block " + std::to_string(i) + " boundary split"; });
         }
       }},
      {"gtree.hook_boundaries", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int i : {0, 1}) {
           for (const auto& h : g_hooks(ctx, i)) {
             const auto b = g_boundaries(ctx, h.walk);
             check(b.left == h.walk || b.right == h.walk, [&] { return str(h.walk); });
           }
         }
       }},
      {"gtree.c_abt_cross_check", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           for (int t = 1; t <= ctx.p(); ++t) {
             check(c_abt_table(ctx, u.a, u.b, t) == c_abt_walk(ctx, u.a, u.b, t),
                   [&] { return str(u) + " t=" + std::to_string(t); });
           }
         }
       }},
      {"gtree.uniserial_census", false,
       [](const PrimeContext& ctx, Check& check) {
         int n = 0;
         for (const auto& w : all_canonical(ctx)) n += w.length == 2;
         check(n == 2 * (ctx.p() - 2), [&] { return std::to_string(n) + " uniserial walks"; });
       }},
      {"correspondence.bijection", false,
       [](const PrimeContext& ctx, Check& check) {
         const auto rep = verify_bijection(ctx);
         check(rep.ok() && rep.labels == (ctx.p() - 1) * (ctx.p() - 1),
               [&] { return rep.failures.empty() ? std::string("label count") : rep.failures.front(); });
       }},
      {"correspondence.dimension_congruence", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto w = green_of_u(ctx, u);
           check(L(ctx, w.block, w.start, w.length) == u.b && walk_dim(ctx, w) % ctx.p() == u.b,
                 [&] { return str(u); });
         }
       }},
      {"correspondence.boundary_compatibility", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto b = g_boundaries(ctx, green_of_u(ctx, u));
           const auto bb = b_boundaries(ctx, u);
           const auto top = green_of_u(ctx, bb.top_rim);
           const auto simple = green_of_u(ctx, bb.simple_rim);
           check((b.left == top && b.right == simple) || (b.left == simple && b.right == top),
                 [&] { return str(u); });
         }
       }},
      {"correspondence.hook_alignment", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int i : {0, 1}) {
           std::set<WalkLabel> hooks, image;
           for (const auto& h : g_hooks(ctx, i)) hooks.insert(h.walk);
           for (int a = i; a <= ctx.p() - 2; a += 2) {
             image.insert(green_of_u(ctx, ULabel{a, 1}));
             image.insert(green_of_u(ctx, ULabel{a, ctx.p() - 1}));
           }
           check(hooks == image, [&] { return "block " + std::to_string(i); });
         }
       }},
      {"correspondence.flag_table_unique", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& w : all_canonical(ctx)) {
           if (w.length < 2) continue;
           WalkLabel v = w;
           if (v.start > 0 && v.start + v.length == ctx.p() - 1) {
             v = WalkLabel{v.block, 0, v.length, reversed_sign(v.length, v.sign)};
           }
           const auto rows = matching_rows(flags_of(ctx, v));
           check(rows.size() == 1, [&] { return str(w) + " matches " + std::to_string(rows.size()) + " rows"; });
         }
       }},
      {"indres.ind_dimension", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int a = 0; a <= ctx.p() - 2; ++a) {
           for (int b = 1; b <= ctx.p(); ++b) {
             const ULabel u{a, b};
             Multiplicity fd = 0;
             for (const auto& [t, n] : ell_vector(ctx, u)) fd += t * n;
             const auto d = g_dim(ctx, ind_u(ctx, u));
             check(d == (ctx.p() + 1LL) * b && fd == d, [&] { return str(u); });
           }
         }
       }},
      {"indres.res_dimension", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& w : all_canonical(ctx)) {
           check(res_walk(ctx, w).dim() == walk_dim(ctx, w), [&] { return str(w); });
         }
         for (int t = 1; t <= ctx.p(); ++t) {
           check(res_projective_g(ctx, t).dim() == projective_cover_dim(ctx, t),
                 [&] { return "P(" + std::to_string(t) + ")"; });
         }
       }},
      {"indres.regular_module", false,
       [](const PrimeContext& ctx, Check& check) {
         const auto rep = induced_regular_check(ctx);
         check(rep.ok(), [&] { return to_string(rep.induced); });
       }},
      {"indres.induced_simple_factors", false,
       [](const PrimeContext& ctx, Check& check) {
         for (int a = 0; a <= ctx.p() - 2; ++a) {
           check(ell_vector(ctx, ULabel{a, 1}) == ind_simple_b_factors(ctx, a), [&] { return std::to_string(a); });
         }
       }},
      {"indres.restriction_contains_source", false,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto r = res_g(ctx, ind_u(ctx, u));
           const auto np = r.nonprojective_part(ctx);
           check(np.mult.count(u) == 1 && np.mult.at(u) >= 1, [&] { return str(u); });
         }
       }},
      {"indres.lift_roundtrip", false,
       [](const PrimeContext& ctx, Check& check) {
         std::mt19937_64 rng(77 + ctx.p());
         const auto walks = all_canonical(ctx);
         std::uniform_int_distribution<std::size_t> pick(0, walks.size() - 1);
         std::uniform_int_distribution<int> tpick(1, ctx.p());
         std::uniform_int_distribution<int> count(0, 3);
         std::uniform_int_distribution<int> mult(1, 3);
         for (int trial = 0; trial < 1000; ++trial) {
           GDecomposition d;
           for (int k = count(rng); k > 0; --k) d.add_walk(walks[pick(rng)], mult(rng));
           for (int k = count(rng); k > 0; --k) d.add_projective(tpick(rng), mult(rng));
           const auto back =
               lift_decomposition(ctx, g_factors(ctx, d), res_g(ctx, d).nonprojective_part(ctx));
           check(back == d, [&] { return to_string(d) + " -> " + to_string(back); });
         }
       }},
      {"oracle.homomorphism", true,
       [](const PrimeContext& ctx, Check& check) {
         for (int t = 1; t <= ctx.p(); ++t) {
           const auto v = oracle::build_simple_g(ctx, t);
           oracle::check_homomorphism(ctx, v, 100, 5 + t);
           check(true, [] { return std::string(); });
         }
         const auto m = oracle::induce(ctx, oracle::build_u(ctx, ULabel{0, 2}));
         oracle::check_homomorphism(ctx, m, 100, 99);
         check(true, [] { return std::string(); });
       }},
      {"oracle.simple_restriction", true,
       [](const PrimeContext& ctx, Check& check) {
         for (int t = 1; t <= ctx.p(); ++t) {
           BDecomposition expect;
           expect.add(res_simple_g(ctx, t));
           const auto got = oracle::decompose_b_module(ctx, oracle::restrict(ctx, oracle::build_simple_g(ctx, t)));
           check(got == expect, [&] { return "V_" + std::to_string(t) + " -> " + to_string(got); });
         }
       }},
      {"oracle.simple_brauer_factors", true,
       [](const PrimeContext& ctx, Check& check) {
         for (int t = 1; t <= ctx.p(); ++t) {
           const auto f = oracle::brauer_factors_g(ctx, oracle::build_simple_g(ctx, t));
           check(f == std::map<int, Multiplicity>{{t, 1}}, [&] { return "V_" + std::to_string(t); });
         }
       }},
      {"oracle.induced_brauer_factors", true,
       [](const PrimeContext& ctx, Check& check) {
         for (int a = 0; a <= ctx.p() - 2; ++a) {
           for (int b = 1; b <= ctx.p(); ++b) {
             const ULabel u{a, b};
             const auto f = oracle::brauer_factors_g(ctx, oracle::induce(ctx, oracle::build_u(ctx, u)));
             check(f == ell_vector(ctx, u), [&] { return str(u); });
           }
         }
       }},
      {"oracle.res_ind_end_to_end", true,
       [](const PrimeContext& ctx, Check& check) {
         for (int a = 0; a <= ctx.p() - 2; ++a) {
           for (int b = 1; b <= ctx.p(); ++b) {
             const ULabel u{a, b};
             const auto m = oracle::induce(ctx, oracle::build_u(ctx, u));
             const auto got = oracle::decompose_b_module(ctx, oracle::restrict(ctx, m));
             const auto expect = res_g(ctx, ind_u(ctx, u));
             check(got == expect, [&] { return str(u) + ": oracle " + to_string(got) + ", formula " + to_string(expect); });
             if (b == ctx.p()) {
               check(got.nonprojective_part(ctx).empty(), [&] { return str(u) + " not projective"; });
             }
           }
         }
       }},
      {"oracle.top_socle", true,
       [](const PrimeContext& ctx, Check& check) {
         std::vector<oracle::GMatrixModule> simples;
         for (int t = 1; t <= ctx.p(); ++t) simples.push_back(oracle::build_simple_g(ctx, t));
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto m = oracle::induce(ctx, oracle::build_u(ctx, u));
           const auto w = green_of_u(ctx, u);
           std::map<int, Multiplicity> soc, top;
           if (w.length == 1) {
             soc = top = walk_factors(ctx, w);
           } else {
             const auto ts = walk_top_socle(ctx, w);
             soc = ts.socle;
             top = ts.top;
           }
           for (const auto& [t, n] : ind_u(ctx, u).proj) {
             soc[t] += n;
             top[t] += n;
           }
           for (int t = 1; t <= ctx.p(); ++t) {
             const int hs = oracle::hom_dim(ctx, simples[t - 1], m);
             const int ht = oracle::hom_dim(ctx, m, simples[t - 1]);
             check(hs == soc[t] && ht == top[t], [&] { return str(u) + " at V_" + std::to_string(t); });
           }
         }
       }},
      {"oracle.transversal_independence", true,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto bm = oracle::build_u(ctx, u);
           const auto m1 = oracle::induce(ctx, bm, oracle::Transversal::Standard);
           const auto m2 = oracle::induce(ctx, bm, oracle::Transversal::Alternative);
           check(oracle::decompose_b_module(ctx, oracle::restrict(ctx, m1)) ==
                         oracle::decompose_b_module(ctx, oracle::restrict(ctx, m2)) &&
                     oracle::brauer_factors_g(ctx, m1) == oracle::brauer_factors_g(ctx, m2),
                 [&] { return str(u); });
         }
       }},
      {"oracle.decompose_stability", true,
       [](const PrimeContext& ctx, Check& check) {
         for (const auto& u : nonprojective_ulabels(ctx)) {
           const auto d = oracle::decompose_b_module(ctx, oracle::restrict(ctx, oracle::induce(ctx, oracle::build_u(ctx, u))));
           std::vector<oracle::BMatrixModule> parts;
           for (const auto& [v, n] : d.mult) {
             for (Multiplicity k = 0; k < n; ++k) parts.push_back(oracle::build_u(ctx, v));
           }
           check(oracle::decompose_b_module(ctx, oracle::direct_sum(ctx, parts)) == d, [&] { return str(u); });
         }
       }},
  };
  return inv;
}

}  // namespace

std::vector<std::string> invariant_names(bool oracle) {
  std::vector<std::string> out;
  for (const auto& inv : registry()) {
    if (!inv.oracle || oracle) out.emplace_back(inv.name);
  }
  return out;
}

InvariantResult run_invariant(const std::string& name, int p) {
  for (const auto& inv : registry()) {
    if (name != inv.name) continue;
    InvariantResult r;
    r.name = name;
    r.p = p;
    try {
      const PrimeContext ctx(p);
      Check check(r);
      inv.body(ctx, check);
    } catch (const std::exception& e) {
      r.pass = false;
      r.counterexamples.push_back(std::string("exception: ") + e.what());
    }
    return r;
  }
  throw DomainError("unknown invariant '" + name + "'");
}

std::vector<InvariantResult> run_verify(const VerifyOptions& opts) {
  const auto names = invariant_names(opts.oracle);
  std::vector<std::pair<int, std::string>> tasks;
  for (int p : opts.primes) {
    PrimeContext check_prime(p);
    for (const auto& n : names) tasks.emplace_back(p, n);
  }
  std::vector<InvariantResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      results[k] = run_invariant(tasks[k].second, tasks[k].first);
    }
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace sl2green
