#include "sl2green/gtree.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "sl2green/borel.hpp"
#include "sl2green/correspondence.hpp"

namespace sl2green {

namespace {

void require_block(int i) {
  if (i != 0 && i != 1) throw DomainError("block index must be 0 or 1");
}

int ind(int lo, int hi, int j) { return (lo <= j && j <= hi) ? 1 : 0; }

// Position x steps from the leaf end of the doubled-back line 0..p-1.
int fold(const PrimeContext& ctx, int x) { return std::min(x, ctx.p() - 1 - x); }

}  // namespace

BrauerTreeG brauer_tree_g(const PrimeContext& ctx, int i) {
  require_block(i);
  BrauerTreeG tree;
  tree.block = i;
  for (int j = 1; j <= ctx.half(); ++j) tree.edges.push_back(edge_to_simple(ctx, i, j).t);
  tree.exceptional = ctx.half() + 1;
  return tree;
}

GSimpleLabel edge_to_simple(const PrimeContext& ctx, int i, int j) {
  require_block(i);
  if (j < 1 || j > ctx.half()) {
    throw DomainError("edge index j = " + std::to_string(j) + " outside [1, " +
                      std::to_string(ctx.half()) + "]");
  }
  const bool odd = j % 2 == 1;
  if (i == 0) return GSimpleLabel{odd ? j : ctx.p() - j};
  return GSimpleLabel{odd ? ctx.p() - j : j};
}

std::pair<int, int> simple_to_edge(const PrimeContext& ctx, int t) {
  const int blk = g_block_of_simple(ctx, t);
  if (blk == 2) throw DomainError("V_p lies in the semisimple block and has no tree edge");
  const int j = std::min(t, ctx.p() - t);
  if (edge_to_simple(ctx, blk, j).t != t) throw InternalError("simple_to_edge: parity rule broken");
  return {blk, j};
}

WalkExpansion expand_walk(const PrimeContext& ctx, const WalkLabel& w) {
  check_walk_ranges(ctx, w.block, w.start, w.length, w.sign);
  WalkExpansion out;
  out.vertices.push_back(fold(ctx, w.start) + 1);
  for (int k = 1; k <= w.length; ++k) {
    out.edges.push_back(std::min(w.start + k, ctx.p() - (w.start + k)));
    out.vertices.push_back(fold(ctx, w.start + k) + 1);
  }
  return out;
}

int L(const PrimeContext& ctx, int i, int l, int s) {
  check_walk_ranges(ctx, i, l, s, -1);
  const int p = ctx.p();
  const int sg = (i == 0) ? 1 : -1;  // (-1)^i
  int v;
  if (l % 2 == 1 && s % 2 == 1) {
    v = (1 - i) * p - sg * (2 * l + s + 1) / 2;
  } else if (l % 2 == 0 && s % 2 == 0) {
    v = (1 - i) * p - sg * s / 2;
  } else if (l % 2 == 1) {
    v = i * p + sg * s / 2;
  } else {
    v = i * p + sg * (2 * l + s + 1) / 2;
  }
  if (v < 1 || v > p - 1) {
    throw InternalError("L(" + std::to_string(i) + "," + std::to_string(l) + "," +
                        std::to_string(s) + ") = " + std::to_string(v) + " out of [1, p-1]");
  }
  return v;
}

long long walk_dim(const PrimeContext& ctx, const WalkLabel& w) {
  long long d = 0;
  for (int j : expand_walk(ctx, w).edges) d += edge_to_simple(ctx, w.block, j).t;
  return d;
}

std::map<int, Multiplicity> walk_factors(const PrimeContext& ctx, const WalkLabel& w) {
  std::map<int, Multiplicity> out;
  for (int j : expand_walk(ctx, w).edges) ++out[edge_to_simple(ctx, w.block, j).t];
  return out;
}

TopSocle walk_top_socle(const PrimeContext& ctx, const WalkLabel& w) {
  if (w.length < 2) throw DomainError("walk_top_socle: a simple walk is its own top and socle");
  const auto ex = expand_walk(ctx, w);
  TopSocle out;
  for (std::size_t k = 0; k < ex.edges.size(); ++k) {
    const bool odd_position = k % 2 == 0;
    const int t = edge_to_simple(ctx, w.block, ex.edges[k]).t;
    const bool on_top = (w.sign == 1) == odd_position;
    ++(on_top ? out.top : out.socle)[t];
  }
  return out;
}

ProjectiveStructure projective_structure(const PrimeContext& ctx, int t) {
  g_block_of_simple(ctx, t);
  const int p = ctx.p();
  ProjectiveStructure ps;
  ps.t = t;
  if (t == p) {
    ps.layers = {{p}};
  } else if (t == 1) {
    ps.layers = {{1}, {p - 2}, {1}};
  } else {
    std::vector<int> heart{p + 1 - t};
    if (p - 1 - t >= 1) heart.push_back(p - 1 - t);
    ps.layers = {{t}, heart, {t}};
  }
  for (const auto& layer : ps.layers) {
    for (int u : layer) {
      ps.dim += u;
      ++ps.alpha[u];
    }
  }
  if (ps.dim != projective_cover_dim(ctx, t)) {
    throw InternalError("projective_structure: dimension of P(" + std::to_string(t) + ") is off");
  }
  return ps;
}

const GCartan& g_cartan(const PrimeContext& ctx, int i) {
  require_block(i);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GCartan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{ctx.p(), i}];
  if (slot) return *slot;

  const int n = ctx.half();
  const int p = ctx.p();
  auto c = std::make_unique<GCartan>();
  c->block = i;
  c->B.assign(n, std::vector<long long>(n, 0));
  for (int r = 0; r < n; ++r) {
    c->B[r][r] = 2;
    if (r + 1 < n) c->B[r][r + 1] = c->B[r + 1][r] = 1;
  }
  c->B[n - 1][n - 1] = 3;

  // Column j of B is the factor vector of the projective cover of edge j.
  for (int col = 0; col < n; ++col) {
    const auto ps = projective_structure(ctx, edge_to_simple(ctx, i, col + 1).t);
    for (int r = 0; r < n; ++r) {
      const int t = edge_to_simple(ctx, i, r + 1).t;
      const auto it = ps.alpha.find(t);
      const long long m = it == ps.alpha.end() ? 0 : it->second;
      if (m != c->B[r][col]) throw InternalError("g_cartan: B disagrees with projective covers");
    }
  }

  c->Gamma.assign(n, std::vector<Rational>(n));
  for (int r = 1; r <= n; ++r) {
    for (int col = 1; col <= n; ++col) {
      const Rational v = Rational(std::min(r, col)) - Rational(2 * r * col, p);
      c->Gamma[r - 1][col - 1] = ((r + col) % 2 == 0) ? v : Rational(-v);
    }
  }
  if (inverse(to_rational(c->B)) != c->Gamma) {
    throw InternalError("g_cartan: closed-form Gamma differs from the inverse of B");
  }
  slot = std::move(c);
  return *slot;
}

std::vector<GHook> g_hooks(const PrimeContext& ctx, int i) {
  require_block(i);
  const int p = ctx.p();
  const WalkLabel ref{i, 0, 1, -1};
  const int ref_boundary = static_cast<int>(walk_dim(ctx, ref) % p);

  std::vector<WalkLabel> labels{ref};
  for (const auto& w : canonical_walks(ctx, i)) {
    if (w.length == 2) labels.push_back(w);
  }

  std::vector<GHook> out;
  for (const auto& w : labels) {
    GHook h;
    h.walk = w;
    h.simple = w.length == 1;
    h.boundary = static_cast<int>(walk_dim(ctx, w) % p);
    if (h.boundary != 1 && h.boundary != p - 1) {
      throw InternalError("g_hooks: " + to_string(w) + " has dimension not congruent to +-1");
    }
    if (h.simple) {
      h.distance = 0;
    } else if (h.boundary == ref_boundary) {
      if (w.start % 2 != 1) throw InternalError("g_hooks: even start on the reference boundary");
      h.distance = w.sign == 1 ? w.start + 1 : p - 2 - w.start;
    } else {
      if (w.start % 2 != 0) throw InternalError("g_hooks: odd start off the reference boundary");
      if (i == 0) {
        h.distance = w.sign == 1 ? w.start + 2 : p - 1 - w.start;
      } else {
        h.distance = w.sign == 1 ? w.start : p - 3 - w.start;
      }
    }
    h.distance = ctx.reduce_weight(h.distance);
    out.push_back(h);
  }
  if (static_cast<int>(out.size()) != p - 1) {
    throw InternalError("g_hooks: found " + std::to_string(out.size()) + " hooks, expected p-1");
  }
  return out;
}

namespace {

WalkLabel left_boundary(const PrimeContext& ctx, int i, int l, int s, int eps) {
  if (s == 1 || eps == 1) {
    return l == 0 ? canonicalize_walk(ctx, i, 0, 1, -1) : canonicalize_walk(ctx, i, l - 1, 2, 1);
  }
  return canonicalize_walk(ctx, i, l, 2, -1);
}

}  // namespace

GBoundaries g_boundaries(const PrimeContext& ctx, const WalkLabel& w) {
  check_walk_ranges(ctx, w.block, w.start, w.length, w.sign);
  const int i = w.block, l = w.start, s = w.length;
  const int delta = reversed_sign(s, w.sign);
  GBoundaries out;
  out.left = left_boundary(ctx, i, l, s, w.sign);
  if (l + s <= ctx.half()) {
    if (s == 1) {
      out.right = canonicalize_walk(ctx, i, l, 2, -1);
    } else if (delta == -1) {
      out.right = canonicalize_walk(ctx, i, l + s - 2, 2, 1);
    } else {
      out.right = canonicalize_walk(ctx, i, l + s - 1, 2, -1);
    }
  } else {
    out.right = left_boundary(ctx, i, ctx.p() - 1 - l - s, s, delta);
  }
  return out;
}

Multiplicity c_abt_table(const PrimeContext& ctx, int a, int b, int t) {
  const int p = ctx.p();
  const int h = ctx.half();
  if (a < 0 || a > p - 2) throw DomainError("c_abt: a = " + std::to_string(a) + " outside [0, p-2]");
  if (b < 1 || b > p - 1) throw DomainError("c_abt: b = " + std::to_string(b) + " outside [1, p-1]");
  if (t < 1 || t > p) throw DomainError("c_abt: t = " + std::to_string(t) + " outside [1, p]");
  if (t == p || (t - a) % 2 == 0) return 0;
  const int j = t <= h ? t : p - t;
  if (a <= 1) {
    if (b <= h) return ind(1, 2 * b + a - 1, j) + ind(p - a - 2 * b + 1, p - 1, j);
    return ind(1, 2 * (p - b) - a, j) + ind(a + 2 * b - p, p - 1, j);
  }
  if (a <= h) {
    if (2 * b <= p - a) return ind(a, a - 1 + 2 * b, j) + ind(p - a - 2 * b + 1, p - 1, j);
    if (b <= p - a) return ind(a, 2 * (p - b) - a, j) + ind(a + 2 * b - p, p - 1, j);
    if (2 * b <= 2 * p - a - 1) return ind(2 * (p - b) - a, a, j) + ind(p - a, p - 1, j);
    return ind(2 * (b - p) + a + 1, a, j) + ind(p - a, p - 1, j);
  }
  if (2 * b <= p - a) return ind(p - a - 2 * b + 1, p - a, j) + ind(a, p - 1, j);
  if (b <= p - a) return ind(a + 2 * b - p, p - a, j) + ind(a, p - 1, j);
  if (2 * b <= 2 * p - a - 1) return ind(p - a, a + 2 * b - p, j) + ind(2 * (p - b) - a, p - 1, j);
  return ind(p - a, 2 * (p - b) - a - 1 + p, j) + ind(2 * (b - p) + a + 1, p - 1, j);
}

Multiplicity c_abt_walk(const PrimeContext& ctx, int a, int b, int t) {
  if (t < 1 || t > ctx.p()) throw DomainError("c_abt: t = " + std::to_string(t) + " outside [1, p]");
  const auto w = green_of_u(ctx, validate_ulabel(ctx, a, b));
  const auto f = walk_factors(ctx, w);
  const auto it = f.find(t);
  return it == f.end() ? 0 : it->second;
}

Multiplicity c_abt(const PrimeContext& ctx, int a, int b, int t) {
  const auto x = c_abt_table(ctx, a, b, t);
  const auto y = c_abt_walk(ctx, a, b, t);
  if (x != y) {
    throw InternalError("c_abt(" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(t) + "): interval table gives " + std::to_string(x) +
                        ", walk expansion gives " + std::to_string(y));
  }
  return x;
}

long long g_dim(const PrimeContext& ctx, const GDecomposition& d) {
  long long total = 0;
  for (const auto& [w, n] : d.walks) total += n * walk_dim(ctx, w);
  for (const auto& [t, n] : d.proj) total += n * projective_cover_dim(ctx, t);
  return total;
}

std::map<int, Multiplicity> g_factors(const PrimeContext& ctx, const GDecomposition& d) {
  std::map<int, Multiplicity> out;
  for (const auto& [w, n] : d.walks) {
    for (const auto& [t, m] : walk_factors(ctx, w)) out[t] += n * m;
  }
  for (const auto& [t, n] : d.proj) {
    for (const auto& [u, m] : projective_structure(ctx, t).alpha) out[u] += n * m;
  }
  return out;
}

}  // namespace sl2green
