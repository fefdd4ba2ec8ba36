#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sl2green/exact.hpp"
#include "sl2green/labels.hpp"

namespace sl2green {

/// Line-shaped Brauer tree of block i of F[SL2(F_p)]. Vertices are numbered
/// 1..half+1, edge j joins vertices j and j+1, vertex half+1 is exceptional.
struct BrauerTreeG {
  int block = 0;
  std::vector<int> edges;  // edges[j-1] = t with edge j carrying V_t
  int exceptional = 0;
  int multiplicity = 2;
};

struct WalkExpansion {
  std::vector<int> edges;     // j_1 .. j_s
  std::vector<int> vertices;  // s+1 vertices visited, starting at l+1
};

struct TopSocle {
  std::map<int, Multiplicity> top;     // t -> multiplicity of V_t
  std::map<int, Multiplicity> socle;
};

struct GCartan {
  int block = 0;
  IntMatrix B;
  RationalMatrix Gamma;
};

struct GHook {
  WalkLabel walk;
  bool simple = false;
  int boundary = 1;  // dim mod p, either 1 or p-1
  int distance = 0;  // from the reference hook on the same boundary
};

struct GBoundaries {
  WalkLabel left;
  WalkLabel right;
};

struct ProjectiveStructure {
  int t = 1;
  std::vector<std::vector<int>> layers;  // socle first
  int dim = 0;
  std::map<int, Multiplicity> alpha;     // composition factors
};

BrauerTreeG brauer_tree_g(const PrimeContext& ctx, int i);
GSimpleLabel edge_to_simple(const PrimeContext& ctx, int i, int j);
/// (block, edge) of V_t, t in [1, p-1].
std::pair<int, int> simple_to_edge(const PrimeContext& ctx, int t);

WalkExpansion expand_walk(const PrimeContext& ctx, const WalkLabel& w);
/// dim M(i,l,s,eps) reduced into [1, p-1].
int L(const PrimeContext& ctx, int i, int l, int s);
long long walk_dim(const PrimeContext& ctx, const WalkLabel& w);
std::map<int, Multiplicity> walk_factors(const PrimeContext& ctx, const WalkLabel& w);
TopSocle walk_top_socle(const PrimeContext& ctx, const WalkLabel& w);

const GCartan& g_cartan(const PrimeContext& ctx, int i);

/// The p-1 hooks of block i. The reference hook is V_1 (block 0) or V_{p-1}
/// (block 1) on its own boundary and the correspondent of U_{0,p-1} (block 0)
/// or U_{1,1} (block 1) on the other.
std::vector<GHook> g_hooks(const PrimeContext& ctx, int i);
GBoundaries g_boundaries(const PrimeContext& ctx, const WalkLabel& w);

/// Multiplicity of V_t in the Green correspondent of U_{a,b}, from the interval tables.
Multiplicity c_abt_table(const PrimeContext& ctx, int a, int b, int t);
/// Same quantity read off the expanded walk of green_of_u(U_{a,b}).
Multiplicity c_abt_walk(const PrimeContext& ctx, int a, int b, int t);
/// Both routes; throws InternalError if they disagree.
Multiplicity c_abt(const PrimeContext& ctx, int a, int b, int t);

ProjectiveStructure projective_structure(const PrimeContext& ctx, int t);

long long g_dim(const PrimeContext& ctx, const GDecomposition& d);
/// Composition factors of a G-side decomposition.
std::map<int, Multiplicity> g_factors(const PrimeContext& ctx, const GDecomposition& d);

}  // namespace sl2green
