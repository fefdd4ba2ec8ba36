#pragma once

#include <utility>
#include <vector>

#include "sl2green/exact.hpp"
#include "sl2green/labels.hpp"

namespace sl2green {

/// Cartan matrix of the Brauer tree algebra of block i of F[B] and its inverse.
/// Rows and columns are indexed by S_i, S_{i+2}, ..., S_{i+p-3}.
struct BCartan {
  int block = 0;
  IntMatrix gamma;
  RationalMatrix delta;
};

struct AlmostSplitSeq {
  ULabel left;
  std::vector<ULabel> middle;
  ULabel right;
};

/// The two ends of the maximal directed paths through a non-projective U_{a,b}.
struct BBoundaries {
  ULabel top_rim;       // U_{a,p-1}
  int top_distance;     // p-1-b
  ULabel simple_rim;    // S_{a+2(b-1)}
  int simple_distance;  // b-1
};

enum class BRim { Simple, Top };

/// Multiplicity of S_c in U_{a,b}. c outside [0,p-2] gives 0 (c is never reduced).
Multiplicity theta(const PrimeContext& ctx, int a, int b, long long c);

/// Memoized per (p, i); the returned reference stays valid for the program's lifetime.
const BCartan& b_cartan(const PrimeContext& ctx, int i);

ULabel omega2(const PrimeContext& ctx, const ULabel& u);
AlmostSplitSeq almost_split(const PrimeContext& ctx, const ULabel& u);
BBoundaries b_boundaries(const PrimeContext& ctx, const ULabel& u);
/// Length of a minimal directed path between two hooks on the same rim.
int b_hook_distance(const PrimeContext& ctx, int a, int a_prime, BRim kind);

/// Irreducible maps of the stable AR quiver: U_{a,b} -> U_{a,b+1} (b+1 < p) and
/// U_{a,b} -> U_{a+2,b-1} (b > 1).
std::vector<std::pair<ULabel, ULabel>> b_quiver_arrows(const PrimeContext& ctx);
/// Omega^2 orbits on the non-projective labels, each listed from its smallest label.
std::vector<std::vector<ULabel>> omega2_orbits(const PrimeContext& ctx);

/// Composition-factor vector (kappa_{i}, kappa_{i+2}, ...) of the block-i part of d.
std::vector<Multiplicity> b_factor_vector(const PrimeContext& ctx, int i, const BDecomposition& d);

/// Projective F[B]-module of block i with composition-factor vector kappa.
/// Throws InconsistentData if kappa is not the factor vector of a projective module.
BDecomposition decompose_projective_b(const PrimeContext& ctx, int i,
                                      const std::vector<Multiplicity>& kappa);

}  // namespace sl2green
