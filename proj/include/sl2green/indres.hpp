#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2green/labels.hpp"

namespace sl2green {

/// t -> composition-factor multiplicity of V_t.
using FactorVectorG = std::map<int, Multiplicity>;

ULabel res_simple_g(const PrimeContext& ctx, int t);
FactorVectorG ind_simple_b_factors(const PrimeContext& ctx, int a);

/// Multiplicity of V_t in Ind(U_{a,b}).
Multiplicity ell(const PrimeContext& ctx, int a, int b, int t);
FactorVectorG ell_vector(const PrimeContext& ctx, const ULabel& u);

/// Projective F[G]-module with the given composition factors.
/// Throws InconsistentData when alpha is not the factor vector of a projective.
GDecomposition decompose_projective_g(const PrimeContext& ctx, const FactorVectorG& alpha);

GDecomposition ind_u(const PrimeContext& ctx, const ULabel& u);
GDecomposition ind_b(const PrimeContext& ctx, const BDecomposition& d);

BDecomposition res_projective_g(const PrimeContext& ctx, int t);
BDecomposition res_walk(const PrimeContext& ctx, const WalkLabel& w);
BDecomposition res_g(const PrimeContext& ctx, const GDecomposition& d);

/// Recovers a G-module from its composition factors and the non-projective
/// part of its restriction. Throws InconsistentData on impossible input.
GDecomposition lift_decomposition(const PrimeContext& ctx, const FactorVectorG& ell_vec,
                                  const BDecomposition& res_mults);

struct RegularCheckReport {
  GDecomposition induced;
  GDecomposition expected;
  bool ok() const { return induced == expected; }
};

/// Sum over a of Ind(U_{a,p}) against the regular module.
RegularCheckReport induced_regular_check(const PrimeContext& ctx);

}  // namespace sl2green
