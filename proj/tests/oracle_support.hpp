// Independent expected values for unit and acceptance tests, computed with the
// matrix oracle rather than with the closed formulas under test.
#pragma once

#include <map>
#include <string>
#include <stdexcept>
#include <vector>

#include "sl2green/exact.hpp"
#include "sl2green/labels.hpp"
#include "sl2green/oracle.hpp"

namespace sl2green::testing {

/// Multiplicity of S_c in U_{a,b}: dimension of the zeta^c eigenspace of lambda.
inline Multiplicity oracle_theta(const PrimeContext& ctx, int a, int b, int c) {
  const auto m = oracle::build_u(ctx, ULabel{a, b});
  long long z = 1;
  for (int k = 0; k < c; ++k) z = z * ctx.zeta() % ctx.p();
  const auto shifted = m.lambda - oracle::FpMatrix::identity(ctx.p(), m.dim()).scaled(z);
  return m.dim() - shifted.rank();
}

/// Brute-force count of j in [0, b) with a + 2j = c mod (p-1).
inline Multiplicity enumerate_theta(const PrimeContext& ctx, int a, int b, int c) {
  Multiplicity n = 0;
  for (int j = 0; j < b; ++j) n += ctx.reduce_weight(a + 2LL * j) == c;
  return n;
}

inline oracle::FpMatrix kronecker(const oracle::FpMatrix& x, const oracle::FpMatrix& y, int p) {
  oracle::FpMatrix out(p, x.rows() * y.rows(), x.cols() * y.cols());
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c)
      for (int s = 0; s < y.rows(); ++s)
        for (int d = 0; d < y.cols(); ++d)
          out.at(r * y.rows() + s, c * y.cols() + d) = static_cast<int>(1LL * x.at(r, c) * y.at(s, d) % p);
  return out;
}

inline oracle::GMatrixModule tensor(const PrimeContext& ctx, const oracle::GMatrixModule& x,
                                    const oracle::GMatrixModule& y) {
  const int p = ctx.p();
  return {kronecker(x.g, y.g, p), kronecker(x.lambda, y.lambda, p), kronecker(x.w, y.w, p)};
}

struct ProjectiveSample {
  std::string name;
  std::map<int, Multiplicity> head;     // Hom(X, V_t)
  std::map<int, Multiplicity> factors;  // Brauer composition factors
};

/// Ind(U_{a,p}) (x) V_s is projective for every a and every s < max_s. Its head
/// multiplicities come from Hom into the simples and its factors from Brauer
/// characters, so a Cartan matrix must send the head vector to the factor vector.
inline std::vector<ProjectiveSample> oracle_projective_samples(const PrimeContext& ctx, int max_s) {
  std::vector<ProjectiveSample> out;
  std::vector<oracle::GMatrixModule> simples;
  for (int t = 1; t <= ctx.p(); ++t) simples.push_back(oracle::build_simple_g(ctx, t));
  for (int s = 1; s <= max_s; ++s) {
    for (int a = 0; a <= ctx.p() - 2; ++a) {
      auto x = oracle::induce(ctx, oracle::build_u(ctx, ULabel{a, ctx.p()}));
      if (s > 1) x = tensor(ctx, x, simples[s - 1]);
      ProjectiveSample sample{"Ind U(" + std::to_string(a) + "," + std::to_string(ctx.p()) + ") x V" +
                                  std::to_string(s),
                              {}, oracle::brauer_factors_g(ctx, x)};
      for (int t = 1; t <= ctx.p(); ++t) {
        const int n = oracle::hom_dim(ctx, x, simples[t - 1]);
        if (n) sample.head[t] = n;
      }
      out.push_back(std::move(sample));
    }
  }
  return out;
}

/// Multiplicities of the simples in the head of a G-module.
inline std::map<int, Multiplicity> oracle_top(const PrimeContext& ctx, const oracle::GMatrixModule& x) {
  std::map<int, Multiplicity> out;
  for (int t = 1; t <= ctx.p(); ++t) {
    const int n = oracle::hom_dim(ctx, x, oracle::build_simple_g(ctx, t));
    if (n) out[t] = n;
  }
  return out;
}

inline std::map<int, Multiplicity> oracle_socle(const PrimeContext& ctx, const oracle::GMatrixModule& x) {
  std::map<int, Multiplicity> out;
  for (int t = 1; t <= ctx.p(); ++t) {
    const int n = oracle::hom_dim(ctx, oracle::build_simple_g(ctx, t), x);
    if (n) out[t] = n;
  }
  return out;
}

}  // namespace sl2green::testing
