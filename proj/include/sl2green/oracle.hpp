#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "sl2green/labels.hpp"

namespace sl2green::oracle {

/// Dense matrix over F_p. Vectors are rows; modules act on the right.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, int rows, int cols);

  static FpMatrix identity(int p, int n);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& at(int r, int c) { return d_[static_cast<std::size_t>(r) * cols_ + c]; }
  int at(int r, int c) const { return d_[static_cast<std::size_t>(r) * cols_ + c]; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(long long s) const;
  FpMatrix pow(long long e) const;
  FpMatrix inverse() const;
  int rank() const;
  /// Basis (as rows) of {v : v * this = 0}.
  FpMatrix left_kernel() const;
  FpMatrix hstack(const FpMatrix& o) const;
  FpMatrix vstack(const FpMatrix& o) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> d_;
};

long long inv_mod(long long x, int p);

/// An element [[a,b],[c,d]] of SL2(F_p).
struct SL2 {
  int a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const SL2&, const SL2&) = default;
};

SL2 mul(const PrimeContext& ctx, const SL2& x, const SL2& y);
SL2 inv(const PrimeContext& ctx, const SL2& x);
SL2 gen_g();
SL2 gen_lambda(const PrimeContext& ctx);
SL2 gen_w(const PrimeContext& ctx);
SL2 random_sl2(const PrimeContext& ctx, std::mt19937_64& rng);
std::vector<SL2> all_elements(const PrimeContext& ctx);

struct BMatrixModule {
  FpMatrix g;
  FpMatrix lambda;
  int dim() const { return g.rows(); }
};

struct GMatrixModule {
  FpMatrix g;
  FpMatrix lambda;
  FpMatrix w;
  int dim() const { return g.rows(); }
};

/// Throws InternalError unless g^p = 1, lambda^{p-1} = 1 and lambda g lambda^-1 = g^{zeta^2}.
void check_b_relations(const PrimeContext& ctx, const BMatrixModule& m);

/// rho(b) for b in B, from the generators.
FpMatrix act_b(const PrimeContext& ctx, const BMatrixModule& m, const SL2& b);
/// rho(h) for any h in SL2(F_p), via the Bruhat decomposition h = g^u w b.
FpMatrix act(const PrimeContext& ctx, const GMatrixModule& m, const SL2& h);

/// Checks rho(xy) = rho(x) rho(y) on random pairs; throws InternalError on failure.
void check_homomorphism(const PrimeContext& ctx, const GMatrixModule& m, int pairs,
                        std::uint64_t seed);

/// Action of h on the degree t-1 polynomials, basis x^{t-1-k} y^k, by substitution.
FpMatrix polynomial_action(const PrimeContext& ctx, int t, const SL2& h);
GMatrixModule build_simple_g(const PrimeContext& ctx, int t);
BMatrixModule build_u(const PrimeContext& ctx, const ULabel& u);
BMatrixModule direct_sum(const PrimeContext& ctx, const std::vector<BMatrixModule>& parts);

enum class Transversal { Standard, Alternative };

/// Ind_B^G over the right cosets B\G, one per point of the projective line.
GMatrixModule induce(const PrimeContext& ctx, const BMatrixModule& m,
                     Transversal kind = Transversal::Standard);
BMatrixModule restrict(const PrimeContext& ctx, const GMatrixModule& m);

BDecomposition decompose_b_module(const PrimeContext& ctx, const BMatrixModule& m);
/// Composition factors t -> multiplicity of V_t, from eigenvalue data on p-regular classes.
std::map<int, Multiplicity> brauer_factors_g(const PrimeContext& ctx, const GMatrixModule& m);

/// dim Hom_G(x, y).
int hom_dim(const PrimeContext& ctx, const GMatrixModule& x, const GMatrixModule& y);

}  // namespace sl2green::oracle
