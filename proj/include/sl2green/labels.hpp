#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2green {

/// Raised for out-of-range parameters and malformed labels.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when user-supplied module data cannot come from an actual module
/// (a projective solver produced a negative or non-integral multiplicity).
class InconsistentData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a library invariant is violated. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Multiplicity = std::int64_t;

/// The odd prime p together with the constants every formula needs.
class PrimeContext {
 public:
  explicit PrimeContext(int p);

  int p() const { return p_; }
  /// Smallest primitive root modulo p.
  int zeta() const { return zeta_; }
  /// (p-1)/2: number of simples (edges) per non-semisimple block.
  int half() const { return half_; }
  /// +1 iff p = 1 (mod 4).
  int vareps() const { return vareps_; }

  /// Reduces any integer into [0, p-2].
  int reduce_weight(long long a) const;
  /// Reduces any integer into [0, p-1].
  int mod_p(long long x) const;

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

 private:
  int p_;
  int zeta_;
  int half_;
  int vareps_;
};

bool is_prime(long long n);
/// Smallest primitive root modulo the prime p.
int primitive_root(int p);
/// Multiplicative order of x modulo p (x coprime to p).
int multiplicative_order(long long x, int p);

/// U_{a,b}: the uniserial F[B]-module of dimension b whose composition
/// factors are S_a, S_{a+2}, ... from the socle up.
struct ULabel {
  int a = 0;
  int b = 1;

  bool is_projective(const PrimeContext& ctx) const { return b == ctx.p(); }
  int block() const { return a % 2; }

  friend auto operator<=>(const ULabel&, const ULabel&) = default;
};

/// M(i,l,s,eps): a walk of length s on Brauer tree i starting at vertex l+1.
struct WalkLabel {
  int block = 0;
  int start = 0;
  int length = 1;
  int sign = -1;

  friend auto operator<=>(const WalkLabel&, const WalkLabel&) = default;
};

/// V_t, the simple F[G]-module of dimension t.
struct GSimpleLabel {
  int t = 1;

  friend auto operator<=>(const GSimpleLabel&, const GSimpleLabel&) = default;
};

/// Index of the block of F[G] containing V_t: 0, 1, or 2 for the semisimple one.
int g_block_of_simple(const PrimeContext& ctx, int t);

/// Reduces a and checks b in [1, p].
ULabel validate_ulabel(const PrimeContext& ctx, long long a, long long b);

/// Checks the raw ranges of a walk quadruple without canonicalizing.
void check_walk_ranges(const PrimeContext& ctx, int i, int l, int s, int eps);
/// True iff the quadruple is within range and already in canonical form.
bool is_canonical(const PrimeContext& ctx, const WalkLabel& w);
/// Canonical representative of the isomorphism class of M(i,l,s,eps).
WalkLabel canonicalize_walk(const PrimeContext& ctx, int i, int l, int s, int eps);
WalkLabel canonicalize_walk(const PrimeContext& ctx, const WalkLabel& w);

/// True when the walk runs into the exceptional vertex and doubles back.
bool is_type_two(const PrimeContext& ctx, const WalkLabel& w);

/// The same walk read from its other end: (i, p-1-l-s, s, delta).
/// Only defined for walks that loop (type II) or end at the leaf vertex.
WalkLabel reverse_walk(const PrimeContext& ctx, const WalkLabel& w);

/// delta: the sign a walk carries after reversal.
int reversed_sign(int s, int eps);

/// Every canonical walk of block i in a fixed (sorted) order.
std::vector<WalkLabel> canonical_walks(const PrimeContext& ctx, int i);
/// Every non-projective ULabel, sorted.
std::vector<ULabel> nonprojective_ulabels(const PrimeContext& ctx);

/// (p-1)^2/2; throws InternalError if the label enumeration disagrees.
int count_nonprojective_per_block(const PrimeContext& ctx);

/// Dimension of the projective cover P_{V_t}.
int projective_cover_dim(const PrimeContext& ctx, int t);

struct BDecomposition {
  std::map<ULabel, Multiplicity> mult;

  void add(const ULabel& u, Multiplicity n = 1);
  void add(const BDecomposition& other, Multiplicity scale = 1);
  long long dim() const;
  bool empty() const { return mult.empty(); }
  /// Summands with b < p.
  BDecomposition nonprojective_part(const PrimeContext& ctx) const;

  friend bool operator==(const BDecomposition&, const BDecomposition&) = default;
};

struct GDecomposition {
  std::map<WalkLabel, Multiplicity> walks;
  /// t -> multiplicity of P_{V_t}.
  std::map<int, Multiplicity> proj;

  void add_walk(const WalkLabel& w, Multiplicity n = 1);
  void add_projective(int t, Multiplicity n = 1);
  void add(const GDecomposition& other, Multiplicity scale = 1);
  bool empty() const { return walks.empty() && proj.empty(); }

  friend bool operator==(const GDecomposition&, const GDecomposition&) = default;
};

std::string to_string(const ULabel& u);
std::string to_string(const WalkLabel& w);
std::string to_string(const GSimpleLabel& v);
std::string to_string(const BDecomposition& d);
std::string to_string(const GDecomposition& d);

}  // namespace sl2green
