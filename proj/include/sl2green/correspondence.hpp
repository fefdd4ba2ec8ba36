#pragma once

#include <string>
#include <vector>

#include "sl2green/labels.hpp"

namespace sl2green {

struct FlagTuple {
  int iflag = 0;
  int lflag = 0;
  int sflag = 0;
  int eflag = -1;
  int sumflag = 0;

  friend bool operator==(const FlagTuple&, const FlagTuple&) = default;
};

std::string to_string(const FlagTuple& f);

/// Flags of a walk with s >= 2. The case l+s = (p-1)/2 is assigned sumflag 0.
FlagTuple flags_of(const PrimeContext& ctx, const WalkLabel& w);

/// Indices (0-based) of every row of the correspondent table matching f.
std::vector<int> matching_rows(const FlagTuple& f);

/// Green correspondent of a non-projective U_{a,b}, canonicalized.
WalkLabel green_of_u(const PrimeContext& ctx, const ULabel& u);
/// Inverse direction. The walk is canonicalized first.
ULabel green_of_walk(const PrimeContext& ctx, const WalkLabel& w);

struct BijectionReport {
  int labels = 0;
  int distinct_images = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

BijectionReport verify_bijection(const PrimeContext& ctx);

}  // namespace sl2green
