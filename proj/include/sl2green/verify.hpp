#pragma once

#include <string>
#include <vector>

namespace sl2green {

struct InvariantResult {
  std::string name;
  int p = 0;
  bool pass = true;
  long long cases = 0;
  std::vector<std::string> counterexamples;  // at most a handful
};

struct VerifyOptions {
  std::vector<int> primes;
  bool oracle = false;
  int jobs = 1;
};

/// Names of the invariants run for a given option set, in report order.
std::vector<std::string> invariant_names(bool oracle);

/// Runs every invariant for every prime. Results are ordered by (prime, invariant)
/// regardless of the number of worker threads.
std::vector<InvariantResult> run_verify(const VerifyOptions& opts);

/// Runs a single named invariant; throws DomainError for unknown names.
InvariantResult run_invariant(const std::string& name, int p);

}  // namespace sl2green
