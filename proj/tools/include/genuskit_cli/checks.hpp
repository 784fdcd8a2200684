#pragma once

// Named randomized property suites behind `genuskit check`. Every trial draws
// from its own engine seeded by (seed, trial index), so results do not depend
// on the worker count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genuskit/arith.hpp"

namespace genuskit::cli {

/// Unset fields fall back to the suite's own default.
struct CheckOptions {
  std::optional<int> trials;
  std::optional<int> order;
  std::optional<int> max_n;
  std::optional<int> degree_bound;
  std::optional<int> t_bound;
  std::optional<int> weight;
  std::optional<int> max_m;
  std::optional<int> max_d;
  std::optional<Rational> rho;
  std::uint64_t seed = 1;
  int workers = 1;
};

struct CheckCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// mult-identity, comp-inverse, etf-ode, null-reduction, ch-exterior,
/// ch-symmetric, cp-roundtrip.
std::vector<std::string> check_suite_names();

/// Throws DomainError on an unknown suite or non-positive bounds.
std::vector<CheckCase> run_check_suite(std::string_view suite, const CheckOptions& options);

}  // namespace genuskit::cli
