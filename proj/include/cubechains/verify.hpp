#ifndef CUBECHAINS_VERIFY_HPP
#define CUBECHAINS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cubechains/json_io.hpp"

namespace cubechains {

struct VerifyConfig {
  int max_dim = 3;
  int truncation = 4;  // nerve degree cap D
  std::uint64_t seed = 0;
  int samples = 1000;
  long long simplex_budget = 2'000'000;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double millis = 0.0;
  std::string detail;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Runs the structural checks of the verification suite: enumeration
// oracles, unique factorization, thickness of the named categories, the
// greatest-thick bound, the metric extension properties, chain-category
// shapes, the free/precubical chain equivalence shadow with comma initial
// objects, identity-only witness endomorphisms over box, the parallel
// composition comparison, and infrastructure (boundary-squared, JSON
// stability).
VerifyReport verify_paper(const VerifyConfig& cfg);

Json to_json(const VerifyReport& rep);

// Corpus fixtures shared by the verification suite and the tests.
PrecubicalSet grid_with_two_holes();
// Category generated by the cofaces and the single composite map
// delta_3^1 o gamma_1; the standard non-thick example.
CubeCategory non_thick_fixture(int max_dim);

}  // namespace cubechains

#endif
