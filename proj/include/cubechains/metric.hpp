#ifndef CUBECHAINS_METRIC_HPP
#define CUBECHAINS_METRIC_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cubechains/cube_map.hpp"

namespace cubechains {

// A point of the solid cube [0,1]^n.
struct Point {
  std::vector<double> coords;
  int dim() const { return int(coords.size()); }
  bool operator==(const Point&) const = default;
};

// Distances take values in [0, infinity]; incomparable pairs are infinite.
using ExtendedDistance = double;
inline constexpr ExtendedDistance kInfiniteDistance =
    std::numeric_limits<double>::infinity();

// Directed L1 (Lawvere) metric: sum of coordinate rises when x <= y in the
// product order, infinity otherwise.  Restricts to vertex_d1 on vertices.
ExtendedDistance d1(const Point& x, const Point& y);

inline Point vertex_point(VertexMask v, int dim) {
  Point p;
  p.coords.resize(dim);
  for (int i = 0; i < dim; ++i) p.coords[i] = double((v >> i) & 1);
  return p;
}

// The extension of a cotransverse endomorphism to the solid cube:
// T(f)_i(x) = max over f_i^{-1}(1) of min{x_k | epsilon_k = 1}, with
// max over the empty set taken to be 0.  Input must be an endomorphism.
Point t_eval(const CubeMap& endo, const Point& x);

// T for arbitrary cotransverse maps via the unique factorization:
// T(f) = T(phi) o T(psi), where T of a box map inserts the constant
// coordinates.
Point t_eval_general(const CubeMap& f, const Point& x);

struct MetricCheckReport {
  int max_dim = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  long long vertex_checks = 0, functor_checks = 0, nonexpansive_checks = 0,
            monotone_checks = 0;
  int violations = 0;
  double max_error = 0.0;
  std::string first_violation;
  bool ok() const { return violations == 0; }
};

// Property suite over all cotransverse endomorphisms of dimension <= max_dim:
// vertex agreement (exhaustive), functoriality, d1 non-expansiveness and
// monotonicity on seeded random points, absolute tolerance 1e-12.
MetricCheckReport run_metric_checks(int max_dim, int samples, std::uint64_t seed);

}  // namespace cubechains

#endif
