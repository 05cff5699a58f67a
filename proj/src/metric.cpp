#include "cubechains/metric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cubechains {

namespace {
constexpr double kTol = 1e-12;
}

ExtendedDistance d1(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("d1: dimension mismatch");
  double sum = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    if (x.coords[i] > y.coords[i]) return kInfiniteDistance;
    sum += y.coords[i] - x.coords[i];
  }
  return sum;
}

Point t_eval(const CubeMap& endo, const Point& x) {
  if (endo.src_dim != endo.dst_dim)
    throw std::invalid_argument("t_eval: map must be an endomorphism");
  if (x.dim() != endo.src_dim)
    throw std::invalid_argument("t_eval: point dimension mismatch");
  const int n = endo.src_dim;
  Point out;
  out.coords.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double best = 0.0;  // max over the empty preimage is 0
    for (VertexMask eps = 0; eps < endo.table.size(); ++eps) {
      if (!((endo.table[eps] >> i) & 1)) continue;
      double m = 1.0;
      for (int k = 0; k < n; ++k)
        if ((eps >> k) & 1) m = std::min(m, x.coords[k]);
      best = std::max(best, m);
    }
    out.coords[i] = best;
  }
  return out;
}

Point t_eval_general(const CubeMap& f, const Point& x) {
  if (f.src_dim == f.dst_dim) return t_eval(f, x);
  Factorization fac = factorize(f);
  Point mid = t_eval(fac.psi, x);
  // T of a box map inserts the constant coordinates at their values.
  VertexMask active = active_coordinates(fac.phi);
  VertexMask constants = fac.phi.table.front();
  Point out;
  out.coords.assign(f.dst_dim, 0.0);
  int k = 0;
  for (int j = 0; j < f.dst_dim; ++j) {
    if ((active >> j) & 1)
      out.coords[j] = mid.coords[k++];
    else
      out.coords[j] = double((constants >> j) & 1);
  }
  return out;
}

namespace {

bool points_close(const Point& a, const Point& b, double& err) {
  double e = 0.0;
  for (int i = 0; i < a.dim(); ++i) e = std::max(e, std::fabs(a.coords[i] - b.coords[i]));
  err = e;
  return e <= kTol;
}

}  // namespace

MetricCheckReport run_metric_checks(int max_dim, int samples, std::uint64_t seed) {
  MetricCheckReport rep;
  rep.max_dim = max_dim;
  rep.samples = samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  auto fail = [&rep](const std::string& what) {
    if (rep.violations == 0) rep.first_violation = what;
    ++rep.violations;
  };

  for (int n = 1; n <= max_dim; ++n) {
    std::vector<CubeMap> endos = enumerate_cotransverse(n, n);

    // Vertex agreement, exhaustive.
    for (const CubeMap& f : endos)
      for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) {
        Point got = t_eval(f, vertex_point(v, n));
        double err;
        ++rep.vertex_checks;
        if (!points_close(got, vertex_point(f.table[v], n), err)) {
          rep.max_error = std::max(rep.max_error, err);
          fail("vertex agreement failed for " + to_string(f) + " at vertex " +
               vertex_to_string(v, n));
        }
      }

    // Shared sample set per dimension keeps the run reproducible.
    std::vector<Point> pts(samples);
    for (Point& p : pts) {
      p.coords.resize(n);
      for (double& c : p.coords) c = unif(rng);
    }

    // Functoriality: T(f o g) = T(f) o T(g).
    for (const CubeMap& f : endos)
      for (const CubeMap& g : endos) {
        CubeMap fg = compose(f, g);
        for (const Point& p : pts) {
          Point lhs = t_eval(fg, p);
          Point rhs = t_eval(f, t_eval(g, p));
          double err;
          ++rep.functor_checks;
          if (!points_close(lhs, rhs, err)) {
            rep.max_error = std::max(rep.max_error, err);
            fail("functoriality failed for " + to_string(f) + " after " + to_string(g));
          }
        }
      }

    // Non-expansiveness and monotonicity on comparable pairs: compare each
    // sample with its coordinatewise join against a second sample.
    for (const CubeMap& f : endos)
      for (int s = 0; s + 1 < samples; ++s) {
        const Point& x = pts[s];
        Point y = pts[s + 1];
        for (int i = 0; i < n; ++i) y.coords[i] = std::max(y.coords[i], x.coords[i]);
        Point fx = t_eval(f, x), fy = t_eval(f, y);
        ++rep.nonexpansive_checks;
        ExtendedDistance dxy = d1(x, y), dfy = d1(fx, fy);
        if (dfy > dxy + kTol) {
          rep.max_error = std::max(rep.max_error, dfy - dxy);
          fail("non-expansiveness failed for " + to_string(f));
        }
        ++rep.monotone_checks;
        for (int i = 0; i < n; ++i)
          if (fx.coords[i] > fy.coords[i] + kTol) {
            fail("monotonicity failed for " + to_string(f));
            break;
          }
      }
  }
  return rep;
}

}  // namespace cubechains
