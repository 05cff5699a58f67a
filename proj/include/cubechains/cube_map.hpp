#ifndef CUBECHAINS_CUBE_MAP_HPP
#define CUBECHAINS_CUBE_MAP_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubechains {

// A vertex of the binary cube [n] = {0<1}^n is a bitmask: coordinate i
// (1-based) lives at bit i-1.  [0] is the one-point cube, mask 0.
using VertexMask = std::uint32_t;

inline int bit_count(VertexMask x) { return __builtin_popcount(x); }

// Product order on vertices of equal dimension.
inline bool vertex_leq(VertexMask x, VertexMask y) { return (x & y) == x; }

// Directed L1 distance restricted to vertices: the number of raised
// coordinates when x <= y, and -1 (standing for infinity) otherwise.
inline int vertex_d1(VertexMask x, VertexMask y) {
  return vertex_leq(x, y) ? bit_count(x ^ y) : -1;
}

class FeasibilityError : public std::runtime_error {
 public:
  explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

// A map [m] -> [n] of cube posets stored as its full vertex table.
// table[k] is the image of the source vertex with mask k; equality of maps
// is equality of tables.  All library constructors produce strictly
// increasing maps; data read from JSON is validated separately.
struct CubeMap {
  int src_dim = 0;
  int dst_dim = 0;
  std::vector<VertexMask> table;  // size 1 << src_dim

  VertexMask operator()(VertexMask x) const { return table[x]; }
  int source_size() const { return 1 << src_dim; }

  bool operator==(const CubeMap& o) const = default;
  // Canonical order: (src_dim, dst_dim, table) lexicographically.
  auto operator<=>(const CubeMap& o) const = default;

  static CubeMap identity(int n);
  // delta_i^alpha : [n-1] -> [n], inserts alpha at coordinate i (1-based).
  static CubeMap coface(int n, int i, int alpha);
  // sigma_i : [n] -> [n], swaps coordinates i and i+1.
  static CubeMap symmetry(int n, int i);
  // gamma_i : [n] -> [n], sends (x_i, x_{i+1}) to (max, min).
  static CubeMap fold_max_min(int n, int i);
  // [0] -> [n], selects the vertex v.
  static CubeMap vertex_inclusion(int n, VertexMask v);
};

// (g o f)(x) = g(f(x)); throws on dimension mismatch.
CubeMap compose(const CubeMap& g, const CubeMap& f);

// x < y implies f(x) < f(y).  Checking covering pairs (edges) suffices.
bool is_strictly_increasing(const CubeMap& f);

// Every increasing Hamming edge of the source maps to an edge of the target.
// Assumes f strictly increasing.
bool is_cotransverse(const CubeMap& f);

bool is_injective(const CubeMap& f);

// Membership in the box category: f is a composite of cofaces, i.e. a
// coordinate-insertion map.
bool is_box_map(const CubeMap& f);

// Output coordinates of f that are not constant over the source, as a mask.
VertexMask active_coordinates(const CubeMap& f);

// The unique (psi, phi) with phi in box, psi a cotransverse endomorphism of
// the source and phi o psi = f.
struct Factorization {
  CubeMap psi;  // [m] -> [m]
  CubeMap phi;  // [m] -> [n], box map
};
Factorization factorize(const CubeMap& f);

// All box maps [m] -> [n]: choose the active coordinate set and the values
// of the constant coordinates.  Sorted canonically.
std::vector<CubeMap> box_homset(int m, int n);

// All cotransverse maps [m] -> [n], i.e. the hom-set of the full
// symmetric transverse cube category.  Backtracking over the source cube;
// throws FeasibilityError when m > 3 (use generated closure instead).
std::vector<CubeMap> enumerate_cotransverse(int m, int n);

// Transverse-map test: every injective box precomposition lands in box.
bool in_hat_square(const CubeMap& f);

// Word of coface indices realizing a box map: apply faces in the returned
// order to act contravariantly.  Pairs are (position, value), positions
// strictly decreasing.
std::vector<std::pair<int, int>> box_constant_positions(const CubeMap& phi);

std::string vertex_to_string(VertexMask v, int dim);
std::string to_string(const CubeMap& f);

}  // namespace cubechains

#endif
