#ifndef CUBECHAINS_CUBE_CATEGORY_HPP
#define CUBECHAINS_CUBE_CATEGORY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubechains/cube_map.hpp"

namespace cubechains {

enum class CategoryKind { Generated, AllCotransverse, HatSquare };

// A category of cubes with hom-sets materialized up to max_dim.  Hom-sets
// are sorted in the canonical CubeMap order and closed under composition;
// identities and all cofaces are always present (box <= A <= hat box_S).
struct CubeCategory {
  std::string name;
  CategoryKind kind = CategoryKind::Generated;
  int max_dim = 0;
  std::vector<CubeMap> generators;  // excluding cofaces, Generated only

  const std::vector<CubeMap>& hom(int m, int n) const;
  const std::vector<CubeMap>& endos(int n) const { return hom(n, n); }
  bool contains(const CubeMap& f) const;
  // Index in the sorted hom-set, or -1.
  int index_of(const CubeMap& f) const;
  std::size_t total_maps() const;

  std::map<std::pair<int, int>, std::vector<CubeMap>> homs;
};

// Closure of the generators plus all cofaces and identities under
// composition, stratified over (m, n) with m <= n <= max_dim.
// Non-cotransverse generators are rejected.
CubeCategory generate_category(const std::string& name,
                               const std::vector<CubeMap>& gens, int max_dim);

// Hom-sets defined by a predicate: every cotransverse map, or the
// transverse (hat box) subfamily.  Requires max_dim <= 3 per the
// enumeration feasibility bound.
CubeCategory predicate_category(const std::string& name, CategoryKind kind,
                                int max_dim);

// Named categories: "box", "box_s", "hat_box", "hat_box_s", "bar_box".
CubeCategory builtin_category(const std::string& name, int max_dim);
bool is_builtin_category_name(const std::string& name);

struct ThicknessReport {
  bool thick = true;
  int max_dim = 0;
  // On failure: the map whose factorization leaves the category, and the
  // endomorphism that is missing.
  std::optional<CubeMap> offending;
  std::optional<CubeMap> missing_psi;
};

// Checks that factorize(f).psi stays in the category for every stored f.
// The verdict is "thick up to max_dim": no bound on the dimension of a
// potential counterexample is known beyond the materialized hom-sets.
ThicknessReport is_thick(const CubeCategory& cat);

// Contains a symmetry map sigma_i in some endo hom-set.
bool contains_symmetry(const CubeCategory& cat);

}  // namespace cubechains

#endif
