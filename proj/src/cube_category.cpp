#include "cubechains/cube_category.hpp"

#include <algorithm>
#include <set>

namespace cubechains {

namespace {

const std::vector<CubeMap> kEmptyHom;

std::vector<CubeMap> coface_generators(int max_dim) {
  std::vector<CubeMap> out;
  for (int n = 1; n <= max_dim; ++n)
    for (int i = 1; i <= n; ++i)
      for (int alpha = 0; alpha <= 1; ++alpha)
        out.push_back(CubeMap::coface(n, i, alpha));
  return out;
}

}  // namespace

const std::vector<CubeMap>& CubeCategory::hom(int m, int n) const {
  auto it = homs.find({m, n});
  return it == homs.end() ? kEmptyHom : it->second;
}

bool CubeCategory::contains(const CubeMap& f) const {
  return index_of(f) >= 0;
}

int CubeCategory::index_of(const CubeMap& f) const {
  const auto& h = hom(f.src_dim, f.dst_dim);
  auto it = std::lower_bound(h.begin(), h.end(), f);
  if (it == h.end() || !(*it == f)) return -1;
  return int(it - h.begin());
}

std::size_t CubeCategory::total_maps() const {
  std::size_t n = 0;
  for (const auto& [key, h] : homs) n += h.size();
  return n;
}

CubeCategory generate_category(const std::string& name,
                               const std::vector<CubeMap>& gens, int max_dim) {
  if (max_dim < 0) throw std::invalid_argument("generate_category: negative max_dim");
  for (const CubeMap& g : gens) {
    if (!is_strictly_increasing(g) || !is_cotransverse(g))
      throw std::invalid_argument("generate_category: generator is not cotransverse: " +
                                  to_string(g));
    if (g.src_dim > g.dst_dim)
      throw std::invalid_argument("generate_category: generator lowers dimension");
  }

  std::map<std::pair<int, int>, std::set<CubeMap>> acc;
  for (int n = 0; n <= max_dim; ++n) acc[{n, n}].insert(CubeMap::identity(n));
  for (const CubeMap& g : coface_generators(max_dim)) acc[{g.src_dim, g.dst_dim}].insert(g);
  for (const CubeMap& g : gens)
    if (g.dst_dim <= max_dim) acc[{g.src_dim, g.dst_dim}].insert(g);

  // Fixpoint closure.  A([m],[n]) is empty for m > n, so composites only
  // move upward and the iteration terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 0; m <= max_dim; ++m)
      for (int n = m; n <= max_dim; ++n)
        for (int p = n; p <= max_dim; ++p) {
          auto fs = acc.find({m, n});
          auto gs = acc.find({n, p});
          if (fs == acc.end() || gs == acc.end()) continue;
          std::vector<CubeMap> fresh;
          for (const CubeMap& g : gs->second)
            for (const CubeMap& f : fs->second) {
              CubeMap gf = compose(g, f);
              if (!acc[{m, p}].count(gf)) fresh.push_back(std::move(gf));
            }
          if (!fresh.empty()) {
            changed = true;
            for (CubeMap& h : fresh) acc[{m, p}].insert(std::move(h));
          }
        }
  }

  CubeCategory cat;
  cat.name = name;
  cat.kind = CategoryKind::Generated;
  cat.max_dim = max_dim;
  cat.generators = gens;
  for (auto& [key, s] : acc)
    cat.homs[key] = std::vector<CubeMap>(s.begin(), s.end());
  return cat;
}

CubeCategory predicate_category(const std::string& name, CategoryKind kind,
                                int max_dim) {
  if (kind == CategoryKind::Generated)
    throw std::invalid_argument("predicate_category: use generate_category");
  CubeCategory cat;
  cat.name = name;
  cat.kind = kind;
  cat.max_dim = max_dim;
  for (int m = 0; m <= max_dim; ++m)
    for (int n = m; n <= max_dim; ++n) {
      std::vector<CubeMap> h = enumerate_cotransverse(m, n);
      if (kind == CategoryKind::HatSquare) {
        std::vector<CubeMap> kept;
        for (CubeMap& f : h)
          if (in_hat_square(f)) kept.push_back(std::move(f));
        h = std::move(kept);
      }
      cat.homs[{m, n}] = std::move(h);
    }
  return cat;
}

bool is_builtin_category_name(const std::string& name) {
  return name == "box" || name == "box_s" || name == "hat_box" ||
         name == "hat_box_s" || name == "bar_box";
}

CubeCategory builtin_category(const std::string& name, int max_dim) {
  if (name == "box") return generate_category(name, {}, max_dim);
  if (name == "box_s" || name == "bar_box") {
    std::vector<CubeMap> gens;
    for (int n = 2; n <= max_dim; ++n)
      for (int i = 1; i <= n - 1; ++i) {
        gens.push_back(CubeMap::symmetry(n, i));
        if (name == "bar_box") gens.push_back(CubeMap::fold_max_min(n, i));
      }
    return generate_category(name, gens, max_dim);
  }
  if (name == "hat_box") return predicate_category(name, CategoryKind::HatSquare, max_dim);
  if (name == "hat_box_s")
    return predicate_category(name, CategoryKind::AllCotransverse, max_dim);
  throw std::invalid_argument("unknown category name: " + name);
}

ThicknessReport is_thick(const CubeCategory& cat) {
  ThicknessReport rep;
  rep.max_dim = cat.max_dim;
  for (const auto& [key, h] : cat.homs)
    for (const CubeMap& f : h) {
      Factorization fac = factorize(f);
      if (!cat.contains(fac.psi)) {
        rep.thick = false;
        rep.offending = f;
        rep.missing_psi = fac.psi;
        return rep;
      }
    }
  return rep;
}

bool contains_symmetry(const CubeCategory& cat) {
  for (int n = 2; n <= cat.max_dim; ++n)
    for (int i = 1; i <= n - 1; ++i)
      if (cat.contains(CubeMap::symmetry(n, i))) return true;
  return false;
}

}  // namespace cubechains
