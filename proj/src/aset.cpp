#include "cubechains/aset.hpp"

#include <algorithm>

namespace cubechains {

PrecubicalASet::PrecubicalASet(const PrecubicalSet& K,
                               std::shared_ptr<const CubeCategory> box)
    : base_(K), box_(std::move(box)) {
  base_.freeze();
  if (base_.dim() > box_->max_dim)
    throw std::invalid_argument("precubical set exceeds category max_dim");
}

int PrecubicalASet::top_dim() const { return std::max(base_.dim(), 0); }

int PrecubicalASet::act(const CubeMap& f, int cell) const {
  return base_.act_box(f, cell);
}

FreeASet::FreeASet(const PrecubicalSet& K, std::shared_ptr<const CubeCategory> cat)
    : base_(K), cat_(std::move(cat)) {
  base_.freeze();
  if (base_.dim() > cat_->max_dim)
    throw std::invalid_argument("precubical set exceeds category max_dim");
  ThicknessReport t = is_thick(*cat_);
  if (!t.thick)
    throw std::invalid_argument(
        "free A-set over a non-thick category: the action would be ill-defined "
        "(missing " + to_string(*t.missing_psi) + ")");
}

int FreeASet::top_dim() const { return std::max(base_.dim(), 0); }

int FreeASet::cell_count(int n) const {
  if (n < 0 || n > base_.dim()) return 0;
  return endo_count(n) * base_.cell_count(n);
}

int FreeASet::pair_to_cell(int n, int endo, int base_cell) const {
  return endo * base_.cell_count(n) + base_cell;
}

std::pair<int, int> FreeASet::cell_to_pair(int n, int cell) const {
  int bc = base_.cell_count(n);
  return {cell / bc, cell % bc};
}

int FreeASet::act(const CubeMap& k, int cell) const {
  auto [gi, ci] = cell_to_pair(k.dst_dim, cell);
  const CubeMap& g = cat_->endos(k.dst_dim)[gi];
  Factorization fac = factorize(compose(g, k));
  int psi_index = cat_->index_of(fac.psi);
  if (psi_index < 0)
    throw std::logic_error("thickness violated: psi escaped the category");
  return pair_to_cell(k.src_dim, psi_index, base_.act_box(fac.phi, ci));
}

std::string FreeASet::cell_name(int n, int cell) const {
  auto [gi, ci] = cell_to_pair(n, cell);
  const CubeMap& g = cat_->endos(n)[gi];
  return "(" + to_string(g) + ", " + base_.cell_id(n, ci) + ")";
}

CoskeletalASet::CoskeletalASet(std::vector<std::string> vertex_names,
                               std::vector<std::vector<std::vector<int>>> cells,
                               std::shared_ptr<const CubeCategory> cat)
    : vertex_names_(std::move(vertex_names)),
      cells_(std::move(cells)),
      cat_(std::move(cat)) {
  index_.resize(cells_.size());
  for (std::size_t n = 0; n < cells_.size(); ++n)
    for (std::size_t c = 0; c < cells_[n].size(); ++c) index_[n][cells_[n][c]] = int(c);
}

int CoskeletalASet::cell_count(int n) const {
  if (n < 0 || n >= int(cells_.size())) return 0;
  return int(cells_[n].size());
}

int CoskeletalASet::cell_index(int n, const std::vector<int>& table) const {
  if (n < 0 || n >= int(index_.size())) return -1;
  auto it = index_[n].find(table);
  return it == index_[n].end() ? -1 : it->second;
}

int CoskeletalASet::act(const CubeMap& f, int cell) const {
  const std::vector<int>& u = cells_[f.dst_dim][cell];
  std::vector<int> v(std::size_t{1} << f.src_dim);
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = u[f.table[x]];
  int idx = cell_index(f.src_dim, v);
  if (idx < 0) throw std::logic_error("coskeletal cells not closed under the action");
  return idx;
}

std::string CoskeletalASet::cell_name(int n, int cell) const {
  const std::vector<int>& u = cells_[n][cell];
  std::string s = "[";
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (x) s += " ";
    s += vertex_names_[u[x]];
  }
  return s + "]";
}

ValidationReport validate(const ASet& X) {
  ValidationReport rep;
  const CubeCategory& A = X.category();
  const int top = std::min(X.top_dim(), A.max_dim);
  auto fail = [&rep](std::string what) {
    if (rep.ok) rep.first_violation = std::move(what);
    rep.ok = false;
  };

  for (int n = 0; n <= top; ++n) {
    CubeMap id = CubeMap::identity(n);
    for (int c = 0; c < X.cell_count(n); ++c) {
      ++rep.identity_checks;
      if (X.act(id, c) != c) {
        fail("act(id) != id on " + X.cell_name(n, c));
        return rep;
      }
    }
  }
  for (int m = 0; m <= top; ++m)
    for (int n = m; n <= top; ++n)
      for (int p = n; p <= top; ++p) {
        const auto& fs = A.hom(m, n);
        const auto& gs = A.hom(n, p);
        for (const CubeMap& g : gs)
          for (const CubeMap& f : fs) {
            CubeMap gf = compose(g, f);
            for (int c = 0; c < X.cell_count(p); ++c) {
              ++rep.composite_checks;
              if (X.act(gf, c) != X.act(f, X.act(g, c))) {
                fail("act(g o f) != act(f) o act(g) for f=" + to_string(f) +
                     " g=" + to_string(g) + " on " + X.cell_name(p, c));
                return rep;
              }
            }
          }
      }
  return rep;
}

}  // namespace cubechains
