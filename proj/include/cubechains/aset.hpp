#ifndef CUBECHAINS_ASET_HPP
#define CUBECHAINS_ASET_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cubechains/cube_category.hpp"
#include "cubechains/precubical.hpp"

namespace cubechains {

// Finite presheaf on a category of cubes.  Cells of each dimension are
// indexed 0..cell_count(n)-1; act is the contravariant action: for
// f: [m] -> [n] it takes an n-cell to an m-cell.
class ASet {
 public:
  virtual ~ASet() = default;
  virtual const CubeCategory& category() const = 0;
  virtual int top_dim() const = 0;
  virtual int cell_count(int n) const = 0;
  virtual int act(const CubeMap& f, int cell) const = 0;
  virtual std::string cell_name(int n, int cell) const = 0;

  int init_state(int n, int cell) const {
    return act(CubeMap::vertex_inclusion(n, 0), cell);
  }
  int final_state(int n, int cell) const {
    return act(CubeMap::vertex_inclusion(n, VertexMask((1u << n) - 1)), cell);
  }
};

// A precubical set viewed as a presheaf on box.
class PrecubicalASet : public ASet {
 public:
  PrecubicalASet(const PrecubicalSet& K, std::shared_ptr<const CubeCategory> box);
  const CubeCategory& category() const override { return *box_; }
  int top_dim() const override;
  int cell_count(int n) const override { return base_.cell_count(n); }
  int act(const CubeMap& f, int cell) const override;
  std::string cell_name(int n, int cell) const override { return base_.cell_id(n, cell); }
  const PrecubicalSet& base() const { return base_; }

 private:
  PrecubicalSet base_;
  std::shared_ptr<const CubeCategory> box_;
};

// Free A-set on a precubical set K: m-cells are pairs (g, c) with g an
// endomorphism in A([m],[m]) and c in K_m; the action factors through the
// unique (psi, phi) decomposition.  Requires A thick, otherwise the action
// would be ill-defined.
class FreeASet : public ASet {
 public:
  FreeASet(const PrecubicalSet& K, std::shared_ptr<const CubeCategory> cat);
  const CubeCategory& category() const override { return *cat_; }
  int top_dim() const override;
  int cell_count(int n) const override;
  int act(const CubeMap& f, int cell) const override;
  std::string cell_name(int n, int cell) const override;

  const PrecubicalSet& base() const { return base_; }
  int endo_count(int n) const { return int(cat_->endos(n).size()); }
  // cell index <-> (endo index, base cell index)
  int pair_to_cell(int n, int endo, int base_cell) const;
  std::pair<int, int> cell_to_pair(int n, int cell) const;

 private:
  PrecubicalSet base_;
  std::shared_ptr<const CubeCategory> cat_;
};

// Coskeletal A-set over the full symmetric transverse category: an n-cell
// is an admissible vertex function {0,1}^n -> vertices of a skeleton, and
// the action is precomposition with vertex tables.  Construction lives in
// hda.hpp (cosk1_fill); this class stores the enumerated cells.
class CoskeletalASet : public ASet {
 public:
  CoskeletalASet(std::vector<std::string> vertex_names,
                 std::vector<std::vector<std::vector<int>>> cells,
                 std::shared_ptr<const CubeCategory> cat);
  const CubeCategory& category() const override { return *cat_; }
  int top_dim() const override { return int(cells_.size()) - 1; }
  int cell_count(int n) const override;
  int act(const CubeMap& f, int cell) const override;
  std::string cell_name(int n, int cell) const override;

  const std::vector<int>& vertex_table(int n, int cell) const { return cells_[n][cell]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  int cell_index(int n, const std::vector<int>& table) const;  // -1 if absent

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::vector<std::vector<int>>> cells_;  // cells_[n][c] = table
  std::vector<std::map<std::vector<int>, int>> index_;
  std::shared_ptr<const CubeCategory> cat_;
};

struct ValidationReport {
  bool ok = true;
  long long identity_checks = 0, composite_checks = 0;
  std::string first_violation;
};

// Contravariant functor laws over all stored hom-sets:
// act(id) = id and act(g o f) = act(f) o act(g).
ValidationReport validate(const ASet& X);

}  // namespace cubechains

#endif
