#ifndef CUBECHAINS_PRECUBICAL_HPP
#define CUBECHAINS_PRECUBICAL_HPP

#include <map>
#include <string>
#include <vector>

#include "cubechains/cube_map.hpp"

namespace cubechains {

// Finite precubical set: per-dimension cell ids plus face maps
// face(n, c, i, eps) in K_{n-1} for each n-cell c, 1 <= i <= n,
// eps in {0,1}.  Optional labels on 1-cells.
class PrecubicalSet {
 public:
  int dim() const { return int(cells_.size()) - 1; }
  int cell_count(int n) const;
  const std::string& cell_id(int n, int c) const { return cells_[n][c]; }
  int cell_index(int n, const std::string& id) const;  // -1 if absent

  // Index into dimension n-1.
  int face(int n, int c, int i, int eps) const;

  const std::string* label(int edge) const;  // nullptr when unlabelled
  void set_label(int edge, const std::string& l) { labels_[edge] = l; }
  bool has_labels() const { return !labels_.empty(); }

  // Construction.  Faces of an n-cell must be set after all (n-1)-cells
  // exist; freeze() validates completeness.
  int add_cell(int n, const std::string& id);
  void set_face(int n, int c, int i, int eps, int face_cell);
  void freeze() const;  // throws on missing faces

  // Contravariant action of a box map phi: [m] -> [n] on an n-cell.
  int act_box(const CubeMap& phi, int c) const;

  // Vertex reached from cell c of dimension n along the box map picture:
  // the image of the cube vertex v under the cell's characteristic map.
  int vertex_of(int n, int c, VertexMask v) const;

 private:
  std::vector<std::vector<std::string>> cells_;        // cells_[n]
  std::vector<std::vector<std::vector<int>>> faces_;   // faces_[n][c][2*(i-1)+eps]
  std::map<int, std::string> labels_;                  // 1-cell index -> label
  std::vector<std::map<std::string, int>> index_;      // id -> index per dim
};

// The standard n-cube: cells of dimension m are the box maps [m] -> [n],
// identified by words over {0,1,*} (star marks an active coordinate).
// With labels (one per coordinate) the edges in direction i are labelled
// labels[i-1].
PrecubicalSet standard_cube(int n);
PrecubicalSet standard_cube_labelled(const std::vector<std::string>& labels);

// The word id used by standard_cube for the cell of phi.
std::string cube_cell_word(const CubeMap& phi);

// Truncation K_{<= n-1}: drops every cell of dimension >= n.
PrecubicalSet boundary(const PrecubicalSet& K, int n);

// Tensor product: cells are pairs, dimensions add, faces split at the
// dimension of the left factor.  Labels of edges survive on either side.
PrecubicalSet tensor(const PrecubicalSet& K, const PrecubicalSet& L);

}  // namespace cubechains

#endif
