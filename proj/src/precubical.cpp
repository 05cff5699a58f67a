#include "cubechains/precubical.hpp"

#include <algorithm>
#include <array>

namespace cubechains {

int PrecubicalSet::cell_count(int n) const {
  if (n < 0 || n >= int(cells_.size())) return 0;
  return int(cells_[n].size());
}

int PrecubicalSet::cell_index(int n, const std::string& id) const {
  if (n < 0 || n >= int(index_.size())) return -1;
  auto it = index_[n].find(id);
  return it == index_[n].end() ? -1 : it->second;
}

int PrecubicalSet::face(int n, int c, int i, int eps) const {
  int f = faces_[n][c][2 * (i - 1) + eps];
  if (f < 0) throw std::logic_error("face not set");
  return f;
}

const std::string* PrecubicalSet::label(int edge) const {
  auto it = labels_.find(edge);
  return it == labels_.end() ? nullptr : &it->second;
}

int PrecubicalSet::add_cell(int n, const std::string& id) {
  if (n < 0) throw std::invalid_argument("add_cell: negative dimension");
  if (int(cells_.size()) <= n) {
    cells_.resize(n + 1);
    faces_.resize(n + 1);
    index_.resize(n + 1);
  }
  if (index_[n].count(id)) throw std::invalid_argument("duplicate cell id: " + id);
  cells_[n].push_back(id);
  faces_[n].emplace_back(std::vector<int>(2 * n, -1));
  index_[n][id] = int(cells_[n].size()) - 1;
  return index_[n][id];
}

void PrecubicalSet::set_face(int n, int c, int i, int eps, int face_cell) {
  if (i < 1 || i > n || (eps != 0 && eps != 1))
    throw std::invalid_argument("set_face: bad face index");
  if (face_cell < 0 || face_cell >= cell_count(n - 1))
    throw std::invalid_argument("set_face: face cell out of range");
  faces_[n][c][2 * (i - 1) + eps] = face_cell;
}

void PrecubicalSet::freeze() const {
  for (int n = 1; n <= dim(); ++n)
    for (int c = 0; c < cell_count(n); ++c)
      for (int k = 0; k < 2 * n; ++k)
        if (faces_[n][c][k] < 0)
          throw std::logic_error("missing face on cell " + cells_[n][c]);
}

int PrecubicalSet::act_box(const CubeMap& phi, int c) const {
  if (!is_box_map(phi)) throw std::invalid_argument("act_box: map is not in box");
  int cur = c;
  int n = phi.dst_dim;
  for (auto [pos, val] : box_constant_positions(phi)) {
    cur = face(n, cur, pos, val);
    --n;
  }
  return cur;
}

int PrecubicalSet::vertex_of(int n, int c, VertexMask v) const {
  return act_box(CubeMap::vertex_inclusion(n, v), c);
}

std::string cube_cell_word(const CubeMap& phi) {
  VertexMask active = active_coordinates(phi);
  VertexMask constants = phi.table.front();
  std::string w;
  for (int j = 0; j < phi.dst_dim; ++j) {
    if ((active >> j) & 1)
      w += '*';
    else
      w += ((constants >> j) & 1) ? '1' : '0';
  }
  return w.empty() ? "()" : w;
}

PrecubicalSet standard_cube(int n) {
  PrecubicalSet K;
  std::vector<std::vector<CubeMap>> maps(n + 1);
  for (int m = 0; m <= n; ++m) {
    maps[m] = box_homset(m, n);
    for (const CubeMap& phi : maps[m]) K.add_cell(m, cube_cell_word(phi));
  }
  for (int m = 1; m <= n; ++m)
    for (int c = 0; c < int(maps[m].size()); ++c)
      for (int i = 1; i <= m; ++i)
        for (int eps = 0; eps <= 1; ++eps) {
          CubeMap sub = compose(maps[m][c], CubeMap::coface(m, i, eps));
          K.set_face(m, c, i, eps, K.cell_index(m - 1, cube_cell_word(sub)));
        }
  return K;
}

PrecubicalSet standard_cube_labelled(const std::vector<std::string>& labels) {
  const int n = int(labels.size());
  PrecubicalSet K = standard_cube(n);
  for (int e = 0; e < K.cell_count(1); ++e) {
    const std::string& w = K.cell_id(1, e);
    auto star = w.find('*');
    K.set_label(e, labels[star]);
  }
  return K;
}

PrecubicalSet boundary(const PrecubicalSet& K, int n) {
  PrecubicalSet out;
  for (int m = 0; m < n && m <= K.dim(); ++m)
    for (int c = 0; c < K.cell_count(m); ++c) out.add_cell(m, K.cell_id(m, c));
  for (int m = 1; m < n && m <= K.dim(); ++m)
    for (int c = 0; c < K.cell_count(m); ++c)
      for (int i = 1; i <= m; ++i)
        for (int eps = 0; eps <= 1; ++eps) out.set_face(m, c, i, eps, K.face(m, c, i, eps));
  if (n >= 2)
    for (int e = 0; e < K.cell_count(1); ++e)
      if (const std::string* l = K.label(e)) out.set_label(e, *l);
  return out;
}

PrecubicalSet tensor(const PrecubicalSet& K, const PrecubicalSet& L) {
  PrecubicalSet out;
  // index bookkeeping: per output dim, the (p, cK, cL) triple per cell
  std::vector<std::vector<std::array<int, 3>>> parts;
  for (int p = 0; p <= K.dim(); ++p)
    for (int q = 0; q <= L.dim(); ++q)
      for (int a = 0; a < K.cell_count(p); ++a)
        for (int b = 0; b < L.cell_count(q); ++b) {
          int n = p + q;
          int idx = out.add_cell(n, K.cell_id(p, a) + "|" + L.cell_id(q, b));
          if (int(parts.size()) <= n) parts.resize(n + 1);
          if (int(parts[n].size()) != idx) throw std::logic_error("tensor ordering");
          parts[n].push_back({p, a, b});
        }
  for (int n = 1; n < int(parts.size()); ++n)
    for (int c = 0; c < int(parts[n].size()); ++c) {
      auto [p, a, b] = parts[n][c];
      int q = n - p;
      for (int i = 1; i <= n; ++i)
        for (int eps = 0; eps <= 1; ++eps) {
          std::string fid;
          if (i <= p)
            fid = K.cell_id(p - 1, K.face(p, a, i, eps)) + "|" + L.cell_id(q, b);
          else
            fid = K.cell_id(p, a) + "|" + L.cell_id(q - 1, L.face(q, b, i - p, eps));
          out.set_face(n, c, i, eps, out.cell_index(n - 1, fid));
        }
    }
  // An edge of the product is an edge of one factor times a vertex of the
  // other; it inherits that edge's label.
  for (int c = 0; c < out.cell_count(1); ++c) {
    auto [p, a, b] = parts[1][c];
    const std::string* l = (p == 1) ? K.label(a) : L.label(b);
    if (l) out.set_label(c, *l);
  }
  return out;
}

}  // namespace cubechains
