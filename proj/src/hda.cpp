#include "cubechains/hda.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cubechains {

int LabelledSkeleton::vertex_index(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  return it == vertices.end() ? -1 : int(it - vertices.begin());
}

bool LabelledSkeleton::is_acyclic() const {
  std::vector<int> indeg(vertices.size(), 0);
  for (const Edge& e : edges) ++indeg[e.dst];
  std::vector<int> queue;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (indeg[v] == 0) queue.push_back(int(v));
  std::size_t seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (const Edge& e : edges)
      if (e.src == v && --indeg[e.dst] == 0) queue.push_back(e.dst);
  }
  return seen == vertices.size();
}

std::optional<std::string> SyncAlgebra::result_of(const std::string& x,
                                                  const std::string& y) const {
  for (const Rule& r : rules)
    if ((r.a == x && r.b == y) || (r.a == y && r.b == x)) return r.result;
  return std::nullopt;
}

LabelledSkeleton labelled_cube_skeleton(const std::vector<std::string>& labels) {
  const int n = int(labels.size());
  LabelledSkeleton S;
  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v)
    S.vertices.push_back(vertex_to_string(v, n));
  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v)
    for (int i = 0; i < n; ++i)
      if (!((v >> i) & 1))
        S.edges.push_back({int(v), int(v | (VertexMask{1} << i)), labels[i]});
  return S;
}

LabelledSkeleton path_skeleton(const std::vector<std::string>& labels) {
  LabelledSkeleton S;
  for (std::size_t v = 0; v <= labels.size(); ++v)
    S.vertices.push_back("p" + std::to_string(v));
  for (std::size_t k = 0; k < labels.size(); ++k)
    S.edges.push_back({int(k), int(k + 1), labels[k]});
  return S;
}

LabelledSkeleton parallel_compose(const LabelledSkeleton& X, const LabelledSkeleton& Y,
                                  const SyncAlgebra& sync) {
  if (!X.is_acyclic() || !Y.is_acyclic())
    throw std::invalid_argument("parallel_compose: inputs must be acyclic");
  LabelledSkeleton P;
  const int ny = int(Y.vertices.size());
  auto pair_index = [ny](int x, int y) { return x * ny + y; };
  for (const std::string& xv : X.vertices)
    for (const std::string& yv : Y.vertices) P.vertices.push_back("(" + xv + "," + yv + ")");
  for (const auto& e : X.edges)
    for (int y = 0; y < ny; ++y)
      P.edges.push_back({pair_index(e.src, y), pair_index(e.dst, y), e.label});
  for (int x = 0; x < int(X.vertices.size()); ++x)
    for (const auto& f : Y.edges)
      P.edges.push_back({pair_index(x, f.src), pair_index(x, f.dst), f.label});
  for (const auto& e : X.edges)
    for (const auto& f : Y.edges)
      if (auto res = sync.result_of(e.label, f.label))
        P.edges.push_back({pair_index(e.src, f.src), pair_index(e.dst, f.dst), *res});
  return P;
}

namespace {

// Label sets of edges between an ordered vertex pair.
struct EdgeIndex {
  std::set<std::pair<int, int>> present;
  std::map<std::pair<int, int>, std::set<std::string>> labels;
  explicit EdgeIndex(const LabelledSkeleton& S) {
    for (const auto& e : S.edges) {
      present.insert({e.src, e.dst});
      labels[{e.src, e.dst}].insert(e.label);
    }
  }
};

// Condition (i): every increasing Hamming edge lands on an edge of S.
bool edges_ok(const std::vector<int>& u, int n, const EdgeIndex& idx) {
  for (VertexMask x = 0; x < (VertexMask{1} << n); ++x)
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1) continue;
      if (!idx.present.count({u[x], u[x | (VertexMask{1} << i)]})) return false;
    }
  return true;
}

// Condition (ii): the direction-i edges share a common label, per i.
bool labels_ok(const std::vector<int>& u, int n, const EdgeIndex& idx) {
  for (int i = 0; i < n; ++i) {
    std::set<std::string> common;
    bool first = true;
    for (VertexMask x = 0; x < (VertexMask{1} << n); ++x) {
      if ((x >> i) & 1) continue;
      auto it = idx.labels.find({u[x], u[x | (VertexMask{1} << i)]});
      if (it == idx.labels.end()) return false;
      if (first) {
        common = it->second;
        first = false;
      } else {
        std::set<std::string> inter;
        std::set_intersection(common.begin(), common.end(), it->second.begin(),
                              it->second.end(), std::inserter(inter, inter.begin()));
        common = std::move(inter);
      }
      if (common.empty()) return false;
    }
  }
  return true;
}

}  // namespace

CoskeletalASet cosk1_fill(const LabelledSkeleton& S, int max_dim,
                          std::shared_ptr<const CubeCategory> hat_box_s) {
  if (!S.is_acyclic()) throw std::invalid_argument("cosk1_fill: skeleton must be acyclic");
  if (max_dim < 1) throw std::invalid_argument("cosk1_fill: max_dim must be >= 1");
  if (hat_box_s->max_dim < max_dim)
    throw std::invalid_argument("cosk1_fill: category max_dim too small");
  const bool labelled = std::any_of(S.edges.begin(), S.edges.end(),
                                    [](const auto& e) { return !e.label.empty(); });
  EdgeIndex idx(S);

  // out-neighborhoods for the backtracking enumeration
  std::vector<std::vector<int>> out(S.vertices.size());
  for (const auto& e : S.edges) out[e.src].push_back(e.dst);
  for (auto& o : out) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }

  std::vector<std::vector<std::vector<int>>> cells(max_dim + 1);
  for (std::size_t v = 0; v < S.vertices.size(); ++v)
    cells[0].push_back({int(v)});

  for (int n = 1; n <= max_dim; ++n) {
    // enumerate condition-(i) vertex functions by increasing popcount
    std::vector<VertexMask> order;
    for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [](VertexMask a, VertexMask b) {
      return std::pair(bit_count(a), a) < std::pair(bit_count(b), b);
    });
    std::set<std::vector<int>> admissible;
    std::vector<int> table(std::size_t{1} << n, -1);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == order.size()) {
        admissible.insert(table);
        return;
      }
      VertexMask x = order[k];
      if (x == 0) {
        for (std::size_t v = 0; v < S.vertices.size(); ++v) {
          table[0] = int(v);
          rec(k + 1);
        }
        return;
      }
      std::vector<int> cands;
      bool first = true;
      for (int i = 0; i < n; ++i) {
        if (!((x >> i) & 1)) continue;
        const std::vector<int>& ups = out[table[x ^ (VertexMask{1} << i)]];
        if (first) {
          cands = ups;
          first = false;
        } else {
          std::vector<int> inter;
          std::set_intersection(cands.begin(), cands.end(), ups.begin(), ups.end(),
                                std::back_inserter(inter));
          cands = std::move(inter);
        }
        if (cands.empty()) return;
      }
      for (int v : cands) {
        table[x] = v;
        rec(k + 1);
      }
    };
    rec(0);

    std::set<std::vector<int>> kept;
    if (!labelled) {
      kept = std::move(admissible);
    } else {
      // seeds satisfy the common-label condition; close under the endo
      // action so precomposition stays inside the cell set
      const auto& endos = hat_box_s->endos(n);
      for (const std::vector<int>& u : admissible) {
        if (!labels_ok(u, n, idx)) continue;
        for (const CubeMap& g : endos) {
          std::vector<int> v(u.size());
          for (std::size_t x = 0; x < u.size(); ++x) v[x] = u[g.table[x]];
          kept.insert(std::move(v));
        }
      }
    }
    cells[n].assign(kept.begin(), kept.end());
  }
  return CoskeletalASet(S.vertices, std::move(cells), std::move(hat_box_s));
}

PrecubicalSet skeleton_as_precubical(const LabelledSkeleton& S) {
  PrecubicalSet K;
  for (const std::string& v : S.vertices) K.add_cell(0, v);
  for (std::size_t i = 0; i < S.edges.size(); ++i) {
    const auto& e = S.edges[i];
    int c = K.add_cell(1, "e" + std::to_string(i) + ":" + S.vertices[e.src] + ">" +
                              S.vertices[e.dst]);
    K.set_face(1, c, 1, 0, e.src);
    K.set_face(1, c, 1, 1, e.dst);
    if (!e.label.empty()) K.set_label(c, e.label);
  }
  return K;
}

ChainInvariants chain_invariants(const ASet& X, int alpha, int beta, int n_max,
                                 const NerveOptions& opt) {
  ChainInvariants inv;
  for (int n = 0; n <= n_max; ++n) {
    ChainCategory C(X, alpha, beta, n);
    if (C.objects().empty()) continue;
    ChainInvariants::PerN p;
    p.n = n;
    p.objects = long long(C.objects().size());
    p.morphisms = long long(C.morphisms().size());
    p.homology = chain_category_homology(C, opt);
    inv.pi0_total += p.homology.pi0;
    inv.per_n.push_back(std::move(p));
  }
  return inv;
}

namespace {

bool invariants_agree(const ChainInvariants& a, const ChainInvariants& b,
                      std::string& why) {
  if (a.pi0_total != b.pi0_total) {
    why = "pi0 differs: " + std::to_string(a.pi0_total) + " vs " +
          std::to_string(b.pi0_total);
    return false;
  }
  if (a.per_n.size() != b.per_n.size()) {
    why = "different sets of nonempty total dimensions";
    return false;
  }
  for (std::size_t i = 0; i < a.per_n.size(); ++i) {
    if (a.per_n[i].n != b.per_n[i].n) {
      why = "different nonempty total dimensions";
      return false;
    }
    if (!a.per_n[i].homology.agrees_with(b.per_n[i].homology)) {
      why = "homology differs at n = " + std::to_string(a.per_n[i].n);
      return false;
    }
  }
  return true;
}

}  // namespace

ModelComparison compare_models(const std::vector<std::string>& left,
                               const std::vector<std::string>& right,
                               const SyncAlgebra& sync, const NerveOptions& opt) {
  const int total = int(left.size() + right.size());
  if (total > 3)
    throw FeasibilityError("compare_models: total dimension bound (3) exceeded");
  ModelComparison cmp;
  cmp.left = left;
  cmp.right = right;
  cmp.has_sync = !sync.rules.empty();

  auto hatS = std::make_shared<const CubeCategory>(
      builtin_category("hat_box_s", std::max(total, 1)));

  LabelledSkeleton P = parallel_compose(labelled_cube_skeleton(left),
                                        labelled_cube_skeleton(right), sync);
  CoskeletalASet cosk = cosk1_fill(P, std::max(total, 1), hatS);
  const int bottom = 0;
  const int top = int(P.vertices.size()) - 1;  // product of cube tops
  cmp.coskeletal = chain_invariants(cosk, bottom, top, total, opt);

  if (!cmp.has_sync) {
    PrecubicalSet K = tensor(standard_cube_labelled(left), standard_cube_labelled(right));
    FreeASet free_model(K, hatS);
    auto corner = [](std::size_t n, char c) {
      return n == 0 ? std::string("()") : std::string(n, c);
    };
    std::string bottom_id = corner(left.size(), '0') + "|" + corner(right.size(), '0');
    std::string top_id = corner(left.size(), '1') + "|" + corner(right.size(), '1');
    int a = K.cell_index(0, bottom_id);
    int b = K.cell_index(0, top_id);
    // free cells in dimension 0 are (unique endo, vertex)
    cmp.free_model = chain_invariants(free_model, a, b, total, opt);
    cmp.agree = invariants_agree(cmp.coskeletal, *cmp.free_model, cmp.disagreement);
  }
  return cmp;
}

}  // namespace cubechains
