#include "cubechains/nerve.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace cubechains {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= std::size_t(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < int(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

}  // namespace

SmallCategory to_small_category(const ChainCategory& C) {
  SmallCategory S;
  S.objects = int(C.objects().size());
  for (const ChainMorphism& m : C.morphisms()) S.arrows.push_back({m.src, m.tgt});
  S.identity.resize(S.objects);
  for (int o = 0; o < S.objects; ++o) S.identity[o] = C.identity_of(o);
  S.compose = [&C](int second, int first) { return C.compose(second, first); };
  return S;
}

NerveComplex nerve(const SmallCategory& C, const NerveOptions& opt) {
  NerveComplex nc;
  nc.simplex_counts.push_back(C.objects);

  std::vector<int> nondeg;  // non-identity arrows
  std::vector<std::vector<int>> out_arrows(C.objects);
  for (int a = 0; a < int(C.arrows.size()); ++a) {
    if (C.is_identity(a)) continue;
    nondeg.push_back(a);
    out_arrows[C.arrows[a].src].push_back(a);
  }

  // Level 1 strings are the non-identity arrows themselves.
  std::vector<std::vector<int>> strings;
  std::unordered_map<std::vector<int>, int, VecHash> prev_index, cur_index;
  for (int a : nondeg) {
    cur_index.emplace(std::vector<int>{a}, int(strings.size()));
    strings.push_back({a});
  }

  auto arrow_of = [&](const std::vector<int>& s, std::size_t i) { return s[i]; };

  for (int k = 1; k <= opt.max_degree; ++k) {
    if (k > 1) {
      // extend each (k-1)-string by composable non-identity arrows
      std::vector<std::vector<int>> next;
      cur_index.clear();
      bool over = false;
      for (const std::vector<int>& s : strings) {
        int end_obj = C.arrows[s.back()].tgt;
        for (int a : out_arrows[end_obj]) {
          if (long long(next.size()) >= opt.simplex_budget) {
            over = true;
            break;
          }
          std::vector<int> t = s;
          t.push_back(a);
          cur_index.emplace(t, int(next.size()));
          next.push_back(std::move(t));
        }
        if (over) break;
      }
      if (over) {
        nc.budget_hit = true;
        break;
      }
      strings = std::move(next);
    }
    if (long long(strings.size()) > opt.simplex_budget) {
      nc.budget_hit = true;
      break;
    }

    // boundary matrix d_k
    SparseIntMatrix d;
    d.cols = int(strings.size());
    d.rows = int(k == 1 ? C.objects : nc.simplex_counts[k - 1]);
    d.columns.resize(d.cols);
    for (int col = 0; col < d.cols; ++col) {
      const std::vector<int>& s = strings[col];
      std::unordered_map<int, long long> acc;
      for (int i = 0; i <= k; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        if (k == 1) {
          int obj = (i == 0) ? C.arrows[s[0]].tgt : C.arrows[s[0]].src;
          acc[obj] += sign;
          continue;
        }
        std::vector<int> face;
        face.reserve(k - 1);
        if (i == 0) {
          face.assign(s.begin() + 1, s.end());
        } else if (i == k) {
          face.assign(s.begin(), s.end() - 1);
        } else {
          face.assign(s.begin(), s.end());
          int comp = C.compose(arrow_of(s, i), arrow_of(s, i - 1));
          if (C.is_identity(comp)) continue;  // degenerate, vanishes
          face.erase(face.begin() + i);
          face[i - 1] = comp;
        }
        auto it = prev_index.find(face);
        if (it == prev_index.end()) throw std::logic_error("nerve: face not indexed");
        acc[it->second] += sign;
      }
      auto& colv = d.columns[col];
      for (auto [row, val] : acc)
        if (val != 0) colv.emplace_back(row, val);
      std::sort(colv.begin(), colv.end());
    }

    nc.boundaries.push_back(std::move(d));
    nc.simplex_counts.push_back(long long(strings.size()));
    nc.levels_built = k;
    prev_index = std::move(cur_index);
    cur_index.clear();
  }
  return nc;
}

bool HomologyResult::agrees_with(const HomologyResult& o) const {
  if (pi0 != o.pi0) return false;
  int shared = std::min(computed_through, o.computed_through);
  for (int k = 0; k <= shared; ++k)
    if (!(H[k] == o.H[k])) return false;
  return true;
}

HomologyResult category_homology(const SmallCategory& C, const NerveOptions& opt) {
  HomologyResult res;
  res.truncation = opt.max_degree;

  UnionFind uf(C.objects);
  for (const auto& a : C.arrows) uf.unite(a.src, a.tgt);
  res.pi0 = uf.components();

  NerveComplex nc = nerve(C, opt);
  res.simplex_counts = nc.simplex_counts;
  res.truncated_by_budget = nc.budget_hit;

  // boundary-squared check, columnwise
  for (int k = 2; k <= nc.levels_built; ++k) {
    const SparseIntMatrix& dk = nc.boundaries[k - 1];
    const SparseIntMatrix& dk1 = nc.boundaries[k - 2];
    for (const auto& col : dk.columns) {
      std::unordered_map<int, long long> acc;
      for (auto [row, val] : col)
        for (auto [r2, v2] : dk1.columns[row]) acc[r2] += val * v2;
      for (auto [r, v] : acc)
        if (v != 0) res.dd_zero = false;
    }
  }

  std::vector<SmithResult> snf(nc.levels_built + 1);
  for (int k = 1; k <= nc.levels_built; ++k) snf[k] = smith_normal_form(nc.boundaries[k - 1]);

  // H_k is exact when both d_k and d_{k+1} are available.
  res.computed_through = nc.levels_built - 1;
  for (int k = 0; k <= res.computed_through; ++k) {
    HomologyDegree h;
    long long ck = nc.simplex_counts[k];
    long long rk = (k >= 1) ? snf[k].rank : 0;
    long long rk1 = snf[k + 1].rank;
    h.betti = ck - rk - rk1;
    for (const BigInt& t : snf[k + 1].torsion) h.torsion.push_back(t.str());
    res.H.push_back(std::move(h));
  }
  return res;
}

HomologyResult chain_category_homology(const ChainCategory& C, const NerveOptions& opt) {
  return category_homology(to_small_category(C), opt);
}

}  // namespace cubechains
