#include "cubechains/chains.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace cubechains {

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Composition::vtx() const {
  std::vector<int> v{0};
  int s = 0;
  for (int p : parts) v.push_back(s += p);
  if (parts.empty()) return {0};
  return v;
}

bool Composition::refines(const Composition& o) const {
  if (total() != o.total()) return false;
  std::vector<int> a = vtx(), b = o.vtx();
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions: negative n");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  // Subsets of the inner cut points 1..n-1.
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    Composition c;
    int prev = 0;
    for (int k = 1; k < n; ++k)
      if ((cuts >> (k - 1)) & 1) {
        c.parts.push_back(k - prev);
        prev = k;
      }
    c.parts.push_back(n - prev);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CubeChain> chain_objects(const ASet& X, int alpha, int beta, int n) {
  std::vector<CubeChain> out;
  if (n == 0) {
    if (alpha == beta) out.push_back(CubeChain{Composition{}, {}});
    return out;
  }
  // Cells grouped by (dimension, initial state) for the gluing search.
  const int top = X.top_dim();
  std::vector<std::vector<std::vector<int>>> by_init(top + 1);
  for (int d = 1; d <= top; ++d) {
    by_init[d].assign(X.cell_count(0), {});
    for (int c = 0; c < X.cell_count(d); ++c)
      by_init[d][X.init_state(d, c)].push_back(c);
  }

  for (const Composition& comp : compositions(n)) {
    bool feasible = true;
    for (int p : comp.parts)
      if (p > top) { feasible = false; break; }
    if (!feasible) continue;
    std::vector<int> cells(comp.block_count());
    std::function<void(int, int)> rec = [&](int i, int at) {
      if (i == comp.block_count()) {
        if (at == beta) out.push_back(CubeChain{comp, cells});
        return;
      }
      for (int c : by_init[comp.parts[i]][at]) {
        cells[i] = c;
        rec(i + 1, X.final_state(comp.parts[i], c));
      }
    };
    rec(0, alpha);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Chains of the standard block cube A[M] from bottom to top with the given
// part sizes: tuples of maps h_t : [m_t] -> [M] in A glued through vertices.
std::vector<BlockChain> block_chains(const CubeCategory& A, int M,
                                     const std::vector<int>& sub_parts) {
  std::vector<BlockChain> out;
  const VertexMask top = VertexMask((1u << M) - 1);
  // group A([q],[M]) by the image of the bottom vertex
  std::set<int> sizes(sub_parts.begin(), sub_parts.end());
  std::map<std::pair<int, VertexMask>, std::vector<const CubeMap*>> by_init;
  for (int q : sizes)
    for (const CubeMap& h : A.hom(q, M)) by_init[{q, h.table.front()}].push_back(&h);

  BlockChain cur(sub_parts.size());
  std::function<void(std::size_t, VertexMask)> rec = [&](std::size_t t, VertexMask at) {
    if (t == sub_parts.size()) {
      if (at == top) out.push_back(cur);
      return;
    }
    auto it = by_init.find({sub_parts[t], at});
    if (it == by_init.end()) return;
    for (const CubeMap* h : it->second) {
      cur[t] = *h;
      rec(t + 1, h->table.back());
    }
  };
  rec(0, 0);
  return out;
}

// Splits the parts of a into runs covering each block of b.
std::vector<std::vector<int>> split_parts(const Composition& a, const Composition& b) {
  std::vector<std::vector<int>> runs(b.block_count());
  std::size_t ai = 0;
  for (int j = 0; j < b.block_count(); ++j) {
    int remaining = b.parts[j];
    while (remaining > 0) {
      runs[j].push_back(a.parts[ai]);
      remaining -= a.parts[ai];
      ++ai;
    }
    if (remaining != 0) throw std::logic_error("split_parts: vertex condition violated");
  }
  return runs;
}

}  // namespace

std::vector<Witness> enumerate_nbar_maps(const CubeCategory& A,
                                         const Composition& comp_a,
                                         const Composition& comp_b) {
  if (!comp_a.refines(comp_b)) return {};
  if (comp_b.block_count() == 0) return {Witness{}};
  std::vector<std::vector<int>> runs = split_parts(comp_a, comp_b);
  std::vector<std::vector<BlockChain>> per_block(comp_b.block_count());
  for (int j = 0; j < comp_b.block_count(); ++j) {
    per_block[j] = block_chains(A, comp_b.parts[j], runs[j]);
    if (per_block[j].empty()) return {};
  }
  std::vector<Witness> out;
  Witness cur(comp_b.block_count());
  std::function<void(int)> rec = [&](int j) {
    if (j == comp_b.block_count()) {
      out.push_back(cur);
      return;
    }
    for (const BlockChain& bc : per_block[j]) {
      cur[j] = bc;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

CubeChain apply_witness(const ASet& X, const Witness& w, const CubeChain& target) {
  CubeChain src;
  for (std::size_t j = 0; j < w.size(); ++j)
    for (const CubeMap& h : w[j]) {
      src.comp.parts.push_back(h.src_dim);
      src.cells.push_back(X.act(h, target.cells[j]));
    }
  return src;
}

Witness identity_witness(const Composition& comp) {
  Witness w;
  for (int p : comp.parts) w.push_back({CubeMap::identity(p)});
  return w;
}

Witness compose_witnesses(const Witness& second, const Composition& comp_b,
                          const Witness& first, const Composition& comp_c) {
  // second : b -> c, first : a -> b; result : a -> c.
  Witness out(comp_c.block_count());
  std::size_t u = 0;  // index of b-blocks, aligned with cells of `second`
  for (int l = 0; l < comp_c.block_count(); ++l) {
    int remaining = comp_c.parts[l];
    for (const CubeMap& v : second[l]) {
      // v : [M_u] -> [P_l] with M_u = comp_b.parts[u]
      for (const CubeMap& h : first[u]) out[l].push_back(compose(v, h));
      remaining -= comp_b.parts[u];
      ++u;
    }
    if (remaining != 0) throw std::logic_error("compose_witnesses: misaligned blocks");
  }
  return out;
}

ChainCategory::ChainCategory(const ASet& X, int alpha, int beta, int n)
    : aset_(&X), alpha_(alpha), beta_(beta), n_(n) {
  objects_ = chain_objects(X, alpha, beta, n);
  for (std::size_t i = 0; i < objects_.size(); ++i) object_index_[objects_[i]] = int(i);

  const CubeCategory& A = X.category();
  // Witness lists are shared between object pairs with the same compositions.
  std::map<std::pair<Composition, Composition>, std::vector<Witness>> witness_cache;
  std::set<ChainMorphism> found;
  for (std::size_t bi = 0; bi < objects_.size(); ++bi) {
    const CubeChain& b = objects_[bi];
    std::set<Composition> source_comps;
    for (const CubeChain& a : objects_)
      if (a.comp.refines(b.comp)) source_comps.insert(a.comp);
    for (const Composition& ca : source_comps) {
      auto key = std::make_pair(ca, b.comp);
      auto it = witness_cache.find(key);
      if (it == witness_cache.end())
        it = witness_cache.emplace(key, enumerate_nbar_maps(A, ca, b.comp)).first;
      for (const Witness& w : it->second) {
        CubeChain a = apply_witness(X, w, b);
        auto oi = object_index_.find(a);
        if (oi == object_index_.end()) continue;  // endpoints can only match
        found.insert(ChainMorphism{oi->second, int(bi), w});
      }
    }
  }
  morphisms_.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    morphism_index_[{morphisms_[i].src, morphisms_[i].tgt, morphisms_[i].witness}] = int(i);

  identity_of_.assign(objects_.size(), -1);
  out_.assign(objects_.size(), {});
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    const ChainMorphism& m = morphisms_[i];
    out_[m.src].push_back(int(i));
    if (m.src == m.tgt && m.witness == identity_witness(objects_[m.src].comp))
      identity_of_[m.src] = int(i);
  }
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (identity_of_[i] < 0) throw std::logic_error("missing identity morphism");
}

int ChainCategory::object_index(const CubeChain& c) const {
  auto it = object_index_.find(c);
  return it == object_index_.end() ? -1 : it->second;
}

int ChainCategory::morphism_index(int src, int tgt, const Witness& w) const {
  auto it = morphism_index_.find({src, tgt, w});
  return it == morphism_index_.end() ? -1 : it->second;
}

int ChainCategory::compose(int second, int first) const {
  const ChainMorphism& g = morphisms_[second];
  const ChainMorphism& f = morphisms_[first];
  if (f.tgt != g.src) throw std::invalid_argument("compose: morphisms not composable");
  std::uint64_t key = (std::uint64_t(second) << 32) | std::uint64_t(first);
  auto memo = compose_memo_.find(key);
  if (memo != compose_memo_.end()) return memo->second;
  Witness w = compose_witnesses(g.witness, objects_[g.src].comp, f.witness,
                                objects_[g.tgt].comp);
  int idx = morphism_index(f.src, g.tgt, w);
  if (idx < 0) throw std::logic_error("composition left the enumerated morphism set");
  compose_memo_.emplace(key, idx);
  return idx;
}

CategoryLawReport verify_category_laws(const ChainCategory& C, long long triple_budget) {
  CategoryLawReport rep;
  auto fail = [&rep](std::string what) {
    if (rep.ok) rep.first_violation = std::move(what);
    rep.ok = false;
  };
  const auto& ms = C.morphisms();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (C.compose(int(i), C.identity_of(ms[i].src)) != int(i) ||
        C.compose(C.identity_of(ms[i].tgt), int(i)) != int(i)) {
      fail("identity law failed at morphism " + std::to_string(i));
      return rep;
    }
  }
  long long triples = 0;
  for (std::size_t f = 0; f < ms.size() && rep.ok; ++f)
    for (int g : C.morphisms_from(ms[f].tgt)) {
      for (int h : C.morphisms_from(ms[g].tgt)) {
        if (++triples > triple_budget) {
          rep.associativity_skipped = true;
          return rep;
        }
        if (C.compose(h, C.compose(g, int(f))) != C.compose(C.compose(h, g), int(f))) {
          fail("associativity failed");
          return rep;
        }
      }
      if (!rep.ok) break;
    }
  rep.triples_checked = triples;
  return rep;
}

LiftFunctor lift_functor(const ChainCategory& chK, const ChainCategory& chL,
                         const FreeASet& L) {
  LiftFunctor F;
  F.source = &chK;
  F.target = &chL;
  // identity endomorphism index per dimension
  const CubeCategory& A = L.category();
  std::vector<int> id_index(A.max_dim + 1, -1);
  for (int d = 0; d <= A.max_dim; ++d) id_index[d] = A.index_of(CubeMap::identity(d));

  for (const CubeChain& c : chK.objects()) {
    CubeChain image;
    image.comp = c.comp;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
      int d = c.comp.parts[i];
      image.cells.push_back(L.pair_to_cell(d, id_index[d], c.cells[i]));
    }
    int idx = chL.object_index(image);
    if (idx < 0) throw std::logic_error("lift_functor: image object missing");
    F.object_map.push_back(idx);
  }
  for (const ChainMorphism& m : chK.morphisms()) {
    int idx = chL.morphism_index(F.object_map[m.src], F.object_map[m.tgt], m.witness);
    if (idx < 0) throw std::logic_error("lift_functor: image morphism missing");
    F.morphism_map.push_back(idx);
  }
  return F;
}

CommaReport comma_initial(const ChainCategory& chK, const ChainCategory& chL,
                          const LiftFunctor& F, int c_index) {
  CommaReport rep;
  const FreeASet& L = dynamic_cast<const FreeASet&>(chL.aset());
  const CubeChain& c = chL.objects()[c_index];

  // Candidate initial object: strip the endomorphism decorations.
  CubeChain d0;
  d0.comp = c.comp;
  Witness w0(c.comp.block_count());
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    int d = c.comp.parts[i];
    auto [gi, ci] = L.cell_to_pair(d, c.cells[i]);
    d0.cells.push_back(ci);
    w0[i] = {L.category().endos(d)[gi]};
  }
  rep.initial_object = chK.object_index(d0);
  if (rep.initial_object < 0) {
    rep.ok = false;
    rep.failure = "underlying precubical chain is not an object of Ch(K)";
    return rep;
  }
  int Fd0 = F.object_map[rep.initial_object];
  rep.comparison_morphism = chL.morphism_index(c_index, Fd0, w0);
  if (rep.comparison_morphism < 0) {
    rep.ok = false;
    rep.failure = "comparison morphism to the candidate initial object is missing";
    return rep;
  }

  // Inverse image of the functor on objects.
  std::map<int, int> preimage;
  for (std::size_t i = 0; i < F.object_map.size(); ++i) preimage[F.object_map[i]] = int(i);

  // Every comma object (d, m : c -> F(d)) must receive exactly one morphism
  // from (d0, w0): a k : d0 -> d in Ch(K) with F(k) o w0 = m.
  for (int m_id : chL.morphisms_from(c_index)) {
    const ChainMorphism& m = chL.morphisms()[m_id];
    auto pre = preimage.find(m.tgt);
    if (pre == preimage.end()) continue;
    int d = pre->second;
    ++rep.comma_objects;
    int count = 0;
    for (int k_id : chK.morphisms_from(rep.initial_object)) {
      if (chK.morphisms()[k_id].tgt != d) continue;
      if (chL.compose(F.morphism_map[k_id], rep.comparison_morphism) == m_id) ++count;
    }
    if (count != 1) {
      rep.ok = false;
      rep.failure = "comma object with " + std::to_string(count) +
                    " morphisms from the candidate initial object";
      return rep;
    }
  }
  return rep;
}

BlockChain phi_block_chain(int n, VertexMask part_a) {
  const VertexMask all = VertexMask((1u << n) - 1);
  VertexMask part_b = all & ~part_a;
  if (part_a == 0 || part_b == 0)
    throw std::invalid_argument("phi_block_chain: partition must be proper");
  auto box_from = [n](VertexMask active, VertexMask constants) {
    CubeMap f;
    f.src_dim = bit_count(active);
    f.dst_dim = n;
    std::vector<int> slots;
    for (int j = 0; j < n; ++j)
      if ((active >> j) & 1) slots.push_back(j);
    f.table.resize(std::size_t{1} << f.src_dim);
    for (VertexMask x = 0; x < f.table.size(); ++x) {
      VertexMask v = constants;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if ((x >> k) & 1) v |= VertexMask{1} << slots[k];
      f.table[x] = v;
    }
    return f;
  };
  // phi_{A,B} sends the two top cells to the 0-face along B and the 1-face
  // along A; as a chain of A[n] this is that pair of box maps.
  return {box_from(part_a, 0), box_from(part_b, part_a)};
}

std::map<std::pair<Composition, Composition>, std::vector<Witness>>
closure_of_chain_generators(const CubeCategory& A, int n) {
  using Key = std::pair<Composition, Composition>;
  std::map<Key, std::set<Witness>> acc;
  std::vector<Composition> comps = compositions(n);

  // identities
  for (const Composition& c : comps) acc[{c, c}].insert(identity_witness(c));

  // delta_f: blockwise endomorphism tuples
  for (const Composition& c : comps) {
    std::vector<Witness> variants{Witness(c.block_count())};
    for (int j = 0; j < c.block_count(); ++j) {
      std::vector<Witness> next;
      for (const Witness& w : variants)
        for (const CubeMap& f : A.endos(c.parts[j])) {
          // only endomorphisms fixing the corners glue into a chain
          if (f.table.front() != 0 ||
              f.table.back() != VertexMask((1u << c.parts[j]) - 1))
            continue;
          Witness w2 = w;
          w2[j] = {f};
          next.push_back(std::move(w2));
        }
      variants = std::move(next);
    }
    for (Witness& w : variants) acc[{c, c}].insert(std::move(w));
  }

  // delta_{i,A,B}: split one block of the target into a proper partition
  for (const Composition& tgt : comps)
    for (int i = 0; i < tgt.block_count(); ++i) {
      int ni = tgt.parts[i];
      if (ni < 2) continue;
      for (VertexMask part_a = 1; part_a < VertexMask((1u << ni) - 1); ++part_a) {
        Composition src;
        for (int j = 0; j < tgt.block_count(); ++j) {
          if (j == i) {
            src.parts.push_back(bit_count(part_a));
            src.parts.push_back(ni - bit_count(part_a));
          } else {
            src.parts.push_back(tgt.parts[j]);
          }
        }
        Witness w(tgt.block_count());
        for (int j = 0; j < tgt.block_count(); ++j)
          w[j] = (j == i) ? phi_block_chain(ni, part_a)
                          : BlockChain{CubeMap::identity(tgt.parts[j])};
        acc[{src, tgt}].insert(std::move(w));
      }
    }

  // close under composition
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [kf, wsf] : acc)
      for (const auto& [kg, wsg] : acc) {
        if (kf.second != kg.first) continue;
        for (const Witness& wf : wsf)
          for (const Witness& wg : wsg) {
            Witness wc = compose_witnesses(wg, kg.first, wf, kg.second);
            Key key{kf.first, kg.second};
            if (!acc[key].count(wc)) {
              acc[key].insert(std::move(wc));
              changed = true;
            }
          }
        if (changed) break;
      }
  }

  std::map<Key, std::vector<Witness>> out;
  for (auto& [k, ws] : acc) out[k] = std::vector<Witness>(ws.begin(), ws.end());
  return out;
}

}  // namespace cubechains
