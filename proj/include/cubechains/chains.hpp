#ifndef CUBECHAINS_CHAINS_HPP
#define CUBECHAINS_CHAINS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubechains/aset.hpp"

namespace cubechains {

// A composition of n: positive parts summing to n.  n = 0 is the empty
// composition.  Canonical order is lexicographic on the vertex sets, so
// finer compositions come first.
struct Composition {
  std::vector<int> parts;

  int total() const;
  int block_count() const { return int(parts.size()); }
  std::vector<int> vtx() const;  // partial sums, including 0 and total

  bool operator==(const Composition&) const = default;
  bool operator<(const Composition& o) const { return vtx() < o.vtx(); }

  // True when vtx(o) is a subset of vtx(*this), the morphism condition.
  bool refines(const Composition& o) const;
};

// All 2^(n-1) compositions of n >= 1 in canonical order; {()} for n = 0.
std::vector<Composition> compositions(int n);

// A cube chain in X from alpha to beta: gluable cells, one per part.
struct CubeChain {
  Composition comp;
  std::vector<int> cells;
  bool operator==(const CubeChain&) const = default;
  bool operator<(const CubeChain& o) const {
    if (comp.parts != o.comp.parts) return comp < o.comp;
    return cells < o.cells;
  }
};

// Witness of a chain morphism a -> b: one chain of the standard block cube
// per target block.  Block j of the target (size M) carries maps
// h_t : [m_t] -> [M] in A forming a chain from the bottom to the top
// vertex, with (m_t) the parts of a lying inside that block.
using BlockChain = std::vector<CubeMap>;
using Witness = std::vector<BlockChain>;

struct ChainMorphism {
  int src = 0, tgt = 0;
  Witness witness;
  bool operator==(const ChainMorphism&) const = default;
  bool operator<(const ChainMorphism& o) const {
    if (src != o.src) return src < o.src;
    if (tgt != o.tgt) return tgt < o.tgt;
    return witness < o.witness;
  }
};

// All chain objects from alpha to beta of total dimension n, over every
// composition, in canonical order.
std::vector<CubeChain> chain_objects(const ASet& X, int alpha, int beta, int n);

// All witnesses A[comp_a] -> A[comp_b]; empty when the vertex condition
// fails.  Enumeration is by the Yoneda form: per-block chains of the
// standard block cube.
std::vector<Witness> enumerate_nbar_maps(const CubeCategory& A,
                                         const Composition& comp_a,
                                         const Composition& comp_b);

// Blockwise action of a witness on a chain over comp_b, producing the
// source chain over comp_a.
CubeChain apply_witness(const ASet& X, const Witness& w, const CubeChain& target);

Witness identity_witness(const Composition& comp);

// Composite witness of a -> b -> c from the two witnesses and the middle
// composition.
Witness compose_witnesses(const Witness& second, const Composition& comp_b,
                          const Witness& first, const Composition& comp_c);

// The finite category of cube chains from alpha to beta of total
// dimension n, with all morphisms and composition by witness substitution.
class ChainCategory {
 public:
  ChainCategory(const ASet& X, int alpha, int beta, int n);

  const ASet& aset() const { return *aset_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int total_dim() const { return n_; }

  const std::vector<CubeChain>& objects() const { return objects_; }
  const std::vector<ChainMorphism>& morphisms() const { return morphisms_; }
  int object_index(const CubeChain& c) const;
  int morphism_index(int src, int tgt, const Witness& w) const;
  int identity_of(int object) const { return identity_of_[object]; }
  bool is_identity(int morphism) const {
    return identity_of_[morphisms_[morphism].src] == morphism;
  }
  const std::vector<int>& morphisms_from(int object) const { return out_[object]; }

  // Composite morphism id of (second after first); memoized.
  int compose(int second, int first) const;

 private:
  const ASet* aset_;
  int alpha_, beta_, n_;
  std::vector<CubeChain> objects_;
  std::vector<ChainMorphism> morphisms_;
  std::map<CubeChain, int> object_index_;
  std::map<std::tuple<int, int, Witness>, int> morphism_index_;
  std::vector<int> identity_of_;
  std::vector<std::vector<int>> out_;
  mutable std::unordered_map<std::uint64_t, int> compose_memo_;
};

// Checks identity and associativity laws; associativity is skipped (with
// ok=true, skipped flag) past the triple budget.
struct CategoryLawReport {
  bool ok = true;
  bool associativity_skipped = false;
  long long triples_checked = 0;
  std::string first_violation;
};
CategoryLawReport verify_category_laws(const ChainCategory& C,
                                       long long triple_budget = 2'000'000);

// The functor Ch(K) -> Ch(L_A(K)) induced by the free construction.
struct LiftFunctor {
  const ChainCategory* source = nullptr;
  const ChainCategory* target = nullptr;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};
LiftFunctor lift_functor(const ChainCategory& chK, const ChainCategory& chL,
                         const FreeASet& L);

// Initial object of the comma category (c down-to L^K) for an object c of
// Ch(L_A(K)), with an exhaustive uniqueness certificate.
struct CommaReport {
  bool ok = true;
  int initial_object = -1;    // object of Ch(K)
  int comparison_morphism = -1;  // morphism c -> F(initial) in Ch(L)
  long long comma_objects = 0;
  std::string failure;
};
CommaReport comma_initial(const ChainCategory& chK, const ChainCategory& chL,
                          const LiftFunctor& F, int c_index);

// Generating morphisms of Theorem-style presentations: the block-merge
// phi_{A,B} pair and their closure, used to cross-check the Yoneda
// enumeration on small instances.
BlockChain phi_block_chain(int n, VertexMask part_a);  // A = mask, B = complement
std::map<std::pair<Composition, Composition>, std::vector<Witness>>
closure_of_chain_generators(const CubeCategory& A, int n);

}  // namespace cubechains

#endif
