#ifndef CUBECHAINS_HDA_HPP
#define CUBECHAINS_HDA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubechains/aset.hpp"
#include "cubechains/nerve.hpp"

namespace cubechains {

// A labelled directed graph: the 1-skeleton of a higher-dimensional
// automaton.  The reachability order must be a partial order (acyclic),
// which keeps cube filling finite.
struct LabelledSkeleton {
  std::vector<std::string> vertices;
  struct Edge {
    int src = 0, dst = 0;
    std::string label;
  };
  std::vector<Edge> edges;

  int vertex_index(const std::string& name) const;  // -1 if absent
  bool is_acyclic() const;
};

// Synchronizable label pairs, unordered, each with a result label.
struct SyncAlgebra {
  struct Rule {
    std::string a, b, result = "tau";
  };
  std::vector<Rule> rules;
  std::optional<std::string> result_of(const std::string& x, const std::string& y) const;
};

// The 1-skeleton of the labelled n-cube: vertices {0,1}^n, increasing
// Hamming edges, direction i labelled labels[i-1].
LabelledSkeleton labelled_cube_skeleton(const std::vector<std::string>& labels);

// Sequential word a_1 . a_2 ... : a path of labelled edges.
LabelledSkeleton path_skeleton(const std::vector<std::string>& labels);

// CCS-style product: interleaving edges from both factors plus one diagonal
// edge per synchronizable pair of edges.
LabelledSkeleton parallel_compose(const LabelledSkeleton& X, const LabelledSkeleton& Y,
                                  const SyncAlgebra& sync);

// Coskeletal filling over the full symmetric transverse cube category.
// Seed cells are vertex functions mapping every increasing Hamming edge to
// an edge of S and, per coordinate direction, reading a single common
// label; the stored cells are the closure of the seeds under precomposition
// with cotransverse endomorphisms, which makes the action well-defined.
// Unlabelled skeleta use the edge condition alone.
CoskeletalASet cosk1_fill(const LabelledSkeleton& S, int max_dim,
                          std::shared_ptr<const CubeCategory> hat_box_s);

// Dims 0-1 of a skeleton as a labelled precubical set.
PrecubicalSet skeleton_as_precubical(const LabelledSkeleton& S);

// Chain-category invariants of a model between two states, aggregated over
// every total dimension 0..n_max (chains of different totals never
// interact).
struct ChainInvariants {
  struct PerN {
    int n = 0;
    long long objects = 0, morphisms = 0;
    HomologyResult homology;
  };
  std::vector<PerN> per_n;
  int pi0_total = 0;  // sum over nonempty totals
};
ChainInvariants chain_invariants(const ASet& X, int alpha, int beta, int n_max,
                                 const NerveOptions& opt);

// Section-5 comparison: the coskeletal model of a parallel composition of
// two labelled cubes against the free symmetric transverse model of their
// precubical tensor product (sync must be empty for the free side to be a
// faithful mirror).
struct ModelComparison {
  std::vector<std::string> left, right;
  bool has_sync = false;
  ChainInvariants coskeletal;
  std::optional<ChainInvariants> free_model;
  bool agree = false;       // meaningful when free_model is present
  std::string disagreement;
};
ModelComparison compare_models(const std::vector<std::string>& left,
                               const std::vector<std::string>& right,
                               const SyncAlgebra& sync, const NerveOptions& opt);

}  // namespace cubechains

#endif
