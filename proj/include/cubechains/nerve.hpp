#ifndef CUBECHAINS_NERVE_HPP
#define CUBECHAINS_NERVE_HPP

#include <functional>
#include <string>
#include <vector>

#include "cubechains/chains.hpp"
#include "cubechains/smith.hpp"

namespace cubechains {

// A finite category presented by arrows and a composition callback,
// sufficient to build the simplicial nerve.
struct SmallCategory {
  int objects = 0;
  struct Arrow {
    int src = 0, tgt = 0;
  };
  std::vector<Arrow> arrows;           // identities included
  std::vector<int> identity;           // per object, index into arrows
  std::function<int(int, int)> compose;  // (second, first) -> arrow index

  bool is_identity(int a) const { return identity[arrows[a].src] == a; }
};

SmallCategory to_small_category(const ChainCategory& C);

// Nondegenerate simplices of the nerve: strings of composable non-identity
// arrows, built level by level up to max_degree, aborting a level when the
// simplex budget is exceeded.
struct NerveComplex {
  int levels_built = 0;  // strings of length <= levels_built are present
  bool budget_hit = false;
  std::vector<long long> simplex_counts;       // per level 0..levels_built
  std::vector<SparseIntMatrix> boundaries;     // boundaries[k] = d_k, k >= 1
};

struct NerveOptions {
  int max_degree = 4;                   // nerve truncation D
  long long simplex_budget = 2'000'000;  // per-level cap
};

NerveComplex nerve(const SmallCategory& C, const NerveOptions& opt);

struct HomologyDegree {
  long long betti = 0;
  std::vector<std::string> torsion;  // invariant factors > 1, decimal
  bool operator==(const HomologyDegree&) const = default;
};

struct HomologyResult {
  int pi0 = 0;
  int truncation = 0;          // requested D
  int computed_through = -1;   // homology exact for degrees <= this
  bool truncated_by_budget = false;
  std::vector<HomologyDegree> H;          // degrees 0..computed_through
  std::vector<long long> simplex_counts;  // levels actually built
  bool dd_zero = true;                    // boundary-squared check

  bool agrees_with(const HomologyResult& o) const;  // on shared degrees + pi0
};

// pi0 (exact, independent of truncation) plus integer homology of the
// normalized nerve through the feasible degrees.
HomologyResult category_homology(const SmallCategory& C, const NerveOptions& opt);
HomologyResult chain_category_homology(const ChainCategory& C, const NerveOptions& opt);

}  // namespace cubechains

#endif
