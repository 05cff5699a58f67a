#ifndef CUBECHAINS_SMITH_HPP
#define CUBECHAINS_SMITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cubechains {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix, column-major; rows within a column are sorted.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> columns;
};

struct SmithResult {
  int rank = 0;
  // Nontrivial invariant factors (> 1) in divisibility order.
  std::vector<BigInt> torsion;
};

// Exact Smith normal form data of an integer matrix.  Unit pivots are
// eliminated sparsely; the remaining block is finished by a dense
// minimal-pivot reduction over arbitrary-precision integers.
SmithResult smith_normal_form(const SparseIntMatrix& m);

// Dense reference implementation (for tests and the sparse residual).
SmithResult smith_dense(std::vector<std::vector<BigInt>> a);

}  // namespace cubechains

#endif
