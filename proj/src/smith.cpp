#include "cubechains/smith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubechains {

SmithResult smith_dense(std::vector<std::vector<BigInt>> a) {
  SmithResult res;
  const int rows = int(a.size());
  const int cols = rows ? int(a[0].size()) : 0;
  std::vector<BigInt> diag;
  int t = 0;
  if (rows == 0 || cols == 0) return res;
  while (true) {
    // minimal nonzero entry in the remaining block
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        BigInt v = abs(a[i][j]);
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      BigInt q = a[i][t] / a[t][t];
      for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;  // remainder smaller than pivot
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      BigInt q = a[t][j] / a[t][t];
      for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // re-select a smaller pivot

    // divisibility: fold in any entry the pivot does not divide
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols && !redo; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          redo = true;
        }
    if (redo) continue;

    diag.push_back(abs(a[t][t]));
    ++t;
    if (t >= rows || t >= cols) break;
  }
  res.rank = int(diag.size());
  for (const BigInt& d : diag)
    if (d > 1) res.torsion.push_back(d);
  return res;
}

namespace {

using Column = std::vector<std::pair<int, long long>>;

struct Overflow : std::runtime_error {
  Overflow() : std::runtime_error("integer overflow in sparse elimination") {}
};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}
long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
  return r;
}

// col -= q * piv, both sorted by row.
Column axpy(const Column& col, long long q, const Column& piv) {
  Column out;
  out.reserve(col.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < piv.size()) {
    if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || piv[j].first < col[i].first) {
      out.emplace_back(piv[j].first, checked_mul(-q, piv[j].second));
      ++j;
    } else {
      long long v = checked_sub(col[i].second, checked_mul(q, piv[j].second));
      if (v != 0) out.emplace_back(col[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SmithResult smith_sparse(const SparseIntMatrix& m) {
  // Column reduction over Z using only +-1 pivots, keyed by lowest row.
  std::map<int, Column> pivots;  // pivot row -> reduced column
  std::vector<Column> deferred;

  auto reduce_lowest = [&](Column col) -> Column {
    while (!col.empty()) {
      auto [r, v] = col.back();
      auto it = pivots.find(r);
      if (it == pivots.end()) return col;
      long long s = it->second.back().second;  // +-1
      col = axpy(col, v * s, it->second);      // v/s == v*s for unit s
    }
    return col;
  };

  for (const auto& raw : m.columns) {
    Column col = reduce_lowest(raw);
    if (col.empty()) continue;
    long long low = col.back().second;
    if (low == 1 || low == -1) {
      int row = col.back().first;
      pivots.emplace(row, std::move(col));
    } else {
      deferred.push_back(std::move(col));
    }
  }

  // Clear deferred columns on all pivot rows; afterwards the residual block
  // lives on rows no unit pivot touches, so the unit part splits off as an
  // identity block under unimodular row and column operations.
  for (Column& col : deferred) {
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t k = col.size(); k-- > 0;) {
        auto it = pivots.find(col[k].first);
        if (it == pivots.end()) continue;
        long long s = it->second.back().second;
        col = axpy(col, col[k].second * s, it->second);
        again = true;
        break;
      }
    }
  }

  SmithResult res;
  res.rank = int(pivots.size());
  if (deferred.empty()) return res;

  std::map<int, int> row_map;
  for (const Column& col : deferred)
    for (auto [r, v] : col) row_map.emplace(r, 0);
  int nr = 0;
  for (auto& [r, idx] : row_map) idx = nr++;
  std::vector<std::vector<BigInt>> dense(nr, std::vector<BigInt>(deferred.size(), 0));
  for (std::size_t j = 0; j < deferred.size(); ++j)
    for (auto [r, v] : deferred[j]) dense[row_map[r]][j] = v;
  SmithResult rest = smith_dense(std::move(dense));
  res.rank += rest.rank;
  res.torsion = std::move(rest.torsion);
  return res;
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  try {
    return smith_sparse(m);
  } catch (const Overflow&) {
    // Entries outgrew 64 bits during elimination: redo densely over
    // arbitrary-precision integers.
    std::vector<std::vector<BigInt>> dense(m.rows, std::vector<BigInt>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j)
      for (auto [r, v] : m.columns[j]) dense[r][j] = v;
    return smith_dense(std::move(dense));
  }
}

}  // namespace cubechains
