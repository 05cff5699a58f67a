#include "cubechains/cube_map.hpp"

#include <algorithm>
#include <functional>

namespace cubechains {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

CubeMap CubeMap::identity(int n) {
  require(n >= 0, "identity: negative dimension");
  CubeMap f;
  f.src_dim = f.dst_dim = n;
  f.table.resize(std::size_t{1} << n);
  for (VertexMask x = 0; x < f.table.size(); ++x) f.table[x] = x;
  return f;
}

CubeMap CubeMap::coface(int n, int i, int alpha) {
  require(n >= 1 && i >= 1 && i <= n, "coface: need 1 <= i <= n");
  require(alpha == 0 || alpha == 1, "coface: alpha must be 0 or 1");
  CubeMap f;
  f.src_dim = n - 1;
  f.dst_dim = n;
  f.table.resize(std::size_t{1} << (n - 1));
  const VertexMask low_mask = (VertexMask{1} << (i - 1)) - 1;
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    VertexMask low = x & low_mask;
    VertexMask high = x >> (i - 1);
    f.table[x] = low | (VertexMask(alpha) << (i - 1)) | (high << i);
  }
  return f;
}

CubeMap CubeMap::symmetry(int n, int i) {
  require(n >= 2 && i >= 1 && i <= n - 1, "symmetry: need 1 <= i <= n-1");
  CubeMap f = identity(n);
  const VertexMask a = VertexMask{1} << (i - 1), b = VertexMask{1} << i;
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    VertexMask y = x & ~(a | b);
    if (x & a) y |= b;
    if (x & b) y |= a;
    f.table[x] = y;
  }
  return f;
}

CubeMap CubeMap::fold_max_min(int n, int i) {
  require(n >= 2 && i >= 1 && i <= n - 1, "fold_max_min: need 1 <= i <= n-1");
  CubeMap f = identity(n);
  const VertexMask a = VertexMask{1} << (i - 1), b = VertexMask{1} << i;
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    VertexMask y = x & ~(a | b);
    bool xi = x & a, xj = x & b;
    if (xi || xj) y |= a;   // max at coordinate i
    if (xi && xj) y |= b;   // min at coordinate i+1
    f.table[x] = y;
  }
  return f;
}

CubeMap CubeMap::vertex_inclusion(int n, VertexMask v) {
  require(n >= 0 && v < (VertexMask{1} << n), "vertex_inclusion: vertex out of range");
  CubeMap f;
  f.src_dim = 0;
  f.dst_dim = n;
  f.table = {v};
  return f;
}

CubeMap compose(const CubeMap& g, const CubeMap& f) {
  if (f.dst_dim != g.src_dim)
    throw std::invalid_argument("compose: dimension mismatch");
  CubeMap h;
  h.src_dim = f.src_dim;
  h.dst_dim = g.dst_dim;
  h.table.resize(f.table.size());
  for (std::size_t x = 0; x < f.table.size(); ++x) h.table[x] = g.table[f.table[x]];
  return h;
}

bool is_strictly_increasing(const CubeMap& f) {
  for (VertexMask x = 0; x < f.table.size(); ++x)
    for (int i = 0; i < f.src_dim; ++i) {
      if ((x >> i) & 1) continue;
      VertexMask y = x | (VertexMask{1} << i);
      VertexMask fx = f.table[x], fy = f.table[y];
      if (!vertex_leq(fx, fy) || fx == fy) return false;
    }
  return true;
}

bool is_cotransverse(const CubeMap& f) {
  for (VertexMask x = 0; x < f.table.size(); ++x)
    for (int i = 0; i < f.src_dim; ++i) {
      if ((x >> i) & 1) continue;
      VertexMask y = x | (VertexMask{1} << i);
      if (vertex_d1(f.table[x], f.table[y]) != 1) return false;
    }
  return true;
}

bool is_injective(const CubeMap& f) {
  std::vector<VertexMask> t = f.table;
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) == t.end();
}

VertexMask active_coordinates(const CubeMap& f) {
  // Monotone maps attain their extremes at the corners.
  VertexMask bottom = f.table.front();
  VertexMask top = f.table.back();
  return bottom ^ top;
}

bool is_box_map(const CubeMap& f) {
  if (!is_cotransverse(f)) return false;
  VertexMask active = active_coordinates(f);
  if (bit_count(active) != f.src_dim) return false;
  // Box maps place the source coordinates into the active slots in order.
  std::vector<int> slots;
  for (int j = 0; j < f.dst_dim; ++j)
    if ((active >> j) & 1) slots.push_back(j);
  const VertexMask constants = f.table.front();
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    VertexMask expect = constants;
    for (int k = 0; k < f.src_dim; ++k)
      if ((x >> k) & 1) expect |= VertexMask{1} << slots[k];
    if (f.table[x] != expect) return false;
  }
  return true;
}

Factorization factorize(const CubeMap& f) {
  const int m = f.src_dim, n = f.dst_dim;
  VertexMask active = active_coordinates(f);
  if (bit_count(active) != m)
    throw std::invalid_argument("factorize: input is not cotransverse");
  std::vector<int> slots;
  for (int j = 0; j < n; ++j)
    if ((active >> j) & 1) slots.push_back(j);

  Factorization r;
  r.psi.src_dim = r.psi.dst_dim = m;
  r.psi.table.resize(f.table.size());
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    VertexMask y = 0;
    for (int k = 0; k < m; ++k)
      if ((f.table[x] >> slots[k]) & 1) y |= VertexMask{1} << k;
    r.psi.table[x] = y;
  }

  const VertexMask constants = f.table.front() & ~active;
  r.phi.src_dim = m;
  r.phi.dst_dim = n;
  r.phi.table.resize(f.table.size());
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    VertexMask v = constants;
    for (int k = 0; k < m; ++k)
      if ((x >> k) & 1) v |= VertexMask{1} << slots[k];
    r.phi.table[x] = v;
  }
  return r;
}

std::vector<CubeMap> box_homset(int m, int n) {
  if (m > n || m < 0) return {};
  std::vector<CubeMap> out;
  // Iterate over active coordinate sets (as masks) and constant values.
  for (VertexMask active = 0; active < (VertexMask{1} << n); ++active) {
    if (bit_count(active) != m) continue;
    std::vector<int> slots;
    for (int j = 0; j < n; ++j)
      if ((active >> j) & 1) slots.push_back(j);
    std::vector<int> rest;
    for (int j = 0; j < n; ++j)
      if (!((active >> j) & 1)) rest.push_back(j);
    for (VertexMask cbits = 0; cbits < (VertexMask{1} << rest.size()); ++cbits) {
      CubeMap f;
      f.src_dim = m;
      f.dst_dim = n;
      f.table.resize(std::size_t{1} << m);
      VertexMask constants = 0;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if ((cbits >> k) & 1) constants |= VertexMask{1} << rest[k];
      for (VertexMask x = 0; x < f.table.size(); ++x) {
        VertexMask v = constants;
        for (int k = 0; k < m; ++k)
          if ((x >> k) & 1) v |= VertexMask{1} << slots[k];
        f.table[x] = v;
      }
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CubeMap> enumerate_cotransverse(int m, int n) {
  if (m < 0 || m > n) return {};
  if (m > 3)
    throw FeasibilityError(
        "enumeration infeasible for source dimension > 3; "
        "build the hom-set by generated closure instead");
  std::vector<CubeMap> out;
  const int src_size = 1 << m;
  std::vector<VertexMask> order(src_size);
  for (int v = 0; v < src_size; ++v) order[v] = VertexMask(v);
  std::sort(order.begin(), order.end(), [](VertexMask a, VertexMask b) {
    return std::pair(bit_count(a), a) < std::pair(bit_count(b), b);
  });

  std::vector<VertexMask> table(src_size, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      CubeMap f;
      f.src_dim = m;
      f.dst_dim = n;
      f.table = table;
      out.push_back(std::move(f));
      return;
    }
    VertexMask x = order[k];
    if (x == 0) {
      for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) {
        table[0] = v;
        rec(k + 1);
      }
      return;
    }
    // f(x) must be an upper Hamming neighbor of f(x - e_i) for every i in x.
    bool first = true;
    std::vector<VertexMask> cands;
    for (int i = 0; i < m; ++i) {
      if (!((x >> i) & 1)) continue;
      VertexMask prev = table[x ^ (VertexMask{1} << i)];
      std::vector<VertexMask> ups;
      for (int j = 0; j < n; ++j)
        if (!((prev >> j) & 1)) ups.push_back(prev | (VertexMask{1} << j));
      if (first) {
        cands = std::move(ups);
        first = false;
      } else {
        std::vector<VertexMask> merged;
        for (VertexMask u : cands)
          if (std::find(ups.begin(), ups.end(), u) != ups.end()) merged.push_back(u);
        cands = std::move(merged);
      }
      if (cands.empty()) return;
    }
    for (VertexMask v : cands) {
      table[x] = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_hat_square(const CubeMap& f) {
  for (int p = 0; p <= f.src_dim; ++p)
    for (const CubeMap& delta : box_homset(p, f.src_dim)) {
      CubeMap fd = compose(f, delta);
      if (is_injective(fd) && !is_box_map(fd)) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> box_constant_positions(const CubeMap& phi) {
  VertexMask active = active_coordinates(phi);
  const VertexMask constants = phi.table.front();
  std::vector<std::pair<int, int>> out;
  for (int j = phi.dst_dim; j >= 1; --j)
    if (!((active >> (j - 1)) & 1))
      out.emplace_back(j, int((constants >> (j - 1)) & 1));
  return out;
}

std::string vertex_to_string(VertexMask v, int dim) {
  if (dim == 0) return "()";
  std::string s;
  for (int i = 0; i < dim; ++i) s += ((v >> i) & 1) ? '1' : '0';
  return s;
}

std::string to_string(const CubeMap& f) {
  std::string s = "[" + std::to_string(f.src_dim) + "]->[" + std::to_string(f.dst_dim) + "]:";
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    if (x) s += ",";
    s += vertex_to_string(f.table[x], f.dst_dim);
  }
  return s;
}

}  // namespace cubechains
