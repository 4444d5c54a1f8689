#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary.  Each one avoids the library code path it checks.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include "alexcalc/algebra.hpp"
#include "alexcalc/p2graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix to_rows(const alexcalc::IntMatrix& m) {
  Matrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Laplace expansion; fine for the small minors used here.
inline std::int64_t det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    total += (j % 2 == 0 ? 1 : -1) * a[0][j] * det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

// Invariant factors d_k / d_{k-1}, d_k the gcd of all k x k minors.
inline std::vector<std::int64_t> determinantal_diagonal(const Matrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  const std::size_t n = std::min(rows, cols);
  std::vector<std::int64_t> diag(n, 0);
  std::int64_t previous = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Matrix sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, std::llabs(det(sub)));
      }
    if (g == 0) break;
    diag[k - 1] = g / previous;
    previous = g;
  }
  return diag;
}

// Textbook reduction by elementary row and column operations: move the
// smallest non-zero entry to the pivot, clear its row and column, repeat
// until it divides everything left.
inline std::vector<std::int64_t> elementary_diagonal(Matrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t br = rows, bc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (br == rows || std::llabs(a[r][c]) < std::llabs(a[br][bc]))) br = r, bc = c;
      if (br == rows) {
        std::vector<std::int64_t> diag(n, 0);
        for (std::size_t i = 0; i < t; ++i) diag[i] = std::llabs(a[i][i]);
        return diag;
      }
      std::swap(a[t], a[br]);
      for (auto& row : a) std::swap(row[t], row[bc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        clean = clean && a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        clean = clean && a[t][c] == 0;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] += a[bad][c];
    }
  }
  std::vector<std::int64_t> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = std::llabs(a[i][i]);
  return diag;
}

// Colored multigraph isomorphism by trying every color-preserving bijection.
// Returns the number of bijections examined through `checks` when non-null.
inline bool brute_isomorphic(const alexcalc::ColoredGraph& a, const alexcalc::ColoredGraph& b,
                             std::size_t* checks = nullptr) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> ab, aw, bb, bw;
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    (a.vertex(v).color == alexcalc::VertexColor::Black ? ab : aw).push_back(v);
  for (std::size_t v = 0; v < b.vertex_count(); ++v)
    (b.vertex(v).color == alexcalc::VertexColor::Black ? bb : bw).push_back(v);
  if (ab.size() != bb.size() || aw.size() != bw.size()) return false;
  std::map<std::pair<std::size_t, std::size_t>, int> target;
  for (auto [x, y] : b.edges()) ++target[{std::min(x, y), std::max(x, y)}];
  std::vector<std::size_t> image(a.vertex_count());
  std::size_t tried = 0;
  bool found = false;
  std::sort(bb.begin(), bb.end());
  do {
    std::sort(bw.begin(), bw.end());
    do {
      ++tried;
      for (std::size_t i = 0; i < ab.size(); ++i) image[ab[i]] = bb[i];
      for (std::size_t i = 0; i < aw.size(); ++i) image[aw[i]] = bw[i];
      std::map<std::pair<std::size_t, std::size_t>, int> mapped;
      for (auto [x, y] : a.edges()) {
        const std::size_t u = image[x], v = image[y];
        ++mapped[{std::min(u, v), std::max(u, v)}];
      }
      found = mapped == target;
    } while (!found && std::next_permutation(bw.begin(), bw.end()));
  } while (!found && std::next_permutation(bb.begin(), bb.end()));
  if (checks) *checks = tried;
  return found;
}

// Fixed points of the hyperelliptic involution of a genus-g surface, built
// as a (4g+2)-gon with opposite sides identified and rotated by half a turn.
// Cells are identified by union-find; a cell carried to itself contributes
// one fixed point (vertex, edge midpoint, or face centre).
inline std::size_t hyperelliptic_fixed_points(std::size_t g) {
  const std::size_t n = 4 * g + 2, half = n / 2;
  // Side i runs from corner i to corner i+1; it is glued to side i+half
  // reversed, so corner i ~ corner i+half+1.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < half; ++i) {
    parent[find(i)] = find((i + half + 1) % n);
    parent[find((i + 1) % n)] = find((i + half) % n);
  }
  std::size_t fixed = 1;  // centre of the face
  std::vector<bool> counted(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = find(i);
    if (counted[c]) continue;
    counted[c] = true;
    if (find((i + half) % n) == c) ++fixed;
  }
  // Side classes {i, i+half}: the rotation sends side i onto side i+half
  // with the reversed orientation, which the gluing undoes, so each side
  // class is preserved with its midpoint fixed.
  fixed += half;
  return fixed;
}

// Singular points of X_g: fixed points of (hyperelliptic) x (conjugation on
// S1), minus the two consumed when the capped pieces are glued.
inline std::size_t xg_singular_points(std::size_t g) { return hyperelliptic_fixed_points(g) * 2 - 2; }

}  // namespace oracle
