#include "alexcalc/p2graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "alexcalc/error.hpp"

namespace alexcalc {

std::size_t ColoredGraph::add_vertex(std::string id, VertexColor color) {
  if (find(id)) throw Error(ErrorCode::CatalogError, "duplicate graph vertex '" + id + "'");
  vertices_.push_back({std::move(id), color});
  return vertices_.size() - 1;
}

void ColoredGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= vertices_.size() || b >= vertices_.size())
    throw Error(ErrorCode::VertexMissing, "edge endpoint out of range");
  edges_.emplace_back(std::min(a, b), std::max(a, b));
}

void ColoredGraph::add_edge(std::string_view a, std::string_view b) {
  add_edge(index_of(a), index_of(b));
}

void ColoredGraph::remove_vertex(std::size_t v) {
  if (v >= vertices_.size()) throw Error(ErrorCode::VertexMissing, "vertex index out of range");
  vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(v));
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  kept.reserve(edges_.size());
  for (auto [a, b] : edges_) {
    if (a == v || b == v) continue;
    kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  edges_ = std::move(kept);
}

std::optional<std::size_t> ColoredGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t ColoredGraph::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::VertexMissing, "no vertex '" + std::string(id) + "'");
}

std::size_t ColoredGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto [a, b] : edges_) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

std::vector<std::size_t> ColoredGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ColoredGraph::multiplicity(std::size_t a, std::size_t b) const {
  const auto key = std::make_pair(std::min(a, b), std::max(a, b));
  return static_cast<std::size_t>(std::count(edges_.begin(), edges_.end(), key));
}

bool ColoredGraph::satisfies_degree_law() const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const std::size_t d = degree(v);
    if (vertices_[v].color == VertexColor::White ? d != 1 : d % 2 != 0) return false;
  }
  return true;
}

ColoredGraph ColoredGraph::prefixed(std::string_view prefix) const {
  ColoredGraph out = *this;
  for (Vertex& v : out.vertices_) v.id = std::string(prefix) + v.id;
  return out;
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  ColoredGraph out = a;
  const std::size_t offset = a.vertex_count();
  for (const auto& v : b.vertices()) out.add_vertex(v.id, v.color);
  for (auto [x, y] : b.edges()) out.add_edge(x + offset, y + offset);
  return out;
}

void join_whites(ColoredGraph& g, std::size_t white_a, std::size_t white_b) {
  for (std::size_t w : {white_a, white_b}) {
    if (w >= g.vertex_count()) throw Error(ErrorCode::VertexMissing, "white vertex out of range");
    if (g.vertex(w).color != VertexColor::White)
      throw Error(ErrorCode::NotWhite, "vertex '" + g.vertex(w).id + "' is not white");
  }
  if (white_a == white_b) throw Error(ErrorCode::NotWhite, "cannot glue a boundary plane to itself");
  const auto na = g.neighbors(white_a);
  const auto nb = g.neighbors(white_b);
  if (na.size() != 1 || nb.size() != 1)
    throw Error(ErrorCode::NotWhite, "white vertices must have degree 1");
  if (na[0] == white_b) throw Error(ErrorCode::NotWhite, "whites are adjacent to each other");
  g.add_edge(na[0], nb[0]);
  g.remove_vertex(std::max(white_a, white_b));
  g.remove_vertex(std::min(white_a, white_b));
}

ColoredGraph compose_p2(const ColoredGraph& a, std::string_view white_a,
                        const ColoredGraph& b, std::string_view white_b) {
  const std::size_t ia = a.index_of(white_a);
  const std::size_t ib = b.index_of(white_b);
  ColoredGraph out = disjoint_union(a.prefixed("L."), b.prefixed("R."));
  join_whites(out, ia, a.vertex_count() + ib);
  return out;
}

ColoredGraph compose_s2(const ColoredGraph& a, const ColoredGraph& b) {
  return disjoint_union(a.prefixed("L."), b.prefixed("R."));
}

namespace {

using Matrix = std::vector<std::vector<std::size_t>>;

Matrix adjacency(const ColoredGraph& g) {
  Matrix m(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (auto [a, b] : g.edges()) {
    if (a == b) {
      m[a][a] += 1;  // loop count
    } else {
      m[a][b] += 1;
      m[b][a] += 1;
    }
  }
  return m;
}

// ---- backtracking isomorphism ---------------------------------------------

struct VertexClass {
  int color;
  std::size_t degree;
  std::size_t loops;
  auto operator<=>(const VertexClass&) const = default;
};

class Matcher {
 public:
  Matcher(const ColoredGraph& a, const ColoredGraph& b)
      : a_(adjacency(a)), b_(adjacency(b)), n_(a.vertex_count()) {
    for (std::size_t v = 0; v < n_; ++v) {
      ca_.push_back({a.vertex(v).color == VertexColor::White, a.degree(v), a_[v][v]});
      cb_.push_back({b.vertex(v).color == VertexColor::White, b.degree(v), b_[v][v]});
    }
    // Blacks of high degree first, then breadth-first so that every later
    // vertex is constrained by an already-mapped neighbor.
    std::vector<std::size_t> seeds(n_);
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t x, std::size_t y) {
      if (ca_[x].color != ca_[y].color) return ca_[x].color < ca_[y].color;
      return ca_[x].degree > ca_[y].degree;
    });
    std::vector<bool> seen(n_, false);
    for (std::size_t s : seeds) {
      if (seen[s]) continue;
      std::vector<std::size_t> queue{s};
      seen[s] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t v = queue[head];
        order_.push_back(v);
        for (std::size_t w = 0; w < n_; ++w)
          if (!seen[w] && a_[v][w] > 0) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
    }
    map_.assign(n_, n_);
    used_.assign(n_, false);
  }

  bool run() {
    std::vector<VertexClass> sa = ca_, sb = cb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || cb_[w] != ca_[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t u = order_[k];
        ok = a_[v][u] == b_[w][map_[u]];
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = n_;
    }
    return false;
  }

  Matrix a_, b_;
  std::size_t n_;
  std::vector<VertexClass> ca_, cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

// ---- canonical labelling by individualization-refinement --------------------

using Partition = std::vector<std::vector<std::size_t>>;

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), adj_(adjacency(g)), n_(g.vertex_count()) {
    lists_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w)
        for (std::size_t k = 0; k < adj_[v][w]; ++k) lists_[v].push_back(w);
  }

  std::string run() {
    Partition p(2);
    for (std::size_t v = 0; v < n_; ++v)
      p[g_.vertex(v).color == VertexColor::White ? 1 : 0].push_back(v);
    p.erase(std::remove_if(p.begin(), p.end(), [](const auto& c) { return c.empty(); }), p.end());
    std::vector<std::size_t> prefix;
    search(p, prefix);
    return best_;
  }

 private:
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        std::vector<std::size_t> count(n_, 0);
        for (std::size_t w : p[s])
          for (std::size_t u : lists_[w]) ++count[u];
        for (std::size_t i = 0; i < p.size(); ++i) {
          auto& cell = p[i];
          if (cell.size() < 2) continue;
          const bool uniform = std::all_of(cell.begin(), cell.end(),
                                           [&](std::size_t v) { return count[v] == count[cell[0]]; });
          if (uniform) continue;
          std::map<std::size_t, std::vector<std::size_t>> split;
          for (std::size_t v : cell) split[count[v]].push_back(v);
          Partition pieces;
          for (auto& [c, vs] : split) pieces.push_back(std::move(vs));
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::string certificate(const std::vector<std::size_t>& position) const {
    std::vector<std::size_t> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[position[v]] = v;
    std::string out;
    out.reserve(n_ + n_ * (n_ + 1) / 2 + 1);
    for (std::size_t i = 0; i < n_; ++i)
      out.push_back(g_.vertex(at[i]).color == VertexColor::White ? 'w' : 'b');
    out.push_back('|');
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        const std::size_t m = adj_[at[i]][at[j]];
        out.push_back(static_cast<char>(m < 10 ? '0' + m : 'A' + std::min<std::size_t>(m - 10, 25)));
      }
    return out;
  }

  bool is_transposition_automorphism(std::size_t u, std::size_t v) const {
    if (g_.vertex(u).color != g_.vertex(v).color) return false;
    if (adj_[u][u] != adj_[v][v]) return false;
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (adj_[u][w] != adj_[v][w]) return false;
    }
    return true;
  }

  std::size_t find(std::vector<std::size_t>& parent, std::size_t x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void search(Partition p, std::vector<std::size_t>& prefix) {
    refine(p);
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].size() > 1 && (target == p.size() || p[i].size() < p[target].size())) target = i;

    if (target == p.size()) {
      std::vector<std::size_t> position(n_);
      for (std::size_t i = 0; i < p.size(); ++i) position[p[i][0]] = i;
      std::string cert = certificate(position);
      if (!have_best_ || cert < best_) {
        best_ = std::move(cert);
        best_position_ = position;
        have_best_ = true;
      } else if (cert == best_) {
        // Two leaves with equal certificates differ by an automorphism.
        std::vector<std::size_t> inverse_best(n_);
        for (std::size_t v = 0; v < n_; ++v) inverse_best[best_position_[v]] = v;
        std::vector<std::size_t> gamma(n_);
        for (std::size_t v = 0; v < n_; ++v) gamma[v] = inverse_best[position[v]];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }

    const std::vector<std::size_t> cell = p[target];
    std::vector<std::size_t> tried;
    for (std::size_t v : cell) {
      bool redundant = false;
      for (std::size_t u : tried)
        if (is_transposition_automorphism(u, v)) {
          redundant = true;
          break;
        }
      if (!redundant && !tried.empty()) {
        // Orbits of the known automorphisms that fix the prefix pointwise.
        std::vector<std::size_t> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
          const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                         [&](std::size_t x) { return gamma[x] == x; });
          if (!fixes) continue;
          for (std::size_t x = 0; x < n_; ++x) parent[find(parent, x)] = find(parent, gamma[x]);
        }
        for (std::size_t u : tried)
          if (find(parent, u) == find(parent, v)) {
            redundant = true;
            break;
          }
      }
      if (redundant) continue;
      tried.push_back(v);

      Partition child = p;
      auto& c = child[target];
      c.erase(std::find(c.begin(), c.end(), v));
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), std::vector<std::size_t>{v});
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const ColoredGraph& g_;
  Matrix adj_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> lists_;
  std::string best_;
  std::vector<std::size_t> best_position_;
  bool have_best_ = false;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

}  // namespace

bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return Matcher(a, b).run();
}

std::string canonical_label(const ColoredGraph& g) {
  if (g.empty()) return "empty";
  return Canonizer(g).run();
}

bool has_degenerate_parallel_pair(const ColoredGraph& g) {
  const Matrix m = adjacency(g);
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    for (std::size_t b = a + 1; b < g.vertex_count(); ++b) {
      if (m[a][b] < 2) continue;
      if (g.vertex(a).color != VertexColor::Black || g.vertex(b).color != VertexColor::Black) continue;
      if (g.degree(a) == m[a][b] || g.degree(b) == m[a][b]) return true;
    }
  return false;
}

std::string to_adjacency_text(const ColoredGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << g.vertex(v).id << ' ' << (g.vertex(v).color == VertexColor::White ? "white" : "black") << ':';
    const auto ns = g.neighbors(v);
    for (std::size_t i = 0; i < ns.size(); ++i) out << (i ? "," : " ") << g.vertex(ns[i]).id;
    out << '\n';
  }
  return out.str();
}

ColoredGraph parse_adjacency_text(std::string_view text) {
  ColoredGraph g;
  std::vector<std::vector<std::string>> lists;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::SyntaxError, "graph line " + std::to_string(lineno) + ": missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string id, color;
    head >> id >> color;
    if (id.empty() || (color != "white" && color != "black"))
      throw Error(ErrorCode::SyntaxError, "graph line " + std::to_string(lineno) + ": expected 'id color:'");
    g.add_vertex(id, color == "white" ? VertexColor::White : VertexColor::Black);
    std::vector<std::string> ns;
    std::string rest = line.substr(colon + 1);
    std::string item;
    std::istringstream items(rest);
    while (std::getline(items, item, ',')) {
      const auto b = item.find_first_not_of(" \t\r");
      const auto e = item.find_last_not_of(" \t\r");
      if (b != std::string::npos) ns.push_back(item.substr(b, e - b + 1));
    }
    lists.push_back(std::move(ns));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::map<std::size_t, std::size_t> counts;
    for (const auto& id : lists[v]) ++counts[g.index_of(id)];
    for (auto [w, c] : counts) {
      if (w < v) continue;
      if (w == v) {
        if (c % 2) throw Error(ErrorCode::SyntaxError, "loop at '" + g.vertex(v).id + "' listed an odd number of times");
        for (std::size_t k = 0; k < c / 2; ++k) g.add_edge(v, v);
        continue;
      }
      const auto back = std::count(lists[w].begin(), lists[w].end(), g.vertex(v).id);
      if (static_cast<std::size_t>(back) != c)
        throw Error(ErrorCode::SyntaxError, "asymmetric adjacency between '" + g.vertex(v).id + "' and '" + g.vertex(w).id + "'");
      for (std::size_t k = 0; k < c; ++k) g.add_edge(v, w);
    }
  }
  return g;
}

std::string to_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph P2 {\n";
  for (const auto& v : g.vertices()) {
    out << "  \"" << v.id << "\" [style=filled, fillcolor="
        << (v.color == VertexColor::White ? "white" : "black") << ", fontcolor="
        << (v.color == VertexColor::White ? "black" : "white") << "];\n";
  }
  for (auto [a, b] : g.edges())
    out << "  \"" << g.vertex(a).id << "\" -- \"" << g.vertex(b).id << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace alexcalc
