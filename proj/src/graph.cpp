#include "qtree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace qtree {

const char* to_string(GraphErrc e) {
  switch (e) {
    case GraphErrc::empty_input: return "empty_input";
    case GraphErrc::malformed_line: return "malformed_line";
    case GraphErrc::self_loop: return "self_loop";
    case GraphErrc::duplicate_edge: return "duplicate_edge";
    case GraphErrc::disconnected: return "disconnected";
    case GraphErrc::invalid_params: return "invalid_params";
  }
  return "?";
}

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count <= 0) throw GraphError(GraphErrc::empty_input, "graph has no vertices");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw GraphError(GraphErrc::invalid_params,
                       "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    if (u == v) throw GraphError(GraphErrc::self_loop, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
    throw GraphError(GraphErrc::duplicate_edge,
                     "duplicate edge " + std::to_string(it->first) + " " + std::to_string(it->second));

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adj_.assign(vertex_count, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());

  const auto n = static_cast<std::size_t>(vertex_count);
  g.dist_half_.assign(n * n, -1);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < vertex_count; ++s) {
    std::int32_t* row = &g.dist_half_[static_cast<std::size_t>(s) * n];
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    row[s] = 0;
    while (head < tail) {
      Vertex x = queue[head++];
      for (Vertex y : g.adj_[x]) {
        if (row[y] < 0) {
          row[y] = row[x] + 2;
          queue[tail++] = y;
        }
      }
    }
    if (tail != n) {
      Vertex missing = static_cast<Vertex>(std::find(row, row + n, -1) - row);
      throw GraphError(GraphErrc::disconnected,
                       "graph is disconnected: vertex " + std::to_string(missing) +
                           " unreachable from vertex " + std::to_string(s));
    }
    for (std::size_t i = 0; i < n; ++i) g.diameter_ = std::max(g.diameter_, row[i] / 2);
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::max_degree() const {
  std::size_t mu = 0;
  for (const auto& a : adj_) mu = std::max(mu, a.size());
  return static_cast<int>(mu);
}

Graph load_graph(std::string_view text) {
  std::vector<Edge> edges;
  int max_id = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    long long ids[2];
    int found = 0;
    std::size_t i = 0;
    bool bad = false;
    while (i < line.size()) {
      char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (found == 2 || c < '0' || c > '9') {
        bad = true;
        break;
      }
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || value > 1'000'000) {
        bad = true;
        break;
      }
      ids[found++] = value;
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (!bad && found == 0) continue;
    if (bad || found != 2)
      throw GraphError(GraphErrc::malformed_line,
                       "line " + std::to_string(line_no) + ": expected \"u v\"", line_no);
    auto u = static_cast<Vertex>(ids[0]);
    auto v = static_cast<Vertex>(ids[1]);
    if (u == v)
      throw GraphError(GraphErrc::self_loop,
                       "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u),
                       line_no);
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw GraphError(GraphErrc::duplicate_edge,
                       "line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.first) +
                           " " + std::to_string(e.second),
                       line_no);
    edges.push_back(e);
    max_id = std::max({max_id, u, v});
  }
  if (edges.empty()) throw GraphError(GraphErrc::empty_input, "no edges in input");
  return Graph::from_edges(max_id + 1, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

PointRef PointRef::on_edge(Vertex u, Vertex v, int numerator, int resolution) {
  if (resolution < 2 || numerator <= 0 || numerator >= resolution)
    throw std::invalid_argument("edge point must lie strictly inside its edge");
  return PointRef{u, v, numerator, resolution};
}

std::string to_string(const PointRef& p) {
  if (p.is_vertex()) return std::to_string(p.u);
  return std::to_string(p.u) + "-" + std::to_string(p.v) + "@" + std::to_string(p.numerator) + "/" +
         std::to_string(p.resolution);
}

int point_distance_scaled(const Graph& g, const PointRef& p, Vertex w) {
  if (p.is_vertex()) return g.dist(p.u, w);
  const int t = p.resolution;
  return std::min(p.numerator + t * g.dist(p.u, w), (t - p.numerator) + t * g.dist(p.v, w));
}

VertexSet neighborhood(const Graph& g, const PointRef& p, Length eps, BallKind kind) {
  if (eps < Length::units(0)) throw std::invalid_argument("neighborhood radius must be >= 0");
  if (!p.is_vertex() && !g.adjacent(p.u, p.v)) throw std::invalid_argument("point is not on an edge");
  VertexSet out;
  for (Vertex w = 0; w < g.order(); ++w) {
    // compare d/t against eps/4 exactly: 4*d vs eps*t
    std::int64_t lhs = 4LL * point_distance_scaled(g, p, w);
    std::int64_t rhs = eps.is_infinite() ? lhs + 1 : eps.in_quarters() * p.resolution;
    bool keep = kind == BallKind::sphere ? lhs == rhs : kind == BallKind::open_ball ? lhs < rhs : lhs <= rhs;
    if (keep) out.push_back(w);
  }
  return out;
}

Graph subdivide(const Graph& g, int t) {
  if (t < 1) throw GraphError(GraphErrc::invalid_params, "subdivision factor must be >= 1");
  if (t == 1) return g;
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.size()) * t);
  int next = n;
  for (auto [u, v] : g.edges()) {
    Vertex prev = u;
    for (int j = 1; j < t; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph::from_edges(next, std::move(edges));
}

Subdivision::Subdivision(Graph base, int t) : base_(std::move(base)), t_(t), fine_(subdivide(base_, t)) {}

Vertex Subdivision::grid_point(Vertex u, Vertex v, int j) const {
  if (j == 0) return u;
  if (j == t_) return v;
  int e = base_.edge_index(u, v);
  if (e < 0 || j < 0 || j > t_) throw std::invalid_argument("not a grid point of an edge");
  if (u > v) j = t_ - j;
  return base_.order() + e * (t_ - 1) + (j - 1);
}

Vertex Subdivision::locate(const PointRef& p) const {
  if (p.is_vertex()) return p.u;
  if (t_ % p.resolution != 0) throw std::invalid_argument("point is off the subdivision grid");
  return grid_point(p.u, p.v, p.numerator * (t_ / p.resolution));
}

PointRef Subdivision::describe(Vertex x) const {
  const int n = base_.order();
  if (x < n) return PointRef::vertex(x);
  int e = (x - n) / (t_ - 1);
  int j = (x - n) % (t_ - 1) + 1;
  auto [u, v] = base_.edges()[e];
  int num = j, res = t_;
  while (num % 2 == 0 && res % 2 == 0) {
    num /= 2;
    res /= 2;
  }
  return PointRef{u, v, num, res};
}

std::vector<Vertex> Subdivision::trace(std::span<const Vertex> walk) const {
  std::vector<Vertex> out;
  if (walk.empty()) return out;
  out.push_back(walk[0]);
  for (std::size_t i = 1; i < walk.size(); ++i) {
    for (int j = 1; j <= t_; ++j) out.push_back(grid_point(walk[i - 1], walk[i], j));
  }
  return out;
}

Length Subdivision::length_of(int fine_distance) const {
  if (4 % t_ != 0) throw std::logic_error("quarter conversion needs t in {1,2,4}");
  return Length::quarters(static_cast<std::int64_t>(fine_distance) * (4 / t_));
}

}  // namespace qtree
