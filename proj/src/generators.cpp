#include "qtree/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace qtree {

namespace {

[[noreturn]] void bad_params(const std::string& what) { throw GraphError(GraphErrc::invalid_params, what); }

void require(bool ok, const std::string& what) {
  if (!ok) bad_params(what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

Graph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(rows * cols, std::move(e));
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    e.emplace_back(parent(rng), i);
  }
  return Graph::from_edges(n, std::move(e));
}

Graph erdos_renyi_connected(int n, double p, std::uint64_t seed, int max_attempts) {
  require(n >= 1, "er needs n >= 1");
  require(p > 0.0 && p <= 1.0, "edge probability must be in (0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) e.emplace_back(i, j);
    try {
      return Graph::from_edges(n, std::move(e));
    } catch (const GraphError& err) {
      if (err.code() != GraphErrc::disconnected) throw;
    }
  }
  bad_params("no connected sample within the attempt budget");
}

Vertex hub_cycles_hub(int N, int h) {
  require(h >= 3 && h <= N, "hub out of range");
  return h - 3;
}

Vertex hub_cycles_cycle_vertex(int N, int h, int j) {
  require(h >= 3 && h <= N && j >= 0 && j < h, "cycle vertex out of range");
  int offset = N - 2;  // hubs 3..N
  for (int c = 3; c < h; ++c) offset += c;
  return offset + j;
}

Graph hub_cycles(int N) {
  require(N >= 3, "hub_cycles needs N >= 3");
  std::vector<Edge> e;
  for (int h = 3; h < N; ++h) e.emplace_back(hub_cycles_hub(N, h), hub_cycles_hub(N, h + 1));
  int total = N - 2;
  for (int h = 3; h <= N; ++h) {
    for (int j = 0; j < h; ++j) {
      Vertex x = hub_cycles_cycle_vertex(N, h, j);
      e.emplace_back(x, hub_cycles_cycle_vertex(N, h, (j + 1) % h));
      e.emplace_back(x, hub_cycles_hub(N, h));
    }
    total += h;
  }
  return Graph::from_edges(total, std::move(e));
}

std::optional<Vertex> ladder_blocks_vertex(int A, int a, int b) {
  if (a < 0 || a > A || b < 0) return std::nullopt;
  if (b == 0) return a;
  Vertex id = A + 1;
  for (int n = 1; 4 * n + 1 <= A; ++n) {
    for (int x = 4 * n + 1; x <= std::min(4 * n + 3, A); ++x) {
      for (int y = 1; y <= n; ++y) {
        if (x == a && y == b) return id;
        ++id;
      }
    }
  }
  return std::nullopt;
}

Graph ladder_blocks(int A) {
  require(A >= 5, "ladder_blocks needs A >= 5");
  std::vector<std::pair<int, int>> coords;
  for (int a = 0; a <= A; ++a) coords.emplace_back(a, 0);
  for (int n = 1; 4 * n + 1 <= A; ++n)
    for (int x = 4 * n + 1; x <= std::min(4 * n + 3, A); ++x)
      for (int y = 1; y <= n; ++y) coords.emplace_back(x, y);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      auto [a, b] = coords[i];
      auto [c, d] = coords[j];
      if ((b == d && std::abs(a - c) == 1) || (a == c && std::abs(b - d) == 1))
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return Graph::from_edges(static_cast<int>(coords.size()), std::move(e));
}

Vertex odd_cycle_wedge_vertex(int K, int k, int j) {
  require(k >= 1 && k <= K && j >= 1 && j <= 2 * k, "wedge vertex out of range");
  // cycles 1..k-1 use 2 + 4 + ... + 2(k-1) = k(k-1) ids
  return 1 + k * (k - 1) + (j - 1);
}

Graph odd_cycle_wedge(int K) {
  require(K >= 1, "odd_cycle_wedge needs K >= 1");
  std::vector<Edge> e;
  for (int k = 1; k <= K; ++k) {
    Vertex prev = 0;
    for (int j = 1; j <= 2 * k; ++j) {
      Vertex x = odd_cycle_wedge_vertex(K, k, j);
      e.emplace_back(prev, x);
      prev = x;
    }
    e.emplace_back(prev, 0);
  }
  return Graph::from_edges(1 + K * (K + 1), std::move(e));
}

namespace {

struct ParsedSpec {
  std::string family;
  std::vector<std::string> params;
};

ParsedSpec parse_spec(std::string_view spec) {
  ParsedSpec out;
  auto colon = spec.find(':');
  out.family = std::string(spec.substr(0, colon));
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string_view::npos) comma = rest.size();
      out.params.emplace_back(rest.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }
  return out;
}

long long to_int(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad_params("not an integer: '" + s + "'");
  return v;
}

double to_real(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    bad_params("not a number: '" + s + "'");
  }
}

void arity(const ParsedSpec& p, std::size_t n) {
  if (p.params.size() != n)
    bad_params(p.family + " expects " + std::to_string(n) + " parameter(s)");
}

}  // namespace

bool family_is_random(std::string_view spec) {
  auto family = parse_spec(spec).family;
  return family == "tree" || family == "er";
}

Graph generate(std::string_view spec) {
  ParsedSpec p = parse_spec(spec);
  const std::string& f = p.family;
  auto i = [&](std::size_t k) { return static_cast<int>(to_int(p.params[k])); };
  if (f == "path") {
    arity(p, 1);
    return path_graph(i(0));
  }
  if (f == "cycle") {
    arity(p, 1);
    return cycle_graph(i(0));
  }
  if (f == "complete") {
    arity(p, 1);
    return complete_graph(i(0));
  }
  if (f == "grid") {
    arity(p, 2);
    return grid_graph(i(0), i(1));
  }
  if (f == "tree") {
    arity(p, 2);
    return random_tree(i(0), static_cast<std::uint64_t>(to_int(p.params[1])));
  }
  if (f == "er") {
    arity(p, 3);
    return erdos_renyi_connected(i(0), to_real(p.params[1]), static_cast<std::uint64_t>(to_int(p.params[2])));
  }
  if (f == "example_2_9" || f == "hub_cycles") {
    arity(p, 1);
    return hub_cycles(i(0));
  }
  if (f == "example_3_14" || f == "ladder_blocks") {
    arity(p, 1);
    return ladder_blocks(i(0));
  }
  if (f == "example_6_9" || f == "odd_cycle_wedge") {
    arity(p, 1);
    return odd_cycle_wedge(i(0));
  }
  bad_params("unknown graph family '" + f + "'");
}

}  // namespace qtree
