#include "qtree/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace qtree {

using nlohmann::json;

json to_json(Length x) { return x.is_infinite() ? json("inf") : json(x.to_double()); }

json to_json(const PointRef& p) {
  if (p.is_vertex()) return p.u;
  return json{{"edge", {p.u, p.v}}, {"at", std::to_string(p.numerator) + "/" + std::to_string(p.resolution)}};
}

json to_json(const SeparatorCert& c) {
  return json{{"S", c.S}, {"a", c.a}, {"b", c.b}, {"r", c.r}, {"component_a", c.component_a},
              {"component_b", c.component_b}, {"minimal", c.minimal}, {"diameter", c.diameter}};
}

Length length_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Length::infinity();
  return Length::quarters(std::llround(j.get<double>() * 4.0));
}

namespace {

const Length kZero = Length::units(0);
const Length kHalf = Length::halves(1);

Length k_over_4(int k) { return Length::quarters(k); }
Length k_over_2(int k) { return Length::halves(k); }

CheckOutcome vacuous(std::string reason, json params = json::object()) {
  params["reason"] = std::move(reason);
  return {Status::vacuous, std::move(params), nullptr};
}

CheckOutcome inconclusive(std::string reason, json params = json::object()) {
  params["reason"] = std::move(reason);
  return {Status::inconclusive, std::move(params), nullptr};
}

json query_json(const ChordalityQuery& q) {
  json j{{"k", q.k}, {"family", to_string(q.family)}};
  if (q.m) j["m"] = *q.m;
  if (q.rho) j["rho"] = to_json(*q.rho);
  return j;
}

// Runs a chordality query against the cached catalog.
CheckOutcome chordality(GraphContext& ctx, const ChordalityQuery& q, json params) {
  const auto& cat = ctx.catalog();
  auto v = chordality_check(cat, q);
  params["query"] = query_json(q);
  params["qualifying_cycles"] = v.qualifying;
  CheckOutcome out{v.status, std::move(params), nullptr};
  if (v.status == Status::fail) {
    out.witness = query_json(q);
    out.witness["kind"] = "chordality";
    out.witness["cycle"] = v.witness->vertices;
  } else if (v.status == Status::vacuous) {
    out.params["reason"] = "no cycle of the family reaches length k";
  } else if (v.status == Status::inconclusive) {
    out.params["reason"] = "cycle enumeration truncated";
  }
  return out;
}

// value <= bound (or < bound when strict).
CheckOutcome bound(const char* quantity, Length value, Length limit, bool strict, json params) {
  params[quantity] = to_json(value);
  params["bound"] = to_json(limit);
  bool ok = strict ? value < limit : value <= limit;
  CheckOutcome out{ok ? Status::pass : Status::fail, std::move(params), nullptr};
  if (!ok)
    out.witness = json{{"kind", "bound"}, {"quantity", quantity}, {"value", to_json(value)},
                       {"bound", to_json(limit)}, {"strict", strict}};
  return out;
}

CheckOutcome combine(std::vector<std::pair<std::string, CheckOutcome>> parts) {
  CheckOutcome out;
  bool any_pass = false, any_inconclusive = false;
  for (auto& [key, part] : parts) {
    out.params[key] = part.params;
    out.params[key]["status"] = to_string(part.status);
    if (part.status == Status::fail && out.status != Status::fail) {
      out.status = Status::fail;
      out.witness = part.witness;
    }
    any_pass = any_pass || part.status == Status::pass;
    any_inconclusive = any_inconclusive || part.status == Status::inconclusive;
  }
  if (out.status != Status::fail)
    out.status = any_inconclusive ? Status::inconclusive : any_pass ? Status::pass : Status::vacuous;
  return out;
}

struct Bound {
  Length value = Length::infinity();
  int k = 0, m = 0;
  Length rho;
};

// Smallest form(k, m, rho) over every (k, m) whose dense chordality holds on
// the family with minimal radius rho. k runs up to one past the longest
// cycle, where the hypothesis holds with no qualifying cycle.
Bound best_bound(const CycleCatalog& cat, Family f, const std::function<Length(int, int, Length)>& form) {
  Bound best;
  const int kmax = std::max(4, cat.longest() + 1);
  for (int k = 4; k <= kmax; ++k)
    for (int m = 0; 2 * m <= k; ++m) {
      Length rho = minimal_rho(cat, k, m, f);
      if (rho.is_infinite()) continue;
      Length v = form(k, m, rho);
      if (v < best.value) best = Bound{v, k, m, rho};
    }
  return best;
}

json bound_params(const Bound& b) { return json{{"k", b.k}, {"m", b.m}, {"rho", to_json(b.rho)}}; }

struct Scan {
  bool capped = false;
  std::size_t tested = 0;
  json failure = nullptr;
};

// Every window of `len` edges on every a-b geodesic with d(a,b) >= dmin that
// stays `margin` away from both ends must be an ab-N_r-separator (or
// obstructing set).
Scan scan_segments(GraphContext& ctx, int dmin, int margin, int len, int r, NeighborMode mode) {
  const Graph& g = ctx.graph();
  Scan scan;
  std::set<std::vector<Vertex>> seen;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const int d = g.dist(a, b);
      if (d < dmin) continue;
      auto list = enumerate_geodesics(g, a, b, ctx.caps().geodesics);
      scan.capped = scan.capped || list.truncated;
      for (const auto& path : list.paths)
        for (int i = margin; i + len <= d - margin; ++i) {
          std::vector<Vertex> seg(path.vertices.begin() + i, path.vertices.begin() + i + len + 1);
          std::vector<Vertex> key = seg;
          std::sort(key.begin(), key.end());
          key.push_back(-1);
          key.push_back(a);
          key.push_back(b);
          if (!seen.insert(key).second) continue;
          ++scan.tested;
          auto v = check_neighbor_separation(g, seg, a, b, r, mode);
          if (!v.holds) {
            scan.failure = json{{"kind", "neighbor"},
                                {"mode", mode == NeighborMode::separator ? "separator" : "obstructing"},
                                {"S", seg},
                                {"a", a},
                                {"b", b},
                                {"r", r},
                                {"geodesic", path.vertices},
                                {"avoiding_path", v.witness}};
            return scan;
          }
        }
    }
  return scan;
}

CheckOutcome scan_outcome(const Scan& s, json params) {
  params["segments_tested"] = s.tested;
  if (!s.failure.is_null()) return {Status::fail, std::move(params), s.failure};
  if (s.capped) return inconclusive("geodesic enumeration capped", std::move(params));
  if (s.tested == 0) return vacuous("no qualifying geodesic", std::move(params));
  return {Status::pass, std::move(params), nullptr};
}

// Vertices v on some a-b geodesic that are `far` from both ends; the
// predicate chooses which, and {v} must be N_r-obstructing.
json obstruction_failure(const Graph& g, int dmin, const std::function<bool(int)>& far_enough, int r,
                         std::size_t& tested) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const int d = g.dist(a, b);
      if (d < dmin) continue;
      for (Vertex v = 0; v < g.order(); ++v) {
        int da = g.dist(a, v), db = g.dist(v, b);
        if (da + db != d || !far_enough(std::min(da, db))) continue;
        ++tested;
        Vertex S[] = {v};
        auto res = check_neighbor_separation(g, S, a, b, r, NeighborMode::obstructing);
        if (!res.holds)
          return json{{"kind", "neighbor"}, {"mode", "obstructing"}, {"S", {v}}, {"a", a},
                      {"b", b},           {"r", r},               {"avoiding_path", res.witness}};
      }
    }
  return nullptr;
}

bool catalog_truncated(GraphContext& ctx) { return ctx.catalog().truncated(); }

// ---- separators and chordality ------------------------------------------

CheckOutcome prop_2_8(GraphContext& ctx) {
  const auto& p = ctx.profile(1);
  if (p.truncated || catalog_truncated(ctx)) return inconclusive("enumeration truncated");
  auto k = ctx.k_star();
  if (!k) return vacuous("no k with a (k,1)-chordal pass on a qualifying cycle");
  json params{{"k", *k}, {"m1", p.max_diameter}};
  if (p.witness) params["separator"] = to_json(*p.witness);
  return bound("separator_diameter", Length::units(p.max_diameter), k_over_2(*k), true, params);
}

CheckOutcome thm_2_16(GraphContext& ctx) {
  const auto& p = ctx.profile(1);
  if (p.truncated) return inconclusive("separator enumeration truncated");
  const int m = p.max_diameter;
  if (m == 0) return vacuous("m = 0", json{{"m1", 0}});
  return chordality(ctx, ChordalityQuery{4 * m, 2 * m - 1, Length::units(m) + kHalf, Family::all}, json{{"m1", m}});
}

CheckOutcome thm_2_17(GraphContext& ctx) {
  const auto& p = ctx.profile(1);
  if (p.truncated) return inconclusive("separator enumeration truncated");
  const int m = p.max_diameter;
  if (m == 0) return vacuous("m = 0 gives k < 4", json{{"m1", 0}});
  return chordality(ctx, ChordalityQuery{2 * m + 2, m, Length::units(m) + kHalf, Family::all}, json{{"m1", m}});
}

Length form_quarter(int k, int m, Length rho) { return max(k_over_4(k), rho + Length::units(m)); }

CheckOutcome thm_2_18(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  auto b = best_bound(ctx.catalog(), Family::all, form_quarter);
  return bound("delta_hat", ctx.hyperbolicity().delta_hat, b.value, false, bound_params(b));
}

CheckOutcome separator_delta_bound(GraphContext& ctx, std::int64_t times, Length offset) {
  const auto& p = ctx.profile(1);
  if (p.truncated || catalog_truncated(ctx)) return inconclusive("enumeration truncated");
  const int m = p.max_diameter;
  if (m == 0) return vacuous("m = 0", json{{"m1", 0}});
  return bound("delta_hat", ctx.hyperbolicity().delta_hat, times * Length::units(m) + offset, false,
               json{{"m1", m}});
}

CheckOutcome cor_2_19(GraphContext& ctx) { return separator_delta_bound(ctx, 3, kZero - kHalf); }
CheckOutcome cor_2_20(GraphContext& ctx) { return separator_delta_bound(ctx, 2, kHalf); }

// ---- bottleneck ---------------------------------------------------------

CheckOutcome prop_3_4(GraphContext& ctx) {
  const auto& bp = ctx.bp();
  json params{{"delta_prime", to_json(bp.delta_prime)}, {"delta", to_json(bp.delta)}};
  if (bp.delta != bp.delta_prime + Length::halves(3))
    return {Status::fail, params,
            json{{"kind", "bp_field"}, {"delta_prime", to_json(bp.delta_prime)}, {"delta", to_json(bp.delta)}}};
  // point-level property on vertices and edge midpoints: BP on the vertices
  // of the 2-subdivision with the constant doubled
  Graph h = subdivide(ctx.graph(), 2);
  auto v = bp_check_vertices(h, 2 * bp.delta);
  if (!v.holds)
    return {Status::fail, params,
            json{{"kind", "bp"}, {"resolution", 2}, {"delta_prime", to_json(bp.delta)}}};
  return {Status::pass, params, nullptr};
}

CheckOutcome thm_3_7_fwd(GraphContext& ctx) {
  const auto& bp = ctx.bp();
  const int D = static_cast<int>((bp.delta_prime + Length::halves(3)).ceil_units());
  json params{{"delta_prime", to_json(bp.delta_prime)}, {"Delta", D}};
  return chordality(ctx, ChordalityQuery{4 * D + 4, 2 * D + 1, Length::units(D) + Length::halves(3), Family::all},
                    params);
}

CheckOutcome thm_3_7_bwd(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  auto b = best_bound(ctx.catalog(), Family::all, form_quarter);
  return bound("delta_prime", ctx.bp().delta_prime, b.value, false, bound_params(b));
}

CheckOutcome thm_3_11_fwd(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  const Length delta = ctx.hyperbolicity().delta_hat;
  const int m = static_cast<int>(delta.floor_units());
  json params{{"delta_hat", to_json(delta)}};
  if (m < 1) return vacuous("delta < 1 leaves no integer shortcut length", params);
  const int k = std::max<int>(4, static_cast<int>((9 * delta).ceil_units()));
  Length rho = (3 * delta + Length::units(1)).half_grid_below();
  return chordality(ctx, ChordalityQuery{k, m, rho, Family::triangle}, params);
}

CheckOutcome thm_3_11_bwd(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  auto b = best_bound(ctx.catalog(), Family::triangle, form_quarter);
  return bound("delta_hat", ctx.hyperbolicity().delta_hat, b.value, false, bound_params(b));
}

CheckOutcome thm_3_13(GraphContext& ctx) {
  const auto& p = ctx.profile(1);
  if (p.truncated) return inconclusive("separator enumeration truncated");
  return bound("delta_prime", ctx.bp().delta_prime, Length::units(p.max_diameter + 2), false,
               json{{"m1", p.max_diameter}});
}

CheckOutcome thm_3_16(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  auto k = ctx.k_star();
  if (!k) return vacuous("no k with a (k,1)-chordal pass on a qualifying cycle");
  return bound("delta_prime", ctx.bp().delta_prime, k_over_4(*k) + Length::halves(5), false, json{{"k", *k}});
}

// ---- r-separators -------------------------------------------------------

CheckOutcome thm_4_6_r(GraphContext& ctx, int r) {
  const auto& p = ctx.profile(r);
  if (p.truncated) return inconclusive("subset search above the order cap", json{{"r", r}});
  json params{{"r", r}, {"m", p.max_diameter}};
  if (p.max_diameter > r) return vacuous("m > r", params);
  return chordality(ctx, ChordalityQuery{2 * r + 2, r, Length::units(r), Family::all}, params);
}

CheckOutcome thm_4_7_r(GraphContext& ctx, int r) {
  const auto& p = ctx.profile(r);
  if (p.truncated) return inconclusive("subset search above the order cap", json{{"r", r}});
  const int m = p.max_split_diameter;
  const int k = 2 * m + 2 * r + 2;
  Length eps = max(Length::halves(m + 1) + Length::units(r), Length::units(m) + kHalf);
  json params{{"r", r}, {"m", m}};
  return chordality(ctx, ChordalityQuery{k, k / 2, eps.half_grid_below(), Family::all}, params);
}

CheckOutcome cor_4_9_r(GraphContext& ctx, int r) {
  const auto& p = ctx.profile(r);
  if (p.truncated || catalog_truncated(ctx)) return inconclusive("enumeration truncated", json{{"r", r}});
  json params{{"r", r}, {"m", p.max_diameter}};
  if (p.max_diameter > r) return vacuous("m > r", params);
  return bound("delta_hat", ctx.hyperbolicity().delta_hat, Length::units(2 * r) + kHalf, false, params);
}

CheckOutcome cor_4_10_r(GraphContext& ctx, int r) {
  const auto& p = ctx.profile(r);
  if (p.truncated || catalog_truncated(ctx)) return inconclusive("enumeration truncated", json{{"r", r}});
  const int m = p.max_split_diameter;
  Length b = max(Length::halves(3 * m + 3) + Length::units(2 * r), Length::units(2 * m + r) + Length::halves(3));
  return bound("delta_hat", ctx.hyperbolicity().delta_hat, b, false, json{{"r", r}, {"m", m}});
}

template <CheckOutcome (*F)(GraphContext&, int)>
CheckOutcome over_r(GraphContext& ctx) {
  return combine({{"r2", F(ctx, 2)}, {"r3", F(ctx, 3)}});
}

// ---- neighbour separators -----------------------------------------------

CheckOutcome thm_5_2(GraphContext& ctx) {
  const Graph& g = ctx.graph();
  const Length dp = ctx.bp().delta_prime;
  const int fwd = std::max<int>(1, static_cast<int>((dp + kHalf).ceil_units()));
  auto v = neighbor_separator_characterization(g, fwd);
  CheckOutcome forward{v.status == Status::fail ? Status::fail : Status::pass,
                       json{{"delta_prime", to_json(dp)}, {"delta2", fwd}}, nullptr};
  if (v.status == Status::fail)
    forward.witness = json{{"kind", "characterization"}, {"delta2", fwd}, {"geodesic", v.witness}};
  const int d2 = ctx.neighbor_separator_radius();
  auto backward = bound("delta_prime", dp, Length::units(2 * d2), false, json{{"delta2_min", d2}});
  return combine({{"forward", forward}, {"backward", backward}});
}

CheckOutcome prop_5_4(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  auto k = ctx.k_star();
  if (!k) return vacuous("no k with a (k,1)-chordal pass on a qualifying cycle");
  const int len = std::max(0, (*k - 4 + 1) / 2);
  auto s = scan_segments(ctx, (*k + 4 + 1) / 2, 2, len, 1, NeighborMode::separator);
  return scan_outcome(s, json{{"k", *k}, {"segment_length", len}});
}

// Induced paths with at least min_len edges, each once (front < back).
std::vector<std::vector<Vertex>> chordal_paths(const Graph& g, int min_len, std::size_t cap, bool& capped) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<int> touching(g.order(), 0);  // path vertices adjacent to or equal to v
  std::size_t explored = 0;
  const std::size_t explore_cap = cap * 50;
  auto dfs = [&](auto&& self, Vertex x) -> void {
    if (capped) return;
    if (++explored > explore_cap) {
      capped = true;
      return;
    }
    if (static_cast<int>(path.size()) - 1 >= min_len && path.front() < path.back()) {
      if (out.size() == cap) {
        capped = true;
        return;
      }
      out.push_back(path);
    }
    for (Vertex y : g.neighbors(x)) {
      // y may touch only x among the path vertices
      if (touching[y] != 1 || std::find(path.begin(), path.end(), y) != path.end()) continue;
      path.push_back(y);
      ++touching[y];
      for (Vertex z : g.neighbors(y)) ++touching[z];
      self(self, y);
      for (Vertex z : g.neighbors(y)) --touching[z];
      --touching[y];
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order() && !capped; ++s) {
    path.assign(1, s);
    ++touching[s];
    for (Vertex z : g.neighbors(s)) ++touching[z];
    dfs(dfs, s);
    for (Vertex z : g.neighbors(s)) --touching[z];
    --touching[s];
  }
  return out;
}

CheckOutcome prop_5_6(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  auto k = ctx.k_star();
  if (!k) return vacuous("no k with a (k,1)-chordal pass on a qualifying cycle");
  const Graph& g = ctx.graph();
  bool capped = false;
  auto paths = chordal_paths(g, *k, ctx.caps().chordal_paths, capped);
  const int len = std::max(0, *k - 4);
  json params{{"k", *k}, {"segment_length", len}, {"paths", paths.size()}};
  std::size_t tested = 0;
  for (const auto& p : paths) {
    const int L = static_cast<int>(p.size()) - 1;
    for (int i = 2; i + len <= L - 2; ++i) {
      std::vector<Vertex> seg(p.begin() + i, p.begin() + i + len + 1);
      ++tested;
      auto v = check_neighbor_separation(g, seg, p.front(), p.back(), 1, NeighborMode::separator);
      if (!v.holds)
        return {Status::fail, params,
                json{{"kind", "neighbor"}, {"mode", "separator"}, {"S", seg}, {"a", p.front()}, {"b", p.back()},
                     {"r", 1}, {"chordal_path", p}, {"avoiding_path", v.witness}}};
    }
  }
  params["segments_tested"] = tested;
  if (capped) return inconclusive("chordal path enumeration capped", params);
  if (tested == 0) return vacuous("no chordal path long enough", params);
  return {Status::pass, params, nullptr};
}

CheckOutcome prop_5_7(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  const int diam = ctx.graph().diameter();
  std::vector<std::pair<std::string, CheckOutcome>> parts;
  for (int m = 1; 4 * m <= std::max(4, diam - 1); ++m)
    for (int k = 4 * m; k <= std::max(4 * m, diam - 1); ++k) {
      std::string key = "k" + std::to_string(k) + "_m" + std::to_string(m);
      auto s = scan_segments(ctx, k + 2, m + 1, k - 2 * m, m, NeighborMode::separator);
      json params{{"k", k}, {"m", m}, {"segments_tested", s.tested}};
      if (!s.failure.is_null()) {
        parts.emplace_back(key, vacuous("hypothesis fails", params));
        continue;
      }
      if (s.capped) {
        parts.emplace_back(key, inconclusive("geodesic enumeration capped", params));
        continue;
      }
      Length rho = (k_over_2(k) + Length::units(2)).half_grid_below();
      parts.emplace_back(key, chordality(ctx, ChordalityQuery{2 * k + 4, k + 1, rho, Family::all}, params));
    }
  if (parts.empty()) return vacuous("graph too small for k >= 4m");
  return combine(std::move(parts));
}

// ---- stability ----------------------------------------------------------

CheckOutcome stability_fwd(GraphContext& ctx, StabilityMode mode, Family f) {
  const auto& st = ctx.stability(mode);
  if (st.caps_hit) return inconclusive("geodesic enumeration capped");
  const Length R = st.R;
  const int k = static_cast<int>((4 * R + Length::units(4)).ceil_units());
  const int m = static_cast<int>(R.floor_units());
  Length rho = (2 * R + Length::units(1)).half_grid_below();
  return chordality(ctx, ChordalityQuery{k, m, rho, f}, json{{"R", to_json(R)}});
}

CheckOutcome thm_6_4_fwd(GraphContext& ctx) { return stability_fwd(ctx, StabilityMode::grid_points, Family::bigon); }

CheckOutcome thm_6_4_bwd(GraphContext& ctx) {
  const auto& st = ctx.stability(StabilityMode::grid_points);
  if (st.caps_hit || catalog_truncated(ctx)) return inconclusive("enumeration truncated");
  auto b = best_bound(ctx.catalog(), Family::bigon,
                      [](int k, int m, Length rho) { return max(k_over_2(k), rho + Length::units(m)); });
  return bound("stability_grid", st.R, b.value, false, bound_params(b));
}

CheckOutcome prop_6_6(GraphContext& ctx) {
  const auto& st = ctx.stability(StabilityMode::vertices);
  if (st.caps_hit) return inconclusive("geodesic enumeration capped");
  const Graph& g = ctx.graph();
  std::size_t tested = 0;
  auto condition = [&](int k) {
    return obstruction_failure(g, 2 * k + 2, [k](int d) { return d > k; }, k, tested);
  };
  const int kf = static_cast<int>(st.R.floor_units());
  json fail = condition(kf);
  CheckOutcome forward{fail.is_null() ? Status::pass : Status::fail, json{{"R", to_json(st.R)}, {"k", kf}}, fail};
  int kobs = 0;
  while (!condition(kobs).is_null()) ++kobs;
  auto backward = bound("stability_vertices", st.R, Length::units(kobs) + kHalf, false, json{{"k_obs", kobs}});
  auto out = combine({{"forward", forward}, {"backward", backward}});
  out.params["vertices_tested"] = tested;
  return out;
}

CheckOutcome prop_6_7(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  const auto& cat = ctx.catalog();
  const Graph& g = ctx.graph();
  std::vector<std::pair<std::string, CheckOutcome>> parts;
  for (int k = 4; k <= std::max(4, cat.longest() + 1); ++k) {
    const int m = k / 2;
    if (!(minimal_rho(cat, k, m, Family::vertex_bigon) < k_over_4(k))) continue;
    std::size_t tested = 0;
    // d(a,b) >= k/2 + 4 and d(v0,{a,b}) >= k/4 + 1
    json fail = obstruction_failure(g, (k + 8 + 1) / 2, [k](int d) { return 4 * d >= k + 4; }, k, tested);
    json params{{"k", k}, {"m", m}, {"vertices_tested", tested}};
    if (!fail.is_null()) parts.emplace_back("k" + std::to_string(k), CheckOutcome{Status::fail, params, fail});
    else if (tested == 0) parts.emplace_back("k" + std::to_string(k), vacuous("no qualifying vertex", params));
    else parts.emplace_back("k" + std::to_string(k), CheckOutcome{Status::pass, params, nullptr});
  }
  if (parts.empty()) return vacuous("no k with a k/4-dense pass on B0");
  return combine(std::move(parts));
}

CheckOutcome thm_6_8_fwd(GraphContext& ctx) { return stability_fwd(ctx, StabilityMode::vertices, Family::vertex_bigon); }

CheckOutcome thm_6_8_bwd(GraphContext& ctx) {
  const auto& st = ctx.stability(StabilityMode::vertices);
  if (st.caps_hit || catalog_truncated(ctx)) return inconclusive("enumeration truncated");
  auto b = best_bound(ctx.catalog(), Family::vertex_bigon,
                      [](int k, int, Length rho) { return max(rho, k_over_4(k)) + Length::units(2); });
  return bound("stability_vertices", st.R, b.value, false, bound_params(b));
}

CheckOutcome prop_6_10(GraphContext& ctx) {
  if (catalog_truncated(ctx)) return inconclusive("cycle enumeration truncated");
  const auto& cat = ctx.catalog();
  const int diam = ctx.graph().diameter();
  std::vector<std::pair<std::string, CheckOutcome>> parts;
  for (int m = 1; 2 * m + 3 <= diam; ++m)
    for (int k = 4 * m + 1; k <= std::max(4 * m + 1, cat.longest() + 1); ++k) {
      Length eps = k_over_4(k) - Length::units(m);
      if (!(minimal_rho(cat, k, m, Family::vertex_bigon) < eps)) continue;
      const int len = std::max(0, (k - 4 * m + 1) / 2);
      auto s = scan_segments(ctx, (k + 4 + 1) / 2, m + 1, len, m, NeighborMode::obstructing);
      parts.emplace_back("k" + std::to_string(k) + "_m" + std::to_string(m),
                         scan_outcome(s, json{{"k", k}, {"m", m}, {"segment_length", len}}));
    }
  if (parts.empty()) return vacuous("no (k,m) with k > 4m and a dense pass on B0");
  return combine(std::move(parts));
}

// ---- structural remarks -------------------------------------------------

CheckOutcome rem_2_10(GraphContext& ctx) {
  const auto& p = ctx.profile(1);
  json params{{"separators", p.count}};
  if (!p.adjacency_ok)
    return {Status::fail, params, json{{"kind", "separator_adjacency"}, {"cert", to_json(*p.adjacency_violation)}}};
  if (p.truncated) return inconclusive("separator enumeration truncated", params);
  if (p.count == 0) return vacuous("no minimal separator", params);
  return {Status::pass, params, nullptr};
}

const CheckInfo kChecks[] = {
    {"prop_2_8", "(k,1)-chordal implies every minimal vertex separator has diameter < k/2", prop_2_8},
    {"thm_2_16", "minimal separators of diameter <= m give (m+1/2)-dense (4m,2m-1)-chordality", thm_2_16},
    {"thm_2_17", "minimal separators of diameter <= m give (m+1/2)-dense (2m+2,m)-chordality", thm_2_17},
    {"thm_2_18", "dense (k,m)-chordal with radius rho implies delta <= max(k/4, rho+m)", thm_2_18},
    {"cor_2_19", "minimal separators of diameter <= m give delta <= 3m-1/2", cor_2_19},
    {"cor_2_20", "minimal separators of diameter <= m give delta <= 2m+1/2", cor_2_20},
    {"prop_3_4", "BP on vertices with D' gives BP on points with D'+3/2", prop_3_4},
    {"thm_3_7_fwd", "BP with D gives (D+3/2)-dense (4D+4,2D+1)-chordality", thm_3_7_fwd},
    {"thm_3_7_bwd", "dense (k,m)-chordal with radius rho gives BP with max(k/4, rho+m)", thm_3_7_bwd},
    {"thm_3_11_fwd", "delta-hyperbolic gives (3d+1)-dense (9d,d)-chordality on triangles", thm_3_11_fwd},
    {"thm_3_11_bwd", "dense (k,m)-chordal on triangles gives delta <= max(k/4, rho+m)", thm_3_11_bwd},
    {"thm_3_13", "minimal separators of diameter <= m give BP with m+2", thm_3_13},
    {"thm_3_16", "(k,1)-chordal gives BP with k/4+5/2", thm_3_16},
    {"thm_4_6", "minimal r-separators of diameter m <= r give (r+1/2)-dense (2r+2,r)-chordality", over_r<thm_4_6_r>},
    {"thm_4_7", "split diameter <= m gives dense (k,k/2)-chordality with k = 2m+2r+2", over_r<thm_4_7_r>},
    {"cor_4_9", "minimal r-separators of diameter m <= r give delta <= 2r+1/2", over_r<cor_4_9_r>},
    {"cor_4_10", "split diameter <= m gives delta <= max((3m+3)/2+2r, 2m+r+3/2)", over_r<cor_4_10_r>},
    {"thm_5_2", "BP iff every long geodesic has an interior N_D''-separator vertex", thm_5_2},
    {"prop_5_4", "(k,1)-chordal makes inner geodesic segments N_1-separators", prop_5_4},
    {"prop_5_6", "(k,1)-chordal makes inner chordal path segments N_1-separators", prop_5_6},
    {"prop_5_7", "N_m-separating geodesic segments give (k/2+2)-dense (2k+4,k+1)-chordality", prop_5_7},
    {"thm_6_4_fwd", "stable geodesics with R give (2R+1)-dense (4R+4,R)-chordality on bigons", thm_6_4_fwd},
    {"thm_6_4_bwd", "dense (k,m)-chordal on bigons gives stability max(k/2, rho+m)", thm_6_4_bwd},
    {"prop_6_6", "vertex stability iff inner geodesic vertices are N_k-obstructing", prop_6_6},
    {"prop_6_7", "k/4-dense (k,m)-chordal on B0 makes inner vertices N_k-obstructing", prop_6_7},
    {"thm_6_8_fwd", "vertex stability with R gives (2R+1)-dense (4R+4,R)-chordality on B0", thm_6_8_fwd},
    {"thm_6_8_bwd", "dense (k,m)-chordal on B0 gives vertex stability max(rho, k/4)+2", thm_6_8_bwd},
    {"prop_6_10", "(k/4-m)-dense (k,m)-chordal on B0 makes inner segments N_m-obstructing", prop_6_10},
    {"rem_2_10", "every vertex of a minimal ab-separator touches both sides", rem_2_10},
};

// ---- replay -------------------------------------------------------------

bool replay_chordality(const Graph& g, const json& w) {
  Cycle c{w.at("cycle").get<std::vector<Vertex>>()};
  const int L = c.length();
  if (L < 3) return false;
  for (int i = 0; i < L; ++i)
    if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % L])) return false;
  if (L < w.at("k").get<int>()) return false;
  std::string fam = w.at("family");
  Family f = fam == "T" ? Family::triangle : fam == "B" ? Family::bigon : fam == "B0" ? Family::vertex_bigon : Family::all;
  if (!classify_cycle(g, c, 2).has(f)) return false;
  if (w.contains("rho")) {
    Length r = density_radius(c, shortcut_vertices(g, c, w.at("m").get<int>()));
    return r > length_from_json(w.at("rho"));
  }
  int best = -1;
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j)
      if (auto s = min_shortcut(g, c, c.vertices[i], c.vertices[j], false))
        if (best < 0 || s->length < best) best = s->length;
  if (!w.contains("m")) return best < 0;
  return best < 0 || best > w.at("m").get<int>();
}

Length recompute(const Graph& g, const std::string& quantity) {
  if (quantity == "delta_hat") return delta_hat(g, 4).delta_hat;
  if (quantity == "delta_prime") return bp_delta(g).delta_prime;
  if (quantity == "stability_vertices") return stability_constant(g, StabilityMode::vertices).R;
  if (quantity == "stability_grid") return stability_constant(g, StabilityMode::grid_points).R;
  if (quantity == "separator_diameter") return Length::units(separator_diameter_profile(g, 1).max_diameter);
  throw std::invalid_argument("unknown quantity '" + quantity + "'");
}

}  // namespace

std::span<const CheckInfo> check_registry() { return kChecks; }

const CheckInfo* find_check(std::string_view id) {
  for (const auto& c : kChecks)
    if (c.id == id) return &c;
  return nullptr;
}

bool replay_witness(const Graph& g, const json& w) {
  const std::string kind = w.at("kind");
  if (kind == "chordality") return replay_chordality(g, w);
  if (kind == "bound") {
    Length value = recompute(g, w.at("quantity"));
    Length limit = length_from_json(w.at("bound"));
    return w.value("strict", false) ? !(value < limit) : !(value <= limit);
  }
  if (kind == "neighbor") {
    auto S = w.at("S").get<std::vector<Vertex>>();
    auto mode = w.at("mode") == "separator" ? NeighborMode::separator : NeighborMode::obstructing;
    return !check_neighbor_separation(g, S, w.at("a"), w.at("b"), w.at("r"), mode).holds;
  }
  if (kind == "bp") {
    const int t = w.at("resolution");
    return !bp_check_vertices(subdivide(g, t), t * length_from_json(w.at("delta_prime"))).holds;
  }
  if (kind == "bp_field") {
    auto rep = bp_delta(g);
    return rep.delta != rep.delta_prime + Length::halves(3);
  }
  if (kind == "characterization")
    return neighbor_separator_characterization(g, w.at("delta2")).status == Status::fail;
  if (kind == "separator_adjacency") {
    const auto& c = w.at("cert");
    auto cert = check_separation(g, c.at("S").get<VertexSet>(), c.at("a"), c.at("b"), 1);
    if (!cert || !cert->minimal) return false;
    for (Vertex v : cert->S) {
      bool ta = false, tb = false;
      for (Vertex y : g.neighbors(v)) {
        ta = ta || std::binary_search(cert->component_a.begin(), cert->component_a.end(), y);
        tb = tb || std::binary_search(cert->component_b.begin(), cert->component_b.end(), y);
      }
      if (!ta || !tb) return true;
    }
    return false;
  }
  if (kind == "split") {
    const auto& c = w.at("cert");
    auto cert = check_separation(g, c.at("S").get<VertexSet>(), c.at("a"), c.at("b"), c.at("r"));
    if (!cert || !cert->minimal) return false;
    try {
      split_Sa_Sb(g, *cert);
      return false;
    } catch (const std::logic_error&) {
      return true;
    }
  }
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

}  // namespace qtree
