#include "qtree/context.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qtree {

void HarnessCaps::apply(const std::string& spec) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    std::string item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("cap '" + item + "' needs key=value");
    std::string key = item.substr(0, eq);
    unsigned long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("cap '" + item + "' needs a non-negative integer");
    }
    if (key == "cycles") cycles = value;
    else if (key == "geodesics") geodesics = value;
    else if (key == "separators") separators = value;
    else if (key == "subset_order") subset_order = static_cast<int>(value);
    else if (key == "chordal_paths") chordal_paths = value;
    else throw std::invalid_argument("unknown cap '" + key + "'");
  }
}

HarnessCaps HarnessCaps::from_env() {
  HarnessCaps caps;
  if (const char* env = std::getenv("QTREE_CAPS")) caps.apply(env);
  return caps;
}

GraphContext::GraphContext(Graph g, std::string id, HarnessCaps caps)
    : g_(std::move(g)), id_(std::move(id)), caps_(caps) {}

const CycleCatalog& GraphContext::catalog() {
  if (!catalog_) catalog_ = std::make_unique<CycleCatalog>(g_, 0, caps_.cycles);
  return *catalog_;
}

const SeparatorProfile& GraphContext::profile(int r) {
  auto it = profiles_.find(r);
  if (it == profiles_.end()) {
    SeparatorCaps sc{caps_.separators, caps_.subset_order};
    it = profiles_.emplace(r, separator_diameter_profile(g_, r, sc)).first;
  }
  return it->second;
}

const HyperbolicityReport& GraphContext::hyperbolicity() {
  if (!hyp_) hyp_ = delta_hat(g_, 4, &catalog());
  return *hyp_;
}

const BPReport& GraphContext::bp() {
  if (!bp_) bp_ = bp_delta(g_);
  return *bp_;
}

const StabilityReport& GraphContext::stability(StabilityMode mode) {
  auto it = stability_.find(mode);
  if (it == stability_.end()) it = stability_.emplace(mode, stability_constant(g_, mode, caps_.geodesics)).first;
  return it->second;
}

std::optional<int> GraphContext::k_star() {
  if (!k_star_) {
    k_star_.emplace();
    const auto& cat = catalog();
    for (int k = 4; k <= cat.longest(); ++k) {
      auto v = chordality_check(cat, ChordalityQuery{k, 1, std::nullopt, Family::all});
      if (v.status == Status::pass) {
        *k_star_ = k;
        break;
      }
    }
  }
  return *k_star_;
}

int GraphContext::neighbor_separator_radius() {
  if (!nsep_) nsep_ = minimal_neighbor_separator_radius(g_);
  return *nsep_;
}

}  // namespace qtree
