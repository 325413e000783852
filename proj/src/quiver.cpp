#include "qpc/quiver.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace qpc {

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n_ < 0) throw ParseError("negative vertex count");
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.label < b.label; });
  std::set<std::string> labels;
  for (const auto& a : arrows_) {
    if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
      throw ParseError("arrow '" + a.label + "' has endpoint outside 1.." + std::to_string(n_));
    if (!labels.insert(a.label).second)
      throw ParseError("duplicate arrow label '" + a.label + "'");
  }
}

bool Quiver::has_loop() const {
  for (const auto& a : arrows_)
    if (a.source == a.target) return true;
  return false;
}

bool Quiver::on_two_cycle(int vertex) const {
  for (const auto& a : arrows_) {
    if (a.source != vertex && a.target != vertex) continue;
    for (const auto& b : arrows_)
      if (b.source == a.target && b.target == a.source && a.source != a.target)
        return true;
  }
  return false;
}

bool Quiver::has_two_cycle() const {
  for (const auto& a : arrows_)
    for (const auto& b : arrows_)
      if (b.source == a.target && b.target == a.source && a.source != a.target)
        return true;
  return false;
}

void Quiver::require_cluster_valid() const {
  if (has_loop()) throw LoopPresent("quiver has a loop");
  if (has_two_cycle()) throw TwoCyclePresent("quiver has a 2-cycle");
}

int Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return static_cast<int>(i);
  return -1;
}

int Quiver::arrows_between(int from, int to) const {
  int c = 0;
  for (const auto& a : arrows_)
    if (a.source == from && a.target == to) ++c;
  return c;
}

std::string star_label(const std::string& label) {
  if (label.size() >= 1 && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

Quiver mutate_quiver(const Quiver& q, int i) {
  if (i < 1 || i > q.vertex_count()) throw DimOutOfRange("vertex out of range");
  if (q.has_loop()) throw LoopPresent("mutation undefined on quivers with loops");
  if (q.on_two_cycle(i))
    throw TwoCycleAtVertex("vertex " + std::to_string(i) + " lies on a 2-cycle");

  std::vector<Arrow> out;
  // step 1: composites j -> i -> l
  for (const auto& a : q.arrows()) {
    if (a.target != i) continue;
    for (const auto& b : q.arrows()) {
      if (b.source != i) continue;
      out.push_back({a.source, b.target, "[" + b.label + a.label + "]"});
    }
  }
  // step 2: reverse arrows incident to i
  for (const auto& a : q.arrows()) {
    if (a.source == i || a.target == i)
      out.push_back({a.target, a.source, star_label(a.label)});
    else
      out.push_back(a);
  }
  // step 3: cancel opposing pairs, lowest labels first
  for (int u = 1; u <= q.vertex_count(); ++u) {
    for (int v = u + 1; v <= q.vertex_count(); ++v) {
      std::vector<std::size_t> fwd, bwd;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k].source == u && out[k].target == v) fwd.push_back(k);
        if (out[k].source == v && out[k].target == u) bwd.push_back(k);
      }
      auto by_label = [&](std::size_t x, std::size_t y) {
        return out[x].label < out[y].label;
      };
      std::sort(fwd.begin(), fwd.end(), by_label);
      std::sort(bwd.begin(), bwd.end(), by_label);
      std::size_t k = std::min(fwd.size(), bwd.size());
      std::set<std::size_t> dead;
      for (std::size_t t = 0; t < k; ++t) {
        dead.insert(fwd[t]);
        dead.insert(bwd[t]);
      }
      if (!dead.empty()) {
        std::vector<Arrow> kept;
        for (std::size_t t = 0; t < out.size(); ++t)
          if (!dead.count(t)) kept.push_back(out[t]);
        out = std::move(kept);
      }
    }
  }
  return Quiver(q.vertex_count(), std::move(out));
}

BMatrix b_matrix(const Quiver& q) {
  q.require_cluster_valid();
  int n = q.vertex_count();
  BMatrix b(n, std::vector<long long>(n, 0));
  for (const auto& a : q.arrows()) {
    b[a.source - 1][a.target - 1] += 1;
    b[a.target - 1][a.source - 1] -= 1;
  }
  return b;
}

BMatrix mutate_b_matrix(BMatrix b, int k) {
  int n = static_cast<int>(b.size());
  if (k < 1 || k > n) throw DimOutOfRange("vertex out of range");
  int kk = k - 1;
  BMatrix r = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == kk || j == kk) {
        r[i][j] = -b[i][j];
      } else {
        long long s = b[i][kk] > 0 ? 1 : (b[i][kk] < 0 ? -1 : 0);
        long long prod = b[i][kk] * b[kk][j];
        r[i][j] = b[i][j] + s * std::max(prod, 0LL);
      }
    }
  }
  return r;
}

std::string quiver_to_json(const Quiver& q) {
  nlohmann::json j;
  j["vertices"] = q.vertex_count();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({a.source, a.target, a.label});
  return j.dump();
}

Quiver quiver_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad quiver JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw ParseError("quiver JSON needs 'vertices' and 'arrows'");
  std::vector<Arrow> arrows;
  for (const auto& a : j["arrows"]) {
    if (!a.is_array() || a.size() != 3)
      throw ParseError("arrow entries are [source, target, label]");
    arrows.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<std::string>()});
  }
  return Quiver(j["vertices"].get<int>(), std::move(arrows));
}

}  // namespace qpc
