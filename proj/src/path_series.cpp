#include "qpc/path_series.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qpc {

PathSeries::PathSeries(Quiver quiver, int trunc_degree)
    : quiver_(std::move(quiver)), trunc_(trunc_degree) {}

PathSeries PathSeries::arrow(const Quiver& q, const std::string& label, int trunc) {
  int idx = q.arrow_index(label);
  if (idx < 0) throw UnknownArrow("no arrow labeled '" + label + "'");
  PathSeries s(q, trunc);
  s.add_term(Path{q.arrows()[idx].source, {label}}, Rat(1));
  return s;
}

PathSeries PathSeries::idempotent(const Quiver& q, int vertex, int trunc) {
  if (vertex < 1 || vertex > q.vertex_count())
    throw DimOutOfRange("vertex out of range");
  PathSeries s(q, trunc);
  s.add_term(Path{vertex, {}}, Rat(1));
  return s;
}

int PathSeries::path_target(const Path& p) const {
  if (p.labels.empty()) return p.src;
  int idx = quiver_.arrow_index(p.labels.back());
  if (idx < 0) throw UnknownArrow("no arrow labeled '" + p.labels.back() + "'");
  return quiver_.arrows()[idx].target;
}

bool PathSeries::path_composable(const Path& p) const {
  int at = p.src;
  for (const auto& l : p.labels) {
    int idx = quiver_.arrow_index(l);
    if (idx < 0) return false;
    if (quiver_.arrows()[idx].source != at) return false;
    at = quiver_.arrows()[idx].target;
  }
  return true;
}

void PathSeries::add_term(const Path& p, const Rat& c) {
  if (c == 0) return;
  if (p.length() > trunc_) {
    exact_ = false;
    return;
  }
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PathSeries::check_same_quiver(const PathSeries& other) const {
  if (!(quiver_ == other.quiver_))
    throw QuiverMismatch("series over different quivers");
}

PathSeries& PathSeries::operator+=(const PathSeries& other) {
  check_same_quiver(other);
  trunc_ = std::min(trunc_, other.trunc_);
  exact_ = exact_ && other.exact_;
  std::map<Path, Rat> old = std::move(terms_);
  terms_.clear();
  for (const auto& [p, c] : old) add_term(p, c);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

PathSeries PathSeries::operator+(const PathSeries& other) const {
  PathSeries r = *this;
  r += other;
  return r;
}

PathSeries PathSeries::operator-() const { return scaled(Rat(-1)); }

PathSeries PathSeries::operator-(const PathSeries& other) const {
  return *this + (-other);
}

PathSeries PathSeries::scaled(const Rat& c) const {
  PathSeries r(quiver_, trunc_);
  r.exact_ = exact_;
  if (c == 0) return r;
  for (const auto& [p, coef] : terms_) r.terms_.emplace(p, coef * c);
  return r;
}

PathSeries PathSeries::operator*(const PathSeries& other) const {
  check_same_quiver(other);
  PathSeries r(quiver_, std::min(trunc_, other.trunc_));
  r.exact_ = exact_ && other.exact_;
  for (const auto& [pg, cg] : other.terms_) {    // applied first
    int tail = other.path_target(pg);
    for (const auto& [pf, cf] : terms_) {        // applied second
      if (pf.src != tail) continue;
      Path prod{pg.src, pg.labels};
      prod.labels.insert(prod.labels.end(), pf.labels.begin(), pf.labels.end());
      r.add_term(prod, cf * cg);
    }
  }
  return r;
}

bool operator==(const PathSeries& a, const PathSeries& b) {
  return a.quiver_ == b.quiver_ && a.terms_ == b.terms_;
}

std::string PathSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rat coef = c;
    if (first) {
      if (coef < 0) {
        os << "-";
        coef = -coef;
      }
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    bool unit_coef = (coef == 1) && !p.labels.empty();
    if (!unit_coef) os << qpc::to_string(coef);
    if (p.labels.empty()) {
      os << (coef == 1 ? "" : "*") << "e_" << p.src;
    } else {
      if (!unit_coef) os << "*";
      for (auto it = p.labels.rbegin(); it != p.labels.rend(); ++it) os << *it;
    }
  }
  return os.str();
}

PathSeries substitute(const PathSeries& f,
                      const std::map<std::string, PathSeries>& sub) {
  const Quiver& q = f.quiver();
  for (const auto& [label, img] : sub) {
    int idx = q.arrow_index(label);
    if (idx < 0) throw UnknownArrow("substitution for unknown arrow '" + label + "'");
    const Arrow& a = q.arrows()[idx];
    for (const auto& [p, c] : img.terms()) {
      if (p.src != a.source || img.path_target(p) != a.target)
        throw EndpointMismatch("image of '" + label + "' has wrong endpoints");
    }
  }
  PathSeries result(q, f.trunc_degree());
  if (!f.exact()) result.clear_exact();
  for (const auto& [p, c] : f.terms()) {
    PathSeries acc = PathSeries::idempotent(q, p.src, f.trunc_degree());
    for (const auto& label : p.labels) {
      auto it = sub.find(label);
      PathSeries factor = (it != sub.end())
                              ? it->second
                              : PathSeries::arrow(q, label, f.trunc_degree());
      acc = factor * acc;
    }
    result += acc.scaled(c);
  }
  return result;
}

// ---------------------------------------------------------------------------

Path Potential::canonical_cycle(const Quiver& q, const Path& p) {
  int len = p.length();
  if (len == 0) return p;
  // Rotation k starts application at labels[k]; compare cycle words
  // (labels read last-applied-first).
  auto word_of = [&](int k) {
    std::vector<std::string> w;
    for (int t = len - 1; t >= 0; --t) w.push_back(p.labels[(k + t) % len]);
    return w;
  };
  int best = 0;
  std::vector<std::string> best_word = word_of(0);
  for (int k = 1; k < len; ++k) {
    auto w = word_of(k);
    if (w < best_word) {
      best_word = std::move(w);
      best = k;
    }
  }
  Path out;
  int idx = q.arrow_index(p.labels[best]);
  out.src = q.arrows()[idx].source;
  for (int t = 0; t < len; ++t) out.labels.push_back(p.labels[(best + t) % len]);
  return out;
}

Potential::Potential(PathSeries series) : series_(series.quiver(), series.trunc_degree()) {
  if (!series.exact()) series_.clear_exact();
  for (const auto& [p, c] : series.terms()) {
    if (!series.path_composable(p))
      throw ParseError("potential term is not a composable path");
    if (series.path_target(p) != p.src || p.length() < 2)
      throw ParseError("potential terms must be cycles of length >= 2");
    series_.add_term(canonical_cycle(series.quiver(), p), c);
  }
}

Potential Potential::zero(const Quiver& q, int trunc) {
  return Potential(PathSeries(q, trunc));
}

Potential Potential::operator+(const Potential& other) const {
  return Potential(series_ + other.series_);
}

Potential Potential::scaled(const Rat& c) const {
  return Potential(series_.scaled(c));
}

PathSeries cyclic_derivative(const Potential& w, const std::string& arrow_label) {
  const PathSeries& s = w.series();
  const Quiver& q = s.quiver();
  if (q.arrow_index(arrow_label) < 0)
    throw UnknownArrow("no arrow labeled '" + arrow_label + "'");
  PathSeries r(q, s.trunc_degree() - 1);
  if (!s.exact()) r.clear_exact();
  for (const auto& [p, c] : s.terms()) {
    int len = p.length();
    for (int j = 0; j < len; ++j) {
      if (p.labels[j] != arrow_label) continue;
      // remove occurrence j; remaining arrows applied in cyclic order j+1,...
      Path rem;
      int idx = q.arrow_index(p.labels[(j + 1) % len]);
      rem.src = (len == 1) ? q.arrows()[q.arrow_index(arrow_label)].target
                           : q.arrows()[idx].source;
      for (int t = 1; t < len; ++t) rem.labels.push_back(p.labels[(j + t) % len]);
      r.add_term(rem, c);
    }
  }
  return r;
}

std::string potential_to_json(const Potential& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [p, c] : w.series().terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (auto it = p.labels.rbegin(); it != p.labels.rend(); ++it) word.push_back(*it);
    j.push_back({qpc::to_string(c), word});
  }
  return j.dump();
}

Potential potential_from_json(const Quiver& q, const std::string& text, int trunc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad potential JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("potential JSON must be an array of terms");
  PathSeries s(q, trunc);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw ParseError("potential terms are [coefficient, [labels...]]");
    Rat c = term[0].is_string() ? parse_rational(term[0].get<std::string>())
                                : Rat(term[0].get<long long>());
    std::vector<std::string> word = term[1].get<std::vector<std::string>>();
    Path p;
    if (word.empty()) throw ParseError("empty potential term");
    // word is right-to-left; application order is the reverse
    std::vector<std::string> labels(word.rbegin(), word.rend());
    int idx = q.arrow_index(labels.front());
    if (idx < 0) throw UnknownArrow("no arrow labeled '" + labels.front() + "'");
    p.src = q.arrows()[idx].source;
    p.labels = std::move(labels);
    if (!s.path_composable(p)) throw ParseError("potential term is not composable");
    s.add_term(p, c);
  }
  return Potential(std::move(s));
}

}  // namespace qpc
