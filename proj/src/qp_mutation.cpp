#include "qpc/qp_mutation.hpp"

#include <algorithm>
#include <set>

namespace qpc {

namespace {

PathSeries with_trunc(const PathSeries& s, const Quiver& q, int trunc) {
  PathSeries r(q, trunc);
  if (!s.exact()) r.clear_exact();
  for (const auto& [p, c] : s.terms()) r.add_term(p, c);
  return r;
}

PathSeries single_arrow_series(const Quiver& q, const std::string& label, int trunc) {
  return PathSeries::arrow(q, label, trunc);
}

int arrow_source(const Quiver& q, const std::string& label) {
  return q.arrows()[q.arrow_index(label)].source;
}
int arrow_target(const Quiver& q, const std::string& label) {
  return q.arrows()[q.arrow_index(label)].target;
}

}  // namespace

QP premutate(const QP& qp, int i) {
  const Quiver& q = qp.quiver;
  if (i < 1 || i > q.vertex_count()) throw DimOutOfRange("vertex out of range");
  if (q.has_loop()) throw LoopPresent("premutation undefined on quivers with loops");
  if (q.on_two_cycle(i))
    throw TwoCycleAtVertex("vertex " + std::to_string(i) + " lies on a 2-cycle");

  std::vector<Arrow> in_arrows, out_arrows;
  for (const auto& a : q.arrows()) {
    if (a.target == i) in_arrows.push_back(a);
    if (a.source == i) out_arrows.push_back(a);
  }

  std::vector<Arrow> arrows;
  for (const auto& a : in_arrows)
    for (const auto& b : out_arrows)
      arrows.push_back({a.source, b.target, "[" + b.label + a.label + "]"});
  for (const auto& a : q.arrows()) {
    if (a.source == i || a.target == i)
      arrows.push_back({a.target, a.source, star_label(a.label)});
    else
      arrows.push_back(a);
  }
  Quiver qt(q.vertex_count(), std::move(arrows));

  int trunc = qp.potential.series().trunc_degree();
  PathSeries wt(qt, trunc);
  if (!qp.potential.series().exact()) wt.clear_exact();

  // [W]: rewrite each cycle with composites [ba] across vertex i.
  for (const auto& [p, c] : qp.potential.series().terms()) {
    int len = p.length();
    int rot = -1;
    for (int k = 0; k < len; ++k) {
      if (arrow_source(q, p.labels[k]) != i) {
        rot = k;
        break;
      }
    }
    if (rot < 0)
      throw NotRepresentable("cycle passes through the mutated vertex at every rotation");
    std::vector<std::string> labels;
    for (int t = 0; t < len; ++t) labels.push_back(p.labels[(rot + t) % len]);
    Path np;
    np.src = arrow_source(q, labels.front());
    for (int t = 0; t < len; ++t) {
      const std::string& l = labels[t];
      if (arrow_target(q, l) == i) {
        // consecutive pair through i; labels[t+1] exists since the base
        // vertex of the rotation is not i
        const std::string& l2 = labels[t + 1];
        np.labels.push_back("[" + l2 + l + "]");
        ++t;
      } else {
        np.labels.push_back(l);
      }
    }
    wt.add_term(np, c);
  }

  // sum over a: ?->i, b: i->? of a* b* [ba]
  for (const auto& a : in_arrows) {
    for (const auto& b : out_arrows) {
      Path p;
      p.src = a.source;
      p.labels = {"[" + b.label + a.label + "]", star_label(b.label), star_label(a.label)};
      wt.add_term(p, Rat(1));
    }
  }
  return QP{qt, Potential(std::move(wt))};
}

ReduceResult reduce(const QP& qp) {
  const Quiver input_quiver = qp.quiver;
  int trunc = qp.potential.series().trunc_degree();

  Potential w = qp.potential;
  std::map<std::string, PathSeries> witness;
  for (const auto& a : input_quiver.arrows())
    witness.emplace(a.label, single_arrow_series(input_quiver, a.label, trunc));

  std::set<std::string> trivial_labels;
  PathSeries trivial_terms(input_quiver, trunc);
  bool exhausted = false;

  const int max_pairs = static_cast<int>(input_quiver.arrows().size());
  for (int round = 0; round <= max_pairs; ++round) {
    // pick the degree-2 term with the smallest arrow pair
    const Path* chosen = nullptr;
    std::pair<std::string, std::string> chosen_key;
    for (const auto& [p, c] : w.series().terms()) {
      if (p.length() != 2) continue;
      std::pair<std::string, std::string> key = std::minmax(p.labels[0], p.labels[1]);
      if (!chosen || key < chosen_key) {
        chosen = &p;
        chosen_key = key;
      }
    }
    if (!chosen) break;
    const Path quad = *chosen;  // stored canonically rotated
    chosen = nullptr;           // invalidated by substitutions below
    const std::string u = quad.labels[0];  // applied first
    const std::string v = quad.labels[1];
    if (u == v) {
      // a length-2 cycle on a single loop arrow cannot be split off
      exhausted = true;
      break;
    }

    bool converged = false;
    for (int pass = 0; pass <= trunc + 1; ++pass) {
      auto it = w.series().terms().find(quad);
      if (it == w.series().terms().end()) break;  // pair vanished, rescan
      Rat c = it->second;
      PathSeries vu = single_arrow_series(input_quiver, v, trunc);
      PathSeries uu = single_arrow_series(input_quiver, u, trunc);
      PathSeries a_res =
          with_trunc(cyclic_derivative(w, u), input_quiver, trunc) - vu.scaled(c);
      PathSeries b_res =
          with_trunc(cyclic_derivative(w, v), input_quiver, trunc) - uu.scaled(c);
      if (a_res.is_zero() && b_res.is_zero()) {
        converged = true;
        // split off ({u,v}, c*vu)
        trivial_labels.insert(u);
        trivial_labels.insert(v);
        trivial_terms.add_term(quad, c);
        PathSeries rest = w.series();
        rest.add_term(quad, -c);
        w = Potential(std::move(rest));
        break;
      }
      std::map<std::string, PathSeries> sub;
      sub.emplace(u, uu - b_res.scaled(Rat(1) / c));
      sub.emplace(v, vu - a_res.scaled(Rat(1) / c));
      w = Potential(substitute(w.series(), sub));
      for (auto& [label, img] : witness) img = substitute(img, sub);
    }
    if (!converged) {
      // the same pair is still quadratic after the pass budget: give up
      bool stuck = false;
      for (const auto& [p, c] : w.series().terms())
        if (p.length() == 2 &&
            std::pair<std::string, std::string>(std::minmax(
                p.labels[0], p.labels[1])) == chosen_key)
          stuck = true;
      if (stuck) {
        exhausted = true;
        break;
      }
    }
  }
  for (const auto& [p, c] : w.series().terms())
    if (p.length() == 2) exhausted = true;

  // assemble the reduced and trivial quivers
  std::vector<Arrow> red_arrows, triv_arrows;
  for (const auto& a : input_quiver.arrows()) {
    if (trivial_labels.count(a.label))
      triv_arrows.push_back(a);
    else
      red_arrows.push_back(a);
  }
  Quiver red_q(input_quiver.vertex_count(), std::move(red_arrows));
  Quiver triv_q(input_quiver.vertex_count(), std::move(triv_arrows));

  PathSeries red_w(red_q, trunc);
  if (!w.series().exact() || exhausted) red_w.clear_exact();
  for (const auto& [p, c] : w.series().terms()) {
    bool uses_trivial = false;
    for (const auto& l : p.labels)
      if (trivial_labels.count(l)) uses_trivial = true;
    if (uses_trivial) {
      exhausted = true;  // leftover coupling, below truncation resolution
      continue;
    }
    red_w.add_term(p, c);
  }
  PathSeries triv_w(triv_q, trunc);
  for (const auto& [p, c] : trivial_terms.terms()) triv_w.add_term(p, c);

  ReduceResult r;
  r.reduced = QP{std::move(red_q), Potential(std::move(red_w))};
  r.trivial = QP{std::move(triv_q), Potential(std::move(triv_w))};
  r.witness = std::move(witness);
  r.truncation_exhausted = exhausted;
  return r;
}

MutationResult mutate_qp_full(const QP& qp, int i) {
  QP pre = premutate(qp, i);
  ReduceResult red = reduce(pre);
  if (red.truncation_exhausted)
    throw TruncationExhausted("reduction did not stabilize below trunc_degree");
  return MutationResult{std::move(red.reduced), std::move(red.trivial),
                        std::move(red.witness)};
}

QP mutate_qp(const QP& qp, int i) { return mutate_qp_full(qp, i).qp; }

bool is_admissible(const QP& qp, const std::vector<int>& seq) {
  QP cur = qp;
  for (int i : seq) {
    if (i < 1 || i > cur.quiver.vertex_count()) return false;
    if (cur.quiver.has_loop() || cur.quiver.on_two_cycle(i)) return false;
    cur = mutate_qp(cur, i);
  }
  return true;
}

namespace {

std::string state_key(const QP& qp) {
  return quiver_to_json(qp.quiver) + "|" + qp.potential.to_string();
}

void probe_rec(const QP& qp, int depth, std::vector<int>& prefix,
               std::map<std::string, int>& explored, ProbeReport& report) {
  if (depth == 0) return;
  auto [it, fresh] = explored.emplace(state_key(qp), depth);
  if (!fresh) {
    if (it->second >= depth) return;  // already probed at least this deep
    it->second = depth;
  }
  for (int i = 1; i <= qp.quiver.vertex_count(); ++i) {
    prefix.push_back(i);
    if (qp.quiver.on_two_cycle(i)) {
      report.obstructions.push_back({prefix, i});
    } else {
      QP next = mutate_qp(qp, i);
      probe_rec(next, depth - 1, prefix, explored, report);
    }
    prefix.pop_back();
  }
}

}  // namespace

ProbeReport probe_nondegeneracy(const QP& qp, int depth) {
  ProbeReport report;
  report.depth = depth;
  std::vector<int> prefix;
  std::map<std::string, int> explored;
  probe_rec(qp, depth, prefix, explored, report);
  return report;
}

}  // namespace qpc
