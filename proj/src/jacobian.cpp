#include "qpc/jacobian.hpp"

#include <algorithm>
#include <random>

#include "qpc/linalg.hpp"

namespace qpc {

namespace {

int path_end(const Quiver& q, const Path& p) {
  int v = p.src;
  for (const auto& l : p.labels) v = q.arrows()[q.arrow_index(l)].target;
  return v;
}

PathSeries one_path(const Quiver& q, const Path& p, int trunc) {
  PathSeries s(q, trunc);
  s.add_term(p, Rat(1));
  return s;
}

/// All paths of degree 0..max_deg, grouped by degree, each group sorted.
std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, int max_deg) {
  std::vector<std::vector<Path>> by_deg(max_deg + 1);
  for (int v = 1; v <= q.vertex_count(); ++v) by_deg[0].push_back(Path{v, {}});
  for (int d = 1; d <= max_deg; ++d) {
    for (const auto& p : by_deg[d - 1]) {
      int end = path_end(q, p);
      for (const auto& a : q.arrows()) {
        if (a.source != end) continue;
        Path np = p;
        np.labels.push_back(a.label);
        by_deg[d].push_back(std::move(np));
      }
    }
    std::sort(by_deg[d].begin(), by_deg[d].end());
  }
  return by_deg;
}

}  // namespace

int TruncatedJacobian::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

bool TruncatedJacobian::is_basis_path(const Path& p) const {
  int d = p.length();
  if (d > max_degree_) return false;
  const auto& b = basis_[d];
  return std::binary_search(b.begin(), b.end(), p);
}

PathSeries TruncatedJacobian::normal_form(PathSeries s) const {
  // each step trades a pivot term for strictly larger (degree, lex) terms
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, c] : s.terms()) {
      auto it = rows_.find({p.length(), p});
      if (it == rows_.end()) continue;
      s = s - it->second.scaled(c);
      changed = true;
      break;
    }
  }
  return s;
}

TruncatedJacobian truncated_jacobian(const QP& qp, int n, int window) {
  if (n < 1) throw DimOutOfRange("truncation degree must be at least 1");
  TruncatedJacobian j;
  j.qp_ = qp;
  j.max_degree_ = n;

  const Quiver& q = qp.quiver;
  auto paths = enumerate_paths(q, n);

  // spanning set of the truncated ideal: all p * (d_a W) * s, degree <= n
  std::vector<PathSeries> relations;
  for (const auto& a : q.arrows()) {
    PathSeries r = cyclic_derivative(qp.potential, a.label);
    if (r.is_zero()) continue;
    PathSeries rn(q, n);
    rn.clear_exact();
    for (const auto& [p, c] : r.terms()) rn.add_term(p, c);
    if (rn.is_zero()) continue;
    int rmin = n;
    for (const auto& [p, c] : rn.terms()) rmin = std::min(rmin, p.length());
    for (int dl = 0; dl + rmin <= n; ++dl) {
      for (const auto& left : paths[dl]) {
        PathSeries lr = rn * one_path(q, left, n);  // relation after `left`
        if (lr.is_zero()) continue;
        for (int dr = 0; dl + rmin + dr <= n; ++dr) {
          for (const auto& post : paths[dr]) {
            PathSeries full = one_path(q, post, n) * lr;  // post after relation
            if (!full.is_zero()) relations.push_back(std::move(full));
          }
        }
      }
    }
  }

  // elimination: insert rows in ascending leading-term order; the term map
  // is keyed by Path alone, so the (degree, lex) minimum needs a scan
  auto lead_key = [](const PathSeries& s) {
    std::pair<int, Path> best;
    bool first = true;
    for (const auto& [p, c] : s.terms()) {
      std::pair<int, Path> k{p.length(), p};
      if (first || k < best) best = k;
      first = false;
    }
    return best;
  };
  std::sort(relations.begin(), relations.end(),
            [&](const PathSeries& a, const PathSeries& b) {
              return lead_key(a) < lead_key(b);
            });
  for (auto& rel : relations) {
    PathSeries red = j.normal_form(std::move(rel));
    if (red.is_zero()) continue;
    auto key = lead_key(red);
    j.rows_.emplace(key, red.scaled(Rat(1) / red.terms().at(key.second)));
  }

  j.basis_.assign(n + 1, {});
  j.dims_.assign(n + 1, 0);
  for (int d = 0; d <= n; ++d) {
    for (const auto& p : paths[d])
      if (!j.rows_.count({d, p})) j.basis_[d].push_back(p);
    j.dims_[d] = static_cast<int>(j.basis_[d].size());
  }
  j.stabilized_ = n + 1 >= window;
  for (int d = n - window + 1; d <= n; ++d)
    if (d < 0 || j.dims_[d] != 0) j.stabilized_ = false;
  return j;
}

Representation simple_module(const TruncatedJacobian& j, int vertex) {
  const Quiver& q = j.qp().quiver;
  if (vertex < 1 || vertex > q.vertex_count())
    throw DimOutOfRange("vertex out of range");
  Representation m{q, std::vector<int>(q.vertex_count(), 0), {}};
  m.dims[vertex - 1] = 1;
  return m;
}

namespace {

/// Left kQ-module presented by per-vertex spaces and maps V_s -> V_t per
/// arrow s -> t (column convention).
struct LeftModule {
  std::vector<int> dims;
  std::map<std::string, MatQ> act;

  MatQ action(const Quiver& q, const std::string& label) const {
    auto it = act.find(label);
    if (it != act.end()) return it->second;
    const Arrow& a = q.arrows()[q.arrow_index(label)];
    return mat_zero(dims[a.target - 1], dims[a.source - 1]);
  }
};

/// The stored right-module matrices transposed: the Q-side reading used by
/// minimal presentations and g-vectors.
LeftModule left_of(const Representation& m) {
  LeftModule lm;
  lm.dims = m.dims;
  for (const auto& [label, mat] : m.maps)
    lm.act.emplace(label, mat_transpose(to_matq(mat)));
  return lm;
}

/// e_i kQ^ / (relations): basis paths of the truncated quotient starting at
/// i, graded by endpoint, with arrows acting by left composition + reduction.
struct LeftProjective {
  std::vector<Path> paths;              // sorted by (degree, lex)
  std::vector<int> vertex_of;           // endpoint of each basis path
  LeftModule mod;
  std::vector<std::vector<int>> slot;   // per vertex: indices into its space
};

LeftProjective left_projective(const TruncatedJacobian& j, int vertex) {
  if (!j.stabilized())
    throw NotFiniteDimensional("projective modules need a stabilized truncation");
  const Quiver& q = j.qp().quiver;
  int n = q.vertex_count();
  LeftProjective lp;
  for (int d = 0; d <= j.max_degree(); ++d) {
    std::vector<Path> layer;
    for (const auto& p : j.basis()[d])
      if (p.src == vertex) layer.push_back(p);
    std::sort(layer.begin(), layer.end());
    for (auto& p : layer) lp.paths.push_back(std::move(p));
  }
  lp.mod.dims.assign(n, 0);
  lp.slot.assign(n, {});
  std::map<Path, int> coord;  // index within its vertex space
  for (std::size_t k = 0; k < lp.paths.size(); ++k) {
    int v = path_end(q, lp.paths[k]);
    lp.vertex_of.push_back(v);
    coord[lp.paths[k]] = lp.mod.dims[v - 1]++;
    lp.slot[v - 1].push_back(static_cast<int>(k));
  }
  for (const auto& a : q.arrows()) {
    MatQ mat = mat_zero(lp.mod.dims[a.target - 1], lp.mod.dims[a.source - 1]);
    for (int src_idx : lp.slot[a.source - 1]) {
      const Path& p = lp.paths[src_idx];
      PathSeries img = j.normal_form(
          PathSeries::arrow(q, a.label, j.max_degree()) *
          one_path(q, p, j.max_degree()));
      for (const auto& [np, c] : img.terms()) {
        auto it = coord.find(np);
        if (it == coord.end())
          throw NotRepresentable("normal form left the projective basis");
        mat[it->second][coord.at(p)] = c;
      }
    }
    lp.mod.act.emplace(a.label, std::move(mat));
  }
  return lp;
}

/// Per-vertex radical Sum_a Im(act_a) as column lists.
std::vector<MatQ> radical_columns(const Quiver& q, const LeftModule& m) {
  int n = q.vertex_count();
  std::vector<MatQ> cols(n);
  for (int v = 0; v < n; ++v) cols[v] = MatQ(m.dims[v]);
  for (const auto& a : q.arrows()) {
    MatQ act = m.action(q, a.label);
    std::size_t sc = m.dims[a.source - 1];
    for (std::size_t c = 0; c < sc; ++c) {
      for (int r = 0; r < m.dims[a.target - 1]; ++r)
        cols[a.target - 1][r].push_back(act[r][c]);
    }
  }
  return cols;
}

int radical_dim(const MatQ& cols) {
  if (cols.empty() || cols[0].empty()) return 0;
  return static_cast<int>(rank(cols));
}

/// Column indices of the identity completing the radical to a basis of V_v.
std::vector<int> top_complement(const MatQ& rad_cols, int dim) {
  std::size_t extra = rad_cols.empty() ? 0 : rad_cols[0].size();
  MatQ aug = mat_zero(dim, extra + dim);
  for (int r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < extra; ++c) aug[r][c] = rad_cols[r][c];
    aug[r][extra + r] = 1;
  }
  std::vector<int> chosen;
  for (auto piv : rref(aug))
    if (piv >= extra) chosen.push_back(static_cast<int>(piv - extra));
  return chosen;
}

/// Composite left action along a path (labels applied in order).
VecQ apply_path(const Quiver& q, const LeftModule& m, const Path& p, VecQ v) {
  for (const auto& l : p.labels) v = mat_apply(m.action(q, l), v);
  return v;
}

Presentation presentation_impl(const TruncatedJacobian& j, const Representation& m,
                               std::mt19937* rng) {
  const Quiver& q = j.qp().quiver;
  if (!(m.quiver == q)) throw QuiverMismatch("module over a different quiver");
  check_relations(m, j.qp().potential);
  LeftModule lm = left_of(m);
  int n = q.vertex_count();

  // tops: complement of the radical at each vertex, optionally shifted by
  // random radical vectors (a different lift of the same top)
  auto rad = radical_columns(q, lm);
  std::vector<std::pair<int, VecQ>> gens;  // (vertex 1-based, generator)
  for (int v = 0; v < n; ++v) {
    for (int idx : top_complement(rad[v], lm.dims[v])) {
      VecQ g(lm.dims[v], Rat(0));
      g[idx] = 1;
      if (rng) {
        std::uniform_int_distribution<int> coef(-3, 3);
        std::size_t rc = rad[v].empty() ? 0 : rad[v][0].size();
        for (std::size_t c = 0; c < rc; ++c) {
          int t = coef(*rng);
          if (t == 0) continue;
          for (int r = 0; r < lm.dims[v]; ++r) g[r] += Rat(t) * rad[v][r][c];
        }
      }
      gens.emplace_back(v + 1, std::move(g));
    }
  }

  Presentation pres;
  pres.p0.assign(n, 0);
  pres.p1.assign(n, 0);
  for (const auto& [v, g] : gens) pres.p0[v - 1]++;

  // cover P0 = direct sum of e_v kQ^ over the generators; columns of phi_w
  // are the images of the projective basis paths landing at w
  std::map<int, LeftProjective> projs;
  for (const auto& [v, g] : gens)
    if (!projs.count(v)) projs.emplace(v, left_projective(j, v));

  std::vector<int> p0dims(n, 0);
  std::vector<MatQ> phi(n);  // phi[w]: lm.dims[w] x p0dims[w]
  for (int w = 0; w < n; ++w) phi[w] = MatQ(lm.dims[w]);
  struct Col { int gen; int path_idx; };
  std::vector<std::vector<Col>> colinfo(n);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& [v, g] = gens[gi];
    const LeftProjective& lp = projs.at(v);
    for (std::size_t k = 0; k < lp.paths.size(); ++k) {
      int w = lp.vertex_of[k] - 1;
      VecQ img = apply_path(q, lm, lp.paths[k], g);
      for (int r = 0; r < lm.dims[w]; ++r) phi[w][r].push_back(img[r]);
      colinfo[w].push_back({static_cast<int>(gi), static_cast<int>(k)});
      p0dims[w]++;
    }
  }

  // kernel of the cover, per vertex (handle 0-row maps explicitly)
  std::vector<std::vector<VecQ>> ker(n);
  for (int w = 0; w < n; ++w) {
    if (lm.dims[w] == 0) {
      for (int c = 0; c < p0dims[w]; ++c) {
        VecQ e(p0dims[w], Rat(0));
        e[c] = 1;
        ker[w].push_back(std::move(e));
      }
    } else {
      ker[w] = kernel_basis(phi[w]);
    }
  }

  // induced arrow action on the kernel, then its top
  LeftModule km;
  km.dims.assign(n, 0);
  for (int w = 0; w < n; ++w) km.dims[w] = static_cast<int>(ker[w].size());
  for (const auto& a : q.arrows()) {
    int s = a.source - 1, t = a.target - 1;
    MatQ act = mat_zero(km.dims[t], km.dims[s]);
    for (int c = 0; c < km.dims[s]; ++c) {
      // push the kernel vector through the block-diagonal P0 action
      VecQ y(p0dims[t], Rat(0));
      for (int col = 0; col < p0dims[s]; ++col) {
        if (ker[s][c][col] == 0) continue;
        const Col& info = colinfo[s][col];
        const LeftProjective& lp = projs.at(gens[info.gen].first);
        const MatQ& pact = lp.mod.act.at(a.label);
        // column of the projective action for this basis path
        int local = 0;
        while (lp.slot[s][local] != info.path_idx) ++local;
        for (std::size_t rr = 0; rr < pact.size(); ++rr) {
          if (pact[rr][local] == 0) continue;
          int tgt_path = lp.slot[t][rr];
          // locate the P0 column for (info.gen, tgt_path) at vertex t
          for (int cc = 0; cc < p0dims[t]; ++cc)
            if (colinfo[t][cc].gen == info.gen && colinfo[t][cc].path_idx == tgt_path)
              y[cc] += ker[s][c][col] * pact[rr][local];
        }
      }
      // coordinates of y in the kernel basis at t
      if (km.dims[t] == 0) {
        for (const auto& x : y)
          if (x != 0) throw NotRepresentable("cover kernel is not a submodule");
        continue;
      }
      MatQ basis_t = mat_zero(p0dims[t], km.dims[t]);
      for (int bc = 0; bc < km.dims[t]; ++bc)
        for (int r = 0; r < p0dims[t]; ++r) basis_t[r][bc] = ker[t][bc][r];
      auto sol = solve(basis_t, y);
      if (!sol) throw NotRepresentable("cover kernel is not a submodule");
      for (int r = 0; r < km.dims[t]; ++r) act[r][c] = (*sol)[r];
    }
    km.act.emplace(a.label, std::move(act));
  }

  auto krad = radical_columns(q, km);
  for (int v = 0; v < n; ++v)
    pres.p1[v] = km.dims[v] - radical_dim(krad[v]);
  return pres;
}

}  // namespace

Representation projective_module(const TruncatedJacobian& j, int vertex) {
  const Quiver& q = j.qp().quiver;
  if (vertex < 1 || vertex > q.vertex_count())
    throw DimOutOfRange("vertex out of range");
  LeftProjective lp = left_projective(j, vertex);
  Representation m{q, lp.mod.dims, {}};
  for (const auto& a : q.arrows()) {
    MatQ act = lp.mod.action(q, a.label);  // V_s -> V_t
    if (act.empty() || act[0].empty()) continue;
    MatZ stored(act[0].size(), std::vector<Int>(act.size(), Int(0)));
    bool nonzero = false;
    for (std::size_t r = 0; r < act.size(); ++r)
      for (std::size_t c = 0; c < act[r].size(); ++c) {
        const Rat& x = act[r][c];
        if (denominator(x) != 1)
          throw NotRepresentable("non-integral structure constant");
        stored[c][r] = numerator(x);
        if (x != 0) nonzero = true;
      }
    if (nonzero) m.maps[a.label] = std::move(stored);
  }
  return m;
}

Presentation minimal_presentation(const TruncatedJacobian& j, const Representation& m) {
  return presentation_impl(j, m, nullptr);
}

Presentation minimal_presentation_seeded(const TruncatedJacobian& j,
                                         const Representation& m, unsigned seed) {
  std::mt19937 rng(seed);
  return presentation_impl(j, m, &rng);
}

std::vector<int> g_vector(const TruncatedJacobian& j, const Representation& m) {
  Presentation pres = minimal_presentation(j, m);
  std::vector<int> g(pres.p0.size());
  for (std::size_t v = 0; v < g.size(); ++v) g[v] = pres.p1[v] - pres.p0[v];
  return g;
}

}  // namespace qpc
