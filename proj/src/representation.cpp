#include "qpc/representation.hpp"

#include <nlohmann/json.hpp>

namespace qpc {

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

MatZ Representation::matrix(const std::string& label) const {
  int idx = quiver.arrow_index(label);
  if (idx < 0) throw UnknownArrow("no arrow labeled '" + label + "'");
  const Arrow& a = quiver.arrows()[idx];
  auto it = maps.find(label);
  if (it != maps.end()) return it->second;
  return MatZ(dims[a.source - 1], std::vector<Int>(dims[a.target - 1], Int(0)));
}

void Representation::validate_shapes() const {
  if (static_cast<int>(dims.size()) != quiver.vertex_count())
    throw DimOutOfRange("dimension vector length != vertex count");
  for (int d : dims)
    if (d < 0) throw DimOutOfRange("negative dimension");
  for (const auto& [label, m] : maps) {
    int idx = quiver.arrow_index(label);
    if (idx < 0) throw UnknownArrow("map for unknown arrow '" + label + "'");
    const Arrow& a = quiver.arrows()[idx];
    std::size_t rows = dims[a.source - 1], cols = dims[a.target - 1];
    if (m.size() != rows) throw DimOutOfRange("bad row count for arrow '" + label + "'");
    for (const auto& row : m)
      if (row.size() != cols)
        throw DimOutOfRange("bad column count for arrow '" + label + "'");
  }
}

Representation zero_representation(const Quiver& q) {
  return Representation{q, std::vector<int>(q.vertex_count(), 0), {}};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.quiver == b.quiver)) throw QuiverMismatch("direct sum over different quivers");
  Representation r{a.quiver, {}, {}};
  int n = a.quiver.vertex_count();
  for (int v = 0; v < n; ++v) r.dims.push_back(a.dims[v] + b.dims[v]);
  for (const auto& arr : a.quiver.arrows()) {
    MatZ ma = a.matrix(arr.label), mb = b.matrix(arr.label);
    std::size_t rows = ma.size() + mb.size();
    std::size_t cols_a = ma.empty() ? a.dims[arr.target - 1] : ma[0].size();
    std::size_t cols_b = mb.empty() ? b.dims[arr.target - 1] : mb[0].size();
    MatZ m(rows, std::vector<Int>(cols_a + cols_b, Int(0)));
    for (std::size_t i = 0; i < ma.size(); ++i)
      for (std::size_t j = 0; j < cols_a; ++j) m[i][j] = ma[i][j];
    for (std::size_t i = 0; i < mb.size(); ++i)
      for (std::size_t j = 0; j < cols_b; ++j) m[ma.size() + i][cols_a + j] = mb[i][j];
    bool nonzero = false;
    for (const auto& row : m)
      for (const auto& x : row)
        if (x != 0) nonzero = true;
    if (nonzero) r.maps[arr.label] = std::move(m);
  }
  return r;
}

Representation reflect(const Representation& m) {
  Representation r{m.quiver, m.dims, {}};
  for (const auto& [label, mat] : m.maps) {
    int idx = m.quiver.arrow_index(label);
    const Arrow& a = m.quiver.arrows()[idx];
    std::size_t rows = m.dims[a.source - 1], cols = m.dims[a.target - 1];
    MatZ t(cols, std::vector<Int>(rows, Int(0)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t[j][i] = mat[i][j];
    r.maps[label] = std::move(t);
  }
  return r;
}

MatQ to_matq(const MatZ& m) {
  MatQ r;
  r.reserve(m.size());
  for (const auto& row : m) {
    VecQ qrow;
    qrow.reserve(row.size());
    for (const auto& x : row) qrow.push_back(Rat(x));
    r.push_back(std::move(qrow));
  }
  return r;
}

MatQ evaluate_path(const Representation& m, const Path& p) {
  // path labels in application order; matrices compose left-to-right:
  // M_{b1} M_{b2} ... M_{bk} maps the target space to the source space
  int at_src = p.src;
  if (p.labels.empty()) return mat_identity(m.dims[at_src - 1]);
  MatQ acc;
  bool first = true;
  for (const auto& label : p.labels) {
    MatQ step = to_matq(m.matrix(label));
    acc = first ? step : mat_mul(acc, step);
    first = false;
  }
  return acc;
}

void check_relations(const Representation& m, const Potential& w) {
  m.validate_shapes();
  for (const auto& arr : m.quiver.arrows()) {
    PathSeries rel = cyclic_derivative(w, arr.label);
    if (rel.is_zero()) continue;
    // all terms share endpoints t(a) -> s(a)
    std::size_t rows = m.dims[arr.target - 1];
    std::size_t cols = m.dims[arr.source - 1];
    MatQ sum = mat_zero(rows, cols);
    for (const auto& [p, c] : rel.terms()) {
      MatQ term = evaluate_path(m, p);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) sum[i][j] += c * term[i][j];
    }
    for (const auto& row : sum)
      for (const auto& x : row)
        if (x != 0)
          throw RelationViolation("representation violates d_" + arr.label + " W = 0");
  }
}

std::string representation_to_json(const Representation& m) {
  nlohmann::json j;
  j["dims"] = m.dims;
  j["maps"] = nlohmann::json::object();
  for (const auto& [label, mat] : m.maps) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : mat) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(x.str());
      rows.push_back(r);
    }
    j["maps"][label] = rows;
  }
  return j.dump();
}

Representation representation_from_json(const Quiver& q, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad representation JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims"))
    throw ParseError("representation JSON needs 'dims'");
  Representation m{q, j["dims"].get<std::vector<int>>(), {}};
  if (j.contains("maps")) {
    for (auto it = j["maps"].begin(); it != j["maps"].end(); ++it) {
      MatZ mat;
      for (const auto& row : it.value()) {
        std::vector<Int> r;
        for (const auto& x : row)
          r.push_back(x.is_string() ? Int(x.get<std::string>())
                                    : Int(x.get<long long>()));
        mat.push_back(std::move(r));
      }
      m.maps[it.key()] = std::move(mat);
    }
  }
  m.validate_shapes();
  return m;
}

}  // namespace qpc
