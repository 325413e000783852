#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qpc/character.hpp"
#include "qpc/qp_mutation.hpp"

using nlohmann::json;
using namespace qpc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Output {
  json result;
  bool exact = true;
  std::vector<std::string> warnings;
  std::string text;  // --format text body
};

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    json wrapper{{"result", out.result},
                 {"exact", out.exact},
                 {"warnings", out.warnings}};
    std::cout << wrapper.dump(2) << "\n";
  } else {
    std::cout << out.text;
    for (const auto& w : out.warnings) std::cout << "warning: " << w << "\n";
  }
}

Quiver load_quiver(const std::string& path) {
  return quiver_from_json(slurp(path));
}

Potential load_potential(const Quiver& q, const std::string& path, int trunc) {
  if (path.empty()) return Potential::zero(q, trunc);
  return potential_from_json(q, slurp(path), trunc);
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quiver mutation, Jacobian algebras, seed mutation and "
               "cluster characters"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string quiver_path, potential_path, module_path, ses_path, suite;
  std::vector<int> seq, gvec;
  int trunc = kDefaultTruncDegree;
  int depth = 6;
  long long budget = -1;  // per-subcommand default

  auto* mq = app.add_subcommand("mutate-quiver", "Mutate a quiver along a vertex sequence");
  mq->add_option("-q,--quiver", quiver_path, "Quiver JSON file")->required();
  mq->add_option("--seq", seq, "Mutation vertices i1,i2,...")->delimiter(',');

  auto* mqp = app.add_subcommand("mutate-qp", "Mutate a quiver with potential (with reduction)");
  mqp->add_option("-q,--quiver", quiver_path, "Quiver JSON file")->required();
  mqp->add_option("-w,--potential", potential_path, "Potential JSON file (default 0)");
  mqp->add_option("--seq", seq, "Mutation vertices i1,i2,...")->delimiter(',');
  mqp->add_option("--trunc-degree", trunc, "Series truncation degree");

  auto* jac = app.add_subcommand("jacobian", "Truncated Jacobian algebra dimensions");
  jac->add_option("-q,--quiver", quiver_path, "Quiver JSON file")->required();
  jac->add_option("-w,--potential", potential_path, "Potential JSON file (default 0)");
  jac->add_option("--trunc-degree", trunc, "Truncation degree");

  auto* sm = app.add_subcommand("seed-mutate", "Mutate the initial seed along a vertex sequence");
  sm->add_option("-q,--quiver", quiver_path, "Quiver JSON file")->required();
  sm->add_option("--seq", seq, "Mutation vertices i1,i2,...")->delimiter(',');

  auto* bfs = app.add_subcommand("bfs", "Breadth-first closure of seed mutation");
  bfs->add_option("-q,--quiver", quiver_path, "Quiver JSON file")->required();
  bfs->add_option("--depth", depth, "Mutation depth horizon");
  bfs->add_option("--budget", budget, "Seed budget");

  auto* ch = app.add_subcommand("char", "Cluster character of a module with a g-vector");
  ch->add_option("-q,--quiver", quiver_path, "Quiver JSON file")->required();
  ch->add_option("-m,--module", module_path, "Representation JSON file")->required();
  ch->add_option("-g,--gvector", gvec, "g-vector g1,g2,...")->required()->delimiter(',');
  ch->add_option("--budget", budget, "Point-count budget");

  auto* dich = app.add_subcommand("dichotomy", "Stratum dichotomy and dimension identity checks");
  dich->add_option("-q,--quiver", quiver_path, "Quiver JSON file")->required();
  dich->add_option("-s,--ses", ses_path, "Extension data JSON file")->required();
  dich->add_option("--budget", budget, "Point-count budget");

  auto* ver = app.add_subcommand("verify", "Run a named verification suite");
  ver->add_option("--suite", suite, "Suite name (a2, a3, cycle3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;

    if (*mq) {
      Quiver q = load_quiver(quiver_path);
      for (int i : seq) q = mutate_quiver(q, i);
      std::string text = quiver_to_json(q);
      out.result = json::parse(text);
      out.text = text + "\n";
    } else if (*mqp) {
      Quiver q = load_quiver(quiver_path);
      QP qp{q, load_potential(q, potential_path, trunc)};
      for (int i : seq) qp = mutate_qp(qp, i);
      out.exact = qp.potential.series().exact();
      if (!out.exact)
        out.warnings.push_back("potential truncated at degree " +
                               std::to_string(trunc));
      std::string qtext = quiver_to_json(qp.quiver);
      std::string wtext = potential_to_json(qp.potential);
      out.result = json{{"quiver", json::parse(qtext)},
                        {"potential", json::parse(wtext)}};
      out.text = qtext + "\n" + wtext + "\n";
    } else if (*jac) {
      Quiver q = load_quiver(quiver_path);
      QP qp{q, load_potential(q, potential_path, trunc)};
      TruncatedJacobian j = truncated_jacobian(qp, trunc);
      out.exact = j.stabilized();
      if (!j.stabilized())
        out.warnings.push_back("dimension sequence not stabilized at degree " +
                               std::to_string(trunc));
      out.result = json{{"dims", j.dims()},
                        {"total", j.total_dim()},
                        {"stabilized", j.stabilized()}};
      std::ostringstream os;
      os << "dims by degree: " << join_ints(j.dims()) << "\n"
         << "total: " << j.total_dim() << "\n"
         << "stabilized: " << (j.stabilized() ? "yes" : "no") << "\n";
      out.text = os.str();
    } else if (*sm) {
      Quiver q = load_quiver(quiver_path);
      Seed s = initial_seed(q);
      for (int i : seq) s = mutate_seed(s, i);
      auto names = default_var_names(q.vertex_count());
      json cluster = json::array();
      std::ostringstream os;
      for (const auto& v : s.cluster) {
        std::string str = v.to_string(names);
        cluster.push_back(str);
        os << str << "\n";
      }
      out.result = json{{"cluster", cluster},
                        {"quiver", json::parse(quiver_to_json(s.quiver))}};
      out.text = os.str() + quiver_to_json(s.quiver) + "\n";
    } else if (*bfs) {
      Quiver q = load_quiver(quiver_path);
      long long sb = budget < 0 ? kDefaultSeedBudget : budget;
      ExchangeGraph g = exchange_graph(q, depth, sb);
      auto names = default_var_names(q.vertex_count());
      // stable short ids for the canonical seed forms
      std::map<std::string, int> id;
      for (const auto& [a, b] : g.edges) {
        id.emplace(a, 0);
        id.emplace(b, 0);
      }
      int next = 0;
      for (auto& [key, value] : id) value = next++;
      json vars = json::array(), edges = json::array();
      std::ostringstream os;
      os << "variables (" << g.variables.size() << "):\n";
      for (const auto& v : g.variables) {
        std::string str = v.to_string(names);
        vars.push_back(str);
        os << "  " << str << "\n";
      }
      os << "seeds: " << g.seed_count << "\n"
         << "closure: " << (g.closed ? "yes" : "no") << "\n"
         << "edges (" << g.edges.size() << "):\n";
      for (const auto& [a, b] : g.edges) {
        edges.push_back(json::array({id[a], id[b]}));
        os << "  s" << id[a] << " -- s" << id[b] << "\n";
      }
      out.exact = g.closed;
      if (!g.closed)
        out.warnings.push_back("exchange graph truncated at depth " +
                               std::to_string(depth));
      out.result = json{{"variables", vars},
                        {"seed_count", g.seed_count},
                        {"closed", g.closed},
                        {"edges", edges}};
      out.text = os.str();
    } else if (*ch) {
      Quiver q = load_quiver(quiver_path);
      Representation m = representation_from_json(q, slurp(module_path));
      long long cb = budget < 0 ? kDefaultCountBudget : budget;
      LaurentPoly l = character(CharInput{m, gvec}, cb);
      std::string str = l.to_string(default_var_names(q.vertex_count()));
      out.result = json{{"character", str}};
      out.text = str + "\n";
    } else if (*dich) {
      Quiver q = load_quiver(quiver_path);
      SESData s = ses_from_json(q, slurp(ses_path));
      validate_ses(s);
      long long cb = budget < 0 ? kDefaultCountBudget : budget;
      json checks = json::object();
      std::ostringstream os;
      bool all = true;
      for (u64 p : {2, 3, 5}) {
        bool d = dichotomy_check(s, p, cb);
        bool v = dimension_identity_check(s, p, cb);
        all = all && d && v;
        checks["F" + std::to_string(p)] =
            json{{"dichotomy", d}, {"dimension_identity", v}};
        os << "over F_" << p << ": dichotomy " << (d ? "yes" : "NO")
           << ", dimension identity " << (v ? "yes" : "NO") << "\n";
      }
      bool eu = euler_lemma_check(s, s.x.dims, s.y.dims, cb);
      all = all && eu;
      checks["euler_lemma"] = eu;
      os << "Euler lemma at (dim X, dim Y): " << (eu ? "yes" : "NO") << "\n";
      out.result = checks;
      out.text = os.str();
      emit(out, format);
      return all ? 0 : 1;
    } else if (*ver) {
      auto checks = run_verify_suite(suite);
      json arr = json::array();
      std::ostringstream os;
      bool all = true;
      for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}});
        os << (c.pass ? "PASS" : "FAIL") << " " << c.name << "\n";
      }
      out.result = json{{"suite", suite}, {"checks", arr}};
      out.text = os.str();
      emit(out, format);
      return all ? 0 : 1;
    }

    emit(out, format);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
