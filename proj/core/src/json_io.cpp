#include "klv/json_io.hpp"

#include <fstream>

#include "klv/error.hpp"

namespace klv {

namespace {

json laurent_json(const LaurentV& c) { return c.to_string(); }

std::set<int> int_set(const json& j) {
  std::set<int> out;
  for (const auto& v : j) out.insert(v.get<int>());
  return out;
}

} // namespace

OrbitDatum datum_from_json(const json& j) {
  if (!j.contains("coxeter")) throw Error(Errc::bad_input, "datum JSON lacks 'coxeter'");
  CoxeterPtr sys;
  const json& cox = j.at("coxeter");
  if (cox.contains("type")) {
    sys = CoxeterSystem::make(cox.at("type").get<std::string>());
  } else if (cox.contains("matrix")) {
    sys = CoxeterSystem::make_from_matrix(cox.at("matrix").get<std::vector<std::vector<int>>>());
  } else {
    throw Error(Errc::bad_input, "coxeter needs 'type' or 'matrix'");
  }

  Involution theta = Involution::identity(sys->rank());
  if (j.contains("theta")) theta.perm = j.at("theta").get<std::vector<int>>();
  validate_involution(*sys, theta);

  std::optional<SubgroupSpec> wk;
  if (j.contains("wk") && !j.at("wk").is_null()) {
    SubgroupSpec spec;
    spec.generator_words = j.at("wk").get<std::vector<std::vector<int>>>();
    wk = spec;
  }

  std::vector<Param> params;
  std::map<std::string, int> index;
  for (const auto& pj : j.at("params")) {
    Param p;
    p.id = pj.at("id").get<std::string>();
    p.orbit = pj.at("orbit").get<std::string>();
    p.dim = pj.at("dim").get<int>();
    p.local_system = pj.value("local_system", std::string("triv"));
    p.trivial_ls = pj.value("trivial", true);
    p.closed_orbit = pj.value("closed", false);
    p.declared_clean = pj.value("clean", false);
    if (p.dim < 0) throw Error(Errc::bad_input, "param dim must be >= 0");
    index[p.id] = static_cast<int>(params.size());
    params.push_back(p);
  }

  std::map<std::pair<int, int>, CaseEntry> table;
  for (const auto& tj : j.at("table")) {
    const std::string id = tj.at("param").get<std::string>();
    auto it = index.find(id);
    if (it == index.end()) throw Error(Errc::unknown_param, "table references unknown param " + id);
    int s = tj.at("s").get<int>();
    if (s < 0 || s >= sys->rank()) throw Error(Errc::bad_input, "table entry has bad generator");
    CaseEntry e;
    e.kind = parse_root_case(tj.at("case").get<std::string>());
    if (tj.contains("targets"))
      for (const auto& t : tj.at("targets")) {
        auto ti = index.find(t.get<std::string>());
        if (ti == index.end())
          throw Error(Errc::unknown_param, "target references unknown param " +
                                               t.get<std::string>());
        e.targets.push_back(ti->second);
      }
    table[{it->second, s}] = e;
  }

  std::optional<std::vector<std::pair<std::string, std::string>>> closure;
  if (j.contains("closure") && !j.at("closure").is_null()) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& cj : j.at("closure"))
      pairs.emplace_back(cj.at(0).get<std::string>(), cj.at(1).get<std::string>());
    closure = pairs;
  }

  return OrbitDatum(sys, theta, wk, std::move(params), std::move(table), std::move(closure));
}

json datum_to_json(const OrbitDatum& datum) {
  json j;
  if (datum.system()->label()) {
    j["coxeter"] = {{"type", *datum.system()->label()}};
  } else {
    std::vector<std::vector<int>> m(datum.system()->rank(),
                                    std::vector<int>(datum.system()->rank()));
    for (int a = 0; a < datum.system()->rank(); ++a)
      for (int b = 0; b < datum.system()->rank(); ++b) m[a][b] = datum.system()->coxeter_m(a, b);
    j["coxeter"] = {{"matrix", m}};
  }
  j["theta"] = datum.theta().perm;
  if (datum.wk()) j["wk"] = datum.wk()->generator_words;

  j["params"] = json::array();
  for (int p = 0; p < datum.param_count(); ++p) {
    const Param& prm = datum.param(p);
    j["params"].push_back({{"id", prm.id},
                           {"orbit", prm.orbit},
                           {"dim", prm.dim},
                           {"local_system", prm.local_system},
                           {"trivial", prm.trivial_ls},
                           {"closed", prm.closed_orbit},
                           {"clean", prm.declared_clean}});
  }
  j["table"] = json::array();
  for (int p = 0; p < datum.param_count(); ++p)
    for (int s = 0; s < datum.system()->rank(); ++s) {
      const CaseEntry* e = datum.entry(p, s);
      if (!e) continue;
      json tj = {{"param", datum.param(p).id}, {"s", s}, {"case", root_case_name(e->kind)}};
      tj["targets"] = json::array();
      for (int t : e->targets) tj["targets"].push_back(datum.param(t).id);
      j["table"].push_back(tj);
    }
  if (datum.closure_pairs()) {
    j["closure"] = json::array();
    for (const auto& [lo, hi] : *datum.closure_pairs()) j["closure"].push_back({lo, hi});
  }
  return j;
}

OrbitDatum load_datum(const std::string& uri) {
  const std::string scheme = "builtin:";
  if (uri.rfind(scheme, 0) == 0) return builtin_datum(uri.substr(scheme.size()));
  std::ifstream in(uri);
  if (!in) throw Error(Errc::bad_input, "cannot open datum file: " + uri);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::bad_input, "bad JSON in " + uri + ": " + e.what());
  }
  return datum_from_json(j);
}

void save_datum(const OrbitDatum& datum, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::bad_input, "cannot write datum file: " + path);
  out << datum_to_json(datum).dump(2) << "\n";
}

json lvvector_to_json(const OrbitDatum& datum, const LVVector& x) {
  json j = json::object();
  for (int p : datum.sorted_params()) {
    LaurentV c = x.coeff(p);
    if (!c.is_zero()) j[datum.param(p).id] = laurent_json(c);
  }
  return j;
}

LVVector lvvector_from_json(const OrbitDatum& datum, const json& j) {
  LVVector out;
  if (j.is_string()) { // a bare param id denotes its basis vector
    out.add(datum.param_index(j.get<std::string>()), LaurentV::one());
    return out;
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    out.add(datum.param_index(it.key()), LaurentV::parse(it.value().get<std::string>()));
  return out;
}

json klv_table_to_json(const OrbitDatum& datum, const KLVTable& table, bool raw_ch) {
  json j;
  j["normalization"] = raw_ch ? "raw-ch" : "hat";
  j["resolved"] = json::array();
  for (int p : datum.sorted_params()) {
    auto it = table.resolved.find(p);
    if (it == table.resolved.end()) continue;
    const ICClass& c = it->second;
    json entry;
    entry["param"] = datum.param(p).id;
    entry["entries"] = json::array();
    LVVector vec = raw_ch ? from_hat(datum, c.hat) : c.hat;
    for (int t : datum.sorted_params()) {
      LaurentV coeff = vec.coeff(t);
      if (coeff.is_zero()) continue;
      json e = {{"param", datum.param(t).id}, {"coeff", coeff.to_string()}};
      if (!raw_ch) e["P"] = klv_polynomial(datum, c, t).to_string();
      entry["entries"].push_back(e);
    }
    j["resolved"].push_back(entry);
  }
  j["unresolved"] = json::array();
  for (const auto& group : table.unresolved) {
    json g;
    g["params"] = json::array();
    for (int p : group.params) g["params"].push_back(datum.param(p).id);
    g["sum"] = lvvector_to_json(datum, raw_ch ? from_hat(datum, group.sum_hat) : group.sum_hat);
    j["unresolved"].push_back(g);
  }
  return j;
}

json blocks_to_json(const OrbitDatum& datum) {
  json j = json::array();
  for (const auto& block : datum.blocks()) {
    json b = json::array();
    for (int p : block) b.push_back(datum.param(p).id);
    j.push_back(b);
  }
  return j;
}

json validation_to_json(const ValidationReport& report) {
  json j;
  j["ok"] = report.ok();
  j["quadratic_checked"] = report.quadratic_checked;
  j["braid_checked"] = report.braid_checked;
  j["violations"] = json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back(
        {{"code", v.code}, {"param", v.param}, {"s", v.s}, {"message", v.message}});
  return j;
}

ResolutionSpec resolution_spec_from_json(const OrbitDatum& datum, const json& j) {
  ResolutionSpec spec;
  if (j.contains("x0")) spec.x0 = j.at("x0").get<std::string>();
  if (j.contains("m_class")) spec.m_class = lvvector_from_json(datum, j.at("m_class"));
  if (j.contains("xs"))
    for (const auto& w : j.at("xs")) spec.xs.push_back(w.get<std::vector<int>>());
  if (j.contains("js"))
    for (const auto& w : j.at("js")) spec.js.push_back(int_set(w));
  if (j.contains("j")) spec.j = int_set(j.at("j"));
  if (j.contains("i")) spec.i = int_set(j.at("i"));
  return spec;
}

RingsSpec rings_spec_from_json(const json& j) {
  RingsSpec spec;
  spec.r_gens = j.at("r_gens").get<std::vector<std::string>>();
  spec.p_gens = j.at("p_gens").get<std::vector<std::string>>();
  spec.simple_roots = j.at("simple_roots").get<std::vector<std::vector<long>>>();
  spec.w_action = j.at("w_action").get<std::vector<std::vector<std::vector<long>>>>();
  spec.phi = j.at("phi").get<std::vector<std::vector<long>>>();
  if (j.contains("wk") && !j.at("wk").is_null()) {
    spec.wk_words = j.at("wk").at("words").get<std::vector<std::vector<int>>>();
    spec.wk_p_action = j.at("wk").at("p_action").get<std::vector<std::vector<std::vector<long>>>>();
  }
  return spec;
}

json rings_spec_to_json(const RingsSpec& spec) {
  json j;
  j["r_gens"] = spec.r_gens;
  j["p_gens"] = spec.p_gens;
  j["simple_roots"] = spec.simple_roots;
  j["w_action"] = spec.w_action;
  j["phi"] = spec.phi;
  if (!spec.wk_words.empty()) j["wk"] = {{"words", spec.wk_words}, {"p_action", spec.wk_p_action}};
  return j;
}

} // namespace klv
