// Command-line front end: datum validation and certification, block reports,
// KLV tables, T_s-word actions, fiber Poincare polynomials, bimodule
// verifications, datum generation. Data goes to stdout, diagnostics to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "klv/error.hpp"
#include "klv/json_io.hpp"

using namespace klv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "tsv";
  bool json() const { return format == "json"; }
};

OrbitDatum load_validated(const std::string& uri) {
  OrbitDatum datum = load_datum(uri);
  ValidationReport report = datum.validate();
  if (!report.ok())
    throw Error(Errc::bad_input, uri + ": " + report.to_string());
  return datum;
}

int run_check(const std::vector<std::string>& inputs, const Options& opt, int jobs) {
  auto one = [](const std::string& uri) {
    OrbitDatum datum = load_datum(uri);
    return datum.validate();
  };
  std::vector<ValidationReport> reports(inputs.size());
  if (jobs > 1 && inputs.size() > 1) {
    std::vector<std::future<ValidationReport>> futures;
    for (const auto& uri : inputs)
      futures.push_back(std::async(std::launch::async, one, uri));
    for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < inputs.size(); ++i) reports[i] = one(inputs[i]);
  }
  bool all_ok = true;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (opt.json()) {
      json j = validation_to_json(reports[i]);
      j["input"] = inputs[i];
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << inputs[i] << ": " << reports[i].to_string() << "\n";
    }
    if (!reports[i].ok()) all_ok = false;
  }
  return all_ok ? kExitOk : kExitInvalid;
}

int run_blocks(const std::string& input, const Options& opt) {
  OrbitDatum datum = load_validated(input);
  if (opt.json()) {
    json j;
    j["label"] = "T_s-components";
    j["blocks"] = blocks_to_json(datum);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "block\tparam\n";
  auto blocks = datum.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int p : blocks[b]) std::cout << b << "\t" << datum.param(p).id << "\n";
  return kExitOk;
}

int run_klv(const std::string& input, const std::vector<std::string>& seeds, bool raw_ch,
            std::optional<int> cap, const Options& opt) {
  OrbitDatum datum = load_validated(input);
  std::vector<int> extra;
  for (const auto& id : seeds) extra.push_back(datum.param_index(id));
  KLVTable table = compute_klv(datum, extra, cap);
  if (opt.json()) {
    std::cout << klv_table_to_json(datum, table, raw_ch).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "param\ttarget_param\tcoefficient\n";
  for (int p : datum.sorted_params()) {
    auto it = table.resolved.find(p);
    if (it == table.resolved.end()) continue;
    LVVector vec = raw_ch ? from_hat(datum, it->second.hat) : it->second.hat;
    for (int t : datum.sorted_params()) {
      LaurentV c = vec.coeff(t);
      if (!c.is_zero())
        std::cout << datum.param(p).id << "\t" << datum.param(t).id << "\t" << c.to_string()
                  << "\n";
    }
  }
  for (const auto& group : table.unresolved) {
    std::string name = "group:";
    for (std::size_t i = 0; i < group.params.size(); ++i) {
      if (i) name += "+";
      name += datum.param(group.params[i]).id;
    }
    LVVector vec = raw_ch ? from_hat(datum, group.sum_hat) : group.sum_hat;
    for (int t : datum.sorted_params()) {
      LaurentV c = vec.coeff(t);
      if (!c.is_zero())
        std::cout << name << "\t" << datum.param(t).id << "\t" << c.to_string() << "\n";
    }
  }
  return kExitOk;
}

int run_tsact(const std::string& input, const std::string& elem,
              const std::vector<int>& word, const Options& opt) {
  OrbitDatum datum = load_validated(input);
  LVVector x;
  if (!elem.empty() && elem.front() == '{') {
    x = lvvector_from_json(datum, json::parse(elem));
  } else {
    x = datum.basis(elem);
  }
  LVVector result = datum.apply_Tw(x, word);
  if (opt.json()) {
    std::cout << lvvector_to_json(datum, result).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "param\tcoefficient\n";
  for (int p : datum.sorted_params()) {
    LaurentV c = result.coeff(p);
    if (!c.is_zero()) std::cout << datum.param(p).id << "\t" << c.to_string() << "\n";
  }
  return kExitOk;
}

int run_fibers(const std::string& input, const std::string& spec_arg, const Options& opt) {
  OrbitDatum datum = load_validated(input);
  json spec_json;
  if (!spec_arg.empty() && spec_arg.front() == '{') {
    spec_json = json::parse(spec_arg);
  } else {
    std::ifstream in(spec_arg);
    if (!in) throw Error(Errc::bad_input, "cannot open spec file: " + spec_arg);
    in >> spec_json;
  }
  ResolutionSpec spec = resolution_spec_from_json(datum, spec_json);
  auto rows = fiber_table(datum, spec);
  if (opt.json()) {
    json j = json::array();
    for (const auto& [orbit, poly] : rows)
      j.push_back({{"orbit", orbit}, {"poincare", poly.to_string()}});
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "orbit\tpoincare\n";
  for (const auto& [orbit, poly] : rows)
    std::cout << orbit << "\t" << poly.to_string() << "\n";
  return kExitOk;
}

int run_gen_complex(const std::string& type, const std::string& out_path) {
  OrbitDatum datum = gen_complex(type);
  if (out_path.empty()) {
    std::cout << datum_to_json(datum).dump(2) << "\n";
  } else {
    save_datum(datum, out_path);
    std::cerr << "wrote " << out_path << " (" << datum.param_count() << " params)\n";
  }
  return kExitOk;
}

RingsSpec load_rings(const std::string& arg) {
  if (arg == "builtin:rank1") return rank1_rings();
  if (arg == "builtin:a1xa1diag") return a1xa1_diagonal_rings();
  json j;
  if (!arg.empty() && arg.front() == '{') {
    j = json::parse(arg);
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(Errc::bad_input, "cannot open rings file: " + arg);
    in >> j;
  }
  return rings_spec_from_json(j);
}

int run_bimod_verify(const std::string& rings_arg, int degree, const Options& opt) {
  auto rings = BimodRings::make(load_rings(rings_arg));
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok, const std::string& witness) {
    checks.push_back({{"check", name}, {"ok", ok}, {"witness", witness}});
    if (!ok) all_ok = false;
  };

  for (int s = 0; s < rings->rank_s(); ++s) {
    BsSquaredReport bsq = decompose_Bs_squared(rings, s, degree);
    record("decompose_Bs_squared[s=" + std::to_string(s) + "]", bsq.ok && bsq.shift_match,
           bsq.witness);
    BimodTower p_id(rings, {});
    BimodTower p_s(rings, {s});
    BimodReport t1 = tensor_Bs_check(p_id, s, degree);
    record("tensor_Bs_char[P_id,s=" + std::to_string(s) + "]", t1.ok, t1.witness);
    BimodReport t2 = tensor_Bs_check(p_s, s, degree);
    record("tensor_Bs_char[P_s,s=" + std::to_string(s) + "]", t2.ok, t2.witness);
  }
  for (std::size_t k = 0; k < rings->spec().wk_words.size(); ++k) {
    BimodReport iso = std_iso_check(*rings, {static_cast<int>(k)}, {}, degree);
    record("std_iso[wk=" + std::to_string(k) + ",x=e]", iso.ok, iso.witness);
    for (int s = 0; s < rings->rank_s(); ++s) {
      BimodReport iso_s = std_iso_check(*rings, {static_cast<int>(k)}, {s}, degree);
      record("std_iso[wk=" + std::to_string(k) + ",x=s" + std::to_string(s) + "]", iso_s.ok,
             iso_s.witness);
    }
  }

  if (opt.json()) {
    json j;
    j["config"] = {{"degree_bound", degree},
                   {"grading_shift", "M(n)^i = M^{n+i}"},
                   {"grchar", "grchar(M(1)) = v^-1 grchar(M)"}};
    j["ok"] = all_ok;
    j["checks"] = checks;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "check\tok\twitness\n";
    for (const auto& c : checks)
      std::cout << c["check"].get<std::string>() << "\t"
                << (c["ok"].get<bool>() ? "yes" : "NO") << "\t"
                << c["witness"].get<std::string>() << "\n";
  }
  return all_ok ? kExitOk : kExitInvalid;
}

int run_poincare(const std::vector<int>& dk, const std::vector<int>& dg, int n_t, int bound,
                 const Options& opt) {
  auto series = equivariant_poincare(dk, dg, n_t, bound);
  if (opt.json()) {
    json j;
    j["truncation"] = bound;
    j["series"] = json::array();
    for (const auto& c : series) j["series"].push_back(c.get_str());
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "degree\tcoefficient\n";
  for (std::size_t i = 0; i < series.size(); ++i)
    std::cout << i << "\t" << series[i].get_str() << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for Hecke-algebra modules on K-orbit data:\n"
               "validation, blocks, canonical bases, fiber polynomials and\n"
               "bimodule character checks."};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  // check
  auto* check = app.add_subcommand("check", "Validate a datum and certify the Hecke relations");
  std::vector<std::string> check_inputs;
  int jobs = 1;
  check->add_option("datum", check_inputs, "Datum files or builtin:<name>")->required();
  check->add_option("--jobs", jobs, "Parallelize across independent data files");

  // blocks
  auto* blocks = app.add_subcommand("blocks", "Report the T_s-component partition");
  std::string blocks_input;
  blocks->add_option("datum", blocks_input)->required();

  // klv
  auto* klv_cmd = app.add_subcommand("klv", "Compute the canonical basis of the trivial block");
  std::string klv_input;
  std::vector<std::string> klv_seeds;
  bool raw_ch = false;
  int klv_cap = -1;
  klv_cmd->add_option("datum", klv_input)->required();
  klv_cmd->add_option("--seeds", klv_seeds, "Extra seed params (their own classes)");
  klv_cmd->add_flag("--raw-ch", raw_ch, "Report raw ch-coordinates instead of the hat basis");
  klv_cmd->add_option("--cap", klv_cap, "Fixpoint round cap override");

  // tsact
  auto* tsact = app.add_subcommand("tsact", "Apply a word of T_s operators to a vector");
  std::string tsact_input, tsact_elem;
  std::vector<int> tsact_word;
  tsact->add_option("datum", tsact_input)->required();
  tsact->add_option("--elem", tsact_elem, "Param id or JSON map {id: laurent}")->required();
  tsact->add_option("--word", tsact_word, "Generator indices, applied left to right");

  // fibers
  auto* fibers = app.add_subcommand("fibers", "Fiber Poincare polynomials of a resolution");
  std::string fibers_input, fibers_spec;
  fibers->add_option("datum", fibers_input)->required();
  fibers->add_option("--spec", fibers_spec, "ResolutionSpec JSON (inline or a file path)")
      ->required();

  // gen complex
  auto* gen = app.add_subcommand("gen", "Generate data");
  auto* gen_cx = gen->add_subcommand("complex", "Complex-group datum for a Weyl type");
  std::string gen_type, gen_out;
  gen_cx->add_option("--type", gen_type, "Cartan type, e.g. A2")->required();
  gen_cx->add_option("-o,--output", gen_out, "Output path (stdout when omitted)");
  gen->require_subcommand(1);

  // bimod verify
  auto* bimod = app.add_subcommand("bimod", "Bimodule-side verifications");
  auto* verify = bimod->add_subcommand("verify", "Run the character/splitting checks");
  std::string rings_arg;
  int degree = 8;
  verify->add_option("--rings", rings_arg, "Rings JSON, file path, or builtin:{rank1,a1xa1diag}")
      ->required();
  verify->add_option("--degree", degree, "Degree bound N");
  bimod->require_subcommand(1);

  // poincare
  auto* poincare = app.add_subcommand("poincare", "Equivariant Poincare series");
  std::vector<int> deg_k, deg_g;
  int n_t = 0, bound = 20;
  poincare->add_option("--degrees-k", deg_k, "Fundamental invariant degrees of W_K");
  poincare->add_option("--degrees-g", deg_g, "Fundamental invariant degrees of W");
  poincare->add_option("--n-t", n_t, "Number of R generators")->required();
  poincare->add_option("--truncate", bound, "Truncation degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(check_inputs, opt, jobs);
    if (*blocks) return run_blocks(blocks_input, opt);
    if (*klv_cmd)
      return run_klv(klv_input, klv_seeds, raw_ch,
                     klv_cap > 0 ? std::optional<int>(klv_cap) : std::nullopt, opt);
    if (*tsact) return run_tsact(tsact_input, tsact_elem, tsact_word, opt);
    if (*fibers) return run_fibers(fibers_input, fibers_spec, opt);
    if (*gen_cx) return run_gen_complex(gen_type, gen_out);
    if (*verify) return run_bimod_verify(rings_arg, degree, opt);
    if (*poincare) return run_poincare(deg_k, deg_g, n_t, bound, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  std::cerr << "error: no subcommand selected\n";
  return kExitUsage;
}
