#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string tool_path() {
  const char* p = std::getenv("KLVTOOL");
  REQUIRE_MESSAGE(p != nullptr, "KLVTOOL env var must point at the CLI binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult res;
  std::string cmd = tool_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

} // namespace

TEST_CASE("check subcommand certifies builtins") {
  RunResult r = run("check builtin:sl2r");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "builtin:sl2r: valid; quadratic OK; braid N/A (rank 1)\n");

  RunResult psl = run("check builtin:psl2r");
  CHECK(psl.exit_code == 0);
  CHECK(psl.out.find("valid; quadratic OK; braid N/A (rank 1)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("check").exit_code == 2);
  CHECK(run("klv builtin:sl2r --no-such-flag").exit_code == 2);
}

TEST_CASE("unknown builtin exits with 1") {
  CHECK(run("check builtin:nope").exit_code == 1);
  CHECK(run("klv /does/not/exist.json").exit_code == 1);
}

TEST_CASE("klv output is byte-identical across runs") {
  RunResult a = run("klv builtin:sl2r");
  RunResult b = run("klv builtin:sl2r");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("param\ttarget_param\tcoefficient\n") == 0);
  CHECK(a.out.find("O_triv\tQ0\tv\n") != std::string::npos);

  RunResult j1 = run("--format json klv builtin:sl2r");
  RunResult j2 = run("--format json klv builtin:sl2r");
  CHECK(j1.out == j2.out);
}

TEST_CASE("json output round-trips through the documented schema") {
  RunResult r = run("--format json klv builtin:sl2r");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["normalization"] == "hat");
  REQUIRE(j["resolved"].is_array());
  bool found = false;
  for (const auto& cls : j["resolved"]) {
    if (cls["param"] != "O_triv") continue;
    for (const auto& entry : cls["entries"])
      if (entry["param"] == "Q0") {
        CHECK(entry["coeff"] == "v");
        CHECK(entry["P"] == "1");
        found = true;
      }
  }
  CHECK(found);

  RunResult blocks = run("--format json blocks builtin:psl2r");
  nlohmann::json bj = nlohmann::json::parse(blocks.out);
  CHECK(bj["label"] == "T_s-components");
  CHECK(bj["blocks"].size() == 1);
}

TEST_CASE("gen complex then klv matches the builtin pipeline") {
  std::string path = "/tmp/klvtool_test_a2.json";
  RunResult gen = run("gen complex --type A2 -o " + path);
  CHECK(gen.exit_code == 0);
  RunResult check = run("check " + path);
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("braid OK") != std::string::npos);
  RunResult klv = run("klv " + path);
  CHECK(klv.exit_code == 0);
  // the longest element's column carries v^{l(w0)} = v^3 at e
  CHECK(klv.out.find("0.1.0\te\tv^3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("tsact applies golden formulas") {
  RunResult r = run("tsact builtin:sl2r --elem Q0 --word 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "param\tcoefficient\nQinf\t1\nO_triv\t1\n");

  RunResult twice = run("tsact builtin:sl2r --elem O_sgn --word 0 0");
  // T_s^2 on the nonparity parameter: (q-1)(-1) + q = 1
  CHECK(twice.out == "param\tcoefficient\nO_sgn\t1\n");
}

TEST_CASE("fibers subcommand accepts inline specs") {
  RunResult r = run("fibers builtin:sl2r --spec '{\"x0\":\"Q0\",\"xs\":[[0]],\"js\":[[]]}'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "orbit\tpoincare\nQ0\t1\nQinf\t1\nO\t1\n");

  RunResult bad = run("fibers builtin:sl2r --spec '{\"x0\":\"Q0\",\"xs\":[[0]],\"js\":[[0]]}'");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("bimod verify and poincare subcommands") {
  RunResult r = run("bimod verify --rings builtin:a1xa1diag --degree 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("NO") == std::string::npos);

  RunResult p = run("poincare --degrees-k 1 --degrees-g 2 --n-t 1 --truncate 6");
  CHECK(p.exit_code == 0);
  CHECK(p.out == "degree\tcoefficient\n0\t1\n1\t0\n2\t2\n3\t0\n4\t2\n5\t0\n6\t2\n");
}

TEST_CASE("klv --seeds and --raw-ch flags") {
  // re-seeding an existing seed is a no-op
  RunResult base = run("klv builtin:sl2r");
  RunResult seeded = run("klv builtin:sl2r --seeds Q0");
  CHECK(seeded.exit_code == 0);
  CHECK(seeded.out == base.out);

  RunResult raw = run("klv builtin:sl2r --raw-ch");
  CHECK(raw.exit_code == 0);
  // the open-orbit class carries the extra v^{dim} factor in raw coordinates
  CHECK(raw.out.find("O_triv\tO_triv\tv\n") != std::string::npos);

  // a false cleanness assertion is a computation failure
  CHECK(run("klv builtin:psl2r --seeds O_triv").exit_code == 1);
}

TEST_CASE("check --jobs parallelizes across files deterministically") {
  RunResult serial = run("check builtin:sl2r builtin:psl2r builtin:sl2c");
  RunResult parallel = run("check --jobs 3 builtin:sl2r builtin:psl2r builtin:sl2c");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
}
