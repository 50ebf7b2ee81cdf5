#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed binary against the shipped corpus. QCOVER_BIN and
// QCOVER_DATA come from the build system.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(QCOVER_TMP) + "/cli_out.txt";
  std::string cmd = std::string(QCOVER_BIN) + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
#ifdef _WIN32
  int code = rc;
#else
  int code = WEXITSTATUS(rc);
#endif
  return {code, ss.str()};
}

std::string data(const std::string& f) { return std::string(QCOVER_DATA) + "/" + f; }

}  // namespace

TEST_CASE("pi0 on the shipped quandle") {
  RunResult r = run("pi0 " + data("qabs.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2 components: {a,b} {s}\n");
}

TEST_CASE("verdict exit codes") {
  CHECK(run("covering " + data("eta_qabs.json")).exit_code == 0);
  CHECK(run("covering " + data("r3_to_t1.json")).exit_code == 1);
  CHECK(run("trivial " + data("eta_qabs.json")).exit_code == 1);
  CHECK(run("normal " + data("eta_qabs.json")).exit_code == 0);
  CHECK(run("covering " + data("missing.json")).exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("covering reports carry the witness") {
  RunResult r = run("covering " + data("r3_to_t1.json") + " --json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"verdict\": false") != std::string::npos);
  CHECK(r.out.find("\"witness\"") != std::string::npos);
  CHECK(r.out.find("\"methods\"") != std::string::npos);
}

TEST_CASE("row-acting ingestion normalizes the six-element table") {
  RunResult r = run("classify " + data("rack6.json") + " --row-acts");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("involutive") != std::string::npos);
  CHECK(r.out.find("quandle") == std::string::npos);

  // the stored orientation is not a rack when read column-wise
  CHECK(run("validate " + data("rack6.json")).exit_code == 1);

  RunResult f = run("frq " + data("rack6.json") + " --row-acts");
  CHECK(f.out.find("{a,a2} {b,b2} {1} {2}") != std::string::npos);
}

TEST_CASE("conjugation racks from group files round-trip as rack files") {
  RunResult r = run("conj " + data("s3.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"elements\"") != std::string::npos);

  std::string out_file = std::string(QCOVER_TMP) + "/conj_s3.json";
  {
    std::ofstream f(out_file);
    f << r.out;
  }
  RunResult v = run("validate " + out_file);
  CHECK(v.exit_code == 0);
  RunResult p = run("pi0 " + out_file);
  CHECK(p.out.rfind("3 components", 0) == 0);
}

TEST_CASE("json reports are byte-stable") {
  RunResult a = run("centralize " + data("rack6_to_t2.json") + " --json");
  RunResult b = run("centralize " + data("rack6_to_t2.json") + " --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"a2\"") != std::string::npos);
  CHECK(a.out.find("\"centralized_order\": 4") != std::string::npos);
}

TEST_CASE("trivial rack generator paths") {
  RunResult r = run("abelianize tn:4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "Z^4\n");
}

TEST_CASE("pullback and component subcommands") {
  RunResult p = run("pullback " + data("eta_qabs.json") + " " + data("eta_qabs.json"));
  CHECK(p.exit_code == 0);
  CHECK(p.out == "pullback of order 5\n");

  RunResult c = run("component " + data("qabs.json") + " a");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("order 2") != std::string::npos);
}

TEST_CASE("word equality subcommand") {
  CHECK(run("word-eq " + data("qabs.json") + " a b").exit_code == 0);
  CHECK(run("word-eq " + data("qabs.json") + " a s").exit_code == 1);
}

TEST_CASE("horn subcommand") {
  RunResult r = run("horn " + data("horn_qabs.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("closes: yes") != std::string::npos);
}

TEST_CASE("dot emission") {
  RunResult r = run("pi0 " + data("qabs.json") + " --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("graph pi0 {") != std::string::npos);
  RunResult s = run("skeleton " + data("qabs.json") + " --dot");
  CHECK(s.out.find("digraph skeleton {") != std::string::npos);
}

TEST_CASE("seed environment override keeps suite reports identical") {
  RunResult a = run("suite --samples 4 --json");
  RunResult b = run("suite --samples 4 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("injected faults fail the suite") {
  RunResult r = run("suite --samples 25 --mutate-table");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("witness") != std::string::npos);
}
