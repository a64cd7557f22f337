#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI binary, capturing stdout+stderr.
RunResult run(const std::string& args) {
  std::string cmd = std::string(GRCAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& rel) {
  return std::string(GRCAT_DATA_DIR) + "/fixtures/" + rel;
}

}  // namespace

TEST_CASE("validate: exit codes follow the contract") {
  CHECK(run("validate " + fixture("groups/c4.json")).exit_code == 0);
  CHECK(run("validate " + fixture("modules/z2_on_z4_negation.json")).exit_code == 0);
  CHECK(run("validate " + fixture("kernels/c4_by_c2.json")).exit_code == 0);

  RunResult bad = run("validate " + fixture("cochains/bad_identity_tuple.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("normalization") != std::string::npos);

  CHECK(run("validate /nonexistent/file.json").exit_code == 1);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("cohomology").exit_code == 2);  // missing required options
}

TEST_CASE("cohomology output") {
  RunResult r = run("cohomology " + fixture("modules/z2_on_z2_trivial.json") +
                    " --degree 2 --method both");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("H^2 = Z/2") != std::string::npos);
  CHECK(r.output.find("methods agree") != std::string::npos);

  RunResult r3 = run("cohomology " + fixture("modules/z2_on_z4_negation.json") +
                     " --degree 3 --method both");
  CHECK(r3.output.find("H^3 = Z/2") != std::string::npos);

  RunResult rj = run("--json cohomology " + fixture("modules/z2_on_z2_trivial.json") +
                     " --degree 2");
  CHECK(rj.exit_code == 0);
  CHECK(rj.output.find("\"invariant_factors\"") != std::string::npos);
}

TEST_CASE("obstruction and classification") {
  RunResult ok = run("obstruction " + fixture("functors/id_z2_z2_xi0.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("obstruction class: 0") != std::string::npos);
  CHECK(ok.output.find("realizable: yes") != std::string::npos);

  RunResult no = run("obstruction " + fixture("functors/obstructed_z2_z2.json"));
  CHECK(no.exit_code == 0);
  CHECK(no.output.find("realizable: no") != std::string::npos);

  RunResult cls = run("classify " + fixture("functors/id_z2_z2_xi0.json"));
  CHECK(cls.output.find("2 congruence class(es)") != std::string::npos);

  RunResult cong = run("congruent " + fixture("functors/id_z2_z2_xi0_g0.json") + " " +
                       fixture("functors/id_z2_z2_xi0_g1.json"));
  CHECK(cong.exit_code == 0);
  CHECK(cong.output.find("not congruent") != std::string::npos);

  RunResult self = run("congruent " + fixture("functors/id_z2_z2_xi0_g0.json") + " " +
                       fixture("functors/id_z2_z2_xi0_g0.json"));
  CHECK(self.output.find("congruent") == 0);

  RunResult autos = run("automorphisms " + fixture("functors/id_z2_z2_xi0_g0.json"));
  CHECK(autos.output.find("2 monoidal automorphism(s)") != std::string::npos);
}

TEST_CASE("reduce, aut-category, strictify, extension") {
  RunResult red = run("reduce " + fixture("groups/c4.json"));
  CHECK(red.exit_code == 0);
  CHECK(red.output.find("center = Z/4") != std::string::npos);

  RunResult ac = run("aut-category " + fixture("groups/c4.json"));
  CHECK(ac.exit_code == 0);
  CHECK(ac.output.find("objects (2)") != std::string::npos);

  RunResult st = run("strictify " + fixture("kernels/c4_by_c2.json"));
  CHECK(st.exit_code == 0);
  CHECK(st.output.find("strictification checks: PASS (3/3)") != std::string::npos);

  RunResult ext = run("extension " + fixture("kernels/c4_by_c2.json"));
  CHECK(ext.exit_code == 0);
  CHECK(ext.output.find("isomorphic to D8") != std::string::npos);
}

TEST_CASE("kernel-search against the generated catalog files") {
  RunResult r = run("kernel-search " + fixture("grtypes/z2_z4neg_xi0.json") + " --catalog " +
                    std::string(GRCAT_DATA_DIR) + "/catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order04_C4") != std::string::npos);
}

TEST_CASE("deterministic output") {
  for (const std::string& cmd :
       {"classify " + fixture("functors/id_z2_z4neg.json"),
        "--json --seed 7 reduce " + fixture("groups/c4.json") + " --randomize",
        "--seed 5 strictify " + fixture("kernels/q8_by_c2.json")}) {
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}
