#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "gpd/dsl.hpp"
#include "gpd/semantics.hpp"

// Spawns the real binary against the shipped fixture files.

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(GGD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(GGD_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("validate banal_z2 passes with the interchange count") {
  CliResult r = run_cli("validate " + fixture("banal_z2.ggd"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("groupgroupoid BanalZ2: valid (interchange: 16/16 "
                        "quadruples)") != std::string::npos);
  REQUIRE(r.output.find("group Z2: valid") != std::string::npos);
}

TEST_CASE("roundtrip a4 passes both directions") {
  CliResult r = run_cli("roundtrip " + fixture("a4.ggd"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("Φ∘Γ = id") != std::string::npos);
  REQUIRE(r.output.find("Γ∘Φ ≅ id via T′") !=
          std::string::npos);
  REQUIRE(r.output.find("invalid") == std::string::npos);
}

TEST_CASE("check-covering rejects omega_mod2 with the star witness") {
  CliResult r = run_cli("check-covering omega_mod2 " + fixture("omega.ggd"));
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.output.find("star(0): 4 arrows over 2") != std::string::npos);
}

TEST_CASE("exit 2 on usage problems") {
  REQUIRE(run_cli("frobnicate x.ggd").exit_code == 2);
  REQUIRE(run_cli("validate /nonexistent/file.ggd").exit_code == 2);
  REQUIRE(run_cli("validate").exit_code == 2);
}

TEST_CASE("exit 2 on parse failures") {
  std::string bad = "/tmp/ggd_bad_fixture.ggd";
  FILE* f = fopen(bad.c_str(), "w");
  REQUIRE(f);
  fputs("group G { elements: a, a; identity: a; table: a+a=a; }", f);
  fclose(f);
  REQUIRE(run_cli("validate " + bad).exit_code == 2);
}

TEST_CASE("json output is schema-valid and fact-equivalent") {
  for (const std::string& invocation :
       {"validate " + fixture("banal_z2.ggd"),
        "roundtrip " + fixture("a4.ggd"),
        "check-covering omega_mod2 " + fixture("omega.ggd")}) {
    INFO(invocation);
    CliResult text = run_cli(invocation);
    CliResult machine = run_cli(invocation + " --json");
    REQUIRE(machine.exit_code == text.exit_code);

    auto parsed = nlohmann::json::parse(machine.output);
    REQUIRE(parsed.is_object());
    REQUIRE(parsed["exit"].is_number_integer());
    REQUIRE(parsed["exit"].get<int>() == machine.exit_code);
    REQUIRE(parsed["checks"].is_array());
    for (const auto& check : parsed["checks"]) {
      REQUIRE(check["name"].is_string());
      REQUIRE((check["status"] == "pass" || check["status"] == "fail"));
      REQUIRE(check["witnesses"].is_array());
      for (const auto& w : check["witnesses"]) REQUIRE(w.is_string());

      // Same facts in both renderings.
      std::string name = check["name"].get<std::string>();
      std::string expected =
          name + ": " + (check["status"] == "pass" ? "valid" : "invalid");
      REQUIRE(text.output.find(expected) != std::string::npos);
    }
  }
}

TEST_CASE("constructive subcommands emit parseable canonical DSL") {
  auto roundtrips = [](const std::string& text) {
    auto parsed = gpd::dsl::parse(text);
    REQUIRE(parsed.ok());
    REQUIRE(gpd::dsl::serialize(*parsed.document) == text);
    REQUIRE(gpd::elaborate(*parsed.document).ok());
  };

  CliResult r = run_cli("banal Z2 " + fixture("banal_z2.ggd"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("groupgroupoid BanalZ2 {") != std::string::npos);
  roundtrips(r.output);

  CliResult gamma = run_cli("gamma A4 " + fixture("a4.ggd"));
  REQUIRE(gamma.exit_code == 0);
  REQUIRE(gamma.output.find("morphism A4_gamma : A4_gpd -> BanalZ2 {") !=
          std::string::npos);
  roundtrips(gamma.output);

  CliResult ce = run_cli("ce BanalZ2 " + fixture("banal_z2.ggd"));
  REQUIRE(ce.exit_code == 0);
  REQUIRE(ce.output.find("groupgroupoid BanalZ2_ce {") != std::string::npos);
  roundtrips(ce.output);

  CliResult ag = run_cli("action-groupoid A4 " + fixture("a4.ggd"));
  REQUIRE(ag.exit_code == 0);
  REQUIRE(ag.output.find("groupgroupoid A4_gpd {") != std::string::npos);
  roundtrips(ag.output);

  // phi consumes the covering that gamma just printed.
  FILE* f = fopen("/tmp/ggd_gamma_out.ggd", "w");
  REQUIRE(f);
  fputs(gamma.output.c_str(), f);
  fclose(f);
  CliResult phi = run_cli("phi A4_gamma /tmp/ggd_gamma_out.ggd");
  REQUIRE(phi.exit_code == 0);
  REQUIRE(phi.output.find("action A4_gamma_phi {") != std::string::npos);
  roundtrips(phi.output);
}

TEST_CASE("gamma output stays well-formed when group names coincide") {
  // A unit action: the acted-on group IS the base's object group, so
  // the emitted document must not declare Z2 twice.
  std::ifstream in(fixture("banal_z2.ggd"), std::ios::binary);
  REQUIRE(in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  text +=
      "action UnitZ2 {\n  groupoid: BanalZ2;\n  group: Z2;\n"
      "  anchor:\n    0 -> 0;\n    1 -> 1;\n  act:\n"
      "    (0_0, 0) = 0;\n    (0_1, 1) = 0;\n"
      "    (1_0, 0) = 1;\n    (1_1, 1) = 1;\n}\n";
  std::string path = "/tmp/ggd_unit_action.ggd";
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();

  CliResult check = run_cli("check-action UnitZ2 " + path);
  REQUIRE(check.exit_code == 0);

  CliResult gamma = run_cli("gamma UnitZ2 " + path);
  REQUIRE(gamma.exit_code == 0);
  auto parsed = gpd::dsl::parse(gamma.output);
  REQUIRE(parsed.ok());
  REQUIRE(gpd::elaborate(*parsed.document).ok());
}

TEST_CASE("reports are byte-identical across runs") {
  std::string invocation = "validate " + fixture("a4.ggd");
  CliResult a = run_cli(invocation);
  CliResult b = run_cli(invocation);
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.output == b.output);
}

TEST_CASE("components and vertex-group report lines") {
  CliResult c = run_cli("components BanalZ2 " + fixture("banal_z2.ggd"));
  REQUIRE(c.exit_code == 0);
  REQUIRE(c.output.find("components BanalZ2: valid ({0, 1})") !=
          std::string::npos);

  CliResult v = run_cli("vertex-group BanalZ2 0 " + fixture("banal_z2.ggd"));
  REQUIRE(v.exit_code == 0);
  REQUIRE(v.output.find("vertex-group BanalZ2 at 0: valid (order 1)") !=
          std::string::npos);
}

TEST_CASE("check-action validates the A4 fixture") {
  CliResult r = run_cli("check-action A4 " + fixture("a4.ggd"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("action A4: valid (action table: 8 pairs)") !=
          std::string::npos);
}

TEST_CASE("phi of a non-covering fails with exit 1") {
  CliResult r = run_cli("phi omega_mod2 " + fixture("omega.ggd"));
  REQUIRE(r.exit_code == 1);
}
