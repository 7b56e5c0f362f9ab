// Drives the installed-style binary end to end: exit codes, line formats,
// and determinism. Linux-specific (popen / WEXITSTATUS).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MINOROBS_CLI_PATH
#error "MINOROBS_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string command = std::string(MINOROBS_CLI_PATH) + " " + args;
  std::string input_file;
  if (!stdin_text.empty()) {
    input_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                   : "/tmp") +
                 "/minorobs_cli_stdin.txt";
    std::ofstream out(input_file);
    out << stdin_text;
    out.close();
    command += " < " + input_file;
  } else {
    command += " < /dev/null";
  }
  command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("check verdicts and exit codes") {
  RunResult member = run("check --class apex-pseudoforest --input -", "C~\n");
  CHECK(member.exit_code == 0);
  CHECK(member.output == "C~ MEMBER\n");

  RunResult with_witness =
      run("check --class apex-pseudoforest --witness --input -", "C~\n");
  CHECK(with_witness.output == "C~ MEMBER apex=0\n");

  RunResult non_member =
      run("check --class apex-pseudoforest --input -", "EFz_\n");
  CHECK(non_member.exit_code == 1);
  CHECK(non_member.output == "EFz_ NONMEMBER\n");

  RunResult empty = run("check --class pseudoforest --input -", "");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.empty());

  RunResult edge_list =
      run("check --class pseudoforest --input -", "n 3\n0 1\n1 2\n0 2\n");
  CHECK(edge_list.exit_code == 0);
  CHECK(edge_list.output == "Bw MEMBER\n");

  RunResult garbage = run("check --class pseudoforest --input -", "\x01\x02\n");
  CHECK(garbage.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("check --class no-such-class --input -").exit_code == 2);
  CHECK(run("minor --host C~").exit_code == 2);  // missing --pattern
  CHECK(run("check --class pseudoforest --no-such-flag").exit_code == 2);
}

TEST_CASE("minor subcommand") {
  RunResult found = run("minor --host D~{ --pattern C~ --witness");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("FOUND\n") == 0);
  CHECK(found.output.find("branch 0:") != std::string::npos);

  RunResult not_found = run("minor --host DXw --pattern C~");
  CHECK(not_found.exit_code == 1);
  CHECK(not_found.output == "NOT-FOUND\n");

  RunResult by_name = run("minor --host D~{ --pattern O3_3");
  CHECK(by_name.exit_code == 0);

  RunResult topological =
      run("minor --host E~~w --pattern O3_2 --topological --witness");
  CHECK(topological.exit_code == 0);
  CHECK(topological.output.find("path") != std::string::npos);

  CHECK(run("minor --host ZZZ --pattern C~").exit_code == 2);
}

TEST_CASE("catalog export") {
  RunResult g6 = run("catalog export --format g6");
  CHECK(g6.exit_code == 0);
  CHECK(count_lines(g6.output) == 33);

  RunResult dot = run("catalog export --format dot");
  CHECK(dot.output.find("graph O3_2 {") != std::string::npos);
}

TEST_CASE("search-obstructions prints graph6 lines") {
  RunResult obs = run("search-obstructions --class pseudoforest --max-n 5");
  CHECK(obs.exit_code == 0);
  CHECK(count_lines(obs.output) == 2);

  RunResult again = run("search-obstructions --class pseudoforest --max-n 5");
  CHECK(again.output == obs.output);  // deterministic bytes

  RunResult jobs2 =
      run("search-obstructions --class pseudoforest --max-n 5 --jobs 2");
  CHECK(jobs2.output == obs.output);
}

TEST_CASE("decompose emits parseable JSON") {
  RunResult blocks = run("decompose --mode blocks --input -", "C~\n");
  CHECK(blocks.exit_code == 0);
  nlohmann::json parsed = nlohmann::json::parse(blocks.output);
  CHECK(parsed["cut_vertices"].empty());
  CHECK(parsed["blocks"].size() == 1);

  RunResult tri = run("decompose --mode triconnected --input -", "DhC\n");
  nlohmann::json tri_json = nlohmann::json::parse(tri.output);
  CHECK(tri_json["members"].size() >= 1);
  CHECK(tri_json["trace"].contains("children"));

  RunResult wheel = run("decompose --mode wheel-certificate --input -",
                        "D~{\n");
  CHECK(wheel.exit_code == 0);
  nlohmann::json wheel_json = nlohmann::json::parse(wheel.output);
  CHECK(wheel_json["certificate"]["base_r"] == 4);
  CHECK(wheel_json["certificate"]["steps"].size() == 2);

  RunResult no_cert = run("decompose --mode wheel-certificate --input -",
                          "DXw\n");
  CHECK(no_cert.exit_code == 1);
  CHECK(nlohmann::json::parse(no_cert.output)["certificate"].is_null());
}

TEST_CASE("convert between formats") {
  RunResult to_edges = run("convert --from g6 --to edges --input -", "C~\n");
  CHECK(to_edges.output ==
        "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");

  RunResult back = run("convert --from edges --to g6 --input -",
                       to_edges.output);
  CHECK(back.output == "C~\n");

  RunResult dot = run("convert --from g6 --to dot --input -", "Bw\n");
  CHECK(dot.output.find("graph g0 {") == 0);
}

TEST_CASE("verify-catalog reports and exits by verdict") {
  RunResult ok = run("verify-catalog --fuzz 50 --jobs 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("CHECK entry-count PASS") != std::string::npos);
  CHECK(ok.output.find("all checks passed") != std::string::npos);

  RunResult swept = run("verify-catalog --equivalence-n 5 --fuzz 0");
  CHECK(swept.exit_code == 0);
  CHECK(swept.output.find("CHECK equivalence-n5 PASS") != std::string::npos);

  RunResult external =
      run("verify-catalog --fuzz 0 --graphs -", "C~\nDhc\nBw\n");
  CHECK(external.exit_code == 0);
  CHECK(external.output.find("CHECK equivalence-external PASS") !=
        std::string::npos);
}
