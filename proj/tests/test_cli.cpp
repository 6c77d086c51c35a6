#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "condensed/io.hpp"

using namespace condensed;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(CONDENSED_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

int run_capture(const std::string& args, std::string& stdout_text) {
  std::string out_file = "cli_stdout.tmp";
  std::string cmd =
      std::string(CONDENSED_CLI_PATH) + " " + args + " > " + out_file + " 2> /dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  stdout_text = buf.str();
  return WEXITSTATUS(status);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

void write_presheaf(const std::string& path, const Presheaf& f) {
  write_file(path, serialize_presheaf(f).dump(2) + "\n");
}

}  // namespace

TEST_CASE("check exits 0 on a sheaf and 1 on a times failure") {
  SitePtr site = Site::make(2, 1);
  write_presheaf("cli_rep.json", representable(site, 2));
  CHECK(run("check --input cli_rep.json") == 0);

  write_presheaf("cli_const.json", constant_presheaf(site, FinSet::of({"a", "b"})));
  CHECK(run("check --input cli_const.json") == 1);
}

TEST_CASE("malformed input exits 3 and unlawful input exits 4") {
  write_file("cli_bad.json", "this is not json\n");
  CHECK(run("check --input cli_bad.json") == 3);
  CHECK(run("check --input cli_missing_file.json") == 3);

  SitePtr site = Site::make(4, 2);
  write_presheaf("cli_phantom.json", with_phantom(representable(site, 2), 0));
  CHECK(run("check --input cli_phantom.json") == 4);
}

TEST_CASE("ultrafilters counts points and respects its bound") {
  std::string out;
  CHECK(run_capture("ultrafilters --size 3", out) == 0);
  CHECK(out.find("\"count\": 3") != std::string::npos);
  CHECK(out.find("\"all_principal\": true") != std::string::npos);
  CHECK(run("ultrafilters --size 6") == 2);
}

TEST_CASE("resolve reports the coequalizer verdict") {
  std::string out;
  CHECK(run_capture("resolve --size 3", out) == 0);
  CHECK(out.find("\"coequalizer_recovers_x\": true") != std::string::npos);
}

TEST_CASE("sheafify reports oracle agreement") {
  SitePtr site = Site::make(4, 2);
  write_presheaf("cli_const42.json", constant_presheaf(site, FinSet::of({"a", "b"})));
  std::string out;
  CHECK(run_capture("sheafify --input cli_const42.json --sheaf-output cli_sheaf.json", out) == 0);
  CHECK(out.find("\"oracle_agreement\": true") != std::string::npos);
  CHECK(run("check --input cli_sheaf.json") == 0);
}

TEST_CASE("verify validates suite names and runs suites") {
  CHECK(run("verify --suite no-such-suite") == 64);
  CHECK(run("nonsense-subcommand") == 64);
  CHECK(run("verify --suite lemma-6") == 0);
  CHECK(run("verify --suite lemma-1") == 0);
}

TEST_CASE("verify reports are byte-identical across runs") {
  std::string first, second;
  CHECK(run_capture("verify --suite key-lemma --seed 7 --cases 20", first) == 0);
  CHECK(run_capture("verify --suite key-lemma --seed 7 --cases 20", second) == 0);
  CHECK(first == second);
  CHECK_FALSE(first.empty());
}
