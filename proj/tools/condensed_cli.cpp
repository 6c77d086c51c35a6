// Batch front door: enumerate ultrafilters, compute resolutions, check the
// condensed-set axioms on presheaf files, sheafify, and run the named
// verification suites. Reports are deterministic for a fixed (input, seed,
// version); timing goes to stderr only.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "condensed/io.hpp"
#include "condensed/suites.hpp"

using condensed::Error;
using condensed::ErrorCode;
using nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kBounds = 2;
constexpr int kParse = 3;
constexpr int kFunctorLaw = 4;
constexpr int kUsage = 64;

int code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SizeBoundExceeded:
    case ErrorCode::BoundViolation:
      return kBounds;
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::FunctorLawViolation:
      return kFunctorLaw;
    default:
      return kCheckFailure;
  }
}

void emit(const ordered_json& report, const std::string& output_path) {
  std::string bytes = report.dump(2) + "\n";
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    out << bytes;
  }
  std::cout << bytes;
}

ordered_json check_report_json(const condensed::CheckReport& r) {
  return {{"passed", r.passed}, {"witnesses", r.witnesses}, {"notes", r.notes}};
}

condensed::Presheaf load_presheaf(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return condensed::parse_presheaf(doc);
}

std::vector<std::vector<std::size_t>> map_tables(const std::vector<condensed::FinMap>& ms) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& m : ms) out.push_back(m.table());
  return out;
}

int cmd_ultrafilters(std::size_t size, const std::string& output) {
  condensed::BetaSet b = condensed::beta(condensed::FinSet::canonical(size));
  bool all_principal = true;
  for (const auto& u : b.points) {
    all_principal = all_principal && u.principal_point().has_value();
  }
  ordered_json report{{"command", "ultrafilters"},
                      {"version", condensed::kVersion},
                      {"size", size},
                      {"count", b.points.size()},
                      {"all_principal", all_principal},
                      {"points", b.carrier.elems()}};
  emit(report, output);
  return all_principal && b.points.size() == size ? kPass : kCheckFailure;
}

int cmd_resolve(std::size_t size, const std::string& output) {
  condensed::Resolution r = condensed::standard_resolution(condensed::FinSet::canonical(size));
  bool verdict = true;
  try {
    condensed::verify_coequalizer(r);
  } catch (const Error&) {
    verdict = false;
  }
  ordered_json report{{"command", "resolve"},
                      {"version", condensed::kVersion},
                      {"size", size},
                      {"x", r.x.elems()},
                      {"b", r.b.carrier.elems()},
                      {"btilde", r.btilde.elems()},
                      {"b2", r.b2.carrier.elems()},
                      {"pi1", r.pi1.table()},
                      {"pi2", r.pi2.table()},
                      {"xi", r.xi_map.table()},
                      {"coequalizer_recovers_x", verdict}};
  emit(report, output);
  return verdict ? kPass : kCheckFailure;
}

int cmd_check(const std::string& input, const std::string& output) {
  condensed::Presheaf f = load_presheaf(input);
  condensed::CheckReport times = condensed::check_times(f);
  condensed::CheckReport star = condensed::check_star(f);
  ordered_json report{{"command", "check"},
                      {"version", condensed::kVersion},
                      {"input", input},
                      {"times", check_report_json(times)},
                      {"star", check_report_json(star)}};
  emit(report, output);
  return times.passed && star.passed ? kPass : kCheckFailure;
}

int cmd_sheafify(const std::string& input, const std::string& output_presheaf,
                 const std::string& output) {
  condensed::Presheaf f = load_presheaf(input);
  condensed::SharpResult s = condensed::sharp(f);
  if (!output_presheaf.empty()) {
    std::ofstream out(output_presheaf, std::ios::binary);
    out << condensed::serialize_presheaf(s.sheaf).dump(2) << "\n";
  }
  condensed::CheckReport times = condensed::check_times(s.sheaf);
  condensed::CheckReport star = condensed::check_star(s.sheaf);
  bool agrees = s.comparison.is_iso(s.sheaf);
  ordered_json report{{"command", "sheafify"},
                      {"version", condensed::kVersion},
                      {"input", input},
                      {"oracle_agreement", agrees},
                      {"times", check_report_json(times)},
                      {"star", check_report_json(star)}};
  emit(report, output);
  return agrees && times.passed && star.passed ? kPass : kCheckFailure;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t cases,
               const std::string& output) {
  std::vector<condensed::SuiteResult> results;
  if (suite == "all") {
    results = condensed::run_all(seed, cases);
  } else {
    results.push_back(condensed::run_suite(suite, seed, cases));
  }
  bool passed = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    suites.push_back({{"name", r.name}, {"passed", r.passed}, {"details", r.details}});
  }
  ordered_json report{{"command", "verify"},
                      {"version", condensed::kVersion},
                      {"suite", suite},
                      {"seed", seed},
                      {"passed", passed},
                      {"suites", suites}};
  emit(report, output);
  return passed ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale condensed-set toolkit"};
  app.require_subcommand(1);

  std::size_t size = 0;
  std::string input, output, output_presheaf;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t cases = 0;

  auto* cu = app.add_subcommand("ultrafilters", "enumerate ultrafilters on a canonical set");
  cu->add_option("--size", size, "cardinality of the base set")->required();
  cu->add_option("--output", output, "also write the report here");

  auto* cr = app.add_subcommand("resolve", "compute the standard free resolution");
  cr->add_option("--size", size, "cardinality of X")->required();
  cr->add_option("--output", output, "also write the report here");

  auto* cc = app.add_subcommand("check", "run the × and ★ checks on a presheaf file");
  cc->add_option("--input", input, "presheaf JSON file")->required();
  cc->add_option("--output", output, "also write the report here");

  auto* cs = app.add_subcommand("sheafify", "compute sharp(F) and compare with the oracle");
  cs->add_option("--input", input, "presheaf JSON file")->required();
  cs->add_option("--sheaf-output", output_presheaf, "write the sheafified presheaf here");
  cs->add_option("--output", output, "also write the report here");

  auto* cv = app.add_subcommand("verify", "run named verification suites");
  cv->add_option("--suite", suite, "suite name or 'all'");
  cv->add_option("--seed", seed, "seed for randomized suites");
  cv->add_option("--cases", cases, "case count override (0 = suite default)");
  cv->add_option("--output", output, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = kPass;
  try {
    if (cu->parsed()) {
      rc = cmd_ultrafilters(size, output);
    } else if (cr->parsed()) {
      rc = cmd_resolve(size, output);
    } else if (cc->parsed()) {
      rc = cmd_check(input, output);
    } else if (cs->parsed()) {
      rc = cmd_sheafify(input, output_presheaf, output);
    } else if (cv->parsed()) {
      if (suite != "all") {
        auto names = condensed::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
          std::cerr << "unknown suite: " << suite << "\n";
          return kUsage;
        }
      }
      rc = cmd_verify(suite, seed, cases, output);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailure;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return rc;
}
