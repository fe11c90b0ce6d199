// Acceptance suite: runs every criterion and prints one pass/fail line per
// criterion.  Exit code 0 iff all pass.  Builds on the embedded suite and
// adds the process-level interface checks (exit codes, selftest).

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "cli_util.hpp"
#include "linkinv/selftest.hpp"

using linkinv::selftest::Result;

namespace {

Result interface_criterion() {
  Result r = linkinv::selftest::run_roundtrip();
  r.name = "interface";
  if (!r.pass) return r;

  auto expect = [&r](bool cond, const std::string& msg) {
    if (!cond && r.pass) {
      r.pass = false;
      r.detail = msg;
    }
  };

  expect(cliutil::run_cli("selftest").exit_code == 0, "selftest exit code 0");

  // documented exit codes per error class
  expect(cliutil::run_cli("todd --order 0").exit_code == 1,
         "invalid grade exits 1");
  expect(cliutil::run_cli("todd --bogus").exit_code == 1, "bad flags exit 1");
  expect(cliutil::run_cli("brieskorn 1 3 5").exit_code == 1,
         "exponent < 2 exits 1");
  expect(cliutil::run_cli("ehat").exit_code == 1, "missing --mu exits 1");
  expect(cliutil::run_cli("nonsense").exit_code == 1,
         "unknown subcommand exits 1");

  const cliutil::TempFile loop("loop", "vertex 0 -2 0\nedge 0 0\n");
  expect(cliutil::run_cli("graph check " + loop.path()).exit_code == 1,
         "loop edge exits 1");

  const cliutil::TempFile disconnected("disc",
                                       "vertex 0 -2 0\nvertex 1 -2 0\n");
  expect(cliutil::run_cli("graph check " + disconnected.path()).exit_code == 1,
         "disconnected graph exits 1");

  const cliutil::TempFile singular("sing",
                                   "vertex 0 -1 0\nvertex 1 -1 0\nedge 0 1\n");
  expect(cliutil::run_cli("graph check " + singular.path()).exit_code == 2,
         "singular form exits 2");
  expect(cliutil::run_cli("enumerate genera " + singular.path() + " --gmax 1")
                 .exit_code == 2,
         "singular form exits 2 in genera");

  const cliutil::TempFile path2("path2", linkinv::selftest::kFixturePath2);
  expect(cliutil::run_cli("enumerate weights " + path2.path() + " --wmin -4000")
                 .exit_code == 2,
         "exhaustive guard exits 2");

  return r;
}

}  // namespace

int main() {
  std::vector<Result> results = linkinv::selftest::run_core();
  results.push_back(interface_criterion());

  bool all = true;
  for (const Result& r : results) {
    std::cout << "criterion " << std::setw(2) << std::setfill('0') << r.number
              << std::setfill(' ') << ' ' << r.name << ": "
              << (r.pass ? "PASS" : "FAIL");
    if (!r.pass) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
