// linkinv: exact invariants of plumbed 3-manifolds and Brieskorn links.
//
// Machine output is TSV (key<TAB>value per line) with a fixed key order per
// subcommand; identical inputs and flags always produce identical bytes.
// Exit codes: 0 success, 1 bad flags or invalid input, 2 for
// singular-intersection-form and too-large-use-sampling.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkinv/brieskorn.hpp"
#include "linkinv/enumerate.hpp"
#include "linkinv/errors.hpp"
#include "linkinv/frames.hpp"
#include "linkinv/graph_io.hpp"
#include "linkinv/plumbing.hpp"
#include "linkinv/selftest.hpp"
#include "linkinv/todd.hpp"

namespace {

using namespace linkinv;

void kv(const std::string& key, const std::string& value) {
  std::cout << key << '\t' << value << '\n';
}

void kv(const std::string& key, long long value) {
  kv(key, std::to_string(value));
}

long long parse_ll(const std::string& token, const char* what) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw Error("invalid-argument", std::string("bad ") + what + " '" + token + "'");
  return value;
}

// --eval c1=<int>,c2=<int>,...: every index 1..grade exactly once
todd::ChernVector parse_eval(const std::string& text, int grade) {
  std::vector<std::optional<long long>> values(grade);
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const size_t eq = item.find('=');
    if (eq == std::string::npos || item.size() < 3 || item[0] != 'c')
      throw Error("invalid-argument", "expected c<i>=<int> in --eval");
    const long long index = parse_ll(item.substr(1, eq - 1), "Chern index");
    if (index < 1 || index > grade)
      throw Error("invalid-argument", "Chern index out of range in --eval");
    if (values[index - 1])
      throw Error("invalid-argument", "duplicate Chern index in --eval");
    values[index - 1] = parse_ll(item.substr(eq + 1), "Chern number");
    pos = comma + 1;
  }
  todd::ChernVector chern;
  for (int i = 0; i < grade; ++i) {
    if (!values[i])
      throw Error("invalid-argument",
                  "--eval must set c1..c" + std::to_string(grade));
    chern.values.push_back(*values[i]);
  }
  return chern;
}

int cmd_todd(int order, const std::string& eval_text) {
  const todd::ToddPolynomial poly = todd::todd_polynomial(order);
  if (eval_text.empty()) {
    kv("T" + std::to_string(order), todd::to_string(poly));
  } else {
    kv("Td", rat_str(todd::evaluate_genus(poly, parse_eval(eval_text, order))));
  }
  return 0;
}

int cmd_graph_check(const std::string& path) {
  const graphio::GraphDocument doc = graphio::parse_file(path);
  const plumbing::PlumbingGraph& g = doc.graph;
  const plumbing::IntersectionMatrix m = plumbing::intersection_matrix(g);

  kv("r", g.vertex_count());
  kv("edges", g.edge_count());
  const Int det = plumbing::determinant(m);
  if (det == 0) {
    kv("error", "singular-intersection-form");
    return 2;
  }
  kv("det", det.get_str());
  kv("negative_definite", plumbing::is_negative_definite(m) ? "true" : "false");
  const plumbing::CanonicalCycle cycle = plumbing::canonical_cycle(g);
  kv("numerically_gorenstein", cycle.integral ? "true" : "false");
  std::string joined;
  for (size_t i = 0; i < cycle.coefficients.size(); ++i) {
    if (i) joined += ',';
    joined += rat_str(cycle.coefficients[i]);
  }
  kv("K", joined);
  kv("K2", rat_str(cycle.k_squared));
  kv("chi_top", plumbing::euler_char_exceptional(g));
  return 0;
}

int cmd_brieskorn(long long a, long long b, long long c,
                  const std::string& emit_path) {
  const brieskorn::ExponentTriple t(a, b, c);
  // build the graph before any output so a failure leaves stdout clean
  std::string graph_text;
  if (!emit_path.empty()) {
    graphio::GraphDocument doc;
    doc.graph = brieskorn::seifert_graph(t);
    doc.name = "brieskorn-" + std::to_string(t.a()) + "-" +
               std::to_string(t.b()) + "-" + std::to_string(t.c());
    graph_text = graphio::emit(doc);
  }

  const brieskorn::SingularityProfile p = brieskorn::profile(t);
  kv("mu", p.mu);
  kv("pg", p.p_g);
  kv("sigma", p.sigma);
  kv("chi", p.chi);
  kv("ehat", p.ehat);
  kv("e_r", p.e_r);
  kv("e_c", p.e_c);
  kv("rochlin", p.rochlin);
  kv("casson", p.casson ? std::to_string(*p.casson) : "n/a");

  if (!emit_path.empty()) {
    std::ofstream out(emit_path, std::ios::binary);
    if (!out) throw Error("invalid-argument", "cannot write '" + emit_path + "'");
    out << graph_text;
  }
  return 0;
}

int cmd_ehat(long long mu, long long offset) {
  if (mu < 0) throw Error("invalid-argument", "--mu must be non-negative");
  const frames::FrameClass f =
      frames::act(frames::canonical_frame("link", mu), offset);
  const long long e = frames::ehat(f);
  const frames::InvariantBundle bundle = frames::reduce(e);
  kv("ehat", e);
  kv("e_r", bundle.e_r);
  kv("e_c", bundle.e_c);
  return 0;
}

int cmd_enumerate_weights(const std::string& path, long long wmin,
                          std::optional<std::uint64_t> samples,
                          std::optional<std::uint64_t> seed) {
  if (wmin > -1) throw Error("invalid-argument", "--wmin must be negative");
  if (samples.has_value() != seed.has_value())
    throw Error("invalid-argument",
                "sampled mode needs both --samples and --seed");
  const graphio::GraphDocument doc = graphio::parse_file(path);

  const enumerate::SweepMode mode =
      samples ? enumerate::SweepMode::sample(*samples, *seed)
              : enumerate::SweepMode::exhaustive();
  const enumerate::WeightSweepReport report =
      enumerate::sweep_weights(doc.graph, -wmin, mode);

  kv("r", report.r);
  kv("wmin", wmin);
  kv("mode", report.mode.sampled ? "sampled" : "exhaustive");
  if (report.mode.sampled) {
    kv("samples", std::to_string(report.mode.samples));
    kv("seed", std::to_string(report.mode.seed));
  }
  kv("total", std::to_string(report.total));
  kv("negative_definite", std::to_string(report.negative_definite));
  Rat fraction(report.negative_definite);
  fraction /= Rat(report.total);
  kv("fraction", rat_str(fraction));
  return 0;
}

int cmd_enumerate_genera(const std::string& path, int gmax) {
  const graphio::GraphDocument doc = graphio::parse_file(path);
  const enumerate::GenusSolutionSet sol =
      enumerate::gorenstein_genera(doc.graph, gmax);
  kv("r", doc.graph.vertex_count());
  kv("gmax", gmax);
  std::string joined;
  for (size_t i = 0; i < sol.solutions.size(); ++i) {
    if (i) joined += ',';
    for (size_t j = 0; j < sol.solutions[i].size(); ++j) {
      if (j) joined += ':';
      joined += std::to_string(sol.solutions[i][j]);
    }
  }
  kv("solutions", joined);
  kv("period", sol.lattice_period.get_str());
  return 0;
}

int exit_code_for(const Error& e) {
  if (e.code() == "singular-intersection-form" ||
      e.code() == "too-large-use-sampling")
    return 2;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of plumbed 3-manifolds and Brieskorn links"};
  app.require_subcommand(1);

  auto* todd_cmd = app.add_subcommand("todd", "Todd polynomials and genera");
  int order = 0;
  std::string eval_text;
  todd_cmd->add_option("--order", order, "polynomial grade k")->required();
  todd_cmd->add_option("--eval", eval_text, "c1=<int>,...,ck=<int>");

  auto* graph_cmd = app.add_subcommand("graph", "plumbing graph analysis");
  graph_cmd->require_subcommand(1);
  auto* check_cmd = graph_cmd->add_subcommand("check", "invariants of a graph file");
  std::string check_path;
  check_cmd->add_option("file", check_path, "graph file")->required();

  auto* brieskorn_cmd =
      app.add_subcommand("brieskorn", "Brieskorn-Pham singularity profile");
  long long ba = 0, bb = 0, bc = 0;
  std::string emit_path;
  brieskorn_cmd->add_option("a", ba, "exponent a")->required();
  brieskorn_cmd->add_option("b", bb, "exponent b")->required();
  brieskorn_cmd->add_option("c", bc, "exponent c")->required();
  brieskorn_cmd->add_option("--emit-graph", emit_path,
                            "write the resolution graph to this path");

  auto* ehat_cmd = app.add_subcommand("ehat", "integral e-invariant from mu");
  long long mu = 0, offset = 0;
  ehat_cmd->add_option("--mu", mu, "Milnor number")->required();
  ehat_cmd->add_option("--offset", offset, "twist the canonical frame");

  auto* enum_cmd = app.add_subcommand("enumerate", "weight and genus sweeps");
  enum_cmd->require_subcommand(1);
  auto* weights_cmd = enum_cmd->add_subcommand("weights", "negative-definite census");
  std::string weights_path;
  long long wmin = 0;
  std::optional<std::uint64_t> samples, seed;
  weights_cmd->add_option("file", weights_path, "graph file (topology)")->required();
  weights_cmd->add_option("--wmin", wmin, "sweep weights in {wmin..-1}")->required();
  weights_cmd->add_option("--samples", samples, "sampled mode: draw count");
  weights_cmd->add_option("--seed", seed, "sampled mode: RNG seed");

  auto* genera_cmd = enum_cmd->add_subcommand("genera", "numerically Gorenstein genera");
  std::string genera_path;
  int gmax = 0;
  genera_cmd->add_option("file", genera_path, "graph file")->required();
  genera_cmd->add_option("--gmax", gmax, "genus box bound")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "run the embedded suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (todd_cmd->parsed()) return cmd_todd(order, eval_text);
    if (graph_cmd->parsed() && check_cmd->parsed())
      return cmd_graph_check(check_path);
    if (brieskorn_cmd->parsed()) return cmd_brieskorn(ba, bb, bc, emit_path);
    if (ehat_cmd->parsed()) return cmd_ehat(mu, offset);
    if (enum_cmd->parsed() && weights_cmd->parsed())
      return cmd_enumerate_weights(weights_path, wmin, samples, seed);
    if (enum_cmd->parsed() && genera_cmd->parsed())
      return cmd_enumerate_genera(genera_path, gmax);
    if (selftest_cmd->parsed())
      return selftest::run_embedded(std::cout) ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 1;
}
