// chainmail: exact-arithmetic toolkit for chainmail surgery diagrams.
// Exit codes: 0 success, 1 mathematical failure (hypotheses fail, invalid
// certificate, nugatory crossing, ...), 2 input error, 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chainmail/capi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int status_exit(cm_status st) {
  switch (st) {
    case CM_OK: return kExitOk;
    case CM_ERR_MATH: return kExitMath;
    case CM_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

int fail(cm_status st) {
  std::cerr << "error: " << cm_last_error() << "\n";
  return status_exit(st);
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return true;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitInput;
  }
  out << text;
  return kExitOk;
}

struct GraphHandle {
  cm_graph* g = nullptr;
  ~GraphHandle() { cm_graph_free(g); }
};

struct CString {
  char* s = nullptr;
  ~CString() { cm_string_free(s); }
};

int load_graph(const std::string& path, GraphHandle* handle) {
  std::string text;
  if (!read_file(path, &text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitInput;
  }
  if (cm_status st = cm_graph_parse(text.c_str(), &handle->g)) return fail(st);
  return kExitOk;
}

bool parse_range(const std::string& text, long long* lo, long long* hi) {
  size_t dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    size_t used = 0;
    *lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) return false;
    std::string rest = text.substr(dots + 2);
    *hi = std::stoll(rest, &used);
    return used == rest.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chainmail: surgery-diagram spin structures, Kaplan invariants and "
               "Dehn-surgery obstruction certificates"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the report to a file instead of stdout");

  std::string graph_path, pd_path, pivot, root, kill, outer_color = "black";
  std::string n_range = "0..0", weight_range = "-5..0";
  unsigned long n_max = 100;
  int max_vertices = 4, max_mult = 3;
  unsigned long long candidate_cap = 0;
  std::string emit_tait, emit_reduced;

  auto* analyze = app.add_subcommand("analyze", "Laplacian, homology and spin table");
  analyze->add_option("graph", graph_path, "Graph JSON file")->required();

  auto* family = app.add_subcommand("family", "Hypothesis checks and family invariance");
  family->add_option("graph", graph_path, "Graph JSON file")->required();
  family->add_option("--pivot", pivot, "Pivot vertex id")->required();
  family->add_option("--n-max", n_max, "Verify members 0..n-max (default 100)");

  auto* certify = app.add_subcommand("certify", "Obstruction certificate and threshold N");
  certify->add_option("graph", graph_path, "Graph JSON file")->required();
  certify->add_option("--pivot", pivot, "Pivot vertex id")->required();

  auto* tait = app.add_subcommand("tait", "Checkerboard/Tait pipeline for a PD code");
  tait->add_option("pd", pd_path, "PD code file")->required();
  tait->add_option("--outer-color", outer_color, "Outer face color: black (default) or white")
      ->check(CLI::IsMember({"black", "white"}));
  tait->add_option("--root", root, "Root white face id (default: longest boundary)");
  tait->add_option("--emit-tait", emit_tait, "Also write the Tait graph JSON to a file");
  tait->add_option("--emit-reduced", emit_reduced,
                   "Also write the reduced graph JSON to a file");

  auto* pi1 = app.add_subcommand("pi1", "Weight-one certificates for a killed generator");
  pi1->add_option("graph", graph_path, "Graph JSON file")->required();
  pi1->add_option("--kill", kill, "Generator to kill (e.g. x3)")->required();
  pi1->add_option("--pivot", pivot, "Pivot vertex id (enables family mode)");
  pi1->add_option("--n-range", n_range, "Family members A..B (with --pivot)");

  auto* prospect = app.add_subcommand("prospect", "Search for base graphs inside bounds");
  prospect->add_option("--max-vertices", max_vertices, "Largest vertex count (default 4)");
  prospect->add_option("--weight-range", weight_range, "Weights MIN..MAX (default -5..0)");
  prospect->add_option("--max-mult", max_mult, "Largest |signed count| per pair (default 3)");
  prospect->add_option("--candidate-cap", candidate_cap,
                       "Stop after this many candidates (flags partial results)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    GraphHandle g;
    if (int rc = load_graph(graph_path, &g)) return rc;
    CString report;
    if (cm_status st = cm_analyze_report(g.g, &report.s)) return fail(st);
    return write_output(output, report.s);
  }

  if (family->parsed()) {
    GraphHandle g;
    if (int rc = load_graph(graph_path, &g)) return rc;
    CString report;
    int all_pass = 0;
    if (cm_status st = cm_family_report(g.g, pivot.c_str(), n_max, &report.s, &all_pass))
      return fail(st);
    if (int rc = write_output(output, report.s)) return rc;
    return all_pass ? kExitOk : kExitMath;
  }

  if (certify->parsed()) {
    GraphHandle g;
    if (int rc = load_graph(graph_path, &g)) return rc;
    CString report, n;
    if (cm_status st = cm_obstruction_certificate(g.g, pivot.c_str(), &report.s, &n.s))
      return fail(st);
    return write_output(output, report.s);
  }

  if (tait->parsed()) {
    std::string pd_text;
    if (!read_file(pd_path, &pd_text)) {
      std::cerr << "error: cannot read " << pd_path << "\n";
      return kExitInput;
    }
    CString report, tait_json, reduced_json;
    if (cm_status st = cm_tait_report(pd_text.c_str(), outer_color == "white" ? 1 : 0,
                                      root.empty() ? nullptr : root.c_str(), &report.s,
                                      &tait_json.s, &reduced_json.s))
      return fail(st);
    if (!emit_tait.empty())
      if (int rc = write_output(emit_tait, tait_json.s)) return rc;
    if (!emit_reduced.empty())
      if (int rc = write_output(emit_reduced, reduced_json.s)) return rc;
    return write_output(output, report.s);
  }

  if (pi1->parsed()) {
    GraphHandle g;
    if (int rc = load_graph(graph_path, &g)) return rc;
    long long lo = 0, hi = 0;
    if (!pivot.empty()) {
      if (!parse_range(n_range, &lo, &hi) || lo < 0 || hi < lo) {
        std::cerr << "error: --n-range expects A..B with 0 <= A <= B\n";
        return kExitInput;
      }
    }
    CString report;
    int all_valid = 0;
    if (cm_status st = cm_pi1_report(g.g, kill.c_str(), pivot.empty() ? nullptr : pivot.c_str(),
                                     static_cast<unsigned long>(lo),
                                     static_cast<unsigned long>(hi), &report.s, &all_valid))
      return fail(st);
    if (int rc = write_output(output, report.s)) return rc;
    return all_valid ? kExitOk : kExitMath;
  }

  if (prospect->parsed()) {
    long long wmin = 0, wmax = 0;
    if (!parse_range(weight_range, &wmin, &wmax) || wmin > wmax) {
      std::cerr << "error: --weight-range expects MIN..MAX\n";
      return kExitInput;
    }
    CString report;
    int partial = 0;
    if (cm_status st = cm_prospect_report(max_vertices, wmin, wmax, max_mult, candidate_cap,
                                          &report.s, &partial))
      return fail(st);
    return write_output(output, report.s);
  }

  return kExitInput;
}
