#include "chainmail/capi.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "chainmail/error.hpp"
#include "chainmail/graph.hpp"
#include "chainmail/report.hpp"

using namespace chainmail;

struct cm_graph {
  ChainmailGraph g;
};

namespace {

thread_local std::string g_last_error;

cm_status to_status(errc code) {
  switch (code) {
    case errc::parse: return CM_ERR_PARSE;
    case errc::invalid: return CM_ERR_INVALID;
    case errc::bad_argument: return CM_ERR_ARG;
    case errc::math: return CM_ERR_MATH;
    case errc::internal: return CM_ERR_INTERNAL;
  }
  return CM_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
cm_status guarded(Fn&& fn) {
  try {
    fn();
    return CM_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CM_ERR_INTERNAL;
  }
}

cm_status require(bool ok, const char* message) {
  if (ok) return CM_OK;
  g_last_error = message;
  return CM_ERR_ARG;
}

}  // namespace

extern "C" {

const char* cm_version(void) { return "1.0.0"; }

const char* cm_last_error(void) { return g_last_error.c_str(); }

void cm_string_free(char* s) { std::free(s); }

cm_status cm_graph_parse(const char* json, cm_graph** out) {
  if (cm_status st = require(json && out, "cm_graph_parse: NULL argument")) return st;
  *out = nullptr;
  return guarded([&] {
    auto* h = new cm_graph{parse_graph(json)};
    *out = h;
  });
}

void cm_graph_free(cm_graph* g) { delete g; }

cm_status cm_graph_serialize(const cm_graph* g, char** out_json) {
  if (cm_status st = require(g && out_json, "cm_graph_serialize: NULL argument")) return st;
  return guarded([&] { *out_json = dup_string(serialize_graph(g->g)); });
}

cm_status cm_analyze_report(const cm_graph* g, char** out_report) {
  if (cm_status st = require(g && out_report, "cm_analyze_report: NULL argument")) return st;
  return guarded([&] { *out_report = dup_string(analyze_report(g->g)); });
}

cm_status cm_family_report(const cm_graph* g, const char* pivot, unsigned long n_max,
                           char** out_report, int* out_all_pass) {
  if (cm_status st = require(g && pivot && out_report, "cm_family_report: NULL argument"))
    return st;
  return guarded([&] {
    bool ok = false;
    *out_report = dup_string(family_report(g->g, pivot, n_max, &ok));
    if (out_all_pass) *out_all_pass = ok ? 1 : 0;
  });
}

cm_status cm_obstruction_certificate(const cm_graph* g, const char* pivot,
                                     char** out_certificate, char** out_n_decimal) {
  if (cm_status st =
          require(g && pivot && out_certificate, "cm_obstruction_certificate: NULL argument"))
    return st;
  return guarded([&] {
    std::string n;
    *out_certificate = dup_string(certify_report(g->g, pivot, &n));
    if (out_n_decimal) *out_n_decimal = dup_string(n);
  });
}

cm_status cm_tait_report(const char* pd_text, int outer_white, const char* root,
                         char** out_report, char** out_tait_json, char** out_reduced_json) {
  if (cm_status st = require(pd_text && out_report, "cm_tait_report: NULL argument")) return st;
  return guarded([&] {
    std::optional<std::string> root_override;
    if (root) root_override = std::string(root);
    std::string tait_json, reduced_json;
    *out_report = dup_string(tait_report(pd_text,
                                         outer_white ? FaceColor::white : FaceColor::black,
                                         root_override, &tait_json, &reduced_json));
    if (out_tait_json) *out_tait_json = dup_string(tait_json);
    if (out_reduced_json) *out_reduced_json = dup_string(reduced_json);
  });
}

cm_status cm_pi1_report(const cm_graph* g, const char* kill, const char* pivot,
                        unsigned long n_from, unsigned long n_to, char** out_report,
                        int* out_all_valid) {
  if (cm_status st = require(g && kill && out_report, "cm_pi1_report: NULL argument"))
    return st;
  return guarded([&] {
    std::optional<std::string> piv;
    if (pivot) piv = std::string(pivot);
    bool ok = false;
    *out_report = dup_string(pi1_report(g->g, kill, piv, n_from, n_to, &ok));
    if (out_all_valid) *out_all_valid = ok ? 1 : 0;
  });
}

cm_status cm_prospect_report(int max_vertices, long long weight_min, long long weight_max,
                             int max_multiplicity, unsigned long long candidate_cap,
                             char** out_report, int* out_partial) {
  if (cm_status st = require(out_report != nullptr, "cm_prospect_report: NULL argument"))
    return st;
  return guarded([&] {
    ProspectOptions opts;
    opts.max_vertices = max_vertices;
    opts.weight_min = weight_min;
    opts.weight_max = weight_max;
    opts.max_multiplicity = max_multiplicity;
    if (candidate_cap) opts.candidate_cap = candidate_cap;
    bool partial = false;
    *out_report = dup_string(prospect_report(opts, &partial));
    if (out_partial) *out_partial = partial ? 1 : 0;
  });
}

}  // extern "C"
