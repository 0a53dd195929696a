#include "chainmail/report.hpp"

#include <sstream>

#include "chainmail/pi1.hpp"
#include "chainmail/spin.hpp"

namespace chainmail {

namespace {

std::string poly_text(const mpz_class& f0, int slope) {
  if (slope == 0) return f0.get_str();
  if (f0 == 0) return "-2n";
  return f0.get_str() + "-2n";
}

std::string exponents_text(const std::vector<long long>& exps) {
  if (exps.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) out << " ";
    out << exps[i];
  }
  return out.str();
}

std::string eliminations_text(const GroupPresentation& done,
                              const std::vector<EliminationStep>& log) {
  if (log.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < log.size(); ++i) {
    if (i) out << ", ";
    out << log[i].eliminated << " = " << word_to_text(done, log[i].solved);
  }
  return out.str();
}

}  // namespace

std::string analyze_report(const ChainmailGraph& g) {
  std::ostringstream out;
  out << "chainmail report v1: analyze\n";
  out << "graph: " << serialize_graph(g) << "\n";
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edges().size() << "\n";
  SymIntMatrix a = laplacian(g);
  out << "laplacian: " << a.to_text() << "\n";
  out << "det: " << determinant(a).get_str() << "\n";
  out << "signature: " << signature(a) << "\n";
  SnfDiagonal snf = smith_normal_form(a);
  out << "snf: " << snf.to_text() << "\n";
  out << "homology: " << homology_name(snf) << "\n";
  out << "homology-order: " << homology_order(g).get_str() << "\n";
  auto spins = characteristic_subgraphs(g);
  out << "spin-structures: " << spins.size() << "\n";
  for (const auto& s : spins) {
    out << "spin: S=" << s.subgraph.to_text(g) << " f=" << s.f.get_str();
    if (s.f == 0) {
      out << " degenerate (b2, sigma undefined)\n";
      continue;
    }
    FillingInvariants inv = kaplan_invariants(g, s);
    out << " b2=" << inv.b2.get_str() << " sigma=" << inv.sigma.get_str() << "\n";
  }
  return out.str();
}

std::string family_report(const ChainmailGraph& g, const std::string& pivot,
                          unsigned long n_max, bool* all_pass) {
  std::ostringstream out;
  out << "chainmail report v1: family\n";
  out << "graph: " << serialize_graph(g) << "\n";
  out << "pivot: " << pivot << "\n";
  HypothesisReport hyp = check_genex_hypotheses(g, pivot);
  out << hyp.to_text();
  out << "hypotheses: " << (hyp.all_pass() ? "pass" : "FAIL") << "\n";

  FamilySpec spec{g, pivot};
  InvarianceReport inv = verify_family_invariance(spec, n_max);
  out << "n-max: " << n_max << "\n";
  out << "determinant constant: " << (inv.det_constant ? "pass" : "FAIL")
      << " det=" << inv.det0.get_str() << "\n";
  out << "characteristic subgraphs constant: " << (inv.spins_constant ? "pass" : "FAIL")
      << " count=" << inv.sequences.size() << "\n";
  out << "framing linear: " << (inv.slopes_ok ? "pass" : "FAIL") << "\n";
  for (const auto& seq : inv.sequences)
    out << "f-sequence: S=" << seq.subset << " f(n)=" << poly_text(seq.f0, seq.slope) << "\n";
  for (const auto& fail : inv.failures) out << "failure: " << fail << "\n";
  bool ok = hyp.all_pass() && inv.all_pass();
  out << "result: " << (ok ? "pass" : "FAIL") << "\n";
  if (all_pass) *all_pass = ok;
  return out.str();
}

std::string certify_report(const ChainmailGraph& g, const std::string& pivot,
                           std::string* n_decimal) {
  ObstructionCertificate cert = obstruction_threshold(FamilySpec{g, pivot});
  if (n_decimal) *n_decimal = cert.n_threshold.get_str();
  return cert.to_text();
}

std::string tait_report(const std::string& pd_text, FaceColor outer,
                        const std::optional<std::string>& root_override,
                        std::string* tait_json, std::string* reduced_json) {
  PlanarDiagramCode pd = parse_pd(pd_text);
  std::vector<Face> faces = trace_faces(pd);
  Coloring coloring = checkerboard_coloring(pd, faces, outer);
  TaitGraph tait = white_tait_graph(pd, faces, coloring);

  std::ostringstream out;
  out << "chainmail report v1: tait\n";
  out << "crossings: " << pd.crossings.size() << "\n";
  out << "arcs: " << pd.arc_count << "\n";
  out << "components: " << pd.components << "\n";
  out << "faces: " << faces.size() << "\n";
  int white_seen = 0;
  for (size_t f = 0; f < faces.size(); ++f) {
    bool white = coloring.color[f] == FaceColor::white;
    out << "face: index=" << f << " corners=" << faces[f].corners.size() << " color="
        << (white ? "white" : "black");
    if (white) out << " vertex=w" << ++white_seen;
    if (static_cast<int>(f) == coloring.outer_face) out << " outer=yes";
    out << "\n";
  }
  out << "crossing-signs:";
  if (pd.crossings.empty()) {
    out << " -";
  } else {
    for (size_t c = 0; c < pd.crossings.size(); ++c)
      out << " " << crossing_sign(pd, faces, coloring, static_cast<int>(c));
  }
  out << "\n";
  out << "tait: " << serialize_graph(tait.graph) << "\n";

  std::string root = tait.root;
  if (root_override) {
    tait.graph.require_index(*root_override);
    root = *root_override;
  }
  ChainmailGraph reduced = reduce_tait(tait, root);
  out << "root: " << root << "\n";
  out << "reduced: " << serialize_graph(reduced) << "\n";
  out << "homology-order: " << homology_order(reduced).get_str() << "\n";

  if (tait_json) *tait_json = serialize_graph(tait.graph);
  if (reduced_json) *reduced_json = serialize_graph(reduced);
  return out.str();
}

namespace {

void pi1_member_lines(std::ostringstream& out, const ChainmailGraph& g,
                      const std::string& kill, bool verbose, const std::string& label,
                      bool* valid_out) {
  GroupPresentation p = presentation_from_graph(g);
  if (verbose) {
    std::ostringstream gens;
    for (size_t i = 0; i < p.generator_names.size(); ++i) {
      if (i) gens << " ";
      gens << p.generator_names[i];
    }
    out << "generators: " << gens.str() << "\n";
    for (const auto& r : p.relators) out << "relator: " << word_to_text(p, r) << "\n";
    out << "abelianization: " << abelianization(p).to_text() << "\n";
    bool negative = false;
    for (const auto& e : g.edges())
      if (e.sign < 0) negative = true;
    out << "negative-edges: "
        << (negative ? "present (inverse-factor convention, experimental)" : "none") << "\n";
  }

  WeightOneCertificate cert = weight_one_certificate(p, kill);
  SimplificationResult sim = kill_generator_and_simplify(p, kill);
  out << label << "eliminations: " << eliminations_text(sim.presentation, cert.log)
      << " ; survivors: " << (cert.survivor ? *cert.survivor : std::string("-"))
      << " ; exponents: " << exponents_text(cert.final_exponents) << " ; gcd: " << cert.gcd
      << " ; certificate: " << (cert.valid ? "valid" : "INVALID (" + cert.reason + ")")
      << "\n";
  if (valid_out) *valid_out = cert.valid;
}

}  // namespace

std::string pi1_report(const ChainmailGraph& g, const std::string& kill,
                       const std::optional<std::string>& pivot, unsigned long n_from,
                       unsigned long n_to, bool* all_valid) {
  std::ostringstream out;
  out << "chainmail report v1: pi1\n";
  out << "graph: " << serialize_graph(g) << "\n";
  out << "kill: " << kill << "\n";
  bool ok = true;
  if (!pivot) {
    bool valid = false;
    pi1_member_lines(out, g, kill, true, "certificate-line: ", &valid);
    ok = valid;
  } else {
    if (n_from > n_to) throw Error(errc::bad_argument, "empty n range");
    if (n_to - n_from > 100'000) throw Error(errc::bad_argument, "n range too large");
    out << "pivot: " << *pivot << "\n";
    out << "n-range: " << n_from << ".." << n_to << "\n";
    FamilySpec spec{g, *pivot};
    for (unsigned long n = n_from; n <= n_to; ++n) {
      ChainmailGraph member = family_member(spec, n);
      bool valid = false;
      pi1_member_lines(out, member, kill, n == n_from, "n=" + std::to_string(n) + ": ",
                       &valid);
      ok = ok && valid;
    }
  }
  out << "result: " << (ok ? "valid" : "INVALID") << "\n";
  if (all_valid) *all_valid = ok;
  return out.str();
}

std::string prospect_report(const ProspectOptions& opts, bool* partial) {
  ProspectResult res = prospect_base_graphs(opts);
  std::ostringstream out;
  out << "chainmail report v1: prospect\n";
  out << "bounds: max-vertices=" << opts.max_vertices << " weight-min=" << opts.weight_min
      << " weight-max=" << opts.weight_max << " max-mult=" << opts.max_multiplicity << "\n";
  out << "candidate-cap: " << opts.candidate_cap << "\n";
  out << "candidates: " << res.candidates << "\n";
  out << "specs: " << res.specs.size() << "\n";
  for (const auto& spec : res.specs)
    out << "spec: pivot=" << spec.pivot << " graph=" << serialize_graph(spec.base) << "\n";
  out << "partial: " << (res.partial ? "yes" : "no") << "\n";
  if (partial) *partial = res.partial;
  return out.str();
}

}  // namespace chainmail
