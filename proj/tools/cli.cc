// Copyright 2026 The NMP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nmp/decompose.h"
#include "nmp/error.h"
#include "nmp/euclid.h"
#include "nmp/graph.h"
#include "nmp/harness.h"
#include "nmp/nmp_check.h"
#include "nmp/pseudorandom.h"
#include "nmp/rational.h"
#include "nmp/rng.h"
#include "nmp/version.h"

namespace nmp {
namespace {

using nlohmann::json;

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kFormat, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kFormat, "cannot write '" + path + "'");
  out << text;
  if (!out) Fail(ErrorCode::kFormat, "write to '" + path + "' failed");
}

// Comma- or whitespace-separated integers.
std::vector<int64_t> ParseIntList(const std::string& text, const std::string& what) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<int64_t> out;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      Fail(ErrorCode::kFormat, what + ": '" + token + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> ParseDoubleList(const std::string& text, const std::string& what) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      Fail(ErrorCode::kFormat, what + ": '" + token + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) Fail(ErrorCode::kFormat, what + " is empty");
  return out;
}

std::vector<int> ToInts(const std::vector<int64_t>& values) {
  return std::vector<int>(values.begin(), values.end());
}

std::string Join(const VertexSet& set) {
  std::string out;
  for (int v : set) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string Join(const std::vector<int>& values, char sep = ' ') {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

json ToJson(const VertexSet& set) { return json(set.members()); }

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string graph;
  bool json = false;
  std::string multiplicity_out;
};

void RunCheck(const CheckArgs& a, std::ostream& out) {
  const BipartiteGraph g = ReadGraphFile(a.graph);
  const NmpCertificate cert = CheckNmp(g);
  if (!a.multiplicity_out.empty()) {
    std::ostringstream m;
    if (cert.verdict == Verdict::kHasNmp) {
      size_t i = 0;
      for (const Edge& e : g.Edges()) {
        m << "m " << e.x << ' ' << e.y << ' ' << cert.multiplicity[i++] << '\n';
      }
    }
    WriteText(a.multiplicity_out, m.str());
  }
  if (a.json) {
    json j;
    j["verdict"] = VerdictName(cert.verdict);
    j["row_sum"] = cert.row_sum;
    j["col_sum"] = cert.col_sum;
    j["witness"] = ToJson(cert.witness);
    j["witness_neighborhood"] = cert.witness_neighborhood_size;
    out << j.dump() << '\n';
    return;
  }
  out << "verdict: " << VerdictName(cert.verdict) << '\n'
      << "row_sum: " << cert.row_sum << '\n'
      << "col_sum: " << cert.col_sum << '\n';
  if (cert.verdict == Verdict::kViolated) {
    out << "witness: " << Join(cert.witness) << '\n'
        << "witness_neighborhood: " << cert.witness_neighborhood_size << '\n';
  }
}

// ---- tree ------------------------------------------------------------------

struct TreeArgs {
  int ell = 1;
  int L = 1;
  std::string emit;
  bool verify = false;
};

int RunTree(const TreeArgs& a, std::ostream& out) {
  const EuclidSchedule s = ComputeEuclidSchedule(a.ell, a.L);
  const EuclideanTree tree = BuildEuclideanTree(a.ell, a.L);
  std::vector<std::string> notes;
  std::vector<int> r(s.r.begin(), s.r.end());
  std::vector<int> q(s.q.begin() + 1, s.q.end());
  notes.push_back("T_{" + std::to_string(a.ell) + "," + std::to_string(a.L) +
                  "} m=" + std::to_string(s.m) + " r=" + Join(r, ',') +
                  " q=" + Join(q, ','));
  bool ok = true;
  if (a.verify) {
    const bool connected = IsConnected(tree.graph);
    const bool edges = tree.graph.edge_count() == int64_t{a.ell} + a.L - 1;
    const bool nmp = CheckNmp(tree.graph).verdict == Verdict::kHasNmp;
    const bool bound = s.m <= EuclidComplexityBound(std::max(a.ell, a.L));
    ok = connected && edges && nmp && bound;
    notes.push_back(std::string("verify: connected=") + (connected ? "yes" : "no") +
                    " edges=" + (edges ? "yes" : "no") + " nmp=" + (nmp ? "yes" : "no") +
                    " m_bound=" + (bound ? "yes" : "no") + " -> " +
                    (ok ? "ok" : "FAILED"));
  }
  if (a.emit.empty()) {
    out << SerializeGraph(tree.graph, notes);
  } else {
    WriteGraphFile(a.emit, tree.graph, notes);
    for (const std::string& n : notes) out << n << '\n';
  }
  return ok ? kExitOk : kExitDomain;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  int k = 0;
  int n = 0;
  double p = 0.0;
  uint64_t seed = 0;
  int64_t q = 0;
  int64_t d = 0;
  std::string x_list;
  std::string y_list;
  std::string out;
};

void EmitGraph(const GenArgs& a, const BipartiteGraph& g,
               const std::vector<std::string>& notes, std::ostream& out) {
  if (a.out.empty() || a.out == "-") {
    out << SerializeGraph(g, notes);
  } else {
    WriteGraphFile(a.out, g, notes);
    out << "wrote " << a.out << " (k=" << g.left_size() << ", n=" << g.right_size()
        << ", edges=" << g.edge_count() << ")\n";
  }
}

SubsetSpec SpecFrom(const std::string& list_file) {
  SubsetSpec spec;
  if (list_file.empty()) return spec;
  spec.all = false;
  spec.elements = ParseIntList(ReadText(list_file), list_file);
  return spec;
}

// ---- verify-pseudo / audit / robust-delete --------------------------------

struct PseudoArgs {
  std::string graph;
  std::string p;
  std::string eps;
  bool estimate = false;
  int64_t samples = 1000;
  uint64_t seed = 0;
  bool alon_bourgain = false;
  int64_t field_q = 0;
  int64_t h_size = 0;
  std::string p0;
  std::string eps0;
  int d = 0;
  int max_attempts = 100;
  std::string out;
};

void PrintReport(const PseudoReport& r, std::ostream& out) {
  out << "min_left_degree: " << r.min_left_degree << '\n'
      << "max_codegree: " << r.max_codegree << " (x" << r.max_codegree_pair.first
      << ", x" << r.max_codegree_pair.second << ")\n"
      << "degree_ok: " << (r.degree_ok ? "yes" : "no") << '\n'
      << "codegree_ok: " << (r.codegree_ok ? "yes" : "no") << '\n';
  if (r.violating_vertex) out << "violating_vertex: x" << *r.violating_vertex << '\n';
  if (r.violating_pair) {
    out << "violating_pair: x" << r.violating_pair->first << " x"
        << r.violating_pair->second << '\n';
  }
  for (const std::string& w : r.warnings) out << "warning: " << w << '\n';
  out << "pass: " << (r.pass ? "yes" : "no") << '\n';
}

void RunVerifyPseudo(const PseudoArgs& a, std::ostream& out) {
  const BipartiteGraph g = ReadGraphFile(a.graph);
  PseudoParams params;
  if (a.estimate) {
    params = EstimateThomasonParams(g);
    out << "estimated_p: " << params.p.ToString() << " (" << params.p.ToDouble() << ")\n"
        << "estimated_eps: " << params.eps.ToString() << " (" << params.eps.ToDouble()
        << ")\n";
  } else {
    Require(!a.p.empty() && !a.eps.empty(), "--p and --eps are required without --estimate");
    params = {Rational::Parse(a.p), Rational::Parse(a.eps)};
  }
  PrintReport(VerifyThomason(g, params), out);
}

void RunAudit(const PseudoArgs& a, std::ostream& out) {
  const BipartiteGraph g = ReadGraphFile(a.graph);
  MixingOptions opt;
  opt.samples = a.samples;
  opt.seed = a.seed;
  PseudoParams params{Rational(1), Rational(0)};
  if (a.alon_bourgain) {
    opt.form = BoundForm::kAlonBourgain;
    opt.field_q = a.field_q;
    opt.h_size = a.h_size;
  } else {
    Require(!a.p.empty() && !a.eps.empty(), "--p and --eps are required");
    params = {Rational::Parse(a.p), Rational::Parse(a.eps)};
  }
  const MixingAuditReport r = MixingAudit(g, params, opt);
  out << "form: " << (a.alon_bourgain ? "alon_bourgain" : "thomason") << '\n'
      << "samples: " << r.samples << '\n'
      << "violations: " << r.violations << '\n'
      << "worst_ratio: " << r.worst_ratio << " (|A|=" << r.worst.a << ", |B|="
      << r.worst.b << ", e=" << r.worst.edges << ", deviation=" << r.worst.deviation
      << ", bound=" << r.worst.bound << ")\n";
}

void RunRobustDelete(const PseudoArgs& a, std::ostream& out) {
  const BipartiteGraph g = ReadGraphFile(a.graph);
  RobustDeleteOptions opt;
  opt.p0 = Rational::Parse(a.p0);
  opt.eps0 = Rational::Parse(a.eps0);
  opt.eps = Rational::Parse(a.eps);
  opt.d = a.d;
  opt.seed = a.seed;
  opt.max_attempts = a.max_attempts;
  const RobustDeleteResult r = RobustDelete(g, opt);
  out << "attempts: " << r.attempts << '\n'
      << "t: " << r.threshold_t << '\n'
      << "bad_bound: " << r.bad_bound << '\n'
      << "eta: " << r.eta << (r.eta_bound_applies ? " (applies)" : " (does not apply)")
      << '\n'
      << "C_X (" << r.c_x.size() << "): " << Join(r.c_x) << '\n'
      << "C_Y (" << r.c_y.size() << "): " << Join(r.c_y) << '\n'
      << "p1: " << r.p1.ToString() << " (" << r.p1.ToDouble() << ")\n"
      << "eps1: " << r.eps1.ToString() << '\n';
  for (const std::string& w : r.warnings) out << "warning: " << w << '\n';
  out << "reverify: " << (r.reverify.pass ? "pass" : "fail") << '\n';
  if (!a.out.empty()) {
    InducedSubgraph rest = Induce(g, Complement(g, r.c_x), Complement(g, r.c_y));
    WriteGraphFile(a.out, rest.graph, {});
  }
}

// ---- decompose -------------------------------------------------------------

struct DecomposeArgs {
  std::string graph;
  double eps = 0.0;
  std::string mode = "auto";
  std::string trace_json;
  std::string emit_factor;
};

json TraceToJson(const DecompositionTrace& t) {
  json j;
  j["ell"] = t.ell;
  j["L"] = t.L;
  j["block_size"] = t.block_size;
  j["m"] = t.schedule.m;
  j["r"] = t.schedule.r;
  j["q"] = std::vector<int64_t>(t.schedule.q.begin() + 1, t.schedule.q.end());
  j["d0"] = t.d0;
  j["premises_hold"] = t.premises_hold;
  j["size_bound_holds"] = t.size_bound_holds;
  j["d_x"] = ToJson(t.d_x);
  j["d_y"] = ToJson(t.d_y);
  j["copies"] = t.factor.copies.size();
  json stages = json::array();
  for (const StageRecord& s : t.stages) {
    stages.push_back({{"index", s.index},
                      {"anchor_side", SideName(s.anchor_side)},
                      {"q", s.q},
                      {"pool_size", s.pool_size},
                      {"padding_size", s.padding_size},
                      {"a_size", s.a_size},
                      {"b_size", s.b_size},
                      {"corrupt_copy_count", s.corrupt_copy_count},
                      {"corrupt_x_size", s.corrupt_x_size},
                      {"corrupt_y_size", s.corrupt_y_size},
                      {"d_x", s.d_x},
                      {"d_y", s.d_y},
                      {"premise_ok", s.premise_ok}});
  }
  j["stages"] = stages;
  return j;
}

void RunDecompose(const DecomposeArgs& a, std::ostream& out) {
  const BipartiteGraph g = ReadGraphFile(a.graph);
  ApproxMode mode = ApproxMode::kAuto;
  if (a.mode == "a") mode = ApproxMode::kCaseA;
  if (a.mode == "b") mode = ApproxMode::kCaseB;
  if (a.mode == "direct") mode = ApproxMode::kDirect;
  const ApproxResult r = ApproxNmp(g, a.eps, mode);
  const char* name = r.which == ApproxCase::kA   ? "a"
                     : r.which == ApproxCase::kB ? "b"
                                                 : "direct";
  out << "case: " << name << '\n'
      << "deleted_x: " << r.x_hat.size() << " (fraction " << r.f_hat << ")\n"
      << "deleted_y: " << r.y_hat.size() << " (fraction " << r.g_hat << ")\n";
  if (r.case_b) {
    const CaseBParams& b = *r.case_b;
    out << "alpha: " << b.alpha << " eta: " << b.eta << " width: " << b.width
        << " K: " << b.K << " N: " << b.N << '\n';
  }
  out << "factor: " << r.factor.copies.size() << " copies of T_{" << r.factor.ell << ","
      << r.factor.L << "}" << (r.factor_verified ? " (verified)" : " (NOT verified)")
      << '\n';
  if (r.trace) out << "stages: " << r.trace->stages.size() << '\n';
  out << "remainder_nmp: " << (r.remainder_nmp_verified ? "yes" : "no") << '\n';
  if (!a.trace_json.empty()) {
    json j;
    j["case"] = name;
    j["x_hat"] = ToJson(r.x_hat);
    j["y_hat"] = ToJson(r.y_hat);
    j["f_hat"] = r.f_hat;
    j["g_hat"] = r.g_hat;
    j["factor_verified"] = r.factor_verified;
    j["remainder_nmp_verified"] = r.remainder_nmp_verified;
    if (r.case_b) {
      const CaseBParams& b = *r.case_b;
      j["case_b"] = {{"alpha", b.alpha}, {"eta", b.eta}, {"width", b.width},
                     {"K", b.K},         {"N", b.N},     {"ell", b.ell},
                     {"L", b.L}};
    }
    if (r.trace) j["trace"] = TraceToJson(*r.trace);
    WriteText(a.trace_json, j.dump(2) + "\n");
  }
  if (!a.emit_factor.empty()) WriteText(a.emit_factor, SerializeFactor(r.factor));
}

// ---- sweep / star / greedy -------------------------------------------------

struct SweepArgs {
  int k = 0;
  int n = 0;
  std::string p_list;
  std::string c_list;
  int trials = 1;
  uint64_t seed = 0;
  std::string out;
  int threads = 1;
};

void RunSweep(const SweepArgs& a, std::ostream& out) {
  SweepConfig cfg;
  cfg.k = a.k;
  cfg.n = a.n;
  if (!a.p_list.empty()) cfg.p_grid = ParseDoubleList(a.p_list, "--p-list");
  if (!a.c_list.empty()) cfg.c_grid = ParseDoubleList(a.c_list, "--c-list");
  cfg.trials = a.trials;
  cfg.master_seed = a.seed;
  cfg.threads = a.threads;
  const std::vector<SweepRow> rows = ThresholdSweep(cfg);
  const std::string csv = FormatSweepCsv(cfg, rows);
  if (a.out == "-") {
    out << csv;
    return;
  }
  WriteText(a.out, csv);
  for (const SweepRow& r : rows) {
    out << "p=" << r.p << " c=" << r.c << " phat=" << r.phat << " ["
        << r.wilson_lo << ", " << r.wilson_hi << "]\n";
  }
}

void RunStar(const std::string& path, std::ostream& out) {
  const StarArray array = ParseStarArray(ReadText(path));
  const StarSolution sol = SolveStarArray(array);
  const std::string problem = ValidateStarSolution(array, sol);
  Ensure(problem.empty(), "star solution failed validation: " + problem);
  out << FormatStarSolution(array, sol);
}

struct GreedyArgs {
  std::string graph;
  int r = 1;
  std::string sigma;
  std::string pi;
  bool bruteforce = false;
  bool release_partial = false;
};

std::vector<int> Identity(int size) {
  std::vector<int> v(size);
  for (int i = 0; i < size; ++i) v[i] = i;
  return v;
}

void RunGreedy(const GreedyArgs& a, std::ostream& out) {
  const BipartiteGraph g = ReadGraphFile(a.graph);
  if (a.bruteforce) {
    const RhoResult r = RhoRBruteforce(g, a.r, a.release_partial);
    out << "rho: " << r.rho.ToString() << '\n'
        << "value: " << r.value << '\n'
        << "pi: " << Join(r.pi, ',') << '\n'
        << "sigma: " << Join(r.sigma, ',') << '\n';
    return;
  }
  const std::vector<int> sigma =
      a.sigma.empty() ? Identity(g.left_size()) : ToInts(ParseIntList(a.sigma, "--sigma"));
  const std::vector<int> pi =
      a.pi.empty() ? Identity(g.right_size()) : ToInts(ParseIntList(a.pi, "--pi"));
  out << "m_r: " << GreedyMatchingValue(g, a.r, sigma, pi, a.release_partial) << '\n';
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Normalized matching property toolkit", "nmp"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide NMP with a certificate");
  c->add_option("graph", check.graph, "Graph file")->required();
  c->add_flag("--json", check.json, "Print JSON");
  c->add_option("--emit-multiplicity", check.multiplicity_out,
                "Write 'm <x> <y> <value>' lines");

  TreeArgs tree;
  auto* t = app.add_subcommand("tree", "Build the Euclidean tree T_{l,L}");
  t->add_option("--l", tree.ell, "Left side")->required();
  t->add_option("--L", tree.L, "Right side")->required();
  t->add_option("--emit", tree.emit, "Write the tree to a graph file");
  t->add_flag("--verify", tree.verify, "Check connectivity, edge count and NMP");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate graphs");
  g->require_subcommand(1);
  auto* gnp = g->add_subcommand("gnp", "Random bipartite graph G(k, n, p)");
  gnp->add_option("--k", gen.k)->required();
  gnp->add_option("--n", gen.n)->required();
  gnp->add_option("--p", gen.p)->required();
  gnp->add_option("--seed", gen.seed)->required();
  gnp->add_option("--out", gen.out, "Output file (default stdout)");
  auto* cay = g->add_subcommand("sumcayley", "Sum graph over F_q with d-th powers");
  cay->add_option("--q", gen.q)->required();
  cay->add_option("--d", gen.d)->required();
  bool x_all = false, y_all = false;
  auto* xa = cay->add_flag("--x-all", x_all, "X = F_q (default)");
  cay->add_option("--x-list", gen.x_list, "File listing X")->excludes(xa);
  auto* ya = cay->add_flag("--y-all", y_all, "Y = F_q (default)");
  cay->add_option("--y-list", gen.y_list, "File listing Y")->excludes(ya);
  cay->add_option("--out", gen.out, "Output file (default stdout)");
  auto* pg2 = g->add_subcommand("pg2", "Point-line incidences of PG(2, q)");
  pg2->add_option("--q", gen.q)->required();
  pg2->add_option("--out", gen.out, "Output file (default stdout)");

  PseudoArgs ps;
  auto* vp = app.add_subcommand("verify-pseudo", "Thomason (p, eps) check");
  vp->add_option("graph", ps.graph)->required();
  vp->add_option("--p", ps.p, "Density, e.g. 12/133 or 0.09");
  vp->add_option("--eps", ps.eps, "Codegree slack");
  vp->add_flag("--estimate", ps.estimate, "Estimate (p, eps) from the graph");

  auto* au = app.add_subcommand("audit", "Sampled mixing inequality audit");
  au->add_option("graph", ps.graph)->required();
  au->add_option("--p", ps.p);
  au->add_option("--eps", ps.eps);
  au->add_option("--samples", ps.samples)->default_val(1000);
  au->add_option("--seed", ps.seed)->required();
  auto* ab = au->add_flag("--alon-bourgain", ps.alon_bourgain, "Use the |H|/q form");
  au->add_option("--q", ps.field_q, "Field size")->needs(ab);
  au->add_option("--h-size", ps.h_size, "Subgroup size")->needs(ab);

  auto* rd = app.add_subcommand("robust-delete", "Random deletion keeping pseudorandomness");
  rd->add_option("graph", ps.graph)->required();
  rd->add_option("--p0", ps.p0)->required();
  rd->add_option("--eps0", ps.eps0)->required();
  rd->add_option("--eps", ps.eps)->required();
  rd->add_option("--D", ps.d)->required();
  rd->add_option("--seed", ps.seed)->required();
  rd->add_option("--max-attempts", ps.max_attempts)->default_val(100);
  rd->add_option("--out", ps.out, "Write the remaining graph");

  DecomposeArgs dec;
  auto* dc = app.add_subcommand("decompose", "Delete few vertices so NMP holds");
  dc->add_option("graph", dec.graph)->required();
  dc->add_option("--eps", dec.eps)->required();
  dc->add_option("--mode", dec.mode)
      ->check(CLI::IsMember({"auto", "a", "b", "direct"}))
      ->default_val("auto");
  dc->add_option("--trace-json", dec.trace_json);
  dc->add_option("--emit-factor", dec.emit_factor);

  SweepArgs sw;
  auto* sp = app.add_subcommand("sweep", "Monte Carlo NMP probability sweep");
  sp->add_option("--k", sw.k)->required();
  sp->add_option("--n", sw.n)->required();
  auto* pl = sp->add_option("--p-list", sw.p_list, "Probabilities a,b,c");
  auto* cl = sp->add_option("--c-list", sw.c_list, "Multipliers of ln(n)/k");
  pl->excludes(cl);
  sp->add_option("--trials", sw.trials)->required();
  sp->add_option("--seed", sw.seed)->required();
  sp->add_option("--out", sw.out, "CSV file, or - for stdout")->required();
  sp->add_option("--threads", sw.threads)->default_val(1);

  std::string star_file;
  auto* st = app.add_subcommand("star", "Fill a 0/* array with equal row and column sums");
  st->add_option("file", star_file)->required();

  GreedyArgs gr;
  auto* gd = app.add_subcommand("greedy", "Greedy r-matching value");
  gd->add_option("graph", gr.graph)->required();
  gd->add_option("--r", gr.r)->required();
  auto* sg = gd->add_option("--sigma", gr.sigma, "Order of X, comma separated");
  auto* pio = gd->add_option("--pi", gr.pi, "Order of Y, comma separated");
  gd->add_flag("--bruteforce", gr.bruteforce, "Exact rho_r by enumeration")
      ->excludes(sg)
      ->excludes(pio);
  gd->add_flag("--release-partial", gr.release_partial,
               "Release claims of vertices that fall short");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (c->parsed()) {
      RunCheck(check, out);
    } else if (t->parsed()) {
      return RunTree(tree, out);
    } else if (gnp->parsed()) {
      EmitGraph(gen, GenGnp(gen.k, gen.n, gen.p, gen.seed),
                {"generator=gnp k=" + std::to_string(gen.k) + " n=" + std::to_string(gen.n) +
                 " p=" + std::to_string(gen.p) + " seed=" + std::to_string(gen.seed) +
                 " rng=" + std::string(kRngAlgorithm)},
                out);
    } else if (cay->parsed()) {
      EmitGraph(gen, GenSumCayley(gen.q, gen.d, SpecFrom(gen.x_list), SpecFrom(gen.y_list)),
                {"generator=sumcayley q=" + std::to_string(gen.q) +
                 " d=" + std::to_string(gen.d)},
                out);
    } else if (pg2->parsed()) {
      EmitGraph(gen, GenPg2(gen.q), {"generator=pg2 q=" + std::to_string(gen.q)}, out);
    } else if (vp->parsed()) {
      RunVerifyPseudo(ps, out);
    } else if (au->parsed()) {
      RunAudit(ps, out);
    } else if (rd->parsed()) {
      RunRobustDelete(ps, out);
    } else if (dc->parsed()) {
      RunDecompose(dec, out);
    } else if (sp->parsed()) {
      if (sw.p_list.empty() && sw.c_list.empty()) {
        err << "sweep: one of --p-list or --c-list is required\n";
        return kExitUsage;
      }
      RunSweep(sw, out);
    } else if (st->parsed()) {
      RunStar(star_file, out);
    } else if (gd->parsed()) {
      RunGreedy(gr, out);
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kFormat:
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      case ErrorCode::kInternal:
        err << "internal error: " << e.what() << '\n';
        return kExitDomain;
      default:
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
  }
  return kExitOk;
}

}  // namespace nmp
