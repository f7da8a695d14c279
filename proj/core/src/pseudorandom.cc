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

#include "nmp/pseudorandom.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "nmp/error.h"
#include "nmp/rng.h"

namespace nmp {
namespace {

using boost::multiprecision::cpp_int;

int64_t MulMod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t PowMod(int64_t base, int64_t exp, int64_t m) {
  int64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<int64_t> PrimeFactors(int64_t v) {
  std::vector<int64_t> out;
  for (int64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      out.push_back(f);
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

void RequirePrime(int64_t q) {
  Require(IsPrime(q), "q=" + std::to_string(q) + " is not prime");
  Require(q <= (int64_t{1} << 20), "q=" + std::to_string(q) + " is too large");
}

std::vector<int64_t> Resolve(const SubsetSpec& spec, int64_t q, char name) {
  std::vector<int64_t> out;
  if (spec.all) {
    out.resize(q);
    for (int64_t i = 0; i < q; ++i) out[i] = i;
    return out;
  }
  out = spec.elements;
  std::sort(out.begin(), out.end());
  for (size_t i = 0; i < out.size(); ++i) {
    Require(out[i] >= 0 && out[i] < q, std::string(1, name) + " element " +
                                           std::to_string(out[i]) +
                                           " is outside F_q");
    Require(i == 0 || out[i] != out[i - 1], std::string(1, name) +
                                                " lists element " +
                                                std::to_string(out[i]) +
                                                " twice");
  }
  return out;
}

// Left neighborhoods packed into 64-bit words.
class LeftBitsets {
 public:
  explicit LeftBitsets(const BipartiteGraph& g)
      : words_((g.right_size() + 63) / 64),
        bits_(static_cast<size_t>(g.left_size()) * words_, 0) {
    for (int x = 0; x < g.left_size(); ++x) {
      for (int y : g.LeftNeighbors(x)) {
        bits_[static_cast<size_t>(x) * words_ + y / 64] |= uint64_t{1} << (y % 64);
      }
    }
  }
  int Codegree(int a, int b) const {
    const uint64_t* pa = &bits_[static_cast<size_t>(a) * words_];
    const uint64_t* pb = &bits_[static_cast<size_t>(b) * words_];
    int count = 0;
    for (int w = 0; w < words_; ++w) count += std::popcount(pa[w] & pb[w]);
    return count;
  }

 private:
  int words_;
  std::vector<uint64_t> bits_;
};

cpp_int Big(int64_t v) { return cpp_int(v); }

// degree >= p*n
bool DegreeOk(int64_t degree, const Rational& p, int64_t n) {
  return Big(degree) * p.den() >= Big(p.num()) * n;
}

// codegree <= (1+eps)*p^2*n
bool CodegreeOk(int64_t codegree, const PseudoParams& params, int64_t n) {
  const Rational& p = params.p;
  const Rational& e = params.eps;
  cpp_int lhs = Big(codegree) * p.den() * p.den() * e.den();
  cpp_int rhs = (Big(e.den()) + e.num()) * p.num() * p.num() * n;
  return lhs <= rhs;
}

}  // namespace

bool IsPrime(int64_t value) {
  if (value < 2) return false;
  for (int64_t f = 2; f * f <= value; ++f) {
    if (value % f == 0) return false;
  }
  return true;
}

int64_t PrimitiveRoot(int64_t q) {
  RequirePrime(q);
  if (q == 2) return 1;
  const std::vector<int64_t> factors = PrimeFactors(q - 1);
  for (int64_t g = 2; g < q; ++g) {
    bool generator = std::all_of(factors.begin(), factors.end(), [&](int64_t f) {
      return PowMod(g, (q - 1) / f, q) != 1;
    });
    if (generator) return g;
  }
  Fail(ErrorCode::kInternal, "no primitive root found");
}

std::vector<int64_t> PowerResidues(int64_t q, int64_t d) {
  RequirePrime(q);
  Require(d >= 1 && (q - 1) % d == 0,
          "d=" + std::to_string(d) + " does not divide q-1=" + std::to_string(q - 1));
  const int64_t g = PrimitiveRoot(q);
  const int64_t step = PowMod(g, d, q);
  std::vector<int64_t> h;
  int64_t v = 1;
  for (int64_t i = 0; i < (q - 1) / d; ++i) {
    h.push_back(v);
    v = MulMod(v, step, q);
  }
  std::sort(h.begin(), h.end());
  return h;
}

BipartiteGraph GenGnp(int k, int n, double p, uint64_t seed) {
  Require(k >= 0 && n >= 0, "negative side size");
  Require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < n; ++y) {
      if (rng.Bernoulli(p)) edges.push_back({x, y});
    }
  }
  return BipartiteGraph(k, n, std::move(edges));
}

BipartiteGraph GenSumCayley(int64_t q, int64_t d, const SubsetSpec& x_spec,
                            const SubsetSpec& y_spec) {
  const std::vector<int64_t> h = PowerResidues(q, d);
  std::vector<char> in_h(q, 0);
  for (int64_t v : h) in_h[v] = 1;
  const std::vector<int64_t> xs = Resolve(x_spec, q, 'X');
  const std::vector<int64_t> ys = Resolve(y_spec, q, 'Y');
  std::vector<Edge> edges;
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = 0; j < ys.size(); ++j) {
      if (in_h[(xs[i] + ys[j]) % q]) {
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return BipartiteGraph(static_cast<int>(xs.size()), static_cast<int>(ys.size()),
                        std::move(edges));
}

BipartiteGraph GenPg2(int64_t q) {
  RequirePrime(q);
  Require(q <= 1000, "PG(2, q) generator is limited to q <= 1000");
  std::vector<std::array<int64_t, 3>> reps;
  for (int64_t a = 0; a < q; ++a) {
    for (int64_t b = 0; b < q; ++b) reps.push_back({1, a, b});
  }
  for (int64_t b = 0; b < q; ++b) reps.push_back({0, 1, b});
  reps.push_back({0, 0, 1});
  const int size = static_cast<int>(reps.size());
  std::vector<Edge> edges;
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      const auto& p = reps[x];
      const auto& l = reps[y];
      if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0) {
        edges.push_back({x, y});
      }
    }
  }
  return BipartiteGraph(size, size, std::move(edges));
}

PseudoReport VerifyThomason(const BipartiteGraph& graph,
                            const PseudoParams& params) {
  const int k = graph.left_size();
  const int64_t n = graph.right_size();
  Require(k >= 2, "Thomason verification needs at least two left vertices");
  Require(params.p > Rational(0) && params.p <= Rational(1),
          "p must lie in (0, 1]");
  Require(params.eps >= Rational(0), "eps must be nonnegative");
  PseudoReport report;
  if (params.eps >= Rational(1)) {
    report.warnings.push_back("eps=" + params.eps.ToString() +
                              " is at least 1; eps is normally below 1");
  }
  report.min_left_degree = graph.Degree(Side::kLeft, 0);
  report.degree_ok = true;
  for (int x = 0; x < k; ++x) {
    const int d = graph.Degree(Side::kLeft, x);
    report.min_left_degree = std::min(report.min_left_degree, d);
    if (report.degree_ok && !DegreeOk(d, params.p, n)) {
      report.degree_ok = false;
      report.violating_vertex = x;
    }
  }
  // Codegree thresholds are checked against the running maximum only, so
  // CodegreeOk runs once per new maximum.
  const LeftBitsets bits(graph);
  report.codegree_ok = true;
  int largest_ok = -1;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const int c = bits.Codegree(a, b);
      if (c > report.max_codegree || report.max_codegree_pair.first < 0) {
        report.max_codegree = c;
        report.max_codegree_pair = {a, b};
      }
      if (report.codegree_ok && c > largest_ok) {
        if (CodegreeOk(c, params, n)) {
          largest_ok = c;
        } else {
          report.codegree_ok = false;
          report.violating_pair = std::make_pair(a, b);
        }
      }
    }
  }
  report.pass = report.degree_ok && report.codegree_ok;
  return report;
}

PseudoParams EstimateThomasonParams(const BipartiteGraph& graph) {
  const int k = graph.left_size();
  const int64_t n = graph.right_size();
  Require(k >= 2, "estimation needs at least two left vertices");
  int min_degree = graph.Degree(Side::kLeft, 0);
  for (int x = 0; x < k; ++x) {
    const int d = graph.Degree(Side::kLeft, x);
    Require(d >= 1, "left vertex " + std::to_string(x) + " is isolated");
    min_degree = std::min(min_degree, d);
  }
  const LeftBitsets bits(graph);
  int max_codegree = 0;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      max_codegree = std::max(max_codegree, bits.Codegree(a, b));
    }
  }
  PseudoParams params;
  params.p = Rational(min_degree, n);
  const Rational ratio(max_codegree * n, int64_t{min_degree} * min_degree);
  params.eps = ratio > Rational(1) ? ratio - Rational(1) : Rational(0);
  return params;
}

MixingCheck CheckMixingPair(const BipartiteGraph& graph,
                            const PseudoParams& params,
                            const MixingOptions& options, const VertexSet& a,
                            const VertexSet& b) {
  Require(a.side() == Side::kLeft && b.side() == Side::kRight,
          "mixing check expects A on the left and B on the right");
  CheckInRange(graph, a);
  CheckInRange(graph, b);
  MixingCheck check;
  check.a = a.size();
  check.b = b.size();
  check.edges = EdgeCountBetween(graph, a, b);
  const int64_t sa = check.a;
  const int64_t sb = check.b;
  const int64_t e = check.edges;
  const int64_t n = graph.right_size();
  if (options.form == BoundForm::kThomason) {
    const int64_t P = params.p.num(), Q = params.p.den();
    const int64_t E = params.eps.num(), F = params.eps.den();
    // F (eQ - Pab)^2 <= P n a b (FQ + E P a)
    cpp_int dev = Big(e) * Q - Big(P) * sa * sb;
    cpp_int lhs = Big(F) * dev * dev;
    cpp_int rhs = Big(P) * n * sa * sb * (Big(F) * Q + Big(E) * P * sa);
    check.ok = lhs <= rhs;
    const double p = params.p.ToDouble();
    const double eps = params.eps.ToDouble();
    check.deviation = std::fabs(static_cast<double>(e) - p * sa * sb);
    check.bound = std::sqrt(p * n * sa * sb * (1.0 + eps * p * sa));
  } else {
    const int64_t q = options.field_q;
    const int64_t h = options.h_size;
    Require(q >= 1 && h >= 1, "Alon-Bourgain form needs q >= 1 and |H| >= 1");
    // (q e - a b h)^2 < q^3 a b
    cpp_int dev = Big(q) * e - Big(sa) * sb * h;
    check.ok = dev * dev < Big(q) * q * q * sa * sb;
    check.deviation =
        std::fabs(static_cast<double>(e) - static_cast<double>(sa * sb) * h / q);
    check.bound = std::sqrt(static_cast<double>(q) * sa * sb);
  }
  return check;
}

MixingAuditReport MixingAudit(const BipartiteGraph& graph,
                              const PseudoParams& params,
                              const MixingOptions& options) {
  const int k = graph.left_size();
  const int n = graph.right_size();
  Require(options.samples >= 0, "sample count must be nonnegative");
  Require(k >= 1 && n >= 1, "mixing audit needs both sides nonempty");
  int64_t a_lo = 1;
  if (options.form == BoundForm::kThomason) {
    PseudoReport check = VerifyThomason(graph, params);
    Require(check.pass, "graph is not Thomason pseudorandom with p=" +
                            params.p.ToString() + ", eps=" + params.eps.ToString());
    a_lo = (params.p.den() + params.p.num() - 1) / params.p.num();
    Require(a_lo <= k, "ceil(1/p)=" + std::to_string(a_lo) + " exceeds k=" +
                           std::to_string(k));
  }
  MixingAuditReport report;
  report.samples = options.samples;
  for (int64_t i = 0; i < options.samples; ++i) {
    Rng rng(DeriveSeed(options.seed, static_cast<uint64_t>(i)));
    const int a = static_cast<int>(rng.UniformInt(a_lo, k));
    const int b = static_cast<int>(rng.UniformInt(1, n));
    VertexSet sa(Side::kLeft, rng.SampleWithoutReplacement(k, a));
    VertexSet sb(Side::kRight, rng.SampleWithoutReplacement(n, b));
    MixingCheck check = CheckMixingPair(graph, params, options, sa, sb);
    if (!check.ok) ++report.violations;
    const double ratio = check.deviation / check.bound;
    if (i == 0 || ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst = check;
    }
  }
  return report;
}

RobustDeleteResult RobustDelete(const BipartiteGraph& graph,
                                const RobustDeleteOptions& options) {
  const int k = graph.left_size();
  const int64_t n = graph.right_size();
  const Rational& eps = options.eps;
  Require(eps > Rational(0) && eps < Rational(1, 2),
          "eps=" + eps.ToString() + " must satisfy 0 < eps < 1/2");
  Require(options.p0 > Rational(0) && options.p0 <= Rational(1),
          "p0 must lie in (0, 1]");
  Require(options.p0 * options.p0 * Rational(k) >= Rational(1),
          "p0=" + options.p0.ToString() + " is below 1/sqrt(k)");
  Require(options.max_attempts >= 1, "max_attempts must be positive");
  const Rational alpha_n = eps * eps * eps * Rational(n);
  const int d = options.d;
  Require(Rational(2 * int64_t{d}) >= alpha_n && Rational(d) <= alpha_n,
          "D=" + std::to_string(d) + " is outside [eps^3 n/2, eps^3 n] with eps^3 n=" +
              std::to_string(alpha_n.ToDouble()));
  Require(d >= 1 && d <= n, "D must lie in [1, n]");
  const PseudoReport initial = VerifyThomason(graph, {options.p0, options.eps0});
  Require(initial.pass, "graph is not Thomason pseudorandom with p0=" +
                            options.p0.ToString() + ", eps0=" +
                            options.eps0.ToString());

  RobustDeleteResult result;
  const Rational tail = eps * options.p0;  // t = tail * (n - D) / D
  result.threshold_t = tail.ToDouble() * static_cast<double>(n - d) / d;
  const double t = result.threshold_t;
  result.bad_bound = 2.0 * k * std::exp(-2.0 * t * t * d);
  const double c = 49.0 / 64.0;
  result.eta = 2.0 * std::exp(-c / eps.ToDouble());
  result.eta_bound_applies = 2.0 * t * t * d >= c / eps.ToDouble();

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    Rng rng(DeriveSeed(options.seed, static_cast<uint64_t>(attempt)));
    std::vector<int> sample = rng.SampleWithoutReplacement(static_cast<int>(n), d);
    std::vector<char> in_t(n, 0);
    for (int y : sample) in_t[y] = 1;
    std::vector<int> bad;
    for (int u = 0; u < k; ++u) {
      int64_t hits = 0;
      for (int y : graph.LeftNeighbors(u)) hits += in_t[y];
      const int64_t deg = graph.Degree(Side::kLeft, u);
      // hits >= (deg/n + t) * D, scaled by n * tail.den()
      cpp_int lhs = Big(hits) * n * tail.den();
      cpp_int rhs = Big(d) * deg * tail.den() + Big(tail.num()) * (n - d) * n;
      if (lhs >= rhs) bad.push_back(u);
    }
    if (static_cast<double>(bad.size()) <= result.bad_bound) {
      result.attempts = attempt + 1;
      result.c_x = VertexSet(Side::kLeft, std::move(bad));
      result.c_y = VertexSet(Side::kRight, std::move(sample));
      break;
    }
  }
  if (result.attempts == 0) {
    Fail(ErrorCode::kResourceExhausted,
         "no acceptable T within " + std::to_string(options.max_attempts) +
             " attempts; re-seed and retry");
  }
  result.p1 = options.p0 * (Rational(1) - eps);
  result.eps1 = Rational(5) * (options.eps0 + Rational(3) * eps);
  InducedSubgraph rest = Induce(graph, Complement(graph, result.c_x),
                                Complement(graph, result.c_y));
  if (rest.graph.left_size() >= 2) {
    result.reverify = VerifyThomason(rest.graph, {result.p1, result.eps1});
  } else {
    result.warnings.push_back("fewer than two left vertices remain");
  }
  result.warnings.insert(result.warnings.end(), result.reverify.warnings.begin(),
                         result.reverify.warnings.end());
  return result;
}

}  // namespace nmp
