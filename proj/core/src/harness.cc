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

#include "nmp/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <thread>

#include "nmp/error.h"
#include "nmp/nmp_check.h"
#include "nmp/pseudorandom.h"
#include "nmp/rng.h"
#include "nmp/version.h"

namespace nmp {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

bool Skippable(std::string_view line) {
  size_t i = line.find_first_not_of(" \t");
  return i == std::string_view::npos || line[i] == '#';
}

[[noreturn]] void FormatFail(size_t line, const std::string& message) {
  Fail(ErrorCode::kFormat, "line " + std::to_string(line) + ": " + message);
}

}  // namespace

WilsonInterval Wilson(int64_t successes, int64_t trials, double z) {
  Require(trials >= 1 && successes >= 0 && successes <= trials,
          "Wilson interval needs 0 <= successes <= trials, trials >= 1");
  const double nt = static_cast<double>(trials);
  const double phat = successes / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (phat + z2 / (2.0 * nt)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<SweepRow> ThresholdSweep(const SweepConfig& config) {
  Require(config.k >= 1 && config.n >= 1, "sweep needs k, n >= 1");
  Require(config.trials >= 1, "sweep needs at least one trial");
  Require(config.threads >= 1, "thread count must be positive");
  const double log_n = std::log(static_cast<double>(config.n));
  std::vector<SweepRow> rows;
  if (!config.p_grid.empty()) {
    for (double p : config.p_grid) {
      rows.push_back({p, log_n > 0 ? p * config.k / log_n : NAN});
    }
  } else {
    Require(!config.c_grid.empty(), "sweep grid is empty");
    Require(config.n >= 2, "c multipliers need n >= 2");
    for (double c : config.c_grid) rows.push_back({c * log_n / config.k, c});
  }
  for (const SweepRow& row : rows) {
    Require(row.p >= 0.0 && row.p <= 1.0,
            "grid probability " + Num(row.p) + " is outside [0, 1]");
  }
  const int64_t total = static_cast<int64_t>(rows.size()) * config.trials;
  std::vector<char> success(total, 0);
  std::atomic<int64_t> next{0};
  auto work = [&] {
    for (int64_t task = next++; task < total; task = next++) {
      const int64_t point = task / config.trials;
      const int64_t trial = task % config.trials;
      BipartiteGraph g = GenGnp(config.k, config.n, rows[point].p,
                                DeriveSeed(config.master_seed, trial));
      success[task] = CheckNmp(g).verdict == Verdict::kHasNmp;
    }
  };
  if (config.threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < config.threads; ++i) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    SweepRow& row = rows[i];
    row.trials = config.trials;
    row.successes = static_cast<int>(std::accumulate(
        success.begin() + i * config.trials, success.begin() + (i + 1) * config.trials, 0));
    row.phat = static_cast<double>(row.successes) / row.trials;
    WilsonInterval ci = Wilson(row.successes, row.trials);
    row.wilson_lo = ci.lo;
    row.wilson_hi = ci.hi;
  }
  return rows;
}

std::string FormatSweepCsv(const SweepConfig& config,
                           const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "# nmp-sweep-csv v1 tool=" << kVersion << " rng=" << kRngAlgorithm
      << " seed=" << config.master_seed << " k=" << config.k << " n=" << config.n
      << '\n';
  out << "p,c,trials,successes,phat,wilson_lo,wilson_hi\n";
  for (const SweepRow& row : rows) {
    out << Num(row.p) << ',' << Num(row.c) << ',' << row.trials << ',' << row.successes
        << ',' << Num(row.phat) << ',' << Num(row.wilson_lo) << ','
        << Num(row.wilson_hi) << '\n';
  }
  return out.str();
}

StarArray ParseStarArray(std::string_view text) {
  StarArray array;
  const std::vector<std::string_view> lines = Lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (Skippable(line)) continue;
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (array.rows == 0) {
      array.cols = static_cast<int>(line.size());
    } else if (static_cast<int>(line.size()) != array.cols) {
      FormatFail(i + 1, "row has " + std::to_string(line.size()) +
                            " cells, expected " + std::to_string(array.cols));
    }
    for (char ch : line) {
      if (ch != '0' && ch != '*') {
        FormatFail(i + 1, std::string("unexpected character '") + ch + "'");
      }
      array.star.push_back(ch == '*');
    }
    ++array.rows;
  }
  if (array.rows == 0) Fail(ErrorCode::kFormat, "star array has no rows");
  return array;
}

BipartiteGraph StarArrayGraph(const StarArray& array) {
  Require(array.rows >= 1 && array.cols >= 1, "star array must be nonempty");
  std::vector<Edge> edges;
  for (int r = 0; r < array.rows; ++r) {
    for (int c = 0; c < array.cols; ++c) {
      if (array.IsStar(r, c)) edges.push_back({r, c});
    }
  }
  return BipartiteGraph(array.rows, array.cols, std::move(edges));
}

StarSolution SolveStarArray(const StarArray& array) {
  const BipartiteGraph g = StarArrayGraph(array);
  const NmpCertificate cert = CheckNmp(g);
  StarSolution sol;
  sol.row_sum = cert.row_sum;
  sol.col_sum = cert.col_sum;
  if (cert.verdict == Verdict::kViolated) {
    sol.witness_rows = cert.witness;
    sol.witness_columns = Neighborhood(g, cert.witness);
    return sol;
  }
  sol.feasible = true;
  sol.fill.assign(static_cast<size_t>(array.rows) * array.cols, 0);
  size_t i = 0;
  for (const Edge& e : g.Edges()) {
    sol.fill[static_cast<size_t>(e.x) * array.cols + e.y] = cert.multiplicity[i++];
  }
  return sol;
}

std::string ValidateStarSolution(const StarArray& array,
                                 const StarSolution& solution) {
  const int64_t rows = array.rows;
  const int64_t cols = array.cols;
  if (!solution.feasible) {
    const auto& s = solution.witness_rows;
    if (s.empty()) return "empty witness";
    std::vector<char> hit(cols, 0);
    for (int r : s) {
      if (r < 0 || r >= rows) return "witness row out of range";
      for (int c = 0; c < cols; ++c) hit[c] |= array.IsStar(r, c);
    }
    const int64_t reach = std::count(hit.begin(), hit.end(), 1);
    if (reach != solution.witness_columns.size()) return "witness columns are wrong";
    if (!(rows * reach < cols * s.size())) return "witness is not violating";
    return "";
  }
  if (static_cast<int64_t>(solution.fill.size()) != rows * cols) return "fill has the wrong size";
  if (solution.row_sum <= 0 || solution.col_sum <= 0) return "sums must be positive";
  if (solution.row_sum * rows != solution.col_sum * cols) return "R*k != C*n";
  for (int64_t r = 0; r < rows; ++r) {
    int64_t sum = 0;
    for (int64_t c = 0; c < cols; ++c) {
      const int64_t v = solution.fill[r * cols + c];
      if (v < 0) return "negative entry";
      if (v != 0 && !array.IsStar(static_cast<int>(r), static_cast<int>(c))) {
        return "nonzero entry in a 0 cell at (" + std::to_string(r) + ", " +
               std::to_string(c) + ")";
      }
      sum += v;
    }
    if (sum != solution.row_sum) return "row " + std::to_string(r) + " sums to " + std::to_string(sum);
  }
  for (int64_t c = 0; c < cols; ++c) {
    int64_t sum = 0;
    for (int64_t r = 0; r < rows; ++r) sum += solution.fill[r * cols + c];
    if (sum != solution.col_sum) return "column " + std::to_string(c) + " sums to " + std::to_string(sum);
  }
  return "";
}

std::string FormatStarSolution(const StarArray& array,
                               const StarSolution& solution) {
  std::ostringstream out;
  if (!solution.feasible) {
    out << "infeasible\nrows:";
    for (int r : solution.witness_rows) out << ' ' << r;
    out << "\ncolumns:";
    for (int c : solution.witness_columns) out << ' ' << c;
    out << '\n';
    return out.str();
  }
  for (int r = 0; r < array.rows; ++r) {
    for (int c = 0; c < array.cols; ++c) {
      if (c > 0) out << ' ';
      out << solution.fill[static_cast<size_t>(r) * array.cols + c];
    }
    out << '\n';
  }
  out << "R=" << solution.row_sum << " C=" << solution.col_sum << '\n';
  return out.str();
}

StarFill ParseStarFill(std::string_view text) {
  StarFill fill;
  bool trailer = false;
  const std::vector<std::string_view> lines = Lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Skippable(lines[i])) continue;
    if (trailer) FormatFail(i + 1, "content after the R=/C= trailer");
    std::string line(lines[i]);
    if (line.rfind("R=", 0) == 0) {
      long long r = 0, c = 0;
      char extra = 0;
      if (std::sscanf(line.c_str(), "R=%lld C=%lld %c", &r, &c, &extra) != 2) {
        FormatFail(i + 1, "malformed trailer");
      }
      fill.row_sum = r;
      fill.col_sum = c;
      trailer = true;
      continue;
    }
    std::istringstream in(line);
    std::vector<int64_t> row;
    std::string token;
    while (in >> token) {
      size_t used = 0;
      int64_t v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v < 0) FormatFail(i + 1, "bad entry '" + token + "'");
      row.push_back(v);
    }
    if (fill.rows == 0) {
      fill.cols = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != fill.cols) {
      FormatFail(i + 1, "ragged row");
    }
    fill.values.insert(fill.values.end(), row.begin(), row.end());
    ++fill.rows;
  }
  if (!trailer) Fail(ErrorCode::kFormat, "missing R=/C= trailer");
  return fill;
}

namespace {

void CheckPermutation(const std::vector<int>& perm, int size, const char* name) {
  Require(static_cast<int>(perm.size()) == size,
          std::string(name) + " must have " + std::to_string(size) + " entries");
  std::vector<char> seen(size, 0);
  for (int v : perm) {
    Require(v >= 0 && v < size && !seen[v], std::string(name) + " is not a permutation");
    seen[v] = 1;
  }
}

// Neighbor lists of every x ordered by position in pi.
std::vector<std::vector<int>> OrderByPi(const BipartiteGraph& g,
                                        const std::vector<int>& pi) {
  std::vector<int> rank(g.right_size());
  for (int i = 0; i < g.right_size(); ++i) rank[pi[i]] = i;
  std::vector<std::vector<int>> lists(g.left_size());
  for (int x = 0; x < g.left_size(); ++x) {
    auto nbrs = g.LeftNeighbors(x);
    lists[x].assign(nbrs.begin(), nbrs.end());
    std::sort(lists[x].begin(), lists[x].end(),
              [&](int a, int b) { return rank[a] < rank[b]; });
  }
  return lists;
}

int RunGreedy(const std::vector<std::vector<int>>& lists, int right_size, int r,
              const std::vector<int>& sigma, bool release_partial,
              std::vector<char>& claimed) {
  claimed.assign(right_size, 0);
  std::vector<int> mine;
  int full = 0;
  for (int x : sigma) {
    mine.clear();
    for (int y : lists[x]) {
      if (claimed[y]) continue;
      claimed[y] = 1;
      mine.push_back(y);
      if (static_cast<int>(mine.size()) == r) break;
    }
    if (static_cast<int>(mine.size()) == r) {
      ++full;
    } else if (release_partial) {
      for (int y : mine) claimed[y] = 0;
    }
  }
  return full;
}

}  // namespace

int GreedyMatchingValue(const BipartiteGraph& graph, int r,
                        const std::vector<int>& sigma,
                        const std::vector<int>& pi, bool release_partial) {
  Require(r >= 1, "r must be positive");
  CheckPermutation(sigma, graph.left_size(), "sigma");
  CheckPermutation(pi, graph.right_size(), "pi");
  std::vector<char> claimed;
  return RunGreedy(OrderByPi(graph, pi), graph.right_size(), r, sigma,
                   release_partial, claimed);
}

RhoResult RhoRBruteforce(const BipartiteGraph& graph, int r, bool release_partial) {
  const int k = graph.left_size();
  const int n = graph.right_size();
  Require(r >= 1, "r must be positive");
  Require(k >= 1 && n >= 1, "rho needs both sides nonempty");
  Require(k <= kRhoMaxSide && n <= kRhoMaxSide,
          "exact rho enumerates k!*n! orders; sides are limited to " +
              std::to_string(kRhoMaxSide));
  std::vector<int> pi(n), sigma(k);
  std::iota(pi.begin(), pi.end(), 0);
  RhoResult best;
  best.value = -1;
  std::vector<char> claimed;
  do {
    const auto lists = OrderByPi(graph, pi);
    std::iota(sigma.begin(), sigma.end(), 0);
    int worst = k + 1;
    std::vector<int> worst_sigma;
    do {
      int v = RunGreedy(lists, n, r, sigma, release_partial, claimed);
      if (v < worst) {
        worst = v;
        worst_sigma = sigma;
        if (worst <= best.value) break;  // this pi cannot beat the best one
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (worst > best.value) {
      best.value = worst;
      best.pi = pi;
      best.sigma = worst_sigma;
      if (worst == k) break;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  best.rho = Rational(best.value, k);
  return best;
}

}  // namespace nmp
