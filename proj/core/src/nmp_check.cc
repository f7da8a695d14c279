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

#include "nmp/nmp_check.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "nmp/error.h"
#include "nmp/flow.h"

namespace nmp {
namespace {

// Lexicographic order on sorted member lists, for bitmask subsets of equal size.
bool LexLess(uint32_t a, uint32_t b) {
  uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  return verdict == Verdict::kHasNmp ? "has_nmp" : "violated";
}

bool IsViolatingWitness(const BipartiteGraph& graph, const VertexSet& set) {
  const int64_t own = graph.SideSize(set.side());
  const int64_t other = graph.SideSize(Opposite(set.side()));
  const int64_t nbrs = Neighborhood(graph, set).size();
  // |N(S)| / other < |S| / own
  return own * nbrs < other * static_cast<int64_t>(set.size());
}

NmpCertificate CheckNmp(const BipartiteGraph& graph) {
  const int k = graph.left_size();
  const int n = graph.right_size();
  Require(k >= 1 && n >= 1, "CheckNmp requires both sides to be nonempty");
  const int64_t g = std::gcd(k, n);
  const int64_t row = n / g;
  const int64_t col = k / g;

  const int source = 0;
  const int sink = k + n + 1;
  FlowNetwork net(k + n + 2, source, sink);
  for (int x = 0; x < k; ++x) net.AddArc(source, 1 + x, row);
  std::vector<int> edge_arc;
  edge_arc.reserve(graph.edge_count());
  const int64_t edge_cap = std::min(row, col);
  for (int x = 0; x < k; ++x) {
    for (int y : graph.LeftNeighbors(x)) {
      edge_arc.push_back(net.AddArc(1 + x, 1 + k + y, edge_cap));
    }
  }
  for (int y = 0; y < n; ++y) net.AddArc(1 + k + y, sink, col);

  const int64_t flow = net.MaxFlow();
  NmpCertificate cert;
  cert.row_sum = row;
  cert.col_sum = col;
  if (flow == row * k) {
    cert.verdict = Verdict::kHasNmp;
    cert.multiplicity.reserve(edge_arc.size());
    for (int arc : edge_arc) cert.multiplicity.push_back(net.flow(arc));
    return cert;
  }

  // Reading the witness off the min cut. With edge capacity k/g (k <= n) every
  // reachable x drags its whole neighborhood along at no extra cost, so the
  // reachable left set works directly. With edge capacity n/g (k > n) a left
  // vertex with a cut edge pays for itself, so keep only reachable x whose
  // neighborhood is entirely reachable.
  const std::vector<char> reach = net.MinCutSourceSide();
  std::vector<int> members;
  for (int x = 0; x < k; ++x) {
    if (!reach[1 + x]) continue;
    if (k > n) {
      auto nbrs = graph.LeftNeighbors(x);
      bool closed = std::all_of(nbrs.begin(), nbrs.end(),
                                [&](int y) { return reach[1 + k + y] != 0; });
      if (!closed) continue;
    }
    members.push_back(x);
  }
  cert.verdict = Verdict::kViolated;
  cert.witness = VertexSet(Side::kLeft, std::move(members));
  cert.witness_neighborhood_size = Neighborhood(graph, cert.witness).size();
  Ensure(IsViolatingWitness(graph, cert.witness),
         "min-cut witness does not violate NMP");
  return cert;
}

std::string ValidateCertificate(const BipartiteGraph& graph,
                                const NmpCertificate& cert) {
  const int64_t k = graph.left_size();
  const int64_t n = graph.right_size();
  const int64_t g = std::gcd(k, n);
  if (cert.row_sum != n / g || cert.col_sum != k / g) {
    return "row/column sums are not n/g and k/g";
  }
  if (cert.row_sum * k != cert.col_sum * n) return "row_sum*k != col_sum*n";
  if (cert.verdict == Verdict::kHasNmp) {
    if (static_cast<int64_t>(cert.multiplicity.size()) != graph.edge_count()) {
      return "multiplicity length differs from edge count";
    }
    std::vector<int64_t> rows(k, 0), cols(n, 0);
    size_t i = 0;
    for (const Edge& e : graph.Edges()) {
      int64_t m = cert.multiplicity[i++];
      if (m < 0) return "negative multiplicity";
      rows[e.x] += m;
      cols[e.y] += m;
    }
    for (int64_t x = 0; x < k; ++x) {
      if (rows[x] != cert.row_sum) {
        return "left vertex " + std::to_string(x) + " sums to " +
               std::to_string(rows[x]);
      }
    }
    for (int64_t y = 0; y < n; ++y) {
      if (cols[y] != cert.col_sum) {
        return "right vertex " + std::to_string(y) + " sums to " +
               std::to_string(cols[y]);
      }
    }
    return "";
  }
  if (cert.witness.side() != Side::kLeft) return "witness is not a left set";
  if (cert.witness.empty()) return "empty witness";
  const int nbrs = Neighborhood(graph, cert.witness).size();
  if (nbrs != cert.witness_neighborhood_size) {
    return "recorded witness neighborhood size is wrong";
  }
  if (!(k * nbrs < n * cert.witness.size())) {
    return "witness does not satisfy k*|N(S)| < n*|S|";
  }
  return "";
}

BruteforceResult NmpOracleBruteforce(const BipartiteGraph& graph) {
  const int k = graph.left_size();
  const int n = graph.right_size();
  Require(k >= 1 && n >= 1, "oracle requires both sides to be nonempty");
  Require(k <= kBruteforceMaxLeft,
          "oracle enumerates 2^k subsets; k=" + std::to_string(k) + " exceeds " +
              std::to_string(kBruteforceMaxLeft));
  const int words = (n + 63) / 64;
  std::vector<uint64_t> single(static_cast<size_t>(k) * words, 0);
  for (int x = 0; x < k; ++x) {
    for (int y : graph.LeftNeighbors(x)) {
      single[static_cast<size_t>(x) * words + y / 64] |= uint64_t{1} << (y % 64);
    }
  }
  const uint32_t subsets = uint32_t{1} << k;
  // N(S) for every S, built from N(S minus its lowest element).
  std::vector<uint64_t> nbr(static_cast<size_t>(subsets) * words, 0);
  bool found = false;
  uint32_t best_mask = 0;
  int best_size = 0;
  int best_nbrs = 0;
  int64_t best_value = 0;
  for (uint32_t mask = 1; mask < subsets; ++mask) {
    const uint32_t rest = mask & (mask - 1);
    const int low = std::countr_zero(mask);
    int count = 0;
    for (int w = 0; w < words; ++w) {
      uint64_t bits = nbr[static_cast<size_t>(rest) * words + w] |
                      single[static_cast<size_t>(low) * words + w];
      nbr[static_cast<size_t>(mask) * words + w] = bits;
      count += std::popcount(bits);
    }
    const int size = std::popcount(mask);
    const int64_t value = static_cast<int64_t>(k) * count - static_cast<int64_t>(n) * size;
    // Ratio count/size against best_nbrs/best_size.
    const int64_t lhs = static_cast<int64_t>(count) * best_size;
    const int64_t rhs = static_cast<int64_t>(best_nbrs) * size;
    bool better = !found || lhs < rhs ||
                  (lhs == rhs &&
                   (size < best_size || (size == best_size && LexLess(mask, best_mask))));
    if (better) {
      found = true;
      best_mask = mask;
      best_size = size;
      best_nbrs = count;
      best_value = value;
    }
  }
  std::vector<int> members;
  for (int x = 0; x < k; ++x) {
    if (best_mask >> x & 1) members.push_back(x);
  }
  BruteforceResult out;
  out.verdict = best_value >= 0 ? Verdict::kHasNmp : Verdict::kViolated;
  out.worst_set = VertexSet(Side::kLeft, std::move(members));
  out.worst_neighborhood_size = best_nbrs;
  out.worst_deficiency = best_value;
  return out;
}

bool KleitmanIndependentCheck(const BipartiteGraph& graph,
                              const IndependentPair& pair) {
  Require(pair.left.side() == Side::kLeft && pair.right.side() == Side::kRight,
          "independent pair sides are swapped");
  CheckInRange(graph, pair.left);
  CheckInRange(graph, pair.right);
  for (int x : pair.left) {
    for (int y : graph.LeftNeighbors(x)) {
      Require(!pair.right.Contains(y), "pair is not independent: edge (" +
                                           std::to_string(x) + ", " +
                                           std::to_string(y) + ")");
    }
  }
  const int64_t k = graph.left_size();
  const int64_t n = graph.right_size();
  return n * pair.left.size() + k * pair.right.size() <= n * k;
}

VertexSet WitnessTransfer(const BipartiteGraph& graph, const VertexSet& right) {
  Require(right.side() == Side::kRight, "WitnessTransfer expects a right set");
  Require(IsViolatingWitness(graph, right),
          "T does not witness a violation: need n*|N(T)| < k*|T|");
  VertexSet out = Complement(graph, Neighborhood(graph, right));
  Ensure(IsViolatingWitness(graph, out), "transferred witness is not violating");
  return out;
}

}  // namespace nmp
