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

#include "nmp/decompose.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "nmp/error.h"
#include "nmp/nmp_check.h"

namespace nmp {
namespace {

int Idx(Side side) { return side == Side::kLeft ? 0 : 1; }

Edge Oriented(Side anchor_side, int anchor, int leaf) {
  return anchor_side == Side::kLeft ? Edge{anchor, leaf} : Edge{leaf, anchor};
}

VertexSet Range(Side side, int lo, int hi) {
  std::vector<int> members(std::max(0, hi - lo));
  std::iota(members.begin(), members.end(), lo);
  return VertexSet(side, std::move(members));
}

VertexSet Union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> members;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(members));
  return VertexSet(a.side(), std::move(members));
}

// One growing copy of T_i; pos[side][p] is the host vertex at tree position p.
struct CopyState {
  bool alive = true;
  std::array<std::vector<int>, 2> pos;
  std::vector<Edge> edges;
};

TreeCopy ToTreeCopy(const CopyState& state) {
  TreeCopy copy;
  copy.left = VertexSet(Side::kLeft, state.pos[0]);
  copy.right = VertexSet(Side::kRight, state.pos[1]);
  copy.edges = state.edges;
  copy.left_map = state.pos[0];
  copy.right_map = state.pos[1];
  return copy;
}

}  // namespace

ThrillExtraction ExtractThrill(const BipartiteGraph& graph, const VertexSet& u,
                               const VertexSet& v, int q, Side anchor_side) {
  Require(u.side() == Side::kLeft && v.side() == Side::kRight,
          "ExtractThrill expects U on the left and V on the right");
  Require(q >= 1, "fan width q must be positive");
  CheckInRange(graph, u);
  CheckInRange(graph, v);
  const VertexSet& anchors = anchor_side == Side::kLeft ? u : v;
  const VertexSet& leaves = anchor_side == Side::kLeft ? v : u;
  Require(static_cast<int64_t>(leaves.size()) == int64_t{q} * anchors.size(),
          "thrill extraction needs |leaves| = q*|anchors|; got " +
              std::to_string(leaves.size()) + " leaves, " +
              std::to_string(anchors.size()) + " anchors, q=" + std::to_string(q));
  const Side leaf_side = Opposite(anchor_side);
  std::vector<char> available(graph.SideSize(leaf_side), 0);
  for (int w : leaves) available[w] = 1;

  ThrillExtraction out;
  out.anchor_side = anchor_side;
  out.q = q;
  out.thrill.anchor_side = anchor_side;
  out.thrill.q = q;
  std::vector<int> unspanned_anchors;
  std::vector<int> claim;
  for (int a : anchors) {
    claim.clear();
    for (int w : graph.Neighbors(anchor_side, a)) {
      if (!available[w]) continue;
      claim.push_back(w);
      if (static_cast<int>(claim.size()) == q) break;
    }
    if (static_cast<int>(claim.size()) < q) {
      unspanned_anchors.push_back(a);
      continue;
    }
    for (int w : claim) available[w] = 0;
    out.thrill.fans.push_back({anchor_side, a, claim});
  }
  std::vector<int> unspanned_leaves;
  for (int w : leaves) {
    if (available[w]) unspanned_leaves.push_back(w);
  }
  VertexSet anchor_rest(anchor_side, std::move(unspanned_anchors));
  VertexSet leaf_rest(leaf_side, std::move(unspanned_leaves));
  if (anchor_side == Side::kLeft) {
    out.a = std::move(anchor_rest);
    out.b = std::move(leaf_rest);
  } else {
    out.a = std::move(leaf_rest);
    out.b = std::move(anchor_rest);
  }
  return out;
}

DecompositionTrace EuclidFactorDecompose(const BipartiteGraph& graph, double eps) {
  const int k = graph.left_size();
  const int n = graph.right_size();
  Require(k >= 1 && n >= 1, "decomposition needs both sides nonempty");
  Require(eps >= 0.0, "eps must be nonnegative");
  DecompositionTrace trace;
  const int t = std::gcd(k, n);
  trace.block_size = t;
  trace.ell = k / t;
  trace.L = n / t;
  trace.schedule = ComputeEuclidSchedule(trace.ell, trace.L);
  trace.d0 = 2.0 * eps * std::max(k, n);
  const EuclidSchedule& sched = trace.schedule;
  const std::array<int, 2> side_size{k, n};

  std::array<std::vector<int>, 2> owner{std::vector<int>(k, -1),
                                        std::vector<int>(n, -1)};
  std::array<std::vector<int>, 2> position{std::vector<int>(k, -1),
                                           std::vector<int>(n, -1)};
  std::array<std::vector<char>, 2> deleted{std::vector<char>(k, 0),
                                           std::vector<char>(n, 0)};
  std::array<int64_t, 2> dcount{0, 0};
  std::vector<CopyState> copies;
  auto erase = [&](int side, int v) {
    Ensure(!deleted[side][v], "vertex deleted twice");
    deleted[side][v] = 1;
    ++dcount[side];
  };

  trace.premises_hold = true;
  for (int i = 1; i <= sched.m; ++i) {
    const Side s = StageAnchorSide(sched, i);
    const int si = Idx(s);
    const int oi = 1 - si;
    const int q = static_cast<int>(sched.q[i]);
    const int ri = static_cast<int>(sched.r[i]);
    const int rprev = static_cast<int>(sched.r[i - 1]);
    const int rnext = static_cast<int>(sched.r[i + 1]);
    StageRecord rec;
    rec.index = i;
    rec.anchor_side = s;
    rec.q = q;

    if (i == 1) {
      for (int v = 0; v < t; ++v) {
        CopyState state;
        state.pos[si] = {v};
        owner[si][v] = static_cast<int>(copies.size());
        position[si][v] = 0;
        copies.push_back(std::move(state));
      }
    }
    std::vector<int> pool;
    for (int v = 0; v < t * ri; ++v) {
      if (deleted[si][v]) continue;
      Ensure(owner[si][v] >= 0 && copies[owner[si][v]].alive,
             "anchor without a live copy");
      pool.push_back(v);
    }
    rec.pool_size = static_cast<int>(pool.size());
    std::vector<int> fresh;
    for (int v = t * rprev; v < t * rnext; ++v) {
      Ensure(owner[oi][v] < 0 && !deleted[oi][v], "fresh vertex already used");
      fresh.push_back(v);
    }
    const int64_t padding = int64_t{q} * dcount[si];
    if (padding > static_cast<int64_t>(fresh.size())) {
      Fail(ErrorCode::kDomain,
           "stage " + std::to_string(i) + ": padding needs " +
               std::to_string(padding) + " fresh " + std::string(SideName(Opposite(s))) +
               " vertices but only " + std::to_string(fresh.size()) + " exist");
    }
    rec.padding_size = static_cast<int>(padding);
    std::vector<int> leaves(fresh.begin() + padding, fresh.end());
    VertexSet anchor_set(s, pool);
    VertexSet leaf_set(Opposite(s), std::move(leaves));
    const ThrillExtraction ext =
        s == Side::kLeft ? ExtractThrill(graph, anchor_set, leaf_set, q, s)
                         : ExtractThrill(graph, leaf_set, anchor_set, q, s);
    rec.a_size = ext.a.size();
    rec.b_size = ext.b.size();

    for (const Fan& fan : ext.thrill.fans) {
      const int c = owner[si][fan.anchor];
      const int a = position[si][fan.anchor];
      CopyState& state = copies[c];
      state.pos[oi].resize(rnext, -1);
      for (int j = 0; j < q; ++j) {
        const int leaf = fan.leaves[j];
        const int p = rprev + a + j * ri;
        state.pos[oi][p] = leaf;
        owner[oi][leaf] = c;
        position[oi][leaf] = p;
        state.edges.push_back(Oriented(s, fan.anchor, leaf));
      }
    }
    const VertexSet& lost_anchors = s == Side::kLeft ? ext.a : ext.b;
    const VertexSet& lost_leaves = s == Side::kLeft ? ext.b : ext.a;
    std::vector<int> corrupt;
    for (int v : lost_anchors) corrupt.push_back(owner[si][v]);
    std::sort(corrupt.begin(), corrupt.end());
    corrupt.erase(std::unique(corrupt.begin(), corrupt.end()), corrupt.end());
    std::array<int, 2> corrupt_size{0, 0};
    for (int c : corrupt) {
      copies[c].alive = false;
      for (int side = 0; side < 2; ++side) {
        for (int v : copies[c].pos[side]) {
          if (v < 0) continue;
          erase(side, v);
          ++corrupt_size[side];
        }
      }
    }
    for (int64_t j = 0; j < padding; ++j) erase(oi, fresh[j]);
    for (int v : lost_leaves) erase(oi, v);
    rec.corrupt_copy_count = static_cast<int>(corrupt.size());
    rec.corrupt_x_size = corrupt_size[0];
    rec.corrupt_y_size = corrupt_size[1];

    const int64_t prev_dx = i == 1 ? 0 : trace.stages.back().d_x;
    const int64_t prev_dy = i == 1 ? 0 : trace.stages.back().d_y;
    rec.d_x = dcount[0];
    rec.d_y = dcount[1];
    if (s == Side::kLeft) {
      Ensure(rec.d_x == prev_dx + rec.corrupt_x_size, "d_x recurrence broken");
      Ensure(rec.d_y == prev_dy + rec.padding_size + rec.b_size + rec.corrupt_y_size,
             "d_y recurrence broken");
      rec.premise_ok = rec.a_size <= trace.d0 / q && rec.b_size <= trace.d0;
    } else {
      Ensure(rec.d_y == prev_dy + rec.corrupt_y_size, "d_y recurrence broken");
      Ensure(rec.d_x == prev_dx + rec.padding_size + rec.a_size + rec.corrupt_x_size,
             "d_x recurrence broken");
      rec.premise_ok = rec.a_size <= q * trace.d0 && rec.b_size <= trace.d0;
    }
    trace.premises_hold &= rec.premise_ok;

    // Every touched vertex is either in a live copy or deleted, never both.
    const std::array<int, 2> touched{si == 0 ? t * ri : t * rnext,
                                     si == 1 ? t * ri : t * rnext};
    for (int side = 0; side < 2; ++side) {
      for (int v = 0; v < side_size[side]; ++v) {
        const bool live = owner[side][v] >= 0 && copies[owner[side][v]].alive;
        if (v < touched[side]) {
          Ensure(live != static_cast<bool>(deleted[side][v]),
                 "stage " + std::to_string(i) + " conservation broken");
        } else {
          Ensure(!live && !deleted[side][v], "vertex touched out of order");
        }
      }
    }
    for (const CopyState& state : copies) {
      if (!state.alive) continue;
      Ensure(static_cast<int>(state.pos[si].size()) == ri &&
                 static_cast<int>(state.pos[oi].size()) == rnext,
             "live copy has the wrong shape");
      Ensure(std::find(state.pos[oi].begin(), state.pos[oi].end(), -1) ==
                 state.pos[oi].end(),
             "live copy has an empty slot");
    }
    trace.stages.push_back(rec);
  }

  std::array<std::vector<int>, 2> gone;
  for (int side = 0; side < 2; ++side) {
    for (int v = 0; v < side_size[side]; ++v) {
      if (deleted[side][v]) gone[side].push_back(v);
    }
  }
  trace.d_x = VertexSet(Side::kLeft, std::move(gone[0]));
  trace.d_y = VertexSet(Side::kRight, std::move(gone[1]));
  trace.factor.ell = trace.ell;
  trace.factor.L = trace.L;
  for (const CopyState& state : copies) {
    if (state.alive) trace.factor.copies.push_back(ToTreeCopy(state));
  }
  if (trace.factor.copies.empty()) {
    Fail(ErrorCode::kDomain, "every tree copy was corrupted; the remainder is empty");
  }
  const int64_t keep_x = k - trace.d_x.size();
  const int64_t keep_y = n - trace.d_y.size();
  Ensure(keep_x * trace.L == keep_y * trace.ell, "ratio identity broken");
  const double m = sched.m;
  trace.size_bound_holds = trace.d_x.size() <= trace.ell * m * trace.d0 &&
                           trace.d_y.size() <= trace.L * m * trace.d0;
  return trace;
}

TreeFactor ReindexFactor(const TreeFactor& factor, const InducedSubgraph& sub) {
  auto lookup = [](const std::vector<int>& map, int v, char side) {
    auto it = std::lower_bound(map.begin(), map.end(), v);
    Require(it != map.end() && *it == v,
            std::string(1, side) + std::to_string(v) + " is not in the subgraph");
    return static_cast<int>(it - map.begin());
  };
  TreeFactor out;
  out.ell = factor.ell;
  out.L = factor.L;
  for (const TreeCopy& copy : factor.copies) {
    TreeCopy c;
    std::vector<int> left, right;
    for (int x : copy.left) left.push_back(lookup(sub.left_map, x, 'x'));
    for (int y : copy.right) right.push_back(lookup(sub.right_map, y, 'y'));
    c.left = VertexSet(Side::kLeft, std::move(left));
    c.right = VertexSet(Side::kRight, std::move(right));
    for (const Edge& e : copy.edges) {
      c.edges.push_back({lookup(sub.left_map, e.x, 'x'), lookup(sub.right_map, e.y, 'y')});
    }
    for (int x : copy.left_map) c.left_map.push_back(lookup(sub.left_map, x, 'x'));
    for (int y : copy.right_map) c.right_map.push_back(lookup(sub.right_map, y, 'y'));
    out.copies.push_back(std::move(c));
  }
  return out;
}

ApproxResult ApproxNmp(const BipartiteGraph& graph, double eps, ApproxMode mode) {
  const int k = graph.left_size();
  const int n = graph.right_size();
  Require(k >= 1 && n >= 1, "approximation needs both sides nonempty");
  Require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  if (mode == ApproxMode::kAuto) {
    mode = n > k / std::sqrt(eps) ? ApproxMode::kCaseA : ApproxMode::kCaseB;
  }
  ApproxResult result;
  if (mode == ApproxMode::kCaseA) {
    result.which = ApproxCase::kA;
    if (n < k) {
      Fail(ErrorCode::kDomain, "case (a) needs n >= k; got k=" + std::to_string(k) +
                                   ", n=" + std::to_string(n));
    }
    const int q = n / k;
    const int r = n - q * k;
    const VertexSet c_y = Range(Side::kRight, n - r, n);
    const ThrillExtraction ext = ExtractThrill(
        graph, AllVertices(graph, Side::kLeft), Range(Side::kRight, 0, n - r), q,
        Side::kLeft);
    result.x_hat = ext.a;
    result.y_hat = Union(c_y, ext.b);
    result.factor.ell = 1;
    result.factor.L = q;
    for (const Fan& fan : ext.thrill.fans) {
      TreeCopy copy;
      copy.left = VertexSet(Side::kLeft, {fan.anchor});
      copy.right = VertexSet(Side::kRight, fan.leaves);
      for (int y : fan.leaves) copy.edges.push_back({fan.anchor, y});
      copy.left_map = {fan.anchor};
      copy.right_map = copy.right.members();
      result.factor.copies.push_back(std::move(copy));
    }
  } else if (mode == ApproxMode::kCaseB) {
    result.which = ApproxCase::kB;
    CaseBParams params;
    params.alpha = std::pow(eps, 0.75);
    params.eta = std::pow(eps, 0.25);
    params.width = static_cast<int>(std::floor(params.alpha * n));
    if (params.width < 1) {
      Fail(ErrorCode::kDomain, "floor(eps^(3/4) * n) = 0; n=" + std::to_string(n) +
                                   " is too small for eps=" + std::to_string(eps));
    }
    const int w = params.width;
    const double n_lo = n * (1.0 - params.alpha);
    params.N = (n / w) * w;
    if (params.N < std::ceil(n_lo) || params.N <= 0) {
      Fail(ErrorCode::kDomain, "no positive multiple of " + std::to_string(w) +
                                   " in [n(1-alpha), n] = [" + std::to_string(n_lo) +
                                   ", " + std::to_string(n) + "]");
    }
    const double k_lo = k * (1.0 - 2.0 * params.eta);
    const double k_hi = k * (1.0 - params.eta);
    const int k_hi_int = static_cast<int>(std::floor(k_hi));
    params.K = k_hi_int >= 0 ? (k_hi_int / w) * w : 0;
    if (params.K <= 0 || params.K < std::ceil(k_lo)) {
      Fail(ErrorCode::kDomain, "no positive multiple of " + std::to_string(w) +
                                   " in [k(1-2eta), k(1-eta)] = [" +
                                   std::to_string(k_lo) + ", " + std::to_string(k_hi) +
                                   "]");
    }
    // Keeping the lowest indices means trimmed and host indices coincide.
    const InducedSubgraph trimmed = Induce(graph, Range(Side::kLeft, 0, params.K),
                                           Range(Side::kRight, 0, params.N));
    DecompositionTrace trace = EuclidFactorDecompose(trimmed.graph, eps);
    params.ell = trace.ell;
    params.L = trace.L;
    result.x_hat = Union(trace.d_x, Range(Side::kLeft, params.K, k));
    result.y_hat = Union(trace.d_y, Range(Side::kRight, params.N, n));
    result.factor = trace.factor;
    result.case_b = params;
    result.trace = std::move(trace);
  } else {
    result.which = ApproxCase::kDirect;
    DecompositionTrace trace = EuclidFactorDecompose(graph, eps);
    result.x_hat = trace.d_x;
    result.y_hat = trace.d_y;
    result.factor = trace.factor;
    result.trace = std::move(trace);
  }
  result.f_hat = static_cast<double>(result.x_hat.size()) / k;
  result.g_hat = static_cast<double>(result.y_hat.size()) / n;
  if (result.x_hat.size() == k || result.y_hat.size() == n) {
    Fail(ErrorCode::kDomain, "the remainder is empty");
  }
  const InducedSubgraph rest = Induce(graph, Complement(graph, result.x_hat),
                                      Complement(graph, result.y_hat));
  result.factor_verified =
      VerifyTreeFactor(rest.graph, ReindexFactor(result.factor, rest),
                       result.factor.ell, result.factor.L, true)
          .ok;
  result.remainder_nmp_verified = CheckNmp(rest.graph).verdict == Verdict::kHasNmp;
  return result;
}

}  // namespace nmp
