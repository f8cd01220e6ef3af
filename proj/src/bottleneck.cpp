/// @file
/// @brief Bottleneck distance by binary search over candidate radii.

#include "tma/bottleneck.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "tma/errors.h"
#include "tma/io.h"
#include "tma/parallel.h"

namespace tma {

namespace {

double linf(const DiagramPoint& p, const DiagramPoint& q) {
  return std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death));
}

double diagonal_gap(const DiagramPoint& p) { return (p.death - p.birth) / 2.0; }

/// Bipartite graph for radius r. Left: points of A, then diagonal copies of
/// B's points. Right: points of B, then diagonal copies of A's points.
class MatchingGraph {
 public:
  MatchingGraph(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b) : a_(a), b_(b) {}

  bool edge(std::size_t left, std::size_t right, double r) const {
    const std::size_t n = a_.size();
    const std::size_t m = b_.size();
    if (left < n && right < m) return linf(a_[left], b_[right]) <= r;
    if (left < n) return right - m == left && diagonal_gap(a_[left]) <= r;
    if (right < m) return left - n == right && diagonal_gap(b_[right]) <= r;
    return true;
  }

  /// Perfect matching as match[left] = right, or empty if none exists.
  std::vector<std::size_t> perfect_matching(double r) const {
    const std::size_t size = a_.size() + b_.size();
    std::vector<std::size_t> owner(size, kNone);
    for (std::size_t left = 0; left < size; ++left) {
      std::vector<bool> seen(size, false);
      if (!augment(left, r, owner, seen)) return {};
    }
    std::vector<std::size_t> match(size);
    for (std::size_t right = 0; right < size; ++right) match[owner[right]] = right;
    return match;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t left, double r, std::vector<std::size_t>& owner, std::vector<bool>& seen) const {
    const std::size_t size = owner.size();
    for (std::size_t right = 0; right < size; ++right) {
      if (seen[right] || !edge(left, right, r)) continue;
      seen[right] = true;
      if (owner[right] == kNone || augment(owner[right], r, owner, seen)) {
        owner[right] = left;
        return true;
      }
    }
    return false;
  }

  const std::vector<DiagramPoint>& a_;
  const std::vector<DiagramPoint>& b_;
};

struct Split {
  std::vector<DiagramPoint> finite;
  std::vector<std::size_t> finite_index;
  std::vector<std::size_t> infinite_index;
  std::vector<std::size_t> on_diagonal;
};

Split split(const PersistenceDiagram& d) {
  Split s;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const DiagramPoint& p = d.points[i];
    if (p.is_infinite()) {
      s.infinite_index.push_back(i);
    } else if (p.birth == p.death) {
      s.on_diagonal.push_back(i);
    } else {
      s.finite.push_back(p);
      s.finite_index.push_back(i);
    }
  }
  std::stable_sort(s.infinite_index.begin(), s.infinite_index.end(), [&](std::size_t x, std::size_t y) {
    return d.points[x].birth < d.points[y].birth;
  });
  return s;
}

}  // namespace

BottleneckResult bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.dimension != b.dimension) throw DimensionMismatch("diagrams of different homology dimension");
  const Split sa = split(a);
  const Split sb = split(b);
  BottleneckResult result;
  Matching& w = result.witness;

  double infinite_cost = 0.0;
  const std::size_t common = std::min(sa.infinite_index.size(), sb.infinite_index.size());
  for (std::size_t k = 0; k < common; ++k) {
    const double c = std::abs(a.points[sa.infinite_index[k]].birth - b.points[sb.infinite_index[k]].birth);
    w.pairs.push_back({sa.infinite_index[k], sb.infinite_index[k], c});
    infinite_cost = std::max(infinite_cost, c);
  }
  for (std::size_t k = common; k < sa.infinite_index.size(); ++k) {
    w.pairs.push_back({sa.infinite_index[k], std::nullopt, kUnbounded});
    infinite_cost = kUnbounded;
  }
  for (std::size_t k = common; k < sb.infinite_index.size(); ++k) {
    w.pairs.push_back({std::nullopt, sb.infinite_index[k], kUnbounded});
    infinite_cost = kUnbounded;
  }

  const std::size_t n = sa.finite.size();
  const std::size_t m = sb.finite.size();
  std::vector<double> candidates{0.0};
  for (const DiagramPoint& p : sa.finite) candidates.push_back(diagonal_gap(p));
  for (const DiagramPoint& q : sb.finite) candidates.push_back(diagonal_gap(q));
  for (const DiagramPoint& p : sa.finite) {
    for (const DiagramPoint& q : sb.finite) candidates.push_back(linf(p, q));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const MatchingGraph graph(sa.finite, sb.finite);
  // Matching everything to the diagonal is always feasible at the largest gap.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (graph.perfect_matching(candidates[mid]).empty() && n + m > 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const double finite_cost = candidates[lo];
  const std::vector<std::size_t> match = graph.perfect_matching(finite_cost);
  for (std::size_t left = 0; left < match.size(); ++left) {
    const std::size_t right = match[left];
    if (left < n && right < m) {
      w.pairs.push_back({sa.finite_index[left], sb.finite_index[right], linf(sa.finite[left], sb.finite[right])});
    } else if (left < n) {
      w.pairs.push_back({sa.finite_index[left], std::nullopt, diagonal_gap(sa.finite[left])});
    } else if (right < m) {
      w.pairs.push_back({std::nullopt, sb.finite_index[right], diagonal_gap(sb.finite[right])});
    }
  }
  for (std::size_t i : sa.on_diagonal) w.pairs.push_back({i, std::nullopt, 0.0});
  for (std::size_t j : sb.on_diagonal) w.pairs.push_back({std::nullopt, j, 0.0});

  for (const MatchedPair& p : w.pairs) w.cost = std::max(w.cost, p.cost);
  result.distance = std::max(finite_cost, infinite_cost);
  return result;
}

DistanceMatrix pairwise_bottleneck(std::span<const PersistenceDiagram> diagrams) {
  const std::size_t n = diagrams.size();
  for (const PersistenceDiagram& d : diagrams) {
    if (d.dimension != diagrams.front().dimension) throw DimensionMismatch("diagrams of different homology dimension");
  }
  DistanceMatrix m(n, std::vector<double>(n, 0.0));
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  parallel_for(cells.size(), [&](std::size_t k) {
    const auto [i, j] = cells[k];
    m[i][j] = m[j][i] = bottleneck(diagrams[i], diagrams[j]).distance;
  });
  return m;
}

std::string matrix_csv(const LabeledMatrix& matrix) {
  std::string out = "label";
  for (const std::string& l : matrix.labels) out += "," + l;
  out += "\n";
  for (std::size_t i = 0; i < matrix.values.size(); ++i) {
    out += matrix.labels[i];
    for (double v : matrix.values[i]) out += "," + format_double(v);
    out += "\n";
  }
  return out;
}

std::string matrix_json(const LabeledMatrix& matrix) {
  nlohmann::ordered_json j;
  j["mapping"] = matrix.mapping;
  j["dim"] = matrix.dimension;
  j["scale"] = "diameter";
  j["infinite_points"] = "matched by birth; unequal counts give inf";
  j["labels"] = matrix.labels;
  j["matrix"] = nlohmann::ordered_json::array();
  for (const auto& row : matrix.values) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (double v : row) {
      if (std::isinf(v)) {
        r.push_back("inf");
      } else {
        r.push_back(v);
      }
    }
    j["matrix"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace tma
