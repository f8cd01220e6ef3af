/// @file
/// @brief Naive agglomerative clustering with Lance-Williams updates.

#include "tma/clustering.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <json.hpp>

#include "tma/errors.h"

namespace tma {

std::string_view to_string(Linkage linkage) {
  switch (linkage) {
    case Linkage::kSingle:
      return "single";
    case Linkage::kComplete:
      return "complete";
    case Linkage::kAverage:
      return "average";
  }
  return "single";
}

std::optional<Linkage> parse_linkage(std::string_view text) {
  if (text == "single") return Linkage::kSingle;
  if (text == "complete") return Linkage::kComplete;
  if (text == "average") return Linkage::kAverage;
  return std::nullopt;
}

void validate_distance_matrix(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw MalformedMatrix("distance matrix is not square");
    if (dist[i][i] != 0.0) throw MalformedMatrix("nonzero diagonal entry at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = dist[i][j];
      if (std::isnan(v) || v < 0.0) throw MalformedMatrix("negative or undefined entry");
      if (!(std::abs(v - dist[j][i]) <= 1e-12) && v != dist[j][i]) throw MalformedMatrix("matrix is not symmetric");
    }
  }
}

Dendrogram agglomerate(const DistanceMatrix& dist, Linkage linkage, std::vector<std::string> labels) {
  validate_distance_matrix(dist);
  const std::size_t n = dist.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw MalformedMatrix("label count does not match matrix size");

  Dendrogram d;
  d.linkage = linkage;
  d.leaf_labels = std::move(labels);

  // Active clusters by id; distances keyed on (smaller id, larger id).
  std::map<std::size_t, std::size_t> sizes;
  std::map<std::pair<std::size_t, std::size_t>, double> between;
  for (std::size_t i = 0; i < n; ++i) {
    sizes[i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) between[{i, j}] = dist[i][j];
  }
  auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };

  std::size_t next_id = n;
  while (sizes.size() > 1) {
    auto best = between.begin();
    for (auto it = between.begin(); it != between.end(); ++it) {
      if (it->second < best->second) best = it;
    }
    const auto [a, b] = best->first;
    const double height = best->second;
    const std::size_t id = next_id++;
    const std::size_t na = sizes[a];
    const std::size_t nb = sizes[b];
    d.merges.push_back({a, b, height, id, na + nb});

    std::vector<std::pair<std::size_t, double>> updated;
    for (const auto& [c, nc] : sizes) {
      if (c == a || c == b) continue;
      const double da = between.at(key(a, c));
      const double db = between.at(key(b, c));
      double v = 0.0;
      switch (linkage) {
        case Linkage::kSingle:
          v = std::min(da, db);
          break;
        case Linkage::kComplete:
          v = std::max(da, db);
          break;
        case Linkage::kAverage:
          v = (static_cast<double>(na) * da + static_cast<double>(nb) * db) / static_cast<double>(na + nb);
          break;
      }
      updated.emplace_back(c, v);
    }
    for (auto it = between.begin(); it != between.end();) {
      const auto [x, y] = it->first;
      if (x == a || x == b || y == a || y == b) {
        it = between.erase(it);
      } else {
        ++it;
      }
    }
    sizes.erase(a);
    sizes.erase(b);
    for (const auto& [c, v] : updated) between[key(c, id)] = v;
    sizes[id] = na + nb;
  }
  return d;
}

std::vector<std::size_t> leaf_order(const Dendrogram& d) {
  const std::size_t n = d.leaf_count();
  std::vector<std::size_t> order;
  if (n == 0) return order;
  std::function<void(std::size_t)> visit = [&](std::size_t id) {
    if (id < n) {
      order.push_back(id);
      return;
    }
    const Merge& m = d.merges[id - n];
    visit(m.a);
    visit(m.b);
  };
  visit(d.merges.empty() ? 0 : d.merges.back().id);
  return order;
}

DistanceMatrix cophenetic(const Dendrogram& d) {
  const std::size_t n = d.leaf_count();
  DistanceMatrix c(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<std::size_t>> members(n + d.merges.size());
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (const Merge& m : d.merges) {
    for (std::size_t x : members[m.a]) {
      for (std::size_t y : members[m.b]) c[x][y] = c[y][x] = m.height;
    }
    members[m.id] = members[m.a];
    members[m.id].insert(members[m.id].end(), members[m.b].begin(), members[m.b].end());
  }
  return c;
}

Extremes nearest_and_farthest(const Dendrogram& d, const DistanceMatrix& dist) {
  Extremes e;
  const std::size_t n = dist.size();
  if (n < 2) return e;
  auto label_less = [&](std::size_t x, std::size_t y) {
    const std::string& lx = x < d.leaf_labels.size() ? d.leaf_labels[x] : std::string();
    const std::string& ly = y < d.leaf_labels.size() ? d.leaf_labels[y] : std::string();
    return lx != ly ? lx < ly : x < y;
  };
  auto ordered = [&](std::size_t x, std::size_t y) {
    return label_less(x, y) ? std::make_pair(x, y) : std::make_pair(y, x);
  };
  auto pair_less = [&](std::pair<std::size_t, std::size_t> p, std::pair<std::size_t, std::size_t> q) {
    if (p.first != q.first) return label_less(p.first, q.first);
    return p.second != q.second && label_less(p.second, q.second);
  };

  double lo = dist[0][1];
  double hi = dist[0][1];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      lo = std::min(lo, dist[i][j]);
      hi = std::max(hi, dist[i][j]);
      const auto p = ordered(i, j);
      if (!e.closest || dist[i][j] < dist[e.closest->first][e.closest->second] ||
          (dist[i][j] == dist[e.closest->first][e.closest->second] && pair_less(p, *e.closest))) {
        e.closest = p;
      }
    }
  }
  e.equidistant = hi - lo <= 1e-9;

  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double nearest = kUnbounded;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) nearest = std::min(nearest, dist[i][j]);
    }
    if (nearest > best || (nearest == best && label_less(i, *e.farthest))) {
      best = nearest;
      e.farthest = i;
    }
  }
  return e;
}

std::string dendrogram_json(const Dendrogram& d, const Extremes& extremes) {
  nlohmann::ordered_json j;
  j["linkage"] = std::string(to_string(d.linkage));
  j["leaves"] = d.leaf_labels;
  j["merges"] = nlohmann::ordered_json::array();
  for (const Merge& m : d.merges) {
    nlohmann::ordered_json entry;
    entry["a"] = m.a;
    entry["b"] = m.b;
    if (std::isinf(m.height)) {
      entry["height"] = "inf";
    } else {
      entry["height"] = m.height;
    }
    entry["id"] = m.id;
    entry["size"] = m.size;
    j["merges"].push_back(std::move(entry));
  }
  if (extremes.equidistant) {
    j["summary"] = "all samples equidistant";
  } else if (extremes.closest && extremes.farthest) {
    j["closest"] = {d.leaf_labels[extremes.closest->first], d.leaf_labels[extremes.closest->second]};
    j["farthest"] = d.leaf_labels[*extremes.farthest];
  }
  return j.dump(2) + "\n";
}

Dendrogram parse_dendrogram_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaViolation("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("merges") || !j["merges"].is_array()) {
    throw SchemaViolation("/merges", "expected an array");
  }
  if (!j.contains("leaves") || !j["leaves"].is_array()) throw SchemaViolation("/leaves", "expected an array");
  Dendrogram d;
  d.linkage = parse_linkage(j.value("linkage", "single")).value_or(Linkage::kSingle);
  for (const auto& l : j["leaves"]) d.leaf_labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  const std::size_t n = d.leaf_labels.size();
  for (std::size_t k = 0; k < j["merges"].size(); ++k) {
    const auto& m = j["merges"][k];
    const std::string at = "/merges/" + std::to_string(k);
    try {
      Merge merge;
      merge.a = m.at("a").get<std::size_t>();
      merge.b = m.at("b").get<std::size_t>();
      merge.height = m.at("height").is_string() ? kUnbounded : m.at("height").get<double>();
      merge.id = m.at("id").get<std::size_t>();
      merge.size = m.value("size", std::size_t{0});
      if (merge.id != n + k || merge.a >= merge.id || merge.b >= merge.id) throw SchemaViolation(at, "bad cluster id");
      d.merges.push_back(merge);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaViolation(at, e.what());
    }
  }
  if (n > 0 && d.merges.size() != n - 1) throw SchemaViolation("/merges", "expected one merge fewer than leaves");
  return d;
}

}  // namespace tma
