/// @file
/// @brief Agglomerative clustering of distance matrices.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tma/bottleneck.h"

namespace tma {

enum class Linkage { kSingle, kComplete, kAverage };

std::string_view to_string(Linkage linkage);
std::optional<Linkage> parse_linkage(std::string_view text);

/// Merge of clusters `a` < `b` into `id`. Leaves are 0..n-1, merged clusters
/// n, n+1, ... in merge order.
struct Merge {
  std::size_t a = 0;
  std::size_t b = 0;
  double height = 0.0;
  std::size_t id = 0;
  std::size_t size = 0;
};

struct Dendrogram {
  Linkage linkage = Linkage::kSingle;
  std::vector<std::string> leaf_labels;
  std::vector<Merge> merges;

  std::size_t leaf_count() const noexcept { return leaf_labels.size(); }
};

/// Throws MalformedMatrix unless square, symmetric to 1e-12, nonnegative,
/// with zero diagonal.
void validate_distance_matrix(const DistanceMatrix& dist);

/// Labels default to "0", "1", ...; ties go to the smallest pair of ids.
Dendrogram agglomerate(const DistanceMatrix& dist, Linkage linkage, std::vector<std::string> labels = {});

/// Leaf indices left to right in the drawn tree.
std::vector<std::size_t> leaf_order(const Dendrogram& d);

/// Height of the first merge joining each pair of leaves.
DistanceMatrix cophenetic(const Dendrogram& d);

struct Extremes {
  /// Leaf pair with the smallest off-diagonal distance.
  std::optional<std::pair<std::size_t, std::size_t>> closest;
  /// Leaf whose distance to its nearest neighbour is largest.
  std::optional<std::size_t> farthest;
  /// Every off-diagonal entry equal (to 1e-9).
  bool equidistant = false;
};

/// Ties broken by leaf label, then index.
Extremes nearest_and_farthest(const Dendrogram& d, const DistanceMatrix& dist);

std::string dendrogram_json(const Dendrogram& d, const Extremes& extremes);
/// Throws SchemaViolation.
Dendrogram parse_dendrogram_json(std::string_view text);

}  // namespace tma
