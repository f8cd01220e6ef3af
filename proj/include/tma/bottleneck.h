/// @file
/// @brief Bottleneck distance between persistence diagrams.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tma/vr_persistence.h"

namespace tma {

/// One matched pair; an empty side stands for the diagonal.
struct MatchedPair {
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
  double cost = 0.0;
};

struct Matching {
  std::vector<MatchedPair> pairs;
  double cost = 0.0;
};

struct BottleneckResult {
  double distance = 0.0;
  Matching witness;
};

/// Exact bottleneck distance with an optimal matching. Points with infinite
/// death match only each other, in birth order; unequal counts give infinity.
/// Throws DimensionMismatch if the diagrams' dimensions differ.
BottleneckResult bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

using DistanceMatrix = std::vector<std::vector<double>>;

/// Symmetric matrix of bottleneck distances with zero diagonal.
DistanceMatrix pairwise_bottleneck(std::span<const PersistenceDiagram> diagrams);

struct LabeledMatrix {
  std::string mapping;
  int dimension = 0;
  std::vector<std::string> labels;
  DistanceMatrix values;
};

std::string matrix_csv(const LabeledMatrix& matrix);
std::string matrix_json(const LabeledMatrix& matrix);

}  // namespace tma
