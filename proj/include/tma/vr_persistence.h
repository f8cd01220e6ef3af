/// @file
/// @brief Vietoris-Rips filtrations and persistent homology.
///
/// Filtration values are simplex diameters (maximum pairwise Euclidean
/// distance), not half-diameters. Every serialized diagram records this as
/// "scale": "diameter".

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tma/field.h"
#include "tma/mappings.h"
#include "tma/simplicial.h"

namespace tma {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

struct ComplexSequence;

struct FilteredSimplex {
  Simplex simplex;
  double value = 0.0;
};

/// Simplices ordered by (value, dimension, vertex tuple).
class FilteredComplex {
 public:
  FilteredComplex() = default;
  explicit FilteredComplex(std::vector<FilteredSimplex> entries);

  const std::vector<FilteredSimplex>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int dimension() const noexcept { return dimension_; }

  /// Throws InvalidFiltration if a face is missing or enters after a coface.
  void validate() const;

 private:
  std::vector<FilteredSimplex> entries_;
  int dimension_ = -1;
};

/// Every simplex of dimension <= max_dim + 1 with diameter <= max_scale.
FilteredComplex build_vr(std::span<const Point> points, int max_dim, double max_scale = kUnbounded);
FilteredComplex build_vr(const PointCloud& cloud, int max_dim, double max_scale = kUnbounded);

/// Filtration of a nested complex sequence; a simplex enters at the label of
/// the first complex containing it. Throws InvalidFiltration if not nested.
FilteredComplex filtration_from_sequence(const ComplexSequence& sequence);

struct DiagramPoint {
  double birth = 0.0;
  double death = kUnbounded;

  bool is_infinite() const noexcept { return std::isinf(death); }
  double persistence() const noexcept { return death - birth; }
  friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
};

struct PersistenceDiagram {
  int dimension = 0;
  /// Sorted by (birth, death).
  std::vector<DiagramPoint> points;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

struct PersistenceOptions {
  int max_dim = 3;
  PrimeField field{2};
  /// Pair vertices with edges by union-find instead of column reduction.
  bool h0_union_find = true;
};

struct PersistenceResult {
  /// One diagram per dimension 0..max_dim.
  std::vector<PersistenceDiagram> diagrams;
  /// Pairs with birth == death, left out of the diagrams.
  std::size_t zero_persistence_pairs = 0;
};

/// Column reduction of the filtration-ordered boundary matrix, dimensions
/// processed top-down with clearing. Throws InvalidFiltration.
PersistenceResult persistence(const FilteredComplex& complex, const PersistenceOptions& options = {});

/// Diagrams plus the metadata written next to them.
struct DiagramDocument {
  std::string mapping;
  std::string label;
  std::string field = "Z/2";
  std::string scale = "diameter";
  int max_dim = 3;
  std::size_t zero_persistence_pairs = 0;
  std::vector<PersistenceDiagram> diagrams;
};

std::string diagram_json(const DiagramDocument& doc);
DiagramDocument parse_diagram_json(std::string_view text);

}  // namespace tma
