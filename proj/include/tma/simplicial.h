/// @file
/// @brief Abstract simplicial complexes, boundary matrices and Betti numbers.

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tma/field.h"

namespace tma {

/// A nonempty set of integer vertices, stored strictly increasing.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input; throws tma::Error on an empty or repeated vertex list.
  explicit Simplex(std::vector<int> vertices);
  Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Codimension-one faces, the k-th omitting vertex k.
  std::vector<Simplex> facets() const;
  bool is_face_of(const Simplex& other) const;

  /// Lexicographic on the vertex tuple.
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<int> vertices_;
};

/// A face-closed set of simplices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Adds `s` and every nonempty face of it.
  void insert_closure(const Simplex& s);
  void merge(const SimplicialComplex& other);

  const std::set<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  /// -1 for the empty complex.
  int dimension() const;

  /// n-simplices in lexicographic order.
  std::vector<Simplex> simplices_of_dimension(int n) const;
  /// Entry n is the number of n-simplices, n = 0..dimension().
  std::vector<std::size_t> counts_by_dimension() const;
  std::vector<Simplex> maximal_simplices() const;
  std::vector<int> vertices() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool is_face_closed() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::set<Simplex> simplices_;
};

SimplicialComplex insert_closure(SimplicialComplex complex, const Simplex& s);

/// Sparse column: (row, nonzero coefficient) pairs with increasing row.
using SparseColumn = std::vector<std::pair<std::size_t, int>>;

struct BoundaryMatrix {
  std::vector<Simplex> rows;     // (n-1)-simplices, lexicographic
  std::vector<Simplex> columns;  // n-simplices, lexicographic
  std::vector<SparseColumn> entries;

  /// Row-major dense copy.
  std::vector<std::vector<int>> dense() const;
};

/// Matrix of the boundary map C_n -> C_{n-1} with signed incidences reduced
/// into `field`. Throws DimensionOutOfRange unless 1 <= n <= dimension().
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int n, const PrimeField& field = PrimeField(2));

/// Rank over `field` by column elimination.
std::size_t matrix_rank(std::vector<SparseColumn> columns, const PrimeField& field);

/// beta_0 .. beta_dim; empty for the empty complex.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, const PrimeField& field = PrimeField(2));

/// Alternating sum of simplex counts.
long euler_characteristic(const SimplicialComplex& complex);

/// {"simplices": [[v, ...], ...]} listing maximal simplices.
std::string complex_json(const SimplicialComplex& complex);

}  // namespace tma
