/// @file
/// @brief Vietoris-Rips construction and persistence by column reduction.

#include "tma/vr_persistence.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "tma/errors.h"
#include "tma/harmonic_complexes.h"

namespace tma {

namespace {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : s.vertices()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using SimplexIndex = std::unordered_map<Simplex, std::size_t, SimplexHash>;

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.simplex.dimension() != b.simplex.dimension()) return a.simplex.dimension() < b.simplex.dimension();
  return a.simplex < b.simplex;
}

double distance(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

SimplexIndex index_of(const FilteredComplex& complex) {
  SimplexIndex index;
  index.reserve(complex.size());
  for (std::size_t i = 0; i < complex.size(); ++i) index.emplace(complex.entries()[i].simplex, i);
  return index;
}

/// Boundary column of entry `i` as (row, coefficient) with increasing row.
SparseColumn boundary_column(const FilteredComplex& complex, const SimplexIndex& index, std::size_t i,
                             const PrimeField& field) {
  const Simplex& s = complex.entries()[i].simplex;
  SparseColumn column;
  if (s.dimension() == 0) return column;
  const std::vector<Simplex> faces = s.facets();
  column.reserve(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const auto it = index.find(faces[k]);
    if (it == index.end()) throw InvalidFiltration("face of a filtered simplex is missing");
    if (it->second >= i) throw InvalidFiltration("face enters the filtration after its coface");
    const int coefficient = field.reduce(k % 2 == 0 ? 1 : -1);
    column.emplace_back(it->second, coefficient);
  }
  std::sort(column.begin(), column.end());
  return column;
}

/// column += factor * other, both sorted by row.
void add_scaled(SparseColumn& column, const SparseColumn& other, int factor, const PrimeField& field) {
  SparseColumn result;
  result.reserve(column.size() + other.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < column.size() || b < other.size()) {
    if (b == other.size() || (a < column.size() && column[a].first < other[b].first)) {
      result.push_back(column[a++]);
    } else if (a == column.size() || other[b].first < column[a].first) {
      result.emplace_back(other[b].first, field.mul(other[b].second, factor));
      ++b;
    } else {
      const int c = field.add(column[a].second, field.mul(other[b].second, factor));
      if (c != 0) result.emplace_back(column[a].first, c);
      ++a;
      ++b;
    }
  }
  column = std::move(result);
}

struct Pairing {
  std::vector<bool> positive;
  std::vector<bool> paired;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Attaches `child` under `root`.
  void attach(std::size_t child, std::size_t root) { parent_[child] = root; }

 private:
  std::vector<std::size_t> parent_;
};

/// Elder rule on edges; roots are filtration indices of the oldest vertex.
void pair_edges_union_find(const FilteredComplex& complex, const SimplexIndex& index,
                           const std::vector<std::size_t>& edges, Pairing& pairing) {
  UnionFind components(complex.size());
  for (std::size_t e : edges) {
    if (pairing.paired[e]) {
      pairing.positive[e] = true;
      continue;
    }
    const std::vector<int>& v = complex.entries()[e].simplex.vertices();
    const std::size_t a = components.find(index.at(Simplex{v[0]}));
    const std::size_t b = components.find(index.at(Simplex{v[1]}));
    if (a == b) {
      pairing.positive[e] = true;
      continue;
    }
    const std::size_t elder = std::min(a, b);
    const std::size_t younger = std::max(a, b);
    components.attach(younger, elder);
    pairing.pairs.emplace_back(younger, e);
    pairing.paired[younger] = true;
  }
}

void reduce_dimension(const FilteredComplex& complex, const SimplexIndex& index,
                      const std::vector<std::size_t>& columns, const PrimeField& field, Pairing& pairing) {
  std::unordered_map<std::size_t, SparseColumn> reduced_by_pivot;
  for (std::size_t j : columns) {
    if (pairing.paired[j]) {
      pairing.positive[j] = true;
      continue;
    }
    SparseColumn column = boundary_column(complex, index, j, field);
    while (!column.empty()) {
      const auto it = reduced_by_pivot.find(column.back().first);
      if (it == reduced_by_pivot.end()) break;
      const SparseColumn& other = it->second;
      const int factor = field.sub(0, field.mul(column.back().second, field.inverse(other.back().second)));
      add_scaled(column, other, factor, field);
    }
    if (column.empty()) {
      pairing.positive[j] = true;
      continue;
    }
    const std::size_t pivot = column.back().first;
    pairing.pairs.emplace_back(pivot, j);
    pairing.paired[pivot] = true;
    reduced_by_pivot.emplace(pivot, std::move(column));
  }
}

}  // namespace

FilteredComplex::FilteredComplex(std::vector<FilteredSimplex> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), filtration_less);
  for (const FilteredSimplex& e : entries_) dimension_ = std::max(dimension_, e.simplex.dimension());
}

void FilteredComplex::validate() const {
  const SimplexIndex index = index_of(*this);
  if (index.size() != entries_.size()) throw InvalidFiltration("simplex listed twice");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].value >= 0.0)) throw InvalidFiltration("negative or undefined filtration value");
    (void)boundary_column(*this, index, i, PrimeField(2));
  }
}

FilteredComplex build_vr(std::span<const Point> points, int max_dim, double max_scale) {
  if (max_dim < 0) throw DimensionOutOfRange("max_dim must be nonnegative");
  const std::size_t n = points.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<int>> neighbors(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].size() != points[j].size()) throw DimensionMismatch("points of different dimension");
      dist[i][j] = dist[j][i] = distance(points[i], points[j]);
      if (dist[i][j] <= max_scale) neighbors[i].push_back(static_cast<int>(j));
    }
  }

  std::vector<FilteredSimplex> entries;
  const std::size_t max_vertices = static_cast<std::size_t>(max_dim) + 2;
  std::vector<int> current;

  // Depth-first over increasing vertex tuples whose members are pairwise close.
  auto extend = [&](auto&& self, double value, const std::vector<int>& candidates) -> void {
    entries.push_back({Simplex(current), value});
    if (current.size() == max_vertices) return;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const int w = candidates[c];
      double next_value = value;
      for (int u : current) next_value = std::max(next_value, dist[u][w]);
      std::vector<int> next;
      for (std::size_t d = c + 1; d < candidates.size(); ++d) {
        const int x = candidates[d];
        if (dist[w][x] <= max_scale) next.push_back(x);
      }
      current.push_back(w);
      self(self, next_value, next);
      current.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    current.assign(1, static_cast<int>(v));
    extend(extend, 0.0, neighbors[v]);
  }
  return FilteredComplex(std::move(entries));
}

FilteredComplex build_vr(const PointCloud& cloud, int max_dim, double max_scale) {
  return build_vr(std::span<const Point>(cloud.points), max_dim, max_scale);
}

FilteredComplex filtration_from_sequence(const ComplexSequence& sequence) {
  if (!sequence.is_nested()) throw InvalidFiltration("complex sequence is not nested");
  std::vector<FilteredSimplex> entries;
  const SimplicialComplex* previous = nullptr;
  for (std::size_t k = 0; k < sequence.complexes.size(); ++k) {
    const SimplicialComplex& complex = sequence.complexes[k];
    if (previous != nullptr && !previous->is_subcomplex_of(complex)) {
      throw InvalidFiltration("complex sequence is not nested");
    }
    for (const Simplex& s : complex.simplices()) {
      if (previous == nullptr || !previous->contains(s)) {
        entries.push_back({s, static_cast<double>(sequence.labels[k])});
      }
    }
    previous = &complex;
  }
  return FilteredComplex(std::move(entries));
}

PersistenceResult persistence(const FilteredComplex& complex, const PersistenceOptions& options) {
  if (options.max_dim < 0) throw DimensionOutOfRange("max_dim must be nonnegative");
  const std::size_t n = complex.size();
  const SimplexIndex index = index_of(complex);
  if (index.size() != n) throw InvalidFiltration("simplex listed twice");

  std::vector<std::vector<std::size_t>> by_dimension(static_cast<std::size_t>(std::max(complex.dimension(), 0)) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(complex.entries()[i].value >= 0.0)) throw InvalidFiltration("negative or undefined filtration value");
    by_dimension[static_cast<std::size_t>(complex.entries()[i].simplex.dimension())].push_back(i);
  }

  Pairing pairing{std::vector<bool>(n, false), std::vector<bool>(n, false), {}};
  const int top = std::min(options.max_dim + 1, complex.dimension());
  for (int d = top; d >= 1; --d) {
    const auto& columns = by_dimension[static_cast<std::size_t>(d)];
    if (d == 1 && options.h0_union_find) {
      for (std::size_t e : columns) (void)boundary_column(complex, index, e, options.field);
      pair_edges_union_find(complex, index, columns, pairing);
    } else {
      reduce_dimension(complex, index, columns, options.field, pairing);
    }
  }
  if (complex.dimension() >= 0) {
    for (std::size_t v : by_dimension[0]) pairing.positive[v] = true;
  }

  PersistenceResult result;
  result.diagrams.resize(static_cast<std::size_t>(options.max_dim) + 1);
  for (int k = 0; k <= options.max_dim; ++k) result.diagrams[static_cast<std::size_t>(k)].dimension = k;

  auto dim_of = [&](std::size_t i) { return complex.entries()[i].simplex.dimension(); };
  for (const auto& [birth, death] : pairing.pairs) {
    const int k = dim_of(birth);
    if (k > options.max_dim) continue;
    const double b = complex.entries()[birth].value;
    const double d = complex.entries()[death].value;
    if (b == d) {
      ++result.zero_persistence_pairs;
      continue;
    }
    result.diagrams[static_cast<std::size_t>(k)].points.push_back({b, d});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int k = dim_of(i);
    if (k > options.max_dim) continue;
    if (pairing.positive[i] && !pairing.paired[i]) {
      result.diagrams[static_cast<std::size_t>(k)].points.push_back({complex.entries()[i].value, kUnbounded});
    }
  }
  for (auto& diagram : result.diagrams) std::sort(diagram.points.begin(), diagram.points.end());
  return result;
}

namespace {

nlohmann::json value_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

double value_from_json(const nlohmann::json& j, const std::string& pointer) {
  if (j.is_string() && j.get<std::string>() == "inf") return kUnbounded;
  if (j.is_number()) return j.get<double>();
  throw SchemaViolation(pointer, "expected a number or \"inf\"");
}

}  // namespace

std::string diagram_json(const DiagramDocument& doc) {
  nlohmann::ordered_json j;
  j["mapping"] = doc.mapping;
  j["label"] = doc.label;
  j["scale"] = doc.scale;
  j["field"] = doc.field;
  j["max_dim"] = doc.max_dim;
  j["zero_persistence_pairs"] = doc.zero_persistence_pairs;
  j["diagrams"] = nlohmann::ordered_json::array();
  for (const PersistenceDiagram& d : doc.diagrams) {
    nlohmann::ordered_json entry;
    entry["dim"] = d.dimension;
    entry["points"] = nlohmann::ordered_json::array();
    for (const DiagramPoint& p : d.points) {
      entry["points"].push_back(nlohmann::ordered_json::array({p.birth, value_json(p.death)}));
    }
    j["diagrams"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

DiagramDocument parse_diagram_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaViolation("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaViolation("", "expected an object");
  DiagramDocument doc;
  doc.mapping = j.value("mapping", "");
  doc.label = j.value("label", "");
  doc.scale = j.value("scale", "diameter");
  doc.field = j.value("field", "Z/2");
  doc.zero_persistence_pairs = j.value("zero_persistence_pairs", std::size_t{0});
  if (!j.contains("diagrams") || !j["diagrams"].is_array()) throw SchemaViolation("/diagrams", "expected an array");
  int max_dim = -1;
  for (std::size_t k = 0; k < j["diagrams"].size(); ++k) {
    const auto& entry = j["diagrams"][k];
    const std::string at = "/diagrams/" + std::to_string(k);
    if (!entry.is_object() || !entry.contains("dim") || !entry["dim"].is_number_integer()) {
      throw SchemaViolation(at + "/dim", "expected an integer");
    }
    PersistenceDiagram d;
    d.dimension = entry["dim"].get<int>();
    max_dim = std::max(max_dim, d.dimension);
    if (!entry.contains("points") || !entry["points"].is_array()) throw SchemaViolation(at + "/points", "expected an array");
    for (std::size_t p = 0; p < entry["points"].size(); ++p) {
      const auto& pt = entry["points"][p];
      const std::string pat = at + "/points/" + std::to_string(p);
      if (!pt.is_array() || pt.size() != 2) throw SchemaViolation(pat, "expected [birth, death]");
      const DiagramPoint point{value_from_json(pt[0], pat + "/0"), value_from_json(pt[1], pat + "/1")};
      if (!(point.birth <= point.death)) throw SchemaViolation(pat, "birth exceeds death");
      d.points.push_back(point);
    }
    doc.diagrams.push_back(std::move(d));
  }
  doc.max_dim = j.value("max_dim", max_dim);
  return doc;
}

}  // namespace tma
