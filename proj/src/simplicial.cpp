/// @file
/// @brief Abstract simplicial complexes, boundary matrices and Betti numbers.

#include "tma/simplicial.h"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include <json.hpp>

#include "tma/errors.h"

namespace tma {

PrimeField::PrimeField(int p) : p_(p) {
  if (p < 2 || p >= (1 << 15)) throw Error("field characteristic must be a prime below 32768");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  }
}

int PrimeField::inverse(int a) const {
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = reduce(a);
  if (new_r == 0) throw Error("division by zero in " + name());
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

PrimeField parse_field(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'z' || digits[0] == 'Z')) digits.erase(0, 1);
  if (!digits.empty() && digits[0] == '/') digits.erase(0, 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error("cannot parse field \"" + text + "\" (expected e.g. z2, z3, Z/5)");
  }
  return PrimeField(std::stoi(digits));
}

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error("repeated vertex in simplex");
  }
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    Simplex face;
    face.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (k != skip) face.vertices_.push_back(vertices_[k]);
    }
    out.push_back(std::move(face));
  }
  return out;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

void SimplicialComplex::insert_closure(const Simplex& s) {
  if (contains(s)) return;
  const auto& v = s.vertices();
  const std::size_t n = v.size();
  if (n >= 31) throw Error("simplex too large to enumerate its faces");
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    std::vector<int> face;
    for (std::size_t k = 0; k < n; ++k) {
      if ((subset >> k) & 1u) face.push_back(v[k]);
    }
    simplices_.insert(Simplex(std::move(face)));
  }
}

void SimplicialComplex::merge(const SimplicialComplex& other) {
  simplices_.insert(other.simplices_.begin(), other.simplices_.end());
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& s : simplices_) dim = std::max(dim, s.dimension());
  return dim;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dimension(int n) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (s.dimension() == n) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::counts_by_dimension() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : simplices_) ++counts[static_cast<std::size_t>(s.dimension())];
  return counts;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  const auto verts = vertices();
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    bool covered = false;
    for (int v : verts) {
      if (std::binary_search(s.vertices().begin(), s.vertices().end(), v)) continue;
      std::vector<int> coface = s.vertices();
      coface.insert(std::upper_bound(coface.begin(), coface.end(), v), v);
      if (contains(Simplex(std::move(coface)))) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(s);
  }
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& s : simplices_) {
    if (s.dimension() == 0) out.push_back(s.vertices()[0]);
  }
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.simplices_.begin(), other.simplices_.end(), simplices_.begin(), simplices_.end());
}

bool SimplicialComplex::is_face_closed() const {
  for (const auto& s : simplices_) {
    for (const auto& f : s.facets()) {
      if (!contains(f)) return false;
    }
  }
  return true;
}

SimplicialComplex insert_closure(SimplicialComplex complex, const Simplex& s) {
  complex.insert_closure(s);
  return complex;
}

std::vector<std::vector<int>> BoundaryMatrix::dense() const {
  std::vector<std::vector<int>> out(rows.size(), std::vector<int>(columns.size(), 0));
  for (std::size_t c = 0; c < entries.size(); ++c) {
    for (const auto& [r, v] : entries[c]) out[r][c] = v;
  }
  return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int n, const PrimeField& field) {
  if (n < 1 || n > complex.dimension()) {
    throw DimensionOutOfRange("boundary dimension " + std::to_string(n) + " outside 1.." +
                              std::to_string(complex.dimension()));
  }
  BoundaryMatrix m;
  m.rows = complex.simplices_of_dimension(n - 1);
  m.columns = complex.simplices_of_dimension(n);
  m.entries.reserve(m.columns.size());
  for (const auto& s : m.columns) {
    SparseColumn col;
    const auto facets = s.facets();
    for (std::size_t k = 0; k < facets.size(); ++k) {
      auto it = std::lower_bound(m.rows.begin(), m.rows.end(), facets[k]);
      const int coeff = field.reduce(k % 2 == 0 ? 1 : -1);
      col.emplace_back(static_cast<std::size_t>(it - m.rows.begin()), coeff);
    }
    std::sort(col.begin(), col.end());
    m.entries.push_back(std::move(col));
  }
  return m;
}

namespace {

// target += factor * source, dropping zeros.
void add_scaled(SparseColumn& target, const SparseColumn& source, int factor, const PrimeField& field) {
  SparseColumn out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, field.mul(factor, b->second));
      ++b;
    } else {
      const int v = field.add(a->second, field.mul(factor, b->second));
      if (v != 0) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  target.swap(out);
}

}  // namespace

std::size_t matrix_rank(std::vector<SparseColumn> columns, const PrimeField& field) {
  std::unordered_map<std::size_t, std::size_t> pivot_owner;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      auto it = pivot_owner.find(col.back().first);
      if (it == pivot_owner.end()) break;
      const auto& other = columns[it->second];
      const int factor = field.sub(0, field.mul(col.back().second, field.inverse(other.back().second)));
      add_scaled(col, other, factor, field);
    }
    if (!col.empty()) {
      pivot_owner.emplace(col.back().first, c);
      ++rank;
    }
  }
  return rank;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, const PrimeField& field) {
  const int dim = complex.dimension();
  if (dim < 0) return {};
  const auto counts = complex.counts_by_dimension();
  // rank_of[n] = rank of the boundary map out of dimension n; rank_of[0] = 0.
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(dim + 2), 0);
  for (int n = 1; n <= dim; ++n) rank_of[n] = matrix_rank(boundary_matrix(complex, n, field).entries, field);
  std::vector<std::size_t> betti(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n) betti[n] = counts[n] - rank_of[n] - rank_of[n + 1];
  return betti;
}

long euler_characteristic(const SimplicialComplex& complex) {
  long chi = 0;
  for (const auto& s : complex.simplices()) chi += (s.dimension() % 2 == 0) ? 1 : -1;
  return chi;
}

std::string complex_json(const SimplicialComplex& complex) {
  nlohmann::json maximal = nlohmann::json::array();
  for (const auto& s : complex.maximal_simplices()) maximal.push_back(s.vertices());
  nlohmann::json doc = nlohmann::json::object();
  doc["simplices"] = std::move(maximal);
  return doc.dump() + "\n";
}

}  // namespace tma
