/// @file
/// @brief Simplicial complexes built from chord sequences.

#include "tma/harmonic_complexes.h"

#include <algorithm>

#include "tma/errors.h"
#include "tma/parallel.h"

namespace tma {
namespace {

void check_range(std::span<const Chord> chords, std::size_t i, std::size_t j) {
  if (i > j || j >= chords.size()) {
    throw IndexOutOfRange("chord interval [" + std::to_string(i) + ", " + std::to_string(j) +
                          "] outside a sequence of " + std::to_string(chords.size()) + " chords");
  }
}

void fill_betti(ComplexSequence& seq, const PrimeField& field) {
  seq.betti_table.assign(seq.complexes.size(), BettiRow{});
  parallel_for(seq.complexes.size(), [&](std::size_t k) { seq.betti_table[k] = betti_row(seq.complexes[k], field); });
}

}  // namespace

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kCumulativePitch: return "cumulative";
    case SequenceKind::kRadiusPitch: return "radius";
    case SequenceKind::kRadiusFiltration: return "radius-filtration";
    case SequenceKind::kCumulativePitchInterval: return "pitch-interval";
  }
  return "?";
}

bool ComplexSequence::is_nested() const { return kind != SequenceKind::kRadiusPitch; }

Simplex chord_simplex(const Chord& chord) {
  if (chord.empty()) throw EmptyChord();
  return Simplex(chord.values());
}

SimplicialComplex cumulative_complex(std::span<const Chord> chords, std::size_t i, std::size_t j) {
  check_range(chords, i, j);
  SimplicialComplex complex;
  for (std::size_t k = i; k <= j; ++k) complex.insert_closure(chord_simplex(chords[k]));
  return complex;
}

ComplexSequence cumulative_sequence(std::span<const Chord> chords, const PrimeField& field) {
  ComplexSequence seq;
  seq.kind = SequenceKind::kCumulativePitch;
  seq.params.start = 0;
  SimplicialComplex running;
  for (std::size_t k = 0; k < chords.size(); ++k) {
    running.insert_closure(chord_simplex(chords[k]));
    seq.complexes.push_back(running);
    seq.labels.push_back(k);
  }
  fill_betti(seq, field);
  return seq;
}

SimplicialComplex radius_complex(std::span<const Chord> chords, std::size_t center, std::size_t radius) {
  if (center >= chords.size()) {
    throw IndexOutOfRange("center " + std::to_string(center) + " outside a sequence of " +
                          std::to_string(chords.size()) + " chords");
  }
  const std::size_t lo = center >= radius ? center - radius : 0;
  const std::size_t hi = std::min(center + radius, chords.size() - 1);
  return cumulative_complex(chords, lo, hi);
}

ComplexSequence radius_complexes(std::span<const Chord> chords, std::size_t radius, const PrimeField& field) {
  const std::size_t n = chords.size();
  if (2 * radius >= n) {
    throw RadiusTooLarge("radius " + std::to_string(radius) + " needs more than " + std::to_string(2 * radius) +
                         " chords, got " + std::to_string(n));
  }
  ComplexSequence seq;
  seq.kind = SequenceKind::kRadiusPitch;
  seq.params.radius = radius;
  const std::size_t last_center = std::min(n - radius, n - 1);
  for (std::size_t i = radius; i <= last_center; ++i) {
    seq.complexes.push_back(cumulative_complex(chords, i - radius, std::min(i + radius, n - 1)));
    seq.labels.push_back(i);
  }
  fill_betti(seq, field);
  return seq;
}

ComplexSequence radius_filtration(std::span<const Chord> chords, std::size_t center, const PrimeField& field) {
  if (center >= chords.size()) {
    throw IndexOutOfRange("center " + std::to_string(center) + " outside a sequence of " +
                          std::to_string(chords.size()) + " chords");
  }
  ComplexSequence seq;
  seq.kind = SequenceKind::kRadiusFiltration;
  seq.params.center = center;
  const std::size_t max_radius = std::max(center, chords.size() - 1 - center);
  for (std::size_t r = 0; r <= max_radius; ++r) {
    seq.complexes.push_back(radius_complex(chords, center, r));
    seq.labels.push_back(r);
  }
  fill_betti(seq, field);
  return seq;
}

SimplicialComplex pitch_interval_complex(const Chord& chord) {
  if (chord.empty()) throw EmptyChord();
  const auto& nf = chord.normal_form();
  SimplicialComplex complex;
  if (nf.size() == 1) {
    complex.insert_closure(Simplex{nf[0].value()});
    return complex;
  }
  for (std::size_t k = 0; k + 1 < nf.size(); ++k) {
    std::vector<int> run;
    const int steps = directed_interval(nf[k], nf[k + 1]);
    for (int s = 0; s <= steps; ++s) run.push_back(PitchClass(nf[k].value() + s).value());
    complex.insert_closure(Simplex(std::move(run)));
  }
  return complex;
}

SimplicialComplex cumulative_pitch_interval(std::span<const Chord> chords, std::size_t i, std::size_t j) {
  check_range(chords, i, j);
  SimplicialComplex complex;
  for (std::size_t k = i; k <= j; ++k) complex.merge(pitch_interval_complex(chords[k]));
  return complex;
}

ComplexSequence cumulative_pitch_interval_sequence(std::span<const Chord> chords, const PrimeField& field) {
  ComplexSequence seq;
  seq.kind = SequenceKind::kCumulativePitchInterval;
  seq.params.start = 0;
  SimplicialComplex running;
  for (std::size_t k = 0; k < chords.size(); ++k) {
    running.merge(pitch_interval_complex(chords[k]));
    seq.complexes.push_back(running);
    seq.labels.push_back(k);
  }
  fill_betti(seq, field);
  return seq;
}

BettiRow betti_row(const SimplicialComplex& complex, const PrimeField& field) {
  BettiRow row{};
  const auto betti = betti_numbers(complex, field);
  for (std::size_t n = 0; n < betti.size() && n < kBettiColumns; ++n) row[n] = betti[n];
  return row;
}

std::string betti_table_csv(const ComplexSequence& sequence) {
  std::string out = "index";
  for (std::size_t n = 0; n < kBettiColumns; ++n) out += ",b" + std::to_string(n);
  out += '\n';
  for (std::size_t k = 0; k < sequence.betti_table.size(); ++k) {
    out += std::to_string(sequence.labels[k]);
    for (std::size_t v : sequence.betti_table[k]) out += ',' + std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace tma
