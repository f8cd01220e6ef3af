/// @file
/// @brief Simplicial complexes built from chord sequences.
///
/// Two families: cumulative chords by pitch (each chord contributes the simplex
/// on its pitch classes) and cumulative chords by pitch and interval (each
/// chord contributes the chromatic runs between consecutive normal-form pitch
/// classes). Vertices are pitch classes 0..11.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tma/pitch.h"
#include "tma/simplicial.h"

namespace tma {

inline constexpr std::size_t kBettiColumns = 12;
using BettiRow = std::array<std::size_t, kBettiColumns>;

enum class SequenceKind { kCumulativePitch, kRadiusPitch, kRadiusFiltration, kCumulativePitchInterval };

std::string_view to_string(SequenceKind kind);

struct SequenceParams {
  std::optional<std::size_t> start;   // i
  std::optional<std::size_t> end;     // j
  std::optional<std::size_t> radius;  // r
  std::optional<std::size_t> center;  // i0
};

struct ComplexSequence {
  SequenceKind kind = SequenceKind::kCumulativePitch;
  SequenceParams params;
  std::vector<SimplicialComplex> complexes;
  /// Row label per complex: the last event index for cumulative sequences,
  /// the center index for radius complexes, the radius for radius filtrations.
  std::vector<std::size_t> labels;
  std::vector<BettiRow> betti_table;

  /// Radius sequences over a fixed radius are a cover, not a filtration.
  bool is_nested() const;
};

/// Simplex on the chord's pitch classes. Throws EmptyChord.
Simplex chord_simplex(const Chord& chord);

/// Union of the closures of the chord simplices for chords i..j (inclusive).
/// Throws IndexOutOfRange unless i <= j < chords.size().
SimplicialComplex cumulative_complex(std::span<const Chord> chords, std::size_t i, std::size_t j);

/// Complexes for [0,0], [0,1], ..., [0,N].
ComplexSequence cumulative_sequence(std::span<const Chord> chords, const PrimeField& field = PrimeField(2));

/// Windows of radius r around each center i = r .. min(n - r, n - 1); the
/// upper end of a window is clamped to the last chord. Throws RadiusTooLarge
/// when 2r >= n.
ComplexSequence radius_complexes(std::span<const Chord> chords, std::size_t radius,
                                 const PrimeField& field = PrimeField(2));

/// Window [center - r, center + r] clamped to the fragment.
SimplicialComplex radius_complex(std::span<const Chord> chords, std::size_t center, std::size_t radius);

/// Radii 0, 1, ... around `center` until the window covers every chord.
/// Throws IndexOutOfRange unless center < chords.size().
ComplexSequence radius_filtration(std::span<const Chord> chords, std::size_t center,
                                  const PrimeField& field = PrimeField(2));

/// Closures of the chromatic runs x_k, x_k + 1, ..., x_{k+1} between
/// consecutive normal-form pitch classes. Throws EmptyChord.
SimplicialComplex pitch_interval_complex(const Chord& chord);

SimplicialComplex cumulative_pitch_interval(std::span<const Chord> chords, std::size_t i, std::size_t j);

/// Pitch-interval complexes for [0,0], [0,1], ..., [0,N].
ComplexSequence cumulative_pitch_interval_sequence(std::span<const Chord> chords,
                                                   const PrimeField& field = PrimeField(2));

/// beta_0..beta_11, zero beyond the complex's dimension.
BettiRow betti_row(const SimplicialComplex& complex, const PrimeField& field = PrimeField(2));

/// "index,b0,...,b11" header plus one row per complex.
std::string betti_table_csv(const ComplexSequence& sequence);

}  // namespace tma
