/// @file
/// @brief Pitch-class arithmetic, normal forms and interval vectors.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tma {

inline constexpr int kPitchClassCount = 12;

/// Residue of an integer pitch modulo 12.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int value)
      : value_(((value % kPitchClassCount) + kPitchClassCount) % kPitchClassCount) {}

  constexpr int value() const noexcept { return value_; }

  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  int value_ = 0;
};

/// Bitmask of pitch classes, bit k set iff pitch class k is present.
using PitchClassMask = std::uint16_t;

/// Canonical rotation of a pitch-class set.
///
/// Among the rotations of the ascending circular ordering, picks the one whose
/// interval succession matches the set's prime form (Forte packing: smallest
/// span, then smallest intervals from the first element). Sets that are
/// inversions of their prime form take the rotation with the mirrored interval
/// succession, i.e. packed toward the right. Remaining ties go to the smallest
/// first pitch class. Duplicates in the input are ignored.
std::vector<PitchClass> normal_form(std::span<const PitchClass> pcs);
std::vector<PitchClass> normal_form(PitchClassMask mask);

/// Forte prime form of the set, transposed to start at 0.
std::vector<int> prime_form(PitchClassMask mask);

/// (b - a) mod 12.
constexpr int directed_interval(PitchClass a, PitchClass b) {
  return (b.value() - a.value() + kPitchClassCount) % kPitchClassCount;
}

/// Unordered interval class in 0..6.
constexpr int interval_class(PitchClass a, PitchClass b) {
  const int d = directed_interval(a, b);
  return d <= 6 ? d : kPitchClassCount - d;
}

struct IntervalVector {
  std::array<int, 6> counts{};

  int total() const;
  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;
};

/// A set of pitch classes in normal form, optionally carrying the sounding
/// MIDI pitches it was built from.
class Chord {
 public:
  Chord() = default;

  static Chord from_pitch_classes(std::span<const int> pcs);
  static Chord from_pitch_classes(std::initializer_list<int> pcs);
  static Chord from_mask(PitchClassMask mask);
  /// Pitch classes are the MIDI pitches reduced mod 12; the pitches are kept
  /// (sorted, with multiplicity).
  static Chord from_pitches(std::span<const int> midi_pitches);

  const std::vector<PitchClass>& normal_form() const noexcept { return normal_form_; }
  const std::vector<int>& raw_pitches() const noexcept { return raw_pitches_; }
  std::size_t size() const noexcept { return normal_form_.size(); }
  bool empty() const noexcept { return normal_form_.empty(); }
  PitchClassMask mask() const noexcept { return mask_; }
  bool contains(PitchClass pc) const noexcept { return (mask_ >> pc.value()) & 1u; }

  /// Normal-form values as plain integers.
  std::vector<int> values() const;
  std::string to_string() const;

  /// Adds pitches (and their classes) to the chord, re-normalizing.
  void merge_pitches(std::span<const int> midi_pitches);

  /// Pitch-class equality; raw pitches are not compared.
  friend bool operator==(const Chord& a, const Chord& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<PitchClass> normal_form_;
  std::vector<int> raw_pitches_;
  PitchClassMask mask_ = 0;
};

IntervalVector interval_vector(const Chord& chord);

/// Shifts every pitch class (and raw pitch) by `semitones` and re-normalizes.
Chord transpose(const Chord& chord, int semitones);

/// Pitch-class inversion x -> -x mod 12.
Chord invert(const Chord& chord);

}  // namespace tma
