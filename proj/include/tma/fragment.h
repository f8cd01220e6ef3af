/// @file
/// @brief Vertical events, music fragments, and chordification.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tma/pitch.h"

namespace tma {

/// Exact time value in quarter notes.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// A pitched note before chordification.
struct Note {
  int pitch = 0;
  Rational onset{0};
  Rational duration{1};
  /// Grace notes take no time; they join the chord they precede.
  bool grace = false;

  Rational offset() const { return onset + duration; }
};

struct VerticalEvent {
  Chord chord;
  Rational duration{1};
  Rational onset{0};
  std::size_t index = 0;

  Rational offset() const { return onset + duration; }
};

struct MusicFragment {
  std::string source_label;
  std::vector<VerticalEvent> events;

  std::size_t size() const noexcept { return events.size(); }
  bool empty() const noexcept { return events.empty(); }
  std::vector<Chord> chords() const;

  /// Throws tma::Error if indices are not 0..n-1, onsets are not strictly
  /// increasing, or a duration is not positive.
  void validate() const;
};

/// Splits notes into vertical events at every distinct onset and offset.
///
/// Each event holds the notes sounding on [boundary_k, boundary_{k+1});
/// stretches where nothing sounds yield no event. Grace notes are merged into
/// the first event starting at or after their onset.
MusicFragment chordify(std::span<const Note> notes, std::string source_label = {});

/// Renders events back to notes, one per raw pitch (or per pitch class,
/// placed in octave 4, when the chord has no raw pitches).
std::vector<Note> events_to_notes(const MusicFragment& fragment);

/// Transposes every event's chord.
MusicFragment transpose(const MusicFragment& fragment, int semitones);

}  // namespace tma
