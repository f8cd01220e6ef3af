/// @file
/// @brief Standard MIDI File (formats 0 and 1) ingestion.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tma/fragment.h"

namespace tma {

/// MIDI channel 10 (zero-based 9) carries unpitched percussion.
inline constexpr int kPercussionChannel = 9;

struct MidiParseResult {
  MusicFragment fragment;
  /// Pitched notes extracted before chordification, in file order.
  std::vector<Note> notes;
  std::vector<std::string> warnings;
  int format = 0;
  int ticks_per_quarter = 0;
};

/// Parses an SMF and chordifies its pitched notes.
///
/// Onsets and durations are exact tick counts divided by the file's
/// ticks-per-quarter. Percussion-channel notes are dropped. A note-on left open
/// at the end of its track is closed there and reported in `warnings`.
/// Throws MidiError on malformed input or a format-2 / SMPTE-timed file.
MidiParseResult parse_midi(std::span<const std::uint8_t> bytes, std::string source_label = {});

}  // namespace tma
