/// @file
/// @brief Canonical JSON encoding of music fragments.
///
/// Schema:
///   { "label": string,
///     "events": [ { "pcs": [int 0-11, ...], "pitches": [int, ...] (optional),
///                   "duration": [num, den], "onset": [num, den] }, ... ] }
///
/// A document may carry "notes" instead of "events":
///   "notes": [ { "pitch": int, "onset": [num, den], "duration": [num, den],
///                "grace": bool (optional) }, ... ]
/// which is chordified on load.

#pragma once

#include <string>
#include <string_view>

#include "tma/fragment.h"

namespace tma {

/// Throws SchemaViolation carrying a JSON pointer to the offending value.
MusicFragment parse_fragment_json(std::string_view text);

/// Deterministic encoding; `parse_fragment_json` inverts it exactly.
std::string serialize_fragment_json(const MusicFragment& fragment);

}  // namespace tma
