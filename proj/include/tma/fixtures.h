/// @file
/// @brief Built-in reference fragment used by the regression suite.

#pragma once

#include "tma/fragment.h"

namespace tma {

/// Armando Luna, "Graffiti Hommage to F.J.H.", mm. 1-2: 28 vertical events
/// with exact durations and onsets in quarter notes.
MusicFragment luna_fragment();

}  // namespace tma
