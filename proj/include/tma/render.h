/// @file
/// @brief Standalone SVG plots of diagrams, Betti traces and dendrograms.
///
/// Output carries no external fonts or scripts. The first line after the XML
/// prolog is a version comment; everything else depends only on the input.

#pragma once

#include <string>
#include <string_view>

#include "tma/clustering.h"
#include "tma/harmonic_complexes.h"
#include "tma/mappings.h"
#include "tma/vr_persistence.h"

namespace tma {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr std::string_view kTimeColor = "#008080";   // teal, mappings I-II
inline constexpr std::string_view kPitchColor = "#4b1d6b";  // dark purple, III-VI

/// Bar color for a mapping name such as "IV"; purple if unrecognized.
std::string_view barcode_color(std::string_view mapping);

/// One horizontal bar per diagram point, grouped by dimension.
std::string barcode_svg(const DiagramDocument& doc);

/// Birth-death scatter with the diagonal; infinite deaths on a top line.
std::string persistence_diagram_svg(const DiagramDocument& doc);

/// Step plot of beta_n against complex index, one trace per dimension.
std::string betti_trace_svg(const ComplexSequence& sequence, std::string_view title);

/// Merge tree with linkage height on the vertical axis.
std::string dendrogram_svg(const Dendrogram& d, std::string_view title);

}  // namespace tma
