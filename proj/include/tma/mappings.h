/// @file
/// @brief The six point-cloud embeddings of a fragment's vertical events.
///
///   I   (14) pitch classes as 12..23 in normal-form order, zero-padded, then
///            duration and onset
///   II  (8)  interval vector, duration, onset
///   III (6)  interval vector
///   IV  (12) 0/1 indicator of each pitch class
///   V   (12) first twelve coordinates of I
///   VI  (12) at coordinate pc, the directed interval to the next pitch class
///            of the normal form (0 for the last one and for absent classes)

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tma/fragment.h"

namespace tma {

enum class MappingId { kI, kII, kIII, kIV, kV, kVI };

inline constexpr std::array<MappingId, 6> kAllMappings = {MappingId::kI,  MappingId::kII, MappingId::kIII,
                                                          MappingId::kIV, MappingId::kV,  MappingId::kVI};

std::string_view to_string(MappingId id);
std::optional<MappingId> parse_mapping(std::string_view roman);
std::size_t mapping_dimension(MappingId id);
/// Mappings I and II carry duration and onset.
bool mapping_has_time(MappingId id);

using Point = std::vector<double>;

struct PointCloud {
  MappingId mapping = MappingId::kI;
  std::size_t dimension = 0;
  std::vector<Point> points;
  std::string source_label;
};

Point pitch_time_point(const VerticalEvent& event);        // I
Point interval_time_point(const VerticalEvent& event);     // II
Point interval_vector_point(const Chord& chord);           // III
Point indicator_point(const Chord& chord);                 // IV
Point padded_pitch_point(const Chord& chord);              // V
Point pitch_interval_point(const Chord& chord);            // VI

Point map_event(MappingId id, const VerticalEvent& event);
PointCloud map_fragment(MappingId id, const MusicFragment& fragment);

/// Recover a chord's pitch classes from its image under IV, V or VI. For VI a
/// single-pitch-class chord maps to the zero vector and cannot be recovered.
Chord chord_from_indicator(const Point& p);
Chord chord_from_padded_pitch(const Point& p);
Chord chord_from_pitch_interval(const Point& p);

/// One point per row, comma separated.
std::string point_cloud_csv(const PointCloud& cloud);
std::string point_cloud_json(const PointCloud& cloud);

}  // namespace tma
