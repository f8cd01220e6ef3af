/// @file
/// @brief The six point-cloud embeddings of a fragment's vertical events.

#include "tma/mappings.h"

#include <cmath>

#include <json.hpp>

#include "tma/errors.h"
#include "tma/io.h"

namespace tma {
namespace {

constexpr int kPitchOffset = 12;

}  // namespace

std::string_view to_string(MappingId id) {
  switch (id) {
    case MappingId::kI: return "I";
    case MappingId::kII: return "II";
    case MappingId::kIII: return "III";
    case MappingId::kIV: return "IV";
    case MappingId::kV: return "V";
    case MappingId::kVI: return "VI";
  }
  return "?";
}

std::optional<MappingId> parse_mapping(std::string_view roman) {
  for (MappingId id : kAllMappings) {
    if (to_string(id) == roman) return id;
  }
  return std::nullopt;
}

std::size_t mapping_dimension(MappingId id) {
  switch (id) {
    case MappingId::kI: return 14;
    case MappingId::kII: return 8;
    case MappingId::kIII: return 6;
    case MappingId::kIV:
    case MappingId::kV:
    case MappingId::kVI: return 12;
  }
  return 0;
}

bool mapping_has_time(MappingId id) { return id == MappingId::kI || id == MappingId::kII; }

Point padded_pitch_point(const Chord& chord) {
  Point p(kPitchClassCount, 0.0);
  const auto& nf = chord.normal_form();
  for (std::size_t k = 0; k < nf.size(); ++k) p[k] = nf[k].value() + kPitchOffset;
  return p;
}

Point pitch_time_point(const VerticalEvent& event) {
  Point p = padded_pitch_point(event.chord);
  p.push_back(to_double(event.duration));
  p.push_back(to_double(event.onset));
  return p;
}

Point interval_vector_point(const Chord& chord) {
  const auto iv = interval_vector(chord);
  return Point(iv.counts.begin(), iv.counts.end());
}

Point interval_time_point(const VerticalEvent& event) {
  Point p = interval_vector_point(event.chord);
  p.push_back(to_double(event.duration));
  p.push_back(to_double(event.onset));
  return p;
}

Point indicator_point(const Chord& chord) {
  Point p(kPitchClassCount, 0.0);
  for (PitchClass pc : chord.normal_form()) p[pc.value()] = 1.0;
  return p;
}

Point pitch_interval_point(const Chord& chord) {
  Point p(kPitchClassCount, 0.0);
  const auto& nf = chord.normal_form();
  for (std::size_t k = 0; k + 1 < nf.size(); ++k) p[nf[k].value()] = directed_interval(nf[k], nf[k + 1]);
  return p;
}

Point map_event(MappingId id, const VerticalEvent& event) {
  switch (id) {
    case MappingId::kI: return pitch_time_point(event);
    case MappingId::kII: return interval_time_point(event);
    case MappingId::kIII: return interval_vector_point(event.chord);
    case MappingId::kIV: return indicator_point(event.chord);
    case MappingId::kV: return padded_pitch_point(event.chord);
    case MappingId::kVI: return pitch_interval_point(event.chord);
  }
  return {};
}

PointCloud map_fragment(MappingId id, const MusicFragment& fragment) {
  PointCloud cloud;
  cloud.mapping = id;
  cloud.dimension = mapping_dimension(id);
  cloud.source_label = fragment.source_label;
  cloud.points.reserve(fragment.events.size());
  for (const auto& e : fragment.events) cloud.points.push_back(map_event(id, e));
  return cloud;
}

Chord chord_from_indicator(const Point& p) {
  if (p.size() != kPitchClassCount) throw Error("indicator vector must have 12 coordinates");
  std::vector<int> pcs;
  for (int k = 0; k < kPitchClassCount; ++k) {
    if (p[k] != 0.0) pcs.push_back(k);
  }
  return Chord::from_pitch_classes(pcs);
}

Chord chord_from_padded_pitch(const Point& p) {
  if (p.size() < kPitchClassCount) throw Error("padded pitch vector must have at least 12 coordinates");
  std::vector<int> pcs;
  for (int k = 0; k < kPitchClassCount && p[k] != 0.0; ++k) {
    pcs.push_back(static_cast<int>(std::lround(p[k])) - kPitchOffset);
  }
  return Chord::from_pitch_classes(pcs);
}

Chord chord_from_pitch_interval(const Point& p) {
  if (p.size() != kPitchClassCount) throw Error("pitch-interval vector must have 12 coordinates");
  std::vector<int> pcs;
  for (int k = 0; k < kPitchClassCount; ++k) {
    if (p[k] == 0.0) continue;
    pcs.push_back(k);
    pcs.push_back(k + static_cast<int>(std::lround(p[k])));
  }
  return Chord::from_pitch_classes(pcs);
}

std::string point_cloud_csv(const PointCloud& cloud) {
  std::string out;
  for (const auto& pt : cloud.points) {
    for (std::size_t k = 0; k < pt.size(); ++k) {
      if (k) out += ',';
      out += format_double(pt[k]);
    }
    out += '\n';
  }
  return out;
}

std::string point_cloud_json(const PointCloud& cloud) {
  nlohmann::json doc = nlohmann::json::object();
  doc["mapping"] = std::string(to_string(cloud.mapping));
  doc["dimension"] = cloud.dimension;
  doc["label"] = cloud.source_label;
  doc["points"] = cloud.points;
  return doc.dump(2) + "\n";
}

}  // namespace tma
