/// @file
/// @brief Canonical JSON encoding of music fragments.

#include "tma/fragment_json.h"

#include <json.hpp>

#include "tma/errors.h"

namespace tma {
namespace {

using nlohmann::json;

Rational read_rational(const json& j, const std::string& ptr, bool allow_zero) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw SchemaViolation(ptr, "expected [numerator, denominator] integer pair");
  }
  const auto num = j[0].get<std::int64_t>();
  const auto den = j[1].get<std::int64_t>();
  if (den <= 0) throw SchemaViolation(ptr + "/1", "denominator must be positive");
  if (num < 0 || (num == 0 && !allow_zero)) {
    throw SchemaViolation(ptr + "/0", allow_zero ? "numerator must be non-negative" : "numerator must be positive");
  }
  return Rational(num, den);
}

json write_rational(const Rational& r) { return json::array({r.numerator(), r.denominator()}); }

int read_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw SchemaViolation(ptr, "expected integer");
  return j.get<int>();
}

MusicFragment parse_events(const json& events, std::string label) {
  if (!events.is_array()) throw SchemaViolation("/events", "expected array");
  MusicFragment fragment;
  fragment.source_label = std::move(label);
  for (std::size_t k = 0; k < events.size(); ++k) {
    const std::string ptr = "/events/" + std::to_string(k);
    const json& e = events[k];
    if (!e.is_object()) throw SchemaViolation(ptr, "expected object");
    for (const char* key : {"pcs", "duration", "onset"}) {
      if (!e.contains(key)) throw SchemaViolation(ptr, std::string("missing \"") + key + "\"");
    }
    const json& pcs = e["pcs"];
    if (!pcs.is_array()) throw SchemaViolation(ptr + "/pcs", "expected array");
    std::vector<int> classes;
    PitchClassMask seen = 0;
    for (std::size_t m = 0; m < pcs.size(); ++m) {
      const std::string p = ptr + "/pcs/" + std::to_string(m);
      const int v = read_int(pcs[m], p);
      if (v < 0 || v > 11) throw SchemaViolation(p, "pitch class out of range 0..11");
      if ((seen >> v) & 1u) throw SchemaViolation(p, "duplicate pitch class");
      seen |= static_cast<PitchClassMask>(1u << v);
      classes.push_back(v);
    }
    VerticalEvent ev;
    ev.chord = Chord::from_pitch_classes(classes);
    if (e.contains("pitches")) {
      const json& pitches = e["pitches"];
      if (!pitches.is_array()) throw SchemaViolation(ptr + "/pitches", "expected array");
      std::vector<int> raw;
      for (std::size_t m = 0; m < pitches.size(); ++m) {
        const std::string p = ptr + "/pitches/" + std::to_string(m);
        const int v = read_int(pitches[m], p);
        if (!ev.chord.contains(PitchClass(v))) throw SchemaViolation(p, "pitch not in the event's pitch classes");
        raw.push_back(v);
      }
      if (!raw.empty()) {
        Chord with_pitches = Chord::from_pitches(raw);
        if (with_pitches.mask() != ev.chord.mask()) {
          throw SchemaViolation(ptr + "/pitches", "pitches do not cover every pitch class");
        }
        ev.chord = std::move(with_pitches);
      }
    }
    ev.duration = read_rational(e["duration"], ptr + "/duration", false);
    ev.onset = read_rational(e["onset"], ptr + "/onset", true);
    if (k > 0 && !(fragment.events.back().onset < ev.onset)) {
      throw SchemaViolation(ptr + "/onset", "onsets must be strictly increasing");
    }
    ev.index = k;
    fragment.events.push_back(std::move(ev));
  }
  return fragment;
}

MusicFragment parse_notes(const json& notes, std::string label) {
  if (!notes.is_array()) throw SchemaViolation("/notes", "expected array");
  std::vector<Note> parsed;
  for (std::size_t k = 0; k < notes.size(); ++k) {
    const std::string ptr = "/notes/" + std::to_string(k);
    const json& n = notes[k];
    if (!n.is_object()) throw SchemaViolation(ptr, "expected object");
    for (const char* key : {"pitch", "onset"}) {
      if (!n.contains(key)) throw SchemaViolation(ptr, std::string("missing \"") + key + "\"");
    }
    Note note;
    note.pitch = read_int(n["pitch"], ptr + "/pitch");
    note.onset = read_rational(n["onset"], ptr + "/onset", true);
    if (n.contains("grace")) {
      if (!n["grace"].is_boolean()) throw SchemaViolation(ptr + "/grace", "expected boolean");
      note.grace = n["grace"].get<bool>();
    }
    if (!note.grace || n.contains("duration")) {
      if (!n.contains("duration")) throw SchemaViolation(ptr, "missing \"duration\"");
      note.duration = read_rational(n["duration"], ptr + "/duration", note.grace);
    }
    parsed.push_back(note);
  }
  return chordify(parsed, std::move(label));
}

}  // namespace

MusicFragment parse_fragment_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaViolation("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaViolation("", "expected object");
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw SchemaViolation("/label", "expected string");
    label = doc["label"].get<std::string>();
  }
  const bool has_events = doc.contains("events");
  const bool has_notes = doc.contains("notes");
  if (has_events == has_notes) throw SchemaViolation("", "expected exactly one of \"events\" or \"notes\"");
  return has_events ? parse_events(doc["events"], std::move(label)) : parse_notes(doc["notes"], std::move(label));
}

std::string serialize_fragment_json(const MusicFragment& fragment) {
  json events = json::array();
  for (const auto& e : fragment.events) {
    json ev = json::object();
    ev["pcs"] = e.chord.values();
    if (!e.chord.raw_pitches().empty()) ev["pitches"] = e.chord.raw_pitches();
    ev["duration"] = write_rational(e.duration);
    ev["onset"] = write_rational(e.onset);
    events.push_back(std::move(ev));
  }
  json doc = json::object();
  doc["label"] = fragment.source_label;
  doc["events"] = std::move(events);
  return doc.dump(2) + "\n";
}

}  // namespace tma
