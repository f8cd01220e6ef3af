/// @file
/// @brief Vertical events, music fragments, and chordification.

#include "tma/fragment.h"

#include <algorithm>

#include "tma/errors.h"

namespace tma {

std::vector<Chord> MusicFragment::chords() const {
  std::vector<Chord> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.chord);
  return out;
}

void MusicFragment::validate() const {
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    if (e.index != k) throw Error("event " + std::to_string(k) + " has index " + std::to_string(e.index));
    if (e.duration <= 0) throw Error("event " + std::to_string(k) + " has non-positive duration");
    if (e.onset < 0) throw Error("event " + std::to_string(k) + " has negative onset");
    if (k > 0 && !(events[k - 1].onset < e.onset)) {
      throw Error("event " + std::to_string(k) + " does not start after event " + std::to_string(k - 1));
    }
  }
}

MusicFragment chordify(std::span<const Note> notes, std::string source_label) {
  MusicFragment fragment;
  fragment.source_label = std::move(source_label);

  std::vector<const Note*> timed;
  std::vector<const Note*> grace;
  for (const auto& n : notes) {
    if (n.grace) {
      grace.push_back(&n);
      continue;
    }
    if (n.duration <= 0) throw Error("note with non-positive duration");
    timed.push_back(&n);
  }

  std::vector<Rational> bounds;
  bounds.reserve(2 * timed.size());
  for (const Note* n : timed) {
    bounds.push_back(n->onset);
    bounds.push_back(n->offset());
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  // Sweep with notes ordered by onset; `active` holds notes started so far.
  std::vector<const Note*> by_onset = timed;
  std::stable_sort(by_onset.begin(), by_onset.end(),
                   [](const Note* a, const Note* b) { return a->onset < b->onset; });
  std::vector<const Note*> active;
  std::size_t next = 0;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const Rational& start = bounds[k];
    while (next < by_onset.size() && by_onset[next]->onset <= start) active.push_back(by_onset[next++]);
    std::erase_if(active, [&](const Note* n) { return n->offset() <= start; });
    if (active.empty()) continue;

    std::vector<int> pitches;
    pitches.reserve(active.size());
    for (const Note* n : active) pitches.push_back(n->pitch);
    VerticalEvent ev;
    ev.chord = Chord::from_pitches(pitches);
    ev.onset = start;
    ev.duration = bounds[k + 1] - start;
    ev.index = fragment.events.size();
    fragment.events.push_back(std::move(ev));
  }

  for (const Note* g : grace) {
    auto it = std::find_if(fragment.events.begin(), fragment.events.end(),
                           [&](const VerticalEvent& e) { return e.onset >= g->onset; });
    if (it == fragment.events.end()) continue;
    const int p = g->pitch;
    it->chord.merge_pitches(std::span<const int>(&p, 1));
  }
  return fragment;
}

std::vector<Note> events_to_notes(const MusicFragment& fragment) {
  std::vector<Note> notes;
  for (const auto& e : fragment.events) {
    std::vector<int> pitches = e.chord.raw_pitches();
    if (pitches.empty()) {
      for (int v : e.chord.values()) pitches.push_back(60 + v);
    }
    for (int p : pitches) notes.push_back(Note{p, e.onset, e.duration, false});
  }
  return notes;
}

MusicFragment transpose(const MusicFragment& fragment, int semitones) {
  MusicFragment out = fragment;
  for (auto& e : out.events) e.chord = transpose(e.chord, semitones);
  return out;
}

}  // namespace tma
