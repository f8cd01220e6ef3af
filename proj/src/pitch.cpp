/// @file
/// @brief Pitch-class arithmetic, normal forms and interval vectors.

#include "tma/pitch.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tma {
namespace {

PitchClassMask mask_of(std::span<const PitchClass> pcs) {
  PitchClassMask mask = 0;
  for (PitchClass pc : pcs) mask |= static_cast<PitchClassMask>(1u << pc.value());
  return mask;
}

std::vector<int> sorted_members(PitchClassMask mask) {
  std::vector<int> out;
  for (int pc = 0; pc < kPitchClassCount; ++pc) {
    if ((mask >> pc) & 1u) out.push_back(pc);
  }
  return out;
}

std::vector<std::vector<int>> rotations(const std::vector<int>& sorted) {
  std::vector<std::vector<int>> out;
  const std::size_t n = sorted.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<int> rot(n);
    for (std::size_t k = 0; k < n; ++k) rot[k] = sorted[(start + k) % n];
    out.push_back(std::move(rot));
  }
  return out;
}

int mod12(int x) { return ((x % kPitchClassCount) + kPitchClassCount) % kPitchClassCount; }

// Span first-to-last, then intervals from the first element to the second,
// third, ... element.
std::vector<int> forte_key(const std::vector<int>& rot) {
  std::vector<int> key;
  key.reserve(rot.size());
  key.push_back(mod12(rot.back() - rot.front()));
  for (std::size_t k = 1; k < rot.size(); ++k) key.push_back(mod12(rot[k] - rot.front()));
  return key;
}

std::vector<int> most_packed(const std::vector<int>& sorted) {
  auto rots = rotations(sorted);
  return *std::min_element(rots.begin(), rots.end(), [](const auto& a, const auto& b) {
    const auto ka = forte_key(a);
    const auto kb = forte_key(b);
    if (ka != kb) return ka < kb;
    return a.front() < b.front();
  });
}

std::vector<int> zero_based(const std::vector<int>& rot) {
  std::vector<int> out(rot.size());
  for (std::size_t k = 0; k < rot.size(); ++k) out[k] = mod12(rot[k] - rot.front());
  return out;
}

std::vector<int> successive_intervals(const std::vector<int>& rot) {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < rot.size(); ++k) out.push_back(mod12(rot[k + 1] - rot[k]));
  return out;
}

}  // namespace

std::vector<int> prime_form(PitchClassMask mask) {
  const auto members = sorted_members(mask);
  if (members.empty()) return {};
  std::vector<int> inverted;
  for (int pc : members) inverted.push_back(mod12(-pc));
  std::sort(inverted.begin(), inverted.end());
  auto direct = zero_based(most_packed(members));
  auto mirrored = zero_based(most_packed(inverted));
  return forte_key(mirrored) < forte_key(direct) ? mirrored : direct;
}

std::vector<PitchClass> normal_form(PitchClassMask mask) {
  const auto members = sorted_members(mask);
  if (members.empty()) return {};
  const auto prime_steps = successive_intervals(prime_form(mask));

  auto rots = rotations(members);
  std::vector<std::vector<int>> matches;
  for (const auto& rot : rots) {
    if (successive_intervals(rot) == prime_steps) matches.push_back(rot);
  }
  if (matches.empty()) {
    for (const auto& rot : rots) {
      auto steps = successive_intervals(rot);
      std::reverse(steps.begin(), steps.end());
      if (steps == prime_steps) matches.push_back(rot);
    }
  }
  const auto& best = *std::min_element(matches.begin(), matches.end(),
                                       [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<PitchClass> out;
  out.reserve(best.size());
  for (int v : best) out.emplace_back(v);
  return out;
}

std::vector<PitchClass> normal_form(std::span<const PitchClass> pcs) { return normal_form(mask_of(pcs)); }

int IntervalVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Chord Chord::from_mask(PitchClassMask mask) {
  Chord chord;
  chord.mask_ = static_cast<PitchClassMask>(mask & 0x0FFFu);
  chord.normal_form_ = tma::normal_form(chord.mask_);
  return chord;
}

Chord Chord::from_pitch_classes(std::span<const int> pcs) {
  PitchClassMask mask = 0;
  for (int v : pcs) mask |= static_cast<PitchClassMask>(1u << PitchClass(v).value());
  return from_mask(mask);
}

Chord Chord::from_pitch_classes(std::initializer_list<int> pcs) {
  return from_pitch_classes(std::span<const int>(pcs.begin(), pcs.size()));
}

Chord Chord::from_pitches(std::span<const int> midi_pitches) {
  Chord chord = from_pitch_classes(midi_pitches);
  chord.raw_pitches_.assign(midi_pitches.begin(), midi_pitches.end());
  std::sort(chord.raw_pitches_.begin(), chord.raw_pitches_.end());
  return chord;
}

void Chord::merge_pitches(std::span<const int> midi_pitches) {
  for (int p : midi_pitches) {
    mask_ |= static_cast<PitchClassMask>(1u << PitchClass(p).value());
    raw_pitches_.push_back(p);
  }
  std::sort(raw_pitches_.begin(), raw_pitches_.end());
  normal_form_ = tma::normal_form(mask_);
}

std::vector<int> Chord::values() const {
  std::vector<int> out;
  out.reserve(normal_form_.size());
  for (PitchClass pc : normal_form_) out.push_back(pc.value());
  return out;
}

std::string Chord::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < normal_form_.size(); ++k) {
    if (k) os << ',';
    os << normal_form_[k].value();
  }
  os << ')';
  return os.str();
}

IntervalVector interval_vector(const Chord& chord) {
  IntervalVector iv;
  const auto& pcs = chord.normal_form();
  for (std::size_t a = 0; a < pcs.size(); ++a) {
    for (std::size_t b = a + 1; b < pcs.size(); ++b) {
      const int ic = interval_class(pcs[a], pcs[b]);
      if (ic > 0) ++iv.counts[ic - 1];
    }
  }
  return iv;
}

Chord transpose(const Chord& chord, int semitones) {
  std::vector<int> pitches;
  if (!chord.raw_pitches().empty()) {
    for (int p : chord.raw_pitches()) pitches.push_back(p + semitones);
    return Chord::from_pitches(pitches);
  }
  for (int v : chord.values()) pitches.push_back(v + semitones);
  return Chord::from_pitch_classes(pitches);
}

Chord invert(const Chord& chord) {
  std::vector<int> pcs;
  for (int v : chord.values()) pcs.push_back(-v);
  return Chord::from_pitch_classes(pcs);
}

}  // namespace tma
