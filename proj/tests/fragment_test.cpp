/// @file
/// @brief Tests for chordification and the fragment JSON format.

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.h"
#include "tma/errors.h"
#include "tma/fixtures.h"
#include "tma/fragment.h"
#include "tma/fragment_json.h"

namespace tma {
namespace {

Note note(int pitch, Rational onset, Rational duration) { return Note{pitch, onset, duration, false}; }

TEST(ChordifyTest, SingleNote) {
  const std::vector<Note> notes{note(60, 0, 1)};
  const MusicFragment f = chordify(notes);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.events[0].chord.values(), std::vector<int>{0});
  EXPECT_EQ(f.events[0].duration, Rational(1));
  EXPECT_EQ(f.events[0].onset, Rational(0));
}

TEST(ChordifyTest, OverlappingNotes) {
  const std::vector<Note> notes{note(60, 0, 2), note(64, 1, 2)};
  const MusicFragment f = chordify(notes);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.events[0].chord.values(), std::vector<int>{0});
  EXPECT_EQ(f.events[1].chord.values(), (std::vector<int>{0, 4}));
  EXPECT_EQ(f.events[2].chord.values(), std::vector<int>{4});
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(f.events[i].onset, Rational(static_cast<std::int64_t>(i)));
    EXPECT_EQ(f.events[i].duration, Rational(1));
    EXPECT_EQ(f.events[i].index, i);
  }
}

TEST(ChordifyTest, ShortNoteInsideChordSplitsIt) {
  // Events 9 and 10 of the fixture: pc 0 sounds for the first quarter of a
  // half-beat chord.
  const std::vector<Note> notes{note(69, Rational(5, 2), Rational(1, 2)), note(72, Rational(5, 2), Rational(1, 4)),
                                note(73, Rational(5, 2), Rational(1, 2)), note(75, Rational(5, 2), Rational(1, 2)),
                                note(76, Rational(5, 2), Rational(1, 2))};
  const MusicFragment f = chordify(notes);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.events[0].chord.values(), (std::vector<int>{9, 0, 1, 3, 4}));
  EXPECT_EQ(f.events[0].onset, Rational(5, 2));
  EXPECT_EQ(f.events[0].duration, Rational(1, 4));
  EXPECT_EQ(f.events[1].chord.values(), (std::vector<int>{9, 1, 3, 4}));
  EXPECT_EQ(f.events[1].onset, Rational(11, 4));
}

TEST(ChordifyTest, EmptyInputAndRests) {
  EXPECT_TRUE(chordify(std::vector<Note>{}).empty());
  const std::vector<Note> notes{note(60, 0, 1), note(62, 2, 1)};
  const MusicFragment f = chordify(notes);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.events[1].onset, Rational(2));
}

TEST(ChordifyTest, GraceNoteJoinsFollowingChord) {
  std::vector<Note> notes{note(60, 0, 1), note(64, 1, 1)};
  notes.push_back(Note{67, Rational(1), Rational(0), true});
  const MusicFragment f = chordify(notes);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.events[1].chord.values(), (std::vector<int>{4, 7}));
}

/// Pitch classes sounding at time t, by direct scan.
std::set<int> sounding(const std::vector<Note>& notes, Rational t) {
  std::set<int> out;
  for (const Note& n : notes) {
    if (n.onset <= t && t < n.offset()) out.insert(((n.pitch % 12) + 12) % 12);
  }
  return out;
}

TEST(ChordifyTest, RandomNotesKeepEverySoundingInstant) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> count(1, 12);
  std::uniform_int_distribution<int> pitch(48, 84);
  std::uniform_int_distribution<int> tick(0, 16);
  std::uniform_int_distribution<int> len(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Note> notes;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) notes.push_back(note(pitch(rng), Rational(tick(rng), 4), Rational(len(rng), 4)));
    const MusicFragment f = chordify(notes);
    EXPECT_NO_THROW(f.validate());
    // Sample every sixteenth: a note sounds there iff some event covers it
    // with exactly the sounding classes.
    for (int s = 0; s < 100; ++s) {
      const Rational t(s, 4);
      const std::set<int> expected = sounding(notes, t);
      const VerticalEvent* covering = nullptr;
      for (const auto& ev : f.events) {
        if (ev.onset <= t && t < ev.offset()) covering = &ev;
      }
      if (expected.empty()) {
        EXPECT_EQ(covering, nullptr);
        continue;
      }
      ASSERT_NE(covering, nullptr);
      const std::vector<int> v = covering->chord.values();
      EXPECT_EQ(std::set<int>(v.begin(), v.end()), expected);
    }
    // Rendering back and re-chordifying keeps the event boundaries.
    const MusicFragment again = chordify(events_to_notes(f));
    ASSERT_EQ(again.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_EQ(again.events[i].onset, f.events[i].onset);
      EXPECT_EQ(again.events[i].duration, f.events[i].duration);
      EXPECT_EQ(again.events[i].chord, f.events[i].chord);
    }
  }
}

TEST(FragmentJsonTest, RoundTripsTheFixture) {
  const MusicFragment luna = luna_fragment();
  const std::string text = serialize_fragment_json(luna);
  const MusicFragment back = parse_fragment_json(text);
  ASSERT_EQ(back.size(), 28u);
  EXPECT_EQ(back.source_label, luna.source_label);
  EXPECT_EQ(back.events[0].chord.values(), (std::vector<int>{5, 9, 0}));
  EXPECT_EQ(back.events[0].duration, Rational(1, 2));
  EXPECT_EQ(back.events[0].onset, Rational(0));
  for (std::size_t i = 0; i < luna.size(); ++i) {
    EXPECT_EQ(back.events[i].chord, luna.events[i].chord);
    EXPECT_EQ(back.events[i].onset, luna.events[i].onset);
    EXPECT_EQ(back.events[i].duration, luna.events[i].duration);
  }
  EXPECT_EQ(serialize_fragment_json(back), text);
}

TEST(FragmentJsonTest, RoundTripsRandomFragmentsWithPitches) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    MusicFragment f = testing::random_fragment(rng, 10);
    f = chordify(events_to_notes(f), "r");
    const std::string text = serialize_fragment_json(f);
    EXPECT_EQ(serialize_fragment_json(parse_fragment_json(text)), text);
  }
}

TEST(FragmentJsonTest, EmptyEvents) {
  EXPECT_TRUE(parse_fragment_json(R"({"label": "x", "events": []})").empty());
}

TEST(FragmentJsonTest, ViolationsCarryPointers) {
  try {
    parse_fragment_json(
        R"({"label": "x", "events": [{"pcs": [0], "duration": [1, 2], "onset": [0, 1]},
                                      {"pcs": [4], "duration": [0, 1], "onset": [1, 2]}]})");
    FAIL() << "expected SchemaViolation";
  } catch (const SchemaViolation& e) {
    EXPECT_TRUE(e.pointer().starts_with("/events/1/duration")) << e.pointer();
  }
  EXPECT_THROW(parse_fragment_json(R"({"events": [{"pcs": [12], "duration": [1,1], "onset": [0,1]}]})"),
               SchemaViolation);
  EXPECT_THROW(parse_fragment_json("not json"), SchemaViolation);
  EXPECT_THROW(parse_fragment_json(R"({"events": {}})"), SchemaViolation);
}

TEST(FragmentJsonTest, NotesFormWithGrace) {
  const MusicFragment f = parse_fragment_json(R"({"label": "g", "notes": [
      {"pitch": 60, "onset": [0, 1], "duration": [1, 1]},
      {"pitch": 66, "onset": [1, 1], "duration": [0, 1], "grace": true},
      {"pitch": 64, "onset": [1, 1], "duration": [1, 1]}]})");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.events[1].chord.values(), (std::vector<int>{4, 6}));
}

TEST(FragmentTest, TransposeShiftsEveryChord) {
  const MusicFragment luna = luna_fragment();
  const MusicFragment up = transpose(luna, 2);
  EXPECT_EQ(up.events[0].chord.values(), (std::vector<int>{7, 11, 2}));
  EXPECT_EQ(up.events[5].onset, luna.events[5].onset);
}

}  // namespace
}  // namespace tma
