/// @file
/// @brief Built-in reference fragment used by the regression suite.

#include "tma/fixtures.h"

#include <initializer_list>

namespace tma {
namespace {

struct Row {
  std::initializer_list<int> pcs;
  std::int64_t dur_num, dur_den;
  std::int64_t on_num, on_den;
};

// Durations printed as 0.333, 0.1666, 0.08333 are 1/3, 1/6, 1/12.
const Row kLuna[] = {
    {{5, 9, 0}, 1, 2, 0, 1},
    {{4, 8, 9, 11}, 1, 2, 1, 2},
    {{10, 11, 3, 5, 6}, 1, 4, 1, 1},
    {{10, 11, 3, 6}, 1, 4, 5, 4},
    {{8, 9, 10, 11, 1, 2, 4, 5}, 1, 4, 3, 2},
    {{9, 10, 11, 2, 5}, 1, 4, 7, 4},
    {{2, 3, 7, 10}, 1, 4, 2, 1},
    {{2, 3, 6, 7, 10}, 1, 4, 9, 4},
    {{9, 0, 1, 3, 4}, 1, 4, 5, 2},
    {{9, 1, 3, 4}, 1, 4, 11, 4},
    {{6, 8, 9, 11, 2}, 1, 2, 3, 1},
    {{0, 1, 3, 7, 8}, 1, 4, 7, 2},
    {{7, 11, 1, 2}, 1, 4, 15, 4},
    {{6, 10, 0, 1}, 1, 2, 4, 1},
    {{0, 4, 6, 7}, 1, 4, 9, 2},
    {{0, 4, 6, 7, 8}, 1, 4, 19, 4},
    {{4, 5, 9, 11, 0}, 1, 3, 5, 1},
    {{4, 5, 9, 0}, 1, 6, 16, 3},
    {{3, 4, 7, 8, 9, 10, 11}, 1, 6, 11, 2},
    {{8, 9, 11, 0, 2, 4}, 1, 3, 17, 3},
    {{10, 11, 1, 3, 6}, 1, 4, 6, 1},
    {{10, 11, 1, 3, 4, 6}, 1, 12, 25, 4},
    {{10, 11, 0, 3, 4, 6}, 1, 6, 19, 3},
    {{10, 11, 0, 2, 5}, 1, 6, 13, 2},
    {{9, 10, 11, 2, 5}, 1, 3, 20, 3},
    {{7, 8, 10, 2, 3}, 1, 2, 7, 1},
    {{9, 1, 3, 4, 5}, 1, 4, 15, 2},
    {{2, 5, 6, 8, 9}, 1, 4, 31, 4},
};

}  // namespace

MusicFragment luna_fragment() {
  MusicFragment fragment;
  fragment.source_label = "luna-gh-fjh-mm1-2";
  std::size_t index = 0;
  for (const Row& row : kLuna) {
    VerticalEvent ev;
    ev.chord = Chord::from_pitch_classes(row.pcs);
    ev.duration = Rational(row.dur_num, row.dur_den);
    ev.onset = Rational(row.on_num, row.on_den);
    ev.index = index++;
    fragment.events.push_back(std::move(ev));
  }
  return fragment;
}

}  // namespace tma
