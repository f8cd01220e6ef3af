/// @file
/// @brief Brute-force reference implementations used only by the tests.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tma/bottleneck.h"
#include "tma/fragment.h"
#include "tma/mappings.h"
#include "tma/simplicial.h"
#include "tma/vr_persistence.h"

namespace tma::testing {

/// Persistence diagrams for dims 0..max_dim of the Rips filtration of
/// `points`, from persistent Betti numbers beta^{s,t} = dim Z(K_s) -
/// dim(Z(K_s) ∩ B(K_t)) over Z/2 at every distinct pairwise distance, then
/// inclusion-exclusion. At most 7 points and max_dim <= 2.
std::vector<PersistenceDiagram> oracle_diagrams(const std::vector<Point>& points, int max_dim);

/// Minimum over all partial matchings (and all bijections of the infinite
/// points) of the largest L-infinity displacement.
double oracle_bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Edge weights of a minimum spanning tree (Prim), ascending.
std::vector<double> mst_weights(const DistanceMatrix& dist);

/// Connected components of the 1-skeleton, by flood fill.
std::size_t component_count(const SimplicialComplex& complex);

/// Random face-closed complex on up to `vertices` vertices.
SimplicialComplex random_complex(std::mt19937& rng, int vertices, int max_simplices, int max_dim);

std::vector<Point> random_cloud(std::mt19937& rng, int max_points, int max_ambient);

/// Diagram with up to `max_points` finite points on a coarse grid (so ties
/// and equal distances occur) and occasionally an infinite point.
PersistenceDiagram random_diagram(std::mt19937& rng, int max_points, int dimension = 0);

Chord random_chord(std::mt19937& rng);

/// Random fragment of `events` chords with quarter/eighth durations.
MusicFragment random_fragment(std::mt19937& rng, int events);

/// Multiset equality of diagram points within `tol`.
bool same_points(const PersistenceDiagram& a, const PersistenceDiagram& b, double tol = 0.0);

/// Minimal SMF writer. Each event is (delta ticks, status, data bytes).
struct MidiEvent {
  std::uint32_t delta = 0;
  std::vector<std::uint8_t> bytes;
};
std::vector<std::uint8_t> write_midi(int format, int ticks_per_quarter,
                                     const std::vector<std::vector<MidiEvent>>& tracks);

/// One note-on/off pair per note on channel `channel`, monophonic-safe.
std::vector<MidiEvent> note_track(const std::vector<Note>& notes, int ticks_per_quarter, int channel = 0);

}  // namespace tma::testing
