#pragma once

#include <optional>
#include <vector>

#include "snakestat/states.hpp"
#include "snakestat/tiling.hpp"

namespace snakestat {

// A Markov state placed in the patch: its directed edges in left-to-right
// order.  The allowable region of the placement is determined by the state
// and the edges alone and is computed on demand.
struct PlacedStep {
  SnakeState state;
  std::vector<Tiling::Dir> edges;
};

// Successor placement produced by one application of the case analysis.
struct StepChoice {
  PlacedStep step;
  RegionSet region;
};

// Region and subdivision machinery over a frozen patch.  Regions are
// finite intersections of half-planes bounded by geodesics of the net;
// on the patch they are realized as vertex sets via edge-cut reachability.
//
// Piece classification compares vertex sets on an inner ball only: the
// patch boundary truncates breadth-first reachability, but every feature
// distinguishing two region shapes lies within a couple of octagon layers
// of the step being classified.
class RegionEngine {
 public:
  RegionEngine(const Tiling& t, int compare_radius);

  // Canonical region of a placed step (its shape depends only on the
  // state and the placement, never on history; this is asserted wherever
  // a subdivision recomputes one as a piece).
  RegionSet region(const PlacedStep& step);

  // Case analysis: all successor placements of `step` with their regions,
  // each region a designated subregion of region(step).  For A-family and
  // D steps this runs the geodesic subdivision around the head vertex;
  // for B, C, C', E the successor is forced by the octagon structure.
  // Appends to `out`; returns true when the head vertex can end the path
  // here (the Fi piece is nonempty), which only A-family and D admit.
  bool classify_step(const PlacedStep& step, std::vector<StepChoice>& out);

  // Placement helpers used by the matrix builder and tests; each places
  // the step so that everything it needs lies deep inside the patch.
  PlacedStep place_with_head_at_base(const SnakeState& s);

  const Tiling& tiling() const { return *t_; }
  const RegionSet& inner_mask() const { return inner_; }

 private:
  RegionSet region_a_family(const SnakeState& s, Tiling::Dir e);
  RegionSet region_a_plain(Tiling::Dir e);
  RegionSet wedge_at(Tiling::Vertex entry, Tiling::Face f);
  RegionSet region_bccp(const PlacedStep& step);
  RegionSet region_d(const PlacedStep& step);
  RegionSet region_e(const PlacedStep& step);

  // The octagon of a two/three-edge step together with its entry corner.
  std::pair<Tiling::Face, Tiling::Vertex> octagon_of(const PlacedStep& step) const;

  const Tiling* t_;
  HalfplaneCache hp_;
  RegionSet inner_;
};

// Forced-successor tables shared by the matrix builder and the snake
// decoder; derived from the relator rotations.
SnakeState forced_after_b(const SnakeState& b);
SnakeState forced_after_c(const SnakeState& c);
std::array<SnakeState, 3> choices_after_cp(const SnakeState& cp);  // D, EL, ER
SnakeState forced_after_e(const SnakeState& e);

}  // namespace snakestat
