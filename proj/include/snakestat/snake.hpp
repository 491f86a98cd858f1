#pragma once

#include <memory>
#include <string>
#include <vector>

#include "snakestat/cyclic_word.hpp"
#include "snakestat/markov.hpp"
#include "snakestat/tiling.hpp"

namespace snakestat {

// Periodic edgepath of a reduced cyclic word placed in a patch, together
// with the octagon completions: bubbles, their special points, and the
// per-step edge groups (one edge for arc steps, mirror pairs inside a
// bubble, three edges where a boundary interval joins two bubbles).
class GeometricalSnake {
 public:
  struct Bubble {
    Tiling::Face face;
    Tiling::Vertex entry;
    Tiling::Vertex exit;
    int first_step;  // step index of its B-or-E entry edge group
  };

  const Tiling& tiling() const { return *tiling_; }
  int period() const { return period_; }
  int copies() const { return copies_; }
  int total_steps() const { return period_ * copies_; }
  const std::vector<Tiling::Dir>& step_edges(int t) const { return steps_[t]; }
  const std::vector<Bubble>& bubbles() const { return bubbles_; }

  // Offset of the central period (at least 11 steps of margin both ways).
  int central_start() const { return central_; }

  bool exceptional_flag() const { return exceptional_; }

 private:
  friend GeometricalSnake word_to_snake(const CyclicWord& w);
  friend std::vector<std::string> validate_gs(const GeometricalSnake& s);

  std::shared_ptr<Tiling> tiling_;
  int period_ = 0;
  int copies_ = 0;
  int central_ = 0;
  bool exceptional_ = false;
  std::vector<std::vector<Tiling::Dir>> steps_;
  std::vector<Bubble> bubbles_;
};

// Steps 4-5: place the periodic edgepath of a fully reduced nonempty word
// and complete octagons to a fixed point.  Throws on a trivial word or if
// the word is not equal to its reduce_full image.
GeometricalSnake word_to_snake(const CyclicWord& w);

// Literal checks of the four defining properties plus the four-to-seven
// consecutive edge corollary; returns violated property codes, empty when
// valid.
std::vector<std::string> validate_gs(const GeometricalSnake& s);

// Decodes the central period into the unique state sequence whose image is
// the snake.  The result satisfies the transition matrix (asserted).
std::vector<int> snake_to_states(const GeometricalSnake& s);

// Word -> orbit composite.
std::vector<int> word_to_orbit(const CyclicWord& w);

// The inverse state sequence (the orbit of the inverse word), via the
// edge-reversal rules.  Involutive.
std::vector<int> invert_orbit(const std::vector<int>& orbit);

// Snake image of a state sequence: per-step edge groups placed from the
// base vertex, with `copies` periods.  Used by invert_orbit and tests.
struct PlacedOrbit {
  std::shared_ptr<Tiling> tiling;
  std::vector<std::vector<Tiling::Dir>> steps;  // rotated by `rotation`
  int period;
  int copies;
  int rotation;  // steps[k] realizes orbit[(rotation + k) % period]
};
PlacedOrbit place_orbit(const std::vector<int>& orbit, int copies);

// Least rotation of a state sequence; the normal form every orbit-valued
// function returns.
std::vector<int> least_rotation(std::vector<int> orbit);

}  // namespace snakestat
