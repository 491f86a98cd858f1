#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "snakestat/bigcount.hpp"
#include "snakestat/cyclic_word.hpp"
#include "snakestat/states.hpp"
#include "snakestat/tiling.hpp"

namespace snakestat {

inline constexpr int kNumStates = 88;

// Zero/one transition matrix over the 88-state alphabet, with the start
// and finish fans for finite-path mode.  Construction is geometric: every
// entry comes out of the region subdivision on a patch and is cross
// checked against the case-graph multiplicities.
class TransitionMatrix {
 public:
  static const TransitionMatrix& instance();
  // Builds from scratch on the given patch radii (exposed for tests).
  static TransitionMatrix build(int patch_radius, int compare_radius);

  bool at(int i, int j) const { return a_[i][j]; }
  const std::vector<int>& successors(int i) const { return succ_[i]; }
  const std::vector<int>& predecessors(int j) const { return pred_[j]; }

  bool start_state(int i) const;    // St fans to every A and B state
  bool finish_state(int i) const;   // Fi is reachable from A-family and D

  // Number of group elements of word length n (directed St->Fi paths of
  // length n+1).
  BigCount count_elements_of_length(int n) const;

  // trace(A^n), exact.
  BigCount trace_power(int n) const;
  // Number of period-n sequences that are primitive (exact period n),
  // by Moebius inversion over trace powers.
  BigCount primitive_sequences(int n) const;

  // A^n, exact; n modest (entries grow like 7^n).
  std::vector<std::array<BigCount, kNumStates>> power(int n) const;

  // Streams every cyclic state sequence of period n (least rotation form)
  // exactly once; `exact_period` divides n, and the sequence accounts for
  // `exact_period` distinct period-n tuples.  Budget-capped via the cap
  // argument (throws beyond it).
  void enumerate_periodic(
      int n, const std::function<void(const std::vector<int>&, int exact_period)>& sink,
      int cap = 14) const;

  // Draws one uniform period-n sequence (as a least-rotation tuple) using
  // exact path counts; deterministic in the rng stream.
  std::vector<int> sample_periodic(int n, class Rng& rng) const;

  // Validation report computed during construction.
  struct Report {
    bool a10_has_zero = false;
    int positivity_exponent = 0;  // least n with A^n strictly positive
  };
  const Report& report() const { return report_; }

  std::string dump_json() const;

 private:
  TransitionMatrix() = default;
  void finish_init();
  void validate_case_graph() const;
  void validate_connectivity();

  std::array<std::array<std::uint8_t, kNumStates>, kNumStates> a_{};
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  Report report_;
};

// Left-most edge labels of a periodic state sequence; realizes the map
// from periodic chain elements to cyclic words.
CyclicWord read_word(const std::vector<int>& orbit);

}  // namespace snakestat
