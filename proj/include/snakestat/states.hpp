#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "snakestat/letters.hpp"

namespace snakestat {

// Case tag of a Markov state.  L/R handedness is part of the tag.
enum class CaseTag : std::uint8_t {
  A, B, C, Cp, D, EL, ER, ApL, ApR, AppL, AppR
};

// Projection onto the vertices of the case graph (St and Fi excluded).
enum class CaseClass : std::uint8_t { A, Ap, App, B, C, Cp, D, E };

CaseClass projection_pi(CaseTag t);
const char* case_class_name(CaseClass c);

// One of the 88 Markov states: a case tag plus one, two, or three edge
// labels (left label first, relative to the direction of traversal).
struct SnakeState {
  CaseTag tag;
  std::array<Letter, 3> labels;  // unused entries hold Letter::a

  int label_count() const {
    switch (tag) {
      case CaseTag::A: case CaseTag::ApL: case CaseTag::ApR:
      case CaseTag::AppL: case CaseTag::AppR: return 1;
      case CaseTag::EL: case CaseTag::ER: return 3;
      default: return 2;
    }
  }
  bool operator==(const SnakeState& o) const {
    if (tag != o.tag) return false;
    for (int i = 0; i < label_count(); ++i)
      if (labels[i] != o.labels[i]) return false;
    return true;
  }
  bool operator<(const SnakeState& o) const;

  std::string token() const;
  static std::optional<SnakeState> from_token(const std::string& tok);
};

// The fixed enumeration of the alphabet: cases in the order
// A, B, C, C', D, EL, ER, A'L, A'R, A''L, A''R, label tuples lexicographic
// under a < b < c < d < A < B < C < D.  Indices are stable across runs and
// used by every serialized artifact.
class StateAlphabet {
 public:
  static const StateAlphabet& instance();

  int size() const { return static_cast<int>(states_.size()); }
  const SnakeState& state(int idx) const { return states_[idx]; }
  int index_of(const SnakeState& s) const;
  std::optional<int> find(const SnakeState& s) const;

  // All indices with the given tag, in enumeration order.
  std::vector<int> indices_with_tag(CaseTag t) const;
  int count_with_class(CaseClass c) const;

 private:
  StateAlphabet();
  std::vector<SnakeState> states_;
};

}  // namespace snakestat
