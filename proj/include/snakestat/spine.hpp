#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snakestat/states.hpp"

namespace snakestat {

// Spine alphabet: alpha_x, beta_xy, gamma, delta_xy, eps_y (eps with an
// inverted index plays the role of the barred letter).  The 34 symbols are
// the 8 alphas, the 8 realizable betas, gamma, the 8 realizable deltas and
// the 8 epsilons.
struct SpineSymbol {
  enum class Kind : std::uint8_t { Alpha, Beta, Gamma, Delta, Eps };
  Kind kind;
  Letter x = Letter::a;
  Letter y = Letter::a;

  bool operator==(const SpineSymbol& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Gamma) return true;
    if (kind == Kind::Alpha || kind == Kind::Eps) return x == o.x;
    return x == o.x && y == o.y;
  }
  bool operator!=(const SpineSymbol& o) const { return !(*this == o); }

  std::string token() const;
  static std::optional<SpineSymbol> from_token(const std::string& tok);
};

SpineSymbol phi(const SnakeState& s);
SpineSymbol phi(int state_index);
SpineSymbol bar(const SpineSymbol& s);

// The sixteen edges of the merged graph around a Cayley-graph vertex
// (index 1) and around a net vertex (index 2), in counterclockwise order.
const std::array<SpineSymbol, 16>& cyclic_order(int which);

// +1 / -1 / 0 orientation of a three or four letter word against the
// cyclic order; repeated letters and letters outside the order give 0.
int o_orientation(int which, const std::vector<SpineSymbol>& word);

// Linked-pair kernels over spine strings (entries 1..k used).
int u_k(const std::vector<SpineSymbol>& zeta, const std::vector<SpineSymbol>& xi, int k);
int v_k(const std::vector<SpineSymbol>& zeta, const std::vector<SpineSymbol>& xi, int k);

// h_k over state strings satisfying the transition rules; u_k and v_k can
// never both fire on valid inputs, which is enforced with an exception.
int h_k(const std::vector<int>& X, const std::vector<int>& Y, int k);

// Self-intersection number of the conjugacy class of a periodic orbit:
// the double sum of H = sum h_k over shift pairs, with the k-fold cover
// correction q^2 m + q - 1 applied to proper powers.
long long intersection_number(const std::vector<int>& orbit);

// H(X, Y) truncated at k_max (finite orbit formula uses k_max = period).
int pair_h(const std::vector<int>& X, const std::vector<int>& Y, int k_max);

}  // namespace snakestat
