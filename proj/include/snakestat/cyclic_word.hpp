#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snakestat/letters.hpp"

namespace snakestat {

// A cyclic word over the generator alphabet.  Two words are equal when one
// is a rotation of the other; canonical() is the lexicographically least
// rotation under a < b < c < d < A < B < C < D.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Parses a word string such as "abAB".  Returns nullopt on any character
  // outside {a,b,c,d,A,B,C,D}.  The empty string is the identity class.
  static std::optional<CyclicWord> parse(const std::string& s);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i % letters_.size()]; }
  const std::vector<Letter>& letters() const { return letters_; }

  CyclicWord rotated(std::size_t k) const;
  CyclicWord inverse() const;
  CyclicWord canonical() const;

  // Exact length of the primitive root; size() for primitive words.
  std::size_t primitive_period() const;
  bool is_primitive() const { return empty() || primitive_period() == size(); }
  CyclicWord primitive_root() const;

  bool operator==(const CyclicWord& o) const;
  bool operator!=(const CyclicWord& o) const { return !(*this == o); }
  // Total order on canonical forms (for use as map keys).
  bool operator<(const CyclicWord& o) const;

  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

// A contiguous window of a rotation of the relator or of its inverse.
// Length > 4 is a long cycle, exactly 4 a half cycle, < 4 a short cycle.
struct RelatorCycle {
  enum class Kind { Long, Half, Short };
  std::size_t position;   // start index in the cyclic word
  std::size_t length;     // number of letters matched
  bool inverse_relator;   // matched against a rotation of the inverse relator
  Letter rotation_first;  // first letter of the matched rotation
  Kind kind() const {
    return length > 4 ? Kind::Long : (length == 4 ? Kind::Half : Kind::Short);
  }
};

// Step 1: cyclic free reduction, leftmost pair first from the canonical
// rotation.  The empty word is a valid output.
CyclicWord free_reduce(CyclicWord w);

// Step 2: replace every long cycle by its short complement, re-running free
// reduction after each replacement.  Expects w freely reduced.
CyclicWord replace_long_cycles(CyclicWord w);

// Step 3: push half cycles forward until no replacement is productive, i.e.
// a half cycle is replaced exactly when its replacement's last letter forms
// a new half cycle with the following three letters.  Long cycles or
// cancellations created along the way are eliminated as in Steps 1-2.
CyclicWord normalize_half_cycles(CyclicWord w);

// Steps 1-3 composed; deterministic for a fixed input.
CyclicWord reduce_full(CyclicWord w);

// Birman-Series minimality: freely reduced, no long cycle, no long chain.
// Every finite subpath of the periodic edgepath of such a word is a
// shortest edgepath.
bool is_geodesic(const CyclicWord& w);

// The longest window starting at position i (cyclically) that matches
// consecutive letters of some relator rotation, capped at min(size, 8).
RelatorCycle cycle_at(const CyclicWord& w, std::size_t i);

// Detection helpers exposed for tests.
bool has_long_cycle(const CyclicWord& w);
bool has_long_chain(const CyclicWord& w);

}  // namespace snakestat
