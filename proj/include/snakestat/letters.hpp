#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace snakestat {

// The generator alphabet of the genus-2 surface group
//   G = < a, b, c, d | a b A B c d C D = 1 >,
// capital letters standing for inverses.  Letters are encoded 0..7 in the
// order a, b, c, d, A, B, C, D; this is also the lexicographic order used
// for canonical rotations and state enumeration.
enum class Letter : std::uint8_t { a, b, c, d, A, B, C, D };

inline constexpr int kNumLetters = 8;

constexpr std::uint8_t idx(Letter x) { return static_cast<std::uint8_t>(x); }
constexpr Letter letter_from_idx(int i) { return static_cast<Letter>(i & 7); }

constexpr Letter inverse(Letter x) { return letter_from_idx((idx(x) + 4) & 7); }

constexpr char to_char(Letter x) {
  constexpr const char* chars = "abcdABCD";
  return chars[idx(x)];
}

constexpr std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'c': return Letter::c;
    case 'd': return Letter::d;
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    case 'C': return Letter::C;
    case 'D': return Letter::D;
    default: return std::nullopt;
  }
}

// The defining relator a b A B c d C D.
inline constexpr std::array<Letter, 8> kRelator = {
    Letter::a, Letter::b, Letter::A, Letter::B,
    Letter::c, Letter::d, Letter::C, Letter::D};

// Counterclockwise order of the eight outgoing edge labels around any
// vertex of the Cayley graph, fixed by the embedding in which every
// octagonal face read counterclockwise spells the relator.  Slot s of a
// vertex holds the out-edge labelled kCcwOrder[s].
inline constexpr std::array<Letter, 8> kCcwOrder = {
    Letter::a, Letter::d, Letter::C, Letter::D,
    Letter::c, Letter::b, Letter::A, Letter::B};

constexpr int ccw_slot(Letter x) {
  constexpr std::array<int, 8> slot = {0, 5, 4, 1, 6, 7, 2, 3};
  return slot[idx(x)];
}

constexpr Letter ccw_next(Letter x) { return kCcwOrder[(ccw_slot(x) + 1) & 7]; }
constexpr Letter ccw_prev(Letter x) { return kCcwOrder[(ccw_slot(x) + 7) & 7]; }

// Rotation of the relator starting with letter x (each letter occurs once,
// so the rotation is determined by its first letter).
constexpr std::array<Letter, 8> relator_rotation(Letter first) {
  std::array<Letter, 8> rot{};
  int start = 0;
  for (int i = 0; i < 8; ++i)
    if (kRelator[i] == first) start = i;
  for (int i = 0; i < 8; ++i) rot[i] = kRelator[(start + i) & 7];
  return rot;
}

std::string letters_to_string(const Letter* data, std::size_t n);

}  // namespace snakestat
