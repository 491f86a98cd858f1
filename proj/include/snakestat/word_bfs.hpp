#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "snakestat/cyclic_word.hpp"

namespace snakestat {

// Breadth-first closure of a cyclic word under single relator moves:
// removal of one adjacent inverse pair, replacement of one long cycle by
// its short complement, and one half-cycle swap.  None of the moves ever
// lengthens a word, every shortening of a surface-group word factors
// through them, and rotations are identified throughout, so the closure
// contains every representative of the conjugacy class of length at most
// the input's.  Used as a reference oracle by tests; independent of
// reduce_full.
std::set<CyclicWord> conjugacy_closure(const CyclicWord& w, std::size_t max_states = 200000);

// Minimal word length in the conjugacy class.
std::size_t minimal_length(const CyclicWord& w);

// True when the two words lie in the same conjugacy class.
bool conjugate(const CyclicWord& a, const CyclicWord& b);

// Canonical class representative: the least geodesic word in the closure.
CyclicWord class_representative(const CyclicWord& w);

// All freely reduced (cyclically) words of the given length, one per
// rotation class (lexicographically least rotation).
std::vector<CyclicWord> reduced_necklaces(std::size_t length);

// All geodesic conjugacy classes of the given minimal length, as canonical
// representatives.  Exhaustive word enumeration plus closure grouping.
std::vector<CyclicWord> geodesic_classes(std::size_t length);

}  // namespace snakestat
