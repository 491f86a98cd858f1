#include "snakestat/word_bfs.hpp"

#include <deque>
#include <stdexcept>

namespace snakestat {

namespace {

void push_state(const CyclicWord& w, std::set<CyclicWord>& seen,
                std::deque<CyclicWord>& queue) {
  CyclicWord c = w.canonical();
  if (seen.insert(c).second) queue.push_back(c);
}

CyclicWord apply_splice(const CyclicWord& w, std::size_t pos, std::size_t len,
                        const std::vector<Letter>& repl) {
  std::vector<Letter> out(repl);
  for (std::size_t t = len; t < w.size(); ++t) out.push_back(w.at(pos + t));
  return CyclicWord(std::move(out));
}

// Single-move neighbours.  Half swaps preserve length; everything else
// shortens.  half_swaps_only restricts to the length-preserving moves.
std::vector<CyclicWord> neighbours(const CyclicWord& w, bool half_swaps_only) {
  std::vector<CyclicWord> out;
  const std::size_t n = w.size();
  if (!half_swaps_only) {
    for (std::size_t i = 0; i < n && n >= 2; ++i) {
      if (w.at(i) != inverse(w.at(i + 1))) continue;
      std::vector<Letter> v;
      for (std::size_t t = 0; t < n; ++t)
        if (t != i && t != (i + 1) % n) v.push_back(w.at(t));
      out.emplace_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (int inv = 0; inv < 2; ++inv) {
      for (int f = 0; f < 8; ++f) {
        auto rot = relator_rotation(letter_from_idx(f));
        std::array<Letter, 8> r = rot;
        if (inv)
          for (int t = 0; t < 8; ++t) r[t] = inverse(rot[7 - t]);
        std::size_t len = 0;
        const std::size_t cap = std::min<std::size_t>(n, 8);
        while (len < cap && w.at(i + len) == r[len]) ++len;
        std::size_t lo = half_swaps_only ? 4 : 4;
        std::size_t hi = half_swaps_only ? std::min<std::size_t>(len, 4) : len;
        for (std::size_t take = lo; take <= hi; ++take) {
          std::vector<Letter> repl;
          for (std::size_t t = 8; t > take; --t) repl.push_back(inverse(r[t - 1]));
          out.push_back(apply_splice(w, i, take, repl));
        }
      }
    }
  }
  return out;
}

std::set<CyclicWord> closure_under(const CyclicWord& w, bool half_swaps_only,
                                   std::size_t max_states) {
  std::set<CyclicWord> seen;
  std::deque<CyclicWord> queue;
  push_state(w, seen, queue);
  while (!queue.empty()) {
    CyclicWord cur = queue.front();
    queue.pop_front();
    for (const auto& nb : neighbours(cur, half_swaps_only)) push_state(nb, seen, queue);
    if (seen.size() > max_states)
      throw std::runtime_error("conjugacy_closure: state budget exceeded");
  }
  return seen;
}

}  // namespace

std::set<CyclicWord> conjugacy_closure(const CyclicWord& w, std::size_t max_states) {
  return closure_under(w, /*half_swaps_only=*/false, max_states);
}

std::size_t minimal_length(const CyclicWord& w) {
  std::size_t best = w.size();
  for (const auto& x : conjugacy_closure(w)) best = std::min(best, x.size());
  return best;
}

bool conjugate(const CyclicWord& a, const CyclicWord& b) {
  auto ca = conjugacy_closure(a);
  if (ca.count(b.canonical())) return true;
  auto cb = conjugacy_closure(b);
  for (const auto& x : ca)
    if (cb.count(x)) return true;
  return false;
}

CyclicWord class_representative(const CyclicWord& w) {
  auto closure = conjugacy_closure(w);
  const CyclicWord* best = nullptr;
  std::size_t min_len = static_cast<std::size_t>(-1);
  for (const auto& x : closure) min_len = std::min(min_len, x.size());
  for (const auto& x : closure) {
    if (x.size() != min_len) continue;
    if (!best || x < *best) best = &x;
  }
  return best ? *best : w.canonical();
}

std::vector<CyclicWord> reduced_necklaces(std::size_t length) {
  std::vector<CyclicWord> out;
  if (length == 0) return out;
  // depth-first over all strings, pruning adjacent inverses as we go
  std::vector<Letter> buf;
  buf.reserve(length);
  struct Frame {
    int next = 0;
  };
  std::vector<Frame> frames(length + 1);
  std::size_t depth = 0;
  frames[0].next = 0;
  while (true) {
    if (frames[depth].next == 8) {
      if (depth == 0) break;
      --depth;
      buf.pop_back();
      continue;
    }
    Letter cand = letter_from_idx(frames[depth].next++);
    if (depth > 0 && cand == inverse(buf[depth - 1])) continue;
    buf.push_back(cand);
    ++depth;
    if (depth == length) {
      if (buf[length - 1] != inverse(buf[0])) {
        CyclicWord w{buf};
        if (w.canonical().letters() == buf) out.push_back(w);
      }
      --depth;
      buf.pop_back();
    } else {
      frames[depth].next = 0;
    }
  }
  return out;
}

std::vector<CyclicWord> geodesic_classes(std::size_t length) {
  // Geodesic representatives of one class are connected by half swaps and
  // rotations alone, so grouping only needs the length-preserving closure,
  // which is tiny for almost every word.
  std::set<CyclicWord> reps;
  for (const auto& w : reduced_necklaces(length)) {
    if (!is_geodesic(w)) continue;
    const auto closure = closure_under(w, /*half_swaps_only=*/true, 100000);
    const CyclicWord* best = nullptr;
    bool all_geodesic_min = true;
    for (const auto& x : closure) {
      if (x.size() != length) {
        all_geodesic_min = false;
        break;
      }
      if (!best || x < *best) best = &x;
    }
    // A half swap can expose a cancellation only in non-geodesic words;
    // reaching a shorter word here would contradict is_geodesic.
    if (!all_geodesic_min)
      throw std::logic_error("geodesic_classes: half-swap closure changed length");
    reps.insert(*best);
  }
  return std::vector<CyclicWord>(reps.begin(), reps.end());
}

}  // namespace snakestat
