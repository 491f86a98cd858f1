#include <cstdio>
#include "snakestat/markov.hpp"
#include "snakestat/word_bfs.hpp"
int main() {
  using namespace snakestat;
  try {
    Tiling t;
    t.ensure_ball(t.base(), 6);
    t.validate();
    std::printf("tiling ok: %zu vertices, %zu faces\n", t.vertex_count(), t.face_count());
    const auto& m = TransitionMatrix::build(7, 4);
    std::printf("matrix built. positivity exponent=%d a10zero=%d\n",
                m.report().positivity_exponent, (int)m.report().a10_has_zero);
    for (int n = 1; n <= 6; ++n)
      std::printf("count_elements(%d) = %s  trace(A^%d) = %s\n", n,
                  m.count_elements_of_length(n).str().c_str(), n,
                  m.trace_power(n).str().c_str());
  } catch (const std::exception& e) {
    std::printf("FAILED: %s\n", e.what());
    return 1;
  }
  return 0;
}
