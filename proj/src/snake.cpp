#include "snakestat/snake.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "snakestat/states.hpp"

namespace snakestat {

namespace {

// Undirected membership of an edge among a step's edges.
bool step_has_edge(const Tiling& t, const std::vector<Tiling::Dir>& step, Tiling::Dir ue) {
  for (auto e : step)
    if (t.undirected(e) == ue) return true;
  return false;
}

// Occupied boundary positions of a face among the snake edges, as a bitmask.
int face_occupancy(const Tiling& t, Tiling::Face f,
                   const std::set<Tiling::Dir>& snake_edges) {
  int mask = 0;
  for (int p = 0; p < 8; ++p)
    if (snake_edges.count(t.undirected(t.face_edge(f, p)))) mask |= 1 << p;
  return mask;
}

int popcount8(int m) { return __builtin_popcount(static_cast<unsigned>(m) & 0xff); }

// Longest run of consecutive set bits (cyclically) and its start.
std::pair<int, int> longest_cyclic_run(int mask) {
  int best = 0, start = 0;
  for (int s = 0; s < 8; ++s) {
    if (!(mask & (1 << s))) continue;
    if (mask & (1 << ((s + 7) & 7))) continue;  // not a run start
    int len = 0;
    while (len < 8 && (mask & (1 << ((s + len) & 7)))) ++len;
    if (len > best) {
      best = len;
      start = s;
    }
  }
  if (mask == 0xff) return {8, 0};
  return {best, start};
}

}  // namespace

GeometricalSnake word_to_snake(const CyclicWord& w) {
  if (w.empty()) throw std::invalid_argument("word_to_snake: trivial word");
  if (w != reduce_full(w))
    throw std::invalid_argument("word_to_snake: word must be fully reduced");
  CyclicWord c = w.canonical();
  const int L = static_cast<int>(c.size());
  const int copies = (L + 22 + L - 1) / L;
  const int total = L * copies;

  GeometricalSnake gs;
  gs.tiling_ = std::make_shared<Tiling>();
  gs.period_ = L;
  gs.copies_ = copies;
  gs.central_ = (total - L) / 2;
  Tiling& t = *gs.tiling_;

  // Step 4: the periodic edgepath.
  std::vector<Tiling::Vertex> path(total + 1);
  path[0] = t.base();
  for (int i = 0; i < total; ++i) {
    t.ensure_ball(path[i], 2);
    path[i + 1] = t.neighbor(path[i], c.at(i));
    if (path[i + 1] < 0) throw std::logic_error("word_to_snake: missing path edge");
    gs.steps_.push_back({Tiling::dir(path[i], c.at(i))});
  }
  t.ensure_ball(path[total], 2);

  std::set<Tiling::Dir> snake_edges;
  std::map<Tiling::Dir, std::vector<int>> edge_steps;
  for (int i = 0; i < total; ++i) {
    Tiling::Dir ue = t.undirected(gs.steps_[i][0]);
    snake_edges.insert(ue);
    edge_steps[ue].push_back(i);
  }

  std::set<Tiling::Face> completed;
  // Step 5: complete octagons with four consecutive sides until stable.
  for (;;) {
    int arc_steps_before = 0;
    for (auto& st : gs.steps_)
      if (st.size() == 1) ++arc_steps_before;

    Tiling::Face target = -1;
    int run_start = 0;
    std::set<Tiling::Face> candidates;
    for (auto ue : snake_edges) {
      Tiling::Face fl = t.face_left(ue);
      Tiling::Face fr = t.face_right(ue);
      if (fl >= 0) candidates.insert(fl);
      if (fr >= 0) candidates.insert(fr);
    }
    for (auto f : candidates) {
      if (completed.count(f)) continue;
      int mask = face_occupancy(t, f, snake_edges);
      int n = popcount8(mask);
      if (n < 4) continue;
      auto [len, start] = longest_cyclic_run(mask);
      if (len != n || n > 4)
        throw std::logic_error("word_to_snake: non-contiguous or overlong run");
      target = f;
      run_start = start;
      break;
    }
    if (target < 0) break;

    // The four run edges belong to four consecutive steps, one each, the
    // traversal moving either with the boundary orientation (ascending
    // positions) or against it.  Directions must match as well.
    const auto& corners = t.face_corners(target);
    std::vector<int> run_step(4, -1);
    bool ascending = true;
    {
      bool fixed = false;
      for (int base = 0; base + 3 < total && !fixed; ++base) {
        for (int dirn = 0; dirn < 2 && !fixed; ++dirn) {
          bool ok = true;
          for (int k = 0; k < 4 && ok; ++k) {
            int pos = dirn == 0 ? (run_start + k) & 7 : (run_start + 3 - k) & 7;
            Tiling::Dir want = dirn == 0 ? t.face_edge(target, pos)
                                         : t.dir_reverse(t.face_edge(target, pos));
            bool have = false;
            for (auto e : gs.steps_[base + k])
              if (e == want) have = true;
            ok = have;
          }
          if (ok) {
            for (int k = 0; k < 4; ++k) run_step[k] = base + k;
            ascending = dirn == 0;
            fixed = true;
          }
        }
      }
      if (!fixed) throw std::logic_error("word_to_snake: run not step-consecutive");
    }

    Tiling::Vertex entry = corners[ascending ? run_start & 7 : (run_start + 4) & 7];
    Tiling::Vertex exit = corners[ascending ? (run_start + 4) & 7 : run_start & 7];

    // Mirror of run edge k about the entry-exit diagonal, direction along
    // the traversal, grouped with the same step.
    for (int k = 0; k < 4; ++k) {
      Tiling::Dir d;
      if (ascending) {
        int pos = (run_start - k - 1 + 16) & 7;
        d = t.dir_reverse(t.face_edge(target, pos));
      } else {
        int pos = (run_start + 4 + k) & 7;
        d = t.face_edge(target, pos);
      }
      int st = run_step[k];
      gs.steps_[st].push_back(d);
      Tiling::Dir ue = t.undirected(d);
      snake_edges.insert(ue);
      edge_steps[ue].push_back(st);
      t.ensure_ball(t.dir_tail(d), 2);
    }
    gs.bubbles_.push_back({target, entry, exit, run_step[0]});
    completed.insert(target);

    int arc_steps_after = 0;
    for (auto& st : gs.steps_)
      if (st.size() == 1) ++arc_steps_after;
    if (arc_steps_after >= arc_steps_before)
      throw std::logic_error("word_to_snake: completion made no progress");
  }

  // Exceptional flag: pure arc hugging a single net geodesic (length-six
  // classes only); detected as every consecutive edge pair sharing a face.
  if (gs.bubbles_.empty() && L <= 6) {
    bool hug = true;
    for (int i = gs.central_; i < gs.central_ + L && hug; ++i) {
      Tiling::Dir a = gs.steps_[i][0];
      Tiling::Dir b = gs.steps_[i + 1][0];
      bool share = false;
      for (Tiling::Face f : {t.face_left(a), t.face_right(a)}) {
        if (f < 0) continue;
        if (t.face_edge_position(f, t.undirected(b)) >= 0) share = true;
      }
      if (!share) hug = false;
    }
    gs.exceptional_ = hug && L == 6;
  }
  return gs;
}

std::vector<std::string> validate_gs(const GeometricalSnake& s) {
  const Tiling& t = s.tiling();
  std::vector<std::string> out;
  std::set<Tiling::Dir> snake_edges;
  for (int i = 0; i < s.total_steps(); ++i)
    for (auto e : s.step_edges(i)) snake_edges.insert(t.undirected(e));

  // Property 1: every bubble is an octagon of the patch with all eight
  // edges present.
  for (const auto& b : s.bubbles()) {
    int mask = face_occupancy(t, b.face, snake_edges);
    if (mask != 0xff) {
      out.push_back("P1");
      break;
    }
  }
  // Property 2: special points opposite.
  for (const auto& b : s.bubbles()) {
    const auto& c = t.face_corners(b.face);
    int pe = -1, px = -1;
    for (int i = 0; i < 8; ++i) {
      if (c[i] == b.entry) pe = i;
      if (c[i] == b.exit) px = i;
    }
    if (pe < 0 || px < 0 || ((pe - px) & 7) != 4) {
      out.push_back("P2");
      break;
    }
  }
  // Property 3: bubbles sharing an edge (same chain neighbours) must not
  // share a special point.
  {
    bool bad = false;
    for (std::size_t i = 0; i < s.bubbles().size() && !bad; ++i)
      for (std::size_t j = i + 1; j < s.bubbles().size() && !bad; ++j) {
        const auto& bi = s.bubbles()[i];
        const auto& bj = s.bubbles()[j];
        bool adjacent = false;
        for (int p = 0; p < 8; ++p)
          if (t.face_edge_position(bj.face, t.undirected(t.face_edge(bi.face, p))) >= 0)
            adjacent = true;
        if (!adjacent) continue;
        for (Tiling::Vertex u : {bi.entry, bi.exit})
          for (Tiling::Vertex v : {bj.entry, bj.exit})
            if (u == v) bad = true;
      }
    if (bad) out.push_back("P3");
  }
  // Property 4 and the corollary: no face holds four to seven snake edges.
  {
    std::set<Tiling::Face> seen;
    for (auto ue : snake_edges) {
      for (Tiling::Face f : {t.face_left(ue), t.face_right(ue)}) {
        if (f < 0 || !seen.insert(f).second) continue;
        int n = popcount8(face_occupancy(t, f, snake_edges));
        if (n >= 4 && n < 8) {
          out.push_back("P4");
          return out;
        }
      }
    }
  }
  return out;
}

namespace {

// Shared-octagon count against up to three preceding steps; decides the
// A / A' / A'' refinement and its handedness.
SnakeState classify_arc(const Tiling& t, const std::vector<std::vector<Tiling::Dir>>& steps,
                        int i) {
  Tiling::Dir e = steps[i][0];
  Letter x = t.dir_letter(e);
  Tiling::Face left = t.face_left(e);
  Tiling::Face right = t.face_right(e);
  int shared = 0;
  bool left_shared = false, right_shared = false;
  for (int back = 1; back <= 3 && back <= i; ++back) {
    bool hit = false;
    for (auto pe : steps[i - back]) {
      Tiling::Dir ue = t.undirected(pe);
      if (left >= 0 && t.face_edge_position(left, ue) >= 0) {
        hit = true;
        left_shared = true;
      }
      if (right >= 0 && t.face_edge_position(right, ue) >= 0) {
        hit = true;
        right_shared = true;
      }
    }
    if (hit) ++shared;
  }
  if (shared > 2) throw std::logic_error("classify_arc: too many shared octagons");
  if (left_shared && right_shared)
    throw std::logic_error("classify_arc: shared octagons on both sides");
  SnakeState s{CaseTag::A, {x, Letter::a, Letter::a}};
  if (shared == 1) s.tag = left_shared ? CaseTag::ApL : CaseTag::ApR;
  if (shared == 2) s.tag = left_shared ? CaseTag::AppL : CaseTag::AppR;
  return s;
}

SnakeState classify_pair(const Tiling& t, const GeometricalSnake& gs, int i) {
  const auto& step = gs.step_edges(i);
  // The two edges lie on one octagon; find it.
  Tiling::Face f = -1;
  for (Tiling::Face cand : {t.face_left(step[0]), t.face_right(step[0])}) {
    if (cand < 0) continue;
    if (t.face_edge_position(cand, t.undirected(step[1])) >= 0) f = cand;
  }
  if (f < 0) throw std::logic_error("classify_pair: no common octagon");
  const GeometricalSnake::Bubble* bub = nullptr;
  for (const auto& b : gs.bubbles())
    if (b.face == f) bub = &b;
  if (!bub) throw std::logic_error("classify_pair: octagon is not a bubble");
  const auto& corners = t.face_corners(f);
  int tau = -1;
  for (int p = 0; p < 8; ++p)
    if (corners[p] == bub->entry) tau = p;

  // Right branch edge at boundary position tau+s (directed forward), left
  // branch at tau-s-1 (directed backward); s = 0..3 is B, C, C', D.
  for (int s2 = 0; s2 < 4; ++s2) {
    int pr = (tau + s2) & 7;
    int pl = (tau - s2 - 1 + 8) & 7;
    Tiling::Dir right = t.face_edge(f, pr);
    Tiling::Dir left = t.dir_reverse(t.face_edge(f, pl));
    bool match = (t.undirected(step[0]) == t.undirected(left) &&
                  t.undirected(step[1]) == t.undirected(right)) ||
                 (t.undirected(step[0]) == t.undirected(right) &&
                  t.undirected(step[1]) == t.undirected(left));
    if (!match) continue;
    CaseTag tag = s2 == 0   ? CaseTag::B
                  : s2 == 1 ? CaseTag::C
                  : s2 == 2 ? CaseTag::Cp
                            : CaseTag::D;
    return SnakeState{tag,
                      {t.dir_letter(left), t.dir_letter(right), Letter::a}};
  }
  throw std::logic_error("classify_pair: edges not a mirror pair");
}

SnakeState classify_triple(const Tiling& t, const GeometricalSnake& gs, int i) {
  const auto& step = gs.step_edges(i);
  // Middle edge: the one lying on two completed octagons.
  std::set<Tiling::Face> bubbles;
  for (const auto& b : gs.bubbles()) bubbles.insert(b.face);
  int middle = -1;
  for (int k = 0; k < 3; ++k) {
    Tiling::Dir ue = t.undirected(step[k]);
    int cnt = 0;
    for (Tiling::Face f : {t.face_left(ue), t.face_right(ue)})
      if (f >= 0 && bubbles.count(f)) ++cnt;
    if (cnt == 2) middle = k;
  }
  if (middle < 0) throw std::logic_error("classify_triple: no boundary interval");
  Tiling::Dir j = step[middle];
  // One of the other two edges shares the middle edge's tail; whether it
  // sits counterclockwise-next (left) or -previous (right) of the middle
  // edge decides the handedness.
  Tiling::Dir partner = -1, other = -1;
  for (int k = 0; k < 3; ++k) {
    if (k == middle) continue;
    if (t.dir_tail(step[k]) == t.dir_tail(j))
      partner = step[k];
    else
      other = step[k];
  }
  if (partner < 0 || other < 0)
    throw std::logic_error("classify_triple: malformed E step");
  Letter jl = t.dir_letter(j);
  Letter pl = t.dir_letter(partner);
  if (pl == ccw_next(jl))
    return SnakeState{CaseTag::EL, {pl, jl, t.dir_letter(other)}};
  if (pl == ccw_prev(jl))
    return SnakeState{CaseTag::ER, {t.dir_letter(other), jl, pl}};
  throw std::logic_error("classify_triple: partner edge not adjacent");
}

}  // namespace

std::vector<int> snake_to_states(const GeometricalSnake& gs) {
  const Tiling& t = gs.tiling();
  const auto& alpha = StateAlphabet::instance();
  const auto& m = TransitionMatrix::instance();
  const int L = gs.period();
  const int s0 = gs.central_start();
  std::vector<int> orbit(L);
  for (int k = 0; k < L; ++k) {
    int i = s0 + k;
    const auto& step = gs.step_edges(i);
    SnakeState st{CaseTag::A, {Letter::a, Letter::a, Letter::a}};
    if (step.size() == 1) {
      std::vector<std::vector<Tiling::Dir>> steps;
      for (int q = 0; q < gs.total_steps(); ++q) steps.push_back(gs.step_edges(q));
      st = classify_arc(t, steps, i);
    } else if (step.size() == 2) {
      st = classify_pair(t, gs, i);
    } else if (step.size() == 3) {
      st = classify_triple(t, gs, i);
    } else {
      throw std::logic_error("snake_to_states: step with bad edge count");
    }
    orbit[k] = alpha.index_of(st);
  }
  for (int k = 0; k < L; ++k)
    if (!m.at(orbit[k], orbit[(k + 1) % L]))
      throw std::logic_error("snake_to_states: sequence violates transitions");
  return orbit;
}

std::vector<int> word_to_orbit(const CyclicWord& w) {
  return least_rotation(snake_to_states(word_to_snake(w)));
}

PlacedOrbit place_orbit(const std::vector<int>& orbit_in, int copies) {
  const auto& alpha = StateAlphabet::instance();
  const auto& m = TransitionMatrix::instance();
  const int n = static_cast<int>(orbit_in.size());
  for (int k = 0; k < n; ++k)
    if (!m.at(orbit_in[k], orbit_in[(k + 1) % n]))
      throw std::invalid_argument("place_orbit: invalid sequence");

  // Start the walk at a step whose placement needs only a single head.
  // Orbits consisting purely of C, C', E steps (an unbroken bubble chain)
  // are started at a C by planting its octagon explicitly.
  int rot = 0;
  for (int k = 0; k < n; ++k) {
    CaseClass c = projection_pi(alpha.state(orbit_in[k]).tag);
    if (c == CaseClass::A || c == CaseClass::Ap || c == CaseClass::App ||
        c == CaseClass::B || c == CaseClass::D) {
      rot = k;
      break;
    }
    if (c == CaseClass::C) rot = k;
  }
  std::vector<int> orbit(n);
  for (int k = 0; k < n; ++k) orbit[k] = orbit_in[(rot + k) % n];

  PlacedOrbit po;
  po.tiling = std::make_shared<Tiling>();
  po.period = n;
  po.copies = copies;
  po.rotation = rot;
  Tiling& t = *po.tiling;

  auto nb = [&](Tiling::Vertex v, Letter x) {
    t.ensure_ball(v, 2);
    Tiling::Vertex w = t.neighbor(v, x);
    if (w < 0) throw std::logic_error("place_orbit: missing edge");
    return w;
  };

  // Heads after the previous step: one for arc/D steps, a left/right pair
  // inside a bubble.
  Tiling::Vertex lh = t.base(), rh = t.base();
  {
    const SnakeState& first = alpha.state(orbit[0]);
    CaseClass c = projection_pi(first.tag);
    if (c == CaseClass::C || c == CaseClass::Cp || c == CaseClass::E) {
      if (c != CaseClass::C)
        throw std::logic_error("place_orbit: bubble-only orbit must start at C");
      // Plant the octagon of the leading C with its entry at the base.
      auto rho = relator_rotation(Letter::a);
      for (int f = 0; f < 8; ++f) {
        rho = relator_rotation(letter_from_idx(f));
        if (rho[1] == first.labels[1]) break;
      }
      lh = nb(t.base(), inverse(rho[7]));  // corner c7
      rh = nb(t.base(), rho[0]);           // corner c1
    }
  }
  for (int i = 0; i < n * copies; ++i) {
    const SnakeState& s = alpha.state(orbit[i % n]);
    std::vector<Tiling::Dir> edges;
    switch (projection_pi(s.tag)) {
      case CaseClass::A:
      case CaseClass::Ap:
      case CaseClass::App: {
        edges = {Tiling::dir(lh, s.labels[0])};
        lh = rh = nb(lh, s.labels[0]);
        break;
      }
      case CaseClass::B: {
        edges = {Tiling::dir(lh, s.labels[0]), Tiling::dir(lh, s.labels[1])};
        Tiling::Vertex nl = nb(lh, s.labels[0]);
        Tiling::Vertex nr = nb(lh, s.labels[1]);
        lh = nl;
        rh = nr;
        break;
      }
      case CaseClass::C:
      case CaseClass::Cp: {
        edges = {Tiling::dir(lh, s.labels[0]), Tiling::dir(rh, s.labels[1])};
        lh = nb(lh, s.labels[0]);
        rh = nb(rh, s.labels[1]);
        break;
      }
      case CaseClass::D: {
        edges = {Tiling::dir(lh, s.labels[0]), Tiling::dir(rh, s.labels[1])};
        Tiling::Vertex a = nb(lh, s.labels[0]);
        Tiling::Vertex b = nb(rh, s.labels[1]);
        if (a != b) throw std::logic_error("place_orbit: D branches do not merge");
        lh = rh = a;
        break;
      }
      case CaseClass::E: {
        if (s.tag == CaseTag::EL) {
          edges = {Tiling::dir(lh, s.labels[0]), Tiling::dir(lh, s.labels[1]),
                   Tiling::dir(rh, s.labels[2])};
          Tiling::Vertex nl = nb(lh, s.labels[0]);
          Tiling::Vertex q1 = nb(lh, s.labels[1]);
          Tiling::Vertex q2 = nb(rh, s.labels[2]);
          if (q1 != q2) throw std::logic_error("place_orbit: E branches do not merge");
          lh = nl;
          rh = q1;
        } else {
          edges = {Tiling::dir(lh, s.labels[0]), Tiling::dir(rh, s.labels[1]),
                   Tiling::dir(rh, s.labels[2])};
          Tiling::Vertex q1 = nb(lh, s.labels[0]);
          Tiling::Vertex q2 = nb(rh, s.labels[1]);
          Tiling::Vertex nr = nb(rh, s.labels[2]);
          if (q1 != q2) throw std::logic_error("place_orbit: E branches do not merge");
          lh = q1;
          rh = nr;
        }
        break;
      }
    }
    po.steps.push_back(std::move(edges));
  }
  return po;
}

std::vector<int> invert_orbit(const std::vector<int>& orbit) {
  const auto& alpha = StateAlphabet::instance();
  const auto& m = TransitionMatrix::instance();
  const int n = static_cast<int>(orbit.size());
  const int copies = std::max(3, (22 + n - 1) / n + 1);
  PlacedOrbit po = place_orbit(orbit, copies);
  const Tiling& t = *po.tiling;

  auto faces_of = [&](Tiling::Dir e) {
    std::vector<Tiling::Face> fs;
    for (Tiling::Face f : {t.face_left(e), t.face_right(e)})
      if (f >= 0) fs.push_back(f);
    return fs;
  };
  auto shares_face = [&](Tiling::Face f, const std::vector<Tiling::Dir>& step) {
    for (auto e : step)
      if (t.face_edge_position(f, t.undirected(e)) >= 0) return true;
    return false;
  };

  const int start = ((copies - 1) / 2) * n;
  std::vector<int> inv(n);
  for (int k = 0; k < n; ++k) {
    int i = start + k;
    const SnakeState& s = alpha.state(orbit[(po.rotation + i) % n]);
    SnakeState out{CaseTag::A, {Letter::a, Letter::a, Letter::a}};
    switch (s.tag) {
      case CaseTag::B:
        out = SnakeState{CaseTag::D, {inverse(s.labels[1]), inverse(s.labels[0]), Letter::a}};
        break;
      case CaseTag::D:
        out = SnakeState{CaseTag::B, {inverse(s.labels[1]), inverse(s.labels[0]), Letter::a}};
        break;
      case CaseTag::C:
        out = SnakeState{CaseTag::Cp, {inverse(s.labels[1]), inverse(s.labels[0]), Letter::a}};
        break;
      case CaseTag::Cp:
        out = SnakeState{CaseTag::C, {inverse(s.labels[1]), inverse(s.labels[0]), Letter::a}};
        break;
      case CaseTag::EL:
      case CaseTag::ER:
        out = SnakeState{s.tag,
                         {inverse(s.labels[2]), inverse(s.labels[1]), inverse(s.labels[0])}};
        break;
      default: {
        // A-family: octagon sharing with the next one or two steps fixes
        // the number of primes; the side of the shared octagon fixes the
        // superscript (left of e_i gives R).
        Tiling::Dir e = po.steps[i][0];
        Letter xbar = inverse(t.dir_letter(e));
        Tiling::Face left = t.face_left(e);
        Tiling::Face right = t.face_right(e);
        bool l1 = left >= 0 && shares_face(left, po.steps[i + 1]);
        bool r1 = right >= 0 && shares_face(right, po.steps[i + 1]);
        bool l2 = left >= 0 && shares_face(left, po.steps[i + 2]);
        bool r2 = right >= 0 && shares_face(right, po.steps[i + 2]);
        if (!l1 && !r1) {
          out = SnakeState{CaseTag::A, {xbar, Letter::a, Letter::a}};
        } else if (l2 || r2) {
          out = SnakeState{l2 ? CaseTag::AppR : CaseTag::AppL, {xbar, Letter::a, Letter::a}};
        } else {
          out = SnakeState{l1 ? CaseTag::ApR : CaseTag::ApL, {xbar, Letter::a, Letter::a}};
        }
        break;
      }
    }
    inv[n - 1 - k] = alpha.index_of(out);
  }
  for (int k = 0; k < n; ++k)
    if (!m.at(inv[k], inv[(k + 1) % n]))
      throw std::logic_error("invert_orbit: result violates transitions");
  return least_rotation(std::move(inv));
}

std::vector<int> least_rotation(std::vector<int> orbit) {
  const int n = static_cast<int>(orbit.size());
  int best = 0;
  for (int r = 1; r < n; ++r) {
    for (int t = 0; t < n; ++t) {
      int a = orbit[(r + t) % n];
      int b = orbit[(best + t) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<int> out(n);
  for (int t = 0; t < n; ++t) out[t] = orbit[(best + t) % n];
  return out;
}

}  // namespace snakestat
