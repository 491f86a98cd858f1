#include "snakestat/regions.hpp"

#include <stdexcept>

namespace snakestat {

namespace {

// The unique relator rotation whose letter at `pos` is x.
std::array<Letter, 8> rotation_with(int pos, Letter x) {
  for (int f = 0; f < 8; ++f) {
    auto rho = relator_rotation(letter_from_idx(f));
    if (rho[pos] == x) return rho;
  }
  throw std::logic_error("rotation_with: no rotation");
}

SnakeState make_state(CaseTag t, std::initializer_list<Letter> ls) {
  SnakeState s{t, {Letter::a, Letter::a, Letter::a}};
  int i = 0;
  for (Letter l : ls) s.labels[i++] = l;
  return s;
}

}  // namespace

SnakeState forced_after_b(const SnakeState& b) {
  auto rho = rotation_with(0, b.labels[1]);
  return make_state(CaseTag::C, {inverse(rho[6]), rho[1]});
}

SnakeState forced_after_c(const SnakeState& c) {
  auto rho = rotation_with(1, c.labels[1]);
  return make_state(CaseTag::Cp, {inverse(rho[5]), rho[2]});
}

std::array<SnakeState, 3> choices_after_cp(const SnakeState& cp) {
  auto rho = rotation_with(2, cp.labels[1]);
  Letter jl = inverse(rho[4]);
  Letter kr = rho[3];
  return {make_state(CaseTag::D, {jl, kr}),
          make_state(CaseTag::EL, {ccw_next(jl), jl, kr}),
          make_state(CaseTag::ER, {jl, kr, ccw_prev(kr)})};
}

SnakeState forced_after_e(const SnakeState& e) {
  // The next octagon is the one straddled by the two edges at the shared
  // special point; it is entered there, so the forced C reads off the
  // rotation at that corner.
  Letter j = e.labels[1];
  auto rho = e.tag == CaseTag::EL ? relator_rotation(j)
                                  : relator_rotation(ccw_prev(j));
  return make_state(CaseTag::C, {inverse(rho[6]), rho[1]});
}

RegionEngine::RegionEngine(const Tiling& t, int compare_radius)
    : t_(&t), hp_(t), inner_(t.vertex_count()) {
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    int d = t.bfs_depth(static_cast<Tiling::Vertex>(v));
    if (d >= 0 && d <= compare_radius) inner_.set(v);
  }
}

RegionSet RegionEngine::region_a_plain(Tiling::Dir e) {
  Tiling::Vertex u = t_->dir_tail(e);
  Tiling::Vertex v = t_->dir_head(e);
  Letter x = t_->dir_letter(e);
  RegionSet r = hp_.side(e, v);
  r &= hp_.side(Tiling::dir(u, ccw_prev(x)), v);
  r &= hp_.side(Tiling::dir(u, ccw_next(x)), v);
  return r;
}

RegionSet RegionEngine::region_a_family(const SnakeState& s, Tiling::Dir e) {
  RegionSet plain = region_a_plain(e);
  if (s.tag == CaseTag::A) return plain;

  Tiling::Vertex u = t_->dir_tail(e);
  Letter z = t_->dir_letter(e);
  if (s.tag == CaseTag::ApR || s.tag == CaseTag::ApL) {
    // The canonical A' region is the extreme piece of the subdivision of a
    // plain A step one edge back: the wedge is cut by that step's lateral
    // geodesic on the matching side.
    Letter xp = s.tag == CaseTag::ApR ? inverse(ccw_prev(z)) : inverse(ccw_next(z));
    Tiling::Vertex tprev = t_->neighbor(u, inverse(xp));
    plain &= region_a_plain(Tiling::dir(tprev, xp));
    return plain;
  }
  // A'': extreme piece of the subdivision of an A' step one edge back,
  // handed the same way.
  CaseTag prev_tag = s.tag == CaseTag::AppR ? CaseTag::ApR : CaseTag::ApL;
  Letter xp = s.tag == CaseTag::AppR ? inverse(ccw_prev(z)) : inverse(ccw_next(z));
  Tiling::Vertex tprev = t_->neighbor(u, inverse(xp));
  SnakeState prev = make_state(prev_tag, {xp});
  plain &= region_a_family(prev, Tiling::dir(tprev, xp));
  return plain;
}

RegionSet RegionEngine::wedge_at(Tiling::Vertex entry, Tiling::Face f) {
  const auto& corners = t_->face_corners(f);
  int tau = -1;
  for (int t = 0; t < 8; ++t)
    if (corners[t] == entry) tau = t;
  if (tau < 0) throw std::logic_error("wedge_at: entry not on face");
  Tiling::Vertex opposite = corners[(tau + 4) & 7];
  RegionSet r = hp_.side(t_->face_edge(f, tau), opposite);
  r &= hp_.side(t_->face_edge(f, tau + 7), opposite);
  return r;
}

std::pair<Tiling::Face, Tiling::Vertex> RegionEngine::octagon_of(const PlacedStep& step) const {
  const auto& s = step.state;
  switch (s.tag) {
    case CaseTag::B: {
      Tiling::Dir right = step.edges[1];
      Tiling::Face f = t_->face_left(right);
      return {f, t_->dir_tail(right)};
    }
    case CaseTag::C:
    case CaseTag::Cp:
    case CaseTag::D: {
      int back = s.tag == CaseTag::C ? 1 : (s.tag == CaseTag::Cp ? 2 : 3);
      Tiling::Dir right = step.edges[1];
      Tiling::Face f = t_->face_left(right);
      int p = t_->face_edge_position(f, t_->undirected(right));
      if (p < 0 || t_->face_corners(f)[p] != t_->dir_tail(right))
        throw std::logic_error("octagon_of: misplaced right edge");
      return {f, t_->face_corners(f)[(p - back + 8) & 7]};
    }
    default:
      throw std::logic_error("octagon_of: arc or E step");
  }
}

RegionSet RegionEngine::region_bccp(const PlacedStep& step) {
  auto [f, entry] = octagon_of(step);
  return wedge_at(entry, f);
}

RegionSet RegionEngine::region_e(const PlacedStep& step) {
  // Wedge of the next octagon, entered at the shared special point.
  Tiling::Dir j = step.edges[1];
  Tiling::Face o2 = step.state.tag == CaseTag::EL ? t_->face_left(j) : t_->face_right(j);
  return wedge_at(t_->dir_tail(j), o2);
}

RegionSet RegionEngine::region_d(const PlacedStep& step) {
  RegionSet r = region_bccp(step);
  Tiling::Dir left = step.edges[0];
  Tiling::Dir right = step.edges[1];
  RegionSet el = wedge_at(t_->dir_tail(left), t_->face_left(left));
  RegionSet er = wedge_at(t_->dir_tail(right), t_->face_right(right));
  r -= el;
  r -= er;
  return r;
}

RegionSet RegionEngine::region(const PlacedStep& step) {
  switch (projection_pi(step.state.tag)) {
    case CaseClass::A:
    case CaseClass::Ap:
    case CaseClass::App:
      return region_a_family(step.state, step.edges[0]);
    case CaseClass::B:
    case CaseClass::C:
    case CaseClass::Cp:
      return region_bccp(step);
    case CaseClass::D:
      return region_d(step);
    case CaseClass::E:
      return region_e(step);
  }
  throw std::logic_error("region: bad tag");
}

PlacedStep RegionEngine::place_with_head_at_base(const SnakeState& s) {
  const Tiling& t = *t_;
  Tiling::Vertex v0 = t.base();
  auto nb = [&](Tiling::Vertex v, Letter x) {
    Tiling::Vertex w = t.neighbor(v, x);
    if (w < 0) throw std::logic_error("place: patch too small");
    return w;
  };
  switch (projection_pi(s.tag)) {
    case CaseClass::A:
    case CaseClass::Ap:
    case CaseClass::App: {
      Letter x = s.labels[0];
      Tiling::Vertex u = nb(v0, inverse(x));
      return {s, {Tiling::dir(u, x)}};
    }
    case CaseClass::B:
      return {s, {Tiling::dir(v0, s.labels[0]), Tiling::dir(v0, s.labels[1])}};
    case CaseClass::C: {
      auto rho = rotation_with(1, s.labels[1]);
      Tiling::Vertex c1 = nb(v0, rho[0]);
      Tiling::Vertex c7 = nb(v0, inverse(rho[7]));
      return {s, {Tiling::dir(c7, inverse(rho[6])), Tiling::dir(c1, rho[1])}};
    }
    case CaseClass::Cp: {
      // Anchored at the exit corner so the successor wedges stay deep in
      // the patch.
      auto rho = rotation_with(2, s.labels[1]);
      Tiling::Vertex c3 = nb(v0, inverse(rho[3]));
      Tiling::Vertex c2 = nb(c3, inverse(rho[2]));
      Tiling::Vertex c5 = nb(v0, rho[4]);
      Tiling::Vertex c6 = nb(c5, rho[5]);
      return {s, {Tiling::dir(c6, inverse(rho[5])), Tiling::dir(c2, rho[2])}};
    }
    case CaseClass::D: {
      auto rho = rotation_with(3, s.labels[1]);
      Tiling::Vertex c3 = nb(v0, inverse(rho[3]));
      Tiling::Vertex c5 = nb(v0, rho[4]);
      return {s, {Tiling::dir(c5, inverse(rho[4])), Tiling::dir(c3, rho[3])}};
    }
    case CaseClass::E: {
      if (s.tag == CaseTag::EL) {
        Tiling::Vertex q = nb(v0, s.labels[1]);
        Tiling::Vertex r3 = nb(q, inverse(s.labels[2]));
        return {s,
                {Tiling::dir(v0, s.labels[0]), Tiling::dir(v0, s.labels[1]),
                 Tiling::dir(r3, s.labels[2])}};
      }
      Tiling::Vertex q = nb(v0, s.labels[1]);
      Tiling::Vertex l3 = nb(q, inverse(s.labels[0]));
      return {s,
              {Tiling::dir(l3, s.labels[0]), Tiling::dir(v0, s.labels[1]),
               Tiling::dir(v0, s.labels[2])}};
    }
  }
  throw std::logic_error("place: bad tag");
}

bool RegionEngine::classify_step(const PlacedStep& step, std::vector<StepChoice>& out) {
  const Tiling& t = *t_;
  const auto& s = step.state;
  const CaseClass cls = projection_pi(s.tag);

  // Forced continuations around the current octagon.
  if (cls == CaseClass::B || cls == CaseClass::C || cls == CaseClass::E) {
    SnakeState nxt = cls == CaseClass::B   ? forced_after_b(s)
                     : cls == CaseClass::C ? forced_after_c(s)
                                           : forced_after_e(s);
    Tiling::Vertex lh = t.dir_head(step.edges[cls == CaseClass::E ? 0 : 0]);
    Tiling::Vertex rh = t.dir_head(step.edges[cls == CaseClass::E ? 1 : 1]);
    if (cls == CaseClass::E) {
      // Heads of the two branches after an E step: the far end of the new
      // octagon's mirror edge and the merged vertex.
      if (s.tag == CaseTag::EL) {
        lh = t.dir_head(step.edges[0]);
        rh = t.dir_head(step.edges[1]);
      } else {
        lh = t.dir_head(step.edges[1]);
        rh = t.dir_head(step.edges[2]);
      }
    }
    PlacedStep nstep{nxt, {Tiling::dir(lh, nxt.labels[0]), Tiling::dir(rh, nxt.labels[1])}};
    out.push_back(StepChoice{nstep, region(nstep)});
    return false;
  }

  if (cls == CaseClass::Cp) {
    auto nxt = choices_after_cp(s);
    Tiling::Vertex c5 = t.dir_head(step.edges[0]);
    Tiling::Vertex c3 = t.dir_head(step.edges[1]);
    Letter jl = nxt[0].labels[0];
    Letter kr = nxt[0].labels[1];
    PlacedStep d{nxt[0], {Tiling::dir(c5, jl), Tiling::dir(c3, kr)}};
    PlacedStep el{nxt[1], {Tiling::dir(c5, ccw_next(jl)), Tiling::dir(c5, jl), Tiling::dir(c3, kr)}};
    PlacedStep er{nxt[2], {Tiling::dir(c5, jl), Tiling::dir(c3, kr), Tiling::dir(c3, ccw_prev(kr))}};
    out.push_back(StepChoice{d, region(d)});
    out.push_back(StepChoice{el, region(el)});
    out.push_back(StepChoice{er, region(er)});
    return false;
  }

  // A-family and D: geodesic subdivision around the head vertex.
  RegionSet R = region(step);
  std::vector<Tiling::Dir> in_dirs;
  if (cls == CaseClass::D) {
    in_dirs = {step.edges[0], step.edges[1]};
  } else {
    in_dirs = {step.edges[0]};
  }
  Tiling::Vertex v = t.dir_head(in_dirs[0]);
  for (auto e : in_dirs)
    if (t.dir_head(e) != v) throw std::logic_error("classify: edges do not converge");

  bool banned_slot[8] = {false, false, false, false, false, false, false, false};
  bool banned_face[8] = {false, false, false, false, false, false, false, false};
  for (auto e : in_dirs) {
    int back = ccw_slot(inverse(t.dir_letter(e)));
    banned_slot[back] = true;
    banned_face[back] = true;            // face between back and back+1
    banned_face[(back + 7) & 7] = true;  // face between back-1 and back
  }

  auto try_a_piece = [&](Tiling::Dir zdir, const RegionSet& piece) -> std::optional<SnakeState> {
    Letter z = t.dir_letter(zdir);
    if (piece.none_on(inner_)) return std::nullopt;
    if (piece.equals_on(region_a_plain(zdir), inner_)) return make_state(CaseTag::A, {z});
    for (CaseTag tag : {CaseTag::ApR, CaseTag::ApL, CaseTag::AppR, CaseTag::AppL}) {
      SnakeState cand = make_state(tag, {z});
      if (piece.equals_on(region_a_family(cand, zdir), inner_)) return cand;
    }
    throw std::logic_error("classify: unrecognized A-type piece");
  };

  for (int sl = 0; sl < 8; ++sl) {
    if (banned_slot[sl]) continue;
    Tiling::Dir zdir = static_cast<Tiling::Dir>(v) * 8 + sl;
    RegionSet piece = region_a_plain(zdir);
    piece &= R;
    auto cand = try_a_piece(zdir, piece);
    if (!cand) continue;
    out.push_back(StepChoice{PlacedStep{*cand, {zdir}}, std::move(piece)});
  }
  for (int sl = 0; sl < 8; ++sl) {
    if (banned_face[sl]) continue;
    Tiling::Face f = t.face_at(v, sl);
    if (f < 0) throw std::logic_error("classify: missing face at head");
    RegionSet piece = wedge_at(v, f);
    RegionSet whole = piece;
    piece &= R;
    if (piece.none_on(inner_)) continue;
    if (!piece.equals_on(whole, inner_))
      throw std::logic_error("classify: truncated B piece");
    Letter kr = kCcwOrder[sl];
    Letter jl = kCcwOrder[(sl + 1) & 7];
    SnakeState b = make_state(CaseTag::B, {jl, kr});
    out.push_back(StepChoice{PlacedStep{b, {Tiling::dir(v, jl), Tiling::dir(v, kr)}},
                             std::move(piece)});
  }
  if (!R.test(static_cast<std::size_t>(v)))
    throw std::logic_error("classify: head vertex outside its region");
  return true;
}

}  // namespace snakestat
