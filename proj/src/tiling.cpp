#include "snakestat/tiling.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace snakestat {

namespace {
constexpr Tiling::Vertex kNone = -1;
}

Tiling::Tiling() {
  new_vertex();
  depth_[0] = 0;
}

Tiling::Vertex Tiling::new_vertex() {
  nbr_.push_back({kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone});
  corner_face_.push_back({-1, -1, -1, -1, -1, -1, -1, -1});
  depth_.push_back(-1);
  return static_cast<Vertex>(nbr_.size() - 1);
}

void Tiling::link(Vertex u, Letter x, Vertex w) {
  int su = ccw_slot(x);
  int sw = ccw_slot(inverse(x));
  if (nbr_[u][su] != kNone && nbr_[u][su] != w)
    throw std::logic_error("tiling: conflicting edge at tail");
  if (nbr_[w][sw] != kNone && nbr_[w][sw] != u)
    throw std::logic_error("tiling: conflicting edge at head");
  nbr_[u][su] = w;
  nbr_[w][sw] = u;
}

Tiling::Dir Tiling::dir_reverse(Dir e) const {
  Vertex h = dir_head(e);
  if (h == kNone) throw std::logic_error("tiling: reversing dangling edge");
  return dir(h, inverse(dir_letter(e)));
}

Tiling::Dir Tiling::undirected(Dir e) const { return std::min(e, dir_reverse(e)); }

void Tiling::close_face(Vertex v, int slot) {
  if (corner_face_[v][slot] != -1) return;
  const Letter first = kCcwOrder[slot];
  const auto rot = relator_rotation(first);

  std::array<Vertex, 8> c{};
  c.fill(kNone);
  c[0] = v;
  int p = 0;  // corners 0..p known from the forward walk
  for (int t = 0; t < 7; ++t) {
    Vertex nx = neighbor(c[t], rot[t]);
    if (nx == kNone) break;
    c[t + 1] = nx;
    p = t + 1;
  }
  int q = 8;  // corners q..7 known from the backward walk (c[8] == c[0])
  if (p < 7) {
    Vertex cur = v;
    for (int t = 7; t > p; --t) {
      Vertex pr = neighbor(cur, inverse(rot[t]));
      if (pr == kNone) break;
      c[t] = pr;
      cur = pr;
      q = t;
    }
  } else {
    // Forward walk reached corner 7; the closing edge must return to v.
    Vertex back = neighbor(c[7], rot[7]);
    if (back != kNone && back != v)
      throw std::logic_error("tiling: face fails to close");
  }
  if (q <= p + 1) {
    // Nothing new; just make sure the one possibly missing edge exists.
    for (int t = 0; t < 8; ++t) {
      if (c[t] == kNone || c[(t + 1) & 7] == kNone)
        throw std::logic_error("tiling: incomplete overlap in face closure");
    }
  } else {
    for (int t = p + 1; t < q; ++t) {
      c[t] = new_vertex();
      int dt = depth_[c[t - 1]];
      depth_[c[t]] = dt >= 0 ? dt + 1 : -1;
    }
  }
  for (int t = 0; t < 8; ++t) link(c[t], rot[t], c[(t + 1) & 7]);

  // Canonical storage: rotate so that the a-labelled boundary edge is first.
  int a_pos = 0;
  for (int t = 0; t < 8; ++t)
    if (rot[t] == Letter::a) a_pos = t;
  std::array<Vertex, 8> canon{};
  for (int t = 0; t < 8; ++t) canon[t] = c[(a_pos + t) & 7];
  faces_.push_back(canon);
  Face fid = static_cast<Face>(faces_.size() - 1);
  for (int t = 0; t < 8; ++t) {
    int s = ccw_slot(kRelator[t]);
    Face& cf = corner_face_[canon[t]][s];
    if (cf != -1 && cf != fid) throw std::logic_error("tiling: corner face conflict");
    cf = fid;
  }
}

void Tiling::saturate(Vertex v) {
  for (int s = 0; s < 8; ++s) close_face(v, s);
}

bool Tiling::saturated(Vertex v) const {
  for (int s = 0; s < 8; ++s)
    if (corner_face_[v][s] == -1) return false;
  return true;
}

void Tiling::ensure_ball(Vertex v, int r) {
  std::deque<std::pair<Vertex, int>> queue;
  std::set<Vertex> visited;
  queue.emplace_back(v, 0);
  visited.insert(v);
  if (depth_[v] < 0) depth_[v] = 0;
  while (!queue.empty()) {
    auto [u, d] = queue.front();
    queue.pop_front();
    saturate(u);
    if (d == r) continue;
    for (int s = 0; s < 8; ++s) {
      Vertex w = nbr_[u][s];
      if (w == kNone) throw std::logic_error("tiling: saturation left a hole");
      if (visited.insert(w).second) {
        if (depth_[w] < 0 || depth_[w] > d + 1) depth_[w] = d + 1;
        queue.emplace_back(w, d + 1);
      }
    }
  }
}

int Tiling::face_edge_position(Face f, Dir ue) const {
  const auto& c = faces_[f];
  Vertex tail = dir_tail(ue);
  Vertex head = dir_head(ue);
  for (int t = 0; t < 8; ++t) {
    Vertex a = c[t], b = c[(t + 1) & 7];
    if ((a == tail && b == head) || (a == head && b == tail)) return t;
  }
  return -1;
}

Tiling::Dir Tiling::face_edge(Face f, int t) const {
  t &= 7;
  return dir(faces_[f][t], kRelator[t]);
}

Tiling::Face Tiling::face_across(Dir e, Face f) const {
  Face l = face_left(e);
  Face r = face_right(e);
  if (l == f) return r;
  if (r == f) return l;
  throw std::logic_error("tiling: edge not on face");
}

std::vector<Tiling::Dir> Tiling::geodesic_cut(Dir e0) const {
  std::vector<Dir> cut;
  Dir u0 = undirected(e0);
  cut.push_back(u0);
  // Walk straight through faces in both directions.
  for (int side = 0; side < 2; ++side) {
    Dir cur = u0;
    Face f = side == 0 ? face_left(cur) : face_right(cur);
    while (f != -1) {
      int pos = face_edge_position(f, cur);
      if (pos < 0) throw std::logic_error("tiling: geodesic walk lost its face");
      Dir nxt = undirected(face_edge(f, pos + 4));
      if (nxt == u0) return cut;  // closed loop cannot happen in a disk patch
      if (std::find(cut.begin(), cut.end(), nxt) != cut.end()) break;
      cut.push_back(nxt);
      f = face_across(nxt, f);
      cur = nxt;
    }
  }
  return cut;
}

void Tiling::validate() const {
  for (Vertex v = 0; v < static_cast<Vertex>(vertex_count()); ++v) {
    if (!saturated(v)) continue;
    std::set<Vertex> ns;
    std::set<Face> fs;
    for (int s = 0; s < 8; ++s) {
      if (nbr_[v][s] == kNone) throw std::logic_error("validate: saturated vertex missing edge");
      ns.insert(nbr_[v][s]);
      fs.insert(corner_face_[v][s]);
    }
    if (ns.size() != 8) throw std::logic_error("validate: repeated neighbor");
    if (fs.size() != 8) throw std::logic_error("validate: repeated face around vertex");
  }
  for (Face f = 0; f < static_cast<Face>(face_count()); ++f) {
    const auto& c = faces_[f];
    for (int t = 0; t < 8; ++t) {
      Vertex nx = neighbor(c[t], kRelator[t]);
      if (nx != c[(t + 1) & 7]) throw std::logic_error("validate: face does not read relator");
    }
    std::set<Vertex> distinct(c.begin(), c.end());
    if (distinct.size() != 8) throw std::logic_error("validate: degenerate face");
  }
}

RegionSet& RegionSet::operator&=(const RegionSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

RegionSet& RegionSet::operator-=(const RegionSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  return *this;
}

RegionSet& RegionSet::operator|=(const RegionSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

bool RegionSet::none() const {
  for (auto b : bits_)
    if (b) return false;
  return true;
}

std::size_t RegionSet::count() const {
  std::size_t c = 0;
  for (auto b : bits_) c += static_cast<std::size_t>(__builtin_popcountll(b));
  return c;
}

bool RegionSet::equals_on(const RegionSet& o, const RegionSet& mask) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if ((bits_[i] ^ o.bits_[i]) & mask.bits_[i]) return false;
  return true;
}

bool RegionSet::none_on(const RegionSet& mask) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & mask.bits_[i]) return false;
  return true;
}

const RegionSet& HalfplaneCache::side(Tiling::Dir e, Tiling::Vertex seed) {
  if (t_->vertex_count() != frozen_size_)
    throw std::logic_error("halfplane: patch grew after freezing");
  Tiling::Dir ue = t_->undirected(e);
  // The two sides are distinguished by which endpoint of the defining edge
  // they contain; any geodesic separates the endpoints of each edge it cuts.
  Tiling::Vertex tail = t_->dir_tail(ue);

  // Reachability runs over saturated vertices only: a geodesic cut always
  // extends to the saturated frontier, so no path can slip around its
  // truncated end through the partially built fringe.
  auto compute = [&](bool tail_side) {
    auto cut = t_->geodesic_cut(ue);
    std::set<Tiling::Dir> cutset(cut.begin(), cut.end());
    RegionSet rs(frozen_size_);
    std::deque<Tiling::Vertex> queue;
    Tiling::Vertex start = tail_side ? tail : t_->dir_head(ue);
    if (!t_->saturated(start))
      throw std::logic_error("halfplane: seed outside the saturated patch");
    rs.set(start);
    queue.push_back(start);
    while (!queue.empty()) {
      Tiling::Vertex u = queue.front();
      queue.pop_front();
      if (!t_->saturated(u)) continue;
      for (int s = 0; s < 8; ++s) {
        Tiling::Vertex w = t_->neighbor_slot(u, s);
        if (w < 0 || rs.test(w)) continue;
        Tiling::Dir d = static_cast<Tiling::Dir>(u) * 8 + s;
        if (cutset.count(t_->undirected(d))) continue;
        rs.set(w);
        queue.push_back(w);
      }
    }
    return rs;
  };

  auto try_get = [&](bool tail_side) -> const RegionSet* {
    auto it = cache_.find({ue, tail_side});
    return it == cache_.end() ? nullptr : &it->second;
  };

  // Decide which side the seed is on: compute (or fetch) the tail side
  // first and check membership.
  const RegionSet* tail_rs = try_get(true);
  if (!tail_rs) tail_rs = &cache_.emplace(std::make_pair(ue, true), compute(true)).first->second;
  bool want_tail = tail_rs->test(seed);
  if (want_tail) return *tail_rs;
  const RegionSet* head_rs = try_get(false);
  if (!head_rs) head_rs = &cache_.emplace(std::make_pair(ue, false), compute(false)).first->second;
  if (!head_rs->test(seed)) throw std::logic_error("halfplane: seed on neither side");
  return *head_rs;
}

RegionSet HalfplaneCache::full() const {
  RegionSet rs(frozen_size_);
  for (std::size_t i = 0; i < frozen_size_; ++i) rs.set(i);
  return rs;
}

}  // namespace snakestat
