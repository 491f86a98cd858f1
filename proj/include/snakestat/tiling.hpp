#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "snakestat/letters.hpp"

namespace snakestat {

// Combinatorial patch of the {8,8} tiling, grown lazily.
//
// Vertices are vertices of the Cayley graph Gamma; slot s of a vertex is
// the outgoing edge labelled kCcwOrder[s], so the counterclockwise order
// of out-labels is the same at every vertex.  Faces are the octagons of
// Gamma (relator 8-cycles); the centre of a face is a vertex of the net N,
// and the side of the net octagon dual to a Gamma-edge is crossed by
// exactly that edge.  Geodesics of N are maximal chains of dual edges
// continuing straight (four boundary positions apart) through each face.
//
// All geometry downstream (regions, the transition matrix, snake
// placement) is derived from this structure; no floating point enters.
class Tiling {
 public:
  using Vertex = std::int32_t;
  using Face = std::int32_t;
  // Directed edge: vertex * 8 + slot.
  using Dir = std::int64_t;

  Tiling();

  Vertex base() const { return 0; }
  std::size_t vertex_count() const { return nbr_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  Vertex neighbor(Vertex v, Letter x) const { return nbr_[v][ccw_slot(x)]; }
  Vertex neighbor_slot(Vertex v, int slot) const { return nbr_[v][slot & 7]; }

  static Dir dir(Vertex v, Letter x) { return static_cast<Dir>(v) * 8 + ccw_slot(x); }
  Vertex dir_tail(Dir e) const { return static_cast<Vertex>(e / 8); }
  Letter dir_letter(Dir e) const { return kCcwOrder[e % 8]; }
  Vertex dir_head(Dir e) const { return nbr_[e / 8][e % 8]; }
  Dir dir_reverse(Dir e) const;
  // Canonical undirected id: the smaller of the two directed encodings.
  Dir undirected(Dir e) const;

  // Fills in all eight faces around v, creating vertices as needed.
  void saturate(Vertex v);
  // Saturates every vertex within graph distance r of v.
  void ensure_ball(Vertex v, int r);

  bool saturated(Vertex v) const;

  // Face between out-slots s and s+1 at v; -1 when not yet built.
  Face face_at(Vertex v, int slot) const { return corner_face_[v][slot & 7]; }
  // Face on the left / right of the directed edge e.
  Face face_left(Dir e) const { return face_at(dir_tail(e), static_cast<int>(e % 8)); }
  Face face_right(Dir e) const { return face_at(dir_tail(e), static_cast<int>((e % 8) + 7)); }

  // Corners in boundary order; corners[t] -> corners[t+1] is labelled
  // kRelator[t] (the canonical rotation places the a-edge first).
  const std::array<Vertex, 8>& face_corners(Face f) const { return faces_[f]; }
  // Position t of the undirected edge on the face boundary, or -1.
  int face_edge_position(Face f, Dir undirected_edge) const;
  // Directed boundary edge t of the face.
  Dir face_edge(Face f, int t) const;

  // The other face containing the undirected edge (given one of them).
  Face face_across(Dir e, Face f) const;

  // Gamma-edges crossing one geodesic of N: walk straight both ways from
  // the dual edge of e until the patch runs out.  Returned as canonical
  // undirected ids, e included.
  std::vector<Dir> geodesic_cut(Dir e) const;

  // Distance from base for every vertex created by ensure_ball(base, r);
  // only meaningful after such a call pattern.
  int bfs_depth(Vertex v) const { return depth_[v]; }

  // Structural validation of the built patch; throws on any violation.
  // Interior vertices must have degree 8, eight pairwise distinct faces,
  // and every face must read the relator.
  void validate() const;

 private:
  Vertex new_vertex();
  void link(Vertex u, Letter x, Vertex w);
  void close_face(Vertex v, int slot);

  std::vector<std::array<Vertex, 8>> nbr_;
  std::vector<std::array<Face, 8>> corner_face_;
  std::vector<std::array<Vertex, 8>> faces_;
  std::vector<int> depth_;
};

// Subset of patch vertices, used for regions.
class RegionSet {
 public:
  RegionSet() = default;
  explicit RegionSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  std::size_t universe_size() const { return n_; }
  bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { bits_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

  RegionSet& operator&=(const RegionSet& o);
  RegionSet& operator-=(const RegionSet& o);
  RegionSet& operator|=(const RegionSet& o);
  bool operator==(const RegionSet& o) const { return bits_ == o.bits_; }
  bool none() const;
  std::size_t count() const;
  bool equals_on(const RegionSet& o, const RegionSet& mask) const;
  bool none_on(const RegionSet& mask) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Half-plane machinery over a frozen patch.  A half-plane is the component
// of the patch minus a geodesic cut that contains the seed vertex;
// results are memoized because the same few geodesics bound every region
// near the base vertex.
class HalfplaneCache {
 public:
  explicit HalfplaneCache(const Tiling& t) : t_(&t), frozen_size_(t.vertex_count()) {}

  // Side of the geodesic through edge e containing `seed`.
  const RegionSet& side(Tiling::Dir e, Tiling::Vertex seed);

  RegionSet full() const;

 private:
  const Tiling* t_;
  std::size_t frozen_size_;
  std::map<std::pair<Tiling::Dir, bool>, RegionSet> cache_;
};

}  // namespace snakestat
