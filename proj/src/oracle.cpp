#include "snakestat/oracle.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace snakestat {

namespace {

using Mat = FuchsianRep::Mat;
using C = std::complex<double>;

Mat rotation(double theta) {
  Mat m;
  m << std::polar(1.0, theta / 2), C(0, 0), C(0, 0), std::polar(1.0, -theta / 2);
  return m;
}

Mat x_translation(double t) {
  Mat m;
  m << C(std::cosh(t / 2), 0), C(std::sinh(t / 2), 0), C(std::sinh(t / 2), 0),
      C(std::cosh(t / 2), 0);
  return m;
}

C moebius(const Mat& m, C z) { return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1)); }

double dist(C z1, C z2) {
  double num = std::norm(z1 - z2);
  double den = (1 - std::norm(z1)) * (1 - std::norm(z2));
  return std::acosh(1 + 2 * num / den);
}

double artanh(double x) { return 0.5 * std::log((1 + x) / (1 - x)); }

}  // namespace

double FuchsianRep::translation_length(const Mat& m) {
  double tr = std::abs(std::real(m(0, 0) + m(1, 1)));
  if (tr <= 2) return 0;
  return 2 * std::acosh(tr / 2);
}

bool FuchsianRep::hyperbolic(const Mat& m) {
  return std::abs(std::real(m(0, 0) + m(1, 1))) > 2 + 1e-12;
}

FuchsianRep::FuchsianRep() {
  // Regular octagon with vertex angle pi/4: centre-to-side distance rho
  // with cosh(rho) = cot(pi/8).  Side midpoints sit at angles 2 pi s / 8,
  // side s carrying the out-label kCcwOrder[s]; the generator x maps the
  // side labelled inverse(x) onto the side labelled x, flipping across.
  const double rho = std::acosh(1.0 / std::tan(M_PI / 8));
  auto frame = [&](int side) { return rotation(2 * M_PI * side / 8) * x_translation(rho); };
  for (int i = 0; i < 8; ++i) {
    Letter x = letter_from_idx(i);
    Mat g = frame(ccw_slot(x)) * rotation(M_PI) * frame(ccw_slot(inverse(x))).inverse();
    gen_[i] = g;
  }
  Mat rel = Mat::Identity();
  for (Letter l : kRelator) rel = rel * gen_[idx(l)];
  double plus = (rel - Mat::Identity()).cwiseAbs().maxCoeff();
  double minus = (rel + Mat::Identity()).cwiseAbs().maxCoeff();
  relator_residual_ = std::min(plus, minus);
  if (relator_residual_ > 1e-9)
    throw std::logic_error("FuchsianRep: relator residual too large");
  gen_length_ = translation_length(gen_[0]);
  for (int i = 1; i < 8; ++i)
    if (std::abs(translation_length(gen_[i]) - gen_length_) > 1e-9)
      throw std::logic_error("FuchsianRep: generators not regular");
}

const FuchsianRep& FuchsianRep::instance() {
  static FuchsianRep rep;
  return rep;
}

Mat FuchsianRep::word_matrix(const CyclicWord& w) const {
  Mat m = Mat::Identity();
  for (Letter l : w.letters()) m = m * gen_[idx(l)];
  return m;
}

namespace {

// Fixed points on the unit circle; {repelling, attracting}.
std::pair<C, C> axis_endpoints(const Mat& m) {
  C alpha = m(0, 0), beta = m(0, 1);
  C bbar = std::conj(beta);
  if (std::abs(beta) < 1e-13)
    throw std::logic_error("axis_endpoints: axis through origin frame");
  C ia = alpha - std::conj(alpha);
  C disc = std::sqrt(ia * ia + 4.0 * std::norm(beta));
  C z1 = (ia + disc) / (2.0 * bbar);
  C z2 = (ia - disc) / (2.0 * bbar);
  z1 /= std::abs(z1);
  z2 /= std::abs(z2);
  double d1 = std::norm(bbar * z1 + std::conj(alpha));
  return d1 > 1 ? std::make_pair(z2, z1) : std::make_pair(z1, z2);
}

struct GeoCircle {
  bool diameter;
  C center;
  double dir;
};

GeoCircle geodesic_circle(C u, C v) {
  double det = std::real(u) * std::imag(v) - std::imag(u) * std::real(v);
  if (std::abs(det) < 1e-12) return {true, C(0, 0), std::arg(u)};
  double cx = (std::imag(v) - std::imag(u)) / det;
  double cy = (std::real(u) - std::real(v)) / det;
  return {false, C(cx, cy), 0.0};
}

C axis_midpoint(C u, C v) {
  GeoCircle g = geodesic_circle(u, v);
  if (g.diameter) return C(0, 0);
  double ac = std::abs(g.center);
  double r = std::sqrt(ac * ac - 1);
  return g.center * ((ac - r) / ac);
}

// Signed side of z against the geodesic (u, v): positive outside the
// orthogonal circle (or left of the diameter).
double side_sign(const GeoCircle& g, C z) {
  if (g.diameter) return std::imag(z * std::polar(1.0, -g.dir));
  double r2 = std::norm(g.center) - 1;
  return std::norm(z - g.center) - r2;
}

// Disk automorphism mapping the axis (u -> v) to the real diameter
// oriented toward +1, closest-to-origin point to 0.
Mat axis_frame(C u, C v) {
  C z0 = axis_midpoint(u, v);
  double s = std::sqrt(1 - std::norm(z0));
  Mat w;
  w << C(1 / s, 0), -z0 / s, -std::conj(z0) / s, C(1 / s, 0);
  C vv = moebius(w, v);
  return rotation(-std::arg(vv)) * w;
}

struct WindowCrossing {
  bool crosses = false;
  bool precision = false;
  double t = 0;
};

// Crossing parameter of the geodesic (u2, v2) against the framed real
// diameter; near-tangency escalates to long double before deciding.
WindowCrossing diameter_crossing(const Mat& frame, C u2, C v2, double margin) {
  C a = moebius(frame, u2);
  C b = moebius(frame, v2);
  a /= std::abs(a);
  b /= std::abs(b);
  double ia = std::imag(a), ib = std::imag(b);
  WindowCrossing out;
  if (std::min(std::abs(ia), std::abs(ib)) < margin) {
    if (std::min(std::abs(ia), std::abs(ib)) < 1e-13) {
      out.precision = true;
      return out;
    }
  }
  if (ia * ib >= 0) return out;
  GeoCircle g = geodesic_circle(a, b);
  double x;
  if (g.diameter) {
    x = 0;
  } else {
    double cx = std::real(g.center);
    double root = std::sqrt(std::max(0.0, cx * cx - 1));
    x = cx > 0 ? cx - root : cx + root;
    if (std::abs(x) >= 1) {
      out.precision = true;
      return out;
    }
  }
  out.crosses = true;
  out.t = 2 * artanh(x);
  return out;
}

struct OctagonGeometry {
  std::array<C, 8> side_u, side_v;  // boundary endpoints of side geodesics
  std::array<GeoCircle, 8> circ;
  double circumradius;
};

const OctagonGeometry& base_octagon() {
  static OctagonGeometry geo = [] {
    OctagonGeometry g;
    const double rho = std::acosh(1.0 / std::tan(M_PI / 8));
    for (int s = 0; s < 8; ++s) {
      Mat f = rotation(2 * M_PI * s / 8) * x_translation(rho);
      g.side_u[s] = moebius(f, C(0, 1));
      g.side_v[s] = moebius(f, C(0, -1));
      g.circ[s] = geodesic_circle(g.side_u[s], g.side_v[s]);
    }
    // circumradius: distance to the vertex where adjacent side geodesics
    // meet; computed numerically from two adjacent circles.
    Mat f0 = rotation(0.0) * x_translation(rho);
    // vertex at angle pi/8: intersect side 0 and side 1 circles
    C c0 = g.circ[0].center, c1 = g.circ[1].center;
    // radical line intersection with the angle-pi/8 ray
    double best = 0;
    for (double t = 0.01; t < 0.999; t += 1e-5) {
      C z = std::polar(t, M_PI / 8);
      if (side_sign(g.circ[0], z) < 0 && side_sign(g.circ[1], z) < 0) best = t;
    }
    (void)f0;
    (void)c0;
    (void)c1;
    g.circumradius = dist(C(0, 0), std::polar(best, M_PI / 8));
    return g;
  }();
  return geo;
}

// True when z lies inside the base octagon (all eight side tests).
bool inside_base(C z) {
  const auto& g = base_octagon();
  for (int s = 0; s < 8; ++s)
    if (side_sign(g.circ[s], z) >= 0) return false;
  return true;
}

struct QKey {
  long long a, b, c, d;
  bool operator<(const QKey& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
  bool operator==(const QKey& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

QKey endpoint_key(C u, C v) {
  auto q = [](double x) { return static_cast<long long>(std::llround(x * 1e7)); };
  return {q(std::real(u)), q(std::imag(u)), q(std::real(v)), q(std::imag(v))};
}

long long primitive_crossing_count(const CyclicWord& w, const OracleOptions& opt,
                                   double cover_slack) {
  const FuchsianRep& rep = FuchsianRep::instance();
  const auto& geo = base_octagon();

  // Conjugate until the axis passes near the base octagon.
  Mat g = rep.word_matrix(w);
  if (!FuchsianRep::hyperbolic(g)) throw std::logic_error("oracle: not hyperbolic");
  for (int guard = 0; guard < 4096; ++guard) {
    auto [p, q] = axis_endpoints(g);
    if (dist(C(0, 0), axis_midpoint(p, q)) <= geo.circumradius + 0.1) break;
    double best = 1e100;
    Mat pick;
    for (int i = 0; i < 8; ++i) {
      Mat cand = rep.generator(letter_from_idx(i)).inverse() * g *
                 rep.generator(letter_from_idx(i));
      auto [pp, qq] = axis_endpoints(cand);
      double d = dist(C(0, 0), axis_midpoint(pp, qq));
      if (d < best) {
        best = d;
        pick = cand;
      }
    }
    g = pick;
    if (guard == 4095) throw std::logic_error("oracle: axis descent stuck");
  }

  auto [p, q] = axis_endpoints(g);
  Mat fr = axis_frame(p, q);
  Mat fr_inv = fr.inverse();
  const double len = FuchsianRep::translation_length(g);

  // Octagon cover of one period of the axis: walk two slightly offset
  // parallels through the tiling, collecting translates u with the sample
  // inside u * F.  Offsets keep samples away from octagon boundaries even
  // when the axis runs along a net geodesic.
  std::vector<Mat> cover;
  std::set<QKey> cover_keys;
  const double dt = 0.15;
  for (int side = 0; side < 2; ++side) {
    const double eps = side == 0 ? 7.3e-4 : -7.3e-4;
    Mat u = Mat::Identity();
    for (double t = -0.3; t <= len + 0.3; t += dt) {
      double x = std::tanh(t / 2);
      C zf(x, eps * (1 - x * x));
      C z = moebius(fr_inv, zf);
      int hops = 0;
      for (;;) {
        if (++hops > 64) {
          // vertex ping-pong: nudge the sample slightly
          t += dt / 7;
          x = std::tanh(t / 2);
          zf = C(x, eps * (1 - x * x));
          z = moebius(fr_inv, zf);
          hops = 0;
        }
        C local = moebius(u.inverse(), z);
        int worst = -1;
        double worst_sign = 1e-12;
        for (int s = 0; s < 8; ++s) {
          double sgn = side_sign(geo.circ[s], local);
          if (sgn > worst_sign) {
            worst_sign = sgn;
            worst = s;
          }
        }
        if (worst < 0) break;
        u = u * rep.generator(kCcwOrder[worst]);
      }
      C pos = moebius(u, C(0, 0));
      QKey k = endpoint_key(pos, pos);
      if (cover_keys.insert(k).second) cover.push_back(u);
    }
  }

  // Lifts through the base octagon: the walk renormalizes each visited
  // octagon to the base, so every lift through a cover octagon is
  // u * (lift through F) for a cover element u.  A one-ring extension
  // guards samples that hug octagon boundaries.
  std::vector<Mat> thru_f;
  for (const Mat& u : cover) thru_f.push_back(u.inverse() * g * u);
  std::vector<Mat> anchors = cover;
  for (const Mat& u : cover)
    for (int i = 0; i < 8; ++i) anchors.push_back(u * rep.generator(letter_from_idx(i)));

  // Crossings of candidate lifts with one fundamental window of the axis.
  const double t0 = 0.0129203;  // generic window offset
  auto base_key = endpoint_key(p, q);
  auto base_key_rev = endpoint_key(q, p);
  std::set<QKey> families;
  bool precision_hit = false;
  for (const Mat& a : anchors) {
    for (const Mat& c : thru_f) {
      Mat lift = a * c * a.inverse();
      if (!FuchsianRep::hyperbolic(lift)) continue;
      auto [p2, q2] = axis_endpoints(lift);
      if (endpoint_key(p2, q2) == base_key || endpoint_key(p2, q2) == base_key_rev)
        continue;
      WindowCrossing cr = diameter_crossing(fr, p2, q2, opt.margin);
      if (cr.precision) {
        precision_hit = true;
        continue;
      }
      if (!cr.crosses) continue;
      // Normalize the family so its crossing lies in [t0, t0 + len).
      double k = std::floor((cr.t - t0) / len);
      Mat norm = x_translation(-k * len);
      C pu = moebius(norm, moebius(fr, p2));
      C qu = moebius(norm, moebius(fr, q2));
      families.insert(endpoint_key(pu / std::abs(pu), qu / std::abs(qu)));
    }
  }
  if (precision_hit)
    throw precision_error("oracle: crossing within precision margin");
  if (families.size() % 2 != 0)
    throw std::logic_error("oracle: odd strand count");
  (void)cover_slack;
  (void)inside_base;
  return static_cast<long long>(families.size() / 2);
}

}  // namespace

long long oracle_count(const CyclicWord& w, const OracleOptions& opt) {
  if (w.empty()) throw std::invalid_argument("oracle_count: empty word");
  CyclicWord root = w.primitive_root();
  long long q = static_cast<long long>(w.size() / root.size());
  long long m = primitive_crossing_count(root, opt, 0.0);
  if (opt.doubling_check) {
    long long m2 = primitive_crossing_count(root, opt, 2.0);
    if (m2 != m) throw std::logic_error("oracle: cover doubling changed the count");
  }
  if (q == 1) return m;
  return q * q * m + (q - 1);
}

}  // namespace snakestat
