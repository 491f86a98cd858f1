#include "snakestat/spine.hpp"

#include <stdexcept>

#include "snakestat/markov.hpp"

namespace snakestat {

namespace {

constexpr int kKeySize = 5 * 64;

int key_of(const SpineSymbol& s) {
  int x = s.kind == SpineSymbol::Kind::Gamma ? 0 : idx(s.x);
  int y = s.kind == SpineSymbol::Kind::Beta || s.kind == SpineSymbol::Kind::Delta
              ? idx(s.y)
              : 0;
  return static_cast<int>(s.kind) * 64 + x * 8 + y;
}

SpineSymbol alpha_(Letter x) { return {SpineSymbol::Kind::Alpha, x, Letter::a}; }
SpineSymbol beta_(Letter x, Letter y) { return {SpineSymbol::Kind::Beta, x, y}; }
SpineSymbol gamma_() { return {SpineSymbol::Kind::Gamma, Letter::a, Letter::a}; }
SpineSymbol delta_(Letter x, Letter y) { return {SpineSymbol::Kind::Delta, x, y}; }
SpineSymbol eps_(Letter y) { return {SpineSymbol::Kind::Eps, y, Letter::a}; }

Letter L(char c) { return *letter_from_char(c); }

// Counterclockwise edge orders of the merged graph, as printed for the
// Cayley-vertex order; the net-vertex order as printed repeats delta_Dc,
// which a cyclic order of sixteen distinct edges cannot do, so the second
// occurrence is corrected to delta_dC (the value the tiling derivation
// produces; see the order test).
const std::array<SpineSymbol, 16>& order1() {
  static const std::array<SpineSymbol, 16> o = {
      alpha_(L('a')), beta_(L('d'), L('a')), alpha_(L('d')), beta_(L('C'), L('d')),
      alpha_(L('C')), beta_(L('D'), L('C')), alpha_(L('D')), beta_(L('c'), L('D')),
      alpha_(L('c')), beta_(L('b'), L('c')), alpha_(L('b')), beta_(L('A'), L('b')),
      alpha_(L('A')), beta_(L('B'), L('A')), alpha_(L('B')), beta_(L('a'), L('B'))};
  return o;
}

const std::array<SpineSymbol, 16>& order2() {
  static const std::array<SpineSymbol, 16> o = {
      delta_(L('A'), L('D')), eps_(L('A')), delta_(L('B'), L('a')), eps_(L('B')),
      delta_(L('a'), L('b')), eps_(L('a')), delta_(L('b'), L('A')), eps_(L('b')),
      delta_(L('C'), L('B')), eps_(L('C')), delta_(L('D'), L('c')), eps_(L('D')),
      delta_(L('c'), L('d')), eps_(L('c')), delta_(L('d'), L('C')), eps_(L('d'))};
  return o;
}

const int* position_table(int which) {
  static int pos1[kKeySize], pos2[kKeySize];
  static bool init = false;
  if (!init) {
    for (int i = 0; i < kKeySize; ++i) pos1[i] = pos2[i] = -1;
    for (int i = 0; i < 16; ++i) {
      pos1[key_of(order1()[i])] = i;
      pos2[key_of(order2()[i])] = i;
    }
    init = true;
  }
  return which == 1 ? pos1 : pos2;
}

// Orientation over raw positions; -2 marks a letter outside the order.
int orient(const int* pos, const SpineSymbol* w, int m) {
  int p[4];
  for (int t = 0; t < m; ++t) {
    p[t] = pos[key_of(w[t])];
    if (p[t] < 0) return 0;
    for (int s = 0; s < t; ++s)
      if (p[s] == p[t]) return 0;
  }
  int fwd = 0, bwd = 0;
  for (int t = 0; t < m; ++t) {
    fwd += ((p[(t + 1) % m] - p[t]) % 16 + 16) % 16;
    bwd += ((p[t] - p[(t + 1) % m]) % 16 + 16) % 16;
  }
  if (fwd == 16) return 1;
  if (bwd == 16) return -1;
  return 0;
}

int o_raw(int which, std::initializer_list<SpineSymbol> w) {
  SpineSymbol buf[4] = {gamma_(), gamma_(), gamma_(), gamma_()};
  int m = 0;
  for (const auto& s : w) buf[m++] = s;
  return orient(position_table(which), buf, m);
}

// u_k over spans; entries 1..k are zeta[0..k-1].
int u_span(const SpineSymbol* z, int zn, const SpineSymbol* x, int xn, int k) {
  if (k < 1 || zn < k || xn < k) return 0;
  if (z[0] == x[0]) return 0;
  if (z[k - 1] == x[k - 1]) return 0;
  for (int i = 1; i + 1 < k; ++i)
    if (z[i] != x[i]) return 0;
  switch (k) {
    case 1: {
      // different elements of {alpha_t, eps_t} for one t
      auto in_pair = [](const SpineSymbol& s) {
        return s.kind == SpineSymbol::Kind::Alpha || s.kind == SpineSymbol::Kind::Eps;
      };
      if (!in_pair(z[0]) || !in_pair(x[0])) return 0;
      return z[0].x == x[0].x ? 1 : 0;
    }
    case 2:
      return o_raw(1, {bar(z[0]), bar(x[0]), z[1], x[1]}) == 1 ? 1 : 0;
    case 3: {
      int a = o_raw(1, {bar(z[0]), bar(x[0]), z[1]});
      int b = o_raw(1, {bar(z[1]), z[2], x[2]});
      return (a == b && a != 0) ? 1 : 0;
    }
    case 4: {
      int a = o_raw(1, {bar(z[0]), bar(x[0]), z[1]});
      int b = o_raw(1, {bar(z[2]), z[3], x[3]});
      if (a == b && a != 0) return 1;
      return o_raw(2, {bar(z[0]), bar(x[0]), z[3], x[3]}) == 1 ? 1 : 0;
    }
    default: {
      int lhs = o_raw(1, {bar(z[0]), bar(x[0]), z[1]}) +
                o_raw(2, {bar(z[0]), bar(x[0]), z[3]});
      int rhs = o_raw(1, {bar(z[k - 2]), z[k - 1], x[k - 1]}) +
                o_raw(2, {bar(z[k - 4]), z[k - 1], x[k - 1]});
      return (lhs == rhs && lhs != 0) ? 1 : 0;
    }
  }
}

int v_span(const SpineSymbol* z, int zn, const SpineSymbol* x, int xn, int k) {
  if (k < 1 || zn < k || xn < k) return 0;
  SpineSymbol rb[64];
  if (k > 64) throw std::length_error("v_k: k too large");
  for (int i = 0; i < k; ++i) rb[i] = bar(x[k - 1 - i]);
  return u_span(z, k, rb, k, k);
}

}  // namespace

std::string SpineSymbol::token() const {
  switch (kind) {
    case Kind::Alpha: return std::string("a:") + to_char(x);
    case Kind::Beta: return std::string("b:") + to_char(x) + to_char(y);
    case Kind::Gamma: return "g";
    case Kind::Delta: return std::string("d:") + to_char(x) + to_char(y);
    case Kind::Eps: return std::string("e:") + to_char(x);
  }
  return "?";
}

std::optional<SpineSymbol> SpineSymbol::from_token(const std::string& tok) {
  if (tok == "g") return gamma_();
  if (tok.size() < 3 || tok[1] != ':') return std::nullopt;
  auto x = letter_from_char(tok[2]);
  if (!x) return std::nullopt;
  switch (tok[0]) {
    case 'a': return tok.size() == 3 ? std::optional<SpineSymbol>(alpha_(*x)) : std::nullopt;
    case 'e': return tok.size() == 3 ? std::optional<SpineSymbol>(eps_(*x)) : std::nullopt;
    case 'b':
    case 'd': {
      if (tok.size() != 4) return std::nullopt;
      auto y = letter_from_char(tok[3]);
      if (!y) return std::nullopt;
      return tok[0] == 'b' ? beta_(*x, *y) : delta_(*x, *y);
    }
    default: return std::nullopt;
  }
}

SpineSymbol phi(const SnakeState& s) {
  switch (s.tag) {
    case CaseTag::A:
    case CaseTag::ApL:
    case CaseTag::ApR:
    case CaseTag::AppL:
    case CaseTag::AppR:
      return alpha_(s.labels[0]);
    case CaseTag::B:
      return beta_(s.labels[0], s.labels[1]);
    case CaseTag::C:
    case CaseTag::Cp:
      return gamma_();
    case CaseTag::D:
      return delta_(s.labels[0], s.labels[1]);
    case CaseTag::EL:
      return eps_(s.labels[1]);
    case CaseTag::ER:
      return eps_(inverse(s.labels[1]));
  }
  throw std::logic_error("phi: bad tag");
}

SpineSymbol phi(int state_index) {
  static std::array<SpineSymbol, kNumStates> table = [] {
    std::array<SpineSymbol, kNumStates> t{};
    for (int i = 0; i < kNumStates; ++i) t[i] = phi(StateAlphabet::instance().state(i));
    return t;
  }();
  return table[state_index];
}

SpineSymbol bar(const SpineSymbol& s) {
  switch (s.kind) {
    case SpineSymbol::Kind::Alpha: return alpha_(inverse(s.x));
    case SpineSymbol::Kind::Beta: return delta_(inverse(s.y), inverse(s.x));
    case SpineSymbol::Kind::Gamma: return gamma_();
    case SpineSymbol::Kind::Delta: return beta_(inverse(s.y), inverse(s.x));
    case SpineSymbol::Kind::Eps: return eps_(inverse(s.x));
  }
  throw std::logic_error("bar: bad kind");
}

const std::array<SpineSymbol, 16>& cyclic_order(int which) {
  return which == 1 ? order1() : order2();
}

int o_orientation(int which, const std::vector<SpineSymbol>& word) {
  if (word.size() < 3 || word.size() > 4)
    throw std::invalid_argument("o_orientation: word length must be 3 or 4");
  return orient(position_table(which), word.data(), static_cast<int>(word.size()));
}

int u_k(const std::vector<SpineSymbol>& zeta, const std::vector<SpineSymbol>& xi, int k) {
  return u_span(zeta.data(), static_cast<int>(zeta.size()), xi.data(),
                static_cast<int>(xi.size()), k);
}

int v_k(const std::vector<SpineSymbol>& zeta, const std::vector<SpineSymbol>& xi, int k) {
  return v_span(zeta.data(), static_cast<int>(zeta.size()), xi.data(),
                static_cast<int>(xi.size()), k);
}

int h_k(const std::vector<int>& X, const std::vector<int>& Y, int k) {
  std::vector<SpineSymbol> zx, zy;
  zx.reserve(X.size());
  zy.reserve(Y.size());
  for (int i : X) zx.push_back(phi(i));
  for (int i : Y) zy.push_back(phi(i));
  int u = u_k(zx, zy, k);
  int v = v_k(zx, zy, k);
  if (u && v) throw std::logic_error("h_k: u and v fired together");
  return u + v;
}

int pair_h(const std::vector<int>& X, const std::vector<int>& Y, int k_max) {
  std::vector<SpineSymbol> zx, zy;
  zx.reserve(X.size());
  zy.reserve(Y.size());
  for (int i : X) zx.push_back(phi(i));
  for (int i : Y) zy.push_back(phi(i));
  int n = static_cast<int>(std::min({zx.size(), zy.size(), static_cast<std::size_t>(k_max)}));
  int total = 0;
  for (int k = 1; k <= n; ++k) {
    int u = u_span(zx.data(), n, zy.data(), n, k);
    int v = v_span(zx.data(), n, zy.data(), n, k);
    if (u && v) throw std::logic_error("pair_h: u and v fired together");
    total += u + v;
  }
  return total;
}

long long intersection_number(const std::vector<int>& orbit) {
  const int n = static_cast<int>(orbit.size());
  if (n < 1) throw std::invalid_argument("intersection_number: empty orbit");

  // Proper powers: compute on the primitive root and apply the k-fold
  // cover correction.
  int d = n;
  for (int cand = 1; cand < n; ++cand) {
    if (n % cand) continue;
    bool per = true;
    for (int t = 0; t < n && per; ++t)
      if (orbit[t] != orbit[(t + cand) % n]) per = false;
    if (per) {
      d = cand;
      break;
    }
  }
  if (d < n) {
    long long q = n / d;
    std::vector<int> root(orbit.begin(), orbit.begin() + d);
    return q * q * intersection_number(root) + (q - 1);
  }

  // Doubled phi sequence; rotation i reads entries i .. i+n-1.
  std::vector<SpineSymbol> ph(2 * n, gamma_());
  for (int i = 0; i < n; ++i) ph[i] = ph[i + n] = phi(orbit[i]);

  // The interior-equality gate leaves at most two candidate k per kernel:
  // k = 1 and k = M + 1 where M is the last index with matching interiors.
  auto u_candidates = [&](const SpineSymbol* z, const SpineSymbol* x) {
    int total = u_span(z, n, x, n, 1);
    int m = 1;
    while (m + 1 <= n && z[m] == x[m]) ++m;
    if (m + 1 <= n) total += u_span(z, n, x, n, m + 1);
    return total;
  };

  long long total = 0;
  std::vector<SpineSymbol> rb(n, gamma_());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const SpineSymbol* zi = ph.data() + i;
      const SpineSymbol* zj = ph.data() + j;
      int u = u_candidates(zi, zj);
      // v_k matches zeta against the reversed bar of xi's first k entries;
      // its interior at i = 2 forces xi_{k-1} = bar(zeta_2), which leaves
      // one candidate k per matching position.
      int v = v_span(zi, n, zj, n, 1) + v_span(zi, n, zj, n, 2);
      if (n >= 3) {
        SpineSymbol need = bar(zi[1]);
        for (int t = 2; t + 1 <= n; ++t)
          if (zj[t - 1] == need) v += v_span(zi, n, zj, n, t + 1);
      }
      total += u + v;
    }
  }
  return total;
}

}  // namespace snakestat
