#include "snakestat/markov.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "snakestat/regions.hpp"
#include "snakestat/rng.hpp"

namespace snakestat {

namespace {

// Successor multiplicities of the case graph, per case class, excluding Fi.
const std::map<CaseClass, std::map<CaseClass, int>>& case_graph_rows() {
  static const std::map<CaseClass, std::map<CaseClass, int>> rows = {
      {CaseClass::A, {{CaseClass::A, 5}, {CaseClass::B, 6}, {CaseClass::Ap, 2}}},
      {CaseClass::Ap,
       {{CaseClass::A, 5}, {CaseClass::B, 6}, {CaseClass::Ap, 1}, {CaseClass::App, 1}}},
      {CaseClass::App, {{CaseClass::A, 5}, {CaseClass::B, 5}, {CaseClass::Ap, 1}}},
      {CaseClass::B, {{CaseClass::C, 1}}},
      {CaseClass::C, {{CaseClass::Cp, 1}}},
      {CaseClass::Cp, {{CaseClass::D, 1}, {CaseClass::E, 2}}},
      {CaseClass::D, {{CaseClass::A, 4}, {CaseClass::B, 5}, {CaseClass::Ap, 2}}},
      {CaseClass::E, {{CaseClass::C, 1}}},
  };
  return rows;
}

bool fi_capable(CaseClass c) {
  return c == CaseClass::A || c == CaseClass::Ap || c == CaseClass::App ||
         c == CaseClass::D;
}

}  // namespace

TransitionMatrix TransitionMatrix::build(int patch_radius, int compare_radius) {
  Tiling t;
  t.ensure_ball(t.base(), patch_radius);
  t.validate();
  RegionEngine eng(t, compare_radius);
  const auto& alpha = StateAlphabet::instance();

  TransitionMatrix m;
  for (int i = 0; i < kNumStates; ++i) {
    const SnakeState& s = alpha.state(i);
    PlacedStep placed = eng.place_with_head_at_base(s);
    std::vector<StepChoice> choices;
    bool fi = eng.classify_step(placed, choices);
    if (fi != fi_capable(projection_pi(s.tag)))
      throw std::logic_error("matrix build: Fi availability mismatch at " + s.token());
    for (const auto& ch : choices) {
      int j = alpha.index_of(ch.step.state);
      if (m.a_[i][j])
        throw std::logic_error("matrix build: duplicate successor " +
                               alpha.state(j).token() + " of " + s.token());
      m.a_[i][j] = 1;
    }
  }
  m.finish_init();
  return m;
}

const TransitionMatrix& TransitionMatrix::instance() {
  static TransitionMatrix m = build(/*patch_radius=*/5, /*compare_radius=*/4);
  return m;
}

void TransitionMatrix::finish_init() {
  succ_.assign(kNumStates, {});
  pred_.assign(kNumStates, {});
  for (int i = 0; i < kNumStates; ++i)
    for (int j = 0; j < kNumStates; ++j)
      if (a_[i][j]) {
        succ_[i].push_back(j);
        pred_[j].push_back(i);
      }
  validate_case_graph();
  validate_connectivity();
}

void TransitionMatrix::validate_case_graph() const {
  const auto& alpha = StateAlphabet::instance();
  for (int i = 0; i < kNumStates; ++i) {
    std::map<CaseClass, int> got;
    for (int j : succ_[i]) ++got[projection_pi(alpha.state(j).tag)];
    const auto& want = case_graph_rows().at(projection_pi(alpha.state(i).tag));
    if (got != want)
      throw std::logic_error("matrix build: case-graph row mismatch at " +
                             alpha.state(i).token());
  }
}

void TransitionMatrix::validate_connectivity() {
  // Strong connectivity by forward and backward reachability from state 0.
  auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(kNumStates, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    return seen;
  };
  auto f = reach(succ_);
  auto b = reach(pred_);
  for (int i = 0; i < kNumStates; ++i)
    if (!f[i] || !b[i]) throw std::logic_error("matrix build: not irreducible");

  // Positivity exponent: least n with A^n strictly positive; also records
  // whether A^10 still has a zero.
  auto pw = power(1);
  int n = 1;
  auto all_positive = [&](const std::vector<std::array<BigCount, kNumStates>>& p) {
    for (int i = 0; i < kNumStates; ++i)
      for (int j = 0; j < kNumStates; ++j)
        if (p[i][j] == BigCount(0)) return false;
    return true;
  };
  while (n < 32 && !all_positive(pw)) {
    auto nxt = power(n + 1);
    pw = std::move(nxt);
    ++n;
  }
  report_.positivity_exponent = n;
  auto p10 = power(10);
  report_.a10_has_zero = !all_positive(p10);
  if (n > 11) throw std::logic_error("matrix build: A^11 not strictly positive");
}

bool TransitionMatrix::start_state(int i) const {
  CaseTag t = StateAlphabet::instance().state(i).tag;
  return t == CaseTag::A || t == CaseTag::B;
}

bool TransitionMatrix::finish_state(int i) const {
  return fi_capable(projection_pi(StateAlphabet::instance().state(i).tag));
}

std::vector<std::array<BigCount, kNumStates>> TransitionMatrix::power(int n) const {
  std::vector<std::array<BigCount, kNumStates>> r(kNumStates), base(kNumStates);
  for (int i = 0; i < kNumStates; ++i) {
    for (int j = 0; j < kNumStates; ++j) {
      r[i][j] = BigCount(i == j ? 1 : 0);
      base[i][j] = BigCount(a_[i][j]);
    }
  }
  auto mul = [&](const std::vector<std::array<BigCount, kNumStates>>& x,
                 const std::vector<std::array<BigCount, kNumStates>>& y) {
    std::vector<std::array<BigCount, kNumStates>> z(kNumStates);
    for (int i = 0; i < kNumStates; ++i)
      for (int k = 0; k < kNumStates; ++k) {
        if (x[i][k] == BigCount(0)) continue;
        for (int j = 0; j < kNumStates; ++j) {
          if (y[k][j] == BigCount(0)) continue;
          z[i][j] += x[i][k] * y[k][j];
        }
      }
    return z;
  };
  int e = n;
  auto sq = base;
  while (e > 0) {
    if (e & 1) r = mul(r, sq);
    e >>= 1;
    if (e) sq = mul(sq, sq);
  }
  return r;
}

BigCount TransitionMatrix::trace_power(int n) const {
  auto p = power(n);
  BigCount t(0);
  for (int i = 0; i < kNumStates; ++i) t += p[i][i];
  return t;
}

BigCount TransitionMatrix::primitive_sequences(int n) const {
  // Moebius inversion over divisors.
  auto mobius = [](int m) {
    int mu = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  BigCount total(0);
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 1)
      total += trace_power(d);
    else if (mu == -1)
      total = total - trace_power(d);
  }
  return total;
}

BigCount TransitionMatrix::count_elements_of_length(int n) const {
  if (n < 1) throw std::invalid_argument("count_elements_of_length: n >= 1");
  auto p = power(n - 1);
  BigCount total(0);
  for (int i = 0; i < kNumStates; ++i) {
    if (!start_state(i)) continue;
    for (int j = 0; j < kNumStates; ++j) {
      if (!finish_state(j)) continue;
      total += p[i][j];
    }
  }
  return total;
}

void TransitionMatrix::enumerate_periodic(
    int n, const std::function<void(const std::vector<int>&, int)>& sink, int cap) const {
  if (n < 1) throw std::invalid_argument("enumerate_periodic: n >= 1");
  if (n > cap) throw std::length_error("enumerate_periodic: period exceeds cap");
  // can[k][u][v]: u reaches v in exactly k steps.
  std::vector<std::vector<std::vector<char>>> can(n + 1);
  can[0].assign(kNumStates, std::vector<char>(kNumStates, 0));
  for (int i = 0; i < kNumStates; ++i) can[0][i][i] = 1;
  for (int k = 1; k <= n; ++k) {
    can[k].assign(kNumStates, std::vector<char>(kNumStates, 0));
    for (int i = 0; i < kNumStates; ++i)
      for (int m : succ_[i])
        for (int j = 0; j < kNumStates; ++j)
          if (can[k - 1][m][j]) can[k][i][j] = 1;
  }

  std::vector<int> seq(n);
  // Depth-first over sequences whose first state is the minimum, emitting
  // only least rotations.
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      if (!a_[seq[n - 1]][seq[0]]) return;
      // least-rotation test
      for (int r = 1; r < n; ++r) {
        for (int t = 0; t < n; ++t) {
          int aa = seq[(r + t) % n];
          int bb = seq[t];
          if (aa != bb) {
            if (aa < bb) return;  // a smaller rotation exists
            break;
          }
        }
      }
      int d = 1;
      for (; d < n; ++d) {
        if (n % d) continue;
        bool per = true;
        for (int t = 0; t < n && per; ++t)
          if (seq[t] != seq[(t + d) % n]) per = false;
        if (per) break;
      }
      sink(seq, d == n ? n : d);
      return;
    }
    int prev = seq[depth - 1];
    for (int j : succ_[prev]) {
      if (j < seq[0]) continue;  // first state must stay minimal
      if (!can[n - depth][j][seq[0]]) continue;
      seq[depth] = j;
      rec(depth + 1);
    }
  };
  for (int s0 = 0; s0 < kNumStates; ++s0) {
    if (!can[n][s0][s0]) continue;
    seq[0] = s0;
    rec(1);
  }
}

std::vector<int> TransitionMatrix::sample_periodic(int n, Rng& rng) const {
  // Exact uniform draw over period-n tuples: weight prefixes by the number
  // of completions returning to the first state.
  auto pw = std::vector<std::vector<std::array<BigCount, kNumStates>>>();
  pw.reserve(n + 1);
  for (int k = 0; k <= n; ++k) pw.push_back(power(k));
  BigCount total = trace_power(n);
  // first state ~ diagonal of A^n
  double u = rng.next_double() * total.to_double();
  int s0 = 0;
  double acc = 0;
  for (int i = 0; i < kNumStates; ++i) {
    acc += pw[n][i][i].to_double();
    if (u <= acc || i == kNumStates - 1) {
      s0 = i;
      break;
    }
  }
  std::vector<int> seq{s0};
  for (int k = 1; k < n; ++k) {
    int prev = seq.back();
    double tot = 0;
    std::vector<std::pair<int, double>> ws;
    for (int j : succ_[prev]) {
      double w = pw[n - k][j][s0].to_double();
      if (w > 0) {
        ws.emplace_back(j, w);
        tot += w;
      }
    }
    if (ws.empty()) throw std::logic_error("sample_periodic: dead end");
    double r = rng.next_double() * tot;
    int pick = ws.back().first;
    double a2 = 0;
    for (auto& [j, w] : ws) {
      a2 += w;
      if (r <= a2) {
        pick = j;
        break;
      }
    }
    seq.push_back(pick);
  }
  if (!a_[seq.back()][s0]) throw std::logic_error("sample_periodic: failed closure");
  // normalize to least rotation so downstream treats it like enumerate output
  int n_ = n;
  int best = 0;
  for (int r = 1; r < n_; ++r) {
    for (int t = 0; t < n_; ++t) {
      int aa = seq[(r + t) % n_];
      int bb = seq[(best + t) % n_];
      if (aa != bb) {
        if (aa < bb) best = r;
        break;
      }
    }
  }
  std::vector<int> rot(n_);
  for (int t = 0; t < n_; ++t) rot[t] = seq[(best + t) % n_];
  return rot;
}

std::string TransitionMatrix::dump_json() const {
  const auto& alpha = StateAlphabet::instance();
  std::ostringstream os;
  os << "{\n  \"states\": [";
  for (int i = 0; i < kNumStates; ++i)
    os << (i ? ", " : "") << '"' << alpha.state(i).token() << '"';
  os << "],\n  \"transitions\": [\n";
  for (int i = 0; i < kNumStates; ++i) {
    os << "    [";
    for (std::size_t k = 0; k < succ_[i].size(); ++k)
      os << (k ? ", " : "") << succ_[i][k];
    os << (i + 1 < kNumStates ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

CyclicWord read_word(const std::vector<int>& orbit) {
  const auto& alpha = StateAlphabet::instance();
  std::vector<Letter> letters;
  letters.reserve(orbit.size());
  for (int i : orbit) letters.push_back(alpha.state(i).labels[0]);
  return CyclicWord(std::move(letters));
}

}  // namespace snakestat
