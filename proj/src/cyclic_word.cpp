#include "snakestat/cyclic_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace snakestat {

std::string letters_to_string(const Letter* data, std::size_t n) {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(to_char(data[i]));
  return s;
}

std::optional<CyclicWord> CyclicWord::parse(const std::string& s) {
  std::vector<Letter> ls;
  ls.reserve(s.size());
  for (char c : s) {
    auto l = letter_from_char(c);
    if (!l) return std::nullopt;
    ls.push_back(*l);
  }
  return CyclicWord(std::move(ls));
}

CyclicWord CyclicWord::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> out(letters_.begin() + k, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + k);
  return CyclicWord(std::move(out));
}

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = snakestat::inverse(l);
  return CyclicWord(std::move(out));
}

CyclicWord CyclicWord::canonical() const {
  if (letters_.empty()) return *this;
  CyclicWord best = *this;
  for (std::size_t k = 1; k < letters_.size(); ++k) {
    CyclicWord r = rotated(k);
    if (r.letters_ < best.letters_) best = r;
  }
  return best;
}

std::size_t CyclicWord::primitive_period() const {
  const std::size_t n = letters_.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (letters_[i] != letters_[(i + d) % n]) ok = false;
    if (ok) return d;
  }
  return n;
}

CyclicWord CyclicWord::primitive_root() const {
  std::size_t d = empty() ? 0 : primitive_period();
  return CyclicWord(std::vector<Letter>(letters_.begin(), letters_.begin() + d));
}

bool CyclicWord::operator==(const CyclicWord& o) const {
  if (size() != o.size()) return false;
  return canonical().letters_ == o.canonical().letters_;
}

bool CyclicWord::operator<(const CyclicWord& o) const {
  auto a = canonical().letters_;
  auto b = o.canonical().letters_;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string CyclicWord::str() const {
  return letters_to_string(letters_.data(), letters_.size());
}

// The rotation of the relator (inv = false) or of its inverse (inv = true)
// identified by the base letter f; for the inverse case this is the
// reversed, letter-inverted rotation of relator_rotation(f).
static std::array<Letter, 8> rotation_letters(Letter f, bool inv) {
  auto rot = relator_rotation(f);
  if (!inv) return rot;
  std::array<Letter, 8> r{};
  for (int t = 0; t < 8; ++t) r[t] = inverse(rot[7 - t]);
  return r;
}

RelatorCycle cycle_at(const CyclicWord& w, std::size_t i) {
  const std::size_t n = w.size();
  const std::size_t cap = std::min<std::size_t>(n, 8);
  RelatorCycle best{i, 0, false, Letter::a};
  for (int inv = 0; inv < 2; ++inv) {
    for (int f = 0; f < 8; ++f) {
      auto rot = rotation_letters(letter_from_idx(f), inv != 0);
      std::size_t len = 0;
      while (len < cap && w.at(i + len) == rot[len]) ++len;
      if (len > best.length) best = RelatorCycle{i, len, inv != 0, letter_from_idx(f)};
    }
  }
  return best;
}

bool has_long_cycle(const CyclicWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (cycle_at(w, i).length > 4) return true;
  return false;
}

namespace {

// Removes one adjacent inverse pair (cyclically), leftmost first from the
// canonical rotation.  Returns true if a pair was removed.
bool reduce_one_pair(CyclicWord& w) {
  if (w.size() < 2) return false;
  CyclicWord c = w.canonical();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c.at(i) == inverse(c.at(i + 1))) {
      std::vector<Letter> out;
      out.reserve(n - 2);
      for (std::size_t t = 0; t < n; ++t) {
        if (t == i || t == (i + 1) % n) continue;
        out.push_back(c.at(t));
      }
      w = CyclicWord(std::move(out));
      return true;
    }
  }
  return false;
}

// Replacement word for a matched window: the window spells the first `len`
// letters of a relator rotation, so it equals the inverse of the remaining
// 8 - len letters.
std::vector<Letter> cycle_complement(const RelatorCycle& c) {
  auto r = rotation_letters(c.rotation_first, c.inverse_relator);
  std::vector<Letter> out;
  for (std::size_t t = 8; t > c.length; --t) out.push_back(inverse(r[t - 1]));
  return out;
}

CyclicWord splice(const CyclicWord& w, std::size_t pos, std::size_t len,
                  const std::vector<Letter>& repl) {
  std::vector<Letter> out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), repl.begin(), repl.end());
  for (std::size_t t = len; t < w.size(); ++t) out.push_back(w.at(pos + t));
  return CyclicWord(std::move(out));
}

bool replace_one_long_cycle(CyclicWord& w) {
  if (w.empty()) return false;
  CyclicWord c = w.canonical();
  for (std::size_t i = 0; i < c.size(); ++i) {
    RelatorCycle cyc = cycle_at(c, i);
    if (cyc.length > 4) {
      w = splice(c, i, cyc.length, cycle_complement(cyc));
      return true;
    }
  }
  return false;
}

bool has_adjacent_pair(const CyclicWord& w) {
  if (w.size() < 2) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.at(i) == inverse(w.at(i + 1))) return true;
  return false;
}

CyclicWord steps_1_2(CyclicWord w) {
  for (;;) {
    while (reduce_one_pair(w)) {}
    if (!replace_one_long_cycle(w)) break;
  }
  return w;
}

// Half cycle at position i with replacement v1..v4: productive exactly when
// v4 followed by the next three letters is again a half cycle.
bool productive_half_cycle(const CyclicWord& w, std::size_t i, RelatorCycle& out) {
  if (w.size() < 4) return false;
  RelatorCycle cyc = cycle_at(w, i);
  if (cyc.length != 4) return false;
  auto repl = cycle_complement(cyc);
  std::vector<Letter> probe;
  probe.push_back(repl[3]);
  for (std::size_t t = 4; t < 7; ++t) probe.push_back(w.at(i + t));
  CyclicWord pw{probe};
  RelatorCycle pc = cycle_at(pw, 0);
  if (pc.length >= 4) {
    out = cyc;
    return true;
  }
  return false;
}

}  // namespace

CyclicWord free_reduce(CyclicWord w) {
  while (reduce_one_pair(w)) {}
  return w;
}

CyclicWord replace_long_cycles(CyclicWord w) { return steps_1_2(std::move(w)); }

CyclicWord normalize_half_cycles(CyclicWord w) {
  // Leftmost-first from the canonical rotation.  A replacement can make the
  // following four letters a fresh half cycle; the scan then continues with
  // that one before anything else, which is what guarantees termination.
  std::size_t guard = 0;
  const std::size_t guard_cap = 1000 + 256 * (w.size() + 8);
  for (;;) {
    w = steps_1_2(std::move(w));
    CyclicWord c = w.canonical();
    bool replaced = false;
    for (std::size_t i = 0; i < c.size() && !replaced; ++i) {
      RelatorCycle cyc;
      if (!productive_half_cycle(c, i, cyc)) continue;
      replaced = true;
      // Cascade: splice() rebuilds the cyclic word with the replacement at
      // the front, so the induced half cycle sits at index 3.
      c = splice(c, i, 4, cycle_complement(cyc));
      while (!has_adjacent_pair(c) && !has_long_cycle(c) &&
             productive_half_cycle(c, 3, cyc)) {
        if (++guard > guard_cap)
          throw std::logic_error("normalize_half_cycles: cascade did not halt");
        c = splice(c, 3, 4, cycle_complement(cyc));
      }
      w = c;
    }
    if (!replaced) return w;
    if (++guard > guard_cap)
      throw std::logic_error("normalize_half_cycles: no fixed point reached");
  }
}

CyclicWord reduce_full(CyclicWord w) { return normalize_half_cycles(std::move(w)).canonical(); }

bool has_long_chain(const CyclicWord& w) {
  const std::size_t n = w.size();
  if (n < 4) return false;
  // A long chain starts with a half cycle, continues through cycles of
  // length three linked by the carried last letter of each replacement,
  // and ends when the linked half cycle extends by one more letter of its
  // own rotation.  Scanning is cyclic; a chain that wraps the whole word
  // twice without terminating cannot close up, so the scan is capped.
  for (std::size_t i = 0; i < n; ++i) {
    RelatorCycle first = cycle_at(w, i);
    if (first.length != 4) continue;
    Letter carry = cycle_complement(first)[3];
    std::size_t j = i + 4;
    std::size_t consumed = 4;
    while (consumed <= 2 * n + 8) {
      std::vector<Letter> probe{carry, w.at(j), w.at(j + 1), w.at(j + 2)};
      CyclicWord pw{probe};
      RelatorCycle link = cycle_at(pw, 0);
      if (link.length < 4) break;
      // Linked half cycle found; the chain terminates here when the word
      // continues that same rotation one letter further.
      auto r = rotation_letters(link.rotation_first, link.inverse_relator);
      if (w.at(j + 3) == r[4]) return true;
      carry = cycle_complement(link)[3];
      j += 3;
      consumed += 3;
    }
  }
  return false;
}

bool is_geodesic(const CyclicWord& w) {
  if (w.empty()) return true;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.at(i) == inverse(w.at(i + 1)) && w.size() > 1) return false;
  if (w.size() == 1) return true;
  if (has_long_cycle(w)) return false;
  return !has_long_chain(w);
}

}  // namespace snakestat
