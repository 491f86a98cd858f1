#include "snakestat/states.hpp"

#include <algorithm>
#include <stdexcept>

namespace snakestat {

CaseClass projection_pi(CaseTag t) {
  switch (t) {
    case CaseTag::A: return CaseClass::A;
    case CaseTag::ApL: case CaseTag::ApR: return CaseClass::Ap;
    case CaseTag::AppL: case CaseTag::AppR: return CaseClass::App;
    case CaseTag::B: return CaseClass::B;
    case CaseTag::C: return CaseClass::C;
    case CaseTag::Cp: return CaseClass::Cp;
    case CaseTag::D: return CaseClass::D;
    case CaseTag::EL: case CaseTag::ER: return CaseClass::E;
  }
  throw std::logic_error("bad case tag");
}

const char* case_class_name(CaseClass c) {
  switch (c) {
    case CaseClass::A: return "A";
    case CaseClass::Ap: return "A'";
    case CaseClass::App: return "A''";
    case CaseClass::B: return "B";
    case CaseClass::C: return "C";
    case CaseClass::Cp: return "C'";
    case CaseClass::D: return "D";
    case CaseClass::E: return "E";
  }
  return "?";
}

bool SnakeState::operator<(const SnakeState& o) const {
  if (tag != o.tag) return tag < o.tag;
  int n = label_count();
  for (int i = 0; i < n; ++i)
    if (labels[i] != o.labels[i]) return idx(labels[i]) < idx(o.labels[i]);
  return false;
}

namespace {

const char* tag_prefix(CaseTag t) {
  switch (t) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    case CaseTag::Cp: return "Cp";
    case CaseTag::D: return "D";
    case CaseTag::EL: return "EL";
    case CaseTag::ER: return "ER";
    case CaseTag::ApL: return "ApL";
    case CaseTag::ApR: return "ApR";
    case CaseTag::AppL: return "AppL";
    case CaseTag::AppR: return "AppR";
  }
  return "?";
}

}  // namespace

std::string SnakeState::token() const {
  std::string s = tag_prefix(tag);
  s.push_back(':');
  for (int i = 0; i < label_count(); ++i) s.push_back(to_char(labels[i]));
  return s;
}

std::optional<SnakeState> SnakeState::from_token(const std::string& tok) {
  auto colon = tok.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string head = tok.substr(0, colon);
  std::string tail = tok.substr(colon + 1);
  static const std::pair<const char*, CaseTag> tags[] = {
      {"A", CaseTag::A},       {"B", CaseTag::B},     {"C", CaseTag::C},
      {"Cp", CaseTag::Cp},     {"D", CaseTag::D},     {"EL", CaseTag::EL},
      {"ER", CaseTag::ER},     {"ApL", CaseTag::ApL}, {"ApR", CaseTag::ApR},
      {"AppL", CaseTag::AppL}, {"AppR", CaseTag::AppR}};
  for (auto& [name, tag] : tags) {
    if (head != name) continue;
    SnakeState s{tag, {Letter::a, Letter::a, Letter::a}};
    if (static_cast<int>(tail.size()) != s.label_count()) return std::nullopt;
    for (int i = 0; i < s.label_count(); ++i) {
      auto l = letter_from_char(tail[i]);
      if (!l) return std::nullopt;
      s.labels[i] = *l;
    }
    return s;
  }
  return std::nullopt;
}

StateAlphabet::StateAlphabet() {
  // Label tuples realizable on the tiling, read off the relator rotations:
  // the octagon entered at its base corner has counterclockwise boundary
  // rho[0..7], the right branch follows rho forward and the left branch
  // runs backward along the other side.
  auto add = [&](CaseTag t, std::initializer_list<Letter> ls) {
    SnakeState s{t, {Letter::a, Letter::a, Letter::a}};
    int i = 0;
    for (Letter l : ls) s.labels[i++] = l;
    states_.push_back(s);
  };

  std::vector<SnakeState> group;
  auto flush = [&](std::vector<SnakeState>& g) {
    std::sort(g.begin(), g.end());
    for (auto& s : g) states_.push_back(s);
    g.clear();
  };

  for (int i = 0; i < 8; ++i) add(CaseTag::A, {letter_from_idx(i)});

  auto pair_states = [&](CaseTag t, int left_pos, int right_pos) {
    for (int f = 0; f < 8; ++f) {
      auto rho = relator_rotation(letter_from_idx(f));
      group.push_back(SnakeState{
          t, {inverse(rho[left_pos]), rho[right_pos], Letter::a}});
    }
    flush(group);
  };
  pair_states(CaseTag::B, 7, 0);
  pair_states(CaseTag::C, 6, 1);
  pair_states(CaseTag::Cp, 5, 2);
  pair_states(CaseTag::D, 4, 3);

  for (int f = 0; f < 8; ++f) {
    auto rho = relator_rotation(letter_from_idx(f));
    Letter j = inverse(rho[4]);
    group.push_back(SnakeState{CaseTag::EL, {ccw_next(j), j, rho[3]}});
  }
  flush(group);
  for (int f = 0; f < 8; ++f) {
    auto rho = relator_rotation(letter_from_idx(f));
    Letter j = rho[3];
    group.push_back(SnakeState{CaseTag::ER, {inverse(rho[4]), j, ccw_prev(j)}});
  }
  flush(group);

  for (CaseTag t : {CaseTag::ApL, CaseTag::ApR, CaseTag::AppL, CaseTag::AppR})
    for (int i = 0; i < 8; ++i) add(t, {letter_from_idx(i)});

  if (states_.size() != 88) throw std::logic_error("alphabet size != 88");
}

const StateAlphabet& StateAlphabet::instance() {
  static StateAlphabet alpha;
  return alpha;
}

int StateAlphabet::index_of(const SnakeState& s) const {
  auto idx = find(s);
  if (!idx) throw std::logic_error("state not in alphabet: " + s.token());
  return *idx;
}

std::optional<int> StateAlphabet::find(const SnakeState& s) const {
  for (int i = 0; i < size(); ++i)
    if (states_[i] == s) return i;
  return std::nullopt;
}

std::vector<int> StateAlphabet::indices_with_tag(CaseTag t) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (states_[i].tag == t) out.push_back(i);
  return out;
}

int StateAlphabet::count_with_class(CaseClass c) const {
  int n = 0;
  for (int i = 0; i < size(); ++i)
    if (projection_pi(states_[i].tag) == c) ++n;
  return n;
}

}  // namespace snakestat
