#include "permgrid/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permgrid {

Dfa::Dfa(std::string alphabet, int num_states, int initial)
    : alphabet_(std::move(alphabet)), initial_(initial) {
  accepting_.assign(num_states, 0);
  trans_.assign(num_states, std::vector<int>(alphabet_.size(), -1));
  names_.resize(num_states);
  for (int s = 0; s < num_states; ++s) names_[s] = "s" + std::to_string(s);
}

int Dfa::letter_index(char letter) const {
  auto pos = alphabet_.find(letter);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

int Dfa::next(int s, char letter) const {
  int li = letter_index(letter);
  if (li < 0) return -1;
  return trans_[s][li];
}

void Dfa::add_transition(int from, char letter, int to) {
  int li = letter_index(letter);
  if (li < 0) throw std::invalid_argument("dfa: letter not in alphabet");
  if (trans_[from][li] != -1 && trans_[from][li] != to)
    throw std::invalid_argument("dfa: conflicting transition");
  trans_[from][li] = to;
}

int Dfa::add_state(bool accepting) {
  accepting_.push_back(accepting ? 1 : 0);
  trans_.emplace_back(alphabet_.size(), -1);
  names_.push_back("s" + std::to_string(num_states() - 1));
  return num_states() - 1;
}

void Dfa::set_state_name(int s, std::string name) { names_[s] = std::move(name); }

std::optional<int> Dfa::state_by_name(const std::string& name) const {
  for (int s = 0; s < num_states(); ++s)
    if (names_[s] == name) return s;
  return std::nullopt;
}

bool Dfa::accepts(const std::string& word) const {
  int s = initial_;
  for (char c : word) {
    int li = letter_index(c);
    if (li < 0) return false;
    s = trans_[s][li];
    if (s < 0) return false;
  }
  return is_accepting(s);
}

std::vector<Int> Dfa::count_words(int n_max) const {
  const int m = num_states();
  std::vector<Int> cur(m, Int(0)), nxt(m);
  cur[initial_] = 1;
  std::vector<Int> out;
  auto total = [&] {
    Int t(0);
    for (int s = 0; s < m; ++s)
      if (accepting_[s]) t += cur[s];
    return t;
  };
  out.push_back(total());
  for (int n = 1; n <= n_max; ++n) {
    std::fill(nxt.begin(), nxt.end(), Int(0));
    for (int s = 0; s < m; ++s) {
      if (cur[s] == 0) continue;
      for (int t : trans_[s])
        if (t >= 0) nxt[t] += cur[s];
    }
    cur.swap(nxt);
    out.push_back(total());
  }
  return out;
}

Dfa Dfa::normalized() const {
  const int m = num_states();
  // Reachable from initial.
  std::vector<int> order;
  std::vector<uint8_t> seen(m, 0);
  order.push_back(initial_);
  seen[initial_] = 1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int t : trans_[order[i]])
      if (t >= 0 && !seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
  // Co-reachable (some accepting state ahead).
  std::vector<std::vector<int>> rev(m);
  for (int s = 0; s < m; ++s)
    for (int t : trans_[s])
      if (t >= 0) rev[t].push_back(s);
  std::vector<uint8_t> live(m, 0);
  std::deque<int> work;
  for (int s = 0; s < m; ++s)
    if (accepting_[s]) {
      live[s] = 1;
      work.push_back(s);
    }
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    for (int p : rev[s])
      if (!live[p]) {
        live[p] = 1;
        work.push_back(p);
      }
  }
  // Keep reachable && live states, in BFS order; always keep the initial
  // state so the result has a well-defined start even for the empty language.
  std::vector<int> renum(m, -1);
  int k = 0;
  for (int s : order)
    if (live[s] || s == initial_) renum[s] = k++;
  Dfa out(alphabet_, k, renum[initial_]);
  for (int s = 0; s < m; ++s) {
    if (renum[s] < 0) continue;
    out.accepting_[renum[s]] = accepting_[s];
    out.names_[renum[s]] = names_[s];
    for (size_t li = 0; li < alphabet_.size(); ++li) {
      int t = trans_[s][li];
      if (t >= 0 && renum[t] >= 0) out.trans_[renum[s]][li] = renum[t];
    }
  }
  return out;
}

Dfa Dfa::minimized() const {
  Dfa d = normalized();
  const int m = d.num_states();
  if (m == 0) return d;
  // Moore partition refinement; missing transitions act as a unique dead
  // class (-1), which is sound because normalized() removed real dead states.
  std::vector<int> cls(m);
  for (int s = 0; s < m; ++s) cls[s] = d.accepting_[s] ? 1 : 0;
  while (true) {
    std::map<std::vector<int>, int> sig_to_class;
    std::vector<int> next_cls(m);
    for (int s = 0; s < m; ++s) {
      std::vector<int> sig;
      sig.push_back(cls[s]);
      for (size_t li = 0; li < d.alphabet_.size(); ++li) {
        int t = d.trans_[s][li];
        sig.push_back(t < 0 ? -1 : cls[t]);
      }
      auto [it, inserted] =
          sig_to_class.emplace(std::move(sig), static_cast<int>(sig_to_class.size()));
      next_cls[s] = it->second;
    }
    bool stable = true;
    for (int s = 0; s < m && stable; ++s)
      for (int t = s + 1; t < m && stable; ++t)
        if ((cls[s] == cls[t]) != (next_cls[s] == next_cls[t])) stable = false;
    cls = std::move(next_cls);
    if (stable) break;
  }
  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa out(d.alphabet_, k, cls[d.initial_]);
  for (int s = 0; s < m; ++s) {
    out.accepting_[cls[s]] = d.accepting_[s];
    for (size_t li = 0; li < d.alphabet_.size(); ++li) {
      int t = d.trans_[s][li];
      if (t >= 0) out.trans_[cls[s]][li] = cls[t];
    }
  }
  return out.normalized();
}

bool Dfa::is_empty() const {
  Dfa d = normalized();
  for (int s = 0; s < d.num_states(); ++s)
    if (d.accepting_[s]) return false;
  return true;
}

Dfa Dfa::complemented() const {
  Dfa out = *this;
  int dead = -1;
  for (int s = 0; s < out.num_states(); ++s)
    for (size_t li = 0; li < alphabet_.size(); ++li)
      if (out.trans_[s][li] < 0) {
        if (dead < 0) {
          dead = out.add_state(false);
          for (size_t lj = 0; lj < alphabet_.size(); ++lj)
            out.trans_[dead][lj] = dead;
        }
        out.trans_[s][li] = dead;
      }
  for (int s = 0; s < out.num_states(); ++s)
    out.accepting_[s] = out.accepting_[s] ? 0 : 1;
  return out;
}

namespace {

// Subset construction over an NFA given by start set and a move function.
Dfa determinize(const std::string& alphabet,
                const std::vector<int>& start,
                const std::function<void(const std::vector<int>&, int,
                                         std::vector<int>&)>& move,
                const std::function<bool(const std::vector<int>&)>& accepting) {
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> sets;
  auto intern = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto [it, ins] = ids.emplace(s, static_cast<int>(sets.size()));
    if (ins) sets.push_back(it->first);
    return it->second;
  };
  int s0 = intern(start);
  Dfa out(alphabet, 1, 0);
  out.set_accepting(0, accepting(sets[0]));
  for (size_t cur = 0; cur < sets.size(); ++cur) {
    for (size_t li = 0; li < alphabet.size(); ++li) {
      std::vector<int> tgt;
      move(sets[cur], static_cast<int>(li), tgt);
      if (tgt.empty()) continue;
      int id = intern(std::move(tgt));
      while (out.num_states() <= id) out.add_state(false);
      out.set_accepting(id, accepting(sets[id]));
      out.add_transition(static_cast<int>(cur), alphabet[li], id);
    }
  }
  return out;
}

}  // namespace

Dfa Dfa::reversed() const {
  Dfa d = normalized();
  const int m = d.num_states();
  // NFA: edges reversed, starts = accepting set, accepting = {initial}.
  std::vector<std::vector<std::vector<int>>> rev(
      m, std::vector<std::vector<int>>(alphabet_.size()));
  for (int s = 0; s < m; ++s)
    for (size_t li = 0; li < alphabet_.size(); ++li)
      if (d.trans_[s][li] >= 0) rev[d.trans_[s][li]][li].push_back(s);
  std::vector<int> start;
  for (int s = 0; s < m; ++s)
    if (d.accepting_[s]) start.push_back(s);
  if (start.empty()) {
    Dfa empty(alphabet_, 1, 0);
    return empty;
  }
  auto move = [&](const std::vector<int>& set, int li, std::vector<int>& out) {
    for (int s : set)
      for (int t : rev[s][li]) out.push_back(t);
  };
  auto acc = [&](const std::vector<int>& set) {
    return std::binary_search(set.begin(), set.end(), d.initial_);
  };
  return determinize(alphabet_, start, move, acc).minimized();
}

Dfa Dfa::renamed_letters(const std::string& new_alphabet) const {
  if (new_alphabet.size() != alphabet_.size())
    throw std::invalid_argument("dfa: alphabet size mismatch in rename");
  Dfa out = *this;
  out.alphabet_ = new_alphabet;
  return out;
}

Dfa Dfa::product(const Dfa& a, const Dfa& b, ProductMode mode) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("dfa: product needs a common alphabet");
  // For union/difference, missing transitions on one side must not clip the
  // other side's language; complete both first.
  const bool need_complete = mode != ProductMode::intersection;
  Dfa ca = need_complete ? a.complemented().complemented() : a;
  Dfa cb = need_complete ? b.complemented().complemented() : b;
  auto accept_pair = [&](bool x, bool y) {
    switch (mode) {
      case ProductMode::intersection: return x && y;
      case ProductMode::unification: return x || y;
      case ProductMode::difference: return x && !y;
    }
    return false;
  };
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](int x, int y) {
    auto [it, ins] = ids.emplace(std::make_pair(x, y),
                                 static_cast<int>(pairs.size()));
    if (ins) pairs.emplace_back(x, y);
    return it->second;
  };
  intern(ca.initial(), cb.initial());
  Dfa out(a.alphabet(), 1, 0);
  out.set_accepting(0, accept_pair(ca.is_accepting(ca.initial()),
                                   cb.is_accepting(cb.initial())));
  for (size_t cur = 0; cur < pairs.size(); ++cur) {
    auto [x, y] = pairs[cur];
    for (size_t li = 0; li < a.alphabet().size(); ++li) {
      char letter = a.alphabet()[li];
      int tx = ca.next(x, letter), ty = cb.next(y, letter);
      if (tx < 0 || ty < 0) continue;  // only in intersection mode
      int id = intern(tx, ty);
      while (out.num_states() <= id) out.add_state(false);
      out.set_accepting(id, accept_pair(ca.is_accepting(tx), cb.is_accepting(ty)));
      out.add_transition(static_cast<int>(cur), letter, id);
    }
  }
  return out.minimized();
}

Dfa Dfa::subword_containment(const std::string& w, const std::string& alphabet) {
  if (w.empty())
    throw std::invalid_argument("subword_containment: empty word");
  const int k = static_cast<int>(w.size());
  Dfa out(alphabet, k + 1, 0);
  for (int s = 0; s <= k; ++s)
    for (char c : alphabet) {
      if (s < k && c == w[s])
        out.add_transition(s, c, s + 1);
      else
        out.add_transition(s, c, s);
    }
  out.set_accepting(k, true);
  return out;
}

Dfa Dfa::subword_containment_any(std::span<const std::string> ws,
                                 const std::string& alphabet) {
  if (ws.empty()) {
    Dfa empty(alphabet, 1, 0);
    return empty;
  }
  // NFA states: (word index, matched length); accepted once any word
  // completes, which we encode with a single absorbing id -2 mapped below.
  std::vector<std::pair<int, int>> nfa_states;
  std::map<std::pair<int, int>, int> idx;
  for (int w = 0; w < static_cast<int>(ws.size()); ++w)
    for (int k = 0; k <= static_cast<int>(ws[w].size()); ++k) {
      idx[{w, k}] = static_cast<int>(nfa_states.size());
      nfa_states.emplace_back(w, k);
    }
  auto is_done = [&](int s) {
    auto [w, k] = nfa_states[s];
    return k == static_cast<int>(ws[w].size());
  };
  std::vector<int> start;
  for (int w = 0; w < static_cast<int>(ws.size()); ++w)
    start.push_back(idx[{w, 0}]);
  auto move = [&](const std::vector<int>& set, int li, std::vector<int>& out) {
    char c = alphabet[li];
    bool done = false;
    for (int s : set)
      if (is_done(s)) done = true;
    for (int s : set) {
      auto [w, k] = nfa_states[s];
      if (k < static_cast<int>(ws[w].size()) && ws[w][k] == c)
        out.push_back(idx[{w, k + 1}]);
      out.push_back(s);  // subsequence matching may always wait
    }
    (void)done;
  };
  auto acc = [&](const std::vector<int>& set) {
    for (int s : set)
      if (is_done(s)) return true;
    return false;
  };
  return determinize(alphabet, start, move, acc).minimized();
}

Dfa Dfa::factor_containment(const std::string& w, const std::string& alphabet) {
  if (w.empty()) throw std::invalid_argument("factor_containment: empty word");
  const int k = static_cast<int>(w.size());
  // KMP-style automaton.
  Dfa out(alphabet, k + 1, 0);
  std::vector<int> fail(k + 1, 0);
  for (int s = 1; s < k; ++s) {
    int f = fail[s];
    while (f > 0 && w[s] != w[f]) f = fail[f];
    fail[s + 1] = (w[s] == w[f]) ? f + 1 : 0;
  }
  for (int s = 0; s <= k; ++s)
    for (char c : alphabet) {
      if (s == k) {
        out.add_transition(s, c, k);
        continue;
      }
      int f = s;
      while (f > 0 && w[f] != c) f = fail[f];
      out.add_transition(s, c, (w[f] == c) ? f + 1 : 0);
    }
  out.set_accepting(k, true);
  return out;
}

Dfa Dfa::all_words(const std::string& alphabet) {
  Dfa out(alphabet, 1, 0);
  for (char c : alphabet) out.add_transition(0, c, 0);
  out.set_accepting(0, true);
  return out;
}

RationalFunction Dfa::gf() const {
  Dfa d = minimized();
  const int m = d.num_states();
  if (m == 0 || d.is_empty()) return RationalFunction::zero();
  // Transition count matrix.
  std::vector<std::vector<Int>> T(m, std::vector<Int>(m, Int(0)));
  for (int s = 0; s < m; ++s)
    for (int t : d.trans_[s])
      if (t >= 0) T[s][t] += 1;
  // Characteristic polynomial by Faddeev-LeVerrier: chi(y) = y^m - c1 y^(m-1)
  // - ... - cm, intermediate divisions are exact over the integers.
  std::vector<Int> c(m + 1, Int(0));
  std::vector<std::vector<Int>> M(m, std::vector<Int>(m, Int(0)));
  auto mat_mul = [&](const std::vector<std::vector<Int>>& A,
                     const std::vector<std::vector<Int>>& B) {
    std::vector<std::vector<Int>> R(m, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        if (A[i][k] == 0) continue;
        for (int j = 0; j < m; ++j)
          if (B[k][j] != 0) R[i][j] += A[i][k] * B[k][j];
      }
    return R;
  };
  M = T;
  for (int k = 1; k <= m; ++k) {
    Int tr(0);
    for (int i = 0; i < m; ++i) tr += M[i][i];
    c[k] = tr / k;
    if (k == m) break;
    for (int i = 0; i < m; ++i) M[i][i] -= c[k];
    M = mat_mul(T, M);
  }
  // det(I - xT) = 1 - c1 x - c2 x^2 - ... - cm x^m.
  std::vector<Int> den_coeffs(m + 1, Int(0));
  den_coeffs[0] = 1;
  for (int k = 1; k <= m; ++k) den_coeffs[k] = -c[k];
  Polynomial D{std::vector<Int>(den_coeffs)};
  const int margin = 2 * m + 6;
  std::vector<Int> counts = d.count_words(margin);
  // N = D * series, which must truncate exactly at degree m.
  std::vector<Int> N(margin + 1, Int(0));
  for (int i = 0; i <= margin; ++i)
    for (int j = 0; j <= std::min(i, D.degree()); ++j)
      N[i] += D.coeff(j) * counts[i - j];
  for (int i = m + 1; i <= margin; ++i)
    if (N[i] != 0)
      throw std::logic_error("dfa::gf: series disagrees with det(I - xT)");
  N.resize(m + 1);
  RationalFunction f(Polynomial(std::move(N)), D);
  // Belt and braces: the reduced form must reproduce the counts.
  std::vector<Int> check = f.series(margin);
  for (int i = 0; i <= margin; ++i)
    if (check[i] != counts[i])
      throw std::logic_error("dfa::gf: reduced form disagrees with counts");
  return f;
}

Dfa Dfa::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string alphabet;
  std::string initial_name;
  std::vector<std::string> accepting_names;
  struct Edge {
    std::string from, label, to;
  };
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "alphabet:") {
      std::string tok;
      while (ls >> tok) alphabet += tok;
    } else if (first == "initial:") {
      ls >> initial_name;
    } else if (first == "accepting:") {
      std::string tok;
      while (ls >> tok) accepting_names.push_back(tok);
    } else {
      Edge e;
      e.from = first;
      if (!(ls >> e.label >> e.to))
        throw std::invalid_argument("dfa: malformed transition line: " + line);
      edges.push_back(std::move(e));
    }
  }
  if (alphabet.empty() || initial_name.empty())
    throw std::invalid_argument("dfa: missing alphabet or initial state");
  Dfa out(alphabet, 0, 0);
  auto state_id = [&](const std::string& name) {
    if (auto s = out.state_by_name(name)) return *s;
    int s = out.add_state(false);
    out.set_state_name(s, name);
    return s;
  };
  int init = state_id(initial_name);
  out.initial_ = init;
  for (const auto& e : edges) {
    int from = state_id(e.from);
    int to = state_id(e.to);
    // Chain labels walk existing transitions where present so that
    // alternatives sharing a prefix merge.
    int cur = from;
    for (size_t i = 0; i + 1 < e.label.size(); ++i) {
      int li = out.letter_index(e.label[i]);
      if (li < 0) throw std::invalid_argument("dfa: unknown letter in label");
      int nxt = out.trans_[cur][li];
      if (nxt < 0) {
        nxt = out.add_state(false);
        out.set_state_name(nxt, e.from + ":" + e.label.substr(0, i + 1));
        out.trans_[cur][li] = nxt;
      }
      cur = nxt;
    }
    out.add_transition(cur, e.label.back(), to);
  }
  for (const auto& name : accepting_names) {
    auto s = out.state_by_name(name);
    if (!s) throw std::invalid_argument("dfa: unknown accepting state " + name);
    out.set_accepting(*s, true);
  }
  return out;
}

std::string Dfa::to_text() const {
  std::ostringstream out;
  out << "alphabet:";
  for (char c : alphabet_) out << ' ' << c;
  out << '\n';
  out << "initial: " << names_[initial_] << '\n';
  out << "accepting:";
  for (int s = 0; s < num_states(); ++s)
    if (accepting_[s]) out << ' ' << names_[s];
  out << '\n';
  for (int s = 0; s < num_states(); ++s)
    for (size_t li = 0; li < alphabet_.size(); ++li)
      if (trans_[s][li] >= 0)
        out << names_[s] << ' ' << alphabet_[li] << ' ' << names_[trans_[s][li]]
            << '\n';
  return out.str();
}

}  // namespace permgrid
