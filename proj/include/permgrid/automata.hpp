#ifndef PERMGRID_AUTOMATA_HPP
#define PERMGRID_AUTOMATA_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permgrid/ratfun.hpp"

namespace permgrid {

/// Deterministic finite automaton over a small alphabet of single-character
/// letters.  Transition maps are partial: a missing transition rejects (an
/// implicit dead state).  Words are std::strings.
class Dfa {
public:
  Dfa() = default;
  Dfa(std::string alphabet, int num_states, int initial);

  const std::string& alphabet() const { return alphabet_; }
  int num_states() const { return static_cast<int>(accepting_.size()); }
  int initial() const { return initial_; }
  bool is_accepting(int s) const { return accepting_[s] != 0; }
  void set_accepting(int s, bool acc) { accepting_[s] = acc ? 1 : 0; }
  /// -1 when undefined.
  int next(int s, char letter) const;
  void add_transition(int from, char letter, int to);
  int add_state(bool accepting = false);
  int letter_index(char letter) const;  // -1 if not in alphabet

  const std::vector<std::string>& state_names() const { return names_; }
  void set_state_name(int s, std::string name);
  std::optional<int> state_by_name(const std::string& name) const;

  bool accepts(const std::string& word) const;
  std::vector<Int> count_words(int n_max) const;
  /// Exact generating function of the accepted-word counting series;
  /// internally cross-checked against count_words out to 2*|states|+6.
  RationalFunction gf() const;

  /// Unreachable and dead states pruned, states renumbered in BFS order
  /// (letters scanned in alphabet order).  Idempotent.
  Dfa normalized() const;
  /// Language-preserving state minimization (Moore); runs normalized() first.
  Dfa minimized() const;
  bool is_empty() const;

  /// Completes the transition map with a dead state and flips acceptance.
  Dfa complemented() const;
  /// Mirror-image language (reads words right to left).
  Dfa reversed() const;
  Dfa renamed_letters(const std::string& new_alphabet) const;

  enum class ProductMode { intersection, unification, difference };
  static Dfa product(const Dfa& a, const Dfa& b, ProductMode mode);

  /// Words containing w as a (not necessarily contiguous) subsequence.
  static Dfa subword_containment(const std::string& w,
                                 const std::string& alphabet);
  /// Words containing some element of ws as a subsequence.
  static Dfa subword_containment_any(std::span<const std::string> ws,
                                     const std::string& alphabet);
  /// Words containing w as a factor (contiguous).
  static Dfa factor_containment(const std::string& w,
                                const std::string& alphabet);
  /// All words over the alphabet (one accepting state, full loops).
  static Dfa all_words(const std::string& alphabet);

  /// Text form used by the resource files and the CLI:
  ///   alphabet: a b c
  ///   initial: s0
  ///   accepting: s3 s4
  ///   s0 a s1
  /// A multi-letter label such as "s0 aba s1" is compiled to a chain of
  /// fresh states; chains sharing a prefix reuse the existing transitions.
  static Dfa from_text(const std::string& text);
  std::string to_text() const;

private:
  std::string alphabet_;
  int initial_ = 0;
  std::vector<uint8_t> accepting_;
  std::vector<std::vector<int>> trans_;  // trans_[state][letter_index]
  std::vector<std::string> names_;
};

}  // namespace permgrid

#endif
