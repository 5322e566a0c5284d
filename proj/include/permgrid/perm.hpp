#ifndef PERMGRID_PERM_HPP
#define PERMGRID_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permgrid {

/// Permutation in one-line notation, values 1..n.  Length 0 is allowed as
/// the identity of concatenation-style operations only.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);  // throws unless a bijection

  static Permutation identity(int n);
  /// Accepts "2 1 4 3" or the compact digit form "2143" (length <= 9).
  static std::optional<Permutation> parse(const std::string& text);
  /// Pattern (rank sequence) of arbitrary distinct values.
  static Permutation pattern_of(std::span<const int> values);

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }
  int value_at(int pos) const { return vals_[pos]; }  // 0-based position
  const std::vector<int>& values() const { return vals_; }

  /// Pattern formed by deleting the point at 0-based position pos.
  Permutation delete_at(int pos) const;
  /// Insert a new maximum at 0-based position pos (0..n).
  Permutation insert_max(int pos) const;

  std::string to_string() const;          // "2 1 4 3"
  std::string compact_string() const;     // "2143" (only for n <= 9)

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> vals_;
};

bool contains(const Permutation& haystack, const Permutation& needle);
bool avoids_all(const Permutation& p, std::span<const Permutation> basis);

/// True iff every interval of p has size 1 or |p|.  Lengths 1 and 2 are
/// simple by convention.
bool is_simple(const Permutation& p);

enum class Decomposability {
  sum_decomposable,
  skew_decomposable,
  strong_indecomposable,
};
Decomposability classify_decomposability(const Permutation& p);

std::vector<Permutation> sum_components(const Permutation& p);
std::vector<Permutation> skew_components(const Permutation& p);

struct SubstitutionDecomposition {
  Permutation skeleton;
  std::vector<Permutation> blocks;
};

/// Substitution decomposition.  For |skeleton| > 2 the skeleton is simple
/// and the decomposition unique; length-2 skeletons are canonicalized
/// left-greedily (blocks = [first component, rest]).
SubstitutionDecomposition decompose(const Permutation& p);

/// skeleton[blocks]: throws when |blocks| != |skeleton| or a block is empty.
Permutation inflate(const Permutation& skeleton,
                    std::span<const Permutation> blocks);

enum class SymmetryOp { reverse, complement, inverse };

Permutation apply(SymmetryOp op, const Permutation& p);
/// Composition, applied left to right: apply_all({a,b}, p) = b(a(p)).
Permutation apply_all(std::span<const SymmetryOp> ops, const Permutation& p);
Permutation reverse_inverse_reverse(const Permutation& p);

}  // namespace permgrid

template <>
struct std::hash<permgrid::Permutation> {
  size_t operator()(const permgrid::Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.values()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

#endif
