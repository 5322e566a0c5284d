#ifndef PERMGRID_ENUMERATE_HPP
#define PERMGRID_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "permgrid/perm.hpp"
#include "permgrid/ratfun.hpp"

namespace permgrid {

/// A pattern class given either by a finite basis or by an arbitrary
/// downward-closed membership predicate.
class ClassSpec {
public:
  static ClassSpec from_basis(std::vector<Permutation> basis);
  static ClassSpec from_predicate(std::function<bool(const Permutation&)> pred,
                                  std::string name);

  bool member(const Permutation& p) const { return pred_(p); }
  const std::vector<Permutation>* basis() const {
    return has_basis_ ? &basis_ : nullptr;
  }
  const std::string& name() const { return name_; }

private:
  std::function<bool(const Permutation&)> pred_;
  std::vector<Permutation> basis_;
  bool has_basis_ = false;
  std::string name_;
};

/// All members of length n, lexicographically sorted.  Built by inserting a
/// new maximum into the length n-1 members at every position and filtering,
/// which is sound because pattern classes are closed under deleting the
/// maximum.  With check_closure, every member's one-point deletions are
/// verified to be members (diagnostic for ill-formed predicates).
std::vector<Permutation> generate(const ClassSpec& spec, int n,
                                  bool check_closure = false);

std::vector<Int> count_series(const ClassSpec& spec, int n_max);

enum class CountFilter {
  simple,
  sum_indecomposable,
  skew_indecomposable,
  strong_indecomposable,
};

std::vector<Int> count_filtered(const ClassSpec& spec, int n_max,
                                CountFilter filter);

/// Minimal non-members of length <= len_max: non-members all of whose
/// one-point deletions are members.
std::vector<Permutation> compute_basis(
    const std::function<bool(const Permutation&)>& membership, int len_max);

}  // namespace permgrid

#endif
