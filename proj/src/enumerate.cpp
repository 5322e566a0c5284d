#include "permgrid/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace permgrid {

ClassSpec ClassSpec::from_basis(std::vector<Permutation> basis) {
  ClassSpec s;
  s.basis_ = std::move(basis);
  s.has_basis_ = true;
  std::string name = "Av(";
  for (size_t i = 0; i < s.basis_.size(); ++i) {
    if (i) name += ",";
    name += s.basis_[i].compact_string();
  }
  name += ")";
  s.name_ = name;
  s.pred_ = [b = s.basis_](const Permutation& p) {
    return avoids_all(p, b);
  };
  return s;
}

ClassSpec ClassSpec::from_predicate(
    std::function<bool(const Permutation&)> pred, std::string name) {
  ClassSpec s;
  s.pred_ = std::move(pred);
  s.name_ = std::move(name);
  return s;
}

std::vector<Permutation> generate(const ClassSpec& spec, int n,
                                  bool check_closure) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  std::vector<Permutation> cur;
  {
    Permutation one = Permutation::identity(1);
    if (spec.member(one)) cur.push_back(one);
  }
  for (int len = 2; len <= n; ++len) {
    std::vector<Permutation> next;
    std::unordered_set<Permutation> prev_set;
    if (check_closure) prev_set.insert(cur.begin(), cur.end());
    for (const auto& p : cur) {
      for (int pos = 0; pos <= p.size(); ++pos) {
        Permutation q = p.insert_max(pos);
        if (!spec.member(q)) continue;
        if (check_closure) {
          for (int d = 0; d < q.size(); ++d) {
            if (!prev_set.count(q.delete_at(d)))
              throw std::runtime_error(
                  "generate: membership predicate for " + spec.name() +
                  " is not downward closed at " + q.to_string());
          }
        }
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
  }
  return cur;
}

std::vector<Int> count_series(const ClassSpec& spec, int n_max) {
  std::vector<Int> out;
  std::vector<Permutation> cur;
  {
    Permutation one = Permutation::identity(1);
    if (spec.member(one)) cur.push_back(one);
  }
  out.push_back(Int(cur.size()));
  for (int len = 2; len <= n_max; ++len) {
    std::vector<Permutation> next;
    for (const auto& p : cur)
      for (int pos = 0; pos <= p.size(); ++pos) {
        Permutation q = p.insert_max(pos);
        if (spec.member(q)) next.push_back(std::move(q));
      }
    out.push_back(Int(next.size()));
    cur = std::move(next);
  }
  return out;
}

std::vector<Int> count_filtered(const ClassSpec& spec, int n_max,
                                CountFilter filter) {
  auto passes = [&](const Permutation& p) {
    switch (filter) {
      case CountFilter::simple:
        return is_simple(p);
      case CountFilter::sum_indecomposable:
        return classify_decomposability(p) != Decomposability::sum_decomposable;
      case CountFilter::skew_indecomposable:
        return classify_decomposability(p) !=
               Decomposability::skew_decomposable;
      case CountFilter::strong_indecomposable:
        return classify_decomposability(p) ==
               Decomposability::strong_indecomposable;
    }
    return false;
  };
  std::vector<Int> out;
  std::vector<Permutation> cur;
  {
    Permutation one = Permutation::identity(1);
    if (spec.member(one)) cur.push_back(one);
  }
  out.push_back(Int(cur.size() == 1 && passes(cur[0]) ? 1 : 0));
  for (int len = 2; len <= n_max; ++len) {
    std::vector<Permutation> next;
    Int count(0);
    for (const auto& p : cur)
      for (int pos = 0; pos <= p.size(); ++pos) {
        Permutation q = p.insert_max(pos);
        if (!spec.member(q)) continue;
        if (passes(q)) ++count;
        next.push_back(std::move(q));
      }
    out.push_back(count);
    cur = std::move(next);
  }
  return out;
}

std::vector<Permutation> compute_basis(
    const std::function<bool(const Permutation&)>& membership, int len_max) {
  std::vector<Permutation> basis;
  std::unordered_set<Permutation> members_prev;
  for (int n = 1; n <= len_max; ++n) {
    std::unordered_set<Permutation> members_cur;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
      Permutation p{std::vector<int>(v)};
      if (membership(p)) {
        members_cur.insert(std::move(p));
        continue;
      }
      bool minimal = true;
      for (int d = 0; d < n && minimal; ++d)
        minimal = n == 1 || members_prev.count(p.delete_at(d)) > 0;
      if (minimal) basis.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    members_prev = std::move(members_cur);
  }
  std::sort(basis.begin(), basis.end(),
            [](const Permutation& a, const Permutation& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return basis;
}

}  // namespace permgrid
