#include "permgrid/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permgrid {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  std::vector<int> sorted = vals_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("permutation values must be 1..n");
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::optional<Permutation> Permutation::parse(const std::string& text) {
  std::vector<int> vals;
  bool has_space = text.find_first_of(" \t") != std::string::npos;
  if (has_space) {
    std::istringstream in(text);
    int v;
    while (in >> v) vals.push_back(v);
    if (!in.eof()) return std::nullopt;
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        return std::nullopt;
      vals.push_back(c - '0');
    }
    if (vals.size() > 9) return std::nullopt;
  }
  try {
    return Permutation(std::move(vals));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Permutation Permutation::pattern_of(std::span<const int> values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (size_t rank = 0; rank < idx.size(); ++rank)
    out[idx[rank]] = static_cast<int>(rank) + 1;
  Permutation p;
  p.vals_ = std::move(out);
  return p;
}

Permutation Permutation::delete_at(int pos) const {
  std::vector<int> rest;
  rest.reserve(vals_.size() - 1);
  for (int i = 0; i < size(); ++i)
    if (i != pos) rest.push_back(vals_[i]);
  return pattern_of(rest);
}

Permutation Permutation::insert_max(int pos) const {
  std::vector<int> v = vals_;
  v.insert(v.begin() + pos, size() + 1);
  Permutation p;
  p.vals_ = std::move(v);
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ' ';
    out << vals_[i];
  }
  return out.str();
}

std::string Permutation::compact_string() const {
  if (size() > 9) return to_string();
  std::string s;
  for (int v : vals_) s.push_back(static_cast<char>('0' + v));
  return s;
}

namespace {

bool contains_rec(const std::vector<int>& hay, const std::vector<int>& pat,
                  std::vector<int>& chosen, size_t j, size_t from) {
  if (j == pat.size()) return true;
  for (size_t i = from; i + (pat.size() - j) <= hay.size(); ++i) {
    bool ok = true;
    for (size_t t = 0; t < j && ok; ++t)
      ok = (pat[t] < pat[j]) == (hay[chosen[t]] < hay[i]);
    if (!ok) continue;
    chosen[j] = static_cast<int>(i);
    if (contains_rec(hay, pat, chosen, j + 1, i + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains(const Permutation& haystack, const Permutation& needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  std::vector<int> chosen(needle.size());
  return contains_rec(haystack.values(), needle.values(), chosen, 0, 0);
}

bool avoids_all(const Permutation& p, std::span<const Permutation> basis) {
  for (const auto& b : basis)
    if (contains(p, b)) return false;
  return true;
}

bool is_simple(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return false;
  if (n <= 2) return true;
  for (int i = 0; i < n; ++i) {
    int lo = p.value_at(i), hi = lo;
    for (int j = i + 1; j < n; ++j) {
      lo = std::min(lo, p.value_at(j));
      hi = std::max(hi, p.value_at(j));
      int len = j - i + 1;
      if (len == n) break;
      if (hi - lo + 1 == len) return false;
    }
  }
  return true;
}

std::vector<Permutation> sum_components(const Permutation& p) {
  std::vector<Permutation> out;
  int start = 0, hi = 0;
  for (int i = 0; i < p.size(); ++i) {
    hi = std::max(hi, p.value_at(i));
    if (hi == i + 1) {
      std::vector<int> seg(p.values().begin() + start,
                           p.values().begin() + i + 1);
      out.push_back(Permutation::pattern_of(seg));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Permutation> skew_components(const Permutation& p) {
  const int n = p.size();
  std::vector<Permutation> out;
  int start = 0, lo = n + 1;
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, p.value_at(i));
    if (lo == n - i) {
      std::vector<int> seg(p.values().begin() + start,
                           p.values().begin() + i + 1);
      out.push_back(Permutation::pattern_of(seg));
      start = i + 1;
    }
  }
  return out;
}

Decomposability classify_decomposability(const Permutation& p) {
  if (p.size() >= 2) {
    if (sum_components(p).size() >= 2) return Decomposability::sum_decomposable;
    if (skew_components(p).size() >= 2)
      return Decomposability::skew_decomposable;
  }
  return Decomposability::strong_indecomposable;
}

Permutation inflate(const Permutation& skeleton,
                    std::span<const Permutation> blocks) {
  if (static_cast<int>(blocks.size()) != skeleton.size())
    throw std::invalid_argument("inflate: block count must match skeleton");
  for (const auto& b : blocks)
    if (b.empty()) throw std::invalid_argument("inflate: empty block");
  // Offsets: block i occupies the value band determined by skeleton rank.
  const int k = skeleton.size();
  std::vector<int> offset(k, 0);
  for (int rank = 1, acc = 0; rank <= k; ++rank) {
    for (int i = 0; i < k; ++i) {
      if (skeleton.value_at(i) == rank) {
        offset[i] = acc;
        acc += blocks[i].size();
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < k; ++i)
    for (int v : blocks[i].values()) out.push_back(v + offset[i]);
  return Permutation(std::move(out));
}

namespace {

// Greedy maximal proper interval starting at position i (0-based); returns
// the inclusive end position.  Used only when p is strong-indecomposable,
// where the maximal proper intervals partition the positions.
int maximal_interval_end(const Permutation& p, int i) {
  const int n = p.size();
  int best = i;
  int lo = p.value_at(i), hi = lo;
  for (int j = i + 1; j < n; ++j) {
    lo = std::min(lo, p.value_at(j));
    hi = std::max(hi, p.value_at(j));
    if (j - i + 1 == n) break;
    if (hi - lo + 1 == j - i + 1) best = j;
  }
  return best;
}

}  // namespace

SubstitutionDecomposition decompose(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("decompose: empty permutation");
  if (p.size() == 1) return {Permutation::identity(1), {p}};

  auto from_components = [&](std::vector<Permutation> comps, int two_first) {
    // Left-greedy: blocks are [first component, rest glued back together].
    std::vector<int> rest;
    int shift = 0;
    for (size_t c = 1; c < comps.size(); ++c) {
      for (int v : comps[c].values()) rest.push_back(v + shift);
      shift += comps[c].size();
    }
    SubstitutionDecomposition d;
    d.skeleton = two_first == 1 ? Permutation({1, 2}) : Permutation({2, 1});
    d.blocks = {comps[0], Permutation::pattern_of(rest)};
    return d;
  };

  if (auto comps = sum_components(p); comps.size() >= 2)
    return from_components(std::move(comps), 1);
  if (auto comps = skew_components(p); comps.size() >= 2)
    return from_components(std::move(comps), 2);

  SubstitutionDecomposition d;
  std::vector<int> reps;
  int i = 0;
  while (i < p.size()) {
    int j = maximal_interval_end(p, i);
    std::vector<int> seg(p.values().begin() + i, p.values().begin() + j + 1);
    d.blocks.push_back(Permutation::pattern_of(seg));
    reps.push_back(p.value_at(i));
    i = j + 1;
  }
  d.skeleton = Permutation::pattern_of(reps);
  if (!(inflate(d.skeleton, d.blocks) == p))
    throw std::logic_error("decompose: reconstruction failed");
  return d;
}

Permutation apply(SymmetryOp op, const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n);
  switch (op) {
    case SymmetryOp::reverse:
      for (int i = 0; i < n; ++i) v[i] = p.value_at(n - 1 - i);
      break;
    case SymmetryOp::complement:
      for (int i = 0; i < n; ++i) v[i] = n + 1 - p.value_at(i);
      break;
    case SymmetryOp::inverse:
      for (int i = 0; i < n; ++i) v[p.value_at(i) - 1] = i + 1;
      break;
  }
  return Permutation(std::move(v));
}

Permutation apply_all(std::span<const SymmetryOp> ops, const Permutation& p) {
  Permutation q = p;
  for (auto op : ops) q = apply(op, q);
  return q;
}

Permutation reverse_inverse_reverse(const Permutation& p) {
  const SymmetryOp ops[] = {SymmetryOp::reverse, SymmetryOp::inverse,
                            SymmetryOp::reverse};
  return apply_all(ops, p);
}

}  // namespace permgrid
