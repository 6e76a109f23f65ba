#include "covlab/symbolic/dynamics.hpp"

#include <algorithm>
#include <set>

#include "covlab/errors.hpp"

namespace covlab {

Point shift(const ShiftSystem&, const Point& x) { return x.shifted(); }

std::vector<Point> preimages(const ShiftSystem& sys, const Point& x) {
  std::vector<Point> out;
  for (Symbol a : sys.predecessors(x.first())) out.push_back(x.prepended(a));
  return out;
}

Point iterate(const ShiftSystem& sys, const Point& x, std::size_t k) {
  Point y = x;
  for (std::size_t i = 0; i < k; ++i) y = shift(sys, y);
  return y;
}

std::vector<Point> preimages_depth(const ShiftSystem& sys, const Point& x, std::size_t k) {
  std::vector<Point> level{x};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Point> next;
    for (const Point& p : level) {
      for (Point& q : preimages(sys, p)) next.push_back(std::move(q));
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::optional<std::pair<std::size_t, std::size_t>> trajectory_equivalent(
    const ShiftSystem& sys, const Point& x, const Point& y, std::size_t bound) {
  std::vector<Point> xs{x};
  std::vector<Point> ys{y};
  for (std::size_t i = 0; i < bound; ++i) {
    xs.push_back(shift(sys, xs.back()));
    ys.push_back(shift(sys, ys.back()));
  }
  for (std::size_t total = 0; total <= 2 * bound; ++total) {
    const std::size_t n_lo = total > bound ? total - bound : 0;
    const std::size_t n_hi = std::min(total, bound);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      if (xs[n] == ys[total - n]) return std::make_pair(n, total - n);
    }
  }
  return std::nullopt;
}

namespace {

// Follows the greedy (least-successor) path from `start` until a symbol
// repeats, returning the visited symbols and the index where the cycle begins.
std::pair<Word, std::size_t> greedy_path(const ShiftSystem& sys, Symbol start) {
  Word path{start};
  std::vector<int> seen(static_cast<std::size_t>(sys.alphabet_size()), -1);
  seen[start] = 0;
  while (true) {
    const Symbol next = sys.successors(path.back()).front();
    if (seen[next] >= 0) return {path, static_cast<std::size_t>(seen[next])};
    seen[next] = static_cast<int>(path.size());
    path.push_back(next);
  }
}

// The point whose first |prefix| symbols are `prefix` followed by the greedy
// continuation of its last symbol.
Point greedy_extension(const ShiftSystem& sys, const Word& prefix) {
  auto [path, cycle_start] = greedy_path(sys, prefix.back());
  Word pre(prefix.begin(), prefix.end() - 1);
  pre.insert(pre.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(cycle_start));
  Word per(path.begin() + static_cast<std::ptrdiff_t>(cycle_start), path.end());
  return Point(std::move(pre), std::move(per));
}

}  // namespace

Point least_point(const ShiftSystem& sys, const Cylinder& w) {
  return greedy_extension(sys, w.word());
}

bool is_deterministic(const ShiftSystem& sys, Symbol a) {
  Symbol cur = a;
  std::vector<bool> seen(static_cast<std::size_t>(sys.alphabet_size()), false);
  while (!seen[cur]) {
    seen[cur] = true;
    const auto succ = sys.successors(cur);
    if (succ.size() != 1) return false;
    cur = succ.front();
  }
  return true;
}

Point forced_point(const ShiftSystem& sys, Symbol a) {
  if (!is_deterministic(sys, a)) {
    throw InputError("symbol " + std::to_string(a) + " has more than one continuation");
  }
  return greedy_extension(sys, Word{a});
}

bool equalizer_cylinder_test(const ShiftSystem& sys, std::size_t k, std::size_t l,
                             const Cylinder& w) {
  if (k == l) throw InputError("equalizer test needs k != l");
  const std::size_t hi = std::max(k, l);
  const std::size_t gap = hi - std::min(k, l);
  const std::size_t target = std::max(w.length(), hi + gap);

  // A branching point at position >= hi yields two points of [w] of which at
  // least one is not (k - l)-periodic from min(k, l) on. So every admissible
  // extension to `target` symbols must have a forced continuation, and the
  // resulting unique point must satisfy the equation.
  std::size_t visited = 0;
  constexpr std::size_t kMaxExtensions = std::size_t{1} << 22;
  Word u = w.word();
  auto all_pass = [&](auto&& self) -> bool {
    if (u.size() == target) {
      if (++visited > kMaxExtensions) throw ResourceError("equalizer test: too many extensions");
      if (!is_deterministic(sys, u.back())) return false;
      const Point x = greedy_extension(sys, u);
      return iterate(sys, x, k) == iterate(sys, x, l);
    }
    for (Symbol b : sys.successors(u.back())) {
      u.push_back(b);
      const bool ok = self(self);
      u.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return all_pass(all_pass);
}

namespace {

// Union-find over depth-m word indices, joined along every depth-(m+1) word
// (its prefix and its suffix must be in Y together).
std::vector<std::size_t> invariant_components(const ShiftSystem& sys, int m) {
  const WordTable& base = sys.words(m);
  const WordTable& fine = sys.words(m + 1);
  std::vector<std::size_t> parent(base.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const Word& u : fine.words()) {
    const std::size_t p = *base.index_of(u);
    const std::size_t s = *base.index_of(std::span<const Symbol>(u).subspan(1));
    const std::size_t rp = find(p);
    const std::size_t rs = find(s);
    if (rp != rs) parent[std::max(rp, rs)] = std::min(rp, rs);
  }
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = find(i);
  return parent;
}

}  // namespace

InvariantUnion find_invariant_cylinder_union(const ShiftSystem& sys, int m,
                                             std::size_t max_words) {
  if (m < 1) throw InputError("invariant search depth must be at least 1");
  InvariantUnion result;
  const WordTable& base = sys.words(m);
  if (base.size() > max_words) {
    result.truncated = true;
    return result;
  }
  const auto component = invariant_components(sys, m);
  // Every invariant union is a union of components; the component of the
  // first word is proper as soon as there are two.
  std::vector<Cylinder> cylinders;
  bool proper = false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (component[i] == component[0]) {
      cylinders.emplace_back(sys, base[i]);
    } else {
      proper = true;
    }
  }
  if (proper) result.cylinders = std::move(cylinders);
  return result;
}

bool is_invariant_union(const ShiftSystem& sys, int m, const std::vector<Word>& words) {
  const WordTable& base = sys.words(m);
  std::vector<bool> in_y(base.size(), false);
  for (const Word& w : words) {
    if (w.size() != static_cast<std::size_t>(m)) throw InputError("word length differs from depth");
    const auto idx = base.index_of(w);
    if (!idx) throw InputError("word " + format_word(w) + " is not admissible");
    in_y[*idx] = true;
  }
  for (const Word& u : sys.words(m + 1).words()) {
    const bool refined = in_y[*base.index_of(u)];
    const bool pulled_back = in_y[*base.index_of(std::span<const Symbol>(u).subspan(1))];
    if (refined != pulled_back) return false;
  }
  return true;
}

}  // namespace covlab
