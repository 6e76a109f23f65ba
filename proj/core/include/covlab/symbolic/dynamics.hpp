#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "covlab/symbolic/point.hpp"
#include "covlab/symbolic/shift_system.hpp"

namespace covlab {

Point shift(const ShiftSystem& sys, const Point& x);

/// T^{-1}(x): the points a.x with a -> x_0 admissible, ordered by a.
std::vector<Point> preimages(const ShiftSystem& sys, const Point& x);

/// T^k(x).
Point iterate(const ShiftSystem& sys, const Point& x, std::size_t k);

/// (T^k)^{-1}(x), sorted. k = 0 gives {x}.
std::vector<Point> preimages_depth(const ShiftSystem& sys, const Point& x, std::size_t k);

/// The least n, m <= bound (ordered by n + m, then n) with T^n x = T^m y.
std::optional<std::pair<std::size_t, std::size_t>> trajectory_equivalent(
    const ShiftSystem& sys, const Point& x, const Point& y, std::size_t bound);

/// Lexicographically least point of [w].
Point least_point(const ShiftSystem& sys, const Cylinder& w);

/// True when every point reachable from `a` has a unique successor, i.e.
/// the cylinder [a] is a single point.
bool is_deterministic(const ShiftSystem& sys, Symbol a);

/// The unique point of [a] for a deterministic symbol.
Point forced_point(const ShiftSystem& sys, Symbol a);

/// Whether [w] lies inside {x : T^k x = T^l x}. Throws InputError when k == l.
bool equalizer_cylinder_test(const ShiftSystem& sys, std::size_t k, std::size_t l,
                             const Cylinder& w);

struct FreenessCertificate {
  std::size_t k;
  std::size_t l;
  Cylinder cylinder;
};

struct FreenessVerdict {
  bool free = true;
  /// Present exactly when `free` is false; k > l always.
  std::optional<FreenessCertificate> certificate;
};

/// Decides topological freeness with the out-degree-one cycle criterion.
/// A non-free verdict carries the certificate with least k + l, then least
/// k, then lexicographically least word of length k.
FreenessVerdict is_topologically_free(const ShiftSystem& sys);

struct InvariantUnion {
  /// A proper nonempty union of depth-m cylinders with T^{-1}(Y) = Y.
  std::optional<std::vector<Cylinder>> cylinders;
  /// Set when the depth-m word count exceeded the search cap.
  bool truncated = false;
};

/// Searches for a closed-and-open invariant set built from depth-m
/// cylinders. Throws InputError when m == 0.
InvariantUnion find_invariant_cylinder_union(const ShiftSystem& sys, int m,
                                             std::size_t max_words = std::size_t{1} << 16);

/// T^{-1}(Y) == Y for Y given by a set of depth-m words, compared at depth m+1.
bool is_invariant_union(const ShiftSystem& sys, int m, const std::vector<Word>& words);

}  // namespace covlab
