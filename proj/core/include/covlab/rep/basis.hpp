#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "covlab/symbolic/point.hpp"
#include "covlab/symbolic/shift_system.hpp"

namespace covlab {

/// psi acts on l2(X) with basis e_x; psi-tilde on l2(X x Z) with e_(x,n).
enum class RepresentationMode { Psi, PsiTilde };

const char* to_string(RepresentationMode mode);

/// A finite, forward-closed set of eventually periodic points (crossed with
/// the layers n in [-W, W] in psi-tilde mode) spanning a truncation of the
/// representation space.
///
/// Point validity r means every (T^j)^{-1}(x) with j <= r lies inside the
/// basis, so S^j e_x is represented exactly for j <= r.
class BasisSpec {
 public:
  static constexpr int kValidityCap = 64;

  /// Throws InputError unless `points` is closed under T, duplicate-free and admissible.
  BasisSpec(ShiftSystem sys, std::vector<Point> points, RepresentationMode mode, long window);

  const ShiftSystem& system() const { return sys_; }
  RepresentationMode mode() const { return mode_; }
  long window() const { return window_; }
  std::size_t layer_count() const { return mode_ == RepresentationMode::Psi ? 1 : 2 * window_ + 1; }

  /// Number of basis vectors.
  std::size_t size() const { return points_.size() * layer_count(); }
  std::size_t point_count() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t p) const { return points_[p]; }
  std::optional<std::size_t> find_point(const Point& x) const;

  /// Basis index of e_x (psi) or e_(x,n) (psi-tilde; n in [-W, W]).
  std::size_t index(std::size_t point, long n = 0) const;
  std::optional<std::size_t> find(const Point& x, long n = 0) const;
  std::size_t point_of(std::size_t idx) const { return idx / layer_count(); }
  long layer_of(std::size_t idx) const;
  bool in_window(long n) const { return mode_ == RepresentationMode::Psi ? n == 0 : -window_ <= n && n <= window_; }

  std::size_t image(std::size_t p) const { return image_[p]; }
  std::size_t image_power(std::size_t p, std::size_t k) const;
  bool preimages_complete(std::size_t p) const { return complete_[p]; }
  std::span<const std::size_t> preimages(std::size_t p) const { return preimages_[p]; }
  /// Point indices of (T^k)^{-1}(x). Requires point_validity(p) >= k.
  std::vector<std::size_t> preimages_depth(std::size_t p, std::size_t k) const;

  int point_validity(std::size_t p) const { return point_validity_[p]; }
  /// Largest r with S^r e_idx represented exactly (window included).
  int validity(std::size_t idx) const;

 private:
  ShiftSystem sys_;
  RepresentationMode mode_;
  long window_;
  std::vector<Point> points_;
  std::map<Point, std::size_t> lookup_;
  std::vector<std::size_t> image_;
  std::vector<std::vector<std::size_t>> preimages_;
  std::vector<bool> complete_;
  std::vector<int> point_validity_;
};

using BasisPtr = std::shared_ptr<const BasisSpec>;

struct OrbitBasisConfig {
  std::size_t preimage_depth = 3;  // N
  std::size_t forward_depth = 0;   // F
  long window = 3;                 // W, psi-tilde only
  RepresentationMode mode = RepresentationMode::Psi;
  std::size_t max_points = 100000;
};

/// T^j(seed) for j <= F with their preimage trees to depth N, plus the rest
/// of the forward orbit of the seed so that the set is closed under T.
/// Throws ResourceError past `max_points`.
BasisPtr build_orbit_basis(const ShiftSystem& sys, const Point& seed, const OrbitBasisConfig& config);

/// Forward closure of arbitrary seed points together with their preimage trees to depth N.
BasisPtr build_basis_from_seeds(const ShiftSystem& sys, const std::vector<Point>& seeds,
                                const OrbitBasisConfig& config);

}  // namespace covlab
