#include "covlab/rep/basis.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "covlab/errors.hpp"
#include "covlab/symbolic/dynamics.hpp"

namespace covlab {

const char* to_string(RepresentationMode mode) {
  return mode == RepresentationMode::Psi ? "psi" : "psi_tilde";
}

BasisSpec::BasisSpec(ShiftSystem sys, std::vector<Point> points, RepresentationMode mode,
                     long window)
    : sys_(std::move(sys)), mode_(mode), window_(mode == RepresentationMode::Psi ? 0 : window),
      points_(std::move(points)) {
  if (window_ < 0) throw InputError("window must be nonnegative");
  if (points_.empty()) throw InputError("basis needs at least one point");
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw InputError("basis points must be distinct");
  }
  for (std::size_t p = 0; p < points_.size(); ++p) {
    require_admissible(sys_, points_[p]);
    lookup_.emplace(points_[p], p);
  }

  const std::size_t n = points_.size();
  image_.resize(n);
  preimages_.resize(n);
  complete_.assign(n, true);
  for (std::size_t p = 0; p < n; ++p) {
    const auto img = find_point(shift(sys_, points_[p]));
    if (!img) {
      throw InputError("basis is not closed under the shift: image of " + points_[p].to_string() +
                       " is missing");
    }
    image_[p] = *img;
    for (const Point& y : covlab::preimages(sys_, points_[p])) {
      if (const auto q = find_point(y)) {
        preimages_[p].push_back(*q);
      } else {
        complete_[p] = false;
      }
    }
    if (!complete_[p]) preimages_[p].clear();
  }

  // Greatest fixed point of v(x) = 1 + min_{y in T^{-1}x} v(y), with v = 0
  // where the fiber is incomplete.
  point_validity_.assign(n, kValidityCap);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      int v = 0;
      if (complete_[p]) {
        v = kValidityCap;
        for (std::size_t q : preimages_[p]) v = std::min(v, point_validity_[q] + 1);
      }
      if (v < point_validity_[p]) {
        point_validity_[p] = v;
        changed = true;
      }
    }
  }
}

std::optional<std::size_t> BasisSpec::find_point(const Point& x) const {
  const auto it = lookup_.find(x);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t BasisSpec::index(std::size_t point, long n) const {
  if (!in_window(n)) throw InputError("layer " + std::to_string(n) + " outside the window");
  if (mode_ == RepresentationMode::Psi) return point;
  return point * layer_count() + static_cast<std::size_t>(n + window_);
}

std::optional<std::size_t> BasisSpec::find(const Point& x, long n) const {
  const auto p = find_point(x);
  if (!p || !in_window(n)) return std::nullopt;
  return index(*p, n);
}

long BasisSpec::layer_of(std::size_t idx) const {
  if (mode_ == RepresentationMode::Psi) return 0;
  return static_cast<long>(idx % layer_count()) - window_;
}

std::size_t BasisSpec::image_power(std::size_t p, std::size_t k) const {
  for (std::size_t i = 0; i < k; ++i) p = image_[p];
  return p;
}

std::vector<std::size_t> BasisSpec::preimages_depth(std::size_t p, std::size_t k) const {
  if (static_cast<std::size_t>(point_validity_[p]) < k) {
    throw InputError("preimage tree of " + points_[p].to_string() + " is truncated above depth " +
                     std::to_string(point_validity_[p]));
  }
  std::vector<std::size_t> level{p};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> next;
    for (std::size_t q : level) next.insert(next.end(), preimages_[q].begin(), preimages_[q].end());
    level = std::move(next);
  }
  return level;
}

int BasisSpec::validity(std::size_t idx) const {
  const int v = point_validity_[point_of(idx)];
  if (mode_ == RepresentationMode::Psi) return v;
  return std::min<long>(v, window_ - layer_of(idx));
}

BasisPtr build_basis_from_seeds(const ShiftSystem& sys, const std::vector<Point>& seeds,
                                const OrbitBasisConfig& config) {
  std::set<Point> all;
  auto add = [&](const Point& x) {
    if (all.insert(x).second && all.size() > config.max_points) {
      throw ResourceError("basis exceeds the cap of " + std::to_string(config.max_points) + " points");
    }
  };
  for (const Point& seed : seeds) {
    require_admissible(sys, seed);
    // The full forward orbit keeps the basis closed under T.
    std::vector<Point> orbit;
    std::set<Point> seen;
    for (Point x = seed; seen.insert(x).second; x = shift(sys, x)) orbit.push_back(x);
    for (const Point& x : orbit) add(x);

    for (std::size_t j = 0; j <= config.forward_depth && j < orbit.size(); ++j) {
      std::vector<Point> level{orbit[j]};
      for (std::size_t depth = 0; depth < config.preimage_depth; ++depth) {
        std::vector<Point> next;
        for (const Point& x : level) {
          for (Point& y : preimages(sys, x)) {
            add(y);
            next.push_back(std::move(y));
          }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
      }
    }
  }
  return std::make_shared<const BasisSpec>(sys, std::vector<Point>(all.begin(), all.end()),
                                           config.mode, config.window);
}

BasisPtr build_orbit_basis(const ShiftSystem& sys, const Point& seed, const OrbitBasisConfig& config) {
  return build_basis_from_seeds(sys, {seed}, config);
}

}  // namespace covlab
