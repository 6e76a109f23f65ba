#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covlab/crossed/element.hpp"
#include "covlab/rep/basis.hpp"

namespace covlab {

struct ProbeConfig {
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::size_t max_power = 3;
  int coefficient_depth = 3;
  /// Commutation "holds" at or below this value.
  double hold_tolerance = 1e-9;
  /// Commutation "fails" at or above this value.
  double fail_threshold = 1e-3;
};

struct ProbeTrial {
  std::size_t k = 0;
  std::size_t l = 0;
  LCF f;
  LCF g;
  double residual = 0.0;
  bool pass = false;
};

struct ProbeReport {
  ProbeConfig config;
  int commutant_depth = 0;
  std::size_t basis_size = 0;
  /// Draws rejected because f g = 0 or rep(b) vanished on the truncation.
  std::size_t rejected = 0;
  std::vector<ProbeTrial> trials;

  bool all_pass() const;
};

/// Random monomials f s^k (s*)^l g with k != l must fail to commute with
/// C(X) in a free system. Evidence, not proof.
///
/// Throws InputError when the system is not topologically free and
/// AmbiguousTruncationError when a residual lands between the thresholds.
ProbeReport maximal_abelian_probe(const ShiftSystem& sys, const ProbeConfig& config,
                                  const BasisPtr& basis, int commutant_depth);

/// The psi-tilde basis the probe uses by default: the orbit of the least
/// point of [0], deep enough for coefficients of the configured depth.
BasisPtr default_probe_basis(const ShiftSystem& sys, const ProbeConfig& config);
int default_commutant_depth(const ProbeConfig& config);

}  // namespace covlab
