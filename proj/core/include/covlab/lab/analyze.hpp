#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covlab/lab/probe.hpp"
#include "covlab/lab/witness.hpp"
#include "covlab/rep/residuals.hpp"
#include "covlab/symbolic/dynamics.hpp"

namespace covlab {

struct AnalyzeConfig {
  int function_depth = 3;
  std::size_t orbit_depth = 3;
  std::size_t forward_depth = 1;
  long window = 3;
  double tolerance = 1e-9;
  std::size_t probe_trials = 50;
  std::uint64_t seed = 0;
  double probe_threshold = 1e-3;
};

struct WitnessReport {
  Witness witness;
  std::size_t basis_size = 0;
  /// (m, commutant_residual) for m = 1 .. |w| + 2.
  std::vector<std::pair<int, double>> commutant;
  bool commutes = false;
  /// <psi~(b) e_(x0,0), e_(x0,k-l)> and its closed form f(x0)^2 (I_k(x0) I_l(x0))^{-1/2}.
  Complex entry;
  double entry_expected = 0.0;
  bool entry_matches = false;
  KernelWitness kernel;

  bool all_pass() const { return commutes && entry_matches && kernel.confirmed; }
};

struct TheoremReport {
  ShiftSystem system;
  AnalyzeConfig config;
  FreenessVerdict verdict;
  ResidualReport psi_residuals;
  ResidualReport psi_tilde_residuals;
  std::optional<WitnessReport> witness;
  std::optional<ProbeReport> probe;
};

/// Witness certificates for an explicit (k, l, w); the basis is the orbit of x0.
WitnessReport certify_witness(const ShiftSystem& sys, std::size_t k, std::size_t l, const Cylinder& w,
                              const AnalyzeConfig& config);

/// Freeness verdict, relation residuals in both representations, and either
/// the witness certificates (not free) or the maximal-abelian probe (free).
TheoremReport analyze(const ShiftSystem& sys, const AnalyzeConfig& config = {});

/// Residuals on the orbit basis of the least point of [0] with the configured N, F, W.
std::pair<ResidualReport, ResidualReport> analyze_residuals(const ShiftSystem& sys,
                                                            const AnalyzeConfig& config);

}  // namespace covlab
