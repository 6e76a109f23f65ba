#include "covlab/lab/analyze.hpp"

#include <algorithm>
#include <cmath>

#include "covlab/algebra/transfer.hpp"
#include "covlab/errors.hpp"
#include "covlab/rep/builders.hpp"

namespace covlab {

namespace {

ResidualConfig residual_config(const AnalyzeConfig& config) {
  ResidualConfig rc;
  rc.function_depth = config.function_depth;
  rc.tolerance = config.tolerance;
  return rc;
}

}  // namespace

std::pair<ResidualReport, ResidualReport> analyze_residuals(const ShiftSystem& sys,
                                                            const AnalyzeConfig& config) {
  OrbitBasisConfig oc;
  oc.preimage_depth = config.orbit_depth;
  oc.forward_depth = config.forward_depth;
  oc.window = config.window;
  const Point seed = least_point(sys, Cylinder(sys, Word{0}));
  oc.mode = RepresentationMode::Psi;
  const BasisPtr psi = build_orbit_basis(sys, seed, oc);
  oc.mode = RepresentationMode::PsiTilde;
  const BasisPtr psi_tilde = build_orbit_basis(sys, seed, oc);
  return {relation_residuals(psi, residual_config(config)),
          relation_residuals(psi_tilde, residual_config(config))};
}

WitnessReport certify_witness(const ShiftSystem& sys, std::size_t k, std::size_t l, const Cylinder& w,
                              const AnalyzeConfig& config) {
  Witness witness = build_witness(sys, k, l, w);

  OrbitBasisConfig oc;
  oc.preimage_depth = std::max({config.orbit_depth, k, l});
  oc.forward_depth = std::max(config.forward_depth, l);
  oc.window = std::max(config.window, static_cast<long>(std::max(k, l)) + 1);
  oc.mode = RepresentationMode::PsiTilde;
  const BasisPtr tilde = build_orbit_basis(sys, witness.x0, oc);
  oc.mode = RepresentationMode::Psi;
  const BasisPtr psi = build_orbit_basis(sys, witness.x0, oc);

  std::vector<std::pair<int, double>> commutant;
  bool commutes = true;
  for (int m = 1; m <= static_cast<int>(w.length()) + 2; ++m) {
    const double r = commutant_residual(witness.b, m, tilde);
    commutant.emplace_back(m, r);
    commutes = commutes && r <= config.tolerance;
  }

  const Operator rb = represent(witness.b, tilde);
  const std::size_t p = *tilde->find_point(witness.x0);
  const std::size_t col = tilde->index(p, 0);
  const std::size_t row = tilde->index(p, static_cast<long>(k) - static_cast<long>(l));
  const Complex entry = rb.entry(row, col);
  const double fx = witness.f.at(witness.x0).real().get_d();
  const double ik = cocycle_I(sys, k).at(witness.x0).real().get_d();
  const double il = cocycle_I(sys, l).at(witness.x0).real().get_d();
  const double expected = fx * fx / std::sqrt(ik * il);
  const bool matches = rb.valid(col) && std::abs(entry - expected) <= config.tolerance;

  KernelWitness kernel = psi_kernel_witness(witness, psi, tilde, config.tolerance);
  return WitnessReport{std::move(witness), tilde->size(), std::move(commutant), commutes,
                       entry,              expected,      matches,              std::move(kernel)};
}

TheoremReport analyze(const ShiftSystem& sys, const AnalyzeConfig& config) {
  auto [psi, tilde] = analyze_residuals(sys, config);
  TheoremReport report{sys, config, is_topologically_free(sys), std::move(psi), std::move(tilde),
                       std::nullopt, std::nullopt};
  if (const auto& cert = report.verdict.certificate) {
    report.witness = certify_witness(sys, cert->k, cert->l, cert->cylinder, config);
  } else {
    ProbeConfig pc;
    pc.trials = config.probe_trials;
    pc.seed = config.seed;
    pc.hold_tolerance = config.tolerance;
    pc.fail_threshold = config.probe_threshold;
    report.probe = maximal_abelian_probe(sys, pc, default_probe_basis(sys, pc), default_commutant_depth(pc));
  }
  return report;
}

}  // namespace covlab
