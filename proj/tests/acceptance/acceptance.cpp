// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "covlab/algebra/transfer.hpp"
#include "covlab/errors.hpp"
#include "covlab/io/json.hpp"
#include "covlab/lab/analyze.hpp"
#include "covlab/rep/builders.hpp"
#include "covlab/symbolic/dynamics.hpp"
#include "covlab/rep/residuals.hpp"
#include "oracles.hpp"

using namespace covlab;

namespace {

constexpr double kTol = 1e-9;
constexpr double kProbeThreshold = 1e-3;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

std::vector<std::pair<std::string, ShiftSystem>> test_systems() {
  return {{"full_shift(2)", ShiftSystem::full_shift(2)},
          {"full_shift(3)", ShiftSystem::full_shift(3)},
          {"trap", covlab::testing::trap()}};
}

BasisPtr orbit_basis(const ShiftSystem& sys, std::size_t n, std::size_t f, long w, RepresentationMode mode) {
  OrbitBasisConfig c;
  c.preimage_depth = n;
  c.forward_depth = f;
  c.window = w;
  c.mode = mode;
  return build_orbit_basis(sys, least_point(sys, Cylinder(sys, Word{0})), c);
}

Outcome relation_suite() {
  double worst = 0.0;
  bool ok = true;
  std::size_t entries = 0;
  for (const auto& [name, sys] : test_systems()) {
    for (auto mode : {RepresentationMode::Psi, RepresentationMode::PsiTilde}) {
      ResidualConfig rc;
      rc.multi_index_lengths = {1, 2};
      rc.tolerance = kTol;
      const auto report = relation_residuals(orbit_basis(sys, 3, 1, 3, mode), rc);
      for (const auto& e : report.entries) {
        worst = std::max(worst, e.value);
        ok = ok && e.pass && !e.vacuous;
        ++entries;
      }
    }
  }
  return {ok, std::to_string(entries) + " residuals, max " + fmt(worst) + " (tol " + fmt(kTol) + ")"};
}

Outcome transfer_identity() {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  for (const auto& [name, sys] : test_systems()) {
    std::vector<LCF> ind;
    for (int m = 1; m <= 3; ++m) {
      for (const Word& w : sys.words(m).words()) ind.push_back(LCF::indicator(sys, w));
    }
    for (const LCF& f : ind) {
      for (const LCF& g : ind) {
        ++pairs;
        if (!(transfer_L(alpha(f) * g) == f * transfer_L(g))) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(pairs) + " indicator pairs, " + std::to_string(failures) + " inexact"};
}

Outcome expectation_law() {
  double worst = 0.0;
  std::size_t checked = 0;
  std::size_t average_failures = 0;
  covlab::testing::Generator gen(3);
  const auto systems = test_systems();
  for (int i = 0; i < 50; ++i) {
    const ShiftSystem& sys = systems[static_cast<std::size_t>(i) % systems.size()].second;
    const auto basis = orbit_basis(sys, sys.alphabet_size() == 3 ? 5 : 6, 3, 4, RepresentationMode::PsiTilde);
    const Element b = gen.element(sys, 3, 3, 3, true);
    const Operator r = represent(b, basis);
    const Coefficient g = conditional_expectation(b);
    for (std::size_t idx = 0; idx < basis->size(); ++idx) {
      if (!r.valid(idx)) continue;
      worst = std::max(worst, std::abs(r.entry(idx, idx) - g.at(basis->point(basis->point_of(idx)))));
      ++checked;
    }
    if (!identical(gauge_average(b, 7), fourier_component(b, 0))) ++average_failures;
  }
  return {worst <= kTol && checked > 0 && average_failures == 0,
          "50 elements, " + std::to_string(checked) + " diagonal entries, max " + fmt(worst) +
              "; gauge_average(N=7) mismatches " + std::to_string(average_failures)};
}

Outcome freeness_vs_oracle() {
  auto systems = covlab::testing::two_symbol_systems();
  const std::size_t two_symbol = systems.size();
  for (auto& sys : covlab::testing::three_symbol_systems(512, 0)) systems.push_back(std::move(sys));
  std::size_t disagreements = 0;
  std::size_t non_free = 0;
  for (const auto& sys : systems) {
    const auto verdict = is_topologically_free(sys);
    const auto hit = covlab::testing::brute_equalizer(sys, 4, 8);
    if (verdict.free != !hit.has_value()) ++disagreements;
    if (!verdict.free) {
      ++non_free;
      const auto& c = *verdict.certificate;
      if (!hit || hit->k != c.k || hit->l != c.l ||
          !covlab::testing::brute_cylinder_in_equalizer(sys, c.k, c.l, c.cylinder.word())) {
        ++disagreements;
      }
    }
  }
  return {disagreements == 0, std::to_string(two_symbol) + " 2-symbol and " +
                                  std::to_string(systems.size() - two_symbol) + " 3-symbol systems (" +
                                  std::to_string(non_free) + " not free), " + std::to_string(disagreements) +
                                  " disagreements"};
}

Outcome trap_witness() {
  const ShiftSystem t = covlab::testing::trap();
  const Cylinder w(t, Word{0});
  const Witness wit = build_witness(t, 1, 0, w);
  OrbitBasisConfig c;
  c.preimage_depth = 4;
  c.forward_depth = 1;
  c.window = 3;
  c.mode = RepresentationMode::PsiTilde;
  const auto tilde = build_orbit_basis(t, wit.x0, c);
  c.mode = RepresentationMode::Psi;
  const auto psi = build_orbit_basis(t, wit.x0, c);

  double commutant = 0.0;
  for (int m = 1; m <= 3; ++m) commutant = std::max(commutant, commutant_residual(wit.b, m, tilde));

  const Operator rb = represent(wit.b, tilde);
  const std::size_t p = *tilde->find_point(wit.x0);
  const Complex entry = rb.entry(tilde->index(p, 1), tilde->index(p, 0));
  const double formula = 1.0 / std::sqrt(cocycle_I(t, 1).at(wit.x0).real().get_d() *
                                         cocycle_I(t, 0).at(wit.x0).real().get_d());
  const double entry_err = std::max(std::abs(entry - 1 / std::sqrt(2.0)), std::abs(entry - formula));

  const LCF f = LCF::indicator(t, Word{0});
  const Coefficient cfun(f, SqrtFunction(LCF::constant(t, QComplex(Rational(1, 2)))));
  const Operator diff = represent(wit.b, psi) - represent(Element::function(cfun), psi);
  const double kernel = diff.frobenius_on_valid();

  const bool ok = commutant <= kTol && rb.valid(tilde->index(p, 0)) && entry_err <= kTol && kernel <= kTol &&
                  diff.valid_count() > 0 && std::abs(entry) > kTol;
  return {ok, "commutant(m<=3) " + fmt(commutant) + ", entry " + fmt(entry.real()) + " (err " + fmt(entry_err) +
                  "), ||psi(b)-psi(c)|| " + fmt(kernel)};
}

Outcome free_probe() {
  const ShiftSystem fs = ShiftSystem::full_shift(2);
  ProbeConfig pc;
  pc.trials = 50;
  pc.seed = 42;
  pc.hold_tolerance = kTol;
  pc.fail_threshold = kProbeThreshold;
  try {
    const auto report = maximal_abelian_probe(fs, pc, default_probe_basis(fs, pc), default_commutant_depth(pc));
    double least = INFINITY;
    for (const auto& t : report.trials) least = std::min(least, t.residual);
    return {report.all_pass() && report.trials.size() == 50,
            "50 monomials, min commutant residual " + fmt(least) + " (threshold " + fmt(kProbeThreshold) + ")"};
  } catch (const AmbiguousTruncationError& e) {
    return {false, e.what()};
  }
}

Outcome gauge_covariance() {
  const ShiftSystem fs = ShiftSystem::full_shift(2);
  const auto basis = orbit_basis(fs, 6, 3, 5, RepresentationMode::PsiTilde);
  covlab::testing::Generator gen(7);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Element e = gen.element(fs, 3, 3, 3, true);
    const Operator r = represent(e, basis);
    for (int j = 0; j < 8; ++j) {
      const Complex z = std::polar(1.0, M_PI * j / 4);
      const Operator lhs = build_U(basis, z) * r * build_U(basis, std::conj(z));
      worst = std::max(worst, residual(lhs, represent(gauge_rotate(e, z), basis)));
    }
  }
  return {worst <= kTol, "20 elements x 8 roots, max " + fmt(worst)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const char* tool, const char* spec, const std::string& work) {
  AnalyzeConfig config;
  config.seed = 42;
  const ShiftSystem fs = ShiftSystem::full_shift(2);
  const std::string a = io::dump(io::to_json(analyze(fs, config)));
  const std::string b = io::dump(io::to_json(analyze(fs, config)));
  bool ok = a == b;
  std::string detail = "in-process reports " + std::string(ok ? "identical" : "differ");
  if (tool != nullptr && spec != nullptr) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const std::string out = work + "/acceptance_run" + std::to_string(run) + ".json";
      const std::string cmd = std::string("\"") + tool + "\" analyze \"" + spec + "\" --seed 42 --output \"" + out + "\"";
      ok = ok && std::system(cmd.c_str()) == 0;
      outputs[run] = slurp(out);
    }
    const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
    ok = ok && same;
    detail += ", CLI reports " + std::string(same ? "byte-identical" : "differ");
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const char* tool = argc > 2 ? argv[1] : nullptr;
  const char* spec = argc > 2 ? argv[2] : nullptr;
  const std::string work = argc > 3 ? argv[3] : ".";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 relation suite", relation_suite},
      {"2 transfer-operator identity", transfer_identity},
      {"3 conditional-expectation law", expectation_law},
      {"4 freeness decision vs oracle", freeness_vs_oracle},
      {"5 non-free witness (trap)", trap_witness},
      {"6 free-system probe", free_probe},
      {"7 gauge covariance", gauge_covariance},
      {"8 determinism", [&] { return determinism(tool, spec, work); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
