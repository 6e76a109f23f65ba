#include "covlab/lab/probe.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "covlab/errors.hpp"
#include "covlab/lab/witness.hpp"
#include "covlab/rep/builders.hpp"
#include "covlab/symbolic/dynamics.hpp"

namespace covlab {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  // A sparse rational combination of cylinder indicators at a random depth.
  LCF coefficient(const ShiftSystem& sys, int max_depth) {
    const int depth = 1 + static_cast<int>(below(static_cast<std::uint64_t>(max_depth)));
    return LCF::tabulate(sys, depth, [this](const Word&) {
      if (below(2) == 0) return QComplex(0);
      const long num = static_cast<long>(below(8)) - 4;
      const long den = static_cast<long>(below(4)) + 1;
      return QComplex(Rational(num == 0 ? 1 : num, den));
    });
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

bool ProbeReport::all_pass() const {
  return std::all_of(trials.begin(), trials.end(), [](const ProbeTrial& t) { return t.pass; });
}

BasisPtr default_probe_basis(const ShiftSystem& sys, const ProbeConfig& config) {
  OrbitBasisConfig oc;
  oc.preimage_depth = static_cast<std::size_t>(config.coefficient_depth) + 1 + config.max_power;
  oc.forward_depth = config.max_power;
  oc.window = static_cast<long>(config.max_power) + 2;
  oc.mode = RepresentationMode::PsiTilde;
  return build_orbit_basis(sys, least_point(sys, Cylinder(sys, Word{0})), oc);
}

int default_commutant_depth(const ProbeConfig& config) { return config.coefficient_depth + 1; }

ProbeReport maximal_abelian_probe(const ShiftSystem& sys, const ProbeConfig& config,
                                  const BasisPtr& basis, int commutant_depth) {
  if (config.max_power < 1) throw InputError("probe needs max_power >= 1");
  if (config.hold_tolerance >= config.fail_threshold) {
    throw InputError("probe hold tolerance must lie below the fail threshold");
  }
  if (!is_topologically_free(sys).free) {
    throw InputError("maximal-abelian probe needs a topologically free system");
  }
  ProbeReport report;
  report.config = config;
  report.commutant_depth = commutant_depth;
  report.basis_size = basis->size();

  Draw draw(config.seed);
  const std::size_t max_rejections = 1000 * (config.trials + 1);
  while (report.trials.size() < config.trials) {
    std::size_t k = draw.below(config.max_power + 1);
    std::size_t l = draw.below(config.max_power);
    if (l >= k) ++l;
    LCF f = draw.coefficient(sys, config.coefficient_depth);
    LCF g = draw.coefficient(sys, config.coefficient_depth);
    const Element b = Element::monomial(f, k, l, g);
    if ((f * g).is_zero() || represent(b, basis).frobenius_on_valid() == 0.0) {
      if (++report.rejected > max_rejections) {
        throw ResourceError("probe rejected too many draws; the basis misses the coefficient supports");
      }
      continue;
    }
    const double r = commutant_residual(b, commutant_depth, basis);
    if (r > config.hold_tolerance && r < config.fail_threshold) {
      std::ostringstream msg;
      msg << "probe trial " << report.trials.size() << " (k=" << k << ", l=" << l
          << ") has commutant residual " << r << " inside the ambiguous gap; enlarge the basis";
      throw AmbiguousTruncationError(msg.str());
    }
    report.trials.push_back(ProbeTrial{k, l, std::move(f), std::move(g), r, r >= config.fail_threshold});
  }
  return report;
}

}  // namespace covlab
