#include "covlab/lab/witness.hpp"

#include <algorithm>
#include <cmath>

#include "covlab/algebra/transfer.hpp"
#include "covlab/errors.hpp"
#include "covlab/rep/builders.hpp"
#include "covlab/symbolic/dynamics.hpp"

namespace covlab {

Witness build_witness(const ShiftSystem& sys, std::size_t k, std::size_t l, const Cylinder& w) {
  if (k == l) throw WitnessPreconditionError("witness needs k != l");
  if (w.length() < std::max(k, l)) {
    throw WitnessPreconditionError("cylinder shorter than max(k, l)");
  }
  if (!equalizer_cylinder_test(sys, k, l, w)) {
    throw WitnessPreconditionError("cylinder not inside equalizer");
  }
  LCF f = LCF::indicator(sys, w.word());
  Element b = Element::monomial(f, k, l, f);
  return Witness{k, l, w, f, std::move(b), least_point(sys, w)};
}

double commutant_residual(const Element& b, int m, const BasisPtr& basis) {
  if (m < 1) throw InputError("commutant depth must be at least 1");
  const ShiftSystem& sys = b.system();
  const Operator rb = represent(b, basis);
  double worst = 0.0;
  for (const Word& w : sys.words(m).words()) {
    const Operator mh = build_M(LCF::indicator(sys, w), basis);
    worst = std::max(worst, residual(rb * mh, mh * rb));
  }
  return worst;
}

std::optional<MatrixEntry> not_in_CX_certificate(const Element& b, const BasisPtr& basis, double tol) {
  const Operator rb = represent(b, basis);
  const BasisSpec& spec = *basis;
  std::vector<std::size_t> columns(spec.size());
  for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  std::stable_sort(columns.begin(), columns.end(), [&spec](std::size_t a, std::size_t c) {
    return std::labs(spec.layer_of(a)) < std::labs(spec.layer_of(c));
  });
  for (std::size_t col : columns) {
    if (!rb.valid(col)) continue;
    std::optional<MatrixEntry> best;
    for (SparseMatrix::InnerIterator it(rb.matrix(), static_cast<Eigen::Index>(col)); it; ++it) {
      const auto row = static_cast<std::size_t>(it.row());
      if (row == col || std::abs(it.value()) <= tol) continue;
      if (best && best->row < row) continue;
      best = MatrixEntry{row,
                         col,
                         spec.point(spec.point_of(col)),
                         spec.layer_of(col),
                         spec.point(spec.point_of(row)),
                         spec.layer_of(row),
                         it.value()};
    }
    if (best) return best;
  }
  return std::nullopt;
}

KernelWitness psi_kernel_witness(const Witness& w, const BasisPtr& psi_basis,
                                 const BasisPtr& psi_tilde_basis, double tol) {
  if (psi_basis->mode() != RepresentationMode::Psi || psi_tilde_basis->mode() != RepresentationMode::PsiTilde) {
    throw UnsupportedModeError("kernel witness needs a psi basis and a psi-tilde basis");
  }
  const ShiftSystem& sys = w.b.system();
  const LCF norm = cocycle_I(sys, w.k) * cocycle_I(sys, w.l);
  const Coefficient c(w.f * w.f, SqrtFunction(pointwise_inverse(norm)));

  const Operator rb = represent(w.b, psi_basis);
  const Operator rc = represent(Element::function(c), psi_basis);
  const Operator diff = rb - rc;

  double diagonal = 0.0;
  for (std::size_t idx = 0; idx < psi_basis->size(); ++idx) {
    if (!rb.valid(idx)) continue;
    const Point& x = psi_basis->point(psi_basis->point_of(idx));
    const Complex fx = w.f.at(x).to_complex();
    const double expected_scale = 1.0 / std::sqrt(norm.at(x).real().get_d());
    diagonal = std::max(diagonal, std::abs(rb.entry(idx, idx) - fx * expected_scale * fx));
  }

  KernelWitness out{c, diff.frobenius_on_valid(), diff.valid_count(), diagonal,
                    not_in_CX_certificate(w.b, psi_tilde_basis, tol), false};
  out.confirmed = out.valid_columns > 0 && out.residual <= tol && out.diagonal_law <= tol &&
                  out.off_diagonal.has_value();
  return out;
}

}  // namespace covlab
