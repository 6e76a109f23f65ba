#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covlab/crossed/element.hpp"
#include "covlab/rep/operator.hpp"
#include "covlab/symbolic/point.hpp"

namespace covlab {

/// b = f s^k (s*)^l f with f = 1_[w], for a cylinder inside the equalizer of (k, l).
struct Witness {
  std::size_t k = 0;
  std::size_t l = 0;
  Cylinder cylinder;
  LCF f;
  Element b;
  /// Lexicographically least point of [w].
  Point x0;
};

/// Throws WitnessPreconditionError when k == l, |w| < max(k, l) or [w] is
/// not inside {x : T^k x = T^l x}.
Witness build_witness(const ShiftSystem& sys, std::size_t k, std::size_t l, const Cylinder& w);

/// max over the depth-m cylinder indicators h of ||rep(b) M_h - M_h rep(b)||_F
/// on the valid domain.
double commutant_residual(const Element& b, int m, const BasisPtr& basis);

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Point from;
  long from_layer = 0;
  Point to;
  long to_layer = 0;
  Complex value;
};

/// An off-diagonal entry <rep(b) e_col, e_row> in a valid column with modulus
/// above `tol`. Layer-0 columns are searched first, then columns by
/// increasing |layer|, then rows in index order.
std::optional<MatrixEntry> not_in_CX_certificate(const Element& b, const BasisPtr& basis, double tol);

struct KernelWitness {
  /// c = f (I_k I_l)^{-1/2} f.
  Coefficient c;
  /// ||psi(b) - psi(c)||_F on the valid domain.
  double residual = 0.0;
  std::size_t valid_columns = 0;
  /// max over valid x of |<psi(b) e_x, e_x> - f(x) (I_k(x) I_l(x))^{-1/2} f(x)|.
  double diagonal_law = 0.0;
  std::optional<MatrixEntry> off_diagonal;
  bool confirmed = false;
};

/// Checks that psi(b) = psi(c) while b is not in C(X), so b - c is a nonzero
/// element of ker psi. `psi_basis` must be in psi mode and
/// `psi_tilde_basis` in psi-tilde mode.
KernelWitness psi_kernel_witness(const Witness& w, const BasisPtr& psi_basis,
                                 const BasisPtr& psi_tilde_basis, double tol);

}  // namespace covlab
