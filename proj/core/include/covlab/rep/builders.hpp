#pragma once

#include <cstddef>

#include "covlab/algebra/coefficient.hpp"
#include "covlab/crossed/element.hpp"
#include "covlab/rep/operator.hpp"

namespace covlab {

/// M_f e_x = f(x) e_x (the layer n is ignored in psi-tilde mode).
Operator build_M(const Coefficient& f, const BasisPtr& basis);

/// S e_x = script_L(1)(x)^{-1/2} sum_{y in T^{-1}x} e_y; psi-tilde raises n by one.
Operator build_S(const BasisPtr& basis);

/// S^k e_x = sum_{y in (T^k)^{-1}x} I_k(y)^{-1/2} e_y. k = 0 gives the identity.
Operator build_S_power(const BasisPtr& basis, std::size_t k);

/// (S*)^k e_x = I_k(x)^{-1/2} e_{T^k x}; psi-tilde lowers n by k.
Operator build_S_adjoint_power(const BasisPtr& basis, std::size_t k);

/// U_z e_(x,n) = z^n e_(x,n). Throws UnsupportedModeError in psi mode and
/// InputError unless ||z| - 1| <= 1e-12.
Operator build_U(const BasisPtr& basis, const Complex& z);

/// psi(e) or psi-tilde(e) depending on the basis mode. Column (x, n) of a
/// monomial f s^k (s*)^l g is
///   sum_{y in (T^k)^{-1}(T^l x)} f(y) (I_k(y) I_l(x))^{-1/2} g(x) e_(y, n-l+k)
/// and is valid when the whole fiber and the target layer lie in the basis.
Operator represent(const Element& e, const BasisPtr& basis);

}  // namespace covlab
