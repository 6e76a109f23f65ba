#pragma once

#include <cstddef>
#include <vector>

#include "covlab/algebra/coefficient.hpp"

namespace covlab {

/// f s^k (s*)^l g.
struct Monomial {
  Coefficient f;
  std::size_t k = 0;
  std::size_t l = 0;
  Coefficient g;

  long degree() const { return static_cast<long>(k) - static_cast<long>(l); }
};

/// A finite formal sum of standard-form monomials in the crossed product.
///
/// Standard forms are not unique, so there is no semantic equality here;
/// compare elements through their representations instead. `identical`
/// only compares term lists.
class Element {
 public:
  explicit Element(ShiftSystem sys, std::vector<Monomial> terms = {});

  static Element zero(const ShiftSystem& sys) { return Element(sys); }
  static Element unit(const ShiftSystem& sys);
  /// The isometry s = (1, 1, 0, 1).
  static Element generator(const ShiftSystem& sys);
  static Element function(Coefficient f);
  static Element monomial(Coefficient f, std::size_t k, std::size_t l, Coefficient g);

  const ShiftSystem& system() const { return sys_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t max_power() const;
  /// max |k - l| over the terms (0 for the zero element).
  std::size_t max_degree_gap() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const QComplex& c, const Element& e);
  friend Element operator*(const Complex& c, const Element& e);
  friend Element operator*(const Element& a, const Element& b);

 private:
  ShiftSystem sys_;
  std::vector<Monomial> terms_;
};

Element adjoint(const Element& e);

/// Product via s f = alpha(f) s, s* f s = L(f) and f s* = s* alpha(f).
/// Terms whose exact coefficient vanishes are dropped.
Element multiply(const Element& a, const Element& b);

/// G(f s^k (s*)^l g) = delta_{k,l} f I_k^{-1} g, summed over the terms.
Coefficient conditional_expectation(const Element& e);

/// Scales each term by z^{k-l}. Throws InputError unless |z|^2 == 1 exactly.
Element gauge_rotate(const Element& e, const QComplex& z);
/// Floating version; throws InputError unless ||z| - 1| <= 1e-12.
Element gauge_rotate(const Element& e, const Complex& z);

/// Terms with k - l == n.
Element fourier_component(const Element& e, long n);

/// (1/N) sum over N-th roots of unity of gauge_rotate, computed exactly.
/// Throws InputError unless N > max |k - l|.
Element gauge_average(const Element& e, std::size_t n);

bool identical(const Element& a, const Element& b);

}  // namespace covlab
