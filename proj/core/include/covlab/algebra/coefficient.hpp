#pragma once

#include <optional>
#include <variant>

#include "covlab/algebra/cylinder_function.hpp"
#include "covlab/algebra/sqrt_function.hpp"

namespace covlab {

/// A coefficient function of a crossed-product monomial.
///
/// Exact coefficients are f or f * sqrt(r) with rational locally constant f
/// and r; this class is closed under products, adjoints and alpha. Applying
/// the transfer operator to a coefficient that carries a square root leaves
/// that class, and the result is held as a floating-point table instead
/// (is_exact() turns false and stays false downstream).
class Coefficient {
 public:
  Coefficient(LCF factor);  // NOLINT(google-explicit-constructor)
  Coefficient(SqrtFunction root);  // NOLINT(google-explicit-constructor)
  Coefficient(LCF factor, SqrtFunction root);
  explicit Coefficient(FloatFunction values);

  static Coefficient one(const ShiftSystem& sys) { return LCF::constant(sys, QComplex(1)); }

  const ShiftSystem& system() const;
  int depth() const;
  bool is_exact() const { return std::holds_alternative<Exact>(repr_); }
  bool has_root() const;
  /// The coefficient as an exact rational function, if it is one.
  std::optional<LCF> rational() const;
  /// The exact factor and root, when is_exact().
  const LCF* factor() const;
  const SqrtFunction* root() const;
  const FloatFunction* float_values() const;

  Complex at(const Point& x) const;
  FloatFunction to_float() const;
  bool is_zero() const;

  Coefficient conj() const;

  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const QComplex& c, const Coefficient& a);
  friend Coefficient operator*(const Complex& c, const Coefficient& a);

  /// Same representation: equal exact factor and root, or equal float tables.
  friend bool identical(const Coefficient& a, const Coefficient& b);

 private:
  struct Exact {
    LCF factor;
    std::optional<SqrtFunction> root;
  };
  explicit Coefficient(Exact e);
  void normalize();

  std::variant<Exact, FloatFunction> repr_;
};

Coefficient alpha(const Coefficient& c);
Coefficient alpha_power(Coefficient c, std::size_t n);
Coefficient transfer_L(const Coefficient& c);
Coefficient transfer_L_power(Coefficient c, std::size_t n);

}  // namespace covlab
