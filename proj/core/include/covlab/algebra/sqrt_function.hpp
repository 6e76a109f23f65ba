#pragma once

#include <cmath>
#include <optional>

#include "covlab/algebra/cylinder_function.hpp"

namespace covlab {

/// The pointwise square root of a nonnegative rational locally constant
/// function, kept exact through its radicand.
class SqrtFunction {
 public:
  /// Throws InputError unless every radicand value is real and >= 0.
  explicit SqrtFunction(LCF radicand);

  const LCF& radicand() const { return radicand_; }
  int depth() const { return radicand_.depth(); }

  double at(const Point& x) const { return std::sqrt(radicand_.at(x).real().get_d()); }
  FloatFunction to_float() const;
  /// The root as an exact function when every radicand value is a perfect square.
  std::optional<LCF> exact() const;

  friend SqrtFunction operator*(const SqrtFunction& a, const SqrtFunction& b) {
    return SqrtFunction(a.radicand_ * b.radicand_);
  }
  friend bool operator==(const SqrtFunction& a, const SqrtFunction& b) {
    return a.radicand_ == b.radicand_;
  }

 private:
  LCF radicand_;
};

}  // namespace covlab
