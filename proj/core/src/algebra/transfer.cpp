#include "covlab/algebra/transfer.hpp"

#include "covlab/errors.hpp"

namespace covlab {

SqrtFunction::SqrtFunction(LCF radicand) : radicand_(std::move(radicand)) {
  for (const QComplex& v : radicand_.values()) {
    if (!v.is_real() || sgn(v.real()) < 0) {
      throw InputError("square-root radicand must be real and nonnegative, got " + v.to_string());
    }
  }
}

FloatFunction SqrtFunction::to_float() const {
  std::vector<Complex> values;
  values.reserve(radicand_.values().size());
  for (const QComplex& v : radicand_.values()) values.emplace_back(std::sqrt(v.real().get_d()), 0.0);
  return FloatFunction(radicand_.system(), radicand_.depth(), std::move(values));
}

std::optional<LCF> SqrtFunction::exact() const {
  std::vector<QComplex> values;
  values.reserve(radicand_.values().size());
  for (const QComplex& v : radicand_.values()) {
    auto root = exact_sqrt(v.real());
    if (!root) return std::nullopt;
    values.emplace_back(*root);
  }
  return LCF(radicand_.system(), radicand_.depth(), std::move(values));
}

SqrtFunction alpha(const SqrtFunction& u) { return SqrtFunction(alpha(u.radicand())); }

LCF ind_E(const ShiftSystem& sys) {
  return alpha(script_L(LCF::constant(sys, QComplex(1))));
}

LCF cocycle_I(const ShiftSystem& sys, std::size_t k) {
  LCF result = LCF::constant(sys, QComplex(1));
  LCF factor = ind_E(sys);
  for (std::size_t i = 0; i < k; ++i) {
    result = result * factor;
    if (i + 1 < k) factor = alpha(factor);
  }
  return result;
}

std::vector<PartitionElement> partition_of_unity(const ShiftSystem& sys) {
  const LCF ind = ind_E(sys);
  std::vector<PartitionElement> out;
  for (int a = 0; a < sys.alphabet_size(); ++a) {
    LCF v = LCF::indicator(sys, Word{static_cast<Symbol>(a)});
    SqrtFunction u(ind * v);
    out.push_back({std::move(v), std::move(u)});
  }
  return out;
}

SqrtFunction multi_index_u(const ShiftSystem& sys, const Word& j) {
  if (j.empty()) throw InputError("multi-index must be nonempty");
  sys.check_symbols(j);
  const auto parts = partition_of_unity(sys);
  SqrtFunction product = parts[j[0]].u;
  for (std::size_t i = 1; i < j.size(); ++i) {
    SqrtFunction factor = parts[j[i]].u;
    for (std::size_t r = 0; r < i; ++r) factor = alpha(factor);
    product = product * factor;
  }
  return product;
}

}  // namespace covlab
