#pragma once

#include <cstddef>
#include <vector>

#include "covlab/algebra/cylinder_function.hpp"
#include "covlab/algebra/sqrt_function.hpp"

namespace covlab {

/// alpha(f) = f o T, one level deeper than f.
template <class S>
CylinderFunction<S> alpha(const CylinderFunction<S>& f) {
  return CylinderFunction<S>::tabulate(f.system(), f.depth() + 1, [&f](const Word& w) {
    return f.value(std::span<const Symbol>(w).subspan(1));
  });
}

template <class S>
CylinderFunction<S> alpha_power(CylinderFunction<S> f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f = alpha(f);
  return f;
}

/// Un-normalized transfer sum: (script L f)(x) = sum over y in T^{-1}(x) of f(y).
template <class S>
CylinderFunction<S> script_L(const CylinderFunction<S>& f) {
  const ShiftSystem& sys = f.system();
  const int depth = std::max(f.depth() - 1, 1);
  return CylinderFunction<S>::tabulate(sys, depth, [&](const Word& w) {
    S sum(0);
    Word aw(w.size() + 1);
    std::copy(w.begin(), w.end(), aw.begin() + 1);
    for (Symbol a : sys.predecessors(w.front())) {
      aw[0] = a;
      sum += f.value(aw);
    }
    return sum;
  });
}

/// The normalized transfer operator L(f) = script_L(1)^{-1} script_L(f).
template <class S>
CylinderFunction<S> transfer_L(const CylinderFunction<S>& f) {
  const auto count = script_L(CylinderFunction<S>::constant(f.system(), S(1)));
  return zip(script_L(f), count, [](const S& num, const S& den) { return num / den; });
}

template <class S>
CylinderFunction<S> transfer_L_power(CylinderFunction<S> f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f = transfer_L(f);
  return f;
}

SqrtFunction alpha(const SqrtFunction& u);

/// ind(E) = alpha(script_L(1_X)), depth 2.
LCF ind_E(const ShiftSystem& sys);

/// I_k = ind(E) alpha(ind(E)) ... alpha^{k-1}(ind(E)) at depth k + 1; I_0 = 1.
LCF cocycle_I(const ShiftSystem& sys, std::size_t k);

struct PartitionElement {
  LCF v;           // indicator of a length-1 cylinder
  SqrtFunction u;  // (ind(E) v)^{1/2}
};

/// Partition of unity subordinate to the length-1 cylinders, one entry per symbol.
std::vector<PartitionElement> partition_of_unity(const ShiftSystem& sys);

/// u_j = u_{j_0} alpha(u_{j_1}) ... alpha^{l-1}(u_{j_{l-1}}) for a word j of length l >= 1.
SqrtFunction multi_index_u(const ShiftSystem& sys, const Word& j);

}  // namespace covlab
