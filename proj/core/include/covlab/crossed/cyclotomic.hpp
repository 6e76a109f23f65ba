#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covlab/algebra/scalar.hpp"

namespace covlab {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(std::size_t n);

/// (1/N) sum_{j<N} w^{j d} for a primitive N-th root of unity w, computed
/// exactly in Q(w) by reduction modulo the N-th cyclotomic polynomial.
/// Returns nullopt when the average is not a rational number.
std::optional<Rational> root_of_unity_average(long d, std::size_t n);

}  // namespace covlab
