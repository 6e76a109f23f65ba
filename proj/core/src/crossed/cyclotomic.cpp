#include "covlab/crossed/cyclotomic.hpp"

#include <stdexcept>

namespace covlab {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic division degree mismatch");
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
  // x^n - 1 = prod_{d | n} Phi_d(x).
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

std::optional<Rational> root_of_unity_average(long d, std::size_t n) {
  if (n == 0) throw std::invalid_argument("root-of-unity order must be positive");
  const auto nn = static_cast<long>(n);
  // Sum of x^{j d mod n} in Q[x]/(x^n - 1), then reduced modulo Phi_n.
  std::vector<Rational> poly(n, 0);
  for (long j = 0; j < nn; ++j) {
    const long e = ((j * d) % nn + nn) % nn;
    poly[static_cast<std::size_t>(e)] += Rational(1, n);
  }
  const auto phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const Rational c = poly[i];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 1; i < std::min(deg, poly.size()); ++i) {
    if (sgn(poly[i]) != 0) return std::nullopt;
  }
  Rational c = poly[0];
  c.canonicalize();
  return c;
}

}  // namespace covlab
