#include "covlab/crossed/element.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "covlab/algebra/transfer.hpp"
#include "covlab/crossed/cyclotomic.hpp"
#include "covlab/errors.hpp"

namespace covlab {

Element::Element(ShiftSystem sys, std::vector<Monomial> terms)
    : sys_(std::move(sys)), terms_(std::move(terms)) {
  for (const Monomial& t : terms_) {
    if (!(t.f.system() == sys_) || !(t.g.system() == sys_)) {
      throw InputError("monomial coefficients live on a different system");
    }
  }
}

Element Element::unit(const ShiftSystem& sys) {
  return monomial(Coefficient::one(sys), 0, 0, Coefficient::one(sys));
}

Element Element::generator(const ShiftSystem& sys) {
  return monomial(Coefficient::one(sys), 1, 0, Coefficient::one(sys));
}

Element Element::function(Coefficient f) {
  const ShiftSystem sys = f.system();
  return monomial(std::move(f), 0, 0, Coefficient::one(sys));
}

Element Element::monomial(Coefficient f, std::size_t k, std::size_t l, Coefficient g) {
  ShiftSystem sys = f.system();
  return Element(std::move(sys), {Monomial{std::move(f), k, l, std::move(g)}});
}

std::size_t Element::max_power() const {
  std::size_t m = 0;
  for (const Monomial& t : terms_) m = std::max({m, t.k, t.l});
  return m;
}

std::size_t Element::max_degree_gap() const {
  std::size_t m = 0;
  for (const Monomial& t : terms_) m = std::max(m, static_cast<std::size_t>(std::labs(t.degree())));
  return m;
}

Element operator+(const Element& a, const Element& b) {
  if (!(a.sys_ == b.sys_)) throw InputError("elements live on different systems");
  std::vector<Monomial> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Element(a.sys_, std::move(terms));
}

Element operator-(const Element& a, const Element& b) { return a + QComplex(-1) * b; }

Element operator*(const QComplex& c, const Element& e) {
  std::vector<Monomial> terms;
  terms.reserve(e.terms_.size());
  for (const Monomial& t : e.terms_) terms.push_back({c * t.f, t.k, t.l, t.g});
  return Element(e.sys_, std::move(terms));
}

Element operator*(const Complex& c, const Element& e) {
  std::vector<Monomial> terms;
  terms.reserve(e.terms_.size());
  for (const Monomial& t : e.terms_) terms.push_back({c * t.f, t.k, t.l, t.g});
  return Element(e.sys_, std::move(terms));
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element adjoint(const Element& e) {
  std::vector<Monomial> terms;
  terms.reserve(e.terms().size());
  for (const Monomial& t : e.terms()) terms.push_back({t.g.conj(), t.l, t.k, t.f.conj()});
  return Element(e.system(), std::move(terms));
}

namespace {

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  const Coefficient h = a.g * b.f;
  if (a.l <= b.k) {
    // s^{k1} (s*)^{l1} h s^{k2} = s^{k1} L^{l1}(h) s^{k2-l1} = alpha^{k1}(L^{l1}(h)) s^{k1+k2-l1}
    Coefficient left = a.f * alpha_power(transfer_L_power(h, a.l), a.k);
    return {std::move(left), a.k + b.k - a.l, b.l, b.g};
  }
  // (s*)^{l1} h s^{k2} (s*)^{l2} = (s*)^{l1-k2+l2} alpha^{l2}(L^{k2}(h))
  Coefficient right = alpha_power(transfer_L_power(h, b.k), b.l) * b.g;
  return {a.f, a.k, a.l - b.k + b.l, std::move(right)};
}

bool vanishes(const Monomial& m) {
  return (m.f.is_exact() && m.f.is_zero()) || (m.g.is_exact() && m.g.is_zero());
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  if (!(a.system() == b.system())) throw InputError("elements live on different systems");
  std::vector<Monomial> terms;
  for (const Monomial& x : a.terms()) {
    for (const Monomial& y : b.terms()) {
      Monomial m = multiply_monomials(x, y);
      if (!vanishes(m)) terms.push_back(std::move(m));
    }
  }
  return Element(a.system(), std::move(terms));
}

Coefficient conditional_expectation(const Element& e) {
  const ShiftSystem& sys = e.system();
  std::map<std::size_t, LCF> inverse_cocycle;
  std::optional<Coefficient> sum;
  for (const Monomial& t : e.terms()) {
    if (t.k != t.l) continue;
    auto it = inverse_cocycle.find(t.k);
    if (it == inverse_cocycle.end()) {
      it = inverse_cocycle.emplace(t.k, pointwise_inverse(cocycle_I(sys, t.k))).first;
    }
    Coefficient term = t.f * Coefficient(it->second) * t.g;
    sum = sum ? *sum + term : term;
  }
  if (!sum) return LCF::constant(sys, QComplex(0));
  return *sum;
}

Element gauge_rotate(const Element& e, const QComplex& z) {
  if (z.norm() != 1) throw InputError("gauge parameter must have modulus one, got " + z.to_string());
  std::vector<Monomial> terms;
  terms.reserve(e.terms().size());
  for (const Monomial& t : e.terms()) {
    const long d = t.degree();
    const QComplex base = d >= 0 ? z : z.conj();
    QComplex factor(1);
    for (long i = 0; i < std::labs(d); ++i) factor *= base;
    terms.push_back({factor * t.f, t.k, t.l, t.g});
  }
  return Element(e.system(), std::move(terms));
}

Element gauge_rotate(const Element& e, const Complex& z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12) {
    throw InputError("gauge parameter must have modulus one");
  }
  std::vector<Monomial> terms;
  terms.reserve(e.terms().size());
  for (const Monomial& t : e.terms()) {
    if (t.degree() == 0) {
      terms.push_back(t);
    } else {
      terms.push_back({std::pow(z, static_cast<double>(t.degree())) * t.f, t.k, t.l, t.g});
    }
  }
  return Element(e.system(), std::move(terms));
}

Element fourier_component(const Element& e, long n) {
  std::vector<Monomial> terms;
  for (const Monomial& t : e.terms()) {
    if (t.degree() == n) terms.push_back(t);
  }
  return Element(e.system(), std::move(terms));
}

Element gauge_average(const Element& e, std::size_t n) {
  if (n <= e.max_degree_gap()) {
    throw InputError("gauge average over " + std::to_string(n) +
                     "-th roots needs N > max |k - l| = " + std::to_string(e.max_degree_gap()));
  }
  std::vector<Monomial> terms;
  for (const Monomial& t : e.terms()) {
    const auto c = root_of_unity_average(t.degree(), n);
    if (!c) throw std::logic_error("root-of-unity average is not rational");
    if (sgn(*c) == 0) continue;
    if (*c == 1) {
      terms.push_back(t);
    } else {
      terms.push_back({QComplex(*c) * t.f, t.k, t.l, t.g});
    }
  }
  return Element(e.system(), std::move(terms));
}

bool identical(const Element& a, const Element& b) {
  if (!(a.system() == b.system()) || a.terms().size() != b.terms().size()) return false;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    const Monomial& x = a.terms()[i];
    const Monomial& y = b.terms()[i];
    if (x.k != y.k || x.l != y.l || !identical(x.f, y.f) || !identical(x.g, y.g)) return false;
  }
  return true;
}

}  // namespace covlab
