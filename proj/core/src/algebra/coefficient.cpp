#include "covlab/algebra/coefficient.hpp"

#include "covlab/algebra/transfer.hpp"

namespace covlab {

Coefficient::Coefficient(LCF factor) : repr_(Exact{std::move(factor), std::nullopt}) {}

Coefficient::Coefficient(SqrtFunction root)
    : repr_(Exact{LCF::constant(root.radicand().system(), QComplex(1)), std::move(root)}) {
  normalize();
}

Coefficient::Coefficient(LCF factor, SqrtFunction root)
    : repr_(Exact{std::move(factor), std::move(root)}) {
  if (!(std::get<Exact>(repr_).factor.system() == std::get<Exact>(repr_).root->radicand().system())) {
    throw InputError("coefficient factor and root live on different systems");
  }
  normalize();
}

Coefficient::Coefficient(FloatFunction values) : repr_(std::move(values)) {}

Coefficient::Coefficient(Exact e) : repr_(std::move(e)) { normalize(); }

void Coefficient::normalize() {
  auto* e = std::get_if<Exact>(&repr_);
  if (e == nullptr || !e->root) return;
  if (auto r = e->root->exact()) {
    e->factor = e->factor * *r;
    e->root.reset();
  }
}

const ShiftSystem& Coefficient::system() const {
  if (const auto* e = std::get_if<Exact>(&repr_)) return e->factor.system();
  return std::get<FloatFunction>(repr_).system();
}

int Coefficient::depth() const {
  if (const auto* e = std::get_if<Exact>(&repr_)) {
    return e->root ? std::max(e->factor.depth(), e->root->depth()) : e->factor.depth();
  }
  return std::get<FloatFunction>(repr_).depth();
}

bool Coefficient::has_root() const {
  const auto* e = std::get_if<Exact>(&repr_);
  return e != nullptr && e->root.has_value();
}

std::optional<LCF> Coefficient::rational() const {
  const auto* e = std::get_if<Exact>(&repr_);
  if (e == nullptr || e->root) return std::nullopt;
  return e->factor;
}

const LCF* Coefficient::factor() const {
  const auto* e = std::get_if<Exact>(&repr_);
  return e ? &e->factor : nullptr;
}

const SqrtFunction* Coefficient::root() const {
  const auto* e = std::get_if<Exact>(&repr_);
  return (e && e->root) ? &*e->root : nullptr;
}

const FloatFunction* Coefficient::float_values() const { return std::get_if<FloatFunction>(&repr_); }

Complex Coefficient::at(const Point& x) const {
  if (const auto* e = std::get_if<Exact>(&repr_)) {
    Complex v = e->factor.at(x).to_complex();
    if (e->root) v *= e->root->at(x);
    return v;
  }
  return std::get<FloatFunction>(repr_).at(x);
}

FloatFunction Coefficient::to_float() const {
  if (const auto* e = std::get_if<Exact>(&repr_)) {
    FloatFunction f = covlab::to_float(e->factor);
    if (e->root) f = f * e->root->to_float();
    return f;
  }
  return std::get<FloatFunction>(repr_);
}

bool Coefficient::is_zero() const {
  if (const auto* e = std::get_if<Exact>(&repr_)) {
    if (!e->root) return e->factor.is_zero();
    return (e->factor * e->root->radicand()).is_zero();
  }
  return std::get<FloatFunction>(repr_).is_zero();
}

Coefficient Coefficient::conj() const {
  if (const auto* e = std::get_if<Exact>(&repr_)) return Coefficient(Exact{e->factor.conj(), e->root});
  return Coefficient(std::get<FloatFunction>(repr_).conj());
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  const auto* ea = std::get_if<Coefficient::Exact>(&a.repr_);
  const auto* eb = std::get_if<Coefficient::Exact>(&b.repr_);
  if (ea && eb) {
    std::optional<SqrtFunction> root;
    if (ea->root && eb->root) {
      root = *ea->root * *eb->root;
    } else if (ea->root) {
      root = ea->root;
    } else if (eb->root) {
      root = eb->root;
    }
    return Coefficient(Coefficient::Exact{ea->factor * eb->factor, std::move(root)});
  }
  return Coefficient(a.to_float() * b.to_float());
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  const auto* ea = std::get_if<Coefficient::Exact>(&a.repr_);
  const auto* eb = std::get_if<Coefficient::Exact>(&b.repr_);
  if (ea && eb && ea->root.has_value() == eb->root.has_value() &&
      (!ea->root || *ea->root == *eb->root)) {
    return Coefficient(Coefficient::Exact{ea->factor + eb->factor, ea->root});
  }
  return Coefficient(a.to_float() + b.to_float());
}

Coefficient operator*(const QComplex& c, const Coefficient& a) {
  if (const auto* e = std::get_if<Coefficient::Exact>(&a.repr_)) {
    return Coefficient(Coefficient::Exact{c * e->factor, e->root});
  }
  return Coefficient(c.to_complex() * std::get<FloatFunction>(a.repr_));
}

Coefficient operator*(const Complex& c, const Coefficient& a) {
  return Coefficient(c * a.to_float());
}

bool identical(const Coefficient& a, const Coefficient& b) {
  const auto* ea = std::get_if<Coefficient::Exact>(&a.repr_);
  const auto* eb = std::get_if<Coefficient::Exact>(&b.repr_);
  if (ea && eb) {
    if (ea->root.has_value() != eb->root.has_value()) return false;
    if (ea->root && !(*ea->root == *eb->root)) return false;
    return ea->factor == eb->factor;
  }
  if (!ea && !eb) return std::get<FloatFunction>(a.repr_) == std::get<FloatFunction>(b.repr_);
  return false;
}

Coefficient alpha(const Coefficient& c) {
  if (const LCF* f = c.factor()) {
    if (const SqrtFunction* r = c.root()) return Coefficient(alpha(*f), alpha(*r));
    return Coefficient(alpha(*f));
  }
  return Coefficient(alpha(*c.float_values()));
}

Coefficient alpha_power(Coefficient c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c = alpha(c);
  return c;
}

Coefficient transfer_L(const Coefficient& c) {
  if (auto f = c.rational()) return Coefficient(transfer_L(*f));
  return Coefficient(transfer_L(c.to_float()));
}

Coefficient transfer_L_power(Coefficient c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c = transfer_L(c);
  return c;
}

}  // namespace covlab
