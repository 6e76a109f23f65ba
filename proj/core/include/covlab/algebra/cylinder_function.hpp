#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covlab/algebra/scalar.hpp"
#include "covlab/errors.hpp"
#include "covlab/symbolic/point.hpp"
#include "covlab/symbolic/shift_system.hpp"

namespace covlab {

inline QComplex conj_value(const QComplex& z) { return z.conj(); }
inline Complex conj_value(const Complex& z) { return std::conj(z); }
inline bool is_zero_value(const QComplex& z) { return z.is_zero(); }
inline bool is_zero_value(const Complex& z) { return z == Complex{}; }
inline Complex to_complex(const QComplex& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

/// A function on X that is constant on every cylinder of a fixed depth m,
/// stored as one value per admissible word of length m (in WordTable order).
template <class S>
class CylinderFunction {
 public:
  using Scalar = S;

  CylinderFunction(ShiftSystem sys, int depth, std::vector<S> values)
      : sys_(std::move(sys)), depth_(depth), values_(std::move(values)) {
    if (depth_ < 1) throw InputError("function depth must be at least 1");
    if (values_.size() != sys_.words(depth_).size()) {
      throw InputError("function table has " + std::to_string(values_.size()) +
                       " entries, expected " + std::to_string(sys_.words(depth_).size()));
    }
  }

  static CylinderFunction constant(const ShiftSystem& sys, const S& c, int depth = 1) {
    return CylinderFunction(sys, depth, std::vector<S>(sys.words(depth).size(), c));
  }

  /// 1 on [w], 0 elsewhere, at depth |w|.
  static CylinderFunction indicator(const ShiftSystem& sys, const Word& w) {
    if (w.empty() || !sys.is_admissible(w)) {
      throw InputError("indicator word " + format_word(w) + " is not an admissible word");
    }
    const WordTable& table = sys.words(static_cast<int>(w.size()));
    std::vector<S> values(table.size(), S(0));
    values[*table.index_of(w)] = S(1);
    return CylinderFunction(sys, static_cast<int>(w.size()), std::move(values));
  }

  template <class F>
  static CylinderFunction tabulate(const ShiftSystem& sys, int depth, F&& fn) {
    const WordTable& table = sys.words(depth);
    std::vector<S> values;
    values.reserve(table.size());
    for (const Word& w : table.words()) values.push_back(fn(w));
    return CylinderFunction(sys, depth, std::move(values));
  }

  const ShiftSystem& system() const { return sys_; }
  int depth() const { return depth_; }
  const std::vector<S>& values() const { return values_; }
  const WordTable& words() const { return sys_.words(depth_); }

  /// Value on the cylinder of the first depth() symbols of w.
  const S& value(std::span<const Symbol> w) const {
    const auto idx = words().index_of(w);
    if (!idx) throw InputError("word " + format_word(w.first(depth_)) + " is not admissible");
    return values_[*idx];
  }
  S at(const Point& x) const { return value(x.prefix(static_cast<std::size_t>(depth_))); }

  CylinderFunction refine(int depth) const {
    if (depth < depth_) throw InputError("refine cannot lower the depth");
    if (depth == depth_) return *this;
    return tabulate(sys_, depth, [this](const Word& w) { return value(w); });
  }

  /// The same function at a lower depth, or nullopt when it is not constant
  /// on depth-`depth` cylinders.
  std::optional<CylinderFunction> coarsen(int depth) const {
    if (depth > depth_) throw InputError("coarsen cannot raise the depth");
    if (depth < 1) throw InputError("function depth must be at least 1");
    const WordTable& coarse = sys_.words(depth);
    std::vector<std::optional<S>> seen(coarse.size());
    const WordTable& fine = words();
    for (std::size_t i = 0; i < fine.size(); ++i) {
      auto& slot = seen[*coarse.index_of(fine[i])];
      if (!slot) {
        slot = values_[i];
      } else if (!(*slot == values_[i])) {
        return std::nullopt;
      }
    }
    std::vector<S> values;
    values.reserve(seen.size());
    for (auto& s : seen) values.push_back(std::move(*s));
    return CylinderFunction(sys_, depth, std::move(values));
  }

  template <class F>
  CylinderFunction map(F&& fn) const {
    std::vector<S> values;
    values.reserve(values_.size());
    for (const S& v : values_) values.push_back(fn(v));
    return CylinderFunction(sys_, depth_, std::move(values));
  }

  /// Pointwise combination after refining both operands to the larger depth.
  template <class F>
  friend CylinderFunction zip(const CylinderFunction& a, const CylinderFunction& b, F&& fn) {
    if (!(a.sys_ == b.sys_)) throw InputError("functions live on different systems");
    const int depth = std::max(a.depth_, b.depth_);
    const CylinderFunction ra = a.refine(depth);
    const CylinderFunction rb = b.refine(depth);
    std::vector<S> values;
    values.reserve(ra.values_.size());
    for (std::size_t i = 0; i < ra.values_.size(); ++i) {
      values.push_back(fn(ra.values_[i], rb.values_[i]));
    }
    return CylinderFunction(a.sys_, depth, std::move(values));
  }

  CylinderFunction conj() const { return map([](const S& v) { return conj_value(v); }); }
  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const S& v) { return is_zero_value(v); });
  }

  friend CylinderFunction operator+(const CylinderFunction& a, const CylinderFunction& b) {
    return zip(a, b, [](const S& x, const S& y) { return x + y; });
  }
  friend CylinderFunction operator-(const CylinderFunction& a, const CylinderFunction& b) {
    return zip(a, b, [](const S& x, const S& y) { return x - y; });
  }
  friend CylinderFunction operator*(const CylinderFunction& a, const CylinderFunction& b) {
    return zip(a, b, [](const S& x, const S& y) { return x * y; });
  }
  friend CylinderFunction operator*(const S& c, const CylinderFunction& f) {
    return f.map([&c](const S& v) { return c * v; });
  }

  /// Exact equality as functions on X (depths may differ).
  friend bool operator==(const CylinderFunction& a, const CylinderFunction& b) {
    if (!(a.sys_ == b.sys_)) return false;
    const int depth = std::max(a.depth_, b.depth_);
    return a.refine(depth).values_ == b.refine(depth).values_;
  }

 private:
  ShiftSystem sys_;
  int depth_;
  std::vector<S> values_;
};

/// Locally constant function with exact rational complex values.
using LocallyConstantFunction = CylinderFunction<QComplex>;
using LCF = LocallyConstantFunction;
/// Floating-point counterpart, used once exactness is lost.
using FloatFunction = CylinderFunction<Complex>;

inline FloatFunction to_float(const LCF& f) {
  std::vector<Complex> values;
  values.reserve(f.values().size());
  for (const QComplex& v : f.values()) values.push_back(v.to_complex());
  return FloatFunction(f.system(), f.depth(), std::move(values));
}

/// Pointwise inverse. Throws std::domain_error where f vanishes.
inline LCF pointwise_inverse(const LCF& f) {
  return f.map([](const QComplex& v) { return v.inverse(); });
}

}  // namespace covlab
