#include "covlab/symbolic/point.hpp"

#include <algorithm>

#include "covlab/errors.hpp"

namespace covlab {

Point::Point(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw InputError("point period must be nonempty");
  canonicalize();
}

void Point::canonicalize() {
  // Primitive root of the period.
  const std::size_t n = per_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = per_[i] == per_[i - p];
    if (repeats) {
      per_.resize(p);
      break;
    }
  }
  // Absorb trailing preperiod symbols into the period.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

Symbol Point::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

Word Point::prefix(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

Point Point::shifted() const {
  if (!pre_.empty()) return Point(Word(pre_.begin() + 1, pre_.end()), per_);
  Word rotated = per_;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  return Point({}, std::move(rotated));
}

Point Point::prepended(Symbol a) const {
  Word pre;
  pre.reserve(pre_.size() + 1);
  pre.push_back(a);
  pre.insert(pre.end(), pre_.begin(), pre_.end());
  return Point(std::move(pre), per_);
}

std::string Point::to_string() const {
  return format_word(pre_) + "(" + format_word(per_) + ")";
}

bool is_admissible(const ShiftSystem& sys, const Point& x) {
  const int d = sys.alphabet_size();
  auto in_range = [d](const Word& w) {
    return std::all_of(w.begin(), w.end(), [d](Symbol s) { return s < d; });
  };
  if (!in_range(x.preperiod()) || !in_range(x.period())) return false;
  // pre . per . per_0 covers every transition of pre . per^inf.
  Word w = x.preperiod();
  w.insert(w.end(), x.period().begin(), x.period().end());
  w.push_back(x.period().front());
  return sys.is_admissible(w);
}

void require_admissible(const ShiftSystem& sys, const Point& x) {
  if (!is_admissible(sys, x)) throw InputError("point " + x.to_string() + " is not admissible");
}

Cylinder::Cylinder(const ShiftSystem& sys, Word word) : word_(std::move(word)) {
  if (word_.empty()) throw InputError("cylinder word must be nonempty");
  if (!sys.is_admissible(word_)) {
    throw InputError("cylinder word " + format_word(word_) + " is not admissible");
  }
}

bool Cylinder::contains(const Point& x) const {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (x.at(i) != word_[i]) return false;
  }
  return true;
}

}  // namespace covlab
