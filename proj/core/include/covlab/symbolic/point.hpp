#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "covlab/symbolic/shift_system.hpp"
#include "covlab/symbolic/word.hpp"

namespace covlab {

/// An eventually periodic sequence preperiod . period^inf, stored in
/// canonical form: the period is primitive and the preperiod is as short as
/// possible. Equal sequences therefore have equal representations.
class Point {
 public:
  /// Throws InputError when `period` is empty.
  Point(Word preperiod, Word period);
  static Point periodic(Word period) { return Point({}, std::move(period)); }

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  Symbol at(std::size_t i) const;
  Symbol first() const { return at(0); }
  Word prefix(std::size_t n) const;

  /// The sequence with its first symbol removed.
  Point shifted() const;
  /// The sequence a . x.
  Point prepended(Symbol a) const;

  /// "pre(per)", e.g. "11(0)" for 110000...
  std::string to_string() const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  void canonicalize();
  Word pre_;
  Word per_;
};

bool is_admissible(const ShiftSystem& sys, const Point& x);
/// Throws InputError when x uses symbols outside the alphabet or a forbidden transition.
void require_admissible(const ShiftSystem& sys, const Point& x);

/// The clopen set [w] of points starting with an admissible nonempty word w.
class Cylinder {
 public:
  /// Throws InputError on an empty or inadmissible word.
  Cylinder(const ShiftSystem& sys, Word word);

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool contains(const Point& x) const;
  std::string to_string() const { return format_word(word_); }

  friend bool operator==(const Cylinder&, const Cylinder&) = default;

 private:
  Word word_;
};

}  // namespace covlab
