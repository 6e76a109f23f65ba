#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "covlab/symbolic/word.hpp"

namespace covlab {

/// All admissible words of one fixed length, in lexicographic order.
class WordTable {
 public:
  WordTable(int alphabet, int depth, std::vector<Word> words);

  int depth() const { return depth_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const { return words_; }

  /// Index of the first `depth()` symbols of `w`, or nullopt when they are
  /// inadmissible. `w` must hold at least depth() symbols.
  std::optional<std::size_t> index_of(std::span<const Symbol> w) const;

 private:
  std::uint64_t encode(std::span<const Symbol> w) const;

  int alphabet_;
  int depth_;
  std::vector<Word> words_;
  std::vector<std::uint64_t> codes_;
};

/// A one-sided subshift of finite type given by a 0/1 transition matrix.
///
/// Every row and every column must contain a 1: the shift is then
/// everywhere defined and surjective, and the fiber over x has exactly
/// in_degree(x_0) points, so the shift is a covering map.
///
/// Copies share one immutable state (including a lazily built cache of
/// word tables), so passing by value is cheap and thread-safe.
class ShiftSystem {
 public:
  static ShiftSystem full_shift(int alphabet);
  /// Throws InvalidSystemError when the matrix is not square 0/1 or when a
  /// row or column is empty.
  static ShiftSystem from_adjacency(const std::vector<std::vector<int>>& adjacency);

  int alphabet_size() const;
  bool edge(Symbol from, Symbol to) const;
  std::span<const Symbol> successors(Symbol a) const;
  std::span<const Symbol> predecessors(Symbol b) const;
  int out_degree(Symbol a) const { return static_cast<int>(successors(a).size()); }
  /// Column count of `b`: the number of preimages of any point starting with b.
  int in_degree(Symbol b) const { return static_cast<int>(predecessors(b).size()); }
  bool is_full_shift() const;

  /// Throws InputError when a symbol is out of range.
  bool is_admissible(std::span<const Symbol> w) const;
  void check_symbols(std::span<const Symbol> w) const;

  /// Admissible words of length `depth` (>= 1). Cached per system.
  const WordTable& words(int depth) const;

  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const ShiftSystem& other) const;

 private:
  struct State;
  explicit ShiftSystem(std::shared_ptr<const State> state);
  std::shared_ptr<const State> state_;
};

}  // namespace covlab
