#include "covlab/symbolic/shift_system.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "covlab/errors.hpp"

namespace covlab {

namespace {

// Word tables beyond this size are refused rather than silently built.
constexpr std::size_t kMaxTableSize = std::size_t{1} << 22;

}  // namespace

WordTable::WordTable(int alphabet, int depth, std::vector<Word> words)
    : alphabet_(alphabet), depth_(depth), words_(std::move(words)) {
  codes_.reserve(words_.size());
  for (const Word& w : words_) codes_.push_back(encode(w));
}

std::uint64_t WordTable::encode(std::span<const Symbol> w) const {
  std::uint64_t code = 0;
  for (int i = 0; i < depth_; ++i) code = code * static_cast<std::uint64_t>(alphabet_) + w[i];
  return code;
}

std::optional<std::size_t> WordTable::index_of(std::span<const Symbol> w) const {
  if (w.size() < static_cast<std::size_t>(depth_)) {
    throw InputError("word of length " + std::to_string(w.size()) +
                     " is shorter than table depth " + std::to_string(depth_));
  }
  const std::uint64_t code = encode(w);
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

struct ShiftSystem::State {
  int d = 0;
  std::vector<std::uint8_t> adj;  // row-major d x d
  std::vector<std::vector<Symbol>> succ;
  std::vector<std::vector<Symbol>> pred;

  mutable std::mutex cache_mutex;
  mutable std::vector<std::unique_ptr<const WordTable>> tables;  // index = depth
};

ShiftSystem::ShiftSystem(std::shared_ptr<const State> state) : state_(std::move(state)) {}

ShiftSystem ShiftSystem::full_shift(int alphabet) {
  if (alphabet < 1) throw InvalidSystemError("alphabet size must be positive");
  return from_adjacency(std::vector<std::vector<int>>(
      static_cast<std::size_t>(alphabet), std::vector<int>(static_cast<std::size_t>(alphabet), 1)));
}

ShiftSystem ShiftSystem::from_adjacency(const std::vector<std::vector<int>>& adjacency) {
  const std::size_t d = adjacency.size();
  if (d == 0) throw InvalidSystemError("alphabet size must be positive");
  if (d > static_cast<std::size_t>(kMaxAlphabet)) {
    throw InvalidSystemError("alphabet size " + std::to_string(d) + " exceeds " +
                             std::to_string(kMaxAlphabet));
  }
  auto state = std::make_shared<State>();
  state->d = static_cast<int>(d);
  state->adj.assign(d * d, 0);
  state->succ.resize(d);
  state->pred.resize(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (adjacency[a].size() != d) {
      throw InvalidSystemError("adjacency row " + std::to_string(a) + " has " +
                               std::to_string(adjacency[a].size()) + " entries, expected " +
                               std::to_string(d));
    }
    for (std::size_t b = 0; b < d; ++b) {
      const int v = adjacency[a][b];
      if (v != 0 && v != 1) {
        throw InvalidSystemError("adjacency entry [" + std::to_string(a) + "][" +
                                 std::to_string(b) + "] must be 0 or 1");
      }
      if (v == 1) {
        state->adj[a * d + b] = 1;
        state->succ[a].push_back(static_cast<Symbol>(b));
        state->pred[b].push_back(static_cast<Symbol>(a));
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    if (state->succ[a].empty()) {
      throw InvalidSystemError("shift not everywhere defined: row " + std::to_string(a) +
                               " has no successor");
    }
  }
  for (std::size_t b = 0; b < d; ++b) {
    if (state->pred[b].empty()) {
      throw InvalidSystemError("shift not surjective: not a covering map (column " +
                               std::to_string(b) + " is zero)");
    }
  }
  return ShiftSystem(std::move(state));
}

int ShiftSystem::alphabet_size() const { return state_->d; }

bool ShiftSystem::edge(Symbol from, Symbol to) const {
  const int d = state_->d;
  if (from >= d || to >= d) throw InputError("symbol out of range");
  return state_->adj[static_cast<std::size_t>(from) * d + to] != 0;
}

std::span<const Symbol> ShiftSystem::successors(Symbol a) const {
  if (a >= state_->d) throw InputError("symbol out of range");
  return state_->succ[a];
}

std::span<const Symbol> ShiftSystem::predecessors(Symbol b) const {
  if (b >= state_->d) throw InputError("symbol out of range");
  return state_->pred[b];
}

bool ShiftSystem::is_full_shift() const {
  return std::all_of(state_->adj.begin(), state_->adj.end(), [](auto v) { return v == 1; });
}

void ShiftSystem::check_symbols(std::span<const Symbol> w) const {
  for (Symbol s : w) {
    if (s >= state_->d) {
      throw InputError("symbol " + std::to_string(s) + " out of range for alphabet of size " +
                       std::to_string(state_->d));
    }
  }
}

bool ShiftSystem::is_admissible(std::span<const Symbol> w) const {
  check_symbols(w);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!edge(w[i], w[i + 1])) return false;
  }
  return true;
}

const WordTable& ShiftSystem::words(int depth) const {
  if (depth < 1) throw InputError("word table depth must be at least 1");
  if (static_cast<double>(depth) * std::log2(static_cast<double>(state_->d)) > 62.0) {
    throw ResourceError("word table depth " + std::to_string(depth) + " too large");
  }
  std::lock_guard lock(state_->cache_mutex);
  auto& tables = state_->tables;
  if (tables.size() <= static_cast<std::size_t>(depth)) tables.resize(depth + 1);
  if (!tables[depth]) {
    // Extend admissible words one symbol at a time; lexicographic order is
    // preserved because successors are sorted.
    std::vector<Word> current;
    for (int a = 0; a < state_->d; ++a) current.push_back(Word{static_cast<Symbol>(a)});
    for (int len = 1; len < depth; ++len) {
      std::vector<Word> next;
      for (const Word& w : current) {
        for (Symbol b : state_->succ[w.back()]) {
          Word e = w;
          e.push_back(b);
          next.push_back(std::move(e));
        }
      }
      if (next.size() > kMaxTableSize) {
        throw ResourceError("more than " + std::to_string(kMaxTableSize) +
                            " admissible words of length " + std::to_string(len + 1));
      }
      current = std::move(next);
    }
    tables[depth] = std::make_unique<const WordTable>(state_->d, depth, std::move(current));
  }
  return *tables[depth];
}

std::vector<std::vector<int>> ShiftSystem::adjacency() const {
  const auto d = static_cast<std::size_t>(state_->d);
  std::vector<std::vector<int>> out(d, std::vector<int>(d, 0));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) out[a][b] = state_->adj[a * d + b];
  }
  return out;
}

bool ShiftSystem::operator==(const ShiftSystem& other) const {
  return state_ == other.state_ || (state_->d == other.state_->d && state_->adj == other.state_->adj);
}

}  // namespace covlab
