#include <algorithm>
#include <limits>

#include "covlab/errors.hpp"
#include "covlab/symbolic/dynamics.hpp"

namespace covlab {

namespace {

// First word of length `len` (lexicographic order) whose cylinder lies in
// the (k, l) equalizer.
std::optional<Word> first_equalizer_word(const ShiftSystem& sys, std::size_t k, std::size_t l,
                                         std::size_t len) {
  Word u;
  auto search = [&](auto&& self) -> bool {
    if (u.size() == len) return equalizer_cylinder_test(sys, k, l, Cylinder(sys, u));
    const auto d = static_cast<Symbol>(sys.alphabet_size());
    for (Symbol b = 0; b < d; ++b) {
      if (!u.empty() && !sys.edge(u.back(), b)) continue;
      u.push_back(b);
      if (self(self)) return true;
      u.pop_back();
    }
    return false;
  };
  if (search(search)) return u;
  return std::nullopt;
}

}  // namespace

FreenessVerdict is_topologically_free(const ShiftSystem& sys) {
  // Not free iff some symbol is deterministic. Its point has preperiod a and
  // period q, so [a-symbol] lies in the (a + q, a) equalizer. Any other
  // equalizer cylinder reduces (by shifting to the last symbol of a long
  // enough extension) to a deterministic symbol with no larger k and k + l,
  // so the optimum over deterministic symbols is the global optimum.
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (int a = 0; a < sys.alphabet_size(); ++a) {
    const auto sym = static_cast<Symbol>(a);
    if (!is_deterministic(sys, sym)) continue;
    const Point x = forced_point(sys, sym);
    const std::size_t pre = x.preperiod().size();
    const std::size_t per = x.period().size();
    const std::pair<std::size_t, std::size_t> cand{pre + per, pre};
    auto key = [](const auto& kl) { return std::make_pair(kl.first + kl.second, kl.first); };
    if (!best || key(cand) < key(*best)) best = cand;
  }
  FreenessVerdict verdict;
  if (!best) return verdict;
  const auto [k, l] = *best;
  const auto word = first_equalizer_word(sys, k, l, k);
  if (!word) {
    // Contradicts the reduction argument above; never expected.
    throw std::logic_error("deterministic symbol without an equalizer cylinder");
  }
  verdict.free = false;
  verdict.certificate = FreenessCertificate{k, l, Cylinder(sys, *word)};
  return verdict;
}

}  // namespace covlab
