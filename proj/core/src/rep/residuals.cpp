#include "covlab/rep/residuals.hpp"

#include <algorithm>
#include <limits>

#include "covlab/algebra/transfer.hpp"
#include "covlab/errors.hpp"
#include "covlab/rep/builders.hpp"

namespace covlab {

namespace {

class Accumulator {
 public:
  Accumulator(std::string name, double tolerance) : tolerance_(tolerance) { entry_.name = std::move(name); }

  void add(const Operator& lhs, const Operator& rhs) {
    const Operator diff = lhs - rhs;
    entry_.value = std::max(entry_.value, diff.frobenius_on_valid());
    min_valid_ = std::min(min_valid_, diff.valid_count());
  }

  ResidualEntry finish() {
    entry_.valid_columns = min_valid_ == std::numeric_limits<std::size_t>::max() ? 0 : min_valid_;
    entry_.vacuous = entry_.valid_columns == 0;
    entry_.pass = entry_.value <= tolerance_;
    return entry_;
  }

 private:
  ResidualEntry entry_;
  double tolerance_;
  std::size_t min_valid_ = std::numeric_limits<std::size_t>::max();
};

std::vector<LCF> test_indicators(const ShiftSystem& sys, int max_depth) {
  std::vector<LCF> out;
  for (int depth = 1; depth <= max_depth; ++depth) {
    for (const Word& w : sys.words(depth).words()) out.push_back(LCF::indicator(sys, w));
  }
  return out;
}

void all_words(const ShiftSystem& sys, std::size_t length, Word& prefix, std::vector<Word>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (int a = 0; a < sys.alphabet_size(); ++a) {
    prefix.push_back(static_cast<Symbol>(a));
    all_words(sys, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool ResidualReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ResidualEntry& e) { return e.pass; });
}

const ResidualEntry& ResidualReport::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw InputError("no residual named " + name);
}

ResidualReport relation_residuals(const BasisPtr& basis, const ResidualConfig& config) {
  if (config.function_depth < 1) throw InputError("function depth must be at least 1");
  const ShiftSystem& sys = basis->system();
  ResidualReport report;
  report.mode = basis->mode();
  report.basis_size = basis->size();
  report.tolerance = config.tolerance;

  const Operator id = Operator::identity(basis);
  const Operator s = build_S(basis);
  const Operator s_adj = build_S_adjoint_power(basis, 1);

  Accumulator isometry("isometry", config.tolerance);
  isometry.add(s_adj * s, id);
  report.entries.push_back(isometry.finish());

  Accumulator covariance("covariance", config.tolerance);
  Accumulator transfer("transfer", config.tolerance);
  for (const LCF& h : test_indicators(sys, config.function_depth)) {
    const Operator mh = build_M(h, basis);
    covariance.add(s * mh, build_M(alpha(h), basis) * s);
    transfer.add(s_adj * mh * s, build_M(transfer_L(h), basis));
  }
  report.entries.push_back(covariance.finish());
  report.entries.push_back(transfer.finish());

  Accumulator partition("partition", config.tolerance);
  {
    Operator sum = Operator::zero(basis);
    const Operator ss = s * s_adj;
    for (const PartitionElement& p : partition_of_unity(sys)) {
      const Operator mu = build_M(p.u, basis);
      sum = sum + mu * ss * mu;
    }
    partition.add(sum, id);
  }
  report.entries.push_back(partition.finish());

  for (std::size_t length : config.multi_index_lengths) {
    if (length == 0) throw InputError("multi-index length must be positive");
    Accumulator acc("multi_index_" + std::to_string(length), config.tolerance);
    const Operator proj = build_S_power(basis, length) * build_S_adjoint_power(basis, length);
    Operator sum = Operator::zero(basis);
    std::vector<Word> indices;
    Word prefix;
    all_words(sys, length, prefix, indices);
    for (const Word& j : indices) {
      const Coefficient u = multi_index_u(sys, j);
      sum = sum + build_M(u, basis) * proj * build_M(u.conj(), basis);
    }
    acc.add(sum, id);
    report.entries.push_back(acc.finish());
  }
  return report;
}

}  // namespace covlab
