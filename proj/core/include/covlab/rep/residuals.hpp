#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "covlab/rep/operator.hpp"

namespace covlab {

struct ResidualEntry {
  std::string name;
  double value = 0.0;
  std::size_t valid_columns = 0;
  bool vacuous = false;
  bool pass = false;
};

struct ResidualReport {
  RepresentationMode mode = RepresentationMode::Psi;
  std::size_t basis_size = 0;
  double tolerance = 1e-9;
  std::vector<ResidualEntry> entries;

  bool all_pass() const;
  const ResidualEntry& at(const std::string& name) const;
};

struct ResidualConfig {
  /// Covariance and transfer relations are checked for every cylinder
  /// indicator up to this depth (worst case reported).
  int function_depth = 3;
  std::vector<std::size_t> multi_index_lengths{1, 2};
  double tolerance = 1e-9;
};

/// Frobenius residuals of the defining relations on the valid domain:
///   isometry     S*S - I
///   covariance   S M_f - M_{alpha(f)} S
///   transfer     S* M_f S - M_{L(f)}
///   partition    sum_i M_{u_i} S S* M_{u_i} - I
///   multi_index_l  sum_{j in Z^l} M_{u_j} S^l (S*)^l M_{u_j}* - I
ResidualReport relation_residuals(const BasisPtr& basis, const ResidualConfig& config = {});

}  // namespace covlab
