#include "covlab/rep/builders.hpp"

#include <cmath>
#include <map>

#include "covlab/algebra/transfer.hpp"
#include "covlab/errors.hpp"

namespace covlab {

namespace {

using Triplet = Eigen::Triplet<Complex>;

// I_k(x)^{-1/2} for every basis point, computed once per k.
class Normalizers {
 public:
  explicit Normalizers(const BasisSpec& basis) : basis_(basis) {}

  const std::vector<double>& inv_sqrt_I(std::size_t k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    const LCF ik = cocycle_I(basis_.system(), k);
    std::vector<double> values(basis_.point_count());
    for (std::size_t p = 0; p < values.size(); ++p) {
      values[p] = 1.0 / std::sqrt(ik.at(basis_.point(p)).real().get_d());
    }
    return cache_.emplace(k, std::move(values)).first->second;
  }

 private:
  const BasisSpec& basis_;
  std::map<std::size_t, std::vector<double>> cache_;
};

std::vector<Complex> tabulate_on_points(const Coefficient& f, const BasisSpec& basis) {
  if (!(f.system() == basis.system())) throw InputError("function and basis live on different systems");
  std::vector<Complex> values(basis.point_count());
  for (std::size_t p = 0; p < values.size(); ++p) values[p] = f.at(basis.point(p));
  return values;
}

SparseMatrix assemble(const BasisSpec& basis, const std::vector<Triplet>& triplets) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

struct MonomialData {
  std::size_t k;
  std::size_t l;
  std::vector<Complex> f;
  std::vector<Complex> g;
};

// Writes the columns of f s^k (s*)^l g into `triplets`; clears validity
// where the formula leaves the basis.
void add_monomial(const BasisSpec& basis, Normalizers& norms, const MonomialData& m,
                  std::vector<Triplet>& triplets, std::vector<bool>& valid) {
  const auto& nk = norms.inv_sqrt_I(m.k);
  const auto& nl = norms.inv_sqrt_I(m.l);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const std::size_t p = basis.point_of(idx);
    const long n = basis.layer_of(idx);
    const std::size_t q = basis.image_power(p, m.l);
    const long target = basis.mode() == RepresentationMode::Psi
                            ? 0
                            : n - static_cast<long>(m.l) + static_cast<long>(m.k);
    if (static_cast<std::size_t>(basis.point_validity(q)) < m.k || !basis.in_window(target)) {
      valid[idx] = false;
      continue;
    }
    const Complex right = nl[p] * m.g[p];
    if (right == Complex{}) continue;
    for (std::size_t y : basis.preimages_depth(q, m.k)) {
      const Complex v = m.f[y] * nk[y] * right;
      if (v != Complex{}) {
        triplets.emplace_back(static_cast<Eigen::Index>(basis.index(y, target)),
                              static_cast<Eigen::Index>(idx), v);
      }
    }
  }
}

}  // namespace

Operator build_M(const Coefficient& f, const BasisPtr& basis) {
  const auto values = tabulate_on_points(f, *basis);
  std::vector<Triplet> triplets;
  for (std::size_t idx = 0; idx < basis->size(); ++idx) {
    const Complex v = values[basis->point_of(idx)];
    if (v != Complex{}) triplets.emplace_back(idx, idx, v);
  }
  return Operator(basis, assemble(*basis, triplets), std::vector<bool>(basis->size(), true));
}

Operator build_S(const BasisPtr& basis) { return build_S_power(basis, 1); }

Operator build_S_power(const BasisPtr& basis, std::size_t k) {
  Normalizers norms(*basis);
  MonomialData m{k, 0, std::vector<Complex>(basis->point_count(), 1.0),
                 std::vector<Complex>(basis->point_count(), 1.0)};
  std::vector<Triplet> triplets;
  std::vector<bool> valid(basis->size(), true);
  add_monomial(*basis, norms, m, triplets, valid);
  return Operator(basis, assemble(*basis, triplets), std::move(valid));
}

Operator build_S_adjoint_power(const BasisPtr& basis, std::size_t k) {
  Normalizers norms(*basis);
  MonomialData m{0, k, std::vector<Complex>(basis->point_count(), 1.0),
                 std::vector<Complex>(basis->point_count(), 1.0)};
  std::vector<Triplet> triplets;
  std::vector<bool> valid(basis->size(), true);
  add_monomial(*basis, norms, m, triplets, valid);
  return Operator(basis, assemble(*basis, triplets), std::move(valid));
}

Operator build_U(const BasisPtr& basis, const Complex& z) {
  if (basis->mode() != RepresentationMode::PsiTilde) {
    throw UnsupportedModeError("gauge unitaries act on the psi-tilde space only");
  }
  if (std::abs(std::abs(z) - 1.0) > 1e-12) throw InputError("gauge parameter must have modulus one");
  std::vector<Triplet> triplets;
  for (std::size_t idx = 0; idx < basis->size(); ++idx) {
    triplets.emplace_back(idx, idx, std::pow(z, static_cast<double>(basis->layer_of(idx))));
  }
  return Operator(basis, assemble(*basis, triplets), std::vector<bool>(basis->size(), true));
}

Operator represent(const Element& e, const BasisPtr& basis) {
  if (!(e.system() == basis->system())) throw InputError("element and basis live on different systems");
  Normalizers norms(*basis);
  std::vector<Triplet> triplets;
  std::vector<bool> valid(basis->size(), true);
  for (const Monomial& t : e.terms()) {
    MonomialData m{t.k, t.l, tabulate_on_points(t.f, *basis), tabulate_on_points(t.g, *basis)};
    add_monomial(*basis, norms, m, triplets, valid);
  }
  return Operator(basis, assemble(*basis, triplets), std::move(valid));
}

}  // namespace covlab
