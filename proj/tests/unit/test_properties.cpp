// Seeded property tests over random systems, points, functions and elements.

#include <gtest/gtest.h>

#include "covlab/algebra/transfer.hpp"
#include "covlab/rep/builders.hpp"
#include "covlab/rep/residuals.hpp"
#include "covlab/symbolic/dynamics.hpp"
#include "oracles.hpp"

using namespace covlab;
using covlab::testing::Generator;

namespace {

constexpr int kIterations = 40;

std::vector<ShiftSystem> systems() {
  auto out = covlab::testing::two_symbol_systems();
  out.push_back(ShiftSystem::full_shift(3));
  const auto three = covlab::testing::three_symbol_systems(6, 17);
  out.insert(out.end(), three.begin(), three.end());
  return out;
}

BasisPtr tilde_basis(const ShiftSystem& sys, std::size_t depth, long window) {
  OrbitBasisConfig c;
  c.preimage_depth = depth;
  c.forward_depth = 3;
  c.window = window;
  c.mode = RepresentationMode::PsiTilde;
  return build_orbit_basis(sys, least_point(sys, Cylinder(sys, Word{0})), c);
}

}  // namespace

TEST(SymbolicProperties, PreimagesInvertTheShift) {
  Generator gen(101);
  for (const auto& sys : systems()) {
    for (int i = 0; i < kIterations; ++i) {
      const Point x = gen.point(sys, 4, 4);
      const auto pre = preimages(sys, x);
      EXPECT_EQ(static_cast<int>(pre.size()), sys.in_degree(x.first()));
      for (const Point& y : pre) EXPECT_EQ(shift(sys, y), x);
      for (Symbol a : sys.predecessors(x.first())) EXPECT_EQ(x.prepended(a).shifted(), x);
    }
  }
}

TEST(SymbolicProperties, FiberSizesMultiplyAlongTheTree) {
  Generator gen(102);
  for (const auto& sys : systems()) {
    for (int i = 0; i < 10; ++i) {
      const Point x = gen.point(sys, 3, 3);
      for (std::size_t k = 0; k <= 4; ++k) {
        std::size_t expected = 0;
        // Sum over (T^{k-1})^{-1}(x) of the fiber sizes one level up.
        if (k == 0) {
          expected = 1;
        } else {
          for (const Point& y : preimages_depth(sys, x, k - 1)) expected += sys.in_degree(y.first());
        }
        EXPECT_EQ(preimages_depth(sys, x, k).size(), expected);
        if (sys.is_full_shift()) {
          std::size_t power = 1;
          for (std::size_t j = 0; j < k; ++j) power *= static_cast<std::size_t>(sys.alphabet_size());
          EXPECT_EQ(expected, power);
        }
      }
    }
  }
}

TEST(SymbolicProperties, CanonicalFormIsIdempotent) {
  Generator gen(103);
  const auto sys = ShiftSystem::full_shift(3);
  for (int i = 0; i < 200; ++i) {
    const Point x = gen.point(sys, 5, 4);
    const Point again(x.preperiod(), x.period());
    EXPECT_EQ(again, x);
    // Unrolling the period once more never changes the point.
    Word pre = x.preperiod();
    pre.insert(pre.end(), x.period().begin(), x.period().end());
    Word doubled = x.period();
    doubled.insert(doubled.end(), x.period().begin(), x.period().end());
    EXPECT_EQ(Point(pre, doubled), x);
    for (std::size_t j = 0; j < 40; ++j) EXPECT_EQ(again.at(j), x.at(j));
  }
}

TEST(SymbolicProperties, InvariantUnionsRefine) {
  for (const auto& sys : systems()) {
    for (int m = 1; m <= 3; ++m) {
      const auto found = find_invariant_cylinder_union(sys, m);
      if (!found.cylinders) continue;
      std::vector<Word> refined;
      for (const Word& u : sys.words(m + 1).words()) {
        for (const auto& c : *found.cylinders) {
          if (std::equal(c.word().begin(), c.word().end(), u.begin())) refined.push_back(u);
        }
      }
      EXPECT_TRUE(is_invariant_union(sys, m + 1, refined));
    }
  }
}

TEST(FunctionProperties, AlphaIsAUnitalStarHomomorphism) {
  Generator gen(201);
  for (const auto& sys : systems()) {
    EXPECT_EQ(alpha(LCF::constant(sys, 1)), LCF::constant(sys, 1));
    for (int i = 0; i < kIterations; ++i) {
      const LCF f = gen.function(sys, 3, true);
      const LCF g = gen.function(sys, 3, true);
      EXPECT_EQ(alpha(f * g), alpha(f) * alpha(g));
      EXPECT_EQ(alpha(f + g), alpha(f) + alpha(g));
      EXPECT_EQ(alpha(f.conj()), alpha(f).conj());
    }
  }
}

TEST(FunctionProperties, TransferOperatorIdentity) {
  Generator gen(202);
  for (const auto& sys : systems()) {
    EXPECT_EQ(transfer_L(LCF::constant(sys, 1)), LCF::constant(sys, 1));
    const LCF counts = script_L(LCF::constant(sys, 1));
    for (const QComplex& v : counts.values()) {
      EXPECT_TRUE(v.is_real());
      EXPECT_EQ(v.real().get_den(), 1);
      EXPECT_GE(v.real(), 1);
    }
    for (int i = 0; i < kIterations; ++i) {
      const LCF f = gen.function(sys, 3, true);
      const LCF g = gen.function(sys, 3, true);
      EXPECT_EQ(transfer_L(alpha(f) * g), f * transfer_L(g));
    }
  }
}

TEST(FunctionProperties, CocycleRecursion) {
  for (const auto& sys : systems()) {
    const LCF ind = ind_E(sys);
    for (std::size_t k = 0; k <= 4; ++k) {
      const LCF ik = cocycle_I(sys, k);
      EXPECT_EQ(cocycle_I(sys, k + 1), ind * alpha(ik));
      for (const QComplex& v : ik.values()) {
        EXPECT_EQ(v.real().get_den(), 1);
        EXPECT_GE(v.real(), 1);
      }
    }
  }
}

TEST(FunctionProperties, RefineCoarsenRoundTrip) {
  Generator gen(203);
  for (const auto& sys : systems()) {
    for (int i = 0; i < kIterations; ++i) {
      const LCF f = gen.function(sys, 3, true);
      for (int extra = 0; extra <= 2; ++extra) {
        EXPECT_EQ(f.refine(f.depth() + extra).coarsen(f.depth())->values(), f.values());
      }
    }
  }
}

TEST(CrossedProperties, ConditionalExpectationIsABimoduleMap) {
  Generator gen(301);
  for (const auto& sys : systems()) {
    EXPECT_EQ(conditional_expectation(Element::unit(sys)).rational(), LCF::constant(sys, 1));
    for (int i = 0; i < 15; ++i) {
      const Element b = gen.element(sys, 3, 3, 3, true);
      const LCF f = gen.function(sys, 3, true);
      const LCF g = gen.function(sys, 3, true);
      const Element fbg = multiply(multiply(Element::function(f), b), Element::function(g));
      const LCF gb = *conditional_expectation(b).rational();
      EXPECT_EQ(conditional_expectation(fbg).rational(), f * gb * g);
      EXPECT_EQ(conditional_expectation(adjoint(b)).rational(), gb.conj());
      const QComplex z(Rational(3, 5), Rational(-4, 5));
      EXPECT_EQ(conditional_expectation(gauge_rotate(b, z)).rational(), gb);
    }
  }
}

TEST(CrossedProperties, GaugeAverageIsTheZeroComponent) {
  Generator gen(302);
  for (const auto& sys : systems()) {
    for (int i = 0; i < kIterations; ++i) {
      const Element b = gen.element(sys, 4, 3, 3, true);
      for (std::size_t n = b.max_degree_gap() + 1; n <= 8; ++n) {
        EXPECT_TRUE(identical(gauge_average(b, n), fourier_component(b, 0))) << "N=" << n;
      }
    }
  }
}

TEST(CrossedProperties, AdjointIsAnInvolution) {
  Generator gen(303);
  for (const auto& sys : systems()) {
    EXPECT_TRUE(identical(multiply(adjoint(Element::generator(sys)), Element::generator(sys)), Element::unit(sys)));
    for (int i = 0; i < kIterations; ++i) {
      const Element b = gen.element(sys, 3, 3, 3, true);
      EXPECT_TRUE(identical(adjoint(adjoint(b)), b));
    }
  }
}

TEST(RepresentationProperties, MultiplicativeAndAssociative) {
  Generator gen(401);
  for (const auto& sys : {ShiftSystem::full_shift(2), covlab::testing::trap(), ShiftSystem::full_shift(3)}) {
    const auto basis = tilde_basis(sys, sys.alphabet_size() == 3 ? 5 : 7, 7);
    for (int i = 0; i < 10; ++i) {
      const Element a = gen.element(sys, 2, 3, 3, true);
      const Element b = gen.element(sys, 2, 3, 3, true);
      const Element c = gen.element(sys, 2, 3, 3, true);
      const Operator ra = represent(a, basis);
      const Operator rb = represent(b, basis);
      const Operator product = ra * rb;
      EXPECT_LE(residual(represent(multiply(a, b), basis), product), 1e-9);
      const Operator left = represent(multiply(multiply(a, b), c), basis);
      const Operator right = represent(multiply(a, multiply(b, c)), basis);
      EXPECT_LE(residual(left, right * represent(Element::unit(sys), basis)), 1e-9);
      EXPECT_GT(product.valid_count(), 0u);
    }
  }
}

TEST(RepresentationProperties, GaugeCovariance) {
  Generator gen(402);
  const auto sys = ShiftSystem::full_shift(2);
  const auto basis = tilde_basis(sys, 6, 5);
  for (int i = 0; i < 10; ++i) {
    const Element e = gen.element(sys, 3, 3, 3, true);
    const Operator r = represent(e, basis);
    for (int j = 0; j < 8; ++j) {
      const Complex z = std::polar(1.0, M_PI * j / 4);
      const Operator lhs = build_U(basis, z) * r * build_U(basis, std::conj(z));
      EXPECT_LE(residual(lhs, represent(gauge_rotate(e, z), basis)), 1e-9);
    }
  }
}

TEST(RepresentationProperties, RelationsHoldOnRandomSystems) {
  for (const auto& sys : systems()) {
    OrbitBasisConfig c;
    c.preimage_depth = 3;
    c.forward_depth = 1;
    for (auto mode : {RepresentationMode::Psi, RepresentationMode::PsiTilde}) {
      c.mode = mode;
      const auto basis = build_orbit_basis(sys, least_point(sys, Cylinder(sys, Word{0})), c);
      const auto report = relation_residuals(basis);
      for (const auto& e : report.entries) EXPECT_LE(e.value, 1e-9) << e.name;
    }
  }
}
