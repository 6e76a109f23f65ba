#include <gtest/gtest.h>

#include "covlab/algebra/transfer.hpp"
#include "covlab/crossed/cyclotomic.hpp"
#include "covlab/crossed/element.hpp"
#include "covlab/errors.hpp"
#include "covlab/rep/builders.hpp"
#include "covlab/symbolic/dynamics.hpp"
#include "oracles.hpp"

using namespace covlab;
using covlab::testing::trap;

namespace {

Word W(const std::string& s) { return parse_word(s, kMaxAlphabet); }

BasisPtr tilde_basis(const ShiftSystem& sys, std::size_t depth = 5, long window = 4) {
  OrbitBasisConfig c;
  c.preimage_depth = depth;
  c.forward_depth = 2;
  c.window = window;
  c.mode = RepresentationMode::PsiTilde;
  return build_orbit_basis(sys, least_point(sys, Cylinder(sys, W("0"))), c);
}

double rep_distance(const Element& a, const Element& b, const BasisPtr& basis) {
  return residual(represent(a, basis), represent(b, basis));
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootOfUnityAverages) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (long d = -14; d <= 14; ++d) {
      EXPECT_EQ(root_of_unity_average(d, n), Rational(d % static_cast<long>(n) == 0 ? 1 : 0))
          << "d=" << d << " n=" << n;
    }
  }
}

TEST(Element, AdjointExamples) {
  const auto fs = ShiftSystem::full_shift(2);
  const Element s = Element::generator(fs);
  const Element s_adj = adjoint(s);
  ASSERT_EQ(s_adj.terms().size(), 1u);
  EXPECT_EQ(s_adj.terms()[0].k, 0u);
  EXPECT_EQ(s_adj.terms()[0].l, 1u);
  const LCF f = LCF::indicator(fs, W("01"));
  const Element w = multiply(multiply(Element::function(f), multiply(s, s_adj)), Element::function(f));
  EXPECT_LE(rep_distance(adjoint(w), w, tilde_basis(fs)), 1e-12);
}

TEST(Element, MultiplyExamples) {
  const auto fs = ShiftSystem::full_shift(2);
  const Element s = Element::generator(fs);
  const LCF f = LCF::indicator(fs, W("0"));
  const Element sf = multiply(s, Element::function(f));
  ASSERT_EQ(sf.terms().size(), 1u);
  EXPECT_EQ(sf.terms()[0].f.rational(), alpha(f));
  EXPECT_EQ(sf.terms()[0].k, 1u);
  EXPECT_EQ(sf.terms()[0].l, 0u);
  EXPECT_TRUE(identical(multiply(adjoint(s), s), Element::unit(fs)));

  const Element a = Element::monomial(Coefficient::one(fs), 1, 0, f);
  const Element b = Element::monomial(f, 0, 1, Coefficient::one(fs));
  const Element ab = multiply(a, b);
  ASSERT_EQ(ab.terms().size(), 1u);
  EXPECT_EQ(ab.terms()[0].k, 1u);
  EXPECT_EQ(ab.terms()[0].l, 1u);
  const Element expected = Element::monomial(alpha(f), 1, 1, Coefficient::one(fs));
  EXPECT_LE(rep_distance(ab, expected, tilde_basis(fs)), 1e-9);
}

TEST(Element, MultiplyDropsExactZeros) {
  const auto t = trap();
  const Element a = Element::function(LCF::indicator(t, W("0")));
  const Element b = Element::function(LCF::indicator(t, W("1")));
  EXPECT_TRUE(multiply(a, b).terms().empty());
}

TEST(ConditionalExpectation, Examples) {
  const auto fs = ShiftSystem::full_shift(2);
  const Element s = Element::generator(fs);
  EXPECT_EQ(conditional_expectation(multiply(s, adjoint(s))).rational(), LCF::constant(fs, QComplex(Rational(1, 2))));
  const LCF f = LCF::indicator(fs, W("1"));
  EXPECT_TRUE(conditional_expectation(Element::monomial(f, 2, 1, f)).is_zero());
  const LCF g = LCF::tabulate(fs, 2, [](const Word& w) { return QComplex(w[0] + 2 * w[1] + 1); });
  EXPECT_EQ(conditional_expectation(Element::function(g)).rational(), g);
  EXPECT_EQ(conditional_expectation(Element::unit(fs)).rational(), LCF::constant(fs, 1));
}

TEST(Gauge, Examples) {
  const auto fs = ShiftSystem::full_shift(2);
  const Element s = Element::generator(fs);
  const Element ss = multiply(s, adjoint(s));
  const Element rotated = gauge_rotate(s, QComplex::i());
  EXPECT_EQ(rotated.terms()[0].f.rational(), LCF::constant(fs, QComplex::i()));
  EXPECT_TRUE(identical(gauge_rotate(ss, QComplex(Rational(3, 5), Rational(4, 5))), ss));
  EXPECT_TRUE(identical(gauge_rotate(s + ss, QComplex(1)), s + ss));
  EXPECT_THROW(gauge_rotate(s, QComplex(2)), InputError);
  EXPECT_THROW(gauge_rotate(s, Complex(0.5, 0.0)), InputError);
}

TEST(Fourier, Examples) {
  const auto fs = ShiftSystem::full_shift(2);
  const Element s = Element::generator(fs);
  const Element ss = multiply(s, adjoint(s));
  EXPECT_TRUE(identical(fourier_component(s + ss, 0), ss));
  EXPECT_TRUE(identical(gauge_average(s + ss, 3), ss));
  const Element f = Element::function(LCF::indicator(fs, W("0")));
  EXPECT_TRUE(fourier_component(f, 2).terms().empty());
  EXPECT_TRUE(fourier_component(f, -1).terms().empty());
  EXPECT_THROW(gauge_average(s, 1), InputError);
}

TEST(Fourier, GaugeAverageMatchesFloatingAverage) {
  const auto fs = ShiftSystem::full_shift(2);
  const BasisPtr basis = tilde_basis(fs);
  covlab::testing::Generator gen(21);
  for (int i = 0; i < 10; ++i) {
    const Element e = gen.element(fs, 3, 3, 2, true);
    const std::size_t n = 5;
    Operator avg = Operator::zero(basis);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = std::polar(1.0, 2 * M_PI * static_cast<double>(j) / n);
      avg = avg + (1.0 / n) * represent(gauge_rotate(e, z), basis);
    }
    EXPECT_LE(residual(avg, represent(gauge_average(e, n), basis)), 1e-9);
  }
}
