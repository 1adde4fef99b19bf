#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "scrolls/binary_form.hpp"
#include "scrolls/error.hpp"

using namespace scrolls;

namespace {

const PrimeField F;

BinaryForm mono(int xe, int ye, PrimeField::Elem c = 1) { return BinaryForm::monomial(F, xe, ye, c); }

BinaryForm line(const PrimeField& field, PrimeField::Elem lambda) {
  return BinaryForm(field, 1, {field.neg(lambda), 1});
}

std::vector<int> entries(const MultiplicityMultiset& m) { return {m.entries().begin(), m.entries().end()}; }

}  // namespace

TEST(PrimeField, Basics) {
  EXPECT_EQ(F.characteristic(), 1000003u);
  EXPECT_EQ(F.mul(F.inv(12345), 12345), 1u);
  EXPECT_EQ(F.reduce(-1), 1000002u);
  EXPECT_EQ(F.centered(1000002), -1);
  EXPECT_EQ(F.pow(2, 1000002), 1u);
  EXPECT_THROW(PrimeField(1000001), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(4294967311ull), Error);
  EXPECT_TRUE(is_prime(4294967291ull));
}

TEST(BinaryForm, Arithmetic) {
  EXPECT_EQ(form_arithmetic(FormOp::Mul, mono(1, 3), mono(1, 0)), mono(2, 3));
  EXPECT_EQ(form_arithmetic(FormOp::Mul, mono(0, 2), mono(0, 4)), mono(0, 6));
  auto z = form_arithmetic(FormOp::Add, mono(2, 0), mono(2, 0, F.characteristic() - 1));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), 2);
  EXPECT_THROW(form_arithmetic(FormOp::Add, mono(2, 0), mono(1, 0)), Error);
  EXPECT_EQ(mono(3, 2).x_multiplicity(), 3);
}

TEST(BinaryForm, TextRoundTrip) {
  auto f = mono(2, 3) + mono(1, 4, 2) - mono(0, 5);
  EXPECT_EQ(f.to_string(), "x^2*y^3 + 2*x*y^4 - y^5");
  EXPECT_EQ(BinaryForm::parse(F, 5, f.to_string()), f);
  EXPECT_EQ(BinaryForm::parse(F, 3, "0"), BinaryForm(F, 3));
  EXPECT_EQ(BinaryForm::parse(F, 1, "-y"), mono(0, 1).negated());
  EXPECT_EQ(BinaryForm::parse(F, 2, "3*x*y + x*y"), mono(1, 1, 4));
  EXPECT_THROW(BinaryForm::parse(F, 2, "x^2 + y"), Error);
  EXPECT_THROW(BinaryForm::parse(F, 2, "x^2 +"), Error);
  EXPECT_THROW(BinaryForm::parse(F, 2, "z^2"), Error);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto r = random_form(F, static_cast<int>(rng() % 9), rng);
    EXPECT_EQ(BinaryForm::parse(F, r.degree(), r.to_string()), r);
  }
}

TEST(Gcd, Examples) {
  std::vector<BinaryForm> ex = {mono(2, 3), mono(2, 5), mono(1, 9)};
  EXPECT_EQ(gcd_of_forms(ex), mono(1, 3));
  std::vector<BinaryForm> coprime = {mono(1, 0), mono(0, 1)};
  EXPECT_EQ(gcd_of_forms(coprime).degree(), 0);
  std::vector<BinaryForm> six = {BinaryForm(F, 9), mono(10, 0), mono(8, 3), mono(6, 5), mono(6, 8), mono(0, 14)};
  EXPECT_EQ(gcd_of_forms(six).degree(), 0);
  std::vector<BinaryForm> zeros = {BinaryForm(F, 2), BinaryForm(F, 3)};
  EXPECT_THROW(gcd_of_forms(zeros), Error);
}

TEST(Gcd, PlantedCommonFactor) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dg = static_cast<int>(rng() % 4);
    BinaryForm g = random_form(F, dg, rng);
    if (g.is_zero()) continue;
    std::vector<BinaryForm> forms;
    for (int i = 0; i < 3; ++i) forms.push_back(g * random_form(F, 1 + static_cast<int>(rng() % 5), rng));
    BinaryForm h = gcd_of_forms(forms);
    EXPECT_EQ(h, g.normalized());
    for (auto& f : forms) EXPECT_NO_THROW(exact_divide(f, h));
  }
}

TEST(ExactDivide, Examples) {
  EXPECT_EQ(exact_divide(mono(2, 3), mono(1, 3)), mono(1, 0));
  EXPECT_EQ(exact_divide(mono(0, 14), mono(0, 6)), mono(0, 8));
  try {
    exact_divide(mono(2, 0), mono(0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto f = random_form(F, 4, rng), g = random_form(F, 3, rng);
    if (g.is_zero()) continue;
    EXPECT_EQ(exact_divide(f * g, g), f);
  }
}

TEST(Squarefree, Examples) {
  EXPECT_EQ(entries(squarefree_multiplicities(mono(1, 3))), (std::vector<int>{1, 3}));
  EXPECT_EQ(entries(squarefree_multiplicities(mono(2, 2))), (std::vector<int>{2, 2}));
  BinaryForm xy = mono(1, 0) + mono(0, 1);
  BinaryForm p5 = xy * xy * xy * xy * xy;
  EXPECT_EQ(entries(squarefree_multiplicities(p5)), (std::vector<int>{5}));
  EXPECT_TRUE(squarefree_multiplicities(mono(0, 0, 4)).empty());
  PrimeField small(5);
  EXPECT_THROW(squarefree_decomposition(BinaryForm::monomial(small, 5, 0)), Error);
}

TEST(Squarefree, ReconstructsTheForm) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryForm g = random_form(F, 1, rng) * random_form(F, 1, rng);
    g = g * g * random_form(F, 2, rng) * mono(static_cast<int>(rng() % 3), 0);
    if (g.is_zero()) continue;
    BinaryForm prod = mono(0, 0);
    int deg = 0;
    for (const auto& sf : squarefree_decomposition(g)) {
      for (int k = 0; k < sf.multiplicity; ++k) prod = prod * sf.factor;
      deg += sf.multiplicity * sf.factor.degree();
    }
    EXPECT_EQ(deg, g.degree());
    EXPECT_EQ(prod.normalized(), g.normalized());
  }
}

TEST(Squarefree, MatchesRootCountingOverSmallField) {
  const PrimeField small(101);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    BinaryForm g = BinaryForm::monomial(small, 0, 0, 1 + static_cast<PrimeField::Elem>(rng() % 100));
    const int factors = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < factors; ++k) {
      const auto r = rng() % 102;
      g = g * (r == 101 ? BinaryForm::monomial(small, 1, 0) : line(small, static_cast<PrimeField::Elem>(r)));
    }
    EXPECT_EQ(entries(squarefree_multiplicities(g)), oracle::root_multiplicities(g)) << g.to_string();
  }
}

TEST(RandomForm, Deterministic) {
  EXPECT_EQ(random_form(F, 4, 42), random_form(F, 4, 42));
  EXPECT_NE(random_form(F, 4, 42), random_form(F, 4, 43));
  int nonzero = 0;
  for (std::uint64_t s = 0; s < 200; ++s) nonzero += !random_form(F, 0, s).is_zero();
  EXPECT_EQ(nonzero, 200);
  int coprime = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    std::vector<BinaryForm> pair = {random_form(F, 5, 2 * s), random_form(F, 6, 2 * s + 1)};
    coprime += gcd_of_forms(pair).degree() == 0;
  }
  EXPECT_GE(coprime, 99);
}
