#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gkagc/field.hpp"

using namespace gkagc;

TEST_CASE("GF(729) uses the fixed modulus and its root satisfies it") {
  const auto F = Field::gf729();
  CHECK(F->size() == 729);
  // omega is the smallest full-order encoding, which is the class of X
  const Field::Elt w = F->generator();
  CHECK(w == 3);
  // w^6 = w^4 - w^2 + w + 1
  const Field::Elt rhs = F->add(F->sub(F->pow(w, 4), F->pow(w, 2)), F->add(w, 1));
  CHECK(F->pow(w, 6) == rhs);
  CHECK(F->pow(w, 728) == 1);
}

TEST_CASE("prime field GF(2)") {
  const auto F = Field::create(2, 1, {1, 1});
  CHECK(F->size() == 2);
  CHECK(F->add(1, 1) == 0);
  CHECK(F->mul(1, 1) == 1);
  CHECK(F->generator() == 1);
}

TEST_CASE("reducible modulus is rejected") {
  // X^6 + 1 = (X^3 + 1)^2 over GF(2)
  CHECK_THROWS_WITH_AS(Field::create(2, 6, {1, 0, 0, 0, 0, 0, 1}), "not irreducible",
                       std::invalid_argument);
  CHECK_THROWS_AS(Field::create(2, 6, {1, 1, 0, 1, 1, 0, 0}), std::invalid_argument);  // non-monic
  CHECK_THROWS_AS(Field::create(5, 1, {1, 1}), std::invalid_argument);  // characteristic
}

TEST_CASE("inverse and cancellation") {
  const auto F = Field::gf729();
  const Field::Elt w = F->generator();
  CHECK(F->mul(F->pow(w, 11), F->inv(F->pow(w, 11))) == 1);
  CHECK_THROWS_WITH_AS(F->inv(0), "division by zero", std::invalid_argument);

  const auto G = Field::gf64();
  for (std::uint32_t a = 1; a < 64; ++a) CHECK(G->mul(Field::Elt(a), G->inv(Field::Elt(a))) == 1);

  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(1, 728);
  for (int i = 0; i < 10000; ++i) {
    const Field::Elt a = Field::Elt(pick(rng));
    CHECK(F->mul(a, F->inv(a)) == 1);
  }
}

TEST_CASE("element encodings enumerate the field exactly once") {
  const auto F = Field::gf64();
  std::set<Field::Elt> seen;
  for (std::uint32_t e = 0; e < F->size(); ++e) {
    const auto c = F->coords(Field::Elt(e));
    CHECK(c.size() == 6);
    CHECK(F->from_coords(c) == e);
    seen.insert(Field::Elt(e));
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("distributivity, exhaustive on GF(8)") {
  const auto F = Field::create(2, 3, {1, 1, 0, 1});
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      for (std::uint32_t c = 0; c < 8; ++c)
        CHECK(F->mul(Field::Elt(a), F->add(Field::Elt(b), Field::Elt(c))) ==
              F->add(F->mul(Field::Elt(a), Field::Elt(b)), F->mul(Field::Elt(a), Field::Elt(c))));
}

TEST_CASE("distributivity, sampled on GF(729)") {
  const auto F = Field::gf729();
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> pick(0, 728);
  for (int i = 0; i < 100000; ++i) {
    const Field::Elt a = Field::Elt(pick(rng)), b = Field::Elt(pick(rng)),
                     c = Field::Elt(pick(rng));
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
  }
}

TEST_CASE("frobenius") {
  const auto F64 = Field::gf64();
  const auto F729 = Field::gf729();
  for (int r : {0, 1, 5, 6, 13}) CHECK(F64->frobenius(0, r) == 0);
  for (std::uint32_t a = 0; a < 64; ++a) CHECK(F64->frobenius(Field::Elt(a), 6) == a);
  // frobenius(a,3) = a^27, checked against square-and-multiply for all elements
  for (std::uint32_t a = 0; a < 729; ++a) {
    Field::Elt direct = 1;
    for (int i = 0; i < 27; ++i) direct = F729->mul(direct, Field::Elt(a));
    if (a == 0) direct = 0;
    CHECK(F729->frobenius(Field::Elt(a), 3) == direct);
  }
}

TEST_CASE("mixed field specs are rejected") {
  FieldElement a(Field::gf64(), 5);
  FieldElement b(Field::gf729(), 5);
  CHECK_THROWS_WITH_AS((void)(a + b), "mixed field specs", std::invalid_argument);
  FieldElement c(Field::gf64(), 9);
  CHECK((a * c).value() == Field::gf64()->mul(5, 9));
}

TEST_CASE("generator has full order and is deterministic") {
  const auto F = Field::gf64();
  CHECK(F->generator() == 2);  // the class of X for a primitive modulus
  CHECK(F->order(F->generator()) == 63);
  CHECK(F->pow(F->generator(), 63) == 1);
  for (std::uint32_t e = 1; e < F->generator(); ++e) CHECK(F->order(Field::Elt(e)) < 63u);
}
