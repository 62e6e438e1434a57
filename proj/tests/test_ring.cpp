#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace modlink;
using fixtures::Rand;

TEST_CASE("prime field arithmetic") {
  PrimeField F(32003);
  CHECK(F.modulus() == 32003);
  CHECK(F.add(32000, 10) == 7);
  CHECK(F.from_int(-1) == 32002);
  Rand rnd(11);
  for (int i = 0; i < 200; ++i) {
    Fp a = static_cast<Fp>(1 + rnd.next() % 32002);
    CHECK(F.mul(a, F.inv(a)) == 1);
  }
  CHECK_THROWS_AS(PrimeField(32004), Error);
  CHECK_THROWS_AS(F.inv(0), Error);
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
  for (OrderKind kind : {OrderKind::Grevlex, OrderKind::Lex}) {
    RingPtr R = PolynomialRing::make(PrimeField(32003), {"x", "y", "z"}, kind);
    Rand rnd(kind == OrderKind::Grevlex ? 5 : 6);
    auto random_mono = [&] {
      Monomial m = Monomial::one(3);
      for (int d = 0; d < 4; ++d)
        if (rnd.next() % 2) m[rnd.next() % 3] += 1;
      return m;
    };
    for (int i = 0; i < 300; ++i) {
      Monomial a = random_mono(), b = random_mono(), c = random_mono();
      int ab = R->mono_cmp(a, b);
      CHECK(R->mono_cmp(b, a) == -ab);
      if (ab == 0) CHECK(a == b);  // total
      if (ab < 0) CHECK(R->mono_cmp(a * c, b * c) < 0);  // multiplicative
      if (!a.is_one()) CHECK(R->mono_cmp(Monomial::one(3), a) < 0);
    }
  }
}

TEST_CASE("polynomial text grammar") {
  RingPtr R = fixtures::plane();
  Polynomial f = R->parse("3*x^2*y - y + 1");
  CHECK(f.nterms() == 3);
  CHECK(f == R->parse("  3 * x^2 * y-y+ 1 "));
  CHECK(R->parse(f.str()) == f);
  CHECK(R->parse("0").is_zero());
  CHECK(R->parse("x - x").is_zero());
  CHECK_THROWS_AS(R->parse("q + 1"), Error);
  CHECK_THROWS_AS(R->parse("x +"), Error);

  Rand rnd(77);
  for (int i = 0; i < 100; ++i) {
    Polynomial g = rnd.poly(R, 5, 4);
    CHECK(R->parse(g.str()) == g);
  }
}

TEST_CASE("normal form examples") {
  RingPtr R = fixtures::plane();
  SUBCASE("hand division") {
    Polynomial r = normal_form(R->parse("x^2*y + y"), {R->parse("x*y - y")});
    CHECK(r == R->parse("2*y"));
  }
  SUBCASE("empty divisor set") {
    Polynomial f = R->parse("x^2 + y");
    CHECK(normal_form(f, {}) == f);
  }
  SUBCASE("membership in a monomial ideal") {
    auto gb = buchberger({R->parse("x*y")}, R);
    CHECK(normal_form(R->parse("x^2*y"), gb).is_zero());
  }
  SUBCASE("ring mismatch is an error") {
    RingPtr other = fixtures::line();
    CHECK_THROWS_AS(normal_form(R->parse("x"), {other->parse("u")}), Error);
  }
}

TEST_CASE("normal form is idempotent and k-linear against Groebner bases") {
  RingPtr R = fixtures::space();
  Rand rnd(123);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    int ngens = 1 + static_cast<int>(rnd.next() % 3);
    for (int i = 0; i < ngens; ++i) gens.push_back(rnd.poly(R, 3, 3));
    auto gb = buchberger(gens, R);
    for (int i = 0; i < 10; ++i) {
      Polynomial f = rnd.poly(R, 4, 3);
      Polynomial g = rnd.poly(R, 4, 3);
      Fp a = static_cast<Fp>(rnd.next() % 32003);
      Fp b = static_cast<Fp>(rnd.next() % 32003);
      Polynomial nf = normal_form(f, gb);
      CHECK(normal_form(nf, gb) == nf);
      Polynomial lhs = normal_form(f.scaled(a) + g.scaled(b), gb);
      Polynomial rhs = normal_form(f, gb).scaled(a) + normal_form(g, gb).scaled(b);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("buchberger worked examples") {
  RingPtr R = fixtures::plane();
  SUBCASE("one new S-polynomial") {
    auto gb = buchberger({R->parse("x^2"), R->parse("x*y + y^2")}, R);
    REQUIRE(gb.size() == 3);
    // sorted ascending by lead monomial
    CHECK(gb[0] == R->parse("x*y + y^2"));
    CHECK(gb[1] == R->parse("x^2"));
    CHECK(gb[2] == R->parse("y^3"));
  }
  SUBCASE("monomial ideals are their own basis") {
    auto gb = buchberger({R->parse("x*y"), R->parse("x^2")}, R);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == R->parse("x*y"));
    CHECK(gb[1] == R->parse("x^2"));
  }
  SUBCASE("zero ideal") { CHECK(buchberger({}, R).empty()); }
}

TEST_CASE("buchberger criterion and permutation invariance on random ideals") {
  RingPtr R = fixtures::space();
  Rand rnd(2024);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    int ngens = 2 + static_cast<int>(rnd.next() % 2);
    for (int i = 0; i < ngens; ++i) gens.push_back(rnd.poly(R, 3, 3));
    auto gb = buchberger(gens, R);
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j)
        CHECK(normal_form(spolynomial(gb[i], gb[j]), gb).is_zero());
    // generators permuted: identical reduced basis
    std::vector<Polynomial> rev(gens.rbegin(), gens.rend());
    auto gb2 = buchberger(rev, R);
    REQUIRE(gb.size() == gb2.size());
    for (std::size_t i = 0; i < gb.size(); ++i) CHECK(gb[i] == gb2[i]);
    // every input generator reduces to zero
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("ideal intersection") {
  RingPtr R = fixtures::plane();
  SUBCASE("coprime principal ideals") {
    Ideal meet = ideal_intersection(Ideal(R, {R->parse("x")}), Ideal(R, {R->parse("y")}));
    CHECK(meet.same_ideal(Ideal(R, {R->parse("x*y")})));
  }
  SUBCASE("idempotence") {
    Ideal I(R, {R->parse("x^2 + y"), R->parse("x*y")});
    CHECK(ideal_intersection(I, I).same_ideal(I));
  }
  SUBCASE("zero ideal") {
    Ideal z(R, {});
    CHECK(ideal_intersection(z, Ideal(R, {R->parse("x")})).is_zero());
  }
  SUBCASE("soundness on random ideals") {
    Rand rnd(9);
    for (int t = 0; t < 10; ++t) {
      Ideal I(R, {rnd.poly(R, 2, 2), rnd.poly(R, 2, 2)});
      Ideal J(R, {rnd.poly(R, 2, 2)});
      Ideal meet = ideal_intersection(I, J);
      for (const auto& g : meet.gens()) {
        CHECK(I.contains(g));
        CHECK(J.contains(g));
      }
    }
  }
}

TEST_CASE("ideal colon") {
  RingPtr R = fixtures::plane();
  SUBCASE("principal example") {
    auto r = ideal_colon(Ideal(R, {R->parse("x*y")}), Ideal(R, {R->parse("x")}));
    CHECK_FALSE(r.divided_by_zero);
    CHECK(r.ideal.same_ideal(Ideal(R, {R->parse("y")})));
  }
  SUBCASE("colon by the unit ideal") {
    Ideal I(R, {R->parse("x^2"), R->parse("x*y")});
    auto r = ideal_colon(I, Ideal(R, {R->one()}));
    CHECK(r.ideal.same_ideal(I));
  }
  SUBCASE("colon by zero flags the unit result") {
    auto r = ideal_colon(Ideal(R, {R->parse("x")}), Ideal(R, {}));
    CHECK(r.divided_by_zero);
    CHECK(r.ideal.is_unit());
  }
  SUBCASE("annihilator in the nodal ring") {
    QRingPtr N = fixtures::nodal();
    auto r = quot_colon(QuotIdeal(N, {}), QuotIdeal(N, {R->parse("x")}));
    CHECK(r.ideal.same_ideal(QuotIdeal(N, {R->parse("y")})));
  }
  SUBCASE("soundness: (I:J)·J ⊆ I") {
    Rand rnd(31);
    for (int t = 0; t < 10; ++t) {
      Ideal I(R, {rnd.poly(R, 2, 2), rnd.poly(R, 2, 2)});
      Ideal J(R, {rnd.poly(R, 2, 2)});
      bool skip = true;
      for (const auto& g : J.gens())
        if (!g.is_zero()) skip = false;
      if (skip) continue;
      auto r = ideal_colon(I, J);
      for (const auto& g : r.ideal.gens())
        for (const auto& j : J.gens()) CHECK(I.contains(g * j));
    }
  }
}

TEST_CASE("elimination") {
  RingPtr T = PolynomialRing::make(PrimeField(32003), {"t", "x", "y"});
  SUBCASE("forced equation") {
    Ideal I(T, {T->parse("t*x - 1"), T->parse("t*y")});
    CHECK(eliminate(I, {0}).same_ideal(Ideal(T, {T->parse("y")})));
  }
  SUBCASE("empty elimination set") {
    Ideal I(T, {T->parse("t*x - 1")});
    CHECK(eliminate(I, {}).same_ideal(I));
  }
  SUBCASE("inverting kills the constraint") {
    RingPtr TX = PolynomialRing::make(PrimeField(32003), {"t", "x"});
    Ideal I(TX, {TX->parse("t*x - 1")});
    CHECK(eliminate(I, {0}).is_zero());
  }
}

TEST_CASE("quotient rings") {
  RingPtr P = fixtures::plane();
  SUBCASE("nodal ring") {
    QRingPtr R = QuotientRing::make(P, Ideal(P, {P->parse("x*y")}));
    CHECK(R->homogeneous());
    CHECK(R->reduce(P->parse("x + y")) == P->parse("x + y"));
    CHECK(R->is_zero_elt(P->parse("x^2*y")));
  }
  SUBCASE("zero ring rejected") {
    CHECK_THROWS_WITH_AS(QuotientRing::make(P, Ideal(P, {P->one()})),
                         "zero ring not supported", Error);
  }
  SUBCASE("weighted homogeneity") {
    RingPtr W = PolynomialRing::make(PrimeField(32003), {"x", "y"}, OrderKind::Grevlex, {1, 2});
    QRingPtr R = QuotientRing::make(W, Ideal(W, {W->parse("x^2 - y")}));
    CHECK(R->homogeneous());  // x^2 and y both have weighted degree 2
  }
}

TEST_CASE("localization") {
  QRingPtr R = fixtures::nodal();
  const RingPtr& P = R->ambient();
  SUBCASE("inverting one branch kills the other") {
    LocalizedRing L = localize_ring(R, P->parse("x"));
    bool has_y = false;
    for (const auto& g : L.presentation->defining().groebner())
      if (g == L.presentation->ambient()->parse("y")) has_y = true;
    CHECK(has_y);
  }
  SUBCASE("line localized at the variable") {
    QRingPtr U = fixtures::line_free();
    LocalizedRing L = localize_ring(U, U->ambient()->parse("u"));
    CHECK(L.presentation->ambient()->nvars() == 2);
    CHECK(L.presentation->defining().groebner().size() == 1);
  }
  SUBCASE("localizing at one adjoins a unit") {
    LocalizedRing L = localize_ring(R, P->one());
    CHECK(L.presentation->is_zero_elt(L.presentation->ambient()->parse("t - 1")));
  }
  SUBCASE("localizing at zero is an error") {
    CHECK_THROWS_WITH_AS(localize_ring(R, P->parse("x^2*y")),
                         "localizing at zero yields the zero ring", Error);
  }
}
