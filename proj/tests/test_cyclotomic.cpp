#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "gct/chartab.hpp"
#include "gct/corpus.hpp"
#include "gct/cyclotomic.hpp"
#include "helpers.hpp"

using namespace gct;
using gct::testing::random_cyclo;

static Cyclotomic E(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

TEST_CASE("roots of unity basics") {
    CHECK(E(1, 0) == Cyclotomic(1));
    CHECK(E(4) * E(4) == Cyclotomic(-1));
    Cyclotomic s;
    for (long k = 0; k < 5; ++k) s += E(5, k);
    CHECK(s.is_zero());
    CHECK(E(6) == -(E(3) * E(3)));  // zeta_6 = -zeta_3^2
    CHECK(E(8).pow(8) == Cyclotomic(1));
    CHECK(E(7, 3) == E(7).pow(3));
}

TEST_CASE("ring axioms on seeded mixed-conductor triples") {
    std::mt19937_64 rng(20260816);
    const long conductors[] = {1, 2, 3, 4, 5, 6, 8, 9, 12};
    for (int trial = 0; trial < 120; ++trial) {
        Cyclotomic a = random_cyclo(rng, conductors[rng() % 9]);
        Cyclotomic b = random_cyclo(rng, conductors[rng() % 9]);
        Cyclotomic c = random_cyclo(rng, conductors[rng() % 9]);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * Cyclotomic(1) == a);
        CHECK(a + Cyclotomic() == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("galois automorphisms") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        long n = 12;
        Cyclotomic z = random_cyclo(rng, n);
        for (long s : {1L, 5L, 7L, 11L}) {
            for (long t : {5L, 7L, 11L}) {
                CHECK(z.galois(s).galois(t) == z.galois(s * t % n));
            }
        }
        CHECK(z.conj().conj() == z);
    }
    Cyclotomic q(Rational(3, 7));
    CHECK(q.galois(5) == q);
    CHECK_THROWS_AS(E(6).galois(2), NotCoprime);
    CHECK(E(8).galois(-1) == E(8, 7));
}

TEST_CASE("norm of character values is a nonnegative rational") {
    TablePtr T = character_table(corpus_group("s3"));
    for (int r = 0; r < T->rows(); ++r)
        for (int c = 0; c < T->classes.count; ++c) {
            Cyclotomic nrm = T->at(r, c) * T->at(r, c).conj();
            REQUIRE(nrm.is_rational());
            CHECK(nrm.rational_value() >= 0);
        }
}

TEST_CASE("conductor minimization and idempotence") {
    Cyclotomic z = E(3) + E(3, 2);
    CHECK(z.minimal().conductor() == 1);
    CHECK(z == Cyclotomic(-1));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Cyclotomic w = random_cyclo(rng, 12);
        Cyclotomic m = w.minimal();
        CHECK(m == w);
        CHECK(m.minimal().conductor() == m.conductor());
        CHECK(m.lifted_to(24) == w);
    }
    // Rational values are recognized at any conductor.
    Cyclotomic five = Rational(5) * E(8, 0);
    CHECK(five.is_rational());
    CHECK(five.rational_value() == 5);
}

TEST_CASE("integrality and rational-integer extraction") {
    CHECK((E(3) + E(3, 2)).to_rational_integer() == -1);
    CHECK_FALSE(E(5).to_rational_integer().has_value());
    CHECK_FALSE(Cyclotomic(Rational(7, 2)).to_rational_integer().has_value());
    CHECK(E(5).is_algebraic_integer());
    CHECK_FALSE(E(5).scaled(Rational(1, 2)).is_algebraic_integer());
    CHECK(Cyclotomic(42).to_rational_integer() == 42);
}

TEST_CASE("multiplicative inverse") {
    std::mt19937_64 rng(13);
    int nonzero = 0;
    while (nonzero < 25) {
        Cyclotomic z = random_cyclo(rng, 8);
        if (z.is_zero()) continue;
        ++nonzero;
        CHECK(z * z.inverse() == Cyclotomic(1));
        CHECK(z / z == Cyclotomic(1));
    }
    CHECK_THROWS_AS(Cyclotomic().inverse(), Error);
    CHECK(E(12).inverse() == E(12, 11));
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Cyclotomic z = random_cyclo(rng, 9);
        Cyclotomic acc(1);
        for (unsigned long e = 0; e <= 5; ++e) {
            CHECK(z.pow(e) == acc);
            acc *= z;
        }
    }
}

TEST_CASE("congruences mod p between algebraic integers") {
    CHECK(congruent_mod_p(Cyclotomic(3), Cyclotomic(3), 5));
    CHECK(congruent_mod_p(Cyclotomic(3), Cyclotomic(1), 2));
    CHECK_FALSE(congruent_mod_p(Cyclotomic(3), Cyclotomic(1), 5));
    CHECK(congruent_mod_p(E(3), E(3), 7));
    CHECK_THROWS_AS(congruent_mod_p(Cyclotomic(Rational(1, 2)), Cyclotomic(1), 3),
                    NotAlgebraicInteger);

    // Higman-type check on the degree-2 character of S3: x of order 3
    // satisfies chi(x)^{|G|_3} = chi(1) mod 3; a transposition does not.
    TablePtr T = character_table(corpus_group("s3"));
    int c3 = -1, c2 = -1;
    for (int c = 0; c < T->classes.count; ++c) {
        int ord = T->group->elem_orders[T->classes.reps[c]];
        if (ord == 3) c3 = c;
        if (ord == 2) c2 = c;
    }
    REQUIRE(T->degrees[2] == 2);
    CHECK(congruent_mod_p(T->at(2, c3).pow(3), T->at(2, 0), 3));
    CHECK_FALSE(congruent_mod_p(T->at(2, c2).pow(3), T->at(2, 0), 3));
}

TEST_CASE("order_cmp is a strict total order with rationals first") {
    CHECK(Cyclotomic::order_cmp(Cyclotomic(1), E(5)) < 0);
    CHECK(Cyclotomic::order_cmp(E(5), Cyclotomic(1)) > 0);
    CHECK(Cyclotomic::order_cmp(E(5), E(5)) == 0);
    // Larger rational first at equal conductor: the all-ones row of a table
    // sorts ahead of sign rows.
    CHECK(Cyclotomic::order_cmp(Cyclotomic(1), Cyclotomic(-1)) < 0);
    // Equality of value at different stored conductors compares equal.
    Cyclotomic a = Cyclotomic(-1);
    Cyclotomic b = E(3) + E(3, 2);
    CHECK(Cyclotomic::order_cmp(a, b) == 0);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        Cyclotomic x = random_cyclo(rng, 8);
        Cyclotomic y = random_cyclo(rng, 8);
        CHECK(Cyclotomic::order_cmp(x, y) == -Cyclotomic::order_cmp(y, x));
        if (Cyclotomic::order_cmp(x, y) == 0) CHECK(x == y);
    }
}

TEST_CASE("from_exponents agrees with explicit sums") {
    std::vector<Rational> coeffs(6, Rational(0));
    coeffs[1] = Rational(2);
    coeffs[4] = Rational(-1, 3);
    Cyclotomic built = Cyclotomic::from_exponents(6, coeffs);
    Cyclotomic manual = Rational(2) * E(6, 1) + Rational(-1, 3) * E(6, 4);
    CHECK(built == manual);
}

TEST_CASE("accumulator matches operator arithmetic") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        long n = 12;
        CycloAccumulator acc(n);
        Cyclotomic direct;
        for (int term = 0; term < 6; ++term) {
            Cyclotomic a = random_cyclo(rng, (rng() % 2) ? 12 : 6);
            Cyclotomic b = random_cyclo(rng, (rng() % 2) ? 4 : 3);
            Rational w(static_cast<long>(rng() % 7) - 3);
            switch (term % 4) {
                case 0:
                    acc.add(a);
                    direct += a;
                    break;
                case 1:
                    acc.add_scaled(w, a);
                    direct += w * a;
                    break;
                case 2:
                    acc.add_product(w, a, b);
                    direct += w * (a * b);
                    break;
                default:
                    acc.add_product_conj(w, a, b);
                    direct += w * (a * b.conj());
                    break;
            }
        }
        CHECK(acc.value() == direct);
        acc.reset();
        CHECK(acc.value().is_zero());
    }
    // Operand conductors must divide the accumulator order.
    CycloAccumulator acc6(6);
    CHECK_THROWS_AS(acc6.add(E(5)), Error);
}
