#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "gct/chartab.hpp"
#include "gct/corpus.hpp"
#include "helpers.hpp"

using namespace gct;

static Cyclotomic E(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

static const char* kSmallNames[] = {"trivial", "c2", "c4", "c2c2", "c9",  "c20",    "s3",
                                    "d8",      "q8", "d10", "a4",  "d12", "q16",    "d16",
                                    "d18",     "sl23", "s4"};

TEST_CASE("class algebra structure constants") {
    GroupPtr s3 = corpus_group("s3");
    auto P = conjugacy_classes(*s3);
    ClassAlgebra ca = class_constants(*s3, P);
    REQUIRE(ca.k == 3);

    // Multiplying by the identity class is the identity map.
    for (int j = 0; j < ca.k; ++j)
        for (int t = 0; t < ca.k; ++t) CHECK(ca.at(0, j, t) == (j == t ? 1 : 0));

    for (const char* nm : {"s3", "d12", "q16"}) {
        GroupPtr G = corpus_group(nm);
        auto Q = conjugacy_classes(*G);
        ClassAlgebra c = class_constants(*G, Q);
        std::vector<int> inv_class(c.k);
        for (int i = 0; i < c.k; ++i) inv_class[i] = Q.class_of[G->inv(Q.reps[i])];
        for (int i = 0; i < c.k; ++i)
            for (int j = 0; j < c.k; ++j) {
                // Identity coefficient counts the pairs x * x^-1.
                CHECK(c.at(i, j, 0) == (j == inv_class[i] ? Q.sizes[i] : 0));
                long total = 0;
                for (int t = 0; t < c.k; ++t) {
                    CHECK(c.at(i, j, t) >= 0);
                    total += c.at(i, j, t) * Q.sizes[t];
                }
                CHECK(total == Q.sizes[i] * Q.sizes[j]);
            }
    }

    // Direct count oracle: a[i][j][t] = #{(x,y) in C_i x C_j : xy = rep_t}.
    GroupPtr d10 = corpus_group("d10");
    auto Q = conjugacy_classes(*d10);
    ClassAlgebra c = class_constants(*d10, Q);
    std::vector<std::vector<int>> members(Q.count);
    for (int x = 0; x < d10->n; ++x) members[Q.class_of[x]].push_back(x);
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.k; ++j)
            for (int t = 0; t < c.k; ++t) {
                long cnt = 0;
                for (int x : members[i])
                    for (int y : members[j])
                        if (d10->mul(x, y) == Q.reps[t]) ++cnt;
                CHECK(c.at(i, j, t) == cnt);
            }
}

TEST_CASE("structure constants match the character formula") {
    // a[i][j][t] = |C_i||C_j|/|G| * sum_r chi_r(i) chi_r(j) conj(chi_r(t)) / chi_r(1)
    for (const char* nm : {"s3", "q8"}) {
        GroupPtr G = corpus_group(nm);
        TablePtr T = character_table(G);
        ClassAlgebra c = class_constants(*G, T->classes);
        const auto& sz = T->classes.sizes;
        for (int i = 0; i < c.k; ++i)
            for (int j = 0; j < c.k; ++j)
                for (int t = 0; t < c.k; ++t) {
                    Cyclotomic sum;
                    for (int r = 0; r < T->rows(); ++r)
                        sum += (T->at(r, i) * T->at(r, j) * T->at(r, t).conj())
                                   .scaled(Rational(1, T->degrees[r]));
                    CHECK(sum.scaled(Rational(sz[i] * sz[j], G->n)) ==
                          Cyclotomic(c.at(i, j, t)));
                }
    }
}

TEST_CASE("dixon prime selection") {
    CHECK(dixon_prime(*corpus_group("trivial")) == 3);
    CHECK(dixon_prime(*corpus_group("c2")) == 5);
    CHECK(dixon_prime(*corpus_group("s3")) == 7);
    CHECK(dixon_prime(*corpus_group("q16")) == 17);
    CHECK(dixon_prime(*corpus_group("dic120")) == 61);
    for (const auto& e : corpus()) {
        GroupPtr G = e.build();
        long p = dixon_prime(*G);
        CHECK(p % exponent_of(*G) == 1);
        long s = 1;
        while (s * s < G->n) ++s;
        CHECK(p > 2 * s);
        for (long d = 2; d * d <= p; ++d) CHECK(p % d != 0);
    }
}

TEST_CASE("degree multisets across the corpus") {
    const std::map<std::string, std::multiset<long>> expected = {
        {"trivial", {1}},
        {"c2", {1, 1}},
        {"c4", {1, 1, 1, 1}},
        {"c2c2", {1, 1, 1, 1}},
        {"c9", {1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {"c20", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {"s3", {1, 1, 2}},
        {"d8", {1, 1, 1, 1, 2}},
        {"q8", {1, 1, 1, 1, 2}},
        {"d10", {1, 1, 2, 2}},
        {"a4", {1, 1, 1, 3}},
        {"d12", {1, 1, 1, 1, 2, 2}},
        {"q16", {1, 1, 1, 1, 2, 2, 2}},
        {"d16", {1, 1, 1, 1, 2, 2, 2}},
        {"d18", {1, 1, 2, 2, 2, 2}},
        {"sl23", {1, 1, 1, 2, 2, 2, 3}},
        {"s4", {1, 1, 2, 3, 3}},
        {"dic120", {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                    2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}},
        {"sg32_8", {1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 4}},
        {"sg32_9", {1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2}},
    };
    for (const auto& e : corpus()) {
        GroupPtr G = e.build();
        TablePtr T = character_table(G);
        CHECK(T->rows() == T->classes.count);
        std::multiset<long> degs(T->degrees.begin(), T->degrees.end());
        CHECK(degs == expected.at(e.name));
        long sq = 0;
        for (long d : T->degrees) {
            CHECK(G->n % d == 0);
            sq += d * d;
        }
        CHECK(sq == G->n);
        // Trivial character first; non-increasing degrees never happen since
        // rows sort by degree.
        CHECK(T->degrees[0] == 1);
        for (int j = 0; j < T->classes.count; ++j) CHECK(T->at(0, j) == Cyclotomic(1));
        CHECK(std::is_sorted(T->degrees.begin(), T->degrees.end()));
    }
}

TEST_CASE("known tables: c4 and s3") {
    TablePtr T = character_table(corpus_group("c4"));
    // Each element is its own class, numbered 0..3 with rep k the k-th power
    // of the generator. Row sort puts conductor-1 values first, then i
    // before -i.
    REQUIRE(T->rows() == 4);
    const Cyclotomic i4 = E(4);
    std::vector<std::vector<Cyclotomic>> want = {
        {Cyclotomic(1), Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)},
        {Cyclotomic(1), Cyclotomic(-1), Cyclotomic(1), Cyclotomic(-1)},
        {Cyclotomic(1), i4, Cyclotomic(-1), -i4},
        {Cyclotomic(1), -i4, Cyclotomic(-1), i4},
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(T->at(r, c) == want[r][c]);

    TablePtr S = character_table(corpus_group("s3"));
    REQUIRE(S->rows() == 3);
    // Classes: identity, the two 3-cycles, the three transpositions.
    CHECK(S->classes.sizes == std::vector<long>{1, 2, 3});
    CHECK(S->at(2, 0) == Cyclotomic(2));
    CHECK(S->at(2, 1) == Cyclotomic(-1));
    CHECK(S->at(2, 2) == Cyclotomic(0));
    CHECK(S->at(1, 2) == Cyclotomic(-1));  // sign character
}

TEST_CASE("row orthogonality") {
    for (const char* nm : kSmallNames) {
        TablePtr T = character_table(corpus_group(nm));
        for (int r = 0; r < T->rows(); ++r)
            for (int s = 0; s < T->rows(); ++s)
                CHECK(row_inner_product(*T, r, s) == Cyclotomic(r == s ? 1 : 0));
    }
    TablePtr D = character_table(corpus_group("dic120"));
    CHECK(row_inner_product(*D, 0, 0) == Cyclotomic(1));
    CHECK(row_inner_product(*D, 5, 5) == Cyclotomic(1));
    CHECK(row_inner_product(*D, 5, 7) == Cyclotomic(0));
    CHECK(row_inner_product(*D, 0, 32) == Cyclotomic(0));
}

TEST_CASE("column orthogonality and the regular character") {
    for (const char* nm : kSmallNames) {
        GroupPtr G = corpus_group(nm);
        TablePtr T = character_table(G);
        CycloAccumulator acc(exponent_of(*G));
        for (int i = 0; i < T->classes.count; ++i)
            for (int j = 0; j < T->classes.count; ++j) {
                acc.reset();
                for (int r = 0; r < T->rows(); ++r)
                    acc.add_product_conj(Rational(1), T->at(r, i), T->at(r, j));
                CHECK(acc.value() ==
                      Cyclotomic(i == j ? G->n / T->classes.sizes[i] : 0));
            }
    }
    // sum_r deg_r * chi_r is |G| at the identity and 0 elsewhere.
    for (const auto& e : corpus()) {
        GroupPtr G = e.build();
        TablePtr T = character_table(G);
        CycloAccumulator acc(exponent_of(*G));
        for (int j = 0; j < T->classes.count; ++j) {
            acc.reset();
            for (int r = 0; r < T->rows(); ++r)
                acc.add_scaled(Rational(T->degrees[r]), T->at(r, j));
            CHECK(acc.value() == Cyclotomic(j == 0 ? G->n : 0));
        }
    }
}

TEST_CASE("power map and galois action") {
    GroupPtr G = corpus_group("q16");
    TablePtr T = character_table(G);
    const long ex = exponent_of(*G);
    REQUIRE(ex == 8);
    std::vector<int> id = T->power_map(1);
    for (int c = 0; c < T->classes.count; ++c) CHECK(id[c] == c);
    for (int c = 0; c < T->classes.count; ++c) CHECK(T->power_map(ex)[c] == 0);
    // chi(g^s) = galois_s(chi(g)) when s is prime to the exponent.
    for (long s : {3L, 5L, 7L}) {
        std::vector<int> pm = T->power_map(s);
        for (int r = 0; r < T->rows(); ++r)
            for (int c = 0; c < T->classes.count; ++c)
                CHECK(T->at(r, pm[c]) == T->at(r, c).galois(s));
    }
}

TEST_CASE("kernels of rows") {
    GroupPtr s3 = corpus_group("s3");
    TablePtr T = character_table(s3);
    CHECK(kernel_of(*T, 0).order() == 6);
    SubgroupSet a3 = kernel_of(*T, 1);
    CHECK(a3.order() == 3);
    CHECK(is_normal_set(*s3, a3.elems));
    CHECK(kernel_of(*T, 2).order() == 1);

    GroupPtr q16 = corpus_group("q16");
    TablePtr Tq = character_table(q16);
    CHECK(kernel_of(*Tq, 5).order() == 1);
    CHECK(kernel_of(*Tq, 6).order() == 1);
    CHECK(kernel_of(*Tq, 4).order() == 2);  // only degree-2 row through the center

    GroupPtr a4 = corpus_group("a4");
    TablePtr Ta = character_table(a4);
    CHECK(kernel_of(*Ta, 1).order() == 4);
    CHECK(kernel_of(*Ta, 2).order() == 4);
    CHECK(kernel_of(*Ta, 3).order() == 1);

    // chi is constant at its degree exactly on its kernel.
    for (const char* nm : {"d12", "sl23"}) {
        GroupPtr G = corpus_group(nm);
        TablePtr TT = character_table(G);
        for (int r = 0; r < TT->rows(); ++r) {
            SubgroupSet K = kernel_of(*TT, r);
            CHECK(is_normal_set(*G, K.elems));
            for (int x = 0; x < G->n; ++x)
                CHECK((TT->at_element(r, x) == Cyclotomic(TT->degrees[r])) == K.contains(x));
        }
    }
}

TEST_CASE("quotient tables") {
    GroupPtr s3 = corpus_group("s3");
    TablePtr T = character_table(s3);
    TablePtr same = quotient_table(*T, trivial_subgroup(s3));
    REQUIRE(same->rows() == T->rows());
    CHECK(same->values == T->values);

    SubgroupSet a3 = kernel_of(*T, 1);
    TablePtr Tc2 = quotient_table(*T, a3);
    REQUIRE(Tc2->rows() == 2);
    CHECK(Tc2->degrees == std::vector<long>{1, 1});
    CHECK(Tc2->at(1, 0) == Cyclotomic(1));
    CHECK(Tc2->at(1, 1) == Cyclotomic(-1));

    GroupPtr q16 = corpus_group("q16");
    TablePtr Tq = character_table(q16);
    SubgroupSet z = center(q16);
    REQUIRE(z.order() == 2);
    TablePtr Td8 = quotient_table(*Tq, z);
    CHECK(Td8->degrees == std::vector<long>{1, 1, 1, 1, 2});
    int through = 0;
    for (int r = 0; r < Tq->rows(); ++r) {
        SubgroupSet K = kernel_of(*Tq, r);
        bool contains_z = std::includes(K.elems.begin(), K.elems.end(), z.elems.begin(),
                                        z.elems.end());
        if (contains_z) ++through;
    }
    CHECK(Td8->rows() == through);

    // The assembled table agrees with the table computed from scratch on the
    // coset group (same deterministic class numbering and row sort).
    auto [Q, proj] = quotient(q16, z);
    TablePtr direct = character_table(Q);
    CHECK(Td8->values == direct->values);
    CHECK(Td8->classes.sizes == direct->classes.sizes);

    // Non-normal kernels are rejected.
    int t = -1;
    for (int x = 0; x < s3->n && t < 0; ++x)
        if (s3->elem_orders[x] == 2) t = x;
    SubgroupSet H = make_subgroup(s3, generated_subgroup(*s3, {t}));
    CHECK_FALSE(H.is_normal_in_ambient);
    CHECK_THROWS_AS(quotient_table(*T, H), NotNormal);
}

TEST_CASE("table cache") {
    GroupPtr G = corpus_group("d12");
    TablePtr a = character_table(G);
    TablePtr b = character_table(G);
    CHECK(a.get() == b.get());  // same group object, shared table

    GroupPtr H = corpus_group("d12");
    CHECK(H.get() != G.get());
    TablePtr c = character_table(H);
    CHECK(c->values == a->values);
    CHECK(c->degrees == a->degrees);
}
