#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gct/corpus.hpp"
#include "gct/structure.hpp"
#include "helpers.hpp"

using namespace gct;
using gct::testing::nth_of_order;

TEST_CASE("prime helpers") {
    CHECK(prime_divisors(60) == std::vector<long>{2, 3, 5});
    CHECK(prime_divisors(1).empty());
    CHECK(p_part(60, 2) == 4);
    CHECK(p_part(60, 3) == 3);
    CHECK(p_part(60, 7) == 1);
    GroupPtr g = corpus_group("d12");
    for (int x = 0; x < g->n; ++x) {
        int o = g->elem_orders[x];
        CHECK(is_p_element(*g, x, 2) == (o == 1 || o == 2 || o == 4));
        CHECK(is_p_element(*g, x, 3) == (o == 1 || o == 3));
    }
}

TEST_CASE("subgroup lattices at corpus scale") {
    // Counts are classical: S3 has 6 subgroups, Q8 has 6, D8 has 10,
    // A4 has 10, Q16 has 11, S4 has 30.
    CHECK(all_subgroups(corpus_group("s3")).size() == 6);
    CHECK(all_subgroups(corpus_group("q8")).size() == 6);
    CHECK(all_subgroups(corpus_group("d8")).size() == 10);
    CHECK(all_subgroups(corpus_group("a4")).size() == 10);
    CHECK(all_subgroups(corpus_group("q16")).size() == 11);
    CHECK(all_subgroups(corpus_group("s4")).size() == 30);

    GroupPtr g = corpus_group("d12");
    auto subs = all_subgroups(g);
    std::set<std::vector<int>> seen;
    for (const auto& H : subs) {
        CHECK(is_subgroup(*g, H.elems));
        CHECK(g->n % H.order() == 0);
        CHECK(seen.insert(H.elems).second);  // no duplicates
    }
    // Closure under intersection: the meet of any two members is a member.
    for (const auto& A : subs)
        for (const auto& B : subs) {
            std::vector<int> meet;
            std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                                  std::back_inserter(meet));
            CHECK(seen.count(meet) == 1);
        }
}

TEST_CASE("maximal subgroups and the Frattini subgroup") {
    CHECK(frattini_subgroup(corpus_group("s4")).order() == 1);
    CHECK(frattini_subgroup(corpus_group("q8")).order() == 2);
    CHECK(frattini_subgroup(corpus_group("q16")).order() == 4);
    CHECK(frattini_subgroup(corpus_group("d18")).order() == 3);
    CHECK(frattini_subgroup(corpus_group("c9")).order() == 3);
    CHECK(frattini_subgroup(trivial_group()).order() == 1);

    GroupPtr d18 = corpus_group("d18");
    auto maxes = maximal_subgroups(d18);
    CHECK(maxes.size() == 4);  // C9 and three dihedral subgroups of order 6
    std::multiset<long> morders;
    for (const auto& M : maxes) morders.insert(M.order());
    CHECK(morders == std::multiset<long>{6, 6, 6, 9});
    // No member contains another.
    for (const auto& A : maxes)
        for (const auto& B : maxes)
            if (A.elems != B.elems)
                CHECK_FALSE(std::includes(A.elems.begin(), A.elems.end(), B.elems.begin(),
                                          B.elems.end()));

    // Frattini members are non-generators: dropping one from a generating
    // set never loses the group.
    std::mt19937_64 rng(31);
    for (const char* nm : {"s3", "q8", "d8", "q16"}) {
        GroupPtr G = corpus_group(nm);
        SubgroupSet phi = frattini_subgroup(G);
        for (int f : phi.elems) {
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<int> S;
                for (int pick = 0; pick < 3; ++pick) S.push_back(rng() % G->n);
                std::vector<int> with = S;
                with.push_back(f);
                if (generated_subgroup(*G, with).size() == static_cast<size_t>(G->n))
                    CHECK(generated_subgroup(*G, S).size() == static_cast<size_t>(G->n));
            }
        }
    }
}

TEST_CASE("sylow subgroups") {
    GroupPtr s4 = corpus_group("s4");
    SubgroupSet syl2 = sylow_subgroup(s4, full_subgroup(s4), 2);
    CHECK(syl2.order() == 8);
    SubgroupSet syl3 = sylow_subgroup(s4, full_subgroup(s4), 3);
    CHECK(syl3.order() == 3);
    CHECK(is_subgroup(*s4, syl2.elems));

    GroupPtr dic = corpus_group("dic120");
    auto norms = normal_subgroups(dic);
    const SubgroupSet& c20 = nth_of_order(norms, 20);
    CHECK(sylow_subgroup(dic, c20, 2).order() == 4);
    CHECK(sylow_subgroup(dic, c20, 5).order() == 5);
}

TEST_CASE("nilpotency and solvability") {
    GroupPtr a4 = corpus_group("a4");
    CHECK(is_solvable_group(a4, full_subgroup(a4)));
    CHECK_FALSE(is_nilpotent_group(a4, full_subgroup(a4)));

    GroupPtr s4 = corpus_group("s4");
    CHECK(is_solvable_group(s4, full_subgroup(s4)));
    CHECK_FALSE(is_nilpotent_group(s4, full_subgroup(s4)));

    GroupPtr d10 = corpus_group("d10");
    CHECK_FALSE(is_nilpotent_group(d10, full_subgroup(d10)));

    auto klass = [](const char* nm) {
        GroupPtr G = corpus_group(nm);
        return nilpotency_class_of(G, full_subgroup(G));
    };
    CHECK(klass("q16") == 3);
    CHECK(klass("q8") == 2);
    CHECK(klass("c20") == 1);
    CHECK(klass("sg32_8") == 3);
    CHECK(klass("sg32_9") == 3);
    CHECK(nilpotency_class_of(a4, full_subgroup(a4)) == -1);

    // Nilpotent exactly when every Sylow subgroup is normal (independent
    // re-derivation).
    for (const char* nm : {"s3", "q8", "d8", "d10", "a4", "d12", "q16", "d16", "sl23", "s4"}) {
        GroupPtr G = corpus_group(nm);
        bool all_normal = true;
        for (long p : prime_divisors(G->n))
            all_normal &= is_normal_set(*G, sylow_subgroup(G, full_subgroup(G), p).elems);
        CHECK(is_nilpotent_group(G, full_subgroup(G)) == all_normal);
    }
}

TEST_CASE("O^p and O^{p'}") {
    GroupPtr q16 = corpus_group("q16");
    CHECK(o_p_subgroup(q16, full_subgroup(q16), 2).order() == 1);
    CHECK(o_p_prime_subgroup(q16, full_subgroup(q16), 2).order() == 16);

    GroupPtr dic = corpus_group("dic120");
    auto norms = normal_subgroups(dic);
    const SubgroupSet& c20 = nth_of_order(norms, 20);
    SubgroupSet o2 = o_p_subgroup(dic, c20, 2);
    CHECK(o2.order() == 5);
    CHECK(o_p_prime_subgroup(dic, c20, 2).order() == 4);
    CHECK(o_p_subgroup(dic, c20, 5).order() == 4);

    // Quotient orders: N / O^p is a p-group, N / O^{p'} a p'-group, and
    // both terms are minimal with that property among the normals of N.
    for (const char* nm : {"s3", "d12", "s4", "sl23"}) {
        GroupPtr G = corpus_group(nm);
        for (const auto& N : normal_subgroups(G))
            for (long p : prime_divisors(N.order())) {
                SubgroupSet op = o_p_subgroup(G, N, p);
                SubgroupSet opp = o_p_prime_subgroup(G, N, p);
                CHECK(N.order() / op.order() == p_part(N.order() / op.order(), p));
                CHECK(p_part(N.order() / opp.order(), p) == 1);
            }
    }
}

TEST_CASE("structural oracle record") {
    GroupPtr dic = corpus_group("dic120");
    auto norms = normal_subgroups(dic);
    const SubgroupSet& c20 = nth_of_order(norms, 20);
    StructuralOracles so = structural_oracles(dic, c20, 2);
    CHECK(so.sylow_p_order == 4);
    CHECK(so.has_normal_p_complement);
    REQUIRE(so.p_complement.has_value());
    CHECK(so.p_complement->order() == 5);
    CHECK(so.is_nilpotent);
    CHECK(so.is_solvable);
    CHECK(so.nilpotency_class == 1);
    CHECK(so.o_p.order() == 5);
    CHECK(so.o_p_prime.order() == 4);
    CHECK(so.frattini.elems == frattini_subgroup(dic).elems);

    // Abelian N has a normal p-complement at every prime.
    GroupPtr d12 = corpus_group("d12");
    for (const auto& N : normal_subgroups(d12)) {
        bool abelian = true;
        for (int x : N.elems)
            for (int y : N.elems) abelian &= (d12->mul(x, y) == d12->mul(y, x));
        if (!abelian) continue;
        for (long p : prime_divisors(N.order())) {
            StructuralOracles r = structural_oracles(d12, N, p);
            CHECK(r.has_normal_p_complement);
            REQUIRE(r.p_complement.has_value());
            CHECK(r.p_complement->order() == N.order() / r.sylow_p_order);
            // The complement misses p entirely and is normal.
            CHECK(p_part(r.p_complement->order(), p) == 1);
            CHECK(is_normal_set(*d12, r.p_complement->elems));
        }
    }

    // A4 at p = 2: V4 is the normal Sylow itself, so the 2-complement is
    // trivially the identity subgroup... which has index 4, not |N|_2'.
    GroupPtr a4 = corpus_group("a4");
    StructuralOracles ra = structural_oracles(a4, full_subgroup(a4), 2);
    CHECK(ra.sylow_p_order == 4);
    CHECK(ra.has_normal_p_complement == false);
    StructuralOracles r3 = structural_oracles(a4, full_subgroup(a4), 3);
    CHECK(r3.has_normal_p_complement);
    REQUIRE(r3.p_complement.has_value());
    CHECK(r3.p_complement->order() == 4);
}
