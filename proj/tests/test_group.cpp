#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "gct/corpus.hpp"
#include "gct/group.hpp"
#include "gct/structure.hpp"
#include "helpers.hpp"

using namespace gct;
using gct::testing::nth_of_order;

TEST_CASE("from_cayley validates and derives element data") {
    GroupPtr one = from_cayley({{0}}, "1");
    CHECK(one->n == 1);
    CHECK(one->elem_orders == std::vector<int>{1});

    GroupPtr v4 = klein_four();
    CHECK(v4->elem_orders == std::vector<int>{1, 2, 2, 2});
    for (int x = 0; x < 4; ++x) CHECK(v4->mul(x, v4->inv(x)) == 0);

    // Identity row/column must be row/column 0.
    CHECK_THROWS_AS(from_cayley({{1, 0}, {0, 1}}, "bad"), NoIdentity);
    // Repeated entry in a row.
    CHECK_THROWS_AS(from_cayley({{0, 1}, {1, 1}}, "bad"), NotLatinSquare);
    // Latin square with identity that fails associativity: the five-element
    // loop below has (1*1)*2 = 0*2 = 2 but 1*(1*2) = 1*3 = 4.
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(from_cayley(loop, "loop"), NotAssociative);
}

TEST_CASE("from_permutations closes generators") {
    GroupPtr s3 = from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3");
    CHECK(s3->n == 6);
    CHECK(conjugacy_classes(*s3).count == 3);

    GroupPtr c9 = from_permutations({{1, 2, 3, 4, 5, 6, 7, 8, 0}}, "C9");
    CHECK(c9->n == 9);
    CHECK(exponent_of(*c9) == 9);

    CHECK_THROWS_AS(from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3", 4), OrderCapExceeded);
}

TEST_CASE("conjugacy classes: deterministic numbering and oracle agreement") {
    GroupPtr c9 = cyclic_group(9);
    CHECK(conjugacy_classes(*c9).count == 9);

    GroupPtr s3 = symmetric_3();
    ClassPartition P = conjugacy_classes(*s3);
    CHECK(P.sizes == std::vector<long>{1, 2, 3});
    CHECK(P.class_of[0] == 0);

    GroupPtr q16 = dicyclic_group(16);
    ClassPartition Q = conjugacy_classes(*q16);
    CHECK(Q.sizes == std::vector<long>{1, 1, 2, 2, 2, 4, 4});

    for (GroupPtr G : {s3, q16}) {
        ClassPartition C = conjugacy_classes(*G);
        long total = std::accumulate(C.sizes.begin(), C.sizes.end(), 0L);
        CHECK(total == G->n);
        for (long s : C.sizes) CHECK(G->n % s == 0);
        // Same class exactly when conjugate (brute-force oracle).
        for (int x = 0; x < G->n; ++x)
            for (int y = 0; y < G->n; ++y) {
                bool conj = false;
                for (int g = 0; g < G->n && !conj; ++g) conj = (G->conj(x, g) == y);
                CHECK(conj == (C.class_of[x] == C.class_of[y]));
            }
        // Numbering ascends by (size, smallest member), identity first.
        for (int c = 1; c < C.count; ++c) {
            CHECK(C.sizes[c - 1] <= C.sizes[c]);
            if (C.sizes[c - 1] == C.sizes[c]) CHECK(C.reps[c - 1] < C.reps[c]);
        }
    }
}

TEST_CASE("power_class_map is representative independent") {
    GroupPtr q16 = dicyclic_group(16);
    ClassPartition P = conjugacy_classes(*q16);
    std::vector<int> id = power_class_map(*q16, P, 1);
    for (int c = 0; c < P.count; ++c) CHECK(id[c] == c);
    std::vector<int> zero = power_class_map(*q16, P, 0);
    for (int c = 0; c < P.count; ++c) CHECK(zero[c] == 0);

    std::vector<int> sq = power_class_map(*q16, P, 2);
    for (int x = 0; x < q16->n; ++x)
        CHECK(P.class_of[element_power(*q16, x, 2)] == sq[P.class_of[x]]);

    // Squares of Q16 land inside the cyclic subgroup generated by an
    // element of order 8.
    int a = -1;
    for (int x = 0; x < q16->n; ++x)
        if (q16->elem_orders[x] == 8) a = x;
    REQUIRE(a >= 0);
    std::vector<int> cyc = generated_subgroup(*q16, {a});
    for (int c = 0; c < P.count; ++c)
        CHECK(std::binary_search(cyc.begin(), cyc.end(), P.reps[sq[c]]));

    for (long s = 0; s < 16; ++s)
        for (int x = 0; x < q16->n; ++x) {
            int direct = x;
            int step = 0;
            while (step++ < s % q16->elem_orders[x]) direct = q16->mul(direct, x);
            // element_power reduces mod the element order.
            CHECK(element_power(*q16, x, s) ==
                  element_power(*q16, x, s % q16->elem_orders[x]));
        }
}

TEST_CASE("exponent is the lcm of element orders") {
    for (const char* nm : {"s3", "q16", "a4", "sl23", "dic120"}) {
        GroupPtr G = corpus_group(nm);
        long l = 1;
        for (int o : G->elem_orders) l = std::lcm(l, static_cast<long>(o));
        CHECK(exponent_of(*G) == l);
    }
    CHECK(exponent_of(*dicyclic_group(120)) == 60);
}

TEST_CASE("normal subgroup enumeration") {
    CHECK(normal_subgroups(trivial_group()).size() == 1);

    auto nq8 = normal_subgroups(corpus_group("q8"));
    REQUIRE(nq8.size() == 6);
    std::vector<long> orders;
    for (const auto& N : nq8) orders.push_back(N.order());
    CHECK(orders == std::vector<long>{1, 2, 4, 4, 4, 8});

    auto ns3 = normal_subgroups(corpus_group("s3"));
    REQUIRE(ns3.size() == 3);
    CHECK(ns3[1].order() == 3);

    auto na4 = normal_subgroups(corpus_group("a4"));
    REQUIRE(na4.size() == 3);
    CHECK(na4[1].order() == 4);

    // Every member re-validates; count matches the exhaustive subgroup
    // search filtered by normality.
    for (const char* nm : {"s3", "q8", "d8", "a4", "d12", "q16", "d18", "s4"}) {
        GroupPtr G = corpus_group(nm);
        auto norms = normal_subgroups(G);
        for (const auto& N : norms) {
            CHECK(is_subgroup(*G, N.elems));
            CHECK(is_normal_set(*G, N.elems));
            CHECK(N.is_normal_in_ambient);
        }
        size_t brute = 0;
        for (const auto& H : all_subgroups(G))
            if (is_normal_set(*G, H.elems)) ++brute;
        CHECK(brute == norms.size());
        // Sorted by order then element set.
        for (size_t i = 1; i < norms.size(); ++i) {
            CHECK(norms[i - 1].order() <= norms[i].order());
            if (norms[i - 1].order() == norms[i].order())
                CHECK(norms[i - 1].elems < norms[i].elems);
        }
    }
}

TEST_CASE("commutator subgroups") {
    GroupPtr q16 = dicyclic_group(16);
    SubgroupSet Z = center(q16);
    CHECK(Z.order() == 2);
    CHECK(commutator(q16, Z, full_subgroup(q16)).order() == 1);

    GroupPtr s3 = symmetric_3();
    SubgroupSet ds3 = commutator(s3, full_subgroup(s3), full_subgroup(s3));
    CHECK(ds3.order() == 3);

    // [Q16, Q8] is the cyclic subgroup generated by a^2.
    auto norms = normal_subgroups(q16);
    const SubgroupSet& q8 = nth_of_order(norms, 8, 1);
    int o4 = 0;
    for (int x : q8.elems)
        if (q16->elem_orders[x] == 4) ++o4;
    REQUIRE(o4 == 6);  // quaternion, not cyclic
    SubgroupSet comm = commutator(q16, full_subgroup(q16), q8);
    CHECK(comm.order() == 4);
    int a = -1;
    for (int x = 0; x < q16->n; ++x)
        if (q16->elem_orders[x] == 8) a = x;
    CHECK(comm.elems == generated_subgroup(*q16, {q16->mul(a, a)}));
    CHECK(is_normal_set(*q16, comm.elems));
}

TEST_CASE("central series in the ambient group") {
    GroupPtr q16 = dicyclic_group(16);
    SubgroupSet Z = center(q16);
    GSeries zs = lower_central_g_series(q16, Z);
    REQUIRE(zs.terms.size() == 2);
    CHECK(zs.terms[1].order() == 1);

    auto norms = normal_subgroups(q16);
    const SubgroupSet& q8 = nth_of_order(norms, 8, 1);
    GSeries low = lower_central_g_series(q16, q8);
    std::vector<long> lo;
    for (const auto& t : low.terms) lo.push_back(t.order());
    CHECK(lo == std::vector<long>{8, 4, 2, 1});
    GSeries up = upper_central_g_series(q16, q8);
    std::vector<long> uo;
    for (const auto& t : up.terms) uo.push_back(t.order());
    CHECK(uo == std::vector<long>{1, 2, 4, 8});
    CHECK(hypercentral_g_length(q16, q8) == 3);

    CHECK(hypercentral_g_length(q16, trivial_subgroup(q16)) == 0);

    GroupPtr d18 = dihedral_group(18);
    SubgroupSet phi = frattini_subgroup(d18);
    REQUIRE(phi.order() == 3);
    GSeries dlow = lower_central_g_series(d18, phi);
    CHECK(dlow.terms.back().order() == 3);  // stalls above 1
    CHECK_FALSE(hypercentral_g_length(d18, phi).has_value());

    // Series terms are normal and consecutive containments hold.
    for (const GSeries& s : {low, up, dlow})
        for (size_t i = 0; i < s.terms.size(); ++i) {
            CHECK(is_normal_set(*s.terms[i].ambient, s.terms[i].elems));
            if (i + 1 < s.terms.size()) {
                const auto& big = s.ascending ? s.terms[i + 1] : s.terms[i];
                const auto& small = s.ascending ? s.terms[i] : s.terms[i + 1];
                CHECK(std::includes(big.elems.begin(), big.elems.end(), small.elems.begin(),
                                    small.elems.end()));
            }
        }
}

TEST_CASE("series shift between lower and upper forms") {
    // Descending series reaches 1 in r steps exactly when the ascending one
    // reaches N in r-1; both are computed independently.
    for (const char* nm : {"q16", "d8", "q8", "d12", "sl23", "s4"}) {
        GroupPtr G = corpus_group(nm);
        for (const auto& N : normal_subgroups(G)) {
            GSeries low = lower_central_g_series(G, N);
            GSeries up = upper_central_g_series(G, N);
            bool hyper = low.terms.back().order() == 1;
            CHECK(hyper == (up.terms.back().elems == N.elems));
            if (hyper) {
                auto l = hypercentral_g_length(G, N);
                REQUIRE(l.has_value());
                CHECK(*l == static_cast<int>(low.terms.size()) - 1);
                CHECK(*l == static_cast<int>(up.terms.size()) - 1);
            }
        }
    }
}

TEST_CASE("hypercenter meets N") {
    // The ascending series of N terminates at (hypercenter of G) meet N.
    for (const char* nm : {"q16", "d18", "s4", "a4", "d12"}) {
        GroupPtr G = corpus_group(nm);
        GSeries hg = upper_central_g_series(G, full_subgroup(G));
        const std::vector<int>& hyper = hg.terms.back().elems;
        for (const auto& N : normal_subgroups(G)) {
            GSeries up = upper_central_g_series(G, N);
            std::vector<int> meet;
            std::set_intersection(hyper.begin(), hyper.end(), N.elems.begin(), N.elems.end(),
                                  std::back_inserter(meet));
            CHECK(up.terms.back().elems == meet);
        }
    }
}

TEST_CASE("quotient groups") {
    GroupPtr s3 = symmetric_3();
    auto [triv, pt] = quotient(s3, full_subgroup(s3));
    CHECK(triv->n == 1);

    auto norms = normal_subgroups(s3);
    auto [c2, proj] = quotient(s3, norms[1]);
    CHECK(c2->n == 2);

    GroupPtr q16 = dicyclic_group(16);
    SubgroupSet Z = center(q16);
    auto [q, pr] = quotient(q16, Z);
    CHECK(q->n == 8);
    // The projection is a homomorphism onto a validated group.
    for (int x = 0; x < q16->n; ++x)
        for (int y = 0; y < q16->n; ++y)
            CHECK(pr[q16->mul(x, y)] == q->mul(pr[x], pr[y]));
    // Deterministic coset numbering: coset index ascends with its smallest
    // member.
    std::vector<int> least(q->n, -1);
    for (int x = 0; x < q16->n; ++x)
        if (least[pr[x]] < 0) least[pr[x]] = x;
    CHECK(std::is_sorted(least.begin(), least.end()));
}

TEST_CASE("subgroup as standalone group") {
    GroupPtr q16 = dicyclic_group(16);
    auto norms = normal_subgroups(q16);
    const SubgroupSet& q8 = nth_of_order(norms, 8, 1);
    auto [H, to_amb] = subgroup_as_group(q16, q8);
    CHECK(H->n == 8);
    std::multiset<int> orders(H->elem_orders.begin(), H->elem_orders.end());
    CHECK(orders == std::multiset<int>{1, 2, 4, 4, 4, 4, 4, 4});
    for (int x = 0; x < H->n; ++x)
        for (int y = 0; y < H->n; ++y)
            CHECK(to_amb[H->mul(x, y)] == q16->mul(to_amb[x], to_amb[y]));
}

TEST_CASE("generated subgroups and generating sets") {
    GroupPtr s4 = symmetric_4();
    std::vector<int> gens = small_generating_set(*s4);
    CHECK(gens.size() <= 2);
    CHECK(generated_subgroup(*s4, gens).size() == 24);
    CHECK(generated_subgroup(*s4, {}).size() == 1);

    for (const auto& H : all_subgroups(corpus_group("d12"))) {
        std::vector<int> hg = small_generating_set(*H.ambient, H.elems);
        CHECK(generated_subgroup(*H.ambient, hg) == H.elems);
    }
}

TEST_CASE("subgroup sets") {
    GroupPtr g = corpus_group("d8");
    SubgroupSet full = full_subgroup(g);
    CHECK(full.order() == 8);
    CHECK(full.contains(5));
    SubgroupSet t = trivial_subgroup(g);
    CHECK(t.order() == 1);
    CHECK_FALSE(t.contains(3));
    CHECK(t.is_normal_in_ambient);
    CHECK_THROWS_AS(make_subgroup(g, {0, 1, 2, 3, 4, 5}), Error);
}
