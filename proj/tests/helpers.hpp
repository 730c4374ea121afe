#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "gct/corpus.hpp"
#include "gct/cyclotomic.hpp"
#include "gct/io.hpp"

namespace gct::testing {

inline std::string fixture_dir() {
    const char* d = std::getenv("GTK_FIXTURE_DIR");
    return d ? d : "fixtures";
}

inline Fixture load_corpus_fixture(const std::string& name) {
    return load_fixture(fixture_dir() + "/" + name + ".grp");
}

// The k-th subgroup of the given order in a (order, elems)-sorted list.
template <typename List>
const SubgroupSet& nth_of_order(const List& subs, long order, int k = 0) {
    for (const auto& s : subs) {
        if (s.order() != order) continue;
        if (k-- == 0) return s;
    }
    throw std::runtime_error("no subgroup of order " + std::to_string(order));
}

// Random element of Q(zeta_n) with small integer-ish coefficients. Spans
// mixed conductors when callers vary n.
inline Cyclotomic random_cyclo(std::mt19937_64& rng, long n) {
    std::uniform_int_distribution<long> coef(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Cyclotomic z;
    for (long t = 0; t < n; ++t) {
        Rational q(coef(rng), den(rng));
        q.canonicalize();
        if (q != 0) z += q * Cyclotomic::root_of_unity(n, t);
    }
    return z;
}

inline std::vector<long> sorted_copy(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace gct::testing
