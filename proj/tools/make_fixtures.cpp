#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "gct/corpus.hpp"
#include "gct/io.hpp"

namespace {

using namespace gct;

std::string cycles_of(const Permutation& p) {
    std::ostringstream out;
    std::vector<char> seen(p.size(), 0);
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s] || p[s] == static_cast<int>(s)) continue;
        out << '(';
        size_t x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            out << (first ? "" : " ") << (x + 1);
            first = false;
            x = static_cast<size_t>(p[x]);
        }
        out << ')';
    }
    return out.str();
}

Permutation full_cycle(int m) {
    Permutation p(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = (i + 1) % m;
    return p;
}

Permutation reflection(int m) {
    Permutation p(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = (m - i) % m;
    return p;
}

Permutation cycle(int m, std::initializer_list<int> pts1) {
    Permutation p(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = i;
    auto it = pts1.begin();
    int first = *it - 1;
    int prev = first;
    ++it;
    for (; it != pts1.end(); ++it) {
        p[static_cast<size_t>(prev)] = *it - 1;
        prev = *it - 1;
    }
    p[static_cast<size_t>(prev)] = first;
    return p;
}

Permutation left_mult(const FiniteGroup& G, int g) {
    Permutation p(static_cast<size_t>(G.n));
    for (int x = 0; x < G.n; ++x) p[static_cast<size_t>(x)] = G.mul(g, x);
    return p;
}

std::string cayley_fixture(const FiniteGroup& G, const std::string& catalog) {
    std::ostringstream out;
    out << "name: " << G.name << '\n';
    if (!catalog.empty()) out << "meta: catalog " << catalog << '\n';
    out << "cayley:\n";
    for (int a = 0; a < G.n; ++a) {
        for (int b = 0; b < G.n; ++b) out << (b ? " " : "") << G.mul(a, b);
        out << '\n';
    }
    return out.str();
}

std::string gens_fixture(const std::string& name,
                         const std::vector<std::pair<std::string, Permutation>>& gens) {
    std::ostringstream out;
    out << "name: " << name << "\ngenerators:\n";
    for (const auto& g : gens) out << g.first << ": " << cycles_of(g.second) << '\n';
    return out.str();
}

void emit(const std::filesystem::path& dir, const std::string& stem, const std::string& body) {
    std::filesystem::path path = dir / (stem + ".grp");
    {
        std::ofstream out(path, std::ios::binary);
        out << body;
        if (!out) throw Error("cannot write " + path.string());
    }
    // Written files must load to the corpus group: same order and the same
    // conjugacy class size profile.
    Fixture fx = load_fixture(path.string());
    GroupPtr ref = corpus_group(stem);
    if (fx.group->n != ref->n)
        throw Error(stem + ": fixture order " + std::to_string(fx.group->n) +
                    " differs from corpus order " + std::to_string(ref->n));
    auto profile = [](GroupPtr g) {
        ClassPartition c = conjugacy_classes(*g);
        std::vector<long> sizes = c.sizes;
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    if (profile(fx.group) != profile(ref))
        throw Error(stem + ": fixture class profile differs from the corpus group");
    std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    try {
        std::map<std::string, std::string> catalog;
        for (const CorpusEntry& e : corpus()) catalog[e.name] = e.catalog;

        for (const std::string& stem :
             {"trivial", "c2", "c4", "c9", "c20", "q8", "sl23", "dic120", "sg32_8", "sg32_9"})
            emit(dir, stem, cayley_fixture(*corpus_group(stem), catalog[stem]));

        emit(dir, "c2c2", gens_fixture("C2xC2", {{"a", cycle(4, {1, 2})}, {"b", cycle(4, {3, 4})}}));
        emit(dir, "s3", gens_fixture("S3", {{"a", cycle(3, {1, 2})}, {"b", cycle(3, {1, 2, 3})}}));
        emit(dir, "a4", gens_fixture("A4", {{"a", cycle(4, {1, 2, 3})}, {"b", cycle(4, {2, 3, 4})}}));
        emit(dir, "s4", gens_fixture("S4", {{"a", cycle(4, {1, 2})}, {"b", cycle(4, {1, 2, 3, 4})}}));
        for (int order : {8, 10, 12, 16, 18})
            emit(dir, "d" + std::to_string(order),
                 gens_fixture("D" + std::to_string(order),
                              {{"r", full_cycle(order / 2)}, {"s", reflection(order / 2)}}));

        // Regular representation; b listed first so the subgroup containing
        // it sorts ahead of <a> among the index-2 normals.
        GroupPtr q16 = corpus_group("q16");
        emit(dir, "q16",
             gens_fixture("Q16", {{"b", left_mult(*q16, 8)}, {"a", left_mult(*q16, 1)}}));
    } catch (const std::exception& e) {
        std::cerr << "make_fixtures: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
