#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gct/cyclotomic.hpp"
#include "gct/group.hpp"

namespace gct {

struct Fixture {
    std::string name;
    std::vector<std::pair<std::string, std::string>> meta;
    GroupPtr group;
};

// Fixture grammar: a `name:` line, optional `meta: key value` lines, then
// exactly one construction block. `generators:` is followed by lines of the
// form `x: (1 2)(3 4)` (disjoint cycles on points 1..m, space-separated);
// `cayley:` is followed by n rows of n space-separated 0-based indices.
// Blank lines are ignored. Diagnostics carry 1-based line and byte column.
// The parsed group runs full construction validation; groups larger than
// order_cap are refused.
Fixture parse_fixture(const std::string& text, long order_cap = 5000);
Fixture load_fixture(const std::string& path, long order_cap = 5000);

// Cyclotomic expressions: integers, rationals a/b, E(n) for the first
// primitive n-th root of unity, ^, *, /, +, -, parentheses. Rendering uses
// the minimal conductor, the plain rational shortcut, and ascending
// exponents; parse_cyclo(render_cyclo(z)) == z exactly.
Cyclotomic parse_cyclo(const std::string& text);
std::string render_cyclo(const Cyclotomic& z);

}  // namespace gct
