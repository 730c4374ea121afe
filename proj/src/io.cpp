#include "gct/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gct {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// ---- cyclotomic expressions ----

struct CycloParser {
    const std::string& s;
    size_t pos = 0;

    std::pair<int, int> linecol(size_t at) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail(size_t at, const std::string& expected) const {
        auto [l, c] = linecol(at);
        throw SyntaxError(l, c, expected);
    }

    void skip_ws() {
        while (pos < s.size() && is_space(s[pos])) ++pos;
    }

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long parse_nat(const std::string& what) {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !is_digit(s[pos])) fail(pos, what);
        long v = 0;
        while (pos < s.size() && is_digit(s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000000L) fail(start, "a smaller integer");
            ++pos;
        }
        return v;
    }

    Cyclotomic parse_expr() {
        Cyclotomic acc = parse_term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc += parse_term();
            } else if (eat('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Cyclotomic parse_term() {
        Cyclotomic acc = parse_unary();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc *= parse_unary();
            } else if (peek() == '/') {
                size_t op = pos;
                ++pos;
                Cyclotomic rhs = parse_unary();
                try {
                    acc = acc / rhs;
                } catch (const Error&) {
                    fail(op, "a nonzero divisor");
                }
            } else {
                return acc;
            }
        }
    }

    Cyclotomic parse_unary() {
        skip_ws();
        if (eat('-')) return -parse_unary();
        return parse_power();
    }

    Cyclotomic parse_power() {
        Cyclotomic base = parse_atom();
        skip_ws();
        if (eat('^')) {
            long e = parse_nat("an exponent");
            return base.pow(static_cast<unsigned long>(e));
        }
        return base;
    }

    Cyclotomic parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail(pos, "a value");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Cyclotomic v = parse_expr();
            skip_ws();
            if (!eat(')')) fail(pos, "')'");
            return v;
        }
        if (c == 'E') {
            ++pos;
            skip_ws();
            if (!eat('(')) fail(pos, "'(' after E");
            size_t at = pos;
            long n = parse_nat("a conductor");
            if (n < 1) fail(at, "a conductor >= 1");
            skip_ws();
            if (!eat(')')) fail(pos, "')'");
            return Cyclotomic::root_of_unity(n, 1);
        }
        if (is_digit(c)) return Cyclotomic(parse_nat("an integer"));
        fail(pos, "a value");
    }
};

// ---- fixtures ----

struct Line {
    std::string text;
    int number;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::string cur;
    int num = 1;
    for (char c : text) {
        if (c == '\n') {
            out.push_back({cur, num});
            cur.clear();
            ++num;
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back({cur, num});
    return out;
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return is_space(c); });
}

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    return s.substr(a, b - a);
}

bool has_prefix(const std::string& s, const std::string& p) {
    return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

// One generator line `ident: cycles`. Points are collected per permutation;
// repeats across the cycles of one permutation are rejected.
void parse_generator_perm(const Line& ln, size_t colon, int& max_point,
                          std::vector<std::pair<int, int>>& arrows) {
    const std::string& s = ln.text;
    size_t i = colon + 1;
    auto skip = [&] {
        while (i < s.size() && is_space(s[i])) ++i;
    };
    skip();
    if (i >= s.size()) throw SyntaxError(ln.number, static_cast<int>(i) + 1, "a cycle");
    std::vector<int> used;
    arrows.clear();
    while (true) {
        skip();
        if (i >= s.size()) break;
        if (s[i] != '(')
            throw SyntaxError(ln.number, static_cast<int>(i) + 1, "'('");
        size_t open = i;
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip();
            if (i >= s.size())
                throw SyntaxError(ln.number, static_cast<int>(open) + 1, "a closing parenthesis");
            if (s[i] == ')') {
                ++i;
                break;
            }
            if (!is_digit(s[i]))
                throw SyntaxError(ln.number, static_cast<int>(i) + 1, "a point or ')'");
            size_t at = i;
            long v = 0;
            while (i < s.size() && is_digit(s[i])) v = v * 10 + (s[i++] - '0');
            if (v < 1 || v > 100000)
                throw SyntaxError(ln.number, static_cast<int>(at) + 1, "a point >= 1");
            int p = static_cast<int>(v);
            if (std::find(used.begin(), used.end(), p) != used.end())
                throw SyntaxError(ln.number, static_cast<int>(at) + 1, "a distinct point");
            used.push_back(p);
            cyc.push_back(p);
            max_point = std::max(max_point, p);
        }
        for (size_t j = 0; j < cyc.size(); ++j)
            arrows.push_back({cyc[j], cyc[(j + 1) % cyc.size()]});
    }
}

}  // namespace

Cyclotomic parse_cyclo(const std::string& text) {
    CycloParser p{text};
    p.skip_ws();
    Cyclotomic v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail(p.pos, "end of expression");
    return v;
}

std::string render_cyclo(const Cyclotomic& z0) {
    Cyclotomic z = z0.minimal();
    if (z.is_rational()) return to_string(z.rational_value());
    long n = z.conductor();
    const auto& c = z.coeffs();
    std::string out;
    for (size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        std::string term;
        if (t == 0) {
            term = to_string(c[t]);
        } else {
            std::string base = "E(" + std::to_string(n) + ")";
            if (t > 1) base += "^" + std::to_string(t);
            if (c[t] == 1)
                term = base;
            else if (c[t] == -1)
                term = "-" + base;
            else
                term = to_string(c[t]) + "*" + base;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

Fixture parse_fixture(const std::string& text, long order_cap) {
    std::vector<Line> lines = split_lines(text);
    size_t i = 0;
    auto next_line = [&]() -> const Line* {
        while (i < lines.size() && is_blank(lines[i].text)) ++i;
        return i < lines.size() ? &lines[i] : nullptr;
    };
    int eof_line = lines.empty() ? 1 : lines.back().number + 1;

    Fixture fx;
    const Line* ln = next_line();
    if (!ln || !has_prefix(ln->text, "name:"))
        throw SyntaxError(ln ? ln->number : eof_line, 1, "'name:'");
    fx.name = trimmed(ln->text.substr(5));
    if (fx.name.empty()) throw SyntaxError(ln->number, 6, "a fixture name");
    ++i;

    while ((ln = next_line()) && has_prefix(ln->text, "meta:")) {
        std::string rest = trimmed(ln->text.substr(5));
        size_t sp = rest.find(' ');
        std::string key = sp == std::string::npos ? rest : rest.substr(0, sp);
        std::string val = sp == std::string::npos ? "" : trimmed(rest.substr(sp + 1));
        if (key.empty()) throw SyntaxError(ln->number, 6, "a meta key");
        fx.meta.push_back({key, val});
        ++i;
    }

    ln = next_line();
    if (!ln) throw SyntaxError(eof_line, 1, "'generators:' or 'cayley:'");

    if (trimmed(ln->text) == "generators:") {
        ++i;
        // Pass 1: syntax and arrows per generator; m = largest point seen.
        std::vector<std::vector<std::pair<int, int>>> gen_arrows;
        int m = 0;
        bool saw_any = false;
        while ((ln = next_line())) {
            const std::string& s = ln->text;
            size_t colon = s.find(':');
            size_t ident = 0;
            while (ident < s.size() && is_space(s[ident])) ++ident;
            if (colon == std::string::npos || colon == ident)
                throw SyntaxError(ln->number, static_cast<int>(ident) + 1, "'ident:'");
            std::vector<std::pair<int, int>> arrows;
            parse_generator_perm(*ln, colon, m, arrows);
            gen_arrows.push_back(std::move(arrows));
            saw_any = true;
            ++i;
        }
        if (!saw_any) throw SyntaxError(eof_line, 1, "a generator line");
        std::vector<Permutation> gens;
        for (const auto& arrows : gen_arrows) {
            Permutation perm(static_cast<size_t>(m));
            for (int t = 0; t < m; ++t) perm[static_cast<size_t>(t)] = t;
            for (auto [a, b] : arrows) perm[static_cast<size_t>(a - 1)] = b - 1;
            gens.push_back(std::move(perm));
        }
        fx.group = from_permutations(gens, fx.name, order_cap);
    } else if (trimmed(ln->text) == "cayley:") {
        ++i;
        std::vector<std::vector<int>> table;
        size_t n = 0;
        while ((ln = next_line())) {
            const std::string& s = ln->text;
            std::vector<int> row;
            std::vector<int> cols;
            size_t j = 0;
            while (j < s.size()) {
                while (j < s.size() && is_space(s[j])) ++j;
                if (j >= s.size()) break;
                if (!is_digit(s[j]))
                    throw SyntaxError(ln->number, static_cast<int>(j) + 1, "a cayley entry");
                size_t at = j;
                long v = 0;
                while (j < s.size() && is_digit(s[j])) v = v * 10 + (s[j++] - '0');
                if (n != 0 && v >= static_cast<long>(n))
                    throw SyntaxError(ln->number, static_cast<int>(at) + 1,
                                      "an index below the group order");
                row.push_back(static_cast<int>(v));
                cols.push_back(static_cast<int>(at) + 1);
            }
            if (n == 0) {
                n = row.size();
                if (n == 0) throw SyntaxError(ln->number, 1, "a cayley entry");
                for (size_t t = 0; t < row.size(); ++t)
                    if (row[t] >= static_cast<int>(n))
                        throw SyntaxError(ln->number, cols[t],
                                          "an index below the group order");
            } else if (row.size() != n) {
                throw SyntaxError(ln->number, static_cast<int>(s.size()) + 1,
                                  std::to_string(n) + " entries");
            }
            table.push_back(std::move(row));
            ++i;
            if (table.size() == n) break;
        }
        if (table.size() != n || n == 0)
            throw SyntaxError(eof_line, 1, "a cayley row");
        if ((ln = next_line()))
            throw SyntaxError(ln->number, 1, "end of file");
        if (static_cast<long>(n) > order_cap)
            throw OrderCapExceeded("fixture order " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(order_cap));
        fx.group = from_cayley(table, fx.name);
    } else {
        throw SyntaxError(ln->number, 1, "'generators:' or 'cayley:'");
    }
    if (fx.group->n > order_cap)
        throw OrderCapExceeded("fixture order " + std::to_string(fx.group->n) + " exceeds cap " +
                               std::to_string(order_cap));
    return fx;
}

Fixture load_fixture(const std::string& path, long order_cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read fixture file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), order_cap);
}

}  // namespace gct
