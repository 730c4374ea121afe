#include "gct/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace gct {

namespace {

std::mutex cache_mu;

long phi_uncached(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// x^n - 1 = prod_{d|n} Phi_d, so Phi_n falls out by exact long division.
// Coefficients stay tiny at the orders this toolkit handles.
const std::vector<long long>& cyclotomic_poly(long n) {
    static std::map<long, std::vector<long long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phid = cyclotomic_poly(d);
        // num /= phid (exact; phid is monic)
        std::vector<long long> quot(num.size() - phid.size() + 1, 0);
        std::vector<long long> rem = num;
        for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
            long long q = rem[i + phid.size() - 1];
            quot[i] = q;
            if (q == 0) continue;
            for (size_t j = 0; j < phid.size(); ++j) rem[i + j] -= q * phid[j];
        }
        num = std::move(quot);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

// rows[m - phi(n)] holds zeta_n^m on the power basis, for m in [phi(n), n).
const std::vector<std::vector<Rational>>& reduction_rows(long n) {
    static std::map<long, std::vector<std::vector<Rational>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    long phi = phi_uncached(n);
    const auto& poly = cyclotomic_poly(n);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n - phi);
    if (n > phi) {
        std::vector<Rational> row(phi);
        for (long i = 0; i < phi; ++i) row[i] = Rational(static_cast<long>(-poly[i]));
        rows.push_back(row);
        for (long m = phi + 1; m < n; ++m) {
            std::vector<Rational> next(phi);
            const auto& prev = rows.back();
            // multiply by x: shift, then fold the overflowing top term
            for (long i = phi - 1; i >= 1; --i) next[i] = prev[i - 1];
            next[0] = 0;
            if (prev[phi - 1] != 0) {
                const auto& top = rows.front();
                for (long i = 0; i < phi; ++i) next[i] += prev[phi - 1] * top[i];
            }
            rows.push_back(std::move(next));
        }
    }
    return cache.emplace(n, std::move(rows)).first->second;
}

}  // namespace

long euler_phi(long n) {
    std::lock_guard<std::mutex> lk(cache_mu);
    static std::map<long, long> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    long v = phi_uncached(n);
    cache[n] = v;
    return v;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// raw holds exponent coefficients for zeta_n^0 .. zeta_n^(n-1).
Cyclotomic reduce_mod_cyclotomic(long n, const std::vector<Rational>& raw) {
    std::lock_guard<std::mutex> lk(cache_mu);
    long phi = phi_uncached(n);
    const auto& rows = reduction_rows(n);
    std::vector<Rational> out(phi);
    for (long i = 0; i < phi && i < static_cast<long>(raw.size()); ++i) out[i] = raw[i];
    for (long m = phi; m < static_cast<long>(raw.size()); ++m) {
        if (raw[m] == 0) continue;
        const auto& row = rows[m - phi];
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0) out[i] += raw[m] * row[i];
    }
    return Cyclotomic(n, std::move(out));
}

CycloAccumulator::CycloAccumulator(long n) : n_(n), raw_(static_cast<size_t>(n), Rational(0)) {
    if (n < 1) throw Error("accumulator order must be positive");
}

void CycloAccumulator::reset() {
    for (auto& q : raw_) q = 0;
}

namespace {

// mpq_class leaves values built from a numerator/denominator pair unreduced;
// every Rational that crosses into stored coefficients goes through here so
// coefficient-wise equality stays valid.
Rational canon(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return r;
}

}  // namespace

long CycloAccumulator::step_of(const Cyclotomic& a) const {
    long m = a.conductor();
    if (n_ % m != 0) throw Error("accumulator order is not a multiple of an operand conductor");
    return n_ / m;
}

void CycloAccumulator::add(const Cyclotomic& a) {
    long sa = step_of(a);
    const auto& ac = a.coeffs();
    for (size_t i = 0; i < ac.size(); ++i)
        if (ac[i] != 0) raw_[i * sa] += ac[i];
}

void CycloAccumulator::add_scaled(const Rational& w, const Cyclotomic& a) {
    if (w == 0) return;
    long sa = step_of(a);
    const auto& ac = a.coeffs();
    for (size_t i = 0; i < ac.size(); ++i)
        if (ac[i] != 0) raw_[i * sa] += w * ac[i];
}

void CycloAccumulator::add_product(const Rational& w, const Cyclotomic& a, const Cyclotomic& b) {
    if (w == 0) return;
    long sa = step_of(a), sb = step_of(b);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        Rational wa = w * ac[i];
        long base = static_cast<long>(i) * sa;
        for (size_t j = 0; j < bc.size(); ++j)
            if (bc[j] != 0) raw_[(base + static_cast<long>(j) * sb) % n_] += wa * bc[j];
    }
}

void CycloAccumulator::add_product_conj(const Rational& w, const Cyclotomic& a,
                                        const Cyclotomic& b) {
    if (w == 0) return;
    long sa = step_of(a), sb = step_of(b);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        Rational wa = w * ac[i];
        long base = static_cast<long>(i) * sa;
        for (size_t j = 0; j < bc.size(); ++j) {
            if (bc[j] == 0) continue;
            long e = (base - static_cast<long>(j) * sb) % n_;
            if (e < 0) e += n_;
            raw_[e] += wa * bc[j];
        }
    }
}

Cyclotomic CycloAccumulator::value() const { return reduce_mod_cyclotomic(n_, raw_); }

Cyclotomic::Cyclotomic() : n_(1), c_(1, Rational(0)) {}
Cyclotomic::Cyclotomic(const Rational& q) : n_(1), c_(1, q) {}
Cyclotomic::Cyclotomic(long k) : n_(1), c_(1, Rational(k)) {}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw Error("root_of_unity: conductor must be positive");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> raw(n, Rational(0));
    raw[k] = 1;
    return reduce_mod_cyclotomic(n, raw);
}

Cyclotomic Cyclotomic::from_exponents(long n, const std::vector<Rational>& coeffs) {
    if (static_cast<long>(coeffs.size()) != n)
        throw Error("from_exponents: need exactly n coefficients");
    return reduce_mod_cyclotomic(n, coeffs);
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("rational_value: not rational");
    return c_[0];
}

bool Cyclotomic::is_algebraic_integer() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return is_integer(q); });
}

std::optional<long> Cyclotomic::to_rational_integer() const {
    if (!is_rational()) return std::nullopt;
    return to_long(c_[0]);
}

Cyclotomic Cyclotomic::lifted_to(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw Error("lifted_to: target conductor not a multiple");
    long step = m / n_;
    std::vector<Rational> raw(m, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) raw[i * step] = c_[i];
    return reduce_mod_cyclotomic(m, raw);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r += o;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    long L = std::lcm(n_, o.n_);
    if (L != n_) *this = lifted_to(L);
    if (L == o.n_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        Cyclotomic rhs = o.lifted_to(L);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    }
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r -= o;
    return r;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    *this += -o;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long L = std::lcm(n_, o.n_);
    Cyclotomic a = lifted_to(L);
    Cyclotomic b = o.lifted_to(L);
    std::vector<Rational> raw(L, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            raw[(i + j) % L] += a.c_[i] * b.c_[j];
        }
    }
    return reduce_mod_cyclotomic(L, raw);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
}

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic acc(Rational(1));
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("inverse: division by zero");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
    // Solve w * this = 1 on the power basis: columns of M are this * zeta^j.
    long phi = static_cast<long>(c_.size());
    std::vector<std::vector<Rational>> M(phi, std::vector<Rational>(phi + 1, Rational(0)));
    for (long j = 0; j < phi; ++j) {
        Cyclotomic col = *this * root_of_unity(n_, j);
        for (long i = 0; i < phi; ++i) M[i][j] = col.c_[i];
    }
    M[0][phi] = 1;
    long row = 0;
    for (long col = 0; col < phi && row < phi; ++col) {
        long piv = -1;
        for (long r = row; r < phi; ++r)
            if (M[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[row], M[piv]);
        Rational iv = 1 / M[row][col];
        for (long k = col; k <= phi; ++k) M[row][k] *= iv;
        for (long r = 0; r < phi; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rational f = M[r][col];
            for (long k = col; k <= phi; ++k) M[r][k] -= f * M[row][k];
        }
        ++row;
    }
    if (row != phi) throw VerificationFailed("inverse: multiplication matrix singular on a nonzero value");
    std::vector<Rational> sol(phi);
    for (long i = 0; i < phi; ++i) sol[i] = M[i][phi];
    Cyclotomic result(n_, std::move(sol));
    if (!((result * *this) == Cyclotomic(1)))
        throw VerificationFailed("inverse: product check failed");
    return result;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    long L = std::lcm(n_, o.n_);
    return lifted_to(L).c_ == o.lifted_to(L).c_;
}

Cyclotomic Cyclotomic::galois(long s) const {
    long sm = s % n_;
    if (sm < 0) sm += n_;
    if (std::gcd(sm, n_) != 1)
        throw NotCoprime("galois: exponent " + std::to_string(s) + " shares a factor with conductor " +
                         std::to_string(n_));
    if (sm == 1) return *this;
    std::vector<Rational> raw(n_, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) raw[(i * sm) % n_] += c_[i];
    return reduce_mod_cyclotomic(n_, raw);
}

Cyclotomic Cyclotomic::minimal() const {
    if (n_ == 1) return *this;
    for (long d : divisors_of(n_)) {
        if (d == n_) return *this;
        // Fixed by Gal(Q(zeta_n)/Q(zeta_d)) = {sigma_s : s = 1 mod d} iff the
        // value lies in Q(zeta_d).
        bool fixed = true;
        for (long s = 1 + d; s < n_ && fixed; s += d) {
            if (std::gcd(s, n_) != 1) continue;
            if (galois(s) != *this) fixed = false;
        }
        if (!fixed) continue;
        if (d == 1) {
            if (!is_rational())
                throw VerificationFailed("minimal: Galois-fixed value with irrational coefficients");
            return Cyclotomic(c_[0]);
        }
        // Rebase: solve sum c_i * embed(zeta_d^i) = this over the power basis
        // of conductor n. The embedded basis is linearly independent, so plain
        // Gaussian elimination with column pivots recovers the coordinates.
        long phid = euler_phi(d);
        long phin = static_cast<long>(c_.size());
        std::vector<std::vector<Rational>> A(phin, std::vector<Rational>(phid + 1, Rational(0)));
        for (long j = 0; j < phid; ++j) {
            Cyclotomic basis = root_of_unity(d, j).lifted_to(n_);
            for (long i = 0; i < phin; ++i) A[i][j] = basis.coeffs()[i];
        }
        for (long i = 0; i < phin; ++i) A[i][phid] = c_[i];
        std::vector<Rational> sol(phid, Rational(0));
        long row = 0;
        for (long col = 0; col < phid && row < phin; ++col) {
            long piv = -1;
            for (long r = row; r < phin; ++r)
                if (A[r][col] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(A[row], A[piv]);
            Rational inv = 1 / A[row][col];
            for (long k = col; k <= phid; ++k) A[row][k] *= inv;
            for (long r = 0; r < phin; ++r) {
                if (r == row || A[r][col] == 0) continue;
                Rational f = A[r][col];
                for (long k = col; k <= phid; ++k) A[r][k] -= f * A[row][k];
            }
            ++row;
        }
        // Back-read: after full reduction each pivot row holds one coordinate.
        long r = 0;
        for (long col = 0; col < phid; ++col) {
            if (r < phin && A[r][col] == 1) { sol[col] = A[r][phid]; ++r; }
        }
        for (; r < phin; ++r)
            if (A[r][phid] != 0)
                throw VerificationFailed("minimal: rebase system inconsistent");
        Cyclotomic result(d, std::move(sol));
        if (result.lifted_to(n_) != *this)
            throw VerificationFailed("minimal: rebase produced a different value");
        return result;
    }
    return *this;
}

int Cyclotomic::order_cmp(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic ma = a.minimal();
    Cyclotomic mb = b.minimal();
    if (ma.conductor() != mb.conductor()) return ma.conductor() < mb.conductor() ? -1 : 1;
    for (size_t i = 0; i < ma.coeffs().size(); ++i) {
        if (ma.coeffs()[i] == mb.coeffs()[i]) continue;
        return ma.coeffs()[i] > mb.coeffs()[i] ? -1 : 1;  // larger rational sorts first
    }
    return 0;
}

bool congruent_mod_p(const Cyclotomic& a, const Cyclotomic& b, long p) {
    if (!a.is_algebraic_integer() || !b.is_algebraic_integer())
        throw NotAlgebraicInteger("congruent_mod_p: operands must be algebraic integers");
    Cyclotomic d = a - b;
    for (const auto& q : d.coeffs()) {
        if (!is_integer(q))
            throw NotAlgebraicInteger("congruent_mod_p: difference not integral");
        if (!divides(p, q.get_num())) return false;
    }
    return true;
}

}  // namespace gct
