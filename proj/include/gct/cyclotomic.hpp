#pragma once

#include <compare>
#include <vector>

#include "gct/errors.hpp"
#include "gct/rational.hpp"

namespace gct {

long euler_phi(long n);
std::vector<long> divisors_of(long n);

// Element of Q(zeta_n), stored on the power basis {1, z, ..., z^(phi(n)-1)}
// reduced mod the n-th cyclotomic polynomial. The representation at a fixed
// conductor is unique; the conductor itself is not minimized on every
// operation (minimal() does that on demand).
class Cyclotomic {
  public:
    Cyclotomic();  // zero at conductor 1
    explicit Cyclotomic(const Rational& q);
    explicit Cyclotomic(long k);

    // zeta_n^k (k taken mod n); n >= 1.
    static Cyclotomic root_of_unity(long n, long k);
    // Sum of coeffs[t] * zeta_n^t for t in [0, n); coeffs.size() == n.
    static Cyclotomic from_exponents(long n, const std::vector<Rational>& coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;          // lies in Q (true at any conductor)
    Rational rational_value() const;   // pre: is_rational()
    bool is_algebraic_integer() const;
    // Integer value when the element is a rational integer; no value otherwise.
    std::optional<long> to_rational_integer() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic scaled(const Rational& q) const;
    Cyclotomic pow(unsigned long e) const;
    // Multiplicative inverse in Q(zeta_n); throws Error on zero.
    Cyclotomic inverse() const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Ring automorphism zeta |-> zeta^s; requires gcd(s, conductor) = 1.
    Cyclotomic galois(long s) const;
    Cyclotomic conj() const { return galois(-1); }

    // Same value at the smallest conductor d | n containing it.
    Cyclotomic minimal() const;
    // Same value re-expressed at conductor m (pre: conductor divides m).
    Cyclotomic lifted_to(long m) const;

    // Deterministic total order: smaller minimal conductor first; at equal
    // conductor, first differing coefficient decides with the LARGER rational
    // ordered first. Makes the all-ones row of a character table sort ahead
    // of sign rows at equal degree.
    static int order_cmp(const Cyclotomic& a, const Cyclotomic& b);

  private:
    Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

    long n_;
    std::vector<Rational> c_;  // size euler_phi(n_)

    friend Cyclotomic reduce_mod_cyclotomic(long n, const std::vector<Rational>& raw);
};

// Exact running sum in the order-n power basis {1, z, ..., z^(n-1)}. Products
// of operands whose conductors divide n scatter straight into the raw vector,
// so the reduction mod the cyclotomic polynomial runs once per value() instead
// of once per term. Conjugation folds into exponent negation for free.
class CycloAccumulator {
  public:
    explicit CycloAccumulator(long n);

    void reset();
    void add(const Cyclotomic& a);
    void add_scaled(const Rational& w, const Cyclotomic& a);
    // += w * a * b, and += w * a * conj(b).
    void add_product(const Rational& w, const Cyclotomic& a, const Cyclotomic& b);
    void add_product_conj(const Rational& w, const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic value() const;

  private:
    long step_of(const Cyclotomic& a) const;

    long n_;
    std::vector<Rational> raw_;
};

// a === b (mod p) as algebraic integers: all power-basis coefficients of a-b
// divisible by p. Throws NotAlgebraicInteger when either side is not integral.
bool congruent_mod_p(const Cyclotomic& a, const Cyclotomic& b, long p);

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& z) { return z.scaled(q); }

}  // namespace gct
