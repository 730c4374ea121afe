#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace gct {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator), which the cyclotomic layer relies on for
// coefficient-wise equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::optional<long> to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool divides(long d, const Integer& n) {
    return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d)) != 0;
}

}  // namespace gct
