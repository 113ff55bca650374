#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace branchdiv {

using Rational = mpq_class;
using Integer = mpz_class;

struct FieldCompatibilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedDegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a genericity or non-degeneracy hypothesis.
struct DegenerateSpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "7", "-3/4", "0.5", "-1.25e2". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(unsigned n, unsigned k);

} // namespace branchdiv

namespace branchdiv {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) {
    if (sgn(q) == 0) throw std::domain_error("division by zero");
    return Rational(1) / q;
}

} // namespace branchdiv
