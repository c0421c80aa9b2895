#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsct/rational.hpp"

namespace nsct {

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(unsigned m);

/// An exact element of Q(ζ_m).
///
/// Stored in the power basis {1, ζ, ..., ζ^(φ(m)-1)}: the coefficient vector is
/// the remainder of any representing polynomial modulo Φ_m, so two values with
/// the same conductor are equal exactly when their vectors are.
class CycNum {
public:
    CycNum() : CycNum(Rational(0)) {}
    CycNum(long long v) : CycNum(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    CycNum(Rational q);                            // NOLINT(google-explicit-constructor)

    /// Reduces `poly` (coefficient of ζ_m^k at index k, any length) modulo Φ_m.
    static CycNum from_polynomial(unsigned conductor, const std::vector<Rational>& poly);

    unsigned conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws NotRational.
    Rational as_rational() const;

    /// The same value written over Q(ζ_M); requires conductor() | M.
    CycNum rebase(unsigned new_conductor) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const Rational& q);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const Rational& q) { return a /= q; }

    /// Value equality; differing conductors are compared over their lcm.
    friend bool operator==(const CycNum& a, const CycNum& b);

private:
    CycNum(unsigned conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    unsigned conductor_ = 1;
    std::vector<Rational> coeffs_;
};

/// Total order on values: lexicographic on coefficient vectors over a common
/// conductor.
bool lex_less(const CycNum& a, const CycNum& b);

/// ζ_m^k
CycNum root_of_unity(unsigned m, long long k);

/// Image under ζ_m ↦ ζ_m^r. r = -1 is complex conjugation. Throws NotCoprime.
CycNum galois_power(const CycNum& a, long long r);

inline CycNum complex_conjugate(const CycNum& a) { return galois_power(a, -1); }

/// Parses a cyclotomic literal such as "1/2 - 3*E(12)^5". Throws ParseError.
CycNum parse_cyc(std::string_view text);

/// Canonical text: the rational value alone, or a signed sum of c*E(m)^k.
std::string format_cyc(const CycNum& a);

}  // namespace nsct
