// File: laurent.hpp
// ----------------------------------------------------------------
// Purpose: Exact integer Laurent polynomials ℤ[t, t⁻¹].
//
// Representation: dense ascending coefficient vector plus the exponent
// of its first entry (min_exp). Canonical form: no leading or trailing
// zero coefficients; the zero polynomial has an empty vector and
// min_exp = 0. Equality is structural equality of (min_exp, coeffs).
//
// Coefficients are arbitrary-precision (GMP mpz_class): fraction-free
// determinant intermediates overflow 64 bits well inside the sizes this
// library handles.
// ----------------------------------------------------------------
#ifndef MODKNOT_LAURENT_HPP
#define MODKNOT_LAURENT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "modknot/errors.hpp"

namespace modknot {

using Int = mpz_class;

class LaurentPoly {
public:
    // Zero polynomial.
    LaurentPoly() = default;

    // Constant polynomial.
    explicit LaurentPoly(const Int& c) { if (c != 0) coeffs_ = {c}; }
    explicit LaurentPoly(long c) : LaurentPoly(Int(c)) {}

    // c * t^e.
    static LaurentPoly term(const Int& c, long e);
    // Polynomial from an ascending coefficient vector starting at min_exp
    // (zeros at either end are trimmed).
    static LaurentPoly from_coeffs(long min_exp, std::vector<Int> coeffs);
    static LaurentPoly one() { return LaurentPoly(Int(1)); }
    // t^e.
    static LaurentPoly t_power(long e) { return term(Int(1), e); }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    // Coefficient of t^e (0 outside the stored range).
    Int coeff(long e) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const {
        return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiplication by the unit t^e.
    LaurentPoly shifted(long e) const;

    // Substitution t → 1/t.
    LaurentPoly inverted_variable() const;

    // Value at t = 1 (sum of coefficients).
    Int at_one() const;

    // Lexicographic-by-coefficient ordering helper (for deterministic
    // report output); orders first by min_exp, then the coefficient vector.
    bool lex_less(const LaurentPoly& o) const;

    // Human-readable form, e.g. "t^3 - 2*t + 1".
    std::string str() const;

private:
    long min_exp_ = 0;
    std::vector<Int> coeffs_;

    void normalize();
};

// Exact product (alias of operator*, the spec's named operation).
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient; throws NotDivisible if b does not divide a, and
// PrecondViolated if b = 0.
LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b);

// [n]_t = 1 + t + … + t^{n-1}.
LaurentPoly q_cyclotomic_bracket(long n);

} // namespace modknot

#endif // MODKNOT_LAURENT_HPP
