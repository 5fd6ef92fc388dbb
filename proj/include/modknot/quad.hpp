// File: quad.hpp
// ----------------------------------------------------------------
// Purpose: Binary quadratic forms, real quadratic surds, periodic
// continued fractions, and the T/V matrix correspondence.
//
// Mathematical basis:
//   A form ax² + bxy + cy² with positive non-square discriminant has the
//   principal root w = (−b + √D)/(2a), a real quadratic irrational whose
//   continued fraction is eventually periodic. The period, written with
//   even length, corresponds to γ = T^{c₁}V^{c₂}⋯T^{c₂ℓ₋₁}V^{c₂ℓ} with
//   T = (1 1; 0 1), V = (1 0; 1 1); w is the attracting fixed point of γ
//   and the form can be recovered as (c, d−a, −b) from γ = (a b; c d).
//
// Conventions (see the project decisions ledger):
//   * QuadraticSurd stores the fully reduced canonical triple (P, D, Q)
//     for value (P + √D)/Q — the largest g with g | P, g | Q, g² | D is
//     divided out — so structural equality is value equality. The
//     divisibility Q | D − P² needed by the expansion recurrence is
//     restored internally by rescaling.
//   * cf_expand returns the minimal preperiod and the minimal even
//     period; when the minimal period is odd it is doubled, and in that
//     case (only) one period element is absorbed into an odd preperiod to
//     even it out. Preperiods of naturally even periods are left alone
//     (e.g. √31 = [5; 1,1,3,5,3,1,1,10] keeps its length-1 preperiod).
// ----------------------------------------------------------------
#ifndef MODKNOT_QUAD_HPP
#define MODKNOT_QUAD_HPP

#include <string>
#include <vector>

#include "modknot/laurent.hpp"

namespace modknot {

struct QuadraticForm {
    Int a, b, c;
    bool operator==(const QuadraticForm& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    std::string str() const; // e.g. "5x^2 - 6xy - 3y^2"
};

// Value (P + √D)/Q, canonical (see header comment). D > 0 and non-square,
// Q ≠ 0.
struct QuadraticSurd {
    Int P, D, Q;
    bool operator==(const QuadraticSurd& o) const {
        return P == o.P && D == o.D && Q == o.Q;
    }
    std::string str() const; // "(P + sqrt(D))/Q"
};

// Canonicalizing constructor; validates D > 0 non-square, Q != 0.
QuadraticSurd make_surd(Int P, Int D, Int Q);

struct PeriodicCF {
    std::vector<Int> preperiod;
    std::vector<Int> period; // even length, minimal even
    bool operator==(const PeriodicCF& o) const {
        return preperiod == o.preperiod && period == o.period;
    }
    std::string str() const; // "[a1, ...; c1, c2, ...]"
};

// 2x2 integer matrix with determinant 1.
struct Sl2Matrix {
    Int a, b, c, d;
    bool operator==(const Sl2Matrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

Int discriminant(const QuadraticForm& q);

// (−b + √disc)/(2a); throws NotIndefinite unless disc > 0 and non-square.
QuadraticSurd principal_root(const QuadraticForm& q);

// Continued fraction expansion by the exact (P, Q) state recurrence with
// cycle detection; see header comment for the parity conventions.
PeriodicCF cf_expand(const QuadraticSurd& w);

// T^{c1} V^{c2} … for an even-length sequence.
Sl2Matrix tv_product(const std::vector<Int>& period);

// Purely periodic surd [overline{c1,…,c2ℓ}]: the attracting (larger) fixed
// point of tv_product(period). Throws OddPeriod for odd lengths.
QuadraticSurd surd_from_period(const std::vector<Int>& period);

// The form (c, d−a, −b) from tv_product(period) = (a b; c d).
QuadraticForm form_from_period(const std::vector<Int>& period);

} // namespace modknot

#endif // MODKNOT_QUAD_HPP
