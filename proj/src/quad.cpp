// File: quad.cpp
// Quadratic forms, surds and periodic continued fractions.

#include "modknot/quad.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace modknot {

namespace {

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor((P + √D)/Q) exactly, using the integer square root. √D is
// irrational here, which makes the integer reduction below exact.
Int floor_surd(const Int& P, const Int& D, const Int& Q) {
    const Int s = isqrt_floor(D);
    if (Q > 0) return floor_div(P + s, Q);
    // (P + √D)/Q = (-P - √D)/(-Q); -√D = (-s - 1) + (1 - frac), so the
    // integer part of the numerator is -P - s - 1.
    return floor_div(-P - s - 1, -Q);
}

// Largest g with g | h and g² | D (h ≥ 0), by trial factorization of h.
Int square_part_bound(Int h, const Int& D) {
    if (h < 0) h = -h;
    if (h == 0) {
        // g must only satisfy g² | D: take the largest such divisor of D.
        // Only reachable when P = Q = 0, which make_surd rejects, so h > 0
        // in practice; return 1 defensively.
        return 1;
    }
    Int g = 1;
    Int rest = h;
    for (Int f = 2; f * f <= rest; ++f) {
        if (rest % f != 0) continue;
        int in_h = 0;
        while (rest % f == 0) { rest /= f; ++in_h; }
        int in_d = 0;
        Int dd = D;
        while (dd % (f * f) == 0) { dd /= f * f; ++in_d; }
        for (int i = 0; i < std::min(in_h, in_d); ++i) g *= f;
    }
    if (rest > 1 && D % (rest * rest) == 0) g *= rest;
    return g;
}

std::string monomial(const Int& coef, const std::string& var, bool lead) {
    std::ostringstream out;
    Int a = abs(coef);
    if (lead) {
        if (coef < 0) out << "-";
    } else {
        out << (coef < 0 ? " - " : " + ");
    }
    if (a != 1 || var.empty()) out << a.get_str();
    out << var;
    return out.str();
}

} // namespace

std::string QuadraticForm::str() const {
    std::ostringstream out;
    out << monomial(a, "x^2", true);
    if (b != 0) out << monomial(b, "xy", false);
    if (c != 0) out << monomial(c, "y^2", false);
    return out.str();
}

std::string QuadraticSurd::str() const {
    std::ostringstream out;
    out << "(" << P.get_str() << " + sqrt(" << D.get_str() << "))/" << Q.get_str();
    return out.str();
}

std::string PeriodicCF::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < preperiod.size(); ++i)
        out << (i ? ", " : "") << preperiod[i].get_str();
    out << "; ";
    for (std::size_t i = 0; i < period.size(); ++i)
        out << (i ? ", " : "") << period[i].get_str();
    out << "]";
    return out.str();
}

QuadraticSurd make_surd(Int P, Int D, Int Q) {
    if (Q == 0) throw PrecondViolated("make_surd: Q must be nonzero");
    if (D <= 0 || is_perfect_square(D))
        throw NotIndefinite("make_surd: D must be positive and non-square");
    const Int g = square_part_bound(gcd(P, Q), D);
    return QuadraticSurd{P / g, D / (g * g), Q / g};
}

Int discriminant(const QuadraticForm& q) { return q.b * q.b - 4 * q.a * q.c; }

QuadraticSurd principal_root(const QuadraticForm& q) {
    if (q.a == 0) throw NotIndefinite("principal_root: leading coefficient is zero");
    const Int d = discriminant(q);
    if (d <= 0 || is_perfect_square(d))
        throw NotIndefinite("principal_root: discriminant must be positive and non-square");
    return make_surd(-q.b, d, 2 * q.a);
}

PeriodicCF cf_expand(const QuadraticSurd& w) {
    Int P = w.P, D = w.D, Q = w.Q;
    // The recurrence needs Q | D - P²; rescale the representation if the
    // canonical triple does not satisfy it (the value is unchanged).
    if ((D - P * P) % Q != 0) {
        const Int s = abs(Q);
        P *= s;
        D *= s * s;
        Q *= s;
    }

    std::vector<Int> terms;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::size_t cycle_start;
    for (;;) {
        const auto state = std::make_pair(P, Q);
        const auto it = seen.find(state);
        if (it != seen.end()) {
            cycle_start = it->second;
            break;
        }
        seen.emplace(state, terms.size());
        const Int a = floor_surd(P, D, Q);
        terms.push_back(a);
        const Int Pn = a * Q - P;
        const Int Qn = (D - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }

    PeriodicCF cf;
    cf.preperiod.assign(terms.begin(), terms.begin() + static_cast<long>(cycle_start));
    cf.period.assign(terms.begin() + static_cast<long>(cycle_start), terms.end());
    if (cf.period.size() % 2 != 0) {
        // Minimal period is odd: double it; then even out an odd preperiod
        // by absorbing the leading period element (rotating the period).
        const std::vector<Int> once = cf.period;
        cf.period.insert(cf.period.end(), once.begin(), once.end());
        if (cf.preperiod.size() % 2 != 0) {
            cf.preperiod.push_back(cf.period.front());
            cf.period.push_back(cf.period.front());
            cf.period.erase(cf.period.begin());
        }
    }
    return cf;
}

Sl2Matrix tv_product(const std::vector<Int>& period) {
    Sl2Matrix m{1, 0, 0, 1};
    bool is_t = true;
    for (const Int& c : period) {
        if (c < 1) throw PrecondViolated("tv_product: entries must be positive");
        // Right-multiply by T^c = (1 c; 0 1) or V^c = (1 0; c 1).
        if (is_t)
            m = Sl2Matrix{m.a, m.a * c + m.b, m.c, m.c * c + m.d};
        else
            m = Sl2Matrix{m.a + m.b * c, m.b, m.c + m.d * c, m.d};
        is_t = !is_t;
    }
    return m;
}

QuadraticSurd surd_from_period(const std::vector<Int>& period) {
    if (period.empty() || period.size() % 2 != 0)
        throw OddPeriod("surd_from_period: period length must be even and positive");
    const Sl2Matrix g = tv_product(period);
    // Larger fixed point of w = (aw + b)/(cw + d):
    // c w² + (d - a) w - b = 0, i.e. w = ((a-d) + √((a+d)² - 4)) / (2c).
    const Int tr = g.a + g.d;
    return make_surd(g.a - g.d, tr * tr - 4, 2 * g.c);
}

QuadraticForm form_from_period(const std::vector<Int>& period) {
    if (period.empty() || period.size() % 2 != 0)
        throw OddPeriod("form_from_period: period length must be even and positive");
    const Sl2Matrix g = tv_product(period);
    return QuadraticForm{g.c, g.d - g.a, -g.b};
}

} // namespace modknot
