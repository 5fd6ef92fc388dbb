// File: laurent.cpp
// Exact Laurent polynomial arithmetic over ℤ[t, t⁻¹].

#include "modknot/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace modknot {

void LaurentPoly::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead == tail) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lead > 0 || tail < coeffs_.size()) {
        std::vector<Int> trimmed(coeffs_.begin() + static_cast<long>(lead),
                                 coeffs_.begin() + static_cast<long>(tail));
        coeffs_ = std::move(trimmed);
        min_exp_ += static_cast<long>(lead);
    }
}

LaurentPoly LaurentPoly::term(const Int& c, long e) {
    LaurentPoly p;
    if (c != 0) {
        p.min_exp_ = e;
        p.coeffs_ = {c};
    }
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(long min_exp, std::vector<Int> coeffs) {
    LaurentPoly p;
    p.min_exp_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

Int LaurentPoly::coeff(long e) const {
    if (is_zero() || e < min_exp_ || e > max_exp()) return Int(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (Int& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const long lo = std::min(min_exp_, o.min_exp_);
    const long hi = std::max(max_exp(), o.max_exp());
    std::vector<Int> sum(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
    return from_coeffs(lo, std::move(sum));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    std::vector<Int> prod(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const mpz_srcptr ai = coeffs_[i].get_mpz_t();
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), ai, o.coeffs_[j].get_mpz_t());
        }
    }
    return from_coeffs(min_exp_ + o.min_exp_, std::move(prod));
}

LaurentPoly LaurentPoly::shifted(long e) const {
    if (is_zero()) return *this;
    LaurentPoly p(*this);
    p.min_exp_ += e;
    return p;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    if (is_zero()) return *this;
    std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(-max_exp(), std::move(rev));
}

Int LaurentPoly::at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

bool LaurentPoly::lex_less(const LaurentPoly& o) const {
    if (min_exp_ != o.min_exp_) return min_exp_ < o.min_exp_;
    return coeffs_ < o.coeffs_;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const long e = min_exp_ + i;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) out << a.get_str();
        if (e != 0) {
            if (a != 1) out << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw PrecondViolated("lp_div_exact: division by zero");
    if (a.is_zero()) return LaurentPoly();
    // Work with plain polynomial coefficient vectors; min_exps subtract.
    std::vector<Int> rem = a.coeffs();
    const std::vector<Int>& den = b.coeffs();
    if (rem.size() < den.size())
        throw NotDivisible("lp_div_exact: divisor degree exceeds dividend degree");
    std::vector<Int> quot(rem.size() - den.size() + 1);
    const Int& lead = den.back();
    // Classical long division from the top; every leading coefficient must
    // divide exactly for the quotient to stay in ℤ[t, t⁻¹].
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k) + den.size() - 1];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw NotDivisible("lp_div_exact: nonzero remainder");
        quot[static_cast<std::size_t>(k)] = q;
        const mpz_srcptr qp = q.get_mpz_t();
        for (std::size_t j = 0; j < den.size(); ++j)
            mpz_submul(rem[static_cast<std::size_t>(k) + j].get_mpz_t(), qp,
                       den[j].get_mpz_t());
    }
    for (const Int& c : rem)
        if (c != 0) throw NotDivisible("lp_div_exact: nonzero remainder");
    return LaurentPoly::from_coeffs(a.min_exp() - b.min_exp(), std::move(quot));
}

LaurentPoly q_cyclotomic_bracket(long n) {
    if (n < 1) throw PrecondViolated("q_cyclotomic_bracket: n must be >= 1");
    return LaurentPoly::from_coeffs(0, std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

} // namespace modknot
