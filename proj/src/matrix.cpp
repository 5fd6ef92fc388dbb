// File: matrix.cpp
// Laurent-matrix products and fraction-free (Bareiss) determinants.

#include "modknot/matrix.hpp"

#include <utility>

namespace modknot {

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
    return m;
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: inner dimensions differ");
    LaurentMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        }
    return c;
}

LaurentPoly mat_det(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("mat_det: matrix not square");
    const int n = m.rows();
    if (n == 0) return LaurentPoly::one();

    // Clear negative exponents: scaling every entry by t^s multiplies the
    // determinant by t^{n*s}.
    long shift = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero() && m.at(i, j).min_exp() < -shift)
                shift = -m.at(i, j).min_exp();
    LaurentMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = m.at(i, j).shifted(shift);

    int sign = 1;
    LaurentPoly prev = LaurentPoly::one();
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!a.at(i, k).is_zero()) { pivot = i; break; }
        if (pivot < 0) return LaurentPoly(); // zero column: singular
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = lp_div_exact(
                    a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = LaurentPoly();
        }
        prev = a.at(k, k);
    }
    LaurentPoly det = a.at(n - 1, n - 1).shifted(-shift * n);
    return sign < 0 ? -det : det;
}

void BivariatePoly::set(long e, const LaurentPoly& c) {
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = c;
}

BivariatePoly BivariatePoly::s_term(long e, const LaurentPoly& c) {
    BivariatePoly p;
    p.set(e, c);
    return p;
}

LaurentPoly BivariatePoly::coeff(long s_exp) const {
    auto it = terms_.find(s_exp);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly p(*this);
    for (const auto& [e, c] : o.terms_) p.set(e, p.coeff(e) + c);
    return p;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    return *this + (-o);
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            p.set(e1 + e2, p.coeff(e1 + e2) + c1 * c2);
    return p;
}

LaurentPoly BivariatePoly::at_s_one() const {
    LaurentPoly s;
    for (const auto& [e, c] : terms_) s = s + c;
    return s;
}

BivariatePoly bivar_div_exact(const BivariatePoly& a, const BivariatePoly& b) {
    if (b.is_zero()) throw PrecondViolated("bivar_div_exact: division by zero");
    BivariatePoly rem = a;
    BivariatePoly quot;
    const long db = b.s_degree();
    const LaurentPoly blead = b.coeff(db);
    // If b | a in (ℤ[t,t⁻¹])[s] then the leading s-coefficients divide at
    // every step, because ℤ[t,t⁻¹] is an integral domain.
    while (!rem.is_zero()) {
        const long da = rem.s_degree();
        if (da < db) throw NotDivisible("bivar_div_exact: nonzero remainder");
        const LaurentPoly q = lp_div_exact(rem.coeff(da), blead);
        const BivariatePoly qt = BivariatePoly::s_term(da - db, q);
        quot = quot + qt;
        rem = rem - qt * b;
    }
    return quot;
}

BivariateMatrix BivariateMatrix::char_matrix(const LaurentMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("char_matrix: matrix not square");
    BivariateMatrix c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            BivariatePoly e = BivariatePoly(-m.at(i, j));
            if (i == j)
                e = e + BivariatePoly::s_term(1, LaurentPoly::one());
            c.at(i, j) = e;
        }
    return c;
}

BivariatePoly bivar_det(const BivariateMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("bivar_det: matrix not square");
    const int n = m.rows();
    if (n == 0) return BivariatePoly(LaurentPoly::one());
    // Same Bareiss scheme as mat_det, over the domain (ℤ[t,t⁻¹])[s].
    // Negative t-exponents are harmless here (t^k is a unit), so no scaling.
    std::vector<BivariatePoly> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.push_back(m.at(i, j));
    auto at = [&](int i, int j) -> BivariatePoly& {
        return a[static_cast<std::size_t>(i) * n + j];
    };

    int sign = 1;
    BivariatePoly prev(LaurentPoly::one());
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!at(i, k).is_zero()) { pivot = i; break; }
        if (pivot < 0) return BivariatePoly();
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = bivar_div_exact(
                    at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            at(i, k) = BivariatePoly();
        }
        prev = at(k, k);
    }
    BivariatePoly det = at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

int int_rank(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        const Int p = m.at(row, col);
        for (int i = row + 1; i < rows; ++i) {
            const Int f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < cols; ++j)
                m.at(i, j) = m.at(i, j) * p - f * m.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace modknot
