// File: matrix.hpp
// ----------------------------------------------------------------
// Purpose: Matrices over ℤ[t, t⁻¹], fraction-free determinants, and the
// bivariate (s, t) determinant used by the unreduced Alexander route.
//
// Mathematical basis:
//   mat_det uses the one-step Bareiss scheme: every intermediate entry is
//   (up to sign from row swaps) a minor of the input, so divisions by the
//   previous pivot are exact in the integral domain ℤ[t, t⁻¹]. Negative
//   exponents are cleared by a global t^k scaling first and divided back
//   out of the determinant at the end.
// ----------------------------------------------------------------
#ifndef MODKNOT_MATRIX_HPP
#define MODKNOT_MATRIX_HPP

#include <map>
#include <vector>

#include "modknot/laurent.hpp"

namespace modknot {

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static LaurentMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const LaurentPoly& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const LaurentMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<LaurentPoly> entries_;
};

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentPoly mat_det(const LaurentMatrix& m);

// Polynomial in s with Laurent-polynomial (in t) coefficients.
// Invariant: no zero-valued entries stored.
class BivariatePoly {
public:
    BivariatePoly() = default;
    explicit BivariatePoly(const LaurentPoly& c) { set(0, c); }

    // c(t) * s^e.
    static BivariatePoly s_term(long e, const LaurentPoly& c);

    bool is_zero() const { return terms_.empty(); }
    long s_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    LaurentPoly coeff(long s_exp) const;
    const std::map<long, LaurentPoly>& terms() const { return terms_; }

    BivariatePoly operator-() const;
    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

    // Value at s = 1 (sum of the s-coefficients).
    LaurentPoly at_s_one() const;

private:
    std::map<long, LaurentPoly> terms_;

    void set(long e, const LaurentPoly& c);
};

// Exact division in (ℤ[t,t⁻¹])[s]; throws NotDivisible otherwise.
BivariatePoly bivar_div_exact(const BivariatePoly& a, const BivariatePoly& b);

class BivariateMatrix {
public:
    BivariateMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    // sI - M.
    static BivariateMatrix char_matrix(const LaurentMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BivariatePoly& at(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const BivariatePoly& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

private:
    int rows_;
    int cols_;
    std::vector<BivariatePoly> entries_;
};

BivariatePoly bivar_det(const BivariateMatrix& m);

// Integer matrices: used only for the permutation-matrix rank computation.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    int rows_;
    int cols_;
    std::vector<Int> entries_;
};

// Rank over ℚ by exact fraction-free elimination.
int int_rank(IntMatrix m);

} // namespace modknot

#endif // MODKNOT_MATRIX_HPP
