// File: burau.cpp
// Burau representation matrices.

#include "modknot/burau.hpp"

namespace modknot {

namespace {

void check_index(int n, int j, const char* op) {
    if (n < 2 || j < 1 || j > n - 1)
        throw IndexOutOfRange(std::string(op) + ": generator index out of range");
}

const LaurentPoly kOne = LaurentPoly::one();
const LaurentPoly kT = LaurentPoly::t_power(1);
const LaurentPoly kMinusT = -LaurentPoly::t_power(1);
const LaurentPoly kOneMinusT = LaurentPoly::one() - LaurentPoly::t_power(1);
const LaurentPoly kTInv = LaurentPoly::t_power(-1);
const LaurentPoly kMinusTInv = -LaurentPoly::t_power(-1);

// Apply B ← B · β_n(σ_j) in place (full variant, positive sign). Only the
// two columns of the 2×2 block change:
//   col_j   ← (1−t)·col_j + col_{j+1}
//   col_{j+1} ← t·old col_j
void apply_full_positive(LaurentMatrix& b, int j) {
    const int c0 = j - 1, c1 = j;
    for (int i = 0; i < b.rows(); ++i) {
        const LaurentPoly old = b.at(i, c0);
        b.at(i, c0) = kOneMinusT * old + b.at(i, c1);
        b.at(i, c1) = kT * old;
    }
}

// Apply B ← B · β_n^r(σ_j) in place (reduced variant, positive sign).
// Only column j (1-indexed within the (n−1)-dimensional space) changes.
void apply_reduced_positive(LaurentMatrix& b, int n, int j) {
    const int m = n - 1;
    if (m == 1) { // n = 2: multiplication by (−t)
        for (int i = 0; i < b.rows(); ++i) b.at(i, 0) = kMinusT * b.at(i, 0);
        return;
    }
    const int c = j - 1; // the affected column, 0-indexed
    for (int i = 0; i < b.rows(); ++i) {
        LaurentPoly next = kMinusT * b.at(i, c);
        if (j > 1) next = next + kT * b.at(i, c - 1);
        if (j < m) next = next + b.at(i, c + 1);
        b.at(i, c) = next;
    }
}

} // namespace

LaurentMatrix burau_generator(int n, int j, int sign) {
    check_index(n, j, "burau_generator");
    LaurentMatrix m = LaurentMatrix::identity(n);
    const int a = j - 1, b = j;
    if (sign >= 0) {
        m.at(a, a) = kOneMinusT;
        m.at(a, b) = kT;
        m.at(b, a) = kOne;
        m.at(b, b) = LaurentPoly();
    } else {
        m.at(a, a) = LaurentPoly();
        m.at(a, b) = kOne;
        m.at(b, a) = kTInv;
        m.at(b, b) = kOne - kTInv;
    }
    return m;
}

LaurentMatrix reduced_burau_generator(int n, int j, int sign) {
    check_index(n, j, "reduced_burau_generator");
    const int dim = n - 1;
    LaurentMatrix m = LaurentMatrix::identity(dim);
    if (dim == 1) { // n = 2 degenerate case
        m.at(0, 0) = sign >= 0 ? kMinusT : kMinusTInv;
        return m;
    }
    const int c = j - 1;
    if (sign >= 0) {
        m.at(c, c) = kMinusT;
        if (j > 1) m.at(c - 1, c) = kT;
        if (j < dim) m.at(c + 1, c) = kOne;
    } else {
        m.at(c, c) = kMinusTInv;
        if (j > 1) m.at(c - 1, c) = kOne;
        if (j < dim) m.at(c + 1, c) = kTInv;
    }
    return m;
}

LaurentMatrix burau(const Braid& b, BurauVariant variant) {
    const int dim = variant == BurauVariant::full ? b.strands : b.strands - 1;
    if (dim < 1)
        throw PrecondViolated("burau: braid must have at least 2 strands for the reduced variant");
    LaurentMatrix acc = LaurentMatrix::identity(dim);
    for (const auto& [j, sign] : b.gens) {
        check_index(b.strands, j, "burau");
        if (sign >= 0) {
            if (variant == BurauVariant::full) apply_full_positive(acc, j);
            else apply_reduced_positive(acc, b.strands, j);
        } else {
            const LaurentMatrix g = variant == BurauVariant::full
                                        ? burau_generator(b.strands, j, -1)
                                        : reduced_burau_generator(b.strands, j, -1);
            acc = mat_mul(acc, g);
        }
    }
    return acc;
}

LaurentMatrix burau_lorenz(const LorenzSpec& spec) {
    const int n = static_cast<int>(spec.strand_count());
    const std::size_t r = spec.pairs.size();
    LaurentMatrix m(n, n);

    // Block offsets: rows are q_1,…,q_r then p_1,…,p_r; columns follow the
    // bottom layout p_1, q_1, p_2, q_2, ….
    auto q_row = [&](std::size_t i) { return static_cast<int>(spec.Q(i)); };
    auto p_row = [&](std::size_t j) {
        return static_cast<int>(spec.Qr() + spec.P(j));
    };
    auto p_col = [&](std::size_t j) {
        return static_cast<int>(spec.P(j) + spec.Q(j));
    };
    auto q_col = [&](std::size_t i) {
        return static_cast<int>(spec.P(i + 1) + spec.Q(i));
    };

    for (std::size_t i = 0; i < r; ++i) {
        const long qi = spec.pairs[i].second;
        // A blocks: t^{P_{j-1}} A_{q_i, p_j} for 1 ≤ j ≤ i+1 (j 1-based).
        for (std::size_t j = 0; j <= i; ++j) {
            const long pj = spec.pairs[j].first;
            const long shift = spec.P(j); // P_{j-1} with 1-based j
            for (long row = 0; row < qi; ++row)
                for (long col = 0; col < pj; ++col)
                    m.at(q_row(i) + static_cast<int>(row),
                         p_col(j) + static_cast<int>(col)) =
                        kOneMinusT.shifted(shift + col);
        }
        // t^{P_i} I_{q_i} block (1-based P_{i+1} here).
        for (long row = 0; row < qi; ++row)
            m.at(q_row(i) + static_cast<int>(row),
                 q_col(i) + static_cast<int>(row)) =
                LaurentPoly::t_power(spec.P(i + 1));
    }
    for (std::size_t j = 0; j < r; ++j) {
        const long pj = spec.pairs[j].first;
        for (long row = 0; row < pj; ++row)
            m.at(p_row(j) + static_cast<int>(row),
                 p_col(j) + static_cast<int>(row)) = kOne;
    }
    return m;
}

IntMatrix permutation_matrix(const LorenzSpec& spec) {
    const LaurentMatrix b = burau_lorenz(spec);
    IntMatrix m(b.rows(), b.cols());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(i, j) = b.at(i, j).at_one();
    return m;
}

int eigenvalue_one_multiplicity(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("eigenvalue_one_multiplicity: matrix not square");
    IntMatrix shifted = m;
    for (int i = 0; i < m.rows(); ++i) shifted.at(i, i) -= 1;
    return m.rows() - int_rank(shifted);
}

} // namespace modknot
