// File: enumeration.hpp
// ----------------------------------------------------------------
// Purpose: Enumerate every Lorenz spec whose Alexander polynomial has a
// given degree n, decide which closures are knots, collect the distinct
// Alexander polynomials, and build the degree table.
//
// Mathematical basis: specs of degree n correspond bijectively to the
// partitions of n. Writing a partition with distinct parts
// m₁ < m₂ < … < m_r and multiplicities d₁, …, d_r, the spec is
//   p₁ = m₁ + 1,   p_j = m_j − m_{j−1} (j ≥ 2),
//   q_j = d_j (j < r),   q_r = d_r + 1,
// so exactly p(n) specs have degree n.
// ----------------------------------------------------------------
#ifndef MODKNOT_ENUMERATION_HPP
#define MODKNOT_ENUMERATION_HPP

#include <string>
#include <vector>

#include "modknot/alexander.hpp"

namespace modknot {

// Number of partitions of n (exact; Int because p(n) grows fast).
Int partition_count(long n);

// All specs of Alexander degree n, sorted lexicographically by pairs.
std::vector<LorenzSpec> enumerate_specs(long n);

// Everything computed for one degree.
struct DegreeReport {
    long n = 0;
    std::vector<LorenzSpec> specs;        // sorted, size p_n
    std::vector<bool> knots;              // parallel to specs
    std::vector<AlexanderPoly> polynomials; // distinct, sorted
    Int p_n;                              // specs.size()
    Int k_n;                              // number of knot closures
    Int a_n;                              // polynomials.size()
};

// Compute a full report; jobs > 1 splits the spec list across threads
// (results are deterministic regardless of jobs).
DegreeReport degree_report(long n, int jobs = 1);

// JSON cache round-trip: <dir>/degree_<n>.json. load returns false when
// the file is absent or has the wrong schema/degree.
bool load_report(const std::string& cache_dir, long n, DegreeReport& out);
void save_report(const std::string& cache_dir, const DegreeReport& report);

struct TableRow {
    long n;
    Int p_n, k_n, a_n;
};

// Rows for n = 2, 4, …, max_n (odd degrees never occur). Uses the cache
// directory when non-empty.
std::vector<TableRow> full_table(long max_n, int jobs = 1,
                                 const std::string& cache_dir = "");

} // namespace modknot

#endif // MODKNOT_ENUMERATION_HPP
