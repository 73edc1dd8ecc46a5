#pragma once

#include <cstdint>
#include <vector>

#include "steinberg/cyclotomic.hpp"

namespace steinberg {

/// Indices of standard parabolic subgroups of GL_n(q). Subsets J of the
/// simple roots are bitmasks: bit k set means [k+1,k+2] in J.
Integer q_factorial(int n, uint32_t q);            // [n]_q! = prod (q^i-1)/(q-1)
Integer parabolic_index_in_B(uint32_t mask, int n, uint32_t q); // [P_J : B]
Integer parabolic_index(uint32_t mask, int n, uint32_t q);      // [G : P_J]

struct ParabolicRow {
    uint32_t mask;
    Integer pj_over_b; // [P_J : B]
    Integer g_over_pj; // [G : P_J]
    uint32_t val;      // nu_ell([G : P_J])
};

struct ParabolicTable {
    int n;
    uint32_t q, ell;
    std::vector<ParabolicRow> rows; // all 2^{n-1} subsets, by mask
    uint32_t kappa1;                // nu_ell([G:B])
    uint32_t kappa2;                // nu_ell([G:P]) for P minimal parabolic
    std::vector<uint32_t> levels;   // X = attained valuations, ascending

    const ParabolicRow& row(uint32_t mask) const { return rows[mask]; }
    bool level_attained(uint32_t k) const;
};

ParabolicTable build_parabolic_table(int n, uint32_t q, uint32_t ell);

} // namespace steinberg
