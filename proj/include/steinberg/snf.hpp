#pragma once

#include <cstdint>
#include <vector>

#include "steinberg/cyclotomic.hpp"

namespace steinberg {

/// P * A * Q = D with D diagonal; P, Q products of elementary transforms of
/// ell-unit determinant; diag entries d_i = ell^{a_i} * unit with the
/// valuations a_1 <= ... <= a_m.
///
/// Exact mode: true Smith form over Z (d_i | d_{i+1}), everything exact.
/// Local mode: all matrices are residues mod ell^N and P*A*Q = D holds mod
/// ell^N. The computed valuations are exact whenever max(vals) <= N-2, which
/// the driver enforces by escalating N.
struct SNFResult {
    enum class Mode { Exact, Local } mode;
    uint32_t ell = 0;
    uint32_t N = 0; // Local precision; 0 in Exact mode
    size_t m = 0;
    std::vector<uint32_t> vals;

    std::vector<Integer> P_exact, Q_exact, diag_exact; // row-major, Exact mode
    std::vector<uint64_t> P_local, Q_local, diag_local; // residues, Local mode

    /// Entries reduced into 0..ell-1 (used to build the K-side bases).
    uint32_t P_mod_ell(size_t i, size_t j) const;
    uint32_t Q_mod_ell(size_t i, size_t j) const;
    /// Unit part of d_i mod ell: (d_i / ell^{a_i}) mod ell.
    uint32_t diag_unit_mod_ell(size_t i) const;
};

/// Exact integer Smith normal form; pivots chosen by minimal ell-valuation,
/// ties by absolute value then row-major position.
SNFResult snf_exact(const std::vector<long long>& A, size_t m, uint32_t ell);

/// Local elimination mod ell^N, starting at N = 16 and doubling on
/// saturation until the result certifies (max val <= N-2). Throws when the
/// word-size precision cap is exceeded (singular input saturates forever).
SNFResult snf_local(const std::vector<long long>& A, size_t m, uint32_t ell);

/// Mode selection per the AUTO policy: exact for m <= 256, local otherwise.
SNFResult snf(const std::vector<long long>& A, size_t m, uint32_t ell);

} // namespace steinberg
