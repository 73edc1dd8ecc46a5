#pragma once

#include <cstdint>
#include <vector>

#include "steinberg/cyclotomic.hpp"

namespace steinberg {

/// Fixed-precision model of the completion of Z[zeta_p] at the prime above
/// ell selected by factor_index: W = (Z/ell^N)[t] / (g~), where g~ is the
/// Hensel lift mod ell^N of the chosen irreducible factor g of Phi_p mod ell.
/// ell is unramified, so v(x) is the minimal ell-valuation of the coordinates
/// of the image of x in W.
class PadicCtx {
public:
    PadicCtx(uint32_t ell, uint32_t p, size_t factor_index, uint32_t precision);

    uint32_t ell() const { return ell_; }
    uint32_t p() const { return p_; }
    uint32_t precision() const { return N_; }
    size_t factor_index() const { return factor_index_; }

    /// Lifted factor, monic of degree d, coefficients reduced mod ell^N.
    const std::vector<Integer>& lifted_factor() const { return g_; }

    /// Valuation of x, or SATURATED (>= N, caller escalates), or VAL_INF (x=0).
    static constexpr uint32_t SATURATED = VAL_INF - 1;
    uint32_t val(const CycInt& x) const;

private:
    uint32_t ell_, p_, N_;
    size_t factor_index_;
    Integer ellN_;
    std::vector<Integer> g_;
};

/// Auto-escalating valuation: starts at precision 32, doubles on saturation,
/// hard cap 4096.
uint32_t cyc_val(const CycInt& x, uint32_t ell, size_t factor_index = 0);

} // namespace steinberg
