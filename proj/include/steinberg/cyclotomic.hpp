#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "steinberg/finite_field.hpp"

namespace steinberg {

using Integer = mpz_class;

/// Largest k with ell^k | x; VAL_INF for x = 0.
inline constexpr uint32_t VAL_INF = UINT32_MAX;
uint32_t val_int(const Integer& x, uint32_t ell);

/// Element of Z[zeta_p], canonically reduced: c0 + c1 z + ... + c_{p-2} z^{p-2}
/// with Phi_p(z) = 0. For p = 2 this is just an Integer (z = -1).
class CycInt {
public:
    explicit CycInt(uint32_t p) : p_(p), c_(p - 1, 0) {}
    CycInt(uint32_t p, const Integer& constant) : CycInt(p) { c_[0] = constant; }

    static CycInt zeta_pow(uint32_t p, uint64_t k);

    uint32_t p() const { return p_; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer& coeff(size_t i) { return c_[i]; }
    const Integer& coeff(size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const Integer& s) const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);

    /// Image in K under zeta -> zeta_image(factor_index); a ring homomorphism
    /// Z[zeta_p] -> F_{ell^d}.
    KField::Elem reduce(const KField& K, size_t factor_index) const;

    std::string str() const;

private:
    void check_compat(const CycInt& o) const;
    uint32_t p_;
    std::vector<Integer> c_;
};

} // namespace steinberg
