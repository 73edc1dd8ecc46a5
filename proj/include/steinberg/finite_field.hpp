#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinberg {

// Polynomials over GF(p) with small coefficients, low degree first.
// Shared between field construction and the cyclotomic factorization.
using SmallPoly = std::vector<uint16_t>;

bool poly_is_irreducible(const SmallPoly& f, uint32_t p);

// Smallest monic irreducible of degree e over GF(p), where "smallest" orders
// the non-leading coefficient tuple as a base-p number (constant term least
// significant).
SmallPoly smallest_irreducible(uint32_t p, uint32_t e);

// Monic irreducible factors of the p-th cyclotomic polynomial mod ell,
// ell != p. All factors have degree ord_p(ell); ordered by coefficient tuple.
std::vector<SmallPoly> factor_cyclotomic_mod(uint32_t p, uint32_t ell);

uint32_t multiplicative_order(uint32_t a, uint32_t m);
bool is_prime(uint64_t n);

/// GF(p^e) with table-driven arithmetic. Elements are indices 0..q-1 whose
/// base-p digits are the coefficients of the residue polynomial, constant
/// term least significant. Index order is the deterministic element order.
class FqField {
public:
    using Elem = uint16_t;

    FqField(uint32_t p, uint32_t e);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }
    const SmallPoly& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return add_[size_t(a) * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return mul_[size_t(a) * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t k) const;

    /// Integer residue mod p embedded as a constant.
    Elem from_int(int64_t v) const;

    /// Absolute trace GF(q) -> GF(p), returned as 0..p-1.
    uint32_t trace(Elem a) const { return trace_[a]; }

    /// Smallest generator of the multiplicative group (1 when q = 2).
    Elem multiplicative_generator() const { return gen_; }

    bool operator==(const FqField& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

private:
    uint32_t p_, e_, q_;
    SmallPoly modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::vector<uint16_t> trace_;
    Elem gen_;
};

/// K = F_{ell^d}: residue field of Z[zeta_p] at a prime above ell. d is the
/// multiplicative order of ell mod p, so K contains a primitive p-th root of
/// unity. Carries the deterministically ordered factorization of Phi_p mod
/// ell and, per factor, the identified image of zeta in K.
class KField : public FqField {
public:
    KField(uint32_t ell, uint32_t p_char);

    uint32_t ell() const { return FqField::p(); }
    uint32_t p_char() const { return p_char_; }
    uint32_t d() const { return FqField::e(); }

    /// Distinguished element of multiplicative order exactly p_char.
    Elem omega() const { return omega_; }

    size_t factor_count() const { return factors_.size(); }
    const SmallPoly& factor(size_t idx) const;
    /// Image of zeta_p under the reduction attached to the given factor:
    /// the first root of that factor in element order.
    Elem zeta_image(size_t idx) const;

private:
    uint32_t p_char_;
    Elem omega_;
    std::vector<SmallPoly> factors_;
    std::vector<Elem> zeta_roots_;
};

} // namespace steinberg
