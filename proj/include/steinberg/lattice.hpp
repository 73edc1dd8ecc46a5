#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "steinberg/cyclotomic.hpp"
#include "steinberg/typea.hpp"

namespace steinberg {

/// The function c: U -> Z with f(ue, ve) = c(u^{-1} v), normalized so that
/// c(1) = n!. Values are indexed by UniIndex.
struct GramTable {
    int n;
    uint32_t q;
    std::vector<long long> c;
};

/// Closed form c(w) = sum over (sigma, sigma') in S_n x S_n of
/// sign(sigma) sign(sigma') [sigma^{-1} w sigma' in B].
long long gram_c(const GLMat& w);

GramTable gram_table(const FqField& F, int n, unsigned threads = 1);

/// Linear characters of U: lambda(u) = chi(sum_r c_r u_r) with chi the fixed
/// additive character zeta_p^{Tr(.)} of F_q. J(lambda) = {r : c_r != 0}.
struct UCharacter {
    std::vector<FqField::Elem> coef; // per simple root [i,i+1], i = 1..n-1

    bool trivial() const;
    uint32_t mask_J() const;
    /// Exponent k with lambda(u) = zeta_p^k.
    uint32_t exponent(const FqField& F, const GLMat& u) const;
    UCharacter inverse(const FqField& F) const;
    UCharacter product(const FqField& F, const UCharacter& o) const;
};

std::vector<UCharacter> all_ucharacters(const FqField& F, int n);
/// lambda[r]: twist c on X_r, trivial elsewhere.
UCharacter uchar_on_root(const FqField& F, int n, Root r, FqField::Elem c);

// --- coefficient rings for lattice coordinate vectors -----------------------

struct IntRing {
    using V = Integer;
    uint32_t p; // characteristic of F_q, needed for character values (p = 2)
    V zero() const { return 0; }
    V one() const { return 1; }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V neg(const V& a) const { return -a; }
    V mul(const V& a, const V& b) const { return a * b; }
    bool is_zero(const V& a) const { return a == 0; }
    V from_int(long long v) const { return V(long(v)); }
    V character(uint32_t exp) const; // (-1)^exp, requires p = 2
};

struct CycRing {
    using V = CycInt;
    uint32_t p;
    V zero() const { return V(p); }
    V one() const { return V(p, 1); }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V neg(const V& a) const { return -a; }
    V mul(const V& a, const V& b) const { return a * b; }
    bool is_zero(const V& a) const { return a.is_zero(); }
    V from_int(long long v) const { return V(p, Integer(long(v))); }
    V character(uint32_t exp) const { return V::zeta_pow(p, exp); }
};

struct KRing {
    using V = KField::Elem;
    const KField* K;
    size_t factor_index = 0;
    V zero() const { return 0; }
    V one() const { return 1; }
    V add(V a, V b) const { return K->add(a, b); }
    V sub(V a, V b) const { return K->sub(a, b); }
    V neg(V a) const { return K->neg(a); }
    V mul(V a, V b) const { return K->mul(a, b); }
    bool is_zero(V a) const { return a == 0; }
    V from_int(long long v) const;
    V character(uint32_t exp) const { return K->pow(K->zeta_image(factor_index), exp); }
};

template <class R>
using LatVec = std::vector<typename R::V>;

/// Per-(n,q) context: basis order, cached unitriangular matrices, and the
/// action tables for the generator alphabet.
class LatticeContext {
public:
    LatticeContext(const FqField& F, int n);

    const FqField& field() const { return *F_; }
    int n() const { return n_; }
    const UniIndex& ui() const { return ui_; }
    uint64_t dim() const { return ui_.size(); }
    const GLMat& u_mat(uint64_t k) const { return mats_[k]; }
    uint32_t inv_index(uint32_t k) const { return inv_[k]; }
    /// index(decode(a)^{-1} * decode(b))
    uint32_t mul_inv_index(uint32_t a, uint32_t b) const;

    /// Left-translation permutation k -> index(u0 * decode(k)), u0 in U.
    std::vector<uint32_t> left_mult_perm(const GLMat& u0) const;
    /// Conjugation permutation k -> index(h * decode(k) * h^{-1}).
    std::vector<uint32_t> diag_conj_perm(const std::vector<FqField::Elem>& diag) const;

    /// w_r action data: u = u'' t_r(c), v = w_r u'' w_r^{-1}.
    /// c = 0: w_r(ue) = -(ve). c != 0: w_r(ue) = (v t_r(-1/c))e - (ve).
    struct WAction {
        std::vector<uint32_t> v_idx;  // index of v
        std::vector<uint32_t> vt_idx; // index of v t_r(-1/c) (c != 0 only)
        std::vector<FqField::Elem> c;
    };
    const WAction& w_action(int simple_root_pos) const { return w_acts_[size_t(simple_root_pos)]; }

    template <class R>
    LatVec<R> basis_vector(const R& ring, uint64_t k) const {
        LatVec<R> v(dim(), ring.zero());
        v[k] = ring.one();
        return v;
    }

private:
    const FqField* F_;
    int n_;
    UniIndex ui_;
    std::vector<GLMat> mats_;
    std::vector<uint32_t> inv_;
    std::vector<WAction> w_acts_;
};

// --- generator action on coordinates ----------------------------------------

template <class R>
LatVec<R> act_gen(const LatticeContext& ctx, const R& ring, const Gen& g, const LatVec<R>& x) {
    const FqField& F = ctx.field();
    LatVec<R> y(ctx.dim(), ring.zero());
    switch (g.kind) {
        case Gen::T: {
            auto perm = ctx.left_mult_perm(t_elem(F, ctx.n(), g.r, g.a));
            for (uint64_t k = 0; k < ctx.dim(); ++k)
                if (!ring.is_zero(x[k])) y[perm[k]] = x[k];
            return y;
        }
        case Gen::H: {
            std::vector<FqField::Elem> d(size_t(ctx.n()), 1);
            d[size_t(g.i) - 1] = g.a;
            auto perm = ctx.diag_conj_perm(d);
            for (uint64_t k = 0; k < ctx.dim(); ++k)
                if (!ring.is_zero(x[k])) y[perm[k]] = x[k];
            return y;
        }
        case Gen::W: {
            const auto& wa = ctx.w_action(g.r.i - 1);
            for (uint64_t k = 0; k < ctx.dim(); ++k) {
                if (ring.is_zero(x[k])) continue;
                if (wa.c[k] == 0) {
                    y[wa.v_idx[k]] = ring.sub(y[wa.v_idx[k]], x[k]);
                } else {
                    y[wa.vt_idx[k]] = ring.add(y[wa.vt_idx[k]], x[k]);
                    y[wa.v_idx[k]] = ring.sub(y[wa.v_idx[k]], x[k]);
                }
            }
            return y;
        }
    }
    throw std::logic_error("act_gen: bad generator");
}

template <class R>
LatVec<R> act_word(const LatticeContext& ctx, const R& ring, const std::vector<Gen>& word,
                   LatVec<R> x) {
    for (size_t i = word.size(); i-- > 0;) x = act_gen(ctx, ring, word[i], x);
    return x;
}

template <class R>
LatVec<R> act_elem(const LatticeContext& ctx, const R& ring, const GLMat& g, const LatVec<R>& x) {
    return act_word(ctx, ring, gl_word(g), x);
}

/// Dense matrix of a generator over the ring (entry [k] = column k).
template <class R>
std::vector<LatVec<R>> act_matrix(const LatticeContext& ctx, const R& ring, const Gen& g) {
    std::vector<LatVec<R>> cols;
    cols.reserve(ctx.dim());
    for (uint64_t k = 0; k < ctx.dim(); ++k)
        cols.push_back(act_gen(ctx, ring, g, ctx.basis_vector(ring, k)));
    return cols;
}

// --- E_lambda and the bilinear form ------------------------------------------

/// E_lambda = sum_u lambda(u) (ue): coordinate u is lambda(u).
template <class R>
LatVec<R> build_E(const LatticeContext& ctx, const R& ring, const UCharacter& lam) {
    LatVec<R> v;
    v.reserve(ctx.dim());
    for (uint64_t k = 0; k < ctx.dim(); ++k)
        v.push_back(ring.character(lam.exponent(ctx.field(), ctx.u_mat(k))));
    return v;
}

/// f(x, y) = sum_{u,v} x_u y_v c(u^{-1} v).
template <class R>
typename R::V f_eval(const LatticeContext& ctx, const GramTable& t, const R& ring,
                     const LatVec<R>& x, const LatVec<R>& y) {
    typename R::V acc = ring.zero();
    for (uint64_t a = 0; a < ctx.dim(); ++a) {
        if (ring.is_zero(x[a])) continue;
        for (uint64_t b = 0; b < ctx.dim(); ++b) {
            if (ring.is_zero(y[b])) continue;
            long long cv = t.c[ctx.mul_inv_index(uint32_t(a), uint32_t(b))];
            if (cv == 0) continue;
            acc = ring.add(acc, ring.mul(ring.mul(x[a], y[b]), ring.from_int(cv)));
        }
    }
    return acc;
}

/// f(E_lambda, delta_u) for all u, exactly, via exponent bucketing.
std::vector<CycInt> f_pairings_with_basis(const LatticeContext& ctx, const GramTable& t,
                                          const UCharacter& lam);
/// f(E_lambda, E_mu) exactly.
CycInt f_pair_characters(const LatticeContext& ctx, const GramTable& t, const UCharacter& lam,
                         const UCharacter& mu);

// --- operator expressions ------------------------------------------------------

/// One atom of a left-module operator word; a sequence is applied rightmost
/// first. TwistedRootSum(r, c) is sum_a chi(c a) t_r(a); ComplementSum(r, s)
/// is the sum over the product of all X_t, t in Phi+ \ {r, s, r+s}.
struct OpAtom {
    enum Kind { Group, RootSum, TwistedRootSum, ComplementSum, Scalar } kind;
    std::optional<GLMat> g;
    Root r{0, 0}, s{0, 0};
    FqField::Elem twist{0};
    long long scalar{0};

    static OpAtom group(GLMat m) { return {Group, std::move(m), {0, 0}, {0, 0}, 0, 0}; }
    static OpAtom root_sum(Root r) { return {RootSum, std::nullopt, r, {0, 0}, 0, 0}; }
    static OpAtom twisted(Root r, FqField::Elem c) {
        return {TwistedRootSum, std::nullopt, r, {0, 0}, c, 0};
    }
    static OpAtom complement(Root r, Root s) { return {ComplementSum, std::nullopt, r, s, 0, 0}; }
    static OpAtom scale(long long z) { return {Scalar, std::nullopt, {0, 0}, {0, 0}, 0, z}; }
};

using OperatorExpr = std::vector<OpAtom>;

template <class R>
LatVec<R> operator_apply(const LatticeContext& ctx, const R& ring, const OperatorExpr& expr,
                         LatVec<R> x);

} // namespace steinberg
