#include "steinberg/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace steinberg {

namespace {

// All permutations of 1..n with signs, deterministic order.
struct PermSet {
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
};

PermSet all_perms(int n) {
    PermSet ps;
    std::vector<int> w(size_t(n), 0);
    for (int i = 0; i < n; ++i) w[size_t(i)] = i + 1;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[size_t(i)] > w[size_t(j)]) ++inv;
        ps.perms.push_back(w);
        ps.signs.push_back(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(w.begin(), w.end()));
    return ps;
}

} // namespace

long long gram_c(const GLMat& w) {
    if (!w.is_unitriangular()) throw std::invalid_argument("gram_c: not unitriangular");
    int n = w.n();
    PermSet ps = all_perms(n);
    // nonzero-column bitmask of each row of w
    std::vector<uint32_t> nz(size_t(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w.at(i, j) != 0) nz[size_t(i)] |= 1u << j;

    long long acc = 0;
    for (size_t a = 0; a < ps.perms.size(); ++a) {
        const auto& sig = ps.perms[a];
        for (size_t b = 0; b < ps.perms.size(); ++b) {
            const auto& sig2 = ps.perms[b];
            // sigma^{-1} w sigma' in B: entry (i,j) is w[sigma(i)][sigma'(j)]
            uint32_t prefix = 0;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                uint32_t col = 1u << (sig2[size_t(i)] - 1);
                prefix |= col;
                uint32_t row = nz[size_t(sig[size_t(i)] - 1)];
                if ((row & ~prefix) != 0 || (row & col) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) acc += ps.signs[a] * ps.signs[b];
        }
    }
    return acc;
}

GramTable gram_table(const FqField& F, int n, unsigned threads) {
    UniIndex ui(F, n);
    GramTable t{n, F.q(), std::vector<long long>(ui.size())};
    auto work = [&](uint64_t lo, uint64_t hi) {
        for (uint64_t k = lo; k < hi; ++k) t.c[k] = gram_c(ui.decode(k));
    };
    if (threads <= 1 || ui.size() < 4096) {
        work(0, ui.size());
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (ui.size() + threads - 1) / threads;
        for (unsigned i = 0; i < threads; ++i) {
            uint64_t lo = i * chunk, hi = std::min<uint64_t>(ui.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return t;
}

bool UCharacter::trivial() const {
    for (auto c : coef)
        if (c != 0) return false;
    return true;
}

uint32_t UCharacter::mask_J() const {
    uint32_t m = 0;
    for (size_t i = 0; i < coef.size(); ++i)
        if (coef[i] != 0) m |= 1u << i;
    return m;
}

uint32_t UCharacter::exponent(const FqField& F, const GLMat& u) const {
    FqField::Elem s = 0;
    for (size_t i = 0; i < coef.size(); ++i)
        s = F.add(s, F.mul(coef[i], u.at(int(i), int(i) + 1)));
    return F.trace(s);
}

UCharacter UCharacter::inverse(const FqField& F) const {
    UCharacter o;
    for (auto c : coef) o.coef.push_back(F.neg(c));
    return o;
}

UCharacter UCharacter::product(const FqField& F, const UCharacter& o) const {
    UCharacter r;
    for (size_t i = 0; i < coef.size(); ++i) r.coef.push_back(F.add(coef[i], o.coef[i]));
    return r;
}

std::vector<UCharacter> all_ucharacters(const FqField& F, int n) {
    std::vector<UCharacter> out;
    uint64_t total = 1;
    for (int i = 1; i < n; ++i) total *= F.q();
    for (uint64_t k = 0; k < total; ++k) {
        UCharacter ch;
        uint64_t v = k;
        for (int i = 1; i < n; ++i) {
            ch.coef.push_back(FqField::Elem(v % F.q()));
            v /= F.q();
        }
        out.push_back(ch);
    }
    return out;
}

UCharacter uchar_on_root(const FqField& F, int n, Root r, FqField::Elem c) {
    (void)F;
    if (!r.simple()) throw std::invalid_argument("uchar_on_root: not simple");
    UCharacter ch;
    ch.coef.assign(size_t(n) - 1, 0);
    ch.coef[size_t(r.i) - 1] = c;
    return ch;
}

IntRing::V IntRing::character(uint32_t exp) const {
    if (p != 2)
        throw std::logic_error("IntRing::character: only p = 2 characters are integral");
    return exp % 2 == 0 ? V(1) : V(-1);
}

KRing::V KRing::from_int(long long v) const {
    long long m = v % int64_t(K->p());
    if (m < 0) m += K->p();
    return KField::Elem(m);
}

LatticeContext::LatticeContext(const FqField& F, int n) : F_(&F), n_(n), ui_(F, n) {
    mats_.reserve(ui_.size());
    for (uint64_t k = 0; k < ui_.size(); ++k) mats_.push_back(ui_.decode(k));
    inv_.resize(ui_.size());
    for (uint64_t k = 0; k < ui_.size(); ++k) inv_[k] = uint32_t(ui_.index(mats_[k].inverse()));

    for (Root r : simple_roots(n)) {
        WAction wa;
        wa.v_idx.resize(ui_.size());
        wa.vt_idx.resize(ui_.size());
        wa.c.resize(ui_.size());
        GLMat wr = w_elem(F, n, r);
        for (uint64_t k = 0; k < ui_.size(); ++k) {
            UFactor uf = u_factor(mats_[k], r);
            GLMat v = wr * uf.u2 * wr; // wr is an involution
            assert(v.is_unitriangular());
            wa.c[k] = uf.c;
            wa.v_idx[k] = uint32_t(ui_.index(v));
            if (uf.c != 0) {
                GLMat vt = v * t_elem(F, n, r, F.neg(F.inv(uf.c)));
                wa.vt_idx[k] = uint32_t(ui_.index(vt));
            } else {
                wa.vt_idx[k] = wa.v_idx[k];
            }
        }
        w_acts_.push_back(std::move(wa));
    }
}

uint32_t LatticeContext::mul_inv_index(uint32_t a, uint32_t b) const {
    return uint32_t(ui_.index(mats_[inv_[a]] * mats_[b]));
}

std::vector<uint32_t> LatticeContext::left_mult_perm(const GLMat& u0) const {
    std::vector<uint32_t> perm(ui_.size());
    for (uint64_t k = 0; k < ui_.size(); ++k) perm[k] = uint32_t(ui_.index(u0 * mats_[k]));
    return perm;
}

std::vector<uint32_t> LatticeContext::diag_conj_perm(const std::vector<FqField::Elem>& d) const {
    std::vector<uint32_t> perm(ui_.size());
    // (h u h^{-1})_{ij} = d_i u_{ij} d_j^{-1}
    for (uint64_t k = 0; k < ui_.size(); ++k) {
        GLMat m = mats_[k];
        for (auto [i, j] : ui_.positions())
            m.at(i, j) = F_->mul(F_->mul(d[size_t(i)], m.at(i, j)), F_->inv(d[size_t(j)]));
        perm[k] = uint32_t(ui_.index(m));
    }
    return perm;
}

std::vector<CycInt> f_pairings_with_basis(const LatticeContext& ctx, const GramTable& t,
                                          const UCharacter& lam) {
    const FqField& F = ctx.field();
    uint32_t p = F.p();
    uint64_t m = ctx.dim();
    std::vector<uint32_t> expo(m);
    for (uint64_t v = 0; v < m; ++v) expo[v] = lam.exponent(F, ctx.u_mat(v));
    std::vector<CycInt> out;
    out.reserve(m);
    // f(E_lam, u e) = sum_v lam(v) c(v^{-1} u), bucketed by exponent
    std::vector<long long> bucket(p);
    for (uint64_t u = 0; u < m; ++u) {
        std::fill(bucket.begin(), bucket.end(), 0);
        for (uint64_t v = 0; v < m; ++v)
            bucket[expo[v]] += t.c[ctx.mul_inv_index(uint32_t(v), uint32_t(u))];
        CycInt acc(p);
        for (uint32_t k = 0; k < p; ++k)
            if (bucket[k] != 0) acc += CycInt::zeta_pow(p, k) * Integer(long(bucket[k]));
        out.push_back(acc);
    }
    return out;
}

CycInt f_pair_characters(const LatticeContext& ctx, const GramTable& t, const UCharacter& lam,
                         const UCharacter& mu) {
    const FqField& F = ctx.field();
    uint32_t p = F.p();
    uint64_t m = ctx.dim();
    std::vector<uint32_t> el(m), em(m);
    for (uint64_t v = 0; v < m; ++v) {
        el[v] = lam.exponent(F, ctx.u_mat(v));
        em[v] = mu.exponent(F, ctx.u_mat(v));
    }
    std::vector<long long> bucket(p, 0);
    for (uint64_t a = 0; a < m; ++a)
        for (uint64_t b = 0; b < m; ++b)
            bucket[(el[a] + em[b]) % p] += t.c[ctx.mul_inv_index(uint32_t(a), uint32_t(b))];
    CycInt acc(p);
    for (uint32_t k = 0; k < p; ++k)
        if (bucket[k] != 0) acc += CycInt::zeta_pow(p, k) * Integer(long(bucket[k]));
    return acc;
}

namespace {

// Elements of the product of all X_t, t in Phi+ \ {r, s, r+s}, in the fixed
// height-then-lex root order.
template <class Fn>
void for_each_complement_elem(const LatticeContext& ctx, Root r, Root s, Fn&& fn) {
    const FqField& F = ctx.field();
    int n = ctx.n();
    if (n < 3) throw std::invalid_argument("ComplementSum: n < 3");
    if (!r.simple() || !s.simple() || r == s || root_orth(r, s))
        throw std::invalid_argument("ComplementSum: need distinct non-orthogonal simple roots");
    Root rs = *root_sum(r, s);
    std::vector<Root> roots;
    for (Root t : positive_roots(n))
        if (!(t == r) && !(t == s) && !(t == rs)) roots.push_back(t);
    std::vector<FqField::Elem> a(roots.size(), 0);
    while (true) {
        GLMat g(F, n);
        for (size_t i = 0; i < roots.size(); ++i) g = g * t_elem(F, n, roots[i], a[i]);
        fn(g);
        size_t i = 0;
        while (i < a.size() && a[i] == F.q() - 1) a[i++] = 0;
        if (i == a.size()) break;
        ++a[i];
    }
}

} // namespace

template <class R>
LatVec<R> operator_apply(const LatticeContext& ctx, const R& ring, const OperatorExpr& expr,
                         LatVec<R> x) {
    const FqField& F = ctx.field();
    int n = ctx.n();
    for (size_t idx = expr.size(); idx-- > 0;) {
        const OpAtom& at = expr[idx];
        switch (at.kind) {
            case OpAtom::Group: {
                x = act_elem(ctx, ring, *at.g, x);
                break;
            }
            case OpAtom::RootSum: {
                if (!at.r.positive()) throw std::invalid_argument("RootSum: root not positive");
                LatVec<R> acc(ctx.dim(), ring.zero());
                for (uint32_t a = 0; a < F.q(); ++a) {
                    auto perm = ctx.left_mult_perm(t_elem(F, n, at.r, FqField::Elem(a)));
                    for (uint64_t k = 0; k < ctx.dim(); ++k)
                        if (!ring.is_zero(x[k])) acc[perm[k]] = ring.add(acc[perm[k]], x[k]);
                }
                x = std::move(acc);
                break;
            }
            case OpAtom::TwistedRootSum: {
                if (!at.r.positive()) throw std::invalid_argument("TwistedRootSum: root not positive");
                LatVec<R> acc(ctx.dim(), ring.zero());
                for (uint32_t a = 0; a < F.q(); ++a) {
                    auto perm = ctx.left_mult_perm(t_elem(F, n, at.r, FqField::Elem(a)));
                    auto chi = ring.character(F.trace(F.mul(at.twist, FqField::Elem(a))));
                    for (uint64_t k = 0; k < ctx.dim(); ++k)
                        if (!ring.is_zero(x[k]))
                            acc[perm[k]] = ring.add(acc[perm[k]], ring.mul(chi, x[k]));
                }
                x = std::move(acc);
                break;
            }
            case OpAtom::ComplementSum: {
                LatVec<R> acc(ctx.dim(), ring.zero());
                for_each_complement_elem(ctx, at.r, at.s, [&](const GLMat& g) {
                    auto perm = ctx.left_mult_perm(g);
                    for (uint64_t k = 0; k < ctx.dim(); ++k)
                        if (!ring.is_zero(x[k])) acc[perm[k]] = ring.add(acc[perm[k]], x[k]);
                });
                x = std::move(acc);
                break;
            }
            case OpAtom::Scalar: {
                auto z = ring.from_int(at.scalar);
                for (auto& v : x) v = ring.mul(v, z);
                break;
            }
        }
    }
    return x;
}

template LatVec<IntRing> operator_apply<IntRing>(const LatticeContext&, const IntRing&,
                                                 const OperatorExpr&, LatVec<IntRing>);
template LatVec<CycRing> operator_apply<CycRing>(const LatticeContext&, const CycRing&,
                                                 const OperatorExpr&, LatVec<CycRing>);
template LatVec<KRing> operator_apply<KRing>(const LatticeContext&, const KRing&,
                                             const OperatorExpr&, LatVec<KRing>);

} // namespace steinberg
