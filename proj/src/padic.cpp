#include "steinberg/padic.hpp"

#include <cassert>
#include <stdexcept>

namespace steinberg {

namespace {

// Dense polynomials over GF(ell) (SmallPoly) -- extended Euclid and division.

void trim(SmallPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

SmallPoly pmul(const SmallPoly& a, const SmallPoly& b, uint32_t m) {
    if (a.empty() || b.empty()) return {};
    SmallPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint16_t((c[i + j] + uint32_t(a[i]) * b[j]) % m);
    trim(c);
    return c;
}

SmallPoly padd(const SmallPoly& a, const SmallPoly& b, uint32_t m) {
    SmallPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint32_t v = (i < a.size() ? a[i] : 0u) + (i < b.size() ? b[i] : 0u);
        c[i] = uint16_t(v % m);
    }
    trim(c);
    return c;
}

uint32_t inv_mod(uint32_t a, uint32_t m) {
    a %= m;
    for (uint32_t x = 1; x < m; ++x)
        if (a * x % m == 1) return x;
    throw std::logic_error("inv_mod: not invertible");
}

// a = q*b + r over GF(m), b nonzero (not necessarily monic).
void pdivmod(const SmallPoly& a, const SmallPoly& b, uint32_t m, SmallPoly& q, SmallPoly& r) {
    r = a;
    trim(r);
    q.clear();
    if (b.empty()) throw std::logic_error("pdivmod: division by zero");
    uint32_t lb = inv_mod(b.back(), m);
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
    while (r.size() >= b.size() && !r.empty()) {
        uint32_t c = uint32_t(r.back()) * lb % m;
        size_t shift = r.size() - b.size();
        q[shift] = uint16_t(c);
        for (size_t i = 0; i < b.size(); ++i) {
            uint32_t v = (uint32_t(r[shift + i]) + m * c - c * b[i] % m) % m;
            r[shift + i] = uint16_t(v);
        }
        trim(r);
    }
    trim(q);
}

// s*a + t*b = 1 over GF(m) for coprime a, b.
void bezout(const SmallPoly& a, const SmallPoly& b, uint32_t m, SmallPoly& s, SmallPoly& t) {
    SmallPoly r0 = a, r1 = b;
    SmallPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        SmallPoly q, r;
        pdivmod(r0, r1, m, q, r);
        SmallPoly qs = pmul(q, s1, m), qt = pmul(q, t1, m);
        for (auto& c : qs) c = uint16_t((m - c) % m);
        for (auto& c : qt) c = uint16_t((m - c) % m);
        SmallPoly s2 = padd(s0, qs, m), t2 = padd(t0, qt, m);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw std::logic_error("bezout: inputs not coprime");
    uint32_t u = inv_mod(r0[0], m);
    s = s0;
    t = t0;
    for (auto& c : s) c = uint16_t(uint32_t(c) * u % m);
    for (auto& c : t) c = uint16_t(uint32_t(c) * u % m);
}

std::vector<Integer> to_big(const SmallPoly& f) {
    std::vector<Integer> g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = f[i];
    return g;
}

std::vector<Integer> big_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

} // namespace

PadicCtx::PadicCtx(uint32_t ell, uint32_t p, size_t factor_index, uint32_t precision)
    : ell_(ell), p_(p), N_(precision), factor_index_(factor_index) {
    if (N_ == 0) throw std::invalid_argument("PadicCtx: zero precision");
    auto factors = factor_cyclotomic_mod(p, ell);
    if (factor_index >= factors.size())
        throw std::out_of_range("PadicCtx: factor index out of range");
    SmallPoly g0 = factors[factor_index];
    SmallPoly h0 = {1};
    for (size_t i = 0; i < factors.size(); ++i)
        if (i != factor_index) h0 = pmul(h0, factors[i], ell);

    SmallPoly s0, t0;
    bezout(g0, h0, ell, s0, t0);

    // f = Phi_p over Z
    std::vector<Integer> f(p, 1);
    std::vector<Integer> g = to_big(g0), h = to_big(h0);

    ellN_ = 1;
    for (uint32_t i = 0; i < N_; ++i) ellN_ *= ell;

    // Linear Hensel: after step k, f = g*h mod ell^{k+1}, g = g0 mod ell.
    Integer ellk = ell;
    for (uint32_t k = 1; k < N_; ++k, ellk *= ell) {
        std::vector<Integer> gh = big_mul(g, h);
        gh.resize(f.size(), 0);
        SmallPoly delta(f.size(), 0);
        for (size_t i = 0; i < f.size(); ++i) {
            Integer d = (f[i] - gh[i]) / ellk;
            mpz_class r = d % ell;
            if (r < 0) r += ell;
            delta[i] = uint16_t(r.get_ui());
        }
        trim(delta);
        SmallPoly td = pmul(t0, delta, ell);
        SmallPoly quo, u;
        pdivmod(td, g0, ell, quo, u);
        SmallPoly v = padd(pmul(s0, delta, ell), pmul(quo, h0, ell), ell);
        assert(u.size() < g0.size());
        assert(v.size() < h0.size() || h0.size() == 1);
        for (size_t i = 0; i < u.size(); ++i) g[i] += ellk * u[i];
        for (size_t i = 0; i < v.size(); ++i) h[i] += ellk * v[i];
    }
    for (auto& c : g) {
        c %= ellN_;
        if (c < 0) c += ellN_;
    }
    g_ = g;
}

uint32_t PadicCtx::val(const CycInt& x) const {
    if (x.p() != p_) throw std::invalid_argument("PadicCtx::val: p mismatch");
    if (x.is_zero()) return VAL_INF;
    // Coefficient polynomial of x reduced mod (g~, ell^N).
    std::vector<Integer> r(x.coeffs());
    size_t d = g_.size() - 1;
    while (r.size() > d) {
        Integer lead = r.back() % ellN_;
        size_t shift = r.size() - g_.size();
        for (size_t i = 0; i < g_.size(); ++i) r[shift + i] -= lead * g_[i];
        r.pop_back();
    }
    uint32_t best = SATURATED;
    for (auto& c : r) {
        Integer m = c % ellN_;
        if (m < 0) m += ellN_;
        if (m == 0) continue;
        uint32_t v = val_int(m, ell_);
        if (v < best) best = v;
    }
    return best; // SATURATED if the whole image vanishes mod ell^N
}

uint32_t cyc_val(const CycInt& x, uint32_t ell, size_t factor_index) {
    if (x.is_zero()) return VAL_INF;
    for (uint32_t N = 32; N <= 4096; N *= 2) {
        PadicCtx ctx(ell, x.p(), factor_index, N);
        uint32_t v = ctx.val(x);
        if (v != PadicCtx::SATURATED) return v;
    }
    throw std::runtime_error("cyc_val: precision cap 4096 exceeded (nonzero element saturates)");
}

} // namespace steinberg
