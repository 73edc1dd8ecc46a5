#include "steinberg/finite_field.hpp"

#include <algorithm>
#include <cassert>

namespace steinberg {

namespace {

void poly_trim(SmallPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const SmallPoly& f) { return int(f.size()) - 1; }

SmallPoly poly_mul(const SmallPoly& a, const SmallPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    SmallPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint16_t((c[i + j] + uint32_t(a[i]) * b[j]) % p);
    poly_trim(c);
    return c;
}

// Remainder of a by monic b.
SmallPoly poly_rem(SmallPoly a, const SmallPoly& b, uint32_t p) {
    assert(!b.empty() && b.back() == 1);
    poly_trim(a);
    while (poly_deg(a) >= poly_deg(b)) {
        uint32_t lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint32_t v = (uint32_t(a[shift + i]) + p * lead - lead * b[i] % p) % p;
            a[shift + i] = uint16_t(v);
        }
        poly_trim(a);
    }
    return a;
}

SmallPoly index_to_poly(uint64_t idx, uint32_t p) {
    SmallPoly f;
    while (idx > 0) {
        f.push_back(uint16_t(idx % p));
        idx /= p;
    }
    return f;
}

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t multiplicative_order(uint32_t a, uint32_t m) {
    if (m < 2 || a % m == 0) throw std::invalid_argument("multiplicative_order: a not a unit");
    uint64_t x = a % m;
    uint32_t k = 1;
    while (x != 1) {
        x = x * a % m;
        ++k;
        if (k > m) throw std::invalid_argument("multiplicative_order: a not a unit mod m");
    }
    return k;
}

bool poly_is_irreducible(const SmallPoly& f, uint32_t p) {
    int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false; // divisible by x
    // Trial division by all monic polynomials of degree 1..d/2.
    for (int k = 1; 2 * k <= d; ++k) {
        uint64_t cnt = ipow(p, uint32_t(k));
        for (uint64_t idx = 0; idx < cnt; ++idx) {
            SmallPoly g = index_to_poly(idx, p);
            g.resize(size_t(k) + 1, 0);
            g[size_t(k)] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

SmallPoly smallest_irreducible(uint32_t p, uint32_t e) {
    uint64_t cnt = ipow(p, e);
    for (uint64_t idx = 0; idx < cnt; ++idx) {
        SmallPoly f = index_to_poly(idx, p);
        f.resize(size_t(e) + 1, 0);
        f[e] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("smallest_irreducible: none found");
}

std::vector<SmallPoly> factor_cyclotomic_mod(uint32_t p, uint32_t ell) {
    if (p == ell) throw std::invalid_argument("factor_cyclotomic_mod: ell == p");
    SmallPoly phi(p, 1); // 1 + t + ... + t^{p-1}
    for (auto& c : phi) c = uint16_t(1 % ell);
    uint32_t d = multiplicative_order(ell % p, p);
    std::vector<SmallPoly> out;
    SmallPoly rest = phi;
    uint64_t cnt = ipow(ell, d);
    for (uint64_t idx = 0; idx < cnt && poly_deg(rest) > 0; ++idx) {
        SmallPoly g = index_to_poly(idx, ell);
        g.resize(size_t(d) + 1, 0);
        g[d] = 1;
        if (!poly_is_irreducible(g, ell)) continue;
        while (poly_deg(rest) > 0 && poly_rem(rest, g, ell).empty()) {
            out.push_back(g);
            // rest /= g (exact monic division)
            SmallPoly quo(rest.size() - g.size() + 1, 0);
            SmallPoly r = rest;
            for (int i = int(quo.size()) - 1; i >= 0; --i) {
                uint32_t lead = r[size_t(i) + g.size() - 1];
                quo[size_t(i)] = uint16_t(lead);
                for (size_t j = 0; j < g.size(); ++j) {
                    uint32_t v = (uint32_t(r[size_t(i) + j]) + ell * lead - lead * g[j] % ell) % ell;
                    r[size_t(i) + j] = uint16_t(v);
                }
            }
            rest = quo;
        }
    }
    if (poly_deg(rest) != 0)
        throw std::logic_error("factor_cyclotomic_mod: incomplete factorization");
    return out;
}

FqField::FqField(uint32_t p, uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("FqField: p not prime");
    if (e == 0) throw std::invalid_argument("FqField: e == 0");
    uint64_t q = ipow(p, e);
    if (q > 4096) throw std::invalid_argument("FqField: q > 4096 unsupported");
    q_ = uint32_t(q);
    modulus_ = smallest_irreducible(p, e);

    add_.resize(size_t(q_) * q_);
    mul_.resize(size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    trace_.resize(q_);

    auto to_poly = [&](Elem a) {
        SmallPoly f = index_to_poly(a, p_);
        return f;
    };
    auto to_index = [&](const SmallPoly& f) {
        uint32_t idx = 0;
        for (size_t i = f.size(); i-- > 0;) idx = idx * p_ + f[i];
        return Elem(idx);
    };

    for (uint32_t a = 0; a < q_; ++a) {
        SmallPoly fa = to_poly(Elem(a));
        // negation
        SmallPoly nf = fa;
        for (auto& c : nf) c = uint16_t((p_ - c) % p_);
        poly_trim(nf);
        neg_[a] = to_index(nf);
        for (uint32_t b = 0; b < q_; ++b) {
            SmallPoly fb = to_poly(Elem(b));
            SmallPoly s(std::max(fa.size(), fb.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                uint32_t v = (i < fa.size() ? fa[i] : 0u) + (i < fb.size() ? fb[i] : 0u);
                s[i] = uint16_t(v % p_);
            }
            poly_trim(s);
            add_[size_t(a) * q_ + b] = to_index(s);
            SmallPoly m = poly_rem(poly_mul(fa, fb, p_), modulus_, p_);
            mul_[size_t(a) * q_ + b] = to_index(m);
        }
    }
    for (uint32_t a = 1; a < q_; ++a)
        for (uint32_t b = 1; b < q_; ++b)
            if (mul(Elem(a), Elem(b)) == 1) { inv_[a] = Elem(b); break; }

    for (uint32_t a = 0; a < q_; ++a) {
        Elem t = 0, x = Elem(a);
        for (uint32_t i = 0; i < e_; ++i) {
            t = add(t, x);
            x = pow(x, p_);
        }
        assert(t < p_);
        trace_[a] = t;
    }

    gen_ = 1;
    for (uint32_t a = 1; a < q_; ++a) {
        uint32_t ord = 1;
        Elem x = Elem(a);
        while (x != 1) { x = mul(x, Elem(a)); ++ord; }
        if (ord == q_ - 1) { gen_ = Elem(a); break; }
    }
}

FqField::Elem FqField::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("FqField::inv: zero");
    return inv_[a];
}

FqField::Elem FqField::pow(Elem a, uint64_t k) const {
    Elem r = 1, b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

FqField::Elem FqField::from_int(int64_t v) const {
    int64_t m = v % int64_t(p_);
    if (m < 0) m += p_;
    return Elem(m);
}

static uint32_t residue_degree(uint32_t ell, uint32_t p_char) {
    if (!is_prime(ell) || !is_prime(p_char))
        throw std::invalid_argument("KField: ell, p must be prime");
    if (ell == p_char) throw std::invalid_argument("KField: ell == p");
    return multiplicative_order(ell % p_char, p_char);
}

KField::KField(uint32_t ell, uint32_t p_char)
    : FqField(ell, residue_degree(ell, p_char)), p_char_(p_char) {
    // omega = x0^{(q-1)/p} for the first x0 whose power has order exactly p
    uint64_t k = (q() - 1) / p_char_;
    omega_ = 0;
    for (uint32_t a = 1; a < q(); ++a) {
        Elem w = pow(Elem(a), k);
        if (w != 1) { omega_ = w; break; }
    }
    if (omega_ == 0) throw std::logic_error("KField: no element of order p");
    assert(pow(omega_, p_char_) == 1);

    factors_ = factor_cyclotomic_mod(p_char_, ell);
    for (const auto& g : factors_) {
        Elem root = 0;
        bool found = false;
        for (uint32_t a = 0; a < q() && !found; ++a) {
            Elem v = 0;
            for (size_t i = g.size(); i-- > 0;) v = add(mul(v, Elem(a)), from_int(g[i]));
            if (v == 0) { root = Elem(a); found = true; }
        }
        if (!found) throw std::logic_error("KField: factor has no root in K");
        zeta_roots_.push_back(root);
    }
}

const SmallPoly& KField::factor(size_t idx) const {
    if (idx >= factors_.size()) throw std::out_of_range("KField::factor: index out of range");
    return factors_[idx];
}

KField::Elem KField::zeta_image(size_t idx) const {
    if (idx >= zeta_roots_.size()) throw std::out_of_range("KField::zeta_image: index out of range");
    return zeta_roots_[idx];
}

} // namespace steinberg
