#include "steinberg/snf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace steinberg {

uint32_t SNFResult::P_mod_ell(size_t i, size_t j) const {
    if (mode == Mode::Exact) {
        Integer v = P_exact[i * m + j] % ell;
        if (v < 0) v += ell;
        return uint32_t(v.get_ui());
    }
    return uint32_t(P_local[i * m + j] % ell);
}

uint32_t SNFResult::Q_mod_ell(size_t i, size_t j) const {
    if (mode == Mode::Exact) {
        Integer v = Q_exact[i * m + j] % ell;
        if (v < 0) v += ell;
        return uint32_t(v.get_ui());
    }
    return uint32_t(Q_local[i * m + j] % ell);
}

uint32_t SNFResult::diag_unit_mod_ell(size_t i) const {
    if (mode == Mode::Exact) {
        Integer u = diag_exact[i * m + i];
        for (uint32_t k = 0; k < vals[i]; ++k) u /= ell;
        u %= ell;
        if (u < 0) u += ell;
        return uint32_t(u.get_ui());
    }
    uint64_t u = diag_local[i * m + i];
    for (uint32_t k = 0; k < vals[i]; ++k) u /= ell;
    return uint32_t(u % ell);
}

// ---------------------------------------------------------------- exact mode

namespace {

struct ExactWork {
    size_t m;
    uint32_t ell;
    std::vector<Integer> A, P, Q;

    Integer& a(size_t i, size_t j) { return A[i * m + j]; }

    void row_sub(std::vector<Integer>& M, size_t dst, size_t src, const Integer& f) {
        for (size_t j = 0; j < m; ++j) M[dst * m + j] -= f * M[src * m + j];
    }
    void col_sub(std::vector<Integer>& M, size_t dst, size_t src, const Integer& f) {
        for (size_t i = 0; i < m; ++i) M[i * m + dst] -= f * M[i * m + src];
    }
    // rows (r1, r2) <- ((s*r1 + t*r2), (-(b/g)*r1 + (a/g)*r2)), det 1
    void row_gcd(size_t r1, size_t r2, const Integer& s, const Integer& t, const Integer& u,
                 const Integer& v, std::vector<Integer>& M) {
        for (size_t j = 0; j < m; ++j) {
            Integer x = M[r1 * m + j], y = M[r2 * m + j];
            M[r1 * m + j] = s * x + t * y;
            M[r2 * m + j] = u * x + v * y;
        }
    }
    void col_gcd(size_t c1, size_t c2, const Integer& s, const Integer& t, const Integer& u,
                 const Integer& v, std::vector<Integer>& M) {
        for (size_t i = 0; i < m; ++i) {
            Integer x = M[i * m + c1], y = M[i * m + c2];
            M[i * m + c1] = s * x + t * y;
            M[i * m + c2] = u * x + v * y;
        }
    }
};

} // namespace

SNFResult snf_exact(const std::vector<long long>& A0, size_t m, uint32_t ell) {
    ExactWork w;
    w.m = m;
    w.ell = ell;
    w.A.resize(m * m);
    for (size_t i = 0; i < m * m; ++i) w.A[i] = long(A0[i]);
    w.P.assign(m * m, 0);
    w.Q.assign(m * m, 0);
    for (size_t i = 0; i < m; ++i) w.P[i * m + i] = w.Q[i * m + i] = 1;

    for (size_t t = 0; t < m; ++t) {
        // pivot: minimal ell-valuation, then |value|, then row-major
        size_t bi = t, bj = t;
        uint32_t bestv = VAL_INF;
        Integer bestabs = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < m; ++j) {
                const Integer& x = w.a(i, j);
                if (x == 0) continue;
                uint32_t v = val_int(x, ell);
                Integer ax = abs(x);
                if (v < bestv || (v == bestv && ax < bestabs)) {
                    bestv = v;
                    bestabs = ax;
                    bi = i;
                    bj = j;
                }
            }
        if (bestv == VAL_INF) throw std::invalid_argument("snf_exact: singular input");
        if (bi != t)
            for (size_t j = 0; j < m; ++j) {
                std::swap(w.A[bi * m + j], w.A[t * m + j]);
                std::swap(w.P[bi * m + j], w.P[t * m + j]);
            }
        if (bj != t)
            for (size_t i = 0; i < m; ++i) {
                std::swap(w.A[i * m + bj], w.A[i * m + t]);
                std::swap(w.Q[i * m + bj], w.Q[i * m + t]);
            }

        bool stable = false;
        while (!stable) {
            stable = true;
            // clear column t
            for (size_t i = t + 1; i < m; ++i) {
                if (w.a(i, t) == 0) continue;
                Integer piv = w.a(t, t), x = w.a(i, t);
                if (x % piv == 0) {
                    Integer f = x / piv;
                    w.row_sub(w.A, i, t, f);
                    w.row_sub(w.P, i, t, f);
                } else {
                    Integer g, s, u;
                    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), piv.get_mpz_t(),
                               x.get_mpz_t());
                    Integer mb = -(x / g), ma = piv / g;
                    w.row_gcd(t, i, s, u, mb, ma, w.A);
                    w.row_gcd(t, i, s, u, mb, ma, w.P);
                    stable = false;
                }
            }
            // clear row t
            for (size_t j = t + 1; j < m; ++j) {
                if (w.a(t, j) == 0) continue;
                Integer piv = w.a(t, t), x = w.a(t, j);
                if (x % piv == 0) {
                    Integer f = x / piv;
                    w.col_sub(w.A, j, t, f);
                    w.col_sub(w.Q, j, t, f);
                    stable = false; // row ops may have refilled the column
                } else {
                    Integer g, s, u;
                    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), piv.get_mpz_t(),
                               x.get_mpz_t());
                    Integer mb = -(x / g), ma = piv / g;
                    w.col_gcd(t, j, s, u, mb, ma, w.A);
                    w.col_gcd(t, j, s, u, mb, ma, w.Q);
                    stable = false;
                }
            }
            if (!stable) continue;
            // recheck column (cleared before the row pass)
            for (size_t i = t + 1; i < m; ++i)
                if (w.a(i, t) != 0) { stable = false; break; }
            if (!stable) continue;
            // divisibility: pivot must divide the remaining submatrix
            for (size_t i = t + 1; i < m && stable; ++i)
                for (size_t j = t + 1; j < m; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.row_sub(w.A, t, i, Integer(-1)); // row_t += row_i
                        w.row_sub(w.P, t, i, Integer(-1));
                        stable = false;
                        break;
                    }
        }
        if (w.a(t, t) < 0) {
            for (size_t j = 0; j < m; ++j) {
                w.A[t * m + j] = -w.A[t * m + j];
                w.P[t * m + j] = -w.P[t * m + j];
            }
        }
    }

    SNFResult r;
    r.mode = SNFResult::Mode::Exact;
    r.ell = ell;
    r.m = m;
    r.P_exact = std::move(w.P);
    r.Q_exact = std::move(w.Q);
    r.diag_exact = std::move(w.A);
    for (size_t i = 0; i < m; ++i) r.vals.push_back(val_int(r.diag_exact[i * m + i], ell));
    assert(std::is_sorted(r.vals.begin(), r.vals.end()));
    return r;
}

// ---------------------------------------------------------------- local mode

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t M) {
    return uint64_t(__uint128_t(a) * b % M);
}

uint64_t inv_mod_pow(uint64_t a, uint64_t M) {
    // extended euclid; a must be a unit
    int64_t t0 = 0, t1 = 1;
    uint64_t r0 = M, r1 = a % M;
    while (r1 != 0) {
        uint64_t q = r0 / r1;
        uint64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - int64_t(q) * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::logic_error("inv_mod_pow: not a unit");
    return t0 < 0 ? uint64_t(t0 + int64_t(M)) : uint64_t(t0);
}

// One attempt at precision N. Returns false on saturation.
bool local_attempt(const std::vector<long long>& A0, size_t m, uint32_t ell, uint32_t N,
                   SNFResult& out) {
    uint64_t M = 1;
    for (uint32_t i = 0; i < N; ++i) M *= ell;
    std::vector<uint64_t> B(m * m), P(m * m, 0), Q(m * m, 0);
    for (size_t i = 0; i < m * m; ++i) {
        long long v = A0[i] % (long long)M;
        if (v < 0) v += (long long)M;
        B[i] = uint64_t(v);
    }
    for (size_t i = 0; i < m; ++i) P[i * m + i] = Q[i * m + i] = 1;

    std::vector<uint32_t> vals(m);
    uint32_t shift = 0;     // ell-power divided out of the remaining block
    uint64_t Mblk = M;      // block entries live mod Mblk = ell^{N - shift}

    for (size_t t = 0; t < m; ++t) {
        // find a unit entry in the remaining block, dividing by ell as needed
        size_t pi = 0, pj = 0;
        for (;;) {
            bool unit = false, nonzero = false;
            for (size_t i = t; i < m && !unit; ++i)
                for (size_t j = t; j < m; ++j) {
                    uint64_t v = B[i * m + j];
                    if (v == 0) continue;
                    nonzero = true;
                    if (v % ell != 0) {
                        pi = i;
                        pj = j;
                        unit = true;
                        break;
                    }
                }
            if (unit) break;
            if (!nonzero || Mblk <= uint64_t(ell) * ell) return false; // saturated
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < m; ++j) B[i * m + j] /= ell;
            ++shift;
            Mblk /= ell;
        }
        if (pi != t)
            for (size_t j = 0; j < m; ++j) {
                std::swap(B[pi * m + j], B[t * m + j]);
                std::swap(P[pi * m + j], P[t * m + j]);
            }
        if (pj != t)
            for (size_t i = 0; i < m; ++i) {
                std::swap(B[i * m + pj], B[i * m + t]);
                std::swap(Q[i * m + pj], Q[i * m + t]);
            }
        uint64_t inv = inv_mod_pow(B[t * m + t], Mblk);
        // clear column t below, then row t to the right (block region only;
        // earlier rows/columns are already zero there)
        for (size_t i = t + 1; i < m; ++i) {
            uint64_t x = B[i * m + t];
            if (x == 0) continue;
            uint64_t f = mulmod(x, inv, Mblk);
            for (size_t j = t; j < m; ++j) {
                uint64_t s = B[i * m + j] + Mblk - mulmod(f, B[t * m + j], Mblk);
                B[i * m + j] = s >= Mblk ? s - Mblk : s;
            }
            for (size_t j = 0; j < m; ++j) {
                uint64_t s = P[i * m + j] + M - mulmod(f, P[t * m + j], M);
                P[i * m + j] = s >= M ? s - M : s;
            }
        }
        for (size_t j = t + 1; j < m; ++j) {
            uint64_t x = B[t * m + j];
            if (x == 0) continue;
            uint64_t f = mulmod(x, inv, Mblk);
            for (size_t i = t; i < m; ++i) {
                uint64_t s = B[i * m + j] + Mblk - mulmod(f, B[i * m + t], Mblk);
                B[i * m + j] = s >= Mblk ? s - Mblk : s;
            }
            for (size_t i = 0; i < m; ++i) {
                uint64_t s = Q[i * m + j] + M - mulmod(f, Q[i * m + t], M);
                Q[i * m + j] = s >= M ? s - M : s;
            }
        }
        vals[t] = shift;
    }
    if (!vals.empty() && vals.back() > N - 2) return false; // not certified

    out.mode = SNFResult::Mode::Local;
    out.ell = ell;
    out.N = N;
    out.m = m;
    out.vals = vals;
    out.P_local = std::move(P);
    out.Q_local = std::move(Q);
    out.diag_local.assign(m * m, 0);
    // Entry t was finalized at shift vals[t] and untouched afterwards, so
    // B[t][t] still holds the pivot residue at that scale. Multiply back.
    for (size_t t = 0; t < m; ++t) {
        uint64_t pw = 1;
        for (uint32_t k = 0; k < vals[t]; ++k) pw *= ell;
        out.diag_local[t * m + t] = mulmod(B[t * m + t] % M, pw, M);
    }
    return true;
}

} // namespace

SNFResult snf_local(const std::vector<long long>& A, size_t m, uint32_t ell) {
    uint32_t maxN = 1;
    for (uint64_t M = ell; M <= (uint64_t(1) << 62) / ell; M *= ell) ++maxN;
    for (uint32_t N = 16;; N *= 2) {
        if (N > maxN) N = maxN;
        SNFResult out;
        if (local_attempt(A, m, ell, N, out)) return out;
        if (N == maxN)
            throw std::runtime_error(
                "snf_local: precision cap exceeded (singular input or valuations too large)");
    }
}

SNFResult snf(const std::vector<long long>& A, size_t m, uint32_t ell) {
    return m <= 256 ? snf_exact(A, m, ell) : snf_local(A, m, ell);
}

} // namespace steinberg
