#include "steinberg/parabolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace steinberg {

Integer q_factorial(int n, uint32_t q) {
    // prod_{i=1..n} (q^i - 1)/(q - 1)
    Integer out = 1, qi = 1;
    for (int i = 1; i <= n; ++i) {
        qi *= q;
        out *= (qi - 1) / (q - 1);
    }
    return out;
}

Integer parabolic_index_in_B(uint32_t mask, int n, uint32_t q) {
    // [P_J : B] = product over maximal consecutive blocks of J of [b+1]_q!
    if (n < 1) throw std::invalid_argument("parabolic_index_in_B: n < 1");
    Integer out = 1;
    int k = 0;
    while (k < n - 1) {
        if (!(mask >> k & 1)) { ++k; continue; }
        int b = 0;
        while (k < n - 1 && (mask >> k & 1)) { ++b; ++k; }
        out *= q_factorial(b + 1, q);
    }
    return out;
}

Integer parabolic_index(uint32_t mask, int n, uint32_t q) {
    Integer gb = q_factorial(n, q);
    Integer pb = parabolic_index_in_B(mask, n, q);
    Integer out;
    mpz_divexact(out.get_mpz_t(), gb.get_mpz_t(), pb.get_mpz_t());
    return out;
}

bool ParabolicTable::level_attained(uint32_t k) const {
    return std::binary_search(levels.begin(), levels.end(), k);
}

ParabolicTable build_parabolic_table(int n, uint32_t q, uint32_t ell) {
    // q = p^e; reject ell = p
    uint32_t p = 2;
    while (q % p != 0) ++p;
    if (ell == p) throw std::invalid_argument("build_parabolic_table: ell equals the defining characteristic");

    ParabolicTable t;
    t.n = n;
    t.q = q;
    t.ell = ell;
    std::set<uint32_t> attained;
    uint32_t nsub = 1u << (n - 1);
    for (uint32_t mask = 0; mask < nsub; ++mask) {
        ParabolicRow row;
        row.mask = mask;
        row.pj_over_b = parabolic_index_in_B(mask, n, q);
        row.g_over_pj = parabolic_index(mask, n, q);
        row.val = row.g_over_pj == 1 ? 0 : val_int(row.g_over_pj, ell);
        attained.insert(row.val);
        t.rows.push_back(row);
    }
    t.kappa1 = t.rows[0].val;
    t.kappa2 = n >= 2 ? t.rows[1].val : t.kappa1; // any singleton; all agree
    t.levels.assign(attained.begin(), attained.end());
    return t;
}

} // namespace steinberg
