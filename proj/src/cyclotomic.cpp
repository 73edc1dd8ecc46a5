#include "steinberg/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace steinberg {

uint32_t val_int(const Integer& x, uint32_t ell) {
    if (x == 0) return VAL_INF;
    mpz_class rest;
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), mpz_class(ell).get_mpz_t());
    return uint32_t(k);
}

CycInt CycInt::zeta_pow(uint32_t p, uint64_t k) {
    CycInt z(p);
    k %= p;
    if (k < p - 1) {
        z.c_[size_t(k)] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : z.c_) c = -1;
    }
    return z;
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

void CycInt::check_compat(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mismatched p");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_compat(o);
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_compat(o);
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_compat(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_compat(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt CycInt::operator*(const Integer& s) const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_compat(o);
    size_t m = c_.size();
    std::vector<Integer> conv(2 * m - 1, 0);
    for (size_t i = 0; i < m; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < m; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    // Fold zeta^k for k >= p-1 using zeta^{p-1} = -(1 + ... + zeta^{p-2}).
    for (size_t k = conv.size(); k-- > m;) {
        if (conv[k] == 0) continue;
        Integer v = conv[k];
        conv[k] = 0;
        for (size_t j = 0; j < m; ++j) conv[k - m + j] -= v;
    }
    CycInt r(p_);
    for (size_t i = 0; i < m; ++i) r.c_[i] = conv[i];
    return r;
}

KField::Elem CycInt::reduce(const KField& K, size_t factor_index) const {
    if (K.p_char() != p_) throw std::invalid_argument("CycInt::reduce: field/p mismatch");
    KField::Elem z = K.zeta_image(factor_index);
    KField::Elem acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        Integer m = c_[i] % K.ell();
        if (m < 0) m += K.ell();
        acc = K.add(K.mul(acc, z), KField::Elem(m.get_ui()));
    }
    return acc;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i >= 1) os << "*z";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace steinberg
