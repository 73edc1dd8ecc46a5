#include "steinberg/typea.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace steinberg {

std::optional<Root> root_sum(Root r, Root s) {
    // [i,j] + [j,k] = [i,k]
    if (r.j == s.i && r.i != s.j) return Root{r.i, s.j};
    if (s.j == r.i && s.i != r.j) return Root{s.i, r.j};
    return std::nullopt;
}

bool root_orth(Root r, Root s) {
    // <e_i - e_j, e_k - e_l> = 0 iff the index sets are disjoint
    return r.i != s.i && r.i != s.j && r.j != s.i && r.j != s.j;
}

Root root_apply(const std::vector<int>& w, Root r) {
    return Root{w[size_t(r.i) - 1], w[size_t(r.j) - 1]};
}

std::vector<Root> simple_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i < n; ++i) out.push_back({i, i + 1});
    return out;
}

std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int h = 1; h < n; ++h)
        for (int i = 1; i + h <= n; ++i) out.push_back({i, i + h});
    return out;
}

GLMat::GLMat(const FqField& F, int n) : F_(&F), n_(n), a_(size_t(n) * n, 0) {
    for (int i = 0; i < n; ++i) at(i, i) = 1;
}

GLMat GLMat::operator*(const GLMat& o) const {
    GLMat r(*F_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            FqField::Elem s = 0;
            for (int k = 0; k < n_; ++k) s = F_->add(s, F_->mul(at(i, k), o.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

FqField::Elem GLMat::det() const {
    GLMat m = *this;
    FqField::Elem d = 1;
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (m.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = F_->neg(d);
        }
        d = F_->mul(d, m.at(c, c));
        FqField::Elem inv = F_->inv(m.at(c, c));
        for (int r = c + 1; r < n_; ++r) {
            if (m.at(r, c) == 0) continue;
            FqField::Elem f = F_->mul(m.at(r, c), inv);
            for (int j = c; j < n_; ++j)
                m.at(r, j) = F_->sub(m.at(r, j), F_->mul(f, m.at(c, j)));
        }
    }
    return d;
}

GLMat GLMat::inverse() const {
    GLMat m = *this, inv(*F_, n_);
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (m.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("GLMat::inverse: singular");
        for (int j = 0; j < n_; ++j) {
            std::swap(m.at(piv, j), m.at(c, j));
            std::swap(inv.at(piv, j), inv.at(c, j));
        }
        FqField::Elem f = F_->inv(m.at(c, c));
        for (int j = 0; j < n_; ++j) {
            m.at(c, j) = F_->mul(f, m.at(c, j));
            inv.at(c, j) = F_->mul(f, inv.at(c, j));
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            FqField::Elem g = m.at(r, c);
            for (int j = 0; j < n_; ++j) {
                m.at(r, j) = F_->sub(m.at(r, j), F_->mul(g, m.at(c, j)));
                inv.at(r, j) = F_->sub(inv.at(r, j), F_->mul(g, inv.at(c, j)));
            }
        }
    }
    return inv;
}

bool GLMat::is_unitriangular() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

GLMat t_elem(const FqField& F, int n, Root r, FqField::Elem a) {
    GLMat m(F, n);
    m.at(r.i - 1, r.j - 1) = a;
    return m;
}

GLMat w_elem(const FqField& F, int n, Root r) {
    GLMat m(F, n);
    int i = r.i - 1, j = r.j - 1;
    m.at(i, i) = 0;
    m.at(j, j) = 0;
    m.at(i, j) = 1;
    m.at(j, i) = 1;
    return m;
}

GLMat perm_mat(const FqField& F, const std::vector<int>& w) {
    int n = int(w.size());
    GLMat m(F, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = 0;
    // column j has its 1 in row w(j)
    for (int j = 0; j < n; ++j) m.at(w[size_t(j)] - 1, j) = 1;
    return m;
}

GLMat diag_mat(const FqField& F, const std::vector<FqField::Elem>& d) {
    int n = int(d.size());
    GLMat m(F, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d[size_t(i)];
    return m;
}

bool in_B(const GLMat& g) {
    for (int i = 0; i < g.n(); ++i) {
        if (g.at(i, i) == 0) return false;
        for (int j = 0; j < i; ++j)
            if (g.at(i, j) != 0) return false;
    }
    return true;
}

UFactor u_factor(const GLMat& u, Root r) {
    if (!r.simple()) throw std::invalid_argument("u_factor: root not simple");
    if (!u.is_unitriangular()) throw std::invalid_argument("u_factor: not unitriangular");
    const FqField& F = u.field();
    FqField::Elem c = u.at(r.i - 1, r.j - 1);
    GLMat u2 = u * t_elem(F, u.n(), r, F.neg(c));
    return {u2, c};
}

UniIndex::UniIndex(const FqField& F, int n) : F_(&F), n_(n) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pos_.push_back({i, j});
    size_ = 1;
    for (size_t k = 0; k < pos_.size(); ++k) size_ *= F.q();
}

uint64_t UniIndex::index(const GLMat& u) const {
    uint64_t idx = 0;
    for (auto [i, j] : pos_) idx = idx * F_->q() + u.at(i, j);
    return idx;
}

GLMat UniIndex::decode(uint64_t k) const {
    GLMat u(*F_, n_);
    for (size_t t = pos_.size(); t-- > 0;) {
        u.at(pos_[t].first, pos_[t].second) = FqField::Elem(k % F_->q());
        k /= F_->q();
    }
    return u;
}

GLMat gen_matrix(const FqField& F, int n, const Gen& g) {
    switch (g.kind) {
        case Gen::T: return t_elem(F, n, g.r, g.a);
        case Gen::W: return w_elem(F, n, g.r);
        case Gen::H: {
            std::vector<FqField::Elem> d(size_t(n), 1);
            d[size_t(g.i) - 1] = g.a;
            return diag_mat(F, d);
        }
    }
    throw std::logic_error("gen_matrix: bad kind");
}

std::vector<Gen> group_generators(const FqField& F, int n) {
    std::vector<Gen> out;
    for (Root r : simple_roots(n)) {
        // F_p-basis 1, x, x^2, ... of F_q (powers of the residue generator x)
        for (uint32_t k = 0; k < F.e(); ++k) {
            FqField::Elem b = 1;
            for (uint32_t j = 0; j < k; ++j) b = FqField::Elem(b * F.p()); // index of x^k
            out.push_back({Gen::T, r, b, 0});
        }
    }
    for (Root r : simple_roots(n)) out.push_back({Gen::W, r, 0, 0});
    if (F.q() > 2) {
        FqField::Elem c = F.multiplicative_generator();
        for (int i = 1; i <= n; ++i) out.push_back({Gen::H, Root{0, 0}, c, i});
    }
    return out;
}

namespace {

// Letters for a permutation given as images w(1..n): adjacent transpositions
// via selection sort on slots. Swapping slots a,b replaces the sequence s by
// s o (a b), so sorting gives s o tau_1 o ... o tau_m = id and the matrix
// factorization P_s = P_{tau_m} ... P_{tau_1}: emit in reverse order.
void perm_word(std::vector<int> w, std::vector<Gen>& out) {
    int n = int(w.size());
    std::vector<Gen> letters;
    for (int target = 1; target <= n; ++target) {
        int pos = -1;
        for (int k = target; k <= n; ++k)
            if (w[size_t(k) - 1] == target) { pos = k; break; }
        assert(pos >= target);
        for (int k = pos; k > target; --k) {
            std::swap(w[size_t(k) - 1], w[size_t(k) - 2]);
            letters.push_back({Gen::W, Root{k - 1, k}, 0, 0});
        }
    }
    out.insert(out.end(), letters.rbegin(), letters.rend());
}

// t_{[i,j]}(a) for a positive root, as simple letters:
// t_{[i,j]} = w_{[j-1,j]} t_{[i,j-1]} w_{[j-1,j]} when j > i+1.
void t_root_word(Root r, FqField::Elem a, std::vector<Gen>& out) {
    assert(r.positive());
    if (r.simple()) {
        if (a != 0) out.push_back({Gen::T, r, a, 0});
        return;
    }
    if (a == 0) return;
    Gen w{Gen::W, Root{r.j - 1, r.j}, 0, 0};
    out.push_back(w);
    t_root_word(Root{r.i, r.j - 1}, a, out);
    out.push_back(w);
}

// A unitriangular u as a word: peel diagonals of increasing height.
void unitri_word(const GLMat& u0, std::vector<Gen>& out) {
    const FqField& F = u0.field();
    int n = u0.n();
    GLMat u = u0;
    for (int h = 1; h < n; ++h) {
        // the height-h entries of u are realized by a product of t's; the
        // remainder has those entries zero and lives in higher diagonals
        GLMat prod(F, n);
        for (int i = 0; i + h < n; ++i) {
            FqField::Elem a = u.at(i, i + h);
            if (a == 0) continue;
            Root r{i + 1, i + 1 + h};
            t_root_word(r, a, out);
            prod = prod * t_elem(F, n, r, a);
        }
        u = prod.inverse() * u;
    }
    assert(u == GLMat(F, n));
}

void dlog_word(const FqField& F, int i, FqField::Elem d, std::vector<Gen>& out) {
    if (d == 1) return;
    FqField::Elem c = F.multiplicative_generator();
    FqField::Elem x = c;
    uint32_t k = 1;
    while (x != d) {
        x = F.mul(x, c);
        ++k;
    }
    for (uint32_t t = 0; t < k; ++t) out.push_back({Gen::H, Root{0, 0}, c, i});
}

} // namespace

std::vector<Gen> gl_word(const GLMat& g) {
    const FqField& F = g.field();
    int n = g.n();
    if (g.det() == 0) throw std::invalid_argument("gl_word: singular input");

    // Row/column reduce to a monomial matrix: g = u1 * m * u2 with u1, u2 in U.
    GLMat m = g, u1(F, n), u2(F, n);
    std::vector<bool> rowdone(size_t(n), false);
    for (int j = 0; j < n; ++j) {
        int piv = -1;
        for (int i = n - 1; i >= 0; --i)
            if (!rowdone[size_t(i)] && m.at(i, j) != 0) { piv = i; break; }
        assert(piv >= 0);
        rowdone[size_t(piv)] = true;
        FqField::Elem inv = F.inv(m.at(piv, j));
        // clear above the pivot (row ops from U on the left)
        for (int i = 0; i < piv; ++i) {
            FqField::Elem v = m.at(i, j);
            if (v == 0) continue;
            FqField::Elem f = F.mul(v, inv);
            for (int k = 0; k < n; ++k) {
                m.at(i, k) = F.sub(m.at(i, k), F.mul(f, m.at(piv, k)));
                // u1 accumulates the inverse op: u1 <- u1 * t_{i,piv}(f)
            }
            for (int k = 0; k < n; ++k)
                u1.at(k, piv) = F.add(u1.at(k, piv), F.mul(u1.at(k, i), f));
        }
        // clear right of the pivot (column ops from U on the right)
        for (int k = j + 1; k < n; ++k) {
            FqField::Elem v = m.at(piv, k);
            if (v == 0) continue;
            FqField::Elem f = F.mul(v, inv);
            for (int i = 0; i < n; ++i)
                m.at(i, k) = F.sub(m.at(i, k), F.mul(f, m.at(i, j)));
            for (int i = 0; i < n; ++i)
                u2.at(j, i) = F.add(u2.at(j, i), F.mul(f, u2.at(k, i)));
        }
    }
    assert(g == u1 * m * u2);

    // m = perm * diag
    std::vector<int> w(size_t(n), 0);
    std::vector<FqField::Elem> d(size_t(n), 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i)
            if (m.at(i, j) != 0) {
                w[size_t(j)] = i + 1;
                d[size_t(j)] = m.at(i, j);
                break;
            }
    }

    std::vector<Gen> out;
    unitri_word(u1, out);
    perm_word(w, out);
    for (int i = 1; i <= n; ++i) dlog_word(F, i, d[size_t(i) - 1], out);
    unitri_word(u2, out);
    return out;
}

} // namespace steinberg
