#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steinberg/finite_field.hpp"

namespace steinberg {

/// Root [i,j] = e_i - e_j of the A_{n-1} system, 1-based, i != j.
/// Positive iff i < j, simple iff j = i+1.
struct Root {
    int i, j;
    bool positive() const { return i < j; }
    bool simple() const { return j == i + 1; }
    Root operator-() const { return {j, i}; }
    bool operator==(const Root& o) const { return i == o.i && j == o.j; }
};

std::optional<Root> root_sum(Root r, Root s);
bool root_orth(Root r, Root s);
/// w([i,j]) = [w(i), w(j)] for a permutation w of 1..n (w[k-1] = w(k)).
Root root_apply(const std::vector<int>& w, Root r);

std::vector<Root> simple_roots(int n);
std::vector<Root> positive_roots(int n); // height-then-lex order

/// Square matrix over GF(q); group elements are invertible by construction.
class GLMat {
public:
    GLMat(const FqField& F, int n); // identity
    const FqField& field() const { return *F_; }
    int n() const { return n_; }
    FqField::Elem& at(int r, int c) { return a_[size_t(r) * n_ + c]; } // 0-based
    FqField::Elem at(int r, int c) const { return a_[size_t(r) * n_ + c]; }

    GLMat operator*(const GLMat& o) const;
    bool operator==(const GLMat& o) const { return a_ == o.a_; }
    bool operator!=(const GLMat& o) const { return !(*this == o); }

    FqField::Elem det() const;
    GLMat inverse() const;
    bool is_unitriangular() const;

private:
    const FqField* F_;
    int n_;
    std::vector<FqField::Elem> a_;
};

/// t_r(a) = I + a E^{ij}.
GLMat t_elem(const FqField& F, int n, Root r, FqField::Elem a);
/// Permutation matrix of the transposition (i,j).
GLMat w_elem(const FqField& F, int n, Root r);
/// Permutation matrix of an arbitrary w in S_n (w[k-1] = w(k), 1-based values).
GLMat perm_mat(const FqField& F, const std::vector<int>& w);
GLMat diag_mat(const FqField& F, const std::vector<FqField::Elem>& d);

/// Upper triangular with invertible diagonal, i.e. membership in B = UH.
bool in_B(const GLMat& g);

/// u = u'' * t_r(c) with r = [i,i+1] simple, c = u_{i,i+1}, and u'' having
/// zero (i,i+1) entry (so w_r u'' w_r^{-1} is again unitriangular).
struct UFactor {
    GLMat u2;
    FqField::Elem c;
};
UFactor u_factor(const GLMat& u, Root r);

/// Bijection between U (upper unitriangular) and 0..q^{n(n-1)/2}-1: the
/// strictly upper positions in row-major order are base-q digits, first
/// position most significant; digit values follow the field element order.
class UniIndex {
public:
    UniIndex(const FqField& F, int n);
    uint64_t size() const { return size_; }
    int n() const { return n_; }
    const FqField& field() const { return *F_; }
    const std::vector<std::pair<int, int>>& positions() const { return pos_; } // 0-based pairs

    uint64_t index(const GLMat& u) const;
    GLMat decode(uint64_t k) const;

private:
    const FqField* F_;
    int n_;
    uint64_t size_;
    std::vector<std::pair<int, int>> pos_;
};

/// Generator alphabet for GL_n(q): t_r(a) for simple r, w_r for simple r,
/// and h_i(c) = diag(1,..,c,..,1) with c the fixed generator of GF(q)*.
struct Gen {
    enum Kind { T, W, H } kind;
    Root r{0, 0};       // T, W
    FqField::Elem a{0}; // T: the added entry; H: the diagonal value
    int i{0};           // H: 1-based position
};

GLMat gen_matrix(const FqField& F, int n, const Gen& g);

/// Generating set used for module spinning: t_r(b) for b in an F_p-basis of
/// F_q, w_r (r simple), and h_i(c) for the fixed generator c (omitted at q=2).
std::vector<Gen> group_generators(const FqField& F, int n);

/// Word in the generator alphabet whose product equals g (Bruhat-style
/// decomposition g = u1 * monomial * u2, each part spelled in letters).
std::vector<Gen> gl_word(const GLMat& g);

} // namespace steinberg
