#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steinberg/finite_field.hpp"

namespace steinberg {

/// Row vector over K; entries are field element indices.
using KVec = std::vector<uint16_t>;

bool kvec_is_zero(const KVec& v);
KVec kvec_scaled(const KField& K, const KVec& v, uint16_t f);
/// dst += f * src
void kvec_axpy(const KField& K, KVec& dst, const KVec& src, uint16_t f);

/// Incremental reduced row-echelon basis of a subspace of K^n.
class Echelon {
public:
    Echelon(const KField& K, size_t ncols);

    size_t dim() const { return rows_.size(); }
    size_t ncols() const { return ncols_; }
    const std::vector<KVec>& basis() const { return rows_; }

    /// Reduce v in place against the basis; afterwards v is zero or has its
    /// leading nonzero at a pivot-free column.
    void reduce(KVec& v) const;
    /// Insert (a reduction of) v; true if the dimension grew.
    bool insert(KVec v);
    bool contains(KVec v) const;

private:
    const KField* K_;
    size_t ncols_;
    std::vector<KVec> rows_;             // leading entry 1, fully reduced
    std::vector<int32_t> row_of_pivot_;  // per column, -1 if none
};

/// Solves x * S = v for a fixed list of spanning rows S (not necessarily
/// independent); also exposes the left kernel accumulated from dependent rows.
class RowSolver {
public:
    RowSolver(const KField& K, const std::vector<KVec>& rows);

    size_t rank() const { return ech_.dim(); }
    /// x with sum_i x_i S_i = v, or nullopt if v is outside the row span.
    std::optional<KVec> solve(const KVec& v) const;
    /// Basis of {x : x * S = 0}.
    const std::vector<KVec>& left_kernel() const { return kernel_; }

private:
    const KField* K_;
    size_t nrows_;
    Echelon ech_;
    std::vector<KVec> transform_; // transform_[i] expresses ech_ row i in S-rows
    std::vector<KVec> kernel_;
};

/// Left kernel basis of the matrix with the given rows.
std::vector<KVec> left_kernel(const KField& K, const std::vector<KVec>& rows);

/// x * M for a dense matrix given as rows (row k = image of basis vector k).
KVec apply_rows(const KField& K, const KVec& x, const std::vector<KVec>& rows);

/// Matrix product A*B where both are given as row lists.
std::vector<KVec> mat_mul(const KField& K, const std::vector<KVec>& A, const std::vector<KVec>& B);

/// Inverse of a square matrix given as rows; throws if singular.
std::vector<KVec> mat_inverse(const KField& K, const std::vector<KVec>& A);

bool mat_is_invertible(const KField& K, std::vector<KVec> A);

} // namespace steinberg
