#pragma once

// Exact dense linear algebra over Q(i): a small matrix type and a certifying
// solver.  The forward pass is fraction-free (rows are pre-scaled to Gaussian
// integers; combines use cross-multiplication and strip the integer content
// afterwards, so every division is exact); back-substitution is plain rational
// division.  Pivoting is deterministic (first row with a nonzero entry).

#include <cstddef>
#include <optional>
#include <vector>

#include "hvloop/scalar.hpp"

namespace hvloop {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    GaussianRational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

private:
    size_t rows_;
    size_t cols_;
    std::vector<GaussianRational> data_;
};

enum class SolveStatus { unique, underdetermined, infeasible };

/// Result of rank_and_solve.  Every certificate re-verifies exactly:
///   unique/underdetermined: M*solution == b, and M*k == 0 for each kernel
///   basis vector k (kernel vectors are normalized so their first nonzero
///   entry is 1);
///   infeasible: witness y satisfies y^T*M == 0 and y^T*b != 0.
struct LinearSolveResult {
    SolveStatus status = SolveStatus::infeasible;
    size_t rank = 0;
    std::optional<std::vector<GaussianRational>> solution;
    std::vector<std::vector<GaussianRational>> kernel_basis;
    std::optional<std::vector<GaussianRational>> infeasibility_witness;
};

/// Solve M*x = b exactly.  Throws std::invalid_argument on a row-count
/// mismatch between M and b.
LinearSolveResult rank_and_solve(const Matrix& m, const std::vector<GaussianRational>& b);

/// Rank only (skips certificate bookkeeping; same elimination scheme).
size_t exact_rank(const Matrix& m);

/// Exact matrix-vector product, used by certificate re-verification.
std::vector<GaussianRational> matvec(const Matrix& m, const std::vector<GaussianRational>& x);

}  // namespace hvloop
