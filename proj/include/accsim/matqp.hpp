#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "accsim/errors.hpp"

namespace accsim::qp {

/// Dense row-major matrix of doubles. Sized for the small systems this
/// project works with (a handful of columns, a few hundred rows); no view
/// types, no sparsity.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    /// Build from an explicit row list, e.g. Matrix::from_rows({{1,0},{0,1}}).
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    std::vector<double> operator*(const std::vector<double>& v) const;
    /// transpose(*this) * v without forming the transpose.
    std::vector<double> transpose_times(const std::vector<double>& v) const;
    /// Copies `src` into this matrix with its top-left entry at (i, j).
    void set_block(std::size_t i, std::size_t j, const Matrix& src);
    /// Appends the rows of `src` below this matrix (column counts must agree;
    /// an empty matrix adopts src's column count).
    void append_rows(const Matrix& src);

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_; // row-major
};

/// Cholesky factorization (L*L^T) of a symmetric positive definite matrix.
/// Throws NotPositiveDefinite when a pivot is not strictly positive.
class SpdFactor {
public:
    explicit SpdFactor(const Matrix& e);
    std::vector<double> solve(const std::vector<double>& rhs) const;
    /// Solves E*X = B column by column.
    Matrix solve_matrix(const Matrix& b) const;
    std::size_t dim() const { return n_; }

private:
    std::size_t n_ = 0;
    Matrix l_;
};

/// Solves E*x = rhs for symmetric positive definite E.
std::vector<double> solve_spd(const Matrix& e, const std::vector<double>& rhs);

/// min 0.5*x'Ex + f'x  subject to  M*x <= gamma. E symmetric positive
/// definite; M may have zero rows (no inequalities).
struct QpProblem {
    Matrix e;
    std::vector<double> f;
    Matrix m;
    std::vector<double> gamma;

    std::size_t num_vars() const { return f.size(); }
    std::size_t num_constraints() const { return gamma.size(); }
    /// Checks dimensions, finiteness and symmetry (1e-12 relative).
    void validate() const;
};

enum class QpStatus {
    kOptimal,
    kMaxIterations,
    kUnconstrainedOptimumFeasible,
};

const char* to_string(QpStatus s);

struct QpSolution {
    std::vector<double> delta_u;
    std::vector<double> duals; // one per inequality, >= 0
    QpStatus status = QpStatus::kOptimal;
    int iterations = 0;
};

/// Hildreth's dual coordinate ascent for small dense QPs.
///
/// If the unconstrained minimizer -E^{-1}f already satisfies the
/// inequalities it is returned directly with zero duals. Otherwise the dual
/// vector is swept componentwise, lambda_i <- max(0, .), until the largest
/// dual change falls below `tol` or `max_iter` sweeps have run. The primal
/// is recovered as x = -E^{-1}(f + M'lambda).
///
/// Infeasible problems are not detected; they surface as kMaxIterations
/// with the best iterate found.
QpSolution hildreth_qp(const QpProblem& p, double tol = 1e-8, int max_iter = 500);

/// Max of stationarity (inf-norm of Ex + f + M'lambda), primal feasibility
/// (largest positive entry of Mx - gamma) and complementary slackness
/// (largest |lambda_i * (Mx - gamma)_i|).
double kkt_residual(const QpProblem& p, const QpSolution& s);

} // namespace accsim::qp
