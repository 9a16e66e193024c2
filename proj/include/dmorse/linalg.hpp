/**
 * Dense exact linear algebra over the rationals, and a cyclic Jacobi
 * eigensolver for small real symmetric matrices.
 *
 * Elimination pivots on the first nonzero entry in column order, so echelon
 * forms (and hence kernel bases) are reproducible run to run.
 */
#ifndef DMORSE_LINALG_HPP
#define DMORSE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dmorse/rational.hpp"

namespace dmorse {

using RationalVector = std::vector<Rational>;

class RationalMatrix
{
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector column(std::size_t c) const;
    RationalVector operator*(const RationalVector& x) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    bool is_zero() const;

    bool operator==(const RationalMatrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelonForm
{
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with unit pivots.
RowEchelonForm rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/**
 * Basis of the right null space {x : m x = 0}.  The vectors, stacked as
 * rows, are in reduced row echelon form (leading coefficient +1), which
 * makes the basis canonical for a given subspace.
 */
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

/**
 * Canonical basis of span(vectors): nonzero rows of the RREF of the
 * stacked vectors.  All vectors must share one length.
 */
std::vector<RationalVector> canonical_span_basis(const std::vector<RationalVector>& vectors,
                                                 std::size_t length);

/// Basis (canonical form) of span(a) ∩ span(b); vectors all of one length.
std::vector<RationalVector> subspace_intersection(const std::vector<RationalVector>& a,
                                                  const std::vector<RationalVector>& b,
                                                  std::size_t length);

// ------------------------------------------------------------------------
// Double precision
// ------------------------------------------------------------------------

class RealMatrix
{
  public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RealMatrix transpose() const;
    RealMatrix operator*(const RealMatrix& other) const;
    double inf_norm() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Symmetric matrix; set() writes both (i,j) and (j,i).
class RealSymMatrix
{
  public:
    RealSymMatrix() = default;
    explicit RealSymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    /// Throws DimensionMismatch unless `m` is square and exactly symmetric.
    static RealSymMatrix from(const RealMatrix& m);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, double value)
    {
        data_[i * order_ + j] = value;
        data_[j * order_ + i] = value;
    }
    double inf_norm() const;

  private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

struct SymmetricEigen
{
    std::vector<double> values;   // ascending
    RealMatrix vectors;           // column k pairs with values[k]
    int sweeps = 0;
};

/**
 * Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
 * `tolerance * max(1, ||m||_F)`.  Throws ConvergenceFailure after
 * `max_sweeps` sweeps.
 */
SymmetricEigen sym_eigen(const RealSymMatrix& m, int max_sweeps = 100, double tolerance = 1e-12);

}   // namespace dmorse

#endif
