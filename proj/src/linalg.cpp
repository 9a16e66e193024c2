#include "dmorse/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dmorse/error.hpp"

namespace dmorse {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::column(std::size_t c) const
{
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const
{
    if (x.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
        {
            if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0)
                out[r] += (*this)(r, c) * x[c];
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    if (cols_ != other.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
    {
        for (std::size_t k = 0; k < cols_; ++k)
        {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
            {
                if (sgn(other(k, c)) != 0)
                    out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RowEchelonForm rref(RationalMatrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
        {
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        }
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r)
        {
            if (r == row || sgn(m(r, col)) == 0)
                continue;
            Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
            {
                if (sgn(m(row, c)) != 0)
                    m(r, c) -= factor * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m)
{
    return rref(m).pivot_columns.size();
}

std::vector<RationalVector> canonical_span_basis(const std::vector<RationalVector>& vectors,
                                                 std::size_t length)
{
    RationalMatrix stacked(vectors.size(), length);
    for (std::size_t r = 0; r < vectors.size(); ++r)
    {
        if (vectors[r].size() != length)
            throw Error(ErrorKind::DimensionMismatch, "vector length differs");
        for (std::size_t c = 0; c < length; ++c)
            stacked(r, c) = vectors[r][c];
    }
    auto echelon = rref(std::move(stacked));
    std::vector<RationalVector> out;
    for (std::size_t r = 0; r < echelon.pivot_columns.size(); ++r)
    {
        RationalVector v(length);
        for (std::size_t c = 0; c < length; ++c)
            v[c] = echelon.reduced(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m)
{
    auto echelon = rref(m);
    const auto& pivots = echelon.pivot_columns;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<RationalVector> raw;
    for (std::size_t free = 0; free < m.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -echelon.reduced(r, free);
        raw.push_back(std::move(v));
    }
    return canonical_span_basis(raw, m.cols());
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b)
{
    if (b.size() != m.rows())
        throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    RationalMatrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            augmented(r, c) = m(r, c);
        augmented(r, m.cols()) = b[r];
    }
    auto echelon = rref(std::move(augmented));
    RationalVector x(m.cols());
    for (std::size_t r = 0; r < echelon.pivot_columns.size(); ++r)
    {
        std::size_t p = echelon.pivot_columns[r];
        if (p == m.cols())
            return std::nullopt;   // 0 = 1 row
        x[p] = echelon.reduced(r, m.cols());
    }
    return x;
}

std::vector<RationalVector> subspace_intersection(const std::vector<RationalVector>& a,
                                                  const std::vector<RationalVector>& b,
                                                  std::size_t length)
{
    auto basis_a = canonical_span_basis(a, length);
    auto basis_b = canonical_span_basis(b, length);
    if (basis_a.empty() || basis_b.empty())
        return {};

    // x = A y = B z  <=>  [A | -B] (y, z) = 0
    RationalMatrix joint(length, basis_a.size() + basis_b.size());
    for (std::size_t r = 0; r < length; ++r)
    {
        for (std::size_t i = 0; i < basis_a.size(); ++i)
            joint(r, i) = basis_a[i][r];
        for (std::size_t j = 0; j < basis_b.size(); ++j)
            joint(r, basis_a.size() + j) = -basis_b[j][r];
    }
    std::vector<RationalVector> common;
    for (const auto& yz : kernel_basis(joint))
    {
        RationalVector x(length);
        for (std::size_t i = 0; i < basis_a.size(); ++i)
        {
            if (sgn(yz[i]) == 0)
                continue;
            for (std::size_t r = 0; r < length; ++r)
                x[r] += yz[i] * basis_a[i][r];
        }
        common.push_back(std::move(x));
    }
    return canonical_span_basis(common, length);
}

// ------------------------------------------------------------------------

RealMatrix RealMatrix::transpose() const
{
    RealMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    }
    return t;
}

RealMatrix RealMatrix::operator*(const RealMatrix& other) const
{
    if (cols_ != other.rows_)
        throw Error(ErrorKind::DimensionMismatch, "real matrix product");
    RealMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
    {
        for (std::size_t k = 0; k < cols_; ++k)
        {
            double a = (*this)(r, k);
            if (a == 0.0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out(r, c) += a * other(k, c);
        }
    }
    return out;
}

double RealMatrix::inf_norm() const
{
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
    {
        double sum = 0.0;
        for (std::size_t c = 0; c < cols_; ++c)
            sum += std::abs((*this)(r, c));
        best = std::max(best, sum);
    }
    return best;
}

RealSymMatrix RealSymMatrix::from(const RealMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "symmetric matrix must be square");
    RealSymMatrix s(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        for (std::size_t j = i; j < m.cols(); ++j)
        {
            if (m(i, j) != m(j, i))
                throw Error(ErrorKind::DimensionMismatch, "matrix is not symmetric");
            s.set(i, j, m(i, j));
        }
    }
    return s;
}

double RealSymMatrix::inf_norm() const
{
    double best = 0.0;
    for (std::size_t i = 0; i < order_; ++i)
    {
        double sum = 0.0;
        for (std::size_t j = 0; j < order_; ++j)
            sum += std::abs((*this)(i, j));
        best = std::max(best, sum);
    }
    return best;
}

SymmetricEigen sym_eigen(const RealSymMatrix& m, int max_sweeps, double tolerance)
{
    const std::size_t n = m.order();
    RealMatrix a(n, n);
    RealMatrix v(n, n);
    double frob = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        v(i, i) = 1.0;
        for (std::size_t j = 0; j < n; ++j)
        {
            a(i, j) = m(i, j);
            frob += m(i, j) * m(i, j);
        }
    }
    const double target = tolerance * std::max(1.0, std::sqrt(frob));

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            for (std::size_t j = i + 1; j < n; ++j)
                s += 2.0 * a(i, j) * a(i, j);
        }
        return std::sqrt(s);
    };

    int sweep = 0;
    double off = off_norm();
    while (off > target)
    {
        if (sweep == max_sweeps)
        {
            std::ostringstream msg;
            msg << "Jacobi did not converge in " << max_sweeps << " sweeps (off-diagonal norm "
                << off << ")";
            throw Error(ErrorKind::ConvergenceFailure, msg.str());
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p)
        {
            for (std::size_t q = p + 1; q < n; ++q)
            {
                double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k)
                {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k)
                {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        off = off_norm();
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymmetricEigen out;
    out.sweeps = sweep;
    out.values.reserve(n);
    out.vectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
    {
        out.values.push_back(a(order[k], order[k]));
        for (std::size_t r = 0; r < n; ++r)
            out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

}   // namespace dmorse
