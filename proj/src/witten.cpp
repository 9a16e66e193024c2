#include "dmorse/witten.hpp"

#include <algorithm>
#include <cmath>

#include "dmorse/error.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/paths.hpp"

namespace dmorse {

namespace {

constexpr double kMaxExponent = 700.0;

double scaled(double t, double delta)
{
    double exponent = t * delta;
    if (exponent > kMaxExponent)
        throw Error(ErrorKind::ScaleOverflow, "e^" + std::to_string(exponent) + " exceeds double range");
    return std::exp(exponent);
}

std::vector<double> weights(const MorseFunction& f, const PathBasis& basis)
{
    std::vector<double> out;
    out.reserve(basis.size());
    for (const auto& p : basis.paths)
        out.push_back(to_double(path_weight(f, p)));
    return out;
}

RealMatrix deformed_boundary(const Digraph& gbar, const MorseFunction& f, double t, int n)
{
    if (n < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative dimension");
    PathBasis cols = allowed_paths(gbar, n, n);
    if (n == 0)
        return RealMatrix(0, cols.size());
    PathBasis rows = allowed_paths(gbar, n - 1, n);
    auto wc = weights(f, cols);
    auto wr = weights(f, rows);
    RealMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
    {
        Chain d = boundary(cols.paths[j]);
        for (const auto& [beta, coeff] : d.terms())
        {
            auto i = rows.index_of(beta);
            if (!i)
                throw Error(ErrorKind::NotTransitive, "a face left the allowed paths");
            m(*i, j) = to_double(coeff) * scaled(t, wr[*i] - wc[j]);
        }
    }
    return m;
}

double product_residual(const RealMatrix& a, const RealMatrix& b)
{
    if (a.rows() == 0 || a.cols() == 0 || b.cols() == 0)
        return 0.0;
    double scale = std::max(1.0, a.inf_norm() * b.inf_norm());
    return (a * b).inf_norm() / scale;
}

}   // namespace

void require_witten_input(const Digraph& gbar)
{
    if (!is_transitive(gbar))
    {
        throw Error(ErrorKind::NotTransitive,
                    "the Witten deformation needs a transitive digraph; on other digraphs ∂_t does not "
                    "preserve Ω (for the square, ∂_t(v0v1v3 - v0v2v3) has a nonzero v0v3 coefficient)");
    }
    if (has_directed_cycle(gbar))
    {
        throw Error(ErrorKind::NotTransitive,
                    "the digraph has a directed cycle, so its closure lacks the loops u->u and "
                    "Ω differs from the allowed paths");
    }
}

RealMatrix witten_boundary(const Digraph& gbar, const MorseFunction& f, double t, int n)
{
    require_witten_input(gbar);
    return deformed_boundary(gbar, f, t, n);
}

RealSymMatrix witten_laplacian(const Digraph& gbar, const MorseFunction& f, double t, int n)
{
    require_witten_input(gbar);
    RealMatrix a = deformed_boundary(gbar, f, t, n);
    RealMatrix b = deformed_boundary(gbar, f, t, n + 1);
    const std::size_t size = a.cols();
    RealMatrix down = a.transpose() * a;
    RealMatrix up = b * b.transpose();
    RealSymMatrix laplacian(size);
    for (std::size_t i = 0; i < size; ++i)
    {
        for (std::size_t j = i; j < size; ++j)
        {
            double value = 0.0;
            if (down.rows() > 0)
                value += down(i, j);
            if (up.rows() > 0)
                value += up(i, j);
            laplacian.set(i, j, value);
        }
    }
    return laplacian;
}

std::vector<double> witten_diagonal(const Digraph& gbar, const MorseFunction& f, double t, int n)
{
    require_witten_input(gbar);
    PathBasis basis = allowed_paths(gbar, n, n);
    std::vector<double> out;
    for (const auto& alpha : basis.paths)
    {
        double fa = to_double(path_weight(f, alpha));
        double sum = 0.0;
        for (const auto& beta : allowed_faces(gbar, alpha))
            sum += scaled(2.0 * t, to_double(path_weight(f, beta)) - fa);
        for (const auto& gamma : allowed_cofaces(gbar, alpha))
            sum += scaled(2.0 * t, fa - to_double(path_weight(f, gamma)));
        out.push_back(sum);
    }
    return out;
}

SpectrumRow witten_spectrum(const Digraph& gbar, const MorseFunction& f, double t, int n, double low_factor)
{
    RealSymMatrix laplacian = witten_laplacian(gbar, f, t, n);
    SpectrumRow row;
    row.t = t;
    row.n = n;
    row.basis_size = laplacian.order();
    row.eigenvalues = sym_eigen(laplacian).values;
    row.norm = laplacian.inf_norm();
    row.eps_ker = kKernelFactor * std::max(1.0, row.norm);
    row.eps_low = low_factor * std::max(1.0, row.norm);
    for (double lambda : row.eigenvalues)
    {
        if (lambda <= row.eps_ker)
            ++row.kernel_dim;
        if (lambda <= row.eps_low)
            ++row.low_dim;
    }
    return row;
}

WittenScan witten_convergence_scan(const Digraph& gbar, const MorseFunction& f,
                                   const std::vector<double>& grid, int max_dim, double low_factor)
{
    require_witten_input(gbar);
    if (grid.empty())
        throw Error(ErrorKind::IndexOutOfRange, "empty t grid");
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        if (!(grid[k] > 0.0) || (k > 0 && !(grid[k] > grid[k - 1])))
            throw Error(ErrorKind::IndexOutOfRange, "t grid must be positive and strictly ascending");
    }

    WittenScan scan;
    scan.grid = grid;
    scan.max_dim = max_dim;

    auto crit = critical_paths(gbar, f, max_dim);
    auto b = betti(build_complex(gbar, max_dim));
    for (int n = 0; n <= max_dim; ++n)
    {
        ScanDimension d;
        d.n = n;
        d.crit = crit.count(n);
        d.betti = b[static_cast<std::size_t>(n)];
        PathBasis p = allowed_paths(gbar, n, n);
        PathBasis q = allowed_paths(gbar, n + 1, n + 1);
        RationalMatrix dn(n == 0 ? 0 : allowed_paths(gbar, n - 1, n).size(), p.size());
        RationalMatrix dn1(p.size(), q.size());
        if (n > 0)
        {
            PathBasis rows = allowed_paths(gbar, n - 1, n);
            for (std::size_t j = 0; j < p.size(); ++j)
            {
                Chain dp = boundary(p.paths[j]);
                for (const auto& [beta, c] : dp.terms())
                    dn(*rows.index_of(beta), j) = c;
            }
        }
        for (std::size_t j = 0; j < q.size(); ++j)
        {
            Chain dq = boundary(q.paths[j]);
            for (const auto& [beta, c] : dq.terms())
                dn1(*p.index_of(beta), j) = c;
        }
        d.harmonic = p.size() - rank(dn) - rank(dn1);
        scan.dims.push_back(d);
    }

    for (double t : grid)
    {
        std::vector<RealMatrix> deformed;
        for (int n = 0; n <= max_dim + 1; ++n)
            deformed.push_back(deformed_boundary(gbar, f, t, n));
        for (int n = 1; n <= max_dim; ++n)
        {
            double r = product_residual(deformed[static_cast<std::size_t>(n)],
                                        deformed[static_cast<std::size_t>(n + 1)]);
            scan.max_dd_residual = std::max(scan.max_dd_residual, r);
        }
        for (int n = 0; n <= max_dim; ++n)
            scan.rows.push_back(witten_spectrum(gbar, f, t, n, low_factor));
    }
    scan.dd_zero = scan.max_dd_residual <= 1e-8;

    const std::size_t per_t = static_cast<std::size_t>(max_dim) + 1;
    for (auto& d : scan.dims)
    {
        const auto n = static_cast<std::size_t>(d.n);
        std::size_t first_kernel = scan.rows[n].kernel_dim;
        std::optional<std::size_t> from;
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            const auto& row = scan.rows[k * per_t + n];
            if (row.kernel_dim != first_kernel)
                d.kernel_constant = false;
            if (row.kernel_dim != d.betti)
                d.kernel_matches_betti = false;
            if (row.low_dim == d.crit)
            {
                if (!from)
                    from = k;
            }
            else
            {
                from.reset();
            }
        }
        d.agreement_from = from;
    }
    return scan;
}

}   // namespace dmorse
