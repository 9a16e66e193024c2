/**
 * Witten deformation ∂_t = e^{tf} ∂ e^{-tf} on transitive digraphs, the
 * Laplacians Δ_n(t) = ∂_t*∂_t + ∂_t∂_t*, their spectra and the
 * convergence scan of the low-eigenvalue counts towards |Crit_n|.
 *
 * Inputs must be transitive and free of directed cycles, so that
 * Ω_n = P_n and ∂_t acts on allowed paths.
 */
#ifndef DMORSE_WITTEN_HPP
#define DMORSE_WITTEN_HPP

#include <optional>
#include <vector>

#include "dmorse/graph.hpp"
#include "dmorse/linalg.hpp"
#include "dmorse/morse_function.hpp"

namespace dmorse {

/// Throws NotTransitive unless gbar is transitive and acyclic.
void require_witten_input(const Digraph& gbar);

/**
 * Matrix of ∂_t from P_n to P_{n-1}: entry (β, α) = ⟨∂α, β⟩ e^{t(f(β) - f(α))}.
 * For n = 0 the matrix has no rows.
 */
RealMatrix witten_boundary(const Digraph& gbar, const MorseFunction& f, double t, int n);

RealSymMatrix witten_laplacian(const Digraph& gbar, const MorseFunction& f, double t, int n);

/// diag Δ_n(t) over P_n: Σ_faces e^{2t(f(β)-f(α))} + Σ_cofaces e^{2t(f(α)-f(γ))}.
std::vector<double> witten_diagonal(const Digraph& gbar, const MorseFunction& f, double t, int n);

struct SpectrumRow
{
    double t = 0.0;
    int n = 0;
    std::size_t basis_size = 0;
    std::vector<double> eigenvalues;   // ascending
    double norm = 0.0;                 // ‖Δ_n(t)‖∞
    double eps_ker = 0.0;
    double eps_low = 0.0;
    std::size_t kernel_dim = 0;        // eigenvalues <= eps_ker
    std::size_t low_dim = 0;           // eigenvalues <= eps_low
};

/// Relative thresholds: ε = factor · max(1, ‖Δ‖∞).
constexpr double kKernelFactor = 1e-9;
constexpr double kDefaultLowFactor = 1e-6;

SpectrumRow witten_spectrum(const Digraph& gbar, const MorseFunction& f, double t, int n,
                            double low_factor = kDefaultLowFactor);

struct ScanDimension
{
    int n = 0;
    std::size_t crit = 0;        // |Crit_n(Ḡ)|
    std::size_t betti = 0;       // exact b_n of Ḡ
    std::size_t harmonic = 0;    // dim P_n - rank ∂_n - rank ∂_{n+1}, exact
    bool kernel_constant = true;
    bool kernel_matches_betti = true;
    /// First grid index from which low_dim == crit through the end of the grid.
    std::optional<std::size_t> agreement_from;
};

struct WittenScan
{
    std::vector<double> grid;
    int max_dim = 0;
    std::vector<SpectrumRow> rows;   // grid-major, then n ascending
    std::vector<ScanDimension> dims;
    double max_dd_residual = 0.0;    // max over t, n of ‖∂_t∂_t‖∞ / scale
    bool dd_zero = true;             // every residual <= 1e-8
};

/// Throws IndexOutOfRange for an empty, non-ascending or non-positive grid.
WittenScan witten_convergence_scan(const Digraph& gbar, const MorseFunction& f,
                                   const std::vector<double>& grid, int max_dim,
                                   double low_factor = kDefaultLowFactor);

}   // namespace dmorse

#endif
