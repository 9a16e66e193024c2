/**
 * The chain complex (Ω_n(G), ∂_n), Betti numbers and Euler characteristic.
 *
 * Complexes are assembled one dimension past the requested bound, so the
 * Betti numbers b_0..b_maxDim are exact; `truncated` records whether
 * Ω_{maxDim+1} is nonzero, i.e. whether homology above the bound may exist.
 */
#ifndef DMORSE_HOMOLOGY_HPP
#define DMORSE_HOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dmorse/graph.hpp"
#include "dmorse/linalg.hpp"
#include "dmorse/paths.hpp"

namespace dmorse {

struct ChainComplexRep
{
    int max_dim = 0;
    /// bases[n] for n = 0..max_dim+1, each in reduced echelon form.
    std::vector<std::vector<Chain>> bases;
    /// boundaries[n] is ∂_n : Ω_n → Ω_{n-1}, columns indexed by bases[n].
    std::vector<RationalMatrix> boundaries;
    bool truncated = false;

    std::size_t dim(int n) const { return bases.at(static_cast<std::size_t>(n)).size(); }
};

struct BettiVector
{
    std::vector<std::size_t> values;   // b_0..b_bound
    int bound = 0;
    bool truncated = false;

    std::size_t operator[](std::size_t m) const { return values.at(m); }
};

/**
 * Coordinates of x in a basis given in reduced echelon form (each basis
 * chain's leading path is a pivot absent from all others), or nullopt when
 * x is outside the span.
 */
std::optional<RationalVector> express_in_echelon_basis(const Chain& x, const std::vector<Chain>& basis);

ChainComplexRep build_complex(const Digraph& g, int max_dim);

/**
 * b_m = dims[m] - rank ∂_m - rank ∂_{m+1} for m < count, where
 * boundaries[n] maps dimension n to n-1 (boundaries[0] may be empty).
 */
std::vector<std::size_t> betti_numbers(const std::vector<std::size_t>& dims,
                                       const std::vector<RationalMatrix>& boundaries,
                                       std::size_t count);

BettiVector betti(const ChainComplexRep& cx);

struct EulerCheck
{
    long long omega_sum = 0;   // Σ (-1)^p dim Ω_p, p <= max_dim
    long long betti_sum = 0;   // Σ (-1)^p b_p, p <= max_dim
    bool truncated = false;
};

EulerCheck euler_check(const ChainComplexRep& cx);

/**
 * χ up to the bound.  Throws TruncationUnsound when the complex is
 * truncated and the two alternating sums disagree.
 */
long long euler_characteristic(const ChainComplexRep& cx);

}   // namespace dmorse

#endif
