#include "dmorse/homology.hpp"

#include "dmorse/error.hpp"

namespace dmorse {

std::optional<RationalVector> express_in_echelon_basis(const Chain& x, const std::vector<Chain>& basis)
{
    RationalVector coords(basis.size());
    Chain rebuilt(x.dimension());
    for (std::size_t i = 0; i < basis.size(); ++i)
    {
        const Path& pivot = basis[i].terms().begin()->first;
        coords[i] = x.coefficient(pivot);
        if (sgn(coords[i]) != 0)
            rebuilt += coords[i] * basis[i];
    }
    if (!(rebuilt == x))
        return std::nullopt;
    return coords;
}

ChainComplexRep build_complex(const Digraph& g, int max_dim)
{
    if (max_dim < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative dimension bound");
    ChainComplexRep cx;
    cx.max_dim = max_dim;
    const int top = max_dim + 1;
    for (int n = 0; n <= top; ++n)
        cx.bases.push_back(omega_basis(g, n, top));
    cx.truncated = !cx.bases.back().empty();

    cx.boundaries.emplace_back(0, cx.bases[0].size());
    for (int n = 1; n <= top; ++n)
    {
        const auto& upper = cx.bases[n];
        const auto& lower = cx.bases[n - 1];
        RationalMatrix d(lower.size(), upper.size());
        for (std::size_t j = 0; j < upper.size(); ++j)
        {
            auto coords = express_in_echelon_basis(boundary(upper[j]), lower);
            if (!coords)
            {
                throw Error(ErrorKind::BasisExpressionFailure,
                            "boundary of an Ω_" + std::to_string(n) + " basis chain left Ω_" +
                                std::to_string(n - 1));
            }
            for (std::size_t i = 0; i < lower.size(); ++i)
                d(i, j) = (*coords)[i];
        }
        cx.boundaries.push_back(std::move(d));
    }
    return cx;
}

std::vector<std::size_t> betti_numbers(const std::vector<std::size_t>& dims,
                                       const std::vector<RationalMatrix>& boundaries,
                                       std::size_t count)
{
    std::vector<std::size_t> ranks(dims.size() + 1, 0);
    for (std::size_t n = 1; n < boundaries.size() && n < dims.size(); ++n)
        ranks[n] = rank(boundaries[n]);
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < count && m < dims.size(); ++m)
        out.push_back(dims[m] - ranks[m] - ranks[m + 1]);
    return out;
}

BettiVector betti(const ChainComplexRep& cx)
{
    std::vector<std::size_t> dims;
    for (const auto& b : cx.bases)
        dims.push_back(b.size());
    BettiVector out;
    out.values = betti_numbers(dims, cx.boundaries, static_cast<std::size_t>(cx.max_dim) + 1);
    out.bound = cx.max_dim;
    out.truncated = cx.truncated;
    return out;
}

EulerCheck euler_check(const ChainComplexRep& cx)
{
    auto b = betti(cx);
    EulerCheck check;
    check.truncated = cx.truncated;
    for (int p = 0; p <= cx.max_dim; ++p)
    {
        long long sign = (p % 2 == 0) ? 1 : -1;
        check.omega_sum += sign * static_cast<long long>(cx.dim(p));
        check.betti_sum += sign * static_cast<long long>(b[static_cast<std::size_t>(p)]);
    }
    return check;
}

long long euler_characteristic(const ChainComplexRep& cx)
{
    auto check = euler_check(cx);
    if (check.omega_sum != check.betti_sum)
    {
        throw Error(ErrorKind::TruncationUnsound,
                    "Ω_" + std::to_string(cx.max_dim + 1) + " is nonzero and the sums disagree (" +
                        std::to_string(check.omega_sum) + " vs " + std::to_string(check.betti_sum) + ")");
    }
    return check.betti_sum;
}

}   // namespace dmorse
