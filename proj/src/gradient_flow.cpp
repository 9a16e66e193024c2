#include "dmorse/gradient_flow.hpp"

#include "dmorse/error.hpp"

namespace dmorse {

GradientFlow::GradientFlow(Digraph gbar, MorseFunction fbar, int max_dim)
    : gbar_(std::move(gbar)), fbar_(std::move(fbar)), max_dim_(max_dim)
{
    if (!is_transitive(gbar_))
        throw Error(ErrorKind::NotTransitive, "the gradient flow is defined on a transitive digraph");
    if (fbar_.size() != gbar_.vertex_count())
        throw Error(ErrorKind::UnknownVertex, "Morse function domain does not match the digraph");
}

void GradientFlow::check_dimension(const Chain& c) const
{
    if (c.dimension() > max_dim_)
    {
        throw Error(ErrorKind::DimensionBoundExceeded, "chain of dimension " + std::to_string(c.dimension()) +
                                                           " exceeds the bound " + std::to_string(max_dim_));
    }
}

std::optional<VectorFieldEntry> GradientFlow::vector_at(const Path& alpha) const
{
    if (!is_allowed(gbar_, alpha))
        return std::nullopt;
    auto up = equal_weight_cofaces(gbar_, fbar_, alpha);
    if (up.empty())
        return std::nullopt;
    if (up.size() > 1)
    {
        throw Error(ErrorKind::NonUniqueTarget,
                    format_path(gbar_, alpha) + " has " + std::to_string(up.size()) + " equal-weight cofaces");
    }
    Rational incidence = boundary(up.front()).coefficient(alpha);
    return VectorFieldEntry{up.front(), sgn(incidence) > 0 ? -1 : 1};
}

Chain GradientFlow::apply_v(const Chain& c) const
{
    Chain out(c.dimension() + 1);
    for (const auto& [alpha, coeff] : c.terms())
    {
        if (auto entry = vector_at(alpha))
            out.add(entry->target, entry->sign > 0 ? coeff : Rational(-coeff));
    }
    return out;
}

Chain GradientFlow::flow(const Chain& c) const
{
    check_dimension(c);
    Chain out = c;
    out += boundary(apply_v(c));
    if (c.dimension() >= 1)
        out += apply_v(boundary(c));
    return out;
}

Chain GradientFlow::stabilize(const Chain& c, int* iterations) const
{
    check_dimension(c);
    const std::size_t cap = allowed_paths(gbar_, std::max(c.dimension(), 0), max_dim_).size() + 1;
    Chain current = c;
    for (std::size_t k = 1; k <= cap; ++k)
    {
        Chain next = flow(current);
        if (next == current)
        {
            if (iterations)
                *iterations = static_cast<int>(k);
            return current;
        }
        current = std::move(next);
    }
    throw Error(ErrorKind::StabilizationDiverged,
                "no fixpoint of the gradient flow within " + std::to_string(cap) + " iterations");
}

VectorField GradientFlow::field() const
{
    VectorField out;
    for (int n = 0; n <= max_dim_; ++n)
    {
        for (const auto& p : allowed_paths(gbar_, n, max_dim_).paths)
        {
            if (auto entry = vector_at(p))
                out.emplace(p, *entry);
        }
    }
    return out;
}

std::vector<Chain> GradientFlow::invariant_basis(int n) const
{
    std::vector<Chain> out;
    auto crit = critical_paths(gbar_, fbar_, n);
    for (const auto& alpha : crit.by_dim.at(static_cast<std::size_t>(n)))
    {
        Chain x(alpha);
        if (n >= 1)
            x += apply_v(boundary(Chain(alpha)));
        out.push_back(std::move(x));
    }
    return out;
}

VectorField gradient_field(const Digraph& gbar, const MorseFunction& fbar, int max_dim)
{
    return GradientFlow(gbar, fbar, max_dim).field();
}

Chain gradient_flow(const Digraph& gbar, const MorseFunction& fbar, const Chain& c, int max_dim)
{
    return GradientFlow(gbar, fbar, max_dim).flow(c);
}

Chain flow_stabilize(const Digraph& gbar, const MorseFunction& fbar, const Chain& c, int max_dim)
{
    return GradientFlow(gbar, fbar, max_dim).stabilize(c);
}

std::vector<Chain> phi_invariant_basis(const Digraph& gbar, const MorseFunction& fbar, int n, int max_dim)
{
    return GradientFlow(gbar, fbar, max_dim).invariant_basis(n);
}

}   // namespace dmorse
