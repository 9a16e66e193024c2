#include "dmorse/morse_complex.hpp"

#include "dmorse/error.hpp"

namespace dmorse {

namespace {

void require_morse(const Digraph& g, const MorseFunction& f, int max_dim)
{
    auto report = validate_morse(g, f, max_dim);
    if (!report.is_morse)
        throw Error(ErrorKind::NotMorse, describe_violations(g, report.violations));
}

std::vector<std::vector<Path>> critical_allowed_in(const Digraph& g, const CriticalSet& crit)
{
    std::vector<std::vector<Path>> out;
    for (const auto& layer : crit.by_dim)
    {
        std::vector<Path> kept;
        for (const auto& p : layer)
        {
            if (is_allowed(g, p))
                kept.push_back(p);
        }
        out.push_back(std::move(kept));
    }
    return out;
}

}   // namespace

HypothesisReport check_hypotheses(const Digraph& g, const MorseFunction& f, int max_dim)
{
    HypothesisReport report;
    report.bound = max_dim;
    auto ext = try_extend_to_closure(g, f, max_dim + 1);
    if (!ext.report.is_morse)
    {
        report.f_extends_to_closure = false;
        report.extension_violations = ext.report.violations;
        report.omega_v_invariant = false;
        report.phi_crit_in_omega = false;
        return report;
    }

    GradientFlow flow(ext.closure, ext.fbar, max_dim + 1);
    for (int n = 0; n <= max_dim; ++n)
    {
        for (const auto& x : omega_basis(g, n, max_dim))
        {
            Chain image = flow.apply_v(x);
            if (!in_omega(g, image))
                report.v_counterexamples.push_back({x, std::move(image)});
        }
    }
    report.omega_v_invariant = report.v_counterexamples.empty();

    auto crit = critical_paths(ext.closure, ext.fbar, max_dim);
    for (const auto& layer : crit.by_dim)
    {
        for (const auto& alpha : layer)
        {
            if (!is_allowed(g, alpha))
                continue;
            Chain image = flow.flow(Chain(alpha));
            if (!in_omega(g, image))
                report.phi_counterexamples.push_back({alpha, std::move(image)});
        }
    }
    report.phi_crit_in_omega = report.phi_counterexamples.empty();
    return report;
}

Chain MorseComplexRep::differential(int n, std::size_t j) const
{
    Chain out(n - 1);
    if (n < 1)
        return out;
    const auto& d = boundaries.at(static_cast<std::size_t>(n));
    const auto& rows = bases.at(static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
        out.add(rows[i], d(i, j));
    return out;
}

MorseComplexRep morse_complex(const Digraph& g, const MorseFunction& f, int max_dim)
{
    if (max_dim < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative dimension bound");
    const int top = max_dim + 1;
    require_morse(g, f, top);
    auto ext = extend_to_closure(g, f, top);
    GradientFlow flow(ext.closure, ext.fbar, top);

    MorseComplexRep rep;
    rep.max_dim = max_dim;
    rep.bases = critical_allowed_in(g, critical_paths(ext.closure, ext.fbar, top));
    for (const auto& layer : rep.bases)
    {
        std::vector<Chain> stable;
        for (const auto& alpha : layer)
            stable.push_back(flow.stabilize(Chain(alpha)));
        rep.stabilized.push_back(std::move(stable));
    }

    rep.boundaries.emplace_back(0, rep.bases[0].size());
    for (int n = 1; n <= top; ++n)
    {
        const auto& cols = rep.bases[static_cast<std::size_t>(n)];
        const auto& rows = rep.bases[static_cast<std::size_t>(n - 1)];
        RationalMatrix d(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
        {
            // Φ̄^∞β - β = V̄∂β is supported on non-critical paths, so the
            // coefficient at a critical β is the ∂̃ matrix entry.
            Chain image = boundary(rep.stabilized[static_cast<std::size_t>(n)][j]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                d(i, j) = image.coefficient(rows[i]);
        }
        rep.boundaries.push_back(std::move(d));
    }

    for (int n = 2; n <= top; ++n)
    {
        const auto& lower = rep.boundaries[static_cast<std::size_t>(n - 1)];
        const auto& upper = rep.boundaries[static_cast<std::size_t>(n)];
        if (lower.cols() > 0 && upper.cols() > 0 && lower.rows() > 0 && !(lower * upper).is_zero())
            rep.boundary_squared_zero = false;
    }
    rep.truncated = !rep.bases.back().empty();
    // b_max_dim depends on ∂̃ out of dimension max_dim + 1, so the
    // hypotheses are needed through that dimension as well.
    rep.hypotheses = check_hypotheses(g, f, top);
    return rep;
}

BettiVector morse_homology(const MorseComplexRep& rep)
{
    std::vector<std::size_t> dims;
    for (const auto& b : rep.bases)
        dims.push_back(b.size());
    BettiVector out;
    out.values = betti_numbers(dims, rep.boundaries, static_cast<std::size_t>(rep.max_dim) + 1);
    out.bound = rep.max_dim;
    out.truncated = rep.truncated;
    return out;
}

std::vector<Path> critical_in_omega(const Digraph& g, const MorseFunction& f, int n, int max_dim)
{
    auto ext = extend_to_closure(g, f, max_dim);
    std::vector<Path> out;
    auto crit = critical_paths(ext.closure, ext.fbar, n);
    for (const auto& alpha : crit.by_dim.at(static_cast<std::size_t>(n)))
    {
        if (in_omega(g, Chain(alpha)))
            out.push_back(alpha);
    }
    return out;
}

std::vector<Chain> invariant_omega_intersection(const Digraph& g, const MorseFunction& f, int n, int max_dim)
{
    auto ext = extend_to_closure(g, f, max_dim);
    GradientFlow flow(ext.closure, ext.fbar, max_dim);
    PathBasis ambient = allowed_paths(ext.closure, n, max_dim);

    std::vector<RationalVector> invariant;
    for (const auto& x : flow.invariant_basis(n))
        invariant.push_back(to_coordinates(x, ambient));
    std::vector<RationalVector> omega;
    for (const auto& x : omega_basis(g, n, max_dim))
        omega.push_back(to_coordinates(x, ambient));

    std::vector<Chain> out;
    for (const auto& v : subspace_intersection(invariant, omega, ambient.size()))
        out.push_back(from_coordinates(v, ambient));
    return out;
}

InequalityReport morse_inequalities(const Digraph& g, const MorseFunction& f, int max_dim)
{
    if (max_dim < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative dimension bound");
    const int top = max_dim + 1;
    require_morse(g, f, top);
    auto ext = extend_to_closure(g, f, top);

    auto crit_closure = critical_allowed_in(g, critical_paths(ext.closure, ext.fbar, top));
    auto crit_g = critical_paths(g, f, max_dim);
    auto cx = build_complex(g, max_dim);
    auto b = betti(cx);

    InequalityReport report;
    report.bound = max_dim;
    report.b = b.values;
    report.truncated = cx.truncated || !crit_closure.back().empty();
    long long partial = 0;
    for (int m = 0; m <= max_dim; ++m)
    {
        const auto idx = static_cast<std::size_t>(m);
        std::size_t lm = crit_closure[idx].size();
        std::size_t Lm = crit_g.count(m);
        report.l.push_back(lm);
        report.L.push_back(Lm);
        report.crit_bound.push_back(Lm >= lm);
        report.weak.push_back(lm >= report.b[idx]);
        partial = static_cast<long long>(lm) - static_cast<long long>(report.b[idx]) - partial;
        report.strong.push_back(partial >= 0);
        long long sign = (m % 2 == 0) ? 1 : -1;
        report.chi_l += sign * static_cast<long long>(lm);
        report.chi_b += sign * static_cast<long long>(report.b[idx]);
        report.crit_bound_holds = report.crit_bound_holds && report.crit_bound.back();
        report.weak_inequalities = report.weak_inequalities && report.weak.back();
        report.strong_inequalities = report.strong_inequalities && report.strong.back();
    }
    report.euler_equality = report.chi_l == report.chi_b;
    return report;
}

}   // namespace dmorse
