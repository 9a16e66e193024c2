#include "testkit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dmorse/error.hpp"
#include "dmorse/gradient_flow.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/morse_complex.hpp"

#ifndef DMORSE_FIXTURE_DIR
#error "DMORSE_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace dmorse::testkit {

std::string fixture_path(const std::string& name)
{
    return std::string(DMORSE_FIXTURE_DIR) + "/" + name;
}

std::string read_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name));
    if (!in)
        throw std::runtime_error("cannot open fixture " + name);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Digraph load_digraph(const std::string& name)
{
    return parse_digraph(read_fixture(name));
}

MorseFunction load_morse(const std::string& name, const Digraph& g)
{
    return parse_morse_function(read_fixture(name), g);
}

Digraph random_digraph(std::mt19937& rng, std::size_t max_vertices, bool acyclic)
{
    std::uniform_int_distribution<std::size_t> size_dist(1, max_vertices);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = size_dist(rng);
    const double density = 0.15 + 0.45 * unit(rng);

    std::vector<VertexIndex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
        {
            if (i == j || unit(rng) >= density)
                continue;
            if (acyclic && i > j)
                continue;
            edges.emplace_back(order[i], order[j]);
        }
    }
    return Digraph(labels, edges);
}

namespace {

Rational random_positive(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(1, 12);
    std::uniform_int_distribution<int> den(1, 2);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

bool acceptable(const Digraph& g, const MorseFunction& f, int max_dim, bool on_closure)
{
    if (!validate_morse(g, f, max_dim).is_morse)
        return false;
    return !on_closure || try_extend_to_closure(g, f, max_dim).report.is_morse;
}

}   // namespace

std::optional<MorseFunction> random_morse(std::mt19937& rng, const Digraph& g, int max_dim, bool on_closure)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 40; ++attempt)
    {
        // Later attempts thin out the zero set; an all-positive function is always Morse.
        const double zero_rate = attempt < 30 ? 0.35 : 0.0;
        std::vector<Rational> values;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            values.push_back(unit(rng) < zero_rate ? Rational(0) : random_positive(rng));
        MorseFunction f(values);
        if (acceptable(g, f, max_dim, on_closure))
            return f;
    }
    return std::nullopt;
}

MorseFunction reweight(std::mt19937& rng, const MorseFunction& f)
{
    std::vector<Rational> values;
    for (const auto& v : f.values())
        values.push_back(sgn(v) == 0 ? Rational(0) : random_positive(rng));
    return MorseFunction(values);
}

int affordable_bound(const Digraph& g, int cap, std::size_t limit, int extra)
{
    int bound = -1;
    for (int b = 0; b <= cap; ++b)
    {
        const int top = b + extra;
        if (allowed_paths(g, top, top).size() > limit)
            break;
        bound = b;
    }
    return std::max(bound, 0);
}

namespace {

/// Coordinates of ∂p over an index of (n-1)-sequences, growing the index as needed.
void add_boundary_column(const Path& p, std::size_t column, std::map<Path, std::size_t>& index,
                         std::vector<std::tuple<std::size_t, std::size_t, int>>& entries)
{
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        std::vector<VertexIndex> q = p.vertices;
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
        auto [it, inserted] = index.emplace(Path(q), index.size());
        entries.emplace_back(it->second, column, i % 2 == 0 ? 1 : -1);
    }
}

struct OmegaData
{
    std::vector<Path> paths;               // P_n
    std::vector<RationalVector> basis;     // Ω_n in P_n coordinates
};

OmegaData oracle_omega(const Digraph& g, int n)
{
    OmegaData out;
    out.paths = allowed_paths(g, n, n).paths;
    if (n == 0)
    {
        for (std::size_t i = 0; i < out.paths.size(); ++i)
        {
            RationalVector e(out.paths.size());
            e[i] = 1;
            out.basis.push_back(e);
        }
        return out;
    }
    std::map<Path, std::size_t> index;
    std::vector<std::tuple<std::size_t, std::size_t, int>> entries;
    for (std::size_t j = 0; j < out.paths.size(); ++j)
        add_boundary_column(out.paths[j], j, index, entries);

    std::vector<std::size_t> bad_row(index.size(), SIZE_MAX);
    std::size_t bad_count = 0;
    for (const auto& [q, row] : index)
    {
        if (!is_allowed(g, q))
            bad_row[row] = bad_count++;
    }
    RationalMatrix m(bad_count, out.paths.size());
    for (const auto& [row, col, sign] : entries)
    {
        if (bad_row[row] != SIZE_MAX)
            m(bad_row[row], col) += sign;
    }
    out.basis = kernel_basis(m);
    return out;
}

/// Rank of ∂_n restricted to Ω_n, as a map into P_{n-1}.
std::size_t oracle_boundary_rank(const OmegaData& omega, const std::vector<Path>& lower)
{
    if (omega.basis.empty() || lower.empty())
        return 0;
    std::map<Path, std::size_t> lower_index;
    for (std::size_t i = 0; i < lower.size(); ++i)
        lower_index.emplace(lower[i], i);
    RationalMatrix d(lower.size(), omega.basis.size());
    for (std::size_t k = 0; k < omega.basis.size(); ++k)
    {
        for (std::size_t j = 0; j < omega.paths.size(); ++j)
        {
            const Rational& c = omega.basis[k][j];
            if (sgn(c) == 0)
                continue;
            const Path& p = omega.paths[j];
            for (std::size_t i = 0; i < p.size(); ++i)
            {
                std::vector<VertexIndex> q = p.vertices;
                q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
                auto it = lower_index.find(Path(q));
                if (it != lower_index.end())
                    d(it->second, k) += (i % 2 == 0) ? c : Rational(-c);
            }
        }
    }
    return rank(d);
}

}   // namespace

std::vector<std::size_t> oracle_betti(const Digraph& g, int max_dim)
{
    std::vector<OmegaData> omega;
    for (int n = 0; n <= max_dim + 1; ++n)
        omega.push_back(oracle_omega(g, n));
    std::vector<std::size_t> ranks(omega.size() + 1, 0);
    for (std::size_t n = 1; n < omega.size(); ++n)
        ranks[n] = oracle_boundary_rank(omega[n], omega[n - 1].paths);
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= static_cast<std::size_t>(max_dim); ++n)
        out.push_back(omega[n].basis.size() - ranks[n] - ranks[n + 1]);
    return out;
}

std::vector<RationalVector> oracle_fixed_space(const Digraph& gbar, const MorseFunction& fbar, int n, int max_dim)
{
    GradientFlow flow(gbar, fbar, max_dim);
    PathBasis basis = allowed_paths(gbar, n, max_dim);
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
    {
        RationalVector image = to_coordinates(flow.flow(Chain(basis.paths[j])), basis);
        for (std::size_t i = 0; i < basis.size(); ++i)
            m(i, j) = image[i] - (i == j ? 1 : 0);
    }
    return kernel_basis(m);
}

bool in_span(const std::vector<RationalVector>& basis, const std::vector<RationalVector>& vectors)
{
    if (vectors.empty())
        return true;
    const std::size_t length = vectors.front().size();
    RationalMatrix m(length, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
    {
        for (std::size_t i = 0; i < length; ++i)
            m(i, j) = basis[j][i];
    }
    return std::all_of(vectors.begin(), vectors.end(),
                       [&](const RationalVector& v) { return solve(m, v).has_value(); });
}

void Outcome::fail(const std::string& message)
{
    if (failures.size() < 5)
        failures.push_back(message);
}

namespace {

std::string describe(const Digraph& g)
{
    std::string text = serialize_digraph(g);
    std::replace(text.begin(), text.end(), '\n', ';');
    return text;
}

std::string describe(const Digraph& g, const MorseFunction& f)
{
    std::string text = describe(g) + " f=";
    for (std::size_t v = 0; v < f.size(); ++v)
        text += (v ? "," : "") + to_string(f.values()[v]);
    return text;
}

/**
 * Draws digraphs until one admits a Morse function; the instance plus the
 * closure when requested.
 */
struct Instance
{
    Digraph g;
    Digraph gbar;
    MorseFunction f;
    MorseFunction fbar;
    int bound = 0;
};

Instance draw_instance(std::mt19937& rng, bool acyclic, bool on_closure, std::size_t limit, int extra)
{
    for (;;)
    {
        Instance inst;
        inst.g = random_digraph(rng, 6, acyclic);
        inst.gbar = transitive_closure(inst.g);
        inst.bound = affordable_bound(on_closure ? inst.gbar : inst.g, 4, limit, extra);
        auto f = random_morse(rng, inst.g, inst.bound + extra, on_closure);
        if (!f)
            continue;
        inst.f = *f;
        inst.fbar = *f;
        return inst;
    }
}

}   // namespace

Outcome property_boundary_squared(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"boundary squared is zero", 0, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Digraph g = random_digraph(rng, 6, false);
        const int bound = affordable_bound(g, 4, 300, 0);
        for (int n = 0; n <= bound; ++n)
        {
            PathBasis basis = allowed_paths(g, n, bound);
            if (basis.empty())
                break;
            Chain x(n);
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            for (int k = 0; k < 6; ++k)
                x.add(basis.paths[pick(rng)], Rational(coeff(rng), 1 + k % 2));
            ++out.checked;
            if (!boundary(boundary(x)).is_zero())
                out.fail("∂∂x != 0 on " + describe(g) + " x=" + format_chain(g, x));

            for (const auto& p : basis.paths)
            {
                if (n == 0)
                    break;
                Chain expected(n - 1);
                for (std::size_t i = 0; i < p.size(); ++i)
                    expected.add(face(p, i), i % 2 == 0 ? 1 : -1);
                ++out.checked;
                if (!(boundary(p) == expected))
                    out.fail("∂p differs from the alternating face sum for " + format_path(g, p));
            }
            for (const auto& w : omega_basis(g, n, bound))
            {
                ++out.checked;
                if (!in_omega(g, w) || !is_allowed(g, boundary(w)))
                    out.fail("Ω basis element outside Ω: " + format_chain(g, w) + " on " + describe(g));
            }
        }
    }
    return out;
}

Outcome property_rank_nullity(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"rank plus nullity", 0, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        const std::size_t rows = size(rng);
        const std::size_t cols = size(rng);
        const double sparsity = unit(rng);
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
        {
            for (std::size_t j = 0; j < cols; ++j)
            {
                if (unit(rng) > sparsity)
                {
                    m(i, j) = Rational(entry(rng), 1 + (i + j) % 3);
                    m(i, j).canonicalize();
                }
            }
        }
        auto kernel = kernel_basis(m);
        ++out.checked;
        if (rank(m) + kernel.size() != cols)
            out.fail("rank " + std::to_string(rank(m)) + " + nullity " + std::to_string(kernel.size()) +
                     " != " + std::to_string(cols));
        for (const auto& k : kernel)
        {
            auto image = m * k;
            ++out.checked;
            if (std::any_of(image.begin(), image.end(), [](const Rational& r) { return sgn(r) != 0; }))
                out.fail("kernel vector not annihilated");
        }
    }

    // Boundary matrices of random digraphs as well.
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Digraph g = random_digraph(rng, 6, false);
        auto cx = build_complex(g, affordable_bound(g, 3, 200, 1));
        for (std::size_t n = 1; n < cx.boundaries.size(); ++n)
        {
            const auto& d = cx.boundaries[n];
            ++out.checked;
            if (rank(d) + kernel_basis(d).size() != d.cols())
                out.fail("rank + nullity mismatch for ∂_" + std::to_string(n) + " on " + describe(g));
        }
    }
    return out;
}

Outcome property_flow_commutes(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"flow commutes with the boundary", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, c % 2 == 0, true, 250, 1);
        GradientFlow flow(inst.gbar, inst.fbar, inst.bound + 1);
        for (int n = 1; n <= inst.bound; ++n)
        {
            for (const auto& p : allowed_paths(inst.gbar, n, inst.bound).paths)
            {
                ++out.checked;
                Chain lhs = flow.flow(boundary(p));
                Chain rhs = boundary(flow.flow(Chain(p)));
                if (!(lhs == rhs))
                    out.fail("Φ̄∂ != ∂Φ̄ at " + format_path(inst.gbar, p) + " on " + describe(inst.gbar, inst.fbar));
            }
        }
    }
    return out;
}

Outcome property_noncritical_killed(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"flow kills non-critical paths", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, true, true, 250, 1);
        GradientFlow flow(inst.gbar, inst.fbar, inst.bound + 1);
        // Non-critical vertices flow onto critical ones (Φ̄(v0) = v1 in the
        // square example), so the statement concerns dimensions n >= 1.
        for (int n = 1; n <= inst.bound; ++n)
        {
            for (const auto& p : allowed_paths(inst.gbar, n, inst.bound).paths)
            {
                if (is_critical(inst.gbar, inst.fbar, p))
                    continue;
                ++out.checked;
                Chain image = flow.flow(Chain(p));
                if (!image.is_zero())
                    out.fail("Φ̄(" + format_path(inst.gbar, p) + ") = " + format_chain(inst.gbar, image) + " on " +
                             describe(inst.gbar, inst.fbar));
            }
        }
    }
    return out;
}

Outcome property_fixed_space(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"flow-fixed space is spanned by α + V̄∂α", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, true, true, 120, 1);
        GradientFlow flow(inst.gbar, inst.fbar, inst.bound + 1);
        for (int n = 0; n <= inst.bound; ++n)
        {
            PathBasis basis = allowed_paths(inst.gbar, n, inst.bound);
            auto fixed = oracle_fixed_space(inst.gbar, inst.fbar, n, inst.bound + 1);
            std::vector<RationalVector> invariant;
            for (const auto& x : flow.invariant_basis(n))
                invariant.push_back(to_coordinates(x, basis));
            ++out.checked;
            const std::string where = " in dimension " + std::to_string(n) + " on " + describe(inst.gbar, inst.fbar);
            if (fixed.size() != invariant.size())
                out.fail("fixed space has dimension " + std::to_string(fixed.size()) + " but " +
                         std::to_string(invariant.size()) + " critical paths" + where);
            else if (!in_span(fixed, invariant) || !in_span(invariant, fixed))
                out.fail("fixed space and span{α + V̄∂α} differ" + where);
        }
    }
    return out;
}

Outcome property_flat_witten(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"Morse functions are flat Witten-Morse", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, c % 3 == 0, false, 300, 1);
        ++out.checked;
        auto report = check_flat_witten_morse(inst.g, inst.f, inst.bound);
        if (!report.holds)
        {
            const auto& v = report.violations.front();
            out.fail("flat condition " + v.condition + " fails at " + format_path(inst.g, v.path) + " on " +
                     describe(inst.g, inst.f));
        }
    }
    return out;
}

Outcome property_single_zero(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"allowed paths carry at most one zero", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, false, false, 300, 0);
        for (int n = 0; n <= inst.bound; ++n)
        {
            for (const auto& p : allowed_paths(inst.g, n, inst.bound).paths)
            {
                ++out.checked;
                auto zeros = std::count_if(p.vertices.begin(), p.vertices.end(),
                                           [&](VertexIndex v) { return sgn(inst.f(v)) == 0; });
                if (zeros > 1)
                    out.fail(format_path(inst.g, p) + " has " + std::to_string(zeros) + " zeros on " +
                             describe(inst.g, inst.f));
            }
        }
    }
    return out;
}

Outcome property_loops_positive(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"directed loops avoid zeros", 0, 0, {}};
    std::mt19937 rng(seed);
    std::size_t loops = 0;
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, false, false, 300, 0);
        for (int n = 2; n <= inst.bound; ++n)
        {
            for (const auto& p : allowed_paths(inst.g, n, inst.bound).paths)
            {
                if (p.vertices.front() != p.vertices.back())
                    continue;
                ++loops;
                ++out.checked;
                for (auto v : p.vertices)
                {
                    if (sgn(inst.f(v)) == 0)
                        out.fail("loop " + format_path(inst.g, p) + " meets a zero on " + describe(inst.g, inst.f));
                }
            }
        }
    }
    if (loops == 0)
        out.fail("no directed loops were generated");
    return out;
}

Outcome property_no_face_and_coface(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"no path has both an equal-weight face and coface", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, c % 2 == 0, false, 300, 1);
        for (int n = 0; n <= inst.bound; ++n)
        {
            for (const auto& p : allowed_paths(inst.g, n, inst.bound).paths)
            {
                ++out.checked;
                if (!equal_weight_faces(inst.g, inst.f, p).empty() && !equal_weight_cofaces(inst.g, inst.f, p).empty())
                    out.fail(format_path(inst.g, p) + " on " + describe(inst.g, inst.f));
            }
        }
    }
    return out;
}

Outcome property_zero_set_determines(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"zero set determines critical paths and flow", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, c % 2 == 0, true, 250, 1);
        MorseFunction other = reweight(rng, inst.f);
        ++out.checked;
        if (!try_extend_to_closure(inst.g, other, inst.bound + 1).report.is_morse)
        {
            out.fail("reweighted function not Morse on " + describe(inst.g, other));
            continue;
        }
        const std::string where = " on " + describe(inst.g, inst.f) + " vs " + describe(inst.g, other);

        auto crit_a = critical_paths(inst.gbar, inst.fbar, inst.bound);
        auto crit_b = critical_paths(inst.gbar, other, inst.bound);
        ++out.checked;
        if (crit_a.by_dim != crit_b.by_dim)
            out.fail("critical sets differ" + where);

        GradientFlow flow_a(inst.gbar, inst.fbar, inst.bound + 1);
        GradientFlow flow_b(inst.gbar, other, inst.bound + 1);
        ++out.checked;
        if (flow_a.field() != flow_b.field())
            out.fail("V̄ tables differ" + where);
        for (int n = 0; n <= inst.bound; ++n)
        {
            for (const auto& p : allowed_paths(inst.gbar, n, inst.bound).paths)
            {
                ++out.checked;
                if (!(flow_a.flow(Chain(p)) == flow_b.flow(Chain(p))))
                    out.fail("Φ̄ tables differ at " + format_path(inst.gbar, p) + where);
            }
        }
    }
    return out;
}

Outcome property_morse_equals_path_homology(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"Morse homology equals path homology", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, c % 3 == 0, true, 200, 2);
        auto path_b = oracle_betti(inst.g, inst.bound);
        ++out.checked;
        if (betti(build_complex(inst.g, inst.bound)).values != path_b)
            out.fail("homology module disagrees with the incidence oracle on " + describe(inst.g));

        auto rep = morse_complex(inst.g, inst.f, inst.bound);
        if (!rep.hypotheses.all_hold())
            continue;
        ++out.checked;
        auto morse_b = morse_homology(rep).values;
        if (morse_b != path_b)
            out.fail("Morse homology differs from path homology on " + describe(inst.g, inst.f));
    }
    return out;
}

Outcome property_invariant_omega_dimension(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"critical paths parametrize the invariant part of Ω", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, c % 2 == 0, true, 150, 1);
        if (!check_hypotheses(inst.g, inst.f, inst.bound).all_hold())
            continue;
        GradientFlow flow(inst.gbar, inst.fbar, inst.bound + 1);
        for (int n = 0; n <= inst.bound; ++n)
        {
            PathBasis ambient = allowed_paths(inst.gbar, n, inst.bound);
            std::vector<RationalVector> images;
            auto crit = critical_paths(inst.gbar, inst.fbar, n);
            for (const auto& alpha : crit.by_dim.at(static_cast<std::size_t>(n)))
            {
                if (!is_allowed(inst.g, alpha))
                    continue;
                Chain x = Chain(alpha);
                if (n >= 1)
                    x += flow.apply_v(boundary(Chain(alpha)));
                ++out.checked;
                if (!in_omega(inst.g, x))
                    out.fail("α + V̄∂α outside Ω for " + format_path(inst.g, alpha) + " on " + describe(inst.g, inst.f));
                images.push_back(to_coordinates(x, ambient));
            }
            auto intersection = invariant_omega_intersection(inst.g, inst.f, n, inst.bound + 1);
            std::vector<RationalVector> inter;
            for (const auto& x : intersection)
                inter.push_back(to_coordinates(x, ambient));
            ++out.checked;
            if (canonical_span_basis(images, ambient.size()).size() != images.size())
                out.fail("α ↦ α + V̄∂α is not injective on " + describe(inst.g, inst.f));
            else if (inter.size() != images.size() || !in_span(inter, images))
                out.fail("image does not span the invariant part of Ω_" + std::to_string(n) + " on " +
                         describe(inst.g, inst.f));
        }
    }
    return out;
}

Outcome property_one_noncritical_face(std::uint32_t seed, std::size_t cases)
{
    Outcome out{"critical paths have at most one non-critical face", 0, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++out.cases)
    {
        Instance inst = draw_instance(rng, true, true, 300, 0);
        for (int n = 2; n <= inst.bound; ++n)
        {
            for (const auto& p : allowed_paths(inst.gbar, n, inst.bound).paths)
            {
                if (!is_critical(inst.gbar, inst.fbar, p))
                    continue;
                std::size_t noncritical = 0;
                for (std::size_t j = 0; j < p.size(); ++j)
                {
                    Path q = face(p, j);
                    if (is_allowed(inst.gbar, q) && !is_critical(inst.gbar, inst.fbar, q))
                        ++noncritical;
                }
                ++out.checked;
                if (noncritical > 1)
                    out.fail(format_path(inst.gbar, p) + " has " + std::to_string(noncritical) +
                             " non-critical faces on " + describe(inst.gbar, inst.fbar));
            }
        }
    }
    return out;
}

}   // namespace dmorse::testkit
