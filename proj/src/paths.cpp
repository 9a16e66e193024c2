#include "dmorse/paths.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dmorse/error.hpp"

namespace dmorse {

Chain::Chain(const Path& p, const Rational& coefficient) : dimension_(p.dimension())
{
    add(p, coefficient);
}

Rational Chain::coefficient(const Path& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(const Path& p, const Rational& c)
{
    if (p.dimension() != dimension_)
    {
        throw Error(ErrorKind::DimensionMismatch, "path of dimension " + std::to_string(p.dimension()) +
                                                      " added to a " + std::to_string(dimension_) +
                                                      "-chain");
    }
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (inserted)
        it->second.canonicalize();
    else
    {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        dimension_ = other.dimension_;
    for (const auto& [p, c] : other.terms_)
        add(p, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        dimension_ = other.dimension_;
    for (const auto& [p, c] : other.terms_)
        add(p, -c);
    return *this;
}

Chain& Chain::operator*=(const Rational& s)
{
    if (sgn(s) == 0)
    {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_)
        c *= s;
    return *this;
}

bool Chain::operator==(const Chain& other) const
{
    if (is_zero() && other.is_zero())
        return true;
    return dimension_ == other.dimension_ && terms_ == other.terms_;
}

std::optional<std::size_t> PathBasis::index_of(const Path& p) const
{
    auto it = std::lower_bound(paths.begin(), paths.end(), p);
    if (it == paths.end() || *it != p)
        return std::nullopt;
    return static_cast<std::size_t>(it - paths.begin());
}

bool is_allowed(const Digraph& g, const Path& p)
{
    if (p.vertices.empty())
        return false;
    for (auto v : p.vertices)
    {
        if (v >= g.vertex_count())
            return false;
    }
    for (std::size_t i = 1; i < p.size(); ++i)
    {
        if (p[i - 1] == p[i] || !g.has_edge(p[i - 1], p[i]))
            return false;
    }
    return true;
}

bool is_allowed(const Digraph& g, const Chain& c)
{
    return std::all_of(c.terms().begin(), c.terms().end(),
                       [&](const auto& term) { return is_allowed(g, term.first); });
}

PathBasis allowed_paths(const Digraph& g, int n, int max_dim)
{
    if (n < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative path dimension");
    if (n > max_dim)
    {
        throw Error(ErrorKind::DimensionBoundExceeded, "dimension " + std::to_string(n) +
                                                           " exceeds the bound " + std::to_string(max_dim));
    }
    PathBasis basis;
    basis.dimension = n;
    std::vector<VertexIndex> stack;
    stack.reserve(static_cast<std::size_t>(n) + 1);

    // Depth-first extension over ascending successors yields lexicographic order.
    auto extend = [&](auto&& self) -> void {
        if (stack.size() == static_cast<std::size_t>(n) + 1)
        {
            basis.paths.emplace_back(stack);
            return;
        }
        for (VertexIndex w : g.successors(stack.back()))
        {
            stack.push_back(w);
            self(self);
            stack.pop_back();
        }
    };
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    {
        stack.assign(1, v);
        extend(extend);
    }
    return basis;
}

Path face(const Path& p, std::size_t i)
{
    if (p.dimension() < 1 || i >= p.size())
    {
        throw Error(ErrorKind::IndexOutOfRange, "face " + std::to_string(i) + " of a " +
                                                    std::to_string(p.dimension()) + "-path");
    }
    Path out;
    out.vertices.reserve(p.size() - 1);
    for (std::size_t k = 0; k < p.size(); ++k)
    {
        if (k != i)
            out.vertices.push_back(p[k]);
    }
    return out;
}

Chain boundary(const Path& p)
{
    Chain out(p.dimension() - 1);
    if (p.dimension() < 1)
        return out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.add(face(p, i), (i % 2 == 0) ? Rational(1) : Rational(-1));
    return out;
}

Chain boundary(const Chain& c)
{
    Chain out(c.dimension() - 1);
    if (c.dimension() < 1)
        return out;
    for (const auto& [p, coeff] : c.terms())
    {
        for (std::size_t i = 0; i < p.size(); ++i)
            out.add(face(p, i), (i % 2 == 0) ? coeff : Rational(-coeff));
    }
    return out;
}

bool boundary_squared_is_zero(const Chain& c)
{
    return boundary(boundary(c)).is_zero();
}

std::vector<Chain> omega_basis(const Digraph& g, int n, int max_dim)
{
    PathBasis basis = allowed_paths(g, n, max_dim);
    std::vector<Chain> out;
    if (n == 0)
    {
        for (const auto& p : basis.paths)
            out.emplace_back(p);
        return out;
    }

    // Each allowed path's non-allowed faces (with signs).  Ω_n is the kernel
    // of this column map; it splits over the connected components of the
    // bipartite incidence between paths and non-allowed faces, so kernels
    // are computed blockwise and merged.
    const std::size_t m = basis.size();
    std::vector<std::vector<std::pair<Path, int>>> bad_faces(m);
    std::map<Path, std::vector<std::size_t>> columns_of_face;
    for (std::size_t j = 0; j < m; ++j)
    {
        const Path& p = basis.paths[j];
        std::map<Path, int> acc;
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            Path q = face(p, i);
            if (!is_allowed(g, q))
                acc[q] += (i % 2 == 0) ? 1 : -1;
        }
        for (const auto& [q, s] : acc)
        {
            if (s != 0)
            {
                bad_faces[j].emplace_back(q, s);
                columns_of_face[q].push_back(j);
            }
        }
    }

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
        {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [q, cols] : columns_of_face)
    {
        for (std::size_t k = 1; k < cols.size(); ++k)
            parent[find(cols[k])] = find(cols[0]);
    }
    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t j = 0; j < m; ++j)
        components[find(j)].push_back(j);

    std::vector<std::pair<std::size_t, Chain>> pieces;   // (pivot column, chain)
    for (const auto& [root, cols] : components)
    {
        if (cols.size() == 1 && bad_faces[cols[0]].empty())
        {
            pieces.emplace_back(cols[0], Chain(basis.paths[cols[0]]));
            continue;
        }
        std::map<Path, std::size_t> row_of;
        for (auto j : cols)
        {
            for (const auto& [q, s] : bad_faces[j])
                row_of.emplace(q, row_of.size());
        }
        RationalMatrix block(row_of.size(), cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k)
        {
            for (const auto& [q, s] : bad_faces[cols[k]])
                block(row_of.at(q), k) = s;
        }
        for (const auto& v : kernel_basis(block))
        {
            Chain x(n);
            std::optional<std::size_t> pivot;
            for (std::size_t k = 0; k < cols.size(); ++k)
            {
                if (sgn(v[k]) == 0)
                    continue;
                if (!pivot)
                    pivot = cols[k];
                x.add(basis.paths[cols[k]], v[k]);
            }
            pieces.emplace_back(*pivot, std::move(x));
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& piece : pieces)
        out.push_back(std::move(piece.second));
    return out;
}

bool in_omega(const Digraph& g, const Chain& x)
{
    return is_allowed(g, x) && is_allowed(g, boundary(x));
}

Rational inner_product(const Chain& a, const Chain& b)
{
    if (!a.is_zero() && !b.is_zero() && a.dimension() != b.dimension())
        throw Error(ErrorKind::DimensionMismatch, "inner product of chains of different dimension");
    Rational sum = 0;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const auto& [p, c] : small.terms())
    {
        auto it = large.terms().find(p);
        if (it != large.terms().end())
            sum += c * it->second;
    }
    return sum;
}

RationalVector to_coordinates(const Chain& c, const PathBasis& basis)
{
    RationalVector x(basis.size());
    for (const auto& [p, coeff] : c.terms())
    {
        auto i = basis.index_of(p);
        if (!i)
            throw Error(ErrorKind::BasisExpressionFailure, "chain term outside the path basis");
        x[*i] = coeff;
    }
    return x;
}

Chain from_coordinates(const RationalVector& x, const PathBasis& basis)
{
    if (x.size() != basis.size())
        throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
    Chain c(basis.dimension);
    for (std::size_t i = 0; i < x.size(); ++i)
        c.add(basis.paths[i], x[i]);
    return c;
}

std::string format_path(const Digraph& g, const Path& p)
{
    std::string out;
    for (auto v : p.vertices)
        out += g.label(v);
    return out;
}

std::string format_path_dashed(const Digraph& g, const Path& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        if (i)
            out += '-';
        out += g.label(p[i]);
    }
    return out;
}

std::string format_chain(const Digraph& g, const Chain& c)
{
    if (c.is_zero())
        return "0";
    // Positive terms first, each group in path order: "v0v2 - v0v1".
    std::vector<std::pair<Path, Rational>> ordered(c.terms().begin(), c.terms().end());
    std::stable_partition(ordered.begin(), ordered.end(), [](const auto& t) { return sgn(t.second) > 0; });
    std::string out;
    bool first = true;
    for (const auto& [p, coeff] : ordered)
    {
        Rational magnitude = abs(coeff);
        if (first)
            out += sgn(coeff) < 0 ? "-" : "";
        else
            out += sgn(coeff) < 0 ? " - " : " + ";
        if (magnitude != 1)
            out += to_string(magnitude) + "*";
        out += format_path(g, p);
        first = false;
    }
    return out;
}

std::string serialize_chain(const Digraph& g, const Chain& c)
{
    if (c.is_zero())
        return "0";
    std::string out;
    for (const auto& [p, coeff] : c.terms())
    {
        if (!out.empty())
            out += " + ";
        out += to_string(coeff) + "*" + format_path_dashed(g, p);
    }
    return out;
}

std::optional<Path> parse_path(const Digraph& g, const std::string& text)
{
    if (text.find('-') != std::string::npos)
    {
        Path p;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            auto end = text.find('-', pos);
            if (end == std::string::npos)
                end = text.size();
            auto v = g.index_of(std::string_view(text).substr(pos, end - pos));
            if (!v)
                return std::nullopt;
            p.vertices.push_back(*v);
            pos = end + 1;
        }
        return p;
    }

    // Concatenated labels; backtrack over label prefixes.
    std::vector<VertexIndex> acc;
    auto split = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == text.size())
            return !acc.empty();
        for (std::size_t len = text.size() - pos; len >= 1; --len)
        {
            if (auto v = g.index_of(std::string_view(text).substr(pos, len)))
            {
                acc.push_back(*v);
                if (self(self, pos + len))
                    return true;
                acc.pop_back();
            }
        }
        return false;
    };
    if (!split(split, 0))
        return std::nullopt;
    return Path(acc);
}

}   // namespace dmorse
