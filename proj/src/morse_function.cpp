#include "dmorse/morse_function.hpp"

#include <algorithm>
#include <sstream>

#include "dmorse/error.hpp"

namespace dmorse {

MorseFunction::MorseFunction(std::vector<Rational> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
    {
        values_[i].canonicalize();
        if (sgn(values_[i]) < 0)
            throw Error(ErrorKind::NegativeValue, "vertex " + std::to_string(i) + " has a negative value");
    }
}

const Rational& MorseFunction::operator()(VertexIndex v) const
{
    if (v >= values_.size())
        throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " has no value");
    return values_[v];
}

MorseFunction parse_morse_function(std::string_view text, const Digraph& g)
{
    std::vector<std::optional<Rational>> values(g.vertex_count());
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();

        std::istringstream in(line);
        std::string label;
        std::string value;
        std::string extra;
        if (!(in >> label) || label.front() == '#')
            continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!(in >> value) || (in >> extra))
            throw Error(ErrorKind::ParseError, where + "expected '<label> <value>'");
        auto v = g.index_of(label);
        if (!v)
            throw Error(ErrorKind::UnknownVertex, where + "'" + label + "' is not a vertex of the digraph");
        auto parsed = parse_rational(value);
        if (!parsed)
            throw Error(ErrorKind::ParseError, where + "malformed value '" + value + "'");
        if (sgn(*parsed) < 0)
            throw Error(ErrorKind::NegativeValue, where + "'" + label + "' has value " + value);
        if (values[*v])
            throw Error(ErrorKind::DuplicateVertex, where + "'" + label + "' assigned twice");
        values[*v] = *parsed;
    }

    std::vector<Rational> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (!values[i])
            throw Error(ErrorKind::MissingVertex, "no value for '" + g.label(static_cast<VertexIndex>(i)) + "'");
        out.push_back(*values[i]);
    }
    return MorseFunction(std::move(out));
}

std::string serialize_morse_function(const MorseFunction& f, const Digraph& g)
{
    std::ostringstream out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        out << g.label(v) << ' ' << to_string(f(v)) << '\n';
    return out.str();
}

Rational path_weight(const MorseFunction& f, const Path& p)
{
    Rational sum = 0;
    for (auto v : p.vertices)
        sum += f(v);
    return sum;
}

std::set<VertexIndex> zero_point_set(const MorseFunction& f)
{
    std::set<VertexIndex> out;
    for (VertexIndex v = 0; v < f.size(); ++v)
    {
        if (sgn(f(v)) == 0)
            out.insert(v);
    }
    return out;
}

namespace {

Path inserted(const Path& p, std::size_t position, VertexIndex w)
{
    Path q = p;
    q.vertices.insert(q.vertices.begin() + static_cast<std::ptrdiff_t>(position), w);
    return q;
}

template <typename Pred>
std::vector<Path> faces_where(const Digraph& g, const Path& p, Pred keep_vertex)
{
    std::vector<Path> out;
    if (p.dimension() < 1)
        return out;
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        if (!keep_vertex(p[i]))
            continue;
        Path q = face(p, i);
        if (is_allowed(g, q))
            out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <typename Range>
std::vector<Path> cofaces_over(const Digraph& g, const Path& p, const Range& candidates)
{
    std::vector<Path> out;
    for (std::size_t pos = 0; pos <= p.size(); ++pos)
    {
        for (VertexIndex w : candidates)
        {
            // Only the two new adjacencies need checking.
            if (pos > 0 && (p[pos - 1] == w || !g.has_edge(p[pos - 1], w)))
                continue;
            if (pos < p.size() && (p[pos] == w || !g.has_edge(w, p[pos])))
                continue;
            out.push_back(inserted(p, pos, w));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexIndex> all_vertices(const Digraph& g)
{
    std::vector<VertexIndex> out(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        out[v] = v;
    return out;
}

}   // namespace

std::vector<Path> allowed_faces(const Digraph& g, const Path& p)
{
    return faces_where(g, p, [](VertexIndex) { return true; });
}

std::vector<Path> allowed_cofaces(const Digraph& g, const Path& p)
{
    return cofaces_over(g, p, all_vertices(g));
}

std::vector<Path> equal_weight_faces(const Digraph& g, const MorseFunction& f, const Path& p)
{
    return faces_where(g, p, [&](VertexIndex v) { return sgn(f(v)) == 0; });
}

std::vector<Path> equal_weight_cofaces(const Digraph& g, const MorseFunction& f, const Path& p)
{
    return cofaces_over(g, p, zero_point_set(f));
}

ValidationReport validate_morse(const Digraph& g, const MorseFunction& f, int max_dim)
{
    if (f.size() != g.vertex_count())
        throw Error(ErrorKind::UnknownVertex, "Morse function domain does not match the digraph");
    ValidationReport report;
    report.verified_up_to = max_dim;
    for (int n = 0; n <= max_dim; ++n)
    {
        for (const auto& p : allowed_paths(g, n, max_dim).paths)
        {
            auto up = equal_weight_cofaces(g, f, p);
            if (up.size() > 1)
                report.violations.push_back({p, 1, std::move(up)});
            auto down = equal_weight_faces(g, f, p);
            if (down.size() > 1)
                report.violations.push_back({p, 2, std::move(down)});
        }
    }
    report.is_morse = report.violations.empty();
    return report;
}

FlatReport check_flat_witten_morse(const Digraph& g, const MorseFunction& f, int max_dim)
{
    auto validation = validate_morse(g, f, max_dim);
    if (!validation.is_morse)
        throw Error(ErrorKind::NotMorse, describe_violations(g, validation.violations));

    FlatReport report;
    report.verified_up_to = max_dim;
    for (int n = 0; n <= max_dim; ++n)
    {
        for (const auto& alpha : allowed_paths(g, n, max_dim).paths)
        {
            const Rational fa = path_weight(f, alpha);
            auto up = allowed_cofaces(g, alpha);
            std::vector<Rational> wu;
            for (const auto& q : up)
                wu.push_back(path_weight(f, q));
            for (std::size_t i = 0; i < up.size(); ++i)
            {
                for (std::size_t j = i + 1; j < up.size(); ++j)
                {
                    if (fa > std::min(wu[i], wu[j]))
                        report.violations.push_back({alpha, "coface-min", up[i], up[j]});
                    if (2 * fa >= wu[i] + wu[j])
                        report.violations.push_back({alpha, "coface-average", up[i], up[j]});
                }
            }
            auto down = allowed_faces(g, alpha);
            std::vector<Rational> wd;
            for (const auto& q : down)
                wd.push_back(path_weight(f, q));
            for (std::size_t i = 0; i < down.size(); ++i)
            {
                for (std::size_t j = i + 1; j < down.size(); ++j)
                {
                    if (fa < std::max(wd[i], wd[j]))
                        report.violations.push_back({alpha, "face-max", down[i], down[j]});
                    if (2 * fa <= wd[i] + wd[j])
                        report.violations.push_back({alpha, "face-average", down[i], down[j]});
                }
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

bool is_critical(const Digraph& g, const MorseFunction& f, const Path& p)
{
    return is_allowed(g, p) && equal_weight_faces(g, f, p).empty() && equal_weight_cofaces(g, f, p).empty();
}

CriticalSet critical_paths(const Digraph& g, const MorseFunction& f, int max_dim)
{
    CriticalSet out;
    for (int n = 0; n <= max_dim; ++n)
    {
        std::vector<Path> crit;
        for (const auto& p : allowed_paths(g, n, max_dim).paths)
        {
            if (equal_weight_faces(g, f, p).empty() && equal_weight_cofaces(g, f, p).empty())
                crit.push_back(p);
        }
        out.by_dim.push_back(std::move(crit));
    }
    return out;
}

ClosureExtension try_extend_to_closure(const Digraph& g, const MorseFunction& f, int max_dim)
{
    ClosureExtension ext{transitive_closure(g), f, {}};
    ext.report = validate_morse(ext.closure, ext.fbar, max_dim);
    return ext;
}

ClosureExtension extend_to_closure(const Digraph& g, const MorseFunction& f, int max_dim)
{
    auto ext = try_extend_to_closure(g, f, max_dim);
    if (!ext.report.is_morse)
    {
        throw Error(ErrorKind::ExtensionNotMorse,
                    "the extension to the transitive closure is not a Morse function: " +
                        describe_violations(ext.closure, ext.report.violations));
    }
    return ext;
}

std::string describe_violations(const Digraph& g, const std::vector<MorseViolation>& violations)
{
    std::string out;
    for (const auto& v : violations)
    {
        if (!out.empty())
            out += "; ";
        out += format_path(g, v.path) + ": condition (" + (v.condition == 1 ? "i" : "ii") + ") witnesses";
        for (std::size_t i = 0; i < v.witnesses.size(); ++i)
            out += (i ? ", " : " ") + format_path(g, v.witnesses[i]);
    }
    return out;
}

}   // namespace dmorse
