#include "dmorse/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "dmorse/error.hpp"

namespace dmorse {

Digraph::Digraph(std::vector<std::string> labels,
                 const std::vector<std::pair<VertexIndex, VertexIndex>>& edges)
    : labels_(std::move(labels))
{
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!index_.emplace(labels_[i], static_cast<VertexIndex>(i)).second)
            throw Error(ErrorKind::DuplicateVertex, "label '" + labels_[i] + "' used twice");
    }
    adjacency_.assign(n * n, 0);
    successors_.resize(n);
    for (const auto& [u, v] : edges)
    {
        if (u >= n || v >= n)
            throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "self-loop at '" + labels_[u] + "'");
        auto& cell = adjacency_[static_cast<std::size_t>(u) * n + v];
        if (cell == 0)
        {
            cell = 1;
            successors_[u].push_back(v);
            ++edge_count_;
        }
    }
    for (auto& s : successors_)
        std::sort(s.begin(), s.end());
}

std::optional<VertexIndex> Digraph::index_of(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<VertexIndex, VertexIndex>> Digraph::edges() const
{
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    out.reserve(edge_count_);
    for (VertexIndex u = 0; u < successors_.size(); ++u)
    {
        for (VertexIndex v : successors_[u])
            out.emplace_back(u, v);
    }
    return out;
}

bool is_valid_label(std::string_view label)
{
    if (label.empty())
        return false;
    return std::all_of(label.begin(), label.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size())
    {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}   // namespace

Digraph parse_digraph(std::string_view text)
{
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexIndex> index;
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;

    auto intern = [&](std::string_view label, std::size_t line_no) -> VertexIndex {
        if (!is_valid_label(label))
        {
            throw Error(ErrorKind::BadToken, "line " + std::to_string(line_no) +
                                                 ": malformed label '" + std::string(label) + "'");
        }
        auto [it, inserted] = index.emplace(std::string(label), static_cast<VertexIndex>(labels.size()));
        if (inserted)
            labels.emplace_back(label);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        if (tokens.size() != 2)
        {
            throw Error(ErrorKind::BadToken,
                        "line " + std::to_string(line_no) + ": expected two tokens");
        }
        if (tokens[0] == "vertex")
        {
            intern(tokens[1], line_no);
            continue;
        }
        if (tokens[0] == tokens[1])
        {
            throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) + ": '" +
                                                 std::string(tokens[0]) + "' -> itself");
        }
        VertexIndex u = intern(tokens[0], line_no);
        VertexIndex v = intern(tokens[1], line_no);
        edges.emplace_back(u, v);
    }

    if (labels.empty())
        throw Error(ErrorKind::EmptyGraph, "no vertices or edges");
    return Digraph(std::move(labels), edges);
}

std::string serialize_digraph(const Digraph& g)
{
    auto edges = g.edges();

    // The bare edge list is enough when it already introduces the vertices
    // in index order; otherwise declare every vertex up front.
    std::vector<bool> seen(g.vertex_count(), false);
    VertexIndex next = 0;
    bool order_ok = true;
    for (const auto& [u, v] : edges)
    {
        for (VertexIndex w : {u, v})
        {
            if (!seen[w])
            {
                seen[w] = true;
                if (w != next++)
                    order_ok = false;
            }
        }
    }
    if (next != g.vertex_count())
        order_ok = false;

    std::ostringstream out;
    if (!order_ok)
    {
        for (const auto& label : g.labels())
            out << "vertex " << label << '\n';
    }
    for (const auto& [u, v] : edges)
        out << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

Digraph transitive_closure(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> reach(n * n, 0);
    for (const auto& [u, v] : g.edges())
        reach[u * n + v] = 1;

    // Floyd-Warshall reachability
    for (std::size_t k = 0; k < n; ++k)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            if (!reach[i * n + k])
                continue;
            for (std::size_t j = 0; j < n; ++j)
            {
                if (reach[k * n + j])
                    reach[i * n + j] = 1;
            }
        }
    }

    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
        {
            if (i != j && reach[i * n + j])
                edges.emplace_back(static_cast<VertexIndex>(i), static_cast<VertexIndex>(j));
        }
    }
    return Digraph(g.labels(), edges);
}

bool is_transitive(const Digraph& g)
{
    for (const auto& [u, v] : g.edges())
    {
        for (VertexIndex w : g.successors(v))
        {
            if (w != u && !g.has_edge(u, w))
                return false;
        }
    }
    return true;
}

bool has_directed_cycle(const Digraph& g)
{
    // Kahn's algorithm: a cycle remains iff some vertex is never freed
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [u, v] : g.edges())
        ++indegree[v];
    std::vector<VertexIndex> ready;
    for (VertexIndex v = 0; v < n; ++v)
    {
        if (indegree[v] == 0)
            ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty())
    {
        VertexIndex u = ready.back();
        ready.pop_back();
        ++removed;
        for (VertexIndex v : g.successors(u))
        {
            if (--indegree[v] == 0)
                ready.push_back(v);
        }
    }
    return removed != n;
}

std::size_t weak_component_count(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
        {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = n;
    for (const auto& [u, v] : g.edges())
    {
        auto a = find(u);
        auto b = find(v);
        if (a != b)
        {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

}   // namespace dmorse
