/**
 * Finite digraphs without self-loops: parsing, serialization, transitive
 * closure and transitivity testing.
 *
 * Vertices are interned to dense indices 0..n-1 in first-appearance order
 * of the input; that order is the canonical basis order everywhere else in
 * the library.
 */
#ifndef DMORSE_GRAPH_HPP
#define DMORSE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dmorse {

using VertexIndex = std::uint32_t;

class Digraph
{
  public:
    Digraph() = default;

    /**
     * Build a digraph from labels (in index order) and index pairs.
     * Duplicate edges collapse; a self-loop or an out-of-range endpoint
     * throws.
     */
    Digraph(std::vector<std::string> labels,
            const std::vector<std::pair<VertexIndex, VertexIndex>>& edges);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexIndex v) const { return labels_.at(v); }
    std::optional<VertexIndex> index_of(std::string_view label) const;

    bool has_edge(VertexIndex u, VertexIndex v) const
    {
        return adjacency_[static_cast<std::size_t>(u) * labels_.size() + v] != 0;
    }

    /// Out-neighbours of v, ascending.
    const std::vector<VertexIndex>& successors(VertexIndex v) const { return successors_[v]; }

    /// All edges, sorted by (source, target).
    std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;

    bool operator==(const Digraph& other) const
    {
        return labels_ == other.labels_ && adjacency_ == other.adjacency_;
    }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexIndex> index_;
    std::vector<std::uint8_t> adjacency_;
    std::vector<std::vector<VertexIndex>> successors_;
    std::size_t edge_count_ = 0;
};

/**
 * Parse the edge-list text format: one "<src> <dst>" per line, '#'
 * comments, blank lines ignored, "vertex <label>" declares a vertex.
 */
Digraph parse_digraph(std::string_view text);

/// Inverse of parse_digraph; parsing the output reproduces g exactly.
std::string serialize_digraph(const Digraph& g);

/// Reachability closure; pairs (u,u) coming from directed cycles are dropped.
Digraph transitive_closure(const Digraph& g);

/// True iff u->v, v->w with u != w always implies u->w.
bool is_transitive(const Digraph& g);

bool has_directed_cycle(const Digraph& g);

/// Number of connected components of the underlying undirected graph.
std::size_t weak_component_count(const Digraph& g);

bool is_valid_label(std::string_view label);

}   // namespace dmorse

#endif
