/**
 * Elementary paths, rational chains, the boundary operator and the
 * ∂-invariant spaces Ω_n(G).
 */
#ifndef DMORSE_PATHS_HPP
#define DMORSE_PATHS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmorse/graph.hpp"
#include "dmorse/linalg.hpp"
#include "dmorse/rational.hpp"

namespace dmorse {

/// An elementary n-path: a nonempty vertex sequence of length n+1.
struct Path
{
    std::vector<VertexIndex> vertices;

    Path() = default;
    explicit Path(std::vector<VertexIndex> v) : vertices(std::move(v)) {}
    Path(std::initializer_list<VertexIndex> v) : vertices(v) {}

    int dimension() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    std::size_t size() const noexcept { return vertices.size(); }
    VertexIndex operator[](std::size_t i) const { return vertices[i]; }

    auto operator<=>(const Path&) const = default;
    bool operator==(const Path&) const = default;
};

/**
 * Finite rational combination of elementary paths of one dimension.
 * Zero coefficients are never stored.  Dimension -1 is the zero space that
 * boundaries of 0-chains land in.
 */
class Chain
{
  public:
    using Terms = std::map<Path, Rational>;

    explicit Chain(int dimension = 0) : dimension_(dimension) {}
    Chain(const Path& p, const Rational& coefficient = 1);

    int dimension() const noexcept { return dimension_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of p (zero when absent).
    Rational coefficient(const Path& p) const;

    /// Adds c·p; throws DimensionMismatch on a path of another dimension.
    void add(const Path& p, const Rational& c);

    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(const Rational& s);

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Rational& s, Chain a) { return a *= s; }
    friend Chain operator-(Chain a) { return a *= Rational(-1); }

    /// Equal terms; zero chains compare equal regardless of dimension.
    bool operator==(const Chain& other) const;

  private:
    int dimension_;
    Terms terms_;
};

/// Sorted, duplicate-free list of allowed paths of one dimension.
struct PathBasis
{
    int dimension = 0;
    std::vector<Path> paths;

    std::size_t size() const noexcept { return paths.size(); }
    bool empty() const noexcept { return paths.empty(); }
    std::optional<std::size_t> index_of(const Path& p) const;
    bool contains(const Path& p) const { return index_of(p).has_value(); }
};

bool is_allowed(const Digraph& g, const Path& p);

/// True iff every term of c is an allowed path of g.
bool is_allowed(const Digraph& g, const Chain& c);

/**
 * All allowed elementary n-paths, lexicographically ordered.
 * Throws DimensionBoundExceeded when n > max_dim.
 */
PathBasis allowed_paths(const Digraph& g, int n, int max_dim);

/// p with vertex i removed.  Throws IndexOutOfRange unless 0 <= i <= dim, dim >= 1.
Path face(const Path& p, std::size_t i);

/// ∂ = Σ (-1)^i d_i; a 0-chain maps to the zero chain of dimension -1.
Chain boundary(const Chain& c);
Chain boundary(const Path& p);

bool boundary_squared_is_zero(const Chain& c);

/**
 * Basis of Ω_n(G) in reduced echelon form over the lexicographic path
 * order (pivot coefficient +1).  Ω_0 is the vertex basis.
 */
std::vector<Chain> omega_basis(const Digraph& g, int n, int max_dim);

/// x ∈ Ω_n(G): x and ∂x are supported on allowed paths of g.
bool in_omega(const Digraph& g, const Chain& x);

/// Throws DimensionMismatch for nonzero chains of different dimension.
Rational inner_product(const Chain& a, const Chain& b);

/// Coordinates of c in the path basis; throws if c has a term outside it.
RationalVector to_coordinates(const Chain& c, const PathBasis& basis);
Chain from_coordinates(const RationalVector& x, const PathBasis& basis);

/// Labels concatenated: "v0v1v3".
std::string format_path(const Digraph& g, const Path& p);

/// Labels joined by '-': "v0-v1-v3".
std::string format_path_dashed(const Digraph& g, const Path& p);

/// Human-readable form, e.g. "v0v2 - v0v1" or "2*v0v1 + 1/2*v1v3"; "0" for zero.
std::string format_chain(const Digraph& g, const Chain& c);

/// Report form: "1*v0-v2 + -1*v0-v1", "0" for zero.
std::string serialize_chain(const Digraph& g, const Chain& c);

/// Parse a path in concatenated or dashed form against g's labels.
std::optional<Path> parse_path(const Digraph& g, const std::string& text);

}   // namespace dmorse

#endif
