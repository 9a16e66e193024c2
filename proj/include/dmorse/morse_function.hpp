/**
 * Discrete Morse functions on digraphs: parsing, path weights, validation
 * of the equal-weight face/coface conditions, critical paths, the flat
 * Witten-Morse check and extension to the transitive closure.
 *
 * An equal-weight coface γ > α differs from α by one inserted vertex of
 * value 0 (values are nonnegative), and likewise for faces, so all
 * equal-weight searches range over the zero-point set only.
 */
#ifndef DMORSE_MORSE_FUNCTION_HPP
#define DMORSE_MORSE_FUNCTION_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dmorse/graph.hpp"
#include "dmorse/paths.hpp"
#include "dmorse/rational.hpp"

namespace dmorse {

class MorseFunction
{
  public:
    MorseFunction() = default;

    /// values[i] belongs to vertex i; throws NegativeValue on a negative entry.
    explicit MorseFunction(std::vector<Rational> values);

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<Rational>& values() const noexcept { return values_; }

    /// Throws UnknownVertex when v is outside the domain.
    const Rational& operator()(VertexIndex v) const;

    bool operator==(const MorseFunction&) const = default;

  private:
    std::vector<Rational> values_;
};

/**
 * "<label> <value>" per line, values nonnegative decimals or p/q, '#'
 * comments.  Every vertex of g must appear exactly once.
 */
MorseFunction parse_morse_function(std::string_view text, const Digraph& g);

std::string serialize_morse_function(const MorseFunction& f, const Digraph& g);

Rational path_weight(const MorseFunction& f, const Path& p);

std::set<VertexIndex> zero_point_set(const MorseFunction& f);

/// Allowed (n-1)-paths obtained by deleting one vertex, without repeats.
std::vector<Path> allowed_faces(const Digraph& g, const Path& p);

/// Allowed (n+1)-paths obtained by inserting one vertex, without repeats.
std::vector<Path> allowed_cofaces(const Digraph& g, const Path& p);

std::vector<Path> equal_weight_faces(const Digraph& g, const MorseFunction& f, const Path& p);
std::vector<Path> equal_weight_cofaces(const Digraph& g, const MorseFunction& f, const Path& p);

struct MorseViolation
{
    Path path;
    /// 1: more than one equal-weight coface; 2: more than one equal-weight face.
    int condition = 1;
    std::vector<Path> witnesses;
};

struct ValidationReport
{
    bool is_morse = true;
    int verified_up_to = 0;
    std::vector<MorseViolation> violations;
};

/// Checks both conditions on every allowed path of dimension <= max_dim.
ValidationReport validate_morse(const Digraph& g, const MorseFunction& f, int max_dim);

struct FlatViolation
{
    Path path;
    /// "coface-min", "coface-average", "face-max" or "face-average".
    std::string condition;
    Path first;
    Path second;
};

struct FlatReport
{
    bool holds = true;
    int verified_up_to = 0;
    std::vector<FlatViolation> violations;
};

/**
 * For every allowed α with dim <= max_dim and all pairs of distinct allowed
 * cofaces γ1, γ2 (faces β1, β2): f(α) <= min, f(α) < average (resp.
 * f(α) >= max, f(α) > average).  Throws NotMorse when f fails validation.
 */
FlatReport check_flat_witten_morse(const Digraph& g, const MorseFunction& f, int max_dim);

/// Per-dimension critical paths, lexicographic within each dimension.
struct CriticalSet
{
    std::vector<std::vector<Path>> by_dim;

    std::size_t count(int n) const
    {
        return n < static_cast<int>(by_dim.size()) ? by_dim[static_cast<std::size_t>(n)].size() : 0;
    }
};

bool is_critical(const Digraph& g, const MorseFunction& f, const Path& p);

/// Allowed paths with no equal-weight face and no equal-weight coface, dims 0..max_dim.
CriticalSet critical_paths(const Digraph& g, const MorseFunction& f, int max_dim);

struct ClosureExtension
{
    Digraph closure;
    MorseFunction fbar;
    ValidationReport report;   // validation of fbar on the closure
};

/// Closure with the same vertex values, and the closure's validation report.
ClosureExtension try_extend_to_closure(const Digraph& g, const MorseFunction& f, int max_dim);

/// As try_extend_to_closure, but throws ExtensionNotMorse listing the violations.
ClosureExtension extend_to_closure(const Digraph& g, const MorseFunction& f, int max_dim);

/// One line per violation, e.g. "v0v1: condition (ii) witnesses v0, v1".
std::string describe_violations(const Digraph& g, const std::vector<MorseViolation>& violations);

}   // namespace dmorse

#endif
