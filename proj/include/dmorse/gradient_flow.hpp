/**
 * Discrete gradient vector field V̄ and flow Φ̄ = Id + ∂V̄ + V̄∂ of a Morse
 * function on a transitive digraph, with stabilization Φ̄^∞ and the
 * Φ̄-invariant basis {α + V̄∂α : α critical}.
 */
#ifndef DMORSE_GRADIENT_FLOW_HPP
#define DMORSE_GRADIENT_FLOW_HPP

#include <map>
#include <optional>
#include <vector>

#include "dmorse/graph.hpp"
#include "dmorse/morse_function.hpp"
#include "dmorse/paths.hpp"

namespace dmorse {

struct VectorFieldEntry
{
    Path target;
    int sign = 1;   // V(α) = sign · target, sign = -⟨∂target, α⟩

    bool operator==(const VectorFieldEntry&) const = default;
};

/// Nonzero values of V on allowed paths, keyed by source path.
using VectorField = std::map<Path, VectorFieldEntry>;

class GradientFlow
{
  public:
    /**
     * Throws NotTransitive unless gbar is transitive.  Chains of dimension
     * above max_dim are rejected with DimensionBoundExceeded.
     */
    GradientFlow(Digraph gbar, MorseFunction fbar, int max_dim);

    const Digraph& digraph() const noexcept { return gbar_; }
    const MorseFunction& function() const noexcept { return fbar_; }
    int max_dim() const noexcept { return max_dim_; }

    /// V(α) for a single path; nullopt when zero.  Throws NonUniqueTarget.
    std::optional<VectorFieldEntry> vector_at(const Path& alpha) const;

    /// Linear extension of V.
    Chain apply_v(const Chain& c) const;

    /// Φ̄(c) = c + ∂V(c) + V∂(c).
    Chain flow(const Chain& c) const;

    /**
     * Iterate Φ̄ to a fixpoint.  Throws StabilizationDiverged after
     * |P_n(Ḡ)| + 1 iterations without one.
     */
    Chain stabilize(const Chain& c, int* iterations = nullptr) const;

    /// All nonzero V entries on allowed paths of dimension <= max_dim.
    VectorField field() const;

    /// α + V̄∂α over critical n-paths α, in critical-path order.
    std::vector<Chain> invariant_basis(int n) const;

  private:
    void check_dimension(const Chain& c) const;

    Digraph gbar_;
    MorseFunction fbar_;
    int max_dim_;
};

/// V̄ on the closure, for all allowed paths up to max_dim.
VectorField gradient_field(const Digraph& gbar, const MorseFunction& fbar, int max_dim);

Chain gradient_flow(const Digraph& gbar, const MorseFunction& fbar, const Chain& c, int max_dim);

Chain flow_stabilize(const Digraph& gbar, const MorseFunction& fbar, const Chain& c, int max_dim);

std::vector<Chain> phi_invariant_basis(const Digraph& gbar, const MorseFunction& fbar, int n, int max_dim);

}   // namespace dmorse

#endif
