/**
 * The Morse complex (Crit_n(Ḡ) ∩ P_n(G), ∂̃), the hypotheses under which it
 * computes path homology, and the Morse inequalities.
 */
#ifndef DMORSE_MORSE_COMPLEX_HPP
#define DMORSE_MORSE_COMPLEX_HPP

#include <vector>

#include "dmorse/gradient_flow.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/morse_function.hpp"

namespace dmorse {

struct VInvarianceWitness
{
    Chain source;   // an Ω_n(G) basis chain
    Chain image;    // V̄(source), not in Ω_{n+1}(G)
};

struct FlowWitness
{
    Path critical;   // α ∈ Crit(Ḡ) ∩ P(G)
    Chain image;     // Φ̄(α), not in Ω(G)
};

struct HypothesisReport
{
    int bound = 0;
    bool omega_v_invariant = true;
    std::vector<VInvarianceWitness> v_counterexamples;
    bool phi_crit_in_omega = true;
    std::vector<FlowWitness> phi_counterexamples;
    bool f_extends_to_closure = true;
    std::vector<MorseViolation> extension_violations;

    bool all_hold() const { return omega_v_invariant && phi_crit_in_omega && f_extends_to_closure; }
};

/**
 * (a) V̄ maps every Ω_n(G) basis chain into Ω_{n+1}(G), n <= max_dim;
 * (b) Φ̄(α) ∈ Ω(G) for every α ∈ Crit(Ḡ) ∩ P(G) of dimension <= max_dim.
 * All counterexamples are recorded.  When f does not extend, (a) and (b)
 * are left unchecked and reported false.
 */
HypothesisReport check_hypotheses(const Digraph& g, const MorseFunction& f, int max_dim);

struct MorseComplexRep
{
    int max_dim = 0;
    /// bases[n] = Crit_n(Ḡ) ∩ P_n(G), n = 0..max_dim+1.
    std::vector<std::vector<Path>> bases;
    /// stabilized[n][j] = Φ̄^∞ of bases[n][j].
    std::vector<std::vector<Chain>> stabilized;
    /// boundaries[n] is ∂̃_n, columns bases[n], rows bases[n-1].
    std::vector<RationalMatrix> boundaries;
    HypothesisReport hypotheses;
    bool boundary_squared_zero = true;
    bool truncated = false;

    /// ∂̃(bases[n][j]) as a chain over bases[n-1].
    Chain differential(int n, std::size_t j) const;
};

/**
 * Builds the Morse complex through dimension max_dim+1.  Throws NotMorse
 * when f is not Morse on g and ExtensionNotMorse when the closure
 * extension fails.
 */
MorseComplexRep morse_complex(const Digraph& g, const MorseFunction& f, int max_dim);

BettiVector morse_homology(const MorseComplexRep& rep);

/// Critical paths of Ḡ that, as single paths, lie in Ω_n(G).
std::vector<Path> critical_in_omega(const Digraph& g, const MorseFunction& f, int n, int max_dim);

/**
 * Basis (echelon form, P_n(Ḡ) coordinates) of span{α + V̄∂α : α ∈ Crit_n(Ḡ)} ∩ Ω_n(G).
 */
std::vector<Chain> invariant_omega_intersection(const Digraph& g, const MorseFunction& f, int n, int max_dim);

struct InequalityReport
{
    int bound = 0;
    std::vector<std::size_t> l;   // |Crit_m(Ḡ) ∩ P_m(G)|
    std::vector<std::size_t> L;   // |Crit_m(G)|
    std::vector<std::size_t> b;   // path homology of G
    std::vector<bool> crit_bound;         // L_m >= l_m
    std::vector<bool> weak;               // l_m >= b_m
    std::vector<bool> strong;             // Σ_{k<=m} (-1)^{m-k} (l_k - b_k) >= 0
    long long chi_l = 0;
    long long chi_b = 0;
    bool euler_equality = true;
    bool weak_inequalities = true;
    bool strong_inequalities = true;
    bool crit_bound_holds = true;
    bool truncated = false;   // Ω_{bound+1}(G) or Crit_{bound+1} nonzero
};

/**
 * Morse inequalities up to max_dim.  A truncated report still carries all
 * sequences; callers decide how to surface the flag.
 */
InequalityReport morse_inequalities(const Digraph& g, const MorseFunction& f, int max_dim);

}   // namespace dmorse

#endif
