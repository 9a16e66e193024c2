/**
 * JSON and text renderings of analysis results, shared by the CLI and the
 * tests.  Rationals are rendered "p/q" (or "p"), doubles with 12
 * significant digits, chains as "<coeff>*v0-v1 + ...".
 */
#ifndef DMORSE_REPORT_HPP
#define DMORSE_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "dmorse/gradient_flow.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/morse_complex.hpp"
#include "dmorse/morse_function.hpp"
#include "dmorse/witten.hpp"

namespace dmorse {

using Json = nlohmann::ordered_json;

std::string format_double(double value);

/// "(1,0)" style; `width` entries, padded with zeros when values is shorter.
std::string format_betti(const std::vector<std::size_t>& values, std::size_t width);

/// Length after dropping trailing zeros (at least 1).
std::size_t significant_length(const std::vector<std::size_t>& values);

Json digraph_json(const Digraph& g);
Json path_list_json(const Digraph& g, const std::vector<Path>& paths);
Json chain_list_json(const Digraph& g, const std::vector<Chain>& chains);

Json betti_json(const BettiVector& b);
Json validation_json(const Digraph& g, const ValidationReport& r);
Json flat_json(const Digraph& g, const FlatReport& r);
Json critical_json(const Digraph& g, const CriticalSet& c);
Json hypotheses_json(const Digraph& g, const Digraph& closure, const HypothesisReport& h);
Json inequalities_json(const InequalityReport& r);
Json spectrum_row_json(const SpectrumRow& row, std::size_t crit);
Json scan_json(const WittenScan& scan);

/// CSV with columns t,n,basis_size,kernel_dim,low_dim,crit_n,eigenvalues.
std::string scan_csv(const WittenScan& scan);

/// Per-dimension lists separated by " | ", trailing empty dimensions dropped.
std::string format_layers(const Digraph& g, const std::vector<std::vector<Path>>& layers);

}   // namespace dmorse

#endif
