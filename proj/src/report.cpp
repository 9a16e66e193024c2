#include "dmorse/report.hpp"

#include <iomanip>
#include <sstream>

namespace dmorse {

std::string format_double(double value)
{
    std::ostringstream out;
    out << std::setprecision(12) << value;
    return out.str();
}

std::size_t significant_length(const std::vector<std::size_t>& values)
{
    std::size_t n = values.size();
    while (n > 1 && values[n - 1] == 0)
        --n;
    return std::max<std::size_t>(n, 1);
}

std::string format_betti(const std::vector<std::size_t>& values, std::size_t width)
{
    std::string out = "(";
    for (std::size_t i = 0; i < width; ++i)
    {
        if (i)
            out += ",";
        out += std::to_string(i < values.size() ? values[i] : 0);
    }
    return out + ")";
}

Json digraph_json(const Digraph& g)
{
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(Json::array({g.label(u), g.label(v)}));
    return Json{{"vertices", g.labels()}, {"edges", edges}, {"transitive", is_transitive(g)}};
}

Json path_list_json(const Digraph& g, const std::vector<Path>& paths)
{
    Json out = Json::array();
    for (const auto& p : paths)
        out.push_back(format_path_dashed(g, p));
    return out;
}

Json chain_list_json(const Digraph& g, const std::vector<Chain>& chains)
{
    Json out = Json::array();
    for (const auto& c : chains)
        out.push_back(serialize_chain(g, c));
    return out;
}

Json betti_json(const BettiVector& b)
{
    return Json{{"values", b.values}, {"bound", b.bound}, {"truncated", b.truncated}};
}

Json validation_json(const Digraph& g, const ValidationReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
    {
        violations.push_back(Json{{"path", format_path_dashed(g, v.path)},
                                  {"condition", v.condition == 1 ? "i" : "ii"},
                                  {"witnesses", path_list_json(g, v.witnesses)}});
    }
    return Json{{"isMorse", r.is_morse}, {"verifiedUpToDim", r.verified_up_to}, {"violations", violations}};
}

Json flat_json(const Digraph& g, const FlatReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
    {
        violations.push_back(Json{{"path", format_path_dashed(g, v.path)},
                                  {"condition", v.condition},
                                  {"first", format_path_dashed(g, v.first)},
                                  {"second", format_path_dashed(g, v.second)}});
    }
    return Json{{"holds", r.holds}, {"verifiedUpToDim", r.verified_up_to}, {"violations", violations}};
}

Json critical_json(const Digraph& g, const CriticalSet& c)
{
    Json out = Json::array();
    for (const auto& layer : c.by_dim)
        out.push_back(path_list_json(g, layer));
    return out;
}

Json hypotheses_json(const Digraph& g, const Digraph& closure, const HypothesisReport& h)
{
    Json v = Json::array();
    for (const auto& w : h.v_counterexamples)
        v.push_back(Json{{"source", serialize_chain(g, w.source)}, {"image", serialize_chain(closure, w.image)}});
    Json phi = Json::array();
    for (const auto& w : h.phi_counterexamples)
    {
        phi.push_back(Json{{"critical", format_path_dashed(g, w.critical)},
                           {"image", serialize_chain(closure, w.image)}});
    }
    Json ext = Json::array();
    for (const auto& m : h.extension_violations)
    {
        ext.push_back(Json{{"path", format_path_dashed(closure, m.path)},
                           {"condition", m.condition == 1 ? "i" : "ii"},
                           {"witnesses", path_list_json(closure, m.witnesses)}});
    }
    return Json{{"bound", h.bound},
                {"omegaVInvariant", h.omega_v_invariant},
                {"vCounterexamples", v},
                {"phiCritInOmega", h.phi_crit_in_omega},
                {"phiCounterexamples", phi},
                {"fExtendsToClosure", h.f_extends_to_closure},
                {"extensionViolations", ext}};
}

Json inequalities_json(const InequalityReport& r)
{
    return Json{{"bound", r.bound},
                {"l", r.l},
                {"L", r.L},
                {"b", r.b},
                {"critBound", r.crit_bound},
                {"weak", r.weak},
                {"strong", r.strong},
                {"chiL", r.chi_l},
                {"chiB", r.chi_b},
                {"eulerEquality", r.euler_equality},
                {"weakInequalities", r.weak_inequalities},
                {"strongInequalities", r.strong_inequalities},
                {"critBoundHolds", r.crit_bound_holds},
                {"truncated", r.truncated}};
}

Json spectrum_row_json(const SpectrumRow& row, std::size_t crit)
{
    Json eig = Json::array();
    for (double lambda : row.eigenvalues)
        eig.push_back(std::stod(format_double(lambda)));
    return Json{{"t", row.t},
                {"n", row.n},
                {"basisSize", row.basis_size},
                {"kernelDim", row.kernel_dim},
                {"lowDim", row.low_dim},
                {"critN", crit},
                {"epsKer", row.eps_ker},
                {"epsLow", row.eps_low},
                {"eigenvalues", eig}};
}

Json scan_json(const WittenScan& scan)
{
    const std::size_t per_t = static_cast<std::size_t>(scan.max_dim) + 1;
    Json rows = Json::array();
    for (std::size_t k = 0; k < scan.rows.size(); ++k)
        rows.push_back(spectrum_row_json(scan.rows[k], scan.dims[k % per_t].crit));
    Json dims = Json::array();
    for (const auto& d : scan.dims)
    {
        Json from = d.agreement_from ? Json(scan.grid[*d.agreement_from]) : Json(nullptr);
        dims.push_back(Json{{"n", d.n},
                            {"crit", d.crit},
                            {"betti", d.betti},
                            {"harmonicDim", d.harmonic},
                            {"kernelConstant", d.kernel_constant},
                            {"kernelMatchesBetti", d.kernel_matches_betti},
                            {"agreementFromT", from}});
    }
    return Json{{"grid", scan.grid},
                {"rows", rows},
                {"dimensions", dims},
                {"maxDdResidual", scan.max_dd_residual},
                {"ddZero", scan.dd_zero}};
}

std::string scan_csv(const WittenScan& scan)
{
    const std::size_t per_t = static_cast<std::size_t>(scan.max_dim) + 1;
    std::ostringstream out;
    out << "t,n,basis_size,kernel_dim,low_dim,crit_n,eigenvalues\n";
    for (std::size_t k = 0; k < scan.rows.size(); ++k)
    {
        const auto& row = scan.rows[k];
        out << format_double(row.t) << ',' << row.n << ',' << row.basis_size << ',' << row.kernel_dim << ','
            << row.low_dim << ',' << scan.dims[k % per_t].crit << ',';
        for (std::size_t i = 0; i < row.eigenvalues.size(); ++i)
            out << (i ? ";" : "") << format_double(row.eigenvalues[i]);
        out << '\n';
    }
    return out.str();
}

std::string format_layers(const Digraph& g, const std::vector<std::vector<Path>>& layers)
{
    std::size_t count = layers.size();
    while (count > 1 && layers[count - 1].empty())
        --count;
    std::string out;
    for (std::size_t n = 0; n < count; ++n)
    {
        if (n)
            out += " |";
        for (const auto& p : layers[n])
            out += (out.empty() ? "" : " ") + format_path(g, p);
    }
    return out;
}

}   // namespace dmorse
