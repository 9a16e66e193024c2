#include "dmorse/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dmorse/error.hpp"
#include "dmorse/gradient_flow.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/morse_complex.hpp"
#include "dmorse/report.hpp"
#include "dmorse/witten.hpp"

namespace dmorse {

namespace {

struct RunConfig
{
    std::string command;
    std::string digraph_path;
    std::string morse_path;
    int max_dim = -1;   // -1: |V|
    std::string t_grid = "1,2,4,8,16,32,64";
    double eps_low = kDefaultLowFactor;
    std::string format = "text";
    std::string out_path;
};

struct Warning
{
    std::string kind;
    std::string message;
};

/// Everything a subcommand produces before rendering.
struct Outcome
{
    Json payload = Json::object();
    std::string text;
    std::string csv;
    std::vector<Warning> warnings;
    int exit_code = kExitOk;
};

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<double> parse_grid(const std::string& text)
{
    std::vector<double> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        try
        {
            std::size_t used = 0;
            double t = std::stod(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            grid.push_back(t);
        }
        catch (const std::exception&)
        {
            throw UsageError("--t-grid: malformed value '" + item + "'");
        }
    }
    if (grid.empty())
        throw UsageError("--t-grid is empty");
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        if (!(grid[k] > 0.0) || (k > 0 && !(grid[k] > grid[k - 1])))
            throw UsageError("--t-grid must be positive and strictly ascending");
    }
    return grid;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::SelfLoop:
    case ErrorKind::BadToken:
    case ErrorKind::EmptyGraph:
    case ErrorKind::ParseError:
    case ErrorKind::UnknownVertex:
    case ErrorKind::DuplicateVertex:
    case ErrorKind::MissingVertex:
    case ErrorKind::NegativeValue:
    case ErrorKind::DimensionBoundExceeded:
    case ErrorKind::NotMorse:
    case ErrorKind::ExtensionNotMorse:
    case ErrorKind::NotTransitive:
    case ErrorKind::ScaleOverflow:
        return kExitValidation;
    default:
        return kExitInternal;
    }
}

std::string betti_text(const std::vector<std::size_t>& values)
{
    std::string out;
    for (auto b : values)
        out += " " + std::to_string(b);
    return out;
}

std::string join_paths(const Digraph& g, const std::vector<Path>& paths)
{
    std::string out;
    for (const auto& p : paths)
        out += (out.empty() ? "" : " ") + format_path(g, p);
    return out;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

// ------------------------------------------------------------------------
// Subcommands
// ------------------------------------------------------------------------

struct Inputs
{
    Digraph g;
    std::optional<MorseFunction> f;
    int max_dim = 0;
};

void truncation_warning(Outcome& o, bool truncated, int max_dim, const std::string& what)
{
    if (truncated)
    {
        o.warnings.push_back({"truncation", what + " is nonzero in dimension " + std::to_string(max_dim + 1) +
                                                ", above the bound " + std::to_string(max_dim)});
    }
}

const MorseFunction& require_morse_file(const Inputs& in)
{
    if (!in.f)
        throw UsageError("this command needs a Morse function (-f)");
    return *in.f;
}

void ensure_morse(const Digraph& g, const MorseFunction& f, int max_dim)
{
    auto report = validate_morse(g, f, max_dim);
    if (!report.is_morse)
        throw Error(ErrorKind::NotMorse, describe_violations(g, report.violations));
}

Outcome cmd_closure(const Inputs& in)
{
    Outcome o;
    Digraph closure = transitive_closure(in.g);
    Json added = Json::array();
    for (const auto& [u, v] : closure.edges())
    {
        if (!in.g.has_edge(u, v))
            added.push_back(Json::array({closure.label(u), closure.label(v)}));
    }
    if (has_directed_cycle(in.g))
        o.warnings.push_back({"cycle", "directed cycles make vertices reach themselves; those pairs are omitted"});
    o.payload = Json{{"closure", digraph_json(closure)}, {"added", added}};
    o.text = serialize_digraph(closure);
    return o;
}

Outcome cmd_paths(const Inputs& in)
{
    Outcome o;
    Json dims = Json::array();
    std::ostringstream text;
    for (int n = 0; n <= in.max_dim; ++n)
    {
        auto p = allowed_paths(in.g, n, in.max_dim);
        auto omega = omega_basis(in.g, n, in.max_dim);
        dims.push_back(Json{{"n", n}, {"allowed", path_list_json(in.g, p.paths)}, {"omega", chain_list_json(in.g, omega)}});
        text << "P_" << n << " (" << p.size() << "): " << join_paths(in.g, p.paths) << '\n';
        text << "Ω_" << n << " (" << omega.size() << "):";
        for (std::size_t i = 0; i < omega.size(); ++i)
            text << (i ? ", " : " ") << format_chain(in.g, omega[i]);
        text << '\n';
    }
    o.payload = Json{{"dimensions", dims}};
    o.text = text.str();
    return o;
}

Outcome cmd_homology(const Inputs& in)
{
    Outcome o;
    auto cx = build_complex(in.g, in.max_dim);
    auto b = betti(cx);
    auto euler = euler_check(cx);
    std::vector<std::size_t> dims;
    for (int n = 0; n <= in.max_dim; ++n)
        dims.push_back(cx.dim(n));
    o.payload = Json{{"betti", betti_json(b)},
                     {"omegaDims", dims},
                     {"euler", Json{{"omegaSum", euler.omega_sum},
                                    {"bettiSum", euler.betti_sum},
                                    {"consistent", euler.omega_sum == euler.betti_sum}}}};
    std::ostringstream text;
    text << "b:" << betti_text(b.values) << '\n';
    text << "dim Ω:" << betti_text(dims) << '\n';
    text << "chi: " << euler.betti_sum;
    if (euler.omega_sum != euler.betti_sum)
        text << " (Ω-side " << euler.omega_sum << ")";
    text << '\n';
    o.text = text.str();
    truncation_warning(o, cx.truncated, in.max_dim, "Ω");
    if (euler.omega_sum != euler.betti_sum)
    {
        o.warnings.push_back({"euler-truncated", "Euler characteristic sums disagree at the bound (" +
                                                     std::to_string(euler.omega_sum) + " vs " +
                                                     std::to_string(euler.betti_sum) + ")"});
    }
    return o;
}

Outcome cmd_morse_check(const Inputs& in)
{
    Outcome o;
    const auto& f = require_morse_file(in);
    auto report = validate_morse(in.g, f, in.max_dim);
    Json zero = Json::array();
    for (auto v : zero_point_set(f))
        zero.push_back(in.g.label(v));
    o.payload = Json{{"validation", validation_json(in.g, report)}, {"zeroPointSet", zero}};
    std::ostringstream text;
    text << "Morse: " << yes_no(report.is_morse) << " (verified up to dimension " << in.max_dim << ")\n";
    text << "zero-point set:";
    for (auto v : zero_point_set(f))
        text << ' ' << in.g.label(v);
    text << '\n';
    if (report.is_morse)
    {
        auto flat = check_flat_witten_morse(in.g, f, in.max_dim);
        o.payload["flatWittenMorse"] = flat_json(in.g, flat);
        text << "flat Witten-Morse: " << yes_no(flat.holds) << '\n';
    }
    else
    {
        o.payload["flatWittenMorse"] = nullptr;
        for (const auto& v : report.violations)
        {
            text << "violation " << format_path(in.g, v.path) << " condition (" << (v.condition == 1 ? "i" : "ii")
                 << "): " << join_paths(in.g, v.witnesses) << '\n';
        }
        o.warnings.push_back({"not-morse", describe_violations(in.g, report.violations)});
        o.exit_code = kExitValidation;
    }
    o.text = text.str();
    return o;
}

Outcome cmd_morse_critical(const Inputs& in)
{
    Outcome o;
    const auto& f = require_morse_file(in);
    ensure_morse(in.g, f, in.max_dim);
    auto ext = extend_to_closure(in.g, f, in.max_dim);
    auto on_g = critical_paths(in.g, f, in.max_dim);
    auto on_closure = critical_paths(ext.closure, ext.fbar, in.max_dim);
    std::vector<std::vector<Path>> both;
    for (const auto& layer : on_closure.by_dim)
    {
        std::vector<Path> kept;
        for (const auto& p : layer)
        {
            if (is_allowed(in.g, p))
                kept.push_back(p);
        }
        both.push_back(std::move(kept));
    }
    o.payload = Json{{"onG", critical_json(in.g, on_g)},
                     {"onClosure", critical_json(in.g, on_closure)},
                     {"closureIntersectG", critical_json(in.g, CriticalSet{both})}};
    o.text = "Crit(G): " + format_layers(in.g, on_g.by_dim) + "\n" +
             "Crit(Ḡ): " + format_layers(in.g, on_closure.by_dim) + "\n" +
             "Crit(Ḡ)∩P(G): " + format_layers(in.g, both) + "\n";
    return o;
}

Outcome cmd_morse_flow(const Inputs& in)
{
    Outcome o;
    const auto& f = require_morse_file(in);
    ensure_morse(in.g, f, in.max_dim);
    auto ext = extend_to_closure(in.g, f, in.max_dim);
    GradientFlow flow(ext.closure, ext.fbar, in.max_dim);
    const Digraph& gb = ext.closure;

    Json rows = Json::array();
    std::ostringstream vtext;
    std::ostringstream ftext;
    std::ostringstream stext;
    bool stable_equals_flow = true;
    for (int n = 0; n <= in.max_dim; ++n)
    {
        for (const auto& p : allowed_paths(gb, n, in.max_dim).paths)
        {
            Chain v = flow.apply_v(Chain(p));
            Chain phi = flow.flow(Chain(p));
            Chain inf = flow.stabilize(Chain(p));
            stable_equals_flow = stable_equals_flow && inf == phi;
            rows.push_back(Json{{"path", format_path_dashed(gb, p)},
                                {"critical", is_critical(gb, ext.fbar, p)},
                                {"V", serialize_chain(gb, v)},
                                {"Phi", serialize_chain(gb, phi)},
                                {"PhiInf", serialize_chain(gb, inf)}});
            if (!v.is_zero())
                vtext << "V̄(" << format_path(gb, p) << ") = " << format_chain(gb, v) << '\n';
            ftext << "Φ̄(" << format_path(gb, p) << ") = " << format_chain(gb, phi) << '\n';
            if (!(inf == phi))
                stext << "Φ̄^∞(" << format_path(gb, p) << ") = " << format_chain(gb, inf) << '\n';
        }
    }
    o.payload = Json{{"closure", digraph_json(gb)}, {"rows", rows}, {"stabilizationEqualsFlow", stable_equals_flow}};
    o.text = vtext.str() + "V̄ = 0 on every other allowed path\n" + ftext.str() +
             (stable_equals_flow ? std::string("Φ̄^∞ = Φ̄\n") : stext.str());
    return o;
}

Outcome cmd_morse_complex(const Inputs& in)
{
    Outcome o;
    const auto& f = require_morse_file(in);
    auto rep = morse_complex(in.g, f, in.max_dim);
    auto morse_b = morse_homology(rep);
    auto path_b = betti(build_complex(in.g, in.max_dim));
    Digraph closure = transitive_closure(in.g);

    Json bases = Json::array();
    Json diff = Json::array();
    std::ostringstream text;
    std::vector<std::vector<Path>> shown(rep.bases.begin(), rep.bases.begin() + in.max_dim + 1);
    text << "Crit(Ḡ)∩P(G): " << format_layers(in.g, shown) << '\n';
    for (int n = 0; n <= in.max_dim; ++n)
    {
        const auto idx = static_cast<std::size_t>(n);
        bases.push_back(path_list_json(in.g, rep.bases[idx]));
        if (n == 0)
            continue;
        for (std::size_t j = 0; j < rep.bases[idx].size(); ++j)
        {
            Chain d = rep.differential(n, j);
            diff.push_back(Json{{"path", format_path_dashed(in.g, rep.bases[idx][j])},
                                {"stabilized", serialize_chain(closure, rep.stabilized[idx][j])},
                                {"boundary", serialize_chain(in.g, d)}});
            text << "∂̃(" << format_path(in.g, rep.bases[idx][j]) << ") = " << format_chain(in.g, d) << '\n';
        }
    }
    const std::size_t width = std::max(significant_length(morse_b.values), significant_length(path_b.values));
    const bool agree = morse_b.values == path_b.values;
    const bool hold = rep.hypotheses.all_hold();
    o.payload = Json{{"bases", bases},
                     {"differential", diff},
                     {"boundarySquaredZero", rep.boundary_squared_zero},
                     {"morseBetti", betti_json(morse_b)},
                     {"pathBetti", betti_json(path_b)},
                     {"homologyAgrees", agree},
                     {"hypotheses", hypotheses_json(in.g, closure, rep.hypotheses)}};
    text << "Morse homology:" << betti_text(morse_b.values) << '\n';
    text << "path homology:" << betti_text(path_b.values) << '\n';
    text << "V̄-invariance of Ω(G): " << yes_no(rep.hypotheses.omega_v_invariant) << '\n';
    for (const auto& w : rep.hypotheses.v_counterexamples)
        text << "  V̄(" << format_chain(in.g, w.source) << ") = " << format_chain(closure, w.image) << " ∉ Ω(G)\n";
    text << "Φ̄(Crit(Ḡ)∩P(G)) ⊆ Ω(G): " << yes_no(rep.hypotheses.phi_crit_in_omega) << '\n';
    for (const auto& w : rep.hypotheses.phi_counterexamples)
        text << "  Φ̄(" << format_path(in.g, w.critical) << ") = " << format_chain(closure, w.image) << " ∉ Ω(G)\n";
    text << "∂̃∂̃ = 0: " << yes_no(rep.boundary_squared_zero) << '\n';
    o.text = text.str();

    if (!hold)
    {
        o.warnings.push_back({"hypotheses-not-satisfied",
                              "hypotheses not satisfied; Morse homology " + format_betti(morse_b.values, width) +
                                  (agree ? " = " : " ≠ ") + "path homology " + format_betti(path_b.values, width)});
    }
    else if (!agree)
    {
        o.warnings.push_back({"homology-mismatch", "Morse homology " + format_betti(morse_b.values, width) +
                                                       " ≠ path homology " + format_betti(path_b.values, width)});
    }
    truncation_warning(o, rep.truncated, in.max_dim, "Crit(Ḡ)∩P(G)");
    return o;
}

Outcome cmd_morse_inequalities(const Inputs& in)
{
    Outcome o;
    const auto& f = require_morse_file(in);
    auto r = morse_inequalities(in.g, f, in.max_dim);
    o.payload = inequalities_json(r);
    std::ostringstream text;
    text << "l:" << betti_text(r.l) << '\n';
    text << "L:" << betti_text(r.L) << '\n';
    text << "b:" << betti_text(r.b) << '\n';
    text << "L >= l: " << yes_no(r.crit_bound_holds) << '\n';
    text << "l >= b: " << yes_no(r.weak_inequalities) << '\n';
    text << "alternating sums: " << yes_no(r.strong_inequalities) << '\n';
    text << "chi: " << r.chi_l << " = " << r.chi_b << ": " << yes_no(r.euler_equality) << '\n';
    o.text = text.str();
    truncation_warning(o, r.truncated, in.max_dim, "Ω(G) or Crit(Ḡ)∩P(G)");
    return o;
}

Outcome cmd_witten_scan(const Inputs& in, const RunConfig& cfg)
{
    Outcome o;
    const auto& f = require_morse_file(in);
    auto grid = parse_grid(cfg.t_grid);
    require_witten_input(in.g);
    ensure_morse(in.g, f, in.max_dim);
    auto scan = witten_convergence_scan(in.g, f, grid, in.max_dim, cfg.eps_low);
    o.payload = scan_json(scan);
    o.csv = scan_csv(scan);
    std::ostringstream text;
    text << "t n basis kernel low crit\n";
    for (std::size_t k = 0; k < scan.rows.size(); ++k)
    {
        const auto& row = scan.rows[k];
        text << format_double(row.t) << ' ' << row.n << ' ' << row.basis_size << ' ' << row.kernel_dim << ' '
             << row.low_dim << ' ' << scan.dims[static_cast<std::size_t>(row.n)].crit << '\n';
    }
    for (const auto& d : scan.dims)
    {
        text << "n=" << d.n << ": |Crit|=" << d.crit << " b=" << d.betti << " harmonic=" << d.harmonic
             << " kernel constant=" << yes_no(d.kernel_constant) << " agreement from t="
             << (d.agreement_from ? format_double(grid[*d.agreement_from]) : std::string("not reached")) << '\n';
        if (!d.kernel_matches_betti)
        {
            o.warnings.push_back({"kernel-threshold",
                                  "n=" + std::to_string(d.n) +
                                      ": thresholded kernel dimension differs from b_n on part of the grid "
                                      "(exact harmonic dimension " + std::to_string(d.harmonic) + ")"});
        }
    }
    text << "max |∂_t∂_t| / scale: " << format_double(scan.max_dd_residual) << '\n';
    o.text = text.str();
    return o;
}

Json envelope(const RunConfig& cfg, const Inputs& in, const Outcome& o)
{
    Json warnings = Json::array();
    for (const auto& w : o.warnings)
        warnings.push_back(Json{{"kind", w.kind}, {"message", w.message}});
    return Json{{"command", cfg.command},
                {"digraph", digraph_json(in.g)},
                {"maxDim", in.max_dim},
                {"payload", o.payload},
                {"warnings", warnings}};
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Path homology and discrete Morse theory on digraphs", "dmorse"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool morse_file) {
        sub->add_option("-g,--graph", cfg.digraph_path, "digraph edge-list file")->required();
        if (morse_file)
            sub->add_option("-f,--function", cfg.morse_path, "Morse function file")->required();
        else
            sub->add_option("-f,--function", cfg.morse_path, "Morse function file");
        sub->add_option("--max-dim", cfg.max_dim, "dimension bound (default |V|)")->check(CLI::NonNegativeNumber);
        sub->add_option("--t-grid", cfg.t_grid, "ascending positive t values");
        sub->add_option("--eps-low", cfg.eps_low, "low-eigenvalue threshold factor, relative to max(1, |Δ|)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    };

    std::vector<std::pair<CLI::App*, std::string>> leaves;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, bool morse_file,
                    const std::string& command) {
        auto* sub = parent->add_subcommand(name, help);
        add_common(sub, morse_file);
        leaves.emplace_back(sub, command);
    };
    leaf(&app, "closure", "transitive closure as a digraph file", false, "closure");
    leaf(&app, "paths", "allowed paths and Ω bases per dimension", false, "paths");
    leaf(&app, "homology", "Betti numbers and Euler characteristic", false, "homology");
    auto* morse = app.add_subcommand("morse", "discrete Morse theory");
    morse->require_subcommand(1);
    leaf(morse, "check", "validate a Morse function", true, "morse check");
    leaf(morse, "critical", "critical paths on G, on the closure, and their intersection", true, "morse critical");
    leaf(morse, "flow", "gradient field, flow and stabilized flow on the closure", true, "morse flow");
    leaf(morse, "complex", "Morse complex, its homology and hypothesis checks", true, "morse complex");
    leaf(morse, "inequalities", "Morse inequalities", true, "morse inequalities");
    auto* witten = app.add_subcommand("witten", "Witten deformation");
    witten->require_subcommand(1);
    leaf(witten, "scan", "Laplacian spectra over a t grid", true, "witten scan");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::Success& e)
    {
        app.exit(e, out, err);
        return kExitOk;
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e, out, err);
        return kExitUsage;
    }
    for (const auto& [sub, command] : leaves)
    {
        if (sub->parsed())
            cfg.command = command;
    }

    try
    {
        if (cfg.format == "csv" && cfg.command != "witten scan")
            throw UsageError("--format csv is only available for 'witten scan'");

        Inputs in;
        in.g = parse_digraph(read_file(cfg.digraph_path));
        if (!cfg.morse_path.empty())
            in.f = parse_morse_function(read_file(cfg.morse_path), in.g);
        in.max_dim = cfg.max_dim >= 0 ? cfg.max_dim : static_cast<int>(in.g.vertex_count());

        Outcome o;
        if (cfg.command == "closure")
            o = cmd_closure(in);
        else if (cfg.command == "paths")
            o = cmd_paths(in);
        else if (cfg.command == "homology")
            o = cmd_homology(in);
        else if (cfg.command == "morse check")
            o = cmd_morse_check(in);
        else if (cfg.command == "morse critical")
            o = cmd_morse_critical(in);
        else if (cfg.command == "morse flow")
            o = cmd_morse_flow(in);
        else if (cfg.command == "morse complex")
            o = cmd_morse_complex(in);
        else if (cfg.command == "morse inequalities")
            o = cmd_morse_inequalities(in);
        else
            o = cmd_witten_scan(in, cfg);

        std::string rendered;
        if (cfg.format == "json")
        {
            rendered = envelope(cfg, in, o).dump(2) + "\n";
        }
        else if (cfg.format == "csv")
        {
            rendered = o.csv;
        }
        else
        {
            rendered = o.text;
            for (const auto& w : o.warnings)
                rendered += "warning [" + w.kind + "]: " + w.message + "\n";
        }

        if (cfg.out_path.empty())
        {
            out << rendered;
        }
        else
        {
            std::ofstream file(cfg.out_path, std::ios::binary);
            if (!file)
                throw UsageError("cannot write '" + cfg.out_path + "'");
            file << rendered;
        }
        if (cfg.format != "text")
        {
            for (const auto& w : o.warnings)
                err << "warning [" << w.kind << "]: " << w.message << '\n';
        }
        return o.exit_code;
    }
    catch (const UsageError& e)
    {
        err << "usage error: " << e.what() << '\n';
        err << "usage: dmorse <subcommand> -g <digraph-file> [-f <morse-file>] [--max-dim N] [--t-grid a,b,c] "
               "[--eps-low X] [--format text|json|csv] [--out PATH]\n";
        return kExitUsage;
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const std::exception& e)
    {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}   // namespace dmorse
