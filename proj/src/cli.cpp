#include "latscat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "latscat/analysis.hpp"
#include "latscat/closed_forms.hpp"
#include "latscat/solver.hpp"

namespace latscat::cli {

using nlohmann::json;

namespace {

double parse_double(std::string_view s)
{
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw InvalidArgument("not a number: '" + std::string(s) + "'");
    return v;
}

std::string format_complex(Complex z)
{
    std::string s = format_real(z.real());
    s += z.imag() < 0 || std::signbit(z.imag()) ? " - " : " + ";
    s += format_real(std::abs(z.imag()));
    s += "i";
    return s;
}

struct ModelArgs {
    std::string model = "pt-pair";
    int M = 1;
    std::optional<double> x;
    std::optional<double> a;
    std::string window;
};

void add_model_options(CLI::App* cmd, ModelArgs& m)
{
    cmd->add_option("--model", m.model, "pt-pair | ultralocal | custom")
        ->check(CLI::IsMember({"pt-pair", "ultralocal", "custom"}));
    cmd->add_option("--M", m.M, "interaction distance of the PT pair");
    cmd->add_option("--x", m.x, "PT-pair coupling");
    cmd->add_option("--a", m.a, "ultralocal coupling");
    cmd->add_option("--window", m.window, "custom window file (JSON)");
}

ModelFamily resolve_model(const ModelArgs& m)
{
    if (!m.window.empty()) {
        if (m.model == "ultralocal" || m.x || m.a)
            throw InvalidArgument("--window cannot be combined with a coupling");
        return CustomModel{read_window_file(m.window)};
    }
    if (m.model == "custom")
        throw InvalidArgument("--model custom needs --window");
    if (m.model == "ultralocal") {
        if (!m.a)
            throw InvalidArgument("--model ultralocal needs --a");
        return Ultralocal{*m.a};
    }
    if (!m.x)
        throw InvalidArgument("--model pt-pair needs --x");
    if (m.M < 1)
        throw InvalidArgument("--M must be >= 1");
    return PTDeltaPair{m.M, *m.x};
}

double coupling_of(const ModelFamily& model)
{
    if (const auto* p = std::get_if<PTDeltaPair>(&model))
        return p->x;
    if (const auto* u = std::get_if<Ultralocal>(&model))
        return u->a;
    return 0.0;
}

int M_of(const ModelFamily& model)
{
    const auto* p = std::get_if<PTDeltaPair>(&model);
    return p ? p->M : 0;
}

LatticeConvention parse_convention(const std::string& name, double h)
{
    if (h <= 0.0)
        throw InvalidArgument("--lattice-step must be positive");
    if (name == "h0")
        return {h, EnergyConvention::ZeroDiagonal};
    if (name == "h0-shifted")
        return {h, EnergyConvention::ShiftedDiagonal};
    throw InvalidArgument("unknown convention '" + name + "'");
}

// solve ---------------------------------------------------------------------

struct SolveArgs {
    ModelArgs model;
    double phi = 0.0;
    std::string solver = "matching";
    std::string format = "text";
    double h = 1.0;
};

int run_solve(const SolveArgs& args, std::ostream& out)
{
    if (args.h <= 0.0)
        throw InvalidArgument("--lattice-step must be positive");
    const ModelFamily model = resolve_model(args.model);
    const InteractionWindow win = window_of(model);
    const PhiAngle phi(args.phi);
    const SolverKind kind = args.solver == "transfer" ? SolverKind::Transfer : SolverKind::Matching;

    const SolveReport rep = solve(win, phi, kind);
    const auto& amp = rep.amplitudes;
    const double e0 = energy_from_phi(phi, {args.h, EnergyConvention::ZeroDiagonal});
    const double e1 = energy_from_phi(phi, {args.h, EnergyConvention::ShiftedDiagonal});

    if (args.format == "json") {
        json j = json::object();
        j["model"] = model_tag(model);
        j["M"] = M_of(model);
        j["coupling"] = coupling_of(model);
        j["phi"] = phi.value();
        j["solver"] = std::string(to_string(kind));
        j["R"] = {{"re", amp.R.real()}, {"im", amp.R.imag()}};
        j["T"] = {{"re", amp.T.real()}, {"im", amp.T.imag()}};
        j["abs_R2"] = std::norm(amp.R);
        j["abs_T2"] = std::norm(amp.T);
        j["prob_sum"] = amp.prob_sum;
        j["defect"] = amp.defect;
        j["E_h0"] = e0;
        j["E_h0_shifted"] = e1;
        j["residual"] = rep.residual_max;
        j["condition_estimate"] = rep.condition_estimate;
        out << j.dump(2) << '\n';
        return kOk;
    }

    out << "model        " << model_tag(model) << '\n';
    if (const auto* p = std::get_if<PTDeltaPair>(&model))
        out << "M            " << p->M << '\n';
    out << "coupling     " << format_real(coupling_of(model)) << '\n'
        << "phi          " << format_real(phi.value()) << '\n'
        << "solver       " << to_string(kind) << '\n'
        << "R            " << format_complex(amp.R) << '\n'
        << "T            " << format_complex(amp.T) << '\n'
        << "|R|^2        " << format_real(std::norm(amp.R)) << '\n'
        << "|T|^2        " << format_real(std::norm(amp.T)) << '\n'
        << "prob_sum     " << format_real(amp.prob_sum) << '\n'
        << "defect       " << format_real(amp.defect) << '\n'
        << "E (H0)       " << format_real(e0) << '\n'
        << "E (H0')      " << format_real(e1) << '\n'
        << "residual     " << format_real(rep.residual_max) << '\n'
        << "condition    " << format_real(rep.condition_estimate) << '\n';
    return kOk;
}

// sweep ---------------------------------------------------------------------

struct SweepArgs {
    std::string model = "pt-pair";
    std::string M_list = "1";
    std::string x_range;
    std::string a_range;
    std::string phi_range;
    std::string solver = "matching";
    std::string window;
    std::string out;
    std::string format = "csv";
    std::string convention = "h0";
    double h = 1.0;
};

std::vector<SweepSolver> parse_sweep_solvers(const std::string& s)
{
    if (s == "all")
        return all_sweep_solvers();
    if (s == "matching")
        return {SweepSolver::Matching};
    if (s == "transfer")
        return {SweepSolver::Transfer};
    if (s == "closed-form" || s == "closed_form")
        return {SweepSolver::ClosedForm};
    throw InvalidArgument("unknown solver '" + s + "'");
}

json table_to_json(const SweepTable& table)
{
    json rows = json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"model", r.model}, {"M", r.M}, {"coupling", r.coupling}, {"phi", r.phi}, {"E", r.E},
                        {"reR", r.R.real()}, {"imR", r.R.imag()}, {"reT", r.T.real()}, {"imT", r.T.imag()},
                        {"prob_sum", r.prob_sum}, {"defect", r.defect}, {"solver", r.solver},
                        {"residual", r.residual}});
    }
    json errors = json::array();
    for (const auto& e : table.errors) {
        errors.push_back({{"model", e.model}, {"M", e.M}, {"coupling", e.coupling}, {"phi", e.phi},
                          {"solver", e.solver}, {"kind", e.kind}, {"reason", e.reason}});
    }
    const auto& m = table.metadata;
    return {{"metadata",
             {{"tool_version", m.tool_version}, {"convention", m.convention}, {"h", m.h},
              {"residual_tolerance", m.residual_tolerance}, {"pivot_tolerance", m.pivot_tolerance},
              {"phi_guard", m.phi_guard}}},
            {"rows", rows},
            {"errors", errors}};
}

int run_sweep_cmd(const SweepArgs& args, std::ostream& out, std::ostream& err)
{
    SweepSpec spec;
    if (args.model == "pt-pair") {
        spec.model = ModelKind::PTPair;
        spec.M_list = parse_int_list(args.M_list);
        if (args.x_range.empty())
            throw InvalidArgument("pt-pair sweep needs --x-range");
        spec.couplings = parse_range(args.x_range);
    } else if (args.model == "ultralocal") {
        spec.model = ModelKind::Ultralocal;
        const std::string& r = args.a_range.empty() ? args.x_range : args.a_range;
        if (r.empty())
            throw InvalidArgument("ultralocal sweep needs --a-range");
        spec.couplings = parse_range(r);
    } else {
        spec.model = ModelKind::Custom;
        if (args.window.empty())
            throw InvalidArgument("custom sweep needs --window");
        spec.custom_window = read_window_file(args.window);
    }
    if (args.phi_range.empty())
        throw InvalidArgument("sweep needs --phi-range");
    spec.phis = parse_range(args.phi_range);
    spec.solvers = parse_sweep_solvers(args.solver);
    spec.convention = parse_convention(args.convention, args.h);
    const auto env_threads = threads_from_env(std::getenv("SCATTER_THREADS"));
    spec.threads = env_threads.value_or(std::max(1u, std::thread::hardware_concurrency()));

    const SweepTable table = run_sweep(spec);

    std::ostringstream buf;
    if (args.format == "json")
        buf << table_to_json(table).dump(2) << '\n';
    else
        write_csv(buf, table);

    if (args.out.empty() || args.out == "-") {
        out << buf.str();
    } else {
        std::ofstream f(args.out, std::ios::binary | std::ios::trunc);
        if (!f)
            throw InvalidArgument("cannot open '" + args.out + "' for writing");
        f << buf.str();
        f.close();
        if (!f)
            throw InvalidArgument("failed writing '" + args.out + "'");
    }

    err << table.rows.size() << " rows, " << table.errors.size() << " singular/skipped points\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(table.errors.size(), 5); ++k) {
        const auto& e = table.errors[k];
        err << "  " << e.kind << " at M=" << e.M << " coupling=" << format_real(e.coupling)
            << " phi=" << format_real(e.phi) << " solver=" << e.solver << ": " << e.reason << '\n';
    }
    return kOk;
}

// verify --------------------------------------------------------------------

void report_line(std::ostream& out, bool ok, const std::string& suite, const std::string& what, double worst)
{
    out << (ok ? "[PASS] " : "[FAIL] ") << suite << ": " << what << " worst " << format_real(worst) << '\n';
}

std::vector<double> ultralocal_grid()
{
    std::vector<double> as;
    for (int k = -18; k <= 18; ++k)
        if (k != 0)
            as.push_back(k / 20.0);
    return as;
}

bool suite_closed_forms(int M_max, double tol, std::ostream& out)
{
    bool ok = true;
    const CrossValidation cv = cross_validate(std::min(3, M_max), tol);
    for (const auto& row : cv.per_M) {
        const bool r1 = row.cf_vs_matching <= tol;
        const bool r2 = row.cf_vs_transfer <= tol;
        report_line(out, r1, "closed-forms", "M=" + std::to_string(row.M) + " closed form vs matching",
                    row.cf_vs_matching);
        report_line(out, r2, "closed-forms", "M=" + std::to_string(row.M) + " closed form vs transfer",
                    row.cf_vs_transfer);
        ok = ok && r1 && r2;
    }

    double amp_delta = 0.0, sum_delta = 0.0;
    for (double a : ultralocal_grid()) {
        const InteractionWindow win = build_ultralocal(a);
        for (double p : default_phi_grid()) {
            const PhiAngle phi(p);
            const auto cf = cf_ultralocal(a, phi);
            const auto m = solve_matching(win, phi).amplitudes;
            amp_delta = std::max({amp_delta, std::abs(cf.R - m.R), std::abs(cf.T - m.T)});
            sum_delta = std::max(sum_delta, std::abs(cf_ultralocal_prob_sum(a, phi) - cf.prob_sum));
        }
    }
    report_line(out, amp_delta <= tol, "closed-forms", "ultralocal closed form vs matching", amp_delta);
    report_line(out, sum_delta <= tol, "closed-forms", "ultralocal sum formula vs |R|^2+|T|^2", sum_delta);
    return ok && amp_delta <= tol && sum_delta <= tol;
}

bool suite_unitarity(int M_max, double tol, std::ostream& out)
{
    SweepSpec spec;
    spec.model = ModelKind::PTPair;
    spec.M_list.clear();
    for (int M = 1; M <= M_max; ++M)
        spec.M_list.push_back(M);
    spec.couplings = default_coupling_grid();
    spec.phis = default_phi_grid();
    spec.solvers = {SweepSolver::Matching, SweepSolver::Transfer};
    spec.threads = std::max(1u, std::thread::hardware_concurrency());
    const SweepTable pt = run_sweep(spec);
    const UnitarityReport rep = unitarity_report(pt, tol);
    double worst = 0.0;
    for (const auto& m : rep.models)
        worst = std::max(worst, m.max_abs_defect);
    const bool pt_ok = rep.total_violations == 0 && pt.errors.empty();
    report_line(out, pt_ok, "unitarity",
                "PT pair M=1.." + std::to_string(M_max) + " |prob_sum - 1| (" + std::to_string(pt.rows.size()) +
                    " rows)",
                worst);

    SweepSpec ul;
    ul.model = ModelKind::Ultralocal;
    ul.couplings = ultralocal_grid();
    ul.phis = default_phi_grid();
    const SweepTable ut = run_sweep(ul);
    const UnitarityReport urep = unitarity_report(ut, tol);
    std::size_t follows = 0, opposes = 0;
    for (const auto& m : urep.models) {
        follows += m.defect_follows_coupling;
        opposes += m.defect_opposes_coupling;
    }
    const bool sign_ok = follows == 0 && opposes == ut.rows.size();
    out << (sign_ok ? "[PASS] " : "[FAIL] ") << "unitarity: ultralocal sign(defect) = -sign(a) on " << opposes
        << " of " << ut.rows.size() << " rows\n";
    return pt_ok && sign_ok;
}

bool suite_oracles(int M_max, double tol, std::ostream& out)
{
    const CrossValidation cv = cross_validate(M_max, tol);
    double worst = 0.0;
    for (const auto& row : cv.per_M)
        worst = std::max(worst, row.matching_vs_transfer);
    const bool pt_ok = worst <= tol;
    report_line(out, pt_ok, "oracles", "PT pair matching vs transfer M=1.." + std::to_string(M_max), worst);

    const OracleAgreement ag = random_oracle_agreement(200, 10, 20071);
    const bool rnd_ok = ag.worst_delta <= tol && ag.failures == 0;
    report_line(out, rnd_ok, "oracles",
                "random tridiagonal windows (" + std::to_string(ag.solves) + " solves) matching vs transfer",
                ag.worst_delta);
    return pt_ok && rnd_ok;
}

struct VerifyArgs {
    std::string suite = "all";
    int M_max = 8;
    double tol = 1e-9;
};

int run_verify(const VerifyArgs& args, std::ostream& out)
{
    if (args.M_max < 1)
        throw InvalidArgument("--M-max must be >= 1");
    if (!(args.tol > 0.0))
        throw InvalidArgument("--tol must be positive");
    bool ok = true;
    const bool all = args.suite == "all";
    if (all || args.suite == "closed-forms")
        ok = suite_closed_forms(args.M_max, args.tol, out) && ok;
    if (all || args.suite == "unitarity")
        ok = suite_unitarity(args.M_max, args.tol, out) && ok;
    if (all || args.suite == "oracles")
        ok = suite_oracles(args.M_max, args.tol, out) && ok;
    out << (ok ? "verify: all checks passed" : "verify: FAILED") << '\n';
    return ok ? kOk : kVerifyFailed;
}

// check-pt ------------------------------------------------------------------

int run_check_pt(const ModelArgs& args, std::ostream& out)
{
    const InteractionWindow win = window_of(resolve_model(args));
    const auto v = find_pt_violation(win);
    if (!v) {
        out << "true\n";
        return kOk;
    }
    out << "false\n"
        << "first violation at (" << v->i << ", " << v->j << "): W_ij = " << format_complex(v->w_ij)
        << ", conj(W_-i,-j) = " << format_complex(v->mirrored) << '\n';
    return kOk;
}

}  // namespace

std::vector<double> parse_range(const std::string& text)
{
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    for (;;) {
        const auto pos = rest.find(':');
        parts.push_back(rest.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        rest.remove_prefix(pos + 1);
    }
    if (parts.size() == 1)
        return {parse_double(parts[0])};
    if (parts.size() != 3)
        throw InvalidArgument("range must be 'v' or 'lo:hi:step', got '" + text + "'");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0))
        throw InvalidArgument("range step must be positive");
    std::vector<double> out;
    for (long k = 0;; ++k) {
        const double v = lo + static_cast<double>(k) * step;
        if (v > hi + 0.5 * step)
            break;
        out.push_back(v);
        if (out.size() > 10'000'000)
            throw InvalidArgument("range too large");
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto pos = rest.find(',');
        const std::string_view item = rest.substr(0, pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size() || v < 1)
            throw InvalidArgument("bad integer list '" + text + "'");
        out.push_back(v);
        if (pos == std::string_view::npos)
            break;
        rest.remove_prefix(pos + 1);
    }
    if (out.empty())
        throw InvalidArgument("empty integer list");
    return out;
}

InteractionWindow parse_window_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("window file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InvalidArgument("window document must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "lo" && key != "hi" && key != "entries")
            throw InvalidArgument("unknown field '" + key + "' in window document");
    }
    auto get_int = [](const json& obj, const char* key) {
        if (!obj.contains(key) || !obj.at(key).is_number_integer())
            throw InvalidArgument(std::string("field '") + key + "' must be an integer");
        return obj.at(key).get<int>();
    };
    auto get_real = [](const json& obj, const char* key) {
        if (!obj.at(key).is_number())
            throw InvalidArgument(std::string("field '") + key + "' must be a number");
        return obj.at(key).get<double>();
    };

    const int lo = get_int(doc, "lo");
    const int hi = get_int(doc, "hi");
    std::vector<WindowEntry> entries;
    if (doc.contains("entries")) {
        if (!doc["entries"].is_array())
            throw InvalidArgument("'entries' must be an array");
        for (const auto& e : doc["entries"]) {
            if (!e.is_object())
                throw InvalidArgument("each entry must be an object");
            for (const auto& [key, value] : e.items()) {
                if (key != "i" && key != "j" && key != "re" && key != "im")
                    throw InvalidArgument("unknown field '" + key + "' in window entry");
            }
            if (!e.contains("re"))
                throw InvalidArgument("entry needs 're'");
            const double re = get_real(e, "re");
            const double im = e.contains("im") ? get_real(e, "im") : 0.0;
            entries.push_back({get_int(e, "i"), get_int(e, "j"), {re, im}});
        }
    }
    return InteractionWindow(lo, hi, entries);
}

InteractionWindow read_window_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw InvalidArgument("cannot read window file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_window_json(ss.str());
}

std::string window_to_json(const InteractionWindow& win)
{
    json entries = json::array();
    for (const auto& [ij, v] : win.entries())
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"re", v.real()}, {"im", v.imag()}});
    return json{{"lo", win.lo()}, {"hi", win.hi()}, {"entries", entries}}.dump(2);
}

std::optional<unsigned> threads_from_env(const char* value)
{
    if (value == nullptr)
        return std::nullopt;
    const std::string_view s(value);
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || n == 0)
        throw InvalidArgument("SCATTER_THREADS must be a positive integer");
    return n;
}

const std::vector<std::string>& solve_json_fields()
{
    static const std::vector<std::string> fields{
        "model",    "M",      "coupling", "phi",  "solver", "R",        "T",
        "abs_R2",   "abs_T2", "prob_sum", "defect", "E_h0", "E_h0_shifted", "residual",
        "condition_estimate"};
    return fields;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lattice scattering amplitudes for finite-range interactions"};
    app.name("latscat");
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "R and T at a single point");
    add_model_options(solve_cmd, solve_args.model);
    solve_cmd->add_option("--phi", solve_args.phi, "energy angle in radians, inside (0, pi)")->required();
    solve_cmd->add_option("--solver", solve_args.solver)->check(CLI::IsMember({"matching", "transfer"}));
    solve_cmd->add_option("--format", solve_args.format)->check(CLI::IsMember({"text", "json"}));
    solve_cmd->add_option("--lattice-step", solve_args.h, "lattice step used for the reported energies");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate R and T over a parameter grid");
    sweep_cmd->add_option("--model", sweep_args.model)->check(CLI::IsMember({"pt-pair", "ultralocal", "custom"}));
    sweep_cmd->add_option("--M-list", sweep_args.M_list, "comma separated distances, e.g. 1,2,3");
    sweep_cmd->add_option("--x-range", sweep_args.x_range, "lo:hi:step or a single value");
    sweep_cmd->add_option("--a-range", sweep_args.a_range, "ultralocal coupling range");
    sweep_cmd->add_option("--phi-range", sweep_args.phi_range, "lo:hi:step or a single value");
    sweep_cmd->add_option("--solver", sweep_args.solver)
        ->check(CLI::IsMember({"matching", "transfer", "closed-form", "all"}));
    sweep_cmd->add_option("--window", sweep_args.window, "custom window file (JSON)");
    sweep_cmd->add_option("--out", sweep_args.out, "output path, stdout when omitted");
    sweep_cmd->add_option("--format", sweep_args.format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--convention", sweep_args.convention, "energy column: h0 | h0-shifted")
        ->check(CLI::IsMember({"h0", "h0-shifted"}));
    sweep_cmd->add_option("--lattice-step", sweep_args.h, "lattice step");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run the built-in consistency suites");
    verify_cmd->add_option("--suite", verify_args.suite)
        ->check(CLI::IsMember({"closed-forms", "unitarity", "oracles", "all"}));
    verify_cmd->add_option("--M-max", verify_args.M_max);
    verify_cmd->add_option("--tol", verify_args.tol);

    ModelArgs pt_args;
    auto* pt_cmd = app.add_subcommand("check-pt", "test whether the interaction commutes with PT");
    add_model_options(pt_cmd, pt_args);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(solve_args, out);
        if (sweep_cmd->parsed())
            return run_sweep_cmd(sweep_args, out, err);
        if (verify_cmd->parsed())
            return run_verify(verify_args, out);
        return run_check_pt(pt_args, out);
    } catch (const ZeroHopping& e) {
        err << "ZeroHopping: " << e.what() << '\n';
        return kSingular;
    } catch (const SingularSystem& e) {
        err << "SingularSystem: " << e.what() << '\n';
        return kSingular;
    } catch (const ScatterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace latscat::cli
