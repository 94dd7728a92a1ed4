#include "latscat/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <thread>

#include "latscat/closed_forms.hpp"

namespace latscat {

std::string to_string(SweepSolver s)
{
    switch (s) {
    case SweepSolver::Matching: return "matching";
    case SweepSolver::Transfer: return "transfer";
    default: return "closed_form";
    }
}

std::vector<SweepSolver> all_sweep_solvers()
{
    return {SweepSolver::Matching, SweepSolver::Transfer, SweepSolver::ClosedForm};
}

std::string to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::PTPair: return "pt-pair";
    case ModelKind::Ultralocal: return "ultralocal";
    default: return "custom";
    }
}

namespace {

struct GridPoint {
    int M;
    double coupling;
    double phi;
};

struct PointResult {
    std::vector<SweepRow> rows;
    std::vector<SweepError> errors;
};

std::string error_kind(const std::exception& e)
{
    if (dynamic_cast<const ZeroHopping*>(&e)) return "ZeroHopping";
    if (dynamic_cast<const SingularSystem*>(&e)) return "SingularSystem";
    if (dynamic_cast<const NotTridiagonal*>(&e)) return "NotTridiagonal";
    if (dynamic_cast<const SingularCoupling*>(&e)) return "SingularCoupling";
    if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
    return "Error";
}

ScatteringAmplitudes closed_form_for(const SweepSpec& spec, const GridPoint& pt, PhiAngle phi)
{
    switch (spec.model) {
    case ModelKind::PTPair:
        if (pt.M > 3)
            throw InvalidArgument("no closed form for M = " + std::to_string(pt.M));
        return cf_pt_pair(pt.M, pt.coupling, phi);
    case ModelKind::Ultralocal:
        return cf_ultralocal(pt.coupling, phi);
    default:
        throw InvalidArgument("no closed form for custom windows");
    }
}

PointResult evaluate_point(const SweepSpec& spec, const GridPoint& pt)
{
    PointResult out;
    const std::string tag = to_string(spec.model);
    const PhiAngle phi(pt.phi);

    InteractionWindow win = spec.model == ModelKind::PTPair     ? build_pt_delta_pair(pt.M, pt.coupling)
                            : spec.model == ModelKind::Ultralocal ? build_ultralocal(pt.coupling)
                                                                  : *spec.custom_window;
    const double E = energy_from_phi(phi, spec.convention);

    for (SweepSolver solver : spec.solvers) {
        try {
            SweepRow row{tag, pt.M, pt.coupling, pt.phi, E, {}, {}, 0.0, 0.0, to_string(solver), 0.0};
            ScatteringAmplitudes amp;
            if (solver == SweepSolver::ClosedForm) {
                amp = closed_form_for(spec, pt, phi);
            } else {
                const SolveReport rep =
                    solve(win, phi, solver == SweepSolver::Matching ? SolverKind::Matching : SolverKind::Transfer);
                amp = rep.amplitudes;
                row.residual = rep.residual_max;
            }
            row.R = amp.R;
            row.T = amp.T;
            row.prob_sum = amp.prob_sum;
            row.defect = amp.defect;
            out.rows.push_back(std::move(row));
        } catch (const ScatterError& e) {
            out.errors.push_back({tag, pt.M, pt.coupling, pt.phi, to_string(solver), error_kind(e), e.what()});
        }
    }
    return out;
}

std::vector<GridPoint> grid_points(const SweepSpec& spec)
{
    std::vector<GridPoint> pts;
    switch (spec.model) {
    case ModelKind::PTPair:
        for (int M : spec.M_list)
            for (double x : spec.couplings)
                for (double p : spec.phis)
                    pts.push_back({M, x, p});
        break;
    case ModelKind::Ultralocal:
        for (double a : spec.couplings)
            for (double p : spec.phis)
                pts.push_back({0, a, p});
        break;
    case ModelKind::Custom:
        for (double p : spec.phis)
            pts.push_back({0, 0.0, p});
        break;
    }
    return pts;
}

void validate(const SweepSpec& spec)
{
    if (spec.phis.empty())
        throw InvalidArgument("empty phi grid");
    if (spec.solvers.empty())
        throw InvalidArgument("no solver selected");
    for (double p : spec.phis)
        PhiAngle{p};
    switch (spec.model) {
    case ModelKind::PTPair:
        if (spec.M_list.empty() || spec.couplings.empty())
            throw InvalidArgument("empty M or coupling grid");
        for (int M : spec.M_list)
            if (M < 1)
                throw InvalidArgument("M must be >= 1");
        break;
    case ModelKind::Ultralocal:
        if (spec.couplings.empty())
            throw InvalidArgument("empty coupling grid");
        break;
    case ModelKind::Custom:
        if (!spec.custom_window)
            throw InvalidArgument("custom sweep needs a window");
        break;
    }
    if (spec.convention.h <= 0.0)
        throw InvalidArgument("lattice step h must be positive");
}

double max_delta(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b)
{
    return std::max(std::abs(a.R - b.R), std::abs(a.T - b.T));
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec)
{
    validate(spec);
    const std::vector<GridPoint> pts = grid_points(spec);
    std::vector<PointResult> results(pts.size());

    const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(pts.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < pts.size(); i = next++)
            results[i] = evaluate_point(spec, pts[i]);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
    }

    SweepTable table;
    table.metadata.convention = to_string(spec.convention.diagonal);
    table.metadata.h = spec.convention.h;
    for (auto& r : results) {
        std::move(r.rows.begin(), r.rows.end(), std::back_inserter(table.rows));
        std::move(r.errors.begin(), r.errors.end(), std::back_inserter(table.errors));
    }
    return table;
}

std::string format_real(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

void write_csv(std::ostream& out, const SweepTable& table)
{
    out << kCsvHeader << '\n';
    for (const auto& r : table.rows) {
        out << r.model << ',' << r.M << ',' << format_real(r.coupling) << ',' << format_real(r.phi) << ','
            << format_real(r.E) << ',' << format_real(r.R.real()) << ',' << format_real(r.R.imag()) << ','
            << format_real(r.T.real()) << ',' << format_real(r.T.imag()) << ',' << format_real(r.prob_sum) << ','
            << format_real(r.defect) << ',' << r.solver << ',' << format_real(r.residual) << '\n';
    }
}

UnitarityReport unitarity_report(const SweepTable& table, double tol)
{
    if (table.rows.empty())
        throw InvalidArgument("unitarity report needs at least one row");
    UnitarityReport report;
    report.tol = tol;
    std::map<std::pair<std::string, int>, ModelSummary> groups;
    for (const auto& r : table.rows) {
        auto& g = groups[{r.model, r.M}];
        g.model = r.model;
        g.M = r.M;
        ++g.rows;
        const double d = std::abs(r.defect);
        g.max_abs_defect = std::max(g.max_abs_defect, d);
        g.mean_abs_defect += d;
        if (!(d <= tol))
            ++g.violations;
        if (d > tol && r.coupling != 0.0) {
            if ((r.defect > 0) != (r.coupling > 0))
                ++g.defect_opposes_coupling;
            else
                ++g.defect_follows_coupling;
        }
    }
    for (auto& [key, g] : groups) {
        g.mean_abs_defect /= static_cast<double>(g.rows);
        report.total_violations += g.violations;
        report.models.push_back(g);
    }
    return report;
}

std::vector<double> default_coupling_grid()
{
    std::vector<double> xs;
    for (int k = -9; k <= 9; ++k)
        xs.push_back(k / 10.0);
    return xs;
}

std::vector<double> default_phi_grid()
{
    constexpr int n = 50;
    const double lo = 0.05;
    const double hi = std::numbers::pi - 0.05;
    std::vector<double> ps;
    for (int k = 0; k < n; ++k)
        ps.push_back(lo + (hi - lo) * k / (n - 1));
    return ps;
}

CrossValidation cross_validate(int M_max, double tol, const std::vector<double>& couplings,
                               const std::vector<double>& phis)
{
    if (M_max < 1)
        throw InvalidArgument("M_max must be >= 1");

    CrossValidation cv;
    cv.tol = tol;
    for (int M = 1; M <= M_max; ++M) {
        CrossValidationRow row;
        row.M = M;
        row.has_closed_form = M <= 3;
        for (double x : couplings) {
            const InteractionWindow win = build_pt_delta_pair(M, x);
            for (double p : phis) {
                const PhiAngle phi(p);
                ++row.points;
                try {
                    const auto m = solve_matching(win, phi).amplitudes;
                    const auto t = solve_transfer_matrix(win, phi).amplitudes;
                    row.matching_vs_transfer = std::max(row.matching_vs_transfer, max_delta(m, t));
                    row.max_abs_defect = std::max({row.max_abs_defect, std::abs(m.defect), std::abs(t.defect)});
                    if (row.has_closed_form) {
                        const auto c = cf_pt_pair(M, x, phi);
                        row.cf_vs_matching = std::max(row.cf_vs_matching, max_delta(c, m));
                        row.cf_vs_transfer = std::max(row.cf_vs_transfer, max_delta(c, t));
                    }
                } catch (const SingularSystem&) {
                    ++row.singular_points;
                } catch (const SingularCoupling&) {
                    ++row.singular_points;
                }
            }
        }
        cv.singular_points += row.singular_points;
        auto check = [&](double v, const char* what) {
            if (!(v <= tol)) {
                cv.passed = false;
                cv.failures.push_back("M=" + std::to_string(M) + " " + what + " " + format_real(v));
            }
        };
        check(row.cf_vs_matching, "closed-form vs matching");
        check(row.cf_vs_transfer, "closed-form vs transfer");
        check(row.matching_vs_transfer, "matching vs transfer");
        check(row.max_abs_defect, "conservation defect");
        cv.per_M.push_back(row);
    }
    return cv;
}

InteractionWindow random_tridiagonal_window(std::mt19937_64& rng, int min_width, int max_width, double bound)
{
    std::uniform_int_distribution<int> width_dist(min_width, max_width);
    std::uniform_int_distribution<int> lo_dist(-5, 5);
    std::uniform_real_distribution<double> value(-bound, bound);
    const int width = width_dist(rng);
    const int lo = lo_dist(rng);
    const int hi = lo + width - 1;
    std::vector<WindowEntry> entries;
    for (int i = lo; i <= hi; ++i)
        for (int j = std::max(lo, i - 1); j <= std::min(hi, i + 1); ++j)
            entries.push_back({i, j, value(rng)});
    return InteractionWindow(lo, hi, entries);
}

OracleAgreement random_oracle_agreement(std::size_t windows, std::size_t phis_per_window, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phi_dist(0.05, std::numbers::pi - 0.05);
    OracleAgreement out;
    for (std::size_t w = 0; w < windows; ++w) {
        const InteractionWindow win = random_tridiagonal_window(rng, 2, 15, 0.9);
        ++out.windows;
        for (std::size_t k = 0; k < phis_per_window; ++k) {
            const PhiAngle phi(phi_dist(rng));
            ++out.solves;
            try {
                const auto m = solve_matching(win, phi).amplitudes;
                const auto t = solve_transfer_matrix(win, phi).amplitudes;
                out.worst_delta = std::max(out.worst_delta, max_delta(m, t));
            } catch (const ScatterError&) {
                ++out.failures;
            }
        }
    }
    return out;
}

}  // namespace latscat
