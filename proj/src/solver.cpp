#include "latscat/solver.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <sstream>

namespace latscat {

namespace {

Complex plane_wave(PhiAngle phi, int m)
{
    return std::polar(1.0, m * phi.value());
}

double success_threshold(const InteractionWindow& win)
{
    return kResidualTolerance * (1.0 + win.max_abs_entry());
}

void check_residual(const InteractionWindow& win, const SolveReport& report, std::string_view who)
{
    if (!(report.residual_max <= success_threshold(win))) {
        std::ostringstream msg;
        msg << who << ": residual " << report.residual_max << " exceeds tolerance; system is ill-conditioned";
        throw SingularSystem(msg.str());
    }
}

}  // namespace

AnchorRange anchor_range(const InteractionWindow& win)
{
    return {win.lo(), std::max(win.hi(), win.lo() + 1)};
}

std::vector<std::pair<int, Complex>> schrodinger_row(const InteractionWindow& win, PhiAngle phi, int m)
{
    std::map<int, Complex> row;
    row[m - 1] += -1.0;
    row[m] += 2.0 * std::cos(phi.value());
    row[m + 1] += -1.0;
    const auto& entries = win.entries();
    for (auto it = entries.lower_bound({m, INT_MIN}); it != entries.end() && it->first.first == m; ++it)
        row[it->first.second] += it->second;
    return {row.begin(), row.end()};
}

std::string_view to_string(SolverKind kind)
{
    return kind == SolverKind::Matching ? "matching" : "transfer";
}

MatchingSystem build_matching_system(const InteractionWindow& win, PhiAngle phi)
{
    const AnchorRange a = anchor_range(win);
    const auto n = static_cast<std::size_t>(a.hi - a.lo + 1);
    MatchingSystem sys{a, ComplexMatrix(n, n), std::vector<Complex>(n)};

    for (int m = a.lo; m <= a.hi; ++m) {
        const auto r = static_cast<std::size_t>(m - a.lo);
        for (const auto& [j, c] : schrodinger_row(win, phi, m)) {
            if (j <= a.lo) {
                // psi_j = e^{ij phi} + R e^{-ij phi}
                sys.matrix(r, 0) += c * plane_wave(phi, -j);
                sys.rhs[r] -= c * plane_wave(phi, j);
            } else if (j >= a.hi) {
                sys.matrix(r, n - 1) += c * plane_wave(phi, j);
            } else {
                sys.matrix(r, static_cast<std::size_t>(j - a.lo)) += c;
            }
        }
    }
    return sys;
}

Complex wavefunction_at(const SolveReport& report, PhiAngle phi, int m)
{
    const auto& amp = report.amplitudes;
    if (m <= report.anchors.lo)
        return plane_wave(phi, m) + amp.R * plane_wave(phi, -m);
    if (m >= report.anchors.hi)
        return amp.T * plane_wave(phi, m);
    return report.wavefunction.at(m);
}

double residual(const InteractionWindow& win, PhiAngle phi, const SolveReport& report)
{
    double worst = 0.0;
    for (int m = report.anchors.lo - 2; m <= report.anchors.hi + 2; ++m) {
        Complex s{};
        for (const auto& [j, c] : schrodinger_row(win, phi, m))
            s += c * wavefunction_at(report, phi, j);
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

SolveReport solve_matching(const InteractionWindow& win, PhiAngle phi)
{
    if (auto cut = find_zero_hopping(win)) {
        std::ostringstream msg;
        msg << "zero hopping between sites " << cut->first << " and " << cut->second
            << "; the chain is cut and the matching problem is degenerate";
        throw SingularSystem(msg.str());
    }

    MatchingSystem sys = build_matching_system(win, phi);
    const std::size_t n = sys.dimension();
    const LuFactorization lu(sys.matrix);
    const std::vector<Complex> x = lu.solve(sys.rhs);

    SolveReport report;
    report.anchors = sys.anchors;
    report.amplitudes = ScatteringAmplitudes::from(x.front(), x.back());

    // Interior values go in first so wavefunction_at can read them back.
    auto& wf = report.wavefunction;
    wf.lo_ext = sys.anchors.lo - 2;
    wf.hi_ext = sys.anchors.hi + 2;
    wf.values.assign(static_cast<std::size_t>(wf.hi_ext - wf.lo_ext + 1), Complex{});
    for (int m = sys.anchors.lo + 1; m < sys.anchors.hi; ++m)
        wf.values[static_cast<std::size_t>(m - wf.lo_ext)] = x[static_cast<std::size_t>(m - sys.anchors.lo)];
    for (int m = wf.lo_ext; m <= wf.hi_ext; ++m) {
        if (m <= sys.anchors.lo || m >= sys.anchors.hi)
            wf.values[static_cast<std::size_t>(m - wf.lo_ext)] = wavefunction_at(report, phi, m);
    }

    report.residual_max = residual(win, phi, report);
    report.condition_estimate = n > 0 ? lu.condition_inf() : 0.0;
    check_residual(win, report, "matching solver");
    return report;
}

SolveReport solve_transfer_matrix(const InteractionWindow& win, PhiAngle phi)
{
    if (!win.is_tridiagonal())
        throw NotTridiagonal("transfer-matrix solver needs entries with |i - j| <= 1 only");

    const AnchorRange a = anchor_range(win);
    const int first = a.lo - 2;
    const int last = a.hi + 2;
    std::vector<Complex> psi(static_cast<std::size_t>(last - first + 1));
    auto at = [&](int m) -> Complex& { return psi[static_cast<std::size_t>(m - first)]; };

    for (int m = a.hi; m <= last; ++m)
        at(m) = plane_wave(phi, m);

    for (int m = a.hi; m >= a.lo - 1; --m) {
        Complex down{}, rest{};
        for (const auto& [j, c] : schrodinger_row(win, phi, m)) {
            if (j == m - 1)
                down = c;
            else
                rest += c * at(j);
        }
        if (std::abs(down) <= kHoppingTolerance * std::max(1.0, std::abs(down + 1.0))) {
            std::ostringstream msg;
            msg << "zero hopping between sites " << m << " and " << m - 1;
            throw ZeroHopping(msg.str());
        }
        at(m - 1) = -rest / down;
    }

    // Fit psi at lo-1 and lo-2 to alpha e^{im phi} + beta e^{-im phi}.
    const int p = a.lo - 1;
    const int q = a.lo - 2;
    const Complex det = plane_wave(phi, p - q) - plane_wave(phi, q - p);
    const Complex alpha = (at(p) * plane_wave(phi, -q) - at(q) * plane_wave(phi, -p)) / det;
    const Complex beta = (plane_wave(phi, p) * at(q) - plane_wave(phi, q) * at(p)) / det;

    const double growth = max_abs(psi);
    if (std::abs(alpha) <= kPivotTolerance * growth) {
        throw SingularSystem("incoming amplitude vanishes (spectral singularity)");
    }

    SolveReport report;
    report.anchors = a;
    report.amplitudes = ScatteringAmplitudes::from(beta / alpha, 1.0 / alpha);
    report.wavefunction.lo_ext = first;
    report.wavefunction.hi_ext = last;
    report.wavefunction.values.reserve(psi.size());
    for (const auto& v : psi)
        report.wavefunction.values.push_back(v / alpha);
    report.residual_max = residual(win, phi, report);
    report.condition_estimate = growth;
    check_residual(win, report, "transfer solver");
    return report;
}

SolveReport solve(const InteractionWindow& win, PhiAngle phi, SolverKind kind)
{
    return kind == SolverKind::Matching ? solve_matching(win, phi) : solve_transfer_matrix(win, phi);
}

}  // namespace latscat
