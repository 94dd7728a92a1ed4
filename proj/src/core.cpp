#include "latscat/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace latscat {

PhiAngle::PhiAngle(double phi) : phi_(phi)
{
    if (!std::isfinite(phi) || phi < kPhiGuard || phi > std::numbers::pi - kPhiGuard) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "phi = " << phi << " outside (0, pi) guard band";
        throw InvalidArgument(msg.str());
    }
}

double energy_from_phi(PhiAngle phi, const LatticeConvention& conv)
{
    const double h2 = conv.h * conv.h;
    const double c = std::cos(phi.value());
    if (conv.diagonal == EnergyConvention::ShiftedDiagonal)
        return (2.0 - 2.0 * c) / h2;
    return -2.0 * c / h2;
}

std::string to_string(EnergyConvention conv)
{
    return conv == EnergyConvention::ShiftedDiagonal ? "H0-shifted" : "H0";
}

InteractionWindow::InteractionWindow(int lo, int hi) : lo_(lo), hi_(hi)
{
    if (lo > hi)
        throw InvalidArgument("window requires lo <= hi");
}

InteractionWindow::InteractionWindow(int lo, int hi, const std::vector<WindowEntry>& entries)
    : InteractionWindow(lo, hi)
{
    for (const auto& e : entries) {
        if (e.i < lo || e.i > hi || e.j < lo || e.j > hi) {
            std::ostringstream msg;
            msg << "entry (" << e.i << ", " << e.j << ") outside window [" << lo << ", " << hi << "]";
            throw InvalidArgument(msg.str());
        }
        if (!entries_.emplace(std::pair{e.i, e.j}, e.value).second) {
            std::ostringstream msg;
            msg << "duplicate entry (" << e.i << ", " << e.j << ")";
            throw InvalidArgument(msg.str());
        }
    }
}

Complex InteractionWindow::at(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Complex{} : it->second;
}

double InteractionWindow::max_abs_entry() const
{
    double m = 0.0;
    for (const auto& [ij, v] : entries_)
        m = std::max(m, std::abs(v));
    return m;
}

bool InteractionWindow::is_tridiagonal() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) {
        return kv.second == Complex{} || std::abs(kv.first.first - kv.first.second) <= 1;
    });
}

bool InteractionWindow::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& kv) { return kv.second == Complex{}; });
}

InteractionWindow build_pt_delta_pair(int M, double x)
{
    if (M < 1)
        throw InvalidArgument("PT pair requires M >= 1");
    if (x == 0.0)
        return InteractionWindow(-M, M);
    return InteractionWindow(-M, M,
                             {{1 - M, -M, x}, {M - 1, M, x}, {-M, 1 - M, -x}, {M, M - 1, -x}});
}

InteractionWindow build_ultralocal(double a, int first_site)
{
    const int lo = first_site;
    if (a == 0.0)
        return InteractionWindow(lo, lo + 1);
    return InteractionWindow(lo, lo + 1, {{lo, lo + 1, -a}, {lo + 1, lo, a}});
}

InteractionWindow window_of(const ModelFamily& model)
{
    struct Visitor {
        InteractionWindow operator()(const PTDeltaPair& m) const { return build_pt_delta_pair(m.M, m.x); }
        InteractionWindow operator()(const Ultralocal& m) const { return build_ultralocal(m.a, m.first_site); }
        InteractionWindow operator()(const CustomModel& m) const { return m.window; }
    };
    return std::visit(Visitor{}, model);
}

std::string model_tag(const ModelFamily& model)
{
    switch (model.index()) {
    case 0: return "pt-pair";
    case 1: return "ultralocal";
    default: return "custom";
    }
}

std::optional<std::pair<int, int>> find_zero_hopping(const InteractionWindow& win)
{
    for (int m = win.lo(); m <= win.hi(); ++m) {
        for (int j : {m - 1, m + 1}) {
            const Complex w = win.at(m, j);
            const Complex total = Complex{-1.0, 0.0} + w;
            if (std::abs(total) <= kHoppingTolerance * std::max(1.0, std::abs(w)))
                return std::pair{m, j};
        }
    }
    return std::nullopt;
}

bool is_flagged_singular(const ModelFamily& model)
{
    if (const auto* pt = std::get_if<PTDeltaPair>(&model))
        return std::abs(pt->x) == 1.0;
    return find_zero_hopping(window_of(model)).has_value();
}

std::optional<PTViolation> find_pt_violation(const InteractionWindow& win, double tol)
{
    // The symmetric embedding on [-N, N] only adds zeros, so stored entries
    // and their mirror images are all that can disagree.
    for (const auto& [ij, w] : win.entries()) {
        const auto [i, j] = ij;
        const Complex mirrored = std::conj(win.at(-i, -j));
        if (std::abs(mirrored - w) > tol)
            return PTViolation{i, j, w, mirrored};
    }
    return std::nullopt;
}

bool is_pt_symmetric(const InteractionWindow& win, double tol)
{
    return !find_pt_violation(win, tol).has_value();
}

std::vector<Complex> apply_pt(const std::vector<Complex>& psi)
{
    std::vector<Complex> out(psi.size());
    std::transform(psi.rbegin(), psi.rend(), out.begin(), [](Complex v) { return std::conj(v); });
    return out;
}

ScatteringAmplitudes ScatteringAmplitudes::from(Complex R, Complex T)
{
    const double sum = std::norm(R) + std::norm(T);
    return {R, T, sum, sum - 1.0};
}

}  // namespace latscat
