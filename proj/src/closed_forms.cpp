#include "latscat/closed_forms.hpp"

#include <cmath>
#include <sstream>
#include <string_view>

namespace latscat {

namespace {

constexpr Complex I{0.0, 1.0};

bool vanishes(Complex d)
{
    return std::abs(d) <= kClosedFormTolerance;
}

void require_nonzero(Complex d, std::string_view what, double coupling, PhiAngle phi)
{
    if (vanishes(d)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << " vanishes at coupling " << coupling << ", phi " << phi.value();
        throw SingularCoupling(msg.str());
    }
}

std::optional<double> ratio(double num, double den)
{
    if (std::abs(den) <= kClosedFormTolerance)
        return std::nullopt;
    return num / den;
}

// (1 - i t)/(1 + i t)
Complex cayley(double t)
{
    return (1.0 - I * t) / (1.0 + I * t);
}

ScatteringAmplitudes from_sum_and_difference(Complex sum, Complex diff)
{
    return ScatteringAmplitudes::from(0.5 * (sum - diff), 0.5 * (sum + diff));
}

}  // namespace

ClosedFormParams closed_form_params(double x, PhiAngle phi)
{
    const double p = phi.value();
    const double x2 = x * x;
    const double cot = std::cos(p) / std::sin(p);
    const double c = std::cos(p);
    const double c2 = std::cos(2 * p);
    const double s2 = std::sin(2 * p);

    ClosedFormParams out;
    if (auto r = ratio(x2, 1.0 - x2))
        out.A = *r * cot;
    out.lambda = ratio(x2 * s2, 1.0 + x2 * c2);
    out.alpha = ratio(x2 * c2 * cot, 1.0 - 2.0 * x2 * c * c);
    out.beta = ratio(s2, 1.0 + x2 * c2);
    out.gamma = ratio(2.0 * x2 * c * std::sin(3 * p), 1.0 + 2.0 * x2 * c * std::cos(3 * p));
    return out;
}

ScatteringAmplitudes cf_m1(double x, PhiAngle phi)
{
    const double x2 = x * x;
    require_nonzero(1.0 - x2, "1 - x^2", x, phi);
    const double A = x2 / (1.0 - x2) * std::cos(phi.value()) / std::sin(phi.value());
    const Complex den = 1.0 + I * A;
    return ScatteringAmplitudes::from(-I * A / den, 1.0 / den);
}

ScatteringAmplitudes cf_m2(double x, PhiAngle phi)
{
    const double p = phi.value();
    const double x2 = x * x;
    const double c = std::cos(p);
    const double d_alpha = 1.0 - 2.0 * x2 * c * c;
    const double d_lambda = 1.0 + x2 * std::cos(2 * p);
    require_nonzero(d_alpha, "1 - 2x^2 cos^2(phi)", x, phi);
    require_nonzero(d_lambda, "1 + x^2 cos(2 phi)", x, phi);

    const double alpha = x2 * std::cos(2 * p) * (c / std::sin(p)) / d_alpha;
    const double lambda = x2 * std::sin(2 * p) / d_lambda;
    return from_sum_and_difference(cayley(alpha), cayley(lambda));
}

ScatteringAmplitudes cf_m3(double x, PhiAngle phi)
{
    const double p = phi.value();
    const double x2 = x * x;
    const double c = std::cos(p);
    const double c2 = std::cos(2 * p);
    auto e = [p](double k) { return std::polar(1.0, k * p); };

    const Complex diff_den = 1.0 + 2.0 * x2 * e(3) * c;
    const Complex sum_den = 1.0 - e(-1) * c - x2 * e(2) * c2;
    require_nonzero(diff_den, "1 + 2x^2 e^{3i phi} cos(phi)", x, phi);
    require_nonzero(sum_den, "1 - e^{-i phi} cos(phi) - x^2 e^{2i phi} cos(2 phi)", x, phi);

    const Complex diff = (1.0 + 2.0 * x2 * e(-3) * c) / diff_den;
    const Complex sum = -e(-2) * (1.0 - e(1) * c - x2 * e(-2) * c2) / sum_den;
    return from_sum_and_difference(sum, diff);
}

ScatteringAmplitudes cf_pt_pair(int M, double x, PhiAngle phi)
{
    switch (M) {
    case 1: return cf_m1(x, phi);
    case 2: return cf_m2(x, phi);
    case 3: return cf_m3(x, phi);
    default: {
        std::ostringstream msg;
        msg << "no closed form for M = " << M;
        throw InvalidArgument(msg.str());
    }
    }
}

ScatteringAmplitudes cf_ultralocal(double a, PhiAngle phi)
{
    const Complex z = std::polar(1.0, 2.0 * phi.value());
    const Complex delta = 1.0 - (1.0 - a * a) * z;
    require_nonzero(delta, "Delta", a, phi);
    return ScatteringAmplitudes::from(-a * a / delta, (1.0 - a) * (1.0 - z) / delta);
}

double ultralocal_u(double a, PhiAngle phi)
{
    const double den = 2.0 * (1.0 - a) * (1.0 - std::cos(2.0 * phi.value()));
    require_nonzero(den, "2(1 - a)(1 - cos 2phi)", a, phi);
    return a * a * a * a / den;
}

double cf_ultralocal_prob_sum(double a, PhiAngle phi)
{
    const double u = ultralocal_u(a, phi);
    require_nonzero(1.0 + u, "1 + U", a, phi);
    const double g = a / (1.0 + u);
    require_nonzero(1.0 + g, "1 + a/(1 + U)", a, phi);
    return (1.0 - g) / (1.0 + g);
}

}  // namespace latscat
