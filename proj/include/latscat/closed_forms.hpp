#pragma once

#include <optional>

#include "latscat/core.hpp"

namespace latscat {

/// Denominators with modulus at or below this are treated as vanishing.
inline constexpr double kClosedFormTolerance = 1e-14;

/// Real parameters of the exact PT-pair amplitudes, kept for diagnostics.
///   A      = x^2 / (1 - x^2) cot(phi)                       (M = 1)
///   lambda = x^2 sin 2phi / (1 + x^2 cos 2phi)              (M = 2, T - R)
///   alpha  = x^2 cos 2phi cot(phi) / (1 - 2 x^2 cos^2 phi)  (M = 2, T + R)
///   beta   = sin 2phi / (1 + x^2 cos 2phi)                  (M = 2, as printed)
///   gamma  = 2x^2 cos(phi) sin 3phi / (1 + 2x^2 cos(phi) cos 3phi)  (M = 3, T - R)
/// A parameter is empty where its denominator vanishes.
struct ClosedFormParams {
    std::optional<double> A;
    std::optional<double> lambda;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
};

ClosedFormParams closed_form_params(double x, PhiAngle phi);

/// M = 1: T = 1/(1 + iA), R = -iA/(1 + iA).
ScatteringAmplitudes cf_m1(double x, PhiAngle phi);

/// M = 2: T + R = (1 - i alpha)/(1 + i alpha), T - R = (1 - i lambda)/(1 + i lambda).
///
/// The T - R factor uses lambda, which follows from eliminating psi_0 between
/// the outer matching rows. The often-quoted beta = sin 2phi/(1 + x^2 cos 2phi)
/// lacks the x^2 factor and gives R != 0 at x = 0.
ScatteringAmplitudes cf_m2(double x, PhiAngle phi);

/// M = 3: T - R = (1 + 2x^2 e^{-3i phi} cos phi)/(1 + 2x^2 e^{3i phi} cos phi) and
/// T + R = -e^{-2i phi} (1 - e^{i phi} cos phi - x^2 e^{-2i phi} cos 2phi)
///                    / (1 - e^{-i phi} cos phi - x^2 e^{2i phi} cos 2phi).
ScatteringAmplitudes cf_m3(double x, PhiAngle phi);

/// Dispatch on M in {1, 2, 3}; throws InvalidArgument otherwise.
ScatteringAmplitudes cf_pt_pair(int M, double x, PhiAngle phi);

/// R = -a^2/D, T = (1 - a)(1 - e^{2i phi})/D, D = 1 - (1 - a^2) e^{2i phi}.
/// Matches build_ultralocal(a) at its default placement.
ScatteringAmplitudes cf_ultralocal(double a, PhiAngle phi);

/// U(a, phi) = a^4 / (2 (1 - a)(1 - cos 2phi)).
double ultralocal_u(double a, PhiAngle phi);

/// |R|^2 + |T|^2 = (1 - a/(1 + U)) / (1 + a/(1 + U)), evaluated directly.
double cf_ultralocal_prob_sum(double a, PhiAngle phi);

}  // namespace latscat
