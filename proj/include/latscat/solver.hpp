#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "latscat/core.hpp"
#include "latscat/linalg.hpp"

namespace latscat {

/// Rows whose residual exceeds this (times 1 + max|W|) are a failed solve.
inline constexpr double kResidualTolerance = 1e-10;

/// Sites where the scattering ansatz is pinned: psi_m = e^{im phi} + R e^{-im phi}
/// for m <= lo and psi_m = T e^{im phi} for m >= hi. Equals the window range,
/// except that a one-site window is anchored on [lo, lo + 1].
struct AnchorRange {
    int lo;
    int hi;
};

AnchorRange anchor_range(const InteractionWindow& win);

/// One row of (H0 + W - E) psi = 0 in the zero-diagonal convention:
/// -psi_{m-1} + 2 cos(phi) psi_m - psi_{m+1} + sum_j W_{mj} psi_j.
/// Coefficients are listed by column, merged and ordered. Both solvers build
/// their equations from this.
std::vector<std::pair<int, Complex>> schrodinger_row(const InteractionWindow& win, PhiAngle phi, int m);

/// Square system for the unknowns [R, psi_{lo+1}, ..., psi_{hi-1}, T],
/// one equation per anchored row.
struct MatchingSystem {
    AnchorRange anchors;
    ComplexMatrix matrix;
    std::vector<Complex> rhs;

    std::size_t dimension() const { return rhs.size(); }
};

MatchingSystem build_matching_system(const InteractionWindow& win, PhiAngle phi);

struct SolveReport {
    ScatteringAmplitudes amplitudes;
    AnchorRange anchors;
    WaveFunctionWindow wavefunction;  // psi_m for m in [anchors.lo - 2, anchors.hi + 2]
    double residual_max = 0.0;
    double condition_estimate = 0.0;
};

enum class SolverKind { Matching, Transfer };

std::string_view to_string(SolverKind kind);

SolveReport solve_matching(const InteractionWindow& win, PhiAngle phi);

/// Backward recursion from psi_m = e^{im phi} (m >= hi) down to lo - 2, then a
/// two-point fit to alpha e^{im phi} + beta e^{-im phi}: T = 1/alpha, R = beta/alpha.
/// Requires a tridiagonal window.
SolveReport solve_transfer_matrix(const InteractionWindow& win, PhiAngle phi);

SolveReport solve(const InteractionWindow& win, PhiAngle phi, SolverKind kind);

/// psi_m as implied by the report: the R/T ansatz outside the anchors and the
/// stored interior values in between.
Complex wavefunction_at(const SolveReport& report, PhiAngle phi, int m);

/// Max row residual |(H0 + W - E) psi|_m over m in [anchors.lo - 2, anchors.hi + 2].
double residual(const InteractionWindow& win, PhiAngle phi, const SolveReport& report);

}  // namespace latscat
