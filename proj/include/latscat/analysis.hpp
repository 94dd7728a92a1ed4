#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latscat/core.hpp"
#include "latscat/solver.hpp"

namespace latscat {

inline constexpr const char* kToolVersion = "0.1.0";

enum class SweepSolver { Matching, Transfer, ClosedForm };

std::string to_string(SweepSolver s);
std::vector<SweepSolver> all_sweep_solvers();

enum class ModelKind { PTPair, Ultralocal, Custom };

std::string to_string(ModelKind kind);

/// Grid description. For PTPair every (M, coupling, phi) triple is visited;
/// for Ultralocal the couplings are values of a; for Custom the couplings are
/// ignored and only phi varies.
struct SweepSpec {
    ModelKind model = ModelKind::PTPair;
    std::vector<int> M_list{1};
    std::vector<double> couplings{0.0};
    std::vector<double> phis{1.0};
    std::vector<SweepSolver> solvers{SweepSolver::Matching};
    std::optional<InteractionWindow> custom_window;
    LatticeConvention convention{};
    unsigned threads = 1;
};

struct SweepRow {
    std::string model;
    int M = 0;
    double coupling = 0.0;
    double phi = 0.0;
    double E = 0.0;
    Complex R;
    Complex T;
    double prob_sum = 0.0;
    double defect = 0.0;
    std::string solver;
    double residual = 0.0;
};

struct SweepError {
    std::string model;
    int M = 0;
    double coupling = 0.0;
    double phi = 0.0;
    std::string solver;
    std::string kind;    // SingularSystem, ZeroHopping, SingularCoupling, ...
    std::string reason;
};

struct SweepMetadata {
    std::string tool_version = kToolVersion;
    std::string convention;
    double h = 1.0;
    double residual_tolerance = kResidualTolerance;
    double pivot_tolerance = kPivotTolerance;
    double phi_guard = kPhiGuard;
};

struct SweepTable {
    SweepMetadata metadata;
    std::vector<SweepRow> rows;
    std::vector<SweepError> errors;
};

/// Rows follow (M, coupling, phi, solver) in the input grid order whatever the
/// thread count. Per-point failures become error entries.
SweepTable run_sweep(const SweepSpec& spec);

/// Exact CSV header of write_csv.
inline constexpr const char* kCsvHeader =
    "model,M,coupling,phi,E,reR,imR,reT,imT,prob_sum,defect,solver,residual";

/// 17 significant digits, '.' decimal point regardless of locale.
std::string format_real(double v);

void write_csv(std::ostream& out, const SweepTable& table);

struct ModelSummary {
    std::string model;
    int M = 0;
    std::size_t rows = 0;
    double max_abs_defect = 0.0;
    double mean_abs_defect = 0.0;
    std::size_t violations = 0;
    // sign(defect) against sign(coupling), rows with |defect| <= tol skipped
    std::size_t defect_opposes_coupling = 0;
    std::size_t defect_follows_coupling = 0;
};

struct UnitarityReport {
    double tol = 0.0;
    std::vector<ModelSummary> models;
    std::size_t total_violations = 0;
};

UnitarityReport unitarity_report(const SweepTable& table, double tol);

struct CrossValidationRow {
    int M = 0;
    double cf_vs_matching = 0.0;  // 0 when no closed form exists
    double cf_vs_transfer = 0.0;
    double matching_vs_transfer = 0.0;
    double max_abs_defect = 0.0;
    std::size_t points = 0;
    std::size_t singular_points = 0;
    bool has_closed_form = false;
};

struct CrossValidation {
    bool passed = true;
    double tol = 0.0;
    std::vector<CrossValidationRow> per_M;
    std::size_t singular_points = 0;
    std::vector<std::string> failures;
};

/// Default grid: x = k/10 for k = -9..9 and 50 phi values spread evenly over
/// [0.05, pi - 0.05].
std::vector<double> default_coupling_grid();
std::vector<double> default_phi_grid();

/// Closed forms against both solvers for M <= 3, solver against solver for
/// larger M, plus the conservation defect. Singular points are counted and
/// excluded from pass/fail.
CrossValidation cross_validate(int M_max, double tol, const std::vector<double>& couplings = default_coupling_grid(),
                               const std::vector<double>& phis = default_phi_grid());

/// Real tridiagonal window (diagonal and both off-diagonals filled) with
/// entries uniform in [-bound, bound], width uniform in [min_width, max_width]
/// and lo uniform in [-5, 5].
InteractionWindow random_tridiagonal_window(std::mt19937_64& rng, int min_width, int max_width, double bound);

struct OracleAgreement {
    double worst_delta = 0.0;  // max over solves of max(|dR|, |dT|)
    std::size_t windows = 0;
    std::size_t solves = 0;
    std::size_t failures = 0;  // either solver threw
};

/// Matching against transfer on random tridiagonal windows (entries in
/// [-0.9, 0.9], widths 2..15), each at phis_per_window random phi in
/// (0.05, pi - 0.05).
OracleAgreement random_oracle_agreement(std::size_t windows, std::size_t phis_per_window, std::uint64_t seed);

}  // namespace latscat
