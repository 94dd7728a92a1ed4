#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace latscat {

using Complex = std::complex<double>;

// Error hierarchy. Everything thrown by the library derives from ScatterError.
class ScatterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public ScatterError {
public:
    using ScatterError::ScatterError;
};

/// The matching problem has no unique solution: a pivot collapsed, or the
/// total Hamiltonian lost a hopping so the chain is cut.
class SingularSystem : public ScatterError {
public:
    using ScatterError::ScatterError;
};

/// Transfer recursion hit a vanishing sub-diagonal coupling.
class ZeroHopping : public SingularSystem {
public:
    using SingularSystem::SingularSystem;
};

class NotTridiagonal : public ScatterError {
public:
    using ScatterError::ScatterError;
};

/// A closed-form expression has a vanishing denominator at this point.
class SingularCoupling : public ScatterError {
public:
    using ScatterError::ScatterError;
};

/// Minimum distance of phi from 0 and pi.
inline constexpr double kPhiGuard = 1e-8;

/// Energy angle, strictly inside (0, pi) with a guard band at both ends.
class PhiAngle {
public:
    explicit PhiAngle(double phi);

    double value() const { return phi_; }
    operator double() const { return phi_; }

private:
    double phi_;
};

enum class EnergyConvention {
    ZeroDiagonal,    // H0: diagonal 0, E = -2 cos(phi) / h^2
    ShiftedDiagonal  // H0': diagonal 2/h^2, E = (2 - 2 cos(phi)) / h^2
};

struct LatticeConvention {
    double h = 1.0;
    EnergyConvention diagonal = EnergyConvention::ZeroDiagonal;
};

double energy_from_phi(PhiAngle phi, const LatticeConvention& conv = {});

std::string to_string(EnergyConvention conv);

struct WindowEntry {
    int i;
    int j;
    Complex value;
};

/// Finite interaction block W_{ij} supported on sites [lo, hi]. Sparse;
/// absent entries read as zero. Immutable once built.
class InteractionWindow {
public:
    InteractionWindow(int lo, int hi);
    /// Throws InvalidArgument on out-of-range indices or duplicate pairs.
    InteractionWindow(int lo, int hi, const std::vector<WindowEntry>& entries);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int width() const { return hi_ - lo_ + 1; }

    Complex at(int i, int j) const;
    const std::map<std::pair<int, int>, Complex>& entries() const { return entries_; }

    /// Largest |W_ij| over stored entries, 0 for an empty window.
    double max_abs_entry() const;
    /// True when every nonzero entry satisfies |i - j| <= 1.
    bool is_tridiagonal() const;
    /// No nonzero entries stored.
    bool is_zero() const;

private:
    int lo_;
    int hi_;
    std::map<std::pair<int, int>, Complex> entries_;
};

// Model families.
struct PTDeltaPair {
    int M;
    double x;
};

struct Ultralocal {
    double a;
    int first_site = -1;
};

struct CustomModel {
    InteractionWindow window;
};

using ModelFamily = std::variant<PTDeltaPair, Ultralocal, CustomModel>;

/// The PT-symmetrised pair of couplings at distance M:
/// W_{1-M,-M} = W_{M-1,M} = x, W_{-M,1-M} = W_{M,M-1} = -x on [-M, M].
InteractionWindow build_pt_delta_pair(int M, double x);

/// Two-site antisymmetric block [[0, -a], [a, 0]] on sites
/// [first_site, first_site + 1]. The default placement reproduces the
/// closed-form reflection amplitude with its printed phase.
InteractionWindow build_ultralocal(double a, int first_site = -1);

InteractionWindow window_of(const ModelFamily& model);

std::string model_tag(const ModelFamily& model);

/// Relative threshold below which a total nearest-neighbour coupling
/// -1 + W_{m,m+-1} counts as zero.
inline constexpr double kHoppingTolerance = 1e-14;

/// First (row, column) pair inside the window whose total hopping
/// -1 + W_{m,m+-1} vanishes, scanning rows lo..hi.
std::optional<std::pair<int, int>> find_zero_hopping(const InteractionWindow& win);

/// True when |x| = 1 (PT pair) or the window cuts a nearest-neighbour hop.
bool is_flagged_singular(const ModelFamily& model);

struct PTViolation {
    int i;
    int j;
    Complex w_ij;          // W_{ij}
    Complex mirrored;      // conj(W_{-i,-j})
};

/// First stored entry (in (i, j) order) that breaks conj(W_{-i,-j}) = W_{ij},
/// or nullopt when the window commutes with PT.
std::optional<PTViolation> find_pt_violation(const InteractionWindow& win, double tol = 0.0);

bool is_pt_symmetric(const InteractionWindow& win, double tol = 0.0);

/// Apply PT to a state vector living on the symmetric range [-N, N]
/// (index k stores site k - N): (PT psi)_k = conj(psi_{-k}).
std::vector<Complex> apply_pt(const std::vector<Complex>& psi);

struct ScatteringAmplitudes {
    Complex R;
    Complex T;
    double prob_sum;
    double defect;

    static ScatteringAmplitudes from(Complex R, Complex T);
};

/// psi_m for m in [lo_ext, hi_ext].
struct WaveFunctionWindow {
    int lo_ext = 0;
    int hi_ext = -1;
    std::vector<Complex> values;

    Complex at(int m) const { return values.at(static_cast<std::size_t>(m - lo_ext)); }
    bool contains(int m) const { return m >= lo_ext && m <= hi_ext; }
};

}  // namespace latscat
