#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace qhilbert::channel {

inline constexpr int kMaxDensityQubits = 10;

/// Eigenvalues below this contribute nothing to an entropy sum.
inline constexpr double kEigenFloor = 1e-12;

/// Hermitian, unit-trace, positive semidefinite matrix. Eigenvalues are
/// computed once at construction. Immutable; copies share storage.
class DensityMatrix {
public:
    /// Throws InvalidArgument when the matrix is not square, not Hermitian
    /// within 1e-12, has trace off 1 by more than 1e-12, or an eigenvalue
    /// below -1e-10.
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    /// |psi><psi| for a normalized amplitude vector.
    static DensityMatrix pure(std::span<const std::complex<double>> amplitudes);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(data_->entries.rows()); }
    const Eigen::MatrixXcd& entries() const noexcept { return data_->entries; }
    const Eigen::VectorXd& eigenvalues() const noexcept { return data_->eigenvalues; }
    bool diagonal() const noexcept { return data_->diagonal; }

private:
    struct Data {
        Eigen::MatrixXcd entries;
        Eigen::VectorXd eigenvalues;
        bool diagonal = false;
    };
    std::shared_ptr<const Data> data_;
};

/// (1/N) * identity on n qubits, the state an eavesdropper holds after
/// intercepting a single stage of the three-pass exchange.
DensityMatrix intercept_state(int n_qubits);

/// S(rho) = -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

using Ensemble = std::vector<std::pair<double, DensityMatrix>>;

/// chi = S(sum p_m rho_m) - sum p_m S(rho_m), in bits. Probabilities must be
/// nonnegative and sum to 1 within 1e-10; matrices must share a dimension.
double holevo_chi(const Ensemble& ensemble);

/// H2(p) = -p log2 p - (1-p) log2 (1-p), with H2(0) = H2(1) = 0.
double binary_entropy(double p);

/// Ensemble of `message_count` equiprobable messages, each seen by the
/// eavesdropper as the maximally mixed intercept state.
Ensemble ideal_intercept_ensemble(int n_qubits, std::size_t message_count);

struct LeakageReport {
    int n_qubits = 1;
    double delta = 0.0;
    double chi_ideal = 0.0;
    double bound_exact = 0.0;   // H2((1 + sqrt(1 - delta)) / 2)
    double bound_approx = 0.0;  // H2(1 - delta / 4), first-order in delta
};

/// Leakage bound for channel noise `delta` in [0, 1]. chi_ideal is the Holevo
/// quantity of the ideal intercept ensemble over all 2^n messages.
LeakageReport leakage_bound(double delta, int n_qubits = 1);

}  // namespace qhilbert::channel
