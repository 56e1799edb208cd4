#include "qhilbert/channel.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qhilbert/error.hpp"

namespace qhilbert::channel {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kNegativeEigenTol = 1e-10;
constexpr double kProbabilityTol = 1e-10;

void check_qubits(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDensityQubits) {
        throw InvalidArgument("n_qubits must be in [1, " + std::to_string(kMaxDensityQubits) + "], got " +
                              std::to_string(n_qubits));
    }
}

bool is_diagonal(const Eigen::MatrixXcd& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r != c && m(r, c) != std::complex<double>{0.0, 0.0}) return false;
        }
    }
    return true;
}

// Entropy in bits from a spectrum, skipping eigenvalues below the floor.
double entropy_of(const Eigen::VectorXd& eigenvalues) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double l = eigenvalues[i];
        if (l > kEigenFloor) s -= l * std::log2(l);
    }
    return s;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) {
    auto data = std::make_shared<Data>();
    data->entries = std::move(entries);
    const Eigen::MatrixXcd& m = data->entries;
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw InvalidArgument("density matrix must be square and nonempty");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    const std::complex<double> trace = m.trace();
    if (std::abs(trace.real() - 1.0) > kTraceTol || std::abs(trace.imag()) > kTraceTol) {
        throw InvalidArgument("density matrix trace is not 1");
    }
    data->diagonal = is_diagonal(m);
    if (data->diagonal) {
        data->eigenvalues = m.diagonal().real();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw InvalidArgument("eigenvalue decomposition failed");
        data->eigenvalues = solver.eigenvalues();
    }
    if (data->eigenvalues.minCoeff() < -kNegativeEigenTol) {
        throw InvalidArgument("density matrix has a negative eigenvalue");
    }
    data_ = std::move(data);
}

DensityMatrix DensityMatrix::pure(std::span<const std::complex<double>> amplitudes) {
    const auto n = static_cast<Eigen::Index>(amplitudes.size());
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = amplitudes[static_cast<std::size_t>(i)];
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix intercept_state(int n_qubits) {
    check_qubits(n_qubits);
    const Eigen::Index n = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    m /= static_cast<double>(n);
    return DensityMatrix(std::move(m));
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of(rho.eigenvalues()); }

double holevo_chi(const Ensemble& ensemble) {
    if (ensemble.empty()) throw InvalidArgument("empty ensemble");
    const std::size_t dim = ensemble.front().second.dimension();
    double total = 0.0;
    for (const auto& [p, rho] : ensemble) {
        if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidArgument("ensemble probability must be nonnegative");
        if (rho.dimension() != dim) throw InvalidArgument("ensemble dimension mismatch");
        total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTol) throw InvalidArgument("ensemble probabilities do not sum to 1");

    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd mixture = Eigen::MatrixXcd::Zero(n, n);
    double conditional = 0.0;
    for (const auto& [p, rho] : ensemble) {
        const double w = p / total;
        if (rho.diagonal()) {
            mixture.diagonal() += w * rho.entries().diagonal();
        } else {
            mixture += w * rho.entries();
        }
        conditional += w * von_neumann_entropy(rho);
    }
    return von_neumann_entropy(DensityMatrix(std::move(mixture))) - conditional;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("binary entropy argument outside [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

Ensemble ideal_intercept_ensemble(int n_qubits, std::size_t message_count) {
    if (message_count == 0) throw InvalidArgument("message set must not be empty");
    const DensityMatrix rho = intercept_state(n_qubits);
    const double p = 1.0 / static_cast<double>(message_count);
    return Ensemble(message_count, {p, rho});
}

LeakageReport leakage_bound(double delta, int n_qubits) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidArgument("delta outside [0, 1]");
    check_qubits(n_qubits);
    LeakageReport report;
    report.n_qubits = n_qubits;
    report.delta = delta;
    report.chi_ideal = holevo_chi(ideal_intercept_ensemble(n_qubits, std::size_t{1} << n_qubits));
    report.bound_exact = binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - delta)));
    report.bound_approx = binary_entropy(1.0 - delta / 4.0);
    return report;
}

}  // namespace qhilbert::channel
