#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "hadlat/errors.hpp"

namespace hadlat {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline cd omega(int q, long long power = 1) {
    const double angle = 2.0 * M_PI * static_cast<double>(power) / q;
    return {std::cos(angle), std::sin(angle)};
}

namespace chm {

/// Result of testing a square matrix against the complex Hadamard conditions
/// |H_jk| = 1 and H^dag H = q * Id.
struct HadamardReport {
    bool is_unimodular = false;
    double max_modulus_deviation = 0.0;   // max | |H_jk| - 1 |
    double max_unitarity_deviation = 0.0; // max abs entry of H^dag H - q*Id
    bool is_symmetric = false;
    double symmetry_deviation = 0.0;      // max |H - H^T|
    double tolerance = 0.0;

    bool passes(double tol) const {
        return max_modulus_deviation <= tol && max_unitarity_deviation <= tol;
    }
};

enum class NamedHadamard { K2, K3, F2xF2 };

/// Fourier matrix, entries (F_q)_{jk} = exp(2*pi*i*j*k/q).  Unnormalized:
/// F^dag F = q * Id.
Matrix fourier(int q);

Matrix named_hadamard(NamedHadamard name);

/// One-parameter q=4 family F4(a); F4(0) equals fourier(4) and
/// F4(pi/4) is permutation equivalent to F2 (x) F2.
Matrix f4_family(double a);

/// Kronecker product.
Matrix tensor(const Matrix& a, const Matrix& b);

HadamardReport check_hadamard(const Matrix& m, double tol = 1e-10);

/// Equivalent Hadamard with all-ones first row and column, obtained by
/// multiplying with diagonal unitaries on both sides.
Matrix dephase(const Matrix& m, double tol = 1e-8);

/// Brute-force search for permutations P1, P2 with m1 = P1 * m2 * P2.
/// Dimensions above 6 are rejected.
bool permutation_equivalent(const Matrix& m1, const Matrix& m2, double tol);

/// Sufficient (not complete) test for full D1 P1 H P2 D2 equivalence:
/// dephase both matrices, then search permutation pairs with re-dephasing.
bool equivalent_hadamard(const Matrix& m1, const Matrix& m2, double tol);

/// Quadratic-phase coupling matrix with entries
/// exp((2*pi*i/q) * (alpha*j^2/2 + j*k + delta*k^2/2)), j,k = 0..q-1.
/// The half-integer exponents are evaluated as real numbers on the canonical
/// representatives; j^2 is deliberately not reduced mod q first, since for odd
/// alpha*j^2 the entry depends on the representative.
Matrix cat_hadamard(int q, int alpha, int delta);

struct SinkhornOptions {
    double tol = 1e-10;
    int max_iter = 10000;
};

struct SinkhornResult {
    Matrix matrix;
    int iterations = 0;
    int restarts = 0;
    double modulus_deviation = 0.0;
    double unitarity_deviation = 0.0;
};

/// Generate a random symmetric complex Hadamard matrix by iterating
///   (i) polar decomposition, (ii) symmetrization U <- (U + U^T)/2,
///   (iii) entrywise normalization to unit modulus, (iv) repeat,
/// from a seeded random start (re/im parts uniform on [-1,1], mt19937_64
/// with a fixed 53-bit mapping, so runs are reproducible across platforms).
///
/// Two escape hatches keep every seed convergent: when progress per
/// iteration becomes sublinear near the solution manifold a damped
/// Gauss-Newton refinement of the symmetric phases finishes the job, and a
/// stalled or cycling iterate restarts from the next draw of the same
/// generator.  Throws convergence_error when the iteration budget runs out.
SinkhornResult sinkhorn_symmetric_full(int q, std::uint64_t seed, const SinkhornOptions& opts = {});

Matrix sinkhorn_symmetric(int q, std::uint64_t seed, double tol = 1e-10, int max_iter = 10000);

/// Parse builtin matrix names used by the CLI and config files:
/// f2 f3 f4 f5 f6 k2 k3 f2xf2 k3potts f4a:<angle> cat:<q>:<alpha>:<delta>
/// sinkhorn:<q>:<seed>.
Matrix builtin(const std::string& name);

}  // namespace chm
}  // namespace hadlat
