#pragma once

#include <Eigen/Core>

namespace robsign {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct EigenPair {
    Matrix vectors;  // columns, matching `values` order
    Vector values;   // nonincreasing
};

// Symmetric eigendecomposition sorted by descending eigenvalue.  Output is
// deterministic: each eigenvector is flipped so its first component larger
// than 1e-12 in magnitude is positive, and blocks of eigenvalues closer than
// `tie_tol` are ordered lexicographically by the canonicalized vectors.
EigenPair sym_eig_desc(const Matrix& m, double tie_tol = 1e-10);

// Require symmetry to `rel_tol` and strictly positive eigenvalues; throws
// ValidationError naming the offending eigenvalue otherwise.
void check_spd(const Matrix& m, const char* what, double rel_tol = 1e-12);

Matrix spd_sqrt(const Matrix& m);
Matrix spd_inv_sqrt(const Matrix& m);

// Smallest angle between the spans of two unit vectors: acos(|a.b|), in
// [0, pi/2].
double principal_angle(const Vector& a, const Vector& b);

}  // namespace robsign
