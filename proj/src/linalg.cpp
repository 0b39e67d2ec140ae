#include "robsign/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "robsign/errors.hpp"

namespace robsign {

namespace {

void canonicalize_sign(Eigen::Ref<Vector> v) {
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        if (std::abs(v[j]) > 1e-12) {
            if (v[j] < 0.0) v = -v;
            return;
        }
    }
}

bool lex_less(const Vector& a, const Vector& b) {
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return true;
        if (a[j] > b[j]) return false;
    }
    return false;
}

}  // namespace

EigenPair sym_eig_desc(const Matrix& m, double tie_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const Eigen::Index p = m.rows();

    EigenPair out;
    out.values = es.eigenvalues().reverse();
    out.vectors = es.eigenvectors().rowwise().reverse();
    for (Eigen::Index i = 0; i < p; ++i) canonicalize_sign(out.vectors.col(i));

    // Ties get a deterministic order regardless of how the solver broke them.
    Eigen::Index lo = 0;
    while (lo < p) {
        Eigen::Index hi = lo + 1;
        while (hi < p && std::abs(out.values[hi] - out.values[lo]) < tie_tol) ++hi;
        if (hi - lo > 1) {
            std::vector<Eigen::Index> order(static_cast<std::size_t>(hi - lo));
            std::iota(order.begin(), order.end(), lo);
            std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
                return lex_less(out.vectors.col(a), out.vectors.col(b));
            });
            Matrix block(p, hi - lo);
            Vector vals(hi - lo);
            for (Eigen::Index j = 0; j < hi - lo; ++j) {
                block.col(j) = out.vectors.col(order[static_cast<std::size_t>(j)]);
                vals[j] = out.values[order[static_cast<std::size_t>(j)]];
            }
            out.vectors.middleCols(lo, hi - lo) = block;
            out.values.segment(lo, hi - lo) = vals;
        }
        lo = hi;
    }
    return out;
}

void check_spd(const Matrix& m, const char* what, double rel_tol) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << what << ": matrix is " << m.rows() << "x" << m.cols() << ", expected square";
        throw ValidationError(os.str());
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > rel_tol * scale) {
        std::ostringstream os;
        os << what << ": matrix is not symmetric (max asymmetry "
           << (m - m.transpose()).cwiseAbs().maxCoeff() << ")";
        throw ValidationError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (!(min_eig > 0.0)) {
        std::ostringstream os;
        os << what << ": matrix is not positive definite (smallest eigenvalue " << min_eig
           << ", eigenvalues";
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            os << ' ' << es.eigenvalues()[i];
        os << ")";
        throw ValidationError(os.str());
    }
}

Matrix spd_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    return es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
           es.eigenvectors().transpose();
}

Matrix spd_inv_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const Vector ev = es.eigenvalues();
    if (!(ev.minCoeff() > 0.0)) {
        std::ostringstream os;
        os << "inverse square root: smallest eigenvalue " << ev.minCoeff() << " is not positive";
        throw ValidationError(os.str());
    }
    return es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
}

double principal_angle(const Vector& a, const Vector& b) {
    const double c = std::abs(a.dot(b)) / (a.norm() * b.norm());
    return std::acos(std::min(1.0, c));
}

}  // namespace robsign
