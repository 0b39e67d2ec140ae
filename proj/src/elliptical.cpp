#include "robsign/elliptical.hpp"

#include <cmath>
#include <sstream>

#include "robsign/distributions.hpp"
#include "robsign/errors.hpp"
#include "robsign/parallel.hpp"

namespace robsign {

EllipticalModel EllipticalModel::normal(Vector mu, Matrix sigma) {
    EllipticalModel m;
    m.family = Family::Normal;
    m.mu = std::move(mu);
    m.sigma = std::move(sigma);
    m.validate();
    return m;
}

EllipticalModel EllipticalModel::student_t(int dof, Vector mu, Matrix sigma) {
    EllipticalModel m;
    m.family = Family::StudentT;
    m.dof = dof;
    m.mu = std::move(mu);
    m.sigma = std::move(sigma);
    m.validate();
    return m;
}

void EllipticalModel::validate() const {
    if (family == Family::StudentT && dof < 3) {
        std::ostringstream os;
        os << "student t dof must be >= 3 so the covariance exists, got " << dof;
        throw ValidationError(os.str());
    }
    if (sigma.rows() != mu.size()) {
        std::ostringstream os;
        os << "sigma is " << sigma.rows() << "x" << sigma.cols() << " but mu has dimension "
           << mu.size();
        throw ValidationError(os.str());
    }
    check_spd(sigma, "model sigma");
}

SphericalSample spherical_decompose(const Vector& z) {
    SphericalSample s;
    s.z = z;
    s.r = z.norm();
    s.u = s.r > 0.0 ? Vector(z / s.r) : Vector(Vector::Zero(z.size()));
    return s;
}

void sample_core_row(Family family, int dof, CounterRng& rng, Eigen::Ref<Vector> z) {
    for (Eigen::Index j = 0; j < z.size(); ++j) z[j] = rng.next_normal();
    if (family == Family::StudentT) {
        // X_t = N / sqrt(chi2/dof) has covariance dof/(dof-2); rescale so the
        // core keeps unit covariance.
        const double g = rng.next_chisq(static_cast<double>(dof));
        z *= std::sqrt(static_cast<double>(dof - 2) / g);
    }
}

DataMatrix sample(const EllipticalModel& model, Eigen::Index n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("sample: n must be >= 1");
    model.validate();
    const Eigen::Index p = model.dim();
    const Matrix root = spd_sqrt(model.sigma);

    DataMatrix out;
    out.x.resize(n, p);
    par::parallel_for(n, [&](std::ptrdiff_t i) {
        CounterRng rng(sub_seed(seed, static_cast<std::uint64_t>(i)));
        Vector z(p);
        sample_core_row(model.family, model.dof, rng, z);
        out.x.row(i) = (model.mu + root * z).transpose();
    });
    return out;
}

Matrix sample_spherical(Family family, int dof, Eigen::Index p, Eigen::Index n,
                        std::uint64_t seed) {
    Matrix z(n, p);
    par::parallel_for(n, [&](std::ptrdiff_t i) {
        CounterRng rng(sub_seed(seed, static_cast<std::uint64_t>(i)));
        Vector row(p);
        sample_core_row(family, dof, rng, row);
        z.row(i) = row.transpose();
    });
    return z;
}

double radial_cdf(Family family, int dof, double r) {
    if (r < 0.0) throw ValidationError("radial_cdf: r must be >= 0");
    if (family == Family::Normal) return dist::normal_cdf(r);
    // Unit-variance t marginal: Z_1 = T * sqrt((dof-2)/dof).
    const double nu = static_cast<double>(dof);
    return dist::student_t_cdf(r * std::sqrt(nu / (nu - 2.0)), nu);
}

double radial_cdf(const EllipticalModel& model, double r) {
    return radial_cdf(model.family, model.dof, r);
}

double marginal_mad(Family family, int dof) {
    if (family == Family::Normal) return dist::normal_quantile(0.75);
    const double nu = static_cast<double>(dof);
    return dist::student_t_quantile(0.75, nu) * std::sqrt((nu - 2.0) / nu);
}

}  // namespace robsign
