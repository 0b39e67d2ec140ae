#pragma once

#include <cstdint>

#include "robsign/data.hpp"
#include "robsign/linalg.hpp"
#include "robsign/rng.hpp"

namespace robsign {

enum class Family { Normal, StudentT };

// Elliptical generative model X = mu + R Gamma Lambda^{1/2} U with sigma
// scaled to be the covariance matrix (so StudentT needs dof >= 3).
struct EllipticalModel {
    Family family = Family::Normal;
    int dof = 0;  // StudentT only
    Vector mu;
    Matrix sigma;

    static EllipticalModel normal(Vector mu, Matrix sigma);
    static EllipticalModel student_t(int dof, Vector mu, Matrix sigma);

    Eigen::Index dim() const { return mu.size(); }
    // Throws ValidationError with an eigenvalue report if sigma is not
    // symmetric positive definite, or the dof is out of range.
    void validate() const;
};

// A draw z from the standardized spherical core, split into radius and
// direction with z = r * u.
struct SphericalSample {
    Vector z;
    double r = 0.0;
    Vector u;
};

SphericalSample spherical_decompose(const Vector& z);

// One core draw Z (E Z = 0, V Z = I) from the caller's stream.
void sample_core_row(Family family, int dof, CounterRng& rng, Eigen::Ref<Vector> z);

// n i.i.d. rows from the model; row i is a pure function of (seed, i) so
// rows can be generated in parallel.
DataMatrix sample(const EllipticalModel& model, Eigen::Index n, std::uint64_t seed);

// Core draws Z with E Z = 0, V Z = I (rows); the family decides the radial
// law.  dof is ignored for the Normal family.
Matrix sample_spherical(Family family, int dof, Eigen::Index p, Eigen::Index n,
                        std::uint64_t seed);

// Marginal CDF F_{Z_1} of the standardized spherical core: the weight
// machinery builds the half-space-depth weight from it.
double radial_cdf(const EllipticalModel& model, double r);
double radial_cdf(Family family, int dof, double r);

// Population median of |Z_1| for the unit-variance marginal (the projection
// depth denominator).
double marginal_mad(Family family, int dof);

}  // namespace robsign
