#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robsign/data.hpp"
#include "robsign/elliptical.hpp"
#include "robsign/linalg.hpp"

namespace robsign {

// Distance is test-only: w(x) = |x - center| recovers the raw centered
// observations and is unbounded, so no estimator should use it.
enum class WeightKind { Unit, Hsd, Mhd, Pd, Distance };

const char* weight_kind_name(WeightKind k);
std::optional<WeightKind> parse_weight_kind(const std::string& name);

// Which peripherality weight to use plus the standardization pair that
// turns an observation into the spherical coordinate z.
struct WeightSpec {
    WeightKind kind = WeightKind::Unit;
    Vector center;
    Matrix shape;
    double scale_factor = 1.0;

    static WeightSpec unit(double scale = 1.0);
    static WeightSpec make(WeightKind kind, Vector center, Matrix shape, double scale = 1.0);

    // Robust default standardization pair estimated from the data:
    // coordinatewise median -> Tyler shape (unit determinant), iterated once
    // with the spatial median as the refined center.  Falls back to a
    // diagonal MAD^2 shape when n <= p + 1 leaves Tyler infeasible.
    static WeightSpec pilot(WeightKind kind, const DataMatrix& data, double scale = 1.0);

    void check_dim(Eigen::Index p) const;
};

Vector spatial_sign(const Vector& x, const Vector& mu);

struct WeightedSign {
    Vector sign;
    double weight = 0.0;
    Vector product;
};

// Population-mode weight.  HSD and PD need the model family for the marginal
// CDF / MAD constant; Unit, Mhd and Distance ignore it.
double weight(const WeightSpec& spec, const Vector& x, const EllipticalModel* model = nullptr);

// Radial weight profile w(r) in population mode (the scalar function of the
// standardized radius that every depth weight reduces to under ellipticity).
double population_radial_weight(WeightKind kind, Family family, int dof, double r,
                                double scale = 1.0);

// Plug-in weights W(x, F_n): the reference distribution is the empirical law
// of the standardized radii of `data`.  Precomputes the sorted radius table
// (HSD) and the projected-marginal MAD (PD); cheap and reentrant afterwards.
class EmpiricalWeights {
public:
    EmpiricalWeights(const DataMatrix& data, const WeightSpec& spec);

    double of_row(Eigen::Index i) const;
    double at(const Vector& x) const;
    double of_radius(double r) const;

    // All row weights in data order.
    Vector row_weights() const;

    const Vector& radii() const { return radii_; }
    double mad_constant() const { return pd_m_; }
    // Empirical CDF of the standardized radii.
    double radius_cdf(double r) const;

private:
    WeightSpec spec_;
    Matrix inv_sqrt_shape_;
    DataMatrix raw_;  // Distance kind needs the raw rows
    Vector radii_;
    std::vector<double> sorted_radii_;
    double pd_m_ = 0.0;
};

// Rowwise robust surrogates W(X_i, F_n) * S(X_i; mu), weights in empirical
// mode from the same data.
std::vector<WeightedSign> weighted_signs(const DataMatrix& data, const WeightSpec& spec,
                                         const Vector& mu);

}  // namespace robsign
