#include "robsign/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "robsign/distributions.hpp"
#include "robsign/errors.hpp"
#include "robsign/location.hpp"
#include "robsign/scatter.hpp"

namespace robsign {

const char* weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::Unit: return "unit";
        case WeightKind::Hsd: return "hsd";
        case WeightKind::Mhd: return "mhd";
        case WeightKind::Pd: return "pd";
        case WeightKind::Distance: return "distance";
    }
    return "?";
}

std::optional<WeightKind> parse_weight_kind(const std::string& name) {
    if (name == "unit") return WeightKind::Unit;
    if (name == "hsd") return WeightKind::Hsd;
    if (name == "mhd") return WeightKind::Mhd;
    if (name == "pd") return WeightKind::Pd;
    if (name == "distance") return WeightKind::Distance;
    return std::nullopt;
}

WeightSpec WeightSpec::unit(double scale) {
    WeightSpec s;
    s.kind = WeightKind::Unit;
    s.scale_factor = scale;
    return s;
}

WeightSpec WeightSpec::make(WeightKind kind, Vector center, Matrix shape, double scale) {
    WeightSpec s;
    s.kind = kind;
    s.center = std::move(center);
    s.shape = std::move(shape);
    s.scale_factor = scale;
    if (s.scale_factor <= 0.0) throw ValidationError("weight scale_factor must be > 0");
    if (kind != WeightKind::Unit) check_spd(s.shape, "weight shape");
    return s;
}

namespace {

Vector coordinatewise_median(const Matrix& x) {
    Vector med(x.cols());
    std::vector<double> col(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        for (Eigen::Index i = 0; i < x.rows(); ++i) col[static_cast<std::size_t>(i)] = x(i, j);
        med[j] = median_inplace(col);
    }
    return med;
}

Matrix mad_diagonal_shape(const Matrix& x, const Vector& center) {
    Vector d(x.cols());
    std::vector<double> col(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            col[static_cast<std::size_t>(i)] = std::abs(x(i, j) - center[j]);
        d[j] = median_inplace(col);
        if (d[j] <= 0.0) d[j] = 1.0;
        d[j] *= d[j];
    }
    const double logdet = d.array().log().sum();
    d *= std::exp(-logdet / static_cast<double>(d.size()));
    return d.asDiagonal();
}

}  // namespace

double median_inplace(std::vector<double>& v) {
    if (v.empty()) throw ValidationError("median of empty range");
    const std::size_t n = v.size();
    const std::size_t h = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(h), v.end());
    double m = v[h];
    if (n % 2 == 0) {
        const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(h));
        m = 0.5 * (m + lo);
    }
    return m;
}

WeightSpec WeightSpec::pilot(WeightKind kind, const DataMatrix& data, double scale) {
    if (kind == WeightKind::Unit) return WeightSpec::unit(scale);
    const Eigen::Index n = data.rows(), p = data.cols();
    WeightSpec s;
    s.kind = kind;
    s.scale_factor = scale;

    Vector center = coordinatewise_median(data.x);
    if (n > p + 1) {
        Matrix shape = tyler(data, center).matrix;
        // one refinement pass: spatial median, then Tyler about it
        center = weighted_spatial_median(data, WeightSpec::unit(), 1e-9, 500).q_hat;
        shape = tyler(data, center).matrix;
        const double logdet = shape.llt().matrixL().diagonal().array().log().sum() * 2.0;
        s.shape = shape * std::exp(-logdet / static_cast<double>(p));
    } else {
        s.shape = mad_diagonal_shape(data.x, center);
    }
    s.center = std::move(center);
    return s;
}

void WeightSpec::check_dim(Eigen::Index p) const {
    if (kind == WeightKind::Unit) return;
    if (center.size() != p || shape.rows() != p || shape.cols() != p) {
        std::ostringstream os;
        os << "weight spec dimension mismatch: data has p=" << p << ", spec center "
           << center.size() << ", shape " << shape.rows() << "x" << shape.cols();
        throw ValidationError(os.str());
    }
}

Vector spatial_sign(const Vector& x, const Vector& mu) {
    if (x.size() != mu.size()) throw ValidationError("spatial_sign: dimension mismatch");
    Vector d = x - mu;
    const double norm = d.norm();
    if (norm < 1e-300) return Vector::Zero(x.size());
    return d / norm;
}

double population_radial_weight(WeightKind kind, Family family, int dof, double r,
                                double scale) {
    switch (kind) {
        case WeightKind::Unit: return scale;
        case WeightKind::Mhd: return scale * r * r / (1.0 + r * r);
        case WeightKind::Hsd: return scale * radial_cdf(family, dof, r);
        case WeightKind::Pd: {
            const double m = marginal_mad(family, dof);
            return scale * r / (1.0 + r / m);
        }
        case WeightKind::Distance:
            throw ValidationError("distance weight has no population radial form");
    }
    return 0.0;
}

double weight(const WeightSpec& spec, const Vector& x, const EllipticalModel* model) {
    if (spec.kind == WeightKind::Unit) return spec.scale_factor;
    spec.check_dim(x.size());
    if (spec.kind == WeightKind::Distance)
        return spec.scale_factor * (x - spec.center).norm();
    const double r = (spd_inv_sqrt(spec.shape) * (x - spec.center)).norm();
    if (spec.kind == WeightKind::Mhd) return spec.scale_factor * r * r / (1.0 + r * r);
    if (model == nullptr)
        throw ValidationError("population-mode HSD/PD weight needs the elliptical model");
    return population_radial_weight(spec.kind, model->family, model->dof, r,
                                    spec.scale_factor);
}

EmpiricalWeights::EmpiricalWeights(const DataMatrix& data, const WeightSpec& spec)
    : spec_(spec) {
    const Eigen::Index n = data.rows(), p = data.cols();
    if (n < 1) throw ValidationError("empirical weights need at least one observation");
    spec_.check_dim(p);
    if (spec_.kind == WeightKind::Unit) return;
    if (spec_.kind == WeightKind::Distance) {
        raw_ = data;
        return;
    }

    inv_sqrt_shape_ = spd_inv_sqrt(spec_.shape);
    radii_.resize(n);
    for (Eigen::Index i = 0; i < n; ++i)
        radii_[i] = (inv_sqrt_shape_ * (data.x.row(i).transpose() - spec_.center)).norm();

    if (spec_.kind == WeightKind::Hsd) {
        sorted_radii_.assign(radii_.data(), radii_.data() + n);
        std::sort(sorted_radii_.begin(), sorted_radii_.end());
    } else if (spec_.kind == WeightKind::Pd) {
        // Median of |Z_1| under the plug-in radial law: each observed radius
        // contributes the known direction distribution |U_1|, whose square is
        // Beta(1/2, (p-1)/2).  Depends on the radii only, so it is invariant
        // under affine re-standardization.
        const double rmax = radii_.maxCoeff();
        if (rmax <= 0.0)
            throw NumericalError("projection depth MAD: all standardized radii are zero");
        auto mixture_cdf = [&](double t) {
            double acc = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double r = radii_[i];
                if (r <= t) {
                    acc += 1.0;
                } else if (p == 1) {
                    // |Z_1| = r exactly
                } else {
                    const double s = t / r;
                    acc += dist::beta_cdf(s * s, 0.5, 0.5 * static_cast<double>(p - 1));
                }
            }
            return acc / static_cast<double>(n);
        };
        double lo = 0.0, hi = rmax;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * rmax; ++it) {
            const double mid = 0.5 * (lo + hi);
            (mixture_cdf(mid) < 0.5 ? lo : hi) = mid;
        }
        pd_m_ = 0.5 * (lo + hi);
        if (pd_m_ <= 0.0)
            throw NumericalError("projection depth MAD degenerated to zero");
    }
}

double EmpiricalWeights::radius_cdf(double r) const {
    const auto it = std::upper_bound(sorted_radii_.begin(), sorted_radii_.end(), r);
    return static_cast<double>(it - sorted_radii_.begin()) /
           static_cast<double>(sorted_radii_.size());
}

double EmpiricalWeights::of_radius(double r) const {
    switch (spec_.kind) {
        case WeightKind::Unit: return spec_.scale_factor;
        case WeightKind::Mhd: return spec_.scale_factor * r * r / (1.0 + r * r);
        case WeightKind::Hsd: return spec_.scale_factor * radius_cdf(r);
        case WeightKind::Pd: return spec_.scale_factor * r / (1.0 + r / pd_m_);
        case WeightKind::Distance:
            throw ValidationError("distance weight is not radial");
    }
    return 0.0;
}

double EmpiricalWeights::of_row(Eigen::Index i) const {
    if (spec_.kind == WeightKind::Unit) return spec_.scale_factor;
    if (spec_.kind == WeightKind::Distance)
        return spec_.scale_factor * (raw_.x.row(i).transpose() - spec_.center).norm();
    return of_radius(radii_[i]);
}

double EmpiricalWeights::at(const Vector& x) const {
    if (spec_.kind == WeightKind::Unit) return spec_.scale_factor;
    if (spec_.kind == WeightKind::Distance)
        return spec_.scale_factor * (x - spec_.center).norm();
    return of_radius((inv_sqrt_shape_ * (x - spec_.center)).norm());
}

Vector EmpiricalWeights::row_weights() const {
    const Eigen::Index n =
        spec_.kind == WeightKind::Unit
            ? 0
            : (spec_.kind == WeightKind::Distance ? raw_.rows() : radii_.size());
    Vector w(n);
    for (Eigen::Index i = 0; i < n; ++i) w[i] = of_row(i);
    return w;
}

std::vector<WeightedSign> weighted_signs(const DataMatrix& data, const WeightSpec& spec,
                                         const Vector& mu) {
    const Eigen::Index n = data.rows(), p = data.cols();
    if (mu.size() != p) throw ValidationError("weighted_signs: mu dimension mismatch");
    spec.check_dim(p);
    EmpiricalWeights ew(data, spec);
    std::vector<WeightedSign> out(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        WeightedSign& ws = out[static_cast<std::size_t>(i)];
        ws.sign = spatial_sign(data.x.row(i).transpose(), mu);
        ws.weight = spec.kind == WeightKind::Unit ? spec.scale_factor : ew.of_row(i);
        ws.product = ws.weight * ws.sign;
    }
    return out;
}

}  // namespace robsign
