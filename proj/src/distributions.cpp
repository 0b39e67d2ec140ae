#include "robsign/distributions.hpp"

#include <gsl/gsl_cdf.h>

namespace robsign::dist {

double normal_cdf(double x) { return gsl_cdf_ugaussian_P(x); }
double normal_quantile(double p) { return gsl_cdf_ugaussian_Pinv(p); }

double student_t_cdf(double x, double dof) { return gsl_cdf_tdist_P(x, dof); }
double student_t_quantile(double p, double dof) { return gsl_cdf_tdist_Pinv(p, dof); }

double chisq_cdf(double x, double dof) { return gsl_cdf_chisq_P(x, dof); }
double chisq_quantile(double p, double dof) { return gsl_cdf_chisq_Pinv(p, dof); }

double beta_cdf(double x, double a, double b) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return gsl_cdf_beta_P(x, a, b);
}

}  // namespace robsign::dist
