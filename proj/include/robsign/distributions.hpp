#pragma once

namespace robsign::dist {

double normal_cdf(double x);
double normal_quantile(double p);

// CDF of the Student t distribution with `dof` degrees of freedom.
double student_t_cdf(double x, double dof);
double student_t_quantile(double p, double dof);

double chisq_cdf(double x, double dof);
double chisq_quantile(double p, double dof);

// CDF of Beta(a, b) on [0, 1].
double beta_cdf(double x, double a, double b);

}  // namespace robsign::dist
