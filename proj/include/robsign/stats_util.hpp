#pragma once

#include <vector>

namespace robsign {

// Median with the usual midpoint convention for even lengths; reorders v.
double median_inplace(std::vector<double>& v);
double median_of(std::vector<double> v);

// Median absolute deviation about the median, times the 1.4826 normal
// consistency constant.
double mad_normal_consistent(const std::vector<double>& v);

}  // namespace robsign
