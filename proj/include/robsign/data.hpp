#pragma once

#include <string>
#include <vector>

#include "robsign/linalg.hpp"

namespace robsign {

// Observation matrix, one row per observation, with column names carried
// along from file ingestion (empty for synthetic data).
struct DataMatrix {
    Matrix x;
    std::vector<std::string> columns;

    DataMatrix() = default;
    explicit DataMatrix(Matrix m) : x(std::move(m)) {}

    Eigen::Index rows() const { return x.rows(); }
    Eigen::Index cols() const { return x.cols(); }
};

}  // namespace robsign
