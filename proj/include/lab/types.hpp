#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace lab {

using Scalar = double;
using Index  = Eigen::Index;

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Array  = Eigen::ArrayXd;

using Eigen::seq;
using Eigen::seqN;

using u64 = std::uint64_t;
using u32 = std::uint32_t;

} // namespace lab
