#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

double CoinSpec::unitarity_defect() const {
  const double col0 = std::norm(a) + std::norm(b) - 1.0;
  const double col1 = std::norm(c) + std::norm(d) - 1.0;
  const double cross = std::abs(std::conj(a) * c + std::conj(b) * d);
  return std::max({std::abs(col0), std::abs(col1), cross});
}

Chirality chirality_from_index(int index) {
  if (index < 0 || index > 3) {
    throw PreconditionError("chirality index " + std::to_string(index) +
                            " outside {0,1,2,3}");
  }
  return static_cast<Chirality>(index);
}

CoinMatrix::CoinMatrix(const CoinSpec& spec) : spec_(spec) {
  u_.setZero();
  u_(0, 2) = spec.a;
  u_(0, 3) = spec.c;
  u_(1, 0) = spec.b;
  u_(1, 1) = spec.d;
  u_(2, 0) = spec.a;
  u_(2, 1) = spec.c;
  u_(3, 2) = spec.b;
  u_(3, 3) = spec.d;

  p_.setZero();
  r_.setZero();
  p_.topRows<2>() = u_.topRows<2>();
  r_.bottomRows<2>() = u_.bottomRows<2>();
}

double CoinMatrix::unitarity_defect() const {
  const Matrix4 gram = u_.adjoint() * u_ - Matrix4::Identity();
  return gram.cwiseAbs().maxCoeff();
}

CoinMatrix build_general_coin(const CoinSpec& spec) {
  const double defect = spec.unitarity_defect();
  if (!(defect <= kCoinTolerance)) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "coin [[a,c],[b,d]] is not unitary (defect " << std::scientific
        << defect << ")";
    throw ValidationError(msg.str(), defect);
  }
  return CoinMatrix(spec);
}

CoinMatrix build_grover_coin() {
  return build_general_coin({Complex{0.0}, Complex{1.0}, Complex{1.0}, Complex{0.0}});
}

CoinMatrix build_hadamard_coin() {
  const double s = 1.0 / std::sqrt(2.0);
  return build_general_coin({Complex{s}, Complex{s}, Complex{s}, Complex{-s}});
}

Eigen::MatrixXcd grover_diffusion(std::size_t dim) {
  if (dim == 0) {
    throw PreconditionError("grover_diffusion requires dim >= 1");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  const double off = 2.0 / static_cast<double>(dim);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Constant(n, n, Complex{off});
  g.diagonal().array() -= Complex{1.0};
  return g;
}

}  // namespace qwalk
