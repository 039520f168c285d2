#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qwalk/error.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

// Eigenvalues closer than this are treated as one degenerate cluster.
constexpr double kClusterTolerance = 1e-8;
// Eigenvalue separation below which a branch derivative is refused.
constexpr double kCollisionTolerance = 1e-6;
constexpr double kArgTieTolerance = 1e-10;

void fix_phase(Vector4& v) {
  const double largest = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (std::abs(v(i)) >= largest - 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = Complex{std::abs(v(i)), 0.0};
      return;
    }
  }
}

bool lexicographically_less(const Vector4& lhs, const Vector4& rhs) {
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (lhs(i).real() != rhs(i).real()) {
      return lhs(i).real() < rhs(i).real();
    }
    if (lhs(i).imag() != rhs(i).imag()) {
      return lhs(i).imag() < rhs(i).imag();
    }
  }
  return false;
}

bool ordered_before(const EigenPair& lhs, const EigenPair& rhs) {
  const double a = principal_arg(lhs.value);
  const double b = principal_arg(rhs.value);
  if (std::abs(a - b) > kArgTieTolerance) {
    return a < b;
  }
  return lexicographically_less(lhs.vector, rhs.vector);
}

// Replace the eigenvectors of each degenerate cluster by an orthonormal basis
// of the span they define.
void orthonormalize_clusters(std::array<EigenPair, 4>& pairs) {
  std::array<bool, 4> done{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (done[i]) {
      continue;
    }
    std::vector<std::size_t> cluster{i};
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!done[j] && std::abs(pairs[i].value - pairs[j].value) < kClusterTolerance) {
        cluster.push_back(j);
      }
    }
    for (std::size_t idx : cluster) {
      done[idx] = true;
    }
    if (cluster.size() == 1) {
      continue;
    }
    Eigen::Matrix<Complex, 4, Eigen::Dynamic> block(4, static_cast<Eigen::Index>(cluster.size()));
    for (std::size_t c = 0; c < cluster.size(); ++c) {
      block.col(static_cast<Eigen::Index>(c)) = pairs[cluster[c]].vector;
    }
    Eigen::HouseholderQR<Eigen::Matrix<Complex, 4, Eigen::Dynamic>> qr(block);
    const Matrix4 q = qr.householderQ();
    for (std::size_t c = 0; c < cluster.size(); ++c) {
      pairs[cluster[c]].vector = q.col(static_cast<Eigen::Index>(c));
    }
  }
}

Vector4 apply_power(const Matrix4& m, Vector4 v, TimeStep t) {
  for (TimeStep s = 0; s < t; ++s) {
    v = m * v;
  }
  return v;
}

}  // namespace

double principal_arg(Complex z) {
  double a = std::arg(z);
  if (a >= kPi - 1e-12) {
    a -= 2.0 * kPi;
  }
  return a;
}

MomentumOperator build_momentum_operator(const CoinMatrix& coin, double k) {
  MomentumOperator op;
  op.k = k;
  const Complex forward = std::polar(1.0, k);
  const Complex backward = std::conj(forward);
  op.phases << forward, forward, backward, backward;
  op.uk = op.phases.asDiagonal() * coin.u();
  return op;
}

Eigensystem eigensystem(const MomentumOperator& op) {
  Eigen::ComplexEigenSolver<Matrix4> solver(op.uk, true);
  if (solver.info() != Eigen::Success) {
    throw EigenSolveError("eigen-solver did not converge", std::numeric_limits<double>::infinity());
  }

  Eigensystem out;
  for (Eigen::Index j = 0; j < 4; ++j) {
    auto& pair = out.pairs[static_cast<std::size_t>(j)];
    pair.value = solver.eigenvalues()(j);
    pair.vector = solver.eigenvectors().col(j).normalized();
  }
  orthonormalize_clusters(out.pairs);
  for (auto& pair : out.pairs) {
    fix_phase(pair.vector);
  }

  // Insertion sort: the tie tolerance makes the comparator unsuitable for std::sort.
  for (std::size_t i = 1; i < 4; ++i) {
    for (std::size_t j = i; j > 0 && ordered_before(out.pairs[j], out.pairs[j - 1]); --j) {
      std::swap(out.pairs[j], out.pairs[j - 1]);
    }
  }

  for (const auto& pair : out.pairs) {
    const double residual = (op.uk * pair.vector - pair.value * pair.vector).norm();
    out.max_residual = std::max(out.max_residual, residual);
  }
  if (!(out.max_residual < kEigenResidualTolerance)) {
    std::ostringstream msg;
    msg << "eigen residual " << out.max_residual << " at k = " << op.k
        << " (input not unitary?)";
    throw EigenSolveError(msg.str(), out.max_residual);
  }
  return out;
}

GroupVelocity group_velocity(const CoinMatrix& coin, std::size_t branch, double k, double dk) {
  if (branch > 3) {
    throw PreconditionError("branch index must be in 0..3");
  }
  if (!(dk > 0.0 && dk <= 1e-3)) {
    throw PreconditionError("group_velocity step must lie in (0, 1e-3]");
  }
  const Eigensystem here = eigensystem(build_momentum_operator(coin, k));
  const EigenPair& tracked = here.pairs[branch];
  for (std::size_t j = 0; j < 4; ++j) {
    if (j != branch && std::abs(here.pairs[j].value - tracked.value) < kCollisionTolerance) {
      std::ostringstream msg;
      msg << "branch " << branch << " collides with branch " << j << " at k = " << k;
      throw BranchTrackingError(msg.str(), k);
    }
  }

  auto follow = [&](double kk) {
    const Eigensystem there = eigensystem(build_momentum_operator(coin, kk));
    double best = -1.0;
    double second = -1.0;
    std::size_t best_index = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const double overlap = std::abs(tracked.vector.dot(there.pairs[j].vector));
      if (overlap > best) {
        second = best;
        best = overlap;
        best_index = j;
      } else if (overlap > second) {
        second = overlap;
      }
    }
    if (best < 0.9 || second > 0.5) {
      std::ostringstream msg;
      msg << "ambiguous eigenvector match for branch " << branch << " at k = " << k
          << " (overlaps " << best << ", " << second << ")";
      throw BranchTrackingError(msg.str(), k);
    }
    return there.pairs[best_index].value;
  };

  const Complex ahead = follow(k + dk);
  const Complex behind = follow(k - dk);
  // D log(lambda) = i lambda'/lambda, differenced on log(lambda) so the
  // result is real up to the modulus drift of the eigenvalues.
  const Complex log_ratio = std::log(ahead * std::conj(behind) / std::norm(behind));
  const Complex quotient = Complex{0.0, 1.0} * log_ratio / (2.0 * dk);
  return {quotient.real(), quotient.imag()};
}

std::array<double, 4> overlap_density(const Eigensystem& eig, const Vector4& psi0) {
  std::array<double, 4> out{};
  for (std::size_t j = 0; j < 4; ++j) {
    out[j] = std::norm(eig.pairs[j].vector.dot(psi0));
  }
  return out;
}

std::array<double, 4> overlap_density(const Eigensystem& eig, const InitialState& init) {
  return overlap_density(eig, init.as_vector());
}

std::vector<double> k_grid(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("k grid needs at least one point");
  }
  std::vector<double> grid(n);
  for (std::size_t m = 0; m < n; ++m) {
    grid[m] = -kPi + 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n);
  }
  return grid;
}

std::vector<SpectralSample> sample_spectrum(const CoinMatrix& coin, const InitialState& init,
                                            std::size_t grid_size, double dk) {
  const std::vector<double> ks = k_grid(grid_size);
  const Vector4 psi0 = init.as_vector();
  std::vector<SpectralSample> samples(grid_size);
  parallel_for(grid_size, [&](std::size_t m) {
    SpectralSample& s = samples[m];
    s.k = ks[m];
    s.eig = eigensystem(build_momentum_operator(coin, s.k));
    s.overlaps = overlap_density(s.eig, psi0);
    std::array<double, 4> h{};
    try {
      for (std::size_t j = 0; j < 4; ++j) {
        const GroupVelocity v = group_velocity(coin, j, s.k, dk);
        if (std::abs(v.imaginary_residue) > 1e-8) {
          std::ostringstream msg;
          msg << "non-real velocity on branch " << j << " (residue " << v.imaginary_residue
              << ")";
          throw BranchTrackingError(msg.str(), s.k);
        }
        h[j] = v.value;
      }
      s.group_velocities = h;
    } catch (const BranchTrackingError& e) {
      s.warning = e.what();
    }
  });
  return samples;
}

WalkState fourier_propagate(const CoinMatrix& coin, const InitialState& init, TimeStep t,
                            std::size_t ring_size) {
  if (t < 0) {
    throw PreconditionError("fourier_propagate requires t >= 0");
  }
  const auto n = static_cast<std::int64_t>(ring_size);
  if (ring_size % 2 != 0 || n < 2 * t + 3) {
    std::ostringstream msg;
    msg << "ring size " << ring_size << " must be even and at least 2t+3 = " << 2 * t + 3;
    throw PreconditionError(msg.str());
  }
  const WalkState start = make_initial(init);
  if (t == 0) {
    return start;
  }

  // k_m = 2 pi (m - N/2) / N; the transform of an origin state is constant.
  const Vector4 psi0 = init.as_vector();
  std::vector<Vector4> evolved(ring_size);
  parallel_for(ring_size, [&](std::size_t m) {
    const std::int64_t wave = static_cast<std::int64_t>(m) - n / 2;
    const double k = 2.0 * kPi * static_cast<double>(wave) / static_cast<double>(n);
    evolved[m] = apply_power(build_momentum_operator(coin, k).uk, psi0, t);
  });

  std::vector<Complex> roots(ring_size);
  for (std::int64_t j = 0; j < n; ++j) {
    roots[static_cast<std::size_t>(j)] =
        std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
  }

  std::map<Position, Vector4> sites;
  for (Position x = -t; x <= t; ++x) {
    Vector4 acc = Vector4::Zero();
    for (std::int64_t m = 0; m < n; ++m) {
      const std::int64_t phase = (((m - n / 2) * x) % n + n) % n;
      acc += roots[static_cast<std::size_t>(phase)] * evolved[static_cast<std::size_t>(m)];
    }
    sites.emplace(x, acc / static_cast<double>(n));
  }
  return WalkState::from_sites(t, sites);
}

}  // namespace qwalk
