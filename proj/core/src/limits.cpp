#include "qwalk/limits.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kLocalizedBranchTolerance = 1e-8;

std::size_t unique_branch(const Eigensystem& eig, Complex target, double k) {
  std::size_t found = 4;
  for (std::size_t j = 0; j < 4; ++j) {
    if (std::abs(eig.pairs[j].value - target) < kLocalizedBranchTolerance) {
      if (found != 4) {
        std::ostringstream msg;
        msg << "eigenvalue " << target.real() << " is degenerate at k = " << k;
        throw BranchTrackingError(msg.str(), k);
      }
      found = j;
    }
  }
  if (found == 4) {
    std::ostringstream msg;
    msg << "no eigenvalue " << target.real() << " at k = " << k;
    throw BranchTrackingError(msg.str(), k);
  }
  return found;
}

}  // namespace

Theorem1Prediction theorem1_predict(const InitialState& init) {
  const auto& [alpha, beta, gamma, mu] = init;
  Theorem1Prediction out;
  out.even_limit = std::norm(mu) + 0.25 * (std::norm(gamma) + std::norm(beta) + std::norm(alpha));
  out.odd_limit = 0.25 + (std::conj(alpha) * mu).imag() + (std::conj(gamma) * beta).imag() +
                  std::norm(mu) + std::norm(beta);
  out.offsite_limit = 0.0;
  return out;
}

ParitySequences oracle_stationary(const CoinMatrix& coin, const InitialState& init, Position x,
                                  TimeStep max_t) {
  if (max_t < 8) {
    throw PreconditionError("oracle_stationary requires max_t >= 8");
  }
  const OriginSequence all = origin_probability_sequence(coin, init, x, max_t);
  ParitySequences out;
  for (std::size_t t = 0; t < all.probabilities.size(); ++t) {
    (t % 2 == 0 ? out.even : out.odd).push_back(all.probabilities[t]);
  }
  out.even_period = detect_period(out.even);
  out.odd_period = detect_period(out.odd);
  return out;
}

double delta_mass_quadrature(const CoinMatrix& coin, const InitialState& init,
                             std::size_t grid_size, BranchSelection selection) {
  if (grid_size < 64) {
    throw PreconditionError("delta_mass_quadrature requires grid_size >= 64");
  }
  const std::vector<double> ks = k_grid(grid_size);
  const Vector4 psi0 = init.as_vector();
  std::vector<double> mass(grid_size, 0.0);
  parallel_for(grid_size, [&](std::size_t m) {
    const Eigensystem eig = eigensystem(build_momentum_operator(coin, ks[m]));
    const std::array<double, 4> w = overlap_density(eig, psi0);
    if (selection == BranchSelection::kAll) {
      mass[m] = w[0] + w[1] + w[2] + w[3];
      return;
    }
    mass[m] = w[unique_branch(eig, Complex{-1.0, 0.0}, ks[m])] +
              w[unique_branch(eig, Complex{1.0, 0.0}, ks[m])];
  });
  // Periodic trapezoid rule: equal weights 1/N.
  double total = 0.0;
  for (double v : mass) {
    total += v;
  }
  return total / static_cast<double>(grid_size);
}

DeltaClosedForms delta_paper_value(const InitialState& init) {
  const Complex i{0.0, 1.0};
  return {0.5 * init.alpha * init.mu * i, 0.5 * init.mu * i};
}

double konno_density(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    return 0.0;
  }
  const double radicand = 1.0 - 2.0 * x * x;
  if (!(radicand > 0.0) || x >= 1.0 / std::sqrt(2.0)) {
    std::ostringstream msg;
    msg << "f_K(" << x << ") is not real: 1 - 2x^2 = " << radicand << " <= 0";
    throw DomainError(msg.str());
  }
  return 1.0 / (kPi * (1.0 - x * x) * std::sqrt(radicand));
}

LimitMeasure limit_measure(const CoinMatrix& coin, const InitialState& init,
                           std::size_t grid_size) {
  LimitMeasure measure;
  measure.delta_mass = Complex{delta_mass_quadrature(coin, init, grid_size), 0.0};
  return measure;
}

std::vector<double> limit_moments_spectral(const CoinMatrix& coin, const InitialState& init,
                                           int r_max, std::size_t grid_size) {
  if (r_max < 1) {
    throw PreconditionError("limit_moments_spectral requires r_max >= 1");
  }
  const std::vector<SpectralSample> samples = sample_spectrum(coin, init, grid_size);
  std::vector<double> moments(static_cast<std::size_t>(r_max), 0.0);
  for (const SpectralSample& s : samples) {
    if (!s.group_velocities) {
      throw BranchTrackingError(s.warning, s.k);
    }
    for (std::size_t j = 0; j < 4; ++j) {
      double power = 1.0;
      for (int r = 1; r <= r_max; ++r) {
        power *= (*s.group_velocities)[j];
        moments[static_cast<std::size_t>(r - 1)] += power * s.overlaps[j];
      }
    }
  }
  for (double& m : moments) {
    m /= static_cast<double>(grid_size);
  }
  return moments;
}

std::vector<double> empirical_rescaled_moments(const CoinMatrix& coin, const InitialState& init,
                                               TimeStep t, int r_max) {
  if (t < 1) {
    throw PreconditionError("empirical_rescaled_moments requires t >= 1");
  }
  if (r_max < 1) {
    throw PreconditionError("empirical_rescaled_moments requires r_max >= 1");
  }
  const Distribution dist = distribution(evolve(make_initial(init), coin, t));
  std::vector<double> moments(static_cast<std::size_t>(r_max), 0.0);
  for (const auto& [x, p] : dist.probabilities) {
    const double v = static_cast<double>(x) / static_cast<double>(t);
    double power = 1.0;
    for (int r = 1; r <= r_max; ++r) {
      power *= v;
      moments[static_cast<std::size_t>(r - 1)] += power * p;
    }
  }
  return moments;
}

}  // namespace qwalk
