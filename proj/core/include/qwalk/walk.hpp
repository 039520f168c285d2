#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/sequence.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

inline constexpr double kInitialNormTolerance = 1e-12;

/// Amplitudes below this magnitude are dropped from the edges of the support.
inline constexpr double kPruneThreshold = 1e-15;

/// Amplitudes (alpha, beta, gamma, mu) on chiralities 0..3 at the origin.
struct InitialState {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex mu;

  Vector4 as_vector() const { return Vector4{alpha, beta, gamma, mu}; }
  static InitialState from_vector(const Vector4& v) { return {v(0), v(1), v(2), v(3)}; }

  double norm_squared() const;
  /// |norm_squared() - 1|
  double norm_defect() const;
};

/// psi_t(x) for every lattice site with (possibly) nonzero amplitude.
///
/// Stored densely over the contiguous block [min_position(), max_position()],
/// which is exact for origin-started walks (the support is an interval up to
/// parity holes). Reads outside the block return zero.
class WalkState {
 public:
  WalkState() = default;

  static WalkState from_sites(TimeStep time, const std::map<Position, Vector4>& sites);

  TimeStep time() const { return time_; }
  bool empty() const { return sites_.empty(); }
  Position min_position() const { return first_; }
  Position max_position() const {
    return first_ + static_cast<Position>(sites_.size()) - 1;
  }

  Vector4 amplitude(Position x) const;

  /// Mapping view: every site in the block, zero sites included.
  std::map<Position, Vector4> sites() const;

  double norm_squared() const;

  /// Largest componentwise |difference| over the union of both supports.
  double max_difference(const WalkState& other) const;

  template <typename Fn>
  void for_each_site(Fn&& fn) const {
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      fn(first_ + static_cast<Position>(i), sites_[i]);
    }
  }

 private:
  friend WalkState step(const WalkState& state, const CoinMatrix& coin);

  void trim();

  TimeStep time_ = 0;
  Position first_ = 0;
  std::vector<Vector4> sites_;
};

/// P(X_t = x) for the sites of one state; zero-probability sites omitted.
struct Distribution {
  TimeStep time = 0;
  std::map<Position, double> probabilities;

  double at(Position x) const;
  double total() const;
};

/// t = 0 state with psi_0(0) = (alpha, beta, gamma, mu). Throws
/// ValidationError when the amplitudes are not unit norm within 1e-12.
WalkState make_initial(const InitialState& init);

/// psi_{t+1}(x) = P psi_t(x+1) + R psi_t(x-1).
WalkState step(const WalkState& state, const CoinMatrix& coin);

WalkState evolve(WalkState state, const CoinMatrix& coin, TimeStep steps);

Distribution distribution(const WalkState& state);

/// sum_x x^r P(X_t = x)
double moment(const Distribution& dist, int r);

struct OriginSequence {
  /// probabilities[t] = P(X_t = x) for t = 0..max_t
  std::vector<double> probabilities;
  std::optional<PeriodInfo> period;
};

/// Exact return-probability sequence at site x (x = 0 gives the localization
/// diagnostic lim sup P(X_t = 0)).
OriginSequence origin_probability_sequence(const CoinMatrix& coin, const InitialState& init,
                                           Position x, TimeStep max_t);

}  // namespace qwalk
