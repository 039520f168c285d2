#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

bool negligible(const Vector4& v) {
  return v.cwiseAbs().maxCoeff() < kPruneThreshold;
}

}  // namespace

double InitialState::norm_squared() const {
  return std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(mu);
}

double InitialState::norm_defect() const { return std::abs(norm_squared() - 1.0); }

WalkState WalkState::from_sites(TimeStep time, const std::map<Position, Vector4>& sites) {
  WalkState state;
  state.time_ = time;
  if (sites.empty()) {
    return state;
  }
  state.first_ = sites.begin()->first;
  const Position last = sites.rbegin()->first;
  state.sites_.assign(static_cast<std::size_t>(last - state.first_ + 1), Vector4::Zero());
  for (const auto& [x, v] : sites) {
    state.sites_[static_cast<std::size_t>(x - state.first_)] = v;
  }
  state.trim();
  return state;
}

Vector4 WalkState::amplitude(Position x) const {
  if (sites_.empty() || x < first_ || x > max_position()) {
    return Vector4::Zero();
  }
  return sites_[static_cast<std::size_t>(x - first_)];
}

std::map<Position, Vector4> WalkState::sites() const {
  std::map<Position, Vector4> out;
  for_each_site([&](Position x, const Vector4& v) { out.emplace(x, v); });
  return out;
}

double WalkState::norm_squared() const {
  double total = 0.0;
  for (const auto& v : sites_) {
    total += v.squaredNorm();
  }
  return total;
}

double WalkState::max_difference(const WalkState& other) const {
  if (empty() && other.empty()) {
    return 0.0;
  }
  Position lo = 0;
  Position hi = -1;
  if (!empty()) {
    lo = min_position();
    hi = max_position();
  }
  if (!other.empty()) {
    lo = empty() ? other.min_position() : std::min(lo, other.min_position());
    hi = empty() ? other.max_position() : std::max(hi, other.max_position());
  }
  double worst = 0.0;
  for (Position x = lo; x <= hi; ++x) {
    worst = std::max(worst, (amplitude(x) - other.amplitude(x)).cwiseAbs().maxCoeff());
  }
  return worst;
}

void WalkState::trim() {
  std::size_t front = 0;
  while (front < sites_.size() && negligible(sites_[front])) {
    ++front;
  }
  std::size_t back = sites_.size();
  while (back > front && negligible(sites_[back - 1])) {
    --back;
  }
  if (front == back) {
    sites_.clear();
    first_ = 0;
    return;
  }
  sites_.erase(sites_.begin() + static_cast<std::ptrdiff_t>(back), sites_.end());
  sites_.erase(sites_.begin(), sites_.begin() + static_cast<std::ptrdiff_t>(front));
  first_ += static_cast<Position>(front);
}

double Distribution::at(Position x) const {
  const auto it = probabilities.find(x);
  return it == probabilities.end() ? 0.0 : it->second;
}

double Distribution::total() const {
  double sum = 0.0;
  for (const auto& [x, p] : probabilities) {
    sum += p;
  }
  return sum;
}

WalkState make_initial(const InitialState& init) {
  const double defect = init.norm_defect();
  if (!(defect <= kInitialNormTolerance)) {
    std::ostringstream msg;
    msg << "initial state is not normalized (norm defect " << defect << ")";
    throw ValidationError(msg.str(), defect);
  }
  return WalkState::from_sites(0, {{0, init.as_vector()}});
}

WalkState step(const WalkState& state, const CoinMatrix& coin) {
  WalkState next;
  next.time_ = state.time_ + 1;
  if (state.empty()) {
    return next;
  }
  // Site x of the old block feeds x-1 through P and x+1 through R.
  const std::size_t n = state.sites_.size();
  next.first_ = state.first_ - 1;
  next.sites_.assign(n + 2, Vector4::Zero());
  const auto left = coin.u().topRows<2>();
  const auto right = coin.u().bottomRows<2>();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector4& psi = state.sites_[i];
    next.sites_[i].head<2>() += left * psi;
    next.sites_[i + 2].tail<2>() += right * psi;
  }
  next.trim();
  return next;
}

WalkState evolve(WalkState state, const CoinMatrix& coin, TimeStep steps) {
  if (steps < 0) {
    throw PreconditionError("evolve requires steps >= 0");
  }
  for (TimeStep s = 0; s < steps; ++s) {
    state = step(state, coin);
  }
  return state;
}

Distribution distribution(const WalkState& state) {
  Distribution dist;
  dist.time = state.time();
  state.for_each_site([&](Position x, const Vector4& v) {
    const double p = v.squaredNorm();
    if (p > 0.0) {
      dist.probabilities.emplace(x, p);
    }
  });
  return dist;
}

double moment(const Distribution& dist, int r) {
  if (r < 0) {
    throw PreconditionError("moment order must be nonnegative");
  }
  double sum = 0.0;
  for (const auto& [x, p] : dist.probabilities) {
    sum += std::pow(static_cast<double>(x), r) * p;
  }
  return sum;
}

OriginSequence origin_probability_sequence(const CoinMatrix& coin, const InitialState& init,
                                           Position x, TimeStep max_t) {
  if (max_t < 1) {
    throw PreconditionError("origin_probability_sequence requires max_t >= 1");
  }
  OriginSequence out;
  out.probabilities.reserve(static_cast<std::size_t>(max_t) + 1);
  WalkState state = make_initial(init);
  for (TimeStep t = 0;; ++t) {
    out.probabilities.push_back(state.amplitude(x).squaredNorm());
    if (t == max_t) {
      break;
    }
    state = step(state, coin);
  }
  out.period = detect_period(out.probabilities);
  return out;
}

}  // namespace qwalk
