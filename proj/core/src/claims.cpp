#include "qwalk/claims.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qwalk/error.hpp"
#include "qwalk/limits.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/sequence.hpp"

namespace qwalk {

namespace {

constexpr double kLocalizationThreshold = 1e-9;

// Every pairwise discrepancy between prediction and observation; empty when
// the two cannot be compared.
std::vector<double> discrepancies(const ClaimValue& predicted, const ClaimValue& observed) {
  auto as_complex_list = [](const ClaimValue& v) -> std::vector<Complex> {
    if (const auto* d = std::get_if<double>(&v)) {
      return {Complex{*d, 0.0}};
    }
    if (const auto* c = std::get_if<Complex>(&v)) {
      return {*c};
    }
    if (const auto* s = std::get_if<std::vector<double>>(&v)) {
      return {s->begin(), s->end()};
    }
    return {};
  };
  const std::vector<Complex> p = as_complex_list(predicted);
  const std::vector<Complex> o = as_complex_list(observed);
  std::vector<double> out;
  if (p.empty() || o.empty()) {
    return out;
  }
  if (p.size() == 1) {
    for (const Complex& v : o) {
      out.push_back(std::abs(p.front() - v));
    }
  } else if (p.size() == o.size()) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      out.push_back(std::abs(p[i] - o[i]));
    }
  }
  return out;
}

std::string format_values(const std::vector<double>& values) {
  std::ostringstream out;
  out.precision(12);
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? ", " : "") << values[i];
  }
  out << '}';
  return out.str();
}

std::string describe(const LimitBehavior& behavior) {
  switch (behavior.kind) {
    case LimitKind::kConvergent:
      return "oracle sequence converged to " + format_values(behavior.values);
    case LimitKind::kPeriodic:
      return "oracle sequence periodic with period " + std::to_string(behavior.period) +
             ", cycle " + format_values(behavior.values);
    case LimitKind::kUndetermined:
      break;
  }
  return "oracle sequence neither converged nor became periodic; observed holds its last quarter";
}

bool settled(const LimitBehavior& behavior) {
  return behavior.kind != LimitKind::kUndetermined;
}

ClaimReport sequence_claim(std::string id, double predicted, const std::vector<double>& sequence,
                           std::string notes) {
  const LimitBehavior behavior = classify_limit(sequence);
  ClaimReport report;
  report.claim_id = std::move(id);
  report.predicted = predicted;
  report.observed = behavior.values;
  report.tolerance = kFormulaTolerance;
  report.verdict = judge(report.predicted, report.observed, report.tolerance, settled(behavior));
  report.notes = describe(behavior);
  if (!notes.empty()) {
    report.notes += "; " + notes;
  }
  return report;
}

std::string range_note(const char* which, double value) {
  if (value >= 0.0 && value <= 1.0) {
    return {};
  }
  std::ostringstream out;
  out.precision(12);
  out << "predicted " << which << " limit " << value
      << " lies outside [0, 1] and cannot be a probability";
  return out.str();
}

std::string complex_note(const char* which, Complex value) {
  std::ostringstream out;
  out.precision(12);
  out << which << " closed form = " << value.real() << (value.imag() < 0 ? " - " : " + ")
      << std::abs(value.imag()) << "i";
  if (value.imag() != 0.0) {
    out << " (non-real, cannot be a probability mass)";
  }
  return out.str();
}

ClaimReport delta_claim(std::string id, Complex predicted, const ClaimValue& reference,
                        const std::string& reference_note, const char* which) {
  ClaimReport report;
  report.claim_id = std::move(id);
  report.predicted = predicted;
  report.observed = reference;
  report.tolerance = kFormulaTolerance;
  report.verdict = judge(report.predicted, report.observed, report.tolerance, true);
  report.notes = complex_note(which, predicted) + "; " + reference_note;
  return report;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConfirmed:
      return "CONFIRMED";
    case Verdict::kRefuted:
      return "REFUTED";
    case Verdict::kInconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

Verdict judge(const ClaimValue& predicted, const ClaimValue& observed, double tolerance,
              bool observation_settled) {
  const std::vector<double> gaps = discrepancies(predicted, observed);
  if (gaps.empty()) {
    return Verdict::kInconclusive;
  }
  const bool within = std::all_of(gaps.begin(), gaps.end(),
                                  [&](double g) { return g <= tolerance; });
  if (within) {
    return Verdict::kConfirmed;
  }
  return observation_settled ? Verdict::kRefuted : Verdict::kInconclusive;
}

std::vector<ClaimReport> audit_claims(const CoinMatrix& coin, const InitialState& init,
                                      const AuditConfig& config) {
  const Theorem1Prediction t1 = theorem1_predict(init);
  const TimeStep horizon = config.horizon;

  struct Task {
    std::string id;
    std::function<ClaimReport()> run;
  };
  std::vector<Task> tasks;

  tasks.push_back({"theorem1.even", [&] {
    const ParitySequences seq = oracle_stationary(coin, init, 0, horizon);
    return sequence_claim("theorem1.even", t1.even_limit, seq.even,
                          range_note("even", t1.even_limit));
  }});
  tasks.push_back({"theorem1.odd", [&] {
    const ParitySequences seq = oracle_stationary(coin, init, 0, horizon);
    return sequence_claim("theorem1.odd", t1.odd_limit, seq.odd,
                          range_note("odd", t1.odd_limit));
  }});
  for (const Position x : config.offsite_positions) {
    tasks.push_back({"theorem1.offsite.x=" + std::to_string(x), [&, x] {
      const OriginSequence seq = origin_probability_sequence(coin, init, x, horizon);
      return sequence_claim("theorem1.offsite.x=" + std::to_string(x), t1.offsite_limit,
                            seq.probabilities, {});
    }});
  }

  tasks.push_back({"localization", [&] {
    const OriginSequence seq = origin_probability_sequence(coin, init, 0, horizon);
    const LimitBehavior behavior = classify_limit(seq.probabilities);
    ClaimReport report;
    report.claim_id = "localization";
    report.predicted = 1.0;
    report.tolerance = 0.0;
    std::ostringstream notes;
    notes.precision(12);
    notes << "indicator of lim sup_t P(X_t = 0) > 0; " << describe(behavior);
    if (settled(behavior)) {
      const double limsup = *std::max_element(behavior.values.begin(), behavior.values.end());
      report.observed = limsup > kLocalizationThreshold ? 1.0 : 0.0;
      notes << "; lim sup = " << limsup;
    }
    report.verdict = judge(report.predicted, report.observed, report.tolerance, settled(behavior));
    report.notes = notes.str();
    return report;
  }});

  // The three delta readings share one reference value.
  ClaimValue reference;
  std::string reference_note;
  try {
    const double mass = delta_mass_quadrature(coin, init, config.k_grid);
    reference = mass;
    std::ostringstream out;
    out.precision(12);
    out << "reference = localized-branch quadrature " << mass << " on " << config.k_grid
        << " points";
    reference_note = out.str();
  } catch (const Error& e) {
    reference_note = std::string("reference quadrature unavailable: ") + e.what();
  }
  const DeltaClosedForms closed = delta_paper_value(init);

  tasks.push_back({"delta.derivation", [&] {
    return delta_claim("delta.derivation", closed.derivation, reference, reference_note,
                       "derivation (alpha mu i / 2)");
  }});
  tasks.push_back({"delta.theorem", [&] {
    return delta_claim("delta.theorem", closed.theorem, reference, reference_note,
                       "theorem statement (mu i / 2)");
  }});
  tasks.push_back({"delta.completeness", [&] {
    ClaimReport report;
    report.claim_id = "delta.completeness";
    report.predicted = 1.0;
    report.tolerance = kQuadratureTolerance;
    try {
      report.observed = delta_mass_quadrature(coin, init, config.k_grid, BranchSelection::kAll);
      report.notes = "sum over all four branches of the k-averaged overlap density";
    } catch (const Error& e) {
      report.notes = e.what();
    }
    report.verdict = judge(report.predicted, report.observed, report.tolerance, true);
    return report;
  }});

  tasks.push_back({"theorem2.moments", [&] {
    ClaimReport report;
    report.claim_id = "theorem2.moments";
    report.predicted = std::vector<double>(static_cast<std::size_t>(config.r_max), 0.0);
    report.tolerance = kFormulaTolerance;

    // Raw and rescaled moment sequences along one exact evolution.
    const auto r_count = static_cast<std::size_t>(config.r_max);
    std::vector<std::vector<double>> raw(r_count);
    std::vector<std::vector<double>> rescaled(r_count);
    WalkState state = make_initial(init);
    for (TimeStep t = 0; t <= horizon; ++t) {
      const Distribution dist = distribution(state);
      for (std::size_t r = 0; r < r_count; ++r) {
        const double m = moment(dist, static_cast<int>(r + 1));
        raw[r].push_back(m);
        if (t >= 1) {
          rescaled[r].push_back(m / std::pow(static_cast<double>(t), static_cast<double>(r + 1)));
        }
      }
      if (t < horizon) {
        state = step(state, coin);
      }
    }

    const bool bounded = std::all_of(raw.begin(), raw.end(), [](const std::vector<double>& s) {
      return settled(classify_limit(s));
    });
    std::ostringstream notes;
    notes.precision(12);
    notes << "prediction reads the delta mass as the whole limit measure, so "
             "lim E[(X_t/t)^r] = 0 for r >= 1; ";
    if (bounded) {
      report.observed = std::vector<double>(r_count, 0.0);
      notes << "every raw moment E[X_t^r] is convergent or periodic, so E[(X_t/t)^r] -> 0 exactly";
      report.verdict = judge(report.predicted, report.observed, report.tolerance, true);
    } else {
      std::vector<double> at_horizon;
      bool all_settled = true;
      for (const auto& s : rescaled) {
        at_horizon.push_back(s.back());
        all_settled = all_settled && settled(classify_limit(s));
      }
      report.observed = at_horizon;
      notes << "raw moments grow; observed holds E[(X_t/t)^r] at t = " << horizon;
      report.verdict = judge(report.predicted, report.observed, report.tolerance, all_settled);
    }
    try {
      const std::vector<double> spectral =
          limit_moments_spectral(coin, init, config.r_max, config.k_grid);
      notes << "; spectral limit moments " << format_values(spectral);
    } catch (const Error& e) {
      notes << "; spectral limit moments unavailable: " << e.what();
    }
    report.notes = notes.str();
    return report;
  }});

  tasks.push_back({"theorem2.density", [] {
    ClaimReport report;
    report.claim_id = "theorem2.density";
    report.tolerance = kFormulaTolerance;
    report.verdict = Verdict::kInconclusive;
    report.notes =
        "NOT EVALUABLE: the density weights c0, c1, c2 have no defining formula; f_K is real "
        "only on (0, 1/sqrt(2)) although its indicator covers (0, 1)";
    return report;
  }});

  std::vector<ClaimReport> reports(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    try {
      reports[i] = tasks[i].run();
    } catch (const Error& e) {
      reports[i].claim_id = tasks[i].id;
      reports[i].verdict = Verdict::kInconclusive;
      reports[i].notes = std::string("evaluation failed: ") + e.what();
    }
  });
  return reports;
}

}  // namespace qwalk
