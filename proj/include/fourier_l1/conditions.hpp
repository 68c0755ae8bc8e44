#pragma once

// Tauberian hypotheses as finite, truncated sums of absolute coefficient
// differences. Every "sum to infinity" is cut at an explicit truncation that
// is carried into the report. Index ranges |t| = a..b include both signs of
// every magnitude, and magnitude 0 contributes both 0+ and 0- at full weight.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourier_l1/grid.hpp"
#include "fourier_l1/sequence.hpp"

namespace fourier_l1 {

enum class ConditionId { HK13, LIM14, C31, C32, C33, C34, DECAY };
enum class Verdict { vanishing_trend, non_vanishing_trend, inconclusive };

std::string_view to_string(ConditionId id);
std::string_view to_string(Verdict verdict);

struct ConditionParams {
  double p = 2.0;               // exponent of the Hardy-Karamata sum, 1 < p <= 2
  std::vector<double> lambdas;  // each > 1; kept sorted ascending
  std::vector<int> n_range;     // positive, probed in the given order
  int truncation = 0;           // J: cap on the unbounded index

  /// Sorts lambdas and validates every field.
  void normalize();
};

struct ProfileEntry {
  std::optional<double> lambda;  // absent for the profiles without a window
  int n = 0;
  int truncation = 0;
  double value = 0.0;
  std::string series;  // "diagonal" / "shell" for DECAY, empty otherwise
};

struct ConditionReport {
  ConditionId id = ConditionId::C31;
  std::vector<ProfileEntry> profile;
  Verdict verdict = Verdict::inconclusive;
};

/// sum_{|k|=n}^{[lambda n]} |k|^{p-1} |Delta c_k|^p.
double hk_single(const TwoSidedSequence& seq, double p, double lambda, int n);

/// log(n) sum_{|k|=n}^{[lambda n]} |Delta c_k|, n >= 2.
double lim_single(const TwoSidedSequence& seq, double lambda, int n);

/// One |k| of the first double-series profile:
/// sum_{|j|=0..J} w(j) w(k) |Delta_10 c_jk| over both signs of k.
double cond31_value(const CoefficientGrid& grid, int k, int truncation);
/// Mirror of cond31_value with the roles of j and k swapped.
double cond32_value(const CoefficientGrid& grid, int j, int truncation);

/// sum_{|j|=0..J} sum_{|k|=n..[lambda n]} w(j) w(k) |Delta_11 c_jk|.
double cond33_value(const CoefficientGrid& grid, double lambda, int n, int truncation);
/// sum_{|k|=0..K} sum_{|j|=m..[lambda m]} w(j) w(k) |Delta_11 c_jk|.
double cond34_value(const CoefficientGrid& grid, double lambda, int m, int truncation);

/// Contribution of the single k-shell |k| = k to cond33_value.
double cond33_shell(const CoefficientGrid& grid, int k, int truncation);
/// Contribution of the single j-shell |j| = j to cond34_value.
double cond34_shell(const CoefficientGrid& grid, int j, int truncation);

ConditionReport hk_profile(const TwoSidedSequence& seq, const ConditionParams& params);
ConditionReport lim_profile(const TwoSidedSequence& seq, const ConditionParams& params);
ConditionReport cond31_profile(const CoefficientGrid& grid, const ConditionParams& params);
ConditionReport cond32_profile(const CoefficientGrid& grid, const ConditionParams& params);
ConditionReport cond33_profile(const CoefficientGrid& grid, const ConditionParams& params);
ConditionReport cond34_profile(const CoefficientGrid& grid, const ConditionParams& params);

/// All four double-series profiles.
std::vector<ConditionReport> condition_reports(const CoefficientGrid& grid,
                                               const ConditionParams& params);

/// w(j) w(k) |c_jk|: the largest value over the four sign choices of (t, t)
/// for the diagonal series and over the shell max(|j|, |k|) = t for the shell
/// series. The verdict is taken on the shell series.
ConditionReport decay_diagnostic(const CoefficientGrid& grid);

/// vanishing-trend: the last value is below 0.1 x max and the final three
/// values are nonincreasing (an all-zero profile qualifies).
/// non-vanishing-trend: the final three values are within 10% of the max.
/// Shorter profiles use what they have; an empty one is inconclusive.
Verdict trend_verdict(const std::vector<double>& values);

/// Per-lambda verdicts folded into one: any non-vanishing wins, then all
/// vanishing, otherwise inconclusive.
Verdict combine_verdicts(const std::vector<Verdict>& verdicts);

std::string reports_to_csv(const std::vector<ConditionReport>& reports);

}  // namespace fourier_l1
