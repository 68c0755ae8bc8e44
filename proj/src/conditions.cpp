#include "fourier_l1/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "fourier_l1/error.hpp"
#include "fourier_l1/format.hpp"
#include "fourier_l1/kernels.hpp"
#include "fourier_l1/parallel.hpp"

namespace fourier_l1 {

std::string_view to_string(ConditionId id) {
  switch (id) {
    case ConditionId::HK13: return "HK13";
    case ConditionId::LIM14: return "LIM14";
    case ConditionId::C31: return "C31";
    case ConditionId::C32: return "C32";
    case ConditionId::C33: return "C33";
    case ConditionId::C34: return "C34";
    case ConditionId::DECAY: return "DECAY";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::vanishing_trend: return "vanishing-trend";
    case Verdict::non_vanishing_trend: return "non-vanishing-trend";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

void ConditionParams::normalize() {
  require(p > 1.0 && p <= 2.0, "p must satisfy 1 < p <= 2");
  require(!lambdas.empty(), "at least one lambda is required");
  for (double l : lambdas) require(std::isfinite(l) && l > 1.0, "every lambda must exceed 1");
  std::sort(lambdas.begin(), lambdas.end());
  require(!n_range.empty(), "the probed index range is empty");
  for (int n : n_range) require(n >= 1, "probed indices must be positive");
  require(truncation >= *std::max_element(n_range.begin(), n_range.end()),
          "truncation must be at least the largest probed index");
}

namespace {

constexpr Sign kSigns[] = {Sign::plus, Sign::minus};

void require_truncation(int truncation, int bound, const char* axis) {
  require(truncation >= 0, "truncation must be non-negative");
  if (truncation > bound) {
    fail(ErrorKind::grid_too_small, "truncation " + std::to_string(truncation) +
                                        " exceeds the grid bound " + std::to_string(bound) +
                                        " along " + axis);
  }
}

/// sum over |a| = 0..trunc (both signs) and over both signs of fixed |b|, with
/// `swap` putting the summed index in k instead of j.
double fixed_shell(const CoefficientGrid& grid, DiffOrder order, int fixed, int trunc, bool swap) {
  double sum = 0.0;
  for (Sign sf : kSigns) {
    const SignedIndex f{sf, fixed};
    for (int a = 0; a <= trunc; ++a) {
      for (Sign sa : kSigns) {
        const SignedIndex s{sa, a};
        const cplx d = swap ? diff(grid, order, f, s) : diff(grid, order, s, f);
        sum += log_weight(a) * log_weight(fixed) * std::abs(d);
      }
    }
  }
  return sum;
}

template <typename F>
double window_sum(double lambda, int n, F shell) {
  const int top = lambda_index(lambda, n);
  double sum = 0.0;
  for (int k = n; k <= top; ++k) sum += shell(k);
  return sum;
}

/// Evaluates fn(i) for every probe in parallel, preserving order.
template <typename F>
std::vector<double> map_values(std::size_t count, F fn) {
  std::vector<double> out(count);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
  });
  return out;
}

ConditionReport plain_profile(ConditionId id, const ConditionParams& params,
                              const std::function<double(int)>& value) {
  const std::vector<double> values =
      map_values(params.n_range.size(), [&](std::size_t i) { return value(params.n_range[i]); });
  ConditionReport report{id, {}, trend_verdict(values)};
  for (std::size_t i = 0; i < values.size(); ++i) {
    report.profile.push_back({std::nullopt, params.n_range[i], params.truncation, values[i], {}});
  }
  return report;
}

ConditionReport windowed_profile(ConditionId id, const ConditionParams& params, int truncation,
                                 const std::function<double(double, int)>& value) {
  const std::size_t per = params.n_range.size();
  // Validate every window up front so failures precede any work.
  for (double l : params.lambdas)
    for (int n : params.n_range) lambda_index(l, n);
  const std::vector<double> values = map_values(params.lambdas.size() * per, [&](std::size_t i) {
    return value(params.lambdas[i / per], params.n_range[i % per]);
  });
  ConditionReport report{id, {}, Verdict::inconclusive};
  std::vector<Verdict> verdicts;
  for (std::size_t l = 0; l < params.lambdas.size(); ++l) {
    std::vector<double> slice(values.begin() + static_cast<std::ptrdiff_t>(l * per),
                              values.begin() + static_cast<std::ptrdiff_t>((l + 1) * per));
    verdicts.push_back(trend_verdict(slice));
    for (std::size_t i = 0; i < per; ++i) {
      report.profile.push_back(
          {params.lambdas[l], params.n_range[i], truncation, slice[i], {}});
    }
  }
  report.verdict = combine_verdicts(verdicts);
  return report;
}

}  // namespace

double hk_single(const TwoSidedSequence& seq, double p, double lambda, int n) {
  require(p > 1.0 && p <= 2.0, "p must satisfy 1 < p <= 2");
  require(n >= 1, "n must be positive");
  return window_sum(lambda, n, [&](int k) {
    double s = 0.0;
    for (Sign sign : kSigns) {
      s += std::pow(static_cast<double>(k), p - 1.0) * std::pow(std::abs(seq.diff({sign, k})), p);
    }
    return s;
  });
}

double lim_single(const TwoSidedSequence& seq, double lambda, int n) {
  require(n >= 2, "n must be at least 2");
  return std::log(static_cast<double>(n)) * window_sum(lambda, n, [&](int k) {
           return std::abs(seq.diff(plus(k))) + std::abs(seq.diff(minus(k)));
         });
}

double cond31_value(const CoefficientGrid& grid, int k, int truncation) {
  require(k >= 0, "probed index must be non-negative");
  require_truncation(truncation, grid.bound_j(), "j");
  return fixed_shell(grid, DiffOrder{1, 0}, k, truncation, false);
}

double cond32_value(const CoefficientGrid& grid, int j, int truncation) {
  require(j >= 0, "probed index must be non-negative");
  require_truncation(truncation, grid.bound_k(), "k");
  return fixed_shell(grid, DiffOrder{0, 1}, j, truncation, true);
}

double cond33_shell(const CoefficientGrid& grid, int k, int truncation) {
  require_truncation(truncation, grid.bound_j(), "j");
  return fixed_shell(grid, DiffOrder{1, 1}, k, truncation, false);
}

double cond34_shell(const CoefficientGrid& grid, int j, int truncation) {
  require_truncation(truncation, grid.bound_k(), "k");
  return fixed_shell(grid, DiffOrder{1, 1}, j, truncation, true);
}

double cond33_value(const CoefficientGrid& grid, double lambda, int n, int truncation) {
  require_truncation(truncation, grid.bound_j(), "j");
  return window_sum(lambda, n, [&](int k) { return cond33_shell(grid, k, truncation); });
}

double cond34_value(const CoefficientGrid& grid, double lambda, int m, int truncation) {
  require_truncation(truncation, grid.bound_k(), "k");
  return window_sum(lambda, m, [&](int j) { return cond34_shell(grid, j, truncation); });
}

ConditionReport hk_profile(const TwoSidedSequence& seq, const ConditionParams& params) {
  return windowed_profile(ConditionId::HK13, params, seq.bound(), [&](double l, int n) {
    return hk_single(seq, params.p, l, n);
  });
}

ConditionReport lim_profile(const TwoSidedSequence& seq, const ConditionParams& params) {
  return windowed_profile(ConditionId::LIM14, params, seq.bound(),
                          [&](double l, int n) { return lim_single(seq, l, n); });
}

ConditionReport cond31_profile(const CoefficientGrid& grid, const ConditionParams& params) {
  require_truncation(params.truncation, grid.bound_j(), "j");
  return plain_profile(ConditionId::C31, params,
                       [&](int k) { return cond31_value(grid, k, params.truncation); });
}

ConditionReport cond32_profile(const CoefficientGrid& grid, const ConditionParams& params) {
  require_truncation(params.truncation, grid.bound_k(), "k");
  return plain_profile(ConditionId::C32, params,
                       [&](int j) { return cond32_value(grid, j, params.truncation); });
}

ConditionReport cond33_profile(const CoefficientGrid& grid, const ConditionParams& params) {
  require_truncation(params.truncation, grid.bound_j(), "j");
  return windowed_profile(ConditionId::C33, params, params.truncation, [&](double l, int n) {
    return cond33_value(grid, l, n, params.truncation);
  });
}

ConditionReport cond34_profile(const CoefficientGrid& grid, const ConditionParams& params) {
  require_truncation(params.truncation, grid.bound_k(), "k");
  return windowed_profile(ConditionId::C34, params, params.truncation, [&](double l, int m) {
    return cond34_value(grid, l, m, params.truncation);
  });
}

std::vector<ConditionReport> condition_reports(const CoefficientGrid& grid,
                                               const ConditionParams& params) {
  return {cond31_profile(grid, params), cond32_profile(grid, params),
          cond33_profile(grid, params), cond34_profile(grid, params)};
}

ConditionReport decay_diagnostic(const CoefficientGrid& grid) {
  const auto term = [&](int j, int k) {
    return log_weight(j) * log_weight(k) * std::abs(grid(j, k));
  };
  const int top = std::max(grid.bound_j(), grid.bound_k());
  const int diag = std::min(grid.bound_j(), grid.bound_k());

  ConditionReport report{ConditionId::DECAY, {}, Verdict::inconclusive};
  for (int t = 0; t <= diag; ++t) {
    const double v = std::max({term(t, t), term(t, -t), term(-t, t), term(-t, -t)});
    report.profile.push_back({std::nullopt, t, top, v, "diagonal"});
  }
  std::vector<double> shell(static_cast<std::size_t>(top) + 1, 0.0);
  for (int j = -grid.bound_j(); j <= grid.bound_j(); ++j) {
    for (int k = -grid.bound_k(); k <= grid.bound_k(); ++k) {
      auto& slot = shell[static_cast<std::size_t>(std::max(std::abs(j), std::abs(k)))];
      slot = std::max(slot, term(j, k));
    }
  }
  for (int t = 0; t <= top; ++t) {
    report.profile.push_back(
        {std::nullopt, t, top, shell[static_cast<std::size_t>(t)], "shell"});
  }
  report.verdict = trend_verdict(shell);
  return report;
}

Verdict trend_verdict(const std::vector<double>& values) {
  if (values.empty()) return Verdict::inconclusive;
  const double max = *std::max_element(values.begin(), values.end());
  const std::size_t tail = std::min<std::size_t>(3, values.size());
  const auto last = values.end() - static_cast<std::ptrdiff_t>(tail);
  if (max == 0.0) return Verdict::vanishing_trend;
  const bool nonincreasing = std::is_sorted(last, values.end(), std::greater<>());
  if (values.back() < 0.1 * max && nonincreasing) return Verdict::vanishing_trend;
  if (std::all_of(last, values.end(), [&](double v) { return v >= 0.9 * max; })) {
    return Verdict::non_vanishing_trend;
  }
  return Verdict::inconclusive;
}

Verdict combine_verdicts(const std::vector<Verdict>& verdicts) {
  if (verdicts.empty()) return Verdict::inconclusive;
  if (std::find(verdicts.begin(), verdicts.end(), Verdict::non_vanishing_trend) !=
      verdicts.end()) {
    return Verdict::non_vanishing_trend;
  }
  if (std::all_of(verdicts.begin(), verdicts.end(),
                  [](Verdict v) { return v == Verdict::vanishing_trend; })) {
    return Verdict::vanishing_trend;
  }
  return Verdict::inconclusive;
}

std::string reports_to_csv(const std::vector<ConditionReport>& reports) {
  std::string out = "conditionId,lambda,n,truncation,value\n";
  for (const ConditionReport& r : reports) {
    for (const ProfileEntry& e : r.profile) {
      out += to_string(r.id);
      if (!e.series.empty()) out += "/" + e.series;
      out += ",";
      if (e.lambda) out += format_real(*e.lambda);
      out += "," + std::to_string(e.n) + "," + std::to_string(e.truncation) + "," +
             format_real(e.value) + "\n";
    }
  }
  return out;
}

}  // namespace fourier_l1
