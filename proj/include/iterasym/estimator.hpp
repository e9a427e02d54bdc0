#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iterasym/bigfloat.hpp"
#include "iterasym/catalog.hpp"
#include "iterasym/expansion.hpp"

namespace iterasym {

/// x_N = f^N(x0). Throws DomainError for an inadmissible x0 and PrecisionError
/// as soon as 0 < x_{n+1} < x_n fails.
BigFloat iterate(const MapModel& model, const BigFloat& x0, long N, int digits);

/// Iterates once to max(checkpoints) and returns x_n at each checkpoint (in
/// the order given).
std::vector<BigFloat> iterateCheckpoints(const MapModel& model, const BigFloat& x0,
                                         const std::vector<long>& checkpoints, int digits);

/// Root K of evaluateAt(e, n, K) = x_n nearest the first-order seed
///   K0 = -tau (x_n (n theta / lambda)^{1/tau} - 1) n - b_1 ln n,
/// by Newton's method (at most 64 steps).
BigFloat solveK(const AsymptoticExpansion& e, long n, const BigFloat& xn, int digits,
                std::optional<int> order = std::nullopt);

struct EstimateStage {
  long N;
  BigFloat K_N;
  BigFloat K_2N;
  int agreeingDigits;
};

struct EstimateResult {
  BigFloat K;                // engine constant, from the 2N solve of the final stage
  BigFloat paperC;           // sigma K / scale
  int trustedDigits = 0;     // agreeing leading digits of the N and 2N solves, minus 1
  long N_used = 0;           // the final stage's N (the iteration ran to 2N)
  int precision_used = 0;    // working decimal digits
  BigFloat residual;         // |K_N - K_2N| at the final stage
  int order = 0;             // expansion order J used
  bool reachedTarget = false;
  std::vector<EstimateStage> stages;
};

struct EstimateOptions {
  int targetDigits = 20;
  /// Stage sizes N; each stage also solves at 2N. 2 * max(schedule) <= 10^6.
  std::vector<long> schedule = {10000, 100000, 500000};
  std::optional<int> order;          // expansion order, default: deepest available
  std::optional<int> workingDigits;  // default: target + 10 + ceil(log10(2 max N))
};

/// Working precision rule: target + 10 guard digits + ceil(log10 N) for
/// rounding accumulated over N steps.
int defaultWorkingDigits(int targetDigits, long maxN);

EstimateResult estimateC(const MapModel& model, const BigFloat& x0, const EstimateOptions& options = {});
EstimateResult estimateC(const MapModel& model, const std::string& x0, const EstimateOptions& options = {});

/// Constant of y_n = x_{n+steps}: K + steps in the engine convention ...
BigFloat shiftedConstant(const BigFloat& K, long steps);
/// ... and C + sigma * steps / scale in a published convention.
BigFloat shiftedPaperC(const BigFloat& C, long steps, const Convention& conv);

/// Number of agreeing leading decimal digits of a and b: floor(log10(|b| / |a - b|)),
/// capped at `cap` (returned when a == b).
int agreeingDigits(const BigFloat& a, const BigFloat& b, int cap);

}  // namespace iterasym
