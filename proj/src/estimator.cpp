#include "iterasym/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "iterasym/errors.hpp"

namespace iterasym {

namespace {

void checkStart(const MapModel& model, const BigFloat& x0) {
  if (x0.sign() <= 0) throw DomainError("x0 must be positive (got " + x0.toString(12) + ")");
  if (model.validStart && !model.validStart(x0)) {
    throw DomainError(model.spec.name + ": x0 = " + x0.toString(12) + " is not an admissible starting value");
  }
}

BigFloat tenToMinus(int digits, int precision) {
  return BigFloat(1L, precision) / pow(BigFloat(10L, precision), static_cast<long>(digits));
}

}  // namespace

std::vector<BigFloat> iterateCheckpoints(const MapModel& model, const BigFloat& x0,
                                         const std::vector<long>& checkpoints, int digits) {
  BigFloat x = x0.withDigits(digits);
  checkStart(model, x);
  std::map<long, BigFloat> hits;
  long last = 0;
  for (long c : checkpoints) {
    if (c < 0) throw ValidationError("iteration count must be nonnegative");
    last = std::max(last, c);
  }
  auto record = [&](long n) {
    if (std::find(checkpoints.begin(), checkpoints.end(), n) != checkpoints.end()) hits.emplace(n, x);
  };
  record(0);
  for (long n = 1; n <= last; ++n) {
    BigFloat next = model.evaluator(x);
    if (!(next.sign() > 0 && next < x)) {
      throw PrecisionError(model.spec.name + ": monotone decrease failed at step " + std::to_string(n) +
                           " (x_" + std::to_string(n - 1) + " = " + x.toString(12) + ", x_" + std::to_string(n) +
                           " = " + next.toString(12) + "); raise the precision or choose another x0");
    }
    x = std::move(next);
    record(n);
  }
  std::vector<BigFloat> out;
  out.reserve(checkpoints.size());
  for (long c : checkpoints) out.push_back(hits.at(c));
  return out;
}

BigFloat iterate(const MapModel& model, const BigFloat& x0, long N, int digits) {
  return iterateCheckpoints(model, x0, {N}, digits).front();
}

BigFloat solveK(const AsymptoticExpansion& e, long n, const BigFloat& xn, int digits, std::optional<int> order) {
  const BigFloat nb(n, digits);
  const BigFloat x = xn.withDigits(digits);
  BigFloat scale = nb / BigFloat(e.lambda, digits);
  if (e.theta == ThetaScale::PiSquared) {
    const BigFloat pi = BigFloat::pi(digits);
    scale = scale * pi * pi;
  }
  const BigFloat one(1L, digits);
  BigFloat K = -((x * rootn(scale, static_cast<unsigned long>(e.tau)) - one) * nb).mul(e.tau) -
               BigFloat(e.b1, digits) * log(nb);

  const BigFloat tol = tenToMinus(digits, digits);
  for (int it = 0; it < 64; ++it) {
    const auto [v, dv] = evaluateWithDerivative(e, nb, K, digits, order);
    if (dv.isZero()) throw ConvergenceError("solveK: derivative vanished at step " + std::to_string(it));
    const BigFloat step = (v - x) / dv;
    K -= step;
    // Rounding in x_n alone limits K to about ulp(x_n) / |dF/dK|, which grows
    // like n^{1 + 1/tau}; stop once the step is at that floor.
    const BigFloat mag = abs(K) > one ? abs(K) : one;
    const BigFloat floor = (tol * abs(x) / abs(dv)).mul(16);
    if (abs(step) <= tol * mag || abs(step) <= floor) return K;
  }
  throw ConvergenceError("solveK: Newton did not converge in 64 steps");
}

int defaultWorkingDigits(int targetDigits, long maxN) {
  return targetDigits + 10 + static_cast<int>(std::ceil(std::log10(static_cast<double>(std::max(2L, maxN)))));
}

int agreeingDigits(const BigFloat& a, const BigFloat& b, int cap) {
  const BigFloat diff = abs(a - b);
  if (diff.isZero()) return cap;
  if (b.isZero()) return 0;
  const double rel = log10(abs(b) / diff).toDouble();
  if (rel <= 0) return 0;
  return std::min(cap, static_cast<int>(std::floor(rel)));
}

EstimateResult estimateC(const MapModel& model, const BigFloat& x0, const EstimateOptions& options) {
  if (options.schedule.empty()) throw ValidationError("estimateC: empty N schedule");
  if (options.targetDigits < 1) throw ValidationError("estimateC: target digits must be positive");
  std::vector<long> schedule = options.schedule;
  std::sort(schedule.begin(), schedule.end());
  if (schedule.front() < 10) throw ValidationError("estimateC: N must be at least 10");

  const long maxN = 2 * schedule.back();
  const int digits = options.workingDigits.value_or(defaultWorkingDigits(options.targetDigits, maxN));

  const Derivation d = deriveAll(model.spec);
  const AsymptoticExpansion e = assemble(d, options.order);

  // One continuous run, extended stage by stage, supplies x_N and x_{2N}.
  BigFloat x = x0.withDigits(digits);
  long at = 0;
  auto advanceTo = [&](long target) {
    if (target > at) x = iterate(model, x, target - at, digits);
    at = target;
    return x;
  };
  checkStart(model, x);

  EstimateResult r;
  r.precision_used = digits;
  r.order = e.J;
  const int cap = digits - 5;
  for (const long N : schedule) {
    const BigFloat xN = advanceTo(N);
    const BigFloat x2N = advanceTo(2 * N);
    BigFloat kN = solveK(e, N, xN, digits);
    BigFloat k2N = solveK(e, 2 * N, x2N, digits);
    const int agree = agreeingDigits(kN, k2N, cap);
    r.stages.push_back({N, kN, k2N, agree});
    r.K = k2N;
    r.residual = abs(kN - k2N);
    r.trustedDigits = std::max(0, agree - 1);
    r.N_used = N;
    if (r.trustedDigits >= options.targetDigits) {
      r.reachedTarget = true;
      break;
    }
  }
  r.paperC = toPaperC(r.K, model.spec.convention);
  return r;
}

EstimateResult estimateC(const MapModel& model, const std::string& x0, const EstimateOptions& options) {
  const int digits = options.workingDigits.value_or(
      defaultWorkingDigits(options.targetDigits, 2 * *std::max_element(options.schedule.begin(), options.schedule.end())));
  return estimateC(model, parseRealExpression(x0, digits), options);
}

BigFloat shiftedConstant(const BigFloat& K, long steps) { return K + BigFloat(steps, K.digits()); }

BigFloat shiftedPaperC(const BigFloat& C, long steps, const Convention& conv) {
  return C + BigFloat(Rational(conv.sigma) * Rational(steps) / conv.scale, C.digits());
}

}  // namespace iterasym
