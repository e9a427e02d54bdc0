#include "iterasym/combinatorics.hpp"

#include <numeric>

#include "iterasym/errors.hpp"

namespace iterasym {

Rational fallingFactorial(const Rational& t, int k) {
  if (k < 1) throw ValidationError("fallingFactorial requires k >= 1");
  Rational acc = t;
  for (int i = 1; i < k; ++i) acc *= t - Rational(i);
  return acc;
}

Rational multinomial(int top, std::span<const int> parts) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw ValidationError("multinomial with negative part");
    sum += p;
  }
  if (top < 0 || sum != top) throw ValidationError("multinomial parts do not sum to top");
  Rational r = factorial(top);
  for (int p : parts) r /= factorial(p);
  return r;
}

namespace {

// Fills positions idx..k-1 (weights idx+1..k) with exactly `count` parts of
// total weight `weight`. Ascending values at each position give lex order.
void enumerate(int k, int idx, int weight, int count, std::vector<int>& cur,
               std::vector<PartitionSolution>& out) {
  const int w = idx + 1;
  if (idx == k - 1) {
    if (count * w == weight) {
      cur[idx] = count;
      out.push_back({cur});
      cur[idx] = 0;
    }
    return;
  }
  for (int v = 0; v <= count && v * w <= weight; ++v) {
    const int restCount = count - v;
    const int restWeight = weight - v * w;
    // Remaining parts have weights in [w + 1, k].
    if (restCount * (w + 1) > restWeight || restCount * k < restWeight) continue;
    cur[idx] = v;
    enumerate(k, idx + 1, restWeight, restCount, cur, out);
  }
  cur[idx] = 0;
}

}  // namespace

std::vector<PartitionSolution> partitions(int k, int m, int s) {
  if (k < 1) throw ValidationError("partitions requires k >= 1");
  std::vector<PartitionSolution> out;
  const int count = m - s;
  if (m < 0 || count < 0) return out;
  if (count > m) return out;  // each part has weight >= 1
  if (count * k < m) return out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  enumerate(k, 0, m, count, cur, out);
  return out;
}

Rational weightedProduct(const PartitionSolution& sol, std::span<const Rational> values) {
  const int top = std::accumulate(sol.n.begin(), sol.n.end(), 0);
  Rational r = multinomial(top, sol.n);
  for (std::size_t i = 0; i < sol.n.size(); ++i) {
    if (sol.n[i] == 0) continue;
    if (i >= values.size()) throw ValidationError("weightedProduct: missing value for part");
    r *= values[i].pow(sol.n[i]);
  }
  return r;
}

}  // namespace iterasym
