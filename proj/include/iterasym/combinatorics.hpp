#pragma once

#include <span>
#include <vector>

#include "iterasym/rational.hpp"

namespace iterasym {

/// One nonnegative solution (n_1, ..., n_k) of
///   n_1 + 2 n_2 + ... + k n_k = m   and   n_1 + ... + n_k = m - s.
struct PartitionSolution {
  std::vector<int> n;

  friend bool operator==(const PartitionSolution&, const PartitionSolution&) = default;
};

/// t (t - 1) ... (t - k + 1). Lemma weights of the form (-t)_k are obtained
/// by passing -t. Throws ValidationError for k < 1.
Rational fallingFactorial(const Rational& t, int k);

/// top! / (parts_1! ... parts_r!). Throws ValidationError unless the parts
/// are nonnegative and sum to top.
Rational multinomial(int top, std::span<const int> parts);

/// All solutions of the (k, m, s) constraint system in lexicographic order
/// of (n_1, ..., n_k). Empty when m - s < 0 or nothing fits.
std::vector<PartitionSolution> partitions(int k, int m, int s);

/// multinomial(sum n, n) * prod_i values[i]^{n_i}; `values[i]` pairs with n_{i+1}.
Rational weightedProduct(const PartitionSolution& sol, std::span<const Rational> values);

}  // namespace iterasym
