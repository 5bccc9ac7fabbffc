#pragma once

#include <functional>
#include <vector>

#include "sstar/partition.hpp"
#include "sstar/rational.hpp"

namespace sstar {

// Evaluates s*_mu at the partition lambda.
using SStarEvaluator = std::function<Rational(const Partition& mu, const Partition& lambda)>;

// z_rho = prod_r r^{m_r} m_r!
Integer z_factor(const Partition& rho);
// Murnaghan-Nakayama; requires |lambda| == |rho|. Memoized and thread-safe.
Integer mn_character(const Partition& lambda, const Partition& rho);
// rho ∪ 1^{l-k}
Partition pad_with_ones(const Partition& rho, int l);
// Cycle type of a permutation given in one-line notation (0-based images).
Partition cycle_type(const std::vector<int>& perm);

// All characters of S(k), rows and columns both in partitions_of(k) order.
struct CharTable {
    int k = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<Integer>> values;  // values[lambda][rho]

    static CharTable build(int k);
    const Integer& value(const Partition& lambda, const Partition& rho) const;
    std::size_t index(const Partition& p) const;
};

// chi^lambda at rho ∪ 1^{l-k}, computed from s* values:
// (dim lambda / (l)↓k) * sum_{mu ⊢ k} chi^mu_rho s*_mu(lambda).
// Requires |rho| <= |lambda|; the result must be an integer.
Integer char_small_cycles(const Partition& lambda, const Partition& rho, const SStarEvaluator& sstar = {});

// ((l)↓k / dim lambda) * chi^lambda_{rho ∪ 1^{l-k}}, through the character table.
Rational gibbs_eigenvalue(const Partition& lambda, const Partition& rho);

}  // namespace sstar
