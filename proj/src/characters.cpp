#include "sstar/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sstar/shifted_eval.hpp"

namespace sstar {

Integer z_factor(const Partition& rho) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int r : rho.parts()) ++mult[r];
    for (auto [r, m] : mult) {
        Integer rp;
        mpz_ui_pow_ui(rp.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(m));
        z *= rp * factorial(m);
    }
    return z;
}

namespace {

std::mutex mn_mutex;
std::map<std::pair<Partition, Partition>, Integer> mn_cache;

// Beta numbers lambda_i + L - i (0-based i) for L = length(lambda).
Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int L = static_cast<int>(beta.size());
    std::vector<int> parts(L);
    for (int i = 0; i < L; ++i) parts[i] = beta[i] - (L - 1 - i);
    return Partition(std::move(parts));
}

Integer mn_rec(const Partition& lambda, const Partition& rho) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, rho);
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        if (auto it = mn_cache.find(key); it != mn_cache.end()) return it->second;
    }
    const int r = rho[0];
    Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const int L = lambda.length();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + L - 1 - i;
    Integer total = 0;
    // Removing a border strip of size r moves one bead from b to b - r;
    // the height is the number of beads jumped over.
    for (int i = 0; i < L; ++i) {
        int b = beta[i], target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int v : beta)
            if (v > target && v < b) ++jumped;
        std::vector<int> moved = beta;
        moved[i] = target;
        Integer sub = mn_rec(from_beta(std::move(moved)), rest);
        if (jumped % 2) total -= sub;
        else total += sub;
    }
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache.emplace(key, total);
    return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character arguments have different sizes");
    return mn_rec(lambda, rho);
}

Partition pad_with_ones(const Partition& rho, int l) {
    if (rho.size() > l) throw std::invalid_argument("cycle type larger than the permuted set");
    std::vector<int> p = rho.parts();
    p.insert(p.end(), static_cast<std::size_t>(l - rho.size()), 1);
    return Partition(std::move(p));
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

CharTable CharTable::build(int k) {
    CharTable t;
    t.k = k;
    t.parts = partitions_of(k);
    t.values.assign(t.parts.size(), std::vector<Integer>(t.parts.size()));
    for (std::size_t a = 0; a < t.parts.size(); ++a)
        for (std::size_t b = 0; b < t.parts.size(); ++b) t.values[a][b] = mn_character(t.parts[a], t.parts[b]);
    return t;
}

std::size_t CharTable::index(const Partition& p) const {
    auto it = std::find(parts.begin(), parts.end(), p);
    if (it == parts.end()) throw std::out_of_range("partition " + p.str() + " is not of size " + std::to_string(k));
    return static_cast<std::size_t>(it - parts.begin());
}

const Integer& CharTable::value(const Partition& lambda, const Partition& rho) const {
    return values[index(lambda)][index(rho)];
}

Integer char_small_cycles(const Partition& lambda, const Partition& rho, const SStarEvaluator& sstar) {
    const int l = lambda.size(), k = rho.size();
    if (k > l) throw std::invalid_argument("cycle type larger than the diagram");
    Rational sum;
    for (const auto& mu : partitions_of(k)) {
        Integer chi = mn_character(mu, rho);
        if (chi == 0) continue;
        sum += Rational(chi) * (sstar ? sstar(mu, lambda) : sstar_at(mu, lambda));
    }
    Rational value = Rational(dim_sym(lambda)) * sum / falling(Rational(l), static_cast<unsigned>(k));
    if (!value.is_integer())
        throw std::logic_error("character value " + value.str() + " is not an integer");
    return value.numerator();
}

Rational gibbs_eigenvalue(const Partition& lambda, const Partition& rho) {
    const int l = lambda.size();
    Integer chi = mn_character(lambda, pad_with_ones(rho, l));
    return falling(Rational(l), static_cast<unsigned>(rho.size())) * Rational(chi) / Rational(dim_sym(lambda));
}

}  // namespace sstar
