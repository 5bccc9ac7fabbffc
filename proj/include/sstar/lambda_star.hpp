#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sstar/partition.hpp"
#include "sstar/rational.hpp"
#include "sstar/shifted_eval.hpp"

namespace sstar {

// Sparse linear combination over a partition-indexed basis.
class Combination {
public:
    using Map = std::map<Partition, Rational, GradedOrder>;

    Combination() = default;
    explicit Combination(Map terms);
    static Combination basis(const Partition& mu, const Rational& c = 1);

    const Map& terms() const { return terms_; }
    Rational coeff(const Partition& mu) const;
    bool is_zero() const { return terms_.empty(); }
    // Largest |mu| with a nonzero coefficient; -1 for zero.
    int degree() const;
    void add(const Partition& mu, const Rational& c);

    Combination& operator+=(const Combination& o);
    Combination& operator-=(const Combination& o);
    Combination& operator*=(const Rational& s);
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
    friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
    friend bool operator==(const Combination&, const Combination&) = default;

    // {"[3,1]": "1", ...} with keys in graded order.
    std::string to_json() const;
    std::string str() const;

private:
    Map terms_;
};

// Element of Λ* written in the s*_mu basis.
struct ShiftedElement : Combination {
    using Combination::Combination;
    ShiftedElement() = default;
    ShiftedElement(Combination c) : Combination(std::move(c)) {}
    static ShiftedElement one() { return ShiftedElement(Combination::basis(Partition())); }
    static ShiftedElement sstar(const Partition& mu) { return ShiftedElement(Combination::basis(mu)); }

    Rational operator()(const Partition& lambda) const;
    Rational operator()(const EvalPoint& x) const;
};

// Element of Λ written in the Schur basis.
struct SymElement : Combination {
    using Combination::Combination;
    SymElement() = default;
    SymElement(Combination c) : Combination(std::move(c)) {}
};

class ExpansionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using PartitionOracle = std::function<Rational(const Partition&)>;

// Newton-type interpolation on the partition lattice: determines the unique
// element of degree <= d agreeing with f on all partitions of size <= d, then
// requires agreement on every partition of size d + 1.
ShiftedElement expand_from_oracle(const PartitionOracle& f, int d);

ShiftedElement multiply(const ShiftedElement& a, const ShiftedElement& b);
// sum over mu ↗ nu of s*_nu
ShiftedElement pieri_rhs(const Partition& mu);
// f ↦ (lambda ↦ f(lambda'))
ShiftedElement omega(const ShiftedElement& a);

// h*_k, e*_k, p*_k and friends expanded in the s* basis.
ShiftedElement generator_element(Generator g, int k);
// phi^r(h*_k) = sum_i C(r,i) (k-1)↓i h*_{k-i}
ShiftedElement phi_h(int k, int r);
// phi^{-r}(e*_k) = sum_i C(r,i) (k-1)↓i e*_{k-i}
ShiftedElement phi_inv_e(int k, int r);

enum class JTVariant { H, E, Giambelli };
JTVariant parse_jt_variant(std::string_view name);
// Determinant of the chosen matrix, expanded in Λ* with multiply.
ShiftedElement jacobi_trudi(const Partition& mu, JTVariant variant);

// Coefficients s*_mu(lambda) / (n)↑mu of s_mu(x) in the binomial expansion
// of s_lambda(1+x_1,...,1+x_n) / dim lambda.
std::map<Partition, Rational, GradedOrder> binomial_coeffs(const Partition& lambda, int n);
// Exact comparison of both sides at the given points (n coordinates each).
bool binomial_check(const Partition& lambda, int n, const std::vector<EvalPoint>& points);

// LHS and RHS of the coherence relation for s*_{mu|n} against a signature
// with n + 1 entries.
std::pair<Rational, Rational> coherence_sides(int n, const Partition& mu, const Signature& lambda);
bool coherence_check(int n, const Partition& mu, const Signature& lambda);

// The linear isomorphism Λ → Λ* sending s_mu to s*_mu.
ShiftedElement phi_map(const SymElement& f);
// p_rho = sum_lambda chi^lambda_rho s_lambda
SymElement power_sum(const Partition& rho);
ShiftedElement psharp(const Partition& rho);

// dim lambda * s*_mu(lambda) / (l)↓k; 0 when mu ⊄ lambda.
Rational dim_skew_formula(const Partition& outer, const Partition& inner);
// The formula above, required to be an integer and to match syt_count_skew.
Integer dim_skew(const SkewShape& shape);
Integer dim_skew(const Partition& outer, const Partition& inner);

// Parses sums and products of s[..] factors and rationals, e.g. "s[1]*s[2,1] - 2*s[]".
ShiftedElement parse_expression(std::string_view text);

}  // namespace sstar
