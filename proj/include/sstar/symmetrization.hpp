#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sstar/capelli.hpp"
#include "sstar/partition.hpp"
#include "sstar/weyl.hpp"

namespace sstar {

// E_{i1 j1}∘...∘E_{ik jk} in U(gl(n)); indices are 0-based internally.
struct GeneratorWord {
    int n = 0;
    std::vector<std::pair<int, int>> letters;

    // "11,22,12" (1-based digit pairs, or "i.j" for indices above 9)
    static GeneratorWord parse(std::string_view text, int n);
    std::string str() const;
    int length() const { return static_cast<int>(letters.size()); }
};

// Linear combination of words.
using WordCombination = std::vector<std::pair<Rational, GeneratorWord>>;

// Clusters of {0..k-1}, each listed in increasing order, clusters ordered by
// their smallest element.
struct SetPartition {
    std::vector<std::vector<int>> clusters;
};
std::vector<SetPartition> set_partitions(int k);

// Variable e_{ij} of the symmetric algebra S(gl(n)) (same id space as x_{ij}).
inline Monomial evar(int i, int j) { return Monomial::var(var_id(i, j)); }
MultiPoly word_as_monomial(const GeneratorWord& w);

// R(E_rs) = sum_i x_{ir} ∂_{is} on C[M(rows, w.n)], composed in word order.
DiffOp r_map(const GeneratorWord& w, int rows);
DiffOp r_map(const WordCombination& c, int dim, int rows);
// R(sum_{rs} a_rs E_rs)
DiffOp r_linear(const RationalMatrix& a, int rows);

// sum_{ij} E_ij∘E_ji
WordCombination casimir_word(int n);

// The symmetrization map on a symmetric-algebra polynomial, as an operator:
// e_{i1 j1}...e_{ik jk} ↦ sum_α x_{α1 i1}...x_{αk ik} ∂_{α1 j1}...∂_{αk jk}.
DiffOp sigma(const MultiPoly& e_poly, int dim, int rows);
// The same map as an element of U(gl(n)) through the polarized inversion
// sum_{s∈S(k)} sum_{λ⊢k} (-1)^{k-ℓ(λ)} z_λ^{-1} ⟨A_s(1)...A_s(λ1)⟩∘⟨...⟩∘...
WordCombination sigma_words(const MultiPoly& e_poly, int dim);

// sum over set partitions of prod over clusters of the ordered matrix product.
MultiPoly sigma_inverse(const GeneratorWord& w);
MultiPoly sigma_inverse(const WordCombination& c, int dim);

// S_{mu|n} = (1/k!) sum_i sum_s chi^mu(s) e_{i1 i_s(1)}...e_{ik i_s(k)}
MultiPoly s_mu_element(const Partition& mu, int n);

// A^k as a symmetric-algebra polynomial, with A = sum a_ij e_ij.
MultiPoly matrix_power_element(const RationalMatrix& a, int k);

struct SigmaPowerReport {
    bool power_formula = false;
    bool idempotent_formula = false;  // only meaningful when `idempotent`
    bool idempotent = false;
};
// Compares σ(A^k) (termwise) with sum_λ (-1)^{k-ℓ(λ)} (k!/z_λ) ⟨A⟩^{λ1}∘⟨A⟩^{λ2}∘...,
// and for idempotent A also with A∘(A-1)∘...∘(A-k+1).
SigmaPowerReport sigma_power_report(const RationalMatrix& a, int k);
bool sigma_power_check(const RationalMatrix& a, int k);

}  // namespace sstar
