#pragma once

#include <stdexcept>
#include <vector>

#include "sstar/parallel.hpp"
#include "sstar/partition.hpp"
#include "sstar/weyl.hpp"

namespace sstar {

// All permutations of 0..k-1 in lexicographic order (one-line notation).
std::vector<std::vector<int>> permutations_of(int k);

// (1/k!) sum_{i,j} sum_{s∈S(k)} chi^mu(s) x_{i1 j1}...x_{ik jk} ∂_{i_s(1) j1}...∂_{i_s(k) jk}
// on C[M(n,m)]; requires length(mu) <= min(n, m).
DiffOp capelli_operator(const Partition& mu, int n, int m, ExecMode mode = ExecMode::Parallel);

// prod_i det(leading i×i minor of X)^{lambda_i - lambda_{i+1}} in C[M(n,m)].
MultiPoly highest_vector(const Partition& lambda, int n, int m);

class NotEigenvector : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The scalar by which op acts on v; throws NotEigenvector otherwise.
Rational eigenvalue_on(const DiffOp& op, const MultiPoly& v);
Rational eigen_check(const Partition& mu, const Partition& lambda, int n, int m);

// Every monomial of total degree exactly d in the variables of shape.
std::vector<Monomial> monomials_of_degree(MatrixShape shape, int d);

// Schur-Weyl duality on (C^n)^{⊗l}: both sides as n^l × n^l matrices.
// Basis index r = (r_1..r_l) in base n, r_1 most significant.
using RationalMatrix = std::vector<std::vector<Rational>>;
RationalMatrix schur_weyl_lhs(int n, int l, const Partition& mu, ExecMode mode = ExecMode::Parallel);
RationalMatrix schur_weyl_rhs(int n, int l, const Partition& mu);
bool schur_weyl_check(int n, int l, const Partition& mu);

}  // namespace sstar
