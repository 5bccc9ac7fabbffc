#include "sstar/capelli.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sstar/characters.hpp"

namespace sstar {

std::vector<std::vector<int>> permutations_of(int k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

std::size_t ipow(std::size_t base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Digits of idx in base `base`, most significant first.
std::vector<int> digits(std::size_t idx, int base, int len) {
    std::vector<int> d(static_cast<std::size_t>(len));
    for (int t = len - 1; t >= 0; --t) {
        d[static_cast<std::size_t>(t)] = static_cast<int>(idx % static_cast<std::size_t>(base));
        idx /= static_cast<std::size_t>(base);
    }
    return d;
}

}  // namespace

DiffOp capelli_operator(const Partition& mu, int n, int m, ExecMode mode) {
    if (n < 1 || m < 1 || n > kMaxDim || m > kMaxDim) throw std::invalid_argument("matrix size out of range");
    if (mu.length() > std::min(n, m)) throw std::invalid_argument("partition longer than min(n, m)");
    const MatrixShape shape{n, m};
    const int k = mu.size();
    if (k == 0) return DiffOp::identity(shape);

    auto perms = permutations_of(k);
    std::vector<Rational> weight(perms.size());
    Rational kfact(factorial(static_cast<unsigned>(k)));
    for (std::size_t s = 0; s < perms.size(); ++s)
        weight[s] = Rational(mn_character(mu, cycle_type(perms[s]))) / kfact;

    const std::size_t outer = ipow(static_cast<std::size_t>(n), k);
    const std::size_t inner = ipow(static_cast<std::size_t>(m), k);
    std::vector<DiffOp> partial(outer, DiffOp(shape));
    for_each_index(
        outer,
        [&](std::size_t a) {
            auto i = digits(a, n, k);
            DiffOp& local = partial[a];
            for (std::size_t b = 0; b < inner; ++b) {
                auto j = digits(b, m, k);
                Monomial x;
                for (int t = 0; t < k; ++t) x = x * Monomial::var(var_id(i[t], j[t]));
                for (std::size_t s = 0; s < perms.size(); ++s) {
                    if (weight[s].is_zero()) continue;
                    Monomial d;
                    for (int t = 0; t < k; ++t) d = d * Monomial::var(var_id(i[perms[s][t]], j[t]));
                    local.add(x, d, weight[s]);
                }
            }
        },
        mode);
    DiffOp total(shape);
    for (const auto& p : partial) total += p;
    return total;
}

namespace {

MultiPoly leading_minor(int size, MatrixShape shape) {
    MultiPoly det(shape);
    for (const auto& perm : permutations_of(size)) {
        Monomial mono;
        for (int r = 0; r < size; ++r) mono = mono * Monomial::var(var_id(r, perm[r]));
        int inversions = 0;
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                if (perm[a] > perm[b]) ++inversions;
        det.add(mono, inversions % 2 ? Rational(-1) : Rational(1));
    }
    return det;
}

}  // namespace

MultiPoly highest_vector(const Partition& lambda, int n, int m) {
    if (lambda.length() > std::min(n, m)) throw std::invalid_argument("partition longer than min(n, m)");
    const MatrixShape shape{n, m};
    MultiPoly v = MultiPoly::constant(shape, 1);
    for (int i = 1; i <= lambda.length(); ++i) {
        int e = lambda[i - 1] - lambda[i];
        if (e > 0) v = v * power(leading_minor(i, shape), e);
    }
    return v;
}

Rational eigenvalue_on(const DiffOp& op, const MultiPoly& v) {
    if (v.is_zero()) throw std::invalid_argument("zero vector has no eigenvalue");
    MultiPoly image = apply(op, v);
    const auto& [mono, c] = *v.terms().begin();
    Rational scalar = image.coeff(mono) / c;
    if (image != v * scalar) throw NotEigenvector("operator does not act by a scalar on the given vector");
    return scalar;
}

Rational eigen_check(const Partition& mu, const Partition& lambda, int n, int m) {
    if (mu.length() > std::min(n, m) || lambda.length() > std::min(n, m))
        throw std::invalid_argument("partition longer than min(n, m)");
    return eigenvalue_on(capelli_operator(mu, n, m), highest_vector(lambda, n, m));
}

std::vector<Monomial> monomials_of_degree(MatrixShape shape, int d) {
    std::vector<int> vars;
    for (int i = 0; i < shape.rows; ++i)
        for (int j = 0; j < shape.cols; ++j) vars.push_back(var_id(i, j));
    std::vector<Monomial> out;
    std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t from, int left, Monomial cur) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = from; v < vars.size(); ++v) rec(v, left - 1, cur * Monomial::var(vars[v]));
    };
    rec(0, d, Monomial());
    return out;
}

namespace {

void check_scale(int n, int l) {
    if (n < 1 || l < 1) throw std::invalid_argument("tensor power needs n, l >= 1");
    if (l > kMaxDim || ipow(static_cast<std::size_t>(n), l) > 4096)
        throw std::invalid_argument("n^l exceeds 4096");
}

}  // namespace

RationalMatrix schur_weyl_lhs(int n, int l, const Partition& mu, ExecMode mode) {
    check_scale(n, l);
    const std::size_t dim = ipow(static_cast<std::size_t>(n), l);
    DiffOp op = capelli_operator(mu, n, l, mode);
    const MatrixShape shape{n, l};
    RationalMatrix mat(dim, std::vector<Rational>(dim));
    for_each_index(
        dim,
        [&](std::size_t col) {
            auto r = digits(col, n, l);
            Monomial phi;
            for (int t = 0; t < l; ++t) phi = phi * Monomial::var(var_id(r[t], t));
            MultiPoly v(shape);
            v.add(phi, 1);
            MultiPoly image = apply(op, v);
            for (const auto& [mono, c] : image.terms()) {
                // Decode the image back into (C^n)^{⊗l}: exactly one variable per column.
                std::vector<int> slot(static_cast<std::size_t>(l), -1);
                for (std::size_t f = 0; f < mono.factor_count(); ++f) {
                    int var = mono.factor_var(f);
                    if (mono.factor_exp(f) != 1 || slot[var_col(var)] != -1)
                        throw std::logic_error("image left the multilinear span");
                    slot[var_col(var)] = var_row(var);
                }
                std::size_t row = 0;
                for (int t = 0; t < l; ++t) {
                    if (slot[t] < 0) throw std::logic_error("image left the multilinear span");
                    row = row * static_cast<std::size_t>(n) + static_cast<std::size_t>(slot[t]);
                }
                mat[row][col] = c;
            }
        },
        mode);
    return mat;
}

RationalMatrix schur_weyl_rhs(int n, int l, const Partition& mu) {
    check_scale(n, l);
    const int k = mu.size();
    if (k > l) throw std::invalid_argument("partition larger than the tensor power");
    // (1/(k!(l-k)!)) sum_{t∈S(l)} sum_{s∈S(k)} chi^mu(s) t s t^{-1}
    std::map<std::vector<int>, Rational> weights;
    auto outer = permutations_of(l);
    auto inner = permutations_of(k);
    Integer stabilizer = factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(l - k));
    Rational norm = Rational(1) / Rational(stabilizer);
    for (const auto& s : inner) {
        Rational chi = Rational(mn_character(mu, cycle_type(s))) * norm;
        if (chi.is_zero()) continue;
        std::vector<int> shat(static_cast<std::size_t>(l));
        std::iota(shat.begin(), shat.end(), 0);
        for (int a = 0; a < k; ++a) shat[a] = s[a];
        for (const auto& t : outer) {
            std::vector<int> tinv(static_cast<std::size_t>(l));
            for (int a = 0; a < l; ++a) tinv[t[a]] = a;
            std::vector<int> conj(static_cast<std::size_t>(l));
            for (int a = 0; a < l; ++a) conj[a] = t[shat[tinv[a]]];
            weights[conj] += chi;
        }
    }
    const std::size_t dim = ipow(static_cast<std::size_t>(n), l);
    RationalMatrix mat(dim, std::vector<Rational>(dim));
    for (const auto& [pi, w] : weights) {
        if (w.is_zero()) continue;
        for (std::size_t col = 0; col < dim; ++col) {
            auto r = digits(col, n, l);
            // place permutation: the factor in slot a moves to slot pi(a)
            std::vector<int> image(static_cast<std::size_t>(l));
            for (int a = 0; a < l; ++a) image[pi[a]] = r[a];
            std::size_t row = 0;
            for (int a = 0; a < l; ++a) row = row * static_cast<std::size_t>(n) + static_cast<std::size_t>(image[a]);
            mat[row][col] += w;
        }
    }
    return mat;
}

bool schur_weyl_check(int n, int l, const Partition& mu) {
    if (mu.length() > n) throw std::invalid_argument("partition longer than n");
    return schur_weyl_lhs(n, l, mu) == schur_weyl_rhs(n, l, mu);
}

}  // namespace sstar
