#include "sstar/symmetrization.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>

#include "sstar/characters.hpp"

namespace sstar {

GeneratorWord GeneratorWord::parse(std::string_view text, int n) {
    GeneratorWord w;
    w.n = n;
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '"') s += c;
    if (s.empty()) return w;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int i = 0, j = 0;
        auto dot = tok.find('.');
        try {
            if (dot != std::string::npos) {
                i = std::stoi(tok.substr(0, dot));
                j = std::stoi(tok.substr(dot + 1));
            } else if (tok.size() == 2 && std::isdigit(static_cast<unsigned char>(tok[0])) &&
                       std::isdigit(static_cast<unsigned char>(tok[1]))) {
                i = tok[0] - '0';
                j = tok[1] - '0';
            } else {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed generator '" + tok + "'");
        }
        if (i < 1 || j < 1 || i > n || j > n)
            throw std::invalid_argument("generator index out of range in '" + tok + "'");
        w.letters.emplace_back(i - 1, j - 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return w;
}

std::string GeneratorWord::str() const {
    std::string s;
    bool wide = n > 9;
    for (std::size_t t = 0; t < letters.size(); ++t) {
        if (t) s += ',';
        s += std::to_string(letters[t].first + 1) + (wide ? "." : "") + std::to_string(letters[t].second + 1);
    }
    return s;
}

std::vector<SetPartition> set_partitions(int k) {
    std::vector<SetPartition> out;
    std::vector<int> block(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == k) {
            SetPartition p;
            p.clusters.assign(static_cast<std::size_t>(used), {});
            for (int a = 0; a < k; ++a) p.clusters[block[a]].push_back(a);
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

MultiPoly word_as_monomial(const GeneratorWord& w) {
    Monomial m;
    for (auto [i, j] : w.letters) m = m * evar(i, j);
    MultiPoly p(MatrixShape{w.n, w.n});
    p.add(m, 1);
    return p;
}

namespace {

DiffOp r_generator(int r, int s, int dim, int rows) {
    DiffOp op(MatrixShape{rows, dim});
    for (int i = 0; i < rows; ++i) op.add(Monomial::var(var_id(i, r)), Monomial::var(var_id(i, s)), 1);
    return op;
}

// ⟨E_{a1 b1} E_{a2 b2} ...⟩ as a single generator, or nothing when the product vanishes.
std::optional<std::pair<int, int>> bracket(const std::vector<std::pair<int, int>>& letters) {
    if (letters.empty()) return std::nullopt;
    for (std::size_t t = 1; t < letters.size(); ++t)
        if (letters[t - 1].second != letters[t].first) return std::nullopt;
    return std::make_pair(letters.front().first, letters.back().second);
}

// Expands a symmetric-algebra monomial into its factor list with repetitions.
std::vector<std::pair<int, int>> factor_list(const Monomial& m) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t f = 0; f < m.factor_count(); ++f)
        for (int e = 0; e < m.factor_exp(f); ++e) out.emplace_back(var_row(m.factor_var(f)), var_col(m.factor_var(f)));
    return out;
}

std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

DiffOp r_map(const GeneratorWord& w, int rows) {
    DiffOp op = DiffOp::identity(MatrixShape{rows, w.n});
    for (auto [r, s] : w.letters) op = compose(op, r_generator(r, s, w.n, rows));
    return op;
}

DiffOp r_map(const WordCombination& c, int dim, int rows) {
    DiffOp op(MatrixShape{rows, dim});
    for (const auto& [coef, w] : c) op += r_map(w, rows) * coef;
    return op;
}

DiffOp r_linear(const RationalMatrix& a, int rows) {
    const int n = static_cast<int>(a.size());
    DiffOp op(MatrixShape{rows, n});
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            if (!a[r][s].is_zero()) op += r_generator(r, s, n, rows) * a[r][s];
    return op;
}

WordCombination casimir_word(int n) {
    WordCombination c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.emplace_back(Rational(1), GeneratorWord{n, {{i, j}, {j, i}}});
    return c;
}

DiffOp sigma(const MultiPoly& e_poly, int dim, int rows) {
    DiffOp op(MatrixShape{rows, dim});
    for (const auto& [mono, c] : e_poly.terms()) {
        auto f = factor_list(mono);
        const std::size_t k = f.size();
        const std::size_t count = ipow(static_cast<std::size_t>(rows), k);
        for (std::size_t a = 0; a < count; ++a) {
            Monomial x, d;
            std::size_t rest = a;
            for (std::size_t t = 0; t < k; ++t) {
                int alpha = static_cast<int>(rest % static_cast<std::size_t>(rows));
                rest /= static_cast<std::size_t>(rows);
                x = x * Monomial::var(var_id(alpha, f[t].first));
                d = d * Monomial::var(var_id(alpha, f[t].second));
            }
            op.add(x, d, c);
        }
    }
    return op;
}

WordCombination sigma_words(const MultiPoly& e_poly, int dim) {
    std::map<std::vector<std::pair<int, int>>, Rational> acc;
    for (const auto& [mono, c] : e_poly.terms()) {
        auto f = factor_list(mono);
        const int k = static_cast<int>(f.size());
        auto perms = permutations_of(k);
        for (const auto& lambda : partitions_of(k)) {
            Rational w = c / Rational(z_factor(lambda));
            if ((k - lambda.length()) % 2) w = -w;
            for (const auto& s : perms) {
                std::vector<std::pair<int, int>> word;
                std::size_t pos = 0;
                bool vanished = false;
                for (int part : lambda.parts()) {
                    std::vector<std::pair<int, int>> block;
                    for (int t = 0; t < part; ++t) block.push_back(f[s[pos++]]);
                    auto g = bracket(block);
                    if (!g) {
                        vanished = true;
                        break;
                    }
                    word.push_back(*g);
                }
                if (!vanished) acc[word] += w;
            }
        }
    }
    WordCombination out;
    for (auto& [letters, c] : acc)
        if (!c.is_zero()) out.emplace_back(c, GeneratorWord{dim, letters});
    return out;
}

MultiPoly sigma_inverse(const GeneratorWord& w) {
    MultiPoly out(MatrixShape{w.n, w.n});
    for (const auto& xi : set_partitions(w.length())) {
        Monomial m;
        bool vanished = false;
        for (const auto& cluster : xi.clusters) {
            std::vector<std::pair<int, int>> block;
            for (int a : cluster) block.push_back(w.letters[a]);
            auto g = bracket(block);
            if (!g) {
                vanished = true;
                break;
            }
            m = m * evar(g->first, g->second);
        }
        if (!vanished) out.add(m, 1);
    }
    return out;
}

MultiPoly sigma_inverse(const WordCombination& c, int dim) {
    MultiPoly out(MatrixShape{dim, dim});
    for (const auto& [coef, w] : c) out += sigma_inverse(w) * coef;
    return out;
}

MultiPoly s_mu_element(const Partition& mu, int n) {
    const int k = mu.size();
    MultiPoly out(MatrixShape{n, n});
    auto perms = permutations_of(k);
    Rational kfact(factorial(static_cast<unsigned>(k)));
    std::vector<Rational> weight;
    for (const auto& s : perms) weight.push_back(Rational(mn_character(mu, cycle_type(s))) / kfact);
    const std::size_t count = ipow(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    for (std::size_t a = 0; a < count; ++a) {
        std::vector<int> i(static_cast<std::size_t>(k));
        std::size_t rest = a;
        for (int t = 0; t < k; ++t) {
            i[t] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        for (std::size_t s = 0; s < perms.size(); ++s) {
            if (weight[s].is_zero()) continue;
            Monomial m;
            for (int t = 0; t < k; ++t) m = m * evar(i[t], i[perms[s][t]]);
            out.add(m, weight[s]);
        }
    }
    return out;
}

MultiPoly matrix_power_element(const RationalMatrix& a, int k) {
    const int n = static_cast<int>(a.size());
    MultiPoly lin(MatrixShape{n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lin.add(evar(i, j), a[i][j]);
    return power(lin, k);
}

namespace {

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size();
    RationalMatrix c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

RationalMatrix matpow(const RationalMatrix& a, int p) {
    const std::size_t n = a.size();
    RationalMatrix r(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    for (int t = 0; t < p; ++t) r = matmul(r, a);
    return r;
}

}  // namespace

SigmaPowerReport sigma_power_report(const RationalMatrix& a, int k) {
    const int n = static_cast<int>(a.size());
    const MatrixShape shape{n, n};
    SigmaPowerReport rep;
    DiffOp lhs = sigma(matrix_power_element(a, k), n, n);

    DiffOp rhs(shape);
    Rational kfact(factorial(static_cast<unsigned>(k)));
    for (const auto& lambda : partitions_of(k)) {
        Rational c = kfact / Rational(z_factor(lambda));
        if ((k - lambda.length()) % 2) c = -c;
        DiffOp term = DiffOp::identity(shape);
        for (int part : lambda.parts()) term = compose(term, r_linear(matpow(a, part), n));
        rhs += term * c;
    }
    rep.power_formula = lhs == rhs;

    rep.idempotent = matmul(a, a) == a;
    if (rep.idempotent) {
        DiffOp ra = r_linear(a, n);
        DiffOp prod = DiffOp::identity(shape);
        for (int t = 0; t < k; ++t) prod = compose(prod, ra - DiffOp::identity(shape) * Rational(t));
        rep.idempotent_formula = prod == lhs;
    }
    return rep;
}

bool sigma_power_check(const RationalMatrix& a, int k) {
    auto rep = sigma_power_report(a, k);
    return rep.power_formula && (!rep.idempotent || rep.idempotent_formula);
}

}  // namespace sstar
