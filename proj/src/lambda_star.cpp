#include "sstar/lambda_star.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "sstar/characters.hpp"
#include "sstar/parallel.hpp"

namespace sstar {

Combination::Combination(Map terms) {
    for (auto& [mu, c] : terms)
        if (!c.is_zero()) terms_.emplace(mu, c);
}

Combination Combination::basis(const Partition& mu, const Rational& c) {
    Combination r;
    r.add(mu, c);
    return r;
}

Rational Combination::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational() : it->second;
}

int Combination::degree() const {
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
}

void Combination::add(const Partition& mu, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Combination& Combination::operator+=(const Combination& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

Combination& Combination::operator-=(const Combination& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
}

Combination& Combination::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, c] : terms_) c *= s;
    return *this;
}

std::string Combination::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [mu, c] : terms_) j["[" + mu.str() + "]"] = c.str();
    return j.dump();
}

std::string Combination::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*s[" << mu.str() << "]";
    }
    return os.str();
}

Rational ShiftedElement::operator()(const Partition& lambda) const {
    Rational v;
    for (const auto& [mu, c] : terms()) v += c * sstar_at(mu, lambda);
    return v;
}

Rational ShiftedElement::operator()(const EvalPoint& x) const {
    Rational v;
    for (const auto& [mu, c] : terms()) v += c * sstar_comb(mu, x);
    return v;
}

ShiftedElement expand_from_oracle(const PartitionOracle& f, int d) {
    if (d < 0) d = 0;
    auto grid = partitions_up_to(d + 1);
    auto values = oracle_values(grid, f);
    ShiftedElement result;
    std::size_t idx = 0;
    for (; idx < grid.size() && grid[idx].size() <= d; ++idx) {
        const Partition& lambda = grid[idx];
        Rational rest = values[idx] - result(lambda);
        if (!rest.is_zero()) result.add(lambda, rest / Rational(hook_product(lambda)));
    }
    for (; idx < grid.size(); ++idx)
        if (result(grid[idx]) != values[idx])
            throw ExpansionError("oracle is not of degree <= " + std::to_string(d) + " (mismatch at " +
                                 grid[idx].str() + ")");
    return result;
}

ShiftedElement multiply(const ShiftedElement& a, const ShiftedElement& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return expand_from_oracle([&](const Partition& l) { return a(l) * b(l); }, a.degree() + b.degree());
}

ShiftedElement pieri_rhs(const Partition& mu) {
    ShiftedElement r;
    for (const auto& nu : successors(mu)) r.add(nu, 1);
    return r;
}

ShiftedElement omega(const ShiftedElement& a) {
    if (a.is_zero()) return {};
    return expand_from_oracle([&](const Partition& l) { return a(l.conjugate()); }, a.degree());
}

ShiftedElement generator_element(Generator g, int k) {
    if (k < 0) return {};
    return expand_from_oracle([&](const Partition& l) { return generator_eval(g, k, EvalPoint::from(l)); }, k);
}

namespace {

ShiftedElement phi_series(int k, int r, bool rows) {
    if (k < 0) return {};
    if (k == 0) return ShiftedElement::one();
    ShiftedElement out;
    for (int i = 0; i <= r && i <= k; ++i) {
        Rational c = Rational(binomial(r, i)) * falling(Rational(k - 1), static_cast<unsigned>(i));
        if (c.is_zero()) continue;
        int m = k - i;
        std::vector<int> shape = rows ? std::vector<int>{m} : std::vector<int>(static_cast<std::size_t>(m), 1);
        out.add(Partition(std::move(shape)), c);
    }
    return out;
}

ShiftedElement det_expand(const std::vector<std::vector<ShiftedElement>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return ShiftedElement::one();
    if (n == 1) return m[0][0];
    ShiftedElement total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<ShiftedElement>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<ShiftedElement> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        ShiftedElement sub = det_expand(minor);
        if (sub.is_zero()) continue;
        ShiftedElement term = multiply(m[0][j], sub);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

}  // namespace

ShiftedElement phi_h(int k, int r) { return phi_series(k, r, true); }
ShiftedElement phi_inv_e(int k, int r) { return phi_series(k, r, false); }

JTVariant parse_jt_variant(std::string_view name) {
    if (name == "h") return JTVariant::H;
    if (name == "e") return JTVariant::E;
    if (name == "giambelli" || name == "g") return JTVariant::Giambelli;
    throw std::invalid_argument("unknown determinant variant '" + std::string(name) + "'");
}

ShiftedElement jacobi_trudi(const Partition& mu, JTVariant variant) {
    std::vector<std::vector<ShiftedElement>> m;
    if (variant == JTVariant::H) {
        const int l = mu.length();
        m.assign(l, std::vector<ShiftedElement>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) m[i][j] = phi_h(mu[i] - i + j, j);
    } else if (variant == JTVariant::E) {
        Partition c = mu.conjugate();
        const int l = c.length();
        m.assign(l, std::vector<ShiftedElement>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) m[i][j] = phi_inv_e(c[i] - i + j, j);
    } else {
        Partition c = mu.conjugate();
        int r = 0;
        while (r < mu.length() && mu[r] > r) ++r;
        m.assign(r, std::vector<ShiftedElement>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                // hook (alpha | beta) = (alpha + 1, 1^beta)
                int alpha = mu[i] - i - 1, beta = c[j] - j - 1;
                std::vector<int> hook{alpha + 1};
                hook.insert(hook.end(), static_cast<std::size_t>(beta), 1);
                m[i][j] = ShiftedElement::sstar(Partition(std::move(hook)));
            }
    }
    return det_expand(m);
}

std::map<Partition, Rational, GradedOrder> binomial_coeffs(const Partition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("partition longer than the number of variables");
    std::map<Partition, Rational, GradedOrder> out;
    for (const auto& mu : subpartitions(lambda)) out.emplace(mu, sstar_at(mu, lambda) / Rational(up_factorial(n, mu)));
    return out;
}

bool binomial_check(const Partition& lambda, int n, const std::vector<EvalPoint>& points) {
    auto coeffs = binomial_coeffs(lambda, n);
    Rational dim(dim_gl(n, lambda));
    for (const auto& x : points) {
        auto y = x.padded(n);
        std::vector<Rational> shifted(y);
        for (auto& v : shifted) v += Rational(1);
        Rational lhs = schur_eval(lambda, EvalPoint(shifted), n) / dim;
        Rational rhs;
        for (const auto& [mu, c] : coeffs) rhs += c * schur_eval(mu, EvalPoint(y), n);
        if (lhs != rhs) return false;
    }
    return true;
}

std::pair<Rational, Rational> coherence_sides(int n, const Partition& mu, const Signature& lambda) {
    if (lambda.n() != n + 1) throw std::invalid_argument("signature must have n + 1 entries");
    if (mu.length() > n) throw std::invalid_argument("partition longer than n");
    Rational lhs = sstar_at_signature(mu, lambda) / Rational(up_factorial(n + 1, mu));
    Rational dim_top(dim_gl(lambda));
    Rational rhs;
    Rational up_n(up_factorial(n, mu));
    for (const auto& nu : interlacing(lambda))
        rhs += Rational(dim_gl(nu)) / dim_top * sstar_at_signature(mu, nu) / up_n;
    return {lhs, rhs};
}

bool coherence_check(int n, const Partition& mu, const Signature& lambda) {
    auto [lhs, rhs] = coherence_sides(n, mu, lambda);
    return lhs == rhs;
}

ShiftedElement phi_map(const SymElement& f) { return ShiftedElement(Combination(f.terms())); }

SymElement power_sum(const Partition& rho) {
    SymElement p;
    for (const auto& lambda : partitions_of(rho.size())) p.add(lambda, Rational(mn_character(lambda, rho)));
    return p;
}

ShiftedElement psharp(const Partition& rho) { return phi_map(power_sum(rho)); }

Rational dim_skew_formula(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return 0;
    return Rational(dim_sym(outer)) * sstar_at(inner, outer) /
           falling(Rational(outer.size()), static_cast<unsigned>(inner.size()));
}

Integer dim_skew(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return 0;
    Rational v = dim_skew_formula(outer, inner);
    if (!v.is_integer()) throw std::logic_error("skew dimension " + v.str() + " is not an integer");
    if (v.numerator() != syt_count_skew(outer, inner))
        throw std::logic_error("skew dimension disagrees with tableau enumeration for " + outer.str() + "/" + inner.str());
    return v.numerator();
}

Integer dim_skew(const SkewShape& shape) { return dim_skew(shape.outer, shape.inner); }

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    ShiftedElement parse() {
        ShiftedElement e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("expression: " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    ShiftedElement expr() {
        ShiftedElement e = term();
        while (true) {
            if (eat('+')) e += term();
            else if (eat('-')) e -= term();
            else return e;
        }
    }
    ShiftedElement term() {
        ShiftedElement e = unary();
        while (eat('*')) e = multiply(e, unary());
        return e;
    }
    ShiftedElement unary() {
        if (eat('-')) return unary() * Rational(-1);
        return atom();
    }
    ShiftedElement atom() {
        skip();
        if (eat('(')) {
            ShiftedElement e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat_word("omega(")) {
            ShiftedElement e = expr();
            if (!eat(')')) fail("expected ')'");
            return omega(e);
        }
        if (eat('s')) {
            if (!eat('[')) fail("expected '[' after s");
            std::size_t close = s_.find(']', pos_);
            if (close == std::string_view::npos) fail("unterminated s[");
            Partition mu = Partition::parse(s_.substr(pos_, close - pos_));
            pos_ = close + 1;
            return ShiftedElement::sstar(mu);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        if (start == pos_) fail("expected a factor");
        return ShiftedElement::one() * Rational::parse(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ShiftedElement parse_expression(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace sstar
