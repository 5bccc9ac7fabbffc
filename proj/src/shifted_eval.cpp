#include "sstar/shifted_eval.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "sstar/tableaux.hpp"

namespace sstar {

EvalPoint EvalPoint::from(const Partition& p) {
    std::vector<Rational> x;
    for (int v : p.parts()) x.emplace_back(v);
    return EvalPoint(std::move(x));
}

EvalPoint EvalPoint::from(const Signature& s) {
    std::vector<Rational> x;
    for (int v : s.entries()) x.emplace_back(v);
    return EvalPoint(std::move(x));
}

EvalPoint EvalPoint::parse(std::string_view text) {
    std::vector<Rational> x;
    std::string s(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) return EvalPoint();
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        x.push_back(Rational::parse(std::string_view(s).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return EvalPoint(std::move(x));
}

std::vector<Rational> EvalPoint::padded(int n) const {
    std::vector<Rational> out(x);
    if (static_cast<int>(out.size()) > n) {
        for (int i = n; i < size(); ++i)
            if (!out[i].is_zero()) throw std::invalid_argument("point has more nonzero coordinates than variables");
        out.resize(n);
    }
    out.resize(n);
    return out;
}

std::string EvalPoint::str() const {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += x[i].str();
    }
    return s;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Rational sstar_det(const Partition& mu, const EvalPoint& x, int n) {
    if (n < x.size()) throw std::invalid_argument("fewer variables than coordinates");
    if (mu.length() > n) return 0;
    auto y = x.padded(n);
    std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        Rational shifted = y[i] + Rational(n - 1 - i);
        for (int j = 0; j < n; ++j) {
            num[i][j] = falling(shifted, static_cast<unsigned>(mu[j] + n - 1 - j));
            den[i][j] = falling(shifted, static_cast<unsigned>(n - 1 - j));
        }
    }
    Rational d = determinant(std::move(den));
    if (d.is_zero()) throw SingularPoint("shifted coordinates coincide at (" + x.str() + ")");
    return determinant(std::move(num)) / d;
}

Rational sstar_det(const Partition& mu, const EvalPoint& x) {
    return sstar_det(mu, x, std::max(mu.length(), x.size()));
}

namespace {

// (x ↓ outer/inner) = prod over the skew boxes of (x - c(box))
Rational skew_falling(const Rational& x, const Partition& outer, const Partition& inner) {
    Rational r(1);
    for (int row = 0; row < outer.length(); ++row)
        for (int col = inner[row]; col < outer[row]; ++col) r *= x - Rational(content(row, col));
    return r;
}

}  // namespace

Rational sstar_comb(const Partition& mu, const EvalPoint& x) {
    const int n = x.size();
    if (mu.length() > n) return 0;
    // Walks the reverse-tableau chains level by level; the partial product for
    // a chain prefix is shared by every completion of that prefix.
    std::map<std::pair<int, Partition>, Rational> memo;
    std::function<Rational(int, const Partition&)> rec = [&](int level, const Partition& p) -> Rational {
        if (level == n) return p.empty() ? Rational(1) : Rational(0);
        auto key = std::make_pair(level, p);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Rational total;
        for (const auto& nu : interlaced_below(p)) {
            if (nu.length() > n - level - 1) continue;
            Rational f = skew_falling(x.x[level], p, nu);
            if (f.is_zero()) continue;
            total += f * rec(level + 1, nu);
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(0, mu);
}

Rational sstar_at_signature(const Partition& mu, const Signature& lambda) {
    return sstar_det(mu, EvalPoint::from(lambda), lambda.n());
}

Rational sstar_at(const Partition& mu, const Partition& lambda) {
    if (!lambda.contains(mu)) return 0;
    static std::mutex mtx;
    static std::map<std::pair<Partition, Partition>, Rational> cache;
    auto key = std::make_pair(mu, lambda);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Rational v = sstar_comb(mu, EvalPoint::from(lambda));
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, v);
    return v;
}

Rational factorial_t(const Partition& mu, const EvalPoint& x, int n) {
    if (n < x.size()) throw std::invalid_argument("fewer variables than coordinates");
    if (mu.length() > n) return 0;
    auto y = x.padded(n);
    std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            num[i][j] = falling(y[i], static_cast<unsigned>(mu[j] + n - 1 - j));
            den[i][j] = falling(y[i], static_cast<unsigned>(n - 1 - j));
        }
    Rational d = determinant(std::move(den));
    if (d.is_zero()) throw SingularPoint("coordinates coincide at (" + x.str() + ")");
    return determinant(std::move(num)) / d;
}

Rational schur_eval(const Partition& mu, const EvalPoint& x, int n) {
    if (n < x.size()) throw std::invalid_argument("fewer variables than coordinates");
    if (mu.length() > n) return 0;
    auto y = x.padded(n);
    std::set<Rational> seen(y.begin(), y.end());
    if (static_cast<int>(seen.size()) < n) return ssyt_monomial_sum(mu, y, n);
    std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            num[i][j] = pow(y[i], static_cast<unsigned>(mu[j] + n - 1 - j));
            den[i][j] = pow(y[i], static_cast<unsigned>(n - 1 - j));
        }
    return determinant(std::move(num)) / determinant(std::move(den));
}

Generator parse_generator(std::string_view name) {
    if (name == "h" || name == "h*") return Generator::HStar;
    if (name == "e" || name == "e*") return Generator::EStar;
    if (name == "p" || name == "p*") return Generator::PStar;
    if (name == "phat" || name == "p^") return Generator::PHat;
    if (name == "pcheck" || name == "pv") return Generator::PCheck;
    if (name == "pcirc" || name == "po") return Generator::PCirc;
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::string generator_name(Generator g) {
    switch (g) {
        case Generator::HStar: return "h*";
        case Generator::EStar: return "e*";
        case Generator::PStar: return "p*";
        case Generator::PHat: return "phat";
        case Generator::PCheck: return "pcheck";
        case Generator::PCirc: return "pcirc";
    }
    return "?";
}

namespace {

// Sum over index sequences i_1 <= ... <= i_k (strict when `strict`) of
// prod_t (x_{i_t} + shift(t)), t = 1..k.
Rational index_sequence_sum(const std::vector<Rational>& x, int k, bool strict, const std::function<long(int)>& shift) {
    const int n = static_cast<int>(x.size());
    std::function<Rational(int, int)> rec = [&](int t, int from) -> Rational {
        if (t > k) return 1;
        Rational total;
        for (int i = from; i < n; ++i) {
            Rational f = x[i] + Rational(shift(t));
            if (f.is_zero()) continue;
            total += f * rec(t + 1, strict ? i + 1 : i);
        }
        return total;
    };
    return rec(1, 0);
}

}  // namespace

TruncatedSeries h_e_series(SeriesKind kind, const EvalPoint& x, unsigned order) {
    std::vector<Rational> numer, denom;
    for (int i = 1; i <= x.size(); ++i) {
        const Rational& xi = x.x[i - 1];
        if (kind == SeriesKind::H) {
            numer.emplace_back(-i);
            denom.push_back(xi - Rational(i));
        } else {
            numer.push_back(Rational(i - 1) - xi);
            denom.emplace_back(i - 1);
        }
    }
    return rational_fn_series(numer, denom, order);
}

Rational generator_eval(Generator g, int k, const EvalPoint& x, unsigned order) {
    if (k < 0) return 0;
    const int n = x.size();
    switch (g) {
        case Generator::HStar:
            return index_sequence_sum(x.x, k, false, [k](int t) { return static_cast<long>(t - k); });
        case Generator::EStar:
            return index_sequence_sum(x.x, k, true, [k](int t) { return static_cast<long>(k - t); });
        case Generator::PStar: {
            Rational s;
            for (int i = 1; i <= n; ++i) s += pow(x.x[i - 1] - Rational(i), k) - pow(Rational(-i), k);
            return s;
        }
        case Generator::PHat: {
            Rational s;
            for (int i = 1; i <= n; ++i) s += raising(x.x[i - 1] - Rational(i), k) - raising(Rational(-i), k);
            return s;
        }
        case Generator::PCheck: {
            Rational s;
            for (int i = 1; i <= n; ++i)
                s += falling(x.x[i - 1] + Rational(1 - i), k) - falling(Rational(1 - i), k);
            return s;
        }
        case Generator::PCirc: {
            if (order == 0) order = static_cast<unsigned>(k + 2);
            if (order < static_cast<unsigned>(k + 1))
                throw std::invalid_argument("series order too small for the requested coefficient");
            // 1 + u^{-1} P°(u) = H*(u) / H*(u-1)
            std::vector<Rational> numer, denom;
            for (int i = 1; i <= n; ++i) {
                const Rational& xi = x.x[i - 1];
                numer.emplace_back(-i);
                numer.push_back(xi - Rational(i - 1));
                denom.push_back(xi - Rational(i));
                denom.emplace_back(1 - i);
            }
            return rational_fn_series(numer, denom, order).coeff(static_cast<unsigned>(k + 1));
        }
    }
    return 0;
}

Rational sstar_jt_shifted(const Partition& mu, const EvalPoint& x, int n) {
    if (mu.length() > n) return 0;
    auto y = x.padded(n);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> shifted(y);
        for (auto& v : shifted) v += Rational(j);
        EvalPoint pt(std::move(shifted));
        for (int i = 0; i < n; ++i) m[i][j] = generator_eval(Generator::HStar, mu[i] - i + j, pt);
    }
    return determinant(std::move(m));
}

}  // namespace sstar
