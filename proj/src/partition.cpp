#include "sstar/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sstar {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition with a negative part");
        if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
        size_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

std::string Partition::str() const { return join(parts_); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > (*this)[i]) return false;
    return true;
}

Signature::Signature(std::vector<int> entries) : e_(std::move(entries)) {
    for (std::size_t i = 1; i < e_.size(); ++i)
        if (e_[i] > e_[i - 1]) throw std::invalid_argument("signature entries must weakly decrease");
}

Signature Signature::parse(std::string_view text) { return Signature(parse_int_list(text)); }

std::string Signature::str() const { return join(e_); }

Partition Signature::to_partition() const {
    if (!is_partition()) throw std::invalid_argument("signature has negative entries");
    return Partition(e_);
}

Signature Signature::from_partition(const Partition& p, int n) {
    if (p.length() > n) throw std::invalid_argument("partition longer than the signature length");
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = p[i];
    return Signature(std::move(e));
}

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner)) throw std::invalid_argument("inner shape is not contained in the outer shape");
}

SkewShape SkewShape::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(Partition::parse(text), Partition());
    return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::str() const { return outer.str() + "/" + inner.str(); }

std::vector<Partition> partitions_of(int k, int max_length) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_length) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

std::vector<Partition> partitions_of(int k) { return partitions_of(k, k); }

std::vector<Partition> partitions_up_to(int d, int max_length) {
    std::vector<Partition> out;
    for (int k = 0; k <= d; ++k) {
        auto p = partitions_of(k, max_length);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

std::vector<Partition> partitions_up_to(int d) { return partitions_up_to(d, d); }

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int row) {
        if (row == lambda.length()) {
            out.emplace_back(cur);
            return;
        }
        int cap = row == 0 ? lambda[0] : std::min(lambda[row], cur.back());
        for (int p = cap; p >= 0; --p) {
            cur.push_back(p);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), GradedOrder{});
    return out;
}

Integer hook_product(const Partition& mu) {
    Partition c = mu.conjugate();
    Integer h = 1;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) h *= (mu[i] - j) + (c[j] - i) - 1;
    return h;
}

Integer dim_sym(const Partition& mu) {
    Integer by_hooks = factorial(mu.size()) / hook_product(mu);
    int n = mu.length();
    Integer num = factorial(mu.size());
    Integer den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) num *= mu[i] - mu[j] - i + j;
        den *= factorial(mu[i] + n - i - 1);
    }
    Integer by_shifted = num / den;
    if (by_hooks != by_shifted || num % den != 0)
        throw std::logic_error("dimension formulas disagree for " + mu.str());
    return by_hooks;
}

Integer up_factorial(long n, const Partition& mu) {
    Integer r = 1;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) r *= n + content(i, j);
    return r;
}

Integer dim_gl(const Signature& lambda) {
    Integer num = 1, den = 1;
    int n = lambda.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
        }
    if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer for " + lambda.str());
    return num / den;
}

Integer dim_gl(int n, const Partition& lambda) {
    if (lambda.length() > n)
        throw std::invalid_argument("partition " + lambda.str() + " has more than " + std::to_string(n) + " rows");
    Integer up = up_factorial(n, lambda);
    Integer h = hook_product(lambda);
    Integer weyl = dim_gl(Signature::from_partition(lambda, n));
    if (up % h != 0 || up / h != weyl) throw std::logic_error("GL dimension formulas disagree for " + lambda.str());
    return weyl;
}

Integer syt_count_skew(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return 0;
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int i = 0; i < outer.length(); ++i)
        for (int j = inner[i]; j < outer[i]; ++j) cells.push_back({i, j});
    const int total = static_cast<int>(cells.size());
    if (total == 0) return 1;
    std::vector<std::vector<int>> val(outer.length());
    for (int i = 0; i < outer.length(); ++i) val[i].assign(outer[i], 0);
    std::vector<bool> used(total + 1, false);
    Integer count = 0;
    std::function<void(int)> fill = [&](int idx) {
        if (idx == total) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 0;
        if (c > inner[r]) lo = std::max(lo, val[r][c - 1]);
        if (r > 0 && c >= inner[r - 1]) lo = std::max(lo, val[r - 1][c]);
        for (int v = lo + 1; v <= total; ++v) {
            if (used[v]) continue;
            used[v] = true;
            val[r][c] = v;
            fill(idx + 1);
            used[v] = false;
        }
        val[r][c] = 0;
    };
    fill(0);
    return count;
}

std::vector<Signature> interlacing(const Signature& lambda) {
    std::vector<Signature> out;
    int n = lambda.n();
    if (n == 0) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            out.emplace_back(cur);
            return;
        }
        for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Partition> successors(const Partition& mu) {
    std::vector<Partition> out;
    for (int i = 0; i <= mu.length(); ++i) {
        if (i > 0 && mu[i] == mu[i - 1]) continue;
        std::vector<int> p = mu.parts();
        if (i == mu.length()) p.push_back(1);
        else ++p[i];
        out.emplace_back(std::move(p));
    }
    return out;
}

std::vector<Partition> interlaced_below(const Partition& mu) {
    if (mu.empty()) return {Partition()};
    std::vector<Partition> out;
    for (const auto& s : interlacing(Signature::from_partition(mu, mu.length() + 1)))
        out.push_back(s.to_partition());
    return out;
}

}  // namespace sstar
