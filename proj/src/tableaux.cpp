#include "sstar/tableaux.hpp"

#include <stdexcept>

namespace sstar {

int ReverseTableau::entry(int row, int col) const {
    for (int i = 1; i <= n; ++i)
        if (col < chain[i - 1][row] && col >= chain[i][row]) return i;
    throw std::out_of_range("box outside the tableau shape");
}

std::vector<std::vector<int>> ReverseTableau::rows() const {
    std::vector<std::vector<int>> out(shape.length());
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c) out[r].push_back(entry(r, c));
    return out;
}

ReverseTableauStream::ReverseTableauStream(Partition mu, int n) : mu_(std::move(mu)), n_(n) {
    if (n < 0) throw std::invalid_argument("negative number of variables");
}

std::vector<Partition> ReverseTableauStream::options_below(const Partition& p, int level) const {
    std::vector<Partition> out;
    for (auto& nu : interlaced_below(p))
        if (nu.length() <= n_ - level) out.push_back(std::move(nu));
    return out;
}

bool ReverseTableauStream::descend() {
    while (static_cast<int>(chain_.size()) < n_ + 1) {
        int level = static_cast<int>(chain_.size());
        auto opts = options_below(chain_.back(), level);
        if (opts.empty()) return false;
        chain_.push_back(opts.front());
        stack_.push_back(Level{std::move(opts), 0});
    }
    return true;
}

std::optional<ReverseTableau> ReverseTableauStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (mu_.length() > n_) {
            done_ = true;
            return std::nullopt;
        }
        chain_ = {mu_};
        descend();
        return ReverseTableau{mu_, n_, chain_};
    }
    while (!stack_.empty()) {
        Level& top = stack_.back();
        if (top.pos + 1 < top.options.size()) {
            ++top.pos;
            chain_.resize(stack_.size());
            chain_.push_back(top.options[top.pos]);
            descend();
            return ReverseTableau{mu_, n_, chain_};
        }
        stack_.pop_back();
    }
    done_ = true;
    return std::nullopt;
}

SSYTStream::SSYTStream(Partition mu, int n) : mu_(std::move(mu)), n_(n) {
    if (n < 0) throw std::invalid_argument("negative number of variables");
    t_.resize(mu_.length());
    for (int r = 0; r < mu_.length(); ++r) {
        t_[r].assign(mu_[r], 0);
        for (int c = 0; c < mu_[r]; ++c) cells_.emplace_back(r, c);
    }
}

int SSYTStream::lower_bound(std::size_t idx) const {
    auto [r, c] = cells_[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t_[r][c - 1]);
    if (r > 0) lo = std::max(lo, t_[r - 1][c] + 1);
    return lo;
}

// Largest value a box may hold and still leave room for the column below it.
static int upper_bound_for(const Partition& conj, int n, int r, int c) { return n - (conj[c] - r - 1); }

bool SSYTStream::advance(std::size_t from) {
    Partition conj = mu_.conjugate();
    for (std::size_t i = from; i < cells_.size(); ++i) {
        auto [r, c] = cells_[i];
        int v = lower_bound(i);
        if (v > upper_bound_for(conj, n_, r, c)) return false;
        t_[r][c] = v;
    }
    return true;
}

std::optional<SSYT> SSYTStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (mu_.length() > n_ || !advance(0)) {
            done_ = true;
            return std::nullopt;
        }
        return SSYT{mu_, t_};
    }
    Partition conj = mu_.conjugate();
    for (std::size_t i = cells_.size(); i-- > 0;) {
        auto [r, c] = cells_[i];
        if (t_[r][c] < upper_bound_for(conj, n_, r, c)) {
            ++t_[r][c];
            if (advance(i + 1)) return SSYT{mu_, t_};
        }
    }
    done_ = true;
    return std::nullopt;
}

std::vector<ReverseTableau> enumerate_reverse(const Partition& mu, int n) {
    std::vector<ReverseTableau> out;
    ReverseTableauStream s(mu, n);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<SSYT> enumerate_ssyt(const Partition& mu, int n) {
    std::vector<SSYT> out;
    SSYTStream s(mu, n);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

Rational ssyt_monomial_sum(const Partition& mu, const std::vector<Rational>& x, int n) {
    if (static_cast<int>(x.size()) > n) throw std::invalid_argument("more coordinates than variables");
    Rational total;
    SSYTStream s(mu, n);
    while (auto t = s.next()) {
        Rational term(1);
        for (const auto& row : t->rows)
            for (int v : row) {
                if (v > static_cast<int>(x.size())) {
                    term = 0;
                    break;
                }
                term *= x[v - 1];
            }
        total += term;
    }
    return total;
}

}  // namespace sstar
