#include "sstar/series.hpp"

#include <stdexcept>

namespace sstar {

TruncatedSeries::TruncatedSeries(unsigned order) : order_(order), c_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    if (c_.size() > order_ + 1) throw std::invalid_argument("more coefficients than the truncation order allows");
    c_.resize(order_ + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::inverse_linear(const Rational& a, unsigned order) {
    TruncatedSeries s(order);
    Rational p(1);
    for (unsigned j = 1; j <= order; ++j) {
        s.c_[j] = p;
        p *= a;
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncate(unsigned order) const {
    std::vector<Rational> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order_ != order_) throw std::invalid_argument("series orders differ");
    for (unsigned j = 0; j <= order_; ++j) c_[j] += o.c_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order_ != order_) throw std::invalid_argument("series orders differ");
    for (unsigned j = 0; j <= order_; ++j) c_[j] -= o.c_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("series orders differ");
    TruncatedSeries r(a.order_);
    for (unsigned i = 0; i <= a.order_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= a.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (c_[0].is_zero()) throw std::domain_error("series with zero constant term has no reciprocal");
    TruncatedSeries r(order_);
    Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (unsigned j = 1; j <= order_; ++j) {
        Rational acc;
        for (unsigned i = 1; i <= j; ++i) acc += c_[i] * r.c_[j - i];
        r.c_[j] = -acc * inv0;
    }
    return r;
}

namespace {

// 1/(u)↓r for r = 0..order
std::vector<TruncatedSeries> inverse_falling_basis(unsigned count, unsigned order) {
    std::vector<TruncatedSeries> basis;
    basis.reserve(count);
    TruncatedSeries cur = TruncatedSeries::constant(1, order);
    for (unsigned r = 0; r < count; ++r) {
        basis.push_back(cur);
        cur = cur * TruncatedSeries::inverse_linear(Rational(static_cast<long>(r)), order);
    }
    return basis;
}

}  // namespace

TruncatedSeries inverse_falling_to_powers(const std::vector<Rational>& coeffs, unsigned order) {
    auto basis = inverse_falling_basis(static_cast<unsigned>(coeffs.size()), order);
    TruncatedSeries s(order);
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (r > order || coeffs[r].is_zero()) continue;
        s += basis[r] * coeffs[r];
    }
    return s;
}

std::vector<Rational> powers_to_inverse_falling(const TruncatedSeries& s) {
    unsigned order = s.order();
    auto basis = inverse_falling_basis(order + 1, order);
    std::vector<Rational> c(order + 1);
    TruncatedSeries rest = s;
    // 1/(u)↓r starts with u^{-r}, so peel off one coefficient at a time.
    for (unsigned r = 0; r <= order; ++r) {
        c[r] = rest.coeff(r);
        if (!c[r].is_zero()) rest -= basis[r] * c[r];
    }
    return c;
}

TruncatedSeries rational_fn_series(const std::vector<Rational>& numer_roots,
                                   const std::vector<Rational>& denom_roots, unsigned order) {
    if (numer_roots.size() != denom_roots.size())
        throw std::invalid_argument("numerator and denominator degrees differ");
    TruncatedSeries s = TruncatedSeries::constant(1, order);
    for (std::size_t i = 0; i < numer_roots.size(); ++i) {
        // (u - a)/(u - b) = 1 + (b - a)/(u - b)
        Rational gap = denom_roots[i] - numer_roots[i];
        if (gap.is_zero()) continue;
        TruncatedSeries f = TruncatedSeries::inverse_linear(denom_roots[i], order) * gap;
        f.coeff(0) += Rational(1);
        s = s * f;
    }
    return s;
}

}  // namespace sstar
