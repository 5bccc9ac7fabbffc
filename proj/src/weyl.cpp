#include "sstar/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace sstar {

Monomial Monomial::var(int id, int exp) {
    if (id < 0 || id >= kMaxDim * kMaxDim) throw std::out_of_range("variable id out of range");
    if (exp < 0 || exp > 255) throw std::out_of_range("exponent out of range");
    Monomial m;
    if (exp > 0) {
        m.data_.push_back(static_cast<char>(id));
        m.data_.push_back(static_cast<char>(exp));
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (std::size_t k = 0; k < factor_count(); ++k) d += factor_exp(k);
    return d;
}

int Monomial::exponent(int id) const {
    for (std::size_t k = 0; k < factor_count(); ++k)
        if (factor_var(k) == id) return factor_exp(k);
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    const std::size_t na = a.factor_count(), nb = b.factor_count();
    r.data_.reserve(a.data_.size() + b.data_.size());
    while (i < na || j < nb) {
        int va = i < na ? a.factor_var(i) : 1 << 20;
        int vb = j < nb ? b.factor_var(j) : 1 << 20;
        int v, e;
        if (va == vb) {
            v = va;
            e = a.factor_exp(i++) + b.factor_exp(j++);
        } else if (va < vb) {
            v = va;
            e = a.factor_exp(i++);
        } else {
            v = vb;
            e = b.factor_exp(j++);
        }
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        r.data_.push_back(static_cast<char>(v));
        r.data_.push_back(static_cast<char>(e));
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& b) const {
    for (std::size_t k = 0; k < b.factor_count(); ++k)
        if (exponent(b.factor_var(k)) < b.factor_exp(k)) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& b) const {
    Monomial r;
    for (std::size_t k = 0; k < factor_count(); ++k) {
        int v = factor_var(k);
        int e = factor_exp(k) - b.exponent(v);
        if (e < 0) throw std::invalid_argument("monomial is not divisible");
        if (e > 0) {
            r.data_.push_back(static_cast<char>(v));
            r.data_.push_back(static_cast<char>(e));
        }
    }
    return r;
}

std::pair<int, int> Monomial::extent() const {
    int r = -1, c = -1;
    for (std::size_t k = 0; k < factor_count(); ++k) {
        r = std::max(r, var_row(factor_var(k)));
        c = std::max(c, var_col(factor_var(k)));
    }
    return {r, c};
}

std::string Monomial::str(const char* symbol) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t k = 0; k < factor_count(); ++k) {
        if (k) s += '*';
        int v = factor_var(k);
        s += symbol + std::to_string(var_row(v) + 1) + std::to_string(var_col(v) + 1);
        if (factor_exp(k) > 1) s += "^" + std::to_string(factor_exp(k));
    }
    return s;
}

MultiPoly MultiPoly::constant(MatrixShape shape, const Rational& c) {
    MultiPoly p(shape);
    p.add(Monomial(), c);
    return p;
}

MultiPoly MultiPoly::variable(MatrixShape shape, int row, int col) {
    if (row >= shape.rows || col >= shape.cols) throw std::out_of_range("variable outside the matrix shape");
    MultiPoly p(shape);
    p.add(Monomial::var(var_id(row, col)), 1);
    return p;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void MultiPoly::add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    shape_ = {std::max(shape_.rows, o.shape_.rows), std::max(shape_.cols, o.shape_.cols)};
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    shape_ = {std::max(shape_.rows, o.shape_.rows), std::max(shape_.cols, o.shape_.cols)};
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(MatrixShape{std::max(a.shape_.rows, b.shape_.rows), std::max(a.shape_.cols, b.shape_.cols)});
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, ca * cb);
    return r;
}

MultiPoly power(const MultiPoly& p, int e) {
    MultiPoly r = MultiPoly::constant(p.shape(), 1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

std::vector<std::pair<Monomial, Rational>> MultiPoly::sorted() const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::string MultiPoly::str(const char* symbol) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : sorted()) {
        if (!first) s += " + ";
        first = false;
        if (m.is_one()) s += c.str();
        else if (c == Rational(1)) s += m.str(symbol);
        else s += c.str() + "*" + m.str(symbol);
    }
    return s;
}

DiffOp DiffOp::identity(MatrixShape shape) {
    DiffOp op(shape);
    op.add(Monomial(), Monomial(), 1);
    return op;
}

DiffOp DiffOp::multiplication(MatrixShape shape, int row, int col) {
    DiffOp op(shape);
    op.add(Monomial::var(var_id(row, col)), Monomial(), 1);
    return op;
}

DiffOp DiffOp::derivative(MatrixShape shape, int row, int col) {
    DiffOp op(shape);
    op.add(Monomial(), Monomial::var(var_id(row, col)), 1);
    return op;
}

Rational DiffOp::coeff(const Monomial& x, const Monomial& d) const {
    auto it = terms_.find(OpKey{x, d});
    return it == terms_.end() ? Rational() : it->second;
}

int DiffOp::order() const {
    int o = -1;
    for (const auto& [k, c] : terms_) o = std::max(o, k.d.degree());
    return o;
}

void DiffOp::add(const Monomial& x, const Monomial& d, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(OpKey{x, d}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    shape_ = {std::max(shape_.rows, o.shape_.rows), std::max(shape_.cols, o.shape_.cols)};
    for (const auto& [k, c] : o.terms_) add(k.x, k.d, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    shape_ = {std::max(shape_.rows, o.shape_.rows), std::max(shape_.cols, o.shape_.cols)};
    for (const auto& [k, c] : o.terms_) add(k.x, k.d, -c);
    return *this;
}

DiffOp& DiffOp::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

DiffOp DiffOp::restrict_to(MatrixShape shape) const {
    DiffOp r(shape);
    for (const auto& [k, c] : terms_) {
        auto [dr, dc] = k.d.extent();
        if (dr < shape.rows && dc < shape.cols) r.add(k.x, k.d, c);
    }
    return r;
}

std::vector<std::pair<OpKey, Rational>> DiffOp::sorted() const {
    std::vector<std::pair<OpKey, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : sorted()) {
        if (!first) s += " + ";
        first = false;
        std::string mono;
        if (!k.x.is_one()) mono = k.x.str("x");
        if (!k.d.is_one()) mono += (mono.empty() ? "" : "*") + k.d.str("d");
        if (mono.empty()) s += c.str();
        else if (c == Rational(1)) s += mono;
        else s += c.str() + "*" + mono;
    }
    return s;
}

MultiPoly apply(const DiffOp& op, const MultiPoly& p) {
    if (!p.shape().fits_in(op.shape()))
        throw std::invalid_argument("polynomial variables lie outside the operator's matrix shape");
    MultiPoly r(op.shape());
    for (const auto& [k, c] : op.terms()) {
        for (const auto& [m, pc] : p.terms()) {
            if (!m.divisible_by(k.d)) continue;
            // ∂^b x^e = prod e!/(e-b)! x^{e-b}
            Rational f = c * pc;
            for (std::size_t t = 0; t < k.d.factor_count(); ++t)
                f *= falling(Rational(m.exponent(k.d.factor_var(t))), static_cast<unsigned>(k.d.factor_exp(t)));
            r.add(k.x * m.quotient(k.d), f);
        }
    }
    return r;
}

namespace {

// ∂^b ∘ x^c = sum_γ prod_v C(b_v, γ_v) c_v!/(c_v-γ_v)! x^{c-γ} ∂^{b-γ}
void leibniz(const Monomial& b, const Monomial& c, const std::function<void(const Monomial&, const Monomial&, const Rational&)>& emit) {
    struct Shared { int var, b, c; };
    std::vector<Shared> shared;
    for (std::size_t t = 0; t < b.factor_count(); ++t) {
        int v = b.factor_var(t);
        int ce = c.exponent(v);
        if (ce > 0) shared.push_back({v, b.factor_exp(t), ce});
    }
    std::vector<int> gamma(shared.size(), 0);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational w) {
        if (i == shared.size()) {
            Monomial g;
            for (std::size_t s = 0; s < shared.size(); ++s)
                if (gamma[s]) g = g * Monomial::var(shared[s].var, gamma[s]);
            emit(c.quotient(g), b.quotient(g), w);
            return;
        }
        for (int k = 0; k <= std::min(shared[i].b, shared[i].c); ++k) {
            gamma[i] = k;
            Rational f = Rational(binomial(shared[i].b, k)) * falling(Rational(shared[i].c), static_cast<unsigned>(k));
            rec(i + 1, w * f);
        }
        gamma[i] = 0;
    };
    rec(0, Rational(1));
}

}  // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    DiffOp r(MatrixShape{std::max(a.shape().rows, b.shape().rows), std::max(a.shape().cols, b.shape().cols)});
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            Rational c = ca * cb;
            leibniz(ka.d, kb.x, [&](const Monomial& xrest, const Monomial& drest, const Rational& w) {
                r.add(ka.x * xrest, drest * kb.d, c * w);
            });
        }
    }
    return r;
}

}  // namespace sstar
