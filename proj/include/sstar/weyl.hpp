#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sstar/rational.hpp"

namespace sstar {

// Matrix-entry variables x_{ij} (0-based i, j < kMaxDim) share one id space.
inline constexpr int kMaxDim = 16;
inline int var_id(int row, int col) { return row * kMaxDim + col; }
inline int var_row(int id) { return id / kMaxDim; }
inline int var_col(int id) { return id % kMaxDim; }

// Commutative monomial; stored as (var, exponent) byte pairs sorted by var.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int id, int exp = 1);

    bool is_one() const { return data_.empty(); }
    int degree() const;
    int exponent(int id) const;
    std::size_t factor_count() const { return data_.size() / 2; }
    int factor_var(std::size_t k) const { return static_cast<unsigned char>(data_[2 * k]); }
    int factor_exp(std::size_t k) const { return static_cast<unsigned char>(data_[2 * k + 1]); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Elementwise a >= b
    bool divisible_by(const Monomial& b) const;
    // a / b, requires divisible_by(b)
    Monomial quotient(const Monomial& b) const;
    // Largest row and column indices used (-1 for the unit monomial).
    std::pair<int, int> extent() const;

    const std::string& key() const { return data_; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.data_ < b.data_; }

    // e.g. "x11^2*x23"; "1" for the unit
    std::string str(const char* symbol = "x") const;

private:
    std::string data_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return std::hash<std::string>()(m.key()); }
};

struct MatrixShape {
    int rows = 0;
    int cols = 0;
    bool fits_in(const MatrixShape& o) const { return rows <= o.rows && cols <= o.cols; }
    friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
};

class MultiPoly {
public:
    using Map = std::unordered_map<Monomial, Rational, MonomialHash>;

    MultiPoly() = default;
    explicit MultiPoly(MatrixShape shape) : shape_(shape) {}
    static MultiPoly constant(MatrixShape shape, const Rational& c);
    static MultiPoly variable(MatrixShape shape, int row, int col);

    MatrixShape shape() const { return shape_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;
    int degree() const;
    void add(const Monomial& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Terms sorted by monomial key.
    std::vector<std::pair<Monomial, Rational>> sorted() const;
    std::string str(const char* symbol = "x") const;

private:
    MatrixShape shape_;
    Map terms_;
};

MultiPoly power(const MultiPoly& p, int e);

// Normal-ordered term x^a ∂^b.
struct OpKey {
    Monomial x;
    Monomial d;
    friend bool operator==(const OpKey&, const OpKey&) = default;
    friend bool operator<(const OpKey& a, const OpKey& b) {
        return a.x < b.x || (a.x == b.x && a.d < b.d);
    }
};

struct OpKeyHash {
    std::size_t operator()(const OpKey& k) const {
        return std::hash<std::string>()(k.x.key()) * 1000003u ^ std::hash<std::string>()(k.d.key());
    }
};

class DiffOp {
public:
    using Map = std::unordered_map<OpKey, Rational, OpKeyHash>;

    DiffOp() = default;
    explicit DiffOp(MatrixShape shape) : shape_(shape) {}
    static DiffOp identity(MatrixShape shape);
    static DiffOp multiplication(MatrixShape shape, int row, int col);
    static DiffOp derivative(MatrixShape shape, int row, int col);

    MatrixShape shape() const { return shape_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& x, const Monomial& d) const;
    // Highest total derivative degree; -1 for the zero operator.
    int order() const;
    void add(const Monomial& x, const Monomial& d, const Rational& c);

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp& operator*=(const Rational& s);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const Rational& s) { return a *= s; }
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

    // The operator as seen by polynomials in the variables of `shape`: terms that
    // differentiate in an outside variable are dropped, everything else is kept
    // as is (so coefficients in outside variables survive and show up in comparisons).
    DiffOp restrict_to(MatrixShape shape) const;

    std::vector<std::pair<OpKey, Rational>> sorted() const;
    std::string str() const;

private:
    MatrixShape shape_;
    Map terms_;
};

// Exact action; the polynomial's variables must lie inside the operator's shape.
MultiPoly apply(const DiffOp& op, const MultiPoly& p);
// Normal-ordered product a∘b via the Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b);

}  // namespace sstar
