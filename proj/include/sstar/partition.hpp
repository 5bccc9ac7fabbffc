#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "sstar/rational.hpp"

namespace sstar {

class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; anything not weakly decreasing and
    // non-negative is rejected.
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition parse(std::string_view text);
    std::string str() const;

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 0-based row index; rows past the length are 0.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Smaller size first, then lexicographically descending within a size.
struct GradedOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a > b;
    }
};

// Weakly decreasing integer vector with a fixed number of entries (any sign).
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<int> entries);
    static Signature parse(std::string_view text);
    std::string str() const;

    int n() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_.at(i); }
    const std::vector<int>& entries() const { return e_; }
    bool is_partition() const { return e_.empty() || e_.back() >= 0; }
    Partition to_partition() const;
    static Signature from_partition(const Partition& p, int n);

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature& a, const Signature& b) { return a.e_ <=> b.e_; }

private:
    std::vector<int> e_;
};

struct SkewShape {
    Partition outer;
    Partition inner;
    SkewShape(Partition outer_, Partition inner_);
    static SkewShape parse(std::string_view text);
    std::string str() const;
    int size() const { return outer.size() - inner.size(); }
};

// Lexicographically descending, e.g. 3 -> (3),(2,1),(1,1,1).
std::vector<Partition> partitions_of(int k);
std::vector<Partition> partitions_of(int k, int max_length);
// Sizes 0..d, each size in the order above.
std::vector<Partition> partitions_up_to(int d);
std::vector<Partition> partitions_up_to(int d, int max_length);
// All nu contained in lambda, in graded order.
std::vector<Partition> subpartitions(const Partition& lambda);

// c(i,j) = j - i with 0-based (i,j)
inline int content(int row, int col) { return col - row; }

Integer hook_product(const Partition& mu);
// Number of standard tableaux; two independent formulas, checked against each other.
Integer dim_sym(const Partition& mu);
// (n)↑mu = prod over boxes of (n + c(box))
Integer up_factorial(long n, const Partition& mu);
// dim of the irreducible GL(n) module with highest weight lambda; requires length <= n.
Integer dim_gl(int n, const Partition& lambda);
// Weyl dimension formula for an arbitrary signature.
Integer dim_gl(const Signature& lambda);

// Exhaustive count of standard fillings of outer/inner (0 unless inner ⊂ outer).
Integer syt_count_skew(const Partition& outer, const Partition& inner);

// All nu with lambda_1 >= nu_1 >= lambda_2 >= ... >= nu_{n-1} >= lambda_n,
// lexicographically descending.
std::vector<Signature> interlacing(const Signature& lambda);
// Partitions obtained by adding one box, top row first.
std::vector<Partition> successors(const Partition& mu);
// nu ≺ mu: mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...
std::vector<Partition> interlaced_below(const Partition& mu);

}  // namespace sstar
