#pragma once

#include <optional>
#include <vector>

#include "sstar/partition.hpp"
#include "sstar/rational.hpp"

namespace sstar {

// A reverse tableau of shape mu with entries in 1..n, stored as the chain
// mu = chain[0] ≻ chain[1] ≻ ... ≻ chain[n] = ∅. Entry i sits on chain[i-1]/chain[i].
struct ReverseTableau {
    Partition shape;
    int n = 0;
    std::vector<Partition> chain;

    int entry(int row, int col) const;
    // Row-major entries, one vector per row.
    std::vector<std::vector<int>> rows() const;
};

// Lazily walks RTab(mu, n) one chain at a time.
class ReverseTableauStream {
public:
    ReverseTableauStream(Partition mu, int n);
    std::optional<ReverseTableau> next();

private:
    struct Level {
        std::vector<Partition> options;
        std::size_t pos = 0;
    };
    bool descend();
    std::vector<Partition> options_below(const Partition& p, int level) const;

    Partition mu_;
    int n_;
    std::vector<Level> stack_;
    std::vector<Partition> chain_;
    bool started_ = false;
    bool done_ = false;
};

// Semistandard tableau: rows weakly increase, columns strictly increase.
struct SSYT {
    Partition shape;
    std::vector<std::vector<int>> rows;
};

// Lazily walks SSYT(mu, n) by filling boxes in row-reading order.
class SSYTStream {
public:
    SSYTStream(Partition mu, int n);
    std::optional<SSYT> next();

private:
    bool advance(std::size_t from);
    int lower_bound(std::size_t idx) const;

    Partition mu_;
    int n_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<std::vector<int>> t_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<ReverseTableau> enumerate_reverse(const Partition& mu, int n);
std::vector<SSYT> enumerate_ssyt(const Partition& mu, int n);

// s_mu(x_1..x_n) as the sum over SSYT of prod x_{T(box)}; coordinates past
// x.size() are 0.
Rational ssyt_monomial_sum(const Partition& mu, const std::vector<Rational>& x, int n);

}  // namespace sstar
