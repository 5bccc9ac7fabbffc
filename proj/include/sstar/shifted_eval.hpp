#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sstar/partition.hpp"
#include "sstar/rational.hpp"
#include "sstar/series.hpp"

namespace sstar {

// Finitely many coordinates; all further coordinates are 0.
struct EvalPoint {
    std::vector<Rational> x;

    EvalPoint() = default;
    explicit EvalPoint(std::vector<Rational> coords) : x(std::move(coords)) {}
    static EvalPoint from(const Partition& p);
    static EvalPoint from(const Signature& s);
    static EvalPoint parse(std::string_view text);

    int size() const { return static_cast<int>(x.size()); }
    // Exactly n coordinates: pads with zeros, rejects if that would drop nonzeros.
    std::vector<Rational> padded(int n) const;
    std::string str() const;
};

// The determinant route hit a zero denominator (coinciding shifted coordinates).
class SingularPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Rational determinant(std::vector<std::vector<Rational>> m);

// s*_mu(x_1..x_n) as the ratio det[(x_i+n-i)↓(mu_j+n-j)] / det[(x_i+n-i)↓(n-j)].
// Zero when length(mu) > n. Throws SingularPoint when the denominator vanishes.
Rational sstar_det(const Partition& mu, const EvalPoint& x, int n);
Rational sstar_det(const Partition& mu, const EvalPoint& x);
// Sum over reverse tableaux of prod (x_{T(box)} - c(box)); n = number of coordinates.
Rational sstar_comb(const Partition& mu, const EvalPoint& x);
// At a signature, through the determinant with the signature's own n.
Rational sstar_at_signature(const Partition& mu, const Signature& lambda);
// s*_mu(lambda) at a partition, memoized (the workhorse for the algebra layer).
Rational sstar_at(const Partition& mu, const Partition& lambda);

// t_mu(x) = det[x_i↓(mu_j+n-j)] / det[x_i↓(n-j)] in exactly n variables.
Rational factorial_t(const Partition& mu, const EvalPoint& x, int n);

// Ordinary Schur polynomial; falls back to the SSYT sum when coordinates coincide.
Rational schur_eval(const Partition& mu, const EvalPoint& x, int n);

enum class Generator { HStar, EStar, PStar, PHat, PCheck, PCirc };
Generator parse_generator(std::string_view name);
std::string generator_name(Generator g);

// Values of the distinguished generators at x (n = number of coordinates).
// p° is extracted from H*(u)/H*(u-1) truncated at `order` (0 means k+2).
Rational generator_eval(Generator g, int k, const EvalPoint& x, unsigned order = 0);

enum class SeriesKind { H, E };
// H*(u) = prod (u+i)/(u+i-x_i) and E*(u) = prod (u-i+1+x_i)/(u-i+1), in powers of u^{-1}.
TruncatedSeries h_e_series(SeriesKind kind, const EvalPoint& x, unsigned order);

// det[h*_{mu_i-i+j}(x_1+j-1, ..., x_n+j-1)] with h* taken in exactly n variables.
Rational sstar_jt_shifted(const Partition& mu, const EvalPoint& x, int n);

}  // namespace sstar
