#include "sstar/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sstar/capelli.hpp"
#include "sstar/characters.hpp"
#include "sstar/lambda_star.hpp"
#include "sstar/parallel.hpp"
#include "sstar/series.hpp"
#include "sstar/shifted_eval.hpp"
#include "sstar/symmetrization.hpp"
#include "sstar/tableaux.hpp"

namespace sstar {

std::string SuiteReport::summary() const {
    std::ostringstream os;
    os << name << ": " << (ok() ? "ok" : "FAILED") << " (" << cases << " cases, " << failures.size() << " failures, "
       << elapsed_s << " s, seed " << seed << ")";
    for (std::size_t i = 0; i < failures.size() && i < 10; ++i)
        os << "\n  " << failures[i].id << ": expected " << failures[i].expected << ", got " << failures[i].actual;
    if (failures.size() > 10) os << "\n  ... " << failures.size() - 10 << " more";
    return os.str();
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = name;
    j["cases"] = cases;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) j["failures"].push_back({{"case", f.id}, {"expected", f.expected}, {"actual", f.actual}});
    j["elapsed_s"] = elapsed_s;
    j["seed"] = seed;
    return j.dump();
}

namespace {

using Outcome = std::optional<std::pair<std::string, std::string>>;  // (expected, actual) on failure

class CaseSet {
public:
    void custom(std::string id, std::function<Outcome()> check) { cases_.push_back({std::move(id), std::move(check)}); }

    void eq(std::string id, std::function<std::pair<Rational, Rational>()> f) {
        custom(std::move(id), [f = std::move(f)]() -> Outcome {
            auto [expected, actual] = f();
            if (expected == actual) return std::nullopt;
            return std::make_pair(expected.str(), actual.str());
        });
    }

    void truth(std::string id, std::function<bool()> f) {
        custom(std::move(id), [f = std::move(f)]() -> Outcome {
            if (f()) return std::nullopt;
            return std::make_pair(std::string("true"), std::string("false"));
        });
    }

    SuiteReport run(const std::string& name, std::uint64_t seed, std::chrono::steady_clock::time_point start) const {
        std::vector<Outcome> out(cases_.size());
        for_each_index(
            cases_.size(),
            [&](std::size_t i) {
                try {
                    out[i] = cases_[i].check();
                } catch (const std::exception& e) {
                    out[i] = std::make_pair(std::string("no error"), std::string("error: ") + e.what());
                }
            },
            ExecMode::Parallel);
        SuiteReport rep;
        rep.name = name;
        rep.seed = seed;
        rep.cases = cases_.size();
        for (std::size_t i = 0; i < out.size(); ++i)
            if (out[i]) rep.failures.push_back({i, cases_[i].id, out[i]->first, out[i]->second});
        rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }

private:
    struct Case {
        std::string id;
        std::function<Outcome()> check;
    };
    std::vector<Case> cases_;
};

using Clock = std::chrono::steady_clock;

int size_or(const SuiteOptions& o, int dflt) { return o.max_size > 0 ? o.max_size : dflt; }

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
    long a = num(rng);
    long b = den(rng);
    return Rational(a, b);
}

// n random coordinates with pairwise distinct x_i - i (so the determinant route applies).
EvalPoint random_point(std::mt19937_64& rng, int n, int padding = 0) {
    while (true) {
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(random_rational(rng));
        std::set<Rational> shifted;
        for (int i = 0; i < n; ++i) shifted.insert(x[i] - Rational(i));
        for (int i = n; i < n + padding; ++i) shifted.insert(Rational(-i));
        if (static_cast<int>(shifted.size()) == n + padding) return EvalPoint(std::move(x));
    }
}

std::string pstr(const Partition& p) { return "[" + p.str() + "]"; }

Rational sign_pow(int e) { return e % 2 ? Rational(-1) : Rational(1); }

// ------------------------------------------------------------------ arith

SuiteReport suite_arith(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    std::mt19937_64 rng(o.seed);
    const int max_len = size_or(o, 12);
    for (int len = 1; len <= max_len; ++len) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Rational> c;
            for (int i = 0; i < len; ++i) c.push_back(random_rational(rng));
            cs.truth("inverse-falling round trip len=" + std::to_string(len) + " #" + std::to_string(rep), [c, len] {
                auto s = inverse_falling_to_powers(c, static_cast<unsigned>(len - 1));
                return powers_to_inverse_falling(s) == c;
            });
        }
    }
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rational> a, b;
        int deg = 1 + rep % 4;
        for (int i = 0; i < deg; ++i) {
            a.push_back(random_rational(rng));
            b.push_back(random_rational(rng));
        }
        cs.truth("rational function times its inverse #" + std::to_string(rep), [a, b] {
            auto f = rational_fn_series(a, b, 8), g = rational_fn_series(b, a, 8);
            return f * g == TruncatedSeries::constant(1, 8) && f.reciprocal() == g;
        });
    }
    cs.truth("(u+1)/(u-2) from falling coefficients", [] {
        return inverse_falling_to_powers({1, 3, 6, 6}, 6) == rational_fn_series({Rational(-1)}, {Rational(2)}, 6);
    });
    cs.truth("rational text round trip", [&] {
        for (auto s : {"0", "-3", "7/4", "-22/6"})
            if (Rational::parse(Rational::parse(s).str()) != Rational::parse(s)) return false;
        return Rational::parse("-22/6").str() == "-11/3";
    });
    return cs.run("arith", o.seed, start);
}

// ------------------------------------------------------------- partitions

SuiteReport suite_partitions(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 8);
    for (const auto& mu : partitions_up_to(K)) {
        cs.eq("syt count " + pstr(mu), [mu] { return std::make_pair(Rational(dim_sym(mu)), Rational(syt_count_skew(mu, {}))); });
        cs.truth("conjugation involution " + pstr(mu), [mu] { return mu.conjugate().conjugate() == mu && mu.conjugate().size() == mu.size(); });
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_up_to(std::min(K, 5), n)) {
            cs.eq("gl dim vs SSYT n=" + std::to_string(n) + " " + pstr(mu), [mu, n] {
                return std::make_pair(Rational(dim_gl(n, mu)), Rational(static_cast<long>(enumerate_ssyt(mu, n).size())));
            });
            cs.eq("gl dim vs reverse tableaux n=" + std::to_string(n) + " " + pstr(mu), [mu, n] {
                return std::make_pair(Rational(dim_gl(n, mu)), Rational(static_cast<long>(enumerate_reverse(mu, n).size())));
            });
        }
    // branching: dim of a signature is the sum over the interlacing signatures below it
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int i, int cap) {
            if (i == n) {
                Signature s(cur);
                cs.eq("branching " + s.str(), [s] {
                    Rational total;
                    for (const auto& nu : interlacing(s)) total += Rational(dim_gl(nu));
                    return std::make_pair(Rational(dim_gl(s)), total);
                });
                return;
            }
            for (int v = cap; v >= -2; --v) {
                cur.push_back(v);
                rec(i + 1, v);
                cur.pop_back();
            }
        };
        rec(0, 3);
    }
    return cs.run("partitions", o.seed, start);
}

SuiteReport suite_skew(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 8);
    for (const auto& lambda : partitions_up_to(K))
        for (const auto& mu : subpartitions(lambda))
            cs.eq("dim " + pstr(lambda) + "/" + pstr(mu), [lambda, mu] {
                return std::make_pair(Rational(syt_count_skew(lambda, mu)), dim_skew_formula(lambda, mu));
            });
    return cs.run("skew", o.seed, start);
}

// ------------------------------------------------------------------- eval

SuiteReport suite_engines(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 5);
    for (int n = 1; n <= 5; ++n) {
        std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(n));
        auto mus = partitions_up_to(K, n);
        std::vector<std::pair<std::string, EvalPoint>> points;
        for (const auto& lambda : partitions_up_to(6, n)) points.emplace_back(pstr(lambda), EvalPoint(EvalPoint::from(lambda).padded(n)));
        for (int r = 0; r < 200; ++r) points.emplace_back("random#" + std::to_string(r), random_point(rng, n));
        for (const auto& mu : mus)
            for (const auto& [pid, x] : points)
                cs.eq("n=" + std::to_string(n) + " mu=" + pstr(mu) + " at " + pid,
                      [mu, x = x, n] { return std::make_pair(sstar_det(mu, x, n), sstar_comb(mu, x)); });
        if (n <= 4) {
            for (int r = 0; r < 20; ++r) {
                EvalPoint x = random_point(rng, n);
                for (const auto& mu : mus)
                    cs.eq("factorial t shift n=" + std::to_string(n) + " mu=" + pstr(mu) + " #" + std::to_string(r), [mu, x, n] {
                        std::vector<Rational> y = x.x;
                        for (int i = 0; i < n; ++i) y[i] += Rational(n - 1 - i);
                        return std::make_pair(sstar_comb(mu, x), factorial_t(mu, EvalPoint(y), n));
                    });
            }
        }
    }
    return cs.run("engines", o.seed, start);
}

SuiteReport suite_stability(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 5);
    for (int n = 1; n <= 4; ++n) {
        std::mt19937_64 rng(o.seed + 100 + static_cast<std::uint64_t>(n));
        for (int r = 0; r < 30; ++r) {
            EvalPoint x = random_point(rng, n, 1);
            EvalPoint x0(x.padded(n + 1));
            for (const auto& mu : partitions_up_to(K)) {
                std::string id = "n=" + std::to_string(n) + " mu=" + pstr(mu) + " #" + std::to_string(r);
                cs.eq("comb " + id, [mu, x, x0] { return std::make_pair(sstar_comb(mu, x), sstar_comb(mu, x0)); });
                cs.eq("det " + id, [mu, x, x0, n] {
                    Rational small = sstar_det(mu, x, n);
                    return std::make_pair(small, sstar_det(mu, x0, n + 1));
                });
            }
        }
    }
    return cs.run("stability", o.seed, start);
}

SuiteReport suite_vanishing(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 6);
    for (const auto& mu : partitions_up_to(K)) {
        for (const auto& lambda : partitions_up_to(mu.size())) {
            if (lambda == mu) {
                cs.eq("normalization " + pstr(mu), [mu] {
                    return std::make_pair(Rational(hook_product(mu)), sstar_comb(mu, EvalPoint::from(mu)));
                });
                cs.eq("normalization det " + pstr(mu), [mu] {
                    return std::make_pair(Rational(hook_product(mu)), sstar_det(mu, EvalPoint::from(mu)));
                });
            } else if (!lambda.contains(mu)) {
                cs.eq("s*" + pstr(mu) + " at " + pstr(lambda), [mu, lambda] {
                    return std::make_pair(Rational(0), sstar_comb(mu, EvalPoint::from(lambda)));
                });
                cs.eq("det s*" + pstr(mu) + " at " + pstr(lambda), [mu, lambda] {
                    return std::make_pair(Rational(0), sstar_det(mu, EvalPoint::from(lambda), std::max(mu.length(), lambda.length())));
                });
            }
        }
    }
    return cs.run("vanishing", o.seed, start);
}

SuiteReport suite_duality(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 6);
    auto parts = partitions_up_to(K);
    for (const auto& mu : parts)
        for (const auto& lambda : parts)
            cs.eq("s*" + pstr(mu) + " at conjugate of " + pstr(lambda), [mu, lambda] {
                return std::make_pair(sstar_comb(mu.conjugate(), EvalPoint::from(lambda)),
                                      sstar_comb(mu, EvalPoint::from(lambda.conjugate())));
            });
    for (int k = 1; k <= 5; ++k)
        for (const auto& lambda : parts) {
            EvalPoint at = EvalPoint::from(lambda), atc = EvalPoint::from(lambda.conjugate());
            std::string id = " k=" + std::to_string(k) + " at " + pstr(lambda);
            cs.eq("h*/e*" + id, [k, at, atc] {
                return std::make_pair(generator_eval(Generator::EStar, k, at), generator_eval(Generator::HStar, k, atc));
            });
            cs.eq("pcheck/phat" + id, [k, at, atc] {
                return std::make_pair(generator_eval(Generator::PCheck, k, at),
                                      sign_pow(k - 1) * generator_eval(Generator::PHat, k, atc));
            });
            cs.eq("pcirc" + id, [k, at, atc] {
                return std::make_pair(sign_pow(k - 1) * generator_eval(Generator::PCirc, k, at),
                                      generator_eval(Generator::PCirc, k, atc));
            });
        }
    return cs.run("duality", o.seed, start);
}

SuiteReport suite_series(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const unsigned order = static_cast<unsigned>(size_or(o, 8));
    for (int n = 1; n <= 4; ++n) {
        std::mt19937_64 rng(o.seed + 200 + static_cast<std::uint64_t>(n));
        for (int r = 0; r < 50; ++r) {
            EvalPoint x = random_point(rng, n);
            std::string id = " n=" + std::to_string(n) + " #" + std::to_string(r);
            cs.custom("H* coefficients" + id, [x, order]() -> Outcome {
                auto c = powers_to_inverse_falling(h_e_series(SeriesKind::H, x, order));
                for (unsigned k = 0; k <= order; ++k) {
                    Rational h = generator_eval(Generator::HStar, static_cast<int>(k), x);
                    if (c[k] != h) return std::make_pair("h*_" + std::to_string(k) + "=" + h.str(), c[k].str());
                }
                return std::nullopt;
            });
            cs.custom("E* coefficients" + id, [x, order]() -> Outcome {
                auto c = powers_to_inverse_falling(h_e_series(SeriesKind::E, x, order));
                for (unsigned k = 0; k <= order; ++k) {
                    Rational e = generator_eval(Generator::EStar, static_cast<int>(k), x);
                    if (c[k] != e) return std::make_pair("e*_" + std::to_string(k) + "=" + e.str(), c[k].str());
                }
                return std::nullopt;
            });
            cs.truth("H*(u)E*(-u-1) = 1" + id, [x, order] {
                // both factors assembled from the generator values, not the closed products
                std::vector<Rational> h;
                for (unsigned k = 0; k <= order; ++k) h.push_back(generator_eval(Generator::HStar, static_cast<int>(k), x));
                TruncatedSeries H = inverse_falling_to_powers(h, order);
                TruncatedSeries E(order);
                TruncatedSeries basis = TruncatedSeries::constant(1, order);
                for (unsigned k = 0; k <= order; ++k) {
                    // 1/((-u-1)↓k) = (-1)^k / ((u+1)(u+2)...(u+k))
                    if (k > 0) basis = basis * TruncatedSeries::inverse_linear(Rational(-static_cast<long>(k)), order) * Rational(-1);
                    E += basis * generator_eval(Generator::EStar, static_cast<int>(k), x);
                }
                return H * E == TruncatedSeries::constant(1, order);
            });
        }
    }
    return cs.run("series", o.seed, start);
}

SuiteReport suite_schur(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    std::mt19937_64 rng(o.seed + 300);
    const int K = size_or(o, 5);
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r < 10; ++r) {
            EvalPoint x = random_point(rng, n);
            if (r % 3 == 0 && n > 1) x.x[1] = x.x[0];
            for (const auto& mu : partitions_up_to(K, n))
                cs.eq("s" + pstr(mu) + " n=" + std::to_string(n) + " #" + std::to_string(r), [mu, x, n] {
                    return std::make_pair(ssyt_monomial_sum(mu, x.x, n), schur_eval(mu, x, n));
                });
        }
    return cs.run("schur", o.seed, start);
}

// ------------------------------------------------------------ lambda_star

SuiteReport suite_pieri(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 4);
    for (const auto& mu : partitions_up_to(K)) {
        cs.truth("pieri " + pstr(mu), [mu] {
            ShiftedElement p1 = ShiftedElement::sstar({1}) - ShiftedElement::one() * Rational(mu.size());
            return multiply(ShiftedElement::sstar(mu), p1) == pieri_rhs(mu);
        });
        for (int steps = 1; steps <= 3; ++steps)
            cs.custom("iterated pieri " + pstr(mu) + " l-k=" + std::to_string(steps), [mu, steps]() -> Outcome {
                const int k = mu.size(), l = k + steps;
                ShiftedElement prod = ShiftedElement::sstar(mu);
                for (int t = k; t < l; ++t)
                    prod = multiply(prod, ShiftedElement::sstar({1}) - ShiftedElement::one() * Rational(t));
                ShiftedElement expected;
                for (const auto& nu : partitions_of(l))
                    if (nu.contains(mu)) expected.add(nu, Rational(syt_count_skew(nu, mu)));
                if (prod == expected) return std::nullopt;
                return std::make_pair(expected.str(), prod.str());
            });
    }
    return cs.run("pieri", o.seed, start);
}

SuiteReport suite_binomial(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 4);
    for (int n = 1; n <= 3; ++n) {
        std::mt19937_64 rng(o.seed + 400 + static_cast<std::uint64_t>(n));
        for (const auto& lambda : partitions_up_to(K, n)) {
            for (int r = 0; r < 50; ++r) {
                // distinct x_i and distinct 1 + x_i keep both Schur determinants regular
                EvalPoint x = random_point(rng, n);
                cs.truth("binomial " + pstr(lambda) + " n=" + std::to_string(n) + " #" + std::to_string(r),
                         [lambda, n, x] { return binomial_check(lambda, n, {x}); });
            }
        }
    }
    for (int k = 0; k <= 8; ++k)
        cs.custom("one variable k=" + std::to_string(k), [k]() -> Outcome {
            auto c = binomial_coeffs(Partition{k}, 1);
            if (static_cast<int>(c.size()) != k + 1) return std::make_pair(std::to_string(k + 1) + " terms", std::to_string(c.size()));
            for (int m = 0; m <= k; ++m) {
                Rational expect = falling(Rational(k), static_cast<unsigned>(m)) / Rational(factorial(static_cast<unsigned>(m)));
                Rational got = c.at(Partition{m});
                if (got != expect) return std::make_pair(expect.str(), got.str());
            }
            return std::nullopt;
        });
    return cs.run("binomial", o.seed, start);
}

SuiteReport suite_coherence(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 3);
    for (int n = 1; n <= 3; ++n) {
        std::vector<Signature> sigs;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int i, int cap) {
            if (i == n + 1) {
                sigs.emplace_back(cur);
                return;
            }
            for (int v = cap; v >= -2; --v) {
                cur.push_back(v);
                rec(i + 1, v);
                cur.pop_back();
            }
        };
        rec(0, 3);
        for (const auto& mu : partitions_up_to(K, n))
            for (const auto& s : sigs)
                cs.eq("n=" + std::to_string(n) + " mu=" + pstr(mu) + " lambda=(" + s.str() + ")",
                      [n, mu, s] { return coherence_sides(n, mu, s); });
    }
    return cs.run("coherence", o.seed, start);
}

SuiteReport suite_omega(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 4);
    for (const auto& mu : partitions_up_to(K))
        cs.truth("omega s*" + pstr(mu), [mu] { return omega(ShiftedElement::sstar(mu)) == ShiftedElement::sstar(mu.conjugate()); });
    for (int k = 1; k <= K; ++k)
        cs.truth("omega h*_" + std::to_string(k), [k] {
            return omega(generator_element(Generator::HStar, k)) == generator_element(Generator::EStar, k);
        });
    std::mt19937_64 rng(o.seed + 500);
    for (int r = 0; r < 5; ++r) {
        ShiftedElement f;
        for (const auto& mu : partitions_up_to(std::min(K, 3)))
            if (rng() % 2) f.add(mu, random_rational(rng));
        cs.truth("omega involution #" + std::to_string(r), [f] { return omega(omega(f)) == f; });
    }
    return cs.run("omega", o.seed, start);
}

SuiteReport suite_jt(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 4);
    for (const auto& mu : partitions_up_to(K)) {
        for (auto [v, name] : {std::pair{JTVariant::H, "h"}, std::pair{JTVariant::E, "e"}, std::pair{JTVariant::Giambelli, "giambelli"}})
            cs.custom(std::string(name) + " determinant " + pstr(mu), [mu, v = v]() -> Outcome {
                ShiftedElement d = jacobi_trudi(mu, v);
                if (d == ShiftedElement::sstar(mu)) return std::nullopt;
                return std::make_pair("s*" + pstr(mu), d.str());
            });
        for (const auto& lambda : partitions_up_to(5)) {
            int n = std::max({mu.length(), lambda.length(), 1});
            for (int extra = 0; extra <= 1; ++extra)
                cs.eq("shifted-argument determinant " + pstr(mu) + " at " + pstr(lambda) + " n=" + std::to_string(n + extra),
                      [mu, lambda, n, extra] {
                          return std::make_pair(sstar_at(mu, lambda), sstar_jt_shifted(mu, EvalPoint::from(lambda), n + extra));
                      });
        }
    }
    return cs.run("jt", o.seed, start);
}

// ------------------------------------------------------------- characters

SuiteReport suite_characters(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int L = size_or(o, 7);
    for (int l = 1; l <= L; ++l)
        for (const auto& lambda : partitions_of(l))
            for (int k = 1; k <= std::min(4, l); ++k)
                for (const auto& rho : partitions_of(k)) {
                    std::string id = "lambda=" + pstr(lambda) + " rho=" + pstr(rho);
                    cs.eq("small cycles " + id, [lambda, rho, l] {
                        return std::make_pair(Rational(mn_character(lambda, pad_with_ones(rho, l))),
                                              Rational(char_small_cycles(lambda, rho)));
                    });
                    cs.eq("gibbs " + id, [lambda, rho] { return std::make_pair(gibbs_eigenvalue(lambda, rho), psharp(rho)(lambda)); });
                }
    for (int k = 1; k <= L; ++k)
        cs.truth("orthogonality k=" + std::to_string(k), [k] {
            CharTable t = CharTable::build(k);
            const std::size_t m = t.parts.size();
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    Rational rows, cols;
                    for (std::size_t c = 0; c < m; ++c) {
                        rows += Rational(Integer(t.values[a][c] * t.values[b][c])) / Rational(z_factor(t.parts[c]));
                        cols += Rational(Integer(t.values[c][a] * t.values[c][b]));
                    }
                    if (rows != Rational(a == b ? 1 : 0)) return false;
                    if (cols != (a == b ? Rational(z_factor(t.parts[a])) : Rational(0))) return false;
                }
            return true;
        });
    return cs.run("characters", o.seed, start);
}

// ---------------------------------------------------------------- capelli

SuiteReport suite_eigen(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 4);
    std::map<std::tuple<Partition, int, int>, std::shared_ptr<DiffOp>> ops;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (const auto& mu : partitions_up_to(3, std::min(n, m))) {
                auto op = std::make_shared<DiffOp>(capelli_operator(mu, n, m));
                for (const auto& lambda : partitions_up_to(K, std::min(n, m)))
                    cs.eq("n=" + std::to_string(n) + " m=" + std::to_string(m) + " mu=" + pstr(mu) + " lambda=" + pstr(lambda),
                          [op, mu, lambda, n, m] {
                              return std::make_pair(sstar_comb(mu, EvalPoint::from(lambda)),
                                                    eigenvalue_on(*op, highest_vector(lambda, n, m)));
                          });
            }
    return cs.run("eigen", o.seed, start);
}

SuiteReport suite_operator_stability(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    (void)o;
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m)
            for (const auto& mu : partitions_up_to(3, std::min(n, m)))
                for (int N = n + 1; N <= 3; ++N)
                    for (int M = m + 1; M <= 3; ++M)
                        cs.truth("mu=" + pstr(mu) + " (" + std::to_string(N) + "," + std::to_string(M) + ") -> (" +
                                     std::to_string(n) + "," + std::to_string(m) + ")",
                                 [mu, n, m, N, M] {
                                     return capelli_operator(mu, N, M).restrict_to({n, m}) == capelli_operator(mu, n, m);
                                 });
    for (const auto& mu : partitions_up_to(3, 2))
        for (int d = 0; d < mu.size(); ++d)
            cs.truth("annihilates degree " + std::to_string(d) + " mu=" + pstr(mu), [mu, d] {
                DiffOp op = capelli_operator(mu, 2, 2);
                for (const auto& mono : monomials_of_degree({2, 2}, d)) {
                    MultiPoly p({2, 2});
                    p.add(mono, 1);
                    if (!apply(op, p).is_zero()) return false;
                }
                return true;
            });
    return cs.run("operator-stability", o.seed, start);
}

SuiteReport suite_schur_weyl(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 3);
    for (auto [n, l] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}})
        for (const auto& mu : partitions_up_to(std::min(K, l), n))
            cs.truth("n=" + std::to_string(n) + " l=" + std::to_string(l) + " mu=" + pstr(mu),
                     [n = n, l = l, mu] { return schur_weyl_check(n, l, mu); });
    return cs.run("schur-weyl", o.seed, start);
}

std::vector<GeneratorWord> all_words(int n, int len) {
    std::vector<GeneratorWord> out;
    std::size_t count = 1;
    for (int t = 0; t < len; ++t) count *= static_cast<std::size_t>(n * n);
    for (std::size_t a = 0; a < count; ++a) {
        GeneratorWord w{n, {}};
        std::size_t rest = a;
        for (int t = 0; t < len; ++t) {
            int letter = static_cast<int>(rest % static_cast<std::size_t>(n * n));
            rest /= static_cast<std::size_t>(n * n);
            w.letters.emplace_back(letter / n, letter % n);
        }
        out.push_back(std::move(w));
    }
    return out;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int n) {
    RationalMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : a)
        for (auto& v : row) v = random_rational(rng);
    return a;
}

// S D S^{-1} with D a 0/1 diagonal and S a random invertible rational matrix.
RationalMatrix random_idempotent(std::mt19937_64& rng, int n, int rank) {
    RationalMatrix s;
    do s = random_matrix(rng, n);
    while (determinant(s).is_zero());
    // invert by Gauss-Jordan
    RationalMatrix aug(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = s[i][j];
        aug[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (aug[p][c].is_zero()) ++p;
        std::swap(aug[p], aug[c]);
        Rational inv = Rational(1) / aug[c][c];
        for (auto& v : aug[c]) v *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || aug[r][c].is_zero()) continue;
            Rational f = aug[r][c];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
        }
    }
    RationalMatrix out(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < rank; ++t) out[i][j] += s[i][t] * aug[t][n + j];
    return out;
}

SuiteReport suite_sigma(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 3);
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : partitions_up_to(K, n))
            cs.truth("sigma(S_mu) n=" + std::to_string(n) + " mu=" + pstr(mu),
                     [n, mu] { return sigma(s_mu_element(mu, n), n, n) == capelli_operator(mu, n, n); });
    for (int len = 0; len <= K; ++len)
        for (const auto& w : all_words(2, len)) {
            cs.truth("sigma of sigma^-1 word " + w.str(), [w] { return r_map(w, 2) == sigma(sigma_inverse(w), 2, 2); });
            MultiPoly m = word_as_monomial(w);
            cs.truth("sigma^-1 of sigma monomial " + w.str(), [m] { return sigma_inverse(sigma_words(m, 2), 2) == m; });
            cs.truth("two sigma realizations " + w.str(), [m] { return r_map(sigma_words(m, 2), 2, 2) == sigma(m, 2, 2); });
        }
    std::mt19937_64 rng(o.seed + 600);
    auto words4 = all_words(2, 4);
    for (int r = 0; r < 12; ++r) {
        GeneratorWord w = words4[rng() % words4.size()];
        cs.truth("sampled length 4 " + w.str(), [w] {
            MultiPoly m = word_as_monomial(w);
            return r_map(w, 2) == sigma(sigma_inverse(w), 2, 2) && sigma_inverse(sigma_words(m, 2), 2) == m;
        });
    }
    for (int n = 2; n <= 3; ++n)
        for (int r = 0; r < 2; ++r) {
            RationalMatrix a = random_matrix(rng, n);
            for (int k = 1; k <= 4; ++k)
                cs.truth("power formula n=" + std::to_string(n) + " #" + std::to_string(r) + " k=" + std::to_string(k),
                         [a, k] { return sigma_power_report(a, k).power_formula; });
        }
    for (int n = 2; n <= 3; ++n)
        for (int rank = 0; rank <= n; ++rank) {
            RationalMatrix p = random_idempotent(rng, n, rank);
            for (int k = 1; k <= 4; ++k)
                cs.truth("idempotent n=" + std::to_string(n) + " rank=" + std::to_string(rank) + " k=" + std::to_string(k), [p, k] {
                    auto rep = sigma_power_report(p, k);
                    return rep.idempotent && rep.power_formula && rep.idempotent_formula;
                });
        }
    return cs.run("sigma", o.seed, start);
}

SuiteReport suite_casimir(const SuiteOptions& o) {
    auto start = Clock::now();
    CaseSet cs;
    const int K = size_or(o, 4);
    for (int n = 1; n <= 3; ++n) {
        auto op = std::make_shared<DiffOp>(r_map(casimir_word(n), n, n));
        for (const auto& lambda : partitions_up_to(K, n))
            cs.eq("n=" + std::to_string(n) + " lambda=" + pstr(lambda), [op, n, lambda] {
                Rational expect;
                for (int i = 1; i <= n; ++i) expect += Rational(lambda[i - 1] * lambda[i - 1] + (n + 1 - 2 * i) * lambda[i - 1]);
                return std::make_pair(expect, eigenvalue_on(*op, highest_vector(lambda, n, n)));
            });
    }
    return cs.run("casimir", o.seed, start);
}

}  // namespace

const std::vector<SuiteInfo>& all_suites() {
    static const std::vector<SuiteInfo> suites = {
        {"arith", "arith", "series basis changes and rational functions", suite_arith},
        {"partitions", "partitions", "tableau counts, GL dimensions, branching", suite_partitions},
        {"skew", "partitions", "skew dimensions against tableau enumeration", suite_skew},
        {"engines", "eval", "determinant and tableau evaluation agree", suite_engines},
        {"stability", "eval", "appending a zero coordinate changes nothing", suite_stability},
        {"vanishing", "eval", "vanishing outside the upper cone and hook normalization", suite_vanishing},
        {"duality", "eval", "evaluation at conjugate diagrams", suite_duality},
        {"series", "eval", "generating series of h* and e*", suite_series},
        {"schur", "eval", "Schur determinant against SSYT sums", suite_schur},
        {"pieri", "lambda_star", "Pieri and iterated Pieri coefficients", suite_pieri},
        {"binomial", "lambda_star", "binomial expansion of normalized Schur polynomials", suite_binomial},
        {"coherence", "lambda_star", "coherence against interlacing signatures", suite_coherence},
        {"omega", "lambda_star", "the conjugation involution in the s* basis", suite_omega},
        {"jt", "lambda_star", "determinantal formulas", suite_jt},
        {"characters", "characters", "characters from s* values", suite_characters},
        {"eigen", "capelli", "Capelli eigenvalues on highest vectors", suite_eigen},
        {"operator-stability", "capelli", "restriction of Capelli operators", suite_operator_stability},
        {"schur-weyl", "capelli", "Capelli operators on tensor powers", suite_schur_weyl},
        {"sigma", "capelli", "special symmetrization and its inverse", suite_sigma},
        {"casimir", "capelli", "Casimir eigenvalues", suite_casimir},
    };
    return suites;
}

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : all_suites())
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace sstar
