#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "sstar/capelli.hpp"
#include "sstar/characters.hpp"
#include "sstar/lambda_star.hpp"
#include "sstar/partition.hpp"
#include "sstar/shifted_eval.hpp"
#include "sstar/suites.hpp"
#include "sstar/symmetrization.hpp"

using namespace sstar;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const EvalPoint& x) {
    Json a = Json::array();
    for (const auto& v : x.x) a.push_back(v.str());
    return a;
}

void emit(bool json, const Json& j, const std::string& text) {
    if (json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

struct EvalArgs {
    std::string mu, point, signature, engine = "comb", generator;
    int n = 0, k = -1;
};

int run_eval(const EvalArgs& a, bool json) {
    EvalPoint x;
    Json j;
    int n = a.n;
    if (!a.signature.empty()) {
        Signature s = Signature::parse(a.signature);
        if (n != 0 && n != s.n()) throw UsageError("--n does not match the signature length");
        n = s.n();
        x = EvalPoint::from(s);
        j["signature"] = s.entries();
    } else if (!a.point.empty()) {
        x = EvalPoint::parse(a.point);
        if (n != 0) x = EvalPoint(x.padded(n));
        j["point"] = to_json(x);
    } else {
        throw UsageError("one of --point or --at-signature is required");
    }

    if (!a.generator.empty()) {
        if (!a.mu.empty()) throw UsageError("--mu and --generator are exclusive");
        if (a.k < 0) throw UsageError("--generator needs --k");
        Generator g = parse_generator(a.generator);
        Rational v = generator_eval(g, a.k, x);
        j["generator"] = generator_name(g);
        j["k"] = a.k;
        j["value"] = v.str();
        emit(json, j, v.str());
        return kOk;
    }
    if (a.mu.empty()) throw UsageError("--mu or --generator is required");
    Partition mu = Partition::parse(a.mu);
    j["mu"] = to_json(mu);
    j["engine"] = a.engine;
    auto det = [&] { return sstar_det(mu, x, std::max(mu.length(), x.size())); };
    auto comb = [&] { return sstar_comb(mu, x); };
    if (a.engine == "det" || a.engine == "comb") {
        Rational v = a.engine == "det" ? det() : comb();
        j["value"] = v.str();
        emit(json, j, v.str());
        return kOk;
    }
    if (a.engine != "both") throw UsageError("--engine must be det, comb or both");
    Rational vc = comb();
    std::optional<Rational> vd;
    std::string det_text;
    try {
        vd = det();
        det_text = vd->str();
    } catch (const SingularPoint&) {
        det_text = "singular";
    }
    bool agree = !vd || *vd == vc;
    j["det"] = det_text;
    j["comb"] = vc.str();
    j["agree"] = agree;
    j["value"] = vc.str();
    std::string text = vc.str();
    if (!vd)
        text += "\n(determinant route singular at this point; tableau sum used)";
    else if (!agree)
        text += "\nMISMATCH: det " + det_text + ", comb " + vc.str();
    emit(json, j, text);
    return agree ? kOk : kVerifyFailed;
}

struct DimArgs {
    std::string skew, lambda;
    int n = 0;
};

int run_dim(const DimArgs& a, bool json) {
    if (!a.skew.empty()) {
        SkewShape s = SkewShape::parse(a.skew);
        Integer value = dim_skew(s);
        Json j;
        j["skew"] = s.str();
        j["dim"] = value.get_str();
        std::string text = value.get_str();
        if (s.outer.contains(s.inner)) {
            const int l = s.outer.size(), k = s.inner.size();
            Rational sv = sstar_at(s.inner, s.outer);
            Rational fall = falling(Rational(l), static_cast<unsigned>(k));
            j["dim_outer"] = dim_sym(s.outer).get_str();
            j["sstar"] = sv.str();
            j["falling"] = fall.str();
            j["syt_count"] = syt_count_skew(s.outer, s.inner).get_str();
            text += "\n" + dim_sym(s.outer).get_str() + " * " + sv.str() + " / " + fall.str() + " = " + value.get_str() +
                    " (standard tableaux: " + syt_count_skew(s.outer, s.inner).get_str() + ")";
        }
        emit(json, j, text);
        return kOk;
    }
    if (a.lambda.empty()) throw UsageError("one of --skew or --lambda is required");
    Partition lambda = Partition::parse(a.lambda);
    Json j;
    j["lambda"] = to_json(lambda);
    if (a.n > 0) {
        Integer d = dim_gl(a.n, lambda);
        j["n"] = a.n;
        j["dim"] = d.get_str();
        emit(json, j, d.get_str());
    } else {
        Integer d = dim_sym(lambda);
        j["dim"] = d.get_str();
        emit(json, j, d.get_str());
    }
    return kOk;
}

struct ExpandArgs {
    std::string product, generator;
    int k = -1;
};

int run_expand(const ExpandArgs& a, bool json) {
    ShiftedElement e;
    Json j;
    if (!a.product.empty()) {
        e = parse_expression(a.product);
        j["expression"] = a.product;
    } else if (!a.generator.empty()) {
        if (a.k < 0) throw UsageError("--generator needs --k");
        Generator g = parse_generator(a.generator);
        e = generator_element(g, a.k);
        j["generator"] = generator_name(g);
        j["k"] = a.k;
    } else {
        throw UsageError("one of --product or --generator is required");
    }
    j["expansion"] = Json::parse(e.to_json());
    emit(json, j, e.to_json());
    return kOk;
}

struct CharArgs {
    std::string lambda, rho, method = "both";
};

int run_char(const CharArgs& a, bool json) {
    Partition lambda = Partition::parse(a.lambda), rho = Partition::parse(a.rho);
    if (rho.size() > lambda.size()) throw UsageError("|rho| exceeds |lambda|");
    // cycles of length 1 in rho are absorbed by the padding
    Json j;
    j["lambda"] = to_json(lambda);
    j["rho"] = to_json(rho);
    auto from_sstar = [&] { return char_small_cycles(lambda, rho); };
    auto from_mn = [&] { return mn_character(lambda, pad_with_ones(rho, lambda.size())); };
    if (a.method == "sstar" || a.method == "mn") {
        Integer v = a.method == "sstar" ? from_sstar() : from_mn();
        j["value"] = v.get_str();
        emit(json, j, v.get_str());
        return kOk;
    }
    if (a.method != "both") throw UsageError("--method must be sstar, mn or both");
    Integer vs = from_sstar(), vm = from_mn();
    j["sstar"] = vs.get_str();
    j["mn"] = vm.get_str();
    j["agree"] = vs == vm;
    emit(json, j, "s* formula: " + vs.get_str() + "\nMurnaghan-Nakayama: " + vm.get_str());
    return vs == vm ? kOk : kVerifyFailed;
}

struct CapelliArgs {
    int n = 0, m = 0;
    std::string mu, lambda, check = "eigen";
    bool print_operator = false;
};

int run_capelli(const CapelliArgs& a, bool json) {
    if (a.n < 1 || a.m < 1) throw UsageError("--n and --m must be positive");
    Partition mu = Partition::parse(a.mu);
    if (mu.length() > std::min(a.n, a.m)) throw UsageError("length of mu exceeds min(n, m)");
    Json j;
    j["n"] = a.n;
    j["m"] = a.m;
    j["mu"] = to_json(mu);
    j["check"] = a.check;
    DiffOp op = capelli_operator(mu, a.n, a.m);
    std::string text;
    bool ok = true;
    if (a.check == "eigen") {
        if (a.lambda.empty()) throw UsageError("--check eigen needs --lambda");
        Partition lambda = Partition::parse(a.lambda);
        if (lambda.length() > std::min(a.n, a.m)) throw UsageError("length of lambda exceeds min(n, m)");
        Rational ev = eigenvalue_on(op, highest_vector(lambda, a.n, a.m));
        Rational expect = sstar_at(mu, lambda);
        ok = ev == expect;
        j["lambda"] = to_json(lambda);
        j["eigenvalue"] = ev.str();
        j["sstar"] = expect.str();
        j["agree"] = ok;
        text = "eigenvalue " + ev.str() + ", s*(lambda) " + expect.str() + (ok ? "" : "  MISMATCH");
    } else if (a.check == "stability") {
        if (a.n >= kMaxDim || a.m >= kMaxDim) throw UsageError("matrix size too large");
        DiffOp bigger = capelli_operator(mu, a.n + 1, a.m + 1).restrict_to({a.n, a.m});
        ok = bigger == op;
        j["agree"] = ok;
        text = std::string("restriction of the (") + std::to_string(a.n + 1) + "," + std::to_string(a.m + 1) +
               ") operator " + (ok ? "matches" : "DIFFERS FROM") + " the (" + std::to_string(a.n) + "," +
               std::to_string(a.m) + ") operator";
    } else {
        throw UsageError("--check must be eigen or stability");
    }
    if (a.print_operator) {
        j["operator"] = op.str();
        text += "\n" + op.str();
    }
    emit(json, j, text);
    return ok ? kOk : kVerifyFailed;
}

struct SigmaArgs {
    std::string word, mu;
    int n = 0;
    bool roundtrip = false;
};

int run_sigma(const SigmaArgs& a, bool json) {
    if (a.n < 1 || a.n > kMaxDim) throw UsageError("--n out of range");
    Json j;
    j["n"] = a.n;
    std::string text;
    bool ok = true;
    if (!a.mu.empty()) {
        Partition mu = Partition::parse(a.mu);
        if (mu.length() > a.n) throw UsageError("length of mu exceeds n");
        ok = sigma(s_mu_element(mu, a.n), a.n, a.n) == capelli_operator(mu, a.n, a.n);
        j["mu"] = to_json(mu);
        j["sigma_equals_capelli"] = ok;
        text = std::string("sigma(S_mu) ") + (ok ? "equals" : "DIFFERS FROM") + " the Capelli operator";
    } else {
        if (a.word.empty()) throw UsageError("one of --word or --mu is required");
        GeneratorWord w = GeneratorWord::parse(a.word, a.n);
        MultiPoly inv = sigma_inverse(w);
        j["word"] = w.str();
        j["sigma_inverse"] = inv.str("e");
        text = inv.str("e");
        if (a.roundtrip) {
            bool forward = r_map(w, a.n) == sigma(inv, a.n, a.n);
            MultiPoly mono = word_as_monomial(w);
            bool backward = sigma_inverse(sigma_words(mono, a.n), a.n) == mono;
            ok = forward && backward;
            j["sigma_of_inverse"] = forward;
            j["inverse_of_sigma"] = backward;
            text += std::string("\nsigma(sigma^-1(w)) = w: ") + (forward ? "yes" : "NO") +
                    "\nsigma^-1(sigma(m)) = m: " + (backward ? "yes" : "NO");
        }
    }
    emit(json, j, text);
    return ok ? kOk : kVerifyFailed;
}

struct VerifyArgs {
    std::string suite = "all";
    int max_size = 0;
    std::uint64_t seed = 42;
};

int run_verify(const VerifyArgs& a, bool json) {
    SuiteOptions opts{a.max_size, a.seed};
    std::vector<SuiteReport> reports;
    if (a.suite == "all") {
        std::string layer;
        bool layer_failed = false;
        for (const auto& s : all_suites()) {
            if (s.layer != layer) {
                if (layer_failed) break;
                layer = s.layer;
            }
            reports.push_back(s.run(opts));
            if (!reports.back().ok()) layer_failed = true;
        }
    } else {
        const SuiteInfo* s = find_suite(a.suite);
        if (!s) {
            std::string names;
            for (const auto& t : all_suites()) names += " " + t.name;
            throw UsageError("unknown suite '" + a.suite + "'; available: all" + names);
        }
        reports.push_back(s->run(opts));
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    if (json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(Json::parse(r.to_json()));
        std::cout << (reports.size() == 1 ? arr[0] : arr).dump() << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.summary() << "\n";
    }
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with shifted Schur functions"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit JSON")->group("Output");

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate s*_mu or a generator at a point");
    eval->add_option("--mu", ea.mu, "Partition, e.g. 2,1");
    eval->add_option("--point", ea.point, "Coordinates, e.g. 3,1 or 1/2,-3");
    eval->add_option("--at-signature", ea.signature, "Signature point, e.g. 2,0,-1");
    eval->add_option("--n", ea.n, "Number of coordinates");
    eval->add_option("--engine", ea.engine, "det, comb or both")->check(CLI::IsMember({"det", "comb", "both"}));
    eval->add_option("--generator", ea.generator, "h, e, p, phat, pcheck or pcirc");
    eval->add_option("--k", ea.k, "Generator degree");
    add_json(eval);

    DimArgs da;
    auto* dim = app.add_subcommand("dim", "Dimensions of skew diagrams and irreducibles");
    dim->add_option("--skew", da.skew, "Skew shape, e.g. 3,2/2");
    dim->add_option("--lambda", da.lambda, "Partition");
    dim->add_option("--n", da.n, "GL(n) dimension instead of the symmetric group");
    add_json(dim);

    ExpandArgs xa;
    auto* expand = app.add_subcommand("expand", "Expand an expression in the s* basis");
    expand->add_option("--product", xa.product, "Expression such as \"s[1]*s[2,1]\"");
    expand->add_option("--generator", xa.generator, "h, e, p, phat, pcheck or pcirc");
    expand->add_option("--k", xa.k, "Generator degree");
    add_json(expand);

    CharArgs ca;
    auto* chr = app.add_subcommand("char", "Symmetric group character at rho with fixed points added");
    chr->add_option("--lambda", ca.lambda, "Irreducible")->required();
    chr->add_option("--rho", ca.rho, "Cycle type of the nontrivial cycles")->required();
    chr->add_option("--method", ca.method, "sstar, mn or both")->check(CLI::IsMember({"sstar", "mn", "both"}));
    add_json(chr);

    CapelliArgs pa;
    auto* cap = app.add_subcommand("capelli", "Higher Capelli operators");
    cap->add_option("--n", pa.n, "Rows")->required();
    cap->add_option("--m", pa.m, "Columns")->required();
    cap->add_option("--mu", pa.mu, "Partition")->required();
    cap->add_option("--lambda", pa.lambda, "Highest weight for --check eigen");
    cap->add_option("--check", pa.check, "eigen or stability")->check(CLI::IsMember({"eigen", "stability"}));
    cap->add_flag("--print-operator", pa.print_operator, "Print the operator");
    add_json(cap);

    SigmaArgs sa;
    auto* sig = app.add_subcommand("sigma", "Special symmetrization");
    sig->add_option("--word", sa.word, "Word in E_ij, e.g. 11,22,12");
    sig->add_option("--mu", sa.mu, "Check sigma(S_mu) against the Capelli operator");
    sig->add_option("--n", sa.n, "Rank")->required();
    sig->add_flag("--roundtrip", sa.roundtrip, "Check both round trips");
    add_json(sig);

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", va.suite, "Suite name or all");
    ver->add_option("--max-size", va.max_size, "Override the suite's size bound");
    ver->add_option("--seed", va.seed, "Random seed");
    add_json(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval) return run_eval(ea, json);
        if (*dim) return run_dim(da, json);
        if (*expand) return run_expand(xa, json);
        if (*chr) return run_char(ca, json);
        if (*cap) return run_capelli(pa, json);
        if (*sig) return run_sigma(sa, json);
        if (*ver) return run_verify(va, json);
    } catch (const SingularPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
