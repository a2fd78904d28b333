// Command-line front end: quivers, brackets, tensor classification, moment
// maps, cohomology and free-product brackets with deterministic output.
#include "CLI11.hpp"

#include "ddq/cohomology.hpp"
#include "ddq/freeproduct.hpp"

#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace ddq;
using json = nlohmann::ordered_json;

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

// Arrow given as 1-based "tail,head,primary,secondary".
Arrow parse_arrow(const std::string& text) {
    auto parts = parse_dims(text);
    if (parts.size() != 4)
        throw std::invalid_argument("arrow must be tail,head,primary,secondary: " + text);
    return Arrow{parts[1] - 1, parts[0] - 1, parts[2], parts[3]};
}

std::vector<Arrow> parse_word(const std::string& text) {
    std::vector<Arrow> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';'))
        if (!item.empty()) out.push_back(parse_arrow(item));
    return out;
}

json arrow_json(const Arrow& a) {
    return json{{"tail", a.tail + 1},
                {"head", a.head + 1},
                {"primary", a.primary},
                {"secondary", a.secondary}};
}

json graded_json(const GradedElement& g) {
    json out = json::array();
    for (const auto& [n, c] : g.terms()) {
        json word = json::array();
        for (const Arrow& a : n.word) word.push_back(arrow_json(a));
        out.push_back({{"coeff", c.to_string()},
                       {"word", word},
                       {"vertex", n.degree() == 0 ? n.vertex + 1 : 0}});
    }
    return out;
}

std::string unit_text(const MatrixUnit& u) {
    return "e[" + std::to_string(u.comp + 1) + "](" + std::to_string(u.p) + "," +
           std::to_string(u.q) + ")";
}

json schouten_json(const SchoutenValue& v) {
    json left = json::array(), right = json::array();
    for (const auto& [k, c] : v.left.terms())
        left.push_back({{"coeff", c.to_string()},
                        {"derivation", {unit_text(k[0]), unit_text(k[1])}},
                        {"factor", unit_text(k[2])}});
    for (const auto& [k, c] : v.right.terms())
        right.push_back({{"coeff", c.to_string()},
                         {"factor", unit_text(k[0])},
                         {"derivation", {unit_text(k[1]), unit_text(k[2])}}});
    return json{{"left", left}, {"right", right}};
}

DoubleTensor tensor_from_options(const SemiSimpleAlgebra& S, const std::string& c_text,
                                 bool symbolic, const std::string& monomial_text) {
    if (!monomial_text.empty()) {
        auto word = parse_word(monomial_text);
        if (word.size() != 2) throw std::invalid_argument("monomial needs two arrows");
        DoubleTensor P;
        P.terms.emplace_back(word[0], word[1], Poly(1));
        return P;
    }
    if (symbolic) {
        std::map<std::pair<int, int>, Poly> c;
        for (int i = 1; i <= S.components(); ++i)
            for (int j = i + 1; j <= S.components(); ++j)
                c[{i, j}] = Poly::variable("a_" + std::to_string(i) + "_" +
                                           std::to_string(j));
        return pairwise_tensor(S, c);
    }
    return pairwise_tensor(S, parse_coefficients(c_text));
}

TraceWord parse_trace_word(const std::string& text) {
    auto parts = parse_dims(text);
    if (parts.empty() || parts.size() % 2 != 0)
        throw std::invalid_argument("trace word needs pairs e,f,e,f,...: " + text);
    TraceWord w;
    for (size_t i = 0; i < parts.size(); i += 2) {
        w.s.push_back(parts[i]);
        w.t.push_back(parts[i + 1]);
    }
    return w;
}

std::string word_text(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += (w[i].in_t ? "f" : "e") + std::to_string(w[i].idx);
    }
    return out;
}

int run_verify(unsigned long seed);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"double derivation quiver toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    // Let "--json" be accepted after a subcommand name as well.
    app.fallthrough();

    std::string dims_text, sub_dims_text, mult_text;
    std::string a_text, b_text, c_text, d_text, monomial_text, x_text, y_text, eval_text;
    bool symbolic = false;
    int max_degree = 2, np = 0, nq = 0;

    auto* cmd_quiver = app.add_subcommand("quiver", "double derivation quiver of S");
    cmd_quiver->add_option("--dims", dims_text, "block sizes, e.g. 2,3")->required();

    auto* cmd_rel = app.add_subcommand("relative-quiver", "quiver of T-relative derivations");
    cmd_rel->add_option("--dims", dims_text, "block sizes of S")->required();
    cmd_rel->add_option("--sub-dims", sub_dims_text, "block sizes of T")->required();
    cmd_rel->add_option("--mult", mult_text, "multiplicity rows, e.g. 1,1;2,0")->required();

    auto* cmd_bracket = app.add_subcommand("bracket", "double Schouten bracket of two generators");
    cmd_bracket->add_option("--dims", dims_text)->required();
    cmd_bracket->add_option("--a", a_text, "arrow tail,head,primary,secondary (1-based)")->required();
    cmd_bracket->add_option("--b", b_text)->required();

    auto* cmd_neck = app.add_subcommand("necklace-bracket", "necklace Lie bracket of two cyclic words");
    cmd_neck->add_option("--dims", dims_text)->required();
    cmd_neck->add_option("--a", a_text, "arrows separated by ';'")->required();
    cmd_neck->add_option("--b", b_text)->required();

    auto* cmd_check = app.add_subcommand("check-tensor", "is a degree-2 tensor Poisson?");
    cmd_check->add_option("--dims", dims_text)->required();
    cmd_check->add_option("--c", c_text, "pairwise coefficients i,j:value");
    cmd_check->add_flag("--symbolic", symbolic, "symbolic coefficients on all pairs");
    cmd_check->add_option("--monomial", monomial_text, "single 2-cycle 'arrow;arrow'");

    auto* cmd_enum = app.add_subcommand("enumerate-tensors", "all Poisson 2-cycle monomials");
    cmd_enum->add_option("--dims", dims_text)->required();

    auto* cmd_moment = app.add_subcommand("moment-map", "moment map for a pairwise tensor on C^n");
    cmd_moment->add_option("--dims", dims_text)->required();
    cmd_moment->add_option("--c", c_text)->required();

    auto* cmd_coh = app.add_subcommand("cohomology", "Betti numbers of d_P = {P,-}");
    cmd_coh->add_option("--dims", dims_text)->required();
    cmd_coh->add_option("--c", c_text);
    cmd_coh->add_option("--monomial", monomial_text);
    cmd_coh->add_option("--max-degree", max_degree, "highest reported degree");

    auto* cmd_free = app.add_subcommand("free-product-bracket", "induced bracket {tr x, tr y} on C^p * C^q");
    cmd_free->add_option("--p", np, "idempotents in the first factor")->required();
    cmd_free->add_option("--q", nq, "idempotents in the second factor")->required();
    cmd_free->add_option("--x", x_text, "word e,f,e,f,... (1-based indices)")->required();
    cmd_free->add_option("--y", y_text)->required();
    cmd_free->add_option("--c", c_text, "first-factor coefficients i,j:value");
    cmd_free->add_option("--d", d_text, "second-factor coefficients");
    cmd_free->add_option("--eval", eval_text, "evaluate on a random representation: n,seed");

    unsigned long seed = 7;
    auto* cmd_verify = app.add_subcommand("verify", "run the internal cross-check suite");
    cmd_verify->add_option("--seed", seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_quiver->parsed() || cmd_rel->parsed()) {
            Quiver q;
            if (cmd_quiver->parsed()) {
                q = build_quiver(SemiSimpleAlgebra(parse_dims(dims_text)));
            } else {
                std::vector<std::vector<int>> mult;
                std::stringstream in(mult_text);
                std::string row;
                while (std::getline(in, row, ';')) mult.push_back(parse_dims(row));
                q = build_relative_quiver(BratteliDiagram(
                    SemiSimpleAlgebra(parse_dims(dims_text)),
                    SemiSimpleAlgebra(parse_dims(sub_dims_text)), mult));
            }
            if (as_json) {
                std::cout << quiver_to_json(q) << "\n";
            } else {
                std::cout << "vertices:";
                for (int d : q.vertex_labels) std::cout << " " << d;
                std::cout << "\narrows: " << q.arrows.size() << "\n";
                for (const Arrow& a : q.arrows) std::cout << arrow_to_string(a) << "\n";
            }
            return 0;
        }
        if (cmd_bracket->parsed()) {
            SemiSimpleAlgebra S(parse_dims(dims_text));
            const SchoutenValue v =
                schouten_generators(S, parse_arrow(a_text), parse_arrow(b_text));
            if (as_json) {
                std::cout << schouten_json(v).dump(2) << "\n";
            } else {
                for (const auto& [k, c] : v.left.terms())
                    std::cout << "(" << c.to_string() << ") d(" << unit_text(k[0]) << ","
                              << unit_text(k[1]) << ") (x) " << unit_text(k[2]) << "\n";
                for (const auto& [k, c] : v.right.terms())
                    std::cout << "(" << c.to_string() << ") " << unit_text(k[0])
                              << " (x) d(" << unit_text(k[1]) << "," << unit_text(k[2])
                              << ")\n";
                if (v.left.is_zero() && v.right.is_zero()) std::cout << "0\n";
            }
            return 0;
        }
        if (cmd_neck->parsed()) {
            SemiSimpleAlgebra S(parse_dims(dims_text));
            GradedElement a, b;
            a.add_word(parse_word(a_text), Poly(1));
            b.add_word(parse_word(b_text), Poly(1));
            const GradedElement r = necklace_bracket(S, a, b);
            std::cout << (as_json ? graded_json(r).dump(2) : r.to_string()) << "\n";
            return 0;
        }
        if (cmd_check->parsed()) {
            SemiSimpleAlgebra S(parse_dims(dims_text));
            const DoubleTensor P = tensor_from_options(S, c_text, symbolic, monomial_text);
            const CheckResult r = check_tensor(S, P);
            if (as_json) {
                json out{{"poisson", r.poisson}, {"obstruction", graded_json(r.obstruction)}};
                if (!monomial_text.empty()) {
                    const auto& [a, b, cf] = P.terms.front();
                    out["case_test"] = is_poisson_monomial(S, a, b);
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "poisson: " << (r.poisson ? "true" : "false") << "\n";
                if (!r.poisson)
                    std::cout << "obstruction: " << r.obstruction.to_string() << "\n";
            }
            return 0;
        }
        if (cmd_enum->parsed()) {
            SemiSimpleAlgebra S(parse_dims(dims_text));
            const auto monos = enumerate_poisson_monomials(S);
            if (as_json) {
                json out = json::array();
                for (const auto& [a, b] : monos)
                    out.push_back(json::array({arrow_json(a), arrow_json(b)}));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& [a, b] : monos)
                    std::cout << arrow_to_string(a) << "*" << arrow_to_string(b) << "\n";
                std::cout << "total: " << monos.size() << "\n";
            }
            return 0;
        }
        if (cmd_moment->parsed()) {
            SemiSimpleAlgebra S(parse_dims(dims_text));
            const DoubleTensor P = pairwise_tensor(S, parse_coefficients(c_text));
            const MomentMapResult r = moment_map(S, P);
            const char* status =
                r.status == MomentMapResult::Status::Ok            ? "ok"
                : r.status == MomentMapResult::Status::NoMomentMap ? "NoMomentMap"
                : r.status == MomentMapResult::Status::NotPoisson
                    ? "NotPoisson"
                    : "SymbolicCoefficients";
            if (as_json) {
                json out{{"status", status}};
                if (r.status == MomentMapResult::Status::Ok) {
                    json mu = json::object();
                    for (const auto& [i, v] : r.mu) mu[std::to_string(i)] = to_string(v);
                    out["mu"] = mu;
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "status: " << status << "\n";
                if (r.status == MomentMapResult::Status::Ok)
                    for (const auto& [i, v] : r.mu)
                        std::cout << "mu_" << i << " = " << to_string(v) << "\n";
            }
            return 0;
        }
        if (cmd_coh->parsed()) {
            SemiSimpleAlgebra S(parse_dims(dims_text));
            const DoubleTensor P = tensor_from_options(S, c_text, false, monomial_text);
            const Complex C = build_complex(S, P, max_degree);
            json table = json::object();
            for (int i = 0; i <= max_degree; ++i)
                table[std::to_string(i)] = betti(C, i);
            if (as_json) {
                std::cout << table.dump(2) << "\n";
            } else {
                for (int i = 0; i <= max_degree; ++i)
                    std::cout << "H^" << i << " = " << betti(C, i) << "\n";
            }
            return 0;
        }
        if (cmd_free->parsed()) {
            const TraceWord x = parse_trace_word(x_text), y = parse_trace_word(y_text);
            const PairCoeffs c = c_text.empty() ? PairCoeffs{} : parse_coefficients(c_text);
            const PairCoeffs d = d_text.empty() ? PairCoeffs{} : parse_coefficients(d_text);
            const TraceSum r = induced_trace_bracket(np, nq, x, y, c, d);
            json terms = json::array();
            for (const auto& [w, cf] : r.terms())
                terms.push_back({{"coeff", cf.to_string()}, {"word", word_text(w)}});
            json out{{"terms", terms}};
            if (!eval_text.empty()) {
                const auto parts = parse_dims(eval_text);
                if (parts.size() != 2) throw std::invalid_argument("--eval needs n,seed");
                const int n = parts[0];
                if (n < np || n < nq)
                    throw std::invalid_argument("representation dimension too small");
                std::vector<int> eb(size_t(np), 1), fb(size_t(nq), 1);
                eb[0] = n - np + 1;
                fb[0] = n - nq + 1;
                const Representation R =
                    random_representation(n, eb, fb, static_cast<unsigned long>(parts[1]));
                out["eval"] = to_string(evaluate_sum(r, R));
            }
            if (as_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& t : terms)
                    std::cout << "(" << t["coeff"].get<std::string>() << ")*tr("
                              << t["word"].get<std::string>() << ")\n";
                if (terms.empty()) std::cout << "0\n";
                if (out.contains("eval"))
                    std::cout << "eval: " << out["eval"].get<std::string>() << "\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) return run_verify(seed);
    } catch (const std::logic_error& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

namespace {

int run_verify(unsigned long seed) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    // Generator-table bracket against the raw-definition bracket.
    {
        bool ok = true;
        for (const auto& dims : {std::vector<int>{1, 1}, {2}, {1, 2}}) {
            SemiSimpleAlgebra S(dims);
            const Quiver q = build_quiver(S);
            for (const Arrow& a : q.arrows)
                for (const Arrow& b : q.arrows) {
                    const auto table = evaluate_schouten(S, schouten_generators(S, a, b));
                    const auto oracle =
                        schouten_oracle(S, generator_tensor(S, a), generator_tensor(S, b));
                    if (!(table == oracle)) ok = false;
                }
        }
        report("generator bracket table vs definition", ok);
    }

    // Case test for 2-cycle monomials against brute force and double Jacobi.
    {
        bool ok = true;
        for (const auto& dims :
             {std::vector<int>{1, 1}, {2}, {1, 2}, {1, 1, 1}, {2, 2}}) {
            SemiSimpleAlgebra S(dims);
            for (const auto& [a, b] : all_two_cycles(S)) {
                DoubleTensor P;
                P.terms.emplace_back(a, b, Poly(1));
                const bool by_case = is_poisson_monomial(S, a, b);
                const bool by_bracket = check_tensor(S, P).poisson;
                const bool by_jacobi = double_jacobi_check(S, tensor_to_pairs(S, P));
                if (by_case != by_bracket || by_bracket != by_jacobi) ok = false;
            }
        }
        report("2-cycle classification three-route agreement", ok);
    }

    // Free product: closed formula vs letter-by-letter derivation, and the
    // induced bracket against the pairing route on a random representation.
    {
        bool ok = true;
        const PairCoeffs c = parse_coefficients("1,2:1 2,3:1 1,3:1/2");
        const PairCoeffs d = parse_coefficients("1,2:2 2,3:2 1,3:1");
        const std::vector<TraceWord> words = {
            TraceWord{{1}, {1}}, TraceWord{{2}, {2}}, TraceWord{{1, 2}, {1, 2}},
            TraceWord{{3, 1}, {2, 3}}};
        for (const TraceWord& x : words)
            for (const TraceWord& y : words) {
                if (!(amalgamated_double_bracket(3, 3, x, y, c, d) ==
                      leibniz_double_bracket(3, 3, x, y, c, d)))
                    ok = false;
                const Representation R =
                    random_representation(4, {2, 1, 1}, {1, 2, 1}, seed);
                const Rational lhs =
                    evaluate_sum(induced_trace_bracket(3, 3, x, y, c, d), R);
                const Rational rhs =
                    evaluate_pairing(amalgamated_double_bracket(3, 3, x, y, c, d), R);
                if (lhs != rhs) ok = false;
            }
        report("free product two-route consistency", ok);
    }

    std::cout << (failures == 0 ? "all checks passed" : "some checks FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace
