// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] (optional) is the path of the command-line binary, used by the
// determinism criterion. All tolerances are exact (rational arithmetic).
#include "ddq/cohomology.hpp"
#include "ddq/freeproduct.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sys/wait.h>
#include <optional>
#include <random>
#include <sstream>

using namespace ddq;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

// All ordered compositions (d_1..d_k), 1 <= k <= max_parts, sum <= max_sum.
std::vector<std::vector<int>> compositions(int max_sum, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (int(cur.size()) == max_parts) return;
        for (int d = 1; d <= remaining; ++d) {
            cur.push_back(d);
            self(self, remaining - d);
            cur.pop_back();
        }
    };
    rec(rec, max_sum);
    return out;
}

// ---------------------------------------------------------------------------
// 1. Quiver dimension formula vs brute force; kernel dimension = dim S.
void criterion1() {
    bool ok = true;
    std::string detail;
    for (const auto& dims : compositions(6, 3)) {
        SemiSimpleAlgebra S(dims);
        const int brute = derivation_module_dimension(S);
        const long formula = quiver_dimension_formula(S);
        const long kernel = long(S.dim()) * S.dim() - brute; // dim Ker(x -> d_x)
        if (brute != formula || kernel != S.dim()) {
            ok = false;
            std::ostringstream d;
            d << "dims sum " << S.dim() << ": brute " << brute << " formula " << formula;
            detail = d.str();
        }
    }
    report(1, "derivation module dimension matches the quiver formula", ok, detail);
}

// ---------------------------------------------------------------------------
// 2. Relative multiplicity formulas vs the constraint-solver oracle.
void criterion2() {
    const std::vector<BratteliDiagram> diagrams = {
        {SemiSimpleAlgebra({1, 1, 1, 1}), SemiSimpleAlgebra({1, 1}),
         {{1, 0}, {1, 0}, {0, 1}, {0, 1}}},
        {SemiSimpleAlgebra({1, 1, 1, 1, 1, 1}), SemiSimpleAlgebra({1, 1}),
         {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}}},
        {SemiSimpleAlgebra({1, 1, 1, 1, 1, 1}), SemiSimpleAlgebra({1, 1}),
         {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}},
        {SemiSimpleAlgebra({2}), SemiSimpleAlgebra({1}), {{2}}},
        {SemiSimpleAlgebra({2}), SemiSimpleAlgebra({1, 1}), {{1, 1}}},
        {SemiSimpleAlgebra({2, 1}), SemiSimpleAlgebra({1, 1}), {{1, 1}, {0, 1}}},
        {SemiSimpleAlgebra({2, 2}), SemiSimpleAlgebra({2}), {{1}, {1}}},
        {SemiSimpleAlgebra({3}), SemiSimpleAlgebra({1, 2}), {{1, 1}}},
        {SemiSimpleAlgebra({2, 3}), SemiSimpleAlgebra({1}), {{2}, {3}}},
        {SemiSimpleAlgebra({1, 1, 1}), SemiSimpleAlgebra({1}), {{1}, {1}, {1}}},
        {SemiSimpleAlgebra({4}), SemiSimpleAlgebra({2}), {{2}}},
    };
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < diagrams.size(); ++i) {
        const long formula = relative_dimension_formula(diagrams[i]);
        const int oracle = relative_derivation_oracle(diagrams[i]);
        if (formula != oracle) {
            ok = false;
            detail = "diagram " + std::to_string(i) + ": formula " +
                     std::to_string(formula) + " oracle " + std::to_string(oracle);
        }
    }
    report(2, "relative multiplicities match the brute-force oracle (11 diagrams)", ok,
           detail);
}

// ---------------------------------------------------------------------------
// 3. Generator bracket table vs the definition, exhaustively.
void criterion3() {
    bool ok = true;
    std::string detail;
    for (const auto& dims : {std::vector<int>{1, 1}, {1, 1, 1}, {2}, {2, 1}}) {
        SemiSimpleAlgebra S(dims);
        const Quiver q = build_quiver(S);
        for (const Arrow& a : q.arrows)
            for (const Arrow& b : q.arrows) {
                const auto table = evaluate_schouten(S, schouten_generators(S, a, b));
                const auto oracle =
                    schouten_oracle(S, generator_tensor(S, a), generator_tensor(S, b));
                if (!(table == oracle)) {
                    ok = false;
                    detail = arrow_to_string(a) + " vs " + arrow_to_string(b);
                }
            }
    }
    report(3, "generator bracket table equals the definition on four algebras", ok,
           detail);
}

// ---------------------------------------------------------------------------
// 4. Necklace bracket laws on random pairs/triples.
std::optional<std::vector<Arrow>> random_closed_word(const Quiver& q, int length,
                                                     std::mt19937& rng) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Arrow> w;
        const int start = int(rng() % q.vertex_labels.size());
        int at = start;
        bool done = true;
        for (int t = 0; t < length; ++t) {
            std::vector<Arrow> options;
            for (const Arrow& a : q.arrows)
                if (a.tail == at && (t + 1 < length || a.head == start))
                    options.push_back(a);
            if (options.empty()) {
                done = false;
                break;
            }
            const Arrow pick = options[rng() % options.size()];
            w.push_back(pick);
            at = pick.head;
        }
        if (done) return w;
    }
    return std::nullopt;
}

void criterion4() {
    std::mt19937 rng(2024);
    const auto algebras = compositions(5, 5);
    bool ok = true;
    std::string detail;
    auto sgn = [](long e) { return e % 2 == 0 ? Poly(1) : Poly(-1); };
    int done = 0;
    while (done < 220) {
        const auto& dims = algebras[rng() % algebras.size()];
        SemiSimpleAlgebra S(dims);
        const Quiver q = build_quiver(S);
        if (q.arrows.empty()) continue;
        std::vector<Necklace> w;
        for (int k = 0; k < 3; ++k) {
            const auto word = random_closed_word(q, 1 + int(rng() % 3), rng);
            if (!word) break;
            auto [n, s] = canonicalize(*word);
            if (s == 0) break;
            w.push_back(n);
        }
        if (w.size() < 3) continue;
        ++done;
        const long pa = w[0].degree() - 1, pb = w[1].degree() - 1, pc = w[2].degree() - 1;
        const GradedElement ab = necklace_bracket(S, w[0], w[1]);
        const GradedElement ba = necklace_bracket(S, w[1], w[0]);
        if (!(ab + ba.scaled(sgn(pa * pb))).is_zero()) {
            ok = false;
            detail = "antisymmetry, sample " + std::to_string(done);
        }
        auto g = [](const Necklace& n) { return GradedElement::necklace(n); };
        const GradedElement j =
            necklace_bracket(S, g(w[0]), necklace_bracket(S, w[1], w[2])).scaled(sgn(pa * pc)) +
            necklace_bracket(S, g(w[1]), necklace_bracket(S, w[2], w[0])).scaled(sgn(pb * pa)) +
            necklace_bracket(S, g(w[2]), necklace_bracket(S, w[0], w[1])).scaled(sgn(pc * pb));
        if (!j.is_zero()) {
            ok = false;
            detail = "jacobi, sample " + std::to_string(done);
        }
    }
    report(4, "necklace bracket: graded antisymmetry and Jacobi on 220 random triples",
           ok, detail);
}

// ---------------------------------------------------------------------------
// 5. Three-route classification of 2-cycle monomials.
void criterion5() {
    bool ok = true;
    std::string detail;
    long total = 0;
    for (const auto& dims : compositions(5, 5)) {
        SemiSimpleAlgebra S(dims);
        for (const auto& [a, b] : all_two_cycles(S)) {
            ++total;
            DoubleTensor P;
            P.terms.emplace_back(a, b, Poly(1));
            const bool by_case = is_poisson_monomial(S, a, b);
            const bool by_bracket = check_tensor(S, P).poisson;
            const bool by_jacobi = double_jacobi_check(S, tensor_to_pairs(S, P));
            if (by_case != by_bracket || by_bracket != by_jacobi) {
                ok = false;
                std::ostringstream d;
                d << "dims(";
                for (int x : dims) d << x << ",";
                d << ") " << arrow_to_string(a) << "*" << arrow_to_string(b) << " case "
                  << by_case << " bracket " << by_bracket << " jacobi " << by_jacobi;
                detail = d.str();
            }
        }
    }
    report(5,
           "2-cycle classification: case test, self-bracket and double Jacobi agree on " +
               std::to_string(total) + " monomials",
           ok, detail);
}

// ---------------------------------------------------------------------------
// 6. Symbolic self-bracket over C^n spans the triple relations.
void criterion6() {
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 5; ++n) {
        SemiSimpleAlgebra S(std::vector<int>(size_t(n), 1));
        std::map<std::pair<int, int>, Poly> c;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                c[{i, j}] =
                    Poly::variable("a_" + std::to_string(i) + "_" + std::to_string(j));
        const CheckResult r = check_tensor(S, pairwise_tensor(S, c));
        // Expect exactly two 3-cycles per unordered vertex triple, each with
        // coefficient +-2 (a_ij a_ik + a_ik a_jk - a_ij a_jk).
        long terms = 0;
        for (const auto& [neck, coeff] : r.obstruction.terms()) {
            ++terms;
            std::vector<int> v;
            for (const Arrow& arr : neck.word) v.push_back(arr.tail);
            std::sort(v.begin(), v.end());
            if (neck.degree() != 3 || v.size() != 3 || v[0] == v[1] || v[1] == v[2]) {
                ok = false;
                detail = "unexpected obstruction necklace " + necklace_to_string(neck);
                continue;
            }
            auto a = [&](int i, int j) {
                return Poly::variable("a_" + std::to_string(v[size_t(i)] + 1) + "_" +
                                      std::to_string(v[size_t(j)] + 1));
            };
            const Poly rel = a(0, 1) * a(0, 2) + a(0, 2) * a(1, 2) - a(0, 1) * a(1, 2);
            if (coeff != rel * Poly(2) && coeff != rel * Poly(-2)) {
                ok = false;
                detail = "coefficient of " + necklace_to_string(neck) + " is " +
                         coeff.to_string();
            }
        }
        const long expected = 2 * long(n) * (n - 1) * (n - 2) / 6;
        if (terms != expected) {
            ok = false;
            detail = "n=" + std::to_string(n) + ": " + std::to_string(terms) +
                     " obstruction terms, expected " + std::to_string(expected);
        }
    }
    // Satisfying instance: c12 = 1, c23 = 1, c13 = 1/2.
    SemiSimpleAlgebra S3({1, 1, 1});
    if (!check_tensor(S3, pairwise_tensor(S3, parse_coefficients("1,2:1 2,3:1 1,3:1/2")))
             .poisson) {
        ok = false;
        detail = "instance (1,1,1/2) rejected";
    }
    report(6, "symbolic self-bracket over C^n reduces to the triple relations (n=3,4,5)",
           ok, detail);
}

// ---------------------------------------------------------------------------
// 7. Moment maps for n <= 4.
void criterion7() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 4; ++n) {
        SemiSimpleAlgebra S(std::vector<int>(size_t(n), 1));
        // c_ij = 1/(l_i - l_j) solves every triple relation; all entries nonzero.
        const std::vector<Rational> l = {Rational(0), Rational(1), Rational(3),
                                         Rational(7)};
        std::map<std::pair<int, int>, Poly> c;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                c[{i, j}] = Poly(Rational(1) / (l[size_t(i - 1)] - l[size_t(j - 1)]));
        const DoubleTensor P = pairwise_tensor(S, c);
        const MomentMapResult r = moment_map(S, P);
        if (r.status != MomentMapResult::Status::Ok || !verify_moment_map(S, P, r.mu)) {
            ok = false;
            detail = "n=" + std::to_string(n) + " generic instance failed";
        }
        // mu_i = -1/c_{1i} = l_i - l_1.
        if (ok)
            for (int i = 2; i <= n; ++i)
                if (r.mu.at(i) != l[size_t(i - 1)] - l[0]) {
                    ok = false;
                    detail = "mu value mismatch at vertex " + std::to_string(i);
                }
        // Dropping a pair removes the moment map.
        if (n >= 3) {
            auto c2 = c;
            c2.erase({1, n});
            if (moment_map(S, pairwise_tensor(S, c2)).status !=
                MomentMapResult::Status::NoMomentMap) {
                ok = false;
                detail = "zero coefficient not reported as NoMomentMap, n=" +
                         std::to_string(n);
            }
        }
    }
    report(7, "moment maps exist, verify exactly, and vanish with any zero coefficient",
           ok, detail);
}

// ---------------------------------------------------------------------------
// 8. Cohomology.
void criterion8() {
    bool ok = true;
    std::string detail;
    // H^1 closed form on four shapes, all admissible colour choices between
    // the first two vertices; H^0 always 0 in the reduced complex.
    for (const auto& dims : {std::vector<int>{2, 2}, {2, 3}, {1, 2}, {2, 2, 1}}) {
        SemiSimpleAlgebra S(dims);
        for (const auto& [a, b] : enumerate_poisson_monomials(S)) {
            if (a.is_loop() || !((a.tail == 0 && a.head == 1) || (a.tail == 1 && a.head == 0)))
                continue;
            DoubleTensor P;
            P.terms.emplace_back(a, b, Poly(1));
            const Complex C = build_complex(S, P, 1);
            if (!d_squared_zero(C)) {
                ok = false;
                detail = "d^2 != 0 for " + arrow_to_string(a) + "*" + arrow_to_string(b);
            }
            if (betti(C, 0) != 0) {
                ok = false;
                detail = "H^0 != 0 for " + arrow_to_string(a);
            }
            if (betti(C, 1) != h1_closed_form(S, 0, 1)) {
                ok = false;
                detail = "H^1 mismatch for " + arrow_to_string(a) + "*" +
                         arrow_to_string(b) + ": got " + std::to_string(betti(C, 1)) +
                         " expected " + std::to_string(h1_closed_form(S, 0, 1));
            }
            // The generator list may be linearly dependent (the two "sum"
            // cocycles overlap); require every generator to be a cocycle and
            // the span to have full rank dim H^1.
            const auto gens = h1_generators(S, P);
            GradedElement Pg = tensor_to_graded(S, P);
            for (const auto& g : gens)
                if (!necklace_bracket(S, Pg, g).is_zero()) {
                    ok = false;
                    detail = "non-cocycle generator for " + arrow_to_string(a);
                }
            const auto basis = necklace_basis(S, 1);
            std::map<Necklace, int> index;
            for (int bi = 0; bi < int(basis.size()); ++bi)
                index[basis[size_t(bi)]] = bi;
            std::vector<std::map<int, Rational>> rows;
            for (const auto& g : gens) {
                std::map<int, Rational> row;
                for (const auto& [nk, cf] : g.terms())
                    row[index.at(nk)] = cf.constant_value();
                rows.push_back(std::move(row));
            }
            if (sparse_rank(std::move(rows)) != betti(C, 1)) {
                ok = false;
                detail = "generator span rank mismatch for " + arrow_to_string(a);
            }
        }
    }
    // C + C pattern up to degree 4.
    {
        SemiSimpleAlgebra S({1, 1});
        DoubleTensor P;
        P.terms.emplace_back(Arrow{1, 0, 1, 1}, Arrow{0, 1, 1, 1}, Poly(1));
        const Complex C = build_complex(S, P, 4);
        const int expected[5] = {0, 0, 1, 0, 1};
        for (int i = 0; i <= 4; ++i)
            if (betti(C, i) != expected[i]) {
                ok = false;
                detail = "C+C Betti at degree " + std::to_string(i) + " is " +
                         std::to_string(betti(C, i));
            }
        if (!d_squared_zero(C)) {
            ok = false;
            detail = "C+C d^2 != 0";
        }
    }
    report(8, "cohomology: H^0 = 0, H^1 closed form, C+C Betti pattern, d^2 = 0", ok,
           detail);
}

// ---------------------------------------------------------------------------
// 9. Free product brackets.
std::optional<TraceWord> to_trace_word(Word w) {
    if (w.empty() || w.size() % 2 != 0) return std::nullopt;
    for (size_t r = 0; r < w.size(); ++r) {
        bool alternating = true;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i].in_t != (i % 2 == 1)) alternating = false;
        if (alternating) {
            TraceWord t;
            for (size_t i = 0; i < w.size(); i += 2) {
                t.s.push_back(w[i].idx);
                t.t.push_back(w[i + 1].idx);
            }
            return t;
        }
        std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    return std::nullopt;
}

Rational bracket_eval(int p, int q, const TraceWord& x, const TraceWord& y,
                      const PairCoeffs& c, const PairCoeffs& d, const Representation& R) {
    return evaluate_sum(induced_trace_bracket(p, q, x, y, c, d), R);
}

void criterion9() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(77);
    auto random_word = [&](int p, int q, int len) {
        TraceWord w;
        for (int i = 0; i < len; ++i) {
            w.s.push_back(1 + int(rng() % unsigned(p)));
            w.t.push_back(1 + int(rng() % unsigned(q)));
        }
        return w;
    };
    auto coeffs_for = [&](int m, long scale) {
        PairCoeffs c;
        const std::vector<Rational> l = {Rational(0), Rational(1), Rational(3)};
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                c[{i, j}] = Poly(Rational(scale) / (l[size_t(i - 1)] - l[size_t(j - 1)]));
        return c;
    };

    int samples = 0;
    for (int p = 2; p <= 3 && ok; ++p)
        for (int q = 2; q <= 3 && ok; ++q) {
            const PairCoeffs c = coeffs_for(p, 1), d = coeffs_for(q, 2);
            for (int trial = 0; trial < 9 && ok; ++trial) {
                const TraceWord x = random_word(p, q, 1 + int(rng() % 3));
                const TraceWord y = random_word(p, q, 1 + int(rng() % 3));
                const WordTensor closed = amalgamated_double_bracket(p, q, x, y, c, d);
                if (!(closed == leibniz_double_bracket(p, q, x, y, c, d))) {
                    ok = false;
                    detail = "closed formula vs Leibniz derivation";
                    break;
                }
                for (int n = std::max(p, q); n <= 4; ++n) {
                    ++samples;
                    std::vector<int> eb(size_t(p), 1), fb(size_t(q), 1);
                    eb[0] = n - p + 1;
                    fb[0] = n - q + 1;
                    const Representation R = random_representation(
                        n, eb, fb, 1000UL * unsigned(trial) + unsigned(10 * p + q));
                    const Rational lhs = bracket_eval(p, q, x, y, c, d, R);
                    const Rational rhs = evaluate_pairing(closed, R);
                    if (lhs != rhs) {
                        ok = false;
                        detail = "trace route vs pairing route";
                        break;
                    }
                    if (lhs != -bracket_eval(p, q, y, x, c, d, R)) {
                        ok = false;
                        detail = "evaluated antisymmetry";
                        break;
                    }
                    if (p == 2 && lhs != Rational(0)) {
                        ok = false;
                        detail = "p = 2 bracket does not vanish";
                        break;
                    }
                }
            }
            // Evaluated Jacobi identity on a handful of triples.
            for (int trial = 0; trial < 3 && ok; ++trial) {
                const TraceWord x = random_word(p, q, 1 + int(rng() % 2));
                const TraceWord y = random_word(p, q, 1 + int(rng() % 2));
                const TraceWord z = random_word(p, q, 1 + int(rng() % 2));
                const int n = 4;
                std::vector<int> eb(size_t(p), 1), fb(size_t(q), 1);
                eb[0] = n - p + 1;
                fb[0] = n - q + 1;
                const Representation R = random_representation(n, eb, fb, 555);
                auto nested = [&](const TraceWord& a, const TraceWord& b,
                                  const TraceWord& e) -> std::optional<Rational> {
                    Rational acc = 0;
                    const TraceSum inner = induced_trace_bracket(p, q, b, e, c, d);
                    for (const auto& [w, coeff] : inner.terms()) {
                        const auto tw = to_trace_word(w);
                        if (!tw) return std::nullopt;
                        acc += coeff.constant_value() *
                               bracket_eval(p, q, a, *tw, c, d, R);
                    }
                    return acc;
                };
                const auto j1 = nested(x, y, z), j2 = nested(y, z, x), j3 = nested(z, x, y);
                if (!j1 || !j2 || !j3) {
                    ok = false;
                    detail = "bracket term is not an alternating trace word";
                } else if (*j1 + *j2 + *j3 != Rational(0)) {
                    ok = false;
                    detail = "evaluated Jacobi identity";
                }
            }
        }
    report(9,
           "free product: two-route consistency on " + std::to_string(samples) +
               " samples, p=2 vanishing, antisymmetry, Jacobi",
           ok, detail);
}

// ---------------------------------------------------------------------------
// 10. CLI determinism.
std::pair<int, std::string> run_cmd(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, ""};
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {status == -1 ? -1 : WEXITSTATUS(status), out};
}

void criterion10(const std::string& cli) {
    if (cli.empty()) {
        report(10, "CLI determinism (skipped: no binary path given)", false);
        return;
    }
    const std::vector<std::string> commands = {
        "quiver --dims 1,1,1 --json",
        "quiver --dims 2,3",
        "relative-quiver --dims 1,1,1,1 --sub-dims 1,1 --mult '1,0;1,0;0,1;0,1' --json",
        "bracket --dims 1,1 --a 1,2,1,1 --b 2,1,1,1",
        "necklace-bracket --dims 1,1,1 --a '1,2,1,1;2,1,1,1' --b '1,3,1,1;3,1,1,1' --json",
        "check-tensor --dims 1,1,1 --symbolic --json",
        "enumerate-tensors --dims 1,2",
        "moment-map --dims 1,1 --c 1,2:5",
        "cohomology --dims 1,1 --c 1,2:1 --max-degree 4 --json",
        "free-product-bracket --p 2 --q 2 --x 1,1 --y 2,2 --c 1,2:1 --d 1,2:1 --eval 3,7 --json",
        "verify",
    };
    bool ok = true;
    std::string detail;
    for (const std::string& args : commands) {
        const auto first = run_cmd(cli + " " + args);
        const auto second = run_cmd(cli + " " + args);
        if (first.first != 0) {
            ok = false;
            detail = args + " exited with " + std::to_string(first.first);
        } else if (first.second != second.second) {
            ok = false;
            detail = args + " is not byte-deterministic";
        }
    }
    // Known outputs from the interface contract.
    const auto quiver = run_cmd(cli + " quiver --dims 1,1,1");
    if (quiver.second.find("arrows: 6") == std::string::npos) {
        ok = false;
        detail = "quiver --dims 1,1,1 does not report 6 arrows";
    }
    const auto moment = run_cmd(cli + " moment-map --dims 1,1 --c 1,2:5");
    if (moment.second.find("-1/5") == std::string::npos) {
        ok = false;
        detail = "moment-map --dims 1,1 --c 1,2:5 does not report -1/5";
    }
    const auto usage = run_cmd(cli + " no-such-command");
    if (usage.first != 2) {
        ok = false;
        detail = "usage error does not exit with 2";
    }
    report(10, "CLI: byte-identical reruns, contract outputs, usage exit code", ok,
           detail);
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10(cli);
    if (g_failures) {
        std::cout << g_failures << " criteria FAILED" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
