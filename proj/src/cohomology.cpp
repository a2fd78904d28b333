#include "ddq/cohomology.hpp"

#include <set>
#include <stdexcept>

namespace ddq {

namespace {

void closed_words(const std::vector<Arrow>& arrows, std::vector<Arrow>& word,
                  int length, std::set<Necklace>& out) {
    if (int(word.size()) == length) {
        if (word.back().head == word.front().tail) {
            auto [n, sign] = canonicalize(word);
            if (sign != 0) out.insert(n);
        }
        return;
    }
    for (const Arrow& a : arrows) {
        if (!word.empty() && a.tail != word.back().head) continue;
        word.push_back(a);
        closed_words(arrows, word, length, out);
        word.pop_back();
    }
}

} // namespace

std::vector<Necklace> necklace_basis(const SemiSimpleAlgebra& S, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Necklace> basis;
    if (degree == 0) {
        for (int i = 0; i < S.components(); ++i) basis.push_back(vertex_necklace(i));
        return basis;
    }
    const Quiver q = build_quiver(S);
    std::set<Necklace> out;
    std::vector<Arrow> word;
    closed_words(q.arrows, word, degree, out);
    basis.assign(out.begin(), out.end());
    return basis;
}

Complex build_complex(const SemiSimpleAlgebra& S, const DoubleTensor& P,
                      int max_degree) {
    for (const auto& [a, b, c] : P.terms)
        if (!c.is_constant())
            throw std::invalid_argument("complex needs numeric coefficients");
    if (!check_tensor(S, P).poisson)
        throw std::invalid_argument("tensor is not Poisson: d*d would not vanish");
    Complex C{S, P, max_degree, {}, {}};
    C.bases.resize(size_t(max_degree) + 2);
    // Degree 0 stays empty: the vertex symbols are a central split summand.
    for (int d = 1; d <= max_degree + 1; ++d) C.bases[size_t(d)] = necklace_basis(S, d);

    const GradedElement Pg = tensor_to_graded(S, P);
    std::vector<std::map<Necklace, int>> index(C.bases.size());
    for (size_t d = 0; d < C.bases.size(); ++d)
        for (size_t i = 0; i < C.bases[d].size(); ++i) index[d][C.bases[d][i]] = int(i);

    for (int d = 0; d <= max_degree; ++d) {
        ExactMatrix M(int(C.bases[size_t(d) + 1].size()), int(C.bases[size_t(d)].size()));
        for (size_t col = 0; col < C.bases[size_t(d)].size(); ++col) {
            const GradedElement img = necklace_bracket(
                S, Pg, GradedElement::necklace(C.bases[size_t(d)][col]));
            for (const auto& [n, c] : img.terms()) {
                auto it = index[size_t(d) + 1].find(n);
                if (it == index[size_t(d) + 1].end())
                    throw std::logic_error("image necklace missing from basis: " +
                                           necklace_to_string(n));
                M.at(it->second, int(col)) += c;
            }
        }
        C.differentials.push_back(std::move(M));
    }
    if (!d_squared_zero(C)) throw std::logic_error("differential does not square to zero");
    return C;
}

bool d_squared_zero(const Complex& C) {
    for (size_t d = 0; d + 1 < C.differentials.size(); ++d) {
        const ExactMatrix& A = C.differentials[d + 1];
        const ExactMatrix& B = C.differentials[d];
        for (int r = 0; r < A.rows(); ++r)
            for (int c = 0; c < B.cols(); ++c) {
                Poly sum;
                for (int k = 0; k < A.cols(); ++k) sum += A.at(r, k) * B.at(k, c);
                if (!sum.is_zero()) return false;
            }
    }
    return true;
}

int betti(const Complex& C, int i) {
    if (i < 0 || i > C.max_degree) throw std::invalid_argument("degree out of range");
    const ExactMatrix& out = C.differentials[size_t(i)];
    const int dim_i = int(C.bases[size_t(i)].size());
    const int rank_out = out.rank_and_kernel().rank;
    int rank_in = 0;
    if (i > 0) rank_in = C.differentials[size_t(i) - 1].rank_and_kernel().rank;
    return dim_i - rank_out - rank_in;
}

int betti(const SemiSimpleAlgebra& S, const DoubleTensor& P, int i) {
    return betti(build_complex(S, P, i), i);
}

long h1_closed_form(const SemiSimpleAlgebra& S, int i, int j) {
    // Restricted loops at i and j, all loops elsewhere, plus one independent
    // "sum" cocycle (the two sum cocycles span a single extra dimension
    // modulo the restricted loops and the x_{11} relation).
    long total = 1;
    for (int k = 0; k < S.components(); ++k) {
        const long n = S.dims[size_t(k)];
        if (k == i || k == j)
            total += (n - 1) * (n - 1);
        else
            total += n * n - 1;
    }
    return total;
}

namespace {

// Loop with bi-colour (u,v); (1,1) is the shorthand -sum_{t>=2} x_{tt}.
GradedElement loop_elem(const SemiSimpleAlgebra& S, int vertex, int u, int v) {
    GradedElement g;
    if (u == 1 && v == 1) {
        for (int t = 2; t <= S.dims[size_t(vertex)]; ++t)
            g.add_word({Arrow{vertex, vertex, t, t}}, Poly(-1));
        return g;
    }
    g.add_word({Arrow{vertex, vertex, u, v}}, Poly(1));
    return g;
}

} // namespace

std::vector<GradedElement> h1_generators(const SemiSimpleAlgebra& S,
                                         const DoubleTensor& P) {
    if (P.terms.size() != 1)
        throw std::invalid_argument("unsupported tensor shape: need one 2-cycle monomial");
    const auto& [A, B, coeff] = P.terms.front();
    check_cycle(S, A, B);
    std::vector<GradedElement> gens;
    auto all_loops_at = [&](int k) {
        for (int u = 1; u <= S.dims[size_t(k)]; ++u)
            for (int v = 1; v <= S.dims[size_t(k)]; ++v)
                if (u != 1 || v != 1)
                    gens.push_back(loop_elem(S, k, u, v));
    };
    if (!A.is_loop()) {
        // A runs i -> j, B runs j -> i.  Colours living at vertex i are
        // A.secondary (q) and B.primary (r); colours at j are A.primary (p)
        // and B.secondary (s).
        const int i = A.tail, j = A.head;
        const int p = A.primary, q = A.secondary;
        const int r = B.primary, s = B.secondary;
        if (q == r || p == s)
            throw std::invalid_argument("unsupported tensor shape: need q != r, p != s");
        for (int k = 0; k < S.components(); ++k)
            if (k != i && k != j) all_loops_at(k);
        for (int u = 1; u <= S.dims[size_t(i)]; ++u)
            for (int v = 1; v <= S.dims[size_t(i)]; ++v)
                if (u != q && v != r) gens.push_back(loop_elem(S, i, u, v));
        for (int u = 1; u <= S.dims[size_t(j)]; ++u)
            for (int v = 1; v <= S.dims[size_t(j)]; ++v)
                if (u != s && v != p) gens.push_back(loop_elem(S, j, u, v));
        // The two sum cocycles; modulo the restricted loops they span one
        // extra class.
        gens.push_back(loop_elem(S, i, r, r) + loop_elem(S, j, s, s));
        gens.push_back(loop_elem(S, i, q, q) + loop_elem(S, j, p, p));
    } else {
        const int i = A.head;
        const int p = A.primary, q = A.secondary;
        const int r = B.primary, s = B.secondary;
        if (p == q || p == s || r == s || r == q)
            throw std::invalid_argument(
                "unsupported tensor shape: need (p-q)(p-s)(r-s)(r-q) != 0");
        for (int k = 0; k < S.components(); ++k)
            if (k != i) all_loops_at(k);
        for (int u = 1; u <= S.dims[size_t(i)]; ++u)
            for (int v = 1; v <= S.dims[size_t(i)]; ++v)
                if (u != s && u != q && v != p && v != r)
                    gens.push_back(loop_elem(S, i, u, v));
    }
    std::vector<GradedElement> out;
    for (GradedElement& g : gens)
        if (!g.is_zero()) out.push_back(std::move(g));
    return out;
}

} // namespace ddq
