#include "ddq/freeproduct.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ddq {

Word interleave(const TraceWord& w) {
    Word out;
    for (size_t i = 0; i < w.s.size(); ++i) {
        out.push_back({false, w.s[i]});
        out.push_back({true, w.t[i]});
    }
    return out;
}

void validate_trace_word(int ns, int nt, const TraceWord& w) {
    if (w.s.empty() || w.s.size() != w.t.size())
        throw std::invalid_argument("malformed trace word");
    for (int i : w.s)
        if (i < 1 || i > ns) throw std::invalid_argument("e-index out of range");
    for (int i : w.t)
        if (i < 1 || i > nt) throw std::invalid_argument("f-index out of range");
}

Poly coeff_bar(const PairCoeffs& c, int i, int j) {
    Poly r;
    if (auto it = c.find({i, j}); it != c.end()) r += it->second;
    if (auto it = c.find({j, i}); it != c.end()) r -= it->second;
    return r;
}

namespace {

// e_a e_b = delta_ab e_a inside one factor; returns false if the word dies.
bool reduce_linear(Word& w) {
    for (size_t i = 0; i + 1 < w.size();) {
        if (w[i].in_t == w[i + 1].in_t) {
            if (w[i].idx != w[i + 1].idx) return false;
            w.erase(w.begin() + long(i) + 1);
            if (i > 0) --i;
        } else {
            ++i;
        }
    }
    return true;
}

bool reduce_cyclic(Word& w) {
    if (!reduce_linear(w)) return false;
    while (w.size() >= 2 && w.front().in_t == w.back().in_t) {
        if (w.front().idx != w.back().idx) return false;
        w.pop_back();
        if (!reduce_linear(w)) return false;
    }
    return true;
}

Word min_rotation(Word w) {
    if (w.empty()) return w;
    Word best = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Word slice(const Word& w, int from, int to) {
    return Word(w.begin() + from, w.begin() + to);
}

Word rot(Word w, int k) {
    if (!w.empty())
        std::rotate(w.begin(), w.begin() + (k % int(w.size())), w.end());
    return w;
}

} // namespace

void WordTensor::add(Word left, Word right, const Poly& coeff) {
    if (coeff.is_zero()) return;
    if (!reduce_linear(left) || !reduce_linear(right)) return;
    auto [it, inserted] = terms_.emplace(std::pair{std::move(left), std::move(right)}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TraceSum::add(const Word& w, const Poly& coeff) {
    if (coeff.is_zero()) return;
    Word red = w;
    if (!reduce_cyclic(red)) return;
    Word key = min_rotation(std::move(red));
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordTensor amalgamated_double_bracket(int ns, int nt, const TraceWord& x,
                                      const TraceWord& y, const PairCoeffs& c,
                                      const PairCoeffs& d) {
    validate_trace_word(ns, nt, x);
    validate_trace_word(ns, nt, y);
    const Word X = interleave(x), Y = interleave(y);
    const int p = int(x.s.size()), q = int(y.s.size());
    WordTensor out;
    for (int l = 1; l <= p; ++l) {
        for (int k = 1; k <= q; ++k) {
            // f-letter families, matching f_{i_l'} against f_{j_k'}.
            auto emit_f = [&](int s, const Poly& g) {
                const Word fs{Letter{true, s}};
                out.add(concat(slice(Y, 0, 2 * k - 1), slice(X, 2 * l - 1, 2 * p)),
                        concat(concat(slice(X, 0, 2 * l - 1), fs), slice(Y, 2 * k, 2 * q)),
                        g);
                out.add(concat(concat(slice(Y, 0, 2 * k - 1), fs), slice(X, 2 * l, 2 * p)),
                        concat(slice(X, 0, 2 * l), slice(Y, 2 * k, 2 * q)), -g);
            };
            const int ilp = x.t[size_t(l) - 1], jkp = y.t[size_t(k) - 1];
            if (jkp != ilp)
                emit_f(jkp, coeff_bar(d, ilp, jkp));
            else
                for (int s = 1; s <= nt; ++s)
                    if (s != jkp) emit_f(s, -coeff_bar(d, jkp, s));
            // e-letter families, matching e_{i_l} against e_{j_k}.
            auto emit_e = [&](int s, const Poly& g) {
                const Word es{Letter{false, s}};
                out.add(concat(slice(Y, 0, 2 * k - 2), slice(X, 2 * l - 2, 2 * p)),
                        concat(concat(slice(X, 0, 2 * l - 2), es),
                               slice(Y, 2 * k - 1, 2 * q)),
                        g);
                out.add(concat(concat(slice(Y, 0, 2 * k - 2), es),
                               slice(X, 2 * l - 1, 2 * p)),
                        concat(slice(X, 0, 2 * l - 1), slice(Y, 2 * k - 1, 2 * q)), -g);
            };
            const int il = x.s[size_t(l) - 1], jk = y.s[size_t(k) - 1];
            if (jk != il)
                emit_e(jk, coeff_bar(c, il, jk));
            else
                for (int s = 1; s <= ns; ++s)
                    if (s != jk) emit_e(s, -coeff_bar(c, jk, s));
        }
    }
    return out;
}

WordTensor leibniz_double_bracket(int ns, int nt, const TraceWord& x,
                                  const TraceWord& y, const PairCoeffs& c,
                                  const PairCoeffs& d) {
    validate_trace_word(ns, nt, x);
    validate_trace_word(ns, nt, y);
    const Word X = interleave(x), Y = interleave(y);
    WordTensor out;
    for (size_t tpos = 0; tpos < X.size(); ++tpos) {
        for (size_t rpos = 0; rpos < Y.size(); ++rpos) {
            if (X[tpos].in_t != Y[rpos].in_t) continue;
            const bool in_t = X[tpos].in_t;
            const PairCoeffs& cc = in_t ? d : c;
            const int nn = in_t ? nt : ns;
            const int a = X[tpos].idx, b = Y[rpos].idx;
            // Generator bracket <<g_a, g_b>> as (first, second, coeff) triples.
            std::vector<std::tuple<int, int, Poly>> gens;
            if (a != b) {
                const Poly g = coeff_bar(cc, a, b);
                gens.emplace_back(a, b, g);
                gens.emplace_back(b, a, -g);
            } else {
                for (int s = 1; s <= nn; ++s) {
                    if (s == a) continue;
                    const Poly g = coeff_bar(cc, a, s);
                    gens.emplace_back(a, s, -g);
                    gens.emplace_back(s, a, g);
                }
            }
            for (const auto& [A, B, g] : gens) {
                Word left = concat(slice(Y, 0, int(rpos)), {Letter{in_t, A}});
                left = concat(std::move(left), slice(X, int(tpos) + 1, int(X.size())));
                Word right = concat(slice(X, 0, int(tpos)), {Letter{in_t, B}});
                right = concat(std::move(right), slice(Y, int(rpos) + 1, int(Y.size())));
                out.add(std::move(left), std::move(right), g);
            }
        }
    }
    return out;
}

TraceSum induced_trace_bracket(int ns, int nt, const TraceWord& x, const TraceWord& y,
                               const PairCoeffs& c, const PairCoeffs& d) {
    validate_trace_word(ns, nt, x);
    validate_trace_word(ns, nt, y);
    const Word X = interleave(x), Y = interleave(y);
    const int p = int(x.s.size()), q = int(y.s.size());
    TraceSum out;
    for (int l = 1; l <= p; ++l) {
        for (int k = 1; k <= q; ++k) {
            const int ilp = x.t[size_t(l) - 1], jkp = y.t[size_t(k) - 1];
            const int il = x.s[size_t(l) - 1], jk = y.s[size_t(k) - 1];
            if (jkp != ilp) {
                const Poly g = coeff_bar(d, ilp, jkp);
                out.add(concat(rot(X, 2 * l - 1), rot(Y, 2 * k - 1)), g);
                out.add(concat(rot(X, 2 * l), rot(Y, 2 * k)), -g);
            } else {
                for (int s = 1; s <= nt; ++s) {
                    if (s == jkp) continue;
                    const Poly g = -coeff_bar(d, jkp, s);
                    Word Ys = Y;
                    Ys[size_t(2 * k - 1)].idx = s;
                    out.add(concat(rot(X, 2 * l - 1), rot(Ys, 2 * k - 1)), g);
                    out.add(concat(rot(X, 2 * l), rot(Ys, 2 * k)), -g);
                }
            }
            if (jk != il) {
                const Poly g = coeff_bar(c, il, jk);
                out.add(concat(rot(X, 2 * l - 2), rot(Y, 2 * k - 2)), g);
                out.add(concat(rot(X, 2 * l - 1), rot(Y, 2 * k - 1)), -g);
            } else {
                for (int s = 1; s <= ns; ++s) {
                    if (s == jk) continue;
                    const Poly g = -coeff_bar(c, jk, s);
                    Word Ys = Y;
                    Ys[size_t(2 * k - 2)].idx = s;
                    out.add(concat(rot(X, 2 * l - 2), rot(Ys, 2 * k - 2)), g);
                    out.add(concat(rot(X, 2 * l - 1), rot(Ys, 2 * k - 1)), -g);
                }
            }
        }
    }
    return out;
}

namespace {

QMatrix zeros(int n) { return QMatrix(size_t(n), std::vector<Rational>(size_t(n))); }

QMatrix identity(int n) {
    QMatrix m = zeros(n);
    for (int i = 0; i < n; ++i) m[size_t(i)][size_t(i)] = 1;
    return m;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
    const int n = int(a.size());
    QMatrix out = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[size_t(i)][size_t(k)] == 0) continue;
            for (int j = 0; j < n; ++j)
                out[size_t(i)][size_t(j)] += a[size_t(i)][size_t(k)] * b[size_t(k)][size_t(j)];
        }
    return out;
}

Rational trace(const QMatrix& a) {
    Rational t = 0;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// Gauss-Jordan inverse; empty result if singular.
QMatrix inverse(QMatrix a) {
    const int n = int(a.size());
    QMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[size_t(r)][size_t(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return {};
        std::swap(a[size_t(piv)], a[size_t(col)]);
        std::swap(inv[size_t(piv)], inv[size_t(col)]);
        const Rational scale = a[size_t(col)][size_t(col)];
        for (int j = 0; j < n; ++j) {
            a[size_t(col)][size_t(j)] /= scale;
            inv[size_t(col)][size_t(j)] /= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[size_t(r)][size_t(col)] == 0) continue;
            const Rational f = a[size_t(r)][size_t(col)];
            for (int j = 0; j < n; ++j) {
                a[size_t(r)][size_t(j)] -= f * a[size_t(col)][size_t(j)];
                inv[size_t(r)][size_t(j)] -= f * inv[size_t(col)][size_t(j)];
            }
        }
    }
    return inv;
}

std::vector<QMatrix> block_projectors(int n, const std::vector<int>& blocks) {
    std::vector<QMatrix> out;
    int off = 0;
    for (int b : blocks) {
        QMatrix m = zeros(n);
        for (int i = 0; i < b; ++i) m[size_t(off + i)][size_t(off + i)] = 1;
        out.push_back(std::move(m));
        off += b;
    }
    return out;
}

} // namespace

Representation random_representation(int n, const std::vector<int>& e_blocks,
                                     const std::vector<int>& f_blocks,
                                     unsigned long seed) {
    auto check_blocks = [n](const std::vector<int>& blocks) {
        int sum = 0;
        for (int b : blocks) {
            if (b < 0) throw std::invalid_argument("negative block size");
            sum += b;
        }
        if (sum != n) throw std::invalid_argument("block sizes must sum to n");
    };
    check_blocks(e_blocks);
    check_blocks(f_blocks);
    Representation R;
    R.n = n;
    R.e = block_projectors(n, e_blocks);
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<int> dist(-3, 3);
    QMatrix g, ginv;
    do {
        g = zeros(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g[size_t(i)][size_t(j)] = dist(rng);
        ginv = inverse(g);
    } while (ginv.empty());
    for (const QMatrix& pf : block_projectors(n, f_blocks))
        R.f.push_back(mul(mul(g, pf), ginv));
    return R;
}

namespace {

QMatrix word_matrix(const Word& w, const Representation& R) {
    QMatrix m = identity(R.n);
    for (const Letter& l : w) {
        const auto& mats = l.in_t ? R.f : R.e;
        if (l.idx < 1 || l.idx > int(mats.size()))
            throw std::out_of_range("letter index outside the representation");
        m = mul(m, mats[size_t(l.idx) - 1]);
    }
    return m;
}

} // namespace

Rational evaluate_word(const Word& w, const Representation& R) {
    return trace(word_matrix(w, R));
}

Rational evaluate_sum(const TraceSum& s, const Representation& R) {
    Rational out = 0;
    for (const auto& [w, c] : s.terms()) out += c.constant_value() * evaluate_word(w, R);
    return out;
}

Rational evaluate_pairing(const WordTensor& t, const Representation& R) {
    Rational out = 0;
    for (const auto& [lr, c] : t.terms())
        out += c.constant_value() *
               trace(mul(word_matrix(lr.first, R), word_matrix(lr.second, R)));
    return out;
}

} // namespace ddq
