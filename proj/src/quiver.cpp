#include "ddq/quiver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace ddq {

std::string arrow_to_string(const Arrow& a) {
    std::ostringstream out;
    out << (a.is_loop() ? "x" : "y") << "[" << a.tail + 1 << "->" << a.head + 1 << "]("
        << a.primary << "," << a.secondary << ")";
    return out.str();
}

int Quiver::loop_count(int vertex) const {
    int n = 0;
    for (const Arrow& a : arrows)
        if (a.is_loop() && a.head == vertex) ++n;
    return n;
}

int Quiver::arrow_count(int tail, int head) const {
    int n = 0;
    for (const Arrow& a : arrows)
        if (a.tail == tail && a.head == head && !a.is_loop()) ++n;
    return n;
}

Quiver build_quiver(const SemiSimpleAlgebra& S) {
    Quiver q;
    q.vertex_labels = S.dims;
    for (int i = 0; i < S.components(); ++i) {
        for (int j = 0; j < S.components(); ++j) {
            for (int p = 1; p <= S.dims[i]; ++p) {
                for (int s = 1; s <= S.dims[j]; ++s) {
                    if (i == j && p == 1 && s == 1) continue; // x_{11} is spent on the relation
                    q.arrows.push_back({i, j, p, s});
                }
            }
        }
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

Quiver build_relative_quiver(const BratteliDiagram& B) {
    Quiver q;
    q.vertex_labels = B.S.dims;
    int k = B.S.components();
    // Flattened copy index of (block u, copy h) at vertex i.
    auto flat = [&](int i, int u, int h) {
        int off = 0;
        for (int v = 0; v < u; ++v) off += B.mult[i][v];
        return off + h; // 1-based when h is 1-based
    };
    for (int i = 0; i < k; ++i) {
        bool skipped_identity = false;
        for (int u = 0; u < B.T.components(); ++u) {
            for (int h = 1; h <= B.mult[i][u]; ++h) {
                for (int h2 = 1; h2 <= B.mult[i][u]; ++h2) {
                    if (!skipped_identity && h == 1 && h2 == 1) {
                        skipped_identity = true; // one loop is spent on the relation
                        continue;
                    }
                    q.arrows.push_back({i, i, flat(i, u, h), flat(i, u, h2)});
                }
            }
        }
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            for (int u = 0; u < B.T.components(); ++u)
                for (int h = 1; h <= B.mult[i][u]; ++h)
                    for (int h2 = 1; h2 <= B.mult[j][u]; ++h2)
                        q.arrows.push_back({i, j, flat(i, u, h), flat(j, u, h2)});
        }
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

std::string quiver_to_json(const Quiver& q) {
    nlohmann::ordered_json j;
    j["vertices"] = q.vertex_labels;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const Arrow& a : q.arrows) {
        j["arrows"].push_back({{"tail", a.tail + 1},
                               {"head", a.head + 1},
                               {"primary", a.primary},
                               {"secondary", a.secondary}});
    }
    return j.dump();
}

Quiver quiver_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Quiver q;
    q.vertex_labels = j.at("vertices").get<std::vector<int>>();
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("head").get<int>() - 1, a.at("tail").get<int>() - 1,
                            a.at("primary").get<int>(), a.at("secondary").get<int>()});
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

} // namespace ddq
