#include "kmh/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <string>

namespace kmh {

namespace {

std::string pos(int i, int j) {  // 1-based position for diagnostics
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

} // namespace

CartanMatrix CartanMatrix::validate(std::vector<std::vector<Integer>> raw) {
    const int n = static_cast<int>(raw.size());
    if (n < 1) throw std::invalid_argument("matrix must have at least one row");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(raw[i].size()) != n)
            throw std::invalid_argument("matrix must be square; row " + std::to_string(i + 1) +
                                        " has " + std::to_string(raw[i].size()) + " entries, expected " +
                                        std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (raw[i][i] != 2)
            throw std::invalid_argument("diagonal entry must be 2 at " + pos(i, i));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (raw[i][j] > 0)
                throw std::invalid_argument("positive off-diagonal at " + pos(i, j));
            if (raw[i][j] == 0 && raw[j][i] != 0)
                throw std::invalid_argument("zero-pairing violated at " + pos(i, j));
        }
    }
    return CartanMatrix(std::move(raw));
}

bool is_generic(const CartanMatrix& a) {
    const int n = a.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.at(i, j) * a.at(j, i) < 4) return false;
    return true;
}

bool is_indecomposable(const CartanMatrix& a) {
    const int n = a.rank();
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w = 0; w < n; ++w) {
            if (!seen[w] && a.at(u, w) != 0) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

namespace {

// Rotate/reflect a cycle so the least vertex comes first and its smaller
// neighbour second; makes witness cycles deterministic and comparable.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
    const auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
    if (cyc.back() < cyc[1]) {
        std::reverse(cyc.begin() + 1, cyc.end());
    }
    return cyc;
}

NonSymmetrizableWitness make_witness(const CartanMatrix& a, std::vector<int> cycle0) {
    NonSymmetrizableWitness w;
    const std::vector<int> cyc = canonical_cycle(std::move(cycle0));
    const int len = static_cast<int>(cyc.size());
    Integer fwd(1), rev(1);
    for (int t = 0; t < len; ++t) {
        const int u = cyc[t];
        const int v = cyc[(t + 1) % len];
        fwd *= a.at(u, v);
        rev *= a.at(v, u);
    }
    w.forward_product = fwd;
    w.reverse_product = rev;
    w.cycle.reserve(len);
    for (int v : cyc) w.cycle.push_back(v + 1);
    return w;
}

} // namespace

SymmetrizeResult symmetrize(const CartanMatrix& a) {
    const int n = a.rank();
    std::vector<Rational> d(n, Rational(0));
    std::vector<int> parent(n, -1), depth(n, 0);
    std::vector<bool> seen(n, false);

    // Breadth-first spanning forest; d is normalized to 1 at each component's
    // least vertex. Along a tree edge u-w: d_w = d_u * a(w,u) / a(u,w), the
    // unique choice making d_u*b_uw == a_uw with b symmetric.
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        d[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (seen[w] || a.at(u, w) == 0) continue;
                seen[w] = true;
                d[w] = d[u] * Rational(a.at(w, u)) / Rational(a.at(u, w));
                parent[w] = u;
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }

    // Every non-forest edge must agree with the propagated symmetrizer;
    // a disagreement closes a failing cycle through the forest.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j) == 0) continue;
            if (Rational(a.at(i, j)) * d[j] == Rational(a.at(j, i)) * d[i]) continue;

            std::vector<int> up_i, up_j;
            int u = i, w = j;
            while (depth[u] > depth[w]) { up_i.push_back(u); u = parent[u]; }
            while (depth[w] > depth[u]) { up_j.push_back(w); w = parent[w]; }
            while (u != w) {
                up_i.push_back(u); u = parent[u];
                up_j.push_back(w); w = parent[w];
            }
            up_i.push_back(u);  // the common ancestor
            std::vector<int> cycle = std::move(up_i);
            cycle.insert(cycle.end(), up_j.rbegin(), up_j.rend());

            SymmetrizeResult res;
            res.witness = make_witness(a, std::move(cycle));
            return res;
        }
    }

    Symmetrization sym;
    sym.d = d;
    sym.b.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sym.b[i][j] = Rational(a.at(i, j)) / d[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            assert(sym.b[i][j] == sym.b[j][i]);

    SymmetrizeResult res;
    res.symmetrization = std::move(sym);
    return res;
}

CartanMatrix principal_submatrix(const CartanMatrix& a, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty())
        throw std::invalid_argument("principal submatrix needs a nonempty index set");
    for (int idx : indices)
        if (idx < 1 || idx > a.rank())
            throw std::invalid_argument("index " + std::to_string(idx) + " outside 1.." +
                                        std::to_string(a.rank()));
    const int m = static_cast<int>(indices.size());
    std::vector<std::vector<Integer>> raw(m, std::vector<Integer>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            raw[r][c] = a.at(indices[r] - 1, indices[c] - 1);
    CartanMatrix sub = CartanMatrix::validate(std::move(raw));
    assert(!is_generic(a) || m < 2 || is_generic(sub));
    return sub;
}

std::optional<IndexTriple> find_nonsymmetrizable_triple(const CartanMatrix& a) {
    const int n = a.rank();
    if (n < 3) throw std::invalid_argument("triple search needs rank >= 3");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Integer fwd = a.at(i, j) * a.at(j, k) * a.at(k, i);
                const Integer rev = a.at(i, k) * a.at(k, j) * a.at(j, i);
                if (fwd != rev) return IndexTriple{i + 1, j + 1, k + 1};
            }
    return std::nullopt;
}

ClassificationReport classify(const CartanMatrix& a) {
    ClassificationReport report;
    report.generic = is_generic(a);
    SymmetrizeResult sym = symmetrize(a);
    report.symmetrizable = sym.ok();
    report.symmetrization = std::move(sym.symmetrization);
    report.witness = std::move(sym.witness);
    report.indecomposable = is_indecomposable(a);
    if (report.generic && a.rank() >= 2)
        report.epsilon = report.symmetrizable ? 1 : 0;
    return report;
}

} // namespace kmh
