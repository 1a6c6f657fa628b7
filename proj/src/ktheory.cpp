#include "topograph/ktheory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace topograph {

Mat mat_identity(std::size_t n) {
    Mat out(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return Mat(a.size(), std::vector<BigInt>());
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat out(n, std::vector<BigInt>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

BigInt determinant(const Mat& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("determinant: matrix not square");
    if (n == 0) return 1;
    Mat a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;  // exact
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IntMatrix build_map(const Graph& g, const std::optional<std::set<VertexId>>& u) {
    require_valid(g);
    auto cls = classify(g);
    std::set<VertexId> cols = u ? *u : cls.regular();
    for (const auto& v : cols)
        if (!g.has_vertex(v) || !cls.is_regular(v))
            throw std::domain_error("build_map: U ⊄ E⁰_rg (" + v + ")");

    IntMatrix out;
    Graph c = canonicalized(g);
    out.row_ids = c.vertices;
    out.col_ids.assign(cols.begin(), cols.end());
    std::map<VertexId, std::size_t> row_of;
    for (std::size_t i = 0; i < out.row_ids.size(); ++i) row_of[out.row_ids[i]] = i;
    out.a.assign(out.row_ids.size(), std::vector<BigInt>(out.col_ids.size()));
    for (std::size_t j = 0; j < out.col_ids.size(); ++j) {
        const VertexId& v = out.col_ids[j];
        out.a[row_of[v]][j] += 1;
        for (const auto& e : c.groups) {
            if (!e.range || *e.range != v) continue;
            // r^{-1}(v) is finite: v is regular, so no ω-group targets it.
            out.a[row_of[e.dom]][j] -= BigInt(static_cast<long long>(e.multiplicity.value()));
        }
    }
    return out;
}

namespace {

struct SnfState {
    Mat d, p, q;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(p[i], p[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : q) std::swap(row[i], row[j]);
    }
    void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) p[dst][j] += f * p[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
        for (std::size_t i = 0; i < q.size(); ++i) q[i][dst] += f * q[i][src];
    }
    void negate_row(std::size_t i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : p[i]) x = -x;
    }

    bool lone(std::size_t s) const {
        for (std::size_t i = s + 1; i < rows; ++i)
            if (!d[i][s].is_zero()) return false;
        for (std::size_t j = s + 1; j < cols; ++j)
            if (!d[s][j].is_zero()) return false;
        return true;
    }

    bool find_min_nonzero(std::size_t s, std::size_t& bi, std::size_t& bj) const {
        bool found = false;
        BigInt best;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                if (d[i][j].is_zero()) continue;
                BigInt v = d[i][j].abs();
                if (!found || v < best) {
                    found = true;
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        return found;
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const Mat& m) {
    SnfState st;
    st.rows = m.size();
    st.cols = st.rows ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != st.cols) throw std::domain_error("smith_normal_form: ragged matrix");
    st.d = m;
    st.p = mat_identity(st.rows);
    st.q = mat_identity(st.cols);

    std::size_t nmin = std::min(st.rows, st.cols);
    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t bi = s, bj = s;
        if (!st.find_min_nonzero(s, bi, bj)) break;  // rest of the matrix is zero
        // Each pass either finishes the step or strictly shrinks the least
        // absolute value in the submatrix, so this terminates.
        for (;;) {
            st.find_min_nonzero(s, bi, bj);
            st.swap_rows(s, bi);
            st.swap_cols(s, bj);
            for (std::size_t i = s + 1; i < st.rows; ++i)
                if (!st.d[i][s].is_zero()) st.add_row(i, s, -(st.d[i][s] / st.d[s][s]));
            for (std::size_t j = s + 1; j < st.cols; ++j)
                if (!st.d[s][j].is_zero()) st.add_col(j, s, -(st.d[s][j] / st.d[s][s]));
            if (!st.lone(s)) continue;  // nonzero remainders left in row/col s
            // Pivot isolated: enforce the divisibility chain. Folding an
            // offending row into row s leaves a smaller remainder next pass.
            bool offending = false;
            for (std::size_t i = s + 1; i < st.rows && !offending; ++i)
                for (std::size_t j = s + 1; j < st.cols && !offending; ++j)
                    if (!(st.d[i][j] % st.d[s][s]).is_zero()) {
                        st.add_row(s, i, 1);
                        offending = true;
                    }
            if (!offending) break;
        }
        if (st.d[s][s].signum() < 0) st.negate_row(s);
    }

    SmithDecomposition out;
    out.p = std::move(st.p);
    out.d = std::move(st.d);
    out.q = std::move(st.q);
    for (std::size_t s = 0; s < nmin; ++s)
        if (!out.d[s][s].is_zero()) out.invariant_factors.push_back(out.d[s][s]);
    out.rank = out.invariant_factors.size();
    return out;
}

std::string AbelianGroup::str() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " (+) ";
        out += part;
    };
    if (free_rank == 1)
        append("Z");
    else if (free_rank > 1)
        append("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) append("Z/" + d.str());
    return out;
}

bool groups_equal(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

KGroups k_groups(const Graph& g, const std::optional<std::set<VertexId>>& u) {
    IntMatrix m = build_map(g, u);
    SmithDecomposition snf = smith_normal_form(m.a);
    KGroups out;
    out.k0.free_rank = static_cast<long long>(m.row_ids.size() - snf.rank);
    for (const auto& d : snf.invariant_factors)
        if (BigInt(1) < d) out.k0.torsion.push_back(d);
    out.k1.free_rank = static_cast<long long>(m.col_ids.size() - snf.rank);
    return out;
}

}  // namespace topograph
