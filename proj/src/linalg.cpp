#include "mixres/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace mixres {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/* One connected block of columns together with the rows touching them. */
struct Block {
    std::vector<int> cols;  // ascending global column indices
    std::vector<int> rows;  // ascending global row indices
};

std::vector<Block> split_blocks(const RatMatrix& m) {
    UnionFind uf(m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        const auto& row = m.row(r);
        if (row.empty()) continue;
        int first = row.begin()->first;
        for (const auto& [c, v] : row) uf.unite(c, first);
    }
    std::map<int, Block> by_root;
    for (int c = 0; c < m.cols(); ++c) by_root[uf.find(c)].cols.push_back(c);
    for (int r = 0; r < m.rows(); ++r) {
        const auto& row = m.row(r);
        if (row.empty()) continue;
        by_root[uf.find(row.begin()->first)].rows.push_back(r);
    }
    std::vector<Block> blocks;
    for (auto& [root, b] : by_root) blocks.push_back(std::move(b));
    return blocks;
}

/* Dense denominator-cleared copy of a block. */
std::vector<std::vector<Int>> integer_block(const RatMatrix& m, const Block& b) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(b.rows.size());
    for (int r : b.rows) {
        Int lcm = 1;
        for (const auto& [c, v] : m.row(r)) {
            Int den = v.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> row(b.cols.size(), Int(0));
        for (size_t j = 0; j < b.cols.size(); ++j) {
            auto it = m.row(r).find(b.cols[j]);
            if (it != m.row(r).end())
                row[j] = it->second.get_num() * (lcm / it->second.get_den());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<Int>> a;  // upper echelon after Bareiss steps
    std::vector<int> pivot_col;       // per pivot step, local column index
    std::vector<int> pivot_row;       // per pivot step, local row index (post swap = step)
};

/* Fraction-free forward elimination. After step k the remaining entries are
   the (k+1)-minors of the original block divided by the previous pivot, so
   they stay integral; the pivot with smallest |value| is chosen to slow
   growth. */
Echelon bareiss(std::vector<std::vector<Int>> a, size_t ncols) {
    Echelon e;
    size_t nrows = a.size();
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t best = nrows;
        for (size_t i = r; i < nrows; ++i) {
            if (a[i][c] == 0) continue;
            if (best == nrows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0)
                best = i;
        }
        if (best == nrows) continue;
        std::swap(a[r], a[best]);
        for (size_t i = r + 1; i < nrows; ++i) {
            for (size_t j = c + 1; j < ncols; ++j) {
                Int num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivot_col.push_back(static_cast<int>(c));
        e.pivot_row.push_back(static_cast<int>(r));
        ++r;
    }
    e.a = std::move(a);
    return e;
}

}  // namespace

int rank(const RatMatrix& m) {
    int total = 0;
    for (const Block& b : split_blocks(m)) {
        if (b.rows.empty()) continue;
        total += static_cast<int>(bareiss(integer_block(m, b), b.cols.size()).pivot_col.size());
    }
    return total;
}

std::vector<int> pivot_columns(const RatMatrix& m) {
    std::vector<int> cols;
    for (const Block& b : split_blocks(m)) {
        if (b.rows.empty()) continue;
        Echelon e = bareiss(integer_block(m, b), b.cols.size());
        for (int local : e.pivot_col) cols.push_back(b.cols[local]);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

RatMatrix image_basis(const RatMatrix& m) { return m.select_columns(pivot_columns(m)); }

RatMatrix kernel_basis(const RatMatrix& m) {
    std::vector<std::vector<Rat>> vectors;  // full-length kernel vectors
    std::vector<int> leading;               // free column of each vector
    for (const Block& b : split_blocks(m)) {
        Echelon e = bareiss(integer_block(m, b), b.cols.size());
        std::vector<bool> is_pivot(b.cols.size(), false);
        for (int c : e.pivot_col) is_pivot[c] = true;
        for (size_t f = 0; f < b.cols.size(); ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rat> local(b.cols.size(), Rat(0));
            local[f] = 1;
            for (int step = static_cast<int>(e.pivot_col.size()) - 1; step >= 0; --step) {
                int pr = e.pivot_row[step];
                int pc = e.pivot_col[step];
                if (static_cast<size_t>(pc) > f) continue;
                Rat acc(0);
                for (size_t j = pc + 1; j < b.cols.size(); ++j)
                    if (local[j] != 0) acc += Rat(e.a[pr][j]) * local[j];
                local[pc] = -acc / Rat(e.a[pr][pc]);
            }
            std::vector<Rat> full(m.cols(), Rat(0));
            for (size_t j = 0; j < b.cols.size(); ++j) full[b.cols[j]] = local[j];
            vectors.push_back(std::move(full));
            leading.push_back(b.cols[f]);
        }
    }
    std::vector<int> order(vectors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return leading[i] < leading[j]; });
    RatMatrix out(m.cols(), static_cast<int>(vectors.size()));
    for (size_t j = 0; j < order.size(); ++j) out.set_column(static_cast<int>(j), vectors[order[j]]);
    return out;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row mismatch " + a.shape_str() + " vs " + b.shape_str());
    /* Gauss-Jordan on [A | B] with rational arithmetic; pivot = smallest
       |num * den| in the column among unused rows. */
    int nrows = a.rows(), acols = a.cols(), bcols = b.cols();
    std::vector<std::map<int, Rat>> rows(nrows);
    for (int r = 0; r < nrows; ++r) {
        for (const auto& [c, v] : a.row(r)) rows[r][c] = v;
        for (const auto& [c, v] : b.row(r)) rows[r][acols + c] = v;
    }
    std::vector<bool> used(nrows, false);
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    for (int c = 0; c < acols; ++c) {
        int best = -1;
        Int best_size;
        for (int r = 0; r < nrows; ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end() || it->second == 0) continue;
            Int size = abs(it->second.get_num() * it->second.get_den());
            if (best < 0 || cmp(size, best_size) < 0) {
                best = r;
                best_size = size;
            }
        }
        if (best < 0) continue;
        used[best] = true;
        pivots.emplace_back(best, c);
        Rat inv = Rat(1) / rows[best][c];
        for (auto& [j, v] : rows[best]) v *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == best) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            Rat factor = it->second;
            for (const auto& [j, v] : rows[best]) {
                auto target = rows[r].find(j);
                if (target == rows[r].end()) {
                    Rat nv = -factor * v;
                    if (nv != 0) rows[r][j] = nv;
                } else {
                    target->second -= factor * v;
                    if (target->second == 0) rows[r].erase(target);
                }
            }
        }
    }
    for (int r = 0; r < nrows; ++r) {
        if (used[r]) continue;
        bool b_part = false;
        for (const auto& [j, v] : rows[r]) {
            if (j < acols && v != 0) throw std::logic_error("solve: unreduced row");
            if (j >= acols && v != 0) b_part = true;
        }
        if (b_part) return std::nullopt;
    }
    RatMatrix x(acols, bcols);
    for (const auto& [r, c] : pivots)
        for (const auto& [j, v] : rows[r])
            if (j >= acols) x.set(c, j - acols, v);
    return x;
}

}  // namespace mixres
