#include "mixres/pparts.hpp"

#include <stdexcept>
#include <utility>

#include "mixres/forms.hpp"

namespace mixres {

namespace {

void collect_monomials(int n, int d, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur.push_back(e);
        collect_monomials(n, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> monomials(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    collect_monomials(n, d, cur, out);
    return out;
}

}  // namespace

Section apply_connection(const OpenAlgebra& alg, const Section& s) {
    if (alg.njets() == 0)
        throw std::invalid_argument("open " + alg.name + " has no etale coordinates");
    Section out;
    for (const auto& [sym, coef] : s)
        for (int k = 0; k < alg.njets(); ++k) {
            int a = k < static_cast<int>(sym.jet.size()) ? sym.jet[k] : 0;
            if (a == 0) continue;
            unsigned bit = 1u << k;
            if (sym.ds & bit) continue;
            Sym t = sym;
            t.jet[k] -= 1;
            t.ds |= bit;
            section_add(out, Section{{t, Rat(1)}}, coef * Rat(-a * merge_sign(bit, sym.ds)));
        }
    return out;
}

RatMatrix connection_matrix(const OpenAlgebra& alg, int ds_degree, int src_cap, int dst_cap) {
    SpaceBasis src = space_basis(alg, ds_degree, src_cap);
    SpaceBasis dst = space_basis(alg, ds_degree + 1, dst_cap);
    RatMatrix m(dst.dim(), src.dim());
    for (int c = 0; c < src.dim(); ++c) {
        Section img = apply_connection(alg, Section{{src.syms[c], Rat(1)}});
        try {
            m.set_column(c, dst.to_vector(img));
        } catch (const std::exception& e) {
            throw std::invalid_argument("connection on " + alg.name + " at " +
                                        alg.sym_str(src.syms[c]) + ": " + e.what());
        }
    }
    return m;
}

ChainComplexQ connection_complex(const OpenAlgebra& alg, int jet_cap) {
    int n = alg.njets();
    if (n == 0)
        throw std::invalid_argument("open " + alg.name + " has no etale coordinates");
    std::vector<int> dims;
    for (int p = 0; p <= n; ++p) dims.push_back(space_basis(alg, p, jet_cap - p).dim());
    ChainComplexQ c(0, dims);
    for (int p = 0; p < n; ++p)
        c.set_diff(p, connection_matrix(alg, p, jet_cap - p, jet_cap - p - 1));
    c.validate();
    return c;
}

ChainComplexQ weight_piece(int n, int w) {
    if (n < 1)
        throw std::invalid_argument("weight pieces need at least one jet variable");
    using Elem = std::pair<std::vector<int>, unsigned>;
    std::vector<std::vector<Elem>> bases(n + 1);
    std::vector<std::map<Elem, int>> index(n + 1);
    for (int p = 0; p <= n && p <= w; ++p)
        for (const std::vector<int>& a : monomials(n, w - p))
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != p) continue;
                index[p].emplace(Elem{a, mask}, static_cast<int>(bases[p].size()));
                bases[p].push_back({a, mask});
            }

    std::vector<int> dims;
    for (int p = 0; p <= n; ++p) dims.push_back(static_cast<int>(bases[p].size()));
    ChainComplexQ c(0, dims);
    for (int p = 0; p < n; ++p) {
        RatMatrix d(dims[p + 1], dims[p]);
        for (int col = 0; col < dims[p]; ++col) {
            const auto& [a, mask] = bases[p][col];
            for (int k = 0; k < n; ++k) {
                unsigned bit = 1u << k;
                if (a[k] == 0 || (mask & bit)) continue;
                std::vector<int> b = a;
                b[k] -= 1;
                int row = index[p + 1].at({b, mask | bit});
                d.add_to(row, col, Rat(-a[k] * merge_sign(bit, mask)));
            }
        }
        c.set_diff(p, d);
    }
    c.validate();
    return c;
}

}  // namespace mixres
