#include "mixres/cech.hpp"

#include <stdexcept>

#include "mixres/linalg.hpp"

namespace mixres {

ChainComplexQ standard_cech_complex(const Covering& cov) {
    return standard_normalization(cech_cosimplicial(cov, 0, 0)).complex;
}

ChainComplexQ commutative_cech_complex(const Covering& cov, int budget) {
    return ts_complex(cech_cosimplicial(cov, 0, 0), budget).complex;
}

namespace {

/* Restriction of the family's monomial to the open at idx, in that open's
   basis coordinates. */
std::vector<Rat> family_on_open(const Covering& cov, const std::map<int, Sym>& fam,
                                const MultiIndex& idx, int jet_cap) {
    int chart = idx.support().entries.front();
    auto it = fam.find(chart);
    if (it == fam.end())
        throw std::invalid_argument("global family has no entry for chart " +
                                    std::to_string(chart));
    MultiIndex vertex(cov.m, {chart});
    const OpenAlgebra& tgt = cov.open(idx.support());
    SpaceBasis tb = space_basis(tgt, 0, jet_cap);
    if (vertex == idx.support()) {
        Section s;
        s.emplace(it->second, Rat(1));
        return tb.to_vector(s);
    }
    Section img = apply_res(cov.open(vertex), tgt, cov.res_map(vertex, idx.support()),
                            it->second, jet_cap);
    return tb.to_vector(img);
}

}  // namespace

std::vector<Rat> global_family_level0(const Covering& cov, const CosimplicialModuleQ& c,
                                      const std::map<int, Sym>& fam, int jet_cap) {
    std::vector<Rat> out(c.dims[0], Rat(0));
    for (const LevelBlock& b : c.blocks[0]) {
        std::vector<Rat> v = family_on_open(cov, fam, b.idx, jet_cap);
        for (int k = 0; k < b.dim; ++k) out[b.offset + k] = v[k];
    }
    return out;
}

std::vector<Rat> global_family_ts0(const Covering& cov, const CosimplicialModuleQ& c,
                                   const TSComplexData& t, const std::map<int, Sym>& fam,
                                   int jet_cap) {
    std::vector<Rat> ambient(t.ambient_dims[0], Rat(0));
    for (const AmbientBlock& b : t.blocks[0]) {
        int f0 = -1;
        for (size_t f = 0; f < b.forms.size(); ++f)
            if (b.forms[f].mask == 0 && b.forms[f].coeff_degree() == 0)
                f0 = static_cast<int>(f);
        if (f0 < 0) throw std::logic_error("degree-0 block without a constant form");
        std::vector<Rat> v = family_on_open(cov, fam, b.idx, jet_cap);
        for (int k = 0; k < b.space_dim; ++k)
            ambient[b.offset + f0 * b.space_dim + k] = v[k];
    }
    RatMatrix col(t.ambient_dims[0], 1);
    col.set_column(0, ambient);
    auto x = solve(t.kernels[0], col);
    if (!x)
        throw std::invalid_argument("global family violates the compatibility equations");
    return x->column(0);
}

}  // namespace mixres
