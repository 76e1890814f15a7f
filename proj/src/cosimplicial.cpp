#include "mixres/cosimplicial.hpp"

#include <stdexcept>

#include "mixres/linalg.hpp"

namespace mixres {

const RatMatrix& CosimplicialModuleQ::structure_map(const SimplicialMap& a) const {
    auto it = structure.find(a);
    if (it == structure.end())
        throw std::invalid_argument("no structure matrix stored for " + a.str());
    return it->second;
}

const LevelBlock& CosimplicialModuleQ::block_at(int level, const MultiIndex& idx) const {
    if (!decomposed()) throw std::logic_error("cosimplicial module carries no decomposition");
    for (const LevelBlock& b : blocks.at(level))
        if (b.idx == idx) return b;
    throw std::invalid_argument("level " + std::to_string(level) + " has no block at " +
                                idx.str());
}

RatMatrix CosimplicialModuleQ::component_block(const SimplicialMap& a,
                                               const MultiIndex& i) const {
    const RatMatrix& full = structure_map(a);
    const LevelBlock& rb = block_at(a.dst, i);
    const LevelBlock& cb = block_at(a.src, act(i, a));
    RatMatrix out(rb.dim, cb.dim);
    for (int r = 0; r < rb.dim; ++r)
        for (const auto& [c, v] : full.row(rb.offset + r))
            if (c >= cb.offset && c < cb.offset + cb.dim) out.set(r, c - cb.offset, v);
    return out;
}

void CosimplicialModuleQ::validate() const {
    int top = top_level();
    if (static_cast<int>(dims.size()) != top + 1)
        throw std::invalid_argument("cosimplicial module must store levels 0.." +
                                    std::to_string(top));
    for (int p = 0; p <= top; ++p) {
        for (int q = 0; q <= top; ++q) {
            for (const SimplicialMap& a : enumerate_maps(p, q)) {
                const RatMatrix& ma = structure_map(a);
                if (ma.rows() != dims[q] || ma.cols() != dims[p])
                    throw std::invalid_argument("structure matrix shape mismatch at " + a.str());
            }
        }
        if (structure_map(SimplicialMap::identity(p)) != RatMatrix::identity(dims[p]))
            throw std::invalid_argument("identity of level " + std::to_string(p) +
                                        " acts nontrivially");
    }
    for (int p = 0; p <= top; ++p)
        for (int q = 0; q <= top; ++q)
            for (int r = 0; r <= top; ++r)
                for (const SimplicialMap& a : enumerate_maps(p, q))
                    for (const SimplicialMap& b : enumerate_maps(q, r))
                        if (structure_map(compose(b, a)) !=
                            structure_map(b) * structure_map(a))
                            throw std::invalid_argument("functoriality fails on " + b.str() +
                                                        " ∘ " + a.str());
}

CosimplicialModuleQ cech_cosimplicial(const Covering& cov, int ds_degree, int jet_cap) {
    CosimplicialModuleQ out;
    out.m = cov.m;
    int top = out.top_level();

    std::map<MultiIndex, int> open_dim;
    for (const auto& [idx, alg] : cov.opens)
        open_dim.emplace(idx, space_basis(alg, ds_degree, jet_cap).dim());

    out.blocks.resize(top + 1);
    out.dims.assign(top + 1, 0);
    for (int q = 0; q <= top; ++q) {
        for (const MultiIndex& i : all_multiindices(cov.m, q)) {
            int d = open_dim.at(i.support());
            out.blocks[q].push_back({i, out.dims[q], d});
            out.dims[q] += d;
        }
    }

    std::map<std::pair<MultiIndex, MultiIndex>, RatMatrix> rcache;
    auto res_between = [&](const MultiIndex& small, const MultiIndex& big) -> const RatMatrix& {
        auto key = std::make_pair(small, big);
        auto it = rcache.find(key);
        if (it == rcache.end())
            it = rcache.emplace(key, cov.res_matrix_between(small, big, ds_degree, jet_cap))
                     .first;
        return it->second;
    };

    for (int p = 0; p <= top; ++p) {
        for (int q = 0; q <= top; ++q) {
            for (const SimplicialMap& a : enumerate_maps(p, q)) {
                RatMatrix ma(out.dims[q], out.dims[p]);
                for (const LevelBlock& rb : out.blocks[q]) {
                    const LevelBlock& cb = out.block_at(p, act(rb.idx, a));
                    const RatMatrix& r =
                        res_between(cb.idx.support(), rb.idx.support());
                    for (int rr = 0; rr < r.rows(); ++rr)
                        for (const auto& [cc, v] : r.row(rr))
                            ma.set(rb.offset + rr, cb.offset + cc, v);
                }
                out.structure.emplace(a, std::move(ma));
            }
        }
    }
    return out;
}

CosimplicialModuleQ constant_cosimplicial(int m, int dim) {
    CosimplicialModuleQ out;
    out.m = m;
    out.dims.assign(m + 2, dim);
    for (int p = 0; p <= m + 1; ++p)
        for (int q = 0; q <= m + 1; ++q)
            for (const SimplicialMap& a : enumerate_maps(p, q))
                out.structure.emplace(a, RatMatrix::identity(dim));
    return out;
}

NormalizedComplexData standard_normalization(const CosimplicialModuleQ& c) {
    int top = c.top_level();
    std::vector<RatMatrix> kernels(top + 1);
    std::vector<int> ndims(top + 1);
    for (int q = 0; q <= top; ++q) {
        if (q == 0) {
            kernels[0] = RatMatrix::identity(c.dims[0]);
        } else {
            RatMatrix stacked = c.structure_map(SimplicialMap::degeneracy(0, q));
            for (int j = 1; j < q; ++j)
                stacked =
                    RatMatrix::vstack(stacked, c.structure_map(SimplicialMap::degeneracy(j, q)));
            kernels[q] = kernel_basis(stacked);
        }
        ndims[q] = kernels[q].cols();
    }

    NormalizedComplexData out;
    out.complex = ChainComplexQ(0, ndims);
    for (int q = 0; q < top; ++q) {
        RatMatrix d(c.dims[q + 1], c.dims[q]);
        for (int j = 0; j <= q + 1; ++j) {
            Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
            const RatMatrix& f = c.structure_map(SimplicialMap::face(j, q));
            for (int r = 0; r < f.rows(); ++r)
                for (const auto& [cc, v] : f.row(r)) d.add_to(r, cc, v * sign);
        }
        auto x = solve(kernels[q + 1], d * kernels[q]);
        if (!x)
            throw std::logic_error("alternating coface sum left the normalized subspace at level " +
                                   std::to_string(q));
        out.complex.set_diff(q, *x);
    }
    out.complex.validate();
    out.kernels = std::move(kernels);
    return out;
}

}  // namespace mixres
