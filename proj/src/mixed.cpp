#include "mixres/mixed.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "mixres/linalg.hpp"
#include "mixres/pparts.hpp"

namespace mixres {

int MixedComplex::dim_at(int p, int q) const {
    if (p < 0 || p >= nrows()) return 0;
    return rows[p].complex.dim(q);
}

std::vector<Rat> MixedComplex::embed(int p, int q, const std::vector<Rat>& v) const {
    auto it = offsets.find({p, q});
    if (it == offsets.end())
        throw std::invalid_argument("mixed: no slot at bidegree (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
    if (static_cast<int>(v.size()) != dim_at(p, q))
        throw std::invalid_argument("mixed: coordinate length mismatch at bidegree (" +
                                    std::to_string(p) + "," + std::to_string(q) + ")");
    std::vector<Rat> out(total.dim(p + q), Rat(0));
    for (int i = 0; i < static_cast<int>(v.size()); ++i) out[it->second + i] = v[i];
    return out;
}

std::vector<Rat> MixedComplex::component(int p, int q, const std::vector<Rat>& total_vec) const {
    auto it = offsets.find({p, q});
    if (it == offsets.end())
        throw std::invalid_argument("mixed: no slot at bidegree (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
    if (static_cast<int>(total_vec.size()) != total.dim(p + q))
        throw std::invalid_argument("mixed: total coordinate length mismatch at degree " +
                                    std::to_string(p + q));
    std::vector<Rat> out(dim_at(p, q), Rat(0));
    for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = total_vec[it->second + i];
    return out;
}

namespace {

void paste(RatMatrix& into, const RatMatrix& block, int r0, int c0, const Rat& scale) {
    for (int r = 0; r < block.rows(); ++r)
        for (const auto& [c, v] : block.row(r)) into.add_to(r0 + r, c0 + c, v * scale);
}

/* Block-diagonal connection on the ambient block sum at one form degree:
   the identity on the form factor tensored with the per-open connection
   matrix between the two row caps. */
RatMatrix ambient_connection(const Covering& cov, const TSComplexData& src,
                             const TSComplexData& dst, int q, int p, int src_cap, int dst_cap,
                             std::map<const OpenAlgebra*, RatMatrix>& cache) {
    RatMatrix amb(dst.ambient_dims[q], src.ambient_dims[q]);
    for (const AmbientBlock& b : src.blocks[q]) {
        const OpenAlgebra& alg = cov.open(b.idx);
        auto it = cache.find(&alg);
        if (it == cache.end())
            it = cache.emplace(&alg, connection_matrix(alg, p, src_cap, dst_cap)).first;
        const RatMatrix& cm = it->second;
        const AmbientBlock* tb = dst.find_block(q, b.idx);
        if (tb == nullptr) {
            if (!cm.is_zero())
                throw std::logic_error("mixed: connection image at " + b.idx.str() +
                                       " has no block in the next row");
            continue;
        }
        if (tb->forms.size() != b.forms.size())
            throw std::logic_error("mixed: form spaces disagree across rows at " + b.idx.str());
        for (int f = 0; f < static_cast<int>(b.forms.size()); ++f)
            paste(amb, cm, tb->offset + f * tb->space_dim, b.offset + f * b.space_dim, Rat(1));
    }
    return amb;
}

MixedComplex assemble(const Covering& cov, int budget, int adic_order, std::vector<int> caps,
                      bool graded) {
    MixedComplex mc;
    mc.cov = &cov;
    mc.budget = budget;
    mc.adic_order = adic_order;
    mc.graded_caps = graded;
    mc.caps = std::move(caps);
    int nr = static_cast<int>(mc.caps.size());
    int topq = cov.m + 1;
    for (int p = 0; p < nr; ++p) {
        mc.modules.push_back(cech_cosimplicial(cov, p, mc.caps[p]));
        mc.rows.push_back(ts_complex(mc.modules.back(), budget));
        mc.rows.back().complex.validate();
    }
    for (int p = 0; p + 1 < nr; ++p) {
        std::map<const OpenAlgebra*, RatMatrix> cache;
        for (int q = 0; q <= topq; ++q) {
            RatMatrix amb = ambient_connection(cov, mc.rows[p], mc.rows[p + 1], q, p,
                                               mc.caps[p], mc.caps[p + 1], cache);
            auto t = solve(mc.rows[p + 1].kernels[q], amb * mc.rows[p].kernels[q]);
            if (!t)
                throw std::logic_error("mixed: connection image at ds-degree " +
                                       std::to_string(p) + ", form degree " + std::to_string(q) +
                                       " is not a compatible family");
            mc.nabla.emplace(std::make_pair(p, q), std::move(*t));
        }
    }
    for (int p = 0; p + 2 < nr; ++p)
        for (int q = 0; q <= topq; ++q)
            if (!(mc.nabla.at({p + 1, q}) * mc.nabla.at({p, q})).is_zero())
                throw std::logic_error("mixed: ∇∘∇ != 0 at ds-degree " + std::to_string(p) +
                                       ", form degree " + std::to_string(q));
    for (int p = 0; p + 1 < nr; ++p)
        for (int q = 0; q < topq; ++q) {
            RatMatrix lhs = mc.rows[p + 1].complex.diff(q) * mc.nabla.at({p, q});
            RatMatrix rhs = mc.nabla.at({p, q + 1}) * mc.rows[p].complex.diff(q);
            if (!(lhs - rhs).is_zero())
                throw std::logic_error("mixed: connection does not commute with the face sum "
                                       "at ds-degree " +
                                       std::to_string(p) + ", form degree " + std::to_string(q));
        }

    int hi = nr - 1 + topq;
    std::vector<int> dims(hi + 1, 0);
    for (int deg = 0; deg <= hi; ++deg)
        for (int p = 0; p < nr; ++p) {
            int q = deg - p;
            if (q < 0 || q > topq) continue;
            mc.offsets[{p, q}] = dims[deg];
            dims[deg] += mc.rows[p].complex.dim(q);
        }
    mc.total = ChainComplexQ(0, dims);
    for (int deg = 0; deg < hi; ++deg) {
        RatMatrix d(mc.total.dim(deg + 1), mc.total.dim(deg));
        for (int p = 0; p < nr; ++p) {
            int q = deg - p;
            if (q < 0 || q > topq) continue;
            int c0 = mc.offsets.at({p, q});
            if (q + 1 <= topq)
                paste(d, mc.rows[p].complex.diff(q), mc.offsets.at({p, q + 1}), c0, Rat(1));
            if (p + 1 < nr)
                paste(d, mc.nabla.at({p, q}), mc.offsets.at({p + 1, q}), c0,
                      Rat(q % 2 == 0 ? 1 : -1));
        }
        mc.total.set_diff(deg, std::move(d));
    }
    mc.total.validate();
    return mc;
}

}  // namespace

MixedComplex build_mixed(const Covering& cov, int budget, int adic_order) {
    if (adic_order < 1) throw std::invalid_argument("mixed: adic order must be positive");
    std::vector<int> caps(cov.n + 1);
    for (int p = 0; p <= cov.n; ++p) caps[p] = adic_order + (cov.n - p);
    return assemble(cov, budget, adic_order, std::move(caps), true);
}

MixedComplex build_mixed_uniform(const Covering& cov, int budget, int adic_order) {
    if (adic_order < 1) throw std::invalid_argument("mixed: adic order must be positive");
    if (cov.m != 0)
        throw std::invalid_argument(
            "mixed: a uniform jet cap only forms a complex over a single chart; restriction "
            "maps raise jet degree past the cap of the next row");
    return assemble(cov, budget, adic_order, std::vector<int>(cov.n + 1, adic_order), false);
}

ChainMapQ adic_comparison(const MixedComplex& at_n, const MixedComplex& at_n1) {
    if (at_n.cov != at_n1.cov || at_n.budget != at_n1.budget ||
        at_n.graded_caps != at_n1.graded_caps)
        throw std::invalid_argument("mixed: comparison endpoints disagree on covering or budget");
    if (at_n1.adic_order != at_n.adic_order + 1)
        throw std::invalid_argument("mixed: comparison expects consecutive adic orders");
    const Covering& cov = *at_n.cov;
    int nr = at_n.nrows();
    int topq = cov.m + 1;
    std::map<std::pair<int, int>, RatMatrix> comp;
    for (int p = 0; p < nr; ++p) {
        std::map<const OpenAlgebra*, std::pair<SpaceBasis, SpaceBasis>> bases;
        int keep_cap = at_n.graded_caps ? at_n.caps[p] : at_n.adic_order - p;
        for (int q = 0; q <= topq; ++q) {
            RatMatrix proj(at_n.rows[p].ambient_dims[q], at_n1.rows[p].ambient_dims[q]);
            for (const AmbientBlock& b : at_n1.rows[p].blocks[q]) {
                const AmbientBlock* tb = at_n.rows[p].find_block(q, b.idx);
                if (tb == nullptr || tb->forms.size() != b.forms.size())
                    throw std::logic_error("mixed: comparison rows disagree on the blocks at " +
                                           b.idx.str());
                const OpenAlgebra& alg = cov.open(b.idx);
                auto it = bases.find(&alg);
                if (it == bases.end())
                    it = bases
                             .emplace(&alg, std::make_pair(space_basis(alg, p, at_n1.caps[p]),
                                                           space_basis(alg, p, at_n.caps[p])))
                             .first;
                const SpaceBasis& fine = it->second.first;
                const SpaceBasis& coarse = it->second.second;
                RatMatrix drop(coarse.dim(), fine.dim());
                for (int j = 0; j < fine.dim(); ++j) {
                    const Sym& s = fine.syms[j];
                    if (s.jet_degree() > keep_cap) continue;
                    drop.set(coarse.index.at(s), j, Rat(1));
                }
                for (int f = 0; f < static_cast<int>(b.forms.size()); ++f)
                    paste(proj, drop, tb->offset + f * tb->space_dim, b.offset + f * b.space_dim,
                          Rat(1));
            }
            auto t = solve(at_n.rows[p].kernels[q], proj * at_n1.rows[p].kernels[q]);
            if (!t)
                throw std::logic_error("mixed: truncation at ds-degree " + std::to_string(p) +
                                       ", form degree " + std::to_string(q) +
                                       " does not preserve the compatible families");
            comp.emplace(std::make_pair(p, q), std::move(*t));
        }
    }
    ChainMapQ f;
    f.source = &at_n1.total;
    f.target = &at_n.total;
    for (int deg = 0; deg <= at_n.total.hi(); ++deg) {
        RatMatrix m(at_n.total.dim(deg), at_n1.total.dim(deg));
        for (int p = 0; p < nr; ++p) {
            int q = deg - p;
            if (q < 0 || q > topq) continue;
            paste(m, comp.at({p, q}), at_n.offsets.at({p, q}), at_n1.offsets.at({p, q}), Rat(1));
        }
        f.comp.emplace(deg, std::move(m));
    }
    f.validate();
    return f;
}

std::map<int, int> stabilized_cohomology(const MixedComplex& at_n, const MixedComplex& at_n1) {
    ChainMapQ f = adic_comparison(at_n, at_n1);
    std::map<int, int> out;
    const ChainComplexQ& fine = at_n1.total;
    const ChainComplexQ& coarse = at_n.total;
    for (int d = coarse.lo(); d <= coarse.hi(); ++d) {
        RatMatrix fz = f.component(d) * kernel_basis(fine.diff(d));
        RatMatrix bnd = d > coarse.lo() ? coarse.diff(d - 1) : RatMatrix(coarse.dim(d), 0);
        out[d] = rank(RatMatrix::hstack(fz, bnd)) - rank(bnd);
    }
    return out;
}

GFiltration g_filtration(const MixedComplex& c) {
    int topq = c.cov->m + 1;
    GFiltration g;
    for (int i = 0; i <= topq + 1; ++i) {
        std::vector<std::vector<int>> sel(c.total.hi() + 1);
        std::vector<int> dims(c.total.hi() + 1, 0);
        for (int deg = 0; deg <= c.total.hi(); ++deg)
            for (int p = 0; p < c.nrows(); ++p) {
                int q = deg - p;
                if (q < i || q > topq) continue;
                int off = c.offsets.at({p, q});
                for (int j = 0; j < c.dim_at(p, q); ++j) sel[deg].push_back(off + j);
                dims[deg] += c.dim_at(p, q);
            }
        ChainComplexQ piece(0, dims);
        for (int deg = 0; deg < c.total.hi(); ++deg) {
            const RatMatrix& full = c.total.diff(deg);
            std::vector<int> rmap(full.rows(), -1), cmap(full.cols(), -1);
            for (int j = 0; j < static_cast<int>(sel[deg + 1].size()); ++j)
                rmap[sel[deg + 1][j]] = j;
            for (int j = 0; j < static_cast<int>(sel[deg].size()); ++j) cmap[sel[deg][j]] = j;
            RatMatrix sub(dims[deg + 1], dims[deg]);
            for (int r = 0; r < full.rows(); ++r)
                for (const auto& [cc, v] : full.row(r)) {
                    if (cmap[cc] < 0) continue;
                    if (rmap[r] < 0)
                        throw std::logic_error("mixed: filtration piece " + std::to_string(i) +
                                               " is not closed under the differential at degree " +
                                               std::to_string(deg));
                    sub.set(rmap[r], cmap[cc], v);
                }
            piece.set_diff(deg, std::move(sub));
        }
        piece.validate();
        g.pieces.emplace(i, std::move(piece));
    }
    return g;
}

ChainComplexQ gr_piece(const MixedComplex& c, int i) {
    int topq = c.cov->m + 1;
    if (i < 0 || i > topq) throw std::invalid_argument("mixed: no graded piece at " +
                                                       std::to_string(i));
    std::vector<int> dims(c.nrows(), 0);
    for (int p = 0; p < c.nrows(); ++p) dims[p] = c.dim_at(p, i);
    ChainComplexQ gr(i, dims);
    for (int p = 0; p + 1 < c.nrows(); ++p)
        gr.set_diff(i + p, c.nabla.at({p, i}).scaled(Rat(i % 2 == 0 ? 1 : -1)));
    gr.validate();
    return gr;
}

ChainComplexQ coefficient_total(const MixedComplex& a, const MixedComplex& b, const Rat& f) {
    const ChainComplexQ& A = a.total;
    const ChainComplexQ& B = b.total;
    for (int d = A.lo(); d <= A.hi(); ++d)
        if (B.dim(d) != A.dim(d))
            throw std::invalid_argument(
                "mixed: a two-term coefficient complex needs equal bidegree spaces, got " +
                std::to_string(A.dim(d)) + " vs " + std::to_string(B.dim(d)) + " at degree " +
                std::to_string(d));
    int hi = A.hi() + 1;
    std::vector<int> dims(hi + 1, 0);
    for (int d = 0; d <= hi; ++d) dims[d] = A.dim(d) + B.dim(d - 1);
    ChainComplexQ tot(0, dims);
    for (int d = 0; d < hi; ++d) {
        RatMatrix m(dims[d + 1], dims[d]);
        paste(m, A.diff(d), 0, 0, Rat(1));
        if (f != 0)
            for (int j = 0; j < A.dim(d); ++j)
                m.add_to(A.dim(d + 1) + j, j, d % 2 == 0 ? f : -f);
        if (d >= 1) paste(m, B.diff(d - 1), A.dim(d + 1), A.dim(d), Rat(1));
        tot.set_diff(d, std::move(m));
    }
    tot.validate();
    return tot;
}

TSFamily mixed_mul_family(const MixedComplex& a, int pa, const MixedComplex& b, int pb,
                          const MixedComplex& out) {
    if (a.cov->m != b.cov->m || a.cov->m != out.cov->m)
        throw std::invalid_argument("mixed: product coverings disagree on chart count");
    int po = pa + pb;
    if (pa < 0 || pb < 0 || po >= out.nrows())
        throw std::invalid_argument("mixed: no product row at ds-degree " + std::to_string(po));
    TSFamily fam;
    for (int l = 0; l <= a.cov->m; ++l)
        for (const MultiIndex& idx : nondegenerate_multiindices(a.cov->m, l)) {
            const OpenAlgebra& oa = a.cov->open(idx);
            const OpenAlgebra& ob = b.cov->open(idx);
            const OpenAlgebra& oo = out.cov->open(idx);
            SpaceBasis sa = space_basis(oa, pa, a.caps[pa]);
            SpaceBasis sb = space_basis(ob, pb, b.caps[pb]);
            SpaceBasis so = space_basis(oo, po, out.caps[po]);
            RatMatrix m(so.dim(), sa.dim() * sb.dim());
            for (int i = 0; i < sa.dim(); ++i)
                for (int j = 0; j < sb.dim(); ++j) {
                    Section u, v;
                    u.emplace(sa.syms[i], Rat(1));
                    v.emplace(sb.syms[j], Rat(1));
                    Section prod = section_mul(u, v, out.caps[po]);
                    try {
                        m.set_column(i * sb.dim() + j, so.to_vector(prod));
                    } catch (const std::runtime_error& e) {
                        throw std::runtime_error("product of " + oa.sym_str(sa.syms[i]) +
                                                 " and " + ob.sym_str(sb.syms[j]) + " on " +
                                                 oo.name + ": " + e.what());
                    }
                }
            fam.maps.emplace(idx, std::move(m));
        }
    return fam;
}

std::vector<Rat> mixed_product(const MixedComplex& a, int pa, int qa, const std::vector<Rat>& u,
                               const MixedComplex& b, int pb, int qb, const std::vector<Rat>& v,
                               const MixedComplex& out, const TSFamily& fam) {
    std::vector<const TSComplexData*> srcs{&a.rows.at(pa), &b.rows.at(pb)};
    std::vector<Rat> w =
        assemble_multilinear(fam, srcs, {qa, qb}, {u, v}, out.rows.at(pa + pb));
    if (pa % 2 == 1 && qb % 2 == 1)
        for (Rat& x : w) x = -x;
    return w;
}

std::vector<Rat> mixed_product(const MixedComplex& a, int pa, int qa, const std::vector<Rat>& u,
                               const MixedComplex& b, int pb, int qb, const std::vector<Rat>& v,
                               const MixedComplex& out) {
    return mixed_product(a, pa, qa, u, b, pb, qb, v, out, mixed_mul_family(a, pa, b, pb, out));
}

Section flat_unit(const OpenAlgebra& alg, const std::vector<int>& exps, int frame) {
    if (static_cast<int>(exps.size()) != alg.nvars())
        throw std::invalid_argument("mixed: exponent length mismatch on " + alg.name);
    Section s;
    s.emplace(Sym{exps, std::vector<int>(alg.njets(), 0), 0, frame}, Rat(1));
    return s;
}

Section taylor_unit(const OpenAlgebra& alg, const std::vector<int>& exps, int frame,
                    int jet_cap) {
    if (static_cast<int>(exps.size()) != alg.nvars())
        throw std::invalid_argument("mixed: exponent length mismatch on " + alg.name);
    Section s = taylor_expansion(alg, Rat(1), exps, jet_cap);
    if (frame == 0) return s;
    Section e;
    e.emplace(Sym{std::vector<int>(alg.nvars(), 0), std::vector<int>(alg.njets(), 0), 0, frame},
              Rat(1));
    return section_mul(s, e, jet_cap);
}

std::vector<Rat> unit_cocycle(const MixedComplex& c, const std::map<int, Sym>& fam) {
    return c.embed(0, 0,
                   global_family_ts0(*c.cov, c.modules.at(0), c.rows.at(0), fam, c.caps.at(0)));
}

}  // namespace mixres
