#include "mixres/ts.hpp"

#include <map>
#include <stdexcept>

#include "mixres/linalg.hpp"

namespace mixres {

namespace {

PolyForm term_form(const FormTerm& t, int l) {
    PolyForm p(l);
    p.add_term(t, Rat(1));
    return p;
}

std::map<FormTerm, int> term_index(const std::vector<FormTerm>& terms) {
    std::map<FormTerm, int> out;
    for (size_t i = 0; i < terms.size(); ++i) out.emplace(terms[i], static_cast<int>(i));
    return out;
}

}  // namespace

const AmbientBlock* TSComplexData::find_block(int degree, const MultiIndex& idx) const {
    for (const AmbientBlock& b : blocks.at(degree))
        if (b.idx == idx) return &b;
    return nullptr;
}

TSComplexData ts_complex(const CosimplicialModuleQ& c, int budget) {
    if (!c.decomposed())
        throw std::invalid_argument("totalization requires the level decomposition of the module");
    if (budget < 1)
        throw std::invalid_argument("coefficient budget must be at least 1");
    int m = c.m;
    int top = m + 1;

    TSComplexData t;
    t.budget = budget;
    t.blocks.resize(top + 1);
    t.ambient_dims.assign(top + 1, 0);
    auto cap = [&](int q) { return budget + m - q; };

    for (int q = 0; q <= top; ++q) {
        for (int l = 0; l <= m; ++l) {
            for (const MultiIndex& idx : nondegenerate_multiindices(m, l)) {
                std::vector<FormTerm> forms = enumerate_form_terms(l, q, cap(q));
                int mdim = c.block_at(l, idx).dim;
                if (forms.empty() || mdim == 0) continue;
                t.blocks[q].push_back(
                    {idx, l, std::move(forms), mdim, t.ambient_dims[q]});
                t.ambient_dims[q] +=
                    static_cast<int>(t.blocks[q].back().forms.size()) * mdim;
            }
        }
    }

    t.kernels.resize(top + 1);
    for (int q = 0; q <= top; ++q) {
        /* Count the face-compatibility rows first. */
        struct RowBlock {
            const AmbientBlock* src;
            int j;
            std::vector<FormTerm> rforms;
            int offset;
        };
        std::vector<RowBlock> rows;
        int total_rows = 0;
        for (const AmbientBlock& b : t.blocks[q]) {
            if (b.level == 0) continue;
            for (int j = 0; j <= b.level; ++j) {
                std::vector<FormTerm> rf = enumerate_form_terms(b.level - 1, q, cap(q));
                if (rf.empty()) continue;
                rows.push_back({&b, j, std::move(rf), total_rows});
                total_rows += static_cast<int>(rows.back().rforms.size()) * b.space_dim;
            }
        }

        RatMatrix r(total_rows, t.ambient_dims[q]);
        for (const RowBlock& rb : rows) {
            const AmbientBlock& b = *rb.src;
            int l = b.level;
            SimplicialMap delta = SimplicialMap::face(rb.j, l - 1);
            std::map<FormTerm, int> lookup = term_index(rb.rforms);

            for (size_t f = 0; f < b.forms.size(); ++f) {
                PolyForm pb = term_form(b.forms[f], l).pullback(delta);
                for (const auto& [term, coef] : pb.terms()) {
                    auto it = lookup.find(term);
                    if (it == lookup.end())
                        throw std::logic_error("face pullback left the coefficient budget");
                    for (int v = 0; v < b.space_dim; ++v)
                        r.add_to(rb.offset + it->second * b.space_dim + v,
                                 b.offset + static_cast<int>(f) * b.space_dim + v, coef);
                }
            }

            MultiIndex sub = act(b.idx, delta);
            const AmbientBlock* sb = t.find_block(q, sub);
            if (sb != nullptr) {
                RatMatrix res = c.component_block(delta, b.idx);
                for (size_t g = 0; g < rb.rforms.size(); ++g) {
                    if (!(sb->forms[g] == rb.rforms[g]))
                        throw std::logic_error("row and block form enumerations diverge");
                    for (int v = 0; v < b.space_dim; ++v)
                        for (const auto& [v2, w] : res.row(v))
                            r.add_to(rb.offset + static_cast<int>(g) * b.space_dim + v,
                                     sb->offset + static_cast<int>(g) * sb->space_dim + v2,
                                     -w);
                }
            }
        }
        t.kernels[q] = kernel_basis(r);
    }

    std::vector<int> dims(top + 1);
    for (int q = 0; q <= top; ++q) dims[q] = t.kernels[q].cols();
    t.complex = ChainComplexQ(0, dims);

    for (int q = 0; q < top; ++q) {
        RatMatrix d(t.ambient_dims[q + 1], t.ambient_dims[q]);
        for (const AmbientBlock& b : t.blocks[q]) {
            const AmbientBlock* tb = t.find_block(q + 1, b.idx);
            std::map<FormTerm, int> lookup;
            if (tb != nullptr) lookup = term_index(tb->forms);
            for (size_t f = 0; f < b.forms.size(); ++f) {
                PolyForm df = term_form(b.forms[f], b.level).d();
                if (df.is_zero()) continue;
                if (tb == nullptr)
                    throw std::logic_error("derivative fell outside the stored blocks");
                for (const auto& [term, coef] : df.terms()) {
                    auto it = lookup.find(term);
                    if (it == lookup.end())
                        throw std::logic_error("derivative left the coefficient budget");
                    for (int v = 0; v < b.space_dim; ++v)
                        d.add_to(tb->offset + it->second * tb->space_dim + v,
                                 b.offset + static_cast<int>(f) * b.space_dim + v, coef);
                }
            }
        }
        auto x = solve(t.kernels[q + 1], d * t.kernels[q]);
        if (!x)
            throw std::logic_error("differential left the compatible subspace at degree " +
                                   std::to_string(q));
        t.complex.set_diff(q, *x);
    }
    t.complex.validate();
    return t;
}

ChainMapQ ts_integrate(const TSComplexData& t, const NormalizedComplexData& n,
                       const CosimplicialModuleQ& c) {
    ChainMapQ out;
    out.source = &t.complex;
    out.target = &n.complex;
    int top = c.top_level();
    for (int q = 0; q <= top; ++q) {
        RatMatrix a(c.dims[q], t.ambient_dims[q]);
        for (const AmbientBlock& b : t.blocks[q]) {
            if (b.level != q) continue;
            const LevelBlock& lb = c.block_at(q, b.idx);
            for (size_t f = 0; f < b.forms.size(); ++f) {
                Rat val = term_form(b.forms[f], q).integrate();
                if (val == 0) continue;
                for (int v = 0; v < b.space_dim; ++v)
                    a.set(lb.offset + v, b.offset + static_cast<int>(f) * b.space_dim + v,
                          val);
            }
        }
        auto x = solve(n.kernels[q], a * t.kernels[q]);
        if (!x)
            throw std::logic_error("integration left the normalized subspace at degree " +
                                   std::to_string(q));
        out.comp.emplace(q, *x);
    }
    return out;
}

ChainMapQ ts_whitney(const TSComplexData& t, const NormalizedComplexData& n,
                     const CosimplicialModuleQ& c) {
    ChainMapQ out;
    out.source = &n.complex;
    out.target = &t.complex;
    int top = c.top_level();
    for (int q = 0; q <= top; ++q) {
        RatMatrix w(t.ambient_dims[q], c.dims[q]);
        for (const AmbientBlock& b : t.blocks[q]) {
            if (q > b.level) continue;
            std::map<FormTerm, int> lookup = term_index(b.forms);
            for (const SimplicialMap& beta : enumerate_maps(q, b.level)) {
                if (!beta.is_injective()) continue;
                PolyForm omega = whitney(beta.values, b.level);
                RatMatrix res = c.component_block(beta, b.idx);
                const LevelBlock& cb = c.block_at(q, act(b.idx, beta));
                for (const auto& [term, coef] : omega.terms()) {
                    auto it = lookup.find(term);
                    if (it == lookup.end())
                        throw std::logic_error("interpolating form left the coefficient budget");
                    for (int v = 0; v < b.space_dim; ++v)
                        for (const auto& [v2, rv] : res.row(v))
                            w.add_to(b.offset + it->second * b.space_dim + v,
                                     cb.offset + v2, coef * rv);
                }
            }
        }
        auto x = solve(t.kernels[q], w * n.kernels[q]);
        if (!x)
            throw std::logic_error("interpolation violates the compatibility equations at degree " +
                                   std::to_string(q));
        out.comp.emplace(q, *x);
    }
    return out;
}

void validate_ts(const CosimplicialModuleQ& c, const TSComplexData& t) {
    int m = c.m;
    int top = m + 1;
    for (int q = 0; q <= top; ++q) {
        for (int k = 0; k < t.kernels[q].cols(); ++k) {
            std::vector<Rat> a = t.kernels[q].column(k);

            /* Reconstruct the component family at every index of every
               stored level; degenerate indices pull back along their
               collapse surjection. */
            std::vector<std::map<MultiIndex, std::vector<PolyForm>>> comp(top + 1);
            for (int b = 0; b <= top; ++b) {
                for (const MultiIndex& i : all_multiindices(m, b)) {
                    MultiIndex base = i.support();
                    SimplicialMap w = i.collapse();
                    int mdim = c.block_at(base.dim(), base).dim;
                    std::vector<PolyForm> vals(mdim, PolyForm(b));
                    const AmbientBlock* ab = t.find_block(q, base);
                    if (ab != nullptr) {
                        for (size_t f = 0; f < ab->forms.size(); ++f) {
                            PolyForm pulled;
                            bool have = false;
                            for (int v = 0; v < mdim; ++v) {
                                const Rat& coef =
                                    a[ab->offset + static_cast<int>(f) * mdim + v];
                                if (coef == 0) continue;
                                if (!have) {
                                    pulled = term_form(ab->forms[f], base.dim()).pullback(w);
                                    have = true;
                                }
                                vals[v] = vals[v] + pulled.scaled(coef);
                            }
                        }
                    }
                    comp[b].emplace(i, std::move(vals));
                }
            }

            for (int p = 0; p <= top; ++p) {
                for (int b = 0; b <= top; ++b) {
                    for (const SimplicialMap& alpha : enumerate_maps(p, b)) {
                        for (const auto& [i, vals] : comp[b]) {
                            const std::vector<PolyForm>& src = comp[p].at(act(i, alpha));
                            RatMatrix res = c.component_block(alpha, i);
                            for (size_t v = 0; v < vals.size(); ++v) {
                                PolyForm rhs(p);
                                for (const auto& [v2, rv] : res.row(static_cast<int>(v)))
                                    rhs = rhs + src[v2].scaled(rv);
                                if (!(vals[v].pullback(alpha) == rhs))
                                    throw std::logic_error(
                                        "compatibility fails for " + alpha.str() + " at " +
                                        i.str() + ", degree " + std::to_string(q));
                            }
                        }
                    }
                }
            }
        }
    }
}

}  // namespace mixres
