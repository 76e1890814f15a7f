#include "mixres/multilinear.hpp"

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

const RatMatrix& TSFamily::map_at(const MultiIndex& idx) const {
    auto it = maps.find(idx);
    if (it == maps.end()) it = maps.find(idx.support());
    if (it == maps.end())
        throw std::invalid_argument("no family matrix stored for " + idx.str());
    return it->second;
}

void validate_family(const TSFamily& f,
                     const std::vector<const CosimplicialModuleQ*>& sources,
                     const CosimplicialModuleQ& target) {
    if (sources.empty())
        throw std::invalid_argument("a family needs at least one argument module");
    int m = target.m;
    for (const CosimplicialModuleQ* s : sources)
        if (s->m != m)
            throw std::invalid_argument("argument module level bound differs from the target");

    for (int l = 0; l <= m; ++l)
        for (const MultiIndex& i : nondegenerate_multiindices(m, l)) (void)f.map_at(i);

    for (int l = 1; l <= m; ++l)
        for (const MultiIndex& i : nondegenerate_multiindices(m, l))
            for (int j = 0; j <= l; ++j) {
                SimplicialMap al = SimplicialMap::face(j, l - 1);
                MultiIndex src = act(i, al);
                RatMatrix lhs = target.component_block(al, i) * f.map_at(src);
                RatMatrix args = sources[0]->component_block(al, i);
                for (size_t k = 1; k < sources.size(); ++k)
                    args = RatMatrix::kron(args, sources[k]->component_block(al, i));
                if (!(lhs == f.map_at(i) * args))
                    throw std::invalid_argument(
                        "family is not compatible with the face restriction at " + i.str());
            }
}

std::vector<Rat> assemble_multilinear(const TSFamily& f,
                                      const std::vector<const TSComplexData*>& args_ts,
                                      const std::vector<int>& form_degrees,
                                      const std::vector<std::vector<Rat>>& args,
                                      const TSComplexData& target) {
    size_t r = args_ts.size();
    if (r == 0 || form_degrees.size() != r || args.size() != r)
        throw std::invalid_argument("assembly argument lists disagree in length");
    int q_out = 0;
    for (int q : form_degrees) q_out += q;
    if (q_out >= static_cast<int>(target.kernels.size()))
        throw std::invalid_argument("total form degree exceeds the totalization range");

    std::vector<std::vector<Rat>> amb(r);
    for (size_t j = 0; j < r; ++j)
        amb[j] = args_ts[j]->kernels.at(form_degrees[j]).apply(args[j]);

    struct Pick {
        int form;
        int vec;
        Rat coef;
    };

    std::vector<Rat> out(target.ambient_dims.at(q_out), Rat(0));
    for (const AmbientBlock& tb : target.blocks.at(q_out)) {
        std::vector<const AmbientBlock*> sb(r, nullptr);
        bool missing = false;
        for (size_t j = 0; j < r; ++j) {
            sb[j] = args_ts[j]->find_block(form_degrees[j], tb.idx);
            if (!sb[j]) missing = true;
        }
        if (missing) continue;

        const RatMatrix& phi = f.map_at(tb.idx);
        int tensor_dim = 1;
        for (size_t j = 0; j < r; ++j) tensor_dim *= sb[j]->space_dim;
        if (phi.rows() != tb.space_dim || phi.cols() != tensor_dim)
            throw std::invalid_argument("family matrix shape mismatch at " + tb.idx.str());

        std::vector<std::vector<Pick>> picks(r);
        bool empty = false;
        for (size_t j = 0; j < r; ++j) {
            for (size_t fi = 0; fi < sb[j]->forms.size(); ++fi)
                for (int vi = 0; vi < sb[j]->space_dim; ++vi) {
                    Rat c = amb[j][sb[j]->offset + static_cast<int>(fi) * sb[j]->space_dim + vi];
                    if (c != 0) picks[j].push_back({static_cast<int>(fi), vi, c});
                }
            if (picks[j].empty()) empty = true;
        }
        if (empty) continue;

        std::map<FormTerm, int> tidx = term_index(tb.forms);
        std::vector<size_t> odo(r, 0);
        for (;;) {
            PolyForm w = term_form(sb[0]->forms[picks[0][odo[0]].form], tb.level);
            Rat coef = picks[0][odo[0]].coef;
            int tensor = picks[0][odo[0]].vec;
            for (size_t j = 1; j < r; ++j) {
                const Pick& p = picks[j][odo[j]];
                w = w.wedge(term_form(sb[j]->forms[p.form], tb.level));
                coef *= p.coef;
                tensor = tensor * sb[j]->space_dim + p.vec;
            }
            if (!w.is_zero()) {
                for (const auto& [ft, fc] : w.terms()) {
                    auto it = tidx.find(ft);
                    if (it == tidx.end())
                        throw std::invalid_argument(
                            "product left the coefficient budget of the target at " +
                            tb.idx.str());
                    for (int row = 0; row < tb.space_dim; ++row) {
                        Rat pv = phi.at(row, tensor);
                        if (pv != 0)
                            out[tb.offset + it->second * tb.space_dim + row] += coef * fc * pv;
                    }
                }
            }
            size_t k = 0;
            while (k < r && ++odo[k] == picks[k].size()) odo[k++] = 0;
            if (k == r) break;
        }
    }

    RatMatrix col(static_cast<int>(out.size()), 1);
    col.set_column(0, out);
    auto x = solve(target.kernels.at(q_out), col);
    if (!x) throw std::logic_error("assembled element violates the compatibility equations");
    return x->column(0);
}

TSFamily mul_family(const Covering& a, const Covering& b, const Covering& out) {
    if (a.m != b.m || a.m != out.m)
        throw std::invalid_argument("coverings of a product family must share the chart count");
    TSFamily f;
    for (int l = 0; l <= out.m; ++l)
        for (const MultiIndex& i : nondegenerate_multiindices(out.m, l)) {
            const OpenAlgebra& oa = a.open(i);
            const OpenAlgebra& ob = b.open(i);
            const OpenAlgebra& oo = out.open(i);
            if (oa.vars != ob.vars || oa.vars != oo.vars)
                throw std::invalid_argument(
                    "opens of a product family must share variables on " + oo.name);
            if (oa.rank != 1 || ob.rank != 1 || oo.rank != 1)
                throw std::invalid_argument("product families need rank-one modules");
            if (oa.njets() != 0 || ob.njets() != 0 || oo.njets() != 0)
                throw std::invalid_argument("product families act on plain section spaces");
            SpaceBasis ba = space_basis(oa, 0, 0);
            SpaceBasis bb = space_basis(ob, 0, 0);
            SpaceBasis bo = space_basis(oo, 0, 0);
            RatMatrix m(bo.dim(), ba.dim() * bb.dim());
            for (int va = 0; va < ba.dim(); ++va)
                for (int vb = 0; vb < bb.dim(); ++vb) {
                    Sym p;
                    p.sec.resize(oa.vars.size(), 0);
                    for (size_t k = 0; k < oa.vars.size(); ++k)
                        p.sec[k] = ba.syms[va].sec[k] + bb.syms[vb].sec[k];
                    Section s;
                    s.emplace(p, Rat(1));
                    std::vector<Rat> col;
                    try {
                        col = bo.to_vector(s);
                    } catch (const std::exception& e) {
                        throw std::invalid_argument("product of " + oa.sym_str(ba.syms[va]) +
                                                    " and " + ob.sym_str(bb.syms[vb]) + " on " +
                                                    oo.name + ": " + e.what());
                    }
                    m.set_column(va * bb.dim() + vb, col);
                }
            f.maps.emplace(i, std::move(m));
        }
    return f;
}

TSFamily scalar_family(const CosimplicialModuleQ& mod, const Rat& c) {
    if (!mod.decomposed())
        throw std::invalid_argument("a scalar family requires the level decomposition");
    TSFamily f;
    for (int l = 0; l <= mod.m; ++l)
        for (const MultiIndex& i : nondegenerate_multiindices(mod.m, l)) {
            int d = mod.block_at(l, i).dim;
            RatMatrix idm(d, d);
            for (int k = 0; k < d; ++k) idm.add_to(k, k, c);
            f.maps.emplace(i, std::move(idm));
        }
    return f;
}

}  // namespace mixres
