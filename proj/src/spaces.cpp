#include "mixres/spaces.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "mixres/forms.hpp"

namespace mixres {

namespace {

Rat rat_pow(const Rat& base, int e) {
    if (e == 0) return Rat(1);
    if (base == 0) throw std::invalid_argument("zero raised to a nonpositive power");
    Rat acc(1);
    for (int i = 0; i < std::abs(e); ++i) acc *= base;
    return e > 0 ? acc : Rat(1) / acc;
}

std::vector<int> zeros(int n) { return std::vector<int>(n, 0); }

}  // namespace

bool Sym::operator<(const Sym& o) const {
    if (frame != o.frame) return frame < o.frame;
    if (sec != o.sec) return sec < o.sec;
    if (jet != o.jet) return jet < o.jet;
    return ds < o.ds;
}

void section_add(Section& acc, const Section& s, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [sym, c] : s) {
        auto it = acc.find(sym);
        if (it == acc.end()) {
            acc.emplace(sym, c * scale);
        } else {
            it->second += c * scale;
            if (it->second == 0) acc.erase(it);
        }
    }
}

Section section_scaled(const Section& s, const Rat& c) {
    Section out;
    section_add(out, s, c);
    return out;
}

Section section_mul(const Section& a, const Section& b, int jet_cap) {
    Section out;
    for (const auto& [sa, ca] : a) {
        for (const auto& [sb, cb] : b) {
            if (sa.ds & sb.ds) continue;
            if (sa.frame != 0 && sb.frame != 0)
                throw std::invalid_argument("section product with two framed factors");
            Sym s;
            s.sec.resize(sa.sec.size());
            for (size_t i = 0; i < s.sec.size(); ++i) s.sec[i] = sa.sec[i] + sb.sec[i];
            s.jet.resize(sa.jet.size());
            int jdeg = 0;
            for (size_t i = 0; i < s.jet.size(); ++i) {
                s.jet[i] = sa.jet[i] + sb.jet[i];
                jdeg += s.jet[i];
            }
            if (jet_cap >= 0 && jdeg > jet_cap) continue;
            s.ds = sa.ds | sb.ds;
            s.frame = sa.frame + sb.frame;
            Rat c = ca * cb * merge_sign(sa.ds, sb.ds);
            auto it = out.find(s);
            if (it == out.end()) {
                if (c != 0) out.emplace(s, c);
            } else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

Section section_truncate_jets(const Section& s, int jet_cap) {
    if (jet_cap < 0) return s;
    Section out;
    for (const auto& [sym, c] : s)
        if (sym.jet_degree() <= jet_cap) out.emplace(sym, c);
    return out;
}

bool OpenAlgebra::admits(const Sym& s) const {
    for (int v = 0; v < nvars(); ++v)
        if (s.sec[v] < lo[v] || s.sec[v] > hi[v]) return false;
    if (budget_on) {
        int b = 0;
        for (int v = 0; v < nvars(); ++v) b += budget_sec[v] * s.sec[v];
        b += budget_jet * s.jet_degree() + budget_ds * s.ds_count();
        if (!budget_frame.empty()) b += budget_frame.at(s.frame);
        if (b > budget_cap) return false;
    }
    return true;
}

int OpenAlgebra::sym_grade(const Sym& s) const {
    int g = frame_grade.at(s.frame);
    for (int v = 0; v < nvars(); ++v) g += grade[v] * s.sec[v];
    for (int k = 0; k < njets(); ++k) {
        g += grade[etale[k]] * s.jet[k];
        if (s.ds & (1u << k)) g += grade[etale[k]];
    }
    return g;
}

std::string OpenAlgebra::sym_str(const Sym& s) const {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += "*";
        out += piece;
    };
    for (int v = 0; v < nvars(); ++v) {
        if (s.sec[v] == 0) continue;
        append(s.sec[v] == 1 ? vars[v] : vars[v] + "^" + std::to_string(s.sec[v]));
    }
    for (int k = 0; k < njets(); ++k) {
        if (s.jet[k] == 0) continue;
        std::string t = "t" + std::to_string(k + 1);
        append(s.jet[k] == 1 ? t : t + "^" + std::to_string(s.jet[k]));
    }
    for (int k = 0; k < njets(); ++k)
        if (s.ds & (1u << k)) append("ds" + std::to_string(k + 1));
    if (out.empty()) out = "1";
    if (rank > 1) out += "*e" + std::to_string(s.frame);
    return out;
}

void OpenAlgebra::validate() const {
    size_t nv = vars.size();
    if (lo.size() != nv || hi.size() != nv || grade.size() != nv || invertible.size() != nv)
        throw std::invalid_argument("open " + name + ": per-variable field size mismatch");
    for (size_t v = 0; v < nv; ++v) {
        if (lo[v] > hi[v])
            throw std::invalid_argument("open " + name + ": empty window for " + vars[v]);
        if (lo[v] < 0 && !invertible[v])
            throw std::invalid_argument("open " + name + ": negative exponents on the non-invertible variable " + vars[v]);
    }
    if (rank < 1 || frame_grade.size() != static_cast<size_t>(rank))
        throw std::invalid_argument("open " + name + ": frame data inconsistent with rank");
    for (int v : etale)
        if (v < 0 || v >= static_cast<int>(nv))
            throw std::invalid_argument("open " + name + ": etale index out of range");
    if (budget_on && budget_sec.size() != nv)
        throw std::invalid_argument("open " + name + ": budget weight size mismatch");
    if (!budget_frame.empty() && budget_frame.size() != static_cast<size_t>(rank))
        throw std::invalid_argument("open " + name + ": frame budget size mismatch");
}

SpaceBasis space_basis(const OpenAlgebra& alg, int ds_degree, int jet_cap) {
    alg.validate();
    SpaceBasis b;
    b.alg = &alg;
    b.ds_degree = ds_degree;
    b.jet_cap = jet_cap;
    int n = alg.njets();

    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == ds_degree) masks.push_back(m);

    std::vector<std::vector<int>> jet_exps;
    std::vector<int> je(n, 0);
    for (;;) {
        int total = 0;
        for (int e : je) total += e;
        if (total <= jet_cap || n == 0) jet_exps.push_back(je);
        int k = 0;
        while (k < n) {
            if (++je[k] > jet_cap) {
                je[k] = 0;
                ++k;
            } else {
                break;
            }
        }
        if (k == n) break;
        if (n == 0) break;
    }

    std::vector<int> se = alg.lo;
    for (;;) {
        for (const auto& jx : jet_exps) {
            for (unsigned mask : masks) {
                for (int f = 0; f < alg.rank; ++f) {
                    Sym s{se, jx, mask, f};
                    if (alg.admits(s)) b.syms.push_back(s);
                }
            }
        }
        int v = 0;
        while (v < alg.nvars()) {
            if (++se[v] > alg.hi[v]) {
                se[v] = alg.lo[v];
                ++v;
            } else {
                break;
            }
        }
        if (v == alg.nvars()) break;
    }

    std::sort(b.syms.begin(), b.syms.end());
    for (int i = 0; i < b.dim(); ++i) b.index.emplace(b.syms[i], i);
    return b;
}

std::vector<Rat> SpaceBasis::to_vector(const Section& s) const {
    std::vector<Rat> v(dim(), Rat(0));
    for (const auto& [sym, c] : s) {
        auto it = index.find(sym);
        if (it == index.end())
            throw std::runtime_error("window overflow on " + alg->name + ": symbol " +
                                     alg->sym_str(sym) + " is outside the stored basis");
        v[it->second] = c;
    }
    return v;
}

Section SpaceBasis::from_vector(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != dim())
        throw std::invalid_argument("section coordinate length mismatch on " + alg->name);
    Section s;
    for (int i = 0; i < dim(); ++i)
        if (v[i] != 0) s.emplace(syms[i], v[i]);
    return s;
}

/* c * prod_v s_v^{e_v} over the target algebra, where s_v = r_v - t_k for
   the etale variable behind jet k and every other variable must stay
   untouched (its second-factor expansion is not monomial). Truncated at
   total jet degree cap. */
Section taylor_expansion(const OpenAlgebra& tgt, const Rat& c, const std::vector<int>& e,
                         int cap) {
    Section acc;
    acc.emplace(Sym{zeros(tgt.nvars()), zeros(tgt.njets()), 0, 0}, c);
    for (int v = 0; v < tgt.nvars(); ++v) {
        if (e[v] == 0) continue;
        int k = -1;
        for (int j = 0; j < tgt.njets(); ++j)
            if (tgt.etale[j] == v) k = j;
        if (k < 0)
            throw std::runtime_error("restriction carries a jet coordinate through the variable " +
                                     tgt.vars[v] + " on " + tgt.name +
                                     ", which has no jet direction");
        Section factor;
        if (e[v] > 0) {
            for (int i = 0; i <= std::min(e[v], cap); ++i) {
                Sym s{zeros(tgt.nvars()), zeros(tgt.njets()), 0, 0};
                s.sec[v] = e[v] - i;
                s.jet[k] = i;
                factor.emplace(s, Rat(binomial(e[v], i)) * (i % 2 == 0 ? 1 : -1));
            }
        } else {
            int m = -e[v];
            for (int i = 0; i <= cap; ++i) {
                Sym s{zeros(tgt.nvars()), zeros(tgt.njets()), 0, 0};
                s.sec[v] = -m - i;
                s.jet[k] = i;
                factor.emplace(s, Rat(binomial(m + i - 1, i)));
            }
        }
        acc = section_mul(acc, factor, cap);
    }
    return acc;
}

namespace {

Section jet_image(const OpenAlgebra& src, const OpenAlgebra& tgt, const ResMap& f, int k,
                  int cap) {
    const MonoImage& mi = f.var_images.at(src.etale.at(k));
    Section out;
    Sym r{mi.exps, zeros(tgt.njets()), 0, 0};
    out.emplace(r, mi.coef);
    section_add(out, taylor_expansion(tgt, mi.coef, mi.exps, cap), Rat(-1));
    return out;
}

Section ds_image(const OpenAlgebra& src, const OpenAlgebra& tgt, const ResMap& f, int k,
                 int cap) {
    const MonoImage& mi = f.var_images.at(src.etale.at(k));
    Section out;
    for (int v = 0; v < tgt.nvars(); ++v) {
        if (mi.exps[v] == 0) continue;
        int kj = -1;
        for (int j = 0; j < tgt.njets(); ++j)
            if (tgt.etale[j] == v) kj = j;
        if (kj < 0)
            throw std::runtime_error("restriction maps a jet differential through the variable " +
                                     tgt.vars[v] + " on " + tgt.name +
                                     ", which has no jet direction");
        std::vector<int> e = mi.exps;
        e[v] -= 1;
        Section coeff = taylor_expansion(tgt, mi.coef * mi.exps[v], e, cap);
        Section dsv;
        Sym s{zeros(tgt.nvars()), zeros(tgt.njets()), 1u << kj, 0};
        dsv.emplace(s, Rat(1));
        section_add(out, section_mul(coeff, dsv, cap));
    }
    return out;
}

}  // namespace

Section apply_res(const OpenAlgebra& src, const OpenAlgebra& tgt, const ResMap& f,
                  const Sym& s, int jet_cap) {
    const MonoImage& fi = f.frame_images.at(s.frame);
    Sym base{fi.exps, zeros(tgt.njets()), 0, fi.frame};
    Rat coef = fi.coef;
    for (int v = 0; v < src.nvars(); ++v) {
        if (s.sec[v] == 0) continue;
        const MonoImage& vi = f.var_images.at(v);
        coef *= rat_pow(vi.coef, s.sec[v]);
        for (int w = 0; w < tgt.nvars(); ++w) base.sec[w] += s.sec[v] * vi.exps[w];
    }
    Section acc;
    acc.emplace(base, coef);
    for (int k = 0; k < src.njets(); ++k) {
        if (s.jet[k] == 0) continue;
        Section t_img = jet_image(src, tgt, f, k, jet_cap);
        for (int i = 0; i < s.jet[k]; ++i) acc = section_mul(acc, t_img, jet_cap);
    }
    for (int k = 0; k < src.njets(); ++k) {
        if (!(s.ds & (1u << k))) continue;
        acc = section_mul(acc, ds_image(src, tgt, f, k, jet_cap), jet_cap);
    }
    return acc;
}

RatMatrix res_matrix(const OpenAlgebra& src, const OpenAlgebra& tgt, const ResMap& f,
                     const SpaceBasis& sb, const SpaceBasis& tb) {
    RatMatrix m(tb.dim(), sb.dim());
    for (int j = 0; j < sb.dim(); ++j) {
        Section img = apply_res(src, tgt, f, sb.syms[j], tb.jet_cap);
        std::vector<Rat> col;
        try {
            col = tb.to_vector(img);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error("restriction " + src.name + " -> " + tgt.name + " of " +
                                     src.sym_str(sb.syms[j]) + ": " + e.what());
        }
        m.set_column(j, col);
    }
    return m;
}

const OpenAlgebra& Covering::open(const MultiIndex& s) const {
    auto it = opens.find(s);
    if (it == opens.end())
        throw std::invalid_argument("covering " + name + " has no open at " + s.str());
    return it->second;
}

const ResMap& Covering::res_map(const MultiIndex& small, const MultiIndex& big) const {
    auto it = res.find({small, big});
    if (it == res.end())
        throw std::invalid_argument("covering " + name + " has no restriction " + small.str() +
                                    " -> " + big.str());
    return it->second;
}

RatMatrix Covering::res_matrix_between(const MultiIndex& small, const MultiIndex& big,
                                       int ds_degree, int jet_cap) const {
    SpaceBasis tb = space_basis(open(big), ds_degree, jet_cap);
    if (small == big) return RatMatrix::identity(tb.dim());
    SpaceBasis sb = space_basis(open(small), ds_degree, jet_cap);
    return res_matrix(open(small), open(big), res_map(small, big), sb, tb);
}

namespace {

bool strictly_nested(const MultiIndex& s, const MultiIndex& t) {
    return s.entries.size() < t.entries.size() &&
           std::includes(t.entries.begin(), t.entries.end(), s.entries.begin(),
                         s.entries.end());
}

}  // namespace

void validate_covering(const Covering& cov, int jet_cap) {
    for (const auto& [idx, alg] : cov.opens) {
        alg.validate();
        if (alg.njets() != cov.n)
            throw std::invalid_argument("open " + alg.name + " carries " +
                                        std::to_string(alg.njets()) + " jet directions, covering " +
                                        cov.name + " declares " + std::to_string(cov.n));
    }
    std::vector<MultiIndex> keys;
    for (const auto& [idx, alg] : cov.opens) keys.push_back(idx);

    for (const auto& s : keys) {
        for (const auto& t : keys) {
            if (!strictly_nested(s, t)) continue;
            const ResMap& f = cov.res_map(s, t);
            const OpenAlgebra& src = cov.open(s);
            const OpenAlgebra& tgt = cov.open(t);
            for (int p = 0; p <= cov.n; ++p) {
                SpaceBasis sb = space_basis(src, p, jet_cap);
                for (const Sym& sym : sb.syms) {
                    int g = src.sym_grade(sym);
                    Section img = apply_res(src, tgt, f, sym, jet_cap);
                    for (const auto& [isym, c] : img) {
                        if (tgt.sym_grade(isym) != g)
                            throw std::runtime_error(
                                "restriction " + src.name + " -> " + tgt.name +
                                " is not graded: " + src.sym_str(sym) + " (grade " +
                                std::to_string(g) + ") meets " + tgt.sym_str(isym) + " (grade " +
                                std::to_string(tgt.sym_grade(isym)) + ")");
                    }
                }
            }
        }
    }

    for (const auto& s : keys) {
        for (const auto& t : keys) {
            if (!strictly_nested(s, t)) continue;
            for (const auto& v : keys) {
                if (!strictly_nested(t, v)) continue;
                for (int p = 0; p <= cov.n; ++p) {
                    RatMatrix direct = cov.res_matrix_between(s, v, p, jet_cap);
                    RatMatrix composite = cov.res_matrix_between(t, v, p, jet_cap) *
                                          cov.res_matrix_between(s, t, p, jet_cap);
                    if (direct != composite)
                        throw std::runtime_error("restrictions " + s.str() + " -> " + t.str() +
                                                 " -> " + v.str() + " do not compose to the direct one");
                }
            }
        }
    }
}

namespace {

int default_window(const SpaceParams& p) {
    return p.window < 0 ? std::abs(p.twist) + 4 : p.window;
}

MonoImage mono(Rat c, std::vector<int> e, int frame = 0) {
    return MonoImage{std::move(c), std::move(e), frame};
}

}  // namespace

Covering affine_space(int n, const SpaceParams& p) {
    if (n < 1) throw std::invalid_argument("affine space needs at least one variable");
    if (p.njets != 0 && p.njets != n)
        throw std::invalid_argument("affine space jets must match the variable count");
    int W = p.window < 0 ? 4 : p.window;
    Covering cov;
    cov.name = "affine_" + std::to_string(n);
    cov.m = 0;
    cov.n = p.njets;
    OpenAlgebra a;
    a.name = "A";
    for (int i = 0; i < n; ++i) {
        a.vars.push_back("x" + std::to_string(i + 1));
        a.lo.push_back(-W);
        a.hi.push_back(W);
        a.grade.push_back(1);
        a.invertible.push_back(true);
        if (p.njets != 0) a.etale.push_back(i);
    }
    a.rank = 1;
    a.frame_grade = {0};
    cov.opens.emplace(MultiIndex(0, {0}), a);

    SpaceBasis sb = space_basis(cov.open(MultiIndex(0, {0})), 0, 0);
    for (const Sym& s : sb.syms) cov.global_sections.push_back({{0, s}});
    return cov;
}

Covering p1_two_charts(const SpaceParams& p) {
    if (p.njets != 0 && p.njets != 1)
        throw std::invalid_argument("the projective line has one jet direction");
    int d = p.twist;
    int W = default_window(p);
    if (W < std::abs(d))
        throw std::invalid_argument("window too small for twist " + std::to_string(d));
    bool jets = p.njets != 0;
    int cmax = p.adic_order + 1;

    Covering cov;
    cov.name = "p1_two_charts";
    cov.m = 1;
    cov.n = jets ? 1 : 0;

    OpenAlgebra u0;
    u0.name = "U0";
    u0.vars = {"x"};
    u0.lo = {0};
    u0.hi = {W};
    u0.grade = {1};
    u0.invertible = {false};
    if (jets) u0.etale = {0};
    u0.frame_grade = {0};

    OpenAlgebra u1;
    u1.name = "U1";
    u1.vars = {"y"};
    u1.lo = {0};
    u1.hi = {W};
    u1.grade = {-1};
    u1.invertible = {false};
    if (jets) {
        u1.etale = {0};
        u1.budget_on = true;
        u1.budget_sec = {1};
        u1.budget_jet = 2;
        u1.budget_ds = 2;
        u1.budget_cap = W;
    }
    u1.frame_grade = {d};

    OpenAlgebra u01;
    u01.name = "U01";
    u01.vars = {"x"};
    u01.lo = {d - W - (jets ? cmax + 1 : 0)};
    u01.hi = {W};
    u01.grade = {1};
    u01.invertible = {true};
    if (jets) {
        u01.etale = {0};
        u01.budget_on = true;
        u01.budget_sec = {-1};
        u01.budget_jet = -1;
        u01.budget_ds = -1;
        u01.budget_cap = W - d;
    }
    u01.frame_grade = {0};

    MultiIndex i0(1, {0}), i1(1, {1}), i01(1, {0, 1});
    cov.opens.emplace(i0, u0);
    cov.opens.emplace(i1, u1);
    cov.opens.emplace(i01, u01);

    ResMap f0;
    f0.var_images = {mono(1, {1})};
    f0.frame_images = {mono(1, {0}, 0)};
    cov.res.emplace(std::make_pair(i0, i01), f0);

    ResMap f1;
    f1.var_images = {mono(1, {-1})};
    f1.frame_images = {mono(1, {d}, 0)};
    cov.res.emplace(std::make_pair(i1, i01), f1);

    for (int k = 0; k <= d; ++k) {
        std::map<int, Sym> fam;
        fam[0] = Sym{{k}, zeros(cov.n), 0, 0};
        fam[1] = Sym{{d - k}, zeros(cov.n), 0, 0};
        cov.global_sections.push_back(fam);
    }
    return cov;
}

Covering p1_three_charts(const SpaceParams& p) {
    if (p.njets != 0 && p.njets != 1)
        throw std::invalid_argument("the projective line has one jet direction");
    int d = p.twist;
    int W = default_window(p);
    if (W < std::abs(d))
        throw std::invalid_argument("window too small for twist " + std::to_string(d));
    bool jets = p.njets != 0;
    int cmax = p.adic_order + 1;

    Covering cov;
    cov.name = "p1_three_charts";
    cov.m = 2;
    cov.n = jets ? 1 : 0;

    auto chart_x = [&](const std::string& nm, bool with_u) {
        OpenAlgebra a;
        a.name = nm;
        a.vars = {"x"};
        a.lo = {0};
        a.hi = {W};
        a.grade = {1};
        a.invertible = {false};
        if (with_u) {
            a.vars.push_back("u");
            a.lo.push_back(0);
            a.hi.push_back(W);
            a.grade.push_back(0);
            a.invertible.push_back(false);
        }
        if (jets) a.etale = {0};
        a.frame_grade = {0};
        return a;
    };

    OpenAlgebra u0 = chart_x("U0", false);

    OpenAlgebra u1;
    u1.name = "U1";
    u1.vars = {"y"};
    u1.lo = {0};
    u1.hi = {W};
    u1.grade = {-1};
    u1.invertible = {false};
    if (jets) {
        u1.etale = {0};
        u1.budget_on = true;
        u1.budget_sec = {1};
        u1.budget_jet = 2;
        u1.budget_ds = 2;
        u1.budget_cap = W;
    }
    u1.frame_grade = {d};

    OpenAlgebra u2 = chart_x("U2", true);

    auto overlap_x = [&](const std::string& nm, bool with_u) {
        OpenAlgebra a;
        a.name = nm;
        a.vars = {"x"};
        a.lo = {d - W - (jets ? cmax + 1 : 0)};
        a.hi = {W};
        a.grade = {1};
        a.invertible = {true};
        if (with_u) {
            a.vars.push_back("u");
            a.lo.push_back(0);
            a.hi.push_back(W);
            a.grade.push_back(0);
            a.invertible.push_back(false);
        }
        if (jets) {
            a.etale = {0};
            a.budget_on = true;
            a.budget_sec = {-1};
            if (with_u) a.budget_sec.push_back(0);
            a.budget_jet = -1;
            a.budget_ds = -1;
            a.budget_cap = W - d;
        }
        a.frame_grade = {0};
        return a;
    };

    MultiIndex i0(2, {0}), i1(2, {1}), i2(2, {2});
    MultiIndex i01(2, {0, 1}), i02(2, {0, 2}), i12(2, {1, 2}), i012(2, {0, 1, 2});
    cov.opens.emplace(i0, u0);
    cov.opens.emplace(i1, u1);
    cov.opens.emplace(i2, u2);
    cov.opens.emplace(i01, overlap_x("U01", false));
    cov.opens.emplace(i02, chart_x("U02", true));
    cov.opens.emplace(i12, overlap_x("U12", true));
    cov.opens.emplace(i012, overlap_x("U012", true));

    auto id1 = [&]() {
        ResMap f;
        f.var_images = {mono(1, {1})};
        f.frame_images = {mono(1, {0}, 0)};
        return f;
    };
    auto x_into_xu = [&](int frame_exp) {
        ResMap f;
        f.var_images = {mono(1, {1, 0})};
        f.frame_images = {mono(1, {frame_exp, 0}, 0)};
        return f;
    };
    auto y_into_x = [&]() {
        ResMap f;
        f.var_images = {mono(1, {-1})};
        f.frame_images = {mono(1, {d}, 0)};
        return f;
    };
    auto y_into_xu = [&]() {
        ResMap f;
        f.var_images = {mono(1, {-1, 0})};
        f.frame_images = {mono(1, {d, 0}, 0)};
        return f;
    };
    auto xu_into_xu = [&]() {
        ResMap f;
        f.var_images = {mono(1, {1, 0}), mono(1, {0, 1})};
        f.frame_images = {mono(1, {0, 0}, 0)};
        return f;
    };

    cov.res.emplace(std::make_pair(i0, i01), id1());
    cov.res.emplace(std::make_pair(i0, i02), x_into_xu(0));
    cov.res.emplace(std::make_pair(i0, i012), x_into_xu(0));
    cov.res.emplace(std::make_pair(i1, i01), y_into_x());
    cov.res.emplace(std::make_pair(i1, i12), y_into_xu());
    cov.res.emplace(std::make_pair(i1, i012), y_into_xu());
    cov.res.emplace(std::make_pair(i2, i02), xu_into_xu());
    cov.res.emplace(std::make_pair(i2, i12), xu_into_xu());
    cov.res.emplace(std::make_pair(i2, i012), xu_into_xu());
    cov.res.emplace(std::make_pair(i01, i012), x_into_xu(0));
    cov.res.emplace(std::make_pair(i02, i012), xu_into_xu());
    cov.res.emplace(std::make_pair(i12, i012), xu_into_xu());

    for (int k = 0; k <= d; ++k) {
        std::map<int, Sym> fam;
        fam[0] = Sym{{k}, zeros(cov.n), 0, 0};
        fam[1] = Sym{{d - k}, zeros(cov.n), 0, 0};
        fam[2] = Sym{{k, 0}, zeros(cov.n), 0, 0};
        cov.global_sections.push_back(fam);
    }
    return cov;
}

ChainComplexQ alternating_cech_complex(const Covering& cov) {
    std::vector<std::vector<MultiIndex>> supports(cov.m + 1);
    std::vector<std::vector<int>> offsets(cov.m + 1);
    std::vector<int> dims(cov.m + 1, 0);
    for (int q = 0; q <= cov.m; ++q) {
        for (const MultiIndex& idx : nondegenerate_multiindices(cov.m, q)) {
            supports[q].push_back(idx);
            offsets[q].push_back(dims[q]);
            dims[q] += space_basis(cov.open(idx), 0, 0).dim();
        }
    }

    ChainComplexQ c(0, dims);
    for (int q = 0; q + 1 <= cov.m; ++q) {
        RatMatrix dq(dims[q + 1], dims[q]);
        for (size_t ti = 0; ti < supports[q + 1].size(); ++ti) {
            const MultiIndex& t = supports[q + 1][ti];
            for (int j = 0; j <= q + 1; ++j) {
                std::vector<int> ent = t.entries;
                ent.erase(ent.begin() + j);
                MultiIndex s(cov.m, ent);
                size_t si = 0;
                while (!(supports[q][si] == s)) ++si;
                RatMatrix block = cov.res_matrix_between(s, t, 0, 0);
                Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
                for (int r = 0; r < block.rows(); ++r)
                    for (const auto& [cc, v] : block.row(r))
                        dq.add_to(offsets[q + 1][ti] + r, offsets[q][si] + cc, v * sign);
            }
        }
        c.set_diff(q, dq);
    }
    c.validate();
    return c;
}

}  // namespace mixres
