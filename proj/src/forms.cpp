#include "mixres/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixres {

int merge_sign(unsigned mask_a, unsigned mask_b) {
    int inversions = 0;
    for (unsigned j = 0; j < 32; ++j) {
        if (!(mask_b & (1u << j))) continue;
        unsigned higher = mask_a >> (j + 1);
        inversions += __builtin_popcount(higher);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

PolyForm PolyForm::constant(int l, const Rat& c) {
    PolyForm f(l);
    FormTerm t;
    t.exps.assign(l, 0);
    f.add_term(t, c);
    return f;
}

PolyForm PolyForm::coord(int i, int l) {
    if (i < 0 || i > l) throw std::invalid_argument("coord index outside [0,l]");
    PolyForm f(l);
    if (i == 0) {
        FormTerm one;
        one.exps.assign(l, 0);
        f.add_term(one, Rat(1));
        for (int j = 1; j <= l; ++j) {
            FormTerm t;
            t.exps.assign(l, 0);
            t.exps[j - 1] = 1;
            f.add_term(t, Rat(-1));
        }
    } else {
        FormTerm t;
        t.exps.assign(l, 0);
        t.exps[i - 1] = 1;
        f.add_term(t, Rat(1));
    }
    return f;
}

PolyForm PolyForm::dcoord(int i, int l) {
    if (i < 0 || i > l) throw std::invalid_argument("dcoord index outside [0,l]");
    PolyForm f(l);
    if (i == 0) {
        for (int j = 1; j <= l; ++j) {
            FormTerm t;
            t.exps.assign(l, 0);
            t.mask = 1u << (j - 1);
            f.add_term(t, Rat(-1));
        }
    } else {
        FormTerm t;
        t.exps.assign(l, 0);
        t.mask = 1u << (i - 1);
        f.add_term(t, Rat(1));
    }
    return f;
}

void PolyForm::add_term(const FormTerm& t, const Rat& c) {
    if (static_cast<int>(t.exps.size()) != l_)
        throw std::invalid_argument("form term arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
    if (l_ != o.l_) throw std::invalid_argument("form addition on different simplices");
    PolyForm out = *this;
    for (const auto& [t, c] : o.terms_) out.add_term(t, c);
    return out;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + o.scaled(Rat(-1)); }

PolyForm PolyForm::scaled(const Rat& c) const {
    PolyForm out(l_);
    if (c == 0) return out;
    for (const auto& [t, v] : terms_) out.terms_.emplace(t, v * c);
    return out;
}

PolyForm PolyForm::wedge(const PolyForm& o) const {
    if (l_ != o.l_) throw std::invalid_argument("wedge on different simplices");
    PolyForm out(l_);
    for (const auto& [ta, ca] : terms_) {
        for (const auto& [tb, cb] : o.terms_) {
            if (ta.mask & tb.mask) continue;
            FormTerm t;
            t.exps.resize(l_);
            for (int i = 0; i < l_; ++i) t.exps[i] = ta.exps[i] + tb.exps[i];
            t.mask = ta.mask | tb.mask;
            int sign = merge_sign(ta.mask, tb.mask);
            out.add_term(t, ca * cb * sign);
        }
    }
    return out;
}

PolyForm PolyForm::d() const {
    PolyForm out(l_);
    for (const auto& [t, c] : terms_) {
        for (int i = 1; i <= l_; ++i) {
            int a = t.exps[i - 1];
            if (a == 0) continue;
            unsigned bit = 1u << (i - 1);
            if (t.mask & bit) continue;
            FormTerm nt = t;
            nt.exps[i - 1] -= 1;
            nt.mask |= bit;
            int sign = merge_sign(bit, t.mask);
            out.add_term(nt, c * a * sign);
        }
    }
    return out;
}

PolyForm PolyForm::pullback(const SimplicialMap& alpha) const {
    if (alpha.dst != l_)
        throw std::invalid_argument("pullback: map target " + std::to_string(alpha.dst) +
                                    " differs from simplex dimension " + std::to_string(l_));
    int k = alpha.src;
    /* Coordinate i of the target pulls back to the sum of source coordinates
       in the fiber alpha^{-1}(i); empty fibers give zero. */
    std::vector<PolyForm> coord_sub(l_ + 1, PolyForm::zero(k));
    std::vector<PolyForm> dcoord_sub(l_ + 1, PolyForm::zero(k));
    for (int i = 0; i <= l_; ++i) {
        for (int j = 0; j <= k; ++j) {
            if (alpha.values[j] != i) continue;
            coord_sub[i] = coord_sub[i] + PolyForm::coord(j, k);
            dcoord_sub[i] = dcoord_sub[i] + PolyForm::dcoord(j, k);
        }
    }
    PolyForm out(k);
    for (const auto& [t, c] : terms_) {
        PolyForm acc = PolyForm::constant(k, c);
        for (int i = 1; i <= l_; ++i)
            for (int e = 0; e < t.exps[i - 1]; ++e) acc = acc.wedge(coord_sub[i]);
        for (int i = 1; i <= l_; ++i)
            if (t.mask & (1u << (i - 1))) acc = acc.wedge(dcoord_sub[i]);
        out = out + acc;
    }
    return out;
}

Rat PolyForm::integrate() const {
    unsigned full = l_ == 0 ? 0u : (1u << l_) - 1u;
    Rat total(0);
    for (const auto& [t, c] : terms_) {
        if (t.mask != full) continue;
        Int num = 1;
        int s = 0;
        for (int e : t.exps) {
            Int f;
            mpz_fac_ui(f.get_mpz_t(), e);
            num *= f;
            s += e;
        }
        Int den;
        mpz_fac_ui(den.get_mpz_t(), l_ + s);
        Rat weight(num, den);
        weight.canonicalize();
        total += c * weight;
    }
    return total;
}

PolyForm PolyForm::component(int q) const {
    PolyForm out(l_);
    for (const auto& [t, c] : terms_)
        if (t.form_degree() == q) out.terms_.emplace(t, c);
    return out;
}

int PolyForm::max_coeff_degree() const {
    int best = 0;
    for (const auto& [t, c] : terms_) best = std::max(best, t.coeff_degree());
    return best;
}

std::string PolyForm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + rat_str(c) + ")";
        for (int i = 0; i < l_; ++i)
            if (t.exps[i] > 0) s += "*t" + std::to_string(i + 1) +
                                    (t.exps[i] > 1 ? "^" + std::to_string(t.exps[i]) : "");
        for (int i = 1; i <= l_; ++i)
            if (t.mask & (1u << (i - 1))) s += "*dt" + std::to_string(i);
    }
    return s;
}

PolyForm whitney(const std::vector<int>& face, int l) {
    for (size_t k = 0; k < face.size(); ++k) {
        if (face[k] < 0 || face[k] > l)
            throw std::invalid_argument("whitney: vertex outside simplex");
        if (k > 0 && face[k] <= face[k - 1])
            throw std::invalid_argument("whitney: face must be strictly increasing");
    }
    int p = static_cast<int>(face.size()) - 1;
    PolyForm out = PolyForm::zero(l);
    for (int j = 0; j <= p; ++j) {
        PolyForm term = PolyForm::coord(face[j], l);
        for (int k = 0; k <= p; ++k) {
            if (k == j) continue;
            term = term.wedge(PolyForm::dcoord(face[k], l));
        }
        out = out + term.scaled(Rat(j % 2 == 0 ? 1 : -1));
    }
    return out.scaled(rat_factorial(p));
}

std::vector<FormTerm> enumerate_form_terms(int l, int q, int cap) {
    std::vector<FormTerm> out;
    if (q < 0 || q > l) return out;
    std::vector<unsigned> masks;
    unsigned full = l == 0 ? 0u : (1u << l) - 1u;
    for (unsigned m = 0; m <= full; ++m)
        if (__builtin_popcount(m) == q) masks.push_back(m);
    if (l == 0 && q == 0) masks = {0u};
    std::vector<int> exps(l, 0);
    std::vector<std::vector<int>> exp_lists;
    /* Enumerate exponent vectors of total degree <= cap in lex order. */
    while (true) {
        int total = 0;
        for (int e : exps) total += e;
        if (total <= cap) exp_lists.push_back(exps);
        int i = l - 1;
        while (i >= 0) {
            ++exps[i];
            int t2 = 0;
            for (int e : exps) t2 += e;
            if (t2 <= cap) break;
            exps[i] = 0;
            --i;
        }
        if (i < 0) break;
        if (l == 0) break;
    }
    if (l == 0) exp_lists = {{}};
    for (unsigned m : masks)
        for (const auto& e : exp_lists) {
            FormTerm t;
            t.exps = e;
            t.mask = m;
            out.push_back(t);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Rat NormalizedCochain::at(const std::vector<int>& face) const {
    auto it = values.find(face);
    return it == values.end() ? Rat(0) : it->second;
}

void NormalizedCochain::set(const std::vector<int>& face, const Rat& v) {
    for (size_t k = 0; k < face.size(); ++k) {
        if (face[k] < 0 || face[k] > l) throw std::invalid_argument("cochain: vertex outside simplex");
        if (k > 0 && face[k] <= face[k - 1])
            throw std::invalid_argument("cochain: face must be strictly increasing");
    }
    if (v == 0)
        values.erase(face);
    else
        values[face] = v;
}

NormalizedCochain NormalizedCochain::coboundary() const {
    NormalizedCochain out(l);
    /* (delta c)(G) collects c over the facets of each nondegenerate face G. */
    std::map<std::vector<int>, Rat> acc;
    for (const auto& [face, v] : values) {
        int p = static_cast<int>(face.size()) - 1;
        /* Insert every absent vertex into the face and record the sign of
           its position. */
        for (int vtx = 0; vtx <= l; ++vtx) {
            if (std::binary_search(face.begin(), face.end(), vtx)) continue;
            std::vector<int> bigger = face;
            auto pos = std::upper_bound(bigger.begin(), bigger.end(), vtx);
            int k = static_cast<int>(pos - bigger.begin());
            bigger.insert(pos, vtx);
            (void)p;
            Rat signed_v = v * (k % 2 == 0 ? 1 : -1);
            auto it = acc.find(bigger);
            if (it == acc.end())
                acc.emplace(bigger, signed_v);
            else
                it->second += signed_v;
        }
    }
    for (const auto& [face, v] : acc)
        if (v != 0) out.values.emplace(face, v);
    return out;
}

NormalizedCochain rho(const PolyForm& u) {
    int l = u.simplex_dim();
    NormalizedCochain out(l);
    for (int p = 0; p <= l; ++p) {
        PolyForm part = u.component(p);
        if (part.is_zero()) continue;
        for (const MultiIndex& f : nondegenerate_multiindices(l, p)) {
            SimplicialMap incl(p, l, f.entries);
            Rat v = part.pullback(incl).integrate();
            if (v != 0) out.values.emplace(f.entries, v);
        }
    }
    return out;
}

PolyForm phi(const NormalizedCochain& c) {
    PolyForm out = PolyForm::zero(c.l);
    for (const auto& [face, v] : c.values) out = out + whitney(face, c.l).scaled(v);
    return out;
}

}  // namespace mixres
