#include "mixres/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixres {

SimplicialMap::SimplicialMap(int src_dim, int dst_dim, std::vector<int> vals)
    : src(src_dim), dst(dst_dim), values(std::move(vals)) {
    if (src < 0 || dst < 0 || static_cast<int>(values.size()) != src + 1)
        throw std::invalid_argument("simplicial map: value list length must be src+1");
    for (size_t k = 0; k < values.size(); ++k) {
        if (values[k] < 0 || values[k] > dst)
            throw std::invalid_argument("simplicial map: value " + std::to_string(values[k]) +
                                        " outside [0," + std::to_string(dst) + "]");
        if (k > 0 && values[k] < values[k - 1])
            throw std::invalid_argument("simplicial map: values must be weakly increasing");
    }
}

SimplicialMap SimplicialMap::identity(int p) {
    std::vector<int> v(p + 1);
    for (int k = 0; k <= p; ++k) v[k] = k;
    return SimplicialMap(p, p, std::move(v));
}

SimplicialMap SimplicialMap::face(int i, int p) {
    if (i < 0 || i > p + 1) throw std::invalid_argument("face index outside [0,p+1]");
    std::vector<int> v(p + 1);
    for (int k = 0; k <= p; ++k) v[k] = k < i ? k : k + 1;
    return SimplicialMap(p, p + 1, std::move(v));
}

SimplicialMap SimplicialMap::degeneracy(int i, int p) {
    if (p < 1 || i < 0 || i > p - 1) throw std::invalid_argument("degeneracy index outside [0,p-1]");
    std::vector<int> v(p + 1);
    for (int k = 0; k <= p; ++k) v[k] = k <= i ? k : k - 1;
    return SimplicialMap(p, p - 1, std::move(v));
}

bool SimplicialMap::is_identity() const {
    if (src != dst) return false;
    for (int k = 0; k <= src; ++k)
        if (values[k] != k) return false;
    return true;
}

bool SimplicialMap::is_injective() const {
    for (size_t k = 1; k < values.size(); ++k)
        if (values[k] == values[k - 1]) return false;
    return true;
}

bool SimplicialMap::is_surjective() const {
    std::vector<bool> hit(dst + 1, false);
    for (int v : values) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool SimplicialMap::operator<(const SimplicialMap& o) const {
    if (src != o.src) return src < o.src;
    if (dst != o.dst) return dst < o.dst;
    return values < o.values;
}

std::string SimplicialMap::str() const {
    std::string s = "[" + std::to_string(src) + "]->[" + std::to_string(dst) + "]:(";
    for (size_t k = 0; k < values.size(); ++k)
        s += (k ? "," : "") + std::to_string(values[k]);
    return s + ")";
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.dst != g.src)
        throw std::invalid_argument("compose: middle dimensions differ (" + f.str() + " then " +
                                    g.str() + ")");
    std::vector<int> v(f.src + 1);
    for (int k = 0; k <= f.src; ++k) v[k] = g.values[f.values[k]];
    return SimplicialMap(f.src, g.dst, std::move(v));
}

std::vector<SimplicialMap> enumerate_maps(int p, int q) {
    std::vector<SimplicialMap> out;
    std::vector<int> v(p + 1, 0);
    while (true) {
        out.emplace_back(p, q, v);
        int k = p;
        while (k >= 0 && v[k] == q) --k;
        if (k < 0) break;
        int nv = v[k] + 1;
        for (int j = k; j <= p; ++j) v[j] = nv;
    }
    return out;
}

SimplicialMap FactorizedMap::compose_back() const {
    SimplicialMap acc = SimplicialMap::identity(src);
    int level = src;
    for (int j : degeneracies) {
        acc = compose(SimplicialMap::degeneracy(j, level), acc);
        --level;
    }
    for (int i : faces) {
        acc = compose(SimplicialMap::face(i, level), acc);
        ++level;
    }
    if (level != dst) throw std::logic_error("factorization recomposes to wrong level");
    return acc;
}

FactorizedMap factorize(const SimplicialMap& m) {
    FactorizedMap out;
    out.src = m.src;
    out.dst = m.dst;
    /* Degeneracy word: positions where consecutive values repeat, read on the
       successively collapsed map; face word: values missing from the image. */
    SimplicialMap cur = m;
    while (!cur.is_injective()) {
        int j = 0;
        while (cur.values[j] != cur.values[j + 1]) ++j;
        out.degeneracies.push_back(j);
        std::vector<int> v = cur.values;
        v.erase(v.begin() + j);
        cur = SimplicialMap(cur.src - 1, cur.dst, std::move(v));
    }
    std::vector<bool> hit(m.dst + 1, false);
    for (int v : cur.values) hit[v] = true;
    for (int v = m.dst; v >= 0; --v)
        if (!hit[v]) out.faces.push_back(v);
    std::reverse(out.faces.begin(), out.faces.end());
    return out;
}

MultiIndex::MultiIndex(int bound, std::vector<int> ent) : m(bound), entries(std::move(ent)) {
    if (m < 0 || entries.empty())
        throw std::invalid_argument("multi-index: needs at least one entry");
    for (size_t k = 0; k < entries.size(); ++k) {
        if (entries[k] < 0 || entries[k] > m)
            throw std::invalid_argument("multi-index entry outside [0," + std::to_string(m) + "]");
        if (k > 0 && entries[k] < entries[k - 1])
            throw std::invalid_argument("multi-index entries must be weakly increasing");
    }
}

bool MultiIndex::nondegenerate() const {
    for (size_t k = 1; k < entries.size(); ++k)
        if (entries[k] == entries[k - 1]) return false;
    return true;
}

MultiIndex MultiIndex::support() const {
    std::vector<int> s;
    for (int e : entries)
        if (s.empty() || s.back() != e) s.push_back(e);
    return MultiIndex(m, std::move(s));
}

SimplicialMap MultiIndex::collapse() const {
    MultiIndex sup = support();
    std::vector<int> v(entries.size());
    for (size_t k = 0; k < entries.size(); ++k) {
        auto it = std::lower_bound(sup.entries.begin(), sup.entries.end(), entries[k]);
        v[k] = static_cast<int>(it - sup.entries.begin());
    }
    return SimplicialMap(dim(), sup.dim(), std::move(v));
}

bool MultiIndex::operator<(const MultiIndex& o) const {
    if (m != o.m) return m < o.m;
    if (entries.size() != o.entries.size()) return entries.size() < o.entries.size();
    return entries < o.entries;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (size_t k = 0; k < entries.size(); ++k) s += (k ? "," : "") + std::to_string(entries[k]);
    return s + ")";
}

MultiIndex act(const MultiIndex& i, const SimplicialMap& alpha) {
    if (alpha.dst != i.dim())
        throw std::invalid_argument("act: map target must equal multi-index dimension");
    std::vector<int> v(alpha.src + 1);
    for (int k = 0; k <= alpha.src; ++k) v[k] = i.entries[alpha.values[k]];
    return MultiIndex(i.m, std::move(v));
}

std::vector<MultiIndex> all_multiindices(int m, int q) {
    std::vector<MultiIndex> out;
    for (const SimplicialMap& f : enumerate_maps(q, m)) out.emplace_back(m, f.values);
    return out;
}

std::vector<MultiIndex> nondegenerate_multiindices(int m, int q) {
    std::vector<MultiIndex> out;
    for (const MultiIndex& i : all_multiindices(m, q))
        if (i.nondegenerate()) out.push_back(i);
    return out;
}

}  // namespace mixres
