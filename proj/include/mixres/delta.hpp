#ifndef MIXRES_DELTA_HPP
#define MIXRES_DELTA_HPP

#include <string>
#include <vector>

#include "mixres/rational.hpp"

namespace mixres {

/* Monotone map [src] -> [dst] of finite ordinals, stored by its value list
   (values[k] = image of k). */
struct SimplicialMap {
    int src = 0;
    int dst = 0;
    std::vector<int> values;

    SimplicialMap() = default;
    SimplicialMap(int src_dim, int dst_dim, std::vector<int> vals);

    static SimplicialMap identity(int p);
    /* Coface [p] -> [p+1] skipping value i, 0 <= i <= p+1. */
    static SimplicialMap face(int i, int p);
    /* Codegeneracy [p] -> [p-1] taking value i twice, 0 <= i <= p-1. */
    static SimplicialMap degeneracy(int i, int p);

    int operator()(int k) const { return values.at(k); }
    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool operator==(const SimplicialMap& o) const {
        return src == o.src && dst == o.dst && values == o.values;
    }
    bool operator<(const SimplicialMap& o) const;
    std::string str() const;
};

/* g ∘ f for f: [p] -> [q], g: [q] -> [r]. */
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/* All monotone maps [p] -> [q] in lexicographic order of value lists. */
std::vector<SimplicialMap> enumerate_maps(int p, int q);

/* Epi-mono factorization as coface/codegeneracy words. Both index lists are
   in application order starting from the source: first every degeneracy
   (degeneracies[0] acts on [src]), then every face. compose_back() rebuilds
   the map from the words; factorize ∘ compose_back is the identity on
   monotone maps, which the round-trip tests pin down. */
struct FactorizedMap {
    std::vector<int> faces;
    std::vector<int> degeneracies;
    int src = 0;
    int dst = 0;
    SimplicialMap compose_back() const;
};
FactorizedMap factorize(const SimplicialMap& m);

/* Weakly increasing tuple (i_0 <= ... <= i_q) in {0..m}: a q-simplex of the
   nerve of the index set, possibly degenerate. */
struct MultiIndex {
    int m = 0;
    std::vector<int> entries;

    MultiIndex() = default;
    MultiIndex(int bound, std::vector<int> ent);
    int dim() const { return static_cast<int>(entries.size()) - 1; }
    bool nondegenerate() const;
    /* Strictly increasing support (vertex set) as a multi-index. */
    MultiIndex support() const;
    /* The unique surjection s with this = support() ∘ s. */
    SimplicialMap collapse() const;
    bool operator==(const MultiIndex& o) const { return m == o.m && entries == o.entries; }
    bool operator<(const MultiIndex& o) const;
    std::string str() const;
};

/* i ∘ alpha for alpha: [p] -> [dim i]. */
MultiIndex act(const MultiIndex& i, const SimplicialMap& alpha);

std::vector<MultiIndex> all_multiindices(int m, int q);
std::vector<MultiIndex> nondegenerate_multiindices(int m, int q);

}  // namespace mixres

#endif
