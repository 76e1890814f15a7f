#ifndef MIXRES_COSIMPLICIAL_HPP
#define MIXRES_COSIMPLICIAL_HPP

#include <map>
#include <vector>

#include "mixres/complex.hpp"
#include "mixres/delta.hpp"
#include "mixres/matrix.hpp"
#include "mixres/spaces.hpp"

namespace mixres {

/* One direct summand of a cosimplicial level, labeled by its nerve index. */
struct LevelBlock {
    MultiIndex idx;
    int offset = 0;
    int dim = 0;
};

/* Cosimplicial Q-module stored on levels 0..m+1 through one structure
   matrix per monotone map between stored levels (the map [p] -> [q] acts
   level p -> level q). blocks optionally records a direct-sum decomposition
   of each level by nerve index, with every structure map acting blockwise:
   the component at i is fed from the component at i∘α. */
struct CosimplicialModuleQ {
    int m = 0;
    std::vector<int> dims;  // levels 0..m+1
    std::map<SimplicialMap, RatMatrix> structure;
    std::vector<std::vector<LevelBlock>> blocks;

    int top_level() const { return m + 1; }
    bool decomposed() const { return !blocks.empty(); }
    const RatMatrix& structure_map(const SimplicialMap& a) const;
    const LevelBlock& block_at(int level, const MultiIndex& idx) const;
    /* Submatrix of structure_map(a) from the component at i∘a to the
       component at i, with i at level a.dst. */
    RatMatrix component_block(const SimplicialMap& a, const MultiIndex& i) const;
    /* Shape of every matrix, identities to identities, and exhaustive
       functoriality over composable pairs between stored levels. */
    void validate() const;
};

/* Nerve module of a covering: level q is the direct sum over all weakly
   increasing (q+1)-tuples of the module sections on the open their support
   meets, and a monotone map acts by reindexing followed by restriction. */
CosimplicialModuleQ cech_cosimplicial(const Covering& cov, int ds_degree, int jet_cap);

/* Every level one fixed space, every structure map the identity. */
CosimplicialModuleQ constant_cosimplicial(int m, int dim);

/* Intersection of the codegeneracy kernels, carrying the alternating
   coface sum as differential. kernels[q] columns express the normalized
   degree-q space inside level q. */
struct NormalizedComplexData {
    ChainComplexQ complex;  // degrees 0..m+1
    std::vector<RatMatrix> kernels;
};
NormalizedComplexData standard_normalization(const CosimplicialModuleQ& c);

}  // namespace mixres

#endif
