#ifndef MIXRES_TS_HPP
#define MIXRES_TS_HPP

#include <vector>

#include "mixres/cosimplicial.hpp"
#include "mixres/forms.hpp"

namespace mixres {

/* One stored component family of the totalized complex at a fixed cochain
   degree: the admissible form monomials on the l-simplex tensored with the
   module block at one nondegenerate nerve index of dimension l. Columns are
   ordered form-major: (form index f, module index v) -> f*space_dim + v. */
struct AmbientBlock {
    MultiIndex idx;
    int level = 0;
    std::vector<FormTerm> forms;
    int space_dim = 0;
    int offset = 0;
};

/* Totalization of a decomposed cosimplicial module by simplex forms.
   Elements are families of forms tensored with module components, stored at
   nondegenerate indices only; components at degenerate indices are the
   pullbacks along the collapse surjection. The face compatibility
   conditions are imposed as linear equations and kernels[q] expresses the
   solution space inside the ambient block sum.

   Form coefficients at form degree q are truncated at degree
   budget + m - q: the exterior derivative lowers coefficient degree by one
   and affine pullbacks never raise it, so these spaces are closed under the
   differential and under every structure map, and each weight slice of a
   simplex factor is kept whole. */
struct TSComplexData {
    int budget = 1;  // coefficient degree allowed at top form degree
    ChainComplexQ complex;  // degrees 0..m+1
    std::vector<int> ambient_dims;
    std::vector<std::vector<AmbientBlock>> blocks;  // per degree
    std::vector<RatMatrix> kernels;

    const AmbientBlock* find_block(int degree, const MultiIndex& idx) const;
};

/* Requires the level decomposition and budget >= 1 (the interpolating form
   of a face has coefficient degree 1). */
TSComplexData ts_complex(const CosimplicialModuleQ& c, int budget);

/* Fiber integration over each simplex factor, landing in the normalized
   complex; a chain map. */
ChainMapQ ts_integrate(const TSComplexData& t, const NormalizedComplexData& n,
                       const CosimplicialModuleQ& c);

/* Interpolating-form section of ts_integrate: a chain map with
   ts_integrate ∘ ts_whitney = identity. */
ChainMapQ ts_whitney(const TSComplexData& t, const NormalizedComplexData& n,
                     const CosimplicialModuleQ& c);

/* Reconstructs every component of every stored basis family at every level
   up to m+1 and rechecks the compatibility square for every monotone map
   between stored levels; throws with the offending map and index. */
void validate_ts(const CosimplicialModuleQ& c, const TSComplexData& t);

}  // namespace mixres

#endif
