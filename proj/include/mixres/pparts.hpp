#ifndef MIXRES_PPARTS_HPP
#define MIXRES_PPARTS_HPP

#include "mixres/complex.hpp"
#include "mixres/spaces.hpp"

namespace mixres {

/* Grothendieck connection at the symbol level: chart monomials and frames
   are flat, each jet factor t turns into -ds of its etale coordinate, with
   the wedge sign of merging that ds into the existing mask. Throws if the
   open has no jet directions. */
Section apply_connection(const OpenAlgebra& alg, const Section& s);

/* Matrix of the connection from ds-degree p at src_cap to ds-degree p+1 at
   dst_cap. The image of a jet-capped space drops one jet degree, so any
   dst_cap >= src_cap - 1 holds it. */
RatMatrix connection_matrix(const OpenAlgebra& alg, int ds_degree, int src_cap, int dst_cap);

/* The connection complex of one open: ds-degree p holds jets of degree at
   most jet_cap - p, so the total space is the sum of the whole weight
   pieces up to jet_cap. Degree-0 cohomology is spanned by the jet-free
   symbols; the higher cohomology vanishes. */
ChainComplexQ connection_complex(const OpenAlgebra& alg, int jet_cap);

/* Constant-coefficient weight piece of the connection in n jet variables:
   degree p holds the jet monomials of degree w-p times the ds-monomials of
   degree p, and the differential sends each jet factor to -ds. */
ChainComplexQ weight_piece(int n, int w);

}  // namespace mixres

#endif
