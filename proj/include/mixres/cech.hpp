#ifndef MIXRES_CECH_HPP
#define MIXRES_CECH_HPP

#include <map>
#include <vector>

#include "mixres/cosimplicial.hpp"
#include "mixres/spaces.hpp"
#include "mixres/ts.hpp"

namespace mixres {

/* Normalized complex of the nerve module on plain sections; agrees with
   alternating_cech_complex degree by degree. */
ChainComplexQ standard_cech_complex(const Covering& cov);

/* Totalized complex of the nerve module at the given coefficient budget. */
ChainComplexQ commutative_cech_complex(const Covering& cov, int budget);

/* Level-0 coordinates of one declared global section family: the component
   at every vertex index is the family's monomial on that chart. The jet cap
   must match the one the module was built with. */
std::vector<Rat> global_family_level0(const Covering& cov, const CosimplicialModuleQ& c,
                                      const std::map<int, Sym>& fam, int jet_cap = 0);

/* Coordinates of the same family inside the degree-0 totalization: every
   nondegenerate component is the restriction of the family times the
   constant form. Throws if the family fails to satisfy the compatibility
   equations. */
std::vector<Rat> global_family_ts0(const Covering& cov, const CosimplicialModuleQ& c,
                                   const TSComplexData& t, const std::map<int, Sym>& fam,
                                   int jet_cap = 0);

}  // namespace mixres

#endif
