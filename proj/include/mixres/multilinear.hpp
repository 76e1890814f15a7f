#ifndef MIXRES_MULTILINEAR_HPP
#define MIXRES_MULTILINEAR_HPP

#include <map>
#include <vector>

#include "mixres/cosimplicial.hpp"
#include "mixres/spaces.hpp"
#include "mixres/ts.hpp"

namespace mixres {

/* A level-indexed multilinear operation on nerve modules: one matrix per
   nondegenerate index, mapping the tensor product of the argument blocks to
   the target block. Tensor slots are flattened in row-major order over the
   argument tuple. Degenerate indices reuse the matrix of their support. */
struct TSFamily {
    std::map<MultiIndex, RatMatrix> maps;

    const RatMatrix& map_at(const MultiIndex& idx) const;
};

/* Checks that the family commutes with every face restriction between
   nondegenerate indices of the given modules. Throws with the offending
   index on failure. */
void validate_family(const TSFamily& f,
                     const std::vector<const CosimplicialModuleQ*>& sources,
                     const CosimplicialModuleQ& target);

/* Applies the family componentwise to totalization elements given in kernel
   coordinates at the stated form degrees: on every nondegenerate index the
   simplex forms of the arguments are wedged and the module slots fed through
   the family matrix. Returns kernel coordinates of the target totalization,
   whose coefficient budget must absorb every product term. */
std::vector<Rat> assemble_multilinear(const TSFamily& f,
                                      const std::vector<const TSComplexData*>& args_ts,
                                      const std::vector<int>& form_degrees,
                                      const std::vector<std::vector<Rat>>& args,
                                      const TSComplexData& target);

/* Section multiplication as a family. The three coverings must share chart
   count and per-open variable lists, carry rank-one modules on plain section
   spaces, and every product monomial must fit the target window. */
TSFamily mul_family(const Covering& a, const Covering& b, const Covering& out);

/* Scalar multiplication on every block of one module. */
TSFamily scalar_family(const CosimplicialModuleQ& mod, const Rat& c);

}  // namespace mixres

#endif
