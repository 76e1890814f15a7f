#ifndef MIXRES_MIXED_HPP
#define MIXRES_MIXED_HPP

#include <map>
#include <utility>
#include <vector>

#include "mixres/cech.hpp"
#include "mixres/complex.hpp"
#include "mixres/cosimplicial.hpp"
#include "mixres/multilinear.hpp"
#include "mixres/spaces.hpp"
#include "mixres/ts.hpp"

namespace mixres {

/* Bigraded assembly of the jet-form double complex over one covering. Row p
   holds the totalized nerve complex of the ds-degree-p section spaces,
   truncated in the jet variables at cap N + (njets - p), so the connection
   lands exactly in the next row's cap and commutes with every restriction.
   A uniform cap keeps every row at N instead; that variant only forms a
   complex over a single chart, where no restriction maps interfere with the
   truncation.

   total carries degree p+q with blocks ordered by p ascending and
   differential d = ∂ + (-1)^q ∇. nabla stores the plain connection from
   (p,q) to (p+1,q) in kernel coordinates, without the sign. */
struct MixedComplex {
    const Covering* cov = nullptr;
    int budget = 1;
    int adic_order = 1;
    bool graded_caps = true;
    std::vector<int> caps;                           // per row p = 0..njets
    std::vector<CosimplicialModuleQ> modules;        // per row
    std::vector<TSComplexData> rows;                 // per row
    std::map<std::pair<int, int>, RatMatrix> nabla;  // (p,q) -> row p+1
    ChainComplexQ total;
    std::map<std::pair<int, int>, int> offsets;  // (p,q) inside degree p+q

    int nrows() const { return static_cast<int>(rows.size()); }
    int dim_at(int p, int q) const;
    /* Degree-(p+q) coordinates with v in the (p,q) slot, zero elsewhere. */
    std::vector<Rat> embed(int p, int q, const std::vector<Rat>& v) const;
    std::vector<Rat> component(int p, int q, const std::vector<Rat>& total_vec) const;
};

/* Row p at jet cap adic_order + (njets - p). The covering's windows must
   accommodate the row-0 cap; a transition overflowing them is reported as a
   window overflow with the offending restriction and symbol. */
MixedComplex build_mixed(const Covering& cov, int budget, int adic_order);

/* Every row at jet cap adic_order. Rejects coverings with more than one
   chart: at a uniform cap a restriction map and the truncation no longer
   commute, so ∂∇ = ∇∂ fails. */
MixedComplex build_mixed_uniform(const Covering& cov, int budget, int adic_order);

/* Chain map realizing the comparison between consecutive adic orders: the
   jet truncation from order N+1 onto order N. For graded caps it drops the
   top jet degree of every row; for a uniform cap it keeps jet degree at
   most N - p in row p, which is what keeps it a chain map. Both complexes
   must come from the same covering, budget, and cap style. */
ChainMapQ adic_comparison(const MixedComplex& at_n, const MixedComplex& at_n1);

/* Betti numbers that survive the comparison: the rank, per total degree, of
   the induced map on cohomology from order N+1 to order N. Zeros are
   recorded for every degree in range, matching cohomology_dims. */
std::map<int, int> stabilized_cohomology(const MixedComplex& at_n, const MixedComplex& at_n1);

/* Descending filtration by the form degree: piece i selects the rows of
   ds-degree at least i. Each piece is a subcomplex (the selection is
   checked, not assumed); pieces run 0..m+2 with the top one empty. */
struct GFiltration {
    std::map<int, ChainComplexQ> pieces;
};
GFiltration g_filtration(const MixedComplex& c);

/* Associated graded piece i: the q = i row alone, placed in degrees i..,
   with differential (-1)^i ∇. */
ChainComplexQ gr_piece(const MixedComplex& c, int i);

/* Totalization against a two-term coefficient complex whose connecting map
   is f times the identity in every bidegree: the mapping cone of f·id with
   the target copy shifted up one degree. The connecting map enters with the
   parity of the total mixed degree. */
ChainComplexQ coefficient_total(const MixedComplex& a, const MixedComplex& b, const Rat& f);

/* Section multiplication row pa ⊗ row pb -> row pa+pb as a level family.
   The three coverings must share chart structure, and the target window and
   budget must absorb every product of basis symbols. */
TSFamily mixed_mul_family(const MixedComplex& a, int pa, const MixedComplex& b, int pb,
                          const MixedComplex& out);

/* Product of u at (pa,qa) with v at (pb,qb), landing at (pa+pb, qa+qb) in
   the target's kernel coordinates. The interleaving of the form and ds
   factors contributes the sign (-1)^{pa·qb} on top of the form wedge. */
std::vector<Rat> mixed_product(const MixedComplex& a, int pa, int qa, const std::vector<Rat>& u,
                               const MixedComplex& b, int pb, int qb, const std::vector<Rat>& v,
                               const MixedComplex& out, const TSFamily& fam);
std::vector<Rat> mixed_product(const MixedComplex& a, int pa, int qa, const std::vector<Rat>& u,
                               const MixedComplex& b, int pb, int qb, const std::vector<Rat>& v,
                               const MixedComplex& out);

/* The two unit embeddings of a chart monomial into the jet symbols on one
   open: the flat copy, killed by the connection, and the Taylor copy, whose
   connection image is the expansion of the monomial's differential. */
Section flat_unit(const OpenAlgebra& alg, const std::vector<int>& exps, int frame);
Section taylor_unit(const OpenAlgebra& alg, const std::vector<int>& exps, int frame, int jet_cap);

/* Total degree-0 coordinates of one declared global family, embedded flat
   on every chart. A cocycle of the total complex. */
std::vector<Rat> unit_cocycle(const MixedComplex& c, const std::map<int, Sym>& fam);

}  // namespace mixres

#endif
