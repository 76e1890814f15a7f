#ifndef MIXRES_SIMPSEC_HPP
#define MIXRES_SIMPSEC_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixres/forms.hpp"
#include "mixres/mixed.hpp"
#include "mixres/spaces.hpp"

namespace mixres {

/* A polynomial differential form on a simplex with section coefficients:
   each simplex-form monomial carries a section of the chart algebra.  The
   form factor sits to the left of the ds factors for sign purposes. */
using MixedSection = std::map<FormTerm, Section>;

void mixed_section_add(MixedSection& acc, const MixedSection& s, const Rat& c = Rat(1));

MixedSection mixed_section(const PolyForm& f, const Section& s);

/* Graded product.  Crossing the ds part of the left factor past the form
   part of the right factor contributes the Koszul sign. */
MixedSection mixed_section_mul(const MixedSection& a, const MixedSection& b, int jet_cap);

/* Total differential: simplex de Rham part plus, with the sign of the form
   degree, the Grothendieck connection on the section part. */
MixedSection mixed_section_d(const MixedSection& s, const OpenAlgebra& alg);

/* A simplicial section of a chart-wise trivial bundle over the nerve of a
   covering.  Fiber variables are listed by name; the assignment at a
   nondegenerate index of dimension q sends each fiber variable to a mixed
   section on the q-simplex with coefficients in the chart algebra of the
   index.  Degenerate indices take the assignment of their support pulled
   back along the collapse map. */
struct SimplicialSectionDatum {
    const Covering* cov = nullptr;
    std::vector<std::string> fiber_vars;
    std::map<MultiIndex, std::map<std::string, MixedSection>> assignments;

    const MixedSection& image(const MultiIndex& idx, int fiber) const;
    MixedSection image_at(const MultiIndex& idx, int fiber) const;
};

struct SectionReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/* Checks the two section conditions: assignments fix the base coordinates
   (they only name fiber variables, with chart-algebra coefficients), and
   for every monotone map alpha the restriction of the coarser assignment
   agrees with the substitution pullback of the finer one.  Failures carry
   the offending index and map.  Structurally malformed assignments throw. */
SectionReport validate_section(const SimplicialSectionDatum& s);

/* The constant section: every fiber variable goes to zero at every index. */
SimplicialSectionDatum constant_section(const Covering& cov,
                                        std::vector<std::string> fiber_vars);

/* Affine interpolation of one value per chart: the assignment at a higher
   index is sum_v t_v * (value at chart i_v, restricted).  chart_values is
   indexed by fiber variable, then by chart. */
SimplicialSectionDatum interpolation_section(const Covering& cov,
                                             std::vector<std::string> fiber_vars,
                                             const std::vector<std::vector<Section>>& chart_values);

/* One monomial of a matrix entry of a multilinear operation: a coefficient
   times chart-variable powers, ds factors, fiber-variable powers, and dz
   factors.  Jet and frame content of arguments and target lives in the
   matrix indices, not here. */
struct OpTerm {
    Rat coef;
    std::vector<int> sec;
    unsigned ds = 0;
    std::vector<int> fiber;
    unsigned dz = 0;
};

/* A multilinear operation of the given arity and total degree in chart-wise
   matrix form.  Rows index the jet-frame basis of the target factor, columns
   the row-major flattening of the argument jet-frame bases; entries are
   polynomial in chart and fiber variables and their differentials.  At a
   higher index the matrix of the leading chart applies, with entries
   restricted. */
struct MultilinearOpDatum {
    int arity = 1;
    int degree = 0;
    int jet_cap = 0;
    int nfibers = 0;
    std::vector<std::map<std::pair<int, int>, std::vector<OpTerm>>> charts;
};

/* Basis of jet monomials times frames below the cap: frame index outer
   ascending, jet exponent vectors lexicographic within each frame. */
std::vector<std::pair<std::vector<int>, int>> jet_frame_basis(int njets, int cap, int rank);

MultilinearOpDatum op_identity(const Covering& cov, int jet_cap);

/* Multiplication by a fixed section per chart, as a unary operation. */
MultilinearOpDatum op_section_mult(const Covering& cov, int jet_cap,
                                   const std::vector<Section>& mult);

/* Multiplication by a monomial in the fiber variables and their
   differentials, as a unary operation acting identically on every chart. */
MultilinearOpDatum op_fiber_mult(const Covering& cov, int jet_cap, int nfibers,
                                 const std::vector<int>& exps, unsigned dz_mask);

/* The fiberwise product of r arguments, as an r-linear degree-zero
   operation on rank-one modules without jets in the matrix indices. */
MultilinearOpDatum op_fiber_product(const Covering& cov, int jet_cap, int arity);

MultilinearOpDatum op_sum(const MultilinearOpDatum& a, const MultilinearOpDatum& b);
MultilinearOpDatum op_scaled(const MultilinearOpDatum& a, const Rat& c);

/* Composition phi(psi_1, ..., psi_r) with the Koszul sign from moving each
   psi past the later argument slots. */
MultilinearOpDatum compose_ops(const MultilinearOpDatum& phi,
                               const std::vector<MultilinearOpDatum>& psis);

/* The graded commutator of a unary operation with the connection-plus-fiber
   differential, computed symbolically on matrix entries at the datum's jet
   cap.  This is the right hand side of the derivation identity. */
MultilinearOpDatum nabla_commutator(const MultilinearOpDatum& phi, const Covering& cov);

/* Restriction of a unary operation along the section at one index: each
   matrix entry is restricted to the chart algebra of the index and fiber
   variables are substituted by their section images.  Returns the resulting
   matrix of mixed sections. */
std::map<std::pair<int, int>, MixedSection> base_change_multilinear(
    const SimplicialSectionDatum& s, const MultilinearOpDatum& op, const MultiIndex& idx);

/* An element of a mixed complex in total-degree coordinates. */
struct MixedElement {
    const MixedComplex* mix = nullptr;
    int degree = 0;
    std::vector<Rat> coords;
};

/* Pullback of the operation along the section, applied to arguments.
   Arguments live in the input mixed complex, the result in the output one;
   both must be built on the covering of the section. */
std::vector<Rat> sigma_apply(const SimplicialSectionDatum& s, const MultilinearOpDatum& op,
                             const std::vector<MixedElement>& args, const MixedComplex& out);

/* Matrix of the pullback of a unary operation, one matrix per total degree
   of the input complex. */
std::map<int, RatMatrix> sigma_matrix(const SimplicialSectionDatum& s,
                                      const MultilinearOpDatum& op, const MixedComplex& in,
                                      const MixedComplex& out);

/* Checks the derivation identity for a unary operation: first that the
   symbolic commutator of phi equals psi entrywise, then that the pulled
   back operators satisfy d o T - (-1)^deg T o d = S degree by degree on
   the mixed complexes.  A hypothesis mismatch throws; a failure of the
   conclusion is reported with the offending degree. */
SectionReport verify_sigma_derivation(const SimplicialSectionDatum& s,
                                      const MultilinearOpDatum& phi,
                                      const MultilinearOpDatum& psi, const MixedComplex& in,
                                      const MixedComplex& out);

}  // namespace mixres

#endif
