#ifndef MIXRES_FORMS_HPP
#define MIXRES_FORMS_HPP

#include <map>
#include <string>
#include <vector>

#include "mixres/delta.hpp"
#include "mixres/rational.hpp"

namespace mixres {

/* Sign of interleaving the ascending index sets behind two disjoint bit
   masks: parity of pairs (i in a, j in b) with i > j. */
int merge_sign(unsigned mask_a, unsigned mask_b);

/* Monomial t_1^a_1...t_l^a_l dt_I on the l-simplex in reduced coordinates:
   t_0 and dt_0 are eliminated via t_0 = 1 - sum t_i before anything is
   stored. mask bit (i-1) means dt_i is present; I is kept ascending, so a
   stored monomial carries no hidden sign. */
struct FormTerm {
    std::vector<int> exps;
    unsigned mask = 0;

    int form_degree() const { return __builtin_popcount(mask); }
    int coeff_degree() const {
        int s = 0;
        for (int e : exps) s += e;
        return s;
    }
    bool operator==(const FormTerm& o) const { return exps == o.exps && mask == o.mask; }
    bool operator<(const FormTerm& o) const {
        int da = form_degree(), db = o.form_degree();
        if (da != db) return da < db;
        if (mask != o.mask) return mask < o.mask;
        return exps < o.exps;
    }
};

/* Polynomial differential form on the l-simplex over Q; sparse sum of
   FormTerm monomials. Not necessarily homogeneous in either degree. */
class PolyForm {
public:
    PolyForm() : l_(0) {}
    explicit PolyForm(int l) : l_(l) {}

    static PolyForm zero(int l) { return PolyForm(l); }
    static PolyForm constant(int l, const Rat& c);
    /* Barycentric coordinate t_i, 0 <= i <= l (t_0 = 1 - sum t_j). */
    static PolyForm coord(int i, int l);
    static PolyForm dcoord(int i, int l);

    int simplex_dim() const { return l_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<FormTerm, Rat>& terms() const { return terms_; }

    void add_term(const FormTerm& t, const Rat& c);
    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    PolyForm scaled(const Rat& c) const;
    bool operator==(const PolyForm& o) const { return l_ == o.l_ && terms_ == o.terms_; }

    PolyForm wedge(const PolyForm& o) const;
    PolyForm d() const;

    /* Pullback along the affine map of simplices induced by alpha: [k] -> [l]
       (vertex j of the source goes to vertex alpha(j)); this form lives on
       the l-simplex and the result on the k-simplex. */
    PolyForm pullback(const SimplicialMap& alpha) const;

    /* Integral over the l-simplex of the top-degree part:
       int t^a dt_1...dt_l = (prod a_i!) / (l + sum a_i)!. Lower-degree terms
       integrate to zero except that for l = 0 the value is the constant. */
    Rat integrate() const;

    /* Homogeneous part of form degree q. */
    PolyForm component(int q) const;
    int max_coeff_degree() const;
    std::string str() const;

private:
    int l_;
    std::map<FormTerm, Rat> terms_;
};

/* Whitney form of the face (i_0 < ... < i_p) of the l-simplex:
   p! sum_j (-1)^j t_{i_j} dt_{i_0} ... (omit j) ... dt_{i_p}. */
PolyForm whitney(const std::vector<int>& face, int l);

/* All monomials of form degree q and coefficient degree <= cap on the
   l-simplex, in FormTerm order. */
std::vector<FormTerm> enumerate_form_terms(int l, int q, int cap);

/* Cochain on the nondegenerate faces of the l-simplex (all dimensions),
   values on strictly increasing vertex tuples. */
struct NormalizedCochain {
    int l = 0;
    std::map<std::vector<int>, Rat> values;

    explicit NormalizedCochain(int dim = 0) : l(dim) {}
    Rat at(const std::vector<int>& face) const;
    void set(const std::vector<int>& face, const Rat& v);
    /* Simplicial coboundary (delta c)(g_0..g_{p+1}) = sum (-1)^k c(..omit k..). */
    NormalizedCochain coboundary() const;
    bool operator==(const NormalizedCochain& o) const { return l == o.l && values == o.values; }
};

/* Face-wise integration of pullbacks: (rho u)(F) = int over the face F of
   the matching homogeneous part of u. */
NormalizedCochain rho(const PolyForm& u);

/* Whitney extension: phi(c) = sum_F c(F) * whitney(F). rho ∘ phi = id. */
PolyForm phi(const NormalizedCochain& c);

}  // namespace mixres

#endif
