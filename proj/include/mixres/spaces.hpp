#ifndef MIXRES_SPACES_HPP
#define MIXRES_SPACES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mixres/complex.hpp"
#include "mixres/delta.hpp"
#include "mixres/matrix.hpp"
#include "mixres/rational.hpp"

namespace mixres {

/* Basis symbol of a windowed section space on one open: a Laurent monomial
   in the chart variables, a monomial in the jet coordinates t_1..t_n, an
   ascending product of jet differentials (ds bit k set = ds_{k+1} present),
   and a module frame index. */
struct Sym {
    std::vector<int> sec;
    std::vector<int> jet;
    unsigned ds = 0;
    int frame = 0;

    int jet_degree() const {
        int s = 0;
        for (int e : jet) s += e;
        return s;
    }
    int ds_count() const { return __builtin_popcount(ds); }
    bool operator==(const Sym& o) const {
        return sec == o.sec && jet == o.jet && ds == o.ds && frame == o.frame;
    }
    bool operator<(const Sym& o) const;
};

/* Finite Q-linear combination of symbols; absent keys are zero and stored
   coefficients are nonzero. */
using Section = std::map<Sym, Rat>;

void section_add(Section& acc, const Section& s, const Rat& scale = Rat(1));
/* Product with the interleaving sign of the ds factors. At most one factor
   may carry a nonzero frame. Jet degrees above jet_cap are dropped
   (quotient by that power of the jet ideal); a negative cap keeps all. */
Section section_mul(const Section& a, const Section& b, int jet_cap);
Section section_scaled(const Section& s, const Rat& c);
Section section_truncate_jets(const Section& s, int jet_cap);

/* Presentation of the sections of a module on one open: named Laurent
   variables with exponent windows and grades, one distinguished etale
   coordinate per jet direction, module frames, and an optional linear
   admissibility budget coupling chart exponents to jet degrees (used to
   keep twisted overlap windows closed under every operator without
   introducing uncovered padding monomials). */
struct OpenAlgebra {
    std::string name;
    std::vector<std::string> vars;
    std::vector<int> lo, hi;
    std::vector<int> grade;
    std::vector<bool> invertible;
    std::vector<int> etale;  // var index behind each jet direction
    int rank = 1;
    std::vector<int> frame_grade;

    bool budget_on = false;
    std::vector<int> budget_sec;  // per-variable weight
    int budget_jet = 0;           // weight per unit of t-degree
    int budget_ds = 0;            // weight per ds factor
    int budget_cap = 0;
    /* Optional weight offset per frame, for modules whose summands need
       different windows on the same open; empty means zero. */
    std::vector<int> budget_frame;

    int nvars() const { return static_cast<int>(vars.size()); }
    int njets() const { return static_cast<int>(etale.size()); }
    bool admits(const Sym& s) const;
    int sym_grade(const Sym& s) const;
    std::string sym_str(const Sym& s) const;
    void validate() const;
};

/* Ordered monomial basis of one open at a fixed ds-degree and jet cap. */
struct SpaceBasis {
    const OpenAlgebra* alg = nullptr;
    int ds_degree = 0;
    int jet_cap = 0;
    std::vector<Sym> syms;
    std::map<Sym, int> index;

    int dim() const { return static_cast<int>(syms.size()); }
    /* Coordinates of a section; a symbol outside the basis is a window
       overflow and throws with that symbol spelled out. */
    std::vector<Rat> to_vector(const Section& s) const;
    Section from_vector(const std::vector<Rat>& v) const;
};
SpaceBasis space_basis(const OpenAlgebra& alg, int ds_degree, int jet_cap);

/* c * prod_v (r_v - t_{k(v)})^{e_v}: the expansion of a chart monomial with
   every variable moved to its first-factor copy, as a jet series truncated
   at the cap. Every variable with a nonzero exponent must carry a jet
   direction. */
Section taylor_expansion(const OpenAlgebra& alg, const Rat& c, const std::vector<int>& e,
                         int cap);

/* Monomial image of one source generator under a restriction map. */
struct MonoImage {
    Rat coef = Rat(1);
    std::vector<int> exps;  // over target variables
    int frame = 0;          // target frame, used for frame images only
};

/* Restriction map between open algebras, determined by generator images.
   Jet coordinates transform through the image of their etale coordinate:
   writing the image monomial as a function of the target coordinates and
   expanding it at (r - t) gives the jet series, and its differential gives
   the ds series; see apply_res. */
struct ResMap {
    std::vector<MonoImage> var_images;
    std::vector<MonoImage> frame_images;
};

Section apply_res(const OpenAlgebra& src, const OpenAlgebra& tgt, const ResMap& f,
                  const Sym& s, int jet_cap);
RatMatrix res_matrix(const OpenAlgebra& src, const OpenAlgebra& tgt, const ResMap& f,
                     const SpaceBasis& sb, const SpaceBasis& tb);

/* Covering of a toy space by charts 0..m with module section data on every
   nonempty intersection, indexed by the strictly increasing vertex tuple of
   the charts meeting it. res holds one map per strictly nested support
   pair; equal supports restrict by the identity. */
struct Covering {
    std::string name;
    int m = 0;
    int n = 0;  // jet directions per open; 0 when jets are unused
    std::map<MultiIndex, OpenAlgebra> opens;
    std::map<std::pair<MultiIndex, MultiIndex>, ResMap> res;
    /* Known global section families, one chart-indexed monomial each. */
    std::vector<std::map<int, Sym>> global_sections;

    const OpenAlgebra& open(const MultiIndex& s) const;
    const ResMap& res_map(const MultiIndex& small, const MultiIndex& big) const;
    RatMatrix res_matrix_between(const MultiIndex& small, const MultiIndex& big,
                                 int ds_degree, int jet_cap) const;
};

/* Consistency checks: every strictly nested support pair has a map, all
   restriction composites over nested triples commute, and every
   restriction is homogeneous for the declared grades. Throws with the
   offending pair and symbol. */
void validate_covering(const Covering& cov, int jet_cap);

struct SpaceParams {
    int twist = 0;       // d of O(d) on the projective line; unused for affine
    int window = -1;     // chart exponent bound; defaults to |twist| + 4
    int njets = 0;       // jet directions to attach (0 or the etale dimension)
    int adic_order = 0;  // ceiling for jet caps, sizes the overlap windows
};

Covering affine_space(int n, const SpaceParams& p);
Covering p1_two_charts(const SpaceParams& p);
Covering p1_three_charts(const SpaceParams& p);

/* Alternating-sign complex on strictly increasing index tuples, assembled
   directly from the restriction matrices. Independent oracle for the
   cohomology of every richer construction. */
ChainComplexQ alternating_cech_complex(const Covering& cov);

}  // namespace mixres

#endif
