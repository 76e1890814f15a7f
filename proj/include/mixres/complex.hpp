#ifndef MIXRES_COMPLEX_HPP
#define MIXRES_COMPLEX_HPP

#include <map>
#include <string>
#include <vector>

#include "mixres/linalg.hpp"
#include "mixres/matrix.hpp"

namespace mixres {

/* Cochain complex of finite-dimensional Q-spaces on a contiguous degree
   range [lo, hi]. diff(d) maps degree d to degree d+1; differentials out of
   hi and into lo are zero. validate() enforces shapes and d∘d = 0. */
class ChainComplexQ {
public:
    ChainComplexQ() : lo_(0) {}
    ChainComplexQ(int lo, std::vector<int> dims) : lo_(lo), dims_(std::move(dims)) {
        diff_.reserve(dims_.size());
        for (size_t i = 0; i + 1 < dims_.size(); ++i)
            diff_.emplace_back(dims_[i + 1], dims_[i]);
        if (!dims_.empty()) diff_.emplace_back(0, dims_.back());
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool in_range(int d) const { return d >= lo_ && d <= hi(); }
    int dim(int d) const { return in_range(d) ? dims_[d - lo_] : 0; }

    const RatMatrix& diff(int d) const { return diff_.at(d - lo_); }
    void set_diff(int d, const RatMatrix& m) { diff_.at(d - lo_) = m; }

    void validate() const;
    std::map<int, int> cohomology_dims() const;

private:
    int lo_;
    std::vector<int> dims_;
    std::vector<RatMatrix> diff_;
};

/* Degreewise map of complexes commuting with the differentials. */
struct ChainMapQ {
    const ChainComplexQ* source = nullptr;
    const ChainComplexQ* target = nullptr;
    std::map<int, RatMatrix> comp;  // degree -> dim_target x dim_source

    RatMatrix component(int d) const;
    void validate() const;
};

/* Kernel/image/representative data for one complex, reused when expressing
   cohomology classes in coordinates. Representatives are the kernel basis
   vectors completing the image basis, in kernel-basis order. */
class CohomologyBasis {
public:
    explicit CohomologyBasis(const ChainComplexQ& c);

    const ChainComplexQ& complex() const { return *complex_; }
    int h_dim(int d) const;
    const RatMatrix& cocycles(int d) const { return kernel_.at(d); }
    const RatMatrix& representatives(int d) const { return reps_.at(d); }

    /* Coordinates of the class of a cocycle in the representative basis. */
    std::vector<Rat> classify(int d, const std::vector<Rat>& cocycle) const;

private:
    const ChainComplexQ* complex_;
    std::map<int, RatMatrix> kernel_;     // basis of ker diff(d)
    std::map<int, RatMatrix> boundaries_; // basis of im diff(d-1)
    std::map<int, RatMatrix> reps_;       // chosen representative cocycles
};

/* Matrices of the induced map on cohomology, one per degree in the union of
   ranges. is_quasi_iso holds when every induced matrix is square and
   invertible. */
std::map<int, RatMatrix> induced_map_on_cohomology(const ChainMapQ& f);
bool is_quasi_iso(const ChainMapQ& f);

}  // namespace mixres

#endif
