#include "mixres/complex.hpp"

#include <stdexcept>

namespace mixres {

void ChainComplexQ::validate() const {
    for (int d = lo_; d <= hi(); ++d) {
        const RatMatrix& m = diff(d);
        int target = d + 1 <= hi() ? dim(d + 1) : 0;
        if (m.rows() != target || m.cols() != dim(d))
            throw std::invalid_argument("complex: differential at degree " + std::to_string(d) +
                                        " has shape " + m.shape_str() + ", expected " +
                                        std::to_string(target) + "x" + std::to_string(dim(d)));
        if (d + 1 <= hi()) {
            RatMatrix sq = diff(d + 1) * m;
            if (!sq.is_zero())
                throw std::invalid_argument("complex: d∘d != 0 at degree " + std::to_string(d));
        }
    }
}

std::map<int, int> ChainComplexQ::cohomology_dims() const {
    std::map<int, int> h;
    for (int d = lo_; d <= hi(); ++d) {
        int cycles = dim(d) - rank(diff(d));
        int boundaries = d > lo_ ? rank(diff(d - 1)) : 0;
        h[d] = cycles - boundaries;
    }
    return h;
}

RatMatrix ChainMapQ::component(int d) const {
    auto it = comp.find(d);
    if (it != comp.end()) return it->second;
    return RatMatrix(target->dim(d), source->dim(d));
}

void ChainMapQ::validate() const {
    if (!source || !target) throw std::invalid_argument("chain map: missing endpoints");
    for (const auto& [d, m] : comp)
        if (m.rows() != target->dim(d) || m.cols() != source->dim(d))
            throw std::invalid_argument("chain map: component at degree " + std::to_string(d) +
                                        " has shape " + m.shape_str());
    int lo = std::min(source->lo(), target->lo());
    int hi = std::max(source->hi(), target->hi());
    for (int d = lo; d < hi; ++d) {
        RatMatrix left = target->in_range(d) && target->in_range(d + 1)
                             ? target->diff(d) * component(d)
                             : RatMatrix(target->dim(d + 1), source->dim(d));
        RatMatrix right = source->in_range(d) && source->in_range(d + 1)
                              ? component(d + 1) * source->diff(d)
                              : RatMatrix(target->dim(d + 1), source->dim(d));
        RatMatrix delta = left - right;
        if (!delta.is_zero()) {
            for (int c = 0; c < delta.cols(); ++c)
                for (int r = 0; r < delta.rows(); ++r)
                    if (delta.at(r, c) != 0)
                        throw std::invalid_argument(
                            "chain map does not commute with differentials at degree " +
                            std::to_string(d) + ", source basis index " + std::to_string(c));
        }
    }
}

CohomologyBasis::CohomologyBasis(const ChainComplexQ& c) : complex_(&c) {
    for (int d = c.lo(); d <= c.hi(); ++d) {
        RatMatrix k = kernel_basis(c.diff(d));
        RatMatrix b = d > c.lo() ? image_basis(c.diff(d - 1)) : RatMatrix(c.dim(d), 0);
        /* Extend the boundary basis to the cocycle space: pivot columns of
           [B | K] beyond B's block pick the representatives. */
        RatMatrix bk = RatMatrix::hstack(b, k);
        std::vector<int> reps_cols;
        for (int c2 : pivot_columns(bk))
            if (c2 >= b.cols()) reps_cols.push_back(c2);
        reps_.emplace(d, bk.select_columns(reps_cols));
        kernel_.emplace(d, std::move(k));
        boundaries_.emplace(d, std::move(b));
    }
}

int CohomologyBasis::h_dim(int d) const {
    auto it = reps_.find(d);
    return it == reps_.end() ? 0 : it->second.cols();
}

std::vector<Rat> CohomologyBasis::classify(int d, const std::vector<Rat>& cocycle) const {
    const RatMatrix& b = boundaries_.at(d);
    const RatMatrix& h = reps_.at(d);
    RatMatrix rhs(static_cast<int>(cocycle.size()), 1);
    rhs.set_column(0, cocycle);
    auto x = solve(RatMatrix::hstack(b, h), rhs);
    if (!x)
        throw std::invalid_argument("classify: vector at degree " + std::to_string(d) +
                                    " is not a cocycle modulo boundaries");
    std::vector<Rat> coords(h.cols(), Rat(0));
    for (int j = 0; j < h.cols(); ++j) coords[j] = x->at(b.cols() + j, 0);
    return coords;
}

std::map<int, RatMatrix> induced_map_on_cohomology(const ChainMapQ& f) {
    f.validate();
    CohomologyBasis src(*f.source), dst(*f.target);
    std::map<int, RatMatrix> induced;
    int lo = std::min(f.source->lo(), f.target->lo());
    int hi = std::max(f.source->hi(), f.target->hi());
    for (int d = lo; d <= hi; ++d) {
        int sdim = f.source->in_range(d) ? src.h_dim(d) : 0;
        int tdim = f.target->in_range(d) ? dst.h_dim(d) : 0;
        RatMatrix m(tdim, sdim);
        if (sdim > 0 && tdim > 0) {
            RatMatrix mapped = f.component(d) * src.representatives(d);
            for (int j = 0; j < sdim; ++j) {
                std::vector<Rat> coords = dst.classify(d, mapped.column(j));
                for (int i = 0; i < tdim; ++i) m.set(i, j, coords[i]);
            }
        } else if (sdim > 0 && tdim == 0 && f.target->in_range(d)) {
            /* Classes must die in the target; classify() would throw only on
               non-cocycles, and images of cocycles are cocycles. */
        }
        induced.emplace(d, std::move(m));
    }
    return induced;
}

bool is_quasi_iso(const ChainMapQ& f) {
    for (const auto& [d, m] : induced_map_on_cohomology(f)) {
        if (m.rows() != m.cols()) return false;
        if (rank(m) != m.rows()) return false;
    }
    return true;
}

}  // namespace mixres
