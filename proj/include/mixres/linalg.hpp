#ifndef MIXRES_LINALG_HPP
#define MIXRES_LINALG_HPP

#include <optional>
#include <vector>

#include "mixres/matrix.hpp"

namespace mixres {

/* Exact elimination over Q. Fraction-free (Bareiss) pivoting on
   denominator-cleared rows; pivot choice is the candidate of smallest
   |numerator * denominator|, ties broken by row index, so results are
   deterministic. Independent column blocks (columns never coupled by a
   common row) are eliminated separately. */

int rank(const RatMatrix& m);

/* Columns form a basis of {x : M x = 0}. One vector per free column, that
   free coordinate set to 1, ordered by free column index ascending. */
RatMatrix kernel_basis(const RatMatrix& m);

/* Indices of a maximal independent set of columns, ascending (the pivot
   columns of the echelon form under left-to-right column order). */
std::vector<int> pivot_columns(const RatMatrix& m);

/* Columns of M at pivot_columns(M): a basis of the column space. */
RatMatrix image_basis(const RatMatrix& m);

/* Exact solution X of A X = B (free variables set to 0), or nullopt if any
   column of B is outside the column space of A. */
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

}  // namespace mixres

#endif
