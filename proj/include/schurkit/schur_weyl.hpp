#ifndef SCHURKIT_SCHUR_WEYL_HPP
#define SCHURKIT_SCHUR_WEYL_HPP

#include "schurkit/exact_linalg.hpp"
#include "schurkit/multilinear.hpp"
#include "schurkit/partitions.hpp"
#include "schurkit/report.hpp"

namespace schurkit {

enum class Variant { Schur, Weyl };

std::string to_string(Variant v);

/// Sparse column-major matrix; columns are (row, value) lists.
struct SparseMat {
    long long rows = 0;
    std::vector<std::vector<std::pair<int, Int>>> cols;

    Mat to_dense() const;
};

/**
 * The box map whose cokernel defines the Schur (exterior powers of the
 * conjugate columns) or Weyl (divided powers of the rows) module.  Source
 * blocks are ordered by the pairing index j ascending, then (u,v)
 * lexicographic; the bound for block j is u+v < lambda^t_{j+1} - mu^t_j
 * (Schur) resp. u+v < lambda_{j+1} - mu_j (Weyl).  If fewer than two factors
 * are nonzero the source is the zero module.
 */
SparseMat box_map_sparse(const SkewShape& shape, int r, Variant variant);
Mat box_map(const SkewShape& shape, int r, Variant variant);

struct SchurPresentation {
    SkewShape shape;
    int base_rank = 0;
    Variant variant = Variant::Schur;
    Mat box;
    PresentedModule module;
};

/// Memoized presentations.  Torsion in the cokernel is a structural error.
/// Conventions: lambda = mu with r > 0 gives rank 1; r = 0 gives the zero
/// module.
const SchurPresentation& schur_module(const SkewShape& shape, int r);
const SchurPresentation& weyl_module(const SkewShape& shape, int r);

/// Rank-only fast path through the sparse elimination engine; throws a
/// structural error when the cokernel has torsion.
long long module_rank(const SkewShape& shape, int r, Variant variant);

/// Basis of the image of the column-splitting map
/// Lambda^{lambda^t/mu^t} -> Sym^{lambda/mu} (letters of each column
/// distributed over its rows with shuffle signs, then multiplied row-wise);
/// its rank equals the Schur module rank.
Mat schur_as_image(const SkewShape& shape, int r);

/// C(ab+n-1,n) = sum_{|lambda|=n} ssyt(lambda,a) ssyt(lambda,b)  and
/// C(ab,n)     = sum_{|lambda|=n} ssyt(lambda,a) ssyt(lambda^t,b),
/// with per-partition terms listed in lexicographic order.
Report verify_cauchy(int n, int a, int b);

/// ssyt(lambda/mu, a+b) = sum_k sum_{gamma: mu <= gamma <= lambda, |gamma/mu|=k}
///   ssyt(gamma/mu, a) ssyt(lambda/gamma, b).
Report verify_direct_sum(const SkewShape& shape, int a, int b);

/**
 * The map f : Lambda^d E (x) S^{lambda/1}(E) -> Lambda^{d-1} E (x) S^lambda(E)
 * over E = Z^d, induced by comultiplying one letter out of Lambda^d and
 * multiplying it into the first column.  Checks: isomorphism when
 * lambda^t_1 = d; otherwise injective with free cokernel of rank
 * ssyt((d-1, lambda^t)^t, d).  Returns the matrix of f on the chosen module
 * generators together with the report.
 */
std::pair<Mat, Report> skew_ses(const Partition& lambda, int d);

/**
 * Degree-m graded piece of the quadratic ideal generated by the symmetrized
 * box relations of shape (2^d) inside Sym^*(Lambda^d Z^n).  Returns
 * (ideal_dim, ring_dim) and asserts ring_dim = ssyt((m^d), n).
 */
std::pair<long long, long long> plucker_graded_piece(int n, int d, int m);

}  // namespace schurkit

#endif
