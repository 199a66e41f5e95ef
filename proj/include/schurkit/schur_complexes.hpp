#ifndef SCHURKIT_SCHUR_COMPLEXES_HPP
#define SCHURKIT_SCHUR_COMPLEXES_HPP

#include "schurkit/exact_linalg.hpp"
#include "schurkit/partitions.hpp"
#include "schurkit/report.hpp"

namespace schurkit {

/**
 * Chain-level multilinear functors of a map rho : Z^m -> Z^n, given as an
 * n x m matrix.  Odd generators (the source) sit in homological degree 1,
 * even generators (the target) in degree 0.
 */

/// Chain-level exterior power Lbar^p(rho): degree k component
/// Gamma^k(Z^m) (x) Lambda^{p-k}(Z^n), differential
/// d(eps^(nu) (x) g) = sum_i eps^(nu - delta_i) (x) (rho(eps_i) ^ g).
ChainComplex exterior_complex(const Mat& rho, int p);

/// Chain-level symmetric power Sbar^d(rho): degree i component
/// Lambda^i(Z^m) (x) Sym^{d-i}(Z^n), differential
/// d(x_1^...^x_i (x) y) = sum_j (-1)^{j-1} x_1^...^x_j-hat^...^x_i (x) rho(x_j) y.
ChainComplex symmetric_complex(const Mat& rho, int d);

/**
 * The Schur complex of a skew shape applied to rho, in cokernel form: the
 * degreewise cokernel of the chain-level box map on the total complex of
 * (x)_j Lbar^{p_j}(rho), p_j the column lengths of the shape, with induced
 * differentials.  Torsion in any degreewise cokernel is a structural error.
 * Degrees run over [0, |shape|]; the degree-0 component is the classical
 * Schur module of Z^n and the top component the one of Z^m on the conjugate
 * shape.
 */
struct SchurComplex {
    SkewShape shape;
    int m = 0, n = 0;
    ChainComplex complex;
    std::vector<PresentedModule> components;  // degreewise cokernel data, all free
};

SchurComplex schur_complex(const SkewShape& shape, const Mat& rho);

/// Degreewise ranks of the image form: the chain-level map
/// ((x)_i m_i) o ((x)_j Delta'_j) from the column tensor (x)_j Lbar^{p_j}
/// to the row tensor (x)_i Sbar^{q_i}, computed over the rationals.  The
/// matrix does not depend on rho, only on the sizes (m, n).
std::vector<long long> schur_complex_image_ranks(const SkewShape& shape, int m, int n);

/// Degreewise rank of the Schur complex against both filtration formulas:
///   I_k = sum_{mu <= gamma <= lambda, |gamma/mu| = k}
///             ssyt(lambda/gamma, n) ssyt(gamma^t/mu^t, m)
///   J_k = sum_{mu <= nu <= lambda, |lambda/nu| = k}
///             ssyt(nu/mu, n) ssyt(lambda^t/nu^t, m)
Report component_rank_check(const SkewShape& shape, int m, int n);

/// Homology of the Schur complex in all degrees.
std::vector<PresentedModule> derived_schur_homology(const SkewShape& shape, const Mat& rho);

/// rho : Z^m -> 0.  The Schur complex is concentrated in the top degree
/// |shape| with free homology of rank ssyt(lambda^t/mu^t, m).
Report verify_decalage(const SkewShape& shape, int m);

/// H_0 of the Schur complex of a straight shape against the right-exact
/// presentation of the classical Schur module of coker(rho): each exterior
/// factor Lambda^{p_j} of the generators is divided by the image of
/// Z^m (x) Lambda^{p_j - 1}(Z^n) under rho ^ -, on top of the box relations.
Report verify_classical_truncation(const Partition& lambda, const Mat& rho);

}  // namespace schurkit

#endif
