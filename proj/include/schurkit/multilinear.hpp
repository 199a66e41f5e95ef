#ifndef SCHURKIT_MULTILINEAR_HPP
#define SCHURKIT_MULTILINEAR_HPP

#include <string>
#include <vector>

#include "schurkit/exact_linalg.hpp"

namespace schurkit {

Int binomial(long long n, long long k);
Int multinomial(const std::vector<int>& parts);
Int factorial(long long n);

/// k-element subsets of {0..r-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int r, int k);

/// Exponent vectors in Z^r_{>=0} summing to n, lexicographic order.
std::vector<std::vector<int>> exponents_lex(int r, int n);

/// Sign of the merge permutation: (-1)^{#\{(a,b) in A x B : a > b\}}.
/// A and B are sorted; they are assumed disjoint.
int shuffle_sign(const std::vector<int>& A, const std::vector<int>& B);

enum class PowerKind { exterior, symmetric, divided };

std::string to_string(PowerKind k);

/// Canonical ordered basis of an exterior, symmetric or divided power of a
/// free module of rank `base_rank`.
struct PowerSpace {
    PowerKind kind;
    int base_rank;
    int degree;
    /// exterior: strictly increasing subsets of {0..r-1}; symmetric/divided:
    /// exponent vectors; both in lexicographic order.
    std::vector<std::vector<int>> basis;

    static PowerSpace make(PowerKind kind, int base_rank, int degree);
    long long dim() const { return static_cast<long long>(basis.size()); }
    long long index_of(const std::vector<int>& label) const;
};

/// A matrix together with the factorizations of its source and target into
/// ordered tensor products of power spaces (left factor major in indexing).
struct LabeledMap {
    std::vector<PowerSpace> source;
    std::vector<PowerSpace> target;
    Mat matrix;

    long long source_dim() const;
    long long target_dim() const;
};

/// Delta, Delta', Delta'' : P^{p+q} -> P^p (x) P^q.
LabeledMap comultiplication(PowerKind kind, int r, int p, int q);

/// m, m', m'' : P^p (x) P^q -> P^{p+q}.
LabeledMap multiplication(PowerKind kind, int r, int p, int q);

/// alpha_d : Sym^d -> Gamma^d (product of the same letters in divided powers)
/// and beta_d : Gamma^d -> Sym^d (projected shuffle product); both satisfy the
/// d!-identities beta.alpha = alpha.beta = d! id.
std::pair<LabeledMap, LabeledMap> alpha_beta(int d, int r);

/// Gamma^d applied to a linear map (matrix in divided monomial bases).
Mat divided_power_functor(const Mat& f, int d);

/// The pairing Gamma^d(Z^2) (x) Gamma^d(Z^2) -> (Lambda^2 Z^2)^{(x)d} given by
/// the Cauchy-dual map theta followed by Gamma^d of the projection to Lambda^2,
/// returned as its (d+1) x (d+1) Gram matrix on the divided monomial basis.
/// Direct evaluation yields an anti-diagonal matrix with entries
/// (-1)^{d-h} C(d,h): the pairing couples e1^(h) e2^(d-h) with e1^(d-h) e2^(h)
/// and is perfect over Q for every d, but unimodular over Z only for d <= 1.
Mat divided_pairing(int d);

}  // namespace schurkit

#endif
