#ifndef SCHURKIT_BOTT_HPP
#define SCHURKIT_BOTT_HPP

#include "schurkit/exact_linalg.hpp"
#include "schurkit/partitions.hpp"
#include "schurkit/report.hpp"

namespace schurkit {

/// An integral weight for GL_n: any sequence of n integers.  Dominant means
/// weakly decreasing.  Throughout, rho = (n-1, n-2, ..., 1, 0).
using Weight = std::vector<int>;

/// Dot action of the simple reflection s_i (1 <= i <= n-1):
/// s_i . (..., a, b, ...) = (..., b-1, a+1, ...) at positions i, i+1;
/// in general w . lambda = w(lambda + rho) - rho.
Weight dot_action(int i, const Weight& lambda);

/**
 * Symbolic pushforward answer: either Zero, or a twist by the Schur functor
 * of the non-increasing weight w . lambda placed in homological shift l(w).
 * negative_flag is set when w . lambda has a negative entry, in which case
 * the answer lies outside the guarantee of the underlying theorem.
 */
struct BottAnswer {
    bool zero = false;
    Weight partition;  // non-increasing; may contain negative entries
    int shift = 0;     // inversion count of the sorting permutation
    bool negative_flag = false;

    bool operator==(const BottAnswer&) const = default;
    std::string to_text() const;
};

/// If lambda + rho has a repeated entry, Zero; otherwise Twist(w . lambda,
/// l(w)) for the unique w sorting lambda + rho strictly decreasingly.
BottAnswer bott_algorithm(const Weight& lambda);

/// A weight on a Grassmannian of d-planes in n-space, given blockwise.
struct GrassWeight {
    int n = 0;
    int d = 0;
    Partition alpha;  // length <= d
    Partition beta;   // length <= n - d
};

/// bott_algorithm on the concatenation (alpha, beta) zero-padded blockwise.
BottAnswer grassmann_bott(const GrassWeight& gw);

/// Weights on a partial flag with block boundaries dd (increasing, < n).
/// Every block of lambda must be a partition; violations name the offending
/// block.  The answer coincides with bott_algorithm(lambda).
BottAnswer partial_flag_bott(const Weight& lambda, const std::vector<int>& dd);

/// True iff some window of consecutive entries has the form (k-l, k^m) or
/// (k^m, k+l) with 1 <= l <= m.  Such weights push forward to zero in every
/// characteristic.
bool char_free_vanishing(const Weight& lambda);

/// Symbolic characteristic-p variant: checks the hypothesis
/// (p = 0: lambda_i - lambda_{i+1} >= -1 for all i;
///  p > 0: 0 <= lambda_i - lambda_j - (i-j) <= p for all 1 <= i < j <= n-1)
/// and, when it holds, reports for each w in S_n either Zero (case 1, some
/// lambda_i - lambda_{i+1} = -1) or dSchur^lambda[-l(w)] (case 2).  A failed
/// hypothesis is a distinguished non-error outcome.
Report char_p_variant(const Weight& lambda, int p);

/// (h0, h1) of O(t) on the projective line over the rationals, via the
/// two-chart Cech complex on truncated Laurent monomial bases.  |t| <= 50.
std::pair<long long, long long> p1_cohomology_oracle(int t);

/// Cross-check of bott_algorithm against the Cech oracle for n = 2 over all
/// lambda in Z^2 with |lambda_1 - lambda_2| <= range, after untwisting
/// det^{lambda_2}.
Report verify_bott_p1(int range);

/// c^lambda_{mu nu} = c^{(n-d)+nu}_{lambda, (n-d)-mu} with
/// (n-d)+nu = (n-d+nu_1, ..., n-d+nu_d) and
/// (n-d)-mu = (n-d-mu_d, ..., n-d-mu_1).  Requires mu inside the d x (n-d)
/// rectangle and lambda, nu of length <= d.
Report lr_symmetry_check(const Partition& lambda, const Partition& mu, const Partition& nu,
                         int n, int d);

/// Degree-k rank of the Koszul-type resolution against the Schur complex:
///   sum_{(mu,nu): |mu| = k} ssyt(mu^t, m) ssyt(nu, n) c^{(n-d)+nu}_{lambda,(n-d)-mu}
/// equals the degree-k rank of the Schur complex of lambda on rho: Z^m -> Z^n.
/// Requires lambda^t_1 <= d <= n - m and 0 <= k <= m d.
Report koszul_component_rank(const Partition& lambda, int m, int n, int d, int k);

}  // namespace schurkit

#endif
