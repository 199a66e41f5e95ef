#ifndef SCHURKIT_BAR_OPS_HPP
#define SCHURKIT_BAR_OPS_HPP

// Internal element-level operations for the chain-level exterior and
// symmetric algebras of a two-term map rho : Z^m -> Z^n (odd generators
// eps_1..eps_m in homological degree 1, even generators e_1..e_n in degree 0).
//
//   Lbar^p: degree k component Gamma^k(Z^m) (x) Lambda^{p-k}(Z^n),
//           basis label (nu, S), element eps^(nu) e_S, index nu-major.
//   Sbar^p: degree i component Lambda^i(Z^m) (x) Sym^{p-i}(Z^n),
//           basis label (T, kappa), element eps_T y^kappa, index T-major.
//
// The comultiplication/multiplication sign twists are parametrized so the
// convention can be pinned down by the chain-map requirement; the shipped
// constants are frozen in schur_complexes.cpp and guarded by tests.

#include <utility>
#include <vector>

#include "schurkit/exact_linalg.hpp"
#include "schurkit/multilinear.hpp"

namespace schurkit::bar {

struct SignRule {
    // exponent of (-1): c[0] |a||A| + c[1] |a||B| + c[2] |b||A| + c[3] |b||B| +
    // c[4] |a||b| where a,b are the odd parts and A,B the even parts of the
    // left/right tensor legs
    int c[5] = {0, 0, 0, 0, 0};

    int sign(int oa, int ea, int ob, int eb) const {
        int e = c[0] * oa * ea + c[1] * oa * eb + c[2] * ob * ea + c[3] * ob * eb +
                c[4] * oa * ob;
        return e % 2 ? -1 : 1;
    }
};

struct Term {
    int k1;  // homological degree of the (first) output leg
    long long i1;
    int k2 = 0;  // second leg, when the output is a two-factor tensor
    long long i2 = 0;
    Int coeff;
};

/// Cached basis pair for one degree of Lbar^p or Sbar^p.
struct BarSpace {
    PowerSpace odd;   // divided (Lbar) or exterior (Sbar) over m letters
    PowerSpace even;  // exterior (Lbar) or symmetric (Sbar) over n letters
    long long dim() const { return odd.dim() * even.dim(); }
};

/// Component spaces of Lbar^p (k = 0..p) for rho : Z^m -> Z^n.
std::vector<BarSpace> lbar_spaces(int m, int n, int p);
/// Component spaces of Sbar^p.
std::vector<BarSpace> sbar_spaces(int m, int n, int p);

/// Differential of Lbar^p in degree k on basis element idx; terms in degree k-1.
std::vector<Term> lbar_diff(const Mat& rho, const std::vector<BarSpace>& sp, int k,
                            long long idx);
/// Differential of Sbar^p in degree i.
std::vector<Term> sbar_diff(const Mat& rho, const std::vector<BarSpace>& sp, int i,
                            long long idx);

/// Comultiplication Lbar^{p+q} -> Lbar^p (x) Lbar^q on one basis element of
/// degree k; output legs have degrees (k1, k - k1).
std::vector<Term> lbar_comult(const std::vector<BarSpace>& whole,
                              const std::vector<BarSpace>& left,
                              const std::vector<BarSpace>& right, int k, long long idx,
                              const SignRule& rule);

/// Multiplication Lbar^p (x) Lbar^q -> Lbar^{p+q}; single-leg output terms.
std::vector<Term> lbar_mult(const std::vector<BarSpace>& left,
                            const std::vector<BarSpace>& right,
                            const std::vector<BarSpace>& whole, int k1, long long i1, int k2,
                            long long i2, const SignRule& rule);

/// Multiplication Sbar^p (x) Sbar^q -> Sbar^{p+q}.
std::vector<Term> sbar_mult(const std::vector<BarSpace>& left,
                            const std::vector<BarSpace>& right,
                            const std::vector<BarSpace>& whole, int k1, long long i1, int k2,
                            long long i2, const SignRule& rule);

}  // namespace schurkit::bar

#endif
