#include "bar_ops.hpp"

#include <algorithm>

namespace schurkit::bar {

namespace {

std::pair<long long, long long> split_index(const BarSpace& sp, long long idx) {
    return {idx / sp.even.dim(), idx % sp.even.dim()};
}

long long join_index(const BarSpace& sp, long long odd_idx, long long even_idx) {
    return odd_idx * sp.even.dim() + even_idx;
}

}  // namespace

std::vector<BarSpace> lbar_spaces(int m, int n, int p) {
    std::vector<BarSpace> out;
    for (int k = 0; k <= p; ++k)
        out.push_back({PowerSpace::make(PowerKind::divided, m, k),
                       PowerSpace::make(PowerKind::exterior, n, p - k)});
    return out;
}

std::vector<BarSpace> sbar_spaces(int m, int n, int p) {
    std::vector<BarSpace> out;
    for (int i = 0; i <= p; ++i)
        out.push_back({PowerSpace::make(PowerKind::exterior, m, i),
                       PowerSpace::make(PowerKind::symmetric, n, p - i)});
    return out;
}

std::vector<Term> lbar_diff(const Mat& rho, const std::vector<BarSpace>& sp, int k,
                            long long idx) {
    std::vector<Term> out;
    if (k <= 0 || k >= static_cast<int>(sp.size())) return out;
    const BarSpace& here = sp[k];
    const BarSpace& below = sp[k - 1];
    auto [oi, ei] = split_index(here, idx);
    const auto& nu = here.odd.basis[oi];
    const auto& S = here.even.basis[ei];
    int m = rho.cols();
    for (int i = 0; i < m; ++i) {
        if (nu[i] == 0) continue;
        std::vector<int> nu2(nu);
        --nu2[i];
        // rho(eps_i) wedged onto the left of e_S
        for (int t = 0; t < rho.rows(); ++t) {
            const Int& c = rho.at(t, i);
            if (c == 0) continue;
            if (std::binary_search(S.begin(), S.end(), t)) continue;
            int before = static_cast<int>(std::lower_bound(S.begin(), S.end(), t) - S.begin());
            std::vector<int> S2(S);
            S2.insert(S2.begin() + before, t);
            Int coeff = (before % 2 ? -c : c);
            out.push_back({k - 1,
                           join_index(below, below.odd.index_of(nu2), below.even.index_of(S2)),
                           0, 0, coeff});
        }
    }
    return out;
}

std::vector<Term> sbar_diff(const Mat& rho, const std::vector<BarSpace>& sp, int i,
                            long long idx) {
    std::vector<Term> out;
    if (i <= 0 || i >= static_cast<int>(sp.size())) return out;
    const BarSpace& here = sp[i];
    const BarSpace& below = sp[i - 1];
    auto [oi, ei] = split_index(here, idx);
    const auto& T = here.odd.basis[oi];   // subset of odd letters
    const auto& kap = here.even.basis[ei];
    for (std::size_t j = 0; j < T.size(); ++j) {
        std::vector<int> T2;
        for (std::size_t t = 0; t < T.size(); ++t)
            if (t != j) T2.push_back(T[t]);
        int sign = j % 2 ? -1 : 1;  // (-1)^{j-1} with 1-based j
        for (int t = 0; t < rho.rows(); ++t) {
            const Int& c = rho.at(t, T[j]);
            if (c == 0) continue;
            std::vector<int> kap2(kap);
            ++kap2[t];
            out.push_back({i - 1,
                           join_index(below, below.odd.index_of(T2), below.even.index_of(kap2)),
                           0, 0, sign * c});
        }
    }
    return out;
}

std::vector<Term> lbar_comult(const std::vector<BarSpace>& whole,
                              const std::vector<BarSpace>& left,
                              const std::vector<BarSpace>& right, int k, long long idx,
                              const SignRule& rule) {
    std::vector<Term> out;
    const BarSpace& here = whole[k];
    auto [oi, ei] = split_index(here, idx);
    const auto& nu = here.odd.basis[oi];
    const auto& S = here.even.basis[ei];
    int p = static_cast<int>(left.size()) - 1;
    int q = static_cast<int>(right.size()) - 1;
    int m = static_cast<int>(nu.size());
    // split the odd exponent nu = alpha + beta and the even subset S = A | B
    std::vector<int> alpha(m, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos < m) {
            for (int t = 0; t <= nu[pos]; ++t) {
                alpha[pos] = t;
                self(self, pos + 1);
            }
            alpha[pos] = 0;
            return;
        }
        int ka = 0;
        for (int t = 0; t < m; ++t) ka += alpha[t];
        int kb = k - ka;
        std::vector<int> beta(m);
        for (int t = 0; t < m; ++t) beta[t] = nu[t] - alpha[t];
        for (int asz = 0; asz <= static_cast<int>(S.size()); ++asz) {
            int ea = asz, eb = static_cast<int>(S.size()) - asz;
            if (ka + ea > p || kb + eb > q) continue;
            if (ka + ea < p || kb + eb < q) continue;  // degrees must land in Lbar^p, Lbar^q
            const BarSpace& L = left[ka];
            const BarSpace& R = right[kb];
            for (const auto& pick : subsets_lex(static_cast<int>(S.size()), asz)) {
                std::vector<int> A, B;
                std::vector<char> inA(S.size(), 0);
                for (int t : pick) inA[t] = 1;
                for (std::size_t t = 0; t < S.size(); ++t) (inA[t] ? A : B).push_back(S[t]);
                Int coeff = shuffle_sign(A, B) * rule.sign(ka, ea, kb, eb);
                out.push_back({ka, join_index(L, L.odd.index_of(alpha), L.even.index_of(A)),
                               kb, join_index(R, R.odd.index_of(beta), R.even.index_of(B)),
                               coeff});
            }
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Term> lbar_mult(const std::vector<BarSpace>& left,
                            const std::vector<BarSpace>& right,
                            const std::vector<BarSpace>& whole, int k1, long long i1, int k2,
                            long long i2, const SignRule& rule) {
    std::vector<Term> out;
    const BarSpace& L = left[k1];
    const BarSpace& R = right[k2];
    auto [ao, ae] = split_index(L, i1);
    auto [bo, be] = split_index(R, i2);
    const auto& alpha = L.odd.basis[ao];
    const auto& A = L.even.basis[ae];
    const auto& beta = R.odd.basis[bo];
    const auto& B = R.even.basis[be];
    std::vector<int> merged(A);
    merged.insert(merged.end(), B.begin(), B.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) return out;
    std::vector<int> nu(alpha.size());
    Int coeff = 1;
    for (std::size_t t = 0; t < alpha.size(); ++t) {
        nu[t] = alpha[t] + beta[t];
        coeff *= binomial(nu[t], alpha[t]);
    }
    coeff *= shuffle_sign(A, B) *
             rule.sign(k1, static_cast<int>(A.size()), k2, static_cast<int>(B.size()));
    const BarSpace& W = whole[k1 + k2];
    out.push_back({k1 + k2, join_index(W, W.odd.index_of(nu), W.even.index_of(merged)), 0, 0,
                   coeff});
    return out;
}

std::vector<Term> sbar_mult(const std::vector<BarSpace>& left,
                            const std::vector<BarSpace>& right,
                            const std::vector<BarSpace>& whole, int k1, long long i1, int k2,
                            long long i2, const SignRule& rule) {
    std::vector<Term> out;
    const BarSpace& L = left[k1];
    const BarSpace& R = right[k2];
    auto [ao, ae] = split_index(L, i1);
    auto [bo, be] = split_index(R, i2);
    const auto& T1 = L.odd.basis[ao];
    const auto& kap1 = L.even.basis[ae];
    const auto& T2 = R.odd.basis[bo];
    const auto& kap2 = R.even.basis[be];
    std::vector<int> merged(T1);
    merged.insert(merged.end(), T2.begin(), T2.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) return out;
    std::vector<int> kap(kap1.size());
    for (std::size_t t = 0; t < kap1.size(); ++t) kap[t] = kap1[t] + kap2[t];
    int p1 = static_cast<int>(left.size()) - 1;
    int p2 = static_cast<int>(right.size()) - 1;
    Int coeff = shuffle_sign(T1, T2) * rule.sign(k1, p1 - k1, k2, p2 - k2);
    const BarSpace& W = whole[k1 + k2];
    out.push_back({k1 + k2, join_index(W, W.odd.index_of(merged), W.even.index_of(kap)), 0, 0,
                   coeff});
    return out;
}

}  // namespace schurkit::bar
