#include "schurkit/bott.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schurkit/schur_complexes.hpp"

namespace schurkit {

namespace {

Weight add_rho(const Weight& lambda) {
    int n = static_cast<int>(lambda.size());
    Weight beta(lambda);
    for (int i = 0; i < n; ++i) beta[i] += n - 1 - i;
    return beta;
}

std::string weight_text(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

}  // namespace

Weight dot_action(int i, const Weight& lambda) {
    int n = static_cast<int>(lambda.size());
    if (i < 1 || i > n - 1) throw std::invalid_argument("dot_action: index out of range");
    Weight out(lambda);
    out[i - 1] = lambda[i] - 1;
    out[i] = lambda[i - 1] + 1;
    return out;
}

std::string BottAnswer::to_text() const {
    if (zero) return "Zero";
    std::ostringstream os;
    os << "Twist" << weight_text(partition) << "[" << shift << "]";
    if (negative_flag) os << " (negative)";
    return os.str();
}

BottAnswer bott_algorithm(const Weight& lambda) {
    Weight beta = add_rho(lambda);
    int n = static_cast<int>(beta.size());
    {
        Weight sorted(beta);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return BottAnswer{true, {}, 0, false};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return beta[a] > beta[b]; });
    int inv = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (beta[a] < beta[b]) ++inv;
    BottAnswer ans;
    ans.partition.resize(n);
    for (int i = 0; i < n; ++i) ans.partition[i] = beta[order[i]] - (n - 1 - i);
    ans.shift = inv;
    ans.negative_flag =
        std::any_of(ans.partition.begin(), ans.partition.end(), [](int x) { return x < 0; });
    return ans;
}

BottAnswer grassmann_bott(const GrassWeight& gw) {
    if (gw.d < 1 || gw.d > gw.n) throw std::invalid_argument("grassmann_bott: d out of range");
    if (static_cast<int>(gw.alpha.length()) > gw.d)
        throw std::invalid_argument("grassmann_bott: alpha longer than d");
    if (static_cast<int>(gw.beta.length()) > gw.n - gw.d)
        throw std::invalid_argument("grassmann_bott: beta longer than n-d");
    Weight lambda(gw.n, 0);
    for (int i = 0; i < gw.d; ++i) lambda[i] = gw.alpha.at(i);
    for (int i = 0; i < gw.n - gw.d; ++i) lambda[gw.d + i] = gw.beta.at(i);
    return bott_algorithm(lambda);
}

BottAnswer partial_flag_bott(const Weight& lambda, const std::vector<int>& dd) {
    int n = static_cast<int>(lambda.size());
    std::vector<int> bounds(dd);
    if (bounds.empty() || bounds.back() < n) bounds.push_back(n);
    int start = 0;
    int blockno = 1;
    for (int end : bounds) {
        if (end <= start || end > n)
            throw std::invalid_argument("partial_flag_bott: invalid block boundaries");
        for (int i = start; i < end; ++i) {
            bool bad = lambda[i] < 0 || (i + 1 < end && lambda[i] < lambda[i + 1]);
            if (bad) {
                Weight block(lambda.begin() + start, lambda.begin() + end);
                throw std::invalid_argument("partial_flag_bott: block " +
                                            std::to_string(blockno) + " " +
                                            weight_text(block) + " is not a partition");
            }
        }
        start = end;
        ++blockno;
    }
    return bott_algorithm(lambda);
}

bool char_free_vanishing(const Weight& lambda) {
    int n = static_cast<int>(lambda.size());
    for (int i = 0; i < n; ++i)
        for (int m = 1; i + m < n; ++m) {
            // (k - l, k^m) at positions i .. i+m
            bool constant = true;
            for (int t = 2; t <= m; ++t)
                if (lambda[i + t] != lambda[i + 1]) constant = false;
            if (constant) {
                int l = lambda[i + 1] - lambda[i];
                if (1 <= l && l <= m) return true;
            }
            // (k^m, k + l) at positions i .. i+m
            constant = true;
            for (int t = 1; t < m; ++t)
                if (lambda[i + t] != lambda[i]) constant = false;
            if (constant) {
                int l = lambda[i + m] - lambda[i];
                if (1 <= l && l <= m) return true;
            }
        }
    return false;
}

Report char_p_variant(const Weight& lambda, int p) {
    Report rep;
    int n = static_cast<int>(lambda.size());
    bool applicable = true;
    if (p == 0) {
        for (int i = 0; i + 1 < n; ++i)
            if (lambda[i] - lambda[i + 1] < -1) applicable = false;
        if (!applicable) rep.note("hypothesis not satisfied: some lambda_i - lambda_{i+1} < -1");
    } else {
        for (int i = 1; i <= n - 1 && applicable; ++i)
            for (int j = i + 1; j <= n && applicable; ++j) {
                int val = lambda[i - 1] - lambda[j - 1] - (i - j);
                if (val < 0 || val > p) {
                    applicable = false;
                    rep.note("hypothesis not satisfied: lambda_" + std::to_string(i) +
                             " - lambda_" + std::to_string(j) + " - (i-j) = " +
                             std::to_string(val) + " outside [0," + std::to_string(p) + "]");
                }
            }
    }
    if (!applicable) return rep;
    bool case1 = false;
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] - lambda[i + 1] == -1) case1 = true;
    if (case1) {
        rep.note("case 1: pushforward is Zero for every w");
        return rep;
    }
    rep.note("case 2: for each w the pushforward is dSchur^" + weight_text(lambda) +
             "[-l(w)]");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        std::ostringstream os;
        os << "w = (";
        for (int a = 0; a < n; ++a) os << (a ? " " : "") << perm[a] + 1;
        os << "): dSchur^" << weight_text(lambda) << "[-" << inv << "]";
        rep.note(os.str());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rep;
}

std::pair<long long, long long> p1_cohomology_oracle(int t) {
    if (t < -50 || t > 50) throw std::invalid_argument("p1_cohomology_oracle: |t| > 50");
    int T = std::abs(t) + 2;
    // overlap chart: Laurent monomials x^a, a in [-T, T]
    // chart 0 (polynomials in x): a in [0, T]; chart 1: a in [-T, t]
    std::vector<int> c0;
    for (int a = 0; a <= T; ++a) c0.push_back(a);
    int split = static_cast<int>(c0.size());
    for (int a = -T; a <= t; ++a) c0.push_back(a);
    Mat d(2 * T + 1, static_cast<int>(c0.size()));
    for (std::size_t j = 0; j < c0.size(); ++j) {
        int sign = static_cast<int>(j) < split ? 1 : -1;
        d.at(c0[j] + T, static_cast<int>(j)) = sign;
    }
    long long r = rank(d);
    long long h0 = static_cast<long long>(c0.size()) - r;
    long long h1 = 2 * T + 1 - r;
    return {h0, h1};
}

Report verify_bott_p1(int range) {
    Report rep;
    if (range < 1) throw std::invalid_argument("verify_bott_p1: range < 1");
    for (int l1 = -range; l1 <= range; ++l1)
        for (int l2 = -range; l2 <= range; ++l2) {
            if (std::abs(l1 - l2) > range) continue;
            int t = l1 - l2;
            auto [h0, h1] = p1_cohomology_oracle(t);
            BottAnswer b = bott_algorithm(Weight{l1, l2});
            bool ok;
            if (b.zero) {
                ok = h0 == 0 && h1 == 0;
            } else {
                long long dim = b.partition[0] - b.partition[1] + 1;
                long long hs = b.shift == 0 ? h0 : h1;
                long long other = b.shift == 0 ? h1 : h0;
                ok = (b.shift == 0 || b.shift == 1) && hs == dim && other == 0;
            }
            if (!ok) {
                rep.fail("mismatch at lambda = " + weight_text({l1, l2}) + ": bott " +
                         b.to_text() + ", cech (" + std::to_string(h0) + "," +
                         std::to_string(h1) + ")");
                return rep;
            }
        }
    rep.note("all weights with |lambda_1 - lambda_2| <= " + std::to_string(range) +
             " agree with the Cech oracle");
    return rep;
}

Report lr_symmetry_check(const Partition& lambda, const Partition& mu, const Partition& nu,
                         int n, int d) {
    Report rep;
    if (static_cast<int>(lambda.length()) > d || static_cast<int>(nu.length()) > d ||
        static_cast<int>(mu.length()) > d || mu.at(0) > n - d)
        throw std::invalid_argument("lr_symmetry_check: shapes do not fit the d x (n-d) box");
    long long lhs = lr_coefficient(mu, nu, lambda);
    std::vector<int> plus(d), minus(d);
    for (int i = 0; i < d; ++i) plus[i] = n - d + nu.at(i);
    for (int i = 0; i < d; ++i) minus[i] = n - d - mu.at(d - 1 - i);
    Partition plus_nu(plus), minus_mu(minus);
    long long rhs = lr_coefficient(lambda, minus_mu, plus_nu);
    rep.check(lhs == rhs, "c^" + lambda.to_text() + "_{" + mu.to_text() + "," + nu.to_text() +
                              "} = " + std::to_string(lhs) + " vs c^" + plus_nu.to_text() +
                              "_{" + lambda.to_text() + "," + minus_mu.to_text() + "} = " +
                              std::to_string(rhs));
    return rep;
}

Report koszul_component_rank(const Partition& lambda, int m, int n, int d, int k) {
    Report rep;
    Partition lamt = lambda.conjugate();
    if (lamt.at(0) > d || d > n - m)
        throw std::invalid_argument("koszul_component_rank: need lambda^t_1 <= d <= n - m");
    if (k < 0 || k > std::max(m * d, lambda.size()))
        throw std::invalid_argument("koszul_component_rank: k out of range");
    long long left = 0;
    std::vector<Partition> mus;
    if (k <= lambda.size()) mus = partitions_of(k, d, n - d);
    for (const auto& mu : mus) {
        Partition mut = mu.conjugate();
        long long sm = ssyt_count(SkewShape(mut), m);
        if (sm == 0) continue;
        std::vector<int> minus(d);
        for (int i = 0; i < d; ++i) minus[i] = n - d - mu.at(d - 1 - i);
        Partition minus_mu(minus);
        for (const auto& nu : partitions_of(lambda.size() - k, d, -1)) {
            long long sn = ssyt_count(SkewShape(nu), n);
            if (sn == 0) continue;
            std::vector<int> plus(d);
            for (int i = 0; i < d; ++i) plus[i] = n - d + nu.at(i);
            Partition plus_nu(plus);
            left += sm * sn * lr_coefficient(lambda, minus_mu, plus_nu);
        }
    }
    SchurComplex sc = schur_complex(SkewShape(lambda), Mat(n, m));
    long long right = k <= sc.complex.hi() ? sc.complex.rank(k) : 0;
    rep.check(left == right, "degree " + std::to_string(k) + ": character sum " +
                                 std::to_string(left) + ", Schur complex rank " +
                                 std::to_string(right));
    return rep;
}

}  // namespace schurkit
