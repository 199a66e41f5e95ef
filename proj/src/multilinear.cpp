#include "schurkit/multilinear.hpp"

#include <algorithm>
#include <map>

namespace schurkit {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

Int multinomial(const std::vector<int>& parts) {
    long long total = 0;
    Int r = 1;
    for (int p : parts) {
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<std::vector<int>> subsets_lex(int r, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > r) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int i = next; i <= r - need; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<int>> exponents_lex(int r, int n) {
    std::vector<std::vector<int>> out;
    if (n < 0) return out;
    if (r == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(r, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == r - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

int shuffle_sign(const std::vector<int>& A, const std::vector<int>& B) {
    long long inv = 0;
    for (int a : A)
        for (int b : B)
            if (a > b) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::string to_string(PowerKind k) {
    switch (k) {
        case PowerKind::exterior: return "exterior";
        case PowerKind::symmetric: return "symmetric";
        case PowerKind::divided: return "divided";
    }
    return "?";
}

PowerSpace PowerSpace::make(PowerKind kind, int base_rank, int degree) {
    if (base_rank < 0 || degree < 0)
        throw std::invalid_argument("PowerSpace: negative rank or degree");
    PowerSpace s;
    s.kind = kind;
    s.base_rank = base_rank;
    s.degree = degree;
    s.basis = kind == PowerKind::exterior ? subsets_lex(base_rank, degree)
                                          : exponents_lex(base_rank, degree);
    return s;
}

long long PowerSpace::index_of(const std::vector<int>& label) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), label);
    if (it == basis.end() || *it != label)
        throw std::invalid_argument("PowerSpace::index_of: label not in basis");
    return it - basis.begin();
}

long long LabeledMap::source_dim() const {
    long long d = 1;
    for (const auto& s : source) d *= s.dim();
    return d;
}

long long LabeledMap::target_dim() const {
    long long d = 1;
    for (const auto& s : target) d *= s.dim();
    return d;
}

LabeledMap comultiplication(PowerKind kind, int r, int p, int q) {
    PowerSpace W = PowerSpace::make(kind, r, p + q);
    PowerSpace P = PowerSpace::make(kind, r, p);
    PowerSpace Q = PowerSpace::make(kind, r, q);
    LabeledMap m;
    m.source = {W};
    m.target = {P, Q};
    m.matrix = Mat(static_cast<int>(P.dim() * Q.dim()), static_cast<int>(W.dim()));
    for (long long col = 0; col < W.dim(); ++col) {
        const auto& lab = W.basis[col];
        if (kind == PowerKind::exterior) {
            for (const auto& A : subsets_lex(p + q, p)) {
                std::vector<int> SA, SB;
                std::vector<char> inA(lab.size(), 0);
                for (int i : A) inA[i] = 1;
                for (std::size_t i = 0; i < lab.size(); ++i)
                    (inA[i] ? SA : SB).push_back(lab[i]);
                long long row = P.index_of(SA) * Q.dim() + Q.index_of(SB);
                m.matrix.at(static_cast<int>(row), static_cast<int>(col)) = shuffle_sign(SA, SB);
            }
        } else {
            for (long long pi = 0; pi < P.dim(); ++pi) {
                const auto& beta = P.basis[pi];
                std::vector<int> gamma(r);
                bool ok = true;
                Int coeff = 1;
                for (int i = 0; i < r; ++i) {
                    gamma[i] = lab[i] - beta[i];
                    if (gamma[i] < 0) { ok = false; break; }
                    if (kind == PowerKind::symmetric) coeff *= binomial(lab[i], beta[i]);
                }
                if (!ok) continue;
                long long row = pi * Q.dim() + Q.index_of(gamma);
                m.matrix.at(static_cast<int>(row), static_cast<int>(col)) = coeff;
            }
        }
    }
    return m;
}

LabeledMap multiplication(PowerKind kind, int r, int p, int q) {
    PowerSpace W = PowerSpace::make(kind, r, p + q);
    PowerSpace P = PowerSpace::make(kind, r, p);
    PowerSpace Q = PowerSpace::make(kind, r, q);
    LabeledMap m;
    m.source = {P, Q};
    m.target = {W};
    m.matrix = Mat(static_cast<int>(W.dim()), static_cast<int>(P.dim() * Q.dim()));
    for (long long pi = 0; pi < P.dim(); ++pi)
        for (long long qi = 0; qi < Q.dim(); ++qi) {
            long long col = pi * Q.dim() + qi;
            if (kind == PowerKind::exterior) {
                const auto& A = P.basis[pi];
                const auto& B = Q.basis[qi];
                std::vector<int> merged(A);
                merged.insert(merged.end(), B.begin(), B.end());
                std::sort(merged.begin(), merged.end());
                bool repeat = std::adjacent_find(merged.begin(), merged.end()) != merged.end();
                if (repeat) continue;
                long long row = W.index_of(merged);
                m.matrix.at(static_cast<int>(row), static_cast<int>(col)) =
                    shuffle_sign(A, B);
            } else {
                std::vector<int> sum(r);
                Int coeff = 1;
                for (int i = 0; i < r; ++i) {
                    sum[i] = P.basis[pi][i] + Q.basis[qi][i];
                    if (kind == PowerKind::divided) coeff *= binomial(sum[i], P.basis[pi][i]);
                }
                long long row = W.index_of(sum);
                m.matrix.at(static_cast<int>(row), static_cast<int>(col)) = coeff;
            }
        }
    return m;
}

std::pair<LabeledMap, LabeledMap> alpha_beta(int d, int r) {
    PowerSpace S = PowerSpace::make(PowerKind::symmetric, r, d);
    PowerSpace G = PowerSpace::make(PowerKind::divided, r, d);
    LabeledMap alpha, beta;
    alpha.source = {S};
    alpha.target = {G};
    alpha.matrix = Mat(static_cast<int>(G.dim()), static_cast<int>(S.dim()));
    beta.source = {G};
    beta.target = {S};
    beta.matrix = Mat(static_cast<int>(S.dim()), static_cast<int>(G.dim()));
    // The two bases agree as labels, so both maps are diagonal:
    // alpha(x^nu) is the product in Gamma of the nu_i-fold repeated letters,
    // which carries prod_i nu_i!; beta(e^(nu)) counts the interleavings of the
    // shuffle product, the multinomial d! / prod nu_i!.
    for (long long i = 0; i < S.dim(); ++i) {
        const auto& nu = S.basis[i];
        Int prod = 1;
        for (int n : nu) prod *= factorial(n);
        alpha.matrix.at(static_cast<int>(i), static_cast<int>(i)) = prod;
        beta.matrix.at(static_cast<int>(i), static_cast<int>(i)) = multinomial(nu);
    }
    return {alpha, beta};
}

namespace {

/// Divided-power polynomial: exponent vector -> coefficient.
using DivPoly = std::map<std::vector<int>, Int>;

/// Product in the divided power algebra (carries the binomial factors).
DivPoly div_mul(const DivPoly& f, const DivPoly& g) {
    DivPoly out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            std::vector<int> s(a.size());
            Int coeff = ca * cb;
            for (std::size_t i = 0; i < a.size(); ++i) {
                s[i] = a[i] + b[i];
                coeff *= binomial(s[i], a[i]);
            }
            out[s] += coeff;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/// (sum_i c_i v_i)^(k) = sum_{|gamma|=k} (prod c_i^{gamma_i}) v^(gamma).
DivPoly div_power_of_linear(const std::vector<Int>& c, int k) {
    DivPoly out;
    for (const auto& gamma : exponents_lex(static_cast<int>(c.size()), k)) {
        Int coeff = 1;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (int t = 0; t < gamma[i]; ++t) coeff *= c[i];
        if (coeff != 0) out[gamma] = coeff;
    }
    return out;
}

}  // namespace

Mat divided_power_functor(const Mat& f, int d) {
    PowerSpace src = PowerSpace::make(PowerKind::divided, f.cols(), d);
    PowerSpace tgt = PowerSpace::make(PowerKind::divided, f.rows(), d);
    Mat out(static_cast<int>(tgt.dim()), static_cast<int>(src.dim()));
    for (long long col = 0; col < src.dim(); ++col) {
        const auto& A = src.basis[col];
        DivPoly acc;
        acc[std::vector<int>(f.rows(), 0)] = 1;
        for (int j = 0; j < f.cols(); ++j) {
            if (A[j] == 0) continue;
            std::vector<Int> cj(f.rows());
            for (int i = 0; i < f.rows(); ++i) cj[i] = f.at(i, j);
            acc = div_mul(acc, div_power_of_linear(cj, A[j]));
        }
        for (const auto& [gamma, coeff] : acc)
            out.at(static_cast<int>(tgt.index_of(gamma)), static_cast<int>(col)) = coeff;
    }
    return out;
}

Mat divided_pairing(int d) {
    // theta : Gamma^d(V) (x) Gamma^d(V) -> Gamma^d(V (x) V) for V = Z^2 sends
    // e1^(h) e2^(d-h) (x) e1^(l) e2^(d-l) to the coefficient-1 sum of divided
    // monomials (e_i (x) e_j)^(a_ij) over the 2x2 matrices (a_ij) >= 0 with
    // row sums (h, d-h) and column sums (l, d-l).  Compose with Gamma^d of
    // the projection V (x) V -> Lambda^2 V = Z, e1@e2 -> 1, e2@e1 -> -1.
    Mat can(1, 4);  // columns: e1@e1, e1@e2, e2@e1, e2@e2
    can.at(0, 1) = 1;
    can.at(0, 2) = -1;
    Mat gd = divided_power_functor(can, d);  // 1 x dim Gamma^d(Z^4)
    PowerSpace G4 = PowerSpace::make(PowerKind::divided, 4, d);

    Mat gram(d + 1, d + 1);
    for (int h = 0; h <= d; ++h)
        for (int l = 0; l <= d; ++l) {
            Int val = 0;
            // a11 determines the matrix: a12 = h - a11, a21 = l - a11,
            // a22 = d - h - l + a11.
            for (int a11 = std::max(0, h + l - d); a11 <= std::min(h, l); ++a11) {
                std::vector<int> mono = {a11, h - a11, l - a11, d - h - l + a11};
                val += gd.at(0, static_cast<int>(G4.index_of(mono)));
            }
            // basis index of e1^(h) e2^(d-h) = v^((h,d-h)) in exponent-lex order is h
            gram.at(h, l) = val;
        }
    return gram;
}

}  // namespace schurkit
