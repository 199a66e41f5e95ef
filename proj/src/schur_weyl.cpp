#include "schurkit/schur_weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace schurkit {

std::string to_string(Variant v) { return v == Variant::Schur ? "schur" : "weyl"; }

Mat SparseMat::to_dense() const {
    Mat m(static_cast<int>(rows), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, val] : cols[j]) m.at(i, static_cast<int>(j)) = val;
    return m;
}

namespace {

/// Row/column data of one variant of the box map: the tensor factors of the
/// target and the outer/inner column (resp. row) lengths driving the bounds.
struct BoxLayout {
    PowerKind kind;
    std::vector<int> exps;        // p_j (Schur) or q_i (Weyl), up to the last nonzero
    std::vector<int> outer_next;  // lambda^t_{j+1} resp. lambda_{j+1} (0-based j)
    std::vector<int> inner_here;  // mu^t_j resp. mu_j (0-based j)
    std::vector<PowerSpace> target;
    std::vector<long long> stride;
    long long target_dim = 1;
};

BoxLayout make_layout(const SkewShape& shape, int r, Variant variant) {
    BoxLayout L;
    L.kind = variant == Variant::Schur ? PowerKind::exterior : PowerKind::divided;
    Partition out = variant == Variant::Schur ? shape.outer().conjugate() : shape.outer();
    Partition in = variant == Variant::Schur ? shape.inner().conjugate() : shape.inner();
    int s = 0;
    for (std::size_t j = 0; j < out.length(); ++j)
        if (out.at(j) - in.at(j) != 0) s = static_cast<int>(j) + 1;
    for (int j = 0; j < s; ++j) {
        L.exps.push_back(out.at(j) - in.at(j));
        L.outer_next.push_back(out.at(j + 1));
        L.inner_here.push_back(in.at(j));
        L.target.push_back(PowerSpace::make(L.kind, r, out.at(j) - in.at(j)));
    }
    L.stride.assign(s, 1);
    for (int j = s - 2; j >= 0; --j) L.stride[j] = L.stride[j + 1] * L.target[j + 1].dim();
    for (int j = 0; j < s; ++j) L.target_dim *= L.target[j].dim();
    return L;
}

/// Entries of the pair map (m (x) m) . (1 (x) Delta (x) 1) on one basis
/// element (A, C, B) of Lambda^u (x) Lambda^{c} (x) Lambda^v (or the divided
/// analogue), as (index in factor j, index in factor j+1, coefficient).
void pair_terms(const BoxLayout& L, int b, const std::vector<int>& A, const std::vector<int>& C,
                const std::vector<int>& B, int u, int v,
                std::vector<std::tuple<long long, long long, Int>>& out) {
    const PowerSpace& Tj = L.target[b];
    const PowerSpace& Tj1 = L.target[b + 1];
    int left = L.exps[b] - u;  // size of the piece multiplied into factor j
    if (L.kind == PowerKind::exterior) {
        for (const auto& pick : subsets_lex(static_cast<int>(C.size()), left)) {
            std::vector<int> C1, C2;
            std::vector<char> inC1(C.size(), 0);
            for (int i : pick) inC1[i] = 1;
            for (std::size_t i = 0; i < C.size(); ++i) (inC1[i] ? C1 : C2).push_back(C[i]);
            std::vector<int> X(A), Y(C2);
            X.insert(X.end(), C1.begin(), C1.end());
            Y.insert(Y.end(), B.begin(), B.end());
            std::sort(X.begin(), X.end());
            std::sort(Y.begin(), Y.end());
            if (std::adjacent_find(X.begin(), X.end()) != X.end()) continue;
            if (std::adjacent_find(Y.begin(), Y.end()) != Y.end()) continue;
            int sign = shuffle_sign(C1, C2) * shuffle_sign(A, C1) * shuffle_sign(C2, B);
            out.emplace_back(Tj.index_of(X), Tj1.index_of(Y), sign);
        }
    } else {
        int r = static_cast<int>(A.size());
        // enumerate c1 <= C with |c1| = left
        std::vector<int> c1(r, 0);
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == r) {
                if (rem != 0) return;
                std::vector<int> X(r), Y(r);
                Int coeff = 1;
                for (int i = 0; i < r; ++i) {
                    X[i] = A[i] + c1[i];
                    Y[i] = C[i] - c1[i] + B[i];
                    coeff *= binomial(X[i], A[i]);
                    coeff *= binomial(Y[i], B[i]);
                }
                out.emplace_back(Tj.index_of(X), Tj1.index_of(Y), coeff);
                return;
            }
            for (int t = 0; t <= std::min(C[pos], rem); ++t) {
                c1[pos] = t;
                self(self, pos + 1, rem - t);
            }
            c1[pos] = 0;
        };
        rec(rec, 0, left);
    }
}

}  // namespace

SparseMat box_map_sparse(const SkewShape& shape, int r, Variant variant) {
    BoxLayout L = make_layout(shape, r, variant);
    int s = static_cast<int>(L.exps.size());
    SparseMat M;
    M.rows = s == 0 ? 1 : L.target_dim;
    if (s < 2) return M;

    for (int b = 0; b + 1 < s; ++b) {
        int bound = L.outer_next[b] - L.inner_here[b];
        for (int u = 0; u < bound; ++u)
            for (int v = 0; u + v < bound; ++v) {
                int cdeg = L.exps[b] + L.exps[b + 1] - u - v;
                PowerSpace As = PowerSpace::make(L.kind, r, u);
                PowerSpace Cs = PowerSpace::make(L.kind, r, cdeg);
                PowerSpace Bs = PowerSpace::make(L.kind, r, v);
                // iterate the block's source basis: unchanged factors, then (A,C,B)
                std::vector<long long> dims;
                for (int j = 0; j < s; ++j)
                    if (j != b && j != b + 1) dims.push_back(L.target[j].dim());
                dims.push_back(As.dim());
                dims.push_back(Cs.dim());
                dims.push_back(Bs.dim());
                std::vector<long long> idx(dims.size(), 0);
                bool done = std::any_of(dims.begin(), dims.end(),
                                        [](long long d) { return d == 0; });
                while (!done) {
                    long long off = 0;
                    int pos = 0;
                    for (int j = 0; j < s; ++j)
                        if (j != b && j != b + 1) off += idx[pos++] * L.stride[j];
                    const auto& A = As.basis[idx[pos]];
                    const auto& C = Cs.basis[idx[pos + 1]];
                    const auto& B = Bs.basis[idx[pos + 2]];
                    std::vector<std::tuple<long long, long long, Int>> terms;
                    pair_terms(L, b, A, C, B, u, v, terms);
                    std::map<long long, Int> col;
                    for (const auto& [x, y, c] : terms)
                        col[off + x * L.stride[b] + y * L.stride[b + 1]] += c;
                    std::vector<std::pair<int, Int>> packed;
                    for (const auto& [row, val] : col)
                        if (val != 0) packed.push_back({static_cast<int>(row), val});
                    M.cols.push_back(std::move(packed));
                    // advance mixed-radix counter, last factor fastest
                    int k = static_cast<int>(dims.size()) - 1;
                    while (k >= 0 && ++idx[k] == dims[k]) idx[k--] = 0;
                    done = k < 0;
                }
            }
    }
    return M;
}

Mat box_map(const SkewShape& shape, int r, Variant variant) {
    return box_map_sparse(shape, r, variant).to_dense();
}

namespace {

std::string cache_key(const SkewShape& shape, int r, Variant variant) {
    return shape.to_text() + "|" + std::to_string(r) + "|" + to_string(variant);
}

const SchurPresentation& presentation(const SkewShape& shape, int r, Variant variant) {
    static std::map<std::string, std::unique_ptr<SchurPresentation>> cache;
    static std::mutex mutex;
    std::string key = cache_key(shape, r, variant);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto p = std::make_unique<SchurPresentation>();
    p->shape = shape;
    p->base_rank = r;
    p->variant = variant;
    p->box = box_map(shape, r, variant);
    long long expected;
    if (shape.outer() == shape.inner()) {
        // conventions: rank 1 for lambda = mu over a nonzero module, zero
        // module when M = 0
        expected = r > 0 ? 1 : 0;
        p->module = r > 0 ? cokernel(p->box) : cokernel(Mat::identity(1));
    } else {
        expected = ssyt_count(shape, r);
        p->module = cokernel(p->box);
    }
    if (!p->module.is_free())
        throw structural_error("schur/weyl module has torsion for " + key);
    if (p->module.free_rank != expected)
        throw structural_error("schur/weyl module rank mismatch for " + key);
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(p));
    return *it->second;
}

}  // namespace

const SchurPresentation& schur_module(const SkewShape& shape, int r) {
    return presentation(shape, r, Variant::Schur);
}

const SchurPresentation& weyl_module(const SkewShape& shape, int r) {
    return presentation(shape, r, Variant::Weyl);
}

long long module_rank(const SkewShape& shape, int r, Variant variant) {
    if (shape.outer() == shape.inner()) return r == 0 ? 0 : 1;
    SparseMat M = box_map_sparse(shape, r, variant);
    SparseQuotient Q(M.rows, std::move(M.cols), false);
    if (!Q.is_free())
        throw structural_error("schur/weyl module has torsion for " +
                               cache_key(shape, r, variant));
    return Q.free_rank();
}

Mat schur_as_image(const SkewShape& shape, int r) {
    Partition lamt = shape.outer().conjugate();
    Partition mut = shape.inner().conjugate();
    int s = 0;
    for (std::size_t j = 0; j < lamt.length(); ++j)
        if (lamt.at(j) - mut.at(j) != 0) s = static_cast<int>(j) + 1;
    std::vector<PowerSpace> cols;
    for (int j = 0; j < s; ++j)
        cols.push_back(PowerSpace::make(PowerKind::exterior, r, lamt.at(j) - mut.at(j)));

    int ell = 0;
    for (std::size_t i = 0; i < shape.outer().length(); ++i)
        if (shape.outer().at(i) - shape.inner().at(i) != 0) ell = static_cast<int>(i) + 1;
    std::vector<PowerSpace> rows;
    for (int i = 0; i < ell; ++i)
        rows.push_back(PowerSpace::make(PowerKind::symmetric, r, shape.outer().at(i) -
                                                                     shape.inner().at(i)));
    long long tgt_dim = 1, src_dim = 1;
    for (const auto& p : rows) tgt_dim *= p.dim();
    for (const auto& p : cols) src_dim *= p.dim();
    std::vector<long long> rstride(ell, 1);
    for (int i = ell - 2; i >= 0; --i) rstride[i] = rstride[i + 1] * rows[i + 1].dim();

    Mat D(static_cast<int>(tgt_dim), static_cast<int>(src_dim));
    // the cells of column j sit in rows mu^t_j .. lambda^t_j - 1
    std::vector<std::vector<int>> col_rows(s);
    for (int j = 0; j < s; ++j)
        for (int i = mut.at(j); i < lamt.at(j); ++i) col_rows[j].push_back(i);

    std::vector<long long> idx(s, 0);
    for (long long col = 0; col < src_dim; ++col) {
        // expand: assign each column's letters bijectively to its rows,
        // summing permutation signs, then read off the row monomials
        std::map<long long, Int> image;
        // per-row letter multiset accumulated across columns
        std::vector<std::vector<int>> assignment(ell);
        auto expand = [&](auto&& self, int j, Int sign) -> void {
            if (j == s) {
                long long row_index = 0;
                for (int i = 0; i < ell; ++i) {
                    std::vector<int> expv(r, 0);
                    for (int letter : assignment[i]) ++expv[letter];
                    row_index += rows[i].index_of(expv) * rstride[i];
                }
                image[row_index] += sign;
                return;
            }
            const auto& letters = cols[j].basis[idx[j]];
            int p = static_cast<int>(letters.size());
            std::vector<int> perm(p);
            for (int t = 0; t < p; ++t) perm[t] = t;
            do {
                int inv = 0;
                for (int x = 0; x < p; ++x)
                    for (int y = x + 1; y < p; ++y)
                        if (perm[x] > perm[y]) ++inv;
                for (int t = 0; t < p; ++t)
                    assignment[col_rows[j][t]].push_back(letters[perm[t]]);
                self(self, j + 1, sign * (inv % 2 ? -1 : 1));
                for (int t = 0; t < p; ++t) assignment[col_rows[j][t]].pop_back();
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        expand(expand, 0, 1);
        for (const auto& [row, val] : image) D.at(static_cast<int>(row), static_cast<int>(col)) = val;
        int k = s - 1;
        while (k >= 0 && ++idx[k] == cols[k].dim()) idx[k--] = 0;
    }
    return image_basis(D);
}

Report verify_cauchy(int n, int a, int b) {
    Report rep;
    Int sym_lhs = binomial(static_cast<long long>(a) * b + n - 1, n);
    Int ext_lhs = binomial(static_cast<long long>(a) * b, n);
    Int sym_rhs = 0, ext_rhs = 0;
    for (const auto& lam : partitions_of(n)) {
        long long sa = ssyt_count(SkewShape(lam), a);
        long long sb = ssyt_count(SkewShape(lam), b);
        long long stb = ssyt_count(SkewShape(lam.conjugate()), b);
        sym_rhs += Int(sa) * sb;
        ext_rhs += Int(sa) * stb;
        std::ostringstream line;
        line << "lambda=" << lam.to_text() << ": sym term " << sa * sb << ", ext term "
             << sa * stb;
        rep.note(line.str());
    }
    rep.check(sym_lhs == sym_rhs, "symmetric Cauchy: C(ab+n-1,n) = " + sym_lhs.str() +
                                      " vs sum " + sym_rhs.str());
    rep.check(ext_lhs == ext_rhs,
              "exterior Cauchy: C(ab,n) = " + ext_lhs.str() + " vs sum " + ext_rhs.str());
    return rep;
}

Report verify_direct_sum(const SkewShape& shape, int a, int b) {
    Report rep;
    long long lhs = ssyt_count(shape, a + b);
    long long rhs = 0;
    for (const auto& gamma : subpartitions(shape.outer())) {
        if (!gamma.contains(shape.inner())) continue;
        long long term = ssyt_count(SkewShape(gamma, shape.inner()), a) *
                         ssyt_count(SkewShape(shape.outer(), gamma), b);
        if (term != 0) {
            std::ostringstream line;
            int k = gamma.size() - shape.inner().size();
            line << "k=" << k << " gamma=" << gamma.to_text() << ": " << term;
            rep.note(line.str());
        }
        rhs += term;
    }
    std::ostringstream line;
    line << "direct sum for " << shape.to_text() << " at (" << a << "," << b << "): " << lhs
         << " vs " << rhs;
    rep.check(lhs == rhs, line.str());
    return rep;
}

std::pair<Mat, Report> skew_ses(const Partition& lambda, int d) {
    if (lambda.empty() || d < 1 || lambda.conjugate().at(0) > d)
        throw std::invalid_argument("skew_ses: need lambda != 0 and lambda^t_1 <= d");
    Report rep;
    int p1 = lambda.conjugate().at(0);

    SkewShape skew(lambda, Partition({1}));
    const auto& src = schur_module(skew, d);
    const auto& tgt = schur_module(SkewShape(lambda), d);

    // ambient map on Lambda^d (x) Lambda^{p1-1} (x) rest:
    // comultiply a letter off Lambda^d and wedge it onto the first column
    long long dim_d = PowerSpace::make(PowerKind::exterior, d, d).dim();        // = 1
    long long dim_d1 = PowerSpace::make(PowerKind::exterior, d, d - 1).dim();   // = d
    Mat head = kron(Mat::identity(static_cast<int>(dim_d1)),
                    multiplication(PowerKind::exterior, d, 1, p1 - 1).matrix) *
               kron(comultiplication(PowerKind::exterior, d, d - 1, 1).matrix,
                    Mat::identity(static_cast<int>(
                        PowerSpace::make(PowerKind::exterior, d, p1 - 1).dim())));
    long long rest = src.box.rows() /
                     std::max<long long>(1, PowerSpace::make(PowerKind::exterior, d, p1 - 1).dim());
    Mat full = kron(head, Mat::identity(static_cast<int>(rest)));

    Mat A = kron(Mat::identity(static_cast<int>(dim_d)), src.box);
    Mat B = kron(Mat::identity(static_cast<int>(dim_d1)), tgt.box);
    auto srcmod = cokernel(A);
    auto tgtmod = cokernel(B);
    if (!srcmod.is_free() || !tgtmod.is_free())
        throw structural_error("skew_ses: tensor factor module not free");

    // the ambient map must send relations to relations
    Mat rel = tgtmod.projection * full * A;
    rep.check(rel.is_zero(), "f descends to the Schur modules");

    Mat f = tgtmod.projection * full * srcmod.section;
    if (p1 == d) {
        bool square = f.rows() == f.cols();
        auto diag = smith_normal_form(f).diagonal();
        bool unimodular = square && std::all_of(diag.begin(), diag.end(),
                                                [](const Int& x) { return x == 1; });
        rep.check(unimodular, "lambda^t_1 = d: f is an isomorphism");
    } else {
        rep.check(kernel_basis(f).cols() == 0, "f is injective");
        auto cok = cokernel(f);
        Partition lamt = lambda.conjugate();
        std::vector<int> ext = {d - 1};
        for (int x : lamt.parts()) ext.push_back(x);
        std::sort(ext.rbegin(), ext.rend());
        long long expect = ssyt_count(SkewShape(Partition(ext).conjugate()), d);
        std::ostringstream line;
        line << "cokernel " << cok.to_text() << ", expected free rank " << expect;
        rep.check(cok.is_free() && cok.free_rank == expect, line.str());
    }
    return {f, rep};
}

std::pair<long long, long long> plucker_graded_piece(int n, int d, int m) {
    if (d < 1 || d > n || m < 0) throw std::invalid_argument("plucker_graded_piece: bad input");
    long long D = static_cast<long long>(binomial(n, d).convert_to<long long>());
    long long ring_expect =
        ssyt_count(SkewShape(Partition(std::vector<int>(d, m))), n);
    long long sym_m = PowerSpace::make(PowerKind::symmetric, static_cast<int>(D), m).dim();
    if (m < 2) {
        if (sym_m != ring_expect)
            throw structural_error("plucker_graded_piece: low-degree dimension mismatch");
        return {0, sym_m};
    }
    // quadric relations: symmetrized box relations of shape (2^d)
    Mat box = box_map(SkewShape(Partition(std::vector<int>(d, 2))), n, Variant::Schur);
    Mat symmetrize = multiplication(PowerKind::symmetric, static_cast<int>(D), 1, 1).matrix;
    Mat I2 = image_basis(symmetrize * box);
    long long prev = PowerSpace::make(PowerKind::symmetric, static_cast<int>(D), m - 2).dim();
    Mat mult = multiplication(PowerKind::symmetric, static_cast<int>(D), m - 2, 2).matrix;
    Mat Im = image_basis(mult * kron(Mat::identity(static_cast<int>(prev)), I2));
    long long ideal_dim = Im.cols();
    long long ring_dim = sym_m - ideal_dim;
    if (ring_dim != ring_expect)
        throw structural_error("plucker_graded_piece: ring dimension mismatch");
    return {ideal_dim, ring_dim};
}

}  // namespace schurkit
