#include "schurkit/schur_complexes.hpp"

#include <algorithm>
#include <map>

#include "bar_ops.hpp"
#include "schurkit/schur_weyl.hpp"

namespace schurkit {

namespace {

using bar::BarSpace;
using bar::SignRule;

// Sign conventions for the chain-level comultiplication and multiplication,
// pinned down uniquely by the chain-map property against the Koszul tensor
// differential (guarded by the chain-map tests).
const SignRule kDeltaRule{{0, 0, 1, 0, 1}};
const SignRule kMultRule{{0, 0, 1, 0, 1}};
const SignRule kSymMultRule{{0, 0, 0, 0, 0}};

/// Total complex of a tensor product of graded factors (each factor given by
/// its per-degree component spaces).  The degree-K basis is grouped by the
/// degree composition (k_1, ..., k_f), compositions in lexicographically
/// ascending order; within a composition the index is left-factor-major.
struct GradedTensor {
    std::vector<std::vector<BarSpace>> sp;  // sp[j][k], k = 0..p_j
    int N = 0;

    struct Level {
        std::vector<std::vector<int>> comps;
        std::map<std::vector<int>, int> comp_index;
        std::vector<long long> offsets;  // comps.size() + 1 entries
    };
    std::vector<Level> levels;

    long long dim(int K) const {
        if (K < 0 || K > N) return 0;
        return levels[K].offsets.back();
    }
};

GradedTensor make_tensor(std::vector<std::vector<BarSpace>> factors) {
    GradedTensor T;
    T.sp = std::move(factors);
    for (const auto& f : T.sp) T.N += static_cast<int>(f.size()) - 1;
    T.levels.resize(T.N + 1);
    for (auto& lv : T.levels) lv.offsets.push_back(0);
    int f = static_cast<int>(T.sp.size());
    std::vector<int> comp(f, 0);
    auto emit = [&]() {
        int K = 0;
        long long d = 1;
        for (int j = 0; j < f; ++j) {
            K += comp[j];
            d *= T.sp[j][comp[j]].dim();
        }
        auto& lv = T.levels[K];
        lv.comp_index[comp] = static_cast<int>(lv.comps.size());
        lv.comps.push_back(comp);
        lv.offsets.push_back(lv.offsets.back() + d);
    };
    // mixed radix, factor 0 slowest: lexicographically ascending compositions
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == f) {
            emit();
            return;
        }
        for (int k = 0; k < static_cast<int>(T.sp[pos].size()); ++k) {
            comp[pos] = k;
            self(self, pos + 1);
        }
        comp[pos] = 0;
    };
    rec(rec, 0);
    return T;
}

GradedTensor make_lbar_tensor(int m, int n, const std::vector<int>& ps) {
    std::vector<std::vector<BarSpace>> factors;
    for (int p : ps) factors.push_back(bar::lbar_spaces(m, n, p));
    return make_tensor(std::move(factors));
}

struct Decoded {
    int ci = 0;
    std::vector<long long> locals;
};

Decoded decode(const GradedTensor& T, int K, long long idx) {
    const auto& lv = T.levels[K];
    int ci = static_cast<int>(std::upper_bound(lv.offsets.begin(), lv.offsets.end(), idx) -
                              lv.offsets.begin()) -
             1;
    long long rem = idx - lv.offsets[ci];
    const auto& comp = lv.comps[ci];
    int f = static_cast<int>(comp.size());
    std::vector<long long> dims(f), locals(f);
    for (int j = 0; j < f; ++j) dims[j] = T.sp[j][comp[j]].dim();
    for (int j = f - 1; j >= 0; --j) {
        locals[j] = rem % dims[j];
        rem /= dims[j];
    }
    return {ci, std::move(locals)};
}

long long encode(const GradedTensor& T, int K, const std::vector<int>& comp,
                 const std::vector<long long>& locals) {
    const auto& lv = T.levels[K];
    int ci = lv.comp_index.at(comp);
    long long idx = 0;
    for (std::size_t j = 0; j < comp.size(); ++j)
        idx = idx * T.sp[j][comp[j]].dim() + locals[j];
    return lv.offsets[ci] + idx;
}

using SparseVec = std::vector<std::pair<int, Int>>;

SparseVec compress(std::map<long long, Int>& acc) {
    SparseVec out;
    for (auto& [row, c] : acc)
        if (c != 0) out.emplace_back(static_cast<int>(row), c);
    return out;
}

/// Differential of the total complex on one degree-K basis element:
/// d = sum_j (-1)^{k_1 + ... + k_{j-1}} 1 (x) ... (x) d_j (x) ... (x) 1.
template <typename Diff>
SparseVec tensor_diff(const GradedTensor& T, int K, long long idx, Diff&& factor_diff) {
    std::map<long long, Int> acc;
    Decoded dec = decode(T, K, idx);
    const auto& comp = T.levels[K].comps[dec.ci];
    int prefix = 0;
    for (std::size_t j = 0; j < comp.size(); ++j) {
        if (comp[j] > 0) {
            int sgn = prefix % 2 ? -1 : 1;
            std::vector<int> comp2(comp);
            --comp2[j];
            std::vector<long long> locals2(dec.locals);
            for (const auto& t : factor_diff(static_cast<int>(j), comp[j], dec.locals[j])) {
                locals2[j] = t.i1;
                acc[encode(T, K - 1, comp2, locals2)] += sgn * t.coeff;
            }
        }
        prefix += comp[j];
    }
    return compress(acc);
}

SparseVec lbar_tensor_diff(const GradedTensor& T, const Mat& rho, int K, long long idx) {
    return tensor_diff(T, K, idx, [&](int j, int k, long long li) {
        return bar::lbar_diff(rho, T.sp[j], k, li);
    });
}

/// One relation block of the chain-level box map: on factors (b, b+1) the
/// source triple Lbar^u (x) Lbar^{c} (x) Lbar^v maps by
/// (m (x) m) o (1 (x) Delta (x) 1) into Lbar^{p_b} (x) Lbar^{p_{b+1}};
/// all other factors are unchanged.
struct BoxBlock {
    int b = 0, u = 0, v = 0;
    GradedTensor T;                      // source tensor, f + 1 factors
    std::vector<BarSpace> left, right;   // Lbar^{p_b - u}, Lbar^{p_{b+1} - v}
};

SparseVec box_block_image(const BoxBlock& blk, const GradedTensor& target, int K,
                          long long idx) {
    std::map<long long, Int> acc;
    Decoded dec = decode(blk.T, K, idx);
    const auto& comp = blk.T.levels[K].comps[dec.ci];
    int f = static_cast<int>(target.sp.size());
    std::vector<int> tcomp(f);
    std::vector<long long> tloc(f);
    for (int j = 0; j < blk.b; ++j) {
        tcomp[j] = comp[j];
        tloc[j] = dec.locals[j];
    }
    for (int j = blk.b + 2; j < f; ++j) {
        tcomp[j] = comp[j + 1];
        tloc[j] = dec.locals[j + 1];
    }
    int ku = comp[blk.b], kc = comp[blk.b + 1], kv = comp[blk.b + 2];
    long long lu = dec.locals[blk.b], lc = dec.locals[blk.b + 1], lv = dec.locals[blk.b + 2];
    for (const auto& t : bar::lbar_comult(blk.T.sp[blk.b + 1], blk.left, blk.right, kc, lc,
                                          kDeltaRule))
        for (const auto& t1 : bar::lbar_mult(blk.T.sp[blk.b], blk.left, target.sp[blk.b], ku,
                                             lu, t.k1, t.i1, kMultRule))
            for (const auto& t2 : bar::lbar_mult(blk.right, blk.T.sp[blk.b + 2],
                                                 target.sp[blk.b + 1], t.k2, t.i2, kv, lv,
                                                 kMultRule)) {
                tcomp[blk.b] = t1.k1;
                tloc[blk.b] = t1.i1;
                tcomp[blk.b + 1] = t2.k1;
                tloc[blk.b + 1] = t2.i1;
                acc[encode(target, K, tcomp, tloc)] += t.coeff * t1.coeff * t2.coeff;
            }
    return compress(acc);
}

/// Column lengths p_j = lambda^t_j - mu^t_j up to the last nonzero one,
/// together with the relation bounds lambda^t_{j+1} - mu^t_j.
struct ColumnData {
    std::vector<int> ps;
    std::vector<int> bounds;  // bounds[b] for the pair (b, b+1)
};

ColumnData column_data(const SkewShape& shape) {
    ColumnData C;
    Partition out = shape.outer().conjugate();
    Partition in = shape.inner().conjugate();
    int s = 0;
    for (std::size_t j = 0; j < out.length(); ++j)
        if (out.at(j) - in.at(j) != 0) s = static_cast<int>(j) + 1;
    for (int j = 0; j < s; ++j) C.ps.push_back(out.at(j) - in.at(j));
    for (int b = 0; b + 1 < s; ++b) C.bounds.push_back(out.at(b + 1) - in.at(b));
    return C;
}

}  // namespace

ChainComplex exterior_complex(const Mat& rho, int p) {
    int n = rho.rows(), m = rho.cols();
    auto sp = bar::lbar_spaces(m, n, p);
    std::vector<long long> ranks;
    for (const auto& s : sp) ranks.push_back(s.dim());
    std::map<int, Mat> diffs;
    for (int k = 1; k <= p; ++k) {
        Mat d(static_cast<int>(sp[k - 1].dim()), static_cast<int>(sp[k].dim()));
        for (long long i = 0; i < sp[k].dim(); ++i)
            for (const auto& t : bar::lbar_diff(rho, sp, k, i))
                d.at(static_cast<int>(t.i1), static_cast<int>(i)) += t.coeff;
        diffs[k] = std::move(d);
    }
    return ChainComplex(0, p, std::move(ranks), std::move(diffs));
}

ChainComplex symmetric_complex(const Mat& rho, int d) {
    int n = rho.rows(), m = rho.cols();
    auto sp = bar::sbar_spaces(m, n, d);
    std::vector<long long> ranks;
    for (const auto& s : sp) ranks.push_back(s.dim());
    std::map<int, Mat> diffs;
    for (int k = 1; k <= d; ++k) {
        Mat dk(static_cast<int>(sp[k - 1].dim()), static_cast<int>(sp[k].dim()));
        for (long long i = 0; i < sp[k].dim(); ++i)
            for (const auto& t : bar::sbar_diff(rho, sp, k, i))
                dk.at(static_cast<int>(t.i1), static_cast<int>(i)) += t.coeff;
        diffs[k] = std::move(dk);
    }
    return ChainComplex(0, d, std::move(ranks), std::move(diffs));
}

SchurComplex schur_complex(const SkewShape& shape, const Mat& rho) {
    int n = rho.rows(), m = rho.cols();
    SchurComplex SC;
    SC.shape = shape;
    SC.m = m;
    SC.n = n;
    ColumnData C = column_data(shape);
    int f = static_cast<int>(C.ps.size());
    GradedTensor target = make_lbar_tensor(m, n, C.ps);
    int N = target.N;

    std::vector<BoxBlock> blocks;
    for (int b = 0; b + 1 < f; ++b)
        for (int u = 0; u < C.bounds[b]; ++u)
            for (int v = 0; u + v < C.bounds[b]; ++v) {
                BoxBlock blk;
                blk.b = b;
                blk.u = u;
                blk.v = v;
                std::vector<int> ps;
                for (int j = 0; j < b; ++j) ps.push_back(C.ps[j]);
                ps.push_back(u);
                ps.push_back(C.ps[b] + C.ps[b + 1] - u - v);
                ps.push_back(v);
                for (int j = b + 2; j < f; ++j) ps.push_back(C.ps[j]);
                blk.T = make_lbar_tensor(m, n, ps);
                blk.left = bar::lbar_spaces(m, n, C.ps[b] - u);
                blk.right = bar::lbar_spaces(m, n, C.ps[b + 1] - v);
                blocks.push_back(std::move(blk));
            }

    std::vector<SparseQuotient> quots;
    quots.reserve(N + 1);
    for (int K = 0; K <= N; ++K) {
        std::vector<SparseVec> cols;
        for (const auto& blk : blocks)
            for (long long i = 0; i < blk.T.dim(K); ++i)
                cols.push_back(box_block_image(blk, target, K, i));
        quots.emplace_back(target.dim(K), std::move(cols), true);
        if (!quots.back().is_free())
            throw structural_error("schur_complex: torsion in a degreewise cokernel");
        SC.components.push_back(quots.back().to_presented_module());
    }

    std::vector<long long> ranks;
    for (const auto& q : quots) ranks.push_back(q.free_rank());
    std::map<int, Mat> diffs;
    for (int K = 1; K <= N; ++K) {
        Mat dbar(static_cast<int>(ranks[K - 1]), static_cast<int>(ranks[K]));
        const auto& proj = quots[K - 1].projection_columns();
        const auto& secs = quots[K].section_columns();
        for (long long g = 0; g < ranks[K]; ++g) {
            std::map<long long, Int> amb;
            for (const auto& [row, val] : secs[g])
                for (const auto& [trow, c] : lbar_tensor_diff(target, rho, K, row))
                    amb[trow] += val * c;
            for (const auto& [trow, c] : amb) {
                if (c == 0) continue;
                const auto& p = proj[trow];
                for (long long i = 0; i < ranks[K - 1]; ++i)
                    dbar.at(static_cast<int>(i), static_cast<int>(g)) += c * p[i];
            }
        }
        diffs[K] = std::move(dbar);
    }
    SC.complex = ChainComplex(0, N, std::move(ranks), std::move(diffs));
    return SC;
}

std::vector<long long> schur_complex_image_ranks(const SkewShape& shape, int m, int n) {
    ColumnData C = column_data(shape);
    GradedTensor cols = make_lbar_tensor(m, n, C.ps);
    Partition outer = shape.outer();
    Partition inner = shape.inner();
    int rows = static_cast<int>(outer.length());
    std::vector<std::vector<BarSpace>> row_factors;
    for (int i = 0; i < rows; ++i)
        row_factors.push_back(bar::sbar_spaces(m, n, outer.at(i) - inner.at(i)));
    GradedTensor rowsT = make_tensor(std::move(row_factors));

    auto cell = bar::lbar_spaces(m, n, 1);  // Lbar^1 = Sbar^1 componentwise
    Partition outc = outer.conjugate();
    Partition inc = inner.conjugate();

    // cells of column j, top to bottom, as global rows; column-major overall
    struct Cell {
        int row, col;
    };
    std::vector<Cell> order;
    for (int j = 0; j < static_cast<int>(C.ps.size()); ++j)
        for (int i = inc.at(j); i < outc.at(j); ++i) order.push_back({i, j});
    // target order: row-major
    std::vector<int> perm(order.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return std::pair(order[a].row, order[a].col) < std::pair(order[b].row, order[b].col);
    });

    int N = cols.N;
    std::vector<long long> out(N + 1, 0);
    for (int K = 0; K <= N; ++K) {
        Mat M(static_cast<int>(rowsT.dim(K)), static_cast<int>(cols.dim(K)));
        for (long long idx = 0; idx < cols.dim(K); ++idx) {
            Decoded dec = decode(cols, K, idx);
            const auto& comp = cols.levels[K].comps[dec.ci];
            // split every column into its cells by iterated comultiplication
            struct State {
                std::vector<std::pair<int, long long>> legs;  // column-major cell legs
                Int coeff;
            };
            std::vector<State> states{{{}, 1}};
            for (std::size_t j = 0; j < comp.size(); ++j) {
                int p = C.ps[j];
                std::vector<State> next;
                for (const auto& st : states) {
                    // peel cells off the top one at a time
                    struct Piece {
                        int k;
                        long long i;
                        std::vector<std::pair<int, long long>> legs;
                        Int coeff;
                    };
                    std::vector<Piece> pieces{{comp[j], dec.locals[j], {}, st.coeff}};
                    for (int rem = p; rem > 1; --rem) {
                        std::vector<Piece> nx;
                        auto rest = bar::lbar_spaces(m, n, rem - 1);
                        auto whole_sp = bar::lbar_spaces(m, n, rem);
                        for (const auto& pc : pieces)
                            for (const auto& t :
                                 bar::lbar_comult(whole_sp, cell, rest, pc.k, pc.i, kDeltaRule)) {
                                Piece q = pc;
                                q.legs.push_back({t.k1, t.i1});
                                q.k = t.k2;
                                q.i = t.i2;
                                q.coeff = pc.coeff * t.coeff;
                                nx.push_back(std::move(q));
                            }
                        pieces = std::move(nx);
                    }
                    for (const auto& pc : pieces) {
                        State s2 = st;
                        s2.coeff = pc.coeff;
                        s2.legs = st.legs;
                        for (const auto& lg : pc.legs) s2.legs.push_back(lg);
                        if (p >= 1) s2.legs.push_back({pc.k, pc.i});
                        next.push_back(std::move(s2));
                    }
                }
                states = std::move(next);
            }
            for (const auto& st : states) {
                // Koszul sign of the column-major -> row-major reordering
                int sign_exp = 0;
                for (std::size_t a = 0; a < perm.size(); ++a)
                    for (std::size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b] && st.legs[perm[a]].first % 2 &&
                            st.legs[perm[b]].first % 2)
                            ++sign_exp;
                Int coeff = st.coeff * (sign_exp % 2 ? -1 : 1);
                // multiply the cells of each row left to right
                struct RowState {
                    std::vector<int> comp;
                    std::vector<long long> locals;
                    Int coeff;
                };
                std::vector<RowState> rstates{{std::vector<int>(rows, 0),
                                               std::vector<long long>(rows, 0), coeff}};
                std::size_t pos = 0;
                for (int i = 0; i < rows; ++i) {
                    int q = outer.at(i) - inner.at(i);
                    for (int c = 0; c < q; ++c, ++pos) {
                        auto leg = st.legs[perm[pos]];
                        std::vector<RowState> nx;
                        for (const auto& rs : rstates) {
                            auto acc_sp = bar::sbar_spaces(m, n, c);
                            auto new_sp = bar::sbar_spaces(m, n, c + 1);
                            auto one = bar::sbar_spaces(m, n, 1);
                            for (const auto& t :
                                 bar::sbar_mult(acc_sp, one, new_sp, rs.comp[i], rs.locals[i],
                                                leg.first, leg.second, kSymMultRule)) {
                                RowState r2 = rs;
                                r2.comp[i] = t.k1;
                                r2.locals[i] = t.i1;
                                r2.coeff = rs.coeff * t.coeff;
                                nx.push_back(std::move(r2));
                            }
                        }
                        rstates = std::move(nx);
                    }
                }
                for (const auto& rs : rstates)
                    M.at(static_cast<int>(encode(rowsT, K, rs.comp, rs.locals)),
                         static_cast<int>(idx)) += rs.coeff;
            }
        }
        out[K] = rank(M);
    }
    return out;
}

Report component_rank_check(const SkewShape& shape, int m, int n) {
    Report rep;
    SchurComplex sc = schur_complex(shape, Mat(n, m));
    Partition lam = shape.outer();
    Partition mu = shape.inner();
    Partition lamt = lam.conjugate();
    Partition mut = mu.conjugate();
    int N = shape.cells();
    std::vector<long long> I(N + 1, 0), J(N + 1, 0);
    for (const auto& gam : subpartitions(lam)) {
        if (!gam.contains(mu)) continue;
        int k = static_cast<int>(gam.size() - mu.size());
        Partition gamt = gam.conjugate();
        I[k] += ssyt_count(SkewShape(lam, gam), n) * ssyt_count(SkewShape(gamt, mut), m);
        int kk = static_cast<int>(lam.size() - gam.size());
        J[kk] += ssyt_count(SkewShape(gam, mu), n) * ssyt_count(SkewShape(lamt, gamt), m);
    }
    for (int k = 0; k <= N; ++k) {
        long long r = sc.complex.rank(k);
        rep.check(r == I[k] && r == J[k],
                  "degree " + std::to_string(k) + ": rank " + std::to_string(r) + ", I_k " +
                      std::to_string(I[k]) + ", J_k " + std::to_string(J[k]));
    }
    return rep;
}

std::vector<PresentedModule> derived_schur_homology(const SkewShape& shape, const Mat& rho) {
    return homology_all(schur_complex(shape, rho).complex);
}

Report verify_decalage(const SkewShape& shape, int m) {
    Report rep;
    SchurComplex sc = schur_complex(shape, Mat(0, m));
    int N = sc.complex.hi();
    Partition lamt = shape.outer().conjugate();
    Partition mut = shape.inner().conjugate();
    long long expect = ssyt_count(SkewShape(lamt, mut), m);
    for (int k = 0; k < N; ++k)
        rep.check(sc.complex.rank(k) == 0,
                  "degree " + std::to_string(k) + " vanishes");
    rep.check(sc.complex.rank(N) == expect,
              "top degree " + std::to_string(N) + " has rank " + std::to_string(expect));
    PresentedModule h = homology(sc.complex, N);
    rep.check(h.is_free() && h.free_rank == expect,
              "top homology is free of rank " + std::to_string(expect));
    return rep;
}

Report verify_classical_truncation(const Partition& lambda, const Mat& rho) {
    Report rep;
    int n = rho.rows(), m = rho.cols();
    SkewShape shape(lambda);
    SchurComplex sc = schur_complex(shape, rho);
    PresentedModule h0 = homology(sc.complex, 0);

    // right-exact presentation of the classical Schur module of coker(rho)
    ColumnData C = column_data(shape);
    int f = static_cast<int>(C.ps.size());
    std::vector<PowerSpace> facs;
    for (int p : C.ps) facs.push_back(PowerSpace::make(PowerKind::exterior, n, p));
    long long gen = 1;
    for (const auto& fc : facs) gen *= fc.dim();
    Mat rel(static_cast<int>(gen), 0);
    {
        Mat box = box_map(shape, n, Variant::Schur);
        rel = rel.hconcat(box);
    }
    for (int j = 0; j < f; ++j) {
        if (C.ps[j] == 0) continue;
        PowerSpace lower = PowerSpace::make(PowerKind::exterior, n, C.ps[j] - 1);
        Mat W(static_cast<int>(facs[j].dim()), static_cast<int>(m * lower.dim()));
        for (int i = 0; i < m; ++i)
            for (long long si = 0; si < lower.dim(); ++si) {
                const auto& S = lower.basis[si];
                for (int t = 0; t < n; ++t) {
                    if (rho.at(t, i) == 0) continue;
                    if (std::binary_search(S.begin(), S.end(), t)) continue;
                    int before =
                        static_cast<int>(std::lower_bound(S.begin(), S.end(), t) - S.begin());
                    std::vector<int> S2(S);
                    S2.insert(S2.begin() + before, t);
                    W.at(static_cast<int>(facs[j].index_of(S2)),
                         static_cast<int>(i * lower.dim() + si)) +=
                        (before % 2 ? -rho.at(t, i) : rho.at(t, i));
                }
            }
        Mat before_j = Mat::identity(1);
        for (int a = 0; a < j; ++a) before_j = kron(before_j, Mat::identity(static_cast<int>(facs[a].dim())));
        Mat after_j = Mat::identity(1);
        for (int a = j + 1; a < f; ++a) after_j = kron(after_j, Mat::identity(static_cast<int>(facs[a].dim())));
        rel = rel.hconcat(kron(kron(before_j, W), after_j));
    }
    PresentedModule classical = cokernel(rel);
    rep.check(h0 == classical, "H_0 = " + h0.to_text() + ", right-exact presentation gives " +
                                   classical.to_text());
    return rep;
}

}  // namespace schurkit
