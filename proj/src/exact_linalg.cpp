#include "schurkit/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

namespace schurkit {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("Mat::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("Mat::mul: dimension mismatch");
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                out.at(i, j) += x * other.at(k, j);
            }
        }
    return out;
}

Mat kron(const Mat& A, const Mat& B) {
    Mat out(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            const Int& a = A.at(i, j);
            if (a == 0) continue;
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l) {
                    const Int& b = B.at(k, l);
                    if (b != 0) out.at(i * B.rows() + k, j * B.cols() + l) = a * b;
                }
        }
    return out;
}

Mat Mat::operator-(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("Mat::sub: dimension mismatch");
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
}

Mat Mat::transposed() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::negated() const {
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

Mat Mat::hconcat(const Mat& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("Mat::hconcat: row mismatch");
    Mat out(rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (int j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

void Mat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void Mat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

std::string Mat::to_text() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

Mat Mat::parse(std::istream& in, int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!(in >> m.at(i, j))) throw std::invalid_argument("Mat::parse: not enough entries");
    return m;
}

Mat Mat::parse_text(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        Int v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("Mat::parse_text: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

long long SmithForm::rank() const {
    long long r = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++r;
    return r;
}

SmithForm smith_normal_form(const Mat& A) {
    int r = A.rows(), c = A.cols();
    SmithForm S{Mat::identity(r), A, Mat::identity(c), Mat::identity(r)};
    Mat& D = S.D;
    Mat& U = S.U;
    Mat& V = S.V;
    Mat& Uinv = S.Uinv;

    auto row_op = [&](int i, int t, const Int& q) {  // row_i -= q * row_t
        if (q == 0) return;
        for (int k = 0; k < c; ++k) D.at(i, k) -= q * D.at(t, k);
        for (int k = 0; k < r; ++k) U.at(i, k) -= q * U.at(t, k);
        for (int k = 0; k < r; ++k) Uinv.at(k, t) += q * Uinv.at(k, i);
    };
    auto col_op = [&](int j, int t, const Int& q) {  // col_j -= q * col_t
        if (q == 0) return;
        for (int k = 0; k < r; ++k) D.at(k, j) -= q * D.at(k, t);
        for (int k = 0; k < c; ++k) V.at(k, j) -= q * V.at(k, t);
    };
    auto swap_rows = [&](int i, int j) {
        D.swap_rows(i, j);
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    };
    auto swap_cols = [&](int i, int j) {
        D.swap_cols(i, j);
        V.swap_cols(i, j);
    };
    auto negate_row = [&](int i) {
        for (int k = 0; k < c; ++k) D.at(i, k) = -D.at(i, k);
        for (int k = 0; k < r; ++k) U.at(i, k) = -U.at(i, k);
        for (int k = 0; k < r; ++k) Uinv.at(k, i) = -Uinv.at(k, i);
    };

    int n = std::min(r, c);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero magnitude, first in row-major scan order
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    const Int& v = D.at(i, j);
                    if (v == 0) continue;
                    if (pi < 0 || abs(v) < abs(D.at(pi, pj))) pi = i, pj = j;
                }
            if (pi < 0) {
                t = n;  // nothing left
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                row_op(i, t, q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                col_op(j, t, q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // enforce divisibility of the remaining block by the pivot
            bool divisible = true;
            for (int i = t + 1; i < r && divisible; ++i)
                for (int j = t + 1; j < c && divisible; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_op(t, i, Int(-1));  // row_t += row_i
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (t >= n) break;
        if (D.at(t, t) < 0) negate_row(t);
    }
    // make any remaining diagonal entries canonical (they are zero by construction)
    return S;
}

Mat image_basis(const Mat& A) {
    Mat M = A;
    int r = M.rows(), c = M.cols();
    int cur = 0;
    for (int row = 0; row < r && cur < c; ++row) {
        // Euclid across columns cur..c-1 on this row.
        for (;;) {
            int p = -1;
            for (int j = cur; j < c; ++j)
                if (M.at(row, j) != 0 && (p < 0 || abs(M.at(row, j)) < abs(M.at(row, p)))) p = j;
            if (p < 0) break;
            M.swap_cols(cur, p);
            bool clean = true;
            for (int j = cur + 1; j < c; ++j) {
                if (M.at(row, j) == 0) continue;
                Int q = M.at(row, j) / M.at(row, cur);
                for (int k = 0; k < r; ++k) M.at(k, j) -= q * M.at(k, cur);
                if (M.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (M.at(row, cur) == 0) continue;
        if (M.at(row, cur) < 0)
            for (int k = 0; k < r; ++k) M.at(k, cur) = -M.at(k, cur);
        for (int j = 0; j < cur; ++j) {  // reduce earlier columns on this pivot row
            Int q = M.at(row, j) / M.at(row, cur);
            if (M.at(row, j) < 0 && M.at(row, j) % M.at(row, cur) != 0) q -= 1;
            for (int k = 0; k < r; ++k) M.at(k, j) -= q * M.at(k, cur);
        }
        ++cur;
    }
    Mat out(r, cur);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cur; ++j) out.at(i, j) = M.at(i, j);
    return out;
}

long long rank(const Mat& A) {
    return image_basis(A).cols();
}

Mat kernel_basis(const Mat& A) {
    SmithForm S = smith_normal_form(A);
    long long rk = S.rank();
    Mat out(A.cols(), A.cols() - static_cast<int>(rk));
    for (int i = 0; i < A.cols(); ++i)
        for (int j = static_cast<int>(rk); j < A.cols(); ++j)
            out.at(i, j - static_cast<int>(rk)) = S.V.at(i, j);
    return out;
}

bool solve(const Mat& A, const Mat& B, Mat& X) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve: row mismatch");
    SmithForm S = smith_normal_form(A);
    Mat UB = S.U * B;
    Mat Y(A.cols(), B.cols());
    int n = std::min(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i) {
        Int d = (i < n) ? S.D.at(i, i) : Int(0);
        for (int j = 0; j < B.cols(); ++j) {
            if (d != 0) {
                if (UB.at(i, j) % d != 0) return false;
                Y.at(i, j) = UB.at(i, j) / d;
            } else if (UB.at(i, j) != 0) {
                return false;
            }
        }
    }
    X = S.V * Y;
    return true;
}

std::string PresentedModule::to_text() const {
    std::string out;
    if (free_rank > 0) out = free_rank == 1 ? "Z" : ("Z^" + std::to_string(free_rank));
    for (const Int& t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.str();
    }
    if (out.empty()) out = "0";
    return out;
}

PresentedModule cokernel(const Mat& A) {
    SmithForm S = smith_normal_form(A);
    int r = A.rows();
    int n = std::min(r, A.cols());
    std::vector<int> free_idx, tor_idx;
    std::vector<Int> torsion;
    for (int i = 0; i < r; ++i) {
        Int d = (i < n) ? S.D.at(i, i) : Int(0);
        if (d == 0)
            free_idx.push_back(i);
        else if (d > 1)
            tor_idx.push_back(i);
    }
    for (int i : tor_idx) torsion.push_back(S.D.at(i, i));

    std::vector<int> gens = free_idx;
    gens.insert(gens.end(), tor_idx.begin(), tor_idx.end());

    PresentedModule M;
    M.free_rank = static_cast<long long>(free_idx.size());
    M.torsion = std::move(torsion);
    M.projection = Mat(static_cast<int>(gens.size()), r);
    M.section = Mat(r, static_cast<int>(gens.size()));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int k = 0; k < r; ++k) {
            M.projection.at(static_cast<int>(g), k) = S.U.at(gens[g], k);
            M.section.at(k, static_cast<int>(g)) = S.Uinv.at(k, gens[g]);
        }
    return M;
}

ChainComplex::ChainComplex(int lo, int hi, std::vector<long long> ranks, std::map<int, Mat> diffs)
    : lo_(lo), hi_(hi), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (hi_ < lo_) throw std::invalid_argument("ChainComplex: empty degree range");
    if (static_cast<int>(ranks_.size()) != hi_ - lo_ + 1)
        throw std::invalid_argument("ChainComplex: rank list does not match degree range");
    for (auto& [i, d] : diffs_) {
        if (i <= lo_ || i > hi_) throw std::invalid_argument("ChainComplex: differential out of range");
        if (d.rows() != rank(i - 1) || d.cols() != rank(i))
            throw std::invalid_argument("ChainComplex: differential dimension mismatch");
    }
    for (int i = lo_ + 1; i < hi_; ++i) {
        Mat dd = diff(i) * diff(i + 1);
        if (!dd.is_zero()) throw structural_error("ChainComplex: d.d != 0 at degree " + std::to_string(i + 1));
    }
}

long long ChainComplex::rank(int degree) const {
    if (degree < lo_ || degree > hi_) return 0;
    return ranks_[degree - lo_];
}

Mat ChainComplex::diff(int degree) const {
    auto it = diffs_.find(degree);
    if (it != diffs_.end()) return it->second;
    return Mat(static_cast<int>(rank(degree - 1)), static_cast<int>(rank(degree)));
}

Int ChainComplex::euler_characteristic() const {
    Int chi = 0;
    for (int i = lo_; i <= hi_; ++i) chi += ((i % 2 + 2) % 2 == 0 ? 1 : -1) * Int(rank(i));
    return chi;
}

ChainComplex tensor(const ChainComplex& C, const ChainComplex& D) {
    int lo = C.lo() + D.lo(), hi = C.hi() + D.hi();
    std::vector<long long> ranks;
    auto block_offsets = [&](int k) {
        // offsets of blocks (i, k-i) for i ascending; returns pairs (i, offset)
        std::vector<std::pair<int, long long>> offs;
        long long off = 0;
        for (int i = C.lo(); i <= C.hi(); ++i) {
            int j = k - i;
            long long sz = C.rank(i) * D.rank(j);
            if (sz > 0) offs.push_back({i, off});
            off += sz;
        }
        return offs;
    };
    for (int k = lo; k <= hi; ++k) {
        long long total = 0;
        for (int i = C.lo(); i <= C.hi(); ++i) total += C.rank(i) * D.rank(k - i);
        ranks.push_back(total);
    }
    std::map<int, Mat> diffs;
    for (int k = lo + 1; k <= hi; ++k) {
        long long rows = ranks[k - 1 - lo], cols = ranks[k - lo];
        if (rows == 0 || cols == 0) continue;
        Mat d(static_cast<int>(rows), static_cast<int>(cols));
        auto src = block_offsets(k), dst = block_offsets(k - 1);
        auto dst_off = [&](int i) -> long long {
            for (auto& [bi, off] : dst)
                if (bi == i) return off;
            return -1;
        };
        for (auto& [i, soff] : src) {
            int j = k - i;
            long long cr = C.rank(i), dr = D.rank(j);
            // component dC_i (x) id
            long long off1 = dst_off(i - 1);
            if (off1 >= 0 && C.rank(i - 1) > 0) {
                Mat dc = C.diff(i);
                for (int a = 0; a < dc.rows(); ++a)
                    for (int b = 0; b < dc.cols(); ++b) {
                        if (dc.at(a, b) == 0) continue;
                        for (long long q = 0; q < dr; ++q)
                            d.at(static_cast<int>(off1 + a * dr + q),
                                 static_cast<int>(soff + b * dr + q)) = dc.at(a, b);
                    }
            }
            // component (-1)^i id (x) dD_j
            long long off2 = dst_off(i);
            if (off2 >= 0 && D.rank(j - 1) > 0) {
                Mat dd = D.diff(j);
                Int sign = (((i % 2) + 2) % 2 == 0) ? 1 : -1;
                long long dr1 = D.rank(j - 1);
                for (int a = 0; a < dd.rows(); ++a)
                    for (int b = 0; b < dd.cols(); ++b) {
                        if (dd.at(a, b) == 0) continue;
                        for (long long p = 0; p < cr; ++p)
                            d.at(static_cast<int>(off2 + p * dr1 + a),
                                 static_cast<int>(soff + p * dr + b)) = sign * dd.at(a, b);
                    }
            }
        }
        diffs[k] = std::move(d);
    }
    return ChainComplex(lo, hi, std::move(ranks), std::move(diffs));
}

PresentedModule homology(const ChainComplex& C, int degree) {
    if (degree < C.lo() || degree > C.hi()) return PresentedModule{};
    Mat d_in = C.diff(degree + 1);
    Mat d_out = C.diff(degree);
    Mat K = kernel_basis(d_out);
    Mat X;
    if (!solve(K, d_in, X))
        throw structural_error("homology: image does not lie in the kernel");
    return cokernel(X);
}

std::vector<PresentedModule> homology_all(const ChainComplex& C) {
    std::vector<PresentedModule> out;
    for (int i = C.lo(); i <= C.hi(); ++i) out.push_back(homology(C, i));
    return out;
}

SparseQuotient::SparseQuotient(long long rows,
                               std::vector<std::vector<std::pair<int, Int>>> columns,
                               bool with_maps)
    : rows_(rows), with_maps_(with_maps) {
    std::vector<std::map<int, Int>> cols;
    cols.reserve(columns.size());
    for (auto& col : columns) {
        std::map<int, Int> m;
        for (auto& [r, v] : col) {
            if (v != 0) {
                auto [it, fresh] = m.emplace(r, v);
                if (!fresh) it->second += v;
            }
        }
        for (auto it = m.begin(); it != m.end();)
            it = (it->second == 0) ? m.erase(it) : std::next(it);
        if (!m.empty()) cols.push_back(std::move(m));
    }
    columns.clear();

    int ncols = static_cast<int>(cols.size());
    std::vector<std::set<int>> row_cols(rows);
    for (int c = 0; c < ncols; ++c)
        for (auto& [r, v] : cols[c]) row_cols[r].insert(c);

    std::vector<bool> col_live(ncols, true), row_live(rows, true);

    using QE = std::pair<long long, int>;  // (column nnz, column index)
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> queue;
    for (int c = 0; c < ncols; ++c) queue.push({static_cast<long long>(cols[c].size()), c});

    struct PivotLog {
        int row;
        int sign;  // pivot value
        std::vector<std::pair<int, Int>> residual;
    };
    std::vector<PivotLog> log;

    auto retire_col = [&](int c) {
        for (auto& [r, v] : cols[c]) row_cols[r].erase(c);
        cols[c].clear();
        col_live[c] = false;
    };

    while (!queue.empty()) {
        auto [sz, c] = queue.top();
        queue.pop();
        if (!col_live[c] || static_cast<long long>(cols[c].size()) != sz) continue;
        // find a unit entry on a live row, preferring low row degree
        int pr = -1;
        long long best = -1;
        int psign = 1;
        for (auto& [r, v] : cols[c]) {
            if (!row_live[r]) continue;  // cannot happen: pivot rows are cleared from live cols
            if (v == 1 || v == -1) {
                long long deg = static_cast<long long>(row_cols[r].size());
                if (pr < 0 || deg < best) {
                    pr = r;
                    best = deg;
                    psign = (v > 0) ? 1 : -1;
                }
            }
        }
        if (pr < 0) continue;  // no unit entry; leave for the dense core

        // record residual and retire pivot column/row
        PivotLog entry;
        entry.row = pr;
        entry.sign = psign;
        for (auto& [r, v] : cols[c])
            if (r != pr) entry.residual.push_back({r, v});

        std::vector<int> touching(row_cols[pr].begin(), row_cols[pr].end());
        for (int c2 : touching) {
            if (c2 == c) continue;
            Int a = cols[c2][pr];
            Int factor = a * psign;
            // col_c2 -= factor * col_c  (clears row pr in c2)
            for (auto& [r, v] : cols[c]) {
                Int& dst = cols[c2][r];
                bool had = (dst != 0);
                dst -= factor * v;
                if (dst == 0) {
                    cols[c2].erase(r);
                    if (had) row_cols[r].erase(c2);
                } else if (!had) {
                    row_cols[r].insert(c2);
                }
            }
            if (cols[c2].empty())
                col_live[c2] = false;
            else
                queue.push({static_cast<long long>(cols[c2].size()), c2});
        }
        retire_col(c);
        row_live[pr] = false;
        log.push_back(std::move(entry));
    }

    // Dense core on the remaining live columns.
    std::set<int> core_rows_set;
    std::vector<int> core_cols;
    for (int c = 0; c < ncols; ++c)
        if (col_live[c] && !cols[c].empty()) {
            core_cols.push_back(c);
            for (auto& [r, v] : cols[c]) core_rows_set.insert(r);
        }
    std::vector<int> core_rows(core_rows_set.begin(), core_rows_set.end());
    std::map<int, int> core_row_index;
    for (std::size_t i = 0; i < core_rows.size(); ++i) core_row_index[core_rows[i]] = static_cast<int>(i);

    Mat core(static_cast<int>(core_rows.size()), static_cast<int>(core_cols.size()));
    for (std::size_t j = 0; j < core_cols.size(); ++j)
        for (auto& [r, v] : cols[core_cols[j]]) core.at(core_row_index[r], static_cast<int>(j)) = v;
    PresentedModule core_coker = cokernel(core);

    std::vector<int> untouched_rows;  // live rows not in the core
    for (long long r = 0; r < rows_; ++r)
        if (row_live[r] && !core_row_index.count(static_cast<int>(r)))
            untouched_rows.push_back(static_cast<int>(r));

    free_rank_ = static_cast<long long>(untouched_rows.size()) + core_coker.free_rank;
    torsion_ = core_coker.torsion;

    if (!with_maps_) return;

    long long gens = generator_count();
    long long core_free = core_coker.free_rank;
    long long untouched = static_cast<long long>(untouched_rows.size());
    // generator layout: untouched free rows, core free generators, core torsion generators
    projection_.assign(rows_, {});
    auto dense_zero = [&]() { return std::vector<Int>(gens); };

    std::vector<std::vector<Int>> expr(rows_);
    for (std::size_t i = 0; i < untouched_rows.size(); ++i) {
        expr[untouched_rows[i]] = dense_zero();
        expr[untouched_rows[i]][i] = 1;
    }
    for (std::size_t i = 0; i < core_rows.size(); ++i) {
        auto v = dense_zero();
        for (long long g = 0; g < core_coker.generator_count(); ++g) {
            long long pos = (g < core_free) ? untouched + g : untouched + g;  // same offset: core gens follow untouched
            v[pos] = core_coker.projection.at(static_cast<int>(g), static_cast<int>(i));
        }
        expr[core_rows[i]] = std::move(v);
    }
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        auto v = dense_zero();
        for (auto& [r, b] : it->residual) {
            const auto& e = expr[r];
            for (long long g = 0; g < gens; ++g)
                if (e[g] != 0) v[g] -= Int(it->sign) * b * e[g];
        }
        expr[it->row] = std::move(v);
    }
    projection_ = std::move(expr);

    if (torsion_.empty()) {
        section_.assign(gens, {});
        for (std::size_t i = 0; i < untouched_rows.size(); ++i)
            section_[i] = {{untouched_rows[i], Int(1)}};
        for (long long g = 0; g < core_free; ++g) {
            std::vector<std::pair<int, Int>> col;
            for (std::size_t i = 0; i < core_rows.size(); ++i) {
                const Int& v = core_coker.section.at(static_cast<int>(i), static_cast<int>(g));
                if (v != 0) col.push_back({core_rows[i], v});
            }
            section_[untouched + g] = std::move(col);
        }
    }
}

const std::vector<std::vector<Int>>& SparseQuotient::projection_columns() const {
    if (!with_maps_) throw std::logic_error("SparseQuotient: maps were not requested");
    return projection_;
}

const std::vector<std::vector<std::pair<int, Int>>>& SparseQuotient::section_columns() const {
    if (!with_maps_) throw std::logic_error("SparseQuotient: maps were not requested");
    if (!torsion_.empty()) throw structural_error("SparseQuotient: section requires a free quotient");
    return section_;
}

PresentedModule SparseQuotient::to_presented_module() const {
    PresentedModule M;
    M.free_rank = free_rank_;
    M.torsion = torsion_;
    if (with_maps_) {
        long long gens = generator_count();
        M.projection = Mat(static_cast<int>(gens), static_cast<int>(rows_));
        for (long long r = 0; r < rows_; ++r)
            for (long long g = 0; g < gens; ++g) M.projection.at(static_cast<int>(g), static_cast<int>(r)) = projection_[r][g];
        if (torsion_.empty()) {
            M.section = Mat(static_cast<int>(rows_), static_cast<int>(gens));
            for (long long g = 0; g < gens; ++g)
                for (auto& [r, v] : section_[g]) M.section.at(r, static_cast<int>(g)) = v;
        }
    }
    return M;
}

}  // namespace schurkit
