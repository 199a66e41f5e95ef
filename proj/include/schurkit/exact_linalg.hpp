#ifndef SCHURKIT_EXACT_LINALG_HPP
#define SCHURKIT_EXACT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schurkit {

using Int = boost::multiprecision::cpp_int;

/// Raised when data that is supposed to satisfy a structural guarantee
/// (d.d = 0, freeness of a cokernel, solvability of a lift) fails to.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix with arbitrary-precision integer entries, row major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Mat&) const = default;
    bool is_zero() const;

    Mat operator*(const Mat& other) const;
    Mat operator-(const Mat& other) const;
    Mat transposed() const;
    Mat negated() const;

    /// Horizontal concatenation [this | other].
    Mat hconcat(const Mat& other) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    /// Text form: one row per line, whitespace separated entries.
    std::string to_text() const;
    static Mat parse(std::istream& in, int rows, int cols);
    /// Parse free-form text: every non-empty line is a row.
    static Mat parse_text(const std::string& text);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// U*A*V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
    Mat U, D, V;
    Mat Uinv;
    std::vector<Int> diagonal() const;
    long long rank() const;
};

/// Deterministic Smith normal form (smallest-nonzero-magnitude pivot, first
/// occurrence in row-major scan order).
SmithForm smith_normal_form(const Mat& A);

/// Kronecker product, matching the left-factor-major tensor basis order.
Mat kron(const Mat& A, const Mat& B);

/// Columns form a basis of the column lattice (column Hermite form).
Mat image_basis(const Mat& A);

long long rank(const Mat& A);

/// Columns form a basis of {x : A x = 0} (a saturated sublattice).
Mat kernel_basis(const Mat& A);

/// Solve A X = B over the integers; returns false when unsolvable.
bool solve(const Mat& A, const Mat& B, Mat& X);

/**
 * A finitely presented abelian group: free part, invariant factors > 1, and a
 * projection matrix from the ambient free module onto the chosen generators
 * (free generators first, then torsion generators in divisibility order).
 * `section` satisfies projection * section = identity.
 */
struct PresentedModule {
    long long free_rank = 0;
    std::vector<Int> torsion;
    Mat projection;
    Mat section;

    bool is_free() const { return torsion.empty(); }
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    long long generator_count() const { return free_rank + static_cast<long long>(torsion.size()); }
    bool operator==(const PresentedModule& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    std::string to_text() const;  // e.g. "Z^2 + Z/2 + Z/6"
};

/// Cokernel of the column space of A inside Z^rows.
PresentedModule cokernel(const Mat& A);

/**
 * A finite chain complex of free modules on a contiguous degree range, with
 * homological differentials d_i : degree i -> degree i-1.  Construction
 * verifies dimensions and d.d = 0.
 */
class ChainComplex {
public:
    ChainComplex() : lo_(0), hi_(-1) {}
    ChainComplex(int lo, int hi, std::vector<long long> ranks, std::map<int, Mat> diffs);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    long long rank(int degree) const;
    /// d_degree; a zero matrix of the correct shape when absent.
    Mat diff(int degree) const;

    Int euler_characteristic() const;

    bool operator==(const ChainComplex&) const = default;

private:
    int lo_, hi_;
    std::vector<long long> ranks_;
    std::map<int, Mat> diffs_;
};

/// Total complex of C (x) D with d(x@y) = dx@y + (-1)^deg(x) x@dy.
/// Degree-k basis: blocks by C-degree ascending; within a block C-index major.
ChainComplex tensor(const ChainComplex& C, const ChainComplex& D);

/// ker(d_i)/im(d_{i+1}); the zero module outside the degree range.
PresentedModule homology(const ChainComplex& C, int degree);
std::vector<PresentedModule> homology_all(const ChainComplex& C);

/**
 * Sparse cokernel engine for large structured presentations.  Columns are
 * given as sparse (row, value) lists.  Elimination retires unit pivots until
 * none remain, then finishes with a dense Smith form on the residual core.
 * When `with_maps` is set, a projection (and section, if the cokernel is
 * free) onto the chosen generators is reconstructed from the pivot log.
 */
class SparseQuotient {
public:
    SparseQuotient(long long rows, std::vector<std::vector<std::pair<int, Int>>> columns,
                   bool with_maps);

    long long free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    long long generator_count() const { return free_rank_ + static_cast<long long>(torsion_.size()); }
    bool is_free() const { return torsion_.empty(); }

    /// Image of the ambient basis vector e_row in the quotient (dense length
    /// generator_count coordinates).  Requires with_maps.
    const std::vector<std::vector<Int>>& projection_columns() const;

    /// Lift of quotient generator g back to the ambient module, as a sparse
    /// (row, value) list.  Requires with_maps and a free quotient.
    const std::vector<std::vector<std::pair<int, Int>>>& section_columns() const;

    PresentedModule to_presented_module() const;

private:
    long long rows_;
    long long free_rank_ = 0;
    std::vector<Int> torsion_;
    std::vector<std::vector<Int>> projection_;  // indexed by ambient row
    std::vector<std::vector<std::pair<int, Int>>> section_;
    bool with_maps_;
};

}  // namespace schurkit

#endif
