#ifndef SCHURKIT_PARTITIONS_HPP
#define SCHURKIT_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schurkit {

/**
 * A partition: weakly decreasing sequence of non-negative integers, kept in
 * normal form (no trailing zeros).  The empty sequence denotes the zero
 * partition.  Invalid input (negative or increasing entries) is a hard error.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parse a comma separated list such as "3,2,1".  Empty string or "0" is the zero partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Zero-padded entry access: lambda_i for any i >= 0.
    int at(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// |lambda|
    int size() const;

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    bool operator==(const Partition&) const = default;

    std::string to_text() const;   // "(3,2,1)"
    std::string to_csv() const;    // "3,2,1"

private:
    std::vector<int> parts_;
};

/// Lexicographic order used for decomposition listings: compare entries at the
/// first differing index (zero-padded), so (1,1,1) < (2,1) < (3).
bool lex_less(const Partition& a, const Partition& b);

struct LexLess {
    bool operator()(const Partition& a, const Partition& b) const { return lex_less(a, b); }
};

/// A skew shape lambda/mu with mu contained in lambda.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

    /// Parse "3,2,1/1" (inner part optional).
    static SkewShape parse(const std::string& text);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int cells() const { return outer_.size() - inner_.size(); }
    bool is_straight() const { return inner_.empty(); }

    /// Conjugate shape lambda^t / mu^t.
    SkewShape conjugate() const { return {outer_.conjugate(), inner_.conjugate()}; }

    bool operator==(const SkewShape&) const = default;

    std::string to_text() const;

private:
    Partition outer_, inner_;
};

/**
 * A filling of a skew shape.  Cell (i,j) uses 0-based row i, 0-based column j,
 * with row i occupying columns inner[i] .. outer[i]-1.
 */
struct Tableau {
    SkewShape shape;
    std::map<std::pair<int, int>, int> entries;

    /// Rows weakly increase left to right, columns strictly increase downwards.
    bool is_column_strict() const;
};

/// Number of column-strict tableaux of the given shape with entries in {1..r}.
long long ssyt_count(const SkewShape& shape, int r);

/// All column-strict tableaux of the shape with entries in {1..r} (oracle use).
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int r);

/// Littlewood-Richardson coefficient c^lambda_{mu,tau} by lattice-word tableau
/// enumeration on lambda/mu with content tau.  Memoized; thread-safe.
long long lr_coefficient(const Partition& mu, const Partition& tau, const Partition& lambda);

/// The multiset of partitions tau with multiplicity c^lambda_{mu,tau}, sorted
/// lexicographically ascending.
std::vector<Partition> skew_decomposition(const SkewShape& shape);

/// All partitions of n (optionally bounded length / largest part), lex ascending.
std::vector<Partition> partitions_of(int n, int max_len = -1, int max_part = -1);

/// All partitions mu with mu contained in lambda, lex ascending.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace schurkit

#endif
