#include "schurkit/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace schurkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string trimmed;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) return Partition{};
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("Partition: empty entry in '" + text + "'");
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("Partition: bad entry '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> t;
    for (int i = 1; parts_.empty() ? false : i <= parts_[0]; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.at(i) > at(i)) return false;
    return true;
}

std::string Partition::to_text() const {
    return "(" + (parts_.empty() ? std::string("0") : to_csv()) + ")";
}

std::string Partition::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    if (out.empty()) out = "0";
    return out;
}

bool lex_less(const Partition& a, const Partition& b) {
    std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i) != b.at(i)) return a.at(i) < b.at(i);
    }
    return false;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("SkewShape: inner partition not contained in outer");
}

SkewShape SkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text));
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::to_text() const {
    if (inner_.empty()) return outer_.to_text();
    return outer_.to_text() + "/" + inner_.to_text();
}

bool Tableau::is_column_strict() const {
    for (auto& [cell, v] : entries) {
        auto [i, j] = cell;
        if (v < 1) return false;
        auto left = entries.find({i, j - 1});
        if (left != entries.end() && left->second > v) return false;
        auto up = entries.find({i - 1, j});
        if (up != entries.end() && up->second >= v) return false;
    }
    return true;
}

namespace {

struct Cell {
    int row, col;
};

// Cells listed row by row, left to right; this order makes the column-strict
// constraints local (left neighbour and the cell above are already placed).
std::vector<Cell> shape_cells(const SkewShape& shape) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < shape.outer().length(); ++i)
        for (int j = shape.inner().at(i); j < shape.outer().at(i); ++j)
            cells.push_back({static_cast<int>(i), j});
    return cells;
}

bool in_shape(const SkewShape& shape, int i, int j) {
    if (i < 0) return false;
    return j >= shape.inner().at(i) && j < shape.outer().at(i);
}

// Generic DFS over column-strict fillings with entries in {1..r}.  `content`
// (if non-null) prescribes how many of each entry must be used; `lattice`
// additionally enforces the reverse-reading-word lattice condition, which can
// be checked incrementally because the reading word order (rows top to bottom,
// right to left within a row) visits cells in a fixed order.
long long count_fillings(const SkewShape& shape, int r, const std::vector<int>* content,
                         bool lattice, std::vector<Tableau>* collect) {
    auto cells = shape_cells(shape);
    if (cells.empty()) {
        if (content && std::any_of(content->begin(), content->end(), [](int c) { return c != 0; }))
            return 0;
        if (collect) collect->push_back(Tableau{shape, {}});
        return 1;
    }
    if (r <= 0) return 0;

    std::map<std::pair<int, int>, int> grid;
    std::vector<int> used(r + 1, 0);
    long long count = 0;

    // For the lattice condition we track counts along the reading word.  The
    // reading word does not match the fill order (we fill left to right), so
    // the incremental check is done per completed row instead.
    std::vector<std::vector<int>> row_entries(shape.outer().length());

    auto lattice_row_ok = [&](std::size_t row, std::vector<int>& running) {
        // Append row `row` read right-to-left; verify prefixes stay dominant.
        auto& es = row_entries[row];
        for (auto it = es.rbegin(); it != es.rend(); ++it) {
            int v = *it;
            ++running[v];
            if (v > 1 && running[v] > running[v - 1]) return false;
        }
        return true;
    };

    std::vector<int> running_template(r + 2, 0);

    auto dfs = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            if (lattice) {
                std::vector<int> running = running_template;
                for (std::size_t row = 0; row < row_entries.size(); ++row)
                    if (!lattice_row_ok(row, running)) return;
            }
            ++count;
            if (collect) collect->push_back(Tableau{shape, grid});
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 1, hi = r;
        if (in_shape(shape, i, j - 1)) lo = std::max(lo, grid[{i, j - 1}]);
        if (in_shape(shape, i - 1, j)) lo = std::max(lo, grid[{i - 1, j}] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (content && used[v] >= (*content)[v - 1]) continue;
            grid[{i, j}] = v;
            ++used[v];
            row_entries[i].push_back(v);
            self(self, idx + 1);
            row_entries[i].pop_back();
            --used[v];
            grid.erase({i, j});
        }
    };
    dfs(dfs, 0);
    return count;
}

}  // namespace

long long ssyt_count(const SkewShape& shape, int r) {
    if (r < 0) throw std::invalid_argument("ssyt_count: negative alphabet size");
    return count_fillings(shape, r, nullptr, false, nullptr);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int r) {
    std::vector<Tableau> out;
    count_fillings(shape, r, nullptr, false, &out);
    return out;
}

long long lr_coefficient(const Partition& mu, const Partition& tau, const Partition& lambda) {
    if (mu.size() + tau.size() != lambda.size()) return 0;
    if (!lambda.contains(mu)) return 0;

    static std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, long long> cache;
    static std::mutex cache_mutex;
    auto key = std::make_tuple(lambda.parts(), mu.parts(), tau.parts());
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    SkewShape shape(lambda, mu);
    int r = static_cast<int>(tau.length());
    std::vector<int> content(tau.parts());
    long long c;
    if (shape.cells() == 0) {
        c = tau.size() == 0 ? 1 : 0;
    } else if (r == 0) {
        c = 0;
    } else {
        c = count_fillings(shape, r, &content, true, nullptr);
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache[key] = c;
    }
    return c;
}

std::vector<Partition> skew_decomposition(const SkewShape& shape) {
    int n = shape.cells();
    std::vector<Partition> out;
    for (const Partition& alpha : partitions_of(n)) {
        long long c = lr_coefficient(shape.inner(), alpha, shape.outer());
        for (long long k = 0; k < c; ++k) out.push_back(alpha);
    }
    return out;
}

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    if (max_len < 0) max_len = n;
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, std::min(max_part, n));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t row, int cap) -> void {
        if (row == lambda.length()) {
            out.push_back(Partition(cur));
            return;
        }
        // Allow this row to stop early: parts may be zero from here on.
        for (int p = std::min(cap, lambda.at(row)); p >= 0; --p) {
            if (p == 0) {
                out.push_back(Partition(cur));
                return;
            }
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, lambda.at(0));
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace schurkit
