#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgpopt/bit_matrix.hpp"
#include "hgpopt/rng.hpp"

namespace hgpopt {

/// One edge of the bipartite Tanner multigraph.
struct EdgeSlot {
    std::int32_t check = 0;
    std::int32_t bit = 0;
    friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
};

/// A degree-constrained bipartite multigraph with a fixed number of edge
/// slots. The slot list is the optimizer's state: actions address slots, so
/// the action space has constant size, and parallel edges are representable.
/// The multigraph is authoritative for degrees; code evaluation always goes
/// through the collapsed binary matrix.
class TannerState {
  public:
    TannerState(std::int32_t num_checks, std::int32_t num_bits, std::vector<EdgeSlot> slots)
        : num_checks_(num_checks), num_bits_(num_bits), slots_(std::move(slots)) {
        if (num_checks_ < 0 || num_bits_ < 0)
            throw std::invalid_argument("TannerState: negative side size");
        for (const auto& s : slots_)
            if (s.check < 0 || s.check >= num_checks_ || s.bit < 0 || s.bit >= num_bits_)
                throw std::out_of_range("TannerState: slot endpoint out of range");
    }

    std::int32_t num_checks() const { return num_checks_; }
    std::int32_t num_bits() const { return num_bits_; }
    std::size_t slot_count() const { return slots_.size(); }
    const std::vector<EdgeSlot>& slots() const { return slots_; }

    /// Multigraph degree of every check node (slot multiplicity counts).
    std::vector<std::int32_t> check_degrees() const {
        std::vector<std::int32_t> d(num_checks_, 0);
        for (const auto& s : slots_) ++d[s.check];
        return d;
    }

    std::vector<std::int32_t> bit_degrees() const {
        std::vector<std::int32_t> d(num_bits_, 0);
        for (const auto& s : slots_) ++d[s.bit];
        return d;
    }

  private:
    std::int32_t num_checks_ = 0;
    std::int32_t num_bits_ = 0;
    std::vector<EdgeSlot> slots_;
};

/// Swaps the endpoints of two edge slots; slot_a < slot_b always.
struct SwapAction {
    std::size_t slot_a = 0;
    std::size_t slot_b = 0;
    friend bool operator==(const SwapAction&, const SwapAction&) = default;
};

/// Replaces slots (u1,v1),(u2,v2) by the crossed edges (u1,v2),(u2,v1).
/// Degrees on both sides are preserved; parallel edges may appear.
inline TannerState apply_swap(const TannerState& s, const SwapAction& a) {
    if (a.slot_a >= a.slot_b || a.slot_b >= s.slot_count())
        throw std::out_of_range("apply_swap: invalid slot pair");
    std::vector<EdgeSlot> slots = s.slots();
    std::swap(slots[a.slot_a].bit, slots[a.slot_b].bit);
    return TannerState(s.num_checks(), s.num_bits(), std::move(slots));
}

/// Collapsed biadjacency matrix: entry 1 iff at least one slot joins the
/// pair. Only this matrix feeds code evaluation.
inline BitMatrix binary_matrix(const TannerState& s) {
    BitMatrix m(static_cast<std::size_t>(s.num_checks()), static_cast<std::size_t>(s.num_bits()));
    for (const auto& e : s.slots()) m.set(e.check, e.bit, true);
    return m;
}

/// State built from a plain biadjacency matrix, one slot per set entry in
/// row-major order.
inline TannerState state_from_matrix(const BitMatrix& m) {
    std::vector<EdgeSlot> slots;
    for (std::size_t i = 0; i < m.rows(); ++i)
        BitMatrix::for_each_set_bit(m.row(i), [&](std::size_t j) {
            slots.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
        });
    return TannerState(static_cast<std::int32_t>(m.rows()), static_cast<std::int32_t>(m.cols()),
                       std::move(slots));
}

/// Slot-order-independent identity of a state: the sorted edge multiset.
/// Two states compare equal here iff they have the same edges with the same
/// multiplicities.
struct CanonicalKey {
    std::vector<std::uint32_t> edges;  // sorted check * num_bits + bit encodings
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline CanonicalKey canonical_key(const TannerState& s) {
    CanonicalKey key;
    key.edges.reserve(s.slot_count());
    for (const auto& e : s.slots())
        key.edges.push_back(static_cast<std::uint32_t>(e.check) *
                                static_cast<std::uint32_t>(s.num_bits()) +
                            static_cast<std::uint32_t>(e.bit));
    std::sort(key.edges.begin(), key.edges.end());
    return key;
}

/// Stable 64-bit digest of a canonical key, for run logs and seed derivation.
inline std::uint64_t key_hash64(const CanonicalKey& key) {
    std::uint64_t h = splitmix64(0x9c0de ^ key.edges.size());
    for (const auto e : key.edges) h = splitmix64(h ^ (e + 0x9e3779b97f4a7c15ULL));
    return h;
}

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& key) const {
        return static_cast<std::size_t>(key_hash64(key));
    }
};

/// Number of swap actions on a state with `slot_count` slots: C(slot_count, 2).
inline std::size_t action_count(std::size_t slot_count) {
    return slot_count * (slot_count - 1) / 2;
}

/// Action at position `index` in the lexicographic enumeration
/// (0,1), (0,2), ..., (0,S-1), (1,2), ...
inline SwapAction action_from_index(std::size_t slot_count, std::size_t index) {
    if (index >= action_count(slot_count))
        throw std::out_of_range("action_from_index: index out of range");
    std::size_t a = 0;
    std::size_t block = slot_count - 1;  // number of pairs starting at a
    while (index >= block) {
        index -= block;
        ++a;
        --block;
    }
    return {a, a + 1 + index};
}

inline std::size_t action_to_index(std::size_t slot_count, const SwapAction& action) {
    return action.slot_a * slot_count - action.slot_a * (action.slot_a + 1) / 2 +
           (action.slot_b - action.slot_a - 1);
}

/// All unordered slot pairs in deterministic lexicographic order.
inline std::vector<SwapAction> enumerate_actions(const TannerState& s) {
    std::vector<SwapAction> actions;
    actions.reserve(action_count(s.slot_count()));
    for (std::size_t a = 0; a < s.slot_count(); ++a)
        for (std::size_t b = a + 1; b < s.slot_count(); ++b) actions.push_back({a, b});
    return actions;
}

/// Uniformly random (col_weight, row_weight)-regular state via the
/// configuration model: bit stubs are paired with a shuffled list of check
/// stubs. Parallel edges are possible and legal.
inline TannerState random_regular(std::int32_t num_checks, std::int32_t num_bits,
                                  std::int32_t col_weight, std::int32_t row_weight,
                                  std::uint64_t seed) {
    if (num_checks <= 0 || num_bits <= 0 || col_weight <= 0 || row_weight <= 0)
        throw std::invalid_argument("random_regular: sizes and weights must be positive");
    const std::int64_t stubs = static_cast<std::int64_t>(num_bits) * col_weight;
    if (stubs != static_cast<std::int64_t>(num_checks) * row_weight)
        throw std::invalid_argument("random_regular: n*col_weight != m*row_weight (" +
                                    std::to_string(stubs) + " vs " +
                                    std::to_string(static_cast<std::int64_t>(num_checks) *
                                                   row_weight) +
                                    ")");
    std::vector<std::int32_t> check_stubs;
    check_stubs.reserve(stubs);
    for (std::int32_t c = 0; c < num_checks; ++c)
        for (std::int32_t k = 0; k < row_weight; ++k) check_stubs.push_back(c);

    Rng rng(seed);
    for (std::size_t i = check_stubs.size(); i > 1; --i)
        std::swap(check_stubs[i - 1], check_stubs[rng.below(i)]);

    std::vector<EdgeSlot> slots;
    slots.reserve(stubs);
    std::size_t next = 0;
    for (std::int32_t b = 0; b < num_bits; ++b)
        for (std::int32_t k = 0; k < col_weight; ++k) slots.push_back({check_stubs[next++], b});
    return TannerState(num_checks, num_bits, std::move(slots));
}

/// Girth of the collapsed simple bipartite graph, or nullopt for a forest.
inline std::optional<std::size_t> girth(const TannerState& s) {
    const BitMatrix m = binary_matrix(s);
    const std::size_t nc = m.rows(), nb = m.cols();
    const std::size_t n_vertices = nc + nb;
    std::vector<std::vector<std::int32_t>> adj(n_vertices);
    for (std::size_t i = 0; i < nc; ++i)
        BitMatrix::for_each_set_bit(m.row(i), [&](std::size_t j) {
            adj[i].push_back(static_cast<std::int32_t>(nc + j));
            adj[nc + j].push_back(static_cast<std::int32_t>(i));
        });

    std::size_t best = 0;
    bool found = false;
    std::vector<std::int32_t> dist(n_vertices), parent(n_vertices);
    for (std::size_t root = 0; root < n_vertices; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<std::int32_t> queue;
        dist[root] = 0;
        queue.push(static_cast<std::int32_t>(root));
        while (!queue.empty()) {
            const std::int32_t u = queue.front();
            queue.pop();
            if (found && static_cast<std::size_t>(2 * dist[u]) >= best) break;
            for (const std::int32_t w : adj[u]) {
                if (w == parent[u]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else {
                    // Non-tree edge closes a cycle through the root.
                    const std::size_t len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
                    if (!found || len < best) {
                        best = len;
                        found = true;
                    }
                }
            }
        }
    }
    if (!found) return std::nullopt;
    return best;
}

/// Raised on malformed alist input; line is 1-based.
class AlistParseError : public std::runtime_error {
  public:
    AlistParseError(std::size_t line, const std::string& what)
        : std::runtime_error("alist parse error at line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::int64_t> alist_line_ints(const std::string& text, std::size_t& pos,
                                                 std::size_t& line_no) {
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        std::istringstream in(line);
        std::vector<std::int64_t> values;
        std::string token;
        while (in >> token) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw AlistParseError(line_no, "expected integer, got '" + token + "'");
            }
        }
        if (!values.empty()) return values;
    }
    throw AlistParseError(line_no + 1, "unexpected end of file");
}

}  // namespace detail

/// Parses a MacKay-convention alist file into a Tanner state (one slot per
/// listed edge; alist files are duplicate-free by definition).
inline TannerState read_alist(const std::string& text) {
    std::size_t pos = 0, line_no = 0;

    const auto header = detail::alist_line_ints(text, pos, line_no);
    if (header.size() != 2) throw AlistParseError(line_no, "expected 'n m'");
    const std::int64_t n = header[0], m = header[1];
    if (n <= 0 || m <= 0) throw AlistParseError(line_no, "sizes must be positive");

    const auto maxima = detail::alist_line_ints(text, pos, line_no);
    if (maxima.size() != 2)
        throw AlistParseError(line_no, "expected 'max_col_weight max_row_weight'");
    const std::int64_t max_col = maxima[0], max_row = maxima[1];

    const auto col_weights = detail::alist_line_ints(text, pos, line_no);
    if (static_cast<std::int64_t>(col_weights.size()) != n)
        throw AlistParseError(line_no, "expected " + std::to_string(n) + " column weights");
    const auto row_weights = detail::alist_line_ints(text, pos, line_no);
    if (static_cast<std::int64_t>(row_weights.size()) != m)
        throw AlistParseError(line_no, "expected " + std::to_string(m) + " row weights");
    for (const auto w : col_weights)
        if (w < 0 || w > max_col)
            throw AlistParseError(line_no, "column weight exceeds declared maximum");
    for (const auto w : row_weights)
        if (w < 0 || w > max_row)
            throw AlistParseError(line_no, "row weight exceeds declared maximum");

    std::vector<EdgeSlot> slots;
    std::vector<std::vector<std::int32_t>> by_bit(n);
    for (std::int64_t b = 0; b < n; ++b) {
        const auto entries = detail::alist_line_ints(text, pos, line_no);
        std::vector<std::int32_t> checks;
        for (const auto e : entries) {
            if (e == 0) continue;  // zero padding
            if (e < 1 || e > m)
                throw AlistParseError(line_no, "check index " + std::to_string(e) +
                                                   " out of range [1, " + std::to_string(m) + "]");
            checks.push_back(static_cast<std::int32_t>(e - 1));
        }
        if (static_cast<std::int64_t>(entries.size()) > max_col ||
            static_cast<std::int64_t>(checks.size()) != col_weights[b])
            throw AlistParseError(line_no, "neighbor list disagrees with declared column weight");
        std::vector<std::int32_t> sorted = checks;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw AlistParseError(line_no, "duplicate neighbor in column list");
        by_bit[b] = std::move(sorted);
        for (const auto c : checks) slots.push_back({c, static_cast<std::int32_t>(b)});
    }

    std::vector<std::vector<std::int32_t>> by_check_claimed(m);
    for (std::int64_t c = 0; c < m; ++c) {
        const auto entries = detail::alist_line_ints(text, pos, line_no);
        std::vector<std::int32_t> bits;
        for (const auto e : entries) {
            if (e == 0) continue;
            if (e < 1 || e > n)
                throw AlistParseError(line_no, "bit index " + std::to_string(e) +
                                                   " out of range [1, " + std::to_string(n) + "]");
            bits.push_back(static_cast<std::int32_t>(e - 1));
        }
        if (static_cast<std::int64_t>(entries.size()) > max_row ||
            static_cast<std::int64_t>(bits.size()) != row_weights[c])
            throw AlistParseError(line_no, "neighbor list disagrees with declared row weight");
        std::sort(bits.begin(), bits.end());
        if (std::adjacent_find(bits.begin(), bits.end()) != bits.end())
            throw AlistParseError(line_no, "duplicate neighbor in row list");
        by_check_claimed[c] = std::move(bits);
    }

    // The two adjacency sections must describe the same edge set.
    std::vector<std::vector<std::int32_t>> by_check_actual(m);
    for (std::int64_t b = 0; b < n; ++b)
        for (const auto c : by_bit[b]) by_check_actual[c].push_back(static_cast<std::int32_t>(b));
    if (by_check_actual != by_check_claimed)
        throw AlistParseError(line_no, "column and row adjacency sections are inconsistent");

    return TannerState(static_cast<std::int32_t>(m), static_cast<std::int32_t>(n),
                       std::move(slots));
}

/// Serializes the collapsed matrix of a state in alist format, bit-exact:
/// padding zeros fill every adjacency line to the declared maximum weight.
inline std::string write_alist(const TannerState& s) {
    const BitMatrix h = binary_matrix(s);
    const std::size_t m = h.rows(), n = h.cols();

    std::vector<std::vector<std::size_t>> bit_nbrs(n), check_nbrs(m);
    for (std::size_t i = 0; i < m; ++i)
        BitMatrix::for_each_set_bit(h.row(i), [&](std::size_t j) {
            bit_nbrs[j].push_back(i);
            check_nbrs[i].push_back(j);
        });

    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : bit_nbrs) max_col = std::max(max_col, v.size());
    for (const auto& v : check_nbrs) max_row = std::max(max_row, v.size());

    std::ostringstream out;
    out << n << ' ' << m << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::size_t j = 0; j < n; ++j) out << bit_nbrs[j].size() << (j + 1 < n ? ' ' : '\n');
    for (std::size_t i = 0; i < m; ++i) out << check_nbrs[i].size() << (i + 1 < m ? ' ' : '\n');
    const auto write_padded = [&out](const std::vector<std::size_t>& nbrs, std::size_t width) {
        for (std::size_t k = 0; k < width; ++k) {
            out << (k < nbrs.size() ? nbrs[k] + 1 : 0);
            out << (k + 1 < width ? ' ' : '\n');
        }
    };
    for (std::size_t j = 0; j < n; ++j) write_padded(bit_nbrs[j], max_col);
    for (std::size_t i = 0; i < m; ++i) write_padded(check_nbrs[i], max_row);
    return out.str();
}

}  // namespace hgpopt
