#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permlcp {

namespace detail {

// True iff values is a bijection of {1..values.size()}.
inline bool is_bijection(std::span<const int> values) {
    std::vector<char> seen(values.size() + 1, 0);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline std::string join(std::span<const int> values, std::string_view sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace detail

/// A pattern: either empty or a bijection of {1..length} in one-line notation.
class Pattern {
public:
    Pattern() = default;

    explicit Pattern(std::vector<int> values) : values_(std::move(values)) {
        if (!detail::is_bijection(values_))
            throw std::invalid_argument("pattern is not a bijection of {1..k}: " + detail::join(values_));
    }

    Pattern(std::initializer_list<int> values) : Pattern(std::vector<int>(values)) {}

    const std::vector<int>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// 1-based access, matching one-line notation.
    int at(std::size_t i) const { return values_.at(i - 1); }

    std::string to_string() const { return detail::join(values_); }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::vector<int> values_;
};

/// A non-empty permutation of {1..n}.
class Permutation {
public:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("permutation must be non-empty");
        if (!detail::is_bijection(values_))
            throw std::invalid_argument("not a permutation of {1..n}: " + detail::join(values_));
    }

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    explicit Permutation(const Pattern& p) : Permutation(p.values()) {}

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    const std::vector<int>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// 1-based access.
    int at(std::size_t i) const { return values_.at(i - 1); }

    Pattern as_pattern() const { return Pattern(values_); }
    std::string to_string() const { return detail::join(values_); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Strictly increasing 1-based positions into a host permutation.
class Occurrence {
public:
    Occurrence() = default;

    explicit Occurrence(std::vector<int> positions) : positions_(std::move(positions)) {
        for (std::size_t i = 0; i < positions_.size(); ++i) {
            if (positions_[i] < 1 || (i > 0 && positions_[i] <= positions_[i - 1]))
                throw std::invalid_argument("occurrence positions must be positive and strictly increasing");
        }
    }

    const std::vector<int>& positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }
    std::string to_string() const { return detail::join(positions_); }

    friend bool operator==(const Occurrence&, const Occurrence&) = default;

private:
    std::vector<int> positions_;
};

template <typename T>
concept PermutationLike = requires(const T& t) {
    { t.values() } -> std::convertible_to<const std::vector<int>&>;
};

class ParseError : public std::invalid_argument {
public:
    enum class Kind { empty, malformed, duplicate, out_of_range };

    ParseError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Parses one-line notation. Entries are separated by runs of spaces,
/// optionally containing a single comma ("1 2 3", "1,2,3", "1, 2, 3").
inline Permutation parse_permutation(std::string_view text) {
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };

    std::vector<int> values;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n && is_space(text[pos])) ++pos;
    if (pos == n) throw ParseError(ParseError::Kind::empty, "empty permutation");

    while (pos < n) {
        std::size_t start = pos;
        while (pos < n && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) {
            throw ParseError(ParseError::Kind::malformed,
                             "malformed token at offset " + std::to_string(start) + " in '" + std::string(text) + "'");
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc{} || value == 0) {
            throw ParseError(ec == std::errc::result_out_of_range ? ParseError::Kind::out_of_range
                                                                   : ParseError::Kind::malformed,
                             "invalid entry '" + std::string(text.substr(start, pos - start)) + "'");
        }
        values.push_back(value);

        // Separator: spaces with at most one comma, or end of input.
        std::size_t sep_start = pos;
        int commas = 0;
        while (pos < n && (is_space(text[pos]) || text[pos] == ',')) {
            if (text[pos] == ',') ++commas;
            ++pos;
        }
        if (pos < n && pos == sep_start)
            throw ParseError(ParseError::Kind::malformed, "unexpected character '" + std::string(1, text[pos]) + "'");
        if (commas > 1 || (pos == n && commas > 0))
            throw ParseError(ParseError::Kind::malformed, "stray comma in '" + std::string(text) + "'");
    }

    const int size = static_cast<int>(values.size());
    std::vector<char> seen(values.size() + 1, 0);
    for (int v : values) {
        if (v > size)
            throw ParseError(ParseError::Kind::out_of_range,
                             "value " + std::to_string(v) + " out of range 1.." + std::to_string(size));
        if (seen[v]) throw ParseError(ParseError::Kind::duplicate, "duplicate value " + std::to_string(v));
        seen[v] = 1;
    }
    return Permutation(std::move(values));
}

/// Rank reduction: the pattern order-isomorphic to `values`.
inline Pattern normalize(std::span<const int> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && values[order[r]] == values[order[r - 1]])
            throw std::invalid_argument("normalize: duplicate value " + std::to_string(values[order[r]]));
        ranks[order[r]] = static_cast<int>(r) + 1;
    }
    return Pattern(std::move(ranks));
}

inline Pattern normalize(std::initializer_list<int> values) {
    return normalize(std::span<const int>(values.begin(), values.size()));
}

/// Host values at the given 1-based positions.
inline std::vector<int> extract(std::span<const int> host, const Occurrence& occ) {
    std::vector<int> out;
    out.reserve(occ.size());
    for (int p : occ.positions()) out.push_back(host[static_cast<std::size_t>(p - 1)]);
    return out;
}

/// True iff `occ` is an occurrence of `pi` in `host`.
inline bool is_occurrence(std::span<const int> host, const Pattern& pi, const Occurrence& occ) {
    if (occ.size() != pi.size()) return false;
    if (!occ.empty() && static_cast<std::size_t>(occ.positions().back()) > host.size()) return false;
    return normalize(extract(host, occ)) == pi;
}

template <PermutationLike Host>
bool is_occurrence(const Host& host, const Pattern& pi, const Occurrence& occ) {
    return is_occurrence(std::span<const int>(host.values()), pi, occ);
}

/// Backtracking search for an occurrence of `pi` in `host`. Exponential in
/// the worst case; intended for validation and small inputs.
inline std::optional<Occurrence> find_occurrence(std::span<const int> host, const Pattern& pi) {
    const std::size_t k = pi.size();
    const std::size_t n = host.size();
    if (k == 0) return Occurrence{};
    if (k > n) return std::nullopt;

    // For entry l of pi, the earlier entries holding the nearest smaller and
    // nearest larger values; the host value at step l must lie strictly between.
    std::vector<int> below(k, -1), above(k, -1);
    for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t m = 0; m < l; ++m) {
            if (pi.values()[m] < pi.values()[l] &&
                (below[l] < 0 || pi.values()[m] > pi.values()[static_cast<std::size_t>(below[l])]))
                below[l] = static_cast<int>(m);
            if (pi.values()[m] > pi.values()[l] &&
                (above[l] < 0 || pi.values()[m] < pi.values()[static_cast<std::size_t>(above[l])]))
                above[l] = static_cast<int>(m);
        }
    }

    std::vector<std::size_t> chosen(k);
    auto search = [&](auto&& self, std::size_t l, std::size_t from) -> bool {
        if (l == k) return true;
        for (std::size_t p = from; p + (k - l) <= n; ++p) {
            if (below[l] >= 0 && host[p] < host[chosen[static_cast<std::size_t>(below[l])]]) continue;
            if (above[l] >= 0 && host[p] > host[chosen[static_cast<std::size_t>(above[l])]]) continue;
            chosen[l] = p;
            if (self(self, l + 1, p + 1)) return true;
        }
        return false;
    };
    if (!search(search, 0, 0)) return std::nullopt;

    std::vector<int> positions(k);
    for (std::size_t l = 0; l < k; ++l) positions[l] = static_cast<int>(chosen[l]) + 1;
    return Occurrence(std::move(positions));
}

template <PermutationLike Host>
std::optional<Occurrence> find_occurrence(const Host& host, const Pattern& pi) {
    return find_occurrence(std::span<const int>(host.values()), pi);
}

template <PermutationLike Host>
bool avoids(const Host& host, const Pattern& pi) {
    return !find_occurrence(host, pi).has_value();
}

inline std::ostream& operator<<(std::ostream& os, const Pattern& p) {
    return os << (p.empty() ? std::string("ε") : p.to_string());
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Occurrence& o) { return os << "[" << o.to_string() << "]"; }

} // namespace permlcp
