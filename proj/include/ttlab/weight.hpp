#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ttlab/digraph.hpp"

namespace ttlab {

/// The pair counts (f1, f2) of a digraph; its weighted size is a*f2 + f1.
struct WeightedSize
{
    int f1 = 0;
    int f2 = 0;

    bool operator==(const WeightedSize &) const = default;
};

/// The weight parameter a in (3/2, 2]: either an exact rational p/q or log2(3).
///
/// Comparisons of weighted sizes are exact. For p/q they cross-multiply; for
/// log2(3) they compare 3^f2 * 2^f1 in arbitrary precision whenever a double
/// evaluation cannot separate the two sides.
class Weight
{
public:
    enum class Kind
    {
        Rational,
        Log2Of3,
    };

    /// Throws ArgumentError unless 3/2 < p/q <= 2.
    static Weight rational(std::int64_t p, std::int64_t q);
    static Weight log2_of_3();
    /// Accepts "2", "log3", "log2(3)" or "p/q".
    static Weight parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    std::int64_t numerator() const noexcept { return p_; }
    std::int64_t denominator() const noexcept { return q_; }

    double approx() const noexcept;
    /// Floating evaluation of a*f2 + f1, for display only.
    double approx(WeightedSize w) const noexcept;

    /// Exact three-way comparison of a*f2 + f1 between two pair counts.
    std::strong_ordering compare(WeightedSize lhs, WeightedSize rhs) const;

    /// Canonical text: "p/q" (or "p" when q = 1) or "log3".
    std::string to_string() const;
    /// Exact textual value of a*f2 + f1, e.g. "31/4" or "4*log2(3)+2".
    std::string format(WeightedSize w) const;

    bool operator==(const Weight &) const = default;

private:
    Weight(Kind kind, std::int64_t p, std::int64_t q) : kind_(kind), p_(p), q_(q) {}

    Kind kind_ = Kind::Rational;
    std::int64_t p_ = 2;
    std::int64_t q_ = 1;
};

/// f1(G), f2(G) of a digraph.
WeightedSize weighted_size(const Digraph & g);

} // namespace ttlab
