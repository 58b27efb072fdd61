#include "ttlab/weight.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttlab/error.hpp"

namespace ttlab {

namespace {

const double kLog2Of3 = std::log2(3.0);

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ArgumentError("malformed weight '" + std::string(whole) + "'; expected 2, log3 or p/q");
    return value;
}

} // namespace

Weight Weight::rational(std::int64_t p, std::int64_t q)
{
    if (q <= 0)
        throw ArgumentError("weight denominator must be positive");
    std::int64_t g = std::gcd(p, q);
    if (g != 0) {
        p /= g;
        q /= g;
    }
    // 3/2 < p/q <= 2
    if (! (2 * p > 3 * q && p <= 2 * q))
        throw ArgumentError("weight " + std::to_string(p) + "/" + std::to_string(q) + " outside (3/2, 2]");
    return Weight(Kind::Rational, p, q);
}

Weight Weight::log2_of_3() { return Weight(Kind::Log2Of3, 0, 1); }

Weight Weight::parse(std::string_view text)
{
    if (text == "log3" || text == "log2(3)" || text == "log2_3")
        return log2_of_3();
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
    return rational(parse_int(text, text), 1);
}

double Weight::approx() const noexcept
{
    return kind_ == Kind::Log2Of3 ? kLog2Of3 : static_cast<double>(p_) / static_cast<double>(q_);
}

double Weight::approx(WeightedSize w) const noexcept { return approx() * w.f2 + w.f1; }

std::strong_ordering Weight::compare(WeightedSize lhs, WeightedSize rhs) const
{
    if (lhs == rhs)
        return std::strong_ordering::equal;
    std::int64_t d2 = lhs.f2 - rhs.f2;
    std::int64_t d1 = lhs.f1 - rhs.f1;
    if (kind_ == Kind::Rational)
        return p_ * d2 + q_ * d1 <=> std::int64_t{0};

    // sign of d2*log2(3) + d1
    double estimate = static_cast<double>(d2) * kLog2Of3 + static_cast<double>(d1);
    if (std::abs(estimate) > 1e-6)
        return estimate > 0 ? std::strong_ordering::greater : std::strong_ordering::less;

    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    cpp_int left = pow(cpp_int(3), static_cast<unsigned>(std::max<std::int64_t>(d2, 0)))
                   << static_cast<unsigned>(std::max<std::int64_t>(d1, 0));
    cpp_int right = pow(cpp_int(3), static_cast<unsigned>(std::max<std::int64_t>(-d2, 0)))
                    << static_cast<unsigned>(std::max<std::int64_t>(-d1, 0));
    if (left == right)
        return std::strong_ordering::equal;
    return left > right ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string Weight::to_string() const
{
    if (kind_ == Kind::Log2Of3)
        return "log3";
    if (q_ == 1)
        return std::to_string(p_);
    return std::to_string(p_) + "/" + std::to_string(q_);
}

std::string Weight::format(WeightedSize w) const
{
    if (kind_ == Kind::Log2Of3) {
        if (w.f2 == 0)
            return std::to_string(w.f1);
        std::string s = std::to_string(w.f2) + "*log2(3)";
        if (w.f1 != 0)
            s += "+" + std::to_string(w.f1);
        return s;
    }
    std::int64_t num = p_ * w.f2 + q_ * w.f1;
    std::int64_t den = q_;
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

WeightedSize weighted_size(const Digraph & g) { return {g.f1(), g.f2()}; }

} // namespace ttlab
