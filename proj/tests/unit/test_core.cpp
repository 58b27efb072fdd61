#include "doctest.h"

#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "oracles.hpp"
#include "ttlab/codec.hpp"
#include "ttlab/construct.hpp"
#include "ttlab/error.hpp"
#include "ttlab/weight.hpp"

using namespace ttlab;

TEST_CASE("pair states are stored per unordered pair")
{
    Digraph g(4);
    g.set_state(0, 2, PairState::Fwd);
    CHECK(g.has_arc(0, 2));
    CHECK_FALSE(g.has_arc(2, 0));
    CHECK(g.state(2, 0) == PairState::Fwd);

    // Fwd given as (j, i) means j -> i
    g.set_state(3, 1, PairState::Fwd);
    CHECK(g.has_arc(3, 1));
    CHECK(g.state(1, 3) == PairState::Bwd);

    g.set_state(1, 2, PairState::Both);
    CHECK(g.f1() == 2);
    CHECK(g.f2() == 1);
    CHECK(g.arc_count() == 4);
    CHECK_FALSE(g.is_oriented());

    g.set_state(1, 2, PairState::None);
    CHECK(g.is_oriented());
    CHECK(g.f1() + g.f2() <= pair_count(4));
}

TEST_CASE("vertex capacity is 16")
{
    CHECK_NOTHROW(Digraph(16));
    CHECK_THROWS_AS(Digraph(17), CapacityError);
    CHECK_THROWS_AS(Digraph(-1), ArgumentError);
}

TEST_CASE("induced subgraph relabels in vertex order")
{
    Digraph g = blowup(3, 1);
    Digraph sub = g.induced(bit(0) | bit(2));
    CHECK(sub.order() == 2);
    CHECK(sub.has_arc(0, 1));
    CHECK(encode(sub) == "TDG 2 1");
}

TEST_CASE("blowup")
{
    Digraph t2 = blowup(2, 1);
    CHECK(t2.order() == 2);
    CHECK(t2.f1() == 1);
    CHECK(t2.f2() == 0);
    CHECK(t2.has_arc(0, 1));

    Digraph t3 = blowup(3, 1);
    CHECK(encode(t3) == "TDG 3 111");

    Digraph t32 = blowup(3, 2);
    CHECK(t32.order() == 6);
    CHECK(t32.arc_count() == 12);
    CHECK(t32.f2() == 0);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            CHECK(t32.has_arc(u, v) == (u / 2 < v / 2));

    for (int k = 1; k <= 16; ++k)
        for (int t = 1; k * t <= 16; ++t) {
            Digraph g = blowup(k, t);
            CHECK(g.order() == k * t);
            CHECK(g.f1() == t * t * k * (k - 1) / 2);
            CHECK(g.f2() == 0);
            CHECK(BlowupSpec{k, t}.arcs() == g.arc_count());
        }

    CHECK_THROWS_AS(blowup(9, 2), CapacityError);
    CHECK_THROWS_AS(blowup(0, 2), ArgumentError);
    CHECK_THROWS_AS(blowup(2, 0), ArgumentError);
}

TEST_CASE("Turan constructions")
{
    CHECK(turan_part_sizes(5, 3) == std::vector<int>{2, 2, 1});
    CHECK(turan_part_sizes(7, 3) == std::vector<int>{3, 2, 2});

    Digraph d42 = make_dtr(4, 2);
    CHECK(encode(d42) == "TDG 4 033330");
    CHECK(d42.f2() == 4);
    CHECK(d42.f1() == 0);

    Digraph d53 = make_dtr(5, 3);
    CHECK(d53.f2() == 8);
    CHECK(d53.f1() == 0);

    CHECK(encode(make_dtr(3, 3)) == "TDG 3 333");

    CHECK(turan_edges(4, 2) == 4);
    CHECK(turan_edges(6, 3) == 12);
    CHECK(turan_edges(7, 2) == 12);
    CHECK(turan_edges(5, 3) == 8);
    CHECK(turan_edges(0, 1) == 0);
    CHECK(turan_edges(3, 5) == 3);

    Digraph forward = make_forward_turan(5, 2);
    CHECK(forward.is_oriented());
    CHECK(forward.f1() == turan_edges(5, 2));
}

TEST_CASE("weight parsing and range")
{
    CHECK(Weight::parse("2").kind() == Weight::Kind::Rational);
    CHECK(Weight::parse("log3").kind() == Weight::Kind::Log2Of3);
    CHECK(Weight::parse("7/4").to_string() == "7/4");
    CHECK(Weight::parse("14/8").to_string() == "7/4");
    CHECK(Weight::parse("4/2").to_string() == "2");
    CHECK(Weight::log2_of_3().approx() == doctest::Approx(1.5849625007));

    CHECK_THROWS_AS(Weight::parse("3/2"), ArgumentError);
    CHECK_THROWS_AS(Weight::parse("1"), ArgumentError);
    CHECK_THROWS_AS(Weight::parse("9/4"), ArgumentError);
    CHECK_THROWS_AS(Weight::parse("abc"), ArgumentError);
    CHECK_THROWS_AS(Weight::parse("7/"), ArgumentError);
    CHECK_THROWS_AS(Weight::rational(7, 0), ArgumentError);
}

TEST_CASE("weighted size examples")
{
    Weight two = Weight::rational(2, 1);
    WeightedSize d = weighted_size(make_dtr(4, 2));
    CHECK(d == WeightedSize{0, 4});
    CHECK(two.format(d) == "8");

    WeightedSize b = weighted_size(blowup(3, 2));
    CHECK(b == WeightedSize{12, 0});
    CHECK(two.format(b) == "12");

    for (const char * a : {"2", "log3", "7/4", "19/10"}) {
        Weight w = Weight::parse(a);
        CHECK(w.compare(weighted_size(Digraph(5)), WeightedSize{0, 0}) == 0);
        CHECK(w.format(weighted_size(Digraph(5))) == "0");
    }
}

TEST_CASE("rational comparisons are exact")
{
    Weight w = Weight::rational(7, 4);
    CHECK(w.compare({7, 0}, {0, 4}) == 0);
    CHECK(w.compare({8, 0}, {0, 4}) > 0);
    CHECK(w.compare({0, 4}, {6, 0}) > 0);
    CHECK(w.format({1, 2}) == "9/2");
}

TEST_CASE("log2(3) comparisons agree with 3^f2 2^f1 in big integers")
{
    using boost::multiprecision::cpp_int;
    Weight w = Weight::log2_of_3();
    // 3^12 = 531441 > 2^19 = 524288: a near tie that floats must not decide loosely
    CHECK(w.compare({0, 12}, {19, 0}) > 0);
    CHECK(w.compare({0, 5}, {8, 0}) < 0);

    for (int a1 = 0; a1 <= 20; ++a1)
        for (int a2 = 0; a2 <= 20; ++a2)
            for (int b1 = 0; b1 <= 20; ++b1)
                for (int b2 = 0; b2 <= 20; ++b2) {
                    cpp_int lhs = pow(cpp_int(3), static_cast<unsigned>(a2)) << a1;
                    cpp_int rhs = pow(cpp_int(3), static_cast<unsigned>(b2)) << b1;
                    auto expected = lhs < rhs ? std::strong_ordering::less
                                  : lhs > rhs ? std::strong_ordering::greater
                                              : std::strong_ordering::equal;
                    REQUIRE(w.compare({a1, a2}, {b1, b2}) == expected);
                }
}

TEST_CASE("weighted size properties on random graphs")
{
    std::mt19937_64 rng(11);
    Weight two = Weight::rational(2, 1);
    for (int trial = 0; trial < 500; ++trial) {
        int n = static_cast<int>(rng() % 9);
        Digraph g = oracle::random_graph(n, GraphMode::Digraph, rng);
        WeightedSize w = weighted_size(g);
        // e_2 is the arc count
        CHECK(two.compare(w, WeightedSize{g.arc_count(), 0}) == 0);

        // e_a increases strictly with a exactly when f2 > 0
        Ratio low = Ratio(19, 12) * w.f2 + w.f1;
        Ratio high = Ratio(7, 4) * w.f2 + w.f1;
        double mid = Weight::log2_of_3().approx(w);
        if (w.f2 > 0) {
            CHECK(low < high);
            CHECK(boost::rational_cast<double>(low) < mid);
            CHECK(mid < boost::rational_cast<double>(high));
        }
        else {
            CHECK(low == high);
        }
    }
}

TEST_CASE("DT_r(n) has weighted size a * t_r(n) for every a")
{
    for (int n = 0; n <= 12; ++n)
        for (int r = 1; r <= 5; ++r)
            for (const char * a : {"2", "log3", "7/4"}) {
                Weight w = Weight::parse(a);
                WeightedSize s = weighted_size(make_dtr(n, r));
                CHECK(w.compare(s, WeightedSize{0, static_cast<int>(turan_edges(n, r))}) == 0);
                CHECK(s.f1 == 0);
            }
}

TEST_CASE("encoding")
{
    Digraph arc(2);
    arc.add_arc(0, 1);
    CHECK(encode(arc) == "TDG 2 1");
    CHECK(encode(Digraph(0)) == "TDG 0");
    CHECK(encode(Digraph(1)) == "TDG 1");
    CHECK(decode("TDG 1") == Digraph(1));
    CHECK(decode("TDG 3 333\n") == make_dtr(3, 3));
    CHECK(decode("TDG 2 2").has_arc(1, 0));
}

namespace {

std::size_t parse_error_position(const std::string & text)
{
    try {
        decode(text);
    }
    catch (const ParseError & e) {
        return e.position();
    }
    FAIL("expected a parse error for '" << text << "'");
    return 0;
}

} // namespace

TEST_CASE("malformed encodings report the fault position")
{
    CHECK(parse_error_position("") == 0);
    CHECK(parse_error_position("TGD 2 1") == 0);
    CHECK(parse_error_position("TDG x") == 4);
    CHECK(parse_error_position("TDG 3 33") == 8);
    CHECK(parse_error_position("TDG 3 3333") == 9);
    CHECK(parse_error_position("TDG 3 314") == 8);
    CHECK(parse_error_position("TDG 3 3a3") == 7);
    CHECK(parse_error_position("TDG 3333") == 4);
    CHECK(parse_error_position("TDG 3") == 5);
    CHECK(parse_error_position("TDG 1 0") == 5);
    CHECK(parse_error_position("TDG 17 0") == 4);
    CHECK(parse_error_position("TDG 03 000") == 4);
}

TEST_CASE("encoding round-trips and orders graphs like Digraph comparison")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = static_cast<int>(rng() % 9);
        Digraph g = oracle::random_graph(n, GraphMode::Digraph, rng);
        Digraph h = oracle::random_graph(n, GraphMode::Digraph, rng);
        std::string eg = encode(g);
        REQUIRE(decode(eg) == g);
        CHECK((eg < encode(h)) == (g < h));
        CHECK((eg == encode(h)) == (g == h));
    }
}
