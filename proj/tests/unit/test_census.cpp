#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ttlab/census.hpp"
#include "ttlab/construct.hpp"
#include "ttlab/embed.hpp"
#include "ttlab/enumerate.hpp"
#include "ttlab/error.hpp"

using namespace ttlab;

namespace {

constexpr GraphMode kOriented = GraphMode::Oriented;
constexpr GraphMode kDigraph = GraphMode::Digraph;

} // namespace

TEST_CASE("free counts")
{
    CHECK(count_free(2, {2, 1}, kOriented) == 1);
    CHECK(count_free(3, {3, 1}, kOriented) == 21);
    // 64 digraphs on three vertices; frozen from the unpruned enumeration
    CHECK(count_free(3, {3, 1}, kDigraph) == 39);
    CHECK(oracle::count_free(3, {3, 1}, kDigraph) == 39);
    CHECK(count_free(4, {3, 1}, kOriented) == 317);
    CHECK(count_free(4, {3, 1}, kDigraph) == 921);

    CHECK(count_free(3, {4, 1}, kDigraph) == 64);
    CHECK(count_free(3, {1, 2}, kOriented) == 0);
    CHECK(count_free(0, {3, 1}, kOriented) == 1);
}

TEST_CASE("partite counts")
{
    CHECK(count_partite(2, 2, 1, kOriented) == 3);
    CHECK(count_partite(3, 2, 1, kOriented) == 19);
    CHECK(count_partite(3, 2, 1, kDigraph) == 37);
    CHECK(oracle::count_partite(3, 2, 1, kDigraph) == 37);
    CHECK(count_partite(4, 2, 1, kOriented) == 249);
    CHECK(count_partite(4, 2, 1, kDigraph) == 829);
    CHECK(count_partite(3, 3, 1, kDigraph) == 64);
}

TEST_CASE("pruned counters equal the unpruned enumeration")
{
    for (GraphMode mode : {kOriented, kDigraph})
        for (int n = 0; n <= 4; ++n) {
            for (const BlowupSpec spec : {BlowupSpec{2, 1}, BlowupSpec{3, 1}, BlowupSpec{4, 1}, BlowupSpec{2, 2}})
                CHECK(count_free(n, spec, mode) == oracle::count_free(n, spec, mode));
            for (int r = 1; r <= 3; ++r)
                for (int t = 1; t <= 2; ++t)
                    CHECK(count_partite(n, r, t, mode) == oracle::count_partite(n, r, t, mode));
        }
    CHECK(count_free(5, {3, 1}, kOriented) == oracle::count_free(5, {3, 1}, kOriented));
    CHECK(count_partite(5, 2, 2, kOriented) == oracle::count_partite(5, 2, 2, kOriented));
}

TEST_CASE("parallel counting matches serial counting")
{
    for (int threads : {2, 3}) {
        CHECK(count_free(5, {3, 1}, kOriented, {threads}) == count_free(5, {3, 1}, kOriented));
        CHECK(count_partite(5, 2, 1, kDigraph, {threads}) == count_partite(5, 2, 1, kDigraph));
    }
}

TEST_CASE("partition membership matches brute force over class assignments")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = static_cast<int>(rng() % 7);
        int r = 1 + static_cast<int>(rng() % 3);
        int t = 1 + static_cast<int>(rng() % 2);
        Digraph g = oracle::random_graph(n, trial % 2 ? kDigraph : kOriented, rng);
        CHECK(admits_partition(g, r, t) == oracle::admits_partition(g, r, t));
    }
}

TEST_CASE("lower bound on the partite family")
{
    CHECK(lower_bound_partite(4, 2, 1) == 81);
    CHECK(lower_bound_partite(2, 2, 1) == 3);
    CHECK(lower_bound_partite(2, 2, 1) == count_partite(2, 2, 1, kOriented));
    CHECK(partite_bound_exponent(4, 2, 1) == 0);
    // on two vertices T_2^2 cannot appear, so one arc is allowed
    CHECK(partite_bound_exponent(4, 2, 2) == 1);
    CHECK(lower_bound_partite(4, 2, 2) == 162);

    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int t = 1; t <= 2; ++t)
                CHECK(count_partite(n, r, t, kOriented) >= lower_bound_partite(n, r, t));
}

TEST_CASE("ratio reports")
{
    auto two = ratio_report(2, 2, 1, kOriented);
    CHECK(two.free_count == 3);
    CHECK(two.partite_count == 3);
    CHECK(two.ratio == 1);

    auto three = ratio_report(3, 2, 1, kOriented);
    CHECK(three.free_count == 21);
    CHECK(three.partite_count == 19);
    CHECK(three.ratio == BigRational(21, 19));
    CHECK(three.partite_not_free == 0);
    CHECK(three.lower_bound == 9);

    auto four = ratio_report(4, 2, 1, kOriented);
    CHECK(four.free_count == oracle::count_free(4, {3, 1}, kOriented));
    CHECK(four.partite_count == oracle::count_partite(4, 2, 1, kOriented));

    // t = 2: membership in the partite family does not force freeness
    auto blown = ratio_report(5, 2, 2, kOriented);
    CHECK(blown.partite_count >= blown.partite_not_free);
}

TEST_CASE("every partite graph is T_{r+1}-free when t = 1")
{
    for (GraphMode mode : {kOriented, kDigraph})
        for (int n = 1; n <= 4; ++n)
            for (int r = 1; r <= 3; ++r) {
                std::uint64_t visited = 0;
                std::uint64_t violations = 0;
                for_each_partite(n, r, 1, mode, [&](const Digraph & g) {
                    ++visited;
                    violations += ! is_free(g, {r + 1, 1});
                });
                CHECK(violations == 0);
                CHECK(BigInt(visited) == count_partite(n, r, 1, mode));
                CHECK(count_partite(n, r, 1, mode) <= count_free(n, {r + 1, 1}, mode));
            }
}

TEST_CASE("count monotonicity")
{
    for (int n = 0; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int t = 1; t <= 2; ++t) {
                CHECK(count_free(n, {k, t}, kDigraph) >= count_free(n, {k, t}, kOriented));
                CHECK(count_free(n, {k, t}, kOriented) <= count_free(n, {k + 1, t}, kOriented));
                CHECK(count_free(n, {k, t}, kDigraph) <= count_free(n, {k + 1, t}, kDigraph));
            }
}

TEST_CASE("capacity refusals")
{
    CHECK_THROWS_AS(count_free(7, {3, 1}, kOriented), CapacityError);
    CHECK_THROWS_AS(count_free(6, {3, 1}, kDigraph), CapacityError);
    CHECK_THROWS_AS(count_partite(6, 2, 1, kDigraph), CapacityError);
    CHECK_THROWS_AS(ratio_report(7, 2, 1, kOriented), CapacityError);
    CHECK_THROWS_AS(count_partite(3, 0, 1, kOriented), ArgumentError);
    try {
        count_free(7, {3, 1}, kOriented);
    }
    catch (const CapacityError & e) {
        CHECK(std::string(e.what()).find("n <= 6") != std::string::npos);
    }
}
