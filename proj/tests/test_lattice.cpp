#include <doctest.h>

#include "shc/lattice.hpp"
#include "shc/oracles.hpp"

using namespace shc;

namespace {
Path P(const std::string& w) { return Path::parse(w); }
}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("compare") {
    CHECK(compare(P("ud"), P("du")) == Order::greater);
    CHECK(compare(P("udu"), P("uud")) == Order::less);
    CHECK(compare(P("ud"), P("ud")) == Order::equal);
    CHECK(compare(P("uddu"), P("duud")) == Order::incomparable);
    CHECK_THROWS_AS(compare(P("u"), P("ud")), check_error);
}

TEST_CASE("join and meet") {
    CHECK(join(P("ud"), P("du")) == P("ud"));
    CHECK(meet(P("ud"), P("du")) == P("du"));
    CHECK(join(P("udud"), P("duud")) == P("udud"));
    CHECK(meet(P("udud"), P("duud")) == P("duud"));
    CHECK(join(P("uddu"), P("duud")) == P("udud"));
    CHECK(meet(P("uddu"), P("duud")) == P("dudu"));
}

TEST_CASE("chain length") {
    CHECK(chain_length(P("ud"), P("ud")) == 0);
    CHECK(chain_length(P("dd"), P("uu")) == 3);
    CHECK(chain_length(P("duduud"), P("uuuuuu")) == 11);
    CHECK_THROWS_AS(chain_length(P("ud"), P("du")), check_error);
}

TEST_CASE("covers and filling") {
    CHECK(covers(P("uuu")).empty());
    CHECK(covers(P("dd")) == std::vector<Path>{P("du")});
    CHECK(covers(P("duduud")).size() == 3);
    CHECK(filling(P("uuu")) == P("uuu"));
    CHECK(filling(P("dd")) == P("du"));
    CHECK(filling(P("du")) == P("ud"));
    CHECK(filling(P("ud")) == P("uu"));
    CHECK(filling(P("dduu")) == P("dudu"));
}

TEST_CASE("degree") {
    CHECK(degree(P("uuuuu")) == 0);
    CHECK(degree(P("dd")) == 3);
    CHECK(degree(P("duduud")) == 6);
}

TEST_CASE("interval counting") {
    CHECK(count_interval(P("udud"), P("udud")) == 1);
    CHECK(count_interval(P("udud"), P("uudd")) == 2);
    CHECK(count_interval(P("du"), P("uu")) == 3);
    CHECK_THROWS_AS(count_interval(P("uu"), P("du")), check_error);
}

TEST_CASE("multichain classification") {
    Multichain sat({P("dd"), P("du"), P("ud"), P("uu")});
    auto c = classify_multichain(sat, true);
    CHECK(c.is_chain);
    CHECK(c.small_intervals);
    CHECK(c.is_saturated);

    Multichain lazy({P("dd"), P("dd"), P("du"), P("ud"), P("uu")});
    c = classify_multichain(lazy, true);
    CHECK_FALSE(c.is_chain);
    CHECK(c.small_intervals);
    CHECK_FALSE(c.is_saturated);

    Multichain jump({P("dd"), P("uu")});
    c = classify_multichain(jump, true);
    CHECK(c.is_chain);
    CHECK_FALSE(c.small_intervals);  // uu is not reachable by flipping valleys of dd
    CHECK_FALSE(c.is_saturated);

    CHECK_THROWS_AS(Multichain({P("ud"), P("du")}), check_error);
    CHECK_THROWS_AS(classify_multichain(Multichain({P("dd"), P("du")}), true), check_error);
}

TEST_CASE("lattice laws on all pairs, n <= 8") {
    for (int n = 1; n <= 8; n += 7) {  // n = 1 and n = 8
        auto paths = all_paths(n);
        for (const Path& a : paths) {
            CHECK(join(a, a) == a);
            CHECK(meet(a, a) == a);
            for (const Path& b : paths) {
                Path j = join(a, b), m = meet(a, b);
                CHECK(j == join(b, a));
                CHECK(m == meet(b, a));
                CHECK(join(a, m) == a);  // absorption
                CHECK(meet(a, j) == a);
                CHECK(below_or_equal(a, j));
                CHECK(below_or_equal(m, a));
            }
        }
    }
    // join is the least upper bound: exhaustive scan at n = 5
    auto paths = all_paths(5);
    for (const Path& a : paths)
        for (const Path& b : paths) {
            Path j = join(a, b);
            for (const Path& c : paths)
                if (below_or_equal(a, c) && below_or_equal(b, c)) CHECK(below_or_equal(j, c));
        }
}

TEST_CASE("filling dominates covers, n <= 12") {
    for (int n : {3, 7, 12}) {
        for (const Path& p : all_paths(n)) {
            Path f = filling(p);
            CHECK(below_or_equal(p, f));
            Path joined = p;
            for (const Path& c : covers(p)) {
                CHECK(below_or_equal(p, c));
                CHECK(chain_length(p, c) == 1);
                joined = join(joined, c);
            }
            CHECK(joined == f);
        }
    }
}

TEST_CASE("small-interval criterion equals valley-flip definition, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Path& x : all_paths(n)) {
            auto vp = valley_peak_profile(x).valleys;
            // reachable = joins of cover subsets; compare with [x, filling(x)]
            std::vector<Path> reachable;
            auto cs = covers(x);
            for (unsigned mask = 0; mask < (1u << cs.size()); ++mask) {
                Path y = x;
                for (size_t i = 0; i < cs.size(); ++i)
                    if (mask & (1u << i)) y = join(y, cs[i]);
                reachable.push_back(y);
            }
            for (const Path& y : oracle::enumerate_interval(x, Path::top(n))) {
                bool small = is_small_step(x, y);
                bool direct = std::find(reachable.begin(), reachable.end(), y) != reachable.end();
                REQUIRE(small == direct);
            }
        }
    }
}

TEST_CASE("interval DP agrees with exhaustive enumeration, n <= 10") {
    for (int n : {4, 10}) {
        for (const Path& p : all_paths(n)) {
            Path top = Path::top(n);
            CHECK(count_interval(p, top) == Int(oracle::enumerate_interval(p, top).size()));
        }
    }
    // general (P, Q) pairs at a smaller size
    for (const Path& p : all_paths(6)) {
        for (const Path& q : all_paths(6)) {
            if (!below_or_equal(p, q)) continue;
            CHECK(count_interval(p, q) == Int(oracle::enumerate_interval(p, q).size()));
        }
    }
}

TEST_SUITE_END();
