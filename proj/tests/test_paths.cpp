#include <doctest.h>

#include "shc/path.hpp"

using namespace shc;

namespace {
Path P(const std::string& w) { return Path::parse(w); }
}  // namespace

TEST_SUITE_BEGIN("paths");

TEST_CASE("parse and format") {
    CHECK(P("").empty());
    CHECK(P("duduud").word() == "duduud");
    CHECK(P("DUduUD").word() == "duduud");  // case-insensitive input, lowercase output
    CHECK_THROWS_WITH_AS(P("dux"), doctest::Contains("index 2"), check_error);
}

TEST_CASE("heights") {
    CHECK(P("duduud").heights() == std::vector<int>{-1, 0, -1, 0, 1, 0});
    CHECK(P("uuu").heights() == std::vector<int>{1, 2, 3});
    CHECK(P("").heights().empty());
    CHECK(path_from_heights({-1, 0, -1, 0, 1, 0}) == P("duduud"));
    CHECK_THROWS_AS(path_from_heights({0, 1}), check_error);
}

TEST_CASE("k-encoding") {
    auto enc = k_encoding(P("duduud"));
    CHECK(enc.downs == 3);
    CHECK(enc.k == std::vector<int>{0, 1, 3, 3});
    CHECK(k_encoding(P("ddd")).k == std::vector<int>{0, 0, 0, 0});
    auto uu = k_encoding(P("uu"));
    CHECK(uu.downs == 0);
    CHECK(uu.k == std::vector<int>{2});
    CHECK_THROWS_AS(from_k_encoding(KEncoding{1, {2, 1}}), check_error);
}

TEST_CASE("valleys and peaks") {
    auto prof = valley_peak_profile(P("duduud"));
    CHECK(prof.valleys == std::vector<PointHeight>{{1, -1}, {3, -1}, {6, 0}});
    CHECK(prof.low_valley == -1);
    CHECK(prof.high_valley == 0);

    auto none = valley_peak_profile(P("uuuu"));
    CHECK(none.valleys.empty());
    CHECK_FALSE(none.low_valley.has_value());
    CHECK_FALSE(none.high_valley.has_value());

    auto single = valley_peak_profile(P("d"));
    CHECK(single.valleys == std::vector<PointHeight>{{1, -1}});
    CHECK(single.low_valley == -1);
    CHECK(single.high_valley == -1);
}

TEST_CASE("classification") {
    auto c = classify(P("uudd"));
    CHECK(c.is_dyck);
    CHECK(c.is_dyck_prefix);
    CHECK(c.is_dyck_suffix);
    CHECK(c.return_points == std::vector<int>{4});

    auto pre = classify(P("uud"));
    CHECK_FALSE(pre.is_dyck);
    CHECK(pre.is_dyck_prefix);
    CHECK(pre.return_points.empty());

    auto suf = classify(P("dud"));
    CHECK(suf.is_dyck_suffix);
    CHECK_FALSE(suf.is_dyck_prefix);
}

TEST_CASE("prime decomposition") {
    CHECK(decompose_prime(P("uudd")) == std::vector<Path>{P("ud")});
    CHECK(decompose_prime(P("udud")) == std::vector<Path>{P(""), P("")});
    CHECK(decompose_prime(P("")).empty());
    CHECK_THROWS_AS(decompose_prime(P("uud")), check_error);
}

TEST_CASE("prefix and suffix decomposition") {
    CHECK(decompose_prefix(P("uud")) == std::vector<Path>{P(""), P("ud")});
    CHECK(decompose_prefix(P("uudd")) == std::vector<Path>{P("uudd")});
    CHECK(decompose_suffix(P("dud")) == std::vector<Path>{P(""), P("ud")});
    CHECK(decompose_suffix(P("dd")) == std::vector<Path>{P(""), P(""), P("")});
    CHECK_THROWS_AS(decompose_prefix(P("dud")), check_error);
    CHECK_THROWS_AS(decompose_suffix(P("du")), check_error);
}

TEST_CASE("round-trips and reconcatenation up to n = 12") {
    for (int n = 0; n <= 12; ++n) {
        for (const Path& p : all_paths(n)) {
            REQUIRE(from_k_encoding(k_encoding(p)) == p);
            REQUIRE(path_from_heights(p.heights()) == p);
            auto cls = classify(p);
            int d_runs = 0;
            for (int i = 1; i <= n; ++i)
                if (p.step(i) == Step::down && (i == n || p.step(i + 1) == Step::up)) ++d_runs;
            REQUIRE(static_cast<int>(valley_peak_profile(p).valleys.size()) == d_runs);
            if (cls.is_dyck) {
                Path re;
                for (const Path& inner : decompose_prime(p))
                    re = re.concat(Path::runs(1, 0)).concat(inner).concat(Path::runs(0, 1));
                REQUIRE(re == p);
            }
            if (cls.is_dyck_prefix) {
                auto comps = decompose_prefix(p);
                REQUIRE(static_cast<int>(comps.size()) == p.final_height() + 1);
                Path re = comps.front();
                for (size_t i = 1; i < comps.size(); ++i)
                    re = re.concat(Path::runs(1, 0)).concat(comps[i]);
                REQUIRE(re == p);
            }
            if (cls.is_dyck_suffix) {
                auto comps = decompose_suffix(p);
                REQUIRE(static_cast<int>(comps.size()) == -p.min_height() + 1);
                Path re = comps.front();
                for (size_t i = 1; i < comps.size(); ++i)
                    re = re.concat(Path::runs(0, 1)).concat(comps[i]);
                REQUIRE(re == p);
            }
        }
    }
}

TEST_SUITE_END();
