#include <doctest.h>

#include "fixtures.hpp"
#include "shc/bijections.hpp"
#include "shc/formulas.hpp"

using namespace shc;

namespace {
Path P(const std::string& w) { return Path::parse(w); }

ShiftedTableau from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return ShiftedTableau(Shape(parts), rows);
}
}  // namespace

TEST_SUITE_BEGIN("proof bijections");

TEST_CASE("split_product guards") {
    // P_1 = d (or empty P_2) is rejected
    ShiftedTableau t = from_rows({{1, 2}, {3}});  // shape of dd
    CHECK_THROWS_AS(split_product(t, 1, 1), check_error);
    CHECK_THROWS_AS(split_product(t, 0, 2), check_error);
}

TEST_CASE("split_product on a concrete factorization") {
    // P = dud | u  (P_1 = dud Dyck suffix, P_2 = u)
    Path p = P("dudu");
    Shape s = shape_of(p);
    int m1 = 2, n2 = 1;
    auto tabs = enumerate_increasing(s, 2 * m1 + n2 - 1, true);
    CHECK(tabs.size() == count_increasing(shape_of(P("dud")), 2 * m1 - 1, true) *
                             count_increasing(shape_of(P("du")), n2 + 1, true));
    for (const auto& t : tabs) {
        auto [t1, t2] = split_product(t, n2, m1);
        CHECK(t1.shape() == shape_of(P("dud")));
        CHECK(t2.shape() == shape_of(P("du")));
        CHECK(t1.max_entry() == 2 * m1 - 1);
        CHECK(t2.max_entry() == n2 + 1);
        CHECK(merge_product(t1, t2) == t);
    }
}

TEST_CASE("strip_first_row") {
    // dP = dud with P = ud, Q = d
    ShiftedTableau t = from_rows({{1, 2, 3}, {3}});
    ShiftedTableau q = strip_first_row(t);
    CHECK(q.shape().parts() == std::vector<int>{1});
    CHECK(q.rows() == std::vector<std::vector<int>>{{1}});
    CHECK(unstrip_first_row(q, 1) == t);
    // max(T') = |P| - 1 on all admissible small cases handled in the verify suite
    ShiftedTableau bad = from_rows({{1, 3, 4}, {4}});
    CHECK_THROWS_AS(strip_first_row(bad), check_error);  // first row is not 1..|P|+1
}

TEST_CASE("prime_map smallest case") {
    // a = ud: T = [[1,2],[3]] of shape lambda(Pd) with P = d -> V = [[1]]
    ShiftedTableau t = from_rows({{1, 2}, {3}});
    PrimeImage img = prime_map(t);
    CHECK(img.a == P("ud"));
    CHECK(img.v.rows() == std::vector<std::vector<int>>{{1}});
    CHECK(prime_map_inv(img.v) == t);
    Multichain sigma = type_v_chain_from_tableau(img.v, img.a);
    CHECK(sigma.paths().size() == 4);  // k = hv(ud) + 3 = 3
    CHECK(sigma.at(0) == P("ud"));
    CHECK(sigma.at(2) == P("ud"));
    CHECK(sigma.at(3) == P("uu"));
    CHECK(type_v_chain_to_tableau(sigma) == img.v);
}

TEST_CASE("prime_map rejects out-of-bound inverses") {
    // shape lambda(P) for P = dud, a = udud, m = 2: cell (1,3) violates
    // v <= 2m + 3 - i - j
    ShiftedTableau v = from_rows({{1, 1, 9}, {1}});
    CHECK_THROWS_AS(prime_map_inv(v), check_error);
}

TEST_CASE("prime-Dyck worked nine-row instance") {
    ShiftedTableau t = from_rows(fixtures::kPrimeT);
    PrimeImage img = prime_map(t);
    CHECK(img.a == P(fixtures::kPrimeA));
    CHECK(img.v == from_rows(fixtures::kPrimeV));
    CHECK(prime_map_inv(img.v) == t);
    Multichain sigma = type_v_chain_from_tableau(img.v, img.a);
    CHECK(type_v_chain_to_tableau(sigma) == img.v);
}

TEST_CASE("prefix_map trivial case") {
    // duP = du: unique T = [[1,2]], all W_r empty
    ShiftedTableau t = from_rows({{1, 2}});
    auto ws = prefix_map(t);
    CHECK(ws.size() == 2);  // h = 0, k = 0
    CHECK(ws[0].empty());
    CHECK(ws[1].empty());
    CHECK(prefix_map_inv(ws) == t);
}

TEST_CASE("Dyck-prefix worked eighteen-row instance") {
    ShiftedTableau t = from_rows(fixtures::kPrefixT);
    CHECK(t.shape().part(1) == 39);
    auto ws = prefix_map(t);
    REQUIRE(ws.size() == fixtures::kPrefixW.size());
    for (size_t r = 0; r < ws.size(); ++r) CHECK(ws[r].word() == fixtures::kPrefixW[r]);
    CHECK(prefix_map_inv(ws) == t);
    check_prefix_family(ws);
}

TEST_CASE("prefix_map property validation rejects broken families") {
    ShiftedTableau t = from_rows({{1, 2}});
    auto ws = prefix_map(t);
    ws.back() = P("ud");  // wrong length
    CHECK_THROWS_AS(prefix_map_inv(ws), check_error);
}

TEST_SUITE_END();
