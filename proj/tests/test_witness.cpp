#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "c4book/constructions.hpp"
#include "c4book/projective.hpp"
#include "c4book/witness.hpp"

using namespace c4book;

TEST_CASE("valid witness: empty graph certifies the trivial bound") {
    // empty graph on n+1 vertices: C4-free, complement book = n-1 < n
    for (int n : {1, 2, 5, 10}) {
        Graph g(n + 1);
        WitnessReport rep = verify_witness(g, n);
        CHECK(rep.valid);
        CHECK(rep.order == n + 1);
        CHECK(rep.c4_free);
        REQUIRE(rep.book_max.has_value());
        CHECK(*rep.book_max == n - 1);
        CHECK(rep.detail.find(">= " + std::to_string(n + 2)) != std::string::npos);
    }
}

TEST_CASE("invalid witness: C4 present") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    WitnessReport rep = verify_witness(g, 1);
    CHECK(!rep.valid);
    CHECK(!rep.c4_free);
    CHECK(!rep.detail.empty());
}

TEST_CASE("invalid witness: complement book too large") {
    Graph g(8);  // empty on 8 vertices: book_max = 6 >= 3
    WitnessReport rep = verify_witness(g, 3);
    CHECK(!rep.valid);
    CHECK(rep.c4_free);
    REQUIRE(rep.book_max.has_value());
    CHECK(*rep.book_max == 6);
}

TEST_CASE("complete graphs of order <= 3 are vacuously valid") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    WitnessReport rep = verify_witness(k3, 1);
    CHECK(rep.valid);
    CHECK(!rep.book_max.has_value());
}

TEST_CASE("the constructed families verify at their stated level and fail one higher") {
    ConstructionResult c = build_H(4, 3);  // n = 10
    CHECK(verify_witness(c.graph, 10).valid);
    CHECK(verify_witness(c.graph, c.target_book).valid);
    CHECK(!verify_witness(c.graph, 9).valid);  // book_max = 9 is not < 9
    ConstructionResult g5 = build_G(5, 2);     // n = 16
    CHECK(verify_witness(g5.graph, 16).valid);
    CHECK(!verify_witness(g5.graph, 16 - 1).valid);
}

TEST_CASE("report text carries the verdict") {
    Graph g(3);
    WitnessReport rep = verify_witness(g, 2);
    std::string text = rep.to_text();
    CHECK(text.find("valid") != std::string::npos);
    CHECK(text.find("3") != std::string::npos);
}

TEST_CASE("order-conditioned set membership") {
    // ER_5 has order 31 but G(5) needs 5^2+5+3 = 33 vertices
    PolarityGraph er = build_er_graph(5);
    CHECK(check_gq_membership(er.graph, 5) == GqMembership::wrong_order);
    // right order, wrong structure: empty graph on 33 vertices has a giant
    // complement book
    Graph empty33(33);
    CHECK(check_gq_membership(empty33, 5) == GqMembership::not_member);
    // right order with a C4: also not a member
    Graph c4pad(33);
    c4pad.add_edge(0, 1);
    c4pad.add_edge(1, 2);
    c4pad.add_edge(2, 3);
    c4pad.add_edge(3, 0);
    CHECK(check_gq_membership(c4pad, 5) == GqMembership::not_member);
    CHECK_THROWS_AS(check_gq_membership(empty33, 6), std::invalid_argument);
    CHECK_THROWS_AS(check_gq_membership(empty33, 2), std::invalid_argument);
}
