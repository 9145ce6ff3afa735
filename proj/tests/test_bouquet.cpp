#include <doctest.h>

#include "twupoly/bouquet.hpp"
#include "twupoly/samplers.hpp"

using namespace twupoly;

namespace {

Bouquet bq(std::initializer_list<const char*> word, std::initializer_list<const char*> twisted) {
    std::vector<std::string> w(word.begin(), word.end());
    std::vector<std::string> t(twisted.begin(), twisted.end());
    return Bouquet(std::move(w), t);
}

}  // namespace

TEST_CASE("bouquet validation") {
    CHECK_THROWS_AS(bq({"a"}, {}), ContractError);
    CHECK_THROWS_AS(bq({"a", "a", "a"}, {}), ContractError);
    CHECK_THROWS_AS(bq({"a", "b", "a", "b", "a", "a"}, {}), ContractError);
    CHECK_THROWS_AS(bq({"a", "a"}, {"z"}), ContractError);
    CHECK_NOTHROW(bq({}, {}));  // the lone vertex disc
}

TEST_CASE("intersection graft") {
    Graft g1 = bq({"a", "a"}, {}).intersection_graft();
    CHECK(g1.vertex_count() == 1);
    CHECK(g1.edge_indices().empty());
    CHECK(g1.marked_mask() == 0);

    Graft g2 = bq({"a", "b", "a", "b"}, {}).intersection_graft();
    CHECK(g2.vertex_count() == 2);
    CHECK(g2.edge_indices().size() == 1);

    Graft g3 = bq({"a", "b", "a", "c", "b", "c"}, {"b"}).intersection_graft();
    CHECK(g3.vertices() == LabelList{"a", "b", "c"});
    CHECK(g3.edge_indices() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g3.marked_labels() == LabelList{"b"});
}

TEST_CASE("boundary components by face tracing") {
    CHECK(bq({}, {}).boundary_components() == 1);
    CHECK(bq({"a", "a"}, {}).boundary_components() == 2);
    CHECK(bq({"a", "a"}, {"a"}).boundary_components() == 1);
    CHECK(bq({"a", "b", "a", "b"}, {}).boundary_components() == 1);
}

TEST_CASE("Euler genus") {
    CHECK(bq({}, {}).euler_genus() == 0);
    CHECK(bq({"a", "a"}, {}).euler_genus() == 0);
    CHECK(bq({"a", "a"}, {"a"}).euler_genus() == 1);
    CHECK(bq({"a", "b", "a", "b"}, {}).euler_genus() == 2);
}

TEST_CASE("delete edges and partial petrial") {
    Bouquet b = bq({"a", "b", "a", "b"}, {});
    Bouquet del = b.delete_edges({"a"});
    CHECK(del.word() == std::vector<std::string>{"b", "b"});

    Bouquet loop = bq({"a", "a"}, {});
    CHECK(loop.partial_petrial({"a"}).twisted_mask() == 1);
    CHECK(loop.partial_petrial({"a"}).partial_petrial({"a"}) == loop);
    CHECK(b.delete_edges(std::vector<std::string>{}) == b);
    CHECK_THROWS_AS(b.delete_edges({"z"}), ContractError);
    CHECK_THROWS_AS(b.partial_petrial({"z"}), ContractError);

    // deleting a twisted edge drops it from the twist set as well
    Bouquet tw = bq({"a", "b", "a", "b"}, {"a", "b"});
    CHECK(tw.delete_edges({"a"}).twisted_labels() == std::vector<std::string>{"b"});
}

TEST_CASE("twuality Euler genus per the reduction table") {
    Bouquet loop = bq({"a", "a"}, {});
    CHECK(loop.twuality_euler_genus(Twuality::delta, {"a"}) == 0);
    CHECK(loop.twuality_euler_genus(Twuality::tau, {"a"}) == 1);

    Bouquet inter = bq({"a", "b", "a", "b"}, {});
    CHECK(inter.twuality_euler_genus(Twuality::taudeltatau, {}) == 2);
}

TEST_CASE("topological polynomials") {
    Bouquet loop = bq({"a", "a"}, {});
    CHECK(loop.topological_polynomial(Twuality::tau) == IntPolynomial({1, 1}));
    CHECK(loop.topological_polynomial(Twuality::delta) == IntPolynomial({2}));

    Bouquet inter = bq({"a", "b", "a", "b"}, {});
    CHECK(inter.topological_polynomial(Twuality::taudeltatau) == IntPolynomial({0, 1, 3}));
}

TEST_CASE("equivalence with the intersection graft") {
    CHECK(bq({"a", "a"}, {"a"}).check_equivalence());
    CHECK(bq({"a", "b", "a", "c", "b", "c"}, {"b"}).check_equivalence());

    // Exhaustive n <= 3 here; the acceptance suite pushes to n <= 4 and
    // adds Lemma 2.5 and the per-subset genus comparison.
    for (int n = 0; n <= 3; ++n) {
        samplers::for_each_bouquet(n, [&](const Bouquet& b) {
            REQUIRE(b.check_equivalence());
            REQUIRE(b.boundary_components() ==
                    b.intersection_graft().adjacency_matrix().corank() + 1);
        });
    }
}

TEST_CASE("rotation and renaming leave everything invariant") {
    samplers::Rng rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 1 + static_cast<int>(samplers::below(rng, 5));
        Bouquet b = samplers::random_bouquet(n, rng);

        // rotate by a random offset
        std::size_t shift = samplers::below(rng, 2 * n);
        std::vector<std::string> rotated(b.word().begin() + shift, b.word().end());
        rotated.insert(rotated.end(), b.word().begin(), b.word().begin() + shift);
        Bouquet rb(rotated, b.twisted_labels());
        REQUIRE(rb.boundary_components() == b.boundary_components());
        REQUIRE(rb.euler_genus() == b.euler_genus());
        for (Twuality op : kAllTwualities) {
            REQUIRE(rb.topological_polynomial(op) == b.topological_polynomial(op));
        }

        // rename labels e -> <e>'
        std::vector<std::string> renamed;
        for (const std::string& t : b.word()) renamed.push_back(t + "'");
        std::vector<std::string> renamed_twisted;
        for (const std::string& t : b.twisted_labels()) renamed_twisted.push_back(t + "'");
        Bouquet nb(renamed, renamed_twisted);
        REQUIRE(nb.euler_genus() == b.euler_genus());
        for (Twuality op : kAllTwualities) {
            REQUIRE(nb.topological_polynomial(op) == b.topological_polynomial(op));
        }
    }
}

TEST_CASE("dart orbit parity guard never trips on random bouquets") {
    samplers::Rng rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        int n = static_cast<int>(samplers::below(rng, 7));
        Bouquet b = samplers::random_bouquet(n, rng);
        CHECK(b.boundary_components() >= 1);
        CHECK(b.euler_genus() >= 0);
    }
}
