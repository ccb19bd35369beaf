#include <cmath>
#include <set>

#include "doctest.h"
#include "pluriperiod/errors.hpp"
#include "pluriperiod/fuchsian.hpp"

using namespace pluriperiod;

TEST_CASE("GroupWord reduces freely") {
    GroupWord w;
    w.append(1).append(-1);
    CHECK(w.empty());
    w.append(1).append(2).append(-2).append(3);
    CHECK(w.letters() == std::vector<int>{1, 3});
    const GroupWord u({1, 2});
    const GroupWord v({-2, 3});
    CHECK(u.concat(v).letters() == std::vector<int>{1, 3});
    CHECK(u.inverse().letters() == std::vector<int>{-2, -1});
    CHECK(u.concat(u.inverse()).empty());
    CHECK_THROWS_AS(GroupWord({0}), ConstructionFailure);
}

TEST_CASE("cyclic model basics") {
    const auto G = cyclic_group(2.0);
    CHECK(G->kind == GroupModel::Kind::cyclic);
    CHECK(G->num_generators() == 1);
    CHECK(G->lambda == doctest::Approx(2.0));
    CHECK(G->relator().empty());
    CHECK(G->letter_matrix(-1).distance_to(G->gens[0].inverse()) < 1e-15);
    CHECK_THROWS_AS(G->letter_matrix(2), ConstructionFailure);
    CHECK_THROWS_AS(cyclic_group(1.0), ConstructionFailure);
    CHECK(G->word_string(GroupWord({1, 1, -1, 1})) == "t.t");
}

TEST_CASE("conjugated cyclic generator has c != 0 and is a true conjugate") {
    const auto G = conjugated_cyclic_group(2.0);
    const MoebiusMap& A = G->gens[0];
    CHECK(std::abs(A.c) > 0.1);
    const MoebiusMap U(1.0, 0.0, 1.0, 1.0);
    const MoebiusMap D(2.0, 0.0, 0.0, 0.5);
    CHECK(A.distance_to(compose(compose(U.inverse(), D), U)) < 1e-12);
    // Conjugation preserves the trace (hence the translation length), but
    // displacement() measures how far the point i moves, and i is off the
    // conjugate's axis, so its displacement can only be larger.
    CHECK(std::abs(A.a + A.d) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(A.displacement() > D.displacement());
}

TEST_CASE("octagon group passes its own construction checks") {
    const OctagonGroup og = octagon_group();
    const GroupModel& G = *og.group;
    CHECK(G.kind == GroupModel::Kind::surface);
    CHECK(G.genus == 2);
    CHECK(G.num_generators() == 4);
    CHECK(og.octagon.vertices.size() == 8);
    CHECK(og.octagon.edges.size() == 8);
    for (const Complex& v : og.octagon.vertices) CHECK(v.imag() > 0.0);
    CHECK(og.octagon.tau1() == og.octagon.vertices[0]);
    CHECK(og.octagon.perimeter() > 0.0);
}

TEST_CASE("octagon relator collapses to the identity") {
    const OctagonGroup og = octagon_group();
    const GroupWord rel = og.group->relator();
    CHECK(rel.size() == 8);
    const MoebiusMap M = word_to_matrix(*og.group, rel);
    CHECK(M.distance_to(MoebiusMap::identity()) < 1e-9);
    CHECK(og.group->word_string(rel) == "b2.a2'.b2'.a2.b1.a1'.b1'.a1");
}

TEST_CASE("side pairings map each side onto its partner, reversed") {
    const OctagonGroup og = octagon_group();
    const auto& v = og.octagon.vertices;
    for (const OctagonEdge& e : og.octagon.edges) {
        if (e.inverted) continue;
        const OctagonEdge& partner = og.octagon.edge_gamma(e.gamma_index, true);
        const MoebiusMap A = og.group->letter_matrix(e.pairing_letter);
        CHECK(std::abs(A.apply(v[static_cast<std::size_t>(e.from)]) -
                       v[static_cast<std::size_t>(partner.to)]) < 1e-9);
        CHECK(std::abs(A.apply(v[static_cast<std::size_t>(e.to)]) -
                       v[static_cast<std::size_t>(partner.from)]) < 1e-9);
    }
    CHECK_THROWS_AS(og.octagon.edge_gamma(5, false), ConstructionFailure);
}

TEST_CASE("edges traverse the boundary counter-clockwise without gaps") {
    const OctagonGroup og = octagon_group();
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(og.octagon.edges[k].from == static_cast<int>(k));
        CHECK(og.octagon.edges[k].to == static_cast<int>((k + 1) % 8));
    }
    // Counter-clockwise: the polygon area from the shoelace sum is positive.
    double twice_area = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        const Complex p = og.octagon.vertices[k];
        const Complex q = og.octagon.vertices[(k + 1) % 8];
        twice_area += p.real() * q.imag() - q.real() * p.imag();
    }
    CHECK(twice_area > 0.0);
}

TEST_CASE("vertex words chase the corners from tau1") {
    const OctagonGroup og = octagon_group();
    CHECK(vertex_word(2, 0).empty());
    const std::vector<Complex> chased = vertex_chase(*og.group, og.octagon.tau1());
    for (std::size_t k = 0; k < 8; ++k)
        CHECK(std::abs(chased[k] - og.octagon.vertices[k]) < 1e-9);
    // Direct restatement of the property for one nontrivial corner.
    const MoebiusMap V = word_to_matrix(*og.group, vertex_word(2, 3));
    CHECK(std::abs(V.inverse().apply(og.octagon.tau1()) - og.octagon.vertices[3]) < 1e-9);
    CHECK_THROWS_AS(vertex_chase(*cyclic_group(2.0), Complex(0, 1)), UnsupportedGroup);
}

TEST_CASE("generator displacements match the octagon geometry") {
    const OctagonGroup og = octagon_group();
    // Each side pairing is a hyperbolic translation by twice the apothem.
    for (const MoebiusMap& g : og.group->gens) {
        CHECK(g.displacement() > 3.0);
        CHECK(g.displacement() < 3.1);
        CHECK(classify(g) == MapClass::hyperbolic);
    }
}

TEST_CASE("diagonal cyclic ball enumerates powers exactly") {
    const auto G = cyclic_group(2.0);
    const OrbitSet orb = enumerate_ball(*G, 8.0);
    // displacement(t^p) = 2 |p| log 2; radius 8 admits |p| <= 5.
    CHECK(orb.size() == 11);
    CHECK(orb.elems[0].word.empty());
    for (const OrbitElement& e : orb.elems) {
        CHECK(e.displacement <= 8.0);
        CHECK(e.displacement == doctest::Approx(2.0 * std::log(2.0) * e.word.size())
                                    .epsilon(1e-12));
        CHECK(e.mat.distance_to(word_to_matrix(*G, e.word)) < 1e-12);
    }
    for (std::size_t i = 1; i < orb.size(); ++i)
        CHECK(orb.elems[i - 1].displacement <= orb.elems[i].displacement);
}

TEST_CASE("conjugated cyclic ball goes through the BFS and agrees in size") {
    const auto G = conjugated_cyclic_group(2.0);
    const OrbitSet orb = enumerate_ball(*G, 8.0);
    CHECK(orb.size() == 11);  // displacement is conjugation-invariant
    for (const OrbitElement& e : orb.elems)
        CHECK(e.mat.distance_to(word_to_matrix(*G, e.word)) < 1e-10);
}

TEST_CASE("octagon ball: canonical order, consistency, no duplicates") {
    const OctagonGroup og = octagon_group();
    const OrbitSet orb = enumerate_ball(*og.group, 4.0);
    CHECK(orb.size() >= 9);  // identity + all eight generator letters
    CHECK(orb.elems[0].word.empty());
    for (std::size_t i = 0; i < orb.size(); ++i) {
        const OrbitElement& e = orb.elems[i];
        CHECK(e.displacement <= 4.0);
        CHECK(e.mat.distance_to(word_to_matrix(*og.group, e.word)) < 1e-9);
        CHECK(orb.a[i] == e.mat.a);
        CHECK(orb.b[i] == e.mat.b);
        CHECK(orb.c[i] == e.mat.c);
        CHECK(orb.d[i] == e.mat.d);
        for (std::size_t j = i + 1; j < orb.size(); ++j)
            CHECK(e.mat.distance_to(orb.elems[j].mat) > 1e-6);
    }
}

TEST_CASE("octagon ball grows with the radius and respects the cap") {
    const OctagonGroup og = octagon_group();
    const std::size_t n4 = enumerate_ball(*og.group, 4.0).size();
    const std::size_t n65 = enumerate_ball(*og.group, 6.5).size();
    CHECK(n65 > n4);
    CHECK_THROWS_AS(enumerate_ball(*og.group, 6.5, n65 - 1), BudgetExceeded);
}
