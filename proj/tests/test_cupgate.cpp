#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cupqec/cupgate.hpp"
#include "cupqec/homology.hpp"
#include "cupqec/simplicial.hpp"

using namespace cupqec;

namespace {

// Cup product the slow way, straight off the definition, to pin the table.
Cochain naive_cup(const SimplicialComplex& sc, const Cochain& a, const Cochain& b) {
    std::size_t pq = a.degree + b.degree;
    Cochain out{pq, BitVector(sc.num_cells(pq))};
    const SimplexList& cells = sc.cells(pq);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::vector<std::uint32_t> t = cells.tuple_vec(i);
        std::vector<std::uint32_t> fr(t.begin(), t.begin() + a.degree + 1);
        std::vector<std::uint32_t> bk(t.begin() + a.degree, t.end());
        auto fi = sc.cells(a.degree).find(fr.data());
        auto bi = sc.cells(b.degree).find(bk.data());
        if (fi && bi && a.values.get(*fi) && b.values.get(*bi)) out.values.flip(i);
    }
    return out;
}

Cochain random_cochain(const SimplicialComplex& sc, std::size_t q, std::mt19937_64& rng) {
    Cochain c{q, BitVector(sc.num_cells(q))};
    for (std::size_t i = 0; i < c.values.size(); ++i)
        if (rng() & 1) c.values.set(i, true);
    return c;
}

} // namespace

TEST_CASE("cup table agrees with the naive cup evaluation") {
    std::mt19937_64 rng(17);
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}}) {
        for (int trial = 0; trial < 5; ++trial) {
            Cochain a = random_cochain(t3, p, rng);
            Cochain b = random_cochain(t3, q, rng);
            CHECK(cup(t3, a, b) == naive_cup(t3, a, b));
        }
    }
    CupTable table(t3, 1, 2);
    for (int trial = 0; trial < 5; ++trial) {
        Cochain a = random_cochain(t3, 1, rng);
        Cochain b = random_cochain(t3, 2, rng);
        CHECK(table.pair_sum(a.values, b.values) == (naive_cup(t3, a, b).values.weight() % 2));
    }
}

TEST_CASE("coboundary is the transpose boundary and squares to zero") {
    SimplicialComplex t = torus(3);
    ChainComplex cc = chain_complex_of(t);
    std::mt19937_64 rng(3);
    Cochain c = random_cochain(t, 0, rng);
    Cochain dc = coboundary(t, c);
    CHECK(dc.degree == 1);
    CHECK(dc.values == apply(transpose(cc.boundary[1]), c.values));
    Cochain ddc = coboundary(t, dc);
    CHECK(ddc.values.is_zero());
    CHECK(is_cocycle(t, dc));
    CHECK_THROWS_AS(coboundary(t, Cochain{2, BitVector(t.num_cells(2))}), DegreeOverflow);
    CHECK_THROWS_AS(coboundary(t, Cochain{0, BitVector(3)}), LengthMismatch);
}

TEST_CASE("leibniz rule for the coboundary of a cup product") {
    std::mt19937_64 rng(29);
    SimplicialComplex t = torus(3);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain a = random_cochain(t, 0, rng);
        Cochain b = random_cochain(t, 1, rng);
        Cochain lhs = coboundary(t, cup(t, a, b));
        Cochain rhs = cup(t, coboundary(t, a), b);
        rhs.values.xor_in(cup(t, a, coboundary(t, b)).values);
        CHECK(lhs.values == rhs.values);
    }
}

TEST_CASE("triple cup sum is the phase of the synthesized circuit") {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    CczCircuit circ = synthesize_circuit(t3, 1, 1, 1);
    CHECK(circ.n1 == t3.num_cells(1));
    CHECK(std::is_sorted(circ.gates.begin(), circ.gates.end()));
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain a = random_cochain(t3, 1, rng);
        Cochain b = random_cochain(t3, 1, rng);
        Cochain c = random_cochain(t3, 1, rng);
        CHECK(circ.phase(a.values, b.values, c.values) == triple_cup_sum(t3, a, b, c));
    }
}

TEST_CASE("circuit synthesis rejects open complexes unless told otherwise") {
    SimplicialComplex broken = drop_top(ordered_product(torus(3), circle(3)), 0);
    CHECK_THROWS_AS(synthesize_circuit(broken, 1, 1, 1), NotClosedManifold);
    CczCircuit c = synthesize_circuit(broken, 1, 1, 1, false);
    CHECK(!c.gates.empty());
    CHECK_THROWS_AS(synthesize_circuit(torus(3), 1, 1, 1), DegreeMismatch);
}

TEST_CASE("logical action on the three torus is the permutation tensor") {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    ChainComplex cc = chain_complex_of(t3);
    HomologyBasis b = normalize_pairing(homology_basis(cc, 1));
    CczCircuit circ = synthesize_circuit(t3, 1, 1, 1);
    LogicalCczTensor t = logical_action(t3, circ, b, b, b);
    CHECK(t.k1() == 3);
    CHECK(t.support_size() == 6);
    std::set<std::array<std::uint32_t, 3>> want{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto sup = t.support();
    CHECK(std::set<std::array<std::uint32_t, 3>>(sup.begin(), sup.end()) == want);
}

TEST_CASE("logical action rejects mismatched bases") {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    ChainComplex cc = chain_complex_of(t3);
    HomologyBasis b1 = normalize_pairing(homology_basis(cc, 1));
    HomologyBasis b2 = normalize_pairing(homology_basis(cc, 2));
    CczCircuit circ = synthesize_circuit(t3, 1, 1, 1);
    CHECK_THROWS_AS(logical_action(t3, circ, b1, b1, b2), DegreeMismatch);

    HomologyBasis raw = homology_basis(cc, 1);
    CHECK_THROWS_AS(logical_action(t3, circ, raw, raw, raw), BasisMismatch);
}

TEST_CASE("phase check passes on closed manifolds and leaks on broken ones") {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    PhaseCheckReport ok = phase_polynomial_check(t3, 1, 1, 1, 200, 7);
    CHECK(ok.trials == 200);
    CHECK(ok.passes == 200);
    CHECK(ok.failures == 0);

    PhaseCheckReport rerun = phase_polynomial_check(t3, 1, 1, 1, 200, 7);
    CHECK(rerun.passes == ok.passes);

    SimplicialComplex broken = drop_top(t3, 0);
    PhaseCheckReport bad = phase_polynomial_check(broken, 1, 1, 1, 300, 7);
    CHECK(bad.failures > 0);
    CHECK(bad.passes + bad.failures == 300);
}

TEST_CASE("interaction hypergraph lists the tensor support") {
    LogicalCczTensor t(2, 3, 2);
    t.set(0, 1, 1, true);
    t.set(1, 2, 0, true);
    t.set(0, 0, 0, true);
    InteractionHypergraph h = interaction_hypergraph(t);
    CHECK(h.k1 == 2);
    CHECK(h.k2 == 3);
    CHECK(h.k3 == 2);
    std::vector<std::array<std::uint32_t, 3>> want{{0, 0, 0}, {0, 1, 1}, {1, 2, 0}};
    CHECK(h.edges == want);
}

TEST_CASE("fountain schedule on the three torus support") {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    ChainComplex cc = chain_complex_of(t3);
    HomologyBasis b = normalize_pairing(homology_basis(cc, 1));
    LogicalCczTensor t = logical_action(t3, synthesize_circuit(t3, 1, 1, 1), b, b, b);
    FountainSchedule f = fountain_schedule(interaction_hypergraph(t));
    CHECK(f.magic_count == 3);
    CHECK(f.selected.size() == 3);
    CHECK(f.plus_set.size() == 9);
    CHECK(f.zero_set.empty());

    // Selected edges must not share a vertex in any register.
    for (std::size_t i = 0; i < f.selected.size(); ++i)
        for (std::size_t j = i + 1; j < f.selected.size(); ++j)
            for (std::size_t reg = 0; reg < 3; ++reg)
                CHECK(f.selected[i][reg] != f.selected[j][reg]);

    // Greedy by sorted edge order always takes the first edge.
    CHECK(f.selected.front() == std::array<std::uint32_t, 3>{0, 1, 2});
}

TEST_CASE("fountain zero set collects uncovered vertices") {
    InteractionHypergraph h;
    h.k1 = 2;
    h.k2 = 2;
    h.k3 = 2;
    h.edges = {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}};
    FountainSchedule f = fountain_schedule(h);
    CHECK(f.magic_count == 2);
    CHECK(f.selected == std::vector<std::array<std::uint32_t, 3>>{{0, 0, 0}, {1, 1, 1}});
    CHECK(f.plus_set.size() == 6);
    CHECK(f.zero_set.empty());

    h.edges = {{0, 0, 0}};
    f = fountain_schedule(h);
    CHECK(f.magic_count == 1);
    CHECK(f.zero_set.size() == 3);
    CHECK(f.zero_set.front() == FountainVertex{1, 1});
}

TEST_CASE("circuit and hypergraph files round trip") {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    CczCircuit c = synthesize_circuit(t3, 1, 1, 1);
    std::stringstream s;
    write_circuit(s, c);
    CczCircuit back = read_circuit(s);
    CHECK(back.gates == c.gates);

    InteractionHypergraph h;
    h.k1 = 3;
    h.k2 = 4;
    h.k3 = 5;
    h.edges = {{0, 1, 2}, {2, 3, 4}};
    std::stringstream hs;
    write_hypergraph(hs, h);
    InteractionHypergraph hback = read_hypergraph(hs);
    CHECK(hback.k1 == 3);
    CHECK(hback.k2 == 4);
    CHECK(hback.k3 == 5);
    CHECK(hback.edges == h.edges);

    std::stringstream bad("vertices 1 2\n");
    CHECK_THROWS_AS(read_hypergraph(bad), ParseError);
}

TEST_CASE("fountain file lists labels and count") {
    InteractionHypergraph h;
    h.k1 = h.k2 = h.k3 = 1;
    h.edges = {{0, 0, 0}};
    std::stringstream s;
    write_fountain(s, fountain_schedule(h));
    std::string text = s.str();
    CHECK(text.find("plus 1:0 2:0 3:0") != std::string::npos);
    CHECK(text.find("zero\n") != std::string::npos);
    CHECK(text.find("magic_count 1") != std::string::npos);
}
