#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cupqec/homology.hpp"
#include "cupqec/rng.hpp"
#include "cupqec/simplicial.hpp"

namespace cupqec {

// Front/back face split of every (p+q)-cell under the global vertex order:
// the front face keeps the first p+1 vertices, the back face the last q+1.
// Building the table once makes repeated cup evaluations cheap.
class CupTable {
public:
    CupTable(const SimplicialComplex& sc, std::size_t p, std::size_t q);

    std::size_t p() const { return p_; }
    std::size_t q() const { return q_; }
    std::size_t size() const { return front_.size(); }

    std::uint32_t front(std::size_t i) const { return front_[i]; }
    std::uint32_t back(std::size_t i) const { return back_[i]; }

    // Parity of sum_i a[front(i)] * b[back(i)].  When p + q is the complex
    // dimension this is the evaluation of a cup b on the fundamental chain.
    bool pair_sum(const BitVector& a, const BitVector& b) const;

private:
    std::size_t p_, q_;
    std::vector<std::uint32_t> front_, back_;
};

// (a cup b)[v0..v_{p+q}] = a[v0..v_p] * b[v_p..v_{p+q}].
Cochain cup(const SimplicialComplex& sc, const Cochain& a, const Cochain& b);

// d c, one degree up.
Cochain coboundary(const SimplicialComplex& sc, const Cochain& c);
bool is_cocycle(const SimplicialComplex& sc, const Cochain& c);

// Integral of a cup b cup c over all top simplices of a closed manifold.
bool triple_cup_sum(const SimplicialComplex& sc, const Cochain& a, const Cochain& b,
                    const Cochain& c);

struct CczGate {
    std::uint32_t a, b, c;
    auto operator<=>(const CczGate&) const = default;
};

// CCZ gates acting on three cell registers (degrees q1, q2, q3 of the same
// complex; register widths are the cell counts at those degrees).
struct CczCircuit {
    std::size_t q1 = 0, q2 = 0, q3 = 0;
    std::size_t n1 = 0, n2 = 0, n3 = 0;
    std::vector<CczGate> gates;  // sorted; pairs cancelled mod 2

    // Phase polynomial: parity of a[i] b[j] c[k] over the gates.
    bool phase(const BitVector& a, const BitVector& b, const BitVector& c) const;
};

// One CCZ per top simplex, on the front/middle/back faces of the (q1,q2,q3)
// split.  Gates are sorted and duplicate pairs cancelled.  The complex must
// be a closed manifold for the circuit to act as a logical gate; callers
// probing broken manifolds on purpose pass require_closed = false.
CczCircuit synthesize_circuit(const SimplicialComplex& sc, std::size_t q1, std::size_t q2,
                              std::size_t q3, bool require_closed = true);

// Action of the circuit phase on basis cocycle triples, as a K1 x K2 x K3
// tensor of bits.
class LogicalCczTensor {
public:
    LogicalCczTensor() = default;
    LogicalCczTensor(std::size_t k1, std::size_t k2, std::size_t k3)
        : k1_(k1), k2_(k2), k3_(k3), bits_(k1 * k2 * k3) {}

    std::size_t k1() const { return k1_; }
    std::size_t k2() const { return k2_; }
    std::size_t k3() const { return k3_; }

    bool get(std::size_t a, std::size_t b, std::size_t c) const {
        return bits_.get((a * k2_ + b) * k3_ + c);
    }
    void set(std::size_t a, std::size_t b, std::size_t c, bool v) {
        bits_.set((a * k2_ + b) * k3_ + c, v);
    }

    std::size_t support_size() const { return bits_.weight(); }
    std::vector<std::array<std::uint32_t, 3>> support() const;

    bool operator==(const LogicalCczTensor& other) const {
        return k1_ == other.k1_ && k2_ == other.k2_ && k3_ == other.k3_ && bits_ == other.bits_;
    }

private:
    std::size_t k1_ = 0, k2_ = 0, k3_ = 0;
    BitVector bits_;
};

// Evaluates the circuit on every triple of basis cocycles.  Every entry is
// cross-checked against the direct cup-product integral on the complex; a
// disagreement is a library bug and throws.
LogicalCczTensor logical_action(const SimplicialComplex& sc, const CczCircuit& circuit,
                                const HomologyBasis& b1, const HomologyBasis& b2,
                                const HomologyBasis& b3);

struct PhaseCheckReport {
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::uint64_t seed = 0;
};

// Seeded probe of coboundary-shift invariance: random basis combinations get
// random coboundary shifts, and the circuit phase is compared before and
// after.  On a closed manifold every trial must pass; on a broken one the
// phase leaks and trials start failing.
PhaseCheckReport phase_polynomial_check(const SimplicialComplex& sc, const HomologyBasis& b1,
                                        const HomologyBasis& b2, const HomologyBasis& b3,
                                        std::size_t trials, std::uint64_t seed);

// Convenience overload computing dense bases at (q1, q2, q3) first.
PhaseCheckReport phase_polynomial_check(const SimplicialComplex& sc, std::size_t q1,
                                        std::size_t q2, std::size_t q3, std::size_t trials,
                                        std::uint64_t seed);

// Support hypergraph of a logical tensor: one vertex per (register, class),
// one hyperedge per nonzero entry.
struct InteractionHypergraph {
    std::size_t k1 = 0, k2 = 0, k3 = 0;
    std::vector<std::array<std::uint32_t, 3>> edges;  // sorted
};

InteractionHypergraph interaction_hypergraph(const LogicalCczTensor& t);

// Vertex label inside a fountain schedule: register copy (1..3) and class
// index within that copy.
struct FountainVertex {
    std::uint32_t copy;
    std::uint32_t index;
    auto operator<=>(const FountainVertex&) const = default;
};

struct FountainSchedule {
    std::vector<std::array<std::uint32_t, 3>> selected;  // vertex-disjoint edges
    std::vector<FountainVertex> plus_set;                // covered by selected edges
    std::vector<FountainVertex> zero_set;                // everything else
    std::size_t magic_count = 0;                         // = selected.size()
};

// Greedy maximal vertex-disjoint edge set, scanning edges in sorted order.
FountainSchedule fountain_schedule(const InteractionHypergraph& h);

// Circuit file: one "CCZ i j k" line per gate.
void write_circuit(std::ostream& out, const CczCircuit& c);
CczCircuit read_circuit(std::istream& in);

// Hypergraph file: "vertices k1 k2 k3" header, one "a b c" line per edge.
void write_hypergraph(std::ostream& out, const InteractionHypergraph& h);
InteractionHypergraph read_hypergraph(std::istream& in);

// Fountain file: "plus ..." and "zero ..." label lines, then "magic_count N".
void write_fountain(std::ostream& out, const FountainSchedule& f);

}  // namespace cupqec
