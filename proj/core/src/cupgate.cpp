#include "cupqec/cupgate.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace cupqec {

CupTable::CupTable(const SimplicialComplex& sc, std::size_t p, std::size_t q) : p_(p), q_(q) {
    if (p + q > sc.dimension())
        throw DegreeOverflow("cup: degrees " + std::to_string(p) + "+" + std::to_string(q) +
                             " exceed dimension " + std::to_string(sc.dimension()));
    const SimplexList& cells = sc.cells(p + q);
    const SimplexList& fronts = sc.cells(p);
    const SimplexList& backs = sc.cells(q);
    front_.resize(cells.size());
    back_.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::uint32_t* t = cells.tuple(i);
        front_[i] = static_cast<std::uint32_t>(*fronts.find(t));
        back_[i] = static_cast<std::uint32_t>(*backs.find(t + p));
    }
}

bool CupTable::pair_sum(const BitVector& a, const BitVector& b) const {
    bool acc = false;
    for (std::size_t i = 0; i < front_.size(); ++i)
        acc ^= a.get(front_[i]) & b.get(back_[i]);
    return acc;
}

Cochain cup(const SimplicialComplex& sc, const Cochain& a, const Cochain& b) {
    if (a.values.size() != sc.num_cells(a.degree) || b.values.size() != sc.num_cells(b.degree))
        throw LengthMismatch("cup: cochain width does not match the cell count");
    CupTable table(sc, a.degree, b.degree);
    Cochain out{a.degree + b.degree, BitVector(table.size())};
    for (std::size_t i = 0; i < table.size(); ++i)
        if (a.values.get(table.front(i)) & b.values.get(table.back(i)))
            out.values.set(i, true);
    return out;
}

Cochain coboundary(const SimplicialComplex& sc, const Cochain& c) {
    if (c.degree >= sc.dimension())
        throw DegreeOverflow("coboundary: already at top degree");
    if (c.values.size() != sc.num_cells(c.degree))
        throw LengthMismatch("coboundary: cochain width does not match the cell count");
    const IncidenceCsr& fc = sc.faces(c.degree + 1);
    Cochain out{c.degree + 1, BitVector(sc.num_cells(c.degree + 1))};
    for (std::size_t t = 0; t < out.values.size(); ++t) {
        bool acc = false;
        for (std::size_t k = fc.offsets[t]; k < fc.offsets[t + 1]; ++k)
            acc ^= c.values.get(fc.targets[k]);
        if (acc) out.values.set(t, true);
    }
    return out;
}

bool is_cocycle(const SimplicialComplex& sc, const Cochain& c) {
    if (c.degree == sc.dimension()) return true;
    return coboundary(sc, c).values.is_zero();
}

namespace {

// Indices of the front q1-face, middle q2-face and back q3-face of every top
// simplex.  The middle face starts where the front one ends, so the three
// overlap in single vertices exactly as the evaluation rule wants.
struct TripleSplit {
    std::vector<std::uint32_t> i, j, k;
};

TripleSplit build_triple_split(const SimplicialComplex& sc, std::size_t q1, std::size_t q2,
                               std::size_t q3) {
    if (q1 + q2 + q3 != sc.dimension())
        throw DegreeMismatch("degree split " + std::to_string(q1) + "+" + std::to_string(q2) +
                             "+" + std::to_string(q3) + " does not sum to dimension " +
                             std::to_string(sc.dimension()));
    const SimplexList& tops = sc.cells(sc.dimension());
    const SimplexList& l1 = sc.cells(q1);
    const SimplexList& l2 = sc.cells(q2);
    const SimplexList& l3 = sc.cells(q3);
    TripleSplit split;
    split.i.resize(tops.size());
    split.j.resize(tops.size());
    split.k.resize(tops.size());
    for (std::size_t t = 0; t < tops.size(); ++t) {
        const std::uint32_t* v = tops.tuple(t);
        split.i[t] = static_cast<std::uint32_t>(*l1.find(v));
        split.j[t] = static_cast<std::uint32_t>(*l2.find(v + q1));
        split.k[t] = static_cast<std::uint32_t>(*l3.find(v + q1 + q2));
    }
    return split;
}

}  // namespace

bool triple_cup_sum(const SimplicialComplex& sc, const Cochain& a, const Cochain& b,
                    const Cochain& c) {
    if (!sc.closed_manifold())
        throw NotClosedManifold("triple_cup_sum integrates over a closed manifold");
    if (a.values.size() != sc.num_cells(a.degree) || b.values.size() != sc.num_cells(b.degree) ||
        c.values.size() != sc.num_cells(c.degree))
        throw LengthMismatch("triple_cup_sum: cochain width does not match the cell count");
    TripleSplit split = build_triple_split(sc, a.degree, b.degree, c.degree);
    bool acc = false;
    for (std::size_t t = 0; t < split.i.size(); ++t)
        acc ^= a.values.get(split.i[t]) & b.values.get(split.j[t]) & c.values.get(split.k[t]);
    return acc;
}

bool CczCircuit::phase(const BitVector& a, const BitVector& b, const BitVector& c) const {
    if (a.size() != n1 || b.size() != n2 || c.size() != n3)
        throw LengthMismatch("circuit phase: register width mismatch");
    bool acc = false;
    for (const CczGate& g : gates) acc ^= a.get(g.a) & b.get(g.b) & c.get(g.c);
    return acc;
}

CczCircuit synthesize_circuit(const SimplicialComplex& sc, std::size_t q1, std::size_t q2,
                              std::size_t q3, bool require_closed) {
    if (require_closed && !sc.closed_manifold())
        throw NotClosedManifold("circuit synthesis needs a closed manifold");
    TripleSplit split = build_triple_split(sc, q1, q2, q3);

    CczCircuit circuit;
    circuit.q1 = q1;
    circuit.q2 = q2;
    circuit.q3 = q3;
    circuit.n1 = sc.num_cells(q1);
    circuit.n2 = sc.num_cells(q2);
    circuit.n3 = sc.num_cells(q3);
    circuit.gates.reserve(split.i.size());
    for (std::size_t t = 0; t < split.i.size(); ++t)
        circuit.gates.push_back({split.i[t], split.j[t], split.k[t]});
    std::sort(circuit.gates.begin(), circuit.gates.end());

    // Gates appearing an even number of times contribute no phase.
    std::vector<CczGate> kept;
    kept.reserve(circuit.gates.size());
    for (std::size_t s = 0; s < circuit.gates.size();) {
        std::size_t e = s;
        while (e < circuit.gates.size() && circuit.gates[e] == circuit.gates[s]) ++e;
        if ((e - s) & 1u) kept.push_back(circuit.gates[s]);
        s = e;
    }
    circuit.gates = std::move(kept);
    return circuit;
}

namespace {

void check_register(const HomologyBasis& b, std::size_t q, std::size_t n, const char* which) {
    if (b.degree != q)
        throw DegreeMismatch(std::string("logical_action: ") + which +
                             " basis degree does not match the circuit");
    if (!b.normalized)
        throw BasisMismatch(std::string("logical_action: ") + which +
                            " basis is not pairing-normalized");
    for (const auto& v : b.cocycles)
        if (v.size() != n)
            throw BasisMismatch(std::string("logical_action: ") + which +
                                " representative width does not match the register");
}

// Per-cell class masks: bit a of masks[i] says whether cocycle a contains
// cell i.  Class counts are capped at 64 so a mask fits one word.
std::vector<std::uint64_t> class_masks(const std::vector<BitVector>& cocycles, std::size_t n) {
    if (cocycles.size() > 64)
        throw CapacityExceeded("more than 64 classes per register");
    std::vector<std::uint64_t> masks(n, 0);
    for (std::size_t a = 0; a < cocycles.size(); ++a)
        for (std::size_t cell : cocycles[a].support())
            masks[cell] |= std::uint64_t{1} << a;
    return masks;
}

}  // namespace

LogicalCczTensor logical_action(const SimplicialComplex& sc, const CczCircuit& circuit,
                                const HomologyBasis& b1, const HomologyBasis& b2,
                                const HomologyBasis& b3) {
    check_register(b1, circuit.q1, circuit.n1, "first");
    check_register(b2, circuit.q2, circuit.n2, "second");
    check_register(b3, circuit.q3, circuit.n3, "third");

    std::size_t k1 = b1.count(), k2 = b2.count(), k3 = b3.count();
    std::vector<std::uint64_t> m1 = class_masks(b1.cocycles, circuit.n1);
    std::vector<std::uint64_t> m2 = class_masks(b2.cocycles, circuit.n2);
    std::vector<std::uint64_t> m3 = class_masks(b3.cocycles, circuit.n3);

    auto accumulate = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k,
                          std::vector<std::uint64_t>& acc) {
        std::uint64_t ma = m1[i];
        while (ma) {
            std::size_t a = std::countr_zero(ma);
            ma &= ma - 1;
            std::uint64_t mb = m2[j];
            while (mb) {
                std::size_t b = std::countr_zero(mb);
                mb &= mb - 1;
                acc[a * k2 + b] ^= m3[k];
            }
        }
    };

    std::vector<std::uint64_t> via_circuit(k1 * k2, 0);
    for (const CczGate& g : circuit.gates) accumulate(g.a, g.b, g.c, via_circuit);

    // Consistency pass: the same trilinear form evaluated from a fresh
    // face-split of the complex, bypassing the circuit's gate list and its
    // cancellation step.
    std::vector<std::uint64_t> via_faces(k1 * k2, 0);
    TripleSplit split = build_triple_split(sc, circuit.q1, circuit.q2, circuit.q3);
    for (std::size_t t = 0; t < split.i.size(); ++t)
        accumulate(split.i[t], split.j[t], split.k[t], via_faces);
    if (via_circuit != via_faces)
        throw Error("logical_action: circuit phase disagrees with the cup integral");

    LogicalCczTensor tensor(k1, k2, k3);
    for (std::size_t a = 0; a < k1; ++a)
        for (std::size_t b = 0; b < k2; ++b) {
            std::uint64_t row = via_circuit[a * k2 + b];
            while (row) {
                std::size_t c = std::countr_zero(row);
                row &= row - 1;
                tensor.set(a, b, c, true);
            }
        }
    return tensor;
}

std::vector<std::array<std::uint32_t, 3>> LogicalCczTensor::support() const {
    std::vector<std::array<std::uint32_t, 3>> out;
    for (std::size_t a = 0; a < k1_; ++a)
        for (std::size_t b = 0; b < k2_; ++b)
            for (std::size_t c = 0; c < k3_; ++c)
                if (get(a, b, c))
                    out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                   static_cast<std::uint32_t>(c)});
    return out;
}

PhaseCheckReport phase_polynomial_check(const SimplicialComplex& sc, const HomologyBasis& b1,
                                        const HomologyBasis& b2, const HomologyBasis& b3,
                                        std::size_t trials, std::uint64_t seed) {
    CczCircuit circuit =
        synthesize_circuit(sc, b1.degree, b2.degree, b3.degree, /*require_closed=*/false);

    struct Register {
        const HomologyBasis* basis;
        std::size_t width;
        std::size_t lower_cells;             // cells one degree down, 0 at degree 0
        const IncidenceCsr* up = nullptr;    // cofaces of the lower cells
    };
    std::array<Register, 3> regs = {Register{&b1, circuit.n1, 0},
                                    Register{&b2, circuit.n2, 0},
                                    Register{&b3, circuit.n3, 0}};
    for (auto& r : regs) {
        for (const auto& v : r.basis->cocycles)
            if (v.size() != r.width)
                throw BasisMismatch("phase check: representative width mismatch");
        if (r.basis->degree >= 1) {
            r.lower_cells = sc.num_cells(r.basis->degree - 1);
            r.up = &sc.cofaces(r.basis->degree - 1);
        }
    }

    Rng rng(seed);
    PhaseCheckReport report;
    report.trials = trials;
    report.seed = seed;

    std::array<BitVector, 3> base, shifted;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        for (std::size_t r = 0; r < 3; ++r) {
            const Register& reg = regs[r];
            std::size_t k = reg.basis->count();
            BitVector eta(reg.width);
            if (k > 0) {
                std::uint64_t combo = rng.bits() & ((k == 64) ? ~std::uint64_t{0}
                                                              : ((std::uint64_t{1} << k) - 1));
                for (std::size_t a = 0; a < k; ++a)
                    if ((combo >> a) & 1u) eta.xor_in(reg.basis->cocycles[a]);
            }
            base[r] = eta;
            // Shift by the coboundary of a random sparse cochain one degree
            // down; at degree zero there is nothing to shift by.
            if (reg.lower_cells > 0) {
                std::size_t weight = 1 + rng.below(8);
                for (std::size_t w = 0; w < weight; ++w) {
                    std::size_t cell = rng.below(reg.lower_cells);
                    for (std::size_t u = reg.up->offsets[cell]; u < reg.up->offsets[cell + 1]; ++u)
                        eta.flip(reg.up->targets[u]);
                }
            }
            shifted[r] = std::move(eta);
        }
        bool before = circuit.phase(base[0], base[1], base[2]);
        bool after = circuit.phase(shifted[0], shifted[1], shifted[2]);
        if (before == after)
            ++report.passes;
        else
            ++report.failures;
    }
    return report;
}

PhaseCheckReport phase_polynomial_check(const SimplicialComplex& sc, std::size_t q1,
                                        std::size_t q2, std::size_t q3, std::size_t trials,
                                        std::uint64_t seed) {
    ChainComplex cc = chain_complex_of(sc);
    HomologyBasis b1 = homology_basis(cc, q1);
    HomologyBasis b2 = q2 == q1 ? b1 : homology_basis(cc, q2);
    HomologyBasis b3 = q3 == q2 ? b2 : (q3 == q1 ? b1 : homology_basis(cc, q3));
    b1.degree = q1;
    b2.degree = q2;
    b3.degree = q3;
    return phase_polynomial_check(sc, b1, b2, b3, trials, seed);
}

InteractionHypergraph interaction_hypergraph(const LogicalCczTensor& t) {
    InteractionHypergraph h;
    h.k1 = t.k1();
    h.k2 = t.k2();
    h.k3 = t.k3();
    h.edges = t.support();
    return h;
}

FountainSchedule fountain_schedule(const InteractionHypergraph& h) {
    FountainSchedule out;
    std::vector<bool> used1(h.k1, false), used2(h.k2, false), used3(h.k3, false);
    for (const auto& e : h.edges) {
        if (used1[e[0]] || used2[e[1]] || used3[e[2]]) continue;
        used1[e[0]] = used2[e[1]] = used3[e[2]] = true;
        out.selected.push_back(e);
    }
    auto split = [](const std::vector<bool>& used, std::uint32_t copy,
                    std::vector<FountainVertex>& plus, std::vector<FountainVertex>& zero) {
        for (std::uint32_t i = 0; i < used.size(); ++i)
            (used[i] ? plus : zero).push_back({copy, i});
    };
    split(used1, 1, out.plus_set, out.zero_set);
    split(used2, 2, out.plus_set, out.zero_set);
    split(used3, 3, out.plus_set, out.zero_set);
    std::sort(out.plus_set.begin(), out.plus_set.end());
    std::sort(out.zero_set.begin(), out.zero_set.end());
    out.magic_count = out.selected.size();
    return out;
}

void write_circuit(std::ostream& out, const CczCircuit& c) {
    for (const CczGate& g : c.gates) out << "CCZ " << g.a << " " << g.b << " " << g.c << "\n";
}

CczCircuit read_circuit(std::istream& in) {
    CczCircuit c;
    std::string kw;
    while (in >> kw) {
        if (kw != "CCZ")
            throw ParseError("circuit: expected CCZ, got '" + kw + "'");
        CczGate g{};
        if (!(in >> g.a >> g.b >> g.c))
            throw ParseError("circuit: truncated gate line");
        c.gates.push_back(g);
    }
    std::sort(c.gates.begin(), c.gates.end());
    for (const CczGate& g : c.gates) {
        c.n1 = std::max<std::size_t>(c.n1, g.a + 1);
        c.n2 = std::max<std::size_t>(c.n2, g.b + 1);
        c.n3 = std::max<std::size_t>(c.n3, g.c + 1);
    }
    return c;
}

void write_hypergraph(std::ostream& out, const InteractionHypergraph& h) {
    out << "vertices " << h.k1 << " " << h.k2 << " " << h.k3 << "\n";
    for (const auto& e : h.edges) out << e[0] << " " << e[1] << " " << e[2] << "\n";
}

InteractionHypergraph read_hypergraph(std::istream& in) {
    std::string kw;
    InteractionHypergraph h;
    if (!(in >> kw >> h.k1 >> h.k2 >> h.k3) || kw != "vertices")
        throw ParseError("hypergraph: expected 'vertices k1 k2 k3' header");
    std::array<std::uint32_t, 3> e{};
    while (in >> e[0] >> e[1] >> e[2]) {
        if (e[0] >= h.k1 || e[1] >= h.k2 || e[2] >= h.k3)
            throw ParseError("hypergraph: edge vertex out of range");
        h.edges.push_back(e);
    }
    if (!in.eof()) {
        in.clear();
        std::string rest;
        in >> rest;
        throw ParseError("hypergraph: unexpected token '" + rest + "'");
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

void write_fountain(std::ostream& out, const FountainSchedule& f) {
    out << "plus";
    for (const auto& v : f.plus_set) out << " " << v.copy << ":" << v.index;
    out << "\nzero";
    for (const auto& v : f.zero_set) out << " " << v.copy << ":" << v.index;
    out << "\nmagic_count " << f.magic_count << "\n";
}

}  // namespace cupqec
