#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cupqec/code.hpp"
#include "cupqec/cupgate.hpp"
#include "cupqec/errors.hpp"
#include "cupqec/homology.hpp"
#include "cupqec/modelsearch.hpp"
#include "cupqec/product.hpp"
#include "cupqec/simplicial.hpp"

namespace {

using namespace cupqec;

// Usage-level problems (bad paths, impossible flag combinations) exit 2;
// library invariant failures exit 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open complex file: " + path);
    return read_complex(in);
}

void save_complex(const std::string& path, const SimplicialComplex& sc) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write complex file: " + path);
    write_complex(out, sc);
}

InteractionHypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open hypergraph file: " + path);
    return read_hypergraph(in);
}

void print_cells(const SimplicialComplex& sc) {
    std::cout << "dim=" << sc.dimension() << "\n";
    std::cout << "vertices=" << sc.num_vertices() << "\n";
    std::cout << "cells=";
    for (std::size_t q = 0; q <= sc.dimension(); ++q) {
        if (q) std::cout << " ";
        std::cout << sc.num_cells(q);
    }
    std::cout << "\n";
    std::cout << "closed=" << (sc.closed_manifold() ? 1 : 0) << "\n";
}

// Bases for one complex at every degree: dense elimination for a single
// input, Kunneth crossing when the complex is given as a factor list.
std::vector<HomologyBasis> folded_bases(std::vector<SimplicialComplex>& factors,
                                        SimplicialComplex& out) {
    out = factors.front();
    std::vector<HomologyBasis> bases = dense_bases(out);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        std::vector<HomologyBasis> fb = dense_bases(factors[i]);
        SimplicialComplex next = ordered_product(out, factors[i]);
        bases = cross_bases(out, factors[i], next, bases, fb);
        out = std::move(next);
    }
    return bases;
}

struct BuildOpts {
    std::optional<std::size_t> circle_len;
    std::optional<std::size_t> torus_len;
    bool point_gen = false;
    bool product = false;
    bool disjoint = false;
    std::optional<std::size_t> drop_index;
    std::vector<std::string> inputs;
    std::string out;
};

int run_build(const BuildOpts& o) {
    int modes = int(o.circle_len.has_value()) + int(o.torus_len.has_value()) + int(o.point_gen) +
                int(o.product) + int(o.disjoint) + int(o.drop_index.has_value());
    if (modes != 1) throw UsageError("build needs exactly one of --circle/--torus/--point/--product/--disjoint-union/--drop-top");

    SimplicialComplex sc;
    std::string mode;
    if (o.circle_len) {
        sc = circle(*o.circle_len);
        mode = "circle";
    } else if (o.torus_len) {
        sc = torus(*o.torus_len);
        mode = "torus";
    } else if (o.point_gen) {
        sc = point();
        mode = "point";
    } else if (o.drop_index) {
        if (o.inputs.size() != 1) throw UsageError("--drop-top takes exactly one --in");
        sc = drop_top(load_complex(o.inputs[0]), *o.drop_index);
        mode = "drop-top";
    } else {
        if (o.inputs.size() < 2) throw UsageError("product forms need at least two --in files");
        sc = load_complex(o.inputs[0]);
        for (std::size_t i = 1; i < o.inputs.size(); ++i) {
            SimplicialComplex next = load_complex(o.inputs[i]);
            sc = o.product ? ordered_product(sc, next) : disjoint_union(sc, next);
        }
        mode = o.product ? "product" : "disjoint-union";
    }

    save_complex(o.out, sc);
    std::cout << "mode=" << mode << "\n";
    print_cells(sc);
    std::cout << "out=" << o.out << "\n";
    return 0;
}

int run_homology(const std::string& in, std::optional<std::size_t> q,
                 const std::string& basis_out) {
    SimplicialComplex sc = load_complex(in);
    std::vector<std::size_t> betti = betti_numbers(sc);
    std::cout << "betti=";
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) std::cout << " ";
        std::cout << betti[i];
    }
    std::cout << "\n";
    if (q) {
        ChainComplex cc = chain_complex_of(sc);
        HomologyBasis basis = normalize_pairing(homology_basis(cc, *q));
        std::cout << "q=" << *q << "\n";
        std::cout << "k=" << basis.count() << "\n";
        if (!basis_out.empty()) {
            std::ofstream out(basis_out);
            if (!out) throw UsageError("cannot write basis file: " + basis_out);
            write_basis(out, basis);
            std::cout << "basis_out=" << basis_out << "\n";
        }
    }
    return 0;
}

int run_code(const std::string& in, std::size_t q, std::size_t budget, std::uint64_t seed,
             const std::string& prefix) {
    SimplicialComplex sc = load_complex(in);
    CssCode code = css_from_complex(chain_complex_of(sc), q);
    std::cout << parameters_report(code, budget, seed);
    if (!prefix.empty()) {
        std::ofstream hx(prefix + ".hx"), hz(prefix + ".hz"), basis(prefix + ".basis");
        if (!hx || !hz || !basis) throw UsageError("cannot write code files at prefix: " + prefix);
        write_matrix(hx, code.h_x);
        write_matrix(hz, code.h_z);
        write_basis(basis, code.logical);
        std::cout << "out_prefix=" << prefix << "\n";
    }
    return 0;
}

int run_distance(const std::string& in, std::size_t q, std::size_t budget, std::uint64_t seed,
                 const std::vector<std::size_t>& keep) {
    SimplicialComplex sc = load_complex(in);
    CssCode code = css_from_complex(chain_complex_of(sc), q);
    if (!keep.empty()) code = subsystem_select(code, keep);
    DistanceReport r = distance(code, budget, seed);
    std::cout << "N=" << code.n_qubits << "\n";
    std::cout << "q=" << q << "\n";
    std::cout << "kept=" << code.kept_count() << "\n";
    std::cout << "dZ=" << r.d_z.text() << "\n";
    std::cout << "dX=" << r.d_x.text() << "\n";
    std::cout << "method=" << r.method << "\n";
    std::cout << "budget=" << r.budget << "\n";
    std::cout << "seed=" << r.seed << "\n";
    return 0;
}

int run_circuit(const std::string& in, std::size_t q1, std::size_t q2, std::size_t q3,
                const std::string& out_path) {
    SimplicialComplex sc = load_complex(in);
    CczCircuit c = synthesize_circuit(sc, q1, q2, q3);
    std::cout << "q1=" << q1 << " q2=" << q2 << " q3=" << q3 << "\n";
    std::cout << "gates=" << c.gates.size() << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write circuit file: " + out_path);
        write_circuit(out, c);
        std::cout << "out=" << out_path << "\n";
    }
    return 0;
}

void print_tensor(const LogicalCczTensor& t) {
    std::cout << "k=" << t.k1() << " " << t.k2() << " " << t.k3() << "\n";
    for (const auto& e : t.support())
        std::cout << "entry " << e[0] << " " << e[1] << " " << e[2] << "\n";
    std::cout << "support=" << t.support_size() << "\n";
}

int run_logical_action(const std::string& in, std::size_t q1, std::size_t q2, std::size_t q3,
                       const std::vector<std::string>& factors) {
    if (!factors.empty()) {
        if (factors.size() != 3) throw UsageError("--factors takes exactly three complexes");
        TripleProduct tp = make_triple_product(load_complex(factors[0]), load_complex(factors[1]),
                                               load_complex(factors[2]));
        std::size_t qt = tp.full.dimension() / 3;
        CczCircuit c = synthesize_circuit(tp.full, qt, qt, qt);
        LogicalCczTensor t =
            logical_action(tp.full, c, tp.bases[qt], tp.bases[qt], tp.bases[qt]);
        std::cout << "qtilde=" << qt << "\n";
        print_tensor(t);
        return 0;
    }
    SimplicialComplex sc = load_complex(in);
    ChainComplex cc = chain_complex_of(sc);
    HomologyBasis b1 = normalize_pairing(homology_basis(cc, q1));
    HomologyBasis b2 = q2 == q1 ? b1 : normalize_pairing(homology_basis(cc, q2));
    HomologyBasis b3 = q3 == q2 ? b2 : (q3 == q1 ? b1 : normalize_pairing(homology_basis(cc, q3)));
    CczCircuit c = synthesize_circuit(sc, q1, q2, q3);
    LogicalCczTensor t = logical_action(sc, c, b1, b2, b3);
    std::cout << "q1=" << q1 << " q2=" << q2 << " q3=" << q3 << "\n";
    print_tensor(t);
    return 0;
}

// Random-shift invariance of the triple cup integral itself: reps move by
// coboundaries, the integral must not.
PhaseCheckReport stokes_probe(const SimplicialComplex& sc, const HomologyBasis& b1,
                              const HomologyBasis& b2, const HomologyBasis& b3,
                              std::size_t trials, std::uint64_t seed) {
    PhaseCheckReport rep;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::array<const HomologyBasis*, 3> bases{&b1, &b2, &b3};
    for (std::size_t t = 0; t < trials; ++t) {
        std::array<Cochain, 3> reps;
        std::array<Cochain, 3> shifted;
        for (std::size_t s = 0; s < 3; ++s) {
            const HomologyBasis& b = *bases[s];
            std::size_t idx = rng() % b.count();
            reps[s] = Cochain{b.degree, b.cocycles[idx]};
            if (b.degree == 0) {
                shifted[s] = reps[s];
                continue;
            }
            BitVector eta(sc.num_cells(b.degree - 1));
            for (std::size_t i = 0; i < eta.size(); ++i)
                if (rng() & 1) eta.set(i, true);
            Cochain shift = coboundary(sc, Cochain{b.degree - 1, std::move(eta)});
            BitVector moved = reps[s].values;
            moved.xor_in(shift.values);
            shifted[s] = Cochain{b.degree, std::move(moved)};
        }
        bool before = triple_cup_sum(sc, reps[0], reps[1], reps[2]);
        bool after = triple_cup_sum(sc, shifted[0], shifted[1], shifted[2]);
        if (before == after)
            ++rep.passes;
        else
            ++rep.failures;
    }
    return rep;
}

int run_verify(const std::string& in, const std::vector<std::string>& factors,
               const std::string& suite, std::size_t trials, std::uint64_t seed,
               std::optional<std::size_t> q1, std::optional<std::size_t> q2,
               std::optional<std::size_t> q3) {
    bool phase = suite == "phase" || suite == "all";
    bool stokes = suite == "stokes" || suite == "all";
    bool poincare = suite == "poincare" || suite == "all";
    if (!phase && !stokes && !poincare)
        throw UsageError("--suite must be phase, stokes, poincare or all");

    SimplicialComplex sc;
    std::vector<HomologyBasis> bases;
    std::array<std::size_t, 3> qs{};
    if (!factors.empty()) {
        std::vector<SimplicialComplex> fs;
        fs.reserve(factors.size());
        for (const auto& path : factors) fs.push_back(load_complex(path));
        if ((phase || stokes) && fs.size() != 3)
            throw UsageError("phase and stokes suites need exactly three --factors");
        bases = folded_bases(fs, sc);
        std::size_t qt = sc.dimension() / 3;
        qs = {qt, qt, qt};
        std::cout << "qtilde=" << qt << "\n";
    } else {
        sc = load_complex(in);
        // Raw bases: the probes must still run on complexes whose pairing is
        // degenerate, which basis normalization would reject up front.
        ChainComplex cc = chain_complex_of(sc);
        for (std::size_t d = 0; d <= sc.dimension(); ++d)
            bases.push_back(homology_basis(cc, d));
        if (phase || stokes) {
            if (!q1 || !q2 || !q3)
                throw UsageError("phase and stokes suites need --q1 --q2 --q3 with --in");
            qs = {*q1, *q2, *q3};
            if (qs[0] + qs[1] + qs[2] != sc.dimension())
                throw UsageError("degrees must sum to the complex dimension");
        }
    }
    std::cout << "seed=" << seed << "\n";

    bool failed = false;
    if (phase) {
        PhaseCheckReport r = phase_polynomial_check(sc, bases[qs[0]], bases[qs[1]], bases[qs[2]],
                                                    trials, seed);
        std::cout << "suite=phase trials=" << r.trials << " passes=" << r.passes
                  << " failures=" << r.failures << "\n";
        if (r.failures) failed = true;
    }
    if (stokes) {
        PhaseCheckReport r = stokes_probe(sc, bases[qs[0]], bases[qs[1]], bases[qs[2]], trials,
                                          seed);
        std::cout << "suite=stokes trials=" << r.trials << " passes=" << r.passes
                  << " failures=" << r.failures << "\n";
        if (r.failures) failed = true;
    }
    if (poincare) {
        std::size_t n = sc.dimension();
        for (std::size_t p = 0; p <= n; ++p) {
            BitMatrix m = poincare_pairing(sc, bases[p], bases[n - p]);
            bool full = rank(m) == m.rows() && m.rows() == m.cols();
            std::cout << "suite=poincare q=" << p << " k=" << m.rows()
                      << " full=" << (full ? 1 : 0) << "\n";
            if (!full) failed = true;
        }
    }
    return failed ? 1 : 0;
}

int run_hypergraph(const std::string& in, std::size_t q1, std::size_t q2, std::size_t q3,
                   const std::vector<std::string>& factors, const std::string& out_path) {
    LogicalCczTensor t;
    if (!factors.empty()) {
        if (factors.size() != 3) throw UsageError("--factors takes exactly three complexes");
        TripleProduct tp = make_triple_product(load_complex(factors[0]), load_complex(factors[1]),
                                               load_complex(factors[2]));
        std::size_t qt = tp.full.dimension() / 3;
        CczCircuit c = synthesize_circuit(tp.full, qt, qt, qt);
        t = logical_action(tp.full, c, tp.bases[qt], tp.bases[qt], tp.bases[qt]);
    } else {
        SimplicialComplex sc = load_complex(in);
        ChainComplex cc = chain_complex_of(sc);
        HomologyBasis b1 = normalize_pairing(homology_basis(cc, q1));
        HomologyBasis b2 = q2 == q1 ? b1 : normalize_pairing(homology_basis(cc, q2));
        HomologyBasis b3 =
            q3 == q2 ? b2 : (q3 == q1 ? b1 : normalize_pairing(homology_basis(cc, q3)));
        CczCircuit c = synthesize_circuit(sc, q1, q2, q3);
        t = logical_action(sc, c, b1, b2, b3);
    }
    InteractionHypergraph h = interaction_hypergraph(t);
    std::cout << "vertices=" << h.k1 << " " << h.k2 << " " << h.k3 << "\n";
    std::cout << "edges=" << h.edges.size() << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write hypergraph file: " + out_path);
        write_hypergraph(out, h);
        std::cout << "out=" << out_path << "\n";
    }
    return 0;
}

int run_fountain(const std::string& in) {
    InteractionHypergraph h = load_hypergraph(in);
    FountainSchedule f = fountain_schedule(h);
    write_fountain(std::cout, f);
    return 0;
}

int run_families(const std::vector<std::string>& factors, const std::string& out_path) {
    if (factors.size() != 3) throw UsageError("--factors takes exactly three complexes");
    TripleProduct tp = make_triple_product(load_complex(factors[0]), load_complex(factors[1]),
                                           load_complex(factors[2]));
    std::size_t qt = tp.full.dimension() / 3;
    const std::vector<KunnethLabel>& labels = tp.labels[qt];
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& l : labels) counts[static_cast<int>(l.family)]++;
    std::cout << "qtilde=" << qt << "\n";
    std::cout << "classes=" << labels.size() << "\n";
    std::cout << "alpha=" << counts[0] << "\n";
    std::cout << "beta=" << counts[1] << "\n";
    std::cout << "gamma=" << counts[2] << "\n";
    std::cout << "residual=" << counts[3] << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write family file: " + out_path);
        write_families(out, labels);
        std::cout << "out=" << out_path << "\n";
    }
    return 0;
}

int run_ccz_count(const std::vector<std::string>& factors) {
    if (factors.size() != 3) throw UsageError("--factors takes exactly three complexes");
    TripleProduct tp = make_triple_product(load_complex(factors[0]), load_complex(factors[1]),
                                           load_complex(factors[2]));
    std::size_t qt = tp.full.dimension() / 3;
    CczCircuit c = synthesize_circuit(tp.full, qt, qt, qt);
    LogicalCczTensor t = logical_action(tp.full, c, tp.bases[qt], tp.bases[qt], tp.bases[qt]);
    CczCounts counts = ccz_count(t, tp.labels[qt], tp);

    static const char* kPerm[6] = {"abg", "agb", "bag", "bga", "gab", "gba"};
    std::cout << "qtilde=" << qt << "\n";
    for (std::size_t i = 0; i < 6; ++i)
        std::cout << "orientation=" << kPerm[i] << " entries=" << counts.by_orientation[i]
                  << "\n";
    std::cout << "family_total=" << counts.family_total << "\n";
    std::cout << "other=" << counts.other_support << "\n";
    std::cout << "support=" << counts.support << "\n";
    return 0;
}

int run_search(std::size_t q_max) {
    std::vector<SearchRow> rows = search_min_q(q_max);
    for (const auto& row : rows)
        for (const auto& s : row.sets) {
            std::cout << row.q;
            for (std::size_t i = 0; i < 3; ++i)
                std::cout << " " << s.factor[i].p << " " << s.factor[i].s;
            std::cout << "\n";
        }
    return 0;
}

int run_bad_dims(const std::vector<std::size_t>& vals) {
    if (vals.size() != 6) throw UsageError("--set takes p0,s0,p1,s1,p2,s2");
    ParameterSet set;
    for (std::size_t i = 0; i < 3; ++i) set.factor[i] = {vals[2 * i], vals[2 * i + 1]};
    std::vector<std::size_t> bad = bad_dimensions(set);
    std::vector<std::size_t> gaps = dimension_gaps(set);
    std::cout << "q=" << set.q() << "\n";
    std::cout << "valid=" << (valid(set) ? 1 : 0) << "\n";
    std::cout << "bad=";
    for (std::size_t i = 0; i < bad.size(); ++i) std::cout << (i ? " " : "") << bad[i];
    std::cout << "\n";
    std::cout << "gaps=";
    for (std::size_t i = 0; i < gaps.size(); ++i) std::cout << (i ? " " : "") << gaps[i];
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain-complex CSS codes with cup-product CCZ circuits"};
    app.require_subcommand(1);

    BuildOpts build_opts;
    auto* build = app.add_subcommand("build", "generate or combine complexes");
    build->add_option("--circle", build_opts.circle_len, "cycle graph length (>= 3)");
    build->add_option("--torus", build_opts.torus_len, "square torus side (>= 3)");
    build->add_flag("--point", build_opts.point_gen, "single vertex");
    build->add_flag("--product", build_opts.product, "ordered product of the --in files");
    build->add_flag("--disjoint-union", build_opts.disjoint, "disjoint union of the --in files");
    build->add_option("--drop-top", build_opts.drop_index, "delete one top cell by index");
    build->add_option("--in", build_opts.inputs, "input complex files");
    build->add_option("--out", build_opts.out, "output complex file")->required();

    std::string in_path, basis_out, out_path, prefix, suite = "all", set_arg;
    std::optional<std::size_t> opt_q, opt_q1, opt_q2, opt_q3;
    std::size_t q = 0, q1 = 0, q2 = 0, q3 = 0, budget = 100000000, trials = 1000, q_max = 31;
    std::uint64_t seed = 0;
    std::vector<std::size_t> keep, set_vals;
    std::vector<std::string> factor_paths;

    auto* homology = app.add_subcommand("homology", "Betti numbers and bases");
    homology->add_option("--in", in_path, "complex file")->required();
    homology->add_option("--q", opt_q, "degree for a basis");
    homology->add_option("--basis-out", basis_out, "basis export path");

    auto* code = app.add_subcommand("code", "CSS code read off a complex");
    code->add_option("--in", in_path, "complex file")->required();
    code->add_option("--q", q, "qubit degree")->required();
    code->add_option("--budget", budget, "distance search step cap");
    code->add_option("--seed", seed, "randomized fallback seed")->required();
    code->add_option("--out-prefix", prefix, "export prefix (.hx/.hz/.basis)");

    auto* dist = app.add_subcommand("distance", "minimum logical weights");
    dist->add_option("--in", in_path, "complex file")->required();
    dist->add_option("--q", q, "qubit degree")->required();
    dist->add_option("--budget", budget, "search step cap");
    dist->add_option("--seed", seed, "randomized fallback seed")->required();
    dist->add_option("--keep", keep, "kept logical classes")->delimiter(',');

    auto* circ = app.add_subcommand("circuit", "cup-product CCZ circuit");
    circ->add_option("--in", in_path, "complex file")->required();
    circ->add_option("--q1", q1, "first register degree")->required();
    circ->add_option("--q2", q2, "second register degree")->required();
    circ->add_option("--q3", q3, "third register degree")->required();
    circ->add_option("--out", out_path, "circuit export path");

    auto* act = app.add_subcommand("logical-action", "circuit action on basis cocycles");
    act->add_option("--in", in_path, "complex file");
    act->add_option("--q1", q1, "first register degree");
    act->add_option("--q2", q2, "second register degree");
    act->add_option("--q3", q3, "third register degree");
    act->add_option("--factors", factor_paths, "three factor complexes");

    auto* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("--in", in_path, "complex file");
    verify->add_option("--factors", factor_paths, "factor complexes (bases by crossing)");
    verify->add_option("--suite", suite, "phase | stokes | poincare | all");
    verify->add_option("--trials", trials, "random trials per probe");
    verify->add_option("--seed", seed, "trial seed")->required();
    verify->add_option("--q1", opt_q1, "first register degree");
    verify->add_option("--q2", opt_q2, "second register degree");
    verify->add_option("--q3", opt_q3, "third register degree");

    auto* hyper = app.add_subcommand("hypergraph", "logical interaction hypergraph");
    hyper->add_option("--in", in_path, "complex file");
    hyper->add_option("--q1", q1, "first register degree");
    hyper->add_option("--q2", q2, "second register degree");
    hyper->add_option("--q3", q3, "third register degree");
    hyper->add_option("--factors", factor_paths, "three factor complexes");
    hyper->add_option("--out", out_path, "hypergraph export path");

    auto* fountain = app.add_subcommand("fountain", "magic state schedule");
    fountain->add_option("--in", in_path, "hypergraph file")->required();

    auto* families = app.add_subcommand("families", "Kunneth class labels");
    families->add_option("--factors", factor_paths, "three factor complexes")->required();
    families->add_option("--out", out_path, "family table path");

    auto* cczc = app.add_subcommand("ccz-count", "tensor support by family orientation");
    cczc->add_option("--factors", factor_paths, "three factor complexes")->required();

    auto* search = app.add_subcommand("search", "valid parameter sets by dimension");
    search->add_option("--qmax", q_max, "largest middle degree")->required();

    auto* bad = app.add_subcommand("bad-dims", "bad dimensions of one parameter set");
    bad->add_option("--set", set_vals, "p0,s0,p1,s1,p2,s2")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return run_build(build_opts);
        if (homology->parsed()) return run_homology(in_path, opt_q, basis_out);
        if (code->parsed()) return run_code(in_path, q, budget, seed, prefix);
        if (dist->parsed()) return run_distance(in_path, q, budget, seed, keep);
        if (circ->parsed()) return run_circuit(in_path, q1, q2, q3, out_path);
        if (act->parsed()) return run_logical_action(in_path, q1, q2, q3, factor_paths);
        if (verify->parsed())
            return run_verify(in_path, factor_paths, suite, trials, seed, opt_q1, opt_q2, opt_q3);
        if (hyper->parsed()) return run_hypergraph(in_path, q1, q2, q3, factor_paths, out_path);
        if (fountain->parsed()) return run_fountain(in_path);
        if (families->parsed()) return run_families(factor_paths, out_path);
        if (cczc->parsed()) return run_ccz_count(factor_paths);
        if (search->parsed()) return run_search(q_max);
        if (bad->parsed()) return run_bad_dims(set_vals);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
