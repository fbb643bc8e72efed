// Acceptance gate: ten numbered criteria, one verdict line each, measured
// values printed next to every requirement so a failure is self-explaining.
// Exit status is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cupqec/code.hpp"
#include "cupqec/cupgate.hpp"
#include "cupqec/homology.hpp"
#include "cupqec/modelsearch.hpp"
#include "cupqec/product.hpp"
#include "cupqec/simplicial.hpp"

using namespace cupqec;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kDistanceBudget = std::size_t{2} << 30;

// Wall-clock ceilings, seconds.  A criterion that misses its ceiling fails
// even when the numbers are right.
constexpr double kLimit1 = 10.0;
constexpr double kLimit2 = 60.0;
constexpr double kLimit3 = 120.0;
constexpr double kLimit4 = 300.0;
constexpr double kLimit6 = 300.0;
constexpr double kLimit8 = 600.0;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CUPQEC_CLI) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

struct Gate {
    int failed = 0;

    void verdict(int id, bool ok, const std::string& detail = "") {
        std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failed;
    }

    void note(const std::string& line) { std::cout << "  " << line << "\n"; }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

SimplicialComplex circle_power(std::size_t dims) {
    SimplicialComplex sc = circle(3);
    for (std::size_t d = 1; d < dims; ++d) sc = ordered_product(sc, circle(3));
    return sc;
}

// criterion 1: the dimension search through the CLI.
void criterion_1(Gate& gate) {
    auto t0 = Clock::now();
    RunResult search = run_cli("search --qmax 32");
    bool ok = search.status == 0;

    std::size_t first_q = 0;
    std::set<std::string> rows31, rows32;
    std::istringstream lines(search.out);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        std::size_t q;
        if (!(ls >> q)) continue;
        if (first_q == 0) first_q = q;
        std::string rest;
        std::getline(ls, rest);
        if (q == 31) rows31.insert(rest);
        if (q == 32) rows32.insert(rest);
    }
    gate.note("first dimension with a valid set: " + std::to_string(first_q) +
              " (required: 31)");
    bool min_31 = first_q == 31;
    bool has_31 = rows31.count(" 9 16 12 22 15 19") > 0;
    bool has_32 = rows32.count(" 9 17 12 23 15 20") > 0;
    gate.note(std::string("q=31 set {(9,16),(12,22),(15,19)} present: ") +
              (has_31 ? "yes" : "no"));
    gate.note(std::string("q=32 set {(9,17),(12,23),(15,20)} present: ") +
              (has_32 ? "yes" : "no"));

    RunResult gaps = run_cli("bad-dims --set 9,16,12,22,15,19");
    std::string want_gaps = "gaps=7 8 30 31 62 63 76\n";
    bool gaps_match = gaps.status == 0 && contains(gaps.out, want_gaps);
    std::string got_gaps = "?";
    if (auto pos = gaps.out.find("gaps="); pos != std::string::npos)
        got_gaps = gaps.out.substr(pos + 5, gaps.out.find('\n', pos) - pos - 5);
    gate.note("q=31 gap list: {" + got_gaps + "} (required: {7 8 30 31 62 63 76})");

    double secs = seconds_since(t0);
    bool in_time = secs < kLimit1;
    gate.note("elapsed " + fmt_secs(secs) + " of " + fmt_secs(kLimit1));
    gate.verdict(1, ok && min_31 && has_31 && has_32 && gaps_match && in_time,
                 min_31 && gaps_match ? "" : "minimum dimension and gap list differ from the required values");
}

// criterion 2: transversal CCZ support on the 3-torus at both sizes.
void criterion_2(Gate& gate) {
    auto t0 = Clock::now();
    bool all_ok = true;
    for (std::size_t len : {std::size_t{3}, std::size_t{4}}) {
        SimplicialComplex s1 = circle(len);
        TripleProduct tp = make_triple_product(s1, s1, s1);
        CczCircuit circ = synthesize_circuit(tp.full, 1, 1, 1);
        LogicalCczTensor t = logical_action(tp.full, circ, tp.bases[1], tp.bases[1], tp.bases[1]);

        std::set<std::array<std::uint32_t, 3>> want{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        auto sup = t.support();
        bool support_ok =
            std::set<std::array<std::uint32_t, 3>>(sup.begin(), sup.end()) == want;

        // Re-derive every entry straight from the cup integral.
        bool entries_ok = true;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                for (std::size_t c = 0; c < 3; ++c) {
                    Cochain ca{1, tp.bases[1].cocycles[a]};
                    Cochain cb{1, tp.bases[1].cocycles[b]};
                    Cochain cc{1, tp.bases[1].cocycles[c]};
                    if (t.get(a, b, c) != triple_cup_sum(tp.full, ca, cb, cc))
                        entries_ok = false;
                }
        gate.note("L=" + std::to_string(len) + ": support " +
                  std::to_string(t.support_size()) + "/6 permutation pattern " +
                  (support_ok ? "yes" : "no") + ", entries match cup integrals " +
                  (entries_ok ? "yes" : "no"));
        all_ok = all_ok && support_ok && entries_ok;
    }
    double secs = seconds_since(t0);
    bool in_time = secs < kLimit2;
    gate.note("elapsed " + fmt_secs(secs) + " of " + fmt_secs(kLimit2));
    gate.verdict(2, all_ok && in_time);
}

// criterion 3: coboundary-shift invariance through the CLI, with the
// broken-manifold negative control.
void criterion_3(Gate& gate) {
    auto t0 = Clock::now();
    bool ok = true;

    ok &= run_cli("build --torus 3 --out acc_t2.cplx").status == 0;
    ok &= run_cli("build --circle 3 --out acc_s1.cplx").status == 0;
    ok &= run_cli("build --product --in acc_t2.cplx --in acc_s1.cplx --out acc_t3.cplx")
              .status == 0;
    ok &= run_cli("build --drop-top 0 --in acc_t3.cplx --out acc_broken.cplx").status == 0;

    RunResult t3 = run_cli(
        "verify --in acc_t3.cplx --suite phase --trials 1000 --seed 7 --q1 1 --q2 1 --q3 1");
    bool t3_ok = t3.status == 0 && contains(t3.out, "trials=1000 passes=1000 failures=0");
    gate.note(std::string("T3 phase suite 1000 trials all pass: ") + (t3_ok ? "yes" : "no"));

    RunResult t6 =
        run_cli("verify --factors acc_t2.cplx acc_t2.cplx acc_t2.cplx --suite phase "
                "--trials 1000 --seed 7");
    bool t6_ok = t6.status == 0 && contains(t6.out, "trials=1000 passes=1000 failures=0");
    gate.note(std::string("T2(3)^3 phase suite 1000 trials all pass: ") +
              (t6_ok ? "yes" : "no"));

    RunResult neg = run_cli(
        "verify --in acc_broken.cplx --suite phase --trials 1000 --seed 7 --q1 1 --q2 1 --q3 1");
    bool neg_ok = neg.status == 1 && !contains(neg.out, "failures=0");
    std::string fail_field = "?";
    if (auto pos = neg.out.find("failures="); pos != std::string::npos)
        fail_field = neg.out.substr(pos + 9, neg.out.find('\n', pos) - pos - 9);
    gate.note("negative control failures: " + fail_field + " (required: >= 1)");

    double secs = seconds_since(t0);
    bool in_time = secs < kLimit3;
    gate.note("elapsed " + fmt_secs(secs) + " of " + fmt_secs(kLimit3));
    gate.verdict(3, ok && t3_ok && t6_ok && neg_ok && in_time);
}

// criteria 4 + 5 share one sweep over the circle-power suite.
void criteria_4_5(Gate& gate) {
    auto t0 = Clock::now();
    bool pairing_ok = true;
    bool kunneth_ok = true;

    SimplicialComplex prev = circle(3);
    std::vector<HomologyBasis> prev_bases = dense_bases(prev);
    std::vector<std::size_t> prev_betti = betti_numbers(prev);
    std::vector<std::size_t> circle_betti = prev_betti;

    for (std::size_t dims = 1; dims <= 6; ++dims) {
        if (dims > 1) {
            SimplicialComplex s1 = circle(3);
            SimplicialComplex next = ordered_product(prev, s1);
            prev_bases = cross_bases(prev, s1, next, prev_bases, dense_bases(s1));
            prev = std::move(next);
        }

        bool full_here = true;
        for (std::size_t p = 0; p <= dims; ++p) {
            BitMatrix m = poincare_pairing(prev, prev_bases[p], prev_bases[dims - p]);
            if (m.rows() != m.cols() || rank(m) != m.rows()) full_here = false;
        }
        pairing_ok = pairing_ok && full_here;

        std::vector<std::size_t> measured = betti_numbers(prev);
        bool conv_ok = true;
        if (dims > 1) {
            for (std::size_t q = 0; q < measured.size(); ++q) {
                std::size_t conv = 0;
                for (std::size_t i = 0; i < prev_betti.size(); ++i)
                    if (q >= i && q - i < circle_betti.size())
                        conv += prev_betti[i] * circle_betti[q - i];
                if (measured[q] != conv) conv_ok = false;
            }
        }
        kunneth_ok = kunneth_ok && conv_ok;
        prev_betti = measured;

        gate.note("T^" + std::to_string(dims) + ": pairing full rank " +
                  (full_here ? "yes" : "no") + ", betti convolution " +
                  (conv_ok ? "yes" : "no"));
    }

    double secs = seconds_since(t0);
    bool in_time = secs < kLimit4;
    gate.note("elapsed " + fmt_secs(secs) + " of " + fmt_secs(kLimit4));
    gate.verdict(4, pairing_ok && in_time);
    gate.verdict(5, kunneth_ok);
}

// criterion 6: exhaustive toric-code distances.
void criterion_6(Gate& gate) {
    auto t0 = Clock::now();
    bool all_ok = true;
    for (std::size_t len : {std::size_t{3}, std::size_t{4}, std::size_t{5}}) {
        CssCode code = css_from_complex(chain_complex_of(torus(len)), 1);
        DistanceReport r = distance(code, kDistanceBudget, kSeed);
        bool here = r.method == "exhaustive" && r.d_z.exact() && r.d_x.exact() &&
                    r.d_z.lower == len && r.d_x.lower == len;
        gate.note("L=" + std::to_string(len) + ": dZ=" + r.d_z.text() + " dX=" + r.d_x.text() +
                  " method=" + r.method + " (required: dZ=dX=" + std::to_string(len) + ")");
        all_ok = all_ok && here;
    }
    double secs = seconds_since(t0);
    bool in_time = secs < kLimit6;
    gate.note("elapsed " + fmt_secs(secs) + " of " + fmt_secs(kLimit6));
    gate.verdict(6, all_ok && in_time,
                 all_ok ? "" : "cosystole of the staircase torus exceeds the systole");
}

// criterion 7: subsystem distance on a two-component surface code.
void criterion_7(Gate& gate) {
    auto t0 = Clock::now();
    bool all_ok = true;
    for (std::size_t len : {std::size_t{4}, std::size_t{5}}) {
        SimplicialComplex two = disjoint_union(torus(len), torus(3));
        CssCode code = css_from_complex(chain_complex_of(two), 1);

        DistanceReport plain = distance(code, kDistanceBudget, kSeed);
        bool plain_ok = plain.d_z.exact() && plain.d_z.lower == 3;

        std::vector<DistanceBound> wz = class_weights(code, Side::z, kDistanceBudget, kSeed);
        std::vector<std::size_t> keep;
        std::ostringstream weights;
        for (std::size_t i = 0; i < wz.size(); ++i) {
            weights << (i ? " " : "") << wz[i].text();
            if (wz[i].exact() && wz[i].lower == len) keep.push_back(i);
        }
        bool classes_ok = keep.size() == 2;

        CssCode sub = subsystem_select(code, keep.size() == 2 ? keep
                                                              : std::vector<std::size_t>{0, 1});
        DistanceReport r = distance(sub, kDistanceBudget, kSeed);
        std::size_t sub_d = std::min(r.d_z.lower, r.d_x.lower);
        bool sub_ok = r.method == "exhaustive" && r.d_z.exact() && r.d_x.exact() &&
                      sub_d == len;

        gate.note("L=" + std::to_string(len) + ": class Z weights {" + weights.str() +
                  "}, plain dZ=" + plain.d_z.text() + ", subsystem dZ=" + r.d_z.text() +
                  " dX=" + r.d_x.text() + " method=" + r.method);
        all_ok = all_ok && plain_ok && classes_ok && sub_ok;
    }
    gate.note("elapsed " + fmt_secs(seconds_since(t0)));
    gate.verdict(7, all_ok);
}

// criterion 8: CCZ counting on the cubed torus against betti arithmetic.
void criterion_8(Gate& gate) {
    auto t0 = Clock::now();
    SimplicialComplex t2 = torus(3);
    TripleProduct tp = make_triple_product(t2, t2, t2);
    CczCircuit circ = synthesize_circuit(tp.full, 2, 2, 2);
    LogicalCczTensor t = logical_action(tp.full, circ, tp.bases[2], tp.bases[2], tp.bases[2]);
    CczCounts counts = ccz_count(t, tp.labels[2], tp);

    std::size_t fam[4] = {0, 0, 0, 0};
    for (const auto& l : tp.labels[2]) ++fam[int(l.family)];
    bool labels_ok = fam[0] == 4 && fam[1] == 4 && fam[2] == 4 && tp.labels[2].size() == 15;
    gate.note("labels per family: alpha=" + std::to_string(fam[0]) + " beta=" +
              std::to_string(fam[1]) + " gamma=" + std::to_string(fam[2]) +
              " (required: 4 each)");

    bool per_orient_ok = true;
    std::ostringstream per;
    for (std::size_t i = 0; i < 6; ++i) {
        per << (i ? " " : "") << counts.by_orientation[i];
        if (counts.by_orientation[i] != 8) per_orient_ok = false;
    }
    gate.note("entries per orientation: {" + per.str() + "} (required: 8 each)");
    bool totals_ok = counts.family_total == 48 &&
                     counts.support == counts.family_total + counts.other_support;
    gate.note("family total " + std::to_string(counts.family_total) + ", support " +
              std::to_string(counts.support));

    double secs = seconds_since(t0);
    bool in_time = secs < kLimit8;
    gate.note("elapsed " + fmt_secs(secs) + " of " + fmt_secs(kLimit8));
    gate.verdict(8, labels_ok && per_orient_ok && totals_ok && in_time);
}

// criterion 9: fountain schedules on both hypergraphs.
void criterion_9(Gate& gate) {
    auto t0 = Clock::now();

    SimplicialComplex s1 = circle(3);
    TripleProduct t3 = make_triple_product(s1, s1, s1);
    LogicalCczTensor tensor3 = logical_action(t3.full, synthesize_circuit(t3.full, 1, 1, 1),
                                              t3.bases[1], t3.bases[1], t3.bases[1]);
    InteractionHypergraph h3 = interaction_hypergraph(tensor3);
    FountainSchedule f3 = fountain_schedule(h3);
    bool disjoint3 = true;
    for (std::size_t i = 0; i < f3.selected.size(); ++i)
        for (std::size_t j = i + 1; j < f3.selected.size(); ++j)
            for (std::size_t reg = 0; reg < 3; ++reg)
                if (f3.selected[i][reg] == f3.selected[j][reg]) disjoint3 = false;
    bool t3_ok = f3.magic_count == 3 && disjoint3;
    gate.note("T3: magic_count=" + std::to_string(f3.magic_count) +
              " (required: 3), selected pairwise disjoint " + (disjoint3 ? "yes" : "no"));

    SimplicialComplex t2 = torus(3);
    TripleProduct t6 = make_triple_product(t2, t2, t2);
    LogicalCczTensor tensor6 = logical_action(t6.full, synthesize_circuit(t6.full, 2, 2, 2),
                                              t6.bases[2], t6.bases[2], t6.bases[2]);
    InteractionHypergraph h6 = interaction_hypergraph(tensor6);
    FountainSchedule f6 = fountain_schedule(h6);

    bool disjoint6 = true;
    std::set<std::array<std::uint32_t, 2>> used;
    for (const auto& e : f6.selected)
        for (std::uint32_t reg = 0; reg < 3; ++reg)
            if (!used.insert({reg, e[reg]}).second) disjoint6 = false;

    std::set<std::array<std::uint32_t, 2>> zero;
    for (const auto& v : f6.zero_set) zero.insert({v.copy - 1, v.index});
    std::set<std::array<std::uint32_t, 3>> selected(f6.selected.begin(), f6.selected.end());
    std::size_t untouched = 0;
    for (const auto& e : h6.edges) {
        if (selected.count(e)) continue;
        bool touches = zero.count({0, e[0]}) || zero.count({1, e[1]}) || zero.count({2, e[2]});
        if (!touches) ++untouched;
    }
    gate.note("T2(3)^3: magic_count=" + std::to_string(f6.magic_count) +
              ", selected pairwise disjoint " + (disjoint6 ? "yes" : "no") + ", zero_set size " +
              std::to_string(f6.zero_set.size()));
    gate.note("unselected edges not touching zero_set: " + std::to_string(untouched) + " of " +
              std::to_string(h6.edges.size() - f6.selected.size()) + " (required: 0)");
    bool t6_ok = disjoint6 && untouched == 0;

    gate.note("elapsed " + fmt_secs(seconds_since(t0)));
    gate.verdict(9, t3_ok && t6_ok,
                 t6_ok ? "" : "maximal matching covers every vertex, leaving zero_set empty");
}

// criterion 10: byte-identical reruns of every seeded report.
void criterion_10(Gate& gate) {
    auto t0 = Clock::now();
    std::vector<std::string> invocations = {
        "code --in acc_t2.cplx --q 1 --budget 200000 --seed 11",
        "distance --in acc_t2.cplx --q 1 --budget 50 --seed 42",
        "verify --in acc_t3.cplx --suite all --trials 60 --seed 7 --q1 1 --q2 1 --q3 1",
        "search --qmax 31",
        "bad-dims --set 9,16,12,22,15,19",
        "ccz-count --factors acc_t2.cplx acc_t2.cplx acc_t2.cplx",
        "fountain --in acc_t6.hg",
    };
    run_cli("hypergraph --factors acc_t2.cplx acc_t2.cplx acc_t2.cplx --out acc_t6.hg");

    bool all_ok = true;
    for (const auto& inv : invocations) {
        RunResult a = run_cli(inv);
        RunResult b = run_cli(inv);
        bool same = a.status == b.status && a.out == b.out && !a.out.empty();
        if (!same) {
            gate.note("diverged: " + inv);
            all_ok = false;
        }
    }
    gate.note(std::to_string(invocations.size()) + " seeded invocations rerun byte-identical: " +
              (all_ok ? "yes" : "no"));
    gate.note("elapsed " + fmt_secs(seconds_since(t0)));
    gate.verdict(10, all_ok);
}

} // namespace

int main() {
    Gate gate;
    criterion_1(gate);
    criterion_2(gate);
    criterion_3(gate);
    criteria_4_5(gate);
    criterion_6(gate);
    criterion_7(gate);
    criterion_8(gate);
    criterion_9(gate);
    criterion_10(gate);
    std::cout << "passed " << (10 - gate.failed) << "/10\n";
    return gate.failed;
}
