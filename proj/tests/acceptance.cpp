// Acceptance gate: eight end-to-end checks over the library, one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails. Runtime limits
// and sample sizes are pinned in the code below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "starcol/coloring.hpp"
#include "starcol/exact_solver.hpp"
#include "starcol/graph.hpp"
#include "starcol/instances.hpp"
#include "starcol/outerpath.hpp"
#include "starcol/reductions.hpp"
#include "starcol/rng.hpp"
#include "starcol/star2_decider.hpp"

using namespace starcol;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  bool ok = true;
  std::ostringstream detail;  // filled only on failure
};

void fail(Criterion& c, const std::string& msg) {
  if (!c.ok) return;  // keep the first failure reason
  c.ok = false;
  c.detail << msg;
}

// --- state-trace replay -----------------------------------------------------
// Verifies that a machine run's trace is exact: the first entry claims Q0 with
// only the first spine vertex colored, every later claimed entry names the
// unique state whose invariant holds after that fan is filled, and a single
// terminal entry marks the complete coloring. Returns the number of
// violations found.
int trace_violations(const OuterpathRun& run) {
  const Graph& g = run.triangulated;
  const SpineDecomposition& dec = run.decomposition;
  if (dec.spine.empty()) return run.trace.empty() ? 0 : 1;

  const int m = static_cast<int>(dec.spine.size()) - 1;
  int bad = 0;
  std::vector<int> partial(g.vertex_count, -1);
  partial[dec.spine[0]] = run.coloring.colors[dec.spine[0]];

  auto exactly_claimed = [&](int index, MachineState claimed) {
    for (MachineState s : {MachineState::Q0, MachineState::Q1, MachineState::Q2,
                           MachineState::Q3, MachineState::Q4, MachineState::Q5}) {
      bool holds = state_predicate(g, dec, partial, index, s);
      if (holds != (s == claimed)) return false;
    }
    return true;
  };

  if (run.trace.empty() || run.trace.front().step != 0 ||
      run.trace.front().claimed != MachineState::Q0)
    return 1;
  if (!exactly_claimed(1, MachineState::Q0)) bad++;

  int terminals = 0;
  int revealed = 0;  // fans filled so far
  for (std::size_t t = 1; t < run.trace.size(); ++t) {
    const TraceStep& entry = run.trace[t];
    if (entry.step < revealed || entry.step > m) {
      bad++;
      continue;
    }
    while (revealed < entry.step) {
      for (int v : dec.fans[revealed]) partial[v] = run.coloring.colors[v];
      revealed++;
    }
    if (!entry.claimed) {
      terminals++;
      if (entry.step != m) bad++;
      continue;
    }
    if (!exactly_claimed(entry.step + 1, *entry.claimed)) bad++;
  }
  if (terminals != 1 || run.trace.back().claimed.has_value()) bad++;
  for (int v = 0; v < g.vertex_count; ++v)
    if (partial[v] < 0) bad++;  // trace must cover the whole coloring
  return bad;
}

// --- canonical small formulas ----------------------------------------------
// All 3-literal clauses over variables x1..x3 up to reordering within the
// clause: sorted multisets over the six literals {-3,-2,-1,1,2,3}.
std::vector<std::array<int, 3>> canonical_clauses() {
  const std::array<int, 6> lits{-3, -2, -1, 1, 2, 3};
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      for (int k = j; k < 6; ++k) out.push_back({lits[i], lits[j], lits[k]});
  return out;
}

std::string format_clause(const std::array<int, 3>& cl) {
  std::ostringstream s;
  s << "(" << cl[0] << "," << cl[1] << "," << cl[2] << ")";
  return s.str();
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int number, const std::string& name, Criterion& c, double elapsed) {
    if (c.ok) {
      std::cout << "PASS " << number << " " << name << " (" << elapsed << "s)\n";
    } else {
      failures++;
      std::cout << "FAIL " << number << " " << name << ": " << c.detail.str() << " (" << elapsed
                << "s)\n";
    }
  };

  // 1. The 17-vertex hard instance needs three colors: two-color star
  //    coloring is impossible, three-color is possible. Limit: 10 s total.
  {
    Criterion c;
    auto start = Clock::now();
    try {
      Graph g = hard_outerplanar_17();
      SolveResult two = decide(g, 2, 2);
      if (two.status != SolveStatus::Uncolorable) fail(c, "(2,2) did not come back uncolorable");
      SolveResult three = decide(g, 3, 2);
      if (three.status != SolveStatus::Colorable) fail(c, "(3,2) did not come back colorable");
      if (three.coloring && !validate(g, *three.coloring, 3, 2).valid)
        fail(c, "(3,2) certificate failed validation");
    } catch (const std::exception& e) {
      fail(c, std::string("exception: ") + e.what());
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 10.0) fail(c, "runtime limit exceeded");
    report(1, "hard 17-vertex instance decided both ways under 10s", c, elapsed);
  }

  // 2. On 220 seeded random connected outerplanar graphs with n <= 14, the
  //    linear-time decider and the exact solver agree, and every positive
  //    certificate validates. Limit: 5 minutes total.
  {
    Criterion c;
    auto start = Clock::now();
    try {
      int checked = 0, disagreements = 0;
      for (int trial = 0; trial < 220; ++trial) {
        int n = 3 + trial % 12;
        Graph g = random_outerplanar(n, 9000 + static_cast<std::uint64_t>(trial));
        std::optional<Coloring> fast = decide_outerplanar_2star(g);
        SolveResult slow = decide(g, 2, 2);
        if (slow.status == SolveStatus::Unknown) {
          fail(c, "exact solver ran out of budget");
          break;
        }
        bool slow_yes = slow.status == SolveStatus::Colorable;
        if (fast.has_value() != slow_yes) {
          disagreements++;
          fail(c, "decider and solver disagree at trial " + std::to_string(trial));
        }
        if (fast && !validate(g, *fast, 2, 2).valid)
          fail(c, "decider certificate failed validation at trial " + std::to_string(trial));
        checked++;
      }
      if (checked < 200) fail(c, "fewer than 200 instances checked");
      if (disagreements != 0) fail(c, std::to_string(disagreements) + " disagreements");
    } catch (const std::exception& e) {
      fail(c, std::string("exception: ") + e.what());
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 300.0) fail(c, "runtime limit exceeded");
    report(2, "outerplanar decider agrees with exact solver on 220 random graphs", c, elapsed);
  }

  // 3. The outerpath coloring machine succeeds on every maximal outerpath
  //    with n <= 9 (exhaustive, 127 graphs) and on 500 random outerpaths with
  //    n <= 200, and its state trace claims exactly the invariant that holds
  //    after every step.
  {
    Criterion c;
    auto start = Clock::now();
    try {
      int graphs = 0, violations = 0;
      for (int n = 3; n <= 9; ++n) {
        for (const Graph& g : all_maximal_outerpaths(n)) {
          OuterpathRun run = color_outerpath_traced(g);
          Coloring restricted = color_outerpath(g);
          if (!validate(g, restricted, 2, 2).valid)
            fail(c, "coloring failed validation on an exhaustive outerpath, n=" +
                        std::to_string(n));
          violations += trace_violations(run);
          graphs++;
        }
      }
      if (graphs != 127)
        fail(c, "expected 127 exhaustive graphs, saw " + std::to_string(graphs));
      for (int trial = 0; trial < 500; ++trial) {
        int n = 3 + trial % 198;  // covers 3..200
        bool maximal = trial % 2 == 0;
        Graph g = random_outerpath(n, 7000 + static_cast<std::uint64_t>(trial), maximal);
        OuterpathRun run = color_outerpath_traced(g);
        Coloring restricted = color_outerpath(g);
        if (!validate(g, restricted, 2, 2).valid)
          fail(c, "coloring failed validation on random outerpath trial " + std::to_string(trial));
        violations += trace_violations(run);
      }
      if (violations != 0) fail(c, std::to_string(violations) + " trace violations");
    } catch (const std::exception& e) {
      fail(c, std::string("exception: ") + e.what());
    }
    report(3, "outerpath coloring total on 127 exhaustive + 500 random, trace exact", c,
           seconds_since(start));
  }

  // 4. Gadget behavior by full enumeration, each part under 1 s:
  //    (a) variable block, all 2^6 colorings: valid => poles differ and the
  //        four path vertices alternate;
  //    (b) K6, all 3^6 colorings: valid => every vertex has exactly one
  //        same-colored neighbor;
  //    (c) triangle-free clause gadget, all 2^7 colorings: the apex and its
  //        two grid neighbors are never monochromatic in a valid coloring.
  {
    Criterion c;
    auto start = Clock::now();
    try {
      {
        auto part = Clock::now();
        Graph g = variable_gadget();
        int valid_count = 0;
        for (const auto& cols : oracles::all_colorings(6, 2)) {
          if (!validate(g, Coloring{cols, 2}, 2, 2).valid) continue;
          valid_count++;
          if (cols[0] == cols[1]) fail(c, "variable block: poles share a color");
          for (int v = 2; v < 5; ++v)
            if (cols[v] == cols[v + 1]) fail(c, "variable block: path does not alternate");
        }
        if (valid_count == 0) fail(c, "variable block: no valid coloring at all");
        if (seconds_since(part) >= 1.0) fail(c, "variable block enumeration too slow");
      }
      {
        auto part = Clock::now();
        Graph g = complete_graph(6);
        int valid_count = 0;
        for (const auto& cols : oracles::all_colorings(6, 3)) {
          if (!validate(g, Coloring{cols, 3}, 3, 2).valid) continue;
          valid_count++;
          for (int v = 0; v < 6; ++v) {
            int same = 0;
            for (int u : g.adj[v])
              if (cols[u] == cols[v]) same++;
            if (same != 1) fail(c, "K6: a vertex lacks exactly one same-colored neighbor");
          }
        }
        if (valid_count == 0) fail(c, "K6: no valid coloring at all");
        if (seconds_since(part) >= 1.0) fail(c, "K6 enumeration too slow");
      }
      {
        auto part = Clock::now();
        Graph g = grid_clause_gadget();
        int valid_count = 0;
        for (const auto& cols : oracles::all_colorings(7, 2)) {
          if (!validate(g, Coloring{cols, 2}, 2, 2).valid) continue;
          valid_count++;
          if (cols[6] == cols[0] && cols[0] == cols[5])
            fail(c, "clause gadget: apex and both anchors monochromatic");
        }
        if (valid_count == 0) fail(c, "clause gadget: no valid coloring at all");
        if (seconds_since(part) >= 1.0) fail(c, "clause gadget enumeration too slow");
      }
    } catch (const std::exception& e) {
      fail(c, std::string("exception: ") + e.what());
    }
    report(4, "gadget enumerations (2^6, 3^6, 2^7) under 1s each", c, seconds_since(start));
  }

  // 5. Formula reduction equivalence. Exhaustively over canonical 3-clauses
  //    on x1..x3 (sorted literal multisets, 56 clauses) and formulas of one
  //    or two such clauses (56 + 1596 = 1652 formulas), brute-force
  //    not-all-equal satisfiability matches two-color star colorability of
  //    the reduced graph, within a 10^7-node budget per instance. Forward
  //    soundness at larger scale: for 50 random satisfiable formulas with
  //    n <= 8, the assignment-derived coloring validates.
  int gphi_max_degree = 0;  // tracked here, judged in criterion 6
  {
    Criterion c;
    auto start = Clock::now();
    try {
      std::vector<std::array<int, 3>> clauses = canonical_clauses();
      if (clauses.size() != 56)
        fail(c, "expected 56 canonical clauses, got " + std::to_string(clauses.size()));
      std::vector<CnfFormula> formulas;
      for (std::size_t i = 0; i < clauses.size(); ++i)
        formulas.push_back(CnfFormula{3, {clauses[i]}});
      for (std::size_t i = 0; i < clauses.size(); ++i)
        for (std::size_t j = i; j < clauses.size(); ++j)
          formulas.push_back(CnfFormula{3, {clauses[i], clauses[j]}});
      if (formulas.size() != 1652)
        fail(c, "expected 1652 formulas, got " + std::to_string(formulas.size()));

      int mismatches = 0;
      for (const CnfFormula& f : formulas) {
        bool nae = oracles::nae_assignment(f).has_value();
        NaesatReduction r = reduce_naesat(f);
        gphi_max_degree = std::max(gphi_max_degree, r.graph.max_degree());
        SolveResult res = decide(r.graph, 2, 2, SolveBudget{10'000'000, 0.0});
        if (res.status == SolveStatus::Unknown) {
          fail(c, "solver budget exhausted on " + format_clause(f.clauses[0]));
          continue;
        }
        bool colorable = res.status == SolveStatus::Colorable;
        if (colorable != nae) {
          mismatches++;
          std::string desc = format_clause(f.clauses[0]);
          if (f.clauses.size() > 1) desc += format_clause(f.clauses[1]);
          fail(c, "mismatch on " + desc);
        }
        if (res.coloring && !validate(r.graph, *res.coloring, 2, 2).valid)
          fail(c, "solver certificate failed validation");
      }
      if (mismatches != 0) fail(c, std::to_string(mismatches) + " mismatches");

      // Forward soundness on larger random satisfiable formulas.
      det_rng rng(501);
      int found = 0;
      while (found < 50) {
        int n = rng.next_int(4, 8);
        int m = rng.next_int(3, 12);
        CnfFormula f;
        f.variable_count = n;
        for (int j = 0; j < m; ++j) {
          std::array<int, 3> cl;
          for (int& lit : cl) {
            int var = rng.next_int(1, n);
            lit = rng.next_bool() ? var : -var;
          }
          f.clauses.push_back(cl);
        }
        auto assignment = oracles::nae_assignment(f);
        if (!assignment) continue;
        NaesatReduction r = reduce_naesat(f);
        gphi_max_degree = std::max(gphi_max_degree, r.graph.max_degree());
        Coloring derived = assignment_to_coloring(r, *assignment);
        if (!validate(r.graph, derived, 2, 2).valid)
          fail(c, "assignment-derived coloring failed validation");
        found++;
      }
    } catch (const std::exception& e) {
      fail(c, std::string("exception: ") + e.what());
    }
    report(5, "formula reduction equivalence on 1652 exhaustive + 50 random formulas", c,
           seconds_since(start));
  }

  // 7 runs before 6 so criterion 6 can judge the degrees of every graph both
  // reductions generated. Criterion numbering in the output stays 1..8.
  int h_max_degree = 0;
  Criterion c7;
  double elapsed7 = 0.0;
  {
    auto start = Clock::now();
    try {
      std::vector<Graph> inputs = {complete_graph(3), cycle_graph(5), complete_graph(4)};
      det_rng rng(701);
      for (int trial = 0; trial < 110; ++trial) {
        int n = 1 + trial % 5;
        inputs.push_back(oracles::random_max_degree_graph(n, 4, rng));
      }
      int mismatches = 0;
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        const Graph& g = inputs[i];
        bool three = oracles::three_colorable(g);
        CliqueAttachment r = reduce_three_coloring(g);
        h_max_degree = std::max(h_max_degree, r.graph.max_degree());
        // The 30-vertex attachments can take a few hundred million nodes.
        SolveResult res = decide(r.graph, 3, 2, SolveBudget{1'000'000'000, 0.0});
        if (res.status == SolveStatus::Unknown) {
          fail(c7, "solver budget exhausted on input " + std::to_string(i));
          continue;
        }
        bool colorable = res.status == SolveStatus::Colorable;
        if (colorable != three) {
          mismatches++;
          fail(c7, "mismatch on input " + std::to_string(i));
        }
        if (res.coloring && !validate(r.graph, *res.coloring, 3, 2).valid)
          fail(c7, "solver certificate failed validation");
      }
      if (mismatches != 0) fail(c7, std::to_string(mismatches) + " mismatches");
    } catch (const std::exception& e) {
      fail(c7, std::string("exception: ") + e.what());
    }
    elapsed7 = seconds_since(start);
  }

  // 6. Degree budgets, tolerance zero: every reduced formula graph above has
  //    maximum degree <= 5, every clique-attachment graph has maximum
  //    degree <= 9.
  {
    Criterion c;
    auto start = Clock::now();
    if (gphi_max_degree > 5)
      fail(c, "formula reduction max degree " + std::to_string(gphi_max_degree));
    if (gphi_max_degree == 0) fail(c, "no formula graphs were generated");
    if (h_max_degree > 9)
      fail(c, "clique attachment max degree " + std::to_string(h_max_degree));
    if (h_max_degree == 0) fail(c, "no clique attachment graphs were generated");
    report(6, "reduction degree budgets (5 and 9) hold on every generated graph", c,
           seconds_since(start));
  }

  report(7, "3-colorability matches star colorability of the clique attachment on 113 graphs", c7,
         elapsed7);

  // 8. Containment on 300 random graphs with n <= 8, for 2 and 3 colors:
  //    colorable with monochromatic K1/K2 components implies colorable with
  //    monochromatic stars, and properly colorable implies both.
  {
    Criterion c;
    auto start = Clock::now();
    try {
      det_rng rng(801);
      for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 8;
        Graph g = oracles::random_graph(n, rng.next_int(10, 90), rng);
        for (int kappa : {2, 3}) {
          auto status = [&](int lambda) { return decide(g, kappa, lambda).status; };
          SolveStatus s0 = status(0), s1 = status(1), s2 = status(2);
          if (s0 == SolveStatus::Unknown || s1 == SolveStatus::Unknown ||
              s2 == SolveStatus::Unknown) {
            fail(c, "solver budget exhausted at trial " + std::to_string(trial));
            continue;
          }
          if (s1 == SolveStatus::Colorable && s2 != SolveStatus::Colorable)
            fail(c, "pair-colorable but not star-colorable at trial " + std::to_string(trial));
          if (s0 == SolveStatus::Colorable &&
              (s1 != SolveStatus::Colorable || s2 != SolveStatus::Colorable))
            fail(c, "properly colorable but not both relaxations at trial " +
                        std::to_string(trial));
        }
      }
    } catch (const std::exception& e) {
      fail(c, std::string("exception: ") + e.what());
    }
    report(8, "containment of coloring regimes on 300 random graphs", c, seconds_since(start));
  }

  if (failures == 0) std::cout << "all 8 criteria passed\n";
  return failures;
}
