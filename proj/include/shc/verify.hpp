#pragma once

#include <string>
#include <vector>

#include "shc/bigint.hpp"

namespace shc {

struct SuiteReport {
    std::string name;
    long long instances = 0;  // per-instance checks performed
    long long sampled = 0;    // instances checked by deterministic sampling
    bool ok = true;
    std::string counterexample;  // first (minimal) failure, empty when ok
    double seconds = 0.0;
};

// Three-way agreement of f: brute-force minimal chains, increasing-tableau
// count, and the recursive reduction, over all paths with |P| <= max_n.
SuiteReport verify_f_threeway(int max_n);

// f(uad) = sum_s V(a,s) I(s) over all Dyck a with |a| <= max_a_len.
SuiteReport verify_prop2(int max_a_len);

// f(duP) = nested V/J sum over all Dyck prefixes with |duP| <= max_dup_len.
SuiteReport verify_prop3(int max_dup_len);

// Product formula == corner-peel count for all shapes lambda(P), |P| <= max_n;
// additionally == literal standard enumeration for |P| <= literal_max_n.
SuiteReport verify_hook(int max_n, int literal_max_n);

// theta/theta_inv round-trips, Prop.4 flag equivalences, and the
// repeated-bottom identity for all P starting with d (|P| <= max_n) and all
// k <= |P|+2. Every (P,k) cell gets the exact count identity
// (weak-tableau DP == lattice-walk DP); cells with at most enumeration_cap
// multichains are checked instance-by-instance exhaustively, larger cells by
// `samples` deterministic pseudorandom instances.
SuiteReport verify_theta(int max_n, long long enumeration_cap, int samples);

// Round-trips and codomain checks of the four proof bijections over
// exhaustive inputs (word-length bounds per operation).
SuiteReport verify_bijections(int split_max, int strip_max, int prime_max, int prefix_max);

// V(a,b) != 0 iff a and b have identical low-valley sets, plus agreement of
// the grouped type-V enumeration with the brute-force oracle, |a| <= max_a_len.
SuiteReport verify_type_v(int max_a_len);

// degree by iterated filling == |P| - 1 - lv(P) for all P != u^n, |P| <= max_n.
SuiteReport verify_degree(int max_n);

// Figure renderings and enumeration outputs are byte-identical across runs.
SuiteReport verify_determinism();

std::vector<std::string> suite_names();

// CLI entry: ranges derived from max_n. Unknown names throw.
SuiteReport run_suite(const std::string& name, int max_n);

}  // namespace shc
