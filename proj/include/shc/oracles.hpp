#pragma once

#include <functional>

#include "shc/lattice.hpp"
#include "shc/tableau.hpp"

// Slow reference implementations, re-derived from the definitions and kept
// free of the fast paths they verify.
namespace shc::oracle {

// All R with p <= r <= q, lexicographic word order.
std::vector<Path> enumerate_interval(const Path& p, const Path& q);

// All strict chains p = P_0 < ... < P_delta = u^n whose steps flip nonempty
// valley sets; the count defines brute-force f.
std::vector<Multichain> enumerate_min_chains(const Path& p);
Int f_bruteforce(const Path& p);

// All length-k multichains p = P_0 <= ... <= P_k = u^n.
std::vector<Multichain> enumerate_multichains(const Path& p, int k);
void for_each_multichain(const Path& p, int k, const std::function<void(const Multichain&)>& fn);

// Number of length-k multichains p -> u^n by a lattice-walk DP (no
// enumeration); the counting cross-check for Prop. 4 style identities.
Int count_multichains(const Path& p, int k);

// All type-V multichains from a, by filtering raw Dyck multichains against the
// definition, grouped by endpoint.
std::vector<std::pair<Path, std::vector<Multichain>>> enumerate_type_v_brute(const Path& a);

enum class TabKind { weak, increasing, standard };

// Exhaustive generation in row-major backtracking order.
std::vector<ShiftedTableau> enumerate_tableaux(const Shape& shape, int max_value, TabKind kind);
void for_each_tableau(const Shape& shape, int max_value, TabKind kind,
                      const std::function<void(const ShiftedTableau&)>& fn);

// Standard-tableau count by peeling the cell that holds N (an outer corner),
// memoized over subshapes. Independent of the product formula.
Int count_standard_peel(const Shape& shape);

}  // namespace shc::oracle
