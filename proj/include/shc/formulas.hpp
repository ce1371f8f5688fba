#pragma once

#include <string>

#include "shc/lattice.hpp"
#include "shc/tableau.hpp"

namespace shc {

// I(a) = |[a, u^{|a|/2} d^{|a|/2}]| for Dyck a; I(eps) = 1.
Int I_count(const Path& a);

// J(P) = |[P, u^{|P|}]|.
Int J_count(const Path& p);

// Number of type-V multichains a = sigma_0 <= ... <= sigma_h = b with
// h = hv(a), consecutive paths sharing all valleys at heights <= h - j.
// For valley-free a this is [a == b].
Int V_count(const Path& a, const Path& b);

// All type-V multichains from a, grouped by endpoint b (endpoints in
// lexicographic order, chains in lexicographic order within a group).
std::vector<std::pair<Path, std::vector<Multichain>>> enumerate_type_v(const Path& a);

// f(P) = number of P-1_n chains with small intervals and minimum length,
// counted as increasing tableaux of shape lambda(P') with max = delta(P')
// (P' = P without its leading ascent).
Int f_by_tableaux(const Path& p);

struct FResult {
    Int value;
    std::string route;               // "bruteforce" | "tableaux" | "recursive"
    std::vector<std::string> trace;  // reduction steps, recursive route only
};

// f(P) by the reduction strategy built from the product/strip/prime/prefix
// identities; default cap bounds the Dyck-prefix sum (see prop3_rhs).
FResult f_recursive(const Path& p, int prop3_limit = 12);

// Right-hand side of the prime-Dyck identity: sum_{s >= a} V(a,s) I(s).
Int prop2_rhs(const Path& a);

// Right-hand side of the Dyck-prefix identity for P = a_0 u a_1 ... u a_k:
// the nested sum of prod V(a_l, s_l) J(s_0 V_1) over all (s_l) and (V_i).
// Rejects |duP| above the limit rather than truncating.
Int prop3_rhs(const Path& p, int limit = 12);

// Number of saturated P-1_n chains (P != u^n) by the product formula on
// lambda_i = n - i - k_i + 1 (first ascent stripped).
Int saturated_count(const Path& p);

// Number of multichains P_0 = ... = P_{mu-1} < P_mu <= ... <= P_k = u^n.
// mu ranges over [1, k+1]; mu = k+1 counts the all-equal chain (P = u^n only).
Int multichain_count_exact(const Path& p, int k, int mu);

}  // namespace shc
