#pragma once

#include "shc/lattice.hpp"
#include "shc/tableau.hpp"

namespace shc {

// ---- theta: P-1_n multichains of length k <-> shifted tableaux of shape
// lambda(P) with max <= k. Defined for P starting with d.

// t_{ij} = k - xi, where xi is the unique index with
// h_{n+i-j}(P_xi) <= n-i-j < h_{n+i-j}(P_{xi+1}).
ShiftedTableau theta(const Multichain& c);

// P_xi = staircase boundary between entries <= k - xi and entries > k - xi.
Multichain theta_inv(const ShiftedTableau& t, int k);

// Tableau-side classification: chain <=> entries form [k]; small intervals <=>
// increasing; saturated <=> standard and k = |shape|.
MultichainClass classify_via_theta(const ShiftedTableau& t, int k);

// ---- product split: T of shape lambda(P_1 P_2), max 2 m_1 + n_2 - 1, where
// P_1 is a Dyck suffix starting with d (not equal to d) with m_1 downsteps and
// P_2 a nonempty Dyck prefix of length n_2. Yields T_1 of shape lambda(P_1)
// with max 2 m_1 - 1 and T_2 of shape lambda(d P_2) with max n_2 + 1.
std::pair<ShiftedTableau, ShiftedTableau> split_product(const ShiftedTableau& t, int n2, int m1);
ShiftedTableau merge_product(const ShiftedTableau& t1, const ShiftedTableau& t2);

// ---- first-row strip: T increasing of shape lambda(dP), max |P|+1, where
// P = u^k Q is a Dyck prefix with a return point and Q starts with d.
// T'_{ij} = t_{i+1,j+1} - 2, of shape lambda(Q) with max |P|-1.
ShiftedTableau strip_first_row(const ShiftedTableau& t);
ShiftedTableau unstrip_first_row(const ShiftedTableau& tq, int leading_ups);

// ---- prime-Dyck map: a = u^{k_1} P Dyck, T increasing of shape lambda(Pd)
// with max 2m+1 (|a| = 2m). V weak of shape lambda(P) with v_{ij} = 1 iff
// j <= m and v_{ij} <= 2m+3-i-j.
struct PrimeImage {
    Path a;
    ShiftedTableau v;
};
PrimeImage prime_map(const ShiftedTableau& t);
ShiftedTableau prime_map_inv(const ShiftedTableau& v);

// Realizes V as the multichain sigma_0 = a <= ... <= sigma_{k-1} = u^m d^m <=
// sigma_k = u^{2m} with k = hv(a)+3 whose prefix sigma_0..sigma_{k-3} is of
// type V; inverse of type_v_chain_to_tableau.
Multichain type_v_chain_from_tableau(const ShiftedTableau& v, const Path& a);
ShiftedTableau type_v_chain_to_tableau(const Multichain& sigma);

// ---- Dyck-prefix map: T increasing of shape lambda(duP), max |duP|, with
// P = a_0 u a_1 ... u a_k a Dyck prefix. Yields the multichain (W_r) for
// r in [0, h+k+1], where h = max_l hv(a_l) (hv of the empty path taken as 0).
std::vector<Path> prefix_map(const ShiftedTableau& t);
ShiftedTableau prefix_map_inv(const std::vector<Path>& ws);

// Validates the two structural properties of a (W_r) family: type-V component
// chains below level h and prefix preservation above it. Throws on violation.
void check_prefix_family(const std::vector<Path>& ws);

}  // namespace shc
