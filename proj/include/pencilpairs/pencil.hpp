#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencilpairs/varieties.hpp"

namespace pp {

// Critical point count of a pencil on a dim-complex-dimensional variety:
// (-1)^dim (chi(X) - 2 chi(Z) + chi(B)) with Z a pencil member and B the
// base locus. Only dim 2 and 3 are supported.
Int crit_count_master(const Int& chi_X, const Int& chi_Z, const Int& chi_B, int dim_c);

// chi of a smooth member of |L| on a dim-2 or dim-3 complete intersection,
// via Chern class integrals. L must be ample.
Int divisor_euler(const CompleteIntersection& X, const DivisorClass& L);

// chi of the base locus of a pencil in |L|: a finite set for dim 2 (its
// cardinality) and a curve for dim 3.
Int base_locus_euler(const CompleteIntersection& X, const DivisorClass& L);

// Critical point count computed purely from Chern numbers.
Int crit_count_chern(const CompleteIntersection& X, const DivisorClass& L);

// Critical point count for the k-fold anticanonical pencil on a Fano
// threefold with tabulated Euler characteristic chi and degree deg = A^3:
// -chi + 48k + k^2(4k - 3) deg.
Int fano_crit_count(const Int& chi, const Int& deg_a3, long long k);

// chi of a pencil member (a K3 surface for k=1) and of the base curve for
// the k-fold anticanonical pencil, from (chi, deg) alone.
Int fano_divisor_euler(const Int& deg_a3, long long k);
Int fano_base_locus_euler(const Int& deg_a3, long long k);

// Sectional genus of the generator polarization: g = 1 + deg / (2 ind^2).
// Requires 2 ind^2 | deg.
int k3_genus(int index, long long deg_a3);

struct K3Model {
    int genus = 0;
    std::string ambient;
    int ambient_dim = 0;
    std::vector<int> degrees;
    std::string note;  // set when the recorded model needed correction
};

// Projective model of the polarized K3 fiber for 3 <= g <= 10.
K3Model model_for_genus(int g);

struct PencilInvariants {
    int dim_c = 0;
    Int chi_X;
    Int chi_Z;
    Int chi_B;
    Int crit;
    std::optional<Int> fiber_genus;  // dim 2 only
    std::optional<Int> punctures;    // dim 2 only: #B points on each fiber
};

// Pencils of degree-k curves in the |O(d)| family on a ruled surface over a
// genus-(1 - chi/2) curve, chi even, chi <= 2, d >= 3 - chi, k >= 1:
//   chi(X) = 2 chi, chi(Z) = k(chi + d - dk), #B = d k^2.
struct RuledSurfaceSpec {
    int chi = 0;
    int d = 0;
    int k = 1;
};
PencilInvariants ruled_pencil_invariants(const RuledSurfaceSpec& spec);

// Degree-d pencils on the projective plane: crit = 3(d-1)^2.
PencilInvariants cp2_pencil_invariants(int d);

// Euler characteristics chi(W) = chi(X) - chi(Z) of the fillings traced out
// by the chain (m, k) = (2^i, 2^(n-i)), i = 1..n-1, on the surfaces with
// chi = m(3 - m), d = m^2, together with the plane filling bounded by the
// same contact manifold (a degree-2^n curve pencil on the plane).
struct FillingRow {
    std::string label;
    int m = 0;
    int k = 0;
    Int chi_w;
};
struct FillingsReport {
    int n = 0;
    std::vector<FillingRow> rows;
    bool all_distinct = false;
};
FillingsReport fillings_report(int n);

}  // namespace pp
