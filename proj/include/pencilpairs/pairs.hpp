#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencilpairs/pencil.hpp"

namespace pp {

// Pencil carriers on surfaces: degree-d plane pencils, bidegree-(a,b)
// pencils on the quadric surface, and fiber-degree-k pencils on ruled
// surfaces over a curve of Euler characteristic chi.
enum class Dim2Family { cp2, p1xp1, ruled };

struct Dim2Member {
    Dim2Family family = Dim2Family::cp2;
    int d = 0;               // cp2 degree
    int a = 0, b = 0;        // p1xp1 bidegree, a >= b >= 1
    RuledSurfaceSpec ruled;  // ruled family parameters

    std::string label() const;
};

PencilInvariants dim2_member_invariants(const Dim2Member& member);

// Inverse of Dim2Member::label(): accepts "cp2:d=D", "p1xp1:A,B" and
// "ruled:chi=C,d=D,k=K".
Dim2Member parse_dim2_label(const std::string& label);

// The boundary contact manifold of the pencil complement is determined by
// (L.L, L.K-dual part): two pencils pair up when these keys agree.
struct Dim2Key {
    Int self_intersection;
    Int fiber_degree;

    bool operator==(const Dim2Key& o) const {
        return self_intersection == o.self_intersection && fiber_degree == o.fiber_degree;
    }
    bool operator<(const Dim2Key& o) const {
        if (self_intersection != o.self_intersection)
            return self_intersection < o.self_intersection;
        return fiber_degree < o.fiber_degree;
    }
};

Dim2Key dim2_key(const Dim2Member& member);
bool is_pair_dim2(const Dim2Key& x, const Dim2Key& y);

// A matched pair of pencils with the same boundary. delta = crit difference,
// euler_number = (-1)^(dim W / 2) * delta where dim W = 2 dim_c.
struct PencilPairRecord {
    std::string plus_label;
    std::string minus_label;
    int dim_c = 0;
    long long k = 1;
    Int crit_plus;
    Int crit_minus;
    Int delta;
    Int euler_number;
    bool non_braid_like = false;
    std::optional<PencilInvariants> plus_invariants;
    std::optional<PencilInvariants> minus_invariants;
};

// Enumeration bounds for the surface search. A zero bound disables the
// family; the ruled family enumerates chi = 2, 0, -2, ... down to chi_min.
struct SearchBounds {
    int cp2_max_d = 0;
    int p1p1_max_deg = 0;
    int ruled_chi_min = 2;
    int ruled_max_d = 0;
    int ruled_max_k = 0;
};

std::vector<PencilPairRecord> search_dim2(const SearchBounds& bounds);

// Fano threefolds from the catalog sharing (index, deg_a3), hence the same
// contact boundary for every anticanonical cable. Groups with one member
// are dropped; ids sort numerically by (rank, number).
struct FanoGroup {
    int index = 0;
    long long deg_a3 = 0;
    int genus = 0;
    std::vector<std::string> member_ids;
};

std::vector<FanoGroup> group_fano_pairs(const std::vector<CatalogEntry>& catalog);

struct MemberCount {
    std::string id;
    long long euler = 0;
    Int crit;
};

std::vector<MemberCount> group_member_counts(const FanoGroup& group,
                                             const std::vector<CatalogEntry>& catalog,
                                             long long k);

std::vector<PencilPairRecord> pair_report(const FanoGroup& group,
                                          const std::vector<CatalogEntry>& catalog, long long k);

// The two index-2 degree-48 threefolds carry pencils of degree-6 del Pezzo
// surfaces at every level l (anticanonical cables at even l = 2k):
// crit = -chi + 12 l (2l^2 - 3l + 2).
std::vector<MemberCount> dp6_member_counts(const std::vector<CatalogEntry>& catalog, long long l);
std::vector<PencilPairRecord> dp6_pairs(const std::vector<CatalogEntry>& catalog, long long l);

// Internal inconsistencies between the tabulated closed forms and the counts
// derived from the master formula, with recomputed witnesses.
struct Discrepancy {
    std::string key;
    std::string stated;
    std::string derived;
    std::string detail;
};

std::vector<Discrepancy> discrepancy_report(const std::vector<CatalogEntry>& catalog);

}  // namespace pp
