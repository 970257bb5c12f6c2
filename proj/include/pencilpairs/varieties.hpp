#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencilpairs/chern_ring.hpp"

namespace pp {

// Multidegree of a line bundle on an ambient product, one entry per factor.
struct DivisorClass {
    std::vector<int> multidegree;

    bool is_ample() const;
    bool operator==(const DivisorClass&) const = default;
};

CohomologyClass divisor_to_class(const AmbientProduct& a, const DivisorClass& d);

// Smooth complete intersection of divisors inside an ambient product.
// An empty divisor list is the ambient itself.
struct CompleteIntersection {
    AmbientProduct ambient;
    std::vector<DivisorClass> divisors;

    CompleteIntersection(AmbientProduct a, std::vector<DivisorClass> divs);

    int dim_c() const;
};

// Total Chern class of the tangent bundle, restricted from the ambient:
// c(TM) * prod_j (1 + d_j)^{-1}.
CohomologyClass ci_total_chern(const CompleteIntersection& X);

// Integral over X of an ambient class: integrate(c * prod_j d_j).
Int ci_integrate(const CompleteIntersection& X, const CohomologyClass& c);

// Topological Euler characteristic: integral of the top Chern class.
Int ci_euler_char(const CompleteIntersection& X);

// Anticanonical multidegree: (n_i + 1) - sum_j d_j per factor.
DivisorClass ci_anticanonical(const CompleteIntersection& X);

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string id;
    std::string description;
    int dim_c = 0;
    int picard_rank = 0;
    int index = 0;
    long long deg_a3 = 0;
    long long euler = 0;
    bool very_ample_generator = false;
    std::optional<CompleteIntersection> ci_model;
    std::optional<DivisorClass> polarization;
    std::string provenance;
};

// Strict schema: unknown fields, duplicate ids, and model/tabulation
// inconsistencies are all CatalogError. A file with only whitespace is an
// empty catalog.
std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
std::vector<CatalogEntry> load_catalog(const std::string& path);
const std::vector<CatalogEntry>& bundled_catalog();

struct EntryVerification {
    std::string id;
    bool checkable = false;
    long long deg_tabulated = 0;
    long long euler_tabulated = 0;
    Int deg_recomputed;
    Int euler_recomputed;
    bool deg_match = false;
    bool euler_match = false;
    bool polarization_match = false;

    bool all_match() const { return deg_match && euler_match && polarization_match; }
};

// Recomputes deg(A^3) and chi from the ci_model when one is present.
EntryVerification verify_entry(const CatalogEntry& entry);

}  // namespace pp
