#include "pencilpairs/pencil.hpp"

#include <set>

namespace pp {

Int crit_count_master(const Int& chi_X, const Int& chi_Z, const Int& chi_B, int dim_c) {
    if (dim_c != 2 && dim_c != 3)
        throw std::invalid_argument("critical point counts are defined for dim 2 and 3 only");
    Int inner = chi_X - 2 * chi_Z + chi_B;
    return dim_c == 2 ? inner : -inner;
}

namespace {

void check_pencil_args(const CompleteIntersection& X, const DivisorClass& L) {
    if (X.dim_c() != 2 && X.dim_c() != 3)
        throw std::invalid_argument("pencil invariants need a surface or threefold");
    if (L.multidegree.size() != static_cast<std::size_t>(X.ambient.factor_count()))
        throw std::invalid_argument("pencil class length does not match the ambient");
    if (!L.is_ample()) throw std::invalid_argument("pencil class must be ample");
}

}  // namespace

Int divisor_euler(const CompleteIntersection& X, const DivisorClass& L) {
    check_pencil_args(X, L);
    CohomologyClass l = divisor_to_class(X.ambient, L);
    CohomologyClass c = ci_total_chern(X);
    if (X.dim_c() == 2) return ci_integrate(X, (c.graded_part(1) - l) * l);
    return ci_integrate(X, l * (c.graded_part(2) - l * c.graded_part(1) + l * l));
}

Int base_locus_euler(const CompleteIntersection& X, const DivisorClass& L) {
    check_pencil_args(X, L);
    CohomologyClass l = divisor_to_class(X.ambient, L);
    if (X.dim_c() == 2) return ci_integrate(X, l * l);
    return ci_integrate(X, l * l * (ci_total_chern(X).graded_part(1) - Int(2) * l));
}

Int crit_count_chern(const CompleteIntersection& X, const DivisorClass& L) {
    return crit_count_master(ci_euler_char(X), divisor_euler(X, L), base_locus_euler(X, L),
                             X.dim_c());
}

Int fano_crit_count(const Int& chi, const Int& deg_a3, long long k) {
    if (k < 1) throw std::invalid_argument("cabling level k must be >= 1");
    Int kk(k);
    return -chi + 48 * kk + kk * kk * (4 * kk - 3) * deg_a3;
}

Int fano_divisor_euler(const Int& deg_a3, long long k) {
    if (k < 1) throw std::invalid_argument("cabling level k must be >= 1");
    Int kk(k);
    return 24 * kk + kk * kk * (kk - 1) * deg_a3;
}

Int fano_base_locus_euler(const Int& deg_a3, long long k) {
    if (k < 1) throw std::invalid_argument("cabling level k must be >= 1");
    Int kk(k);
    return kk * kk * (1 - 2 * kk) * deg_a3;
}

int k3_genus(int index, long long deg_a3) {
    if (index < 1) throw std::invalid_argument("index must be >= 1");
    if (deg_a3 < 1) throw std::invalid_argument("degree must be >= 1");
    long long divisor = 2LL * index * index;
    if (deg_a3 % divisor != 0)
        throw std::invalid_argument("degree is not divisible by 2 ind^2");
    return static_cast<int>(1 + deg_a3 / divisor);
}

K3Model model_for_genus(int g) {
    switch (g) {
        case 3:
            return {3, "CP4", 4, {1, 4}, ""};
        case 4:
            return {4, "CP5", 5, {1, 2, 3}, ""};
        case 5:
            return {5, "CP6", 6, {1, 2, 2, 2},
                    "ambient corrected from CP5: four conditions cut a surface only in "
                    "dimension 6"};
        case 6:
            return {6, "G(2,5) in CP9", 6, {1, 1, 1, 2}, ""};
        case 7:
            return {7, "M7 in CP15", 10, {1, 1, 1, 1, 1, 1, 1, 1},
                    "hyperplane count corrected from five: the dimension-10 model needs "
                    "eight conditions to cut a surface"};
        case 8:
            return {8, "G(2,6) in CP14", 8, {1, 1, 1, 1, 1, 1}, ""};
        case 9:
            return {9, "spin Grassmannian in CP13", 6, {1, 1, 1, 1}, ""};
        case 10:
            return {10, "G2 Grassmannian in CP13", 5, {1, 1, 1}, ""};
        default:
            throw std::invalid_argument("projective models are recorded for genus 3..10");
    }
}

namespace {

PencilInvariants make_surface_invariants(Int chi_X, Int chi_Z, Int chi_B) {
    PencilInvariants inv;
    inv.dim_c = 2;
    inv.chi_X = std::move(chi_X);
    inv.chi_Z = std::move(chi_Z);
    inv.chi_B = std::move(chi_B);
    inv.crit = crit_count_master(inv.chi_X, inv.chi_Z, inv.chi_B, 2);
    inv.fiber_genus = (2 - inv.chi_Z) / 2;
    inv.punctures = inv.chi_B;
    return inv;
}

}  // namespace

PencilInvariants ruled_pencil_invariants(const RuledSurfaceSpec& spec) {
    if (spec.chi > 2 || spec.chi % 2 != 0)
        throw std::invalid_argument("base curve needs an even Euler characteristic <= 2");
    if (spec.k < 1) throw std::invalid_argument("fiber degree k must be >= 1");
    if (spec.d < 1 || spec.d < 3 - spec.chi)
        throw std::invalid_argument("bundle degree must satisfy d >= max(1, 3 - chi)");

    Int chi(spec.chi), d(spec.d), k(spec.k);
    return make_surface_invariants(2 * chi, k * (chi + d - d * k), d * k * k);
}

PencilInvariants cp2_pencil_invariants(int d) {
    if (d < 1) throw std::invalid_argument("pencil degree must be >= 1");
    CompleteIntersection plane(AmbientProduct({2}), {});
    DivisorClass L{{d}};
    return make_surface_invariants(ci_euler_char(plane), divisor_euler(plane, L),
                                   base_locus_euler(plane, L));
}

FillingsReport fillings_report(int n) {
    if (n < 2 || n > 20) throw std::invalid_argument("fillings chain length must be in 2..20");

    FillingsReport report;
    report.n = n;
    for (int i = 1; i < n; ++i) {
        int m = 1 << i;
        int k = 1 << (n - i);
        Int chi = Int(m) * (3 - m);
        Int d = Int(m) * m;
        Int chi_z = Int(k) * (chi + d - d * k);
        report.rows.push_back({"i=" + std::to_string(i), m, k, 2 * chi - chi_z});
    }
    Int deg = Int(1) << n;
    report.rows.push_back({"cp2", 0, 0, 3 + deg * (deg - 3)});

    std::set<Int> values;
    for (const auto& row : report.rows) values.insert(row.chi_w);
    report.all_distinct = values.size() == report.rows.size();
    return report;
}

}  // namespace pp
