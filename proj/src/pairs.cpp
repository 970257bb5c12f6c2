#include "pencilpairs/pairs.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace pp {

namespace {

std::optional<std::pair<int, int>> numeric_id(const std::string& id) {
    auto dash = id.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == id.size()) return std::nullopt;
    int rank = 0, num = 0;
    auto [p1, e1] = std::from_chars(id.data(), id.data() + dash, rank);
    auto [p2, e2] = std::from_chars(id.data() + dash + 1, id.data() + id.size(), num);
    if (e1 != std::errc{} || e2 != std::errc{}) return std::nullopt;
    if (p1 != id.data() + dash || p2 != id.data() + id.size()) return std::nullopt;
    return std::make_pair(rank, num);
}

bool id_less(const std::string& a, const std::string& b) {
    auto na = numeric_id(a);
    auto nb = numeric_id(b);
    if (na && nb) return *na < *nb;
    return a < b;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id) {
    for (const auto& e : catalog)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown catalog id '" + id + "'");
}

PencilInvariants quadric_surface_invariants(int a, int b) {
    if (b < 1 || a < b)
        throw std::invalid_argument("quadric bidegree needs a >= b >= 1");
    CompleteIntersection X(AmbientProduct({1, 1}), {});
    DivisorClass L{{a, b}};
    PencilInvariants inv;
    inv.dim_c = 2;
    inv.chi_X = ci_euler_char(X);
    inv.chi_Z = divisor_euler(X, L);
    inv.chi_B = base_locus_euler(X, L);
    inv.crit = crit_count_master(inv.chi_X, inv.chi_Z, inv.chi_B, 2);
    inv.fiber_genus = (2 - inv.chi_Z) / 2;
    inv.punctures = inv.chi_B;
    return inv;
}

}  // namespace

std::string Dim2Member::label() const {
    switch (family) {
        case Dim2Family::cp2:
            return "cp2:d=" + std::to_string(d);
        case Dim2Family::p1xp1:
            return "p1xp1:" + std::to_string(a) + "," + std::to_string(b);
        case Dim2Family::ruled:
            return "ruled:chi=" + std::to_string(ruled.chi) + ",d=" + std::to_string(ruled.d) +
                   ",k=" + std::to_string(ruled.k);
    }
    throw std::logic_error("unreachable");
}

namespace {

int label_int(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || ptr != text.data() + pos || pos == start)
        throw std::invalid_argument("bad number in pencil label '" + text + "'");
    return value;
}

void label_expect(const std::string& text, std::size_t& pos, const std::string& literal) {
    if (text.compare(pos, literal.size(), literal) != 0)
        throw std::invalid_argument("unrecognized pencil label '" + text +
                                    "': use cp2:d=D, p1xp1:A,B or ruled:chi=C,d=D,k=K");
    pos += literal.size();
}

}  // namespace

Dim2Member parse_dim2_label(const std::string& label) {
    Dim2Member member;
    std::size_t pos = 0;
    if (label.rfind("cp2:", 0) == 0) {
        member.family = Dim2Family::cp2;
        label_expect(label, pos, "cp2:d=");
        member.d = label_int(label, pos);
    } else if (label.rfind("p1xp1:", 0) == 0) {
        member.family = Dim2Family::p1xp1;
        label_expect(label, pos, "p1xp1:");
        member.a = label_int(label, pos);
        label_expect(label, pos, ",");
        member.b = label_int(label, pos);
    } else if (label.rfind("ruled:", 0) == 0) {
        member.family = Dim2Family::ruled;
        label_expect(label, pos, "ruled:chi=");
        member.ruled.chi = label_int(label, pos);
        label_expect(label, pos, ",d=");
        member.ruled.d = label_int(label, pos);
        label_expect(label, pos, ",k=");
        member.ruled.k = label_int(label, pos);
    } else {
        throw std::invalid_argument("unrecognized pencil label '" + label +
                                    "': use cp2:d=D, p1xp1:A,B or ruled:chi=C,d=D,k=K");
    }
    if (pos != label.size())
        throw std::invalid_argument("trailing characters in pencil label '" + label + "'");
    return member;
}

PencilInvariants dim2_member_invariants(const Dim2Member& member) {
    switch (member.family) {
        case Dim2Family::cp2:
            return cp2_pencil_invariants(member.d);
        case Dim2Family::p1xp1:
            return quadric_surface_invariants(member.a, member.b);
        case Dim2Family::ruled:
            return ruled_pencil_invariants(member.ruled);
    }
    throw std::logic_error("unreachable");
}

Dim2Key dim2_key(const Dim2Member& member) {
    switch (member.family) {
        case Dim2Family::cp2: {
            if (member.d < 1) throw std::invalid_argument("pencil degree must be >= 1");
            Int d(member.d);
            return {d * d, 3 * d};
        }
        case Dim2Family::p1xp1: {
            if (member.b < 1 || member.a < member.b)
                throw std::invalid_argument("quadric bidegree needs a >= b >= 1");
            Int a(member.a), b(member.b);
            return {2 * a * b, 2 * (a + b)};
        }
        case Dim2Family::ruled: {
            ruled_pencil_invariants(member.ruled);  // validates the spec
            Int chi(member.ruled.chi), d(member.ruled.d), k(member.ruled.k);
            return {d * k * k, k * (chi + d)};
        }
    }
    throw std::logic_error("unreachable");
}

bool is_pair_dim2(const Dim2Key& x, const Dim2Key& y) { return x == y; }

std::vector<PencilPairRecord> search_dim2(const SearchBounds& bounds) {
    if (bounds.cp2_max_d < 0 || bounds.p1p1_max_deg < 0 || bounds.ruled_max_d < 0 ||
        bounds.ruled_max_k < 0)
        throw std::invalid_argument("search bounds must be >= 0");

    std::vector<Dim2Member> members;
    for (int d = 1; d <= bounds.cp2_max_d; ++d) {
        Dim2Member m;
        m.family = Dim2Family::cp2;
        m.d = d;
        members.push_back(m);
    }
    for (int a = 1; a <= bounds.p1p1_max_deg; ++a)
        for (int b = 1; b <= a; ++b) {
            Dim2Member m;
            m.family = Dim2Family::p1xp1;
            m.a = a;
            m.b = b;
            members.push_back(m);
        }
    if (bounds.ruled_max_d > 0 && bounds.ruled_max_k > 0) {
        if (bounds.ruled_chi_min > 2 || bounds.ruled_chi_min % 2 != 0)
            throw std::invalid_argument("ruled chi bound must be even and <= 2");
        for (int chi = 2; chi >= bounds.ruled_chi_min; chi -= 2)
            for (int d = std::max(1, 3 - chi); d <= bounds.ruled_max_d; ++d)
                for (int k = 1; k <= bounds.ruled_max_k; ++k) {
                    Dim2Member m;
                    m.family = Dim2Family::ruled;
                    m.ruled = {chi, d, k};
                    members.push_back(m);
                }
    }

    std::map<Dim2Key, std::vector<Dim2Member>> buckets;
    for (const auto& m : members) buckets[dim2_key(m)].push_back(m);

    std::vector<PencilPairRecord> records;
    for (auto& [key, bucket] : buckets) {
        (void)key;
        if (bucket.size() < 2) continue;
        std::sort(bucket.begin(), bucket.end(),
                  [](const Dim2Member& x, const Dim2Member& y) { return x.label() < y.label(); });
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                PencilPairRecord rec;
                rec.plus_label = bucket[i].label();
                rec.minus_label = bucket[j].label();
                rec.dim_c = 2;
                rec.k = 1;
                rec.plus_invariants = dim2_member_invariants(bucket[i]);
                rec.minus_invariants = dim2_member_invariants(bucket[j]);
                rec.crit_plus = rec.plus_invariants->crit;
                rec.crit_minus = rec.minus_invariants->crit;
                rec.delta = rec.crit_plus - rec.crit_minus;
                rec.euler_number = rec.delta;  // dim W = 4: (-1)^2 = +1
                rec.non_braid_like = rec.delta != 0;
                records.push_back(std::move(rec));
            }
    }
    std::sort(records.begin(), records.end(),
              [](const PencilPairRecord& x, const PencilPairRecord& y) {
                  return std::tie(x.plus_label, x.minus_label) <
                         std::tie(y.plus_label, y.minus_label);
              });
    return records;
}

std::vector<FanoGroup> group_fano_pairs(const std::vector<CatalogEntry>& catalog) {
    std::map<std::pair<int, long long>, std::vector<std::string>> buckets;
    for (const auto& e : catalog) {
        if (e.dim_c != 3 || !e.very_ample_generator) continue;
        long long divisor = 2LL * e.index * e.index;
        if (e.deg_a3 % divisor != 0) continue;
        if (1 + e.deg_a3 / divisor > 10) continue;
        buckets[{e.index, e.deg_a3}].push_back(e.id);
    }

    std::vector<FanoGroup> groups;
    for (auto& [key, ids] : buckets) {
        if (ids.size() < 2) continue;
        std::sort(ids.begin(), ids.end(), id_less);
        FanoGroup g;
        g.index = key.first;
        g.deg_a3 = key.second;
        g.genus = k3_genus(g.index, g.deg_a3);
        g.member_ids = std::move(ids);
        groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<MemberCount> group_member_counts(const FanoGroup& group,
                                             const std::vector<CatalogEntry>& catalog,
                                             long long k) {
    std::vector<MemberCount> counts;
    for (const auto& id : group.member_ids) {
        const CatalogEntry& e = find_entry(catalog, id);
        counts.push_back({id, e.euler, fano_crit_count(e.euler, e.deg_a3, k)});
    }
    return counts;
}

namespace {

PencilInvariants fano_invariants(const CatalogEntry& e, long long k) {
    PencilInvariants inv;
    inv.dim_c = 3;
    inv.chi_X = e.euler;
    inv.chi_Z = fano_divisor_euler(e.deg_a3, k);
    inv.chi_B = fano_base_locus_euler(e.deg_a3, k);
    inv.crit = fano_crit_count(e.euler, e.deg_a3, k);
    return inv;
}

std::vector<PencilPairRecord> pair_records_3d(const std::vector<MemberCount>& counts,
                                              const std::vector<CatalogEntry>& catalog,
                                              long long k,
                                              bool anticanonical_cable) {
    std::vector<PencilPairRecord> records;
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (std::size_t j = i + 1; j < counts.size(); ++j) {
            PencilPairRecord rec;
            rec.plus_label = counts[i].id;
            rec.minus_label = counts[j].id;
            rec.dim_c = 3;
            rec.k = k;
            rec.crit_plus = counts[i].crit;
            rec.crit_minus = counts[j].crit;
            rec.delta = rec.crit_plus - rec.crit_minus;
            rec.euler_number = -rec.delta;  // dim W = 6: (-1)^3
            rec.non_braid_like = rec.delta != 0;
            if (anticanonical_cable) {
                rec.plus_invariants = fano_invariants(find_entry(catalog, counts[i].id), k);
                rec.minus_invariants = fano_invariants(find_entry(catalog, counts[j].id), k);
            }
            records.push_back(std::move(rec));
        }
    return records;
}

}  // namespace

std::vector<PencilPairRecord> pair_report(const FanoGroup& group,
                                          const std::vector<CatalogEntry>& catalog, long long k) {
    return pair_records_3d(group_member_counts(group, catalog, k), catalog, k, true);
}

std::vector<MemberCount> dp6_member_counts(const std::vector<CatalogEntry>& catalog,
                                           long long l) {
    if (l < 1) throw std::invalid_argument("pencil level l must be >= 1");
    std::vector<std::string> ids;
    for (const auto& e : catalog)
        if (e.dim_c == 3 && e.index == 2 && e.deg_a3 == 48 && e.very_ample_generator)
            ids.push_back(e.id);
    std::sort(ids.begin(), ids.end(), id_less);

    std::vector<MemberCount> counts;
    Int ll(l);
    for (const auto& id : ids) {
        const CatalogEntry& e = find_entry(catalog, id);
        counts.push_back({id, e.euler, -Int(e.euler) + 12 * ll * (2 * ll * ll - 3 * ll + 2)});
    }
    return counts;
}

std::vector<PencilPairRecord> dp6_pairs(const std::vector<CatalogEntry>& catalog, long long l) {
    return pair_records_3d(dp6_member_counts(catalog, l), catalog, l, false);
}

namespace {

std::string join_ints(const std::vector<Int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += values[i].str();
    }
    return out + "}";
}

}  // namespace

std::vector<Discrepancy> discrepancy_report(const std::vector<CatalogEntry>& catalog) {
    std::vector<Discrepancy> report;

    {
        CompleteIntersection plane(AmbientProduct({2}), {});
        DivisorClass cubic{{3}};
        CohomologyClass l = divisor_to_class(plane.ambient, cubic);
        CohomologyClass c1 = ci_total_chern(plane).graded_part(1);
        Int stated = ci_euler_char(plane) + ci_integrate(plane, (l - 2 * c1) * l);
        Int derived = crit_count_chern(plane, cubic);
        report.push_back(
            {"surface-count-coefficient",
             "crit = c2(X) + (c1(L) - 2 c1(X)) . c1(L)",
             "crit = c2(X) + (3 c1(L) - 2 c1(X)) . c1(L)",
             "degree-3 plane pencil: stated form gives " + stated.str() +
                 ", the master formula gives " + derived.str()});
    }

    {
        RuledSurfaceSpec spec{2, 4, 2};
        PencilInvariants inv = ruled_pencil_invariants(spec);
        Int stated = 1 + inv.chi_Z / 2;
        report.push_back(
            {"ruled-genus-sign",
             "g(Z) = 1 + (k/2)(chi + d - d k)",
             "g(Z) = 1 - (k/2)(chi + d - d k)",
             "at (chi, d, k) = (2, 4, 2): chi(Z) = " + inv.chi_Z.str() + " forces genus " +
                 inv.fiber_genus->str() + "; the stated form gives " + stated.str()});
    }

    {
        Int stated = Int(48) + 12;
        Int derived = fano_crit_count(0, 18, 1);
        report.push_back(
            {"genus10-cable-coefficient",
             "crit = -chi + 48 k + 12 k^2 (4k - 3)",
             "crit = -chi + 48 k + 18 k^2 (4k - 3)",
             "the genus-10 family has deg = 18; at k = 1 the stated form gives crit + chi = " +
                 stated.str() + ", the master formula gives " + derived.str()});
    }

    for (const auto& group : group_fano_pairs(catalog)) {
        if (group.index != 1 || group.deg_a3 != 18) continue;
        std::vector<Int> derived;
        for (const auto& count : group_member_counts(group, catalog, 1))
            derived.push_back(count.crit);
        std::sort(derived.begin(), derived.end());
        const std::vector<Int> stated{56, 60, 62, 64, 78};
        std::vector<Int> common;
        for (const Int& v : derived)
            if (std::find(stated.begin(), stated.end(), v) != stated.end()) common.push_back(v);
        report.push_back({"genus10-count-list",
                          "counts " + join_ints(stated) + " at k = 1",
                          "counts " + join_ints(derived) + " at k = 1",
                          "values in both lists: " + join_ints(common)});
        break;
    }

    {
        auto fillings = fillings_report(3);
        std::vector<Int> derived{fillings.rows[0].chi_w, fillings.rows[1].chi_w};
        std::vector<Int> stated;
        for (int i = 1; i <= 2; ++i) {
            Int two_i = Int(1) << i;
            stated.push_back(2 * two_i * (3 - two_i) - (Int(1) << 4));
        }
        report.push_back(
            {"fillings-closed-form",
             "chi(W_i) = 2^(i+1) (3 - 2^i) - 2^(N+1)",
             "chi(W_i) = chi(X) - chi(Z) = 2 chi - k (chi + d - d k)",
             "at N = 3 the stated form gives " + join_ints(stated) + ", the derived values are " +
                 join_ints(derived) +
                 "; the gap 2^(2N) - 2^N does not depend on i, so distinctness is unaffected"});
    }

    return report;
}

}  // namespace pp
