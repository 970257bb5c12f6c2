#include "pencilpairs/varieties.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace pp {

using nlohmann::json;

bool DivisorClass::is_ample() const {
    if (multidegree.empty()) return false;
    for (int d : multidegree)
        if (d <= 0) return false;
    return true;
}

CohomologyClass divisor_to_class(const AmbientProduct& a, const DivisorClass& d) {
    if (d.multidegree.size() != static_cast<std::size_t>(a.factor_count()))
        throw std::invalid_argument("multidegree length does not match the ambient product");
    CohomologyClass c = CohomologyClass::zero(a);
    for (int i = 0; i < a.factor_count(); ++i)
        c = c + Int(d.multidegree[static_cast<std::size_t>(i)]) *
                    CohomologyClass::generator(a, i + 1);
    return c;
}

CompleteIntersection::CompleteIntersection(AmbientProduct a, std::vector<DivisorClass> divs)
    : ambient(std::move(a)), divisors(std::move(divs)) {
    for (const auto& d : divisors) {
        if (d.multidegree.size() != static_cast<std::size_t>(ambient.factor_count()))
            throw std::invalid_argument("divisor multidegree length does not match the ambient");
        bool all_zero = true;
        for (int e : d.multidegree) {
            if (e < 0) throw std::invalid_argument("divisor multidegree entries must be >= 0");
            if (e != 0) all_zero = false;
        }
        if (all_zero) throw std::invalid_argument("divisor multidegree must not be zero");
    }
    if (dim_c() < 1)
        throw std::invalid_argument("complete intersection must have dimension >= 1");
}

int CompleteIntersection::dim_c() const {
    return ambient.total_dim() - static_cast<int>(divisors.size());
}

CohomologyClass ci_total_chern(const CompleteIntersection& X) {
    CohomologyClass c = total_chern_ambient(X.ambient);
    const CohomologyClass one = CohomologyClass::constant(X.ambient, 1);
    for (const auto& d : X.divisors)
        c = c * invert_unit(one + divisor_to_class(X.ambient, d));
    return c;
}

Int ci_integrate(const CompleteIntersection& X, const CohomologyClass& c) {
    if (!(c.ambient() == X.ambient))
        throw std::invalid_argument("class does not live on the ambient of this intersection");
    CohomologyClass cut = c;
    for (const auto& d : X.divisors) cut = cut * divisor_to_class(X.ambient, d);
    return integrate(cut);
}

Int ci_euler_char(const CompleteIntersection& X) {
    return ci_integrate(X, ci_total_chern(X).graded_part(X.dim_c()));
}

DivisorClass ci_anticanonical(const CompleteIntersection& X) {
    std::vector<int> anti;
    for (int n : X.ambient.factor_dims) anti.push_back(n + 1);
    for (const auto& d : X.divisors)
        for (std::size_t i = 0; i < anti.size(); ++i) anti[i] -= d.multidegree[i];
    return DivisorClass{anti};
}

namespace {

const json& require_field(const json& obj, const char* key, const std::string& ctx) {
    auto it = obj.find(key);
    if (it == obj.end()) throw CatalogError(ctx + ": missing field '" + key + "'");
    return *it;
}

long long as_integer(const json& value, const char* key, const std::string& ctx) {
    if (!value.is_number_integer())
        throw CatalogError(ctx + ": field '" + key + "' must be an integer");
    return value.get<long long>();
}

int as_small_int(const json& value, const char* key, const std::string& ctx) {
    long long v = as_integer(value, key, ctx);
    if (v < -1000000 || v > 1000000)
        throw CatalogError(ctx + ": field '" + key + "' is out of range");
    return static_cast<int>(v);
}

std::string as_string(const json& value, const char* key, const std::string& ctx) {
    if (!value.is_string())
        throw CatalogError(ctx + ": field '" + key + "' must be a string");
    return value.get<std::string>();
}

std::vector<int> as_int_array(const json& value, const char* key, const std::string& ctx) {
    if (!value.is_array())
        throw CatalogError(ctx + ": field '" + key + "' must be an array");
    std::vector<int> out;
    for (const auto& item : value) out.push_back(as_small_int(item, key, ctx));
    return out;
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& ctx) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) throw CatalogError(ctx + ": unknown field '" + key + "'");
    }
}

CatalogEntry parse_entry(const json& obj, const std::string& ctx) {
    if (!obj.is_object()) throw CatalogError(ctx + ": entry must be an object");
    reject_unknown_fields(obj,
                          {"id", "description", "dim_c", "picard_rank", "index", "deg_a3",
                           "euler", "very_ample_generator", "ci_model", "polarization",
                           "provenance"},
                          ctx);

    CatalogEntry e;
    e.id = as_string(require_field(obj, "id", ctx), "id", ctx);
    if (e.id.empty()) throw CatalogError(ctx + ": field 'id' must not be empty");
    e.description = as_string(require_field(obj, "description", ctx), "description", ctx);
    e.dim_c = as_small_int(require_field(obj, "dim_c", ctx), "dim_c", ctx);
    e.picard_rank = as_small_int(require_field(obj, "picard_rank", ctx), "picard_rank", ctx);
    e.index = as_small_int(require_field(obj, "index", ctx), "index", ctx);
    e.deg_a3 = as_integer(require_field(obj, "deg_a3", ctx), "deg_a3", ctx);
    e.euler = as_integer(require_field(obj, "euler", ctx), "euler", ctx);
    const json& vag = require_field(obj, "very_ample_generator", ctx);
    if (!vag.is_boolean())
        throw CatalogError(ctx + ": field 'very_ample_generator' must be a boolean");
    e.very_ample_generator = vag.get<bool>();
    e.provenance = as_string(require_field(obj, "provenance", ctx), "provenance", ctx);

    if (e.index < 1) throw CatalogError(ctx + ": field 'index' must be >= 1");
    if (e.deg_a3 < 1) throw CatalogError(ctx + ": field 'deg_a3' must be >= 1");

    if (auto it = obj.find("ci_model"); it != obj.end()) {
        if (!it->is_object()) throw CatalogError(ctx + ": field 'ci_model' must be an object");
        reject_unknown_fields(*it, {"ambient", "divisors"}, ctx + ".ci_model");
        std::vector<int> dims =
            as_int_array(require_field(*it, "ambient", ctx + ".ci_model"), "ambient", ctx);
        const json& divs = require_field(*it, "divisors", ctx + ".ci_model");
        if (!divs.is_array())
            throw CatalogError(ctx + ": field 'divisors' must be an array");
        std::vector<DivisorClass> divisors;
        for (const auto& d : divs) divisors.push_back(DivisorClass{as_int_array(d, "divisors", ctx)});
        try {
            e.ci_model.emplace(AmbientProduct(dims), std::move(divisors));
        } catch (const std::invalid_argument& err) {
            throw CatalogError(ctx + ": invalid ci_model: " + err.what());
        }
        if (e.ci_model->dim_c() != e.dim_c)
            throw CatalogError(ctx + ": ci_model dimension does not match dim_c");
    }

    if (auto it = obj.find("polarization"); it != obj.end()) {
        if (!e.ci_model)
            throw CatalogError(ctx + ": 'polarization' requires a 'ci_model'");
        e.polarization = DivisorClass{as_int_array(*it, "polarization", ctx)};
        if (e.polarization->multidegree.size() !=
            static_cast<std::size_t>(e.ci_model->ambient.factor_count()))
            throw CatalogError(ctx + ": 'polarization' length does not match the ambient");
    }

    if (e.ci_model) {
        if (!e.polarization)
            throw CatalogError(ctx + ": entries with a 'ci_model' need a 'polarization'");
        DivisorClass anti = ci_anticanonical(*e.ci_model);
        for (std::size_t i = 0; i < anti.multidegree.size(); ++i)
            if (anti.multidegree[i] != e.index * e.polarization->multidegree[i])
                throw CatalogError(ctx +
                                   ": anticanonical class is not index times the polarization");
    }

    return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& json_text) {
    if (json_text.find_first_not_of(" \t\r\n") == std::string::npos) return {};

    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw CatalogError(std::string("invalid catalog JSON: ") + e.what());
    }
    if (!doc.is_array()) throw CatalogError("catalog must be a JSON array");

    std::vector<CatalogEntry> entries;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        std::string ctx = "entry " + std::to_string(i);
        CatalogEntry e = parse_entry(doc[i], ctx);
        if (!seen.insert(e.id).second)
            throw CatalogError(ctx + ": duplicate id '" + e.id + "'");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

const char* bundled_catalog_text();

const std::vector<CatalogEntry>& bundled_catalog() {
    static const std::vector<CatalogEntry> entries = parse_catalog(bundled_catalog_text());
    return entries;
}

EntryVerification verify_entry(const CatalogEntry& entry) {
    EntryVerification v;
    v.id = entry.id;
    v.deg_tabulated = entry.deg_a3;
    v.euler_tabulated = entry.euler;
    if (!entry.ci_model || entry.dim_c != 3) return v;

    const CompleteIntersection& X = *entry.ci_model;
    DivisorClass anti = ci_anticanonical(X);
    CohomologyClass a = divisor_to_class(X.ambient, anti);
    v.checkable = true;
    v.deg_recomputed = ci_integrate(X, a.pow(3));
    v.euler_recomputed = ci_euler_char(X);
    v.deg_match = v.deg_recomputed == Int(entry.deg_a3);
    v.euler_match = v.euler_recomputed == Int(entry.euler);
    v.polarization_match = true;
    if (entry.polarization) {
        for (std::size_t i = 0; i < anti.multidegree.size(); ++i)
            if (anti.multidegree[i] != entry.index * entry.polarization->multidegree[i])
                v.polarization_match = false;
    }
    return v;
}

}  // namespace pp
