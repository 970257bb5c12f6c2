#include "pencilpairs/mcg.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pp {

using nlohmann::json;

Matrix identity_matrix(int rank) {
    Matrix m(static_cast<std::size_t>(rank), std::vector<Int>(static_cast<std::size_t>(rank), 0));
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
    return m;
}

namespace {

void check_matrix(const Matrix& m, const char* what) {
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument(std::string(what) + " must be a square matrix");
}

}  // namespace

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    check_matrix(a, "matrix");
    check_matrix(b, "matrix");
    if (a.size() != b.size()) throw std::invalid_argument("matrix sizes do not match");
    std::size_t n = a.size();
    Matrix out(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

std::vector<Int> matrix_apply(const Matrix& m, const std::vector<Int>& v) {
    check_matrix(m, "matrix");
    if (v.size() != m.size()) throw std::invalid_argument("vector length does not match");
    std::vector<Int> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

Int matrix_det(Matrix m) {
    check_matrix(m, "matrix");
    std::size_t n = m.size();
    if (n == 0) return 1;
    // Bareiss: fraction-free elimination, every division is exact.
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == k) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

void validate_lattice(const IntersectionLattice& lattice) {
    if (lattice.n < 2) throw std::invalid_argument("fiber dimension parameter n must be >= 2");
    if (lattice.gram.empty()) throw std::invalid_argument("lattice must have rank >= 1");
    check_matrix(lattice.gram, "gram matrix");
    bool even = lattice.n % 2 == 0;
    for (std::size_t i = 0; i < lattice.gram.size(); ++i)
        for (std::size_t j = 0; j < lattice.gram.size(); ++j) {
            Int mirror = even ? lattice.gram[j][i] : -lattice.gram[j][i];
            if (lattice.gram[i][j] != mirror)
                throw std::invalid_argument(
                    even ? "gram matrix must be symmetric for even n"
                         : "gram matrix must be antisymmetric for odd n");
        }
}

Int pairing(const IntersectionLattice& lattice, const std::vector<Int>& a,
            const std::vector<Int>& b) {
    std::size_t rank = lattice.gram.size();
    if (a.size() != rank || b.size() != rank)
        throw std::invalid_argument("vector length does not match the lattice rank");
    Int out = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j) out += a[i] * lattice.gram[i][j] * b[j];
    }
    return out;
}

int twist_sign(int n) {
    if (n < 2) throw std::invalid_argument("fiber dimension parameter n must be >= 2");
    long long half = (static_cast<long long>(n) + 1) * (n + 2) / 2;
    return half % 2 == 0 ? 1 : -1;
}

Int expected_self_pairing(int n) {
    if (n < 2) throw std::invalid_argument("fiber dimension parameter n must be >= 2");
    if (n % 2 != 0) return 0;
    long long half = static_cast<long long>(n) * (n + 1) / 2;
    return half % 2 == 0 ? Int(2) : Int(-2);
}

std::string relation_name(SphereRelation rel) {
    switch (rel) {
        case SphereRelation::disjoint:
            return "disjoint";
        case SphereRelation::one_point:
            return "one_point";
        case SphereRelation::unknown:
            return "unknown";
    }
    throw std::logic_error("unreachable");
}

const SphereClass& SphereConfiguration::sphere(const std::string& id) const {
    for (const auto& s : spheres)
        if (s.id == id) return s;
    throw std::invalid_argument("unknown sphere id '" + id + "'");
}

bool SphereConfiguration::has_sphere(const std::string& id) const {
    for (const auto& s : spheres)
        if (s.id == id) return true;
    return false;
}

SphereRelation SphereConfiguration::relation(const std::string& a, const std::string& b) const {
    auto key = std::minmax(a, b);
    auto it = relations.find({key.first, key.second});
    return it == relations.end() ? SphereRelation::unknown : it->second;
}

void validate_configuration(const SphereConfiguration& config) {
    validate_lattice(config.lattice);
    std::size_t rank = config.lattice.gram.size();

    std::set<std::string> ids;
    for (const auto& s : config.spheres) {
        if (s.id.empty()) throw std::invalid_argument("sphere ids must not be empty");
        for (char c : s.id)
            if (std::isspace(static_cast<unsigned char>(c)) || c == '^')
                throw std::invalid_argument("sphere id '" + s.id +
                                            "' contains whitespace or '^'");
        if (!ids.insert(s.id).second)
            throw std::invalid_argument("duplicate sphere id '" + s.id + "'");
        if (s.v.size() != rank)
            throw std::invalid_argument("sphere '" + s.id +
                                        "' has the wrong number of coordinates");
        Int self = pairing(config.lattice, s.v, s.v);
        Int expected = expected_self_pairing(config.lattice.n);
        if (self != expected)
            throw std::invalid_argument("sphere '" + s.id + "' has self-pairing " + self.str() +
                                        ", the twist convention needs " + expected.str());
    }

    for (const auto& [key, rel] : config.relations) {
        const auto& [a, b] = key;
        if (a >= b)
            throw std::invalid_argument("relation keys must be stored as ordered pairs");
        if (!ids.contains(a) || !ids.contains(b))
            throw std::invalid_argument("relation references unknown sphere '" +
                                        (ids.contains(a) ? b : a) + "'");
        Int p = pairing(config.lattice, config.sphere(a).v, config.sphere(b).v);
        if (rel == SphereRelation::disjoint && p != 0)
            throw std::invalid_argument("spheres '" + a + "' and '" + b +
                                        "' are marked disjoint but pair to " + p.str());
        if (rel == SphereRelation::one_point && p != 1 && p != -1)
            throw std::invalid_argument("spheres '" + a + "' and '" + b +
                                        "' are marked one_point but pair to " + p.str());
    }
}

namespace {

long long as_config_int(const json& value, const std::string& what) {
    if (!value.is_number_integer()) throw ConfigError(what + " must be an integer");
    return value.get<long long>();
}

}  // namespace

SphereConfiguration parse_configuration(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid configuration JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "n" && key != "gram" && key != "spheres" && key != "relations")
            throw ConfigError("unknown configuration field '" + key + "'");
    }
    if (!doc.contains("n") || !doc.contains("gram") || !doc.contains("spheres"))
        throw ConfigError("configuration needs fields 'n', 'gram' and 'spheres'");

    SphereConfiguration config;
    long long n = as_config_int(doc["n"], "field 'n'");
    if (n < 2 || n > 1000) throw ConfigError("field 'n' must be in 2..1000");
    config.lattice.n = static_cast<int>(n);

    if (!doc["gram"].is_array()) throw ConfigError("field 'gram' must be an array of rows");
    for (const auto& row : doc["gram"]) {
        if (!row.is_array()) throw ConfigError("gram rows must be arrays");
        std::vector<Int> entries;
        for (const auto& cell : row) entries.emplace_back(as_config_int(cell, "gram entry"));
        config.lattice.gram.push_back(std::move(entries));
    }

    if (!doc["spheres"].is_array()) throw ConfigError("field 'spheres' must be an array");
    for (const auto& s : doc["spheres"]) {
        if (!s.is_object()) throw ConfigError("sphere records must be objects");
        for (const auto& [key, value] : s.items()) {
            (void)value;
            if (key != "id" && key != "v")
                throw ConfigError("unknown sphere field '" + key + "'");
        }
        if (!s.contains("id") || !s["id"].is_string())
            throw ConfigError("sphere records need a string 'id'");
        if (!s.contains("v") || !s["v"].is_array())
            throw ConfigError("sphere records need an array 'v'");
        SphereClass sphere;
        sphere.id = s["id"].get<std::string>();
        for (const auto& cell : s["v"])
            sphere.v.emplace_back(as_config_int(cell, "sphere coordinate"));
        config.spheres.push_back(std::move(sphere));
    }

    if (doc.contains("relations")) {
        if (!doc["relations"].is_array())
            throw ConfigError("field 'relations' must be an array");
        for (const auto& r : doc["relations"]) {
            if (!r.is_object()) throw ConfigError("relation records must be objects");
            for (const auto& [key, value] : r.items()) {
                (void)value;
                if (key != "a" && key != "b" && key != "rel")
                    throw ConfigError("unknown relation field '" + key + "'");
            }
            if (!r.contains("a") || !r["a"].is_string() || !r.contains("b") ||
                !r["b"].is_string() || !r.contains("rel") || !r["rel"].is_string())
                throw ConfigError("relation records need string fields 'a', 'b', 'rel'");
            std::string a = r["a"].get<std::string>();
            std::string b = r["b"].get<std::string>();
            std::string rel = r["rel"].get<std::string>();
            if (a == b) throw ConfigError("relations need two distinct sphere ids");
            SphereRelation parsed;
            if (rel == "disjoint")
                parsed = SphereRelation::disjoint;
            else if (rel == "one_point")
                parsed = SphereRelation::one_point;
            else if (rel == "unknown")
                parsed = SphereRelation::unknown;
            else
                throw ConfigError("unknown relation kind '" + rel + "'");
            auto key = std::minmax(a, b);
            if (!config.relations.emplace(std::make_pair(key.first, key.second), parsed).second)
                throw ConfigError("duplicate relation for '" + a + "' and '" + b + "'");
        }
    }

    try {
        validate_configuration(config);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return config;
}

SphereConfiguration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_configuration(buffer.str());
}

Matrix dehn_twist_matrix(const SphereConfiguration& config, const std::string& id,
                         int exponent) {
    if (exponent != 1 && exponent != -1)
        throw std::invalid_argument("twist exponent must be +1 or -1");
    const SphereClass& sphere = config.sphere(id);
    const IntersectionLattice& lattice = config.lattice;
    std::size_t rank = lattice.gram.size();
    if (sphere.v.size() != rank)
        throw std::invalid_argument("sphere coordinates do not match the lattice rank");

    Int self = pairing(lattice, sphere.v, sphere.v);
    Int expected = expected_self_pairing(lattice.n);
    if (self != expected)
        throw std::invalid_argument("sphere '" + id + "' has self-pairing " + self.str() +
                                    ", the twist convention needs " + expected.str());

    // M h = h + eps (h . v) v, so M = I + eps v (G v)^T; for the inverse the
    // even case is an involution and the odd case flips the sign of the
    // rank-one part.
    int eps = twist_sign(lattice.n);
    bool invert_odd = exponent == -1 && lattice.n % 2 != 0;

    std::vector<Int> gv(rank, 0);
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t l = 0; l < rank; ++l) gv[j] += lattice.gram[j][l] * sphere.v[l];

    Matrix m = identity_matrix(static_cast<int>(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            Int bump = Int(eps) * sphere.v[i] * gv[j];
            m[i][j] += invert_odd ? -bump : bump;
        }
    return m;
}

TwistWord parse_word(const std::string& text) {
    TwistWord word;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        TwistLetter letter;
        auto caret = token.find('^');
        if (caret == std::string::npos) {
            letter.id = token;
        } else {
            if (token.substr(caret) != "^-1")
                throw std::invalid_argument("bad twist power '" + token +
                                            "': only '^-1' is supported");
            letter.id = token.substr(0, caret);
            letter.exponent = -1;
        }
        if (letter.id.empty())
            throw std::invalid_argument("empty sphere id in word token '" + token + "'");
        word.letters.push_back(std::move(letter));
    }
    return word;
}

std::string word_str(const TwistWord& word) {
    std::string out;
    for (const auto& letter : word.letters) {
        if (!out.empty()) out += " ";
        out += letter.id;
        if (letter.exponent == -1) out += "^-1";
    }
    return out;
}

Matrix tau_of_word(const SphereConfiguration& config, const TwistWord& word) {
    Matrix m = identity_matrix(config.lattice.rank());
    for (const auto& letter : word.letters)
        m = matrix_mul(m, dehn_twist_matrix(config, letter.id, letter.exponent));
    return m;
}

long long p_of_word(const TwistWord& word) {
    long long p = 0;
    for (const auto& letter : word.letters) p += letter.exponent;
    return p;
}

MoveDescriptor parse_move(const std::string& text) {
    auto at = text.find('@');
    if (at == std::string::npos)
        throw std::invalid_argument("move descriptors look like 'braid@1'");
    std::string kind = text.substr(0, at);
    std::string pos = text.substr(at + 1);
    MoveDescriptor move;
    if (kind == "disjoint")
        move.kind = MoveDescriptor::Kind::disjoint;
    else if (kind == "conjugacy")
        move.kind = MoveDescriptor::Kind::conjugacy;
    else if (kind == "braid")
        move.kind = MoveDescriptor::Kind::braid;
    else
        throw std::invalid_argument("unknown move kind '" + kind + "'");
    if (pos.empty() || pos.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("move position must be a non-negative integer");
    try {
        move.position = std::stoull(pos);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("move position is out of range");
    }
    return move;
}

std::string move_str(const MoveDescriptor& move) {
    std::string kind;
    switch (move.kind) {
        case MoveDescriptor::Kind::disjoint:
            kind = "disjoint";
            break;
        case MoveDescriptor::Kind::conjugacy:
            kind = "conjugacy";
            break;
        case MoveDescriptor::Kind::braid:
            kind = "braid";
            break;
    }
    return kind + "@" + std::to_string(move.position);
}

namespace {

std::string mint_id(const SphereConfiguration& config, const std::string& left,
                    const std::string& right) {
    std::string base = "(" + left + "*" + right + ")";
    if (!config.has_sphere(base)) return base;
    for (int suffix = 2;; ++suffix) {
        std::string candidate = base + "#" + std::to_string(suffix);
        if (!config.has_sphere(candidate)) return candidate;
    }
}

}  // namespace

MoveResult apply_move(const SphereConfiguration& config, const TwistWord& word,
                      const MoveDescriptor& move) {
    std::size_t span = move.kind == MoveDescriptor::Kind::braid ? 3 : 2;
    if (move.position + span > word.letters.size())
        throw std::invalid_argument("move position out of range");
    for (std::size_t i = move.position; i < move.position + span; ++i)
        config.sphere(word.letters[i].id);  // resolve early for a clear error

    MoveResult result{config, word, ""};
    auto& letters = result.word.letters;

    switch (move.kind) {
        case MoveDescriptor::Kind::disjoint: {
            const TwistLetter& a = letters[move.position];
            const TwistLetter& b = letters[move.position + 1];
            if (a.id != b.id) {
                SphereRelation rel = config.relation(a.id, b.id);
                if (rel != SphereRelation::disjoint)
                    throw std::invalid_argument("disjoint swap requires relation disjoint; '" +
                                                a.id + "' and '" + b.id + "' have relation " +
                                                relation_name(rel));
            }
            std::swap(letters[move.position], letters[move.position + 1]);
            break;
        }
        case MoveDescriptor::Kind::conjugacy: {
            TwistLetter outer = letters[move.position];
            TwistLetter inner = letters[move.position + 1];
            Matrix m = dehn_twist_matrix(config, outer.id, outer.exponent);
            SphereClass minted;
            minted.id = mint_id(config, outer.id, inner.id);
            minted.v = matrix_apply(m, config.sphere(inner.id).v);
            result.minted_id = minted.id;
            result.config.spheres.push_back(std::move(minted));
            letters[move.position] = {result.minted_id, inner.exponent};
            letters[move.position + 1] = outer;
            break;
        }
        case MoveDescriptor::Kind::braid: {
            const TwistLetter& a = letters[move.position];
            const TwistLetter& b = letters[move.position + 1];
            const TwistLetter& c = letters[move.position + 2];
            if (a.id != c.id || a.id == b.id)
                throw std::invalid_argument("braid needs the letter pattern a b a");
            if (a.exponent != 1 || b.exponent != 1 || c.exponent != 1)
                throw std::invalid_argument("braid applies to positive twists only");
            SphereRelation rel = config.relation(a.id, b.id);
            if (rel != SphereRelation::one_point)
                throw std::invalid_argument("relation is " + relation_name(rel) +
                                            ", braid requires one_point");
            TwistLetter first = a;
            TwistLetter second = b;
            letters[move.position] = second;
            letters[move.position + 1] = first;
            letters[move.position + 2] = second;
            break;
        }
    }
    return result;
}

ParityReport parity_check(const SphereConfiguration& config, const TwistWord& word) {
    if (config.lattice.n % 2 != 0)
        throw std::invalid_argument("the parity invariant exists for even n only");

    ParityReport report;
    Matrix tau = tau_of_word(config, word);
    report.det = matrix_det(tau);
    report.p = p_of_word(word);
    report.tau_is_identity = tau == identity_matrix(config.lattice.rank());
    Int expected = report.p % 2 == 0 ? 1 : -1;
    report.consistent = report.det == expected;
    if (report.tau_is_identity && report.p % 2 != 0)
        report.verdict = "violation: trivial homology action with odd twist count";
    else if (report.consistent)
        report.verdict = "consistent: det(tau) = (-1)^p";
    else
        report.verdict = "violation: det(tau) differs from (-1)^p";
    return report;
}

Int cobordism_chi(const CobordismCombination& combination) {
    Int total = 0;
    for (const auto& [coeff, dims] : combination.terms) {
        Int chi = 1;
        for (int d : dims) {
            if (d < 1) throw std::invalid_argument("projective space dimensions must be >= 1");
            chi *= d + 1;
        }
        total += coeff * chi;
    }
    return total;
}

CobordismCombination twist_length_combination(int n, const Int& m) {
    if (n < 2) throw std::invalid_argument("fiber dimension parameter n must be >= 2");
    CobordismCombination combination;
    if (n % 2 != 0) {
        if (m % 2 != 0)
            throw std::invalid_argument("for odd n the twist count m must be even");
        combination.terms.push_back({m, {n}});
        combination.terms.push_back({-m / 2, {1, n - 1}});
    } else {
        combination.terms.push_back({m * (n - 1), {n}});
        combination.terms.push_back({-m * n / 2, {1, n - 1}});
    }
    return combination;
}

}  // namespace pp
