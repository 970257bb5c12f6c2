#include "pencilpairs/cli.hpp"

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pencilpairs/document.hpp"
#include "pencilpairs/mcg.hpp"
#include "pencilpairs/pairs.hpp"

namespace pp {

namespace {

int parse_int_arg(const std::string& text, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad integer '" + text + "' in " + what);
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(sep, start);
        parts.push_back(text.substr(start, end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return parts;
}

const std::vector<CatalogEntry>& catalog_for(const std::string& path,
                                             std::vector<CatalogEntry>& storage) {
    if (path.empty()) return bundled_catalog();
    storage = load_catalog(path);
    return storage;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string model_str(const CompleteIntersection& model) {
    std::string out;
    for (std::size_t i = 0; i < model.ambient.factor_dims.size(); ++i) {
        if (i > 0) out += "x";
        out += "CP" + std::to_string(model.ambient.factor_dims[i]);
    }
    if (model.divisors.empty()) return out;
    out += " cut by ";
    for (std::size_t j = 0; j < model.divisors.size(); ++j) {
        if (j > 0) out += "+";
        out += "(";
        const auto& multi = model.divisors[j].multidegree;
        for (std::size_t i = 0; i < multi.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(multi[i]);
        }
        out += ")";
    }
    return out;
}

OutputDocument do_catalog_list(const std::vector<CatalogEntry>& catalog) {
    OutputDocument doc;
    doc.kind = DocumentKind::table;
    doc.columns = {"id",  "rank",  "index",       "deg",        "chi",
                   "vag", "model", "description", "provenance"};
    for (const auto& e : catalog)
        doc.rows.push_back({Cell{e.id}, Cell{Int(e.picard_rank)}, Cell{Int(e.index)},
                            Cell{Int(e.deg_a3)}, Cell{Int(e.euler)},
                            Cell{yes_no(e.very_ample_generator)},
                            Cell{e.ci_model ? model_str(*e.ci_model) : std::string("-")},
                            Cell{e.description}, Cell{e.provenance}});
    doc.annotations = {std::to_string(catalog.size()) + " catalog entries"};
    return doc;
}

OutputDocument do_catalog_verify(const std::vector<CatalogEntry>& catalog, int& exit_code) {
    OutputDocument doc;
    doc.kind = DocumentKind::table;
    doc.columns = {"id", "deg", "deg recomputed", "chi", "chi recomputed", "status"};
    int checkable = 0, mismatched = 0;
    for (const auto& e : catalog) {
        EntryVerification v = verify_entry(e);
        std::vector<Cell> row{Cell{e.id}, Cell{Int(v.deg_tabulated)}};
        if (v.checkable) {
            ++checkable;
            if (!v.all_match()) ++mismatched;
            row.push_back(Cell{v.deg_recomputed});
            row.push_back(Cell{Int(v.euler_tabulated)});
            row.push_back(Cell{v.euler_recomputed});
            row.push_back(Cell{std::string(v.all_match() ? "ok" : "MISMATCH")});
        } else {
            row.push_back(Cell{std::string("-")});
            row.push_back(Cell{Int(v.euler_tabulated)});
            row.push_back(Cell{std::string("-")});
            row.push_back(Cell{std::string("not checkable")});
        }
        doc.rows.push_back(std::move(row));
    }
    doc.annotations = {std::to_string(checkable) + " of " + std::to_string(catalog.size()) +
                       " entries carry a model and were recomputed"};
    if (mismatched > 0) {
        doc.annotations.push_back(std::to_string(mismatched) +
                                  " entries disagree with their models");
        exit_code = 1;
    }
    return doc;
}

SearchBounds parse_bounds(const std::string& text) {
    SearchBounds bounds;
    bounds.cp2_max_d = 4;
    bounds.p1p1_max_deg = 4;
    bounds.ruled_chi_min = 0;
    bounds.ruled_max_d = 6;
    bounds.ruled_max_k = 3;
    if (text.empty()) return bounds;
    for (const std::string& part : split(text, ',')) {
        std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bounds entries look like key=value, got '" + part +
                                        "'");
        std::string key = part.substr(0, eq);
        int value = parse_int_arg(part.substr(eq + 1), "bounds");
        if (key == "d")
            bounds.cp2_max_d = value;
        else if (key == "ab")
            bounds.p1p1_max_deg = value;
        else if (key == "chi")
            bounds.ruled_chi_min = value;
        else if (key == "rd")
            bounds.ruled_max_d = value;
        else if (key == "rk")
            bounds.ruled_max_k = value;
        else
            throw std::invalid_argument("unknown bounds key '" + key +
                                        "': use d, ab, chi, rd, rk");
    }
    return bounds;
}

Cell optional_cell(const std::optional<Int>& value) {
    if (value) return Cell{*value};
    return Cell{std::string("-")};
}

OutputDocument do_search_dim2(const SearchBounds& bounds) {
    OutputDocument doc;
    doc.kind = DocumentKind::records;
    doc.columns = {"plus",      "minus", "genus",        "punctures",
                   "crit plus", "crit minus", "delta", "euler number"};
    auto records = search_dim2(bounds);
    for (const auto& rec : records)
        doc.rows.push_back({Cell{rec.plus_label}, Cell{rec.minus_label},
                            optional_cell(rec.plus_invariants->fiber_genus),
                            optional_cell(rec.plus_invariants->punctures), Cell{rec.crit_plus},
                            Cell{rec.crit_minus}, Cell{rec.delta}, Cell{rec.euler_number}});
    doc.annotations = {std::to_string(records.size()) +
                       " matched pairs of surface pencils with the same boundary"};
    return doc;
}

OutputDocument do_groups(const std::vector<CatalogEntry>& catalog) {
    OutputDocument doc;
    doc.kind = DocumentKind::table;
    doc.columns = {"index", "deg", "genus", "members"};
    for (const auto& g : group_fano_pairs(catalog)) {
        std::string members;
        for (std::size_t i = 0; i < g.member_ids.size(); ++i) {
            if (i > 0) members += ", ";
            members += g.member_ids[i];
        }
        doc.rows.push_back(
            {Cell{Int(g.index)}, Cell{Int(g.deg_a3)}, Cell{Int(g.genus)}, Cell{members}});
    }
    return doc;
}

FanoGroup find_group(const std::vector<CatalogEntry>& catalog, const std::string& group_text) {
    auto parts = split(group_text, ',');
    if (parts.size() != 2)
        throw std::invalid_argument("--group takes index,degree, e.g. --group 1,18");
    int index = parse_int_arg(parts[0], "--group");
    int deg = parse_int_arg(parts[1], "--group");
    for (const auto& g : group_fano_pairs(catalog))
        if (g.index == index && g.deg_a3 == deg) return g;
    throw std::invalid_argument("no group with index " + std::to_string(index) +
                                " and degree " + std::to_string(deg) +
                                " (see 'pairs groups')");
}

OutputDocument pair_records_doc(const std::vector<PencilPairRecord>& records,
                                const std::string& level_name) {
    OutputDocument doc;
    doc.kind = DocumentKind::records;
    doc.columns = {"plus",       "minus", level_name, "crit plus",
                   "crit minus", "delta", "euler number"};
    for (const auto& rec : records)
        doc.rows.push_back({Cell{rec.plus_label}, Cell{rec.minus_label}, Cell{Int(rec.k)},
                            Cell{rec.crit_plus}, Cell{rec.crit_minus}, Cell{rec.delta},
                            Cell{rec.euler_number}});
    return doc;
}

OutputDocument member_counts_doc(const std::vector<MemberCount>& counts,
                                 const std::string& crit_header) {
    OutputDocument doc;
    doc.kind = DocumentKind::records;
    doc.columns = {"id", "chi", crit_header};
    for (const auto& c : counts)
        doc.rows.push_back({Cell{c.id}, Cell{Int(c.euler)}, Cell{c.crit}});
    return doc;
}

OutputDocument do_report(const std::vector<CatalogEntry>& catalog, const std::string& group_text,
                         long long k, bool pairs_mode) {
    FanoGroup group = find_group(catalog, group_text);
    if (pairs_mode) return pair_records_doc(pair_report(group, catalog, k), "k");
    auto doc = member_counts_doc(group_member_counts(group, catalog, k),
                                 "crit(k=" + std::to_string(k) + ")");
    doc.annotations = {"index " + std::to_string(group.index) + ", degree " +
                       std::to_string(group.deg_a3) + ", fiber genus " +
                       std::to_string(group.genus)};
    return doc;
}

OutputDocument do_dp6(const std::vector<CatalogEntry>& catalog, long long l, bool pairs_mode) {
    if (pairs_mode) return pair_records_doc(dp6_pairs(catalog, l), "l");
    auto doc = member_counts_doc(dp6_member_counts(catalog, l),
                                 "crit(l=" + std::to_string(l) + ")");
    doc.annotations = {"pencils of degree-6 del Pezzo surfaces at level " + std::to_string(l)};
    return doc;
}

PencilInvariants fano_pencil_invariants(const CatalogEntry& entry, long long k) {
    if (entry.dim_c != 3)
        throw std::invalid_argument("catalog entry '" + entry.id + "' is not a threefold");
    PencilInvariants inv;
    inv.dim_c = 3;
    inv.chi_X = entry.euler;
    inv.chi_Z = fano_divisor_euler(entry.deg_a3, k);
    inv.chi_B = fano_base_locus_euler(entry.deg_a3, k);
    inv.crit = fano_crit_count(entry.euler, entry.deg_a3, k);
    return inv;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& id) {
    for (const auto& e : catalog)
        if (e.id == id) return &e;
    return nullptr;
}

Dim2Member cable_dim2(Dim2Member member, long long k) {
    if (k < 1) throw std::invalid_argument("cabling level k must be >= 1");
    auto scaled = [&](int value) {
        long long product = value * k;
        if (product > 1000000)
            throw std::invalid_argument("cabling level too large for this family");
        return static_cast<int>(product);
    };
    switch (member.family) {
        case Dim2Family::cp2:
            member.d = scaled(member.d);
            break;
        case Dim2Family::p1xp1:
            member.a = scaled(member.a);
            member.b = scaled(member.b);
            break;
        case Dim2Family::ruled:
            member.ruled.k = scaled(member.ruled.k);
            break;
    }
    return member;
}

// A pencil name is either a catalog id or a surface family label.
PencilInvariants named_pencil_invariants(const std::vector<CatalogEntry>& catalog,
                                         const std::string& name, long long k) {
    if (const CatalogEntry* entry = find_entry(catalog, name))
        return fano_pencil_invariants(*entry, k);
    Dim2Member member;
    try {
        member = parse_dim2_label(name);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("'" + name +
                                    "' is neither a catalog id nor a pencil label "
                                    "(cp2:d=D, p1xp1:A,B, ruled:chi=C,d=D,k=K)");
    }
    return dim2_member_invariants(cable_dim2(member, k));
}

std::vector<Cell> invariant_cells(const std::string& name, long long k,
                                  const PencilInvariants& inv) {
    return {Cell{name},      Cell{Int(inv.dim_c)}, Cell{Int(k)},
            Cell{inv.chi_X}, Cell{inv.chi_Z},      Cell{inv.chi_B},
            Cell{inv.crit},  optional_cell(inv.fiber_genus), optional_cell(inv.punctures)};
}

OutputDocument do_twists(const std::vector<CatalogEntry>& catalog, const std::string& name,
                         long long k) {
    OutputDocument doc;
    doc.kind = DocumentKind::table;
    doc.columns = {"pencil", "dim",  "k",     "chi X", "chi Z",
                   "chi B",  "crit", "genus", "punctures"};
    doc.rows.push_back(invariant_cells(name, k, named_pencil_invariants(catalog, name, k)));
    return doc;
}

OutputDocument do_cable(const std::vector<CatalogEntry>& catalog, const std::string& name,
                        long long max_k) {
    if (max_k < 1) throw std::invalid_argument("--max-k must be >= 1");
    OutputDocument doc;
    doc.kind = DocumentKind::table;
    doc.columns = {"k", "chi Z", "chi B", "crit", "genus", "punctures"};
    Int chi_x;
    int dim_c = 0;
    for (long long k = 1; k <= max_k; ++k) {
        PencilInvariants inv = named_pencil_invariants(catalog, name, k);
        chi_x = inv.chi_X;
        dim_c = inv.dim_c;
        doc.rows.push_back({Cell{Int(k)}, Cell{inv.chi_Z}, Cell{inv.chi_B}, Cell{inv.crit},
                            optional_cell(inv.fiber_genus), optional_cell(inv.punctures)});
    }
    doc.annotations = {"pencil " + name + " on a dim-" + std::to_string(dim_c) +
                       " variety with chi(X) = " + chi_x.str()};
    return doc;
}

OutputDocument do_fillings(int n) {
    FillingsReport report = fillings_report(n);
    OutputDocument doc;
    doc.kind = DocumentKind::table;
    doc.columns = {"filling", "m", "k", "chi W"};
    for (const auto& row : report.rows) {
        Cell m = row.m > 0 ? Cell{Int(row.m)} : Cell{std::string("-")};
        Cell k = row.k > 0 ? Cell{Int(row.k)} : Cell{std::string("-")};
        doc.rows.push_back({Cell{row.label}, std::move(m), std::move(k), Cell{row.chi_w}});
    }
    doc.annotations = {report.all_distinct
                           ? std::string("all Euler characteristics pairwise distinct")
                           : std::string("duplicate Euler characteristics present")};
    return doc;
}

OutputDocument do_discrepancies(const std::vector<CatalogEntry>& catalog) {
    OutputDocument doc;
    doc.kind = DocumentKind::report;
    doc.columns = {"key", "stated", "derived", "detail"};
    auto report = discrepancy_report(catalog);
    for (const auto& d : report)
        doc.rows.push_back({Cell{d.key}, Cell{d.stated}, Cell{d.derived}, Cell{d.detail}});
    doc.annotations = {std::to_string(report.size()) +
                       " tabulated statements disagree with their own closed forms"};
    return doc;
}

std::string word_display(const TwistWord& word) {
    std::string text = word_str(word);
    return text.empty() ? "(empty)" : text;
}

OutputDocument matrix_doc(const Matrix& m) {
    OutputDocument doc;
    doc.kind = DocumentKind::report;
    for (std::size_t j = 0; j < m.size(); ++j)
        doc.columns.push_back("c" + std::to_string(j + 1));
    for (const auto& row : m) {
        std::vector<Cell> cells;
        for (const auto& value : row) cells.push_back(Cell{value});
        doc.rows.push_back(std::move(cells));
    }
    return doc;
}

OutputDocument do_mcg_eval(const std::string& config_path, const std::string& word_text) {
    SphereConfiguration config = load_configuration(config_path);
    TwistWord word = parse_word(word_text);
    Matrix tau = tau_of_word(config, word);
    OutputDocument doc = matrix_doc(tau);
    doc.annotations = {"word: " + word_display(word), "p = " + std::to_string(p_of_word(word)),
                       "det = " + matrix_det(tau).str()};
    return doc;
}

OutputDocument do_mcg_move(const std::string& config_path, const std::string& word_text,
                           const std::string& move_text) {
    SphereConfiguration config = load_configuration(config_path);
    TwistWord word = parse_word(word_text);
    MoveDescriptor move = parse_move(move_text);
    MoveResult result = apply_move(config, word, move);

    OutputDocument doc;
    doc.kind = DocumentKind::report;
    doc.columns = {"field", "value"};
    doc.rows.push_back({Cell{std::string("word")}, Cell{word_display(word)}});
    doc.rows.push_back({Cell{std::string("move")}, Cell{move_str(move)}});
    doc.rows.push_back({Cell{std::string("result")}, Cell{word_display(result.word)}});
    if (result.minted_id.empty()) {
        doc.rows.push_back({Cell{std::string("minted")}, Cell{std::string("-")}});
    } else {
        doc.rows.push_back({Cell{std::string("minted")}, Cell{result.minted_id}});
        std::string klass = "(";
        const auto& v = result.config.sphere(result.minted_id).v;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) klass += ",";
            klass += v[i].str();
        }
        klass += ")";
        doc.rows.push_back({Cell{std::string("minted class")}, Cell{klass}});
    }
    return doc;
}

OutputDocument do_mcg_parity(const std::string& config_path, const std::string& word_text,
                             int& exit_code) {
    SphereConfiguration config = load_configuration(config_path);
    TwistWord word = parse_word(word_text);
    ParityReport report = parity_check(config, word);

    OutputDocument doc;
    doc.kind = DocumentKind::report;
    doc.columns = {"det", "p", "tau is identity", "verdict"};
    doc.rows.push_back({Cell{report.det}, Cell{Int(report.p)},
                        Cell{yes_no(report.tau_is_identity)}, Cell{report.verdict}});
    if (!report.consistent) exit_code = 1;
    return doc;
}

OutputDocument do_ring_integrate(const std::string& ambient_text, const std::string& expr) {
    std::vector<int> dims;
    for (const std::string& part : split(ambient_text, ','))
        dims.push_back(parse_int_arg(part, "ambient"));
    AmbientProduct ambient(dims);
    CohomologyClass value = parse_class(expr, ambient);

    OutputDocument doc;
    doc.kind = DocumentKind::table;
    doc.columns = {"ambient", "class", "integral"};
    doc.rows.push_back({Cell{ambient_text}, Cell{value.str()}, Cell{integrate(value)}});
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact engine for pencil pairs: catalog checks, boundary-matched pencil"
                 " searches, twist counts, fillings and homological monodromy.",
                 "pencilpairs"};
    app.require_subcommand(1);

    std::string catalog_path;
    std::string format_text = "table";
    app.add_option("--catalog", catalog_path, "catalog JSON file (default: bundled catalog)");
    app.add_option("--format", format_text, "output format: table, csv or json");

    auto* catalog_cmd =
        app.add_subcommand("catalog", "inspect and verify the threefold catalog");
    catalog_cmd->fallthrough();
    catalog_cmd->require_subcommand(1);
    auto* catalog_list_cmd = catalog_cmd->add_subcommand("list", "list all entries");
    catalog_list_cmd->fallthrough();
    auto* catalog_verify_cmd = catalog_cmd->add_subcommand(
        "verify", "recompute invariants from the models and compare");
    catalog_verify_cmd->fallthrough();

    auto* pairs_cmd = app.add_subcommand("pairs", "pencil pairs sharing a contact boundary");
    pairs_cmd->fallthrough();
    pairs_cmd->require_subcommand(1);

    auto* search_cmd = pairs_cmd->add_subcommand(
        "search-dim2", "enumerate surface pencils and match their boundaries");
    search_cmd->fallthrough();
    std::string bounds_text;
    search_cmd->add_option("--bounds", bounds_text,
                           "key=value list over d, ab, chi, rd, rk "
                           "(default d=4,ab=4,chi=0,rd=6,rk=3)");

    auto* groups_cmd =
        pairs_cmd->add_subcommand("groups", "catalog entries sharing (index, degree)");
    groups_cmd->fallthrough();

    auto* report_cmd =
        pairs_cmd->add_subcommand("report", "twist counts for the members of one group");
    report_cmd->fallthrough();
    std::string group_text;
    long long report_k = 1;
    bool report_pairs = false;
    report_cmd->add_option("--group", group_text, "index,degree of the group, e.g. 1,18")
        ->required();
    report_cmd->add_option("--k", report_k, "anticanonical cabling level (default 1)");
    report_cmd->add_flag("--pairs", report_pairs, "emit pairwise records with deltas");

    auto* dp6_cmd =
        pairs_cmd->add_subcommand("dp6", "degree-6 del Pezzo pencils on the degree-48 pair");
    dp6_cmd->fallthrough();
    long long dp6_level = 1;
    bool dp6_pairs_flag = false;
    dp6_cmd->add_option("--l", dp6_level, "pencil level (default 1)");
    dp6_cmd->add_flag("--pairs", dp6_pairs_flag, "emit pairwise records with deltas");

    auto* twists_cmd = app.add_subcommand("twists", "twist count of one pencil");
    twists_cmd->fallthrough();
    std::string twists_name;
    long long twists_k = 1;
    twists_cmd->add_option("pencil", twists_name, "catalog id or family label")->required();
    twists_cmd->add_option("--k", twists_k, "cabling level (default 1)");

    auto* cable_cmd = app.add_subcommand("cable", "twist counts across cabling levels");
    cable_cmd->fallthrough();
    std::string cable_name;
    long long cable_max_k = 5;
    cable_cmd->add_option("pencil", cable_name, "catalog id or family label")->required();
    cable_cmd->add_option("--max-k", cable_max_k, "largest cabling level (default 5)");

    auto* fillings_cmd =
        app.add_subcommand("fillings", "Euler characteristics of the filling chain");
    fillings_cmd->fallthrough();
    int fillings_n = 0;
    fillings_cmd->add_option("n", fillings_n, "chain length, 2..20")->required();

    auto* disc_cmd = app.add_subcommand(
        "discrepancies", "tabulated statements that disagree with their closed forms");
    disc_cmd->fallthrough();

    auto* mcg_cmd = app.add_subcommand("mcg", "homological monodromy of twist words");
    mcg_cmd->fallthrough();
    mcg_cmd->require_subcommand(1);
    std::string config_path;
    std::string word_text;
    auto* eval_cmd = mcg_cmd->add_subcommand("eval", "matrix, exponent sum and determinant");
    auto* move_cmd = mcg_cmd->add_subcommand("move", "apply one rewriting move to a word");
    auto* parity_cmd = mcg_cmd->add_subcommand("parity", "determinant parity diagnostic");
    for (auto* sub : {eval_cmd, move_cmd, parity_cmd}) {
        sub->fallthrough();
        sub->add_option("--config", config_path, "sphere configuration JSON file")->required();
        sub->add_option("--word", word_text, "twist word, e.g. \"e1 e2^-1\"");
    }
    std::string move_text;
    move_cmd->add_option("move", move_text, "move descriptor, e.g. conjugacy@0")->required();

    auto* ring_cmd = app.add_subcommand("ring", "cohomology ring utilities");
    ring_cmd->fallthrough();
    ring_cmd->require_subcommand(1);
    auto* integrate_cmd =
        ring_cmd->add_subcommand("integrate", "integrate a class over a product of CPs");
    integrate_cmd->fallthrough();
    std::string ambient_text;
    std::string expr_text;
    integrate_cmd->add_option("ambient", ambient_text, "factor dimensions, e.g. 2,3")
        ->required();
    integrate_cmd->add_option("expr", expr_text, "class expression, e.g. (w1+w2)^4")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("pencilpairs");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    int exit_code = 0;
    try {
        OutputFormat format = format_from_name(format_text);
        std::vector<CatalogEntry> storage;
        OutputDocument doc;

        if (catalog_list_cmd->parsed())
            doc = do_catalog_list(catalog_for(catalog_path, storage));
        else if (catalog_verify_cmd->parsed())
            doc = do_catalog_verify(catalog_for(catalog_path, storage), exit_code);
        else if (search_cmd->parsed())
            doc = do_search_dim2(parse_bounds(bounds_text));
        else if (groups_cmd->parsed())
            doc = do_groups(catalog_for(catalog_path, storage));
        else if (report_cmd->parsed())
            doc = do_report(catalog_for(catalog_path, storage), group_text, report_k,
                            report_pairs);
        else if (dp6_cmd->parsed())
            doc = do_dp6(catalog_for(catalog_path, storage), dp6_level, dp6_pairs_flag);
        else if (twists_cmd->parsed())
            doc = do_twists(catalog_for(catalog_path, storage), twists_name, twists_k);
        else if (cable_cmd->parsed())
            doc = do_cable(catalog_for(catalog_path, storage), cable_name, cable_max_k);
        else if (fillings_cmd->parsed())
            doc = do_fillings(fillings_n);
        else if (disc_cmd->parsed())
            doc = do_discrepancies(catalog_for(catalog_path, storage));
        else if (eval_cmd->parsed())
            doc = do_mcg_eval(config_path, word_text);
        else if (move_cmd->parsed())
            doc = do_mcg_move(config_path, word_text, move_text);
        else if (parity_cmd->parsed())
            doc = do_mcg_parity(config_path, word_text, exit_code);
        else if (integrate_cmd->parsed())
            doc = do_ring_integrate(ambient_text, expr_text);
        else
            throw std::logic_error("unhandled subcommand");

        out << render(doc, format);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace pp
