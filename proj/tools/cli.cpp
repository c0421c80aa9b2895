#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "nsct/chartab.hpp"
#include "nsct/error.hpp"
#include "nsct/finest.hpp"
#include "nsct/io.hpp"
#include "nsct/lattice.hpp"
#include "nsct/render.hpp"
#include "nsct/theory.hpp"

namespace nsct::cli {

namespace {

struct Common {
    std::string group_path;
    std::size_t max_order = 0;
    std::size_t max_lattice = 0;
    std::optional<std::uint64_t> seed;
};

struct TableSource {
    std::string chartab_path;
    bool dixon = false;
    bool none = false;
};

/// Thrown for failed verifications that already printed their report.
struct VerificationFailed {};

Limits limits_of(const Common& c) {
    Limits l = Limits::defaults();
    if (c.max_order) l.max_order = c.max_order;
    if (c.max_lattice) l.max_lattice = c.max_lattice;
    if (c.seed) l.seed = *c.seed;
    return l;
}

Group load_group(const Common& c, std::ostream& err) {
    const std::string text = read_file(c.group_path);
    Group g = [&] {
        try {
            return parse_group(text, limits_of(c));
        } catch (const ParseError& e) {
            throw ParseError(c.group_path + ": " + e.what(), e.offset(), e.expected());
        }
    }();
    if (g.source_index()[0] != 0)
        err << "note: identity is input element " << g.source_index()[0] << "; it was swapped with element 0\n";
    return g;
}

std::optional<CharacterTable> load_table(const Group& g, const TableSource& src) {
    if (!src.chartab_path.empty()) {
        try {
            return parse_character_table(g, read_file(src.chartab_path));
        } catch (const ParseError& e) {
            throw ParseError(src.chartab_path + ": " + e.what(), e.offset(), e.expected());
        } catch (const InvariantViolation& e) {
            throw InvariantViolation(src.chartab_path + ": " + e.what());
        }
    }
    if (src.none) return std::nullopt;
    return dixon_character_table(g);
}

void add_table_options(CLI::App* app, TableSource& src) {
    auto* file = app->add_option("--chartab", src.chartab_path, "Character table file")->check(CLI::ExistingFile);
    auto* dixon = app->add_flag("--dixon", src.dixon, "Compute the character table (default)");
    auto* none = app->add_flag("--no-characters", src.none, "Work without a character table");
    file->excludes(dixon)->excludes(none);
    dixon->excludes(none);
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("group", c.group_path, "Group file (JSON)")->required()->check(CLI::ExistingFile);
    app->add_option("--max-order", c.max_order, "Largest accepted group order");
    app->add_option("--max-lattice", c.max_lattice, "Largest accepted lattice");
    app->add_option("--seed", c.seed, "Seed for sampled associativity checks on large tables");
}

std::vector<NormalSubgroup> resolve_all(const Group& g, const std::vector<std::string>& specs, const Limits& l) {
    std::vector<NormalSubgroup> out;
    for (const auto& s : specs) {
        auto part = resolve_subgroup_spec(g, s, l);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string describe_partition(const Group& g, const Partition& p) {
    std::string s;
    for (const auto& part : p) {
        s += "  {";
        for (std::size_t k = 0; k < part.size(); ++k) s += (k ? ", " : "") + g.label(part[k]);
        s += "}\n";
    }
    return s;
}

std::string describe_index_sets(const std::vector<std::vector<std::size_t>>& sets, const char* prefix) {
    std::string s;
    for (const auto& set : sets) {
        s += "  {";
        for (std::size_t k = 0; k < set.size(); ++k) s += (k ? ", " : "") + std::string(prefix) + std::to_string(set[k] + 1);
        s += "}\n";
    }
    return s;
}

void emit_theory(const Group& g, const SupercharacterTheory& th, const std::string& format, std::ostream& out) {
    const auto captions = pattern_captions(g, th.lattice);
    if (format == "json")
        out << render_json(g, th);
    else if (format == "latex")
        out << render_latex(g, th, captions);
    else
        out << render_text(g, th, captions);
}

int cmd_info(const Common& c, std::ostream& out, std::ostream& err) {
    const Group g = load_group(c, err);
    const auto cls = conjugacy_classes(g);
    const auto normals = all_normal_subgroups(g, limits_of(c));
    out << "order: " << g.order() << "\n";
    out << "exponent: " << g.exponent() << "\n";
    out << "classes: " << cls.count() << "\n";
    out << "normal subgroups: " << normals.size() << "\n";
    if (g.source_index()[0] != 0) out << "relabeled: input element " << g.source_index()[0] << " is element 0\n";
    if (g.unitriangular())
        out << "unitriangular: n=" << g.unitriangular()->dim << " p=" << g.unitriangular()->prime << "\n";
    return kOk;
}

int cmd_nsct(const Common& c, const TableSource& src, const std::vector<std::string>& specs,
             const std::string& format, std::ostream& out, std::ostream& err) {
    const Group g = load_group(c, err);
    const Limits l = limits_of(c);
    const auto s = resolve_all(g, specs, l);
    const auto t = load_table(g, src);
    const auto th = build_nsct(g, s, t ? &*t : nullptr, l);
    emit_theory(g, th, format, out);
    if (t) {
        const auto report = verify_sct(g, th, *t);
        if (format == "text") out << "\n" << report.to_text();
        if (!report.ok()) {
            err << report.to_text();
            return kVerificationFailed;
        }
    }
    return kOk;
}

int cmd_finest(const Common& c, const TableSource& src, const std::string& method, const std::string& format,
               std::ostream& out, std::ostream& err) {
    const Group g = load_group(c, err);
    const Limits l = limits_of(c);
    if (method == "closure") {
        out << "superclasses by normal closure:\n" << describe_partition(g, finest_by_closure(g));
        return kOk;
    }
    TableSource with_table = src;
    if (with_table.none) {
        err << "method " << method << " needs a character table\n";
        return kInputError;
    }
    const CharacterTable t = *load_table(g, with_table);
    if (method == "idempotents") {
        out << "superclasses by idempotent support:\n" << describe_partition(g, finest_by_idempotents(g, t));
        return kOk;
    }
    if (method == "grouping") {
        const auto grouping = finest_by_table_grouping(t);
        out << "column groups:\n" << describe_partition(g, grouping.column_elements);
        out << "row groups:\n" << describe_index_sets(grouping.rows, "chi");
        return kOk;
    }

    const Partition by_closure = finest_by_closure(g);
    const Partition by_idempotents = finest_by_idempotents(g, t);
    const auto grouping = finest_by_table_grouping(t);
    const auto th = finest_theory(g, &t, l);

    std::vector<std::vector<std::size_t>> faithful;
    for (auto& p : faithful_partition(g, t)) faithful.push_back(p.irreducibles);
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& p : th.char_parts) parts.push_back(p.irreducibles);
    std::vector<std::vector<std::size_t>> rows = grouping.rows;
    std::sort(faithful.begin(), faithful.end());
    std::sort(parts.begin(), parts.end());
    std::sort(rows.begin(), rows.end());
    Partition theory_classes;
    for (const auto& sc : th.superclasses) theory_classes.push_back(sc.elements);
    theory_classes = canonical(std::move(theory_classes));

    struct Line {
        const char* name;
        bool ok;
    };
    const Line lines[] = {
        {"closure = idempotents", by_closure == by_idempotents},
        {"closure = table grouping (columns)", by_closure == grouping.column_elements},
        {"closure = superclasses of the full lattice", by_closure == theory_classes},
        {"faithful partition = character parts", faithful == parts},
        {"table grouping (rows) = character parts", rows == parts},
    };
    bool all_ok = true;
    std::ostringstream report;
    for (const auto& line : lines) {
        report << (line.ok ? "agree    " : "DISAGREE ") << line.name << "\n";
        all_ok = all_ok && line.ok;
    }
    if (format == "text") out << report.str() << "\n";
    emit_theory(g, th, format, out);
    if (!all_ok) {
        err << report.str();
        return kVerificationFailed;
    }
    return kOk;
}

int cmd_lattice(const Common& c, const std::vector<std::string>& specs, std::string format, bool dot,
                std::ostream& out, std::ostream& err) {
    const Group g = load_group(c, err);
    const Limits l = limits_of(c);
    const auto lat = closure(g, resolve_all(g, specs, l), l);
    const auto captions = pattern_captions(g, lat);
    if (dot) format = "dot";
    if (format == "dot") {
        out << to_dot(lat, captions);
    } else if (format == "json") {
        out << to_json(g, lat);
    } else {
        out << "nodes: " << lat.size() << "\n";
        for (std::size_t i = 0; i < lat.size(); ++i) {
            out << "  N" << i + 1 << " |N|=" << lat.nodes[i].order();
            if (!captions[i].empty()) out << " " << captions[i];
            out << "\n";
        }
        out << "covering pairs: " << lat.hasse.size() << "\n";
        for (auto [a, b] : lat.hasse) out << "  N" << a + 1 << " < N" << b + 1 << "\n";
    }
    return kOk;
}

int cmd_chartab(const Common& c, const std::string& check_path, bool idempotents, const std::string& format,
                std::ostream& out, std::ostream& err) {
    const Group g = load_group(c, err);
    CharacterTable t;
    if (!check_path.empty()) {
        try {
            t = parse_character_table(g, read_file(check_path));
        } catch (const InvariantViolation& e) {
            out << "invalid: " << e.what() << "\n";
            err << check_path << ": " << e.what() << "\n";
            return kVerificationFailed;
        } catch (const ParseError& e) {
            throw ParseError(check_path + ": " + e.what(), e.offset(), e.expected());
        }
        out << "valid: " << t.size() << " irreducible characters\n";
        if (format != "json") return kOk;
    } else {
        t = dixon_character_table(g);
    }
    if (idempotents) {
        const auto failures = check_central_idempotents(g, t);
        for (const auto& f : failures) out << "FAIL " << f << "\n";
        out << (failures.empty() ? "central idempotent identities hold\n" : "");
        if (!failures.empty()) return kVerificationFailed;
    }
    if (format == "json")
        out << write_character_table(g, t);
    else
        out << render_character_table(g, t);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal supercharacter theories of finite groups", "nsct"};
    app.require_subcommand(1);

    Common common;
    TableSource src;
    std::vector<std::string> specs;
    std::string format = "text";
    std::string method = "all";
    std::string check_path;
    bool dot = false;
    bool idempotents = false;

    auto* info = app.add_subcommand("info", "Summarize a group");
    add_common(info, common);

    auto* nsct = app.add_subcommand("nsct", "Build the theory generated by normal subgroups");
    add_common(nsct, common);
    add_table_options(nsct, src);
    nsct->add_option("--subgroups", specs, "gen:i,j,...  pattern:(i,j),...  all");
    nsct->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

    auto* finest = app.add_subcommand("finest", "Build the finest normal supercharacter theory");
    add_common(finest, common);
    add_table_options(finest, src);
    finest->add_option("--method", method, "closure, idempotents, grouping or all")
        ->check(CLI::IsMember({"closure", "idempotents", "grouping", "all"}));
    finest->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

    auto* lattice = app.add_subcommand("lattice", "Print the lattice A(S)");
    add_common(lattice, common);
    lattice->add_option("--subgroups", specs, "gen:i,j,...  pattern:(i,j),...  all");
    lattice->add_flag("--dot", dot, "Graphviz output");
    lattice->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

    auto* chartab = app.add_subcommand("chartab", "Compute or check a character table");
    add_common(chartab, common);
    chartab->add_flag("--dixon", src.dixon, "Compute the table (default)");
    chartab->add_option("--check", check_path, "Validate a character table file")->check(CLI::ExistingFile);
    chartab->add_flag("--idempotents", idempotents, "Check central idempotent identities (order <= 24)");
    chartab->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (info->parsed()) return cmd_info(common, out, err);
        if (nsct->parsed()) return cmd_nsct(common, src, specs, format, out, err);
        if (finest->parsed()) return cmd_finest(common, src, method, format, out, err);
        if (lattice->parsed()) return cmd_lattice(common, specs, format, dot, out, err);
        if (chartab->parsed()) return cmd_chartab(common, check_path, idempotents, format, out, err);
    } catch (const ConsistencyFailure& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const InternalCheckFailed& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace nsct::cli
