#include "nsct/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nsct/error.hpp"

namespace nsct {

namespace {

const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("group: missing key \"") + key + "\"", 0, {key});
    return doc.at(key);
}

std::size_t unsigned_field(const nlohmann::json& doc, const char* key) {
    const auto& v = field(doc, key);
    if (!v.is_number_unsigned()) throw ParseError(std::string("group: \"") + key + "\" must be a non-negative integer", 0);
    return v.get<std::size_t>();
}

template <typename T>
std::vector<std::vector<T>> int_rows(const nlohmann::json& v, const char* key) {
    if (!v.is_array()) throw ParseError(std::string("group: \"") + key + "\" must be an array of arrays", 0);
    std::vector<std::vector<T>> rows;
    for (const auto& row : v) {
        if (!row.is_array()) throw ParseError(std::string("group: \"") + key + "\" must be an array of arrays", 0);
        std::vector<T> out;
        for (const auto& x : row) {
            if (!x.is_number_unsigned()) throw ParseError(std::string("group: \"") + key + "\" entries must be indices", 0);
            out.push_back(x.get<T>());
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

}  // namespace

Group parse_group(std::string_view json_text, const Limits& limits) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("group: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    if (!doc.is_object()) throw ParseError("group: document must be an object", 0);
    const auto& kind = field(doc, "kind");
    if (!kind.is_string()) throw ParseError("group: \"kind\" must be a string", 0);
    const std::string k = kind.get<std::string>();
    if (k == "cayley") {
        const std::size_t n = unsigned_field(doc, "order");
        auto table = int_rows<Element>(field(doc, "table"), "table");
        if (table.size() != n) throw NotAGroup("table has " + std::to_string(table.size()) + " rows, order is " + std::to_string(n));
        for (const auto& row : table)
            if (row.size() != n) throw NotAGroup("table is not square");
        return build_from_cayley(table, limits);
    }
    if (k == "permutations") {
        const std::size_t d = unsigned_field(doc, "degree");
        return build_from_permutations(d, int_rows<std::size_t>(field(doc, "generators"), "generators"), limits);
    }
    if (k == "unitriangular") {
        const std::size_t n = unsigned_field(doc, "n");
        const std::size_t p = unsigned_field(doc, "p");
        return build_unitriangular(static_cast<int>(n), static_cast<int>(p), limits);
    }
    throw ParseError("group: unknown kind \"" + k + "\"", 0, {"cayley", "permutations", "unitriangular"});
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::pair<int, int>> parse_positions(std::string_view text) {
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("position list: expected '" + std::string(1, c) + "' at offset " + std::to_string(pos),
                             pos, {std::string("'") + c + "'"});
        ++pos;
    };
    auto number = [&] {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || pos - start > 3)
            throw ParseError("position list: expected a small number at offset " + std::to_string(start), start, {"digit"});
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    skip();
    if (pos == text.size()) return out;
    for (;;) {
        expect('(');
        const int i = number();
        expect(',');
        const int j = number();
        expect(')');
        out.emplace_back(i, j);
        skip();
        if (pos == text.size()) return out;
        expect(',');
    }
}

std::vector<NormalSubgroup> resolve_subgroup_spec(const Group& g, std::string_view spec, const Limits& limits) {
    if (spec == "all") return all_normal_subgroups(g, limits);
    if (spec.rfind("gen:", 0) == 0) {
        std::vector<Element> from_source(g.order());
        for (Element x = 0; x < g.order(); ++x) from_source[g.source_index()[x]] = x;
        std::vector<Element> seed;
        std::string_view rest = spec.substr(4);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t comma = std::min(rest.find(',', pos), rest.size());
            const std::string item(rest.substr(pos, comma - pos));
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("subgroup spec \"" + std::string(spec) + "\": bad element index \"" + item + "\"",
                                 4 + pos, {"element index"});
            const unsigned long idx = std::stoul(item);
            if (idx >= g.order())
                throw ParseError("subgroup spec \"" + std::string(spec) + "\": element " + item + " out of range",
                                 4 + pos, {"element index below " + std::to_string(g.order())});
            seed.push_back(from_source[idx]);
            pos = comma + 1;
        }
        return {normal_closure(g, seed)};
    }
    if (spec.rfind("pattern:", 0) == 0) return {pattern_subgroup(g, parse_positions(spec.substr(8)))};
    throw ParseError("unknown subgroup spec \"" + std::string(spec) + "\"", 0, {"gen:", "pattern:", "all"});
}

}  // namespace nsct
