#include "nsct/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nsct {

NodeCaptions pattern_captions(const Group& g, const NormalLattice& l) {
    NodeCaptions out(l.size());
    const auto& ut = g.unitriangular();
    if (!ut) return out;
    for (std::size_t i = 0; i < l.size(); ++i) {
        std::vector<std::pair<int, int>> used;
        for (std::size_t k = 0; k < ut->positions.size(); ++k)
            for (Element x : l.nodes[i].members())
                if (ut->coords[x][k] != 0) {
                    used.push_back(ut->positions[k]);
                    break;
                }
        try {
            if (!(pattern_subgroup(g, used) == l.nodes[i])) continue;
        } catch (const std::exception&) {
            continue;
        }
        std::string s = "{";
        for (std::size_t k = 0; k < used.size(); ++k)
            s += (k ? "," : "") + std::string("(") + std::to_string(used[k].first) + "," +
                 std::to_string(used[k].second) + ")";
        out[i] = s + "}";
    }
    return out;
}

namespace {

std::string element_set(const Group& g, const std::vector<Element>& elems, std::size_t limit = 12) {
    std::string s = "{";
    for (std::size_t k = 0; k < elems.size() && k < limit; ++k) s += (k ? ", " : "") + g.label(elems[k]);
    if (elems.size() > limit) s += ", ... (" + std::to_string(elems.size()) + " elements)";
    return s + "}";
}

std::string node_name(const SupercharacterTheory& th, std::size_t node, const NodeCaptions& captions) {
    std::string s = "N" + std::to_string(node + 1) + " |N|=" + std::to_string(th.lattice.nodes[node].order());
    if (node < captions.size() && !captions[node].empty()) s += " " + captions[node];
    return s;
}

}  // namespace

std::string render_text(const Group& g, const SupercharacterTheory& th, const NodeCaptions& captions) {
    std::ostringstream os;
    os << "normal supercharacter theory: " << th.size() << " parts, lattice of " << th.lattice.size() << " nodes\n";
    for (std::size_t j = 0; j < th.size(); ++j) {
        const auto& sc = th.superclasses[j];
        os << "K" << j + 1 << " = (" << node_name(th, sc.node, captions) << ")°: " << element_set(g, sc.elements)
           << "\n";
    }
    for (std::size_t i = 0; i < th.row_nodes.size(); ++i) {
        os << "X" << i + 1 << " = X^(" << node_name(th, th.row_nodes[i], captions) << ")•";
        if (th.has_characters) {
            os << ": {";
            const auto& ir = th.char_parts[i].irreducibles;
            for (std::size_t k = 0; k < ir.size(); ++k) os << (k ? ", " : "") << "chi" << ir[k] + 1;
            os << "}";
        }
        os << "\n";
    }
    std::size_t width = 4;
    for (const auto& row : th.table)
        for (auto v : row) width = std::max(width, std::to_string(v).size() + 1);
    os << "\n" << std::setw(5) << "";
    for (std::size_t j = 0; j < th.size(); ++j) os << std::setw(static_cast<int>(width)) << "K" + std::to_string(j + 1);
    os << "\n";
    for (std::size_t i = 0; i < th.table.size(); ++i) {
        os << std::left << std::setw(5) << "X" + std::to_string(i + 1) << std::right;
        for (auto v : th.table[i]) os << std::setw(static_cast<int>(width)) << v;
        os << "\n";
    }
    return os.str();
}

std::string render_json(const Group& g, const SupercharacterTheory& th) {
    nlohmann::ordered_json doc;
    doc["superclasses"] = nlohmann::ordered_json::array();
    for (const auto& sc : th.superclasses) {
        std::vector<Element> elems;
        for (Element x : sc.elements) elems.push_back(g.source_index()[x]);
        std::sort(elems.begin(), elems.end());
        doc["superclasses"].push_back({{"N", sc.node}, {"elements", elems}});
    }
    doc["rows"] = th.row_nodes;
    doc["char_parts"] = nlohmann::ordered_json::array();
    for (const auto& p : th.char_parts) doc["char_parts"].push_back({{"N", p.node}, {"irreducibles", p.irreducibles}});
    doc["table"] = th.table;
    return doc.dump() + "\n";
}

std::string render_latex(const Group&, const SupercharacterTheory& th, const NodeCaptions& captions) {
    std::ostringstream os;
    os << "\\[\n\\begin{array}{r|" << std::string(th.size(), 'r') << "}\n";
    auto label = [&](std::size_t node) {
        std::string s = "N_{" + std::to_string(node + 1) + "}";
        if (node < captions.size() && !captions[node].empty()) {
            std::string c = captions[node];
            std::string esc;
            for (char ch : c) {
                if (ch == '{') esc += "\\{";
                else if (ch == '}') esc += "\\}";
                else esc += ch;
            }
            s += "\\,\\mathrm{" + esc + "}";
        }
        return s;
    };
    os << " ";
    for (const auto& sc : th.superclasses) os << " & " << "(" << label(sc.node) << ")^{\\circ}";
    os << " \\\\\n\\hline\n";
    for (std::size_t i = 0; i < th.size(); ++i) {
        os << "\\chi^{" << label(th.row_nodes[i]) << "^{\\bullet}}";
        for (auto v : th.table[i]) os << " & " << v;
        os << " \\\\\n";
    }
    os << "\\end{array}\n\\]\n";
    return os.str();
}

std::string render_character_table(const Group& g, const CharacterTable& t) {
    std::vector<std::vector<std::string>> cells(t.size() + 2, std::vector<std::string>(t.classes.count() + 1));
    cells[0][0] = "class";
    cells[1][0] = "size";
    for (std::size_t c = 0; c < t.classes.count(); ++c) {
        cells[0][c + 1] = g.label(t.classes.reps[c]);
        cells[1][c + 1] = std::to_string(t.classes.sizes[c]);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        cells[i + 2][0] = "chi" + std::to_string(i + 1);
        for (std::size_t c = 0; c < t.classes.count(); ++c) cells[i + 2][c + 1] = format_cyc(t.values[i][c]);
    }
    std::vector<std::size_t> width(t.classes.count() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            os << std::setw(static_cast<int>(width[c])) << (c ? std::right : std::left) << row[c];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace nsct
