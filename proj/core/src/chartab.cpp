#include "nsct/chartab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nsct/error.hpp"

namespace nsct {

Partition canonical(Partition p) {
    for (auto& part : p) std::sort(part.begin(), part.end());
    std::erase_if(p, [](const auto& part) { return part.empty(); });
    std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

namespace {

std::string pair_name(const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool is_trivial_row(const std::vector<CycNum>& row) {
    return std::all_of(row.begin(), row.end(), [](const CycNum& v) { return v == CycNum(1); });
}

bool row_less(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == b[k]) continue;
        return lex_less(a[k], b[k]);
    }
    return false;
}

}  // namespace

void canonicalize_rows(CharacterTable& t) {
    std::vector<std::size_t> order(t.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<char> trivial(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) trivial[i] = is_trivial_row(t.values[i]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
        if (trivial[a] != trivial[b]) return trivial[a] > trivial[b];
        return row_less(t.values[a], t.values[b]);
    });
    std::vector<std::vector<CycNum>> values;
    std::vector<long long> degrees;
    for (auto i : order) {
        values.push_back(std::move(t.values[i]));
        degrees.push_back(t.degrees[i]);
    }
    t.values = std::move(values);
    t.degrees = std::move(degrees);
}

void validate_character_table(const CharacterTable& t) {
    const std::size_t r = t.classes.count();
    const auto n = static_cast<long long>(t.group_order);
    if (t.values.size() != r) throw InvariantViolation("number of characters differs from number of classes");
    if (t.degrees.size() != r) throw InvariantViolation("degree list length differs from number of classes");
    std::size_t total = 0;
    for (auto s : t.classes.sizes) total += s;
    if (total != t.group_order) throw InvariantViolation("class sizes do not sum to the group order");
    if (r == 0 || t.classes.sizes[0] != 1 || t.classes.reps[0] != 0)
        throw InvariantViolation("first class is not the identity");
    for (std::size_t i = 0; i < r; ++i) {
        if (t.values[i].size() != r) throw InvariantViolation("row " + std::to_string(i + 1) + " has wrong length");
        for (const auto& v : t.values[i])
            if (v.conductor() != t.conductor)
                throw InvariantViolation("row " + std::to_string(i + 1) + " has a value outside the table conductor");
        const CycNum& d = t.values[i][0];
        if (!d.is_rational() || !is_integer(d.as_rational()) || d.as_rational() <= 0 ||
            d.as_rational() != t.degrees[i])
            throw InvariantViolation("degree of row " + std::to_string(i + 1) + " is not a positive integer");
    }
    long long sum_sq = 0;
    for (auto d : t.degrees) sum_sq += d * d;
    if (sum_sq != n) throw InvariantViolation("sum of squared degrees " + std::to_string(sum_sq) +
                                               " differs from group order " + std::to_string(n));
    if (!is_trivial_row(t.values[0])) throw InvariantViolation("first row is not the trivial character");

    std::vector<std::vector<CycNum>> conj(r, std::vector<CycNum>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < r; ++c) conj[i][c] = complex_conjugate(t.values[i][c]);

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            CycNum s(0);
            for (std::size_t c = 0; c < r; ++c)
                s += CycNum(static_cast<long long>(t.classes.sizes[c])) * t.values[i][c] * conj[j][c];
            if (!(s == CycNum(i == j ? n : 0))) throw InvariantViolation(pair_name("row orthogonality", i, j));
        }
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = c; d < r; ++d) {
            CycNum s(0);
            for (std::size_t i = 0; i < r; ++i) s += t.values[i][c] * conj[i][d];
            const Rational expect = c == d ? Rational(n, static_cast<long long>(t.classes.sizes[c])) : Rational(0);
            if (!(s == CycNum(expect))) throw InvariantViolation(pair_name("column orthogonality", c, d));
        }
}

NormalSubgroup kernel(const Group& g, const CharacterTable& t, std::size_t chi) {
    if (chi >= t.size()) throw InvalidArgument("character index out of range");
    const CycNum degree(t.degrees[chi]);
    Mask m(g.order());
    for (Element x = 0; x < g.order(); ++x)
        if (t.value(chi, x) == degree) m.set(x);
    return NormalSubgroup::checked(g, std::move(m));
}

Rational quotient_regular_value(const Group& g, const NormalSubgroup& n, Element x) {
    if (!n.contains(x)) return Rational(0);
    return Rational(static_cast<long long>(g.order()), static_cast<long long>(n.order()));
}

IdempotentSupport idempotent_supports(const CharacterTable& t) {
    IdempotentSupport s;
    s.class_of = t.classes.class_of;
    s.per_class.assign(t.classes.count(), Mask(t.size()));
    for (std::size_t c = 0; c < t.classes.count(); ++c)
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!(t.values[i][c] == CycNum(t.degrees[i]))) s.per_class[c].set(i);
    return s;
}

Partition k_classes(const CharacterTable& t) {
    const IdempotentSupport s = idempotent_supports(t);
    std::map<Mask, std::vector<Element>> groups;
    for (Element x = 0; x < s.class_of.size(); ++x) groups[s.of(x)].push_back(x);
    Partition p;
    for (auto& [mask, elems] : groups) p.push_back(std::move(elems));
    return canonical(std::move(p));
}

std::vector<std::string> check_central_idempotents(const Group& g, const CharacterTable& t, std::size_t max_order) {
    const std::size_t n = g.order();
    if (n > max_order)
        throw GroupTooLarge("idempotent check is limited to order " + std::to_string(max_order));
    using Algebra = std::vector<CycNum>;
    auto product = [&](const Algebra& a, const Algebra& b) {
        Algebra c(n, CycNum(0).rebase(t.conductor));
        for (Element x = 0; x < n; ++x) {
            if (a[x].is_zero()) continue;
            for (Element y = 0; y < n; ++y)
                if (!b[y].is_zero()) c[g.mul(x, y)] += a[x] * b[y];
        }
        return c;
    };
    std::vector<Algebra> e(t.size(), Algebra(n));
    for (std::size_t i = 0; i < t.size(); ++i)
        for (Element x = 0; x < n; ++x)
            e[i][x] = t.value(i, g.inv(x)) * CycNum(Rational(t.degrees[i], static_cast<long long>(n)));

    std::vector<std::string> failures;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            Algebra p = product(e[i], e[j]);
            for (Element x = 0; x < n; ++x) {
                const CycNum expect = i == j ? e[i][x] : CycNum(0);
                if (!(p[x] == expect)) {
                    failures.push_back(pair_name("idempotent product", i, j));
                    break;
                }
            }
        }
    for (std::size_t c = 0; c < t.classes.count(); ++c) {
        Algebra rhs(n, CycNum(0));
        for (std::size_t i = 0; i < t.size(); ++i) {
            const CycNum coef = t.values[i][c] *
                                CycNum(Rational(static_cast<long long>(t.classes.sizes[c]), t.degrees[i]));
            for (Element x = 0; x < n; ++x) rhs[x] += coef * e[i][x];
        }
        for (Element x = 0; x < n; ++x) {
            const CycNum expect(t.classes.class_of[x] == c ? 1 : 0);
            if (!(rhs[x] == expect)) {
                failures.push_back("class sum expansion for class " + std::to_string(c + 1));
                break;
            }
        }
    }
    return failures;
}

// ---------------------------------------------------------------------------

CharacterTable parse_character_table(const Group& g, std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("character table: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    auto require = [&](const char* key) -> const nlohmann::json& {
        if (!doc.is_object() || !doc.contains(key))
            throw ParseError(std::string("character table: missing key \"") + key + "\"", 0, {key});
        return doc.at(key);
    };
    const auto& order = require("order");
    const auto& conductor = require("conductor");
    const auto& classes = require("classes");
    const auto& chars = require("chars");
    if (!order.is_number_unsigned() || order.get<std::size_t>() != g.order())
        throw InvariantViolation("order does not match the group");
    if (!conductor.is_number_unsigned() || conductor.get<std::size_t>() != g.exponent())
        throw InvariantViolation("conductor must equal the group exponent " + std::to_string(g.exponent()));
    if (!classes.is_array() || !chars.is_array()) throw ParseError("character table: classes/chars must be arrays", 0);

    CharacterTable t;
    t.group_order = g.order();
    t.conductor = static_cast<unsigned>(g.exponent());
    t.classes = conjugacy_classes(g);
    const std::size_t r = t.classes.count();
    if (classes.size() != r)
        throw InvariantViolation("file lists " + std::to_string(classes.size()) + " classes, group has " +
                                 std::to_string(r));

    std::vector<Element> from_source(g.order());
    for (Element x = 0; x < g.order(); ++x) from_source[g.source_index()[x]] = x;

    std::vector<std::size_t> column_class(r);
    std::vector<char> used(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        const auto& c = classes[k];
        if (!c.is_object() || !c.contains("rep") || !c.contains("size") || !c["rep"].is_number_unsigned() ||
            !c["size"].is_number_unsigned())
            throw ParseError("character table: class " + std::to_string(k + 1) + " needs rep and size", 0);
        const auto rep = c["rep"].get<std::size_t>();
        if (rep >= g.order()) throw InvariantViolation("class rep " + std::to_string(rep) + " out of range");
        const std::size_t cls = t.classes.class_of[from_source[rep]];
        if (used[cls]) throw InvariantViolation("class of rep " + std::to_string(rep) + " listed twice");
        if (c["size"].get<std::size_t>() != t.classes.sizes[cls])
            throw InvariantViolation("class of rep " + std::to_string(rep) + " has size " +
                                     std::to_string(t.classes.sizes[cls]));
        used[cls] = 1;
        column_class[k] = cls;
    }

    if (chars.size() != r) throw InvariantViolation("number of characters differs from number of classes");
    t.values.assign(r, std::vector<CycNum>(r));
    for (std::size_t i = 0; i < r; ++i) {
        if (!chars[i].is_array() || chars[i].size() != r)
            throw InvariantViolation("row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t k = 0; k < r; ++k) {
            const auto& cell = chars[i][k];
            CycNum v;
            if (cell.is_string()) {
                try {
                    v = parse_cyc(cell.get<std::string>());
                } catch (const ParseError& e) {
                    throw ParseError("character table entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(k + 1) + "): " + e.what(),
                                     e.offset(), e.expected());
                }
            } else if (cell.is_number_integer()) {
                v = CycNum(cell.get<long long>());
            } else {
                throw ParseError("character table entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                     ") must be a string or integer",
                                 0);
            }
            try {
                t.values[i][column_class[k]] = v.rebase(t.conductor);
            } catch (const ConductorMismatch&) {
                throw InvariantViolation("entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                         ") lies outside Q(E(" + std::to_string(t.conductor) + "))");
            }
        }
    }
    t.degrees.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        const CycNum& d = t.values[i][0];
        if (!d.is_rational() || !is_integer(d.as_rational()) || d.as_rational() <= 0)
            throw InvariantViolation("degree of row " + std::to_string(i + 1) + " is not a positive integer");
        t.degrees[i] = static_cast<long long>(numerator(d.as_rational()));
    }
    canonicalize_rows(t);
    validate_character_table(t);
    return t;
}

std::string write_character_table(const Group& g, const CharacterTable& t) {
    std::ostringstream os;
    os << "{\n  \"order\": " << t.group_order << ",\n  \"conductor\": " << t.conductor << ",\n  \"classes\": [";
    for (std::size_t c = 0; c < t.classes.count(); ++c) {
        os << (c ? ", " : "") << "{\"rep\": " << g.source_index()[t.classes.reps[c]]
           << ", \"size\": " << t.classes.sizes[c] << "}";
    }
    os << "],\n  \"chars\": [\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << "    [";
        for (std::size_t c = 0; c < t.classes.count(); ++c)
            os << (c ? ", " : "") << nlohmann::json(format_cyc(t.values[i][c])).dump();
        os << "]" << (i + 1 < t.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

}  // namespace nsct
