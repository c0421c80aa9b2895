#include "nsct/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "nsct/error.hpp"

namespace nsct {

namespace {

constexpr std::size_t kDefaultMaxOrder = 4096;
constexpr std::size_t kExhaustiveAssociativityLimit = 512;
constexpr std::size_t kSampledAssociativityChecks = 400000;

std::vector<Element> generated_subgroup(const Group& g, const std::vector<Element>& gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Element> out{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (Element s : gens) {
            Element y = g.mul(out[i], s);
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    }
    return out;
}

Mask to_mask(std::size_t n, const std::vector<Element>& elems) {
    Mask m(n);
    for (Element e : elems) m.set(e);
    return m;
}

std::string permutation_label(const std::vector<std::size_t>& perm) {
    std::vector<char> seen(perm.size(), 0);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i) continue;
        any = true;
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) os << ' ';
            os << j;
            first = false;
            j = perm[j];
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

}  // namespace

Limits Limits::defaults() {
    Limits l{kDefaultMaxOrder};
    if (const char* env = std::getenv("NSCT_MAX_ORDER")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) l.max_order = static_cast<std::size_t>(v);
    }
    return l;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Group::Group(std::size_t order, std::vector<Element> table, std::vector<std::string> labels, std::uint64_t seed)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = order_;
    if (n == 0) throw NotAGroup("empty table");
    if (table_.size() != n * n) throw NotAGroup("table is not square");
    for (Element e : table_)
        if (e >= n) throw NotAGroup("table entry " + std::to_string(e) + " out of range");
    if (!labels_.empty() && labels_.size() != n) throw InvalidArgument("label count differs from group order");

    for (Element g = 0; g < n; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g)
            throw NotAGroup("element 0 is not an identity: fails at g=" + std::to_string(g));
    }
    inverse_.assign(n, 0);
    for (Element g = 0; g < n; ++g) {
        bool found = false;
        for (Element h = 0; h < n; ++h) {
            if (mul(g, h) == 0) {
                if (mul(h, g) != 0) continue;
                inverse_[g] = h;
                found = true;
                break;
            }
        }
        if (!found) throw NotAGroup("element " + std::to_string(g) + " has no two-sided inverse");
    }

    auto check = [&](Element a, Element b, Element c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            std::ostringstream os;
            os << "associativity fails at (a,b,c) = (" << a << "," << b << "," << c << ")";
            throw NotAGroup(os.str());
        }
    };
    if (n <= kExhaustiveAssociativityLimit) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(seed ^ n);
        std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
        for (std::size_t k = 0; k < kSampledAssociativityChecks; ++k) check(pick(rng), pick(rng), pick(rng));
    }

    source_index_.resize(n);
    std::iota(source_index_.begin(), source_index_.end(), Element{0});
    finish();
}

void Group::finish() {
    const std::size_t n = order_;
    element_order_.assign(n, 1);
    exponent_ = 1;
    for (Element g = 0; g < n; ++g) {
        std::size_t k = 1;
        Element x = g;
        while (x != 0) {
            x = mul(x, g);
            ++k;
        }
        element_order_[g] = k;
        exponent_ = std::lcm(exponent_, element_order_[g]);
    }
    generators_.clear();
    std::vector<char> in_sub(n, 0);
    in_sub[0] = 1;
    for (Element g = 0; g < n; ++g) {
        if (in_sub[g]) continue;
        generators_.push_back(g);
        for (Element x : generated_subgroup(*this, generators_)) in_sub[x] = 1;
    }
}

Element Group::power(Element g, long long k) const {
    const long long o = static_cast<long long>(element_order_[g]);
    k %= o;
    if (k < 0) k += o;
    Element result = 0;
    Element base = g;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::string Group::label(Element g) const {
    if (!labels_.empty()) return labels_[g];
    return std::to_string(g);
}

// ---------------------------------------------------------------------------

NormalSubgroup NormalSubgroup::checked(const Group& g, Mask mask) {
    if (mask.size() != g.order()) throw InvalidArgument("mask length differs from group order");
    if (auto why = subgroup_violation(g, mask)) throw NotASubgroup(*why);
    if (auto why = normality_violation(g, mask)) throw NotNormal(*why);
    return NormalSubgroup(std::move(mask));
}

NormalSubgroup NormalSubgroup::trusted(Mask mask) { return NormalSubgroup(std::move(mask)); }

NormalSubgroup NormalSubgroup::trivial(const Group& g) {
    Mask m(g.order());
    m.set(0);
    return NormalSubgroup(std::move(m));
}

NormalSubgroup NormalSubgroup::whole(const Group& g) {
    Mask m(g.order());
    m.set();
    return NormalSubgroup(std::move(m));
}

std::vector<Element> NormalSubgroup::members() const {
    std::vector<Element> out;
    out.reserve(order_);
    for (auto i = mask_.find_first(); i != Mask::npos; i = mask_.find_next(i))
        out.push_back(static_cast<Element>(i));
    return out;
}

std::strong_ordering operator<=>(const NormalSubgroup& a, const NormalSubgroup& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    if (a.mask_.size() != b.mask_.size()) return a.mask_.size() <=> b.mask_.size();
    Mask diff = a.mask_ ^ b.mask_;
    auto k = diff.find_first();
    if (k == Mask::npos) return std::strong_ordering::equal;
    // Equal cardinality: the set holding the first differing index has the
    // smaller element at the first differing position of the sorted lists.
    return a.mask_.test(k) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<std::string> subgroup_violation(const Group& g, const Mask& mask) {
    if (!mask.test(0)) return std::string("identity is not a member");
    std::vector<Element> elems;
    for (auto i = mask.find_first(); i != Mask::npos; i = mask.find_next(i)) elems.push_back(static_cast<Element>(i));
    for (Element a : elems) {
        if (!mask.test(g.inv(a)))
            return "inverse of member " + std::to_string(a) + " is missing";
        for (Element b : elems) {
            Element c = g.mul(a, b);
            if (!mask.test(c))
                return "product " + std::to_string(a) + "*" + std::to_string(b) + " = " + std::to_string(c) +
                       " is missing";
        }
    }
    return std::nullopt;
}

std::optional<std::string> normality_violation(const Group& g, const Mask& mask) {
    for (auto i = mask.find_first(); i != Mask::npos; i = mask.find_next(i)) {
        Element h = static_cast<Element>(i);
        for (Element x = 0; x < g.order(); ++x) {
            Element c = g.conj(x, h);
            if (!mask.test(c))
                return "conjugate of member " + std::to_string(h) + " by " + std::to_string(x) + " is " +
                       std::to_string(c) + ", not a member";
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Group build_from_cayley(const std::vector<std::vector<Element>>& table, const Limits& limits) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty table");
    if (n > limits.max_order)
        throw GroupTooLarge("order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_order));
    for (const auto& row : table)
        if (row.size() != n) throw NotAGroup("table is not square");

    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (Element g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) identity = e;
    }
    if (!identity) throw NotAGroup("no identity element");

    std::vector<Element> new_to_old(n);
    std::iota(new_to_old.begin(), new_to_old.end(), Element{0});
    std::swap(new_to_old[0], new_to_old[*identity]);
    std::vector<Element> old_to_new(n);
    for (Element i = 0; i < n; ++i) old_to_new[new_to_old[i]] = i;

    std::vector<Element> flat(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            Element v = table[new_to_old[a]][new_to_old[b]];
            if (v >= n) throw NotAGroup("table entry " + std::to_string(v) + " out of range");
            flat[a * n + b] = old_to_new[v];
        }
    Group g(n, std::move(flat), {}, limits.seed);
    g.source_index_ = new_to_old;
    return g;
}

Group build_from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators,
                              const Limits& limits) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& p = generators[k];
        if (p.size() != degree)
            throw NotABijection("generator " + std::to_string(k) + " has length " + std::to_string(p.size()));
        std::vector<char> hit(degree, 0);
        for (std::size_t v : p) {
            if (v >= degree || hit[v])
                throw NotABijection("generator " + std::to_string(k) + " is not a bijection on 0.." +
                                    std::to_string(degree == 0 ? 0 : degree - 1));
            hit[v] = 1;
        }
    }
    using Perm = std::vector<std::size_t>;
    auto compose = [&](const Perm& a, const Perm& b) {
        Perm c(degree);
        for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
        return c;
    };
    Perm id(degree);
    std::iota(id.begin(), id.end(), std::size_t{0});

    std::vector<Perm> elems{id};
    std::map<Perm, Element> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& s : generators) {
            Perm y = compose(elems[i], s);
            if (index.emplace(y, static_cast<Element>(elems.size())).second) {
                elems.push_back(std::move(y));
                if (elems.size() > limits.max_order)
                    throw GroupTooLarge("permutation group exceeds cap " + std::to_string(limits.max_order));
            }
        }
    }
    const std::size_t n = elems.size();
    std::vector<Element> flat(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elems) labels.push_back(permutation_label(p));
    return Group(n, std::move(flat), std::move(labels));
}

Group build_unitriangular(int dim, int prime, const Limits& limits) {
    if (dim < 2 || dim > 5) throw InvalidArgument("matrix size must be in 2..5");
    if (!is_prime(prime)) throw NotPrime(std::to_string(prime) + " is not prime");
    const int d = dim * (dim - 1) / 2;
    std::size_t n = 1;
    for (int k = 0; k < d; ++k) {
        n *= static_cast<std::size_t>(prime);
        if (n > limits.max_order)
            throw GroupTooLarge("UT_" + std::to_string(dim) + "(" + std::to_string(prime) +
                                ") exceeds cap " + std::to_string(limits.max_order));
    }

    UnitriangularInfo info;
    info.dim = dim;
    info.prime = prime;
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j) info.positions.emplace_back(i, j);
    info.coords.resize(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::vector<int> c(d);
        std::size_t v = idx;
        for (int k = d - 1; k >= 0; --k) {
            c[k] = static_cast<int>(v % prime);
            v /= prime;
        }
        info.coords[idx] = std::move(c);
    }

    auto slot = [&](int i, int j) { return (i - 1) * dim - (i - 1) * i / 2 + (j - i - 1); };
    auto encode = [&](const std::vector<int>& c) {
        std::size_t idx = 0;
        for (int x : c) idx = idx * prime + x;
        return static_cast<Element>(idx);
    };
    auto product = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // (I + A)(I + B) = I + A + B + AB; only strictly-upper entries matter.
        std::vector<int> c(d);
        for (int i = 1; i <= dim; ++i)
            for (int j = i + 1; j <= dim; ++j) {
                long long v = a[slot(i, j)] + b[slot(i, j)];
                for (int k = i + 1; k < j; ++k) v += static_cast<long long>(a[slot(i, k)]) * b[slot(k, j)];
                c[slot(i, j)] = static_cast<int>(v % prime);
            }
        return c;
    };

    std::vector<Element> flat(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = encode(product(info.coords[a], info.coords[b]));

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& c : info.coords) {
        std::ostringstream os;
        os << "u(";
        for (int k = 0; k < d; ++k) os << (k ? "," : "") << c[k];
        os << ')';
        labels.push_back(os.str());
    }
    Group g(n, std::move(flat), std::move(labels));
    g.ut_ = std::move(info);
    return g;
}

NormalSubgroup pattern_subgroup(const Group& g, const std::vector<std::pair<int, int>>& positions) {
    const auto& ut = g.unitriangular();
    if (!ut) throw InvalidArgument("pattern subgroups need a unitriangular group");
    std::vector<char> allowed(ut->positions.size(), 0);
    for (auto [i, j] : positions) {
        auto it = std::find(ut->positions.begin(), ut->positions.end(), std::make_pair(i, j));
        if (it == ut->positions.end())
            throw InvalidArgument("position (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not strictly upper-triangular in size " + std::to_string(ut->dim));
        allowed[it - ut->positions.begin()] = 1;
    }
    Mask m(g.order());
    for (std::size_t idx = 0; idx < g.order(); ++idx) {
        const auto& c = ut->coords[idx];
        bool inside = true;
        for (std::size_t k = 0; k < c.size() && inside; ++k) inside = allowed[k] || c[k] == 0;
        if (inside) m.set(idx);
    }
    return NormalSubgroup::checked(g, std::move(m));
}

ClassPartition conjugacy_classes(const Group& g) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Element>> orbits;
    for (Element x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<Element> orbit{x};
        seen[x] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (Element s : g.generators()) {
                Element y = g.conj(s, orbit[i]);
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    ClassPartition cp;
    cp.class_of.assign(n, 0);
    for (std::size_t c = 0; c < orbits.size(); ++c) {
        for (Element x : orbits[c]) cp.class_of[x] = c;
        cp.reps.push_back(orbits[c].front());
        cp.sizes.push_back(orbits[c].size());
    }
    cp.members = std::move(orbits);
    return cp;
}

NormalSubgroup normal_closure(const Group& g, const ClassPartition& classes, const std::vector<Element>& seed) {
    std::vector<char> taken(classes.count(), 0);
    std::vector<Element> gens;
    for (Element s : seed) {
        if (s >= g.order()) throw InvalidArgument("seed element " + std::to_string(s) + " out of range");
        std::size_t c = classes.class_of[s];
        if (c == 0 || taken[c]) continue;
        taken[c] = 1;
        gens.insert(gens.end(), classes.members[c].begin(), classes.members[c].end());
    }
    return NormalSubgroup::trusted(to_mask(g.order(), generated_subgroup(g, gens)));
}

NormalSubgroup normal_closure(const Group& g, const std::vector<Element>& seed) {
    return normal_closure(g, conjugacy_classes(g), seed);
}

NormalSubgroup subgroup_product(const Group& g, const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.is_subset_of(b)) return b;
    if (b.is_subset_of(a)) return a;
    Mask m(g.order());
    const auto am = a.members();
    const auto bm = b.members();
    for (Element x : am)
        for (Element y : bm) m.set(g.mul(x, y));
    return NormalSubgroup::trusted(std::move(m));
}

NormalSubgroup subgroup_intersection(const Group&, const NormalSubgroup& a, const NormalSubgroup& b) {
    return NormalSubgroup::trusted(a.mask() & b.mask());
}

std::vector<NormalSubgroup> all_normal_subgroups(const Group& g, const Limits& limits) {
    const ClassPartition classes = conjugacy_classes(g);
    std::vector<NormalSubgroup> atoms;
    {
        std::set<Mask> seen;
        for (std::size_t c = 1; c < classes.count(); ++c) {
            NormalSubgroup n = normal_closure(g, classes, {classes.reps[c]});
            if (seen.insert(n.mask()).second) atoms.push_back(std::move(n));
        }
    }
    std::vector<NormalSubgroup> found{NormalSubgroup::trivial(g)};
    std::set<Mask> seen{found.front().mask()};
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& atom : atoms) {
            if (atom.is_subset_of(found[i])) continue;
            NormalSubgroup joined = subgroup_product(g, found[i], atom);
            if (seen.insert(joined.mask()).second) {
                found.push_back(std::move(joined));
                if (found.size() > limits.max_lattice)
                    throw GroupTooLarge("more than " + std::to_string(limits.max_lattice) + " normal subgroups");
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace nsct
