#include "nsct/catalog.hpp"

#include <numeric>

#include "nsct/error.hpp"

namespace nsct::catalog {

Group trivial() { return cyclic(1); }

Group cyclic(std::size_t n) {
    if (n == 0) throw InvalidArgument("cyclic group order must be positive");
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
    return build_from_cayley(t);
}

Group direct_product(const Group& g, const Group& h) {
    const std::size_t m = h.order();
    const std::size_t n = g.order() * m;
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            t[x][y] = static_cast<Element>(g.mul(static_cast<Element>(x / m), static_cast<Element>(y / m)) * m +
                                           h.mul(static_cast<Element>(x % m), static_cast<Element>(y % m)));
    return build_from_cayley(t);
}

Group symmetric(std::size_t degree) {
    if (degree < 2) return trivial();
    std::vector<std::size_t> cycle(degree), swap(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    return build_from_permutations(degree, {cycle, swap});
}

Group alternating4() { return build_from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

Group dihedral(std::size_t order) {
    if (order < 4 || order % 2) throw InvalidArgument("dihedral order must be even and at least 4");
    const std::size_t m = order / 2;
    std::vector<std::size_t> rot(m), ref(m);
    for (std::size_t i = 0; i < m; ++i) {
        rot[i] = (i + 1) % m;
        ref[i] = (m - i) % m;
    }
    return build_from_permutations(m, {rot, ref});
}

Group quaternion8() {
    // Unit products: u*v = sign * unit, over units 1, i, j, k.
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int ua = a / 2, ub = b / 2;
            int s = sign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
            t[a][b] = static_cast<Element>(unit[ua][ub] * 2 + (s < 0 ? 1 : 0));
        }
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return Group(8, [&] {
        std::vector<Element> flat;
        for (auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
        return flat;
    }(), labels);
}

std::vector<Entry> standard() {
    std::vector<Entry> out;
    out.push_back({"trivial", trivial()});
    out.push_back({"C2", cyclic(2)});
    out.push_back({"C4", cyclic(4)});
    out.push_back({"C6", cyclic(6)});
    out.push_back({"C2xC2", direct_product(cyclic(2), cyclic(2))});
    out.push_back({"S3", symmetric(3)});
    out.push_back({"D4", dihedral(8)});
    out.push_back({"Q8", quaternion8()});
    out.push_back({"A4", alternating4()});
    out.push_back({"C3xC3", direct_product(cyclic(3), cyclic(3))});
    out.push_back({"C3xC4", direct_product(cyclic(3), cyclic(4))});
    out.push_back({"UT3(2)", build_unitriangular(3, 2)});
    out.push_back({"UT3(3)", build_unitriangular(3, 3)});
    out.push_back({"UT4(2)", build_unitriangular(4, 2)});
    return out;
}

}  // namespace nsct::catalog
