#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nsct/group.hpp"

namespace nsct::catalog {

Group trivial();
/// Element k is g^k.
Group cyclic(std::size_t n);
/// Element i*|H| + j is (g_i, h_j).
Group direct_product(const Group& g, const Group& h);
Group symmetric(std::size_t degree);
Group alternating4();
/// Order 2m, acting on the vertices of an m-gon.
Group dihedral(std::size_t order);
/// Elements 1, -1, i, -i, j, -j, k, -k in that order.
Group quaternion8();

struct Entry {
    std::string name;
    Group group;
};

/// The small groups the test and acceptance suites sweep over.
std::vector<Entry> standard();

}  // namespace nsct::catalog
