#include "modp.hpp"

#include <utility>

#include "nsct/error.hpp"
#include "nsct/group.hpp"

namespace nsct::modp {

Word Field::pow(Word a, std::uint64_t e) const noexcept {
    Word result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Word Field::from_signed(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Word>(r);
}

Word Field::primitive_root_of_unity(std::uint64_t k) const {
    if ((p_ - 1) % k != 0) throw InternalCheckFailed("root of unity order does not divide p-1");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2, m = k; m > 1; ++d) {
        if (d * d > m) {
            primes.push_back(m);
            break;
        }
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    for (Word g = 2; g < p_; ++g) {
        Word z = pow(g, (p_ - 1) / k);
        bool primitive = true;
        for (auto q : primes)
            if (pow(z, k / q) == 1) primitive = false;
        if (primitive) return z;
    }
    if (k == 1) return 1;
    throw InternalCheckFailed("no primitive root of unity found");
}

Mat row_reduce(const Field& f, Mat rows, std::vector<std::size_t>& pivots) {
    pivots.clear();
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Word s = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Word factor = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Vec> nullspace(const Field& f, Mat a) {
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    std::vector<std::size_t> pivots;
    Mat red = row_reduce(f, std::move(a), pivots);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec charpoly(const Field& f, const Mat& a) {
    const std::size_t n = a.size();
    Mat h = a;
    // Reduce to upper Hessenberg form by similarity transforms.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h[piv][m - 1] == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            std::swap(h[piv], h[m]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
        }
        const Word inv = f.inv(h[m][m - 1]);
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h[i][m - 1] == 0) continue;
            const Word u = f.mul(h[i][m - 1], inv);
            for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
            for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
        }
    }
    // Leading-principal-minor recurrence on the Hessenberg matrix.
    std::vector<Vec> p(n + 1);
    p[0] = Vec{1};
    for (std::size_t k = 1; k <= n; ++k) {
        Vec cur(k + 1, 0);
        // (x - h[k-1][k-1]) * p[k-1]
        for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
            cur[d + 1] = f.add(cur[d + 1], p[k - 1][d]);
            cur[d] = f.sub(cur[d], f.mul(h[k - 1][k - 1], p[k - 1][d]));
        }
        Word prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            prod = f.mul(prod, h[k - i][k - i - 1]);
            const Word coef = f.mul(prod, h[k - i - 1][k - 1]);
            if (coef == 0) continue;
            for (std::size_t d = 0; d < p[k - i - 1].size(); ++d)
                cur[d] = f.sub(cur[d], f.mul(coef, p[k - i - 1][d]));
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

Word dixon_prime(std::uint64_t modulus, std::uint64_t bound_sq) {
    for (std::uint64_t p = modulus + 1;; p += modulus) {
        if (p * p <= bound_sq) continue;
        if (is_prime(static_cast<long long>(p))) return p;
    }
}

}  // namespace nsct::modp
