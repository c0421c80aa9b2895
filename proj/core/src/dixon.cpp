// Burnside–Dixon character tables.
//
// The class multiplication coefficients a_ijk = #{(x, y) : x ∈ C_i, y ∈ C_j,
// xy = g_k} define matrices A_i with (A_i)_jk = a_ijk. The central characters
// ω_χ(C_k) = |C_k| χ(g_k) / χ(1) form a common eigenvector of every A_i. We
// split F_p^r into those eigenlines for a prime p ≡ 1 (mod exponent), recover
// χ(1) from the orthogonality relation, and lift each value to Q(ζ_e) by
// counting eigenvalue multiplicities of ρ(g) with a fixed root of unity mod p.

#include <cmath>

#include "modp.hpp"
#include "nsct/chartab.hpp"
#include "nsct/error.hpp"

namespace nsct {

namespace {

using modp::Mat;
using modp::Vec;
using modp::Word;

struct Eigenspace {
    Mat basis;  // reduced row echelon form
    std::vector<std::size_t> pivots;
};

/// Splits `space` into eigenspaces of `a` (which must leave it invariant).
std::vector<Eigenspace> split(const modp::Field& f, const Eigenspace& space, const Mat& a) {
    const std::size_t d = space.basis.size();
    const std::size_t r = a.size();
    // Image of each basis vector, expressed in basis coordinates via pivots.
    Mat restricted(d, Vec(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
        Vec img(r, 0);
        for (std::size_t row = 0; row < r; ++row) {
            Word s = 0;
            for (std::size_t col = 0; col < r; ++col)
                if (a[row][col] && space.basis[j][col]) s = f.add(s, f.mul(a[row][col], space.basis[j][col]));
            img[row] = s;
        }
        for (std::size_t l = 0; l < d; ++l) restricted[l][j] = img[space.pivots[l]];
    }
    const Vec poly = modp::charpoly(f, restricted);
    std::vector<Eigenspace> out;
    std::size_t total = 0;
    for (Word lambda = 0; lambda < f.p(); ++lambda) {
        Word v = 0;
        for (std::size_t k = poly.size(); k-- > 0;) v = f.add(f.mul(v, lambda), poly[k]);
        if (v != 0) continue;
        Mat shifted = restricted;
        for (std::size_t k = 0; k < d; ++k) shifted[k][k] = f.sub(shifted[k][k], lambda);
        Mat vectors;
        for (const Vec& coords : modp::nullspace(f, shifted)) {
            Vec w(r, 0);
            for (std::size_t l = 0; l < d; ++l)
                if (coords[l])
                    for (std::size_t c = 0; c < r; ++c) w[c] = f.add(w[c], f.mul(coords[l], space.basis[l][c]));
            vectors.push_back(std::move(w));
        }
        Eigenspace e;
        e.basis = modp::row_reduce(f, std::move(vectors), e.pivots);
        total += e.basis.size();
        out.push_back(std::move(e));
    }
    if (total != d) throw InternalCheckFailed("class matrix is not diagonalizable mod p");
    return out;
}

}  // namespace

CharacterTable dixon_character_table(const Group& g, std::size_t max_order) {
    const std::size_t n = g.order();
    if (n > max_order)
        throw GroupTooLarge("character tables are limited to order " + std::to_string(max_order));

    CharacterTable t;
    t.group_order = n;
    t.conductor = static_cast<unsigned>(g.exponent());
    t.classes = conjugacy_classes(g);
    const ClassPartition& cls = t.classes;
    const std::size_t r = cls.count();
    const std::uint64_t e = g.exponent();

    const modp::Field f(modp::dixon_prime(e, 4 * static_cast<std::uint64_t>(n)));

    // coeff[i][j][k] = a_ijk
    std::vector<Mat> coeff(r, Mat(r, Vec(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        const Element gk = cls.reps[k];
        for (Element x = 0; x < n; ++x) {
            const std::size_t i = cls.class_of[x];
            const std::size_t j = cls.class_of[g.mul(g.inv(x), gk)];
            ++coeff[i][j][k];
        }
    }
    for (auto& m : coeff)
        for (auto& row : m)
            for (auto& v : row) v %= f.p();

    std::vector<Eigenspace> spaces(1);
    for (std::size_t k = 0; k < r; ++k) {
        Vec unit(r, 0);
        unit[k] = 1;
        spaces[0].basis.push_back(std::move(unit));
        spaces[0].pivots.push_back(k);
    }
    for (std::size_t i = 1; i < r; ++i) {
        bool done = true;
        std::vector<Eigenspace> next;
        for (auto& s : spaces) {
            if (s.basis.size() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            for (auto& piece : split(f, s, coeff[i])) {
                if (piece.basis.size() > 1) done = false;
                next.push_back(std::move(piece));
            }
        }
        spaces = std::move(next);
        if (done) break;
    }
    if (spaces.size() != r) throw InternalCheckFailed("could not separate central characters mod p");

    std::vector<std::size_t> inverse_class(r);
    for (std::size_t k = 0; k < r; ++k) inverse_class[k] = cls.class_of[g.inv(cls.reps[k])];

    const Word z = f.primitive_root_of_unity(e);
    const auto max_degree = static_cast<Word>(std::sqrt(static_cast<double>(n)) + 1);

    // power_class[k][l] = class of g_k^l, for l < order(g_k)
    std::vector<std::vector<std::size_t>> power_class(r);
    for (std::size_t k = 0; k < r; ++k) {
        const Element rep = cls.reps[k];
        Element x = 0;
        for (std::size_t l = 0; l < g.element_order(rep); ++l) {
            power_class[k].push_back(cls.class_of[x]);
            x = g.mul(x, rep);
        }
    }

    for (const auto& s : spaces) {
        Vec omega = s.basis.front();
        if (omega[0] == 0) throw InternalCheckFailed("central character vanishes on the identity");
        const Word scale = f.inv(omega[0]);
        for (auto& w : omega) w = f.mul(w, scale);

        Word sum = 0;
        for (std::size_t k = 0; k < r; ++k)
            sum = f.add(sum, f.mul(f.mul(omega[k], omega[inverse_class[k]]), f.inv(cls.sizes[k] % f.p())));
        if (sum == 0) throw InternalCheckFailed("degree equation is singular mod p");
        const Word d_sq = f.mul(n % f.p(), f.inv(sum));
        Word degree = 0;
        for (Word d = 1; d <= max_degree; ++d)
            if (f.mul(d, d) == d_sq) {
                degree = d;
                break;
            }
        if (degree == 0) throw InternalCheckFailed("no character degree matches mod p");

        Vec chi_mod(r);
        for (std::size_t k = 0; k < r; ++k)
            chi_mod[k] = f.mul(f.mul(degree, omega[k]), f.inv(cls.sizes[k] % f.p()));

        std::vector<CycNum> row(r);
        for (std::size_t k = 0; k < r; ++k) {
            const std::size_t o = power_class[k].size();
            const std::uint64_t step = e / o;
            const Word eps_inv = f.inv(f.pow(z, step));
            const Word o_inv = f.inv(o % f.p());
            std::vector<Rational> poly(e);
            for (std::size_t j = 0; j < o; ++j) {
                Word acc = 0;
                const Word base = f.pow(eps_inv, j);
                Word w = 1;
                for (std::size_t l = 0; l < o; ++l) {
                    acc = f.add(acc, f.mul(chi_mod[power_class[k][l]], w));
                    w = f.mul(w, base);
                }
                const Word mult = f.mul(acc, o_inv);
                if (mult > degree) throw InternalCheckFailed("eigenvalue multiplicity exceeds the degree");
                poly[j * step] += static_cast<long long>(mult);
            }
            row[k] = CycNum::from_polynomial(t.conductor, poly);
        }
        t.values.push_back(std::move(row));
        t.degrees.push_back(static_cast<long long>(degree));
    }

    canonicalize_rows(t);
    try {
        validate_character_table(t);
    } catch (const InvariantViolation& err) {
        throw InternalCheckFailed(std::string("Dixon output failed validation: ") + err.what());
    }
    return t;
}

}  // namespace nsct
