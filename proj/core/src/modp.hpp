#pragma once

// Dense linear algebra over a prime field F_p, p < 2^31.

#include <cstdint>
#include <vector>

namespace nsct::modp {

using Word = std::uint64_t;
using Vec = std::vector<Word>;
using Mat = std::vector<Vec>;  // row-major

class Field {
public:
    explicit Field(Word p) : p_(p) {}

    Word p() const noexcept { return p_; }
    Word add(Word a, Word b) const noexcept { return (a + b) % p_; }
    Word sub(Word a, Word b) const noexcept { return (a + p_ - b) % p_; }
    Word mul(Word a, Word b) const noexcept { return (a * b) % p_; }
    Word neg(Word a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Word pow(Word a, std::uint64_t e) const noexcept;
    /// Requires a != 0.
    Word inv(Word a) const noexcept { return pow(a, p_ - 2); }
    Word from_signed(long long v) const noexcept;

    /// A generator of the unique subgroup of order `k` in F_p^*; k | p-1.
    Word primitive_root_of_unity(std::uint64_t k) const;

private:
    Word p_;
};

/// Basis of {x : A x = 0}, each vector with a 1 in its free column.
std::vector<Vec> nullspace(const Field& f, Mat a);

/// Reduced row echelon form of the row space; returns the nonzero rows and
/// writes the pivot column of each into `pivots`.
Mat row_reduce(const Field& f, Mat rows, std::vector<std::size_t>& pivots);

/// Characteristic polynomial det(xI - A), constant term first.
Vec charpoly(const Field& f, const Mat& a);

/// Smallest prime p with p ≡ 1 (mod modulus) and p*p > bound_sq.
Word dixon_prime(std::uint64_t modulus, std::uint64_t bound_sq);

}  // namespace nsct::modp
