#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace oddom::gf2 {

/// Fixed-length bit sequence packed into 64-bit words.
/// Bits at positions >= size() are always zero.
class BitVector
{
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Build from a list of 0/1 values, e.g. BitVector::from_bits({1, 0, 1}).
    static BitVector from_bits(std::initializer_list<int> bits);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    std::size_t count() const;
    bool none() const;

    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const;

    BitVector & operator^=(const BitVector & other);
    friend BitVector operator^(BitVector lhs, const BitVector & rhs) { return lhs ^= rhs; }

    /// Parity of the bitwise AND, i.e. the GF(2) inner product.
    bool dot(const BitVector & other) const;

    std::span<const word_type> words() const { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitVector &, const BitVector &) = default;

private:
    std::size_t len_ = 0;
    std::vector<word_type> words_;
};

/// Dense GF(2) matrix stored as rows of equal width.
class BitMatrix
{
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);
    static BitMatrix from_bits(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    const BitVector & row(std::size_t r) const { return rows_[r]; }
    void append_row(BitVector row);
    /// Insert `row` before all existing rows.
    void prepend_row(BitVector row);

    BitMatrix transpose() const;

    /// Matrix-vector product over GF(2); x.size() must equal cols().
    BitVector multiply(const BitVector & x) const;

    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// GF(2) rank. Works on a copy; `m` is left untouched.
std::size_t rank(const BitMatrix & m);

/// Rank of [m | b], i.e. m with b appended as an extra column.
/// Throws std::invalid_argument if b.size() != m.rows().
std::size_t rank_augmented(const BitMatrix & m, const BitVector & b);

/// Solve m * x = b over GF(2).
///
/// Gauss-Jordan elimination with the leftmost available pivot column;
/// free variables are fixed to zero, so the returned solution is the same
/// on every run. Returns std::nullopt when the system is inconsistent.
/// Throws std::invalid_argument if b.size() != m.rows().
std::optional<BitVector> solve(const BitMatrix & m, const BitVector & b);

} // namespace oddom::gf2
