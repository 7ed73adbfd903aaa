#include <oddom/gf2.hpp>

#include <bit>
#include <stdexcept>

namespace oddom::gf2 {

namespace {

std::size_t word_count(std::size_t len)
{
    return (len + BitVector::bits_per_word - 1) / BitVector::bits_per_word;
}

// Row-reduces `rows` (each of width `cols`) in place to reduced row echelon
// form, choosing the leftmost available pivot column, and only considering
// columns below `pivot_limit`. Returns the pivot column of each pivot row; the
// pivot rows end up at the front of `rows`, in pivot order.
std::vector<std::size_t> reduce(std::vector<BitVector> & rows, std::size_t pivot_limit)
{
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < pivot_limit && next_row < rows.size(); ++col) {
        std::size_t found = next_row;
        while (found < rows.size() && ! rows[found].test(col))
            ++found;
        if (found == rows.size())
            continue;
        std::swap(rows[next_row], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && rows[r].test(col))
                rows[r] ^= rows[next_row];
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

std::vector<BitVector> augment(const BitMatrix & m, const BitVector & b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("gf2: right-hand side has " + std::to_string(b.size()) +
                                    " entries but the matrix has " + std::to_string(m.rows()) + " rows");
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector row(m.cols() + 1);
        for (std::size_t c = m.row(r).find_next(0); c < m.cols(); c = m.row(r).find_next(c + 1))
            row.set(c);
        row.set(m.cols(), b.test(r));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(word_count(len), 0)
{
}

BitVector BitVector::from_bits(std::initializer_list<int> bits)
{
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits)
        v.set(i++, b != 0);
    return v;
}

bool BitVector::test(std::size_t i) const
{
    return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U;
}

void BitVector::set(std::size_t i, bool value)
{
    const word_type bit = word_type{1} << (i % bits_per_word);
    if (value)
        words_[i / bits_per_word] |= bit;
    else
        words_[i / bits_per_word] &= ~bit;
}

void BitVector::flip(std::size_t i)
{
    words_[i / bits_per_word] ^= word_type{1} << (i % bits_per_word);
}

std::size_t BitVector::count() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::none() const
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

std::size_t BitVector::find_next(std::size_t from) const
{
    if (from >= len_)
        return len_;
    std::size_t wi = from / bits_per_word;
    word_type w = words_[wi] & (~word_type{0} << (from % bits_per_word));
    while (true) {
        if (w != 0)
            return wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi == words_.size())
            return len_;
        w = words_[wi];
    }
}

BitVector & BitVector::operator^=(const BitVector & other)
{
    if (other.len_ != len_)
        throw std::invalid_argument("gf2: xor of vectors with different lengths");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::dot(const BitVector & other) const
{
    if (other.len_ != len_)
        throw std::invalid_argument("gf2: dot product of vectors with different lengths");
    word_type acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const
{
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (test(i))
            s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols))
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows)
{
    BitMatrix m(0, cols);
    for (auto & r : rows)
        m.append_row(std::move(r));
    return m;
}

BitMatrix BitMatrix::from_bits(std::initializer_list<std::initializer_list<int>> rows)
{
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    BitMatrix m(0, cols);
    for (auto r : rows)
        m.append_row(BitVector::from_bits(r));
    return m;
}

void BitMatrix::append_row(BitVector row)
{
    if (row.size() != cols_)
        throw std::invalid_argument("gf2: row width " + std::to_string(row.size()) +
                                    " does not match matrix width " + std::to_string(cols_));
    rows_.push_back(std::move(row));
}

void BitMatrix::prepend_row(BitVector row)
{
    if (row.size() != cols_)
        throw std::invalid_argument("gf2: row width " + std::to_string(row.size()) +
                                    " does not match matrix width " + std::to_string(cols_));
    rows_.insert(rows_.begin(), std::move(row));
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = rows_[r].find_next(0); c < cols_; c = rows_[r].find_next(c + 1))
            t.set(c, r);
    return t;
}

BitVector BitMatrix::multiply(const BitVector & x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("gf2: vector length does not match matrix width");
    BitVector y(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        y.set(r, rows_[r].dot(x));
    return y;
}

std::size_t rank(const BitMatrix & m)
{
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return reduce(rows, m.cols()).size();
}

std::size_t rank_augmented(const BitMatrix & m, const BitVector & b)
{
    auto rows = augment(m, b);
    return reduce(rows, m.cols() + 1).size();
}

std::optional<BitVector> solve(const BitMatrix & m, const BitVector & b)
{
    auto rows = augment(m, b);
    const auto pivots = reduce(rows, m.cols());

    // Any remaining non-pivot row with a set right-hand side reads 0 = 1.
    for (std::size_t r = pivots.size(); r < rows.size(); ++r)
        if (rows[r].test(m.cols()))
            return std::nullopt;

    BitVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x.set(pivots[i], rows[i].test(m.cols()));
    return x;
}

} // namespace oddom::gf2
