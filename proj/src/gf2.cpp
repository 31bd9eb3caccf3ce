#include "neurotop/gf2.hpp"

#include <algorithm>

#include "neurotop/errors.hpp"

namespace neurotop {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    return (bits_[word(r, c)] >> (c % 64)) & 1;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (value)
        bits_[word(r, c)] |= bit;
    else
        bits_[word(r, c)] &= ~bit;
}

std::size_t Gf2Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0)
        return 0;
    std::vector<std::uint64_t> work = bits_;
    auto row = [&](std::size_t r) { return work.data() + r * stride_; };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows_ && (row(pivot)[w] & bit) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != rank)
            std::swap_ranges(row(pivot), row(pivot) + stride_, row(rank));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && (row(r)[w] & bit) != 0)
                for (std::size_t k = 0; k < stride_; ++k)
                    row(r)[k] ^= row(rank)[k];
        }
        ++rank;
    }
    return rank;
}

bool Gf2Matrix::is_zero() const noexcept {
    for (std::uint64_t w : bits_)
        if (w != 0)
            return false;
    return true;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols_ != b.rows_)
        fail(errc::bad_argument, "matrix product dimension mismatch");
    Gf2Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(i, k))
                for (std::size_t j = 0; j < out.stride_; ++j)
                    out.bits_[i * out.stride_ + j] ^= b.bits_[k * b.stride_ + j];
    return out;
}

}  // namespace neurotop
