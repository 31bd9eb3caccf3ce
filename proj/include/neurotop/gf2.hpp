#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace neurotop {

/// Dense bit matrix with arithmetic mod 2.  Rows are packed into 64-bit
/// words; rank runs Gaussian elimination on whole rows at a time.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    std::size_t rank() const;
    bool is_zero() const noexcept;

    /// Product mod 2; dimensions must agree.
    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t word(std::size_t r, std::size_t c) const noexcept {
        return r * stride_ + c / 64;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;  // 64-bit words per row
    std::vector<std::uint64_t> bits_;
};

}  // namespace neurotop
