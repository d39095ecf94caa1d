// Exact dense linear algebra over the coefficient field (small sizes).
#ifndef FINDET_LINALG_HPP
#define FINDET_LINALG_HPP

#include <cstddef>
#include <vector>

#include "findet/scalar.hpp"

namespace findet {

class ScalarMatrix {
public:
    ScalarMatrix(std::size_t rows, std::size_t cols, std::uint32_t prime)
        : rows_(rows), cols_(cols),
          data_(rows * cols, Scalar::zero(prime)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::size_t rank() const;
    // Basis of {v : v * M = 0} as row vectors of length rows().
    std::vector<std::vector<Scalar>> left_kernel() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

}  // namespace findet

#endif
