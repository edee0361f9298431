#pragma once

#include <iosfwd>
#include <string>

#include "rgn/dense_tensor.hpp"
#include "rgn/tucker.hpp"

namespace rgn {

// Text format: first line "dims: p1 p2 ... pd", then the tensor entries in
// linearization order, whitespace-separated. The parser rejects dimension
// or count mismatches.

void write_tensor(std::ostream& os, const DenseTensor& t);
DenseTensor read_tensor(std::istream& is);

void write_tensor_file(const std::string& path, const DenseTensor& t);
DenseTensor read_tensor_file(const std::string& path);

// A matrix is written as an order-2 tensor (colexicographic order is
// column-major).
void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);

// Tucker format: "core:" section followed by the core tensor, then
// "factor k:" sections (k = 1..d) each followed by a factor matrix.
void write_tucker(std::ostream& os, const TuckerTensor& x);
TuckerTensor read_tucker(std::istream& is);

void write_tucker_file(const std::string& path, const TuckerTensor& x);
TuckerTensor read_tucker_file(const std::string& path);

}  // namespace rgn
