#include "rgn/tensor_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rgn {

namespace {

void write_scalar(std::ostream& os, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  os.write(buf, res.ptr - buf);
}

Shape read_dims_line(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::runtime_error("tensor_io: missing dims line");
  }
  std::istringstream ls(line);
  std::string tag;
  ls >> tag;
  if (tag != "dims:") {
    throw std::runtime_error("tensor_io: expected 'dims:' header, got '" + tag + "'");
  }
  std::vector<Index> dims;
  Index d;
  while (ls >> d) dims.push_back(d);
  if (dims.empty()) throw std::runtime_error("tensor_io: empty dims line");
  return Shape(std::move(dims));
}

Vector read_values(std::istream& is, Index count) {
  Vector data(count);
  for (Index i = 0; i < count; ++i) {
    if (!(is >> data[i])) {
      throw std::runtime_error("tensor_io: fewer values than the dims line promises");
    }
  }
  return data;
}

void expect_no_trailing(std::istream& is) {
  double extra;
  if (is >> extra) {
    throw std::runtime_error("tensor_io: more values than the dims line promises");
  }
}

}  // namespace

void write_tensor(std::ostream& os, const DenseTensor& t) {
  os << "dims:";
  for (Index d : t.shape().dims()) os << " " << d;
  os << "\n";
  for (Index i = 0; i < t.size(); ++i) {
    write_scalar(os, t[i]);
    os << "\n";
  }
}

DenseTensor read_tensor(std::istream& is) {
  const Shape shape = read_dims_line(is);
  Vector data = read_values(is, shape.total());
  expect_no_trailing(is);
  return DenseTensor(shape, std::move(data));
}

void write_tensor_file(const std::string& path, const DenseTensor& t) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("tensor_io: cannot open " + path + " for writing");
  write_tensor(os, t);
}

DenseTensor read_tensor_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("tensor_io: cannot open " + path);
  return read_tensor(is);
}

void write_matrix(std::ostream& os, const Matrix& m) {
  os << "dims: " << m.rows() << " " << m.cols() << "\n";
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      write_scalar(os, m(i, j));
      os << "\n";
    }
  }
}

Matrix read_matrix(std::istream& is) {
  const Shape shape = read_dims_line(is);
  if (shape.order() != 2) throw std::runtime_error("tensor_io: expected a matrix");
  Vector data = read_values(is, shape.total());
  return Eigen::Map<const Matrix>(data.data(), shape.dim(0), shape.dim(1));
}

void write_tucker(std::ostream& os, const TuckerTensor& x) {
  os << "core:\n";
  write_tensor(os, x.core());
  for (Index k = 0; k < x.order(); ++k) {
    os << "factor " << (k + 1) << ":\n";
    write_matrix(os, x.factor(k));
  }
}

TuckerTensor read_tucker(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "core:") {
    throw std::runtime_error("tensor_io: expected 'core:' section");
  }
  // Core values are followed by the first factor header, so read the dims
  // line then exactly the promised number of values.
  const Shape core_shape = read_dims_line(is);
  Vector core_data = read_values(is, core_shape.total());
  DenseTensor core(core_shape, std::move(core_data));
  is >> std::ws;
  std::vector<Matrix> factors;
  for (Index k = 0; k < core_shape.order(); ++k) {
    if (!std::getline(is, line)) {
      throw std::runtime_error("tensor_io: missing factor section");
    }
    std::ostringstream expected;
    expected << "factor " << (k + 1) << ":";
    if (line != expected.str()) {
      throw std::runtime_error("tensor_io: expected '" + expected.str() + "', got '" + line + "'");
    }
    factors.push_back(read_matrix(is));
    is >> std::ws;
  }
  return TuckerTensor(std::move(core), std::move(factors));
}

void write_tucker_file(const std::string& path, const TuckerTensor& x) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("tensor_io: cannot open " + path + " for writing");
  write_tucker(os, x);
}

TuckerTensor read_tucker_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("tensor_io: cannot open " + path);
  return read_tucker(is);
}

}  // namespace rgn
