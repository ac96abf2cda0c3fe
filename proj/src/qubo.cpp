#include "cardqubo/qubo.hpp"

#include <cmath>
#include <string>

namespace cardqubo {
namespace {

void check_dimension(std::size_t n) {
  if (n == 0) throw DimensionError("matrix dimension must be at least 1");
  if (n > kMaxDimension)
    throw CapacityError("matrix dimension " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxDimension));
}

void check_square(const RawMatrix& raw) {
  check_dimension(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != raw.size())
      throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                           " entries, expected " + std::to_string(raw.size()));
    for (double v : raw[i])
      if (!std::isfinite(v))
        throw ValidationError("non-finite entry in row " + std::to_string(i));
  }
}

void check_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": size " + std::to_string(b) +
                         " does not match matrix dimension " + std::to_string(a));
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n) {
  check_dimension(n);
  entries_.assign(n * n, 0.0);
}

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {}

SymmetricMatrix SymmetricMatrix::from_rows(const RawMatrix& rows) {
  check_square(rows);
  const std::size_t n = rows.size();
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw ValidationError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      entries[i * n + j] = rows[i][j];
    }
  }
  return SymmetricMatrix(n, std::move(entries));
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
  return m;
}

SymmetricMatrix SymmetricMatrix::all_ones(std::size_t n) {
  check_dimension(n);
  return SymmetricMatrix(n, std::vector<double>(n * n, 1.0));
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_) throw DimensionError("index out of range");
  if (!std::isfinite(value)) throw ValidationError("non-finite matrix entry");
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = value;
}

SymmetricMatrix SymmetricMatrix::scaled(double factor) const {
  std::vector<double> out(entries_);
  for (double& v : out) v *= factor;
  for (double v : out)
    if (!std::isfinite(v)) throw ValidationError("scaling produced a non-finite entry");
  return SymmetricMatrix(n_, std::move(out));
}

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& other) const {
  check_same_size(n_, other.n_, "matrix sum");
  std::vector<double> out(entries_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += other.entries_[k];
  for (double v : out)
    if (!std::isfinite(v)) throw ValidationError("sum produced a non-finite entry");
  return SymmetricMatrix(n_, std::move(out));
}

double SymmetricMatrix::total() const {
  double s = 0.0;
  for (double v : entries_) s += v;
  return s;
}

double SymmetricMatrix::abs_total() const {
  double s = 0.0;
  for (double v : entries_) s += std::abs(v);
  return s;
}

RawMatrix SymmetricMatrix::to_rows() const {
  RawMatrix rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

BinaryVector::BinaryVector(std::span<const int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw ValidationError("binary vector entries must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BinaryVector::BinaryVector(std::initializer_list<int> bits)
    : BinaryVector(std::span<const int>(bits.begin(), bits.size())) {}

BinaryVector BinaryVector::from_mask(std::uint64_t mask, std::size_t n) {
  if (n > 64) throw DimensionError("bit mask holds at most 64 entries");
  BinaryVector x(n);
  for (std::size_t i = 0; i < n; ++i) x.bits_[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return x;
}

BinaryVector BinaryVector::from_string(std::string_view text) {
  BinaryVector x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw ValidationError("bit string may only contain '0' and '1'");
    x.bits_[i] = text[i] == '1' ? 1 : 0;
  }
  return x;
}

std::size_t BinaryVector::cardinality() const {
  std::size_t k = 0;
  for (auto b : bits_) k += b;
  return k;
}

std::string BinaryVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::uint64_t BinaryVector::to_mask() const {
  if (bits_.size() > 64) throw DimensionError("bit mask holds at most 64 entries");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    mask |= static_cast<std::uint64_t>(bits_[i]) << i;
  return mask;
}

LinearTerm::LinearTerm(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  for (double v : coefficients_)
    if (!std::isfinite(v)) throw ValidationError("non-finite linear coefficient");
}

double LinearTerm::dot(const BinaryVector& x) const {
  check_same_size(size(), x.size(), "binary vector");
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    if (x[i]) s += coefficients_[i];
  return s;
}

SymmetricMatrix symmetrize(const RawMatrix& raw) {
  check_square(raw);
  const std::size_t n = raw.size();
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.set(i, j, (raw[i][j] + raw[j][i]) / 2.0);
  return out;
}

SymmetricMatrix fold_linear(const SymmetricMatrix& a, const LinearTerm& b) {
  check_same_size(a.size(), b.size(), "linear term");
  SymmetricMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, i, a(i, i) + b[i]);
  return out;
}

double evaluate(const SymmetricMatrix& a, const BinaryVector& x) {
  check_same_size(a.size(), x.size(), "binary vector");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!x[i]) continue;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (x[j]) s += r[j];
  }
  return s;
}

double evaluate(const RawMatrix& raw, const BinaryVector& x) {
  check_square(raw);
  check_same_size(raw.size(), x.size(), "binary vector");
  double s = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < raw.size(); ++j)
      if (x[j]) s += raw[i][j];
  }
  return s;
}

IsingModel to_ising(const SymmetricMatrix& a) {
  IsingModel m{a.scaled(0.25), std::vector<double>(a.size(), 0.0), 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    double row_sum = 0.0;
    for (double v : a.row(i)) row_sum += v;
    m.field[i] = row_sum / 2.0;
  }
  m.offset = a.total() / 4.0;
  return m;
}

double ising_evaluate(const IsingModel& model, std::span<const int> spins) {
  const std::size_t n = model.coupling.size();
  check_same_size(n, spins.size(), "spin vector");
  if (model.field.size() != n) throw DimensionError("field length does not match coupling");
  for (int z : spins)
    if (z != 1 && z != -1) throw ValidationError("spin values must be -1 or +1");
  double s = model.offset;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = model.coupling.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += r[j] * spins[j];
    s += spins[i] * acc + model.field[i] * spins[i];
  }
  return s;
}

SpinVector to_spins(const BinaryVector& x) {
  SpinVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] ? 1 : -1;
  return z;
}

}  // namespace cardqubo
