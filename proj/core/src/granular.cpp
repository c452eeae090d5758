#include "mafre/granular.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mafre/errors.hpp"

namespace mafre {

namespace {

void require_granularity(long n) {
  if (n < 1 || n > kMaxGranularity) {
    throw std::out_of_range("granularity " + std::to_string(n) +
                            " outside [1, " + std::to_string(kMaxGranularity) + "]");
  }
}

}  // namespace

GranularValue::GranularValue(long numerator, long granularity) {
  require_granularity(granularity);
  if (numerator < 0 || numerator > granularity) {
    throw std::out_of_range("value " + std::to_string(numerator) + "/" +
                            std::to_string(granularity) + " outside [0,1]");
  }
  numerator_ = static_cast<Level>(numerator);
  granularity_ = static_cast<Level>(granularity);
}

GranularValue make_granular(long k, long n) { return GranularValue(k, n); }

std::string format_level(Level k, Level n) {
  if (k == 0) return "0";
  if (k == n) return "1";
  // Find the smallest d with k*10^d divisible by n.
  std::uint64_t scaled = k;
  for (int digits = 1; digits <= 6; ++digits) {
    scaled *= 10;
    if (scaled % n == 0) {
      std::string frac = std::to_string(scaled / n);
      frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
      return "0." + frac;
    }
  }
  return std::to_string(k) + "/" + std::to_string(n);
}

GranularLattice::GranularLattice(long granularity) {
  require_granularity(granularity);
  n_ = static_cast<Level>(granularity);
}

FuzzySet::FuzzySet(Level granularity, std::vector<Level> levels)
    : granularity_(granularity), levels_(std::move(levels)) {
  require_granularity(granularity);
  for (Level k : levels_) {
    if (k > granularity_) {
      throw std::out_of_range("level " + std::to_string(k) + " exceeds granularity " +
                              std::to_string(granularity_));
    }
  }
}

FuzzySet FuzzySet::constant(Level granularity, std::size_t size, Level level) {
  return FuzzySet(granularity, std::vector<Level>(size, level));
}

FuzzySet FuzzySet::from_values(std::span<const GranularValue> values) {
  if (values.empty()) throw InputError("cannot infer granularity of an empty fuzzy set");
  const Level n = values.front().granularity();
  std::vector<Level> levels;
  levels.reserve(values.size());
  for (const auto& v : values) {
    if (v.granularity() != n) throw InputError("mixed granularities in fuzzy set");
    levels.push_back(v.numerator());
  }
  return FuzzySet(n, std::move(levels));
}

bool FuzzySet::leq(const FuzzySet& other) const {
  if (other.size() != size()) throw InputError("fuzzy sets over different index sets");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] > other.levels_[i]) return false;
  }
  return true;
}

std::uint64_t FuzzySet::level_sum() const {
  std::uint64_t s = 0;
  for (Level k : levels_) s += k;
  return s;
}

FuzzySet FuzzySet::select(std::span<const std::size_t> indices) const {
  std::vector<Level> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(levels_.at(i));
  return FuzzySet(granularity_, std::move(out));
}

std::string FuzzySet::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) os << ", ";
    os << format_level(levels_[i], granularity_);
  }
  os << ')';
  return os.str();
}

FuzzySet pointwise_meet(const FuzzySet& a, const FuzzySet& b) {
  if (a.size() != b.size()) throw InputError("fuzzy sets over different index sets");
  FuzzySet out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

FuzzySet pointwise_join(const FuzzySet& a, const FuzzySet& b) {
  if (a.size() != b.size()) throw InputError("fuzzy sets over different index sets");
  FuzzySet out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

LevelMatrix::LevelMatrix(std::size_t rows, std::size_t cols, Level granularity, Level fill)
    : rows_(rows), cols_(cols), granularity_(granularity), data_(rows * cols, fill) {
  require_granularity(granularity);
  if (fill > granularity) throw std::out_of_range("fill level exceeds granularity");
}

LevelMatrix::LevelMatrix(Level granularity, const std::vector<std::vector<Level>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()),
      granularity_(granularity) {
  require_granularity(granularity);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix rows");
    for (Level k : r) {
      if (k > granularity) {
        throw std::out_of_range("matrix entry " + std::to_string(k) +
                                " exceeds granularity " + std::to_string(granularity));
      }
      data_.push_back(k);
    }
  }
}

Level LevelMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return (*this)(r, c);
}

FuzzySet LevelMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("matrix row");
  return FuzzySet(granularity_, std::vector<Level>(data_.begin() + static_cast<long>(r * cols_),
                                                   data_.begin() + static_cast<long>((r + 1) * cols_)));
}

FuzzySet LevelMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("matrix column");
  std::vector<Level> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return FuzzySet(granularity_, std::move(out));
}

void LevelMatrix::set_row(std::size_t r, const FuzzySet& values) {
  if (r >= rows_ || values.size() != cols_) throw InputError("row shape mismatch");
  if (values.granularity() != granularity_) throw InputError("granularity mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

void LevelMatrix::set_column(std::size_t c, const FuzzySet& values) {
  if (c >= cols_ || values.size() != rows_) throw InputError("column shape mismatch");
  if (values.granularity() != granularity_) throw InputError("granularity mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

LevelMatrix LevelMatrix::select_rows(std::span<const std::size_t> indices) const {
  LevelMatrix out(indices.size(), cols_, granularity_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw std::out_of_range("row index");
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
  }
  return out;
}

LevelMatrix LevelMatrix::select_cols(std::span<const std::size_t> indices) const {
  LevelMatrix out(rows_, indices.size(), granularity_);
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw std::out_of_range("column index");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, indices[j]);
  }
  return out;
}

LevelMatrix LevelMatrix::transposed() const {
  LevelMatrix out(cols_, rows_, granularity_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

std::vector<std::vector<Level>> LevelMatrix::to_nested() const {
  std::vector<std::vector<Level>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + static_cast<long>(r * cols_),
                  data_.begin() + static_cast<long>((r + 1) * cols_));
  }
  return out;
}

bool next_in_box(std::span<Level> levels, std::span<const Level> upper) {
  for (std::size_t i = levels.size(); i-- > 0;) {
    if (levels[i] < upper[i]) {
      ++levels[i];
      return true;
    }
    levels[i] = 0;
  }
  return false;
}

std::uint64_t box_volume(std::span<const Level> upper) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v = 1;
  for (Level u : upper) {
    const std::uint64_t f = static_cast<std::uint64_t>(u) + 1;
    if (v > kMax / f) return kMax;
    v *= f;
  }
  return v;
}

std::uint64_t cube_volume(Level granularity, std::size_t dim) {
  std::vector<Level> upper(dim, granularity);
  return box_volume(upper);
}

}  // namespace mafre
