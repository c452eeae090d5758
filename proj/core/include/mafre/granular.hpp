#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mafre {

/// Numerator k of a truth value k/n. The denominator is carried separately.
using Level = std::uint16_t;

/// Largest granularity accepted anywhere in the library. Operator tables are
/// (n+1)^2 entries, so this keeps them small and keeps k*n*n inside 64 bits.
inline constexpr Level kMaxGranularity = 1024;

/// An exact element k/n of the regular partition [0,1]_n.
class GranularValue {
 public:
  constexpr GranularValue() = default;

  /// Throws std::out_of_range unless n >= 1 and 0 <= k <= n.
  GranularValue(long numerator, long granularity);

  Level numerator() const { return numerator_; }
  Level granularity() const { return granularity_; }
  double to_double() const {
    return static_cast<double>(numerator_) / static_cast<double>(granularity_);
  }

  bool is_bottom() const { return numerator_ == 0; }
  bool is_top() const { return numerator_ == granularity_; }

  /// Rational comparison, so 1/2 == 4/8.
  friend bool operator==(const GranularValue& a, const GranularValue& b) {
    return a.cross(b) == b.cross(a);
  }
  friend std::strong_ordering operator<=>(const GranularValue& a,
                                          const GranularValue& b) {
    return a.cross(b) <=> b.cross(a);
  }

  friend GranularValue meet(const GranularValue& a, const GranularValue& b) {
    return b < a ? b : a;
  }
  friend GranularValue join(const GranularValue& a, const GranularValue& b) {
    return a < b ? b : a;
  }

 private:
  std::uint64_t cross(const GranularValue& other) const {
    return static_cast<std::uint64_t>(numerator_) * other.granularity_;
  }

  Level numerator_ = 0;
  Level granularity_ = 1;
};

GranularValue make_granular(long k, long n);

/// Renders k/n as an exact decimal when one with at most six digits exists,
/// otherwise as "k/n".
std::string format_level(Level k, Level n);

/// The finite chain [0,1]_n.
class GranularLattice {
 public:
  explicit GranularLattice(long granularity);

  Level granularity() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) + 1; }
  GranularValue bottom() const { return GranularValue(0, n_); }
  GranularValue top() const { return GranularValue(n_, n_); }
  GranularValue value(Level k) const { return GranularValue(k, n_); }
  bool contains(const GranularValue& v) const { return v.granularity() == n_; }

  friend bool operator==(const GranularLattice&, const GranularLattice&) = default;

 private:
  Level n_;
};

/// A fuzzy subset of an indexed finite set, stored as numerators over a
/// shared granularity. Element names live on the owning context.
class FuzzySet {
 public:
  FuzzySet() = default;
  FuzzySet(Level granularity, std::vector<Level> levels);

  static FuzzySet constant(Level granularity, std::size_t size, Level level);
  static FuzzySet from_values(std::span<const GranularValue> values);

  std::size_t size() const { return levels_.size(); }
  Level granularity() const { return granularity_; }

  Level operator[](std::size_t i) const { return levels_[i]; }
  Level& operator[](std::size_t i) { return levels_[i]; }
  GranularValue value(std::size_t i) const {
    return GranularValue(levels_[i], granularity_);
  }
  std::span<const Level> levels() const { return levels_; }
  std::vector<Level>& mutable_levels() { return levels_; }

  /// Pointwise order.
  bool leq(const FuzzySet& other) const;
  bool strictly_less(const FuzzySet& other) const {
    return leq(other) && levels_ != other.levels_;
  }
  std::uint64_t level_sum() const;

  /// Lexicographic on levels; used only for canonical ordering.
  friend auto operator<=>(const FuzzySet& a, const FuzzySet& b) {
    return a.levels_ <=> b.levels_;
  }
  friend bool operator==(const FuzzySet& a, const FuzzySet& b) = default;

  FuzzySet select(std::span<const std::size_t> indices) const;
  std::string to_string() const;  // "(0.25, 0.5, 0)"

 private:
  Level granularity_ = 1;
  std::vector<Level> levels_;
};

FuzzySet pointwise_meet(const FuzzySet& a, const FuzzySet& b);
FuzzySet pointwise_join(const FuzzySet& a, const FuzzySet& b);

/// Dense row-major matrix of numerators over one granularity.
class LevelMatrix {
 public:
  LevelMatrix() = default;
  LevelMatrix(std::size_t rows, std::size_t cols, Level granularity, Level fill = 0);
  LevelMatrix(Level granularity, const std::vector<std::vector<Level>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Level granularity() const { return granularity_; }

  Level operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Level& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Level at(std::size_t r, std::size_t c) const;

  FuzzySet row(std::size_t r) const;
  FuzzySet column(std::size_t c) const;
  void set_row(std::size_t r, const FuzzySet& values);
  void set_column(std::size_t c, const FuzzySet& values);

  LevelMatrix select_rows(std::span<const std::size_t> indices) const;
  LevelMatrix select_cols(std::span<const std::size_t> indices) const;
  LevelMatrix transposed() const;

  std::span<const Level> data() const { return data_; }
  std::vector<std::vector<Level>> to_nested() const;

  friend bool operator==(const LevelMatrix&, const LevelMatrix&) = default;
  friend auto operator<=>(const LevelMatrix& a, const LevelMatrix& b) {
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Level granularity_ = 1;
  std::vector<Level> data_;
};

/// Advances `levels` to the next vector in the box [0, upper] (odometer, last
/// index fastest). Returns false after the last vector, leaving all zeros.
bool next_in_box(std::span<Level> levels, std::span<const Level> upper);

/// Number of points in the box [0, upper], saturating at UINT64_MAX.
std::uint64_t box_volume(std::span<const Level> upper);

/// (n+1)^dim, saturating at UINT64_MAX.
std::uint64_t cube_volume(Level granularity, std::size_t dim);

}  // namespace mafre
