#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mafre/granular.hpp"

namespace mafre {

/// Names accepted by builtin_triple().
inline constexpr const char* kSquareLeft = "sq-left";    // x & y = ceil(n x^2 y)/n
inline constexpr const char* kSquareRight = "sq-right";  // x & y = ceil(n x y^2)/n
inline constexpr const char* kGodel = "godel";           // min with Goedel implication

/// A conjunctor with its two residuated implications over [0,1]_n, stored as
/// (n+1)x(n+1) numerator tables.
///
///   conj(x, y)            x & y
///   left_residuum(z, y)   z <- y, the greatest x with x & y <= z
///   right_residuum(z, x)  z <- x, the greatest y with x & y <= z
///
/// Construction does not check the adjunction; Frame does, and so does
/// make_custom_triple(). This lets verify_adjoint_triple() report on broken
/// candidates.
class AdjointTriple {
 public:
  using Table = std::vector<Level>;  // row-major, index a*(n+1)+b

  AdjointTriple(std::string name, Level granularity, Table conj, Table left_residuum,
                Table right_residuum);

  const std::string& name() const { return name_; }
  Level granularity() const { return n_; }
  bool is_builtin() const { return builtin_; }

  Level conj(Level x, Level y) const { return conj_[index(x, y)]; }
  Level left_residuum(Level z, Level y) const { return left_[index(z, y)]; }
  Level right_residuum(Level z, Level x) const { return right_[index(z, x)]; }

  const Table& conj_table() const { return conj_; }
  const Table& left_table() const { return left_; }
  const Table& right_table() const { return right_; }

 private:
  friend AdjointTriple builtin_triple(const std::string& name, long n);

  std::size_t index(Level a, Level b) const {
    return static_cast<std::size_t>(a) * (static_cast<std::size_t>(n_) + 1) + b;
  }

  std::string name_;
  Level n_;
  bool builtin_ = false;
  Table conj_;
  Table left_;
  Table right_;
};

/// Builds one of the named triples on [0,1]_n. Throws InputError for an
/// unknown name.
AdjointTriple builtin_triple(const std::string& name, long n);
std::vector<std::string> builtin_triple_names();

/// Validates shapes, then requires verify_adjoint_triple() to pass.
AdjointTriple make_custom_triple(std::string name, Level granularity,
                                 AdjointTriple::Table conj,
                                 AdjointTriple::Table left_residuum,
                                 AdjointTriple::Table right_residuum);

struct AdjunctionWitness {
  Level x, y, z;
  bool x_leq_left;   // x <= z <- y
  bool conj_leq_z;   // x & y <= z
  bool y_leq_right;  // y <= z <- x
};

struct AdjunctionReport {
  bool holds = true;
  std::uint64_t checked = 0;
  std::optional<AdjunctionWitness> witness;

  std::string describe(Level granularity) const;
};

/// Exhaustive check of  x <= z<-y  <=>  x&y <= z  <=>  y <= z<-x  over the
/// lattice. Stops at the first counterexample.
AdjunctionReport verify_adjoint_triple(const AdjointTriple& t, const GranularLattice& l);

GranularValue apply_conj(const AdjointTriple& t, GranularValue x, GranularValue y);
GranularValue apply_left_residuum(const AdjointTriple& t, GranularValue z, GranularValue y);
GranularValue apply_right_residuum(const AdjointTriple& t, GranularValue z, GranularValue x);

/// The truth chain plus the indexed family of adjoint triples. Every triple
/// is verified at construction.
class Frame {
 public:
  Frame(GranularLattice lattice, std::vector<AdjointTriple> triples);

  const GranularLattice& lattice() const { return lattice_; }
  Level granularity() const { return lattice_.granularity(); }
  std::size_t triple_count() const { return triples_.size(); }
  const AdjointTriple& triple(std::size_t i) const { return triples_.at(i); }
  const std::vector<AdjointTriple>& triples() const { return triples_; }

 private:
  GranularLattice lattice_;
  std::vector<AdjointTriple> triples_;
};

using FramePtr = std::shared_ptr<const Frame>;

FramePtr make_frame(long granularity, const std::vector<std::string>& builtin_names);

}  // namespace mafre
