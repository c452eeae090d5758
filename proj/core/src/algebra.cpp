#include "mafre/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "mafre/errors.hpp"

namespace mafre {

namespace {

using u64 = std::uint64_t;

u64 isqrt(u64 v) {
  u64 r = 0;
  u64 bit = u64{1} << 62;
  while (bit > v) bit >>= 2;
  while (bit != 0) {
    if (v >= r + bit) {
      v -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

u64 ceil_div(u64 a, u64 b) { return (a + b - 1) / b; }

Level clip(u64 v, Level n) { return static_cast<Level>(std::min<u64>(v, n)); }

// All formulas below work on numerators: x = a/n, y = b/n, z = c/n.
//
// ceil(n * x^2 * y) / n = ceil(a^2 b / n^2) / n, and the residua are the
// greatest grid points satisfying the corresponding inequality:
//   floor(n z / x^2)     = floor(c n^2 / a^2)
//   floor(n sqrt(z / y)) = max{k : k^2 b <= c n^2} = isqrt(floor(c n^2 / b))

Level square_conj(u64 squared, u64 linear, u64 n) {
  return clip(ceil_div(squared * squared * linear, n * n), static_cast<Level>(n));
}

Level residuum_by_square(u64 c, u64 divisor, u64 n) {
  if (divisor == 0) return static_cast<Level>(n);
  return clip(c * n * n / (divisor * divisor), static_cast<Level>(n));
}

Level residuum_by_root(u64 c, u64 divisor, u64 n) {
  if (divisor == 0) return static_cast<Level>(n);
  return clip(isqrt(c * n * n / divisor), static_cast<Level>(n));
}

Level godel_residuum(u64 z, u64 arg, u64 n) {
  return arg <= z ? static_cast<Level>(n) : static_cast<Level>(z);
}

void check_table(const AdjointTriple::Table& t, Level n, const char* what) {
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  if (t.size() != side * side) {
    throw InputError(std::string(what) + " table must have " + std::to_string(side * side) +
                     " entries, got " + std::to_string(t.size()));
  }
  for (Level k : t) {
    if (k > n) {
      throw InputError(std::string(what) + " table entry " + std::to_string(k) +
                       " exceeds granularity " + std::to_string(n));
    }
  }
}

void require_same_granularity(const AdjointTriple& t, GranularValue a, GranularValue b) {
  if (a.granularity() != t.granularity() || b.granularity() != t.granularity()) {
    throw InputError("operand granularity does not match triple '" + t.name() + "' on [0,1]_" +
                     std::to_string(t.granularity()));
  }
}

}  // namespace

AdjointTriple::AdjointTriple(std::string name, Level granularity, Table conj,
                             Table left_residuum, Table right_residuum)
    : name_(std::move(name)),
      n_(GranularLattice(granularity).granularity()),
      conj_(std::move(conj)),
      left_(std::move(left_residuum)),
      right_(std::move(right_residuum)) {
  check_table(conj_, n_, "conjunctor");
  check_table(left_, n_, "left residuum");
  check_table(right_, n_, "right residuum");
}

std::vector<std::string> builtin_triple_names() { return {kSquareLeft, kSquareRight, kGodel}; }

AdjointTriple builtin_triple(const std::string& name, long n_in) {
  const Level n = GranularLattice(n_in).granularity();
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  AdjointTriple::Table conj(side * side), left(side * side), right(side * side);
  const u64 nn = n;

  for (u64 a = 0; a <= nn; ++a) {
    for (u64 b = 0; b <= nn; ++b) {
      const std::size_t i = static_cast<std::size_t>(a * side + b);
      // For residua the first argument is z = a and the second is b.
      if (name == kSquareLeft) {
        conj[i] = square_conj(a, b, nn);
        left[i] = residuum_by_root(a, b, nn);
        right[i] = residuum_by_square(a, b, nn);
      } else if (name == kSquareRight) {
        conj[i] = square_conj(b, a, nn);
        left[i] = residuum_by_square(a, b, nn);
        right[i] = residuum_by_root(a, b, nn);
      } else if (name == kGodel) {
        conj[i] = static_cast<Level>(std::min(a, b));
        left[i] = godel_residuum(a, b, nn);
        right[i] = godel_residuum(a, b, nn);
      } else {
        throw InputError("unknown built-in triple '" + name + "'");
      }
    }
  }
  AdjointTriple t(name, n, std::move(conj), std::move(left), std::move(right));
  t.builtin_ = true;
  return t;
}

AdjointTriple make_custom_triple(std::string name, Level granularity, AdjointTriple::Table conj,
                                 AdjointTriple::Table left_residuum,
                                 AdjointTriple::Table right_residuum) {
  AdjointTriple t(std::move(name), granularity, std::move(conj), std::move(left_residuum),
                  std::move(right_residuum));
  const auto report = verify_adjoint_triple(t, GranularLattice(granularity));
  if (!report.holds) {
    throw InputError("triple '" + t.name() + "' is not an adjoint triple: " +
                     report.describe(granularity));
  }
  return t;
}

std::string AdjunctionReport::describe(Level n) const {
  std::ostringstream os;
  if (holds) {
    os << "adjunction holds (" << checked << " triples checked)";
    return os.str();
  }
  const auto& w = *witness;
  os << "adjunction fails at x=" << format_level(w.x, n) << ", y=" << format_level(w.y, n)
     << ", z=" << format_level(w.z, n) << ": [x <= z<-y]=" << w.x_leq_left
     << " [x&y <= z]=" << w.conj_leq_z << " [y <= z<-x]=" << w.y_leq_right;
  return os.str();
}

AdjunctionReport verify_adjoint_triple(const AdjointTriple& t, const GranularLattice& l) {
  AdjunctionReport report;
  if (t.granularity() != l.granularity()) {
    throw InputError("triple '" + t.name() + "' is defined on a different lattice");
  }
  const Level n = l.granularity();
  for (Level x = 0; x <= n; ++x) {
    for (Level y = 0; y <= n; ++y) {
      for (Level z = 0; z <= n; ++z) {
        ++report.checked;
        const bool a = x <= t.left_residuum(z, y);
        const bool b = t.conj(x, y) <= z;
        const bool c = y <= t.right_residuum(z, x);
        if (a != b || b != c) {
          report.holds = false;
          report.witness = AdjunctionWitness{x, y, z, a, b, c};
          return report;
        }
      }
    }
  }
  return report;
}

GranularValue apply_conj(const AdjointTriple& t, GranularValue x, GranularValue y) {
  require_same_granularity(t, x, y);
  return GranularValue(t.conj(x.numerator(), y.numerator()), t.granularity());
}

GranularValue apply_left_residuum(const AdjointTriple& t, GranularValue z, GranularValue y) {
  require_same_granularity(t, z, y);
  return GranularValue(t.left_residuum(z.numerator(), y.numerator()), t.granularity());
}

GranularValue apply_right_residuum(const AdjointTriple& t, GranularValue z, GranularValue x) {
  require_same_granularity(t, z, x);
  return GranularValue(t.right_residuum(z.numerator(), x.numerator()), t.granularity());
}

Frame::Frame(GranularLattice lattice, std::vector<AdjointTriple> triples)
    : lattice_(lattice), triples_(std::move(triples)) {
  if (triples_.empty()) throw InputError("a frame needs at least one adjoint triple");
  for (const auto& t : triples_) {
    if (t.granularity() != lattice_.granularity()) {
      throw InputError("triple '" + t.name() + "' is on [0,1]_" +
                       std::to_string(t.granularity()) + ", frame is on [0,1]_" +
                       std::to_string(lattice_.granularity()));
    }
    const auto report = verify_adjoint_triple(t, lattice_);
    if (!report.holds) {
      throw InputError("triple '" + t.name() + "' rejected: " +
                       report.describe(lattice_.granularity()));
    }
  }
}

FramePtr make_frame(long granularity, const std::vector<std::string>& builtin_names) {
  std::vector<AdjointTriple> triples;
  for (const auto& name : builtin_names) triples.push_back(builtin_triple(name, granularity));
  return std::make_shared<const Frame>(GranularLattice(granularity), std::move(triples));
}

}  // namespace mafre
