#ifndef BRAIDFORCE_NIELSEN_HPP
#define BRAIDFORCE_NIELSEN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidforce/braid.hpp"
#include "braidforce/fox.hpp"
#include "braidforce/free_group.hpp"

namespace braidforce {

/// Search limits for the semi-decision procedures.
struct Bounds {
  int radius = 5;                    // max witness length in the BFS
  int k_max = 6;                     // max |k| tried in lambda * x_i^k
  std::size_t max_word_length = 128; // cap on input braid length (|beta| * m)
};

/// Two words whose canonical abelian labels differ, which rules out twisted
/// conjugacy.
struct AbelianCertificate {
  FreeWord lhs;
  FreeWord rhs;
  AbelianVector lhs_label;
  AbelianVector rhs_label;
};

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

class Decision {
 public:
  static Decision yes(FreeWord witness, std::string reason = {});
  static Decision no(std::vector<AbelianCertificate> certificates, std::string reason = {});
  static Decision unknown(std::string reason);

  Verdict verdict() const { return verdict_; }
  bool is_yes() const { return verdict_ == Verdict::Yes; }
  bool is_no() const { return verdict_ == Verdict::No; }
  bool is_unknown() const { return verdict_ == Verdict::Unknown; }
  const std::optional<FreeWord>& witness() const { return witness_; }
  const std::vector<AbelianCertificate>& certificates() const { return certificates_; }
  const std::string& reason() const { return reason_; }

 private:
  Decision(Verdict v, std::optional<FreeWord> w, std::vector<AbelianCertificate> c, std::string r)
      : verdict_(v), witness_(std::move(w)), certificates_(std::move(c)), reason_(std::move(r)) {}

  Verdict verdict_;
  std::optional<FreeWord> witness_;
  std::vector<AbelianCertificate> certificates_;
  std::string reason_;
};

/// The twist theta of the relation v = theta(a) u a^-1, together with the
/// data needed to decide it.
class TwistContext {
 public:
  TwistContext(FreeEndo theta, Bounds bounds);

  const FreeEndo& theta() const { return theta_; }
  const IntMatrix& matrix() const { return matrix_; }
  const Bounds& bounds() const { return bounds_; }
  int rank() const { return theta_.rank(); }

  /// Echelon basis of the column lattice of (matrix - I); row r has its
  /// positive pivot at column pivot_columns()[r].
  const IntMatrix& lattice_basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

 private:
  FreeEndo theta_;
  IntMatrix matrix_;
  Bounds bounds_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical representative of abelianize(w) modulo im(matrix - I). Equal
/// labels iff equal abelianized Reidemeister classes.
AbelianVector abelian_invariant(const TwistContext& ctx, const FreeWord& w);

/// theta(alpha) * u * alpha^-1.
FreeWord twisted_conjugate(const FreeEndo& theta, const FreeWord& u, const FreeWord& alpha);

/// Decides v = theta(a) u a^-1. Yes carries the shortest, enumeration-first
/// witness a; No carries an abelian certificate; Unknown when the BFS over
/// all a with |a| <= radius finds nothing.
Decision twisted_conj(const TwistContext& ctx, const FreeWord& u, const FreeWord& v);

struct TraceSummand {
  Integer coefficient;
  FreeWord representative;
  std::vector<FreeWord> members;  // raw trace terms merged into this class
};

struct ReidemeisterTrace {
  std::vector<TraceSummand> summands;
  std::vector<std::pair<FreeWord, FreeWord>> unresolved;
};

/// Greedy length descent by single-letter twisted conjugations; display
/// convention for class representatives.
FreeWord shorten_in_class(const FreeEndo& theta, const FreeWord& w);

ReidemeisterTrace merge(const TwistContext& ctx, const GroupRingElem& raw);

/// Twist f_pi^m induced by beta^m.
FreeEndo iterate_endo(const BraidWord& beta, int m, const Bounds& bounds);

ReidemeisterTrace reidemeister_trace(const BraidWord& beta, int m, const Bounds& bounds);

/// Puncture i with theta(x_i) = lambda x_i lambda^-1.
struct DegenerateFamily {
  int puncture;
  FreeWord lambda;
};

std::vector<DegenerateFamily> degenerate_families(const FreeEndo& theta);
std::vector<DegenerateFamily> degenerate_families(const BraidWord& beta, int m);

Decision is_degenerate(const TwistContext& ctx, const FreeWord& gamma, const std::vector<DegenerateFamily>& families);

struct ClassReport {
  Integer coefficient;
  FreeWord representative;
  AbelianVector label;
  Decision degeneracy;
};

struct NielsenAnalysis {
  TwistContext context;
  ReidemeisterTrace trace;
  std::vector<DegenerateFamily> families;
  std::vector<ClassReport> classes;
};

NielsenAnalysis analyze(const FreeEndo& theta, const Bounds& bounds);
std::vector<ClassReport> essential_nondegenerate(const BraidWord& beta, int m, const Bounds& bounds);

/// `+[x1] +[x5^-1] -[e]`; an empty trace prints as `0`.
std::string format_trace(const ReidemeisterTrace& trace);

}  // namespace braidforce

#endif  // BRAIDFORCE_NIELSEN_HPP
