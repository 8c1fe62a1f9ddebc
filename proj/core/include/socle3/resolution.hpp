#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "socle3/local_algebra.hpp"
#include "socle3/series.hpp"

namespace socle3 {

enum class BettiSource {
  DirectResolution,   // exact minimal resolution over Q
  LinearCertificate,  // linear resolution over F_p, transferred to Q (see linear_betti_certificate)
  FormulaExpansion,   // expansion of a Poincare series identity
};

struct BettiSequence {
  IntSeries values;  // b_0 .. b_N
  std::size_t algebra_dim = 0;
  BettiSource source = BettiSource::DirectResolution;
};

enum class FieldMode {
  Exact,           // rational arithmetic, certified
  PrimeHeuristic,  // arithmetic mod 2^61-1; agrees with Q except on a thin set of inputs
};

inline constexpr std::size_t kDefaultBettiOrder = 6;
inline constexpr std::size_t kMaxBettiOrder = 10;
// Default bound on d * b_{i-1}, the dimension of the space in which syzygies are computed.
inline constexpr std::size_t kDefaultMaxAmbient = 400000;

struct ResolutionOptions {
  FieldMode field = FieldMode::Exact;
  // Guard on d * b_{i-1}; the environment variable SOCLE3_MAX_DIM overrides the default.
  std::size_t max_ambient = 0;  // 0: default or environment
  // Split the linear algebra by a weighted grading of A when one exists.
  bool use_grading = true;
  // Keep the presentation matrices (exact mode only) for inspection.
  bool keep_matrices = false;
};

std::size_t effective_max_ambient(const ResolutionOptions& options);

// Column k of the presentation matrix F_i -> F_{i-1}: the image of the k-th generator of F_i,
// with coordinate g * dim(A) + l standing for basis element l on generator g of F_{i-1}.
struct ResolutionStep {
  std::size_t index;
  std::size_t rank;
  std::vector<int> generator_degrees;  // weighted internal degrees (all 0 if ungraded)
  std::vector<RationalVec> images;     // empty unless keep_matrices
};

struct Resolution {
  std::vector<ResolutionStep> steps;  // steps[i] describes F_i, i = 0..N
  std::optional<std::vector<int>> grading;
  BettiSequence betti;
};

// Minimal free resolution of the residue field over A through homological degree N.
Resolution resolve(const LocalAlgebra& A, std::size_t N, const ResolutionOptions& options = {});
BettiSequence betti_numbers(const LocalAlgebra& A, std::size_t N, const ResolutionOptions& options = {});

// Exact Betti numbers of a standard graded A whose minimal resolution over F_p, p = 2^61-1,
// is linear through step N. Over Q every graded Betti number is at most its value over F_p, so
// the resolution over Q is linear as well, and the Hilbert series then fixes b_i = [z^i] 1/H_A(-z).
// nullopt when A is not standard graded, a structure constant is not p-integral, or the
// resolution over F_p is not linear.
std::optional<BettiSequence> linear_betti_certificate(const LocalAlgebra& A, std::size_t N,
                                                      const ResolutionOptions& options = {});

// Composition of consecutive presentation matrices vanishes and every entry lies in the
// maximal ideal. Requires a resolution computed with keep_matrices.
bool check_resolution(const LocalAlgebra& A, const Resolution& res);

enum class FormulaVariant {
  ProofConsistent,  // P_B / (1 - (h-n) z P_B)
  AsDisplayed,      // P_B / (1 - (h-n) P_B)
};

// Coefficients through z^N of the Poincare series predicted from those of Q(0). The
// as-displayed variant may have non-integral coefficients; it returns nullopt when its
// denominator is not invertible (h - n = 1).
std::optional<QSeries> main_theorem_prediction(const IntSeries& betti_q0, std::size_t h, std::size_t n,
                                               std::size_t N, FormulaVariant variant = FormulaVariant::ProofConsistent);

// 1 / (1 - h z + n z^2 - z^3); with AsDisplayed, 1 / (n-h+1 - n z + n z^2 - z^3).
RationalFunction koszul_formula(std::size_t h, std::size_t n, FormulaVariant variant = FormulaVariant::ProofConsistent);

// Betti series of B times H_B(-z) equals 1 through z^N.
bool is_koszul_numerically(const LocalAlgebra& B, std::size_t N, const ResolutionOptions& options = {});

struct SocleFormulaCheck {
  bool applicable = false;
  std::string reason;                 // why the check does not apply
  std::optional<AlgebraElement> element;  // the socle element used
  IntSeries direct;                   // Betti numbers of A
  IntSeries quotient;                 // Betti numbers of the quotient
  QSeries predicted;
  bool holds = false;  // also filled for an inapplicable Gorenstein check on a hypersurface
};

struct SocleFormulaReport {
  SocleFormulaCheck linear_socle;  // x in socle \ m^2:  P_A = P_{A/x} / (1 - z P_{A/x})
  SocleFormulaCheck gorenstein;    // A Gorenstein, edim >= 2: P_A = P_{A/soc} / (1 + z^2 P_{A/soc})
};

SocleFormulaReport verify_socle_formulas(const LocalAlgebra& A, std::size_t N, const ResolutionOptions& options = {});

}  // namespace socle3
