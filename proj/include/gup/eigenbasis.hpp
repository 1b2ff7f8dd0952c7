#ifndef GUP_EIGENBASIS_HPP
#define GUP_EIGENBASIS_HPP

#include <complex>
#include <vector>

#include "gup/model.hpp"
#include "gup/quadrature.hpp"
#include "gup/states.hpp"

namespace gup {

// Discrete family xi_n = (2n + epsilon) * hbar * sqrt(beta), n in [n_min, n_max].
// Spacing is exactly 2*hbar*sqrt(beta); epsilon in [-1, 1] shifts the whole
// lattice (both endpoints are allowed and generate the same lattice offset by
// one site).
struct LatticeSpec {
  double epsilon = 0.0;
  int n_min = 0;
  int n_max = 0;

  void validate() const {
    if (!(epsilon >= -1.0 && epsilon <= 1.0))
      throw std::invalid_argument("LatticeSpec: epsilon must lie in [-1, 1]");
    if (n_min > n_max) throw std::invalid_argument("LatticeSpec: n_min > n_max");
  }
  int size() const { return n_max - n_min + 1; }
  double xi(int n, const ModelParams& params) const {
    return (2.0 * n + epsilon) * params.length_scale();
  }
};

enum class StateFamily { SymEigen, KmmEigen, MaxLoc };

const char* family_name(StateFamily family);
StateSpec make_family_state(StateFamily family, double xi);

// Gram matrix of a lattice family under a measure. Entries depend only on
// n - n' (translation invariance of the overlap integrals), so assembly costs
// one row of quadratures; ten pseudo-random entries are re-verified by direct
// quadrature as an honesty check on the Toeplitz fill.
class GramMatrix {
 public:
  GramMatrix(LatticeSpec lattice, Measure measure, std::vector<Complex> row,
             double max_error_estimate, long evaluations);

  int size() const { return lattice_.size(); }
  Complex at(int i, int j) const;  // 0-based row/col within the index window
  const LatticeSpec& lattice() const { return lattice_; }
  Measure measure() const { return measure_; }
  double max_error_estimate() const { return max_error_estimate_; }
  long evaluations() const { return evaluations_; }

  double max_deviation_from_identity() const;
  double max_entrywise_difference(const GramMatrix& other) const;

 private:
  LatticeSpec lattice_;
  Measure measure_;
  std::vector<Complex> row_;  // overlaps at separations 0 .. size-1
  double max_error_estimate_;
  long evaluations_;
};

// Closed-form overlap of two symmetrized-operator eigenstates,
//   <psi_xi | psi_xi'> = sin(y)/y,  y = (xi' - xi) * pi / (2 hbar sqrt(beta)),
// with a series branch at the removable singularity.
double eigen_overlap_analytic(double xi, double xi_prime, const ModelParams& params);

// Assembles the Gram matrix by quadrature. Throws QuadratureError (annotated
// with the failing index pair) when an entry integral does not converge, e.g.
// the KMM eigenstates under the Standard measure.
GramMatrix gram_matrix(const LatticeSpec& lattice, StateFamily family, Measure measure,
                       const ModelParams& params, const QuadratureConfig& cfg);

// Truncated completeness sum of |<psi_{2m hbar sqrt(beta)}|psi_xi>|^2 over
// |m| <= N, where epsilon is the reduced lattice offset of target_xi. The
// coincident-site term is the sinc limit 1; S_N increases to 1, and equals 1
// identically when target_xi sits on the epsilon = 0 lattice.
double parseval_sum(double target_xi, int truncation, const ModelParams& params);

// (U f)(t) = beta^(-1/4) sec(t) f(tan(t)/sqrt(beta)) on t in (-pi/2, pi/2);
// sends every eigenstate to the plane wave exp(-i xi t/(hbar sqrt(beta)))/sqrt(pi).
Complex unitary_map_image(const StateSpec& state, const ModelParams& params, double t);

struct IsometryCheck {
  IntegralResult mapped;  // <Uf, Ug> over (-pi/2, pi/2)
  IntegralResult direct;  // <f, g> over R
};

// Both sides of the isometry identity, computed by independent quadratures.
IsometryCheck verify_isometry(const StateSpec& f, const StateSpec& g,
                              const ModelParams& params, const QuadratureConfig& cfg);

}  // namespace gup

#endif  // GUP_EIGENBASIS_HPP
