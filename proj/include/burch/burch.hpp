#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "burch/artinian.hpp"
#include "burch/errors.hpp"
#include "burch/resolution.hpp"

namespace burch {

struct IdealInvariants {
  std::size_t length = 0;
  std::size_t edim = 0;
  std::size_t type = 0;
  std::size_t mu = 0;
  std::size_t mu_mi = 0;
  std::size_t choi = 0;
  std::size_t c_r = 0;
  std::vector<std::size_t> hilbert;
};

struct BurchReport {
  bool burch = false;
  bool depth_zero = false;
  std::string route = "definition";
  // A generator of m(I:m) outside mI.
  std::optional<Polynomial> witness;
  // Filled for m-primary ideals only.
  std::optional<IdealInvariants> invariants;
};

// I is Burch iff mI != m(I:m).
BurchReport burch_ideal_test(const Ideal& I);

struct Prop23Record {
  std::optional<bool> definition;     // mI != m(I:m)
  std::optional<bool> colon;          // (I:m) != (mI:m)
  std::optional<bool> socle_product;  // Soc(S/I) * m is not inside mI
  std::optional<bool> type_count;     // depth zero and r(S/mI) != r(S/I) + mu(I)
  std::vector<std::string> notices;
  bool agree() const;
};
Prop23Record prop23_crosscheck(const Ideal& I);

bool weakly_m_full_test(const Ideal& I);

struct MFullVerdict {
  bool found = false;
  std::optional<Polynomial> witness;
  std::size_t tested = 0;
};
// Tries every variable, then `trials` random linear forms. A negative answer is probabilistic.
MFullVerdict m_full_test(const Ideal& I, std::size_t trials = 20, std::uint64_t seed = 0);

// dim n(I:n)/nI for the maximal ideal n of the polynomial ring.
std::size_t choi_invariant(const Ideal& I);

struct CInvariant {
  std::size_t value = 0;
  bool degenerate = false;  // R is the field
  std::size_t socle = 0, h1 = 0, edim = 0, h1_reduced = 0, edim_reduced = 0;
};
CInvariant c_invariant(const QuotientAlgebra& R);

struct RingVerdict {
  bool burch = false;
  bool trivial = false;  // R is a field
  std::size_t c = 0;
  bool summand = false;  // k splits off the second syzygy of k
  std::optional<Vector> witness;
};
// Depth-zero Burch test via c_R, cross-checked against the second syzygy of k.
RingVerdict burch_ring_depth_zero(const QuotientAlgebra& R);

struct GorensteinBurch {
  bool gorenstein = false;
  bool burch = false;
  std::size_t edim = 0;
  std::size_t length = 0;
  // Gorenstein and Burch forces edim <= 1.
  bool consistent = true;
};
GorensteinBurch gorenstein_burch_classifier(const Ideal& I);

struct CubeZeroVerdict {
  bool burch = false;
  std::size_t beta2 = 0, edim = 0, type = 0;
};
// Requires m^3 = 0; Burch iff beta_2(k) > edim^2 - type.
CubeZeroVerdict cube_zero_test(const QuotientAlgebra& R);

// (I:J) not inside (IJ : (J:n) I_1(A)).
bool p1_condition(const Ideal& I, const Ideal& J, const PolyMatrix& A);

struct Lemma62Verdict {
  bool burch = false;
  std::size_t mu = 0, mu_mi = 0;
};
Lemma62Verdict lemma62_test(const Ideal& I);

class NotRegularError : public PreconditionError {
 public:
  NotRegularError(const std::string& element, const std::string& witness)
      : PreconditionError(element + " is a zero divisor: " + witness + " is not in the ideal but its product is"),
        witness_(witness) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

struct CutResult {
  Ideal ideal;                       // in the remaining variables
  std::vector<std::string> eliminated;
};
// Cuts S/I down by each element in turn after checking it is regular. Linear forms are
// eliminated by substitution; other elements need allow_nonlinear and are added as generators.
CutResult cut_down(const Ideal& I, const std::vector<Polynomial>& elems, bool allow_nonlinear = false);

struct FibreVerdict {
  bool burch = false;
  std::size_t c_s = 0, c_t = 0;
  long long n_term = 0;  // edim S * edim T - edim S' * edim T'
  bool direct = false;   // depth-zero test on the constructed fibre product
};
FibreVerdict fibre_burch(const QuotientAlgebra& S, const QuotientAlgebra& T);

// Nonfree modules for property checks: cyclic quotients by random ideals and
// cokernels of random matrices with entries in m.
std::vector<AlgebraModule> sample_modules(const AlgebraPtr& R, std::size_t count, std::mt19937_64& rng);

}  // namespace burch
