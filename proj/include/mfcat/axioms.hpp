#pragma once

// Executable verdicts for the coherence diagrams, axioms and counterexamples
// of the multiplicative tensor product on MF(1) and on T.

#include <cstdint>
#include <string>
#include <vector>

#include "mfcat/factorization.hpp"
#include "mfcat/report.hpp"

namespace mfcat {

// Both pentagon paths ((a*b)*c)*d -> a*(b*(c*d)) agree. Fails (with the
// associator error as detail) when an associator does not exist.
CheckReport check_pentagon(const MatrixFactorization& a, const MatrixFactorization& b,
                           const MatrixFactorization& c, const MatrixFactorization& d);

// Diagram (1): alpha_{a,b,e} l_{a*b} alpha_{e,a,b} = (a*l_b) alpha_{a,e,b} (l_a*b),
// plus l_a*b == a*l_b == identity. For e-powers.
CheckReport check_semiunit_diagram1(const MatrixFactorization& a, const MatrixFactorization& b);
// Diagram (2): a permutation P with (P,P) (gamma_a*b) = gamma_{a*b}, (P,P) and
// (P^t,P^t) mutually inverse morphisms.
CheckReport check_semiunit_diagram2(const MatrixFactorization& a, const MatrixFactorization& b);
// Diagram (3): as (2) with a*gamma_b on the top edge.
CheckReport check_semiunit_diagram3(const MatrixFactorization& a, const MatrixFactorization& b);

// (1_a * lambda_b) alpha_{a,e,b} = rho_a * 1_b. Expected to hold iff size(a) == 1.
CheckReport check_triangle(const MatrixFactorization& a, const MatrixFactorization& b);

// Ax.1 - Ax.5 of a right-monoidal structure on e-powers up to maxpow. Ax.2 is
// expected to fail for every pair; the other axioms are informational.
std::vector<CheckReport> check_right_monoidal_axioms(unsigned maxpow);

// Right pseudo-monoidal structure of MF(1) on e and `samples` random objects.
std::vector<CheckReport> check_right_pseudo_monoidal(unsigned samples, std::uint64_t seed);

// No T-isomorphism e <-> e^2 among all (1,0) candidates.
CheckReport counterexample_e_not_pseudo_idempotent();
// The rearranging permutation of diagram (2) is not a morphism for
// a = ([[4,3],[1,1]], [[1,-3],[-1,4]]), b = (I_2, I_2).
CheckReport counterexample_mf1_not_semiunital();

// Suites over e-powers with exponents <= maxpow.
std::vector<CheckReport> suite_t_semiunital(unsigned maxpow);
std::vector<CheckReport> suite_counterexamples();
// Tensor bookkeeping, syzygy identity and bifunctor laws on random samples.
std::vector<CheckReport> suite_tensor(unsigned samples, std::uint64_t seed);
std::vector<CheckReport> suite_all(unsigned maxpow = 5, unsigned samples = 50, std::uint64_t seed = 0);

// Runs a named suite: all, t-semiunital, right-monoidal, pseudo-monoidal,
// counterexamples, tensor. Throws Error(InvalidArgument) on unknown names.
std::vector<CheckReport> run_suite(const std::string& name, unsigned maxpow, unsigned samples,
                                   std::uint64_t seed);
const std::vector<std::string>& suite_names();

// Folds per-case reports into one: Pass (or XFAIL-OK) iff no part failed.
CheckReport summarize(std::string check_id, Expectation expectation, std::string what,
                      const std::vector<CheckReport>& parts);

}  // namespace mfcat
