#include "mfcat/axioms.hpp"

#include <algorithm>
#include <functional>

#include "mfcat/error.hpp"
#include "mfcat/sampling.hpp"
#include "mfcat/t_subcategory.hpp"
#include "mfcat/tensor.hpp"

namespace mfcat {

namespace {

std::string two_digits(unsigned n) { return (n < 10 ? "0" : "") + std::to_string(n); }

std::string size_tag(const MatrixFactorization& x) { return "size " + std::to_string(x.size()); }

bool is_identity_pair(const MfMorphism& m) {
  const auto id = PolyMatrix::identity(m.source().size());
  return m.alpha() == id && m.beta() == id;
}

// Runs body, turning library errors into a failed report.
CheckReport guarded(std::string id, Expectation expectation,
                    const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.check_id = std::move(id);
  r.expectation = expectation;
  try {
    body(r);
  } catch (const Error& e) {
    r.verdict = Verdict::Fail;
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  return r;
}

void conclude(CheckReport& r, bool holds, const std::string& if_holds, const std::string& if_not) {
  r.verdict = verdict_for(holds, r.expectation);
  if (r.verdict == Verdict::Fail && r.expectation == Expectation::Fail)
    r.detail = "expected failure not observed: " + if_holds;
  else
    r.detail = holds ? if_holds : if_not;
}

// Shared body of diagrams (2) and (3): `top` goes a*b -> (e*a)*b or
// a*(e*b), `diag` is gamma_{a*b}.
void witness_triangle(CheckReport& r, const MfMorphism& top, const MfMorphism& diag) {
  const PolyMatrix p = find_permutation_witness(top.alpha(), diag.alpha());
  const PolyMatrix pt = p.transpose();
  r.add_witness("P", p);
  const std::size_t n = p.rows();
  const bool permutation = is_permutation_matrix(p) && p * pt == PolyMatrix::identity(n);
  const auto zeta = MfMorphism::make(top.target(), diag.target(), p, p);
  const auto zeta_inv = MfMorphism::make(diag.target(), top.target(), pt, pt);
  const bool inverse = compose(zeta_inv, zeta) == MfMorphism::identity(top.target()) &&
                       compose(zeta, zeta_inv) == MfMorphism::identity(diag.target());
  const bool commutes = compose(zeta, top) == diag;
  conclude(r, permutation && inverse && commutes,
           std::to_string(n) + "x" + std::to_string(n) +
               " permutation witness, (P,P) and (P^t,P^t) inverse, triangle commutes",
           std::string("witness ") + (permutation ? "is" : "is not") + " a permutation, " +
               (inverse ? "inverse pair ok" : "inverse pair broken") + ", triangle " +
               (commutes ? "commutes" : "does not commute"));
}

std::vector<MatrixFactorization> e_powers(unsigned maxpow) {
  std::vector<MatrixFactorization> out;
  for (unsigned n = 1; n <= maxpow; ++n) out.push_back(e_power(n));
  return out;
}

// All (1,0) sub-permutation matrices of the given shape.
std::vector<PolyMatrix> sub_permutations(std::size_t rows, std::size_t cols) {
  std::vector<PolyMatrix> out;
  std::vector<PolyMatrix::Triplet> current;
  std::vector<bool> row_used(rows, false);
  std::function<void(std::size_t)> rec = [&](std::size_t col) {
    if (col == cols) {
      out.push_back(PolyMatrix::from_entries(rows, cols, current));
      return;
    }
    rec(col + 1);
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r]) continue;
      row_used[r] = true;
      current.push_back({r, col, Polynomial(1)});
      rec(col + 1);
      current.pop_back();
      row_used[r] = false;
    }
  };
  rec(0);
  return out;
}

MatrixFactorization sample_mf1(Rng& rng) {
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  return random_mf1(rng, size, 4);
}

// Among all permutations P with P * a == b (a, b sub-permutation), counts
// those that commute with m. P m = m P iff m[s(i)][s(j)] = m[i][j] for the
// row map s of P.
std::string rearranging_census(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& m) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> sigma(n, n);
  std::vector<bool> hit(n, false);
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      if (ea.col == eb.col) {
        sigma[ea.row] = eb.row;
        hit[eb.row] = true;
      }
  std::vector<std::size_t> free_src, free_dst;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] == n) free_src.push_back(i);
    if (!hit[i]) free_dst.push_back(i);
  }
  std::vector<Polynomial> dense(n * n);
  for (const auto& e : m.entries()) dense[e.row * n + e.col] = m.value_of(e);
  std::size_t total = 0, commuting = 0;
  do {
    for (std::size_t k = 0; k < free_src.size(); ++k) sigma[free_src[k]] = free_dst[k];
    ++total;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = dense[sigma[i] * n + sigma[j]] == dense[i * n + j];
    if (ok) ++commuting;
  } while (std::next_permutation(free_dst.begin(), free_dst.end()));
  return std::to_string(commuting) + " of " + std::to_string(total) +
         " permutations solving the rearrangement equation commute with M";
}

}  // namespace

CheckReport summarize(std::string check_id, Expectation expectation, std::string what,
                      const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.expectation = expectation;
  std::size_t failed = 0;
  const CheckReport* first = nullptr;
  for (const auto& p : parts) {
    r.literal_only = r.literal_only || p.literal_only;
    if (p.verdict == Verdict::Fail) {
      if (!first) first = &p;
      ++failed;
    }
  }
  if (expectation == Expectation::None) {
    r.verdict = Verdict::Info;
  } else if (failed > 0) {
    r.verdict = Verdict::Fail;
  } else {
    r.verdict = expectation == Expectation::Fail ? Verdict::ExpectedFailConfirmed : Verdict::Pass;
  }
  r.detail = std::to_string(parts.size()) + " " + what + ", " + std::to_string(failed) + " failed";
  if (first) {
    r.detail += "; first: " + first->check_id + " " + first->detail;
    r.witnesses = first->witnesses;
  }
  return r;
}

CheckReport check_pentagon(const MatrixFactorization& a, const MatrixFactorization& b,
                           const MatrixFactorization& c, const MatrixFactorization& d) {
  return guarded("pentagon", Expectation::Pass, [&](CheckReport& r) {
    const auto ab = mult_tensor(a, b);
    const auto upper = compose(associator(a, b, mult_tensor(c, d)), associator(ab, c, d));
    const auto lower =
        compose(mult_tensor_morph_right(a, associator(b, c, d)),
                compose(associator(a, mult_tensor(b, c), d),
                        mult_tensor_morph_left(associator(a, b, c), d)));
    r.add_witness("upper", upper);
    r.add_witness("lower", lower);
    conclude(r, upper == lower, "both paths agree (" + size_tag(upper.source()) + ")",
             "the two pentagon paths differ");
  });
}

CheckReport check_semiunit_diagram1(const MatrixFactorization& a, const MatrixFactorization& b) {
  return guarded("diagram1", Expectation::Pass, [&](CheckReport& r) {
    const auto e = unit_e();
    const auto ab = mult_tensor(a, b);
    const auto top =
        compose(associator(a, b, e), compose(l_iso(ab), associator(e, a, b)));
    const auto la_b = mult_tensor_morph_left(l_iso(a), b);
    const auto a_lb = mult_tensor_morph_right(a, l_iso(b));
    const auto bottom = compose(a_lb, compose(associator(a, e, b), la_b));
    r.add_witness("l_a*b", la_b);
    r.add_witness("a*l_b", a_lb);
    const bool edges = is_identity_pair(la_b) && is_identity_pair(a_lb) &&
                       la_b.alpha() == a_lb.alpha() && la_b.beta() == a_lb.beta();
    conclude(r, top == bottom && edges,
             "both paths agree, l_a*b = a*l_b = identity of " + size_tag(top.source()),
             top == bottom ? "l_a*b and a*l_b are not both the identity"
                           : "the two paths differ");
  });
}

CheckReport check_semiunit_diagram2(const MatrixFactorization& a, const MatrixFactorization& b) {
  return guarded("diagram2", Expectation::Pass, [&](CheckReport& r) {
    witness_triangle(r, mult_tensor_morph_left(gamma(a), b), gamma(mult_tensor(a, b)));
  });
}

CheckReport check_semiunit_diagram3(const MatrixFactorization& a, const MatrixFactorization& b) {
  return guarded("diagram3", Expectation::Pass, [&](CheckReport& r) {
    witness_triangle(r, mult_tensor_morph_right(a, gamma(b)), gamma(mult_tensor(a, b)));
  });
}

CheckReport check_triangle(const MatrixFactorization& a, const MatrixFactorization& b) {
  const Expectation expect = a.size() == 1 ? Expectation::Pass : Expectation::Fail;
  return guarded("triangle", expect, [&](CheckReport& r) {
    const auto rho_1 = mult_tensor_morph_pair(rho(a), MfMorphism::identity(b));
    const auto one_lambda = mult_tensor_morph_pair(MfMorphism::identity(a), lambda_(b));
    r.add_witness("rho_a*1_b", rho_1);
    r.add_witness("1_a*lambda_b", one_lambda);
    const auto e = unit_e();
    const bool bracketings_agree =
        mult_tensor(mult_tensor(a, e), b) == mult_tensor(a, mult_tensor(e, b));
    if (bracketings_agree) {
      const bool holds = compose(one_lambda, associator(a, e, b)) == rho_1;
      conclude(r, holds, "rho_a*1_b = (1_a*lambda_b) alpha_{a,e,b}",
               "rho_a*1_b and (1_a*lambda_b) alpha_{a,e,b} differ (" + size_tag(a) + ")");
      return;
    }
    // No identity associator exists; compare the two whiskered maps directly.
    const bool holds =
        rho_1.alpha() == one_lambda.alpha() && rho_1.beta() == one_lambda.beta();
    conclude(r, holds, "rho_a*1_b = 1_a*lambda_b (bracketings differ literally)",
             "rho_a*1_b != 1_a*lambda_b for " + size_tag(a) +
                 " (bracketings (a*e)*b and a*(e*b) also differ literally)");
  });
}

std::vector<CheckReport> check_right_monoidal_axioms(unsigned maxpow) {
  std::vector<CheckReport> out;
  const auto objs = e_powers(maxpow);
  const auto e = unit_e();
  {
    std::vector<CheckReport> parts;
    const unsigned k1 = maxpow;
    for (unsigned k = 0; k < k1; ++k)
      for (unsigned l = 0; l < k1; ++l)
        for (unsigned m = 0; m < k1; ++m)
          for (unsigned n = 0; n < k1; ++n) {
            const auto &K = objs[k], &L = objs[l], &M = objs[m], &N = objs[n];
            parts.push_back(guarded("ax1", Expectation::Pass, [&](CheckReport& r) {
              const auto lhs = compose(
                  mult_tensor_morph_left(associator_inverse(K, L, M), N),
                  compose(associator_inverse(K, mult_tensor(L, M), N),
                          mult_tensor_morph_right(K, associator_inverse(L, M, N))));
              const auto rhs = compose(associator_inverse(mult_tensor(K, L), M, N),
                                       associator_inverse(K, L, mult_tensor(M, N)));
              conclude(r, lhs == rhs, "holds", "sides differ");
            }));
          }
    auto s = summarize("right_monoidal.ax1", Expectation::Pass, "quadruples", parts);
    s.expectation = Expectation::None;
    s.verdict = Verdict::Info;
    out.push_back(std::move(s));
  }
  for (unsigned p = 1; p <= maxpow; ++p) {
    for (unsigned m = 1; m <= maxpow; ++m) {
      const auto& M = objs[p - 1];
      const auto& N = objs[m - 1];
      const std::string tag = ".p" + two_digits(p) + ".m" + two_digits(m);
      out.push_back(guarded("right_monoidal.ax2" + tag, Expectation::Fail, [&](CheckReport& r) {
        const auto lhs = compose(associator_inverse(e, M, N), gamma(mult_tensor(M, N)));
        const auto rhs = mult_tensor_morph_left(gamma(M), N);
        r.add_witness("lhs", lhs.alpha());
        r.add_witness("rhs", rhs.alpha());
        if (lhs == rhs) {
          conclude(r, true, "sides are equal", "");
          return;
        }
        const PolyMatrix p_w = find_permutation_witness(rhs.alpha(), lhs.alpha());
        r.add_witness("P", p_w);
        r.verdict = Verdict::ExpectedFailConfirmed;
        r.detail = "sides row-permutation equivalent but not equal";
      }));
      out.push_back(guarded("right_monoidal.ax3" + tag, Expectation::None, [&](CheckReport& r) {
        const auto lhs = compose(rho(mult_tensor(M, N)), associator_inverse(M, N, e));
        const auto rhs = mult_tensor_morph_right(M, rho(N));
        conclude(r, lhs == rhs, "holds", "sides differ");
      }));
      out.push_back(guarded("right_monoidal.ax4" + tag, Expectation::None, [&](CheckReport& r) {
        const auto lhs =
            compose(mult_tensor_morph_left(rho(M), N),
                    compose(associator_inverse(M, e, N), mult_tensor_morph_right(M, gamma(N))));
        conclude(r, lhs == MfMorphism::identity(mult_tensor(M, N)), "holds",
                 "composite is not the identity");
      }));
    }
  }
  out.push_back(guarded("right_monoidal.ax5", Expectation::None, [&](CheckReport& r) {
    conclude(r, compose(rho(e), gamma(e)) == MfMorphism::identity(e), "rho_e gamma_e = id_e",
             "rho_e gamma_e != id_e");
  }));
  return out;
}

std::vector<CheckReport> check_right_pseudo_monoidal(unsigned samples, std::uint64_t seed) {
  Rng rng(seed);
  const auto e = unit_e();
  std::vector<MatrixFactorization> objs{e};
  for (unsigned i = 0; i < samples; ++i) objs.push_back(sample_mf1(rng));

  std::vector<CheckReport> out;
  out.push_back(guarded("pseudo_monoidal.i.zeta_right_inverse", Expectation::Pass,
                        [&](CheckReport& r) {
                          const auto zeta = lambda_(e);
                          const auto zeta_r = gamma(e);
                          r.add_witness("zeta", zeta);
                          conclude(r, compose(zeta, zeta_r) == MfMorphism::identity(e),
                                   "zeta: e^2 -> e has right inverse (1,0)^t",
                                   "zeta gamma_e != id_e");
                        }));

  std::vector<CheckReport> nat_lambda, nat_gamma, retract, rho_lambda, tri_e, tri_big, pent;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto& a = objs[i];
    const auto& b = objs[(i + 1) % objs.size()];
    const std::string id = "sample" + std::to_string(i);
    nat_lambda.push_back(guarded(id, Expectation::Pass, [&](CheckReport& r) {
      const auto nu = random_mf1_morphism(rng, a, b);
      const auto lhs = compose(nu, lambda_(a));
      const auto rhs = compose(lambda_(b), mult_tensor_morph_right(e, nu));
      conclude(r, lhs == rhs, "commutes", "lambda naturality square differs");
    }));
    nat_gamma.push_back(guarded(id, Expectation::Pass, [&](CheckReport& r) {
      const auto mu = random_mf1_morphism(rng, a, b);
      const auto lhs = compose(mult_tensor_morph_right(e, mu), gamma(a));
      const auto rhs = compose(gamma(b), mu);
      conclude(r, lhs == rhs, "commutes", "gamma naturality square differs");
    }));
    retract.push_back(guarded(id, Expectation::Pass, [&](CheckReport& r) {
      conclude(r, compose(lambda_(a), gamma(a)) == MfMorphism::identity(a), "holds",
               "lambda_a gamma_a != id_a");
    }));
    rho_lambda.push_back(guarded(id, Expectation::Pass, [&](CheckReport& r) {
      const auto l = lambda_(a), p = rho(a);
      conclude(r, l.alpha() == p.alpha() && l.beta() == p.beta() && l.source() == p.source(),
               "holds", "rho_a and lambda_a differ");
    }));
    tri_e.push_back(check_triangle(e, a));
    if (a.size() >= 2) tri_big.push_back(check_triangle(a, b));
    if (a.size() == 1 && b.size() == 1)
      pent.push_back(check_pentagon(a, b, objs[(i + 2) % objs.size()], objs[(i + 3) % objs.size()]));
  }
  out.push_back(summarize("pseudo_monoidal.ii.lambda_naturality", Expectation::Pass, "samples",
                          nat_lambda));
  out.push_back(summarize("pseudo_monoidal.ii.gamma_naturality", Expectation::Pass, "samples",
                          nat_gamma));
  out.push_back(
      summarize("pseudo_monoidal.iii.lambda_gamma_identity", Expectation::Pass, "samples", retract));
  out.push_back(summarize("pseudo_monoidal.iv.rho_equals_lambda", Expectation::Pass, "samples",
                          rho_lambda));
  out.push_back(guarded("pseudo_monoidal.iv.rho_e_equals_lambda_e", Expectation::Pass,
                        [&](CheckReport& r) {
                          conclude(r, rho(e) == lambda_(e), "rho_e = lambda_e",
                                   "rho_e != lambda_e");
                        }));
  out.push_back(summarize("pseudo_monoidal.v.triangle_at_e", Expectation::Pass, "samples", tri_e));
  out.push_back(summarize("pseudo_monoidal.v.triangle_nontrivial", Expectation::Fail,
                          "samples of size >= 2", tri_big));
  out.push_back(summarize("pseudo_monoidal.pentagon", Expectation::Pass,
                          "quadruples with size-1 leading objects", pent));
  return out;
}

CheckReport counterexample_e_not_pseudo_idempotent() {
  return guarded("counterexample.e_not_pseudo_idempotent", Expectation::Fail,
                 [&](CheckReport& r) {
                   const auto e = unit_e(), e2 = e_power(2);
                   std::size_t pairs = 0, isos = 0;
                   for (const auto& f : sub_permutations(2, 1)) {
                     for (const auto& g : sub_permutations(1, 2)) {
                       const auto to = MfMorphism::make(e, e2, f, f);
                       const auto back = MfMorphism::make(e2, e, g, g);
                       ++pairs;
                       if (compose(back, to) == MfMorphism::identity(e) &&
                           compose(to, back) == MfMorphism::identity(e2))
                         ++isos;
                     }
                   }
                   const auto z1 = gamma(e);
                   const auto z2 = lambda_(e);
                   const auto z21 = compose(z2, z1);
                   const auto z12 = compose(z1, z2);
                   r.add_witness("zeta2*zeta1", z21);
                   r.add_witness("zeta1*zeta2", z12);
                   const bool reproduced = z21 == MfMorphism::identity(e) &&
                                           !(z12 == MfMorphism::identity(e2));
                   if (isos > 0 || !reproduced) {
                     r.verdict = Verdict::Fail;
                     r.detail = isos > 0 ? "expected failure not observed: found " +
                                               std::to_string(isos) + " isomorphism pair(s)"
                                         : "zeta2 zeta1 = id_e, zeta1 zeta2 != id_e^2 not reproduced";
                     return;
                   }
                   r.verdict = Verdict::ExpectedFailConfirmed;
                   r.detail = std::to_string(pairs) +
                              " candidate pairs, 0 isomorphisms; zeta2 zeta1 = id_e, "
                              "zeta1 zeta2 = diag(1,0) != id_e^2";
                 });
}

CheckReport counterexample_mf1_not_semiunital() {
  return guarded("counterexample.mf1_not_semiunital", Expectation::Fail, [&](CheckReport& r) {
    const auto a = MatrixFactorization::make(parse_matrix("[[4, 3], [1, 1]]"),
                                             parse_matrix("[[1, -3], [-1, 4]]"), Polynomial(1));
    const auto b = e_power(2);
    const auto e = unit_e();
    const auto target = mult_tensor(mult_tensor(e, a), b);
    const auto source = mult_tensor(e, mult_tensor(a, b));
    const PolyMatrix& m = target.phi();
    const auto top = mult_tensor_morph_left(gamma(a), b);
    const auto diag = gamma(mult_tensor(a, b));
    const PolyMatrix p = find_permutation_witness(diag.alpha(), top.alpha());
    r.add_witness("M", m);
    r.add_witness("P'", p);
    const bool rearranges = p * diag.alpha() == top.alpha();
    const bool commutes = p * m == m * p;
    bool is_morphism = true;
    try {
      MfMorphism::make(source, target, p, p);
    } catch (const SquareFailure&) {
      is_morphism = false;
    }
    if (!rearranges) {
      r.verdict = Verdict::Fail;
      r.detail = "P' does not rearrange gamma_{a*b} into gamma_a*b";
      return;
    }
    r.add_note("rearranging permutations", rearranging_census(diag.alpha(), top.alpha(), m));
    const bool fails = !commutes && !is_morphism;
    r.verdict = fails ? Verdict::ExpectedFailConfirmed : Verdict::Fail;
    r.detail = fails ? "P' rearranges gamma_{a*b} into gamma_a*b but P'M != MP', so (P',P') "
                       "is not a morphism"
                     : "expected failure not observed: P'M = MP' and (P',P') validated (" +
                           std::get<std::string>(r.witnesses.back().value) + ")";
  });
}

std::vector<CheckReport> suite_t_semiunital(unsigned maxpow) {
  const auto objs = e_powers(maxpow);
  std::vector<CheckReport> out;
  std::vector<CheckReport> pent, d1, d2, d3;
  for (unsigned i = 0; i < maxpow; ++i)
    for (unsigned j = 0; j < maxpow; ++j) {
      const std::string tag = "e^" + std::to_string(i + 1) + ",e^" + std::to_string(j + 1);
      auto tagged = [&](CheckReport r) {
        r.check_id += "(" + tag + ")";
        return r;
      };
      d1.push_back(tagged(check_semiunit_diagram1(objs[i], objs[j])));
      d2.push_back(tagged(check_semiunit_diagram2(objs[i], objs[j])));
      d3.push_back(tagged(check_semiunit_diagram3(objs[i], objs[j])));
      for (unsigned k = 0; k < maxpow; ++k)
        for (unsigned l = 0; l < maxpow; ++l) {
          auto r = check_pentagon(objs[i], objs[j], objs[k], objs[l]);
          if (r.verdict == Verdict::Fail)
            r.check_id += "(" + tag + ",e^" + std::to_string(k + 1) + ",e^" +
                          std::to_string(l + 1) + ")";
          r.witnesses.clear();
          pent.push_back(std::move(r));
        }
    }
  out.push_back(summarize("t.pentagon", Expectation::Pass, "e-power quadruples", pent));
  out.push_back(summarize("t.semiunit.diagram1", Expectation::Pass, "e-power pairs", d1));
  out.push_back(summarize("t.semiunit.diagram2", Expectation::Pass, "e-power pairs", d2));
  out.push_back(summarize("t.semiunit.diagram3", Expectation::Pass, "e-power pairs", d3));

  std::vector<CheckReport> conn;
  const unsigned cmax = std::max(maxpow, 1u);
  for (unsigned m = 1; m <= cmax; ++m)
    for (unsigned p = 1; p <= cmax; ++p)
      conn.push_back(guarded("connecting(" + std::to_string(m) + "," + std::to_string(p) + ")",
                             Expectation::Pass, [&](CheckReport& r) {
                               const auto z = connecting_morphism(m, p);
                               conclude(r, is_t_morphism(z) && !z.alpha().is_zero(),
                                        "nonzero T-morphism", "not a nonzero T-morphism");
                             }));
  out.push_back(summarize("t.one_step_connected", Expectation::Pass, "exponent pairs", conn));
  return out;
}

std::vector<CheckReport> suite_counterexamples() {
  return {counterexample_e_not_pseudo_idempotent(), counterexample_mf1_not_semiunital()};
}

std::vector<CheckReport> suite_tensor(unsigned samples, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckReport> book, syz, ineq, ids, inter;
  for (unsigned i = 0; i < samples; ++i) {
    const std::string id = "sample" + std::to_string(i);
    const auto x = random_mf(rng), y = random_mf(rng);
    book.push_back(guarded(id, Expectation::Pass, [&](CheckReport& r) {
      const auto yo = yoshino_tensor(x, y), mu = mult_tensor(x, y);
      const std::size_t expect = 2 * x.size() * y.size();
      conclude(r,
               yo.size() == expect && mu.size() == expect &&
                   yo.potential() == x.potential() + y.potential() &&
                   mu.potential() == x.potential() * y.potential(),
               "sizes 2nm, potentials f+g and fg", "size or potential mismatch");
    }));
    syz.push_back(check_syzygy_identity(x, y));
    syz.back().witnesses.clear();
    ineq.push_back(check_syzygy_inequalities(x, y));

    const auto x1 = sample_mf1(rng), x2 = sample_mf1(rng), x3 = sample_mf1(rng);
    const auto y1 = sample_mf1(rng), y2 = sample_mf1(rng), y3 = sample_mf1(rng);
    ids.push_back(guarded(id, Expectation::Pass, [&](CheckReport& r) {
      conclude(r,
               mult_tensor_morph_pair(MfMorphism::identity(x1), MfMorphism::identity(y1)) ==
                   MfMorphism::identity(mult_tensor(x1, y1)),
               "id*id = id", "id*id != id");
    }));
    inter.push_back(guarded(id, Expectation::Pass, [&](CheckReport& r) {
      const auto f = random_mf1_morphism(rng, x1, x2), g = random_mf1_morphism(rng, x2, x3);
      const auto f2 = random_mf1_morphism(rng, y1, y2), g2 = random_mf1_morphism(rng, y2, y3);
      const auto lhs = mult_tensor_morph_pair(compose(g, f), compose(g2, f2));
      const auto rhs = compose(mult_tensor_morph_pair(g, g2), mult_tensor_morph_pair(f, f2));
      conclude(r, lhs == rhs, "interchange holds", "interchange fails");
    }));
  }
  return {summarize("tensor.bookkeeping", Expectation::Pass, "random pairs", book),
          summarize("tensor.syzygy_identity", Expectation::Pass, "random pairs", syz),
          summarize("tensor.syzygy_inequalities", Expectation::Pass, "random pairs (literal-only)",
                    ineq),
          summarize("tensor.bifunctor_identity", Expectation::Pass, "MF(1) pairs", ids),
          summarize("tensor.bifunctor_interchange", Expectation::Pass, "MF(1) composable pairs",
                    inter)};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",           "t-semiunital",
                                              "right-monoidal", "pseudo-monoidal",
                                              "counterexamples", "tensor"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, unsigned maxpow, unsigned samples,
                                   std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  std::vector<CheckReport> out;
  auto append = [&out](std::vector<CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = name == "all";
  if (all || name == "t-semiunital") append(suite_t_semiunital(maxpow));
  if (all || name == "right-monoidal") append(check_right_monoidal_axioms(maxpow));
  if (all || name == "pseudo-monoidal") append(check_right_pseudo_monoidal(samples, seed));
  if (all || name == "counterexamples") append(suite_counterexamples());
  if (all || name == "tensor") append(suite_tensor(samples, seed));
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    return a.check_id < b.check_id;
  });
  return out;
}

std::vector<CheckReport> suite_all(unsigned maxpow, unsigned samples, std::uint64_t seed) {
  return run_suite("all", maxpow, samples, seed);
}

}  // namespace mfcat
