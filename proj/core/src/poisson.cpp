#include <gmp.h>
#include <mpfr.h>

#include <limits>
#include <string>

#include "staircase/moments.hpp"

namespace staircase {

namespace {

constexpr mpfr_prec_t kPrecisionBits = 200;

// Minimal RAII holder for an MPFR value.
class Real {
 public:
  Real() { mpfr_init2(v_, kPrecisionBits); mpfr_set_zero(v_, 1); }
  explicit Real(const Rational& q) : Real() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_decimal(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  mpfr_t v_;
};

}  // namespace

TvDistance tv_to_poisson(const Pmf& p, const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("Poisson parameter must be positive");
  Real lam(lambda);
  Real pi;  // pi_k = e^{-lambda} lambda^k / k!
  mpfr_neg(pi.get(), lam.get(), MPFR_RNDN);
  mpfr_exp(pi.get(), pi.get(), MPFR_RNDN);
  Real cumulative;
  Real abs_sum;
  Real diff;
  const std::size_t support = std::max<std::size_t>(p.size(), 1);
  for (std::size_t k = 0; k < support; ++k) {
    if (k > 0) {
      mpfr_mul(pi.get(), pi.get(), lam.get(), MPFR_RNDN);
      mpfr_div_ui(pi.get(), pi.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    }
    mpfr_add(cumulative.get(), cumulative.get(), pi.get(), MPFR_RNDN);
    Real mass(p.at(k));
    mpfr_sub(diff.get(), mass.get(), pi.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    mpfr_add(abs_sum.get(), abs_sum.get(), diff.get(), MPFR_RNDN);
  }
  // Poisson mass beyond the support of p, where p itself is zero.
  Real tail;
  mpfr_ui_sub(tail.get(), 1, cumulative.get(), MPFR_RNDN);
  if (mpfr_sgn(tail.get()) < 0) mpfr_set_zero(tail.get(), 1);
  Real tv;
  mpfr_add(tv.get(), abs_sum.get(), tail.get(), MPFR_RNDN);
  mpfr_div_ui(tv.get(), tv.get(), 2, MPFR_RNDN);

  // Tail bound: P(Y >= K) <= pi_K / (1 - lambda/(K+1)) when K+1 > lambda.
  Real pi_next;
  mpfr_mul(pi_next.get(), pi.get(), lam.get(), MPFR_RNDN);
  mpfr_div_ui(pi_next.get(), pi_next.get(), static_cast<unsigned long>(support), MPFR_RNDN);
  double bound = std::numeric_limits<double>::infinity();
  const Rational ratio = lambda / Rational(static_cast<long>(support + 1));
  if (ratio < 1) {
    Real factor(1 - ratio);
    mpfr_div(pi_next.get(), pi_next.get(), factor.get(), MPFR_RNDU);
    bound = pi_next.to_double();
  }

  TvDistance out;
  out.value = tv.to_double();
  out.decimal = tv.to_decimal(20);
  out.poisson_tail = tail.to_double();
  out.tail_bound = bound;
  return out;
}

}  // namespace staircase
