#include "clusterkit/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace clusterkit {

// ------------------------------------------------------------ ExponentVector

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i, int power) {
  ExponentVector e(n);
  e.exps_.at(i) = power;
  return e;
}

long ExponentVector::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool ExponentVector::is_nonnegative() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; });
}

bool ExponentVector::dominates(const ExponentVector& b) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < b.exps_[i]) return false;
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& b) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += b.exps_.at(i);
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& b) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] -= b.exps_.at(i);
  return *this;
}

ExponentVector operator*(int s, ExponentVector a) {
  for (auto& e : a.exps_) e *= s;
  return a;
}

ExponentVector ExponentVector::min(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::min(a[i], b[i]);
  return out;
}

ExponentVector ExponentVector::max(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::max(a[i], b[i]);
  return out;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) s += (i ? "," : "") + std::to_string(exps_[i]);
  return s + ")";
}

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const long da = a.degree();
  const long db = b.degree();
  if (da != db) return da > db;
  return a.values() > b.values();
}

// ------------------------------------------------------------- IntPolynomial

namespace {

using TermMap = std::map<ExponentVector, mpz_class, GrlexGreater>;

std::vector<Term> drain(TermMap& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [e, c] : m)
    if (c != 0) out.push_back({e, std::move(c)});
  return out;
}

std::string variable_name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "u" + std::to_string(i + 1);
}

std::string monomial_string(const ExponentVector& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += variable_name(names, i);
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

IntPolynomial IntPolynomial::constant(std::size_t nvars, const mpz_class& c) {
  IntPolynomial p(nvars);
  if (c != 0) p.terms_.push_back({ExponentVector(nvars), c});
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t nvars, std::size_t i) {
  return monomial(ExponentVector::unit(nvars, i));
}

IntPolynomial IntPolynomial::monomial(ExponentVector exps, const mpz_class& c) {
  IntPolynomial p(exps.size());
  if (!exps.is_nonnegative()) throw Error(Errc::MalformedInput, "negative polynomial exponent");
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

IntPolynomial IntPolynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  TermMap m;
  for (auto& t : terms) {
    if (t.exps.size() != nvars || !t.exps.is_nonnegative())
      throw Error(Errc::MalformedInput, "bad exponent vector " + t.exps.to_string());
    m[t.exps] += t.coeff;
  }
  IntPolynomial p(nvars);
  p.terms_ = drain(m);
  return p;
}

IntPolynomial IntPolynomial::from_distinct_terms(std::size_t nvars, std::vector<Term> terms) {
  GrlexGreater greater;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return greater(a.exps, b.exps); });
  IntPolynomial p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

bool IntPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].exps.is_zero();
}

const Term& IntPolynomial::leading_term() const {
  if (terms_.empty()) throw Error(Errc::DivisionByZero, "zero polynomial has no leading term");
  return terms_.front();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  GrlexGreater greater;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && greater(i->exps, j->exps))) {
      out.push_back(*i++);
    } else if (i == a.end() || greater(j->exps, i->exps)) {
      out.push_back({j->exps, sign > 0 ? j->coeff : mpz_class(-j->coeff)});
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(i->coeff + j->coeff) : mpz_class(i->coeff - j->coeff);
      if (c != 0) out.push_back({i->exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& g) {
  if (g.nvars_ != nvars_) throw Error(Errc::MalformedInput, "polynomial variable count mismatch");
  terms_ = merge(terms_, g.terms_, +1);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& g) {
  if (g.nvars_ != nvars_) throw Error(Errc::MalformedInput, "polynomial variable count mismatch");
  terms_ = merge(terms_, g.terms_, -1);
  return *this;
}

namespace detail {

IntPolynomial multiply_schoolbook(const IntPolynomial& f, const IntPolynomial& g) {
  TermMap m;
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) {
      auto [it, inserted] = m.try_emplace(s.exps + t.exps);
      mpz_addmul(it->second.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  return IntPolynomial::from_distinct_terms(f.nvars(), drain(m));
}

namespace {

// Dense images above this many limbs fall back to the sparse code.
constexpr std::uint64_t kMaxKroneckerLimbs = std::uint64_t{1} << 24;

struct Range {
  std::vector<int> lo;
  std::vector<int> hi;
};

Range exponent_range(const IntPolynomial& f) {
  const std::size_t n = f.nvars();
  Range r{std::vector<int>(n, std::numeric_limits<int>::max()), std::vector<int>(n, 0)};
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < n; ++i) {
      r.lo[i] = std::min(r.lo[i], t.exps[i]);
      r.hi[i] = std::max(r.hi[i], t.exps[i]);
    }
  return r;
}

std::size_t max_bits(const IntPolynomial& f) {
  std::size_t b = 0;
  for (const auto& t : f.terms()) b = std::max(b, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
  return b;
}

std::size_t bit_length(std::uint64_t v) {
  std::size_t b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

// Mixed-radix slot numbering of the exponent box lo..hi.
struct Box {
  std::vector<std::uint64_t> dim;
  std::uint64_t slots = 1;

  static std::optional<Box> make(const std::vector<int>& lo, const std::vector<int>& hi) {
    Box b;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const auto d = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
      if (b.slots > kMaxKroneckerLimbs / d) return std::nullopt;
      b.dim.push_back(d);
      b.slots *= d;
    }
    return b;
  }

  std::uint64_t slot(const ExponentVector& e, const std::vector<int>& offset) const {
    std::uint64_t s = 0;
    for (std::size_t i = dim.size(); i-- > 0;) s = s * dim[i] + static_cast<std::uint64_t>(e[i] - offset[i]);
    return s;
  }

  ExponentVector exps(std::uint64_t s, const std::vector<int>& offset) const {
    ExponentVector e(dim.size());
    for (std::size_t i = 0; i < dim.size(); ++i) {
      e[i] = static_cast<int>(s % dim[i]) + offset[i];
      s /= dim[i];
    }
    return e;
  }
};

mpz_class limbs_to_mpz(const mp_limb_t* data, std::size_t count) {
  mpz_class z;
  if (count) mpz_import(z.get_mpz_t(), count, -1, sizeof(mp_limb_t), 0, 0, data);
  return z;
}

// f evaluated at u_i = 2^(B * stride_i), B = limbs * GMP_NUMB_BITS, after
// dividing out u^offset.
mpz_class pack(const IntPolynomial& f, const Box& box, const std::vector<int>& offset, std::size_t limbs) {
  std::vector<mp_limb_t> pos(box.slots * limbs, 0);
  std::vector<mp_limb_t> neg;
  for (const auto& t : f.terms()) {
    const mpz_srcptr c = t.coeff.get_mpz_t();
    std::vector<mp_limb_t>* target = &pos;
    if (mpz_sgn(c) < 0) {
      if (neg.empty()) neg.assign(pos.size(), 0);
      target = &neg;
    }
    const std::uint64_t base = box.slot(t.exps, offset) * limbs;
    for (std::size_t j = 0; j < mpz_size(c); ++j) (*target)[base + j] = mpz_getlimbn(c, static_cast<mp_size_t>(j));
  }
  mpz_class x = limbs_to_mpz(pos.data(), pos.size());
  if (!neg.empty()) x -= limbs_to_mpz(neg.data(), neg.size());
  return x;
}

// Balanced digit decoding of x. False when a digit lands outside the box.
bool unpack(const mpz_class& x, const Box& box, const std::vector<int>& offset, std::size_t limbs,
            std::vector<Term>& out) {
  const int sign = sgn(x);
  const mpz_class a = abs(x);
  const std::size_t total = mpz_size(a.get_mpz_t());
  const mp_limb_t* data = mpz_limbs_read(a.get_mpz_t());
  const std::size_t width = limbs * GMP_NUMB_BITS;
  mpz_class half, full;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, width - 1);
  full = 2 * half;
  int carry = 0;
  for (std::uint64_t s = 0; s * limbs < total || carry; ++s) {
    const std::size_t from = std::min<std::size_t>(s * limbs, total);
    mpz_class digit = limbs_to_mpz(data + from, std::min(limbs, total - from)) + carry;
    carry = 0;
    if (digit >= half) {
      digit -= full;
      carry = 1;
    }
    if (digit == 0) continue;
    if (s >= box.slots) return false;
    out.push_back({box.exps(s, offset), sign < 0 ? mpz_class(-digit) : digit});
  }
  return true;
}

std::size_t limbs_for(std::size_t bits) { return (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS; }

}  // namespace

std::optional<IntPolynomial> multiply_kronecker(const IntPolynomial& f, const IntPolynomial& g) {
  const std::size_t n = f.nvars();
  if (f.is_zero() || g.is_zero()) return IntPolynomial(n);
  const Range rf = exponent_range(f);
  const Range rg = exponent_range(g);
  std::vector<int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = rf.lo[i] + rg.lo[i];
    hi[i] = rf.hi[i] + rg.hi[i];
  }
  auto box = Box::make(lo, hi);
  if (!box) return std::nullopt;
  const std::size_t bits =
      max_bits(f) + max_bits(g) + bit_length(std::min(f.term_count(), g.term_count())) + 2;
  const std::size_t limbs = limbs_for(bits);
  if (box->slots > kMaxKroneckerLimbs / limbs) return std::nullopt;
  const mpz_class product = pack(f, *box, rf.lo, limbs) * pack(g, *box, rg.lo, limbs);
  std::vector<Term> terms;
  unpack(product, *box, lo, limbs, terms);
  return IntPolynomial::from_distinct_terms(n, std::move(terms));
}

KroneckerDivision exact_divide_kronecker(const IntPolynomial& f, const IntPolynomial& g, IntPolynomial& q) {
  const std::size_t n = f.nvars();
  if (f.is_zero()) {
    q = IntPolynomial(n);
    return KroneckerDivision::Quotient;
  }
  const Range rf = exponent_range(f);
  const Range rg = exponent_range(g);
  // Over an integral domain lowest and highest degrees in each variable add.
  std::vector<int> qlo(n), qhi(n);
  for (std::size_t i = 0; i < n; ++i) {
    qlo[i] = rf.lo[i] - rg.lo[i];
    qhi[i] = rf.hi[i] - rg.hi[i];
    if (qlo[i] < 0 || qhi[i] < qlo[i]) return KroneckerDivision::NotDivisible;
  }
  auto box = Box::make(rf.lo, rf.hi);
  if (!box) return KroneckerDivision::Undecided;
  const std::size_t gbits = max_bits(g);
  const std::size_t glen = bit_length(g.term_count());
  std::size_t bits = std::max(max_bits(f), gbits) + glen + 2;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::size_t limbs = limbs_for(bits);
    if (box->slots > kMaxKroneckerLimbs / limbs) return KroneckerDivision::Undecided;
    const mpz_class F = pack(f, *box, rf.lo, limbs);
    const mpz_class G = pack(g, *box, rg.lo, limbs);
    mpz_class Q, R;
    mpz_tdiv_qr(Q.get_mpz_t(), R.get_mpz_t(), F.get_mpz_t(), G.get_mpz_t());
    if (R != 0) return KroneckerDivision::NotDivisible;
    std::vector<Term> terms;
    bool inside = unpack(Q, *box, qlo, limbs, terms);
    for (std::size_t t = 0; inside && t < terms.size(); ++t)
      for (std::size_t i = 0; i < n; ++i)
        if (terms[t].exps[i] > qhi[i]) inside = false;
    const std::size_t width = limbs * GMP_NUMB_BITS;
    if (inside) {
      q = IntPolynomial::from_distinct_terms(n, std::move(terms));
      // q*g and f share one balanced image, so they agree once the product's
      // coefficients provably fit the digit width.
      const std::size_t need = max_bits(q) + gbits + glen + 2;
      if (need <= width) return KroneckerDivision::Quotient;
      bits = need;
    } else {
      bits = 2 * width;
    }
  }
  return KroneckerDivision::Undecided;
}

}  // namespace detail

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.nvars_ != g.nvars_) throw Error(Errc::MalformedInput, "polynomial variable count mismatch");
  if (f.is_zero() || g.is_zero()) return IntPolynomial(f.nvars_);
  if (g.terms_.size() == 1 && g.terms_[0].coeff == 1) return f.shifted(g.terms_[0].exps);
  if (f.terms_.size() == 1 && f.terms_[0].coeff == 1) return g.shifted(f.terms_[0].exps);
  if (f.terms_.size() * g.terms_.size() >= 1024)
    if (auto p = detail::multiply_kronecker(f, g)) return std::move(*p);
  return detail::multiply_schoolbook(f, g);
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
  IntPolynomial result = constant(nvars_, 1);
  IntPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::shifted(const ExponentVector& shift) const {
  if (!shift.is_nonnegative()) throw Error(Errc::MalformedInput, "negative monomial shift");
  IntPolynomial p = *this;
  // Multiplying by a monomial preserves the term order.
  for (auto& t : p.terms_) t.exps += shift;
  return p;
}

mpz_class IntPolynomial::evaluate(const std::vector<long>& point) const {
  mpz_class total = 0;
  mpz_class power;
  for (const auto& t : terms_) {
    mpz_class v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
      if (t.exps[i] == 0) continue;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(std::labs(point[i])),
                    static_cast<unsigned long>(t.exps[i]));
      if (point[i] < 0 && (t.exps[i] % 2) != 0) power = -power;
      v *= power;
    }
    total += v;
  }
  return total;
}

ExponentVector IntPolynomial::content_monomial() const {
  if (terms_.empty()) return ExponentVector(nvars_);
  ExponentVector m = terms_.front().exps;
  for (const auto& t : terms_) m = ExponentVector::min(m, t.exps);
  return m;
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    const bool constant_term = t.exps.is_zero();
    mpz_class mag = abs(t.coeff);
    if (t.coeff < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (constant_term) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + '*';
      s += monomial_string(t.exps, names);
    }
  }
  return s;
}

// ----------------------------------------------------------------- division

DivisionResult divide(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw Error(Errc::MalformedInput, "polynomial variable count mismatch");
  const std::size_t n = f.nvars();
  const Term& lead = g.leading_term();

  TermMap rest;
  for (const auto& t : f.terms()) rest.emplace(t.exps, t.coeff);
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  mpz_class q;
  while (!rest.empty()) {
    auto top = rest.begin();
    if (top->first.dominates(lead.exps) && mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      ExponentVector shift = top->first - lead.exps;
      mpz_divexact(q.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
      rest.erase(top);
      // The leading term cancels by construction; subtract the rest of q*g.
      for (auto t = g.terms().begin() + 1; t != g.terms().end(); ++t) {
        auto [it, inserted] = rest.try_emplace(t->exps + shift);
        mpz_submul(it->second.get_mpz_t(), q.get_mpz_t(), t->coeff.get_mpz_t());
        if (it->second == 0) rest.erase(it);
      }
      quotient.push_back({std::move(shift), q});
    } else {
      remainder.push_back({top->first, top->second});
      rest.erase(top);
    }
  }
  // Quotient terms come out in descending order already.
  return {IntPolynomial::from_terms(n, std::move(quotient)), IntPolynomial::from_terms(n, std::move(remainder))};
}

IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_one()) return f;
  if (g.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  if (f.term_count() >= 64 && g.term_count() >= 4 && f.nvars() == g.nvars()) {
    IntPolynomial q;
    if (detail::exact_divide_kronecker(f, g, q) == detail::KroneckerDivision::Quotient) return q;
  }
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw NotDivisibleError(std::move(r));
  return q;
}

bool is_positive_polynomial(const IntPolynomial& f) {
  const std::size_t n = f.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> point(n, 1);
    point[i] = 0;
    if (f.evaluate(point) <= 0) return false;
  }
  return true;
}

// ----------------------------------------------------------- ReducedFraction

ReducedFraction ReducedFraction::normalize(IntPolynomial numerator, ExponentVector denominator) {
  if (numerator.is_zero()) throw Error(Errc::ZeroNumerator, "fraction with zero numerator");
  if (denominator.size() != numerator.nvars())
    throw Error(Errc::MalformedInput, "denominator length does not match variable count");
  ExponentVector content = numerator.content_monomial();
  if (!content.is_zero()) {
    std::vector<Term> terms = numerator.terms();
    for (auto& t : terms) t.exps -= content;
    numerator = IntPolynomial::from_terms(numerator.nvars(), std::move(terms));
    denominator -= content;
  }
  return ReducedFraction(std::move(numerator), std::move(denominator));
}

ReducedFraction ReducedFraction::one(std::size_t nvars) {
  return ReducedFraction(IntPolynomial::constant(nvars, 1), ExponentVector(nvars));
}

ReducedFraction ReducedFraction::indeterminate(std::size_t nvars, std::size_t i) {
  return ReducedFraction(IntPolynomial::constant(nvars, 1), ExponentVector::unit(nvars, i, -1));
}

std::optional<std::size_t> ReducedFraction::initial_variable() const {
  if (!numerator_.is_one()) return std::nullopt;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < denominator_.size(); ++i) {
    if (denominator_[i] == 0) continue;
    if (denominator_[i] != -1 || found) return std::nullopt;
    found = i;
  }
  return found;
}

bool ReducedFraction::is_good_reduced_form() const {
  return initial_variable().has_value() ||
         (denominator_.is_nonnegative() && is_positive_polynomial(numerator_));
}

ReducedFraction operator*(const ReducedFraction& a, const ReducedFraction& b) {
  // Content-free times content-free stays content-free.
  return ReducedFraction(a.numerator_ * b.numerator_, a.denominator_ + b.denominator_);
}

ReducedFraction operator+(const ReducedFraction& a, const ReducedFraction& b) {
  ExponentVector common = ExponentVector::max(a.denominator_, b.denominator_);
  IntPolynomial num = a.numerator_.shifted(common - a.denominator_);
  num += b.numerator_.shifted(common - b.denominator_);
  return ReducedFraction::normalize(std::move(num), std::move(common));
}

ReducedFraction ReducedFraction::pow(unsigned k) const {
  return ReducedFraction(numerator_.pow(k), static_cast<int>(k) * denominator_);
}

ReducedFraction divide_exact(const ReducedFraction& a, const ReducedFraction& b) {
  IntPolynomial q = exact_divide(a.numerator_, b.numerator_);
  return ReducedFraction::normalize(std::move(q), a.denominator_ - b.denominator_);
}

std::string ReducedFraction::canonical_bytes() const {
  std::string s;
  s.reserve(16 + numerator_.term_count() * (4 * nvars() + 4));
  for (int d : denominator_.values()) s += std::to_string(d) + ',';
  s += '|';
  for (const auto& t : numerator_.terms()) {
    s += t.coeff.get_str(62);
    s += ':';
    for (int e : t.exps.values()) s += std::to_string(e) + ',';
    s += ';';
  }
  return s;
}

std::string ReducedFraction::display(const std::vector<std::string>& names) const {
  const std::size_t n = nvars();
  ExponentVector up(n), down(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (denominator_[i] > 0) down[i] = denominator_[i];
    if (denominator_[i] < 0) up[i] = -denominator_[i];
  }
  auto factors = [](const ExponentVector& e) {
    return std::count_if(e.values().begin(), e.values().end(), [](int x) { return x != 0; });
  };
  std::string top;
  bool compound = false;
  if (up.is_zero()) {
    top = numerator_.to_string(names);
    compound = numerator_.term_count() > 1;
  } else if (numerator_.is_one()) {
    top = monomial_string(up, names);
    compound = factors(up) > 1;
  } else {
    top = monomial_string(up, names) + "*(" + numerator_.to_string(names) + ")";
    compound = true;
  }
  if (down.is_zero()) return top;
  std::string bottom = monomial_string(down, names);
  if (compound) top = "(" + top + ")";
  if (factors(down) > 1) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

}  // namespace clusterkit
