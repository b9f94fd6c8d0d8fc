#include "fptlab/polyring.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "fptlab/errors.hpp"

namespace fptlab {

// ---------------------------------------------------------------- PolyRing

RingPtr PolyRing::make(Prime p, std::vector<std::string> variables) {
  require_prime(p);
  if (variables.empty()) raise(ErrorKind::InvalidParameter, "a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) raise(ErrorKind::InvalidParameter, "empty variable name");
    if (!seen.insert(v).second) raise(ErrorKind::InvalidParameter, "duplicate variable '" + v + "'");
  }
  return RingPtr(new PolyRing(p, std::move(variables)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!(a == b)) raise(ErrorKind::RingMismatch, "operands live in different polynomial rings");
}

// ---------------------------------------------------------------- Monomial

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent x : e_) d = checked_add(d, x);
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::is_square_free() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x <= 1; });
}

bool Monomial::all_below(Exponent bound) const noexcept {
  return std::all_of(e_.begin(), e_.end(), [bound](Exponent x) { return x < bound; });
}

bool Monomial::divides(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (__builtin_add_overflow(r.e_[i], o.e_[i], &r.e_[i])) {
      raise(ErrorKind::Overflow, "exponent overflow in monomial product");
    }
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Monomial Monomial::scaled(Exponent k) const {
  Monomial r(*this);
  for (auto& x : r.e_) x = checked_mul(x, k);
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != o.e_[i]) return e_[i] < o.e_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Exponent x : e_) {
    h ^= std::hash<Exponent>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

// ---------------------------------------------------------------- SparsePoly

namespace {

using Accumulator = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  return out;
}

// Product, optionally dropping monomials with an exponent >= bound.
std::vector<Term> multiply_terms(const std::vector<Term>& a, const std::vector<Term>& b, Prime p,
                                 std::optional<Exponent> bound) {
  if (a.empty() || b.empty()) return {};
  Accumulator acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 20));
  for (const Term& ta : a) {
    if (bound && !ta.monomial.all_below(*bound)) continue;
    for (const Term& tb : b) {
      Monomial m = ta.monomial * tb.monomial;
      if (bound && !m.all_below(*bound)) continue;
      auto& slot = acc[m];
      slot = fp::add(slot, fp::mul(ta.coeff, tb.coeff, p), p);
    }
  }
  return drain(acc);
}

}  // namespace

SparsePoly::SparsePoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) raise(ErrorKind::InvalidParameter, "polynomial without a ring");
}

SparsePoly SparsePoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  SparsePoly out(std::move(ring));
  const Prime p = out.characteristic();
  const std::size_t n = out.ring().num_vars();
  for (auto& t : terms) {
    if (t.monomial.size() != n) raise(ErrorKind::InvalidParameter, "monomial length does not match ring");
    t.coeff %= p;
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = fp::add(merged.back().coeff, t.coeff, p);
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  out.terms_ = std::move(merged);
  return out;
}

SparsePoly SparsePoly::constant(RingPtr ring, std::int64_t c) {
  const std::size_t n = ring->num_vars();
  const Prime p = ring->characteristic();
  return monomial(std::move(ring), Monomial(n), fp::from_signed(c, p));
}

SparsePoly SparsePoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) raise(ErrorKind::InvalidParameter, "variable index out of range");
  Monomial m(ring->num_vars());
  m[index] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

SparsePoly SparsePoly::monomial(RingPtr ring, Monomial m, std::uint32_t coeff) {
  std::vector<Term> t;
  t.push_back({std::move(m), coeff});
  return from_terms(std::move(ring), std::move(t));
}

std::uint32_t SparsePoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::uint32_t SparsePoly::constant_coefficient() const {
  if (!terms_.empty() && terms_.front().monomial.is_one()) return terms_.front().coeff;
  return 0;
}

Exponent SparsePoly::total_degree() const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  require_same_ring(*ring_, *o.ring_);
  const Prime p = characteristic();
  SparsePoly out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->monomial < b->monomial)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->monomial < a->monomial) {
      out.terms_.push_back(*b++);
    } else {
      std::uint32_t c = fp::add(a->coeff, b->coeff, p);
      if (c != 0) out.terms_.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(*this);
  for (auto& t : out.terms_) t.coeff = fp::neg(t.coeff, characteristic());
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  require_same_ring(*ring_, *o.ring_);
  SparsePoly out(ring_);
  out.terms_ = multiply_terms(terms_, o.terms_, characteristic(), std::nullopt);
  return out;
}

SparsePoly SparsePoly::scaled(std::uint32_t c) const {
  c %= characteristic();
  SparsePoly out(ring_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = fp::mul(t.coeff, c, characteristic());
  return out;
}

SparsePoly SparsePoly::times(const Monomial& m, std::uint32_t c) const {
  c %= characteristic();
  SparsePoly out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves lex order.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, fp::mul(t.coeff, c, characteristic())});
  return out;
}

SparsePoly SparsePoly::frobenius(Exponent k) const {
  SparsePoly out(ring_);
  out.terms_.reserve(terms_.size());
  // Scaling all exponents by k > 0 preserves lex order.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial.scaled(k), t.coeff});
  return out;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  if (var >= ring_->num_vars()) raise(ErrorKind::InvalidParameter, "variable index out of range");
  const Prime p = characteristic();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponent e = t.monomial[var];
    std::uint32_t c = fp::mul(t.coeff, static_cast<std::uint32_t>(e % p), p);
    if (c == 0) continue;
    Monomial m = t.monomial;
    m[var] = e - 1;
    out.push_back({std::move(m), c});
  }
  return from_terms(ring_, std::move(out));
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (!(*ring_ == *o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].monomial == o.terms_[i].monomial)) return false;
  }
  return true;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->variables();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string body;
    for (std::size_t i = 0; i < names.size(); ++i) {
      Exponent e = it->monomial[i];
      if (e == 0) continue;
      if (!body.empty()) body += '*';
      body += names[i];
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += std::to_string(it->coeff);
    } else if (it->coeff == 1) {
      out += body;
    } else {
      out += std::to_string(it->coeff) + "*" + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Frobenius-aware operations

namespace {

// Truncation at an arbitrary positive bound; bound 1 keeps only the constant term.
SparsePoly truncate_below(const SparsePoly& f, Exponent bound) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (t.monomial.all_below(bound)) kept.push_back(t);
  }
  return SparsePoly::from_terms(f.ring_ptr(), std::move(kept));
}

SparsePoly mul_below(const SparsePoly& a, const SparsePoly& b, std::optional<Exponent> bound) {
  std::vector<Term> t = multiply_terms(a.terms(), b.terms(), a.characteristic(), bound);
  return SparsePoly::from_terms(a.ring_ptr(), std::move(t));
}

SparsePoly square_and_multiply(const SparsePoly& base, std::uint64_t d, std::optional<Exponent> bound) {
  SparsePoly result = SparsePoly::constant(base.ring_ptr(), 1);
  if (bound) result = truncate_below(result, *bound);
  SparsePoly b = base;
  while (d > 0) {
    if (d & 1) result = mul_below(result, b, bound);
    d >>= 1;
    if (d > 0) b = mul_below(b, b, bound);
    if (result.is_zero()) break;
  }
  return result;
}

// f^a = prod_i Frob^{p^i}(f^{d_i}) for the base-p digits d_i of a. With a
// truncation bound q = p^e, the i-th factor only needs f^{d_i} mod m^[q/p^i].
SparsePoly frobenius_digit_power(const SparsePoly& f, std::uint64_t a, std::optional<Exponent> q) {
  const Prime p = f.characteristic();
  SparsePoly result = SparsePoly::constant(f.ring_ptr(), 1);
  Exponent level = q.value_or(0);
  Exponent scale = 1;
  bool scale_saturated = false;
  while (a > 0) {
    std::uint64_t d = a % p;
    a /= p;
    if (d != 0) {
      SparsePoly factor(f.ring_ptr());
      if (q && level == 1) {
        // Every non-constant monomial of Frob^{p^i}(g) already lies in m^[q].
        std::uint32_t c = fp::pow(f.constant_coefficient(), d, p);
        factor = SparsePoly::constant(f.ring_ptr(), c);
      } else {
        if (scale_saturated) raise(ErrorKind::Overflow, "exponent overflow in exact power");
        std::optional<Exponent> sub_bound;
        if (q) sub_bound = level;
        SparsePoly base = q ? truncate_below(f, level) : f;
        factor = square_and_multiply(base, d, sub_bound).frobenius(scale);
      }
      result = mul_below(result, factor, q);
      if (result.is_zero()) return result;
    }
    if (q) {
      if (level > 1) {
        level /= p;
        scale *= p;
      }
    } else if (a > 0) {
      if (__builtin_mul_overflow(scale, Exponent{p}, &scale)) scale_saturated = true;
    }
  }
  return result;
}

}  // namespace

SparsePoly truncate_mod_bracket(const SparsePoly& f, std::uint64_t q) {
  require_frobenius_power(q, f.characteristic());
  return truncate_below(f, q);
}

SparsePoly mul_truncated(const SparsePoly& f, const SparsePoly& g, std::uint64_t q) {
  require_same_ring(f.ring(), g.ring());
  require_frobenius_power(q, f.characteristic());
  return mul_below(f, g, q);
}

SparsePoly pow_truncated(const SparsePoly& f, std::uint64_t a, std::uint64_t q) {
  require_frobenius_power(q, f.characteristic());
  if (a == 0) return SparsePoly::constant(f.ring_ptr(), 1);
  return frobenius_digit_power(f, a, q);
}

SparsePoly pow_exact(const SparsePoly& f, std::uint64_t a) {
  if (a == 0) return SparsePoly::constant(f.ring_ptr(), 1);
  return frobenius_digit_power(f, a, std::nullopt);
}

std::map<Monomial, SparsePoly> frobenius_decompose(const SparsePoly& f, std::uint64_t q) {
  require_frobenius_power(q, f.characteristic());
  const std::size_t n = f.ring().num_vars();
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial rem(n), quo(n);
    for (std::size_t i = 0; i < n; ++i) {
      rem[i] = t.monomial[i] % q;
      quo[i] = t.monomial[i] / q;
    }
    // The q-th root of a coefficient in F_p is the coefficient itself.
    buckets[rem].push_back({std::move(quo), t.coeff});
  }
  std::map<Monomial, SparsePoly> out;
  for (auto& [b, terms] : buckets) {
    SparsePoly g = SparsePoly::from_terms(f.ring_ptr(), std::move(terms));
    if (!g.is_zero()) out.emplace(b, std::move(g));
  }
  return out;
}

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, Prime p) {
  if (k > n) return 0;
  std::uint32_t result = 1;
  while (k > 0 || n > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    kd = std::min(kd, nd - kd);
    std::uint32_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < kd; ++t) {
      num = fp::mul(num, static_cast<std::uint32_t>(nd - t), p);
      den = fp::mul(den, static_cast<std::uint32_t>(t + 1), p);
    }
    result = fp::mul(result, fp::mul(num, fp::inv(den, p), p), p);
    n /= p;
    k /= p;
  }
  return result;
}

SparsePoly multinomial_expand_power(const SparsePoly& f, std::uint64_t a, std::uint64_t max_index_count) {
  const Prime p = f.characteristic();
  const auto& terms = f.terms();
  if (a == 0) return SparsePoly::constant(f.ring_ptr(), 1);
  if (f.is_zero()) return f;
  const std::size_t r = terms.size();
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), a + r - 1, r - 1);
  if (count > mpz_class(static_cast<unsigned long>(max_index_count))) {
    raise(ErrorKind::ExpansionTooLarge,
          "multinomial index set has " + count.get_str() + " elements");
  }
  Accumulator acc;
  Monomial start(f.ring().num_vars());
  // Multinomial(a; s_1..s_r) = prod_i C(a - s_1 - ... - s_{i-1}, s_i).
  std::function<void(std::size_t, std::uint64_t, std::uint32_t, const Monomial&)> expand =
      [&](std::size_t i, std::uint64_t remaining, std::uint32_t coeff, const Monomial& mono) {
        const Term& t = terms[i];
        if (i + 1 == r) {
          std::uint32_t c = fp::mul(coeff, fp::pow(t.coeff, remaining, p), p);
          if (c == 0) return;
          Monomial m = mono * t.monomial.scaled(remaining);
          auto& slot = acc[m];
          slot = fp::add(slot, c, p);
          return;
        }
        for (std::uint64_t s = 0; s <= remaining; ++s) {
          std::uint32_t c = fp::mul(coeff, binomial_mod_p(remaining, s, p), p);
          c = fp::mul(c, fp::pow(t.coeff, s, p), p);
          if (c == 0) continue;
          expand(i + 1, remaining - s, c, mono * t.monomial.scaled(s));
        }
      };
  expand(0, a, 1, start);
  return SparsePoly::from_terms(f.ring_ptr(), drain(acc));
}

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) raise(ErrorKind::ZeroDivisorArg, "division by the zero polynomial");
  const Prime p = a.characteristic();
  const Term& lead_b = b.terms().back();
  const std::uint32_t inv_lead = fp::inv(lead_b.coeff, p);
  SparsePoly remainder = a;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& lead = remainder.terms().back();
    if (!lead_b.monomial.divides(lead.monomial)) {
      raise(ErrorKind::Internal, "divide_exact: divisor does not divide dividend");
    }
    Monomial m = lead.monomial / lead_b.monomial;
    std::uint32_t c = fp::mul(lead.coeff, inv_lead, p);
    remainder = remainder - b.times(m, c);
    quotient.push_back({std::move(m), c});
  }
  return SparsePoly::from_terms(a.ring_ptr(), std::move(quotient));
}

}  // namespace fptlab
