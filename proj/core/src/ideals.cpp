#include "fptlab/ideals.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>

#include "fptlab/errors.hpp"
#include "fptlab/linalg.hpp"

namespace fptlab {

namespace detail {

struct GbCache {
  std::mutex mutex;
  std::vector<std::shared_ptr<const GroebnerBasis>> bases;
};

}  // namespace detail

namespace {

// Descending comparison of polynomials by their lex-descending term lists.
bool canonical_before(const SparsePoly& a, const SparsePoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  auto ia = ta.rbegin();
  auto ib = tb.rbegin();
  for (; ia != ta.rend() && ib != tb.rend(); ++ia, ++ib) {
    auto c = ia->monomial <=> ib->monomial;
    if (c != 0) return c > 0;
    if (ia->coeff != ib->coeff) return ia->coeff < ib->coeff;
  }
  return ia != ta.rend() && ib == tb.rend();
}

std::atomic<std::uint64_t> g_max_dense_cells{0};

}  // namespace

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<SparsePoly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache>()) {
  for (auto& g : generators) {
    require_same_ring(*ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  auto one = SparsePoly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<SparsePoly> vars;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(SparsePoly::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::principal(const SparsePoly& f) { return Ideal(f.ring_ptr(), {f}); }

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const SparsePoly& g) { return g.is_monomial(); });
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    for (const auto& b : cache_->bases) {
      if (b->order() == order) return b;
    }
  }
  // Computed outside the lock; a concurrent duplicate is harmless.
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_, order));
  std::lock_guard lock(cache_->mutex);
  for (const auto& b : cache_->bases) {
    if (b->order() == order) return b;
  }
  cache_->bases.push_back(basis);
  return basis;
}

bool Ideal::has_cached_basis(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  return std::any_of(cache_->bases.begin(), cache_->bases.end(),
                     [&](const auto& b) { return b->order() == order; });
}

bool Ideal::is_proper() const { return !groebner_basis()->is_unit(); }

bool Ideal::contains(const SparsePoly& f) const { return groebner_basis()->normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*ring_, other.ring());
  auto gb = groebner_basis();
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const SparsePoly& g) { return gb->normal_form(g).is_zero(); });
}

Ideal Ideal::operator+(const Ideal& o) const {
  require_same_ring(*ring_, o.ring());
  std::vector<SparsePoly> all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(all));
}

Ideal Ideal::times(const SparsePoly& g) const {
  std::vector<SparsePoly> out;
  out.reserve(gens_.size());
  for (const auto& h : gens_) out.push_back(h * g);
  return Ideal(ring_, std::move(out));
}

std::vector<SparsePoly> Ideal::canonical_generators() const {
  std::vector<SparsePoly> out = groebner_basis()->elements();
  std::sort(out.begin(), out.end(), canonical_before);
  return out;
}

std::vector<std::string> Ideal::canonical_strings() const {
  std::vector<std::string> out;
  for (const auto& g : canonical_generators()) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::string out = "<";
  bool first = true;
  for (const auto& s : canonical_strings()) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  if (first) out += "0";
  return out + ">";
}

// ---------------------------------------------------------------- operations

Ideal bracket_power(const Ideal& ideal, std::uint64_t q) {
  require_frobenius_power(q, ideal.ring().characteristic());
  std::vector<SparsePoly> out;
  for (const auto& g : ideal.generators()) out.push_back(g.frobenius(q));
  return Ideal(ideal.ring_ptr(), std::move(out));
}

Ideal frobenius_root(const Ideal& ideal, std::uint64_t q) {
  require_frobenius_power(q, ideal.ring().characteristic());
  std::vector<SparsePoly> out;
  for (const auto& g : ideal.generators()) {
    for (auto& [b, component] : frobenius_decompose(g, q)) out.push_back(std::move(component));
  }
  return Ideal(ideal.ring_ptr(), std::move(out));
}

Ideal groebner(const Ideal& ideal, const MonomialOrder& order) {
  Ideal copy = ideal;
  copy.groebner_basis(order);
  return copy;
}

SparsePoly normal_form(const SparsePoly& f, const Ideal& ideal) {
  return ideal.groebner_basis()->normal_form(f);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ea = a.groebner_basis()->elements();
  const auto& eb = b.groebner_basis()->elements();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (!(ea[i] == eb[i])) return false;
  }
  return true;
}

Ideal colon_principal(const Ideal& ideal, const SparsePoly& g) {
  require_same_ring(ideal.ring(), g.ring());
  if (g.is_zero()) raise(ErrorKind::ZeroDivisorArg, "colon by the zero polynomial");
  const RingPtr& ring = ideal.ring_ptr();
  if (ideal.is_zero()) return Ideal::zero(ring);
  // (I : g) only depends on g modulo I.
  SparsePoly h = normal_form(g, ideal);
  if (h.is_zero()) return Ideal::unit(ring);

  std::string aux = "t";
  while (ring->index_of(aux)) aux += "_";
  std::vector<std::string> names{aux};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  RingPtr big = PolyRing::make(ring->characteristic(), std::move(names));
  const std::size_t n = ring->num_vars();

  auto embed = [&](const SparsePoly& f) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
      Monomial m(n + 1);
      for (std::size_t i = 0; i < n; ++i) m[i + 1] = t.monomial[i];
      terms.push_back({std::move(m), t.coeff});
    }
    return SparsePoly::from_terms(big, std::move(terms));
  };
  const SparsePoly t = SparsePoly::variable(big, 0);
  const SparsePoly one_minus_t = SparsePoly::constant(big, 1) - t;

  std::vector<SparsePoly> gens;
  for (const auto& f : ideal.generators()) gens.push_back(t * embed(f));
  gens.push_back(one_minus_t * embed(h));
  GroebnerBasis gb = buchberger(big, gens, MonomialOrder::elimination(1));

  std::vector<SparsePoly> quotients;
  for (const auto& e : gb.elements()) {
    if (e.terms().back().monomial[0] != 0) continue;
    bool free_of_t = std::all_of(e.terms().begin(), e.terms().end(),
                                 [](const Term& term) { return term.monomial[0] == 0; });
    if (!free_of_t) continue;
    std::vector<Term> terms;
    for (const auto& term : e.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = term.monomial[i + 1];
      terms.push_back({std::move(m), term.coeff});
    }
    quotients.push_back(divide_exact(SparsePoly::from_terms(ring, std::move(terms)), h));
  }
  return Ideal(ring, std::move(quotients));
}

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  gens = std::move(kept);
}

// Standard monomials in variables k..n-1 avoiding every monomial of `gens`
// (earlier variables are ignored). Each remaining variable must have a pure
// power among `gens`.
std::uint64_t count_standard(std::vector<Monomial> gens, std::size_t k, std::size_t n) {
  for (auto& m : gens) {
    for (std::size_t i = 0; i < k; ++i) m[i] = 0;
  }
  minimalize(gens);
  if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); })) return 0;
  if (k == n) return 1;
  std::vector<Exponent> cuts{0};
  for (const auto& m : gens) cuts.push_back(m[k]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::uint64_t total = 0;
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    std::vector<Monomial> active;
    for (const auto& m : gens) {
      if (m[k] <= cuts[j]) active.push_back(m);
    }
    std::uint64_t sub = count_standard(std::move(active), k + 1, n);
    total = checked_add(total, checked_mul(sub, cuts[j + 1] - cuts[j]));
  }
  return total;
}

}  // namespace

Length quotient_length(const Ideal& ideal) {
  auto gb = ideal.groebner_basis();
  const std::size_t n = ideal.ring().num_vars();
  if (gb->is_unit()) return Length::finite(0);
  const auto& leads = gb->leading_monomials();
  for (std::size_t i = 0; i < n; ++i) {
    bool has_pure_power = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && m[j] != 0) return false;
      }
      return m[i] > 0;
    });
    if (!has_pure_power) return Length::infinity();
  }
  return Length::finite(count_standard(leads, 0, n));
}

int quotient_dimension(const Ideal& ideal) {
  auto gb = ideal.groebner_basis();
  const std::size_t n = ideal.ring().num_vars();
  if (gb->is_unit()) return -1;
  if (n >= 31) raise(ErrorKind::InvalidParameter, "quotient_dimension supports at most 30 variables");
  const auto& leads = gb->leading_monomials();
  std::vector<std::uint32_t> supports;
  for (const auto& m : leads) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) s |= 1U << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [subset](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::uint64_t max_dense_cells() {
  std::uint64_t v = g_max_dense_cells.load();
  if (v != 0) return v;
  v = std::uint64_t{1} << 24;
  if (const char* env = std::getenv("FPTLAB_MAX_DENSE_CELLS")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) v = parsed;
  }
  std::uint64_t expected = 0;
  g_max_dense_cells.compare_exchange_strong(expected, v);
  return g_max_dense_cells.load();
}

void set_max_dense_cells(std::uint64_t cells) {
  if (cells == 0) raise(ErrorKind::InvalidParameter, "dense guard must be positive");
  g_max_dense_cells.store(cells);
}

std::uint64_t length_colon_bracket(const SparsePoly& f, std::uint64_t a, std::uint64_t q) {
  const Prime p = f.characteristic();
  require_frobenius_power(q, p);
  const std::size_t n = f.ring().num_vars();
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(cells, q, &cells) || cells > max_dense_cells()) {
      raise(ErrorKind::MatrixTooLarge, "q^n exceeds the dense guard of " + std::to_string(max_dense_cells()) +
                                           " cells (set FPTLAB_MAX_DENSE_CELLS to raise it)");
    }
  }
  const SparsePoly g = pow_truncated(f, a, q);
  if (g.is_zero()) return 0;

  // Row b holds the coefficients of x^b * g mod m^[q]; columns are monomials
  // below q encoded as sum_i e_i q^i.
  std::vector<std::uint64_t> strides(n, 1);
  for (std::size_t i = 1; i < n; ++i) strides[i] = strides[i - 1] * q;
  std::vector<std::uint64_t> term_index;
  for (const auto& t : g.terms()) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx += t.monomial[i] * strides[i];
    term_index.push_back(idx);
  }
  std::vector<SparseRow> rows;
  Monomial b(n);
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    std::uint64_t rest = cell, shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = rest % q;
      rest /= q;
      shift += b[i] * strides[i];
    }
    SparseRow row;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const Monomial& m = g.terms()[k].monomial;
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) inside = m[i] + b[i] < q;
      if (inside) row.emplace_back(term_index[k] + shift, g.terms()[k].coeff);
    }
    if (row.empty()) continue;
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rank_mod_p(std::move(rows), cells, p);
}

bool monomial_is_radical(const Ideal& ideal) {
  if (!ideal.is_monomial()) raise(ErrorKind::NotMonomialIdeal, "radicality is decided for monomial ideals only");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.terms().front().monomial);
  minimalize(gens);
  return std::all_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_square_free(); });
}

}  // namespace fptlab
