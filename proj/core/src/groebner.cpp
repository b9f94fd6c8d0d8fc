#include "fptlab/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "fptlab/errors.hpp"

namespace fptlab {

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> permutation) {
  return {Kind::grevlex, std::move(permutation), 0};
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> permutation) {
  return {Kind::lex, std::move(permutation), 0};
}

MonomialOrder MonomialOrder::elimination(std::size_t block) {
  return {Kind::elimination, {}, block};
}

namespace {

__extension__ typedef unsigned __int128 u128;

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                                   const std::vector<std::size_t>& perm) {
  auto at = [&](const Monomial& m, std::size_t k) { return perm.empty() ? m[k] : m[perm[k]]; };
  u128 da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += at(a, k);
    db += at(b, k);
  }
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t k = hi; k-- > lo;) {
    Exponent x = at(a, k), y = at(b, k);
    if (x != y) return x < y ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind) {
    case Kind::lex:
      for (std::size_t k = 0; k < n; ++k) {
        Exponent x = permutation.empty() ? a[k] : a[permutation[k]];
        Exponent y = permutation.empty() ? b[k] : b[permutation[k]];
        if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    case Kind::grevlex:
      return grevlex_range(a, b, 0, n, permutation);
    case Kind::elimination: {
      const std::size_t cut = std::min(block, n);
      auto c = grevlex_range(a, b, 0, cut, permutation);
      if (c != 0) return c;
      return grevlex_range(a, b, cut, n, permutation);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::elimination: return "elimination(" + std::to_string(block) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- ordered polynomials

namespace {

using OPoly = std::vector<Term>;  // descending under the active order

struct Engine {
  const MonomialOrder& order;
  Prime p;

  bool greater(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }

  OPoly to_ordered(const SparsePoly& f) const {
    OPoly out = f.terms();
    std::sort(out.begin(), out.end(),
              [this](const Term& a, const Term& b) { return greater(a.monomial, b.monomial); });
    return out;
  }

  void make_monic(OPoly& h) const {
    if (h.empty() || h.front().coeff == 1) return;
    std::uint32_t inv = fp::inv(h.front().coeff, p);
    for (auto& t : h) t.coeff = fp::mul(t.coeff, inv, p);
  }

  // h[hpos..] - c * m * g[gpos..]
  OPoly sub_scaled(const OPoly& h, std::size_t hpos, std::uint32_t c, const Monomial& m, const OPoly& g,
                   std::size_t gpos) const {
    OPoly out;
    out.reserve(h.size() - hpos + g.size() - gpos);
    std::size_t i = hpos, j = gpos;
    const std::uint32_t negc = fp::neg(c, p);
    bool have_g = false;
    Term gt;
    auto load_g = [&]() {
      if (j < g.size()) {
        gt.monomial = g[j].monomial * m;
        gt.coeff = fp::mul(g[j].coeff, negc, p);
        have_g = true;
      } else {
        have_g = false;
      }
    };
    load_g();
    while (i < h.size() || have_g) {
      if (!have_g) {
        out.push_back(h[i++]);
        continue;
      }
      if (i >= h.size()) {
        out.push_back(gt);
        ++j;
        load_g();
        continue;
      }
      auto cmp = order.compare(h[i].monomial, gt.monomial);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back(gt);
        ++j;
        load_g();
      } else {
        std::uint32_t s = fp::add(h[i].coeff, gt.coeff, p);
        if (s != 0) out.push_back({h[i].monomial, s});
        ++i;
        ++j;
        load_g();
      }
    }
    return out;
  }

  // Full reduction of h against monic basis elements.
  OPoly normal_form(OPoly h, const std::vector<OPoly>& basis, const std::vector<Monomial>& leads) const {
    OPoly rem;
    std::size_t pos = 0;
    while (pos < h.size()) {
      const Term& lt = h[pos];
      std::size_t k = 0;
      for (; k < leads.size(); ++k) {
        if (leads[k].divides(lt.monomial)) break;
      }
      if (k == leads.size()) {
        rem.push_back(lt);
        ++pos;
        continue;
      }
      Monomial m = lt.monomial / leads[k];
      h = sub_scaled(h, pos + 1, lt.coeff, m, basis[k], 1);
      pos = 0;
    }
    return rem;
  }

  OPoly s_poly(const OPoly& f, const OPoly& g, const Monomial& l) const {
    Monomial mf = l / f.front().monomial;
    Monomial mg = l / g.front().monomial;
    OPoly a;
    a.reserve(f.size());
    for (std::size_t i = 1; i < f.size(); ++i) a.push_back({f[i].monomial * mf, f[i].coeff});
    return sub_scaled(a, 0, 1, mg, g, 1);
  }
};

bool is_constant(const OPoly& h) { return h.size() == 1 && h.front().monomial.is_one(); }

}  // namespace

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<std::vector<Term>> ordered)
    : ring_(std::move(ring)), order_(std::move(order)), ordered_(std::move(ordered)) {
  elements_.reserve(ordered_.size());
  leading_.reserve(ordered_.size());
  for (const auto& g : ordered_) {
    elements_.push_back(SparsePoly::from_terms(ring_, g));
    leading_.push_back(g.front().monomial);
  }
}

bool GroebnerBasis::is_unit() const noexcept {
  return ordered_.size() == 1 && is_constant(ordered_.front());
}

SparsePoly GroebnerBasis::normal_form(const SparsePoly& f) const {
  require_same_ring(*ring_, f.ring());
  Engine eng{order_, ring_->characteristic()};
  OPoly r = eng.normal_form(eng.to_ordered(f), ordered_, leading_);
  return SparsePoly::from_terms(ring_, std::move(r));
}

// ---------------------------------------------------------------- Buchberger

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<SparsePoly>& generators,
                         const MonomialOrder& order) {
  const std::size_t n = ring->num_vars();
  if (!order.permutation.empty()) {
    std::vector<std::size_t> sorted = order.permutation;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (sorted != identity) raise(ErrorKind::InvalidParameter, "monomial order permutation is not a permutation");
  }
  Engine eng{order, ring->characteristic()};

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
  };
  std::vector<OPoly> basis;
  std::vector<Monomial> leads;
  std::vector<std::uint64_t> sugars;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto unit_basis = [&]() {
    std::vector<OPoly> one{OPoly{Term{Monomial(n), 1}}};
    return GroebnerBasis(ring, order, std::move(one));
  };

  // Gebauer-Moeller installation of a new element.
  auto install = [&](OPoly h, std::uint64_t sugar) {
    const std::size_t hidx = basis.size();
    const Monomial lh = h.front().monomial;
    basis.push_back(std::move(h));
    leads.push_back(lh);
    sugars.push_back(sugar);
    active.push_back(false);

    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < hidx; ++g) {
      if (active[g]) candidates.push_back(g);
    }
    std::vector<std::size_t> kept;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      const std::size_t g1 = candidates[ci];
      bool keep = lh.coprime(leads[g1]);
      if (!keep) {
        const Monomial l1 = lcm(lh, leads[g1]);
        keep = true;
        for (std::size_t cj = ci + 1; cj < candidates.size() && keep; ++cj) {
          if (lcm(lh, leads[candidates[cj]]).divides(l1)) keep = false;
        }
        for (std::size_t g2 : kept) {
          if (!keep) break;
          if (lcm(lh, leads[g2]).divides(l1)) keep = false;
        }
      }
      if (keep) kept.push_back(g1);
    }
    std::erase_if(pairs, [&](const Pair& pr) {
      return lh.divides(pr.lcm) && !(lcm(leads[pr.i], lh) == pr.lcm) && !(lcm(lh, leads[pr.j]) == pr.lcm);
    });
    for (std::size_t g : kept) {
      if (lh.coprime(leads[g])) continue;
      Monomial l = lcm(leads[g], lh);
      const std::uint64_t d = l.degree();
      pairs.push_back({g, hidx, l, std::max(sugars[g] + d - leads[g].degree(), sugar + d - lh.degree())});
    }
    for (std::size_t g = 0; g < hidx; ++g) {
      if (active[g] && lh.divides(leads[g])) active[g] = false;
    }
    active[hidx] = true;
  };

  for (const auto& f : generators) {
    require_same_ring(*ring, f.ring());
    if (f.is_zero()) continue;
    OPoly h = eng.normal_form(eng.to_ordered(f), basis, leads);
    if (h.empty()) continue;
    eng.make_monic(h);
    if (is_constant(h)) return unit_basis();
    std::uint64_t sugar = 0;
    for (const auto& t : f.terms()) sugar = std::max<std::uint64_t>(sugar, t.monomial.degree());
    install(std::move(h), sugar);
  }

  // Sugar strategy: the smallest phantom degree first, ties broken by the order.
  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (it->sugar < best->sugar || (it->sugar == best->sugar && order.compare(it->lcm, best->lcm) < 0)) best = it;
    }
    Pair pr = *best;
    pairs.erase(best);
    OPoly s = eng.s_poly(basis[pr.i], basis[pr.j], pr.lcm);
    OPoly h = eng.normal_form(std::move(s), basis, leads);
    if (h.empty()) continue;
    eng.make_monic(h);
    if (is_constant(h)) return unit_basis();
    install(std::move(h), pr.sugar);
  }

  // Inter-reduce the minimal basis formed by the active elements.
  std::vector<OPoly> reduced;
  for (std::size_t g = 0; g < basis.size(); ++g) {
    if (!active[g]) continue;
    const OPoly& el = basis[g];
    OPoly tail(el.begin() + 1, el.end());
    OPoly t = eng.normal_form(std::move(tail), basis, leads);
    OPoly full;
    full.reserve(t.size() + 1);
    full.push_back(el.front());
    full.insert(full.end(), t.begin(), t.end());
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OPoly& a, const OPoly& b) {
    return order.compare(a.front().monomial, b.front().monomial) > 0;
  });
  return GroebnerBasis(ring, order, std::move(reduced));
}

}  // namespace fptlab
