#include "conjgen/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace conjgen {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size());
  for (auto i : images) {
    if (i >= images.size() || seen[i]) throw std::invalid_argument("images do not form a bijection");
    seen[i] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  std::size_t largest = 0;
  skip();
  if (pos == text.size()) throw CycleSyntaxError(pos, "empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw CycleSyntaxError(pos, "expected '('");
    ++pos;
    skip();
    std::vector<std::uint32_t> cyc;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip();
      continue;
    }
    for (;;) {
      skip();
      const std::size_t start = pos;
      unsigned long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (v > 100'000'000) throw CycleSyntaxError(start, "point too large");
        ++pos;
      }
      if (pos == start) throw CycleSyntaxError(pos, "expected a point");
      if (v == 0) throw CycleSyntaxError(start, "points are numbered from 1");
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      largest = std::max<std::size_t>(largest, v);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw CycleSyntaxError(pos, "expected ',' or ')'");
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  if (degree == 0) degree = largest;
  if (largest > degree)
    throw CycleSyntaxError(0, "point " + std::to_string(largest) + " exceeds degree " +
                                  std::to_string(degree));
  Permutation p(degree);
  std::vector<bool> used(degree);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (used[cyc[i]])
        throw CycleSyntaxError(0, "point " + std::to_string(cyc[i] + 1) + " repeated");
      used[cyc[i]] = true;
      p.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return q;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size());
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(o, len);
    if (o / g > UINT64_MAX / len) throw std::overflow_error("permutation order overflows");
    o = o / g * len;
  }
  return o;
}

Permutation Permutation::pow(long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Permutation out(degree());
  while (n) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  if (g.degree() != degree()) throw DegreeMismatchError("conjugation across degrees");
  // g^-1 x g maps g(i) to g(x(i))
  Permutation q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[g.images_[i]] = g.images_[images_[i]];
  return q;
}

std::optional<std::uint32_t> Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::string Permutation::to_cycles() const {
  std::string s;
  std::vector<bool> seen(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) s += ',';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatchError("product of permutations of degree " + std::to_string(a.degree()) +
                              " and " + std::to_string(b.degree()));
  Permutation c;
  c.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) c.images_[i] = b.images_[a.images_[i]];
  return c;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::vector<Permutation> gens, std::size_t degree)
    : degree_(gens.empty() ? degree : gens.front().degree()), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw DegreeMismatchError("generators of degree " + std::to_string(degree_) + " and " +
                                std::to_string(g.degree()));
  schreier_sims();
}

PermGroup build_group(std::vector<Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("build_group needs at least one generator");
  return PermGroup(std::move(gens));
}

std::vector<std::uint32_t> PermGroup::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (const auto& l : levels_)
    for (const auto& g : l.generators)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

void PermGroup::rebuild_orbit(Level& lvl) const {
  lvl.orbit.assign(1, lvl.base_point);
  lvl.orbit_index.assign(degree_, -1);
  lvl.orbit_index[lvl.base_point] = 0;
  lvl.transversal.assign(1, Permutation(degree_));
  lvl.inverse_transversal.assign(1, Permutation(degree_));
  for (std::size_t j = 0; j < lvl.orbit.size(); ++j) {
    for (const auto& g : lvl.generators) {
      const std::uint32_t q = g[lvl.orbit[j]];
      if (lvl.orbit_index[q] >= 0) continue;
      lvl.orbit_index[q] = static_cast<std::int32_t>(lvl.orbit.size());
      lvl.orbit.push_back(q);
      lvl.transversal.push_back(lvl.transversal[j] * g);
      lvl.inverse_transversal.push_back(lvl.transversal.back().inverse());
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const std::int32_t j = l.orbit_index[p[l.base_point]];
    if (j < 0) return {std::move(p), i};
    p = p * l.inverse_transversal[static_cast<std::size_t>(j)];
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  levels_.clear();
  const auto add_level = [&](std::uint32_t point) {
    Level l;
    l.base_point = point;
    levels_.push_back(std::move(l));
  };
  for (const auto& g : gens_) {
    if (g.is_identity()) continue;
    bool moves_base = false;
    for (const auto& l : levels_)
      if (g[l.base_point] != l.base_point) moves_base = true;
    if (!moves_base) add_level(*g.first_moved_point());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens_) {
      if (g.is_identity()) continue;
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g[levels_[j].base_point] != levels_[j].base_point) fixes = false;
      if (fixes) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool extended = false;
    for (std::size_t j = 0; !extended && j < levels_[i].orbit.size(); ++j) {
      for (std::size_t s = 0; s < levels_[i].generators.size(); ++s) {
        const Level& l = levels_[i];
        const Permutation& x = l.generators[s];
        const std::uint32_t img = x[l.orbit[j]];
        Permutation h = l.transversal[j] * x *
                        l.inverse_transversal[static_cast<std::size_t>(l.orbit_index[img])];
        if (h.is_identity()) continue;
        auto [r, stop] = sift(std::move(h), i + 1);
        if (r.is_identity()) continue;
        if (stop == levels_.size()) add_level(*r.first_moved_point());
        for (std::size_t t = i + 1; t <= stop; ++t) {
          levels_[t].generators.push_back(r);
          rebuild_orbit(levels_[t]);
        }
        i = stop + 1;  // resume checking at the deepest changed level
        extended = true;
        break;
      }
    }
  }

  order_ = 1;
  for (const auto& l : levels_) order_ *= static_cast<unsigned long>(l.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatchError("membership test of degree " + std::to_string(p.degree()) +
                              " in a group of degree " + std::to_string(degree_));
  auto [r, stop] = sift(p, 0);
  return stop == levels_.size() && r.is_identity();
}

std::uint64_t PermGroup::rank(const Permutation& p) const {
  std::uint64_t r = 0, stride = 1;
  Permutation q = p;
  for (const auto& l : levels_) {
    const std::int32_t j = l.orbit_index[q[l.base_point]];
    if (j < 0) throw std::invalid_argument("rank of a non-member");
    r += stride * static_cast<std::uint64_t>(j);
    stride *= l.orbit.size();
    q = q * l.inverse_transversal[static_cast<std::size_t>(j)];
  }
  if (!q.is_identity()) throw std::invalid_argument("rank of a non-member");
  return r;
}

Permutation PermGroup::unrank(std::uint64_t r) const {
  Permutation p(degree_);
  // element = u_{m-1} * ... * u_0
  std::vector<std::size_t> idx(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    idx[i] = r % levels_[i].orbit.size();
    r /= levels_[i].orbit.size();
  }
  for (std::size_t i = levels_.size(); i-- > 0;) p = p * levels_[i].transversal[idx[i]];
  return p;
}

std::vector<Permutation> PermGroup::elements(std::size_t bound) const {
  if (order_ > bound)
    throw ResourceBoundError("group of order " + order_.get_str() +
                             " exceeds the enumeration bound " + std::to_string(bound));
  const std::uint64_t n = order_.get_ui();
  std::vector<Permutation> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(unrank(r));
  return out;
}

Permutation PermGroup::random_element(const std::function<std::uint64_t()>& bits) const {
  Permutation p(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;)
    p = p * levels_[i].transversal[bits() % levels_[i].orbit.size()];
  return p;
}

// ---------------------------------------------------------------------------
// Classes and centralizers

Permutation ConjClass::conjugator(const std::vector<Permutation>& gens, std::size_t i) const {
  std::vector<std::uint32_t> path;
  for (std::int64_t j = static_cast<std::int64_t>(i); parent[static_cast<std::size_t>(j)] >= 0;
       j = parent[static_cast<std::size_t>(j)])
    path.push_back(via[static_cast<std::size_t>(j)]);
  Permutation u(representative.degree());
  for (std::size_t k = path.size(); k-- > 0;) u = u * gens[path[k]];
  return u;
}

ConjClass conjugacy_class(const PermGroup& g, const Permutation& rep, std::size_t bound) {
  if (rep.degree() != g.degree()) throw DegreeMismatchError("class representative degree");
  ConjClass c;
  c.representative = rep;
  c.members.push_back(rep);
  c.index.emplace(rep, 0);
  c.parent.push_back(-1);
  c.via.push_back(0);
  const auto& gens = g.generators();
  for (std::size_t j = 0; j < c.members.size(); ++j) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = c.members[j].conjugate_by(gens[s]);
      if (c.index.count(y)) continue;
      if (c.members.size() >= bound)
        throw ResourceBoundError("class of " + rep.to_cycles() + " exceeds the bound " +
                                 std::to_string(bound));
      c.index.emplace(y, c.members.size());
      c.members.push_back(std::move(y));
      c.parent.push_back(static_cast<std::int64_t>(j));
      c.via.push_back(static_cast<std::uint32_t>(s));
    }
  }
  const mpz_class size(static_cast<unsigned long>(c.members.size()));
  if (!mpz_divisible_p(g.order().get_mpz_t(), size.get_mpz_t()))
    throw std::logic_error("class size does not divide the group order");
  c.centralizer_order = g.order() / size;
  return c;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw ResourceBoundError("group of order " + g.order().get_str() +
                             " exceeds the enumeration bound " + std::to_string(bound));
  const std::uint64_t n = g.order().get_ui();
  std::vector<bool> seen(n);
  std::vector<ConjClass> out;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ConjClass c = conjugacy_class(g, g.unrank(r), bound);
    for (const auto& m : c.members) seen[g.rank(m)] = true;
    out.push_back(std::move(c));
  }
  return out;
}

PermGroup centralizer(const PermGroup& g, const ConjClass& cls) {
  const mpz_class& target = cls.centralizer_order;
  const auto& gens = g.generators();
  std::vector<Permutation> cgens;
  PermGroup c(cgens, g.degree());
  for (std::size_t i = 0; i < cls.size() && c.order() != target; ++i) {
    const Permutation ui = cls.conjugator(gens, i);
    for (std::size_t s = 0; s < gens.size() && c.order() != target; ++s) {
      const std::size_t j = cls.index.at(cls.members[i].conjugate_by(gens[s]));
      Permutation h = ui * gens[s] * cls.conjugator(gens, j).inverse();
      if (h.is_identity() || c.contains(h)) continue;
      cgens.push_back(std::move(h));
      c = PermGroup(cgens, g.degree());
    }
  }
  if (c.order() != target) throw std::logic_error("centralizer construction fell short");
  return c;
}

PermGroup verified_centralizer(const PermGroup& g, const ConjClass& cls,
                               std::vector<Permutation> gens) {
  const Permutation& x = cls.representative;
  for (const auto& h : gens) {
    if (!g.contains(h)) throw std::invalid_argument("centralizer generator outside the group");
    if (x * h != h * x)
      throw std::invalid_argument("supplied generator " + h.to_cycles() + " does not commute");
  }
  PermGroup c(std::move(gens), g.degree());
  if (c.order() != cls.centralizer_order)
    throw std::invalid_argument("supplied centralizer has order " + c.order().get_str() +
                                ", expected " + cls.centralizer_order.get_str());
  return c;
}

mpz_class brute_struct_const(const PermGroup& g, const ConjClass& a, const ConjClass& b,
                             const Permutation& c_rep) {
  if (c_rep.degree() != g.degree()) throw DegreeMismatchError("class representative degree");
  unsigned long n = 0;
  for (const auto& u : a.members)
    if (b.contains(u.inverse() * c_rep)) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// alpha search

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : b) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool test(const Bits& b, std::uint64_t r) { return (b[r / 64] >> (r % 64)) & 1; }
void set(Bits& b, std::uint64_t r) { b[r / 64] |= std::uint64_t{1} << (r % 64); }

struct Sub {
  std::vector<Permutation> gens;
  std::vector<Permutation> elems;
  Bits bits;
};

/// Closure of `base` (a subgroup, possibly empty) together with gens.
Sub close(const PermGroup& g, const Sub* base, std::vector<Permutation> gens) {
  Sub s;
  s.gens = std::move(gens);
  s.bits.assign((g.order().get_ui() + 63) / 64, 0);
  if (base) {
    s.elems = base->elems;
    s.bits = base->bits;
  } else {
    s.elems.push_back(g.identity());
    set(s.bits, g.rank(s.elems[0]));
  }
  for (std::size_t i = 0; i < s.elems.size(); ++i)
    for (const auto& x : s.gens) {
      Permutation y = s.elems[i] * x;
      const std::uint64_t r = g.rank(y);
      if (test(s.bits, r)) continue;
      set(s.bits, r);
      s.elems.push_back(std::move(y));
    }
  return s;
}

}  // namespace

std::optional<unsigned> brute_alpha(const PermGroup& g, const PermGroup& socle,
                                    const Permutation& x, unsigned max_k, std::size_t bound) {
  if (x.degree() != g.degree() || socle.degree() != g.degree())
    throw DegreeMismatchError("brute_alpha arguments of differing degree");
  if (x.is_identity()) throw std::invalid_argument("x is the identity");
  if (!g.contains(x)) throw std::invalid_argument("x is not in the group");
  if (g.order() > bound)
    throw ResourceBoundError("group of order " + g.order().get_str() +
                             " exceeds the enumeration bound " + std::to_string(bound));
  for (const auto& s : socle.generators()) {
    if (!g.contains(s)) throw std::invalid_argument("socle is not a subgroup");
    for (const auto& t : g.generators())
      if (!socle.contains(s.conjugate_by(t)))
        throw std::invalid_argument("socle is not normal");
  }
  std::vector<Permutation> sx = socle.generators();
  sx.push_back(x);
  if (PermGroup(sx, g.degree()).order() != g.order())
    throw std::invalid_argument("<x, socle> is not the whole group");

  const ConjClass cls = conjugacy_class(g, x, bound);
  std::vector<std::uint64_t> socle_ranks;
  for (const auto& s : socle.generators()) socle_ranks.push_back(g.rank(s));
  const auto covers = [&](const Sub& h) {
    return std::all_of(socle_ranks.begin(), socle_ranks.end(),
                       [&](std::uint64_t r) { return test(h.bits, r); });
  };

  std::vector<Sub> layer{close(g, nullptr, {x})};
  if (covers(layer[0])) return 1u;
  for (unsigned k = 2; k <= max_k; ++k) {
    std::unordered_map<Bits, std::size_t, BitsHash> seen;
    std::vector<Sub> next;
    for (const Sub& h : layer) {
      for (const auto& y : cls.members) {
        if (test(h.bits, g.rank(y))) continue;
        std::vector<Permutation> gens = h.gens;
        gens.push_back(y);
        Sub h2 = close(g, &h, std::move(gens));
        if (covers(h2)) return k;
        if (seen.emplace(h2.bits, next.size()).second) next.push_back(std::move(h2));
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// pair orbits

std::vector<std::vector<std::size_t>> conjugation_orbits(const std::vector<Permutation>& set,
                                                         const std::vector<Permutation>& acting) {
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < set.size(); ++i) index.emplace(set[i], i);
  std::vector<bool> seen(set.size());
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orb{i};
    seen[i] = true;
    for (std::size_t j = 0; j < orb.size(); ++j)
      for (const auto& h : acting) {
        auto it = index.find(set[orb[j]].conjugate_by(h));
        if (it == index.end()) throw std::invalid_argument("set is not closed under the action");
        if (!seen[it->second]) {
          seen[it->second] = true;
          orb.push_back(it->second);
        }
      }
    out.push_back(std::move(orb));
  }
  return out;
}

std::size_t pair_orbit_count(const PermGroup& g, const std::vector<Permutation>& cls,
                             const Permutation& fixed) {
  if (std::find(cls.begin(), cls.end(), fixed) == cls.end())
    throw std::invalid_argument("fixed element is not in the class");
  const PermGroup c = centralizer(g, conjugacy_class(g, fixed));
  return conjugation_orbits(cls, c.generators()).size();
}

std::size_t pair_orbit_count(const PermGroup& g, const ConjClass& cls, const Permutation& fixed) {
  return pair_orbit_count(g, cls.members, fixed);
}

std::string order3_subgroup_label(const PermGroup& h, const std::vector<Permutation>& gens,
                                  std::size_t bound) {
  const mpz_class& n = h.order();
  const auto other = [&] { return "other(" + n.get_str() + ")"; };
  if (n == 3) return "Z3";
  if (n != 9 && n != 12 && n != 24 && n != 60) return other();
  if (n > bound) return other();
  bool abelian = true;
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (a * b != b * a) abelian = false;
  const auto elems = h.elements(bound);
  std::size_t involutions = 0, threes = 0, central = 0;
  for (const auto& e : elems) {
    const auto o = e.order();
    if (o == 2) ++involutions;
    if (o == 3) ++threes;
    if (std::all_of(gens.begin(), gens.end(), [&](const Permutation& s) { return e * s == s * e; }))
      ++central;
  }
  const bool all3 = std::all_of(gens.begin(), gens.end(),
                                [](const Permutation& s) { return s.order() == 3; });
  if (n == 9) return all3 && abelian ? "Z3xZ3" : other();
  if (n == 12) return involutions == 3 && threes == 8 ? "A4" : other();
  if (n == 24) return involutions == 1 && threes == 8 ? "SL2(3)" : other();
  return !abelian && central == 1 ? "A5" : other();
}

std::vector<PairLabel> classify_two_generated(const PermGroup& g,
                                              const std::vector<Permutation>& set,
                                              std::size_t bound) {
  if (set.empty()) throw std::invalid_argument("empty class");
  for (const auto& s : set) {
    if (s.degree() != g.degree()) throw DegreeMismatchError("class element degree");
    if (s.order() != 3)
      throw std::invalid_argument("class element " + s.to_cycles() + " has order " +
                                  std::to_string(s.order()) + ", not 3");
  }
  const Permutation& d1 = set.front();
  const PermGroup c = centralizer(g, conjugacy_class(g, d1, bound));
  const auto orbits = conjugation_orbits(set, c.generators());

  std::unordered_map<Permutation, std::size_t, PermutationHash> orbit_of;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (auto i : orbits[o]) orbit_of.emplace(set[i], o);
  std::vector<bool> done(orbits.size());
  std::vector<PairLabel> out;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (done[o]) continue;
    done[o] = true;
    std::size_t covered = orbits[o].size();
    auto inv = orbit_of.find(set[orbits[o].front()].inverse());
    if (inv != orbit_of.end() && !done[inv->second]) {
      done[inv->second] = true;
      covered += orbits[inv->second].size();
    }
    const Permutation& s = set[orbits[o].front()];
    const PermGroup h({d1, s});
    out.push_back({s, covered, h.order(), order3_subgroup_label(h, {d1, s}, bound)});
  }
  return out;
}

std::vector<PairLabel> classify_two_generated(const PermGroup& g, const ConjClass& cls,
                                              std::size_t bound) {
  return classify_two_generated(g, cls.members, bound);
}

}  // namespace conjgen
