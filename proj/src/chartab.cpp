#include "conjgen/chartab.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace conjgen {

using Term = CharacterTable::Term;
using Column = CharacterTable::Column;

namespace {

using Terms = std::vector<std::vector<Term>>;

std::vector<Term> sparse(const std::vector<mpq_class>& coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (sgn(coeffs[k]) != 0) out.push_back({static_cast<unsigned>(k), coeffs[k]});
  return out;
}

std::size_t bit_length(const mpz_class& z) {
  return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t bit_length(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

Column make_column(const std::vector<std::vector<CycloValue>>& rows, ClassIndex c) {
  Column col;
  for (const auto& row : rows) col.conductor = std::lcm(col.conductor, row[c].conductor());
  col.terms.resize(rows.size());
  col.conj_terms.resize(rows.size());
  col.integral = true;
  mpz_class max_abs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CycloValue& v = rows[i][c];
    col.terms[i] = sparse(cyclo_detail::embed(v, col.conductor));
    col.conj_terms[i] = sparse(cyclo_detail::embed(conjugate(v), col.conductor));
    if (!col.integral) continue;
    const auto r = to_rational(v);
    if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p()) {
      col.integral = false;
      continue;
    }
    col.integers.push_back(r->get_num().get_si());
    max_abs = std::max(max_abs, mpz_class(abs(r->get_num())));
  }
  if (col.integral)
    col.max_bits = bit_length(max_abs);
  else
    col.integers.clear();
  return col;
}

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

mpz_class from_int128(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(u));
  return neg ? mpz_class(-out) : out;
}

void addmul(mpz_class& acc, const mpz_class& x, long y) {
  if (y >= 0)
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(y));
  else
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-y));
}

/// One factor of a per-character product: canonical sparse terms in
/// Q(zeta_conductor), optionally with an integer view.
struct View {
  unsigned conductor;
  const Terms* terms;
  const std::vector<long>* integers = nullptr;
  std::size_t max_bits = 0;
};

View view(const Column& c, bool conj) {
  return {c.conductor, conj ? &c.conj_terms : &c.terms, c.integral ? &c.integers : nullptr,
          c.max_bits};
}

/// sum_chi x(chi) y(chi), exactly.
///
/// Products are collected in the tensor product of the two power bases.  If
/// everything lands on the constant basis element the sum is that rational;
/// otherwise the tensor is mapped into Q(zeta_lcm) and canonicalized once.
CycloValue pair_sum(const View& x, const View& y, std::size_t k) {
  if (x.integers && y.integers) {
    if (x.max_bits + y.max_bits + bit_length(k) <= 125) {
      i128 acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        acc += static_cast<i128>((*x.integers)[i]) * (*y.integers)[i];
      return CycloValue(from_int128(acc));
    }
    mpz_class acc;
    for (std::size_t i = 0; i < k; ++i) addmul(acc, mpz_class((*x.integers)[i]), (*y.integers)[i]);
    return CycloValue(acc);
  }
  if (x.conductor == 1 && y.conductor == 1) {
    mpq_class acc;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& a = (*x.terms)[i];
      const auto& b = (*y.terms)[i];
      if (!a.empty() && !b.empty()) acc += a[0].coeff * b[0].coeff;
    }
    return CycloValue(acc);
  }
  std::unordered_map<std::uint64_t, mpq_class> tensor;
  for (std::size_t i = 0; i < k; ++i)
    for (const Term& a : (*x.terms)[i])
      for (const Term& b : (*y.terms)[i])
        tensor[a.exponent + static_cast<std::uint64_t>(x.conductor) * b.exponent] +=
            a.coeff * b.coeff;
  bool concentrated = true;
  for (const auto& [key, c] : tensor)
    if (key != 0 && sgn(c) != 0) {
      concentrated = false;
      break;
    }
  if (concentrated) {
    auto it = tensor.find(0);
    return it == tensor.end() ? CycloValue() : CycloValue(it->second);
  }
  const unsigned L = std::lcm(x.conductor, y.conductor);
  std::vector<mpq_class> dense(L);
  for (const auto& [key, c] : tensor) {
    const std::uint64_t ex = key % x.conductor;
    const std::uint64_t ey = key / x.conductor;
    dense[(ex * (L / x.conductor) + ey * (L / y.conductor)) % L] += c;
  }
  return CycloValue::from_powers(L, std::move(dense));
}

std::string pair_label(const CharacterTable& t, ClassIndex a, ClassIndex b) {
  return t.class_name(a) + "," + t.class_name(b);
}

mpz_class degree_of(const CharacterTable& t, CharIndex chi) {
  const auto r = to_rational(t.degree(chi));
  if (!r || r->get_den() != 1 || sgn(*r) <= 0)
    throw TableError(t.group_name() + ": character " + std::to_string(chi) +
                     " has no positive integer degree");
  return r->get_num();
}

/// |G| / (|C(a)| |C(b)|) * s, required to be a nonnegative integer.
mpz_class finish_struct(const CharacterTable& t, ClassIndex a, ClassIndex b, ClassIndex c,
                        const CycloValue& s) {
  const auto label = [&] {
    return t.group_name() + ": m(" + t.class_name(a) + "," + t.class_name(b) + "," +
           t.class_name(c) + ")";
  };
  const auto r = to_rational(s);
  if (!r) throw TableError(label() + " character sum is irrational: " + to_string(s));
  const mpq_class m = mpq_class(t.group_order()) * *r /
                      mpq_class(t.class_info(a).centralizer_order * t.class_info(b).centralizer_order);
  if (m.get_den() != 1 || sgn(m) < 0)
    throw TableError(label() + " = " + m.get_str() + " is not a nonnegative integer");
  return m.get_num();
}

/// Per-character u(chi) = chi(a) chi(b) / chi(1) as a pseudo-column.
struct ProductColumn {
  Terms terms;
  unsigned conductor = 1;
  // rational case: u(chi) = scaled[chi] / denom
  bool rational = false;
  std::vector<mpz_class> scaled;
  mpz_class denom = 1;
  bool small = false;
  std::vector<long> scaled_long;
  std::size_t max_bits = 0;
};

ProductColumn product_column(const CharacterTable& t, ClassIndex a, ClassIndex b) {
  const std::size_t k = t.num_characters();
  ProductColumn u;
  std::vector<CycloValue> vals(k);
  for (CharIndex chi = 0; chi < k; ++chi) {
    vals[chi] = t.value(chi, a) * t.value(chi, b) / CycloValue(degree_of(t, chi));
    u.conductor = std::lcm(u.conductor, vals[chi].conductor());
  }
  u.terms.resize(k);
  for (CharIndex chi = 0; chi < k; ++chi)
    u.terms[chi] = sparse(cyclo_detail::embed(vals[chi], u.conductor));
  if (u.conductor != 1) return u;
  u.rational = true;
  for (CharIndex chi = 0; chi < k; ++chi)
    u.denom = lcm(u.denom, vals[chi].coefficients()[0].get_den());
  u.scaled.resize(k);
  u.small = true;
  mpz_class max_abs;
  for (CharIndex chi = 0; chi < k; ++chi) {
    const mpq_class& q = vals[chi].coefficients()[0];
    u.scaled[chi] = q.get_num() * (u.denom / q.get_den());
    if (!u.scaled[chi].fits_slong_p()) u.small = false;
    max_abs = std::max(max_abs, mpz_class(abs(u.scaled[chi])));
  }
  u.max_bits = bit_length(max_abs);
  if (u.small)
    for (const auto& z : u.scaled) u.scaled_long.push_back(z.get_si());
  return u;
}

mpz_class struct_from_product(const CharacterTable& t, const ProductColumn& u, ClassIndex a,
                              ClassIndex b, ClassIndex c) {
  const std::size_t k = t.num_characters();
  const Column& col = t.column(c);
  if (u.rational && col.integral) {
    mpz_class sd;
    if (u.small && u.max_bits + col.max_bits + bit_length(k) <= 125) {
      i128 acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        acc += static_cast<i128>(u.scaled_long[i]) * col.integers[i];
      sd = from_int128(acc);
    } else {
      for (std::size_t i = 0; i < k; ++i) addmul(sd, u.scaled[i], col.integers[i]);
    }
    return finish_struct(t, a, b, c, CycloValue(mpq_class(sd, u.denom)));
  }
  const View uv{u.conductor, &u.terms};
  return finish_struct(t, a, b, c, pair_sum(uv, view(col, true), k));
}

}  // namespace

// ---------------------------------------------------------------------------

CharacterTable::CharacterTable(std::string group_name, mpz_class group_order, unsigned socle_index,
                               std::vector<ClassInfo> classes,
                               std::vector<std::vector<CycloValue>> characters)
    : group_name_(std::move(group_name)),
      group_order_(std::move(group_order)),
      socle_index_(socle_index),
      classes_(std::move(classes)),
      characters_(std::move(characters)) {
  if (classes_.empty()) throw TableError(group_name_ + ": table has no classes");
  if (characters_.empty()) throw TableError(group_name_ + ": table has no characters");
  if (sgn(group_order_) <= 0) throw TableError(group_name_ + ": group order must be positive");
  if (socle_index_ == 0) throw TableError(group_name_ + ": socle index must be positive");
  for (std::size_t i = 0; i < characters_.size(); ++i)
    if (characters_[i].size() != classes_.size())
      throw TableError(group_name_ + ": character " + std::to_string(i) + " has " +
                       std::to_string(characters_[i].size()) + " values, expected " +
                       std::to_string(classes_.size()));
  for (const auto& c : classes_)
    if (sgn(c.centralizer_order) <= 0)
      throw TableError(group_name_ + ": class " + c.name + " has nonpositive centralizer order");
  index_names();
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].element_order == 1) {
      identity_ = c;
      break;
    }
  build_columns();
  compute_inner();
}

void CharacterTable::index_names() {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (!primary_.emplace(classes_[c].name, c).second)
      throw TableError(group_name_ + ": duplicate class name " + classes_[c].name);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (const auto& al : classes_[c].aliases) {
      if (al == classes_[c].name) continue;
      if (primary_.count(al))
        throw TableError(group_name_ + ": alias " + al + " of " + classes_[c].name +
                         " is the name of another class");
      if (!alias_.emplace(al, c).second)
        throw TableError(group_name_ + ": alias " + al + " is used twice");
    }
}

void CharacterTable::build_columns() {
  auto cols = std::make_shared<std::vector<Column>>();
  cols->reserve(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) cols->push_back(make_column(characters_, c));
  columns_ = std::move(cols);
}

void CharacterTable::compute_inner() {
  inner_.assign(classes_.size(), true);
  const CycloValue one(1);
  for (const auto& row : characters_) {
    if (row[identity_] != one) continue;
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (row[c] != one) inner_[c] = false;
  }
}

std::optional<ClassIndex> CharacterTable::find_class(std::string_view name) const {
  if (auto it = primary_.find(name); it != primary_.end()) return it->second;
  if (auto it = alias_.find(name); it != alias_.end()) return it->second;
  return std::nullopt;
}

ClassIndex CharacterTable::class_index(std::string_view name) const {
  if (auto c = find_class(name)) return *c;
  throw UnknownClassError(std::string(name), group_name_);
}

CharacterTable CharacterTable::with_value(CharIndex chi, ClassIndex c, CycloValue v) const {
  CharacterTable out(*this);
  out.characters_.at(chi).at(c) = std::move(v);
  auto cols = std::make_shared<std::vector<Column>>(*columns_);
  (*cols)[c] = make_column(out.characters_, c);
  out.columns_ = std::move(cols);
  out.compute_inner();
  return out;
}

// ---------------------------------------------------------------------------

bool ValidationReport::ok() const noexcept { return error_count() == 0; }

std::size_t ValidationReport::error_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      issues.begin(), issues.end(), [](const auto& i) { return i.severity == Severity::error; }));
}

namespace {

std::vector<unsigned> primes_of(unsigned m) { return cyclo_detail::prime_factors(m); }

}  // namespace

ValidationReport validate(const CharacterTable& t) {
  ValidationReport rep;
  const auto error = [&](std::string kind, std::string msg, std::vector<std::size_t> idx) {
    rep.issues.push_back({Severity::error, std::move(kind), std::move(msg), std::move(idx)});
  };
  const auto warn = [&](std::string kind, std::string msg, std::vector<std::size_t> idx) {
    rep.issues.push_back({Severity::warning, std::move(kind), std::move(msg), std::move(idx)});
  };
  const std::size_t nc = t.num_classes();
  const std::size_t nx = t.num_characters();
  const mpz_class& order = t.group_order();

  if (nc != nx)
    error("character_count",
          std::to_string(nx) + " characters but " + std::to_string(nc) + " classes", {});

  // class data
  bool sizes_ok = true;
  mpz_class total;
  std::size_t identities = 0;
  for (ClassIndex c = 0; c < nc; ++c) {
    const ClassInfo& ci = t.class_info(c);
    if (ci.element_order == 0 || !mpz_divisible_ui_p(order.get_mpz_t(), ci.element_order))
      error("element_order",
            "class " + ci.name + ": element order " + std::to_string(ci.element_order) +
                " does not divide |G|",
            {c});
    if (!mpz_divisible_p(order.get_mpz_t(), ci.centralizer_order.get_mpz_t())) {
      error("centralizer_order", "class " + ci.name + ": centralizer order does not divide |G|",
            {c});
      sizes_ok = false;
    } else {
      total += order / ci.centralizer_order;
    }
    if (ci.element_order != 0 &&
        !mpz_divisible_ui_p(ci.centralizer_order.get_mpz_t(), ci.element_order))
      error("centralizer_order",
            "class " + ci.name + ": element order does not divide the centralizer order", {c});
    if (ci.element_order == 1) {
      ++identities;
      if (ci.centralizer_order != order)
        error("identity_class", "identity class " + ci.name + " has centralizer order != |G|",
              {c});
    }
    for (const auto& [p, target] : ci.power_maps) {
      const auto tc = t.find_class(target);
      if (!tc) {
        error("power_map", "class " + ci.name + ": " + std::to_string(p) +
                               "-th power class " + target + " is unknown", {c});
        continue;
      }
      const unsigned m = ci.element_order;
      const unsigned want = m / std::gcd(m, p);
      if (t.class_info(*tc).element_order != want)
        error("power_map",
              "class " + ci.name + ": " + std::to_string(p) + "-th power " + target +
                  " has element order " + std::to_string(t.class_info(*tc).element_order) +
                  ", expected " + std::to_string(want),
              {c, *tc});
    }
    if (ci.element_order > 1)
      for (unsigned p : primes_of(ci.element_order))
        if (!ci.power_maps.count(p))
          warn("missing_power_map",
               "class " + ci.name + ": no " + std::to_string(p) + "-th power map", {c});
  }
  if (identities != 1)
    error("identity_class",
          std::to_string(identities) + " classes of element order 1, expected exactly 1", {});
  if (sizes_ok && total != order)
    error("class_sizes", "class sizes sum to " + total.get_str() + ", not |G| = " + order.get_str(),
          {});

  // characters
  const CycloValue one(1);
  std::size_t principal = 0;
  bool degrees_ok = true;
  mpz_class degsq;
  for (CharIndex chi = 0; chi < nx; ++chi) {
    const auto& row = t.character(chi);
    if (std::all_of(row.begin(), row.end(), [&](const CycloValue& v) { return v == one; }))
      ++principal;
    const auto d = to_rational(t.degree(chi));
    if (!d || d->get_den() != 1 || sgn(*d) <= 0) {
      error("degree",
            "character " + std::to_string(chi) + ": degree " + to_string(t.degree(chi)) +
                " is not a positive integer",
            {chi});
      degrees_ok = false;
      continue;
    }
    degsq += d->get_num() * d->get_num();
  }
  if (principal != 1)
    error("principal_character",
          std::to_string(principal) + " principal characters, expected exactly 1", {});
  if (degrees_ok && degsq != order)
    error("degree_sum", "sum of squared degrees is " + degsq.get_str() + ", not |G|", {});

  // column orthogonality
  bool columns_ok = true;
  for (ClassIndex a = 0; a < nc; ++a) {
    for (ClassIndex b = a; b < nc; ++b) {
      const CycloValue s = pair_sum(view(t.column(a), false), view(t.column(b), true), nx);
      const CycloValue want = a == b ? CycloValue(t.class_info(a).centralizer_order) : CycloValue();
      if (s != want) {
        columns_ok = false;
        error("column_orthogonality",
              "columns " + pair_label(t, a, b) + ": sum is " + to_string(s) + ", expected " +
                  to_string(want),
              {a, b});
      }
    }
  }

  // For a square table, column orthogonality X^* X = diag(|C(c)|) makes X
  // invertible with X^-1 = diag(1/|C(c)|) X^*, which is row orthogonality.
  // Only a table failing the column test needs the rows summed directly.
  if (nc != nx || !columns_ok || !sizes_ok) {
    std::vector<CycloValue> sizes(nc);
    for (ClassIndex c = 0; c < nc; ++c)
      sizes[c] = CycloValue(mpq_class(order) / mpq_class(t.class_info(c).centralizer_order));
    for (CharIndex chi = 0; chi < nx; ++chi) {
      for (CharIndex psi = chi; psi < nx; ++psi) {
        CycloValue s;
        for (ClassIndex c = 0; c < nc; ++c) {
          const CycloValue& x = t.value(chi, c);
          const CycloValue& y = t.value(psi, c);
          if (x.is_zero() || y.is_zero()) continue;
          s += sizes[c] * x * conjugate(y);
        }
        const CycloValue want = chi == psi ? CycloValue(order) : CycloValue();
        if (s != want)
          error("row_orthogonality",
                "characters " + std::to_string(chi) + "," + std::to_string(psi) + ": sum is " +
                    to_string(s) + ", expected " + to_string(want),
                {chi, psi});
      }
    }
  }
  return rep;
}

mpz_class class_size(const CharacterTable& t, ClassIndex c) {
  const mpz_class& z = t.class_info(c).centralizer_order;
  if (!mpz_divisible_p(t.group_order().get_mpz_t(), z.get_mpz_t()))
    throw TableError(t.group_name() + ": centralizer order of " + t.class_name(c) +
                     " does not divide |G|");
  return t.group_order() / z;
}

mpz_class struct_const(const CharacterTable& t, ClassIndex a, ClassIndex b, ClassIndex c) {
  if (c >= t.num_classes()) throw std::out_of_range("class index out of range");
  return struct_from_product(t, product_column(t, a, b), a, b, c);
}

std::vector<mpz_class> struct_const_row(const CharacterTable& t, ClassIndex a, ClassIndex b) {
  const ProductColumn u = product_column(t, a, b);
  std::vector<mpz_class> out;
  out.reserve(t.num_classes());
  for (ClassIndex c = 0; c < t.num_classes(); ++c) out.push_back(struct_from_product(t, u, a, b, c));
  return out;
}

std::vector<ProductTerm> product_classes(const CharacterTable& t, ClassIndex a, ClassIndex b) {
  std::vector<ProductTerm> out;
  auto row = struct_const_row(t, a, b);
  for (ClassIndex c = 0; c < row.size(); ++c)
    if (sgn(row[c]) > 0) out.push_back({c, std::move(row[c])});
  return out;
}

mpq_class inner_product(const CharacterTable& t, const std::vector<CycloValue>& chi,
                        const std::vector<CycloValue>& psi) {
  if (chi.size() != t.num_classes() || psi.size() != t.num_classes())
    throw std::invalid_argument("class function length does not match the table");
  CycloValue s;
  for (ClassIndex c = 0; c < t.num_classes(); ++c) {
    if (chi[c].is_zero() || psi[c].is_zero()) continue;
    s += CycloValue(class_size(t, c)) * chi[c] * conjugate(psi[c]);
  }
  const auto r = to_rational(s);
  if (!r) throw std::domain_error("inner product is not rational: " + to_string(s));
  return *r / mpq_class(t.group_order());
}

mpq_class inner_product(const CharacterTable& t, CharIndex chi, CharIndex psi) {
  return inner_product(t, t.character(chi), t.character(psi));
}

// ---------------------------------------------------------------------------

FusionMap FusionMap::identity(const CharacterTable& t) {
  FusionMap f;
  f.name = "identity";
  f.ambient = t.group_name();
  f.subgroup_name = t.group_name();
  f.subgroup_order = t.group_order();
  for (ClassIndex c = 0; c < t.num_classes(); ++c) {
    f.classes.push_back({t.class_name(c), class_size(t, c), t.class_info(c).element_order});
    f.assignment.push_back(t.class_name(c));
  }
  return f;
}

FusionMap FusionMap::trivial(const CharacterTable& t) {
  FusionMap f;
  f.name = "trivial";
  f.ambient = t.group_name();
  f.subgroup_name = "1";
  f.subgroup_order = 1;
  f.classes.push_back({"1a", 1, 1});
  f.assignment.push_back(t.class_name(t.identity_class()));
  return f;
}

std::vector<ClassIndex> resolve_fusion(const CharacterTable& t, const FusionMap& f) {
  const std::string where = "fusion '" + f.name + "' into " + t.group_name();
  if (f.assignment.size() != f.classes.size())
    throw TableError(where + ": " + std::to_string(f.classes.size()) + " classes but " +
                     std::to_string(f.assignment.size()) + " assignments");
  if (sgn(f.subgroup_order) <= 0 ||
      !mpz_divisible_p(t.group_order().get_mpz_t(), f.subgroup_order.get_mpz_t()))
    throw TableError(where + ": subgroup order " + f.subgroup_order.get_str() +
                     " does not divide |G|");
  std::vector<ClassIndex> out;
  mpz_class total;
  for (std::size_t i = 0; i < f.classes.size(); ++i) {
    const SubgroupClass& k = f.classes[i];
    const ClassIndex c = t.class_index(f.assignment[i]);
    if (t.class_info(c).element_order != k.element_order)
      throw TableError(where + ": class " + k.name + " of element order " +
                       std::to_string(k.element_order) + " is sent to " + t.class_name(c) +
                       " of element order " + std::to_string(t.class_info(c).element_order));
    if (sgn(k.size) <= 0) throw TableError(where + ": class " + k.name + " has nonpositive size");
    total += k.size;
    out.push_back(c);
  }
  if (total != f.subgroup_order)
    throw TableError(where + ": class sizes sum to " + total.get_str() + ", not " +
                     f.subgroup_order.get_str());
  return out;
}

mpz_class restriction_inner_product(const CharacterTable& t, const std::vector<CycloValue>& chi,
                                    const FusionMap& f) {
  if (chi.size() != t.num_classes())
    throw std::invalid_argument("class function length does not match the table");
  const auto idx = resolve_fusion(t, f);
  CycloValue s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += CycloValue(f.classes[i].size) * chi[idx[i]];
  const auto r = to_rational(s);
  if (!r)
    throw TableError("restriction to " + f.name + " gives the irrational sum " + to_string(s));
  const mpq_class m = *r / mpq_class(f.subgroup_order);
  if (m.get_den() != 1 || sgn(m) < 0)
    throw TableError("restriction to " + f.name + " gives multiplicity " + m.get_str() +
                     ", not a nonnegative integer");
  return m.get_num();
}

mpz_class restriction_inner_product(const CharacterTable& t, CharIndex chi, const FusionMap& f) {
  return restriction_inner_product(t, t.character(chi), f);
}

CharIndex find_character(const CharacterTable& t, long degree,
                         const std::vector<CharacterConstraint>& constraints) {
  std::vector<std::pair<ClassIndex, const CharacterConstraint*>> resolved;
  for (const auto& con : constraints) resolved.emplace_back(t.class_index(con.cls), &con);
  const CycloValue deg(degree);
  std::vector<CharIndex> hits;
  for (CharIndex chi = 0; chi < t.num_characters(); ++chi) {
    if (t.degree(chi) != deg) continue;
    bool ok = true;
    for (const auto& [c, con] : resolved) {
      const CycloValue& v = t.value(chi, c);
      const auto r = to_rational(v);
      switch (con->kind) {
        case CharacterConstraint::Kind::positive:
          ok = r && sgn(*r) > 0;
          break;
        case CharacterConstraint::Kind::negative:
          ok = r && sgn(*r) < 0;
          break;
        case CharacterConstraint::Kind::equals:
          ok = v == con->value;
          break;
      }
      if (!ok) break;
    }
    if (ok) hits.push_back(chi);
  }
  if (hits.empty())
    throw CharacterSelectionError(t.group_name() + ": no character of degree " +
                                  std::to_string(degree) + " meets the constraints");
  if (hits.size() > 1) {
    std::string list;
    for (auto h : hits) list += (list.empty() ? "" : ", ") + std::to_string(h);
    throw CharacterSelectionError(t.group_name() + ": " + std::to_string(hits.size()) +
                                  " characters of degree " + std::to_string(degree) +
                                  " meet the constraints (rows " + list + ")");
  }
  return hits.front();
}

}  // namespace conjgen
