#include "conjgen/certify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace conjgen {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string mname(const CharacterTable& t, ClassIndex a, ClassIndex b, ClassIndex c) {
  return "m(" + t.class_name(a) + "," + t.class_name(b) + "," + t.class_name(c) + ")";
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_citation(const std::string& citation, const std::string& kind) {
  if (citation.find_first_not_of(" \t") == std::string::npos)
    throw ClaimError(kind + " step has an empty citation");
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

bool contains_class(const CharacterTable& t, const FusionMap& f, ClassIndex c) {
  return std::any_of(f.assignment.begin(), f.assignment.end(),
                     [&](const std::string& n) { return t.find_class(n) == c; });
}

}  // namespace

std::string step_kind(const Step& s) {
  return std::visit(overloaded{
                        [](const StructConstPositive&) { return "struct_const_positive"; },
                        [](const ChainGeneration&) { return "chain_generation"; },
                        [](const SpreadAxiom&) { return "spread_axiom"; },
                        [](const BeamableAxiom&) { return "beamable_axiom"; },
                        [](const BrauerProper&) { return "brauer_proper"; },
                        [](const BrauerCaseAnalysis&) { return "brauer_case_analysis"; },
                        [](const InvolutionLowerBound&) { return "involution_lower_bound"; },
                        [](const TranspositionBound&) { return "transposition_bound"; },
                        [](const ClassificationAxiom&) { return "classification_axiom"; },
                    },
                    s);
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::verified:
      return "verified";
    case VerdictStatus::refuted:
      return "refuted";
    case VerdictStatus::incomplete:
      return "incomplete";
    case VerdictStatus::skipped:
      return "skipped";
  }
  return "?";
}

std::optional<VerdictStatus> parse_status(std::string_view s) {
  for (auto v : {VerdictStatus::verified, VerdictStatus::refuted, VerdictStatus::incomplete,
                 VerdictStatus::skipped})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

StepResult check_struct_positive(const CharacterTable& t, const StructConstPositive& s) {
  const ClassIndex a = t.class_index(s.a), b = t.class_index(s.b), c = t.class_index(s.c);
  const mpz_class m = struct_const(t, a, b, c);
  StepResult r;
  r.kind = "struct_const_positive";
  const std::string name = mname(t, a, b, c);
  r.values.emplace_back(name, m.get_str());
  r.passed = sgn(m) > 0;
  r.summary = name + " = " + m.get_str();
  if (s.expected) {
    if (m != *s.expected) {
      r.passed = false;
      r.summary += ", expected " + s.expected->get_str();
    }
  }
  if (sgn(m) == 0) r.summary += " (not positive)";
  return r;
}

StepResult check_chain_generation(const CharacterTable& t, const ChainGeneration& s,
                                  const MaximalSubgroupData* m) {
  if (!m) throw ClaimError("chain_generation: max data '" + s.max_data + "' is not loaded");
  if (m->group_name != t.group_name())
    throw ClaimError("chain_generation: max data is for " + m->group_name + ", not " +
                     t.group_name());
  if (s.intermediate_classes.empty())
    throw ClaimError("chain_generation: no intermediate classes");
  for (unsigned p : s.required_prime_divisors)
    if (!is_prime(p)) throw ClaimError("chain_generation: " + std::to_string(p) + " is not prime");

  StepResult r;
  r.kind = "chain_generation";
  const ClassIndex x = t.class_index(s.seed_class);
  std::vector<ClassIndex> chain;
  for (const auto& n : s.intermediate_classes) chain.push_back(t.class_index(n));
  const auto fail = [&](std::string why) {
    r.passed = false;
    r.summary = std::move(why);
    return r;
  };

  if (t.is_inner(x)) return fail("seed class " + t.class_name(x) + " lies in the socle");

  ClassIndex prev = x;
  for (ClassIndex c : chain) {
    const mpz_class v = struct_const(t, x, prev, c);
    const std::string name = mname(t, x, prev, c);
    r.values.emplace_back(name, v.get_str());
    if (sgn(v) == 0) return fail(name + " = 0");
    prev = c;
  }

  // which chain class witnesses each requirement
  for (unsigned p : s.required_prime_divisors) {
    auto it = std::find_if(chain.begin(), chain.end(),
                           [&](ClassIndex c) { return t.class_info(c).element_order % p == 0; });
    if (it == chain.end())
      return fail("prime " + std::to_string(p) + " divides no chain class element order");
    r.values.emplace_back("prime " + std::to_string(p), t.class_name(*it));
  }
  for (unsigned long o : s.required_element_orders) {
    auto it = std::find_if(chain.begin(), chain.end(),
                           [&](ClassIndex c) { return t.class_info(c).element_order % o == 0; });
    if (it == chain.end())
      return fail("element order " + std::to_string(o) + " divides no chain class element order");
    r.values.emplace_back("order " + std::to_string(o), t.class_name(*it));
  }

  if (!m->complete) {
    require_citation(m->citation, "partial max data");
    for (unsigned p : m->covers_prime_divisors)
      if (std::find(s.required_prime_divisors.begin(), s.required_prime_divisors.end(), p) ==
          s.required_prime_divisors.end())
        return fail("partial max data covers subgroups of order divisible by " +
                    std::to_string(p) + ", which the chain does not require");
    r.axioms.push_back(m->citation);
  }

  for (const auto& e : m->entries) {
    if (e.inside_socle) continue;
    std::string reason;
    for (unsigned p : s.required_prime_divisors)
      if (!mpz_divisible_ui_p(e.order.get_mpz_t(), p)) {
        reason = "order not divisible by " + std::to_string(p);
        break;
      }
    if (reason.empty())
      for (unsigned long o : s.required_element_orders)
        if (std::find(e.excluded_element_orders.begin(), e.excluded_element_orders.end(), o) !=
            e.excluded_element_orders.end()) {
          reason = "no element of order " + std::to_string(o);
          break;
        }
    if (reason.empty())
      return fail("maximal subgroup " + e.description + " (order " + e.order.get_str() +
                  ") meets every requirement");
    r.values.emplace_back("excluded " + e.description, reason);
  }

  const unsigned k = static_cast<unsigned>(chain.size()) + 1;
  r.passed = true;
  r.upper = k;
  std::vector<std::string> names;
  for (ClassIndex c : chain) names.push_back(t.class_name(c));
  r.summary = std::to_string(k) + " elements of " + t.class_name(x) + " reach " + join(names, ", ") +
              "; no maximal subgroup outside the socle survives";
  return r;
}

StepResult check_brauer(const CharacterTable& t, const CharacterSelector& sel, const FusionMap& a,
                        const FusionMap& b, const FusionMap& ab) {
  const CharIndex chi = find_character(t, sel.degree, sel.constraints);
  const auto& row = t.character(chi);
  if (std::all_of(row.begin(), row.end(), [](const CycloValue& v) { return v == CycloValue(1); }))
    throw ClaimError("brauer: the principal character was selected");
  const mpz_class ra = restriction_inner_product(t, chi, a);
  const mpz_class rb = restriction_inner_product(t, chi, b);
  const mpz_class rab = restriction_inner_product(t, chi, ab);
  StepResult r;
  r.kind = "brauer_proper";
  r.values.emplace_back("chi", std::to_string(chi));
  r.values.emplace_back("(chi_A,1_A) " + a.name, ra.get_str());
  r.values.emplace_back("(chi_B,1_B) " + b.name, rb.get_str());
  r.values.emplace_back("(chi_AB,1_AB) " + ab.name, rab.get_str());
  r.passed = ra + rb > rab;
  r.summary = ra.get_str() + " + " + rb.get_str() + (r.passed ? " > " : " <= ") + rab.get_str();
  return r;
}

std::optional<FusionMap> lookup_fusion(const CharacterTable& t, const FusionLibrary& fusions,
                                       const std::string& name) {
  if (name == "trivial") return FusionMap::trivial(t);
  if (name == "identity") return FusionMap::identity(t);
  auto it = fusions.find(name);
  if (it == fusions.end()) return std::nullopt;
  if (it->second.ambient != t.group_name())
    throw ClaimError("fusion '" + name + "' targets " + it->second.ambient + ", not " +
                     t.group_name());
  return it->second;
}

namespace {

FusionMap need_fusion(const CharacterTable& t, const FusionLibrary& fusions,
                      const std::string& name) {
  auto f = lookup_fusion(t, fusions, name);
  if (!f) throw ClaimError("fusion '" + name + "' is not loaded");
  return *f;
}

}  // namespace

StepResult check_brauer_case_analysis(const CharacterTable& t, const std::string& socle_class,
                                      const BrauerCaseAnalysis& s, const FusionLibrary& fusions) {
  const ClassIndex x = t.class_index(socle_class);
  const FusionMap b = need_fusion(t, fusions, s.fusion_b);
  const FusionMap ab = need_fusion(t, fusions, s.fusion_ab);
  StepResult r;
  r.kind = "brauer_case_analysis";

  std::set<ClassIndex> products;
  for (const auto& pt : product_classes(t, x, x))
    if (pt.cls != t.identity_class()) products.insert(pt.cls);
  std::set<ClassIndex> covered;
  for (const auto& c : s.cases) covered.insert(t.class_index(c.product_class));
  std::vector<std::string> gaps, extra;
  for (ClassIndex c : products)
    if (!covered.count(c)) gaps.push_back(t.class_name(c));
  for (ClassIndex c : covered)
    if (!products.count(c)) extra.push_back(t.class_name(c));
  std::vector<std::string> pnames;
  for (ClassIndex c : products) pnames.push_back(t.class_name(c));
  r.values.emplace_back("product classes", join(pnames));
  if (!gaps.empty()) {
    r.summary = "coverage gap: " + join(gaps, ", ");
    return r;
  }
  if (!extra.empty()) {
    r.summary = "cases for classes outside the product set: " + join(extra, ", ");
    return r;
  }
  if (!contains_class(t, b, x)) {
    r.summary = "B fusion " + b.name + " does not contain " + t.class_name(x);
    return r;
  }

  bool all = true;
  for (const auto& c : s.cases) {
    const ClassIndex pc = t.class_index(c.product_class);
    const FusionMap a = need_fusion(t, fusions, c.fusion_a);
    if (!contains_class(t, a, x) || !contains_class(t, a, pc)) {
      r.values.emplace_back(t.class_name(pc), "fusion " + a.name + " misses " +
                                                  t.class_name(x) + " or " + t.class_name(pc));
      all = false;
      continue;
    }
    const StepResult br = check_brauer(t, s.character, a, b, ab);
    for (const auto& [k, v] : br.values) r.values.emplace_back(t.class_name(pc) + ": " + k, v);
    if (!br.passed) all = false;
  }
  r.passed = all;
  if (all) {
    r.lower = 4;
    r.summary = "every product class " + join(pnames, ", ") +
                " keeps three conjugates inside a proper subgroup";
  } else {
    r.summary = "some case fails the Brauer inequality";
  }
  return r;
}

StepResult check_transposition_bound(const CharacterTable& t, const std::string& cls,
                                     unsigned long k) {
  const ClassIndex x = t.class_index(cls);
  StepResult r;
  r.kind = "transposition_bound";
  std::vector<std::string> witnesses, offending;
  for (const auto& pt : product_classes(t, x, x)) {
    witnesses.push_back(t.class_name(pt.cls));
    if (t.class_info(pt.cls).element_order > k) offending.push_back(t.class_name(pt.cls));
  }
  r.values.emplace_back("witnesses", join(witnesses));
  r.passed = offending.empty();
  r.summary = r.passed ? "products of two " + t.class_name(x) + " elements have order <= " +
                             std::to_string(k) + ": " + join(witnesses, ", ")
                       : "products reach " + join(offending, ", ");
  return r;
}

StepResult check_spread_step(const CharacterTable& t, const std::string& socle_class,
                             const SpreadAxiom& s, const mpz_class& socle_order) {
  require_citation(s.citation, "spread_axiom");
  if (!is_prime(s.p)) throw ClaimError("spread_axiom: " + std::to_string(s.p) + " is not prime");
  const ClassIndex x = t.class_index(socle_class);
  StepResult r;
  r.kind = "spread_axiom";
  const std::string p = std::to_string(s.p);
  if (!mpz_divisible_ui_p(socle_order.get_mpz_t(), s.p)) {
    r.summary = p + " does not divide the socle order";
    return r;
  }
  if (mpz_divisible_ui_p(socle_order.get_mpz_t(), static_cast<unsigned long>(s.p) * s.p)) {
    r.summary = p + "^2 divides the socle order";
    return r;
  }
  std::vector<ClassIndex> pcls;
  for (ClassIndex c = 0; c < t.num_classes(); ++c)
    if (t.class_info(c).element_order == s.p) pcls.push_back(c);
  if (pcls.empty()) {
    r.summary = "no class of element order " + p;
    return r;
  }
  // classes of order p joined by shipped power maps
  std::vector<std::size_t> parent(pcls.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pcls.size(); ++i)
    for (const auto& [q, target] : t.class_info(pcls[i]).power_maps) {
      const auto tc = t.find_class(target);
      if (!tc) continue;
      auto it = std::find(pcls.begin(), pcls.end(), *tc);
      if (it != pcls.end()) parent[find(i)] = find(static_cast<std::size_t>(it - pcls.begin()));
    }
  bool connected = true;
  for (std::size_t i = 1; i < pcls.size(); ++i)
    if (find(i) != find(0)) connected = false;

  std::size_t positive = 0;
  for (ClassIndex c : pcls) {
    const mpz_class v = struct_const(t, x, x, c);
    r.values.emplace_back(mname(t, x, x, c), v.get_str());
    if (sgn(v) > 0) ++positive;
  }
  r.values.emplace_back("order-" + p + " classes joined by power maps", connected ? "yes" : "no");
  r.passed = connected ? positive > 0 : positive == pcls.size();
  if (!r.passed) {
    r.summary = connected ? "no order-" + p + " class is a product of two " + t.class_name(x)
                          : "some order-" + p + " class is not a product of two " +
                                t.class_name(x);
    return r;
  }
  r.upper = 3;
  r.axioms.push_back(s.citation);
  r.summary = "Sylow " + p + "-subgroup of the socle has order " + p + "; " + t.class_name(x) + "^2 meets order " + p;
  return r;
}

StepResult check_beamable(const CharacterTable& t, const std::string& socle_class,
                          const BeamableAxiom& s) {
  require_citation(s.citation, "beamable_axiom");
  const ClassIndex x = t.class_index(socle_class);
  const ClassIndex c = t.class_index(s.cls);
  StepResult r;
  r.kind = "beamable_axiom";
  if (t.is_inner(x)) {
    r.summary = t.class_name(x) + " lies in the socle";
    return r;
  }
  const mpz_class v = struct_const(t, x, x, c);
  r.values.emplace_back(mname(t, x, x, c), v.get_str());
  if (sgn(v) == 0) {
    r.summary = mname(t, x, x, c) + " = 0";
    return r;
  }
  r.passed = true;
  r.upper = 3;
  r.axioms.push_back(s.citation);
  r.summary = mname(t, x, x, c) + " = " + v.get_str() + "; some element of " + t.class_name(c) +
              " generates G with x";
  return r;
}

StepResult check_involution_lower_bound(const CharacterTable& t, const std::string& socle_class) {
  const ClassIndex x = t.class_index(socle_class);
  StepResult r;
  r.kind = "involution_lower_bound";
  r.passed = t.class_info(x).element_order == 2;
  if (r.passed) {
    r.lower = 3;
    r.summary = "two involutions generate a dihedral group";
  } else {
    r.summary = t.class_name(x) + " has element order " +
                std::to_string(t.class_info(x).element_order) + ", not 2";
  }
  return r;
}

namespace {

struct Bound {
  std::optional<unsigned> lower, upper;
};

Bound parse_conclusion(const std::string& text) {
  std::istringstream in(text);
  std::string word, op;
  long n = -1;
  in >> word >> op >> n;
  std::string rest;
  if (word != "alpha" || n < 0 || (in >> rest))
    throw ClaimError("classification_axiom: cannot read conclusion '" + text + "'");
  const auto u = static_cast<unsigned>(n);
  if (op == ">") return {u + 1, std::nullopt};
  if (op == ">=") return {u, std::nullopt};
  if (op == "<=") return {std::nullopt, u};
  if (op == "<") {
    if (u == 0) throw ClaimError("classification_axiom: empty conclusion '" + text + "'");
    return {std::nullopt, u - 1};
  }
  if (op == "=") return {u, u};
  throw ClaimError("classification_axiom: unknown relation '" + op + "'");
}

}  // namespace

Verdict verify_claim(const Claim& c, const CharacterTable* table, const FusionLibrary& fusions,
                     const MaxDataLibrary& max_data) {
  Verdict v;
  v.claim = c.name;
  v.group = c.group;
  v.socle_class = c.socle_class;
  v.asserted_lower = c.asserted_lower;
  v.asserted_upper = c.asserted_upper;
  if (c.asserted_upper && *c.asserted_upper < c.asserted_lower)
    throw ClaimError("claim " + c.name + ": asserted interval is empty");
  if (!table) {
    v.status = VerdictStatus::skipped;
    v.note = "data unavailable: table " + c.group + " is not loaded";
    return v;
  }
  const CharacterTable& t = *table;
  if (t.group_name() != c.group)
    throw ClaimError("claim " + c.name + " is about " + c.group + ", table is " + t.group_name());
  const mpz_class socle_order = t.group_order() / t.socle_index();

  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Step& step = c.steps[i];
    StepResult r;
    try {
      if (!t.find_class(c.socle_class)) throw UnknownClassError(c.socle_class, t.group_name());
      r = std::visit(
          overloaded{
              [&](const StructConstPositive& s) { return check_struct_positive(t, s); },
              [&](const ChainGeneration& s) {
                auto it = max_data.find(s.max_data);
                return check_chain_generation(t, s, it == max_data.end() ? nullptr : &it->second);
              },
              [&](const SpreadAxiom& s) {
                return check_spread_step(t, c.socle_class, s, socle_order);
              },
              [&](const BeamableAxiom& s) { return check_beamable(t, c.socle_class, s); },
              [&](const BrauerProper& s) {
                return check_brauer(t, s.character, need_fusion(t, fusions, s.fusion_a),
                                    need_fusion(t, fusions, s.fusion_b),
                                    need_fusion(t, fusions, s.fusion_ab));
              },
              [&](const BrauerCaseAnalysis& s) {
                return check_brauer_case_analysis(t, c.socle_class, s, fusions);
              },
              [&](const InvolutionLowerBound&) {
                return check_involution_lower_bound(t, c.socle_class);
              },
              [&](const TranspositionBound& s) {
                return check_transposition_bound(t, c.socle_class, s.k);
              },
              [&](const ClassificationAxiom& s) {
                require_citation(s.citation, "classification_axiom");
                const Bound b = parse_conclusion(s.conclusion);
                StepResult res;
                res.kind = "classification_axiom";
                res.passed = true;
                for (std::size_t p : s.premise_steps) {
                  if (p >= i)
                    throw ClaimError("classification_axiom premise " + std::to_string(p) +
                                     " is not an earlier step");
                  if (!v.steps[p].passed) res.passed = false;
                }
                res.summary = s.conclusion + " by " + s.citation;
                if (!res.passed) {
                  res.summary += " (premise failed)";
                  return res;
                }
                res.lower = b.lower;
                res.upper = b.upper;
                res.axioms.push_back(s.citation);
                return res;
              },
          },
          step);
    } catch (const ClaimError& e) {
      throw ClaimError("claim " + c.name + ", step " + std::to_string(i) + ": " + e.what());
    } catch (const UnknownClassError& e) {
      throw ClaimError("claim " + c.name + ", step " + std::to_string(i) + ": " + e.what());
    } catch (const CharacterSelectionError& e) {
      throw ClaimError("claim " + c.name + ", step " + std::to_string(i) + ": " + e.what());
    } catch (const TableError& e) {
      throw ClaimError("claim " + c.name + ", step " + std::to_string(i) + ": " + e.what());
    }
    v.steps.push_back(std::move(r));
  }

  bool failed = false;
  for (const auto& r : v.steps) {
    if (!r.passed) {
      failed = true;
      continue;
    }
    if (r.lower) v.alpha_lower = std::max(v.alpha_lower, *r.lower);
    if (r.upper) v.alpha_upper = v.alpha_upper ? std::min(*v.alpha_upper, *r.upper) : *r.upper;
    for (const auto& a : r.axioms)
      if (std::find(v.axioms_assumed.begin(), v.axioms_assumed.end(), a) == v.axioms_assumed.end())
        v.axioms_assumed.push_back(a);
  }

  const bool empty = v.alpha_upper && *v.alpha_upper < v.alpha_lower;
  const bool disjoint = (c.asserted_upper && *c.asserted_upper < v.alpha_lower) ||
                        (v.alpha_upper && c.asserted_lower > *v.alpha_upper);
  if (failed) {
    v.status = VerdictStatus::refuted;
    v.note = "a step failed";
  } else if (empty) {
    v.status = VerdictStatus::refuted;
    v.note = "step conclusions contradict each other";
  } else if (disjoint) {
    v.status = VerdictStatus::refuted;
    v.note = "the established interval excludes the asserted value";
  } else if (v.alpha_lower == c.asserted_lower && v.alpha_upper == c.asserted_upper) {
    v.status = VerdictStatus::verified;
  } else {
    v.status = VerdictStatus::incomplete;
    v.note = "the steps do not pin the asserted value";
  }
  return v;
}

namespace {

std::string interval(unsigned lo, const std::optional<unsigned>& hi) {
  if (hi && *hi == lo) return "alpha = " + std::to_string(lo);
  if (!hi) return "alpha >= " + std::to_string(lo);
  return "alpha in [" + std::to_string(lo) + ", " + std::to_string(*hi) + "]";
}

std::string asserted(const Verdict& v) {
  if (v.asserted_upper && *v.asserted_upper == v.asserted_lower) return std::to_string(v.asserted_lower);
  if (!v.asserted_upper) return ">= " + std::to_string(v.asserted_lower);
  return "[" + std::to_string(v.asserted_lower) + ", " + std::to_string(*v.asserted_upper) + "]";
}

}  // namespace

std::string format_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "claim " << v.claim << ": " << v.group << " class " << v.socle_class << "\n";
  for (std::size_t i = 0; i < v.steps.size(); ++i) {
    const auto& s = v.steps[i];
    out << "  [" << (s.passed ? "pass" : "FAIL") << "] " << i << " " << s.kind << ": " << s.summary
        << "\n";
  }
  if (v.status == VerdictStatus::skipped) {
    out << "skipped: " << v.note << "\n";
    return out.str();
  }
  out << interval(v.alpha_lower, v.alpha_upper) << " (asserted " << asserted(v) << "): "
      << to_string(v.status);
  if (!v.note.empty()) out << ", " << v.note;
  out << "\n";
  out << "axioms: " << (v.axioms_assumed.empty() ? "none" : join(v.axioms_assumed, "; ")) << "\n";
  return out.str();
}

}  // namespace conjgen
