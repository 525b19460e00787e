// Acceptance run: one PASS/FAIL/SKIP line per criterion.  Exit status is 1
// if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "conjgen/certify.hpp"
#include "conjgen/chartab.hpp"
#include "conjgen/cyclo.hpp"
#include "conjgen/dataio.hpp"
#include "conjgen/permgrp.hpp"

using namespace conjgen;

namespace {

struct Skip {
  std::string why;
};

// Collects mismatches; a criterion passes when none were recorded.
class Check {
 public:
  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      fail(s.str());
    }
  }
  void that(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (failures_.size() < 5) failures_.push_back(what);
    ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string report() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    if (count_ > failures_.size()) s += "; ... " + std::to_string(count_) + " failures";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

const DataBundle& bundle() {
  static const DataBundle b = load_bundle(CONJGEN_DATA_DIR);
  return b;
}

const CharacterTable& required(const char* name) {
  const CharacterTable* t = bundle().find_table(name);
  if (!t) throw std::runtime_error("table " + std::string(name) + " is not shipped");
  return *t;
}

const CharacterTable& optional_table(const char* name) {
  const CharacterTable* t = bundle().find_table(name);
  if (!t) throw Skip{std::string(name) + " table absent"};
  return *t;
}

mpz_class m(const CharacterTable& t, const char* a, const char* b, const char* c) {
  return struct_const(t, t.class_index(a), t.class_index(b), t.class_index(c));
}

int failures = 0;

void criterion(int n, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::string status, detail;
  try {
    body(c);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds)
      c.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    status = c.ok() ? "PASS" : "FAIL";
    detail = c.report();
  } catch (const Skip& s) {
    status = "SKIP";
    detail = s.why;
  } catch (const std::exception& e) {
    status = "FAIL";
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (status == "FAIL") ++failures;
  std::cout << "criterion " << std::setw(2) << n << ": " << status << "  " << title << " ["
            << std::fixed << std::setprecision(2) << secs << " s]";
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
}

std::vector<std::string> names(const CharacterTable& t, const std::vector<ClassIndex>& cls) {
  std::vector<std::string> v;
  for (ClassIndex c : cls) v.push_back(t.class_name(c));
  return v;
}

std::ostream& operator<<(std::ostream& os, const std::vector<std::string>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os;
}

std::ostream& operator<<(std::ostream& os, const std::optional<unsigned>& v) {
  return v ? os << *v : os << "none";
}

}  // namespace

int main() {
  try {
    bundle();
  } catch (const std::exception& e) {
    std::cout << "data bundle failed to load: " << e.what() << std::endl;
    return 1;
  }

  criterion(1, "McL.2 structure constants", 5, [](Check& c) {
    const auto& t = required("McL.2");
    c.eq(m(t, "2B", "2B", "14A"), 14, "m(2B,2B,14A)");
    c.eq(m(t, "2B", "14A", "22A"), 16236, "m(2B,14A,22A)");
  });

  criterion(2, "Suz.2 structure constants", 5, [](Check& c) {
    const auto& t = required("Suz.2");
    c.eq(m(t, "2C", "2C", "7A"), 7, "m(2C,2C,7A)");
    c.eq(m(t, "2C", "7A", "22A"), 3630, "m(2C,7A,22A)");
    c.eq(m(t, "2D", "2D", "14A"), 14, "m(2D,2D,14A)");
  });

  criterion(3, "He.2 structure constant through the 14CD/14B alias", 5, [](Check& c) {
    const auto& t = required("He.2");
    c.eq(t.class_index("14B"), t.class_index("14CD"), "alias 14B");
    c.eq(m(t, "2C", "2C", "14CD"), 14, "m(2C,2C,14CD)");
    c.eq(m(t, "2C", "2C", "14B"), 14, "m(2C,2C,14B)");
  });

  criterion(4, "Fi22.2 structure constants", 5, [](Check& c) {
    const auto& t = optional_table("Fi22.2");
    c.eq(m(t, "2E", "2E", "16AB"), 16, "m(2E,2E,16AB)");
    c.eq(m(t, "2F", "2F", "11A"), 11, "m(2F,2F,11A)");
    c.eq(m(t, "2F", "11A", "42A"), 1867488, "m(2F,11A,42A)");
  });

  criterion(5, "Fi24 structure constants", 5, [](Check& c) {
    const auto& t = optional_table("Fi24");
    c.eq(m(t, "2D", "2D", "33A"), 33, "m(2D,2D,33A)");
    c.eq(m(t, "2D", "33A", "46A"), mpz_class("172322171820"), "m(2D,33A,46A)");
  });

  criterion(6, "HS.2 Brauer pipeline", 0, [](Check& c) {
    const auto& t = required("HS.2");
    const CharacterSelector sel{22, {{"2C", CharacterConstraint::Kind::positive, {}}}};
    const CharIndex chi = find_character(t, sel.degree, sel.constraints);
    std::vector<CycloValue> row;
    for (const char* n : {"1A", "2A", "2B", "3A", "4B", "2C"}) row.push_back(t.value(chi, t.class_index(n)));
    c.that(row == std::vector<CycloValue>{22, 6, -2, 4, 2, 8}, "character row on 1A,2A,2B,3A,4B,2C");
    const auto& f = bundle().fusions;
    const std::vector<std::pair<const char*, long>> expected = {
        {"hs_2_z2_2c", 15}, {"hs_2_z2xz2_2a", 11}, {"hs_2_z2xz2_2b", 9}, {"hs_2_s3", 9}, {"hs_2_d8", 8}};
    for (const auto& [name, v] : expected) c.eq(restriction_inner_product(t, chi, f.at(name)), v, name);
    const ClassIndex x = t.class_index("2C");
    std::vector<ClassIndex> products;
    for (const auto& p : product_classes(t, x, x))
      if (p.cls != t.identity_class()) products.push_back(p.cls);
    c.eq(names(t, products), std::vector<std::string>{"2A", "2B", "3A", "4B"}, "product_classes(2C,2C) minus 1A");
    const BrauerCaseAnalysis cases{sel,
                                   "hs_2_z2_2c",
                                   "trivial",
                                   {{"2A", "hs_2_z2xz2_2a"}, {"2B", "hs_2_z2xz2_2b"}, {"3A", "hs_2_s3"}, {"4B", "hs_2_d8"}}};
    for (const auto& k : cases.cases) {
      const StepResult r = check_brauer(t, sel, f.at(k.fusion_a), f.at("hs_2_z2_2c"), FusionMap::trivial(t));
      c.that(r.passed, "case " + k.product_class + ": " + r.summary);
    }
    const StepResult all = check_brauer_case_analysis(t, "2C", cases, f);
    c.that(all.passed && all.lower == 4u, "case analysis: " + all.summary);
  });

  criterion(7, "transposition bounds", 0, [](Check& c) {
    const auto& hs = required("HS.2");
    c.that(check_transposition_bound(hs, "2C", 4).passed, "(HS.2, 2C, 4) passes");
    c.that(!check_transposition_bound(hs, "2D", 4).passed, "(HS.2, 2D, 4) fails");
    c.that(check_transposition_bound(required("M22.2"), "2B", 4).passed, "(M22.2, 2B, 4) passes");
    if (const CharacterTable* fi = bundle().find_table("Fi22.2"))
      c.that(check_transposition_bound(*fi, "2D", 4).passed, "(Fi22.2, 2D, 4) passes");
  });

  criterion(8, "claim suite: fourteen pairs with alpha 3, three with alpha 4", 60, [](Check& c) {
    const std::set<std::string> whitelist = {"[GK] Prop 6.2", "[BGK] Table 9", "[HS]",         "[KMS]/[K]",
                                             "[S]",           "[RZ2] Thm 2",   "[LW] Thm 1.1"};
    const std::map<std::string, unsigned> expected = {
        {"M12.2/2C", 3}, {"M22.2/2C", 3}, {"J2.2/2C", 3},   {"J3.2/2B", 3},   {"McL.2/2B", 3},
        {"ON.2/2B", 3},  {"HS.2/2D", 3},  {"He.2/2C", 3},   {"Suz.2/2C", 3},  {"Suz.2/2D", 3},
        {"HN.2/2C", 3},  {"Fi22.2/2E", 3}, {"Fi22.2/2F", 3}, {"Fi24/2D", 3},  {"M22.2/2B", 4},
        {"HS.2/2C", 4},  {"Fi22.2/2D", 4}};
    std::set<std::string> seen;
    for (const auto& [path, claim] : bundle().claims) {
      const std::string key = claim.group + "/" + claim.socle_class;
      auto it = expected.find(key);
      if (it == expected.end()) {
        c.fail("unexpected claim " + key);
        continue;
      }
      seen.insert(key);
      const Verdict v = verify_in_bundle(claim, bundle());
      if (v.status == VerdictStatus::skipped && claim.data_optional) continue;
      c.that(v.status == VerdictStatus::verified, key + " " + to_string(v.status) + " " + v.note);
      c.eq(v.alpha_lower, it->second, key + " lower bound");
      c.eq(v.alpha_upper, std::optional<unsigned>(it->second), key + " upper bound");
      c.that(claim.asserted_lower == it->second && claim.asserted_upper == it->second,
             key + " asserted value");
      for (const auto& a : v.axioms_assumed) c.that(whitelist.count(a) > 0, key + " axiom " + a);
    }
    for (const auto& [k, v] : expected) c.that(seen.count(k) > 0, "no claim for " + k);
  });

  criterion(9, "validation on shipped tables and 100 random perturbations", 0, [](Check& c) {
    for (const auto& [name, t] : bundle().tables) c.that(validate(t).ok(), name + " validates");
    std::mt19937_64 rng(99);
    const std::vector<const char*> pool = {"S3", "D8", "A4", "A5", "S5", "M11", "M22.2", "J2.2", "HS.2", "M12.2"};
    int detected = 0;
    for (int i = 0; i < 100; ++i) {
      const CharacterTable& t = required(pool[static_cast<std::size_t>(i) % pool.size()]);
      const CharIndex chi = std::uniform_int_distribution<CharIndex>(0, t.num_characters() - 1)(rng);
      const ClassIndex cls = std::uniform_int_distribution<ClassIndex>(0, t.num_classes() - 1)(rng);
      const long d = std::uniform_int_distribution<long>(1, 3)(rng) * (i % 2 ? 1 : -1);
      const CycloValue delta = i % 5 == 4 ? root_of_unity(5, d) : CycloValue(d);
      if (!validate(t.with_value(chi, cls, t.value(chi, cls) + delta)).ok()) ++detected;
    }
    c.eq(detected, 100, "perturbations detected");
  });

  criterion(10, "character-table and brute-force structure constants agree", 60, [](Check& c) {
    for (const auto& [stem, table_name] : std::vector<std::pair<std::string, std::string>>{
             {"s3", "S3"}, {"d8", "D8"}, {"a4", "A4"}, {"a5", "A5"}, {"s5", "S5"}, {"m11", "M11"}}) {
      const CharacterTable& t = required(table_name.c_str());
      const GroupData& gd = bundle().groups.at(stem);
      const PermGroup g = gd.group();
      c.eq(g.order(), t.group_order(), stem + " order");
      std::vector<ConjClass> cls;
      std::size_t covered = 0;
      for (ClassIndex k = 0; k < t.num_classes(); ++k) {
        const auto rep = gd.class_rep(t.class_name(k));
        if (!rep) throw std::runtime_error(stem + " lacks a representative for " + t.class_name(k));
        cls.push_back(conjugacy_class(g, *rep));
        c.eq(mpz_class(static_cast<unsigned long>(cls.back().size())), class_size(t, k), stem + " |" + t.class_name(k) + "|");
        c.eq(rep->order(), static_cast<std::uint64_t>(t.class_info(k).element_order), stem + " order of " + t.class_name(k));
        covered += cls.back().size();
      }
      c.eq(mpz_class(static_cast<unsigned long>(covered)), g.order(), stem + " classes cover the group");
      for (ClassIndex a = 0; a < t.num_classes(); ++a)
        for (ClassIndex b = 0; b < t.num_classes(); ++b) {
          const auto row = struct_const_row(t, a, b);
          for (ClassIndex k = 0; k < t.num_classes(); ++k)
            c.eq(brute_struct_const(g, cls[a], cls[b], cls[k].representative), row[k],
                 stem + " m(" + t.class_name(a) + "," + t.class_name(b) + "," + t.class_name(k) + ")");
        }
    }
  });

  criterion(11, "row sums of structure constants equal class sizes", 0, [](Check& c) {
    for (const auto& [name, t] : bundle().tables) {
      const std::size_t n = t.num_classes();
      for (ClassIndex a = 0; a < n; ++a) {
        std::vector<mpz_class> sum(n);
        for (ClassIndex b = 0; b < n; ++b) {
          const auto row = struct_const_row(t, a, b);
          for (ClassIndex k = 0; k < n; ++k) sum[k] += row[k];
        }
        const mpz_class size = class_size(t, a);
        for (ClassIndex k = 0; k < n; ++k)
          if (sum[k] != size) c.fail(name + " row sum (" + t.class_name(a) + "," + t.class_name(k) + ")");
      }
    }
  });

  criterion(12, "exhaustive alpha for A5 and S5", 60, [](Check& c) {
    const auto p = [](const char* s) { return Permutation::from_cycles(s, 5); };
    const PermGroup a5({p("(1,2,3)"), p("(3,4,5)")});
    const PermGroup s5({p("(1,2)"), p("(1,2,3,4,5)")});
    c.eq(brute_alpha(a5, a5, p("(1,2)(3,4)"), 6), std::optional<unsigned>(3), "A5 involution");
    c.eq(brute_alpha(a5, a5, p("(1,2,3,4,5)"), 6), std::optional<unsigned>(2), "A5 5-cycle");
    c.eq(brute_alpha(s5, a5, p("(1,2)"), 6), std::optional<unsigned>(4), "S5 transposition");
  });

  criterion(13, "pair orbits and two-generated subgroup labels", 0, [](Check& c) {
    const GroupData& a5d = bundle().groups.at("a5");
    const PermGroup a5 = a5d.group();
    const Permutation t = Permutation::from_cycles("(1,2,3)", 5);
    const ConjClass cls = conjugacy_class(a5, t);
    c.eq(pair_orbit_count(a5, cls, t), std::size_t{8}, "pair_orbit_count(A5, 3A)");
    for (const auto& l : classify_two_generated(a5, cls))
      c.that(l.label == "Z3" || l.label == "A4" || l.label == "A5", "A5 label " + l.label);
    const GroupData& zd = bundle().groups.at("z3xz3");
    const PermGroup z = zd.group();
    std::vector<Permutation> set{zd.element("a")};
    for (const auto& e : z.elements())
      if (e.order() == 3 && !(e == set[0])) set.push_back(e);
    std::set<std::string> labels;
    for (const auto& l : classify_two_generated(z, set)) labels.insert(l.label);
    c.that(labels == std::set<std::string>{"Z3", "Z3xZ3"}, "Z3xZ3 labels");
  });

  criterion(14, "cyclotomic field axioms and value round trips", 0, [](Check& c) {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<unsigned> cond(1, 60);
    std::uniform_int_distribution<int> coef(-7, 7), den(1, 4), terms(0, 3);
    const auto random_value = [&](unsigned n) {
      CycloValue v;
      for (int k = terms(rng); k > 0; --k)
        v += CycloValue(mpq_class(coef(rng), den(rng))) *
             root_of_unity(n, std::uniform_int_distribution<long>(0, n - 1)(rng));
      return v;
    };
    for (int i = 0; i < 10000; ++i) {
      const unsigned n = cond(rng);
      const CycloValue a = random_value(n), b = random_value(n), d = random_value(n);
      c.that(a + b == b + a && a * b == b * a, "commutativity");
      c.that((a + b) + d == a + (b + d) && (a * b) * d == a * (b * d), "associativity");
      c.that(a * (b + d) == a * b + a * d, "distributivity");
      c.that(a + CycloValue(0) == a && a * CycloValue(1) == a && (a - a).is_zero(), "identities");
      if (!a.is_zero()) c.that(a * inverse(a) == CycloValue(1), "inverse");
    }
    std::size_t values = 0;
    for (const auto& [name, t] : bundle().tables)
      for (CharIndex i = 0; i < t.num_characters(); ++i)
        for (const auto& v : t.character(i)) {
          if (!(parse_value(to_string(v)) == v)) c.fail(name + " value " + to_string(v));
          ++values;
        }
    c.that(values > 0, "no table values");
  });

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria met")
            << std::endl;
  return failures ? 1 : 0;
}
