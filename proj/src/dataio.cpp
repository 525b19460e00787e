#include "conjgen/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace conjgen {

using Json = nlohmann::ordered_json;

namespace fs = std::filesystem;

std::string LocatedError::to_string() const {
  std::string s = file;
  if (!pointer.empty()) s += " " + pointer;
  return s + ": " + message;
}

namespace {

std::string join_errors(const std::vector<LocatedError>& errors) {
  std::string s;
  for (const auto& e : errors) s += (s.empty() ? "" : "\n") + e.to_string();
  return s;
}

// Thrown inside one file's parser, located afterwards.
struct Bad {
  std::string pointer;
  std::string message;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError({{path.string(), "", "cannot open file"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text, const std::string& file) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DataError({{file, "byte " + std::to_string(e.byte), std::string("JSON parse error: ") + e.what()}});
  }
}

std::string key_ptr(const std::string& ptr, std::string_view key) {
  std::string k(key);
  std::string esc;
  for (char c : k) {
    if (c == '~')
      esc += "~0";
    else if (c == '/')
      esc += "~1";
    else
      esc += c;
  }
  return ptr + "/" + esc;
}

std::string idx_ptr(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const Json& field(const Json& o, const std::string& ptr, std::string_view key) {
  if (!o.is_object()) throw Bad{ptr, "expected an object"};
  auto it = o.find(key);
  if (it == o.end()) throw Bad{ptr, "missing field '" + std::string(key) + "'"};
  return *it;
}

const Json* opt_field(const Json& o, std::string_view key) {
  auto it = o.find(key);
  return it == o.end() ? nullptr : &*it;
}

std::string as_string(const Json& j, const std::string& ptr) {
  if (!j.is_string()) throw Bad{ptr, "expected a string"};
  return j.get<std::string>();
}

long long as_int(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw Bad{ptr, "expected an integer"};
  return j.get<long long>();
}

unsigned long as_unsigned(const Json& j, const std::string& ptr) {
  const long long v = as_int(j, ptr);
  if (v < 0) throw Bad{ptr, "expected a nonnegative integer"};
  return static_cast<unsigned long>(v);
}

bool as_bool(const Json& j, const std::string& ptr) {
  if (!j.is_boolean()) throw Bad{ptr, "expected true or false"};
  return j.get<bool>();
}

mpz_class as_bigint(const Json& j, const std::string& ptr) {
  if (!j.is_string()) throw Bad{ptr, "expected a decimal string"};
  const auto s = j.get<std::string>();
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
    throw Bad{ptr, "'" + s + "' is not a decimal integer"};
  return mpz_class(s);
}

const Json& as_array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw Bad{ptr, "expected an array"};
  return j;
}

void check_schema(const Json& root) {
  const Json& s = field(root, "", "schema");
  if (as_int(s, "/schema") != 1) throw Bad{"/schema", "unsupported schema version"};
}

bool data_optional(const Json& root) {
  const Json* d = opt_field(root, "data_optional");
  return d && as_bool(*d, "/data_optional");
}

template <class F>
auto located(const std::string& file, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Bad& b) {
    throw DataError({{file, b.pointer, b.message}});
  }
}

// ---------------------------------------------------------------------------
// tables

CharacterTable table_from(const Json& root) {
  check_schema(root);
  const std::string name = as_string(field(root, "", "group_name"), "/group_name");
  const mpz_class order = as_bigint(field(root, "", "group_order"), "/group_order");
  const unsigned long socle = as_unsigned(field(root, "", "socle_index"), "/socle_index");
  std::vector<ClassInfo> classes;
  const Json& cls = as_array(field(root, "", "classes"), "/classes");
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const std::string p = idx_ptr("/classes", i);
    ClassInfo ci;
    ci.name = as_string(field(cls[i], p, "name"), p + "/name");
    if (const Json* a = opt_field(cls[i], "aliases")) {
      as_array(*a, p + "/aliases");
      for (std::size_t k = 0; k < a->size(); ++k)
        ci.aliases.push_back(as_string((*a)[k], idx_ptr(p + "/aliases", k)));
    }
    ci.element_order =
        static_cast<unsigned>(as_unsigned(field(cls[i], p, "element_order"), p + "/element_order"));
    ci.centralizer_order =
        as_bigint(field(cls[i], p, "centralizer_order"), p + "/centralizer_order");
    if (const Json* pm = opt_field(cls[i], "power_maps")) {
      if (!pm->is_object()) throw Bad{p + "/power_maps", "expected an object"};
      for (const auto& [k, v] : pm->items()) {
        const std::string kp = key_ptr(p + "/power_maps", k);
        unsigned long prime = 0;
        try {
          std::size_t used = 0;
          prime = std::stoul(k, &used);
          if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
          throw Bad{kp, "power map key is not an integer"};
        }
        ci.power_maps[static_cast<unsigned>(prime)] = as_string(v, kp);
      }
    }
    classes.push_back(std::move(ci));
  }
  std::vector<std::vector<CycloValue>> chars;
  const Json& rows = as_array(field(root, "", "characters"), "/characters");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = idx_ptr("/characters", i);
    const Json& row = as_array(rows[i], p);
    std::vector<CycloValue> r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string vp = idx_ptr(p, k);
      const std::string text = as_string(row[k], vp);
      try {
        r.push_back(parse_value(text));
      } catch (const std::exception& e) {
        throw Bad{vp, std::string("bad value '") + text + "': " + e.what()};
      }
    }
    chars.push_back(std::move(r));
  }
  try {
    return CharacterTable(name, order, static_cast<unsigned>(socle), std::move(classes),
                          std::move(chars));
  } catch (const TableError& e) {
    throw Bad{"", e.what()};
  }
}

std::string issue_pointer(const ValidationIssue& i) {
  static const std::set<std::string> class_kinds = {"element_order", "centralizer_order",
                                                    "identity_class", "power_map",
                                                    "missing_power_map"};
  static const std::set<std::string> char_kinds = {"principal_character", "degree",
                                                   "row_orthogonality"};
  if (!i.indices.empty() && class_kinds.count(i.kind)) return idx_ptr("/classes", i.indices[0]);
  if (!i.indices.empty() && char_kinds.count(i.kind)) return idx_ptr("/characters", i.indices[0]);
  if (i.kind == "class_sizes") return "/classes";
  return "/characters";
}

// ---------------------------------------------------------------------------
// fusions, max data

FusionMap fusion_from(const Json& root, const std::string& name) {
  check_schema(root);
  FusionMap f;
  f.name = name;
  f.ambient = as_string(field(root, "", "ambient"), "/ambient");
  f.subgroup_name = as_string(field(root, "", "subgroup"), "/subgroup");
  f.subgroup_order = as_bigint(field(root, "", "subgroup_order"), "/subgroup_order");
  const Json& cls = as_array(field(root, "", "classes"), "/classes");
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const std::string p = idx_ptr("/classes", i);
    SubgroupClass c;
    c.name = as_string(field(cls[i], p, "name"), p + "/name");
    c.size = as_bigint(field(cls[i], p, "size"), p + "/size");
    c.element_order =
        static_cast<unsigned>(as_unsigned(field(cls[i], p, "element_order"), p + "/element_order"));
    if (std::any_of(f.classes.begin(), f.classes.end(),
                    [&](const SubgroupClass& o) { return o.name == c.name; }))
      throw Bad{p + "/name", "duplicate subgroup class " + c.name};
    f.classes.push_back(std::move(c));
  }
  const Json& asg = field(root, "", "assignment");
  if (!asg.is_object()) throw Bad{"/assignment", "expected an object"};
  for (const auto& c : f.classes) {
    auto it = asg.find(c.name);
    if (it == asg.end()) throw Bad{"/assignment", "no image for subgroup class " + c.name};
    f.assignment.push_back(as_string(*it, key_ptr("/assignment", c.name)));
  }
  for (const auto& [k, v] : asg.items())
    if (std::none_of(f.classes.begin(), f.classes.end(),
                     [&](const SubgroupClass& c) { return c.name == k; }))
      throw Bad{key_ptr("/assignment", k), "unknown subgroup class " + k};
  return f;
}

MaximalSubgroupData max_from(const Json& root) {
  check_schema(root);
  MaximalSubgroupData m;
  m.group_name = as_string(field(root, "", "group_name"), "/group_name");
  if (const Json* c = opt_field(root, "complete")) m.complete = as_bool(*c, "/complete");
  if (const Json* c = opt_field(root, "citation")) m.citation = as_string(*c, "/citation");
  if (const Json* c = opt_field(root, "covers_prime_divisors")) {
    as_array(*c, "/covers_prime_divisors");
    for (std::size_t i = 0; i < c->size(); ++i)
      m.covers_prime_divisors.push_back(static_cast<unsigned>(
          as_unsigned((*c)[i], idx_ptr("/covers_prime_divisors", i))));
  }
  if (!m.complete && m.citation.empty())
    throw Bad{"/citation", "a partial list needs a citation"};
  if (!m.complete && m.covers_prime_divisors.empty())
    throw Bad{"/covers_prime_divisors", "a partial list must state what it covers"};
  const Json& es = as_array(field(root, "", "entries"), "/entries");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = idx_ptr("/entries", i);
    MaxSubgroupEntry e;
    e.description = as_string(field(es[i], p, "description"), p + "/description");
    e.order = as_bigint(field(es[i], p, "order"), p + "/order");
    if (const Json* s = opt_field(es[i], "inside_socle")) e.inside_socle = as_bool(*s, p + "/inside_socle");
    if (const Json* x = opt_field(es[i], "excluded_element_orders")) {
      as_array(*x, p + "/excluded_element_orders");
      for (std::size_t k = 0; k < x->size(); ++k)
        e.excluded_element_orders.push_back(
            as_unsigned((*x)[k], idx_ptr(p + "/excluded_element_orders", k)));
    }
    if (sgn(e.order) <= 0) throw Bad{p + "/order", "order must be positive"};
    m.entries.push_back(std::move(e));
  }
  return m;
}

// ---------------------------------------------------------------------------
// claims

std::vector<std::string> string_list(const Json& j, const std::string& ptr) {
  as_array(j, ptr);
  std::vector<std::string> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_string(j[i], idx_ptr(ptr, i)));
  return v;
}

template <class T>
std::vector<T> unsigned_list(const Json& j, const std::string& ptr) {
  as_array(j, ptr);
  std::vector<T> v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(static_cast<T>(as_unsigned(j[i], idx_ptr(ptr, i))));
  return v;
}

CharacterSelector selector_from(const Json& j, const std::string& ptr) {
  CharacterSelector s;
  s.degree = static_cast<long>(as_int(field(j, ptr, "degree"), ptr + "/degree"));
  if (const Json* cs = opt_field(j, "constraints")) {
    const std::string cp = ptr + "/constraints";
    as_array(*cs, cp);
    for (std::size_t i = 0; i < cs->size(); ++i) {
      const std::string p = idx_ptr(cp, i);
      CharacterConstraint c;
      c.cls = as_string(field((*cs)[i], p, "class"), p + "/class");
      const std::string kind = as_string(field((*cs)[i], p, "kind"), p + "/kind");
      if (kind == "positive") {
        c.kind = CharacterConstraint::Kind::positive;
      } else if (kind == "negative") {
        c.kind = CharacterConstraint::Kind::negative;
      } else if (kind == "equals") {
        c.kind = CharacterConstraint::Kind::equals;
        const std::string v = as_string(field((*cs)[i], p, "value"), p + "/value");
        try {
          c.value = parse_value(v);
        } catch (const std::exception& e) {
          throw Bad{p + "/value", e.what()};
        }
      } else {
        throw Bad{p + "/kind", "unknown constraint kind '" + kind + "'"};
      }
      s.constraints.push_back(std::move(c));
    }
  }
  return s;
}

Step step_from(const Json& j, const std::string& p) {
  const std::string kind = as_string(field(j, p, "kind"), p + "/kind");
  const auto str = [&](std::string_view k) {
    return as_string(field(j, p, k), key_ptr(p, k));
  };
  if (kind == "struct_const_positive") {
    const auto cls = string_list(field(j, p, "classes"), p + "/classes");
    if (cls.size() != 3) throw Bad{p + "/classes", "expected three class names"};
    StructConstPositive s{cls[0], cls[1], cls[2], std::nullopt};
    if (const Json* e = opt_field(j, "expected")) s.expected = as_bigint(*e, p + "/expected");
    return s;
  }
  if (kind == "chain_generation") {
    ChainGeneration s;
    s.seed_class = str("seed_class");
    s.intermediate_classes = string_list(field(j, p, "intermediate_classes"),
                                         p + "/intermediate_classes");
    if (const Json* x = opt_field(j, "required_prime_divisors"))
      s.required_prime_divisors = unsigned_list<unsigned>(*x, p + "/required_prime_divisors");
    if (const Json* x = opt_field(j, "required_element_orders"))
      s.required_element_orders = unsigned_list<unsigned long>(*x, p + "/required_element_orders");
    s.max_data = str("max_data");
    return s;
  }
  if (kind == "spread_axiom")
    return SpreadAxiom{static_cast<unsigned>(as_unsigned(field(j, p, "p"), p + "/p")),
                       str("citation")};
  if (kind == "beamable_axiom") return BeamableAxiom{str("class"), str("citation")};
  if (kind == "brauer_proper")
    return BrauerProper{selector_from(field(j, p, "character"), p + "/character"), str("fusion_a"),
                        str("fusion_b"), str("fusion_ab")};
  if (kind == "brauer_case_analysis") {
    BrauerCaseAnalysis s;
    s.character = selector_from(field(j, p, "character"), p + "/character");
    s.fusion_b = str("fusion_b");
    s.fusion_ab = str("fusion_ab");
    const Json& cs = as_array(field(j, p, "cases"), p + "/cases");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string cp = idx_ptr(p + "/cases", i);
      s.cases.push_back({as_string(field(cs[i], cp, "product_class"), cp + "/product_class"),
                         as_string(field(cs[i], cp, "fusion_a"), cp + "/fusion_a")});
    }
    return s;
  }
  if (kind == "involution_lower_bound") return InvolutionLowerBound{};
  if (kind == "transposition_bound")
    return TranspositionBound{as_unsigned(field(j, p, "k"), p + "/k")};
  if (kind == "classification_axiom") {
    ClassificationAxiom s;
    s.citation = str("citation");
    s.conclusion = str("conclusion");
    if (const Json* x = opt_field(j, "premise_steps"))
      s.premise_steps = unsigned_list<std::size_t>(*x, p + "/premise_steps");
    return s;
  }
  throw Bad{p + "/kind", "unknown step kind '" + kind + "'"};
}

Claim claim_from(const Json& root, const std::string& name) {
  check_schema(root);
  Claim c;
  c.name = name;
  if (const Json* n = opt_field(root, "name")) c.name = as_string(*n, "/name");
  c.group = as_string(field(root, "", "group"), "/group");
  c.socle_class = as_string(field(root, "", "socle_class"), "/socle_class");
  const Json& a = field(root, "", "asserted_alpha");
  if (a.is_array()) {
    if (a.size() != 2) throw Bad{"/asserted_alpha", "expected [lo, hi]"};
    c.asserted_lower = static_cast<unsigned>(as_unsigned(a[0], "/asserted_alpha/0"));
    if (!a[1].is_null())
      c.asserted_upper = static_cast<unsigned>(as_unsigned(a[1], "/asserted_alpha/1"));
  } else {
    c.asserted_lower = static_cast<unsigned>(as_unsigned(a, "/asserted_alpha"));
    c.asserted_upper = c.asserted_lower;
  }
  if (c.asserted_upper && *c.asserted_upper < c.asserted_lower)
    throw Bad{"/asserted_alpha", "empty interval"};
  c.data_optional = data_optional(root);
  if (const Json* d = opt_field(root, "description")) c.description = as_string(*d, "/description");
  const Json& steps = as_array(field(root, "", "steps"), "/steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = idx_ptr("/steps", i);
    c.steps.push_back(step_from(steps[i], p));
    if (const auto* ax = std::get_if<ClassificationAxiom>(&c.steps.back()))
      for (std::size_t k = 0; k < ax->premise_steps.size(); ++k)
        if (ax->premise_steps[k] >= i)
          throw Bad{idx_ptr(p + "/premise_steps", k), "premise must be an earlier step"};
  }
  return c;
}

Json selector_json(const CharacterSelector& s) {
  Json j;
  j["degree"] = s.degree;
  Json cs = Json::array();
  for (const auto& c : s.constraints) {
    Json o;
    o["class"] = c.cls;
    switch (c.kind) {
      case CharacterConstraint::Kind::positive:
        o["kind"] = "positive";
        break;
      case CharacterConstraint::Kind::negative:
        o["kind"] = "negative";
        break;
      case CharacterConstraint::Kind::equals:
        o["kind"] = "equals";
        o["value"] = to_string(c.value);
        break;
    }
    cs.push_back(std::move(o));
  }
  j["constraints"] = std::move(cs);
  return j;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json step_json(const Step& step) {
  Json j;
  j["kind"] = step_kind(step);
  std::visit(overloaded{
                 [&](const StructConstPositive& s) {
                   j["classes"] = {s.a, s.b, s.c};
                   if (s.expected) j["expected"] = s.expected->get_str();
                 },
                 [&](const ChainGeneration& s) {
                   j["seed_class"] = s.seed_class;
                   j["intermediate_classes"] = s.intermediate_classes;
                   j["required_prime_divisors"] = s.required_prime_divisors;
                   j["required_element_orders"] = s.required_element_orders;
                   j["max_data"] = s.max_data;
                 },
                 [&](const SpreadAxiom& s) {
                   j["p"] = s.p;
                   j["citation"] = s.citation;
                 },
                 [&](const BeamableAxiom& s) {
                   j["class"] = s.cls;
                   j["citation"] = s.citation;
                 },
                 [&](const BrauerProper& s) {
                   j["character"] = selector_json(s.character);
                   j["fusion_a"] = s.fusion_a;
                   j["fusion_b"] = s.fusion_b;
                   j["fusion_ab"] = s.fusion_ab;
                 },
                 [&](const BrauerCaseAnalysis& s) {
                   j["character"] = selector_json(s.character);
                   j["fusion_b"] = s.fusion_b;
                   j["fusion_ab"] = s.fusion_ab;
                   Json cs = Json::array();
                   for (const auto& c : s.cases)
                     cs.push_back({{"product_class", c.product_class}, {"fusion_a", c.fusion_a}});
                   j["cases"] = std::move(cs);
                 },
                 [&](const InvolutionLowerBound&) {},
                 [&](const TranspositionBound& s) { j["k"] = s.k; },
                 [&](const ClassificationAxiom& s) {
                   j["citation"] = s.citation;
                   j["conclusion"] = s.conclusion;
                   j["premise_steps"] = s.premise_steps;
                 },
             },
             step);
  return j;
}

Json claim_json(const Claim& c) {
  Json j;
  j["schema"] = 1;
  j["name"] = c.name;
  j["group"] = c.group;
  j["socle_class"] = c.socle_class;
  if (c.asserted_upper && *c.asserted_upper == c.asserted_lower)
    j["asserted_alpha"] = c.asserted_lower;
  else
    j["asserted_alpha"] = {c.asserted_lower,
                           c.asserted_upper ? Json(*c.asserted_upper) : Json(nullptr)};
  if (c.data_optional) j["data_optional"] = true;
  if (!c.description.empty()) j["description"] = c.description;
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(step_json(s));
  j["steps"] = std::move(steps);
  return j;
}

// every class, fusion and max-data name a claim mentions
struct ClaimRefs {
  std::vector<std::pair<std::string, std::string>> classes;  // pointer, name
  std::vector<std::pair<std::string, std::string>> fusions;
  std::vector<std::pair<std::string, std::string>> max_data;
};

ClaimRefs claim_refs(const Claim& c) {
  ClaimRefs r;
  r.classes.emplace_back("/socle_class", c.socle_class);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const std::string p = idx_ptr("/steps", i);
    const auto sel = [&](const CharacterSelector& s) {
      for (std::size_t k = 0; k < s.constraints.size(); ++k)
        r.classes.emplace_back(idx_ptr(p + "/character/constraints", k) + "/class",
                               s.constraints[k].cls);
    };
    std::visit(overloaded{
                   [&](const StructConstPositive& s) {
                     r.classes.emplace_back(p + "/classes/0", s.a);
                     r.classes.emplace_back(p + "/classes/1", s.b);
                     r.classes.emplace_back(p + "/classes/2", s.c);
                   },
                   [&](const ChainGeneration& s) {
                     r.classes.emplace_back(p + "/seed_class", s.seed_class);
                     for (std::size_t k = 0; k < s.intermediate_classes.size(); ++k)
                       r.classes.emplace_back(idx_ptr(p + "/intermediate_classes", k),
                                              s.intermediate_classes[k]);
                     r.max_data.emplace_back(p + "/max_data", s.max_data);
                   },
                   [&](const SpreadAxiom&) {},
                   [&](const BeamableAxiom& s) { r.classes.emplace_back(p + "/class", s.cls); },
                   [&](const BrauerProper& s) {
                     sel(s.character);
                     r.fusions.emplace_back(p + "/fusion_a", s.fusion_a);
                     r.fusions.emplace_back(p + "/fusion_b", s.fusion_b);
                     r.fusions.emplace_back(p + "/fusion_ab", s.fusion_ab);
                   },
                   [&](const BrauerCaseAnalysis& s) {
                     sel(s.character);
                     r.fusions.emplace_back(p + "/fusion_b", s.fusion_b);
                     r.fusions.emplace_back(p + "/fusion_ab", s.fusion_ab);
                     for (std::size_t k = 0; k < s.cases.size(); ++k) {
                       const std::string cp = idx_ptr(p + "/cases", k);
                       r.classes.emplace_back(cp + "/product_class", s.cases[k].product_class);
                       r.fusions.emplace_back(cp + "/fusion_a", s.cases[k].fusion_a);
                     }
                   },
                   [&](const InvolutionLowerBound&) {},
                   [&](const TranspositionBound&) {},
                   [&](const ClassificationAxiom&) {},
               },
               c.steps[i]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// verdicts

Json opt_json(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<unsigned> opt_from(const Json& j, const std::string& ptr) {
  if (j.is_null()) return std::nullopt;
  return static_cast<unsigned>(as_unsigned(j, ptr));
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["claim"] = v.claim;
  j["group"] = v.group;
  j["socle_class"] = v.socle_class;
  j["asserted_alpha"] = {v.asserted_lower, opt_json(v.asserted_upper)};
  j["alpha"] = {v.alpha_lower, opt_json(v.alpha_upper)};
  j["status"] = to_string(v.status);
  j["note"] = v.note;
  j["axioms"] = v.axioms_assumed;
  Json steps = Json::array();
  for (const auto& s : v.steps) {
    Json o;
    o["kind"] = s.kind;
    o["passed"] = s.passed;
    o["summary"] = s.summary;
    Json vals = Json::array();
    for (const auto& [k, x] : s.values) vals.push_back({k, x});
    o["values"] = std::move(vals);
    o["lower"] = opt_json(s.lower);
    o["upper"] = opt_json(s.upper);
    o["axioms"] = s.axioms;
    steps.push_back(std::move(o));
  }
  j["steps"] = std::move(steps);
  return j;
}

Verdict verdict_from(const Json& j, const std::string& ptr) {
  const auto str = [&](std::string_view k) { return as_string(field(j, ptr, k), key_ptr(ptr, k)); };
  const auto pair = [&](std::string_view k) {
    const std::string p = key_ptr(ptr, k);
    const Json& a = as_array(field(j, ptr, k), p);
    if (a.size() != 2) throw Bad{p, "expected [lo, hi]"};
    return std::make_pair(static_cast<unsigned>(as_unsigned(a[0], p + "/0")), opt_from(a[1], p + "/1"));
  };
  Verdict v;
  v.claim = str("claim");
  v.group = str("group");
  v.socle_class = str("socle_class");
  std::tie(v.asserted_lower, v.asserted_upper) = pair("asserted_alpha");
  std::tie(v.alpha_lower, v.alpha_upper) = pair("alpha");
  const auto status = parse_status(str("status"));
  if (!status) throw Bad{ptr + "/status", "unknown status"};
  v.status = *status;
  v.note = str("note");
  v.axioms_assumed = string_list(field(j, ptr, "axioms"), ptr + "/axioms");
  const Json& steps = as_array(field(j, ptr, "steps"), ptr + "/steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = idx_ptr(ptr + "/steps", i);
    const Json& o = steps[i];
    StepResult s;
    s.kind = as_string(field(o, p, "kind"), p + "/kind");
    s.passed = as_bool(field(o, p, "passed"), p + "/passed");
    s.summary = as_string(field(o, p, "summary"), p + "/summary");
    const Json& vals = as_array(field(o, p, "values"), p + "/values");
    for (std::size_t k = 0; k < vals.size(); ++k) {
      const std::string vp = idx_ptr(p + "/values", k);
      const auto kv = string_list(vals[k], vp);
      if (kv.size() != 2) throw Bad{vp, "expected [name, value]"};
      s.values.emplace_back(kv[0], kv[1]);
    }
    s.lower = opt_from(field(o, p, "lower"), p + "/lower");
    s.upper = opt_from(field(o, p, "upper"), p + "/upper");
    s.axioms = string_list(field(o, p, "axioms"), p + "/axioms");
    v.steps.push_back(std::move(s));
  }
  return v;
}

// ---------------------------------------------------------------------------
// group files

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_word_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool looks_like_cycles(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) || std::isspace(c) || c == '(' || c == ')' || c == ',';
  });
}

}  // namespace

DataError::DataError(std::vector<LocatedError> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

std::string data_stem(const fs::path& path) {
  std::string s = path.filename().string();
  const auto dot = s.find('.');
  return dot == std::string::npos ? s : s.substr(0, dot);
}

PermGroup GroupData::group() const {
  std::vector<Permutation> gens;
  for (const auto& [n, p] : generators) gens.push_back(p);
  return PermGroup(std::move(gens), degree);
}

std::optional<Permutation> GroupData::class_rep(std::string_view cls) const {
  for (const auto& [n, p] : class_reps)
    if (n == cls) return p;
  return std::nullopt;
}

Permutation GroupData::element(std::string_view text) const {
  const std::string t = trim(text);
  if (auto r = class_rep(t)) return *r;
  if (looks_like_cycles(t)) return Permutation::from_cycles(t, degree);
  return word_evaluate(named, t);
}

GroupData parse_group(std::string_view text, const std::string& file) {
  GroupData g;
  g.name = file;
  std::vector<LocatedError> errors;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      const auto def = line.find(":=");
      if (def == std::string::npos) throw std::invalid_argument("expected 'name := value'");
      std::string lhs = trim(line.substr(0, def));
      const std::string rhs = trim(line.substr(def + 2));
      std::string keyword;
      if (const auto sp = lhs.find_first_of(" \t"); sp != std::string::npos) {
        keyword = lhs.substr(0, sp);
        lhs = trim(lhs.substr(sp));
      }
      if (keyword.empty() && lhs == "degree") {
        if (g.degree) throw std::invalid_argument("degree declared twice");
        std::size_t used = 0;
        const unsigned long d = std::stoul(rhs, &used);
        if (used != rhs.size() || d == 0) throw std::invalid_argument("bad degree");
        g.degree = d;
        continue;
      }
      if (!g.degree) throw std::invalid_argument("degree must be declared first");
      if (keyword.empty()) {
        if (!is_word_name(lhs)) throw std::invalid_argument("bad generator name '" + lhs + "'");
        if (!g.words.empty()) throw std::invalid_argument("generators must precede words");
        if (g.named.count(lhs)) throw std::invalid_argument("duplicate name " + lhs);
        const Permutation p = Permutation::from_cycles(rhs, g.degree);
        g.generators.emplace_back(lhs, p);
        g.named.emplace(lhs, p);
      } else if (keyword == "word") {
        if (!is_word_name(lhs)) throw std::invalid_argument("bad word name '" + lhs + "'");
        if (g.named.count(lhs)) throw std::invalid_argument("duplicate name " + lhs);
        const Permutation p = word_evaluate(g.named, rhs);
        g.words.emplace_back(lhs, rhs);
        g.named.emplace(lhs, p);
      } else if (keyword == "class") {
        if (g.class_rep(lhs)) throw std::invalid_argument("duplicate class " + lhs);
        g.class_reps.emplace_back(lhs, looks_like_cycles(rhs)
                                           ? Permutation::from_cycles(rhs, g.degree)
                                           : word_evaluate(g.named, rhs));
      } else if (keyword == "centralizer") {
        std::vector<std::string> ws;
        std::istringstream parts(rhs);
        std::string w;
        while (std::getline(parts, w, ';')) {
          w = trim(w);
          if (w.empty()) continue;
          word_evaluate(g.named, w);
          ws.push_back(w);
        }
        if (ws.empty()) throw std::invalid_argument("empty centralizer list");
        g.centralizers[lhs] = std::move(ws);
      } else {
        throw std::invalid_argument("unknown keyword '" + keyword + "'");
      }
    } catch (const std::exception& e) {
      errors.push_back({file, where, e.what()});
    }
  }
  if (errors.empty() && !g.degree) errors.push_back({file, "", "no degree declaration"});
  if (errors.empty() && g.generators.empty()) errors.push_back({file, "", "no generators"});
  for (const auto& [cls, ws] : g.centralizers)
    if (!g.class_rep(cls))
      errors.push_back({file, "", "centralizer for undeclared class " + cls});
  if (!errors.empty()) throw DataError(std::move(errors));
  return g;
}

GroupData load_group(const fs::path& path) {
  GroupData g = parse_group(read_file(path), path.string());
  g.name = data_stem(path);
  return g;
}

CharacterTable parse_table(std::string_view json_text, const std::string& file) {
  const Json root = parse_json(json_text, file);
  return located(file, [&] { return table_from(root); });
}

CharacterTable load_table(const fs::path& path) { return parse_table(read_file(path), path.string()); }

std::string table_to_json(const CharacterTable& t) {
  Json j;
  j["schema"] = 1;
  j["group_name"] = t.group_name();
  j["group_order"] = t.group_order().get_str();
  j["socle_index"] = t.socle_index();
  Json cls = Json::array();
  for (const auto& c : t.classes()) {
    Json o;
    o["name"] = c.name;
    o["aliases"] = c.aliases;
    o["element_order"] = c.element_order;
    o["centralizer_order"] = c.centralizer_order.get_str();
    Json pm = Json::object();
    for (const auto& [p, n] : c.power_maps) pm[std::to_string(p)] = n;
    o["power_maps"] = std::move(pm);
    cls.push_back(std::move(o));
  }
  j["classes"] = std::move(cls);
  Json rows = Json::array();
  for (CharIndex i = 0; i < t.num_characters(); ++i) {
    Json r = Json::array();
    for (const auto& v : t.character(i)) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  j["characters"] = std::move(rows);
  return j.dump(1);
}

FusionMap parse_fusion(std::string_view json_text, const std::string& name,
                       const std::string& file) {
  const Json root = parse_json(json_text, file);
  return located(file, [&] { return fusion_from(root, name); });
}

FusionMap load_fusion(const fs::path& path) {
  return parse_fusion(read_file(path), data_stem(path), path.string());
}

MaximalSubgroupData parse_max_data(std::string_view json_text, const std::string& file) {
  const Json root = parse_json(json_text, file);
  return located(file, [&] { return max_from(root); });
}

MaximalSubgroupData load_max_data(const fs::path& path) {
  return parse_max_data(read_file(path), path.string());
}

Claim parse_claim(std::string_view json_text, const std::string& name, const std::string& file) {
  const Json root = parse_json(json_text, file);
  return located(file, [&] { return claim_from(root, name); });
}

Claim load_claim(const fs::path& path) {
  return parse_claim(read_file(path), data_stem(path), path.string());
}

std::string claim_to_json(const Claim& c) { return claim_json(c).dump(2); }

// ---------------------------------------------------------------------------

const CharacterTable* DataBundle::find_table(std::string_view name) const {
  if (auto it = tables.find(name); it != tables.end()) return &it->second;
  if (auto s = table_stems.find(name); s != table_stems.end()) {
    auto it = tables.find(s->second);
    if (it != tables.end()) return &it->second;
  }
  return nullptr;
}

const Claim* DataBundle::find_claim(std::string_view name) const {
  for (const auto& [p, c] : claims)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::vector<fs::path> listing(const fs::path& dir, std::string_view suffix) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string n = e.path().filename().string();
    if (e.is_regular_file() && n.size() > suffix.size() &&
        n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0)
      out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reads optional "data_optional" without failing on malformed files.
bool file_data_optional(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    const Json* d = opt_field(j, "data_optional");
    return d && d->is_boolean() && d->get<bool>();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

DataBundle load_bundle(const fs::path& root) {
  DataBundle b;
  b.root = root;
  std::vector<LocatedError> errors;
  const auto absorb = [&](const DataError& e) {
    errors.insert(errors.end(), e.errors().begin(), e.errors().end());
  };
  if (!fs::is_directory(root)) throw DataError({{root.string(), "", "not a directory"}});

  for (const auto& p : listing(root / "tables", ".ctab.json")) {
    try {
      CharacterTable t = load_table(p);
      const ValidationReport rep = validate(t);
      bool bad = false;
      for (const auto& i : rep.issues) {
        LocatedError e{p.string(), issue_pointer(i), i.kind + ": " + i.message};
        if (i.severity == Severity::error) {
          errors.push_back(std::move(e));
          bad = true;
        } else {
          b.warnings.push_back(std::move(e));
        }
      }
      if (bad) continue;
      const std::string name = t.group_name();
      if (b.tables.count(name)) {
        errors.push_back({p.string(), "/group_name", "second table for " + name});
        continue;
      }
      b.table_stems[data_stem(p)] = name;
      b.tables.emplace(name, std::move(t));
    } catch (const DataError& e) {
      absorb(e);
    }
  }

  std::set<std::string> optional_files;
  const auto note_optional = [&](const fs::path& p) {
    try {
      if (file_data_optional(read_file(p))) optional_files.insert(p.string());
    } catch (const DataError&) {
    }
  };

  std::map<std::string, fs::path> fusion_files;
  for (const auto& p : listing(root / "fusions", ".fus.json")) {
    try {
      FusionMap f = load_fusion(p);
      note_optional(p);
      const CharacterTable* t = b.find_table(f.ambient);
      if (!t) {
        if (!optional_files.count(p.string()))
          errors.push_back({p.string(), "/ambient", "dangling reference: table " + f.ambient +
                                                        " is not loaded"});
        continue;
      }
      if (t->group_name() != f.ambient) {
        errors.push_back({p.string(), "/ambient", "use the group name " + t->group_name()});
        continue;
      }
      try {
        resolve_fusion(*t, f);
      } catch (const std::exception& e) {
        errors.push_back({p.string(), "/assignment", e.what()});
        continue;
      }
      fusion_files[f.name] = p;
      b.fusions.emplace(f.name, std::move(f));
    } catch (const DataError& e) {
      absorb(e);
    }
  }

  for (const auto& p : listing(root / "groups", ".grp")) {
    try {
      GroupData g = load_group(p);
      b.groups.emplace(g.name, std::move(g));
    } catch (const DataError& e) {
      absorb(e);
    }
  }

  for (const auto& p : listing(root / "maxdata", ".max.json")) {
    try {
      MaximalSubgroupData m = load_max_data(p);
      note_optional(p);
      const CharacterTable* t = b.find_table(m.group_name);
      if (!t) {
        if (!optional_files.count(p.string()))
          errors.push_back({p.string(), "/group_name", "dangling reference: table " +
                                                           m.group_name + " is not loaded"});
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < m.entries.size(); ++i)
        if (!mpz_divisible_p(t->group_order().get_mpz_t(), m.entries[i].order.get_mpz_t())) {
          errors.push_back({p.string(), idx_ptr("/entries", i) + "/order",
                            "order does not divide |" + m.group_name + "|"});
          ok = false;
        }
      if (ok) b.max_data.emplace(data_stem(p), std::move(m));
    } catch (const DataError& e) {
      absorb(e);
    }
  }

  for (const auto& p : listing(root / "claims", ".claim.json")) {
    try {
      Claim c = load_claim(p);
      const std::string file = p.string();
      const CharacterTable* t = b.find_table(c.group);
      if (!t) {
        if (!c.data_optional)
          errors.push_back({file, "/group", "dangling reference: table " + c.group +
                                                " is not loaded"});
        else
          b.claims.emplace_back(p, std::move(c));
        continue;
      }
      const std::size_t before = errors.size();
      if (t->group_name() != c.group)
        errors.push_back({file, "/group", "use the group name " + t->group_name()});
      const ClaimRefs refs = claim_refs(c);
      for (const auto& [ptr, name] : refs.classes)
        if (!t->find_class(name))
          errors.push_back({file, ptr, "unknown class '" + name + "' in " + t->group_name()});
      for (const auto& [ptr, name] : refs.fusions) {
        if (name == "trivial" || name == "identity") continue;
        auto it = b.fusions.find(name);
        if (it == b.fusions.end())
          errors.push_back({file, ptr, "dangling reference: fusion " + name + " is not loaded"});
        else if (it->second.ambient != t->group_name())
          errors.push_back({file, ptr, "fusion " + name + " is into " + it->second.ambient});
      }
      for (const auto& [ptr, name] : refs.max_data) {
        auto it = b.max_data.find(name);
        if (it == b.max_data.end())
          errors.push_back({file, ptr, "dangling reference: max data " + name + " is not loaded"});
        else if (it->second.group_name != t->group_name())
          errors.push_back({file, ptr, "max data " + name + " is for " + it->second.group_name});
      }
      if (b.find_claim(c.name))
        errors.push_back({file, "/name", "duplicate claim name " + c.name});
      if (errors.size() == before) b.claims.emplace_back(p, std::move(c));
    } catch (const DataError& e) {
      absorb(e);
    }
  }

  if (!errors.empty()) throw DataError(std::move(errors));
  return b;
}

Verdict verify_in_bundle(const Claim& c, const DataBundle& b) {
  return verify_claim(c, b.find_table(c.group), b.fusions, b.max_data);
}

std::string verdict_to_json(const Verdict& v) { return verdict_json(v).dump(2); }

std::string trace_to_json(const Verdict& v, const Claim& c) {
  Json j;
  j["schema"] = 1;
  j["claim"] = claim_json(c);
  j["verdict"] = verdict_json(v);
  return j.dump(2);
}

Trace parse_trace(std::string_view json_text, const std::string& file) {
  const Json root = parse_json(json_text, file);
  return located(file, [&] {
    check_schema(root);
    const Json& cj = field(root, "", "claim");
    const std::string name = as_string(field(cj, "/claim", "name"), "/claim/name");
    Trace t;
    try {
      t.claim = claim_from(cj, name);
    } catch (const Bad& b) {
      throw Bad{"/claim" + b.pointer, b.message};
    }
    t.verdict = verdict_from(field(root, "", "verdict"), "/verdict");
    return t;
  });
}

void export_trace(const Verdict& v, const Claim& c, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << trace_to_json(v, c) << "\n";
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Trace read_trace(const fs::path& path) { return parse_trace(read_file(path), path.string()); }

Verdict replay(const Trace& t, const DataBundle& b) { return verify_in_bundle(t.claim, b); }

}  // namespace conjgen
