#include "conjgen/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conjgen/certify.hpp"
#include "conjgen/chartab.hpp"
#include "conjgen/dataio.hpp"
#include "conjgen/permgrp.hpp"
#include "json.hpp"

namespace conjgen {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Failed {
  std::string message;
};

struct Options {
  std::string data = "data";
  bool json = false;
  std::string out_file;
  std::optional<std::size_t> bound;
  bool extended = false;

  std::size_t enumeration_bound() const {
    if (bound) return *bound;
    return extended ? std::numeric_limits<std::size_t>::max() : kDefaultEnumerationBound;
  }
};

class Context {
 public:
  explicit Context(const Options& o) : opt_(o) {}

  const DataBundle& bundle() {
    if (!bundle_) bundle_ = load_bundle(opt_.data);
    return *bundle_;
  }

  const CharacterTable& table(const std::string& arg) {
    if (fs::is_regular_file(arg)) return checked(load_table(arg), arg);
    const fs::path by_stem = fs::path(opt_.data) / "tables" / (arg + ".ctab.json");
    if (!bundle_ && fs::is_regular_file(by_stem)) return checked(load_table(by_stem), by_stem.string());
    const CharacterTable* t = bundle().find_table(arg);
    if (!t) throw DataError({{opt_.data, "", "no table named " + arg}});
    return *t;
  }

  GroupData group(const std::string& arg) {
    if (fs::is_regular_file(arg)) return load_group(arg);
    const fs::path p = fs::path(opt_.data) / "groups" / (arg + ".grp");
    if (fs::is_regular_file(p)) return load_group(p);
    throw DataError({{arg, "", "no such group file"}});
  }

  FusionMap fusion(const CharacterTable& t, const std::string& arg) {
    if (fs::is_regular_file(arg)) {
      FusionMap f = load_fusion(arg);
      resolve_fusion(t, f);
      return f;
    }
    FusionLibrary lib;
    if (arg != "trivial" && arg != "identity") lib = bundle().fusions;
    auto f = lookup_fusion(t, lib, arg);
    if (!f) throw DataError({{arg, "", "no such fusion"}});
    return *f;
  }

  Claim claim(const std::string& arg) {
    if (fs::is_regular_file(arg)) return load_claim(arg);
    const Claim* c = bundle().find_claim(arg);
    if (!c) throw DataError({{opt_.data, "", "no claim named " + arg}});
    return *c;
  }

 private:
  const CharacterTable& checked(CharacterTable t, const std::string& file) {
    const ValidationReport rep = validate(t);
    if (!rep.ok()) {
      std::vector<LocatedError> errors;
      for (const auto& i : rep.issues)
        if (i.severity == Severity::error) errors.push_back({file, "", i.kind + ": " + i.message});
      throw DataError(std::move(errors));
    }
    owned_.push_back(std::make_unique<CharacterTable>(std::move(t)));
    return *owned_.back();
  }

  const Options& opt_;
  std::optional<DataBundle> bundle_;
  std::vector<std::unique_ptr<CharacterTable>> owned_;
};

std::string cycles(const Permutation& p) { return p.to_cycles(); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    const auto b = part.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(part.substr(b, part.find_last_not_of(" \t") - b + 1));
  }
  return out;
}

struct SelectorArgs {
  long degree = 0;
  std::vector<std::string> positive, negative, equals;

  void add(CLI::App* app) {
    app->add_option("--degree", degree, "character degree")->required();
    app->add_option("--positive", positive, "class where the value is positive");
    app->add_option("--negative", negative, "class where the value is negative");
    app->add_option("--equals", equals, "CLASS=VALUE");
  }

  CharacterSelector selector() const {
    CharacterSelector s;
    s.degree = degree;
    for (const auto& c : positive) s.constraints.push_back({c, CharacterConstraint::Kind::positive, {}});
    for (const auto& c : negative) s.constraints.push_back({c, CharacterConstraint::Kind::negative, {}});
    for (const auto& e : equals) {
      const auto eq = e.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--equals", "expected CLASS=VALUE");
      s.constraints.push_back(
          {e.substr(0, eq), CharacterConstraint::Kind::equals, parse_value(e.substr(eq + 1))});
    }
    return s;
  }
};

std::string row_text(const CharacterTable& t, CharIndex chi) {
  std::string s;
  for (ClassIndex c = 0; c < t.num_classes(); ++c)
    s += (c ? " " : "") + t.class_name(c) + ":" + to_string(t.value(chi, c));
  return s;
}

Json step_values(const StepResult& r) {
  Json o = Json::object();
  for (const auto& [k, v] : r.values) o[k] = v;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact certificates for generation of almost simple groups by conjugates", "conjgen"};
  app.require_subcommand(1);
  app.add_option("--data", opt.data, "data directory")->capture_default_str();
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--out", opt.out_file, "write a verdict trace or value file");
  app.add_option("--bound", opt.bound, "enumeration bound for permutation group commands");
  app.add_flag("--extended", opt.extended, "lift the default enumeration bound");

  std::function<int(Context&)> action;

  // verify
  std::vector<std::string> claim_args;
  auto* verify = app.add_subcommand("verify", "verify claim files (all shipped claims if none given)");
  verify->add_option("claims", claim_args, "claim files or names");
  verify->callback([&] {
    action = [&](Context& ctx) {
      std::vector<Claim> claims;
      for (const auto& a : claim_args) claims.push_back(ctx.claim(a));
      if (claim_args.empty())
        for (const auto& [p, c] : ctx.bundle().claims) claims.push_back(c);
      if (!opt.out_file.empty() && claims.size() != 1)
        throw CLI::ValidationError("--out", "a trace holds exactly one claim");
      int code = kExitOk;
      Json all = Json::array();
      for (const auto& c : claims) {
        const Verdict v = verify_in_bundle(c, ctx.bundle());
        if (opt.json)
          all.push_back(Json::parse(verdict_to_json(v)));
        else
          out << format_verdict(v);
        if (!opt.out_file.empty()) export_trace(v, c, opt.out_file);
        const int mine = v.status == VerdictStatus::verified  ? kExitOk
                         : v.status == VerdictStatus::skipped ? kExitDataError
                                                              : kExitFailed;
        code = std::max(code, mine);
      }
      if (opt.json) out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      return code;
    };
  });

  // replay
  std::string trace_file;
  auto* replay_cmd = app.add_subcommand("replay", "recompute a verdict trace and compare");
  replay_cmd->add_option("trace", trace_file)->required();
  replay_cmd->callback([&] {
    action = [&](Context& ctx) {
      const Trace t = read_trace(trace_file);
      const Verdict v = replay(t, ctx.bundle());
      const bool same = v == t.verdict;
      out << (same ? "trace reproduced: " : "trace differs: ") << t.claim.name << "\n";
      return same ? kExitOk : kExitFailed;
    };
  });

  // structconst
  std::string table_arg, ca, cb, cc;
  auto* sc = app.add_subcommand("structconst", "class multiplication coefficient m(a,b,c)");
  sc->add_option("table", table_arg)->required();
  sc->add_option("a", ca)->required();
  sc->add_option("b", cb)->required();
  sc->add_option("c", cc)->required();
  sc->callback([&] {
    action = [&](Context& ctx) {
      const CharacterTable& t = ctx.table(table_arg);
      const mpz_class m = struct_const(t, t.class_index(ca), t.class_index(cb), t.class_index(cc));
      if (opt.json)
        out << Json{{"table", t.group_name()}, {"a", ca}, {"b", cb}, {"c", cc}, {"m", m.get_str()}}.dump()
            << "\n";
      else
        out << m.get_str() << "\n";
      return kExitOk;
    };
  });

  // products
  auto* prod = app.add_subcommand("products", "classes meeting a*b with their coefficients");
  prod->add_option("table", table_arg)->required();
  prod->add_option("a", ca)->required();
  prod->add_option("b", cb)->required();
  prod->callback([&] {
    action = [&](Context& ctx) {
      const CharacterTable& t = ctx.table(table_arg);
      const auto terms = product_classes(t, t.class_index(ca), t.class_index(cb));
      Json o = Json::object();
      for (const auto& pt : terms) {
        if (opt.json)
          o[t.class_name(pt.cls)] = pt.coefficient.get_str();
        else
          out << t.class_name(pt.cls) << " " << pt.coefficient.get_str() << "\n";
      }
      if (opt.json) out << o.dump() << "\n";
      return kExitOk;
    };
  });

  // brauer
  SelectorArgs sel;
  std::string fa, fb, fab;
  auto* brauer = app.add_subcommand("brauer", "Brauer inequality for subgroups given by fusions");
  brauer->add_option("table", table_arg)->required();
  sel.add(brauer);
  brauer->add_option("--a", fa, "fusion of A")->required();
  brauer->add_option("--b", fb, "fusion of B")->required();
  brauer->add_option("--ab", fab, "fusion of A cap B")->required();
  brauer->callback([&] {
    action = [&](Context& ctx) {
      const CharacterTable& t = ctx.table(table_arg);
      const StepResult r = check_brauer(t, sel.selector(), ctx.fusion(t, fa), ctx.fusion(t, fb),
                                        ctx.fusion(t, fab));
      if (opt.json) {
        out << Json{{"passed", r.passed}, {"values", step_values(r)}}.dump() << "\n";
      } else {
        for (const auto& [k, v] : r.values) out << k << " = " << v << "\n";
        out << r.summary << (r.passed ? ": <A,B> is proper" : ": inconclusive") << "\n";
      }
      return r.passed ? kExitOk : kExitFailed;
    };
  });

  // restriction
  std::vector<std::string> fusion_args;
  auto* restr = app.add_subcommand("restriction", "(chi_H, 1_H) for subgroups given by fusions");
  restr->add_option("table", table_arg)->required();
  sel.add(restr);
  restr->add_option("--fusion", fusion_args, "fusion file or name")->required();
  restr->callback([&] {
    action = [&](Context& ctx) {
      const CharacterTable& t = ctx.table(table_arg);
      const CharacterSelector s = sel.selector();
      const CharIndex chi = find_character(t, s.degree, s.constraints);
      Json o = Json::object();
      if (!opt.json) out << "chi = " << row_text(t, chi) << "\n";
      for (const auto& f : fusion_args) {
        const FusionMap fm = ctx.fusion(t, f);
        const mpz_class v = restriction_inner_product(t, chi, fm);
        if (opt.json)
          o[fm.name] = v.get_str();
        else
          out << fm.name << " (" << fm.subgroup_name << ") " << v.get_str() << "\n";
      }
      if (opt.json) out << Json{{"character", chi}, {"inner_products", o}}.dump() << "\n";
      return kExitOk;
    };
  });

  // transposition-bound
  unsigned long kbound = 0;
  auto* tb = app.add_subcommand("transposition-bound", "do products of two class elements have order <= k");
  tb->add_option("table", table_arg)->required();
  tb->add_option("class", ca)->required();
  tb->add_option("k", kbound)->required();
  tb->callback([&] {
    action = [&](Context& ctx) {
      const StepResult r = check_transposition_bound(ctx.table(table_arg), ca, kbound);
      if (opt.json)
        out << Json{{"passed", r.passed}, {"witnesses", r.values.at(0).second}}.dump() << "\n";
      else
        out << (r.passed ? "pass: " : "fail: ") << r.summary << "\n";
      return r.passed ? kExitOk : kExitFailed;
    };
  });

  // check-data
  auto* check = app.add_subcommand("check-data", "load and validate the whole data directory");
  check->callback([&] {
    action = [&](Context& ctx) {
      const DataBundle& b = ctx.bundle();
      if (opt.json) {
        Json w = Json::array();
        for (const auto& e : b.warnings) w.push_back(e.to_string());
        out << Json{{"tables", b.tables.size()},   {"fusions", b.fusions.size()},
                    {"groups", b.groups.size()},   {"max_data", b.max_data.size()},
                    {"claims", b.claims.size()},   {"warnings", w}}
                   .dump(2)
            << "\n";
      } else {
        out << b.tables.size() << " tables, " << b.fusions.size() << " fusions, "
            << b.groups.size() << " groups, " << b.max_data.size() << " max-subgroup lists, "
            << b.claims.size() << " claims\n";
        for (const auto& e : b.warnings) out << "warning: " << e.to_string() << "\n";
        out << "ok\n";
      }
      return kExitOk;
    };
  });

  // brute
  auto* brute = app.add_subcommand("brute", "permutation group oracles");
  brute->require_subcommand(1);
  std::string group_arg, ea, eb, ec, socle_arg = "self", element_arg, class_rep, elements_arg,
                                     centralizer_arg;
  unsigned max_k = 8;
  bool order3 = false;

  auto* bm = brute->add_subcommand("m", "count pairs (u, v), u in a^G, v in b^G, uv = c");
  bm->add_option("group", group_arg)->required();
  bm->add_option("a", ea)->required();
  bm->add_option("b", eb)->required();
  bm->add_option("c", ec)->required();
  bm->callback([&] {
    action = [&](Context& ctx) {
      const GroupData gd = ctx.group(group_arg);
      const PermGroup g = gd.group();
      const std::size_t bound = opt.enumeration_bound();
      const ConjClass a = conjugacy_class(g, gd.element(ea), bound);
      const ConjClass b = conjugacy_class(g, gd.element(eb), bound);
      const Permutation c = gd.element(ec);
      if (!g.contains(c)) throw std::invalid_argument("c is not in the group");
      const mpz_class m = brute_struct_const(g, a, b, c);
      if (opt.json)
        out << Json{{"m", m.get_str()}}.dump() << "\n";
      else
        out << m.get_str() << "\n";
      return kExitOk;
    };
  });

  auto* ba = brute->add_subcommand("alpha", "least number of conjugates generating a group containing the socle");
  ba->add_option("group", group_arg)->required();
  ba->add_option("--socle", socle_arg, "'self' or ';'-separated socle generators")->capture_default_str();
  ba->add_option("--element", element_arg)->required();
  ba->add_option("--max-k", max_k)->capture_default_str();
  ba->callback([&] {
    action = [&](Context& ctx) {
      const GroupData gd = ctx.group(group_arg);
      const PermGroup g = gd.group();
      std::vector<Permutation> sgens;
      if (socle_arg == "self") {
        sgens = g.generators();
      } else {
        for (const auto& e : split(socle_arg, ';')) sgens.push_back(gd.element(e));
      }
      const PermGroup socle(sgens, gd.degree);
      const auto a = brute_alpha(g, socle, gd.element(element_arg), max_k, opt.enumeration_bound());
      if (opt.json) {
        out << Json{{"alpha", a ? Json(*a) : Json(nullptr)}}.dump() << "\n";
      } else if (a) {
        out << *a << "\n";
      } else {
        out << "more than " << max_k << "\n";
      }
      return a ? kExitOk : kExitFailed;
    };
  });

  const auto class_set = [&](const GroupData& gd, const PermGroup& g) {
    std::vector<Permutation> set;
    if (order3) {
      const Permutation first = class_rep.empty() ? Permutation(gd.degree) : gd.element(class_rep);
      if (!class_rep.empty()) set.push_back(first);
      for (const auto& p : g.elements(opt.enumeration_bound()))
        if (p.order() == 3 && !(p == first)) set.push_back(p);
    } else if (!elements_arg.empty()) {
      for (const auto& e : split(elements_arg, ';')) set.push_back(gd.element(e));
    } else {
      if (class_rep.empty()) throw CLI::ValidationError("--class-rep", "required");
      set = conjugacy_class(g, gd.element(class_rep), opt.enumeration_bound()).members;
    }
    if (set.empty()) throw std::invalid_argument("empty element set");
    return set;
  };

  auto* bc = brute->add_subcommand("classify-pairs", "isomorphism types of <x, s> for s in a set of order-3 elements");
  bc->add_option("group", group_arg)->required();
  bc->add_option("--class-rep", class_rep, "x; the set is its conjugacy class");
  bc->add_option("--elements", elements_arg, "explicit ';'-separated set, first element is x");
  bc->add_flag("--order3", order3, "the set of all elements of order 3");
  bc->callback([&] {
    action = [&](Context& ctx) {
      const GroupData gd = ctx.group(group_arg);
      const PermGroup g = gd.group();
      const auto labels = classify_two_generated(g, class_set(gd, g), opt.enumeration_bound());
      Json arr = Json::array();
      for (const auto& l : labels) {
        if (opt.json)
          arr.push_back({{"partner", cycles(l.partner)},
                         {"orbit_size", l.orbit_size},
                         {"order", l.order.get_str()},
                         {"label", l.label}});
        else
          out << l.label << " " << l.order.get_str() << " " << l.orbit_size << " "
              << cycles(l.partner) << "\n";
      }
      if (opt.json) out << arr.dump(2) << "\n";
      return kExitOk;
    };
  });

  auto* bp = brute->add_subcommand("pair-orbits", "orbits of C(x) on the class of x");
  bp->add_option("group", group_arg)->required();
  bp->add_option("--class-rep", class_rep, "x")->required();
  bp->callback([&] {
    action = [&](Context& ctx) {
      const GroupData gd = ctx.group(group_arg);
      const PermGroup g = gd.group();
      const Permutation x = gd.element(class_rep);
      const ConjClass cls = conjugacy_class(g, x, opt.enumeration_bound());
      const std::size_t n = pair_orbit_count(g, cls, x);
      if (opt.json)
        out << Json{{"class_size", cls.size()}, {"orbits", n}}.dump() << "\n";
      else
        out << n << "\n";
      return kExitOk;
    };
  });

  auto* bo = brute->add_subcommand("order", "group order, or element and centralizer orders");
  bo->add_option("group", group_arg)->required();
  bo->add_option("--element", element_arg);
  bo->add_option("--centralizer", centralizer_arg, "class whose centralizer order to compute");
  bo->callback([&] {
    action = [&](Context& ctx) {
      const GroupData gd = ctx.group(group_arg);
      const PermGroup g = gd.group();
      Json o;
      o["order"] = g.order().get_str();
      if (!element_arg.empty()) {
        const Permutation x = gd.element(element_arg);
        if (!g.contains(x)) throw std::invalid_argument("element is not in the group");
        o["element_order"] = x.order();
      }
      if (!centralizer_arg.empty()) {
        const Permutation x = gd.element(centralizer_arg);
        const ConjClass cls = conjugacy_class(g, x, opt.enumeration_bound());
        auto it = gd.centralizers.find(centralizer_arg);
        PermGroup c = centralizer(g, cls);
        if (it != gd.centralizers.end()) {
          std::vector<Permutation> gens;
          for (const auto& w : it->second) gens.push_back(gd.element(w));
          c = verified_centralizer(g, cls, std::move(gens));
        }
        o["class_size"] = cls.size();
        o["centralizer_order"] = c.order().get_str();
      }
      if (opt.json) {
        out << o.dump() << "\n";
      } else {
        for (const auto& [k, v] : o.items())
          out << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      return kExitOk;
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDataError;
  }
  if (!action) {
    err << app.help();
    return kExitDataError;
  }
  try {
    Context ctx(opt);
    return action(ctx);
  } catch (const DataError& e) {
    err << "data error:\n" << e.what() << "\n";
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitDataError;
}

}  // namespace conjgen
