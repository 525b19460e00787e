#include <random>

#include <gtest/gtest.h>

#include "conjgen/chartab.hpp"
#include "conjgen/dataio.hpp"

using namespace conjgen;

namespace {

const CharacterTable& table(const std::string& stem) {
  static std::map<std::string, CharacterTable> cache;
  auto it = cache.find(stem);
  if (it == cache.end())
    it = cache.emplace(stem, load_table(std::string(CONJGEN_DATA_DIR) + "/tables/" + stem + ".ctab.json")).first;
  return it->second;
}

CharacterTable hand_s3() {
  std::vector<ClassInfo> cls(3);
  cls[0] = {"1A", {}, 1, 6, {{2, "1A"}, {3, "1A"}}};
  cls[1] = {"2A", {}, 2, 2, {{2, "1A"}, {3, "2A"}}};
  cls[2] = {"3A", {}, 3, 3, {{2, "3A"}, {3, "1A"}}};
  return CharacterTable("S3", 6, 2, cls, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}});
}

mpz_class m(const CharacterTable& t, const char* a, const char* b, const char* c) {
  return struct_const(t, t.class_index(a), t.class_index(b), t.class_index(c));
}

FusionMap hs_fusion(std::vector<SubgroupClass> cls, std::vector<std::string> asg, long order) {
  FusionMap f;
  f.name = "test";
  f.ambient = "HS.2";
  f.subgroup_order = order;
  f.classes = std::move(cls);
  f.assignment = std::move(asg);
  return f;
}

}  // namespace

TEST(Chartab, HandWrittenS3Validates) {
  const CharacterTable t = hand_s3();
  EXPECT_TRUE(validate(t).empty());
  EXPECT_EQ(class_size(t, t.class_index("2A")), 3);
  EXPECT_EQ(class_size(t, t.class_index("1A")), 1);
  EXPECT_EQ(m(t, "2A", "2A", "3A"), 3);
}

TEST(Chartab, ConstructorRejectsMalformedInput) {
  std::vector<ClassInfo> cls(2);
  cls[0] = {"1A", {}, 1, 2, {}};
  cls[1] = {"1A", {}, 2, 2, {}};
  EXPECT_THROW(CharacterTable("Z2", 2, 1, cls, {{1, 1}, {1, -1}}), TableError);
  cls[1].name = "2A";
  EXPECT_THROW(CharacterTable("Z2", 2, 1, cls, {{1, 1}, {1}}), TableError);
  cls[1].centralizer_order = 0;
  EXPECT_THROW(CharacterTable("Z2", 2, 1, cls, {{1, 1}, {1, -1}}), TableError);
}

TEST(Chartab, ShippedTablesValidate) {
  for (const char* s : {"s3", "d8", "a4", "a5", "s5", "m11", "m12_2", "m22_2", "j2_2", "j3_2",
                        "hs_2", "mcl_2", "he_2", "suz_2", "on_2", "hn_2", "fi22_2", "fi24"}) {
    const ValidationReport r = validate(table(s));
    EXPECT_TRUE(r.ok()) << s << ": " << (r.issues.empty() ? "" : r.issues[0].message);
  }
}

TEST(Chartab, ClassSizes) {
  const CharacterTable& hs = table("hs_2");
  const ClassIndex c = hs.class_index("2C");
  EXPECT_EQ(class_size(hs, c) * hs.class_info(c).centralizer_order, hs.group_order());
}

TEST(Chartab, NamesAndAliases) {
  const CharacterTable& he = table("he_2");
  EXPECT_EQ(he.class_index("14B"), he.class_index("14CD"));
  EXPECT_THROW(he.class_index("14Z"), UnknownClassError);
  try {
    he.class_index("99X");
  } catch (const UnknownClassError& e) {
    EXPECT_EQ(e.name(), "99X");
  }
  EXPECT_TRUE(he.is_inner(he.class_index("2A")));
  EXPECT_FALSE(he.is_inner(he.class_index("2C")));
}

TEST(Chartab, KnownStructureConstants) {
  EXPECT_EQ(m(table("mcl_2"), "2B", "2B", "14A"), 14);
  EXPECT_EQ(m(table("mcl_2"), "2B", "14A", "22A"), 16236);
  EXPECT_EQ(m(table("suz_2"), "2C", "2C", "7A"), 7);
  EXPECT_EQ(m(table("suz_2"), "2C", "7A", "22A"), 3630);
  EXPECT_EQ(m(table("suz_2"), "2D", "2D", "14A"), 14);
  EXPECT_EQ(m(table("he_2"), "2C", "2C", "14CD"), 14);
  EXPECT_EQ(m(table("he_2"), "2C", "2C", "14B"), 14);
}

TEST(Chartab, IdentityRow) {
  const CharacterTable& t = table("m11");
  const ClassIndex e = t.identity_class();
  for (ClassIndex b = 0; b < t.num_classes(); ++b)
    for (ClassIndex c = 0; c < t.num_classes(); ++c)
      EXPECT_EQ(struct_const(t, e, b, c), b == c ? 1 : 0);
  const auto terms = product_classes(t, e, 3);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].cls, 3u);
  EXPECT_EQ(terms[0].coefficient, 1);
}

TEST(Chartab, ProductClassesHs) {
  const CharacterTable& t = table("hs_2");
  const ClassIndex x = t.class_index("2C");
  std::vector<std::string> names;
  for (const auto& p : product_classes(t, x, x)) names.push_back(t.class_name(p.cls));
  EXPECT_EQ(names, (std::vector<std::string>{"1A", "2A", "2B", "3A", "4B"}));
}

TEST(Chartab, ProductClassesS3) {
  const CharacterTable t = hand_s3();
  const auto terms = product_classes(t, 2, 2);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(t.class_name(terms[0].cls), "1A");
  EXPECT_EQ(terms[0].coefficient, 2);
  EXPECT_EQ(t.class_name(terms[1].cls), "3A");
  EXPECT_EQ(terms[1].coefficient, 1);
}

TEST(Chartab, InnerProducts) {
  const CharacterTable& t = table("a5");
  for (CharIndex i = 0; i < t.num_characters(); ++i)
    for (CharIndex j = 0; j < t.num_characters(); ++j)
      EXPECT_EQ(inner_product(t, i, j), i == j ? 1 : 0);
  const CharacterTable s3 = hand_s3();
  std::vector<CycloValue> regular(3);
  for (CharIndex i = 0; i < 3; ++i)
    for (ClassIndex c = 0; c < 3; ++c) regular[c] += s3.degree(i) * s3.value(i, c);
  EXPECT_EQ(regular, (std::vector<CycloValue>{6, 0, 0}));
  EXPECT_EQ(inner_product(s3, regular, s3.character(0)), 1);
}

TEST(Chartab, FindCharacter) {
  const CharacterTable& t = table("hs_2");
  const CharIndex chi = find_character(t, 22, {{"2C", CharacterConstraint::Kind::positive, {}}});
  std::vector<CycloValue> got;
  for (const char* c : {"1A", "2A", "2B", "3A", "4B", "2C"}) got.push_back(t.value(chi, t.class_index(c)));
  EXPECT_EQ(got, (std::vector<CycloValue>{22, 6, -2, 4, 2, 8}));
  EXPECT_THROW(find_character(t, 22, {}), CharacterSelectionError);
  EXPECT_THROW(find_character(t, 23, {}), CharacterSelectionError);
  const CharacterTable s3 = hand_s3();
  EXPECT_EQ(s3.degree(find_character(s3, 2, {})), CycloValue(2));
}

TEST(Chartab, RestrictionInnerProducts) {
  const CharacterTable& t = table("hs_2");
  const CharIndex chi = find_character(t, 22, {{"2C", CharacterConstraint::Kind::positive, {}}});
  EXPECT_EQ(restriction_inner_product(t, chi, hs_fusion({{"1a", 1, 1}, {"2a", 1, 2}}, {"1A", "2C"}, 2)), 15);
  EXPECT_EQ(restriction_inner_product(
                t, chi,
                hs_fusion({{"1a", 1, 1}, {"2a", 1, 2}, {"2b", 1, 2}, {"2c", 1, 2}}, {"1A", "2A", "2C", "2C"}, 4)),
            11);
  EXPECT_EQ(restriction_inner_product(t, chi,
                                      hs_fusion({{"1a", 1, 1}, {"2a", 1, 2}, {"4a", 2, 4}, {"2b", 4, 2}},
                                                {"1A", "2A", "4B", "2C"}, 8)),
            8);
  EXPECT_EQ(restriction_inner_product(t, chi, FusionMap::trivial(t)), 22);
  EXPECT_EQ(restriction_inner_product(t, chi, FusionMap::identity(t)), 0);
}

TEST(Chartab, FusionErrors) {
  const CharacterTable& t = table("hs_2");
  // element order mismatch
  EXPECT_THROW(resolve_fusion(t, hs_fusion({{"1a", 1, 1}, {"2a", 1, 2}}, {"1A", "3A"}, 2)), TableError);
  // sizes do not sum to the order
  EXPECT_THROW(resolve_fusion(t, hs_fusion({{"1a", 1, 1}, {"2a", 2, 2}}, {"1A", "2C"}, 2)), TableError);
  EXPECT_THROW(resolve_fusion(t, hs_fusion({{"1a", 1, 1}, {"2a", 1, 2}}, {"1A", "2Z"}, 2)),
               UnknownClassError);
  // no group of order 3 has two involutions: (22 + 2 * 8) / 3 is not an integer
  const CharIndex chi = find_character(t, 22, {{"2C", CharacterConstraint::Kind::positive, {}}});
  EXPECT_THROW(restriction_inner_product(t, chi, hs_fusion({{"1a", 1, 1}, {"2a", 2, 2}}, {"1A", "2C"}, 3)),
               TableError);
}

TEST(Chartab, PerturbationNamesColumnPair) {
  const CharacterTable& t = table("hs_2");
  const ClassIndex c = t.class_index("2C");
  const CharIndex chi = find_character(t, 22, {{"2C", CharacterConstraint::Kind::positive, {}}});
  const CharacterTable bad = t.with_value(chi, c, t.value(chi, c) + 1);
  const ValidationReport r = validate(bad);
  ASSERT_FALSE(r.ok());
  bool named = false;
  for (const auto& i : r.issues)
    if (i.kind == "column_orthogonality" &&
        std::find(i.indices.begin(), i.indices.end(), c) != i.indices.end())
      named = true;
  EXPECT_TRUE(named);
}

TEST(Chartab, RandomPerturbationsDetected) {
  std::mt19937_64 rng(7);
  const std::vector<std::string> stems = {"s3", "d8", "a4", "a5", "s5", "m11", "m22_2", "j2_2", "hs_2"};
  int detected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CharacterTable& t = table(stems[trial % stems.size()]);
    const CharIndex chi = std::uniform_int_distribution<CharIndex>(0, t.num_characters() - 1)(rng);
    const ClassIndex c = std::uniform_int_distribution<ClassIndex>(0, t.num_classes() - 1)(rng);
    const int kind = trial % 3;
    CycloValue delta = kind == 0 ? CycloValue(1) : kind == 1 ? CycloValue(-2) : root_of_unity(3, 1);
    if (!validate(t.with_value(chi, c, t.value(chi, c) + delta)).ok()) ++detected;
  }
  EXPECT_EQ(detected, 100);
}

TEST(Chartab, RowSumSmallTables) {
  for (const char* s : {"s3", "d8", "a4", "a5", "s5", "m11", "m22_2"}) {
    const CharacterTable& t = table(s);
    for (ClassIndex a = 0; a < t.num_classes(); ++a) {
      std::vector<mpz_class> sum(t.num_classes());
      for (ClassIndex b = 0; b < t.num_classes(); ++b) {
        const auto row = struct_const_row(t, a, b);
        for (ClassIndex c = 0; c < t.num_classes(); ++c) sum[c] += row[c];
      }
      for (ClassIndex c = 0; c < t.num_classes(); ++c) ASSERT_EQ(sum[c], class_size(t, a)) << s;
    }
  }
}

TEST(Chartab, StructConstRowMatchesSingle) {
  const CharacterTable& t = table("j2_2");
  const ClassIndex a = t.class_index("2C");
  const auto row = struct_const_row(t, a, a);
  for (ClassIndex c = 0; c < t.num_classes(); ++c) EXPECT_EQ(row[c], struct_const(t, a, a, c));
}
