#include <gtest/gtest.h>

#include "conjgen/certify.hpp"
#include "conjgen/dataio.hpp"

using namespace conjgen;

namespace {

const DataBundle& bundle() {
  static const DataBundle b = load_bundle(CONJGEN_DATA_DIR);
  return b;
}

const CharacterTable& table(const char* name) { return *bundle().find_table(name); }

const std::string& value(const StepResult& r, const std::string& key) {
  for (const auto& [k, v] : r.values)
    if (k == key) return v;
  throw std::out_of_range(key);
}

CharacterSelector hs_chi() { return {22, {{"2C", CharacterConstraint::Kind::positive, {}}}}; }

BrauerCaseAnalysis hs_cases() {
  return {hs_chi(),
          "hs_2_z2_2c",
          "trivial",
          {{"2A", "hs_2_z2xz2_2a"}, {"2B", "hs_2_z2xz2_2b"}, {"3A", "hs_2_s3"}, {"4B", "hs_2_d8"}}};
}

Claim claim(const char* name) { return *bundle().find_claim(name); }

}  // namespace

TEST(Certify, StructConstStep) {
  const auto& suz = table("Suz.2");
  EXPECT_TRUE(check_struct_positive(suz, {"2C", "2C", "7A", mpz_class(7)}).passed);
  EXPECT_TRUE(check_struct_positive(suz, {"2C", "7A", "22A", mpz_class(3630)}).passed);
  EXPECT_FALSE(check_struct_positive(suz, {"2C", "7A", "22A", mpz_class(3631)}).passed);
  const auto& hs = table("HS.2");
  const StepResult r = check_struct_positive(hs, {"2C", "2C", "5A", std::nullopt});
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(value(r, "m(2C,2C,5A)"), "0");
  EXPECT_THROW(check_struct_positive(hs, {"2C", "2C", "5Z", std::nullopt}), UnknownClassError);
}

TEST(Certify, ChainGeneration) {
  const auto& mcl = table("McL.2");
  const ChainGeneration s{"2B", {"14A", "22A"}, {7, 11}, {}, "mcl_2"};
  const StepResult r = check_chain_generation(mcl, s, &bundle().max_data.at("mcl_2"));
  EXPECT_TRUE(r.passed) << r.summary;
  EXPECT_EQ(r.upper, 3u);
  EXPECT_EQ(value(r, "prime 7"), "14AB");
  EXPECT_EQ(value(r, "prime 11"), "22A");

  MaximalSubgroupData adversarial = bundle().max_data.at("mcl_2");
  adversarial.entries.push_back({"bogus", mpz_class(77 * 64), false, {}});
  EXPECT_FALSE(check_chain_generation(mcl, s, &adversarial).passed);

  ChainGeneration inner = s;
  inner.seed_class = "2A";
  EXPECT_FALSE(check_chain_generation(mcl, inner, &bundle().max_data.at("mcl_2")).passed);
  ChainGeneration unwitnessed = s;
  unwitnessed.required_prime_divisors = {5, 7, 11};
  EXPECT_FALSE(check_chain_generation(mcl, unwitnessed, &bundle().max_data.at("mcl_2")).passed);
  EXPECT_THROW(check_chain_generation(mcl, s, nullptr), ClaimError);
  EXPECT_THROW(check_chain_generation(mcl, s, &bundle().max_data.at("suz_2")), ClaimError);
}

TEST(Certify, ChainGenerationFi22) {
  const CharacterTable* fi = bundle().find_table("Fi22.2");
  if (!fi) GTEST_SKIP() << "Fi22.2 table not shipped";
  const ChainGeneration s{"2F", {"11A", "42A"}, {7, 11}, {21}, "fi22_2"};
  const StepResult r = check_chain_generation(*fi, s, &bundle().max_data.at("fi22_2"));
  EXPECT_TRUE(r.passed) << r.summary;
  EXPECT_EQ(value(r, "excluded 2.U6(2).2"), "no element of order 21");
}

TEST(Certify, PartialMaxData) {
  const CharacterTable* fi = bundle().find_table("Fi24");
  if (!fi) GTEST_SKIP() << "Fi24 table not shipped";
  const auto& md = bundle().max_data.at("fi24");
  const ChainGeneration s{"2D", {"33A", "46A"}, {11, 23}, {33}, "fi24"};
  const StepResult r = check_chain_generation(*fi, s, &md);
  EXPECT_TRUE(r.passed) << r.summary;
  EXPECT_EQ(r.axioms, (std::vector<std::string>{"[LW] Thm 1.1"}));
  // the partial list says nothing about subgroups of order prime to 23
  ChainGeneration weaker = s;
  weaker.required_prime_divisors = {11};
  EXPECT_FALSE(check_chain_generation(*fi, weaker, &md).passed);
}

TEST(Certify, Brauer) {
  const auto& hs = table("HS.2");
  const auto& f = bundle().fusions;
  const StepResult r = check_brauer(hs, hs_chi(), f.at("hs_2_z2xz2_2a"), f.at("hs_2_z2_2c"),
                                    FusionMap::trivial(hs));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.summary, "11 + 15 > 22");
  EXPECT_TRUE(check_brauer(hs, hs_chi(), f.at("hs_2_d8"), f.at("hs_2_z2_2c"), FusionMap::trivial(hs)).passed);
  const StepResult whole = check_brauer(hs, hs_chi(), FusionMap::identity(hs), FusionMap::identity(hs),
                                        FusionMap::identity(hs));
  EXPECT_FALSE(whole.passed);
  EXPECT_THROW(check_brauer(hs, {1, {}}, FusionMap::trivial(hs), FusionMap::trivial(hs),
                            FusionMap::trivial(hs)),
               std::exception);
}

TEST(Certify, BrauerCaseAnalysis) {
  const auto& hs = table("HS.2");
  const StepResult r = check_brauer_case_analysis(hs, "2C", hs_cases(), bundle().fusions);
  EXPECT_TRUE(r.passed) << r.summary;
  EXPECT_EQ(r.lower, 4u);
  EXPECT_EQ(value(r, "2A: (chi_A,1_A) hs_2_z2xz2_2a"), "11");
  EXPECT_EQ(value(r, "2B: (chi_A,1_A) hs_2_z2xz2_2b"), "9");
  EXPECT_EQ(value(r, "3A: (chi_A,1_A) hs_2_s3"), "9");
  EXPECT_EQ(value(r, "4B: (chi_A,1_A) hs_2_d8"), "8");

  BrauerCaseAnalysis gap = hs_cases();
  gap.cases.pop_back();
  const StepResult g = check_brauer_case_analysis(hs, "2C", gap, bundle().fusions);
  EXPECT_FALSE(g.passed);
  EXPECT_NE(g.summary.find("4B"), std::string::npos);

  // B fused to 2B instead of 2C: recomputed and recorded, B no longer holds x
  FusionLibrary lib = bundle().fusions;
  lib["hs_2_z2_2c"].assignment = {"1A", "2B"};
  const StepResult wrong = check_brauer_case_analysis(hs, "2C", hs_cases(), lib);
  EXPECT_FALSE(wrong.passed);
}

TEST(Certify, TranspositionBound) {
  const auto& hs = table("HS.2");
  const StepResult r = check_transposition_bound(hs, "2C", 4);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(value(r, "witnesses"), "1A 2A 2B 3A 4B");
  const StepResult d = check_transposition_bound(hs, "2D", 4);
  EXPECT_FALSE(d.passed);
  EXPECT_NE(d.summary.find("11AB"), std::string::npos);
  EXPECT_TRUE(check_transposition_bound(table("S3"), "2A", 4).passed);
}

TEST(Certify, SpreadStep) {
  const auto& m12 = table("M12.2");
  const mpz_class socle = m12.group_order() / m12.socle_index();
  const StepResult r = check_spread_step(m12, "2C", {11, "[GK] Prop 6.2"}, socle);
  EXPECT_TRUE(r.passed) << r.summary;
  EXPECT_EQ(r.axioms, (std::vector<std::string>{"[GK] Prop 6.2"}));
  EXPECT_FALSE(check_spread_step(m12, "2C", {2, "[GK] Prop 6.2"}, socle).passed);
  EXPECT_THROW(check_spread_step(m12, "2C", {11, ""}, socle), ClaimError);
  EXPECT_THROW(check_spread_step(m12, "2C", {12, "[GK] Prop 6.2"}, socle), ClaimError);
  const auto& hs = table("HS.2");
  EXPECT_TRUE(check_spread_step(hs, "2D", {11, "[GK] Prop 6.2"}, hs.group_order() / 2).passed);
}

TEST(Certify, BeamableAndInvolution) {
  const auto& he = table("He.2");
  const StepResult b = check_beamable(he, "2C", {"14B", "[BGK] Table 9"});
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(b.upper, 3u);
  EXPECT_FALSE(check_beamable(he, "2A", {"14B", "[BGK] Table 9"}).passed);
  EXPECT_TRUE(check_involution_lower_bound(he, "2C").passed);
  EXPECT_FALSE(check_involution_lower_bound(he, "3A").passed);
}

TEST(Certify, McLClaimVerifiesWithoutAxioms) {
  const Verdict v = verify_in_bundle(claim("mcl_2B"), bundle());
  EXPECT_EQ(v.status, VerdictStatus::verified);
  EXPECT_EQ(v.alpha_lower, 3u);
  EXPECT_EQ(v.alpha_upper, 3u);
  EXPECT_TRUE(v.axioms_assumed.empty());
  EXPECT_NE(format_verdict(v).find("alpha = 3"), std::string::npos);
}

TEST(Certify, HsClaimCarriesOneAxiom) {
  const Verdict v = verify_in_bundle(claim("hs_2C"), bundle());
  EXPECT_EQ(v.status, VerdictStatus::verified);
  EXPECT_EQ(v.alpha_lower, 4u);
  EXPECT_EQ(v.axioms_assumed, (std::vector<std::string>{"[RZ2] Thm 2"}));
}

TEST(Certify, WrongAssertionIsRefuted) {
  Claim c = claim("m22_2B");
  c.asserted_lower = 3;
  c.asserted_upper = 3;
  const Verdict v = verify_in_bundle(c, bundle());
  EXPECT_EQ(v.status, VerdictStatus::refuted);
  EXPECT_EQ(v.alpha_lower, 4u);
}

TEST(Certify, FailedStepNeverVerifies) {
  Claim c = claim("mcl_2B");
  c.steps.push_back(StructConstPositive{"2B", "2B", "22A", std::nullopt});
  const Verdict v = verify_in_bundle(c, bundle());
  EXPECT_NE(v.status, VerdictStatus::verified);
  EXPECT_FALSE(v.steps.back().passed);
}

TEST(Certify, PremiseFailureBlocksAxiom) {
  Claim c = claim("m22_2B");
  std::get<TranspositionBound>(c.steps[0]).k = 3;
  const Verdict v = verify_in_bundle(c, bundle());
  EXPECT_EQ(v.status, VerdictStatus::refuted);
  EXPECT_FALSE(v.steps[2].passed);
}

TEST(Certify, IncompleteWhenUnpinned) {
  Claim c = claim("mcl_2B");
  c.steps.erase(c.steps.begin() + 3);
  const Verdict v = verify_in_bundle(c, bundle());
  EXPECT_EQ(v.status, VerdictStatus::incomplete);
  EXPECT_EQ(v.alpha_upper, std::nullopt);
}

TEST(Certify, BoundsAreMonotone) {
  Claim c = claim("hs_2C");
  Claim partial = c;
  std::optional<unsigned> prev_upper;
  unsigned prev_lower = 0;
  for (std::size_t n = 0; n <= c.steps.size(); ++n) {
    partial.steps.assign(c.steps.begin(), c.steps.begin() + static_cast<long>(n));
    const Verdict v = verify_in_bundle(partial, bundle());
    EXPECT_GE(v.alpha_lower, prev_lower);
    if (prev_upper) {
      ASSERT_TRUE(v.alpha_upper.has_value());
      EXPECT_LE(*v.alpha_upper, *prev_upper);
    }
    prev_lower = v.alpha_lower;
    prev_upper = v.alpha_upper;
  }
}

TEST(Certify, StructuralProblemsThrow) {
  Claim c = claim("mcl_2B");
  c.steps.push_back(BeamableAxiom{"14A", ""});
  EXPECT_THROW(verify_in_bundle(c, bundle()), ClaimError);
  c = claim("mcl_2B");
  c.socle_class = "2Z";
  EXPECT_THROW(verify_in_bundle(c, bundle()), ClaimError);
  c = claim("hs_2C");
  std::get<BrauerCaseAnalysis>(c.steps[2]).fusion_b = "missing";
  EXPECT_THROW(verify_in_bundle(c, bundle()), ClaimError);
  c = claim("m22_2B");
  std::get<ClassificationAxiom>(c.steps[3]).conclusion = "alpha is small";
  EXPECT_THROW(verify_in_bundle(c, bundle()), ClaimError);
}

TEST(Certify, MissingTableSkips) {
  Claim c = claim("mcl_2B");
  const Verdict v = verify_claim(c, nullptr, {}, {});
  EXPECT_EQ(v.status, VerdictStatus::skipped);
  EXPECT_NE(v.note.find("data unavailable"), std::string::npos);
}

TEST(Certify, StatusNames) {
  for (auto s : {VerdictStatus::verified, VerdictStatus::refuted, VerdictStatus::incomplete,
                 VerdictStatus::skipped})
    EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_EQ(parse_status("maybe"), std::nullopt);
}
