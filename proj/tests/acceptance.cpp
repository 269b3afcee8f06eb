// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "valext/extension_invariants.hpp"
#include "valext/json_io.hpp"
#include "valext/monomial_blowup.hpp"
#include "valext/oracle.hpp"
#include "valext/ordered_group.hpp"

#include "generators.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#ifndef VALEXT_FIXTURES_DIR
#define VALEXT_FIXTURES_DIR "data/fixtures"
#endif

using namespace valext;
namespace oracle = valext::oracle;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::int64_t kMaxOracleBound = std::int64_t{1} << 22;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string str(const LexVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
  return s + ")";
}

std::string str(const Subgroup& s) {
  std::string out = "[";
  for (const auto& g : s.generators()) out += str(g);
  return out + "]";
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// The random subgroups shared by criteria 1, 4, 5 and 6.
std::vector<Subgroup> sample_subgroups() {
  testgen::Rng rng(20240601);
  std::vector<Subgroup> out;
  for (int t = 0; t < 520; ++t) out.push_back(testgen::random_subgroup(rng, 1 + static_cast<std::size_t>(t % 4)));
  return out;
}

Outcome criterion1(const std::vector<Subgroup>& sample) {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& s : sample) {
    Integer brute = oracle::brute_epsilon_auto(s, oracle::default_box(s.rank()), kMaxOracleBound);
    o.require(initial_index(s) == brute, "epsilon mismatch on " + str(s));
  }
  double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime over 60 s");
  o.note << sample.size() << " subgroups, n in 1..4, " << secs << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  testgen::Rng rng(20240602);
  int count = 0;
  for (int t = 0; t < 220; ++t) {
    Subgroup s = testgen::random_subgroup_max_index(rng, 1 + static_cast<std::size_t>(t % 4), 200);
    o.require(group_index(s) == oracle::brute_index(s), "index mismatch on " + str(s));
    ++count;
  }
  o.note << count << " subgroups with index <= 200";
  return o;
}

Outcome criterion3() {
  Outcome o;
  testgen::Rng rng(20240603);
  int count = 0;
  for (int t = 0; t < 220; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 4);
    auto [delta, sigma] = testgen::random_chain(rng, n);
    EpsilonChain c = epsilon_chain(delta, sigma);
    o.require(c.gamma_sigma * c.sigma_delta == c.gamma_delta, "product law fails on " + str(delta));
    // each factor recounted literally
    oracle::Box start = oracle::default_box(n);
    o.require(c.gamma_sigma == oracle::brute_epsilon_auto(sigma, start, kMaxOracleBound), "eps(Gamma|Sigma)");
    o.require(c.gamma_delta == oracle::brute_epsilon_auto(delta, start, kMaxOracleBound), "eps(Gamma|Delta)");
    o.require(c.sigma_delta == oracle::brute_relative_epsilon_auto(sigma, delta, start, kMaxOracleBound),
              "eps(Sigma|Delta)");
    Integer index_sigma = group_index(sigma), index_delta = group_index(delta);
    Integer index_rel = index_delta / index_sigma;
    bool top = c.gamma_delta == index_delta;
    bool both = c.gamma_sigma == index_sigma && c.sigma_delta == index_rel;
    o.require(top == both, "equality corollary fails on " + str(delta));
    ++count;
  }
  o.note << count << " nested chains";
  return o;
}

Outcome criterion4(const std::vector<Subgroup>& sample) {
  Outcome o;
  int covers = 0;
  for (const auto& s : sample) {
    bool eq = initial_index(s) == group_index(s);
    bool crit = unit_triangular_criterion(s);
    auto cover = semigroup_cover(s);
    o.require(eq == crit && crit == cover.has_value(), "criteria disagree on " + str(s));
    if (cover) {
      ++covers;
      auto check = oracle::brute_cover_verify(s, cover->representatives, oracle::Box(8));
      o.require(check.ok, "cover fails at " + (check.counterexample ? str(*check.counterexample) : "?") + " on " +
                              str(s));
    }
  }
  o.note << sample.size() << " subgroups, " << covers << " covers verified at bound 8";
  return o;
}

Outcome criterion5(const std::vector<Subgroup>& sample) {
  Outcome o;
  int checked = 0;
  for (const auto& s : sample) {
    Integer eps = initial_index(s);
    if (eps != group_index(s)) continue;
    std::vector<Integer> expected(s.rank(), Integer(1));
    expected.back() = eps;
    o.require(quotient_invariants(s).invariant_factors == expected, "quotient not cyclic on " + str(s));
    ++checked;
  }
  o.note << checked << " subgroups with epsilon = index";
  return o;
}

Outcome criterion6(const std::vector<Subgroup>& sample) {
  Outcome o;
  int checked = 0;
  for (const auto& s : sample) {
    Integer eps = initial_index(s);
    if (eps <= 1) continue;
    const std::size_t n = s.rank();
    auto min = oracle::brute_min_positive(s, oracle::default_box(n));
    o.require(min.has_value(), "no positive element found");
    if (!min) continue;
    auto eps64 = to_int64(eps);
    o.require(eps64 && *eps64 < kMaxOracleBound, "epsilon too large to count");
    if (!eps64 || *eps64 >= kMaxOracleBound) continue;
    auto counted = oracle::brute_points_below(*min, oracle::Box(std::max<std::int64_t>(*eps64, 2)));
    std::vector<LexVector> expected;
    for (std::int64_t k = 0; k < *eps64; ++k) expected.push_back(LexVector::last_axis(n, make_integer(k)));
    o.require(counted == expected, "counted set is not {k e_n} on " + str(s));
    o.require(smallest_positive_elements(s) == expected, "smallest_positive_elements differs on " + str(s));
    LexVector top = LexVector::last_axis(n, eps);
    o.require(oracle::brute_member(s, top) && membership(s, top), "eps e_n not in Delta on " + str(s));
    ++checked;
  }
  o.note << checked << " subgroups with epsilon > 1";
  return o;
}

Outcome criterion7() {
  Outcome o;
  testgen::Rng rng(20240607);
  int frames = 0, steps = 0;
  for (int t = 0; t < 520; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 4);
    Frame f = testgen::random_frame(rng, n);
    std::vector<Monomial> ms;
    for (int k = 0; k < 8; ++k) ms.push_back(testgen::random_monomial(rng, n, 12));
    for (const auto& s : testgen::legal_steps(f)) {
      PmtResult r = pmt(f, s);
      o.require(abs(determinant(r.frame.values())) == 1, "det changed");
      for (const auto& v : r.frame.values()) o.require(v.is_positive(), "column not positive");
      for (const auto& m : ms)
        o.require(monomial_value(r.frame, r.rewrite(m)) == monomial_value(f, m), "value not conserved");
      ++steps;
    }
    ++frames;
  }
  o.note << frames << " frames, " << steps << " legal PMTs, 8 monomials each";
  return o;
}

Outcome criterion8() {
  Outcome o;
  testgen::Rng rng(20240608);
  int instances = 0;
  std::size_t longest = 0;
  for (int t = 0; t < 210; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    Frame f = testgen::random_frame(rng, n);
    auto [m1, m2] = testgen::ordered_pair(rng, f, 10);
    try {
      DivisibilityResult r = make_divisible(f, m1, m2, 10000);
      o.require(divides(r.m1, r.m2), "result not divisible");
      Replay a = replay(f, r.steps, {m1, m2});
      Replay b = replay(f, r.steps, {m1, m2});
      o.require(a.frame == r.frame && a.monomials[0] == r.m1 && a.monomials[1] == r.m2, "replay differs");
      o.require(a.frame == b.frame && a.monomials == b.monomials, "replay not deterministic");
      longest = std::max(longest, r.steps.size());
    } catch (const BudgetExceededError&) {
      o.require(false, "budget exceeded");
    }
    ++instances;
  }
  int agree = 0, found = 0;
  for (int t = 0; t < 50; ++t) {
    Frame f = testgen::random_frame(rng, 2, 3, 4);
    auto [m1, m2] = testgen::ordered_pair(rng, f, 10);
    auto shortest = oracle::pmt_bfs(f, m1, m2, 8);
    bool ours;
    try {
      make_divisible(f, m1, m2, 8);
      ours = true;
    } catch (const BudgetExceededError&) {
      ours = false;
    }
    o.require(ours == shortest.has_value(), "BFS disagreement");
    agree += ours == shortest.has_value();
    found += shortest.has_value();
  }
  o.note << instances << " instances (longest " << longest << " steps); n = 2 BFS agreement " << agree
         << "/50 (" << found << " solvable within depth 8)";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int cases = 0;
  for (long e = 1; e <= 6; ++e)
    for (long b = 0; b <= 12; ++b) {
      Rank2Normalization out = rank2_normalize(Relation2{1, Integer(b), 0, Integer(e), Integer(e)});
      const Relation2& r = out.relation;
      o.require(abs(r.a * r.d - r.b * r.c) == e, "det not preserved");
      o.require(r.a == 1 && r.b == 0 && r.c == 0 && r.d == e, "final form wrong");
      o.require(out.r >= 0 && divides(Integer(e), Integer(b) + out.r), "r does not reach a multiple of e");
      for (long smaller = 0; smaller < out.r; ++smaller)
        o.require((b + smaller) % e != 0, "r not minimal");
      o.require(out.s * e == b + out.r, "s wrong");
      ++cases;
    }
  o.note << cases << " (b, e) pairs";
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto t0 = Clock::now();
  std::ifstream in(std::string(VALEXT_FIXTURES_DIR) + "/two-extensions-8-not-9.json");
  o.require(static_cast<bool>(in), "fixture missing");
  if (!in) return o;
  io::Json fx = io::Json::parse(in);
  auto family = io::family_from(fx.at("input"));
  FamilyReport report = family_check(family);
  o.require(report.profiles.size() == 2, "two extensions expected");
  if (report.profiles.size() != 2) return o;
  const auto& p1 = report.profiles[0];
  const auto& p2 = report.profiles[1];
  o.require(p1.e == 1 && p2.e == 2, "e");
  o.require(p1.epsilon == 1 && p2.epsilon == 1, "epsilon");
  o.require(p1.f == 1 && p2.f == 1, "f");
  o.require(p1.d == Integer(1) && p2.d == Integer(1), "d");
  o.require(p1.statement(8) == Truth::True, "8 for omega_1");
  o.require(report.s9 == Truth::False, "9 for the family");
  bool refuted = false;
  for (const auto& v : report.violations) refuted = refuted || v.arrow == "5<=>9";
  o.require(refuted, "asserted 5 not refuted");
  double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime over 1 s");
  o.note << "e = (1,2), eps = (1,1), f = (1,1), d = (1,1); 5 refuted; " << secs << " s";
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::vector<ValueGroupModel> models{
      LatticeModel{canonicalize(2, {{1, 0}, {0, 1}})},
      LatticeModel{canonicalize(2, {{1, 0}, {0, 2}})},
      LatticeModel{canonicalize(2, {{2, 0}, {0, 2}})},
      DenseRank1Model{Integer(2)},
      LatticeModel{canonicalize(2, {{3, 0}, {0, 3}})},
  };
  int cases = 0, raised = 0, flagged = 0;
  for (const auto& model : models)
    for (long f = 1; f <= 2; ++f)
      for (long h = 1; h <= 10; ++h) {
        ExtensionRecord rec;
        rec.groups = model;
        rec.f = f;
        rec.hensel_degree = Integer(h);
        rec.lk_degree = Integer(h);
        Integer ef = ramification_index(rec) * f;
        bool integral = divides(ef, Integer(h));
        bool threw = false;
        try {
          Integer d = defect(rec);
          o.require(d * ef == h, "e f d != hensel_degree");
        } catch (const Error& e) {
          threw = e.code() == ErrorCode::NonIntegralDefect;
        }
        o.require(threw == !integral, "NonIntegralDefect raised exactly when e f does not divide the degree");
        raised += threw;
        if (integral) {
          StatementProfile p = statement_profile(rec);
          bool chain = p.epsilon * f == h;  // ε·f = hensel_degree = lk_degree
          o.require(p.hensel_matches_dim == chain && p.lk_matches_dim == chain, "flag mismatch");
          if (chain) {
            o.require(p.d == Integer(1) && p.epsilon == p.e, "flag without d = 1 and eps = e");
            ++flagged;
          }
        }
        ++cases;
      }
  o.note << cases << " cases, " << raised << " NonIntegralDefect, " << flagged << " chain flags";
  return o;
}

}  // namespace

int main() {
  std::vector<Subgroup> sample = sample_subgroups();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"initial index equals the brute-force count", [&] { return criterion1(sample); }},
      {"group index equals the coset enumeration", criterion2},
      {"initial indices multiply along nested chains", criterion3},
      {"eps = index, unit-triangular criterion and cover agree", [&] { return criterion4(sample); }},
      {"quotient is cyclic of order eps when eps = index", [&] { return criterion5(sample); }},
      {"elements below Delta>0 are k e_n and eps e_n is in Delta", [&] { return criterion6(sample); }},
      {"PMTs conserve det, positivity and values", criterion7},
      {"divisibility algorithm succeeds and replays", criterion8},
      {"rank-two normalization", criterion9},
      {"two-extension example", criterion10},
      {"defect integrality and the eps f = [L:K] chain", criterion11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": " << criteria[k].first << " -- "
              << o.note.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "acceptance FAILED" : "acceptance passed") << " (" << criteria.size() - failed << "/"
            << criteria.size() << ")" << std::endl;
  return failed ? 1 : 0;
}
