#include "valext/cli.hpp"

#include "valext/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#ifndef VALEXT_FIXTURES_DIR
#define VALEXT_FIXTURES_DIR "data/fixtures"
#endif

namespace valext::cli {

using io::Json;
using io::member;
using io::to_json;

std::filesystem::path default_fixtures_dir() { return VALEXT_FIXTURES_DIR; }

namespace {

// ---------------------------------------------------------------- group

Json group_index(const Json& in, const Options&) { return Json{{"index", to_json(group_index(io::subgroup_from(in)))}}; }

Json group_epsilon(const Json& in, const Options&) {
  Subgroup d = io::subgroup_from(in);
  return Json{{"epsilon", to_json(initial_index(d))}, {"index", to_json(group_index(d))}};
}

Json group_cosets(const Json& in, const Options&) {
  Subgroup d = io::subgroup_from(in);
  auto cover = semigroup_cover(d);
  return Json{{"epsilon", to_json(initial_index(d))},
              {"index", to_json(group_index(d))},
              {"smallest_positive", to_json(smallest_positive_elements(d))},
              {"cover", cover ? to_json(cover->representatives) : Json(nullptr)}};
}

Json group_criterion(const Json& in, const Options&) {
  Subgroup d = io::subgroup_from(in);
  return Json{{"criterion", unit_triangular_criterion(d)},
              {"epsilon", to_json(initial_index(d))},
              {"index", to_json(group_index(d))},
              {"cover_exists", semigroup_cover(d).has_value()}};
}

Json group_quotient(const Json& in, const Options&) {
  Subgroup d = io::subgroup_from(in);
  Json factors = Json::array();
  for (const auto& x : quotient_invariants(d).invariant_factors) factors.push_back(to_json(x));
  return Json{{"invariant_factors", factors}, {"index", to_json(group_index(d))}};
}

Json group_chain(const Json& in, const Options&) {
  Subgroup delta = io::subgroup_from(member(in, "delta"));
  Subgroup sigma = io::subgroup_from(member(in, "sigma"));
  EpsilonChain c = epsilon_chain(delta, sigma);
  return Json{{"gamma_sigma", to_json(c.gamma_sigma)},
              {"sigma_delta", to_json(c.sigma_delta)},
              {"gamma_delta", to_json(c.gamma_delta)},
              {"index_sigma", to_json(group_index(sigma))},
              {"index_delta", to_json(group_index(delta))}};
}

// ---------------------------------------------------------------- blowup

Json blowup_pmt(const Json& in, const Options&) {
  Frame f = io::frame_from(member(in, "frame"));
  PmtStep step = io::step_from(member(in, "step"), f.size());
  std::vector<Monomial> ms;
  if (in.contains("monomials")) ms = io::monomials_from(in.at("monomials"), "monomials");
  PmtResult r = pmt(f, step);
  std::vector<Monomial> rewritten;
  for (const auto& m : ms) {
    if (m.size() != f.size()) throw Error(ErrorCode::LengthMismatch, "monomial length differs from the frame");
    rewritten.push_back(r.rewrite(m));
  }
  return Json{{"frame", to_json(r.frame)}, {"step", to_json(step)}, {"monomials", to_json(rewritten)}};
}

Json blowup_divide(const Json& in, const Options& opt) {
  Frame f = io::frame_from(member(in, "frame"));
  DivisibilityResult r = make_divisible(f, io::monomial_from(member(in, "m1"), "m1"),
                                        io::monomial_from(member(in, "m2"), "m2"), opt.budget);
  return Json{{"steps", to_json(r.steps)}, {"frame", to_json(r.frame)}, {"m1", to_json(r.m1)}, {"m2", to_json(r.m2)}};
}

Json blowup_normalize2(const Json& in, const Options&) {
  Rank2Normalization n = rank2_normalize(io::relation_from(in));
  return Json{{"r", to_json(n.r)}, {"s", to_json(n.s)}, {"relation", to_json(n.relation)}};
}

Json blowup_reduce_fraction(const Json& in, const Options& opt) {
  Frame f = io::frame_from(member(in, "frame"));
  Integer e = io::integer_from(member(in, "e"), "e");
  auto ms = io::monomials_from(member(in, "ms"), "ms");
  auto ns = io::monomials_from(member(in, "ns"), "ns");
  FractionCertificate c = reduce_fraction_supports(f, e, ms, ns, opt.budget);
  return Json{{"steps", to_json(c.steps)},    {"frame", to_json(c.frame)},
              {"m1_index", c.m1_index + 1},   {"n1_index", c.n1_index + 1},
              {"ms", to_json(c.ms)},          {"ns", to_json(c.ns)},
              {"certified", check_certificate(f, e, ms, ns, c)}};
}

// ---------------------------------------------------------------- ext

Json ext_profile(const Json& in, const Options&) { return to_json(statement_profile(io::record_from(in))); }

Json ext_defect(const Json& in, const Options&) {
  ExtensionRecord rec = io::record_from(in);
  Integer d = defect(rec);
  return Json{{"e", to_json(ramification_index(rec))},
              {"f", to_json(rec.f)},
              {"hensel_degree", to_json(*rec.hensel_degree)},
              {"d", to_json(d)}};
}

Json ext_family(const Json& in, const Options& opt) {
  FamilyReport report = family_check(io::family_from(in));
  if (opt.strict) require_consistent(report);
  return to_json(report);
}

// ---------------------------------------------------------------- verify

oracle::Box box_for(std::size_t n, const Options& opt) {
  return opt.bound ? oracle::Box(*opt.bound) : oracle::default_box(n);
}

void compare_claim(const Json& in, const char* key, const Integer& truth, Json& claims, bool& ok) {
  if (!in.contains(key)) return;
  Integer claimed = io::integer_from(in.at(key), key);
  claims[key] = Json{{"claimed", to_json(claimed)}, {"holds", claimed == truth}};
  ok = ok && claimed == truth;
}

Json verify_epsilon(const Json& in, const Options& opt) {
  Subgroup d = io::subgroup_from(in);
  oracle::Box box = box_for(d.rank(), opt);
  Integer eps = oracle::brute_epsilon_auto(d, box);
  Integer index = oracle::brute_index(d);
  bool ok = eps == initial_index(d) && index == group_index(d);
  Json claims = Json::object();
  compare_claim(in, "epsilon", eps, claims, ok);
  compare_claim(in, "index", index, claims, ok);
  return Json{{"ok", ok}, {"epsilon", to_json(eps)}, {"index", to_json(index)}, {"bound", box.bound},
              {"claims", claims}};
}

Json verify_cover(const Json& in, const Options& opt) {
  Subgroup d = io::subgroup_from(in);
  oracle::Box box = box_for(d.rank(), opt);
  // a null or missing cover claims that no finite cover exists; the
  // candidate checked then is the set of smallest nonnegative elements
  bool claims_cover;
  std::vector<LexVector> reps;
  if (in.contains("cover") && !in.at("cover").is_null()) {
    claims_cover = true;
    for (const auto& r : in.at("cover")) reps.push_back(io::vector_from(r, "cover"));
  } else if (in.contains("cover")) {
    claims_cover = false;
    reps = smallest_positive_elements(d);
  } else {
    auto cover = semigroup_cover(d);
    claims_cover = cover.has_value();
    reps = cover ? cover->representatives : smallest_positive_elements(d);
  }
  oracle::CoverCheck check = oracle::brute_cover_verify(d, reps, box);
  return Json{{"ok", check.ok == claims_cover},
              {"cover_claimed", claims_cover},
              {"cover_holds", check.ok},
              {"representatives", to_json(reps)},
              {"counterexample", check.counterexample ? to_json(*check.counterexample) : Json(nullptr)},
              {"bound", box.bound}};
}

Json verify_bfs(const Json& in, const Options& opt) {
  Frame f = io::frame_from(member(in, "frame"));
  Monomial m1 = io::monomial_from(member(in, "m1"), "m1");
  Monomial m2 = io::monomial_from(member(in, "m2"), "m2");
  auto shortest = oracle::pmt_bfs(f, m1, m2, opt.depth);

  if (!in.contains("steps")) {
    if (!shortest)
      throw Error(ErrorCode::NotFound, "no PMT sequence of length <= " + std::to_string(opt.depth));
    return Json{{"ok", true}, {"shortest", to_json(*shortest)}, {"length", shortest->size()}, {"depth", opt.depth}};
  }

  auto claimed = io::steps_from(in.at("steps"), f.size());
  bool valid;
  try {
    Replay r = replay(f, claimed, {m1, m2});
    valid = divides(r.monomials[0], r.monomials[1]);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidPmt) throw;
    valid = false;
  }
  bool minimal_ok = shortest ? shortest->size() <= claimed.size() : claimed.size() > opt.depth;
  return Json{{"ok", valid && minimal_ok},
              {"claimed_valid", valid},
              {"claimed_length", claimed.size()},
              {"shortest", shortest ? to_json(*shortest) : Json(nullptr)},
              {"length", shortest ? Json(shortest->size()) : Json(nullptr)},
              {"depth", opt.depth}};
}

using Handler = std::function<Json(const Json&, const Options&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"group index", group_index},
      {"group epsilon", group_epsilon},
      {"group cosets", group_cosets},
      {"group criterion", group_criterion},
      {"group quotient", group_quotient},
      {"group chain", group_chain},
      {"blowup pmt", blowup_pmt},
      {"blowup divide", blowup_divide},
      {"blowup normalize2", blowup_normalize2},
      {"blowup reduce-fraction", blowup_reduce_fraction},
      {"ext profile", ext_profile},
      {"ext defect", ext_defect},
      {"ext family", ext_family},
      {"verify epsilon", verify_epsilon},
      {"verify cover", verify_cover},
      {"verify bfs", verify_bfs},
  };
  return table;
}

int exit_code_for(ErrorCode code) {
  return (code == ErrorCode::BudgetExceeded || code == ErrorCode::NotFound) ? kExhausted : kInvalid;
}

// ---------------------------------------------------------------- fixtures

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + p.string());
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, p.filename().string() + ": malformed JSON: " + e.what());
  }
}

void match(const Json& expect, const Json& actual, const std::string& path, std::vector<std::string>& out) {
  if (expect.is_object()) {
    if (!actual.is_object()) {
      out.push_back(path + ": expected an object");
      return;
    }
    for (const auto& [key, value] : expect.items()) {
      if (!actual.contains(key)) out.push_back(path + "/" + key + ": missing");
      else match(value, actual.at(key), path + "/" + key, out);
    }
  } else if (expect.is_array()) {
    if (!actual.is_array() || actual.size() != expect.size()) {
      out.push_back(path + ": expected an array of length " + std::to_string(expect.size()));
      return;
    }
    for (std::size_t k = 0; k < expect.size(); ++k) match(expect[k], actual[k], path + "/" + std::to_string(k), out);
  } else if (expect != actual) {
    out.push_back(path + ": expected " + expect.dump() + ", got " + actual.dump());
  }
}

Outcome fixtures_list(const Options& opt) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(opt.fixtures_dir))
    throw Error(ErrorCode::InvalidInput, "no fixture directory " + opt.fixtures_dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(opt.fixtures_dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Json list = Json::array();
  for (const auto& p : files) {
    Json fx = read_json_file(p);
    list.push_back(Json{{"name", p.stem().string()},
                        {"command", fx.value("command", "")},
                        {"description", fx.value("description", "")}});
  }
  return Outcome{Json{{"fixtures", list}}, kOk};
}

Outcome fixtures_run(const std::string& name, const Options& opt) {
  if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos)
    throw Error(ErrorCode::InvalidInput, "bad fixture name \"" + name + "\"");
  Json fx = read_json_file(opt.fixtures_dir / (name + ".json"));
  const auto& command = member(fx, "command").get_ref<const std::string&>();
  Options local = opt;
  if (fx.contains("options")) {
    const Json& o = fx.at("options");
    if (o.contains("budget")) local.budget = o.at("budget").get<std::size_t>();
    if (o.contains("bound")) local.bound = o.at("bound").get<std::int64_t>();
    if (o.contains("depth")) local.depth = o.at("depth").get<std::size_t>();
    if (o.contains("strict")) local.strict = o.at("strict").get<bool>();
  }
  Outcome inner = execute(command, member(fx, "input"), local);
  std::vector<std::string> mismatches;
  if (fx.contains("expect")) match(fx.at("expect"), inner.body, "", mismatches);
  bool met = mismatches.empty();
  return Outcome{Json{{"fixture", name},
                      {"command", command},
                      {"description", fx.value("description", "")},
                      {"result", inner.body},
                      {"exit_code", inner.exit_code},
                      {"expectations_met", met},
                      {"mismatches", mismatches}},
                 met ? kOk : kVerificationFailed};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    out.push_back("fixtures list");
    out.push_back("fixtures run");
    return out;
  }();
  return names;
}

Outcome execute(const std::string& command, const Json& input, const Options& options) {
  auto it = handlers().find(command);
  if (it == handlers().end())
    return Outcome{io::error_json(Error(ErrorCode::InvalidInput, "unknown command \"" + command + "\"")), kInvalid};
  try {
    Json body = it->second(input, options);
    bool ok = !body.contains("ok") || body.at("ok").get<bool>();
    return Outcome{std::move(body), ok ? kOk : kVerificationFailed};
  } catch (const BudgetExceededError& e) {
    Json body = io::error_json(e);
    body["trace"] = to_json(e.trace());
    return Outcome{std::move(body), kExhausted};
  } catch (const Error& e) {
    return Outcome{io::error_json(e), exit_code_for(e.code())};
  } catch (const Json::exception& e) {
    return Outcome{io::error_json(Error(ErrorCode::InvalidInput, e.what())), kInvalid};
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Valuation-extension invariants and monomial blow-ups over Z^n (lex)", "valext"};
  app.require_subcommand(1);

  Options opt;
  opt.fixtures_dir = default_fixtures_dir();
  std::string input_path, output_path, fixture_name, fixtures_dir;
  std::int64_t bound = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input_path, "JSON input file (default: stdin)");
    sub->add_option("-o,--output", output_path, "write the JSON result here instead of stdout");
    sub->add_option("--budget", opt.budget, "PMT step budget")->check(CLI::PositiveNumber);
    sub->add_option("--bound", bound, "oracle box bound B")->check(CLI::PositiveNumber);
    sub->add_option("--depth", opt.depth, "BFS depth for verify bfs");
    sub->add_flag("--strict", opt.strict, "ext family: fail with InconsistentFamily on any contradiction");
  };

  std::string selected;
  std::map<std::string, std::vector<std::string>> groups{
      {"group", {"index", "epsilon", "cosets", "criterion", "quotient", "chain"}},
      {"blowup", {"pmt", "divide", "normalize2", "reduce-fraction"}},
      {"ext", {"profile", "defect", "family"}},
      {"verify", {"epsilon", "cover", "bfs"}},
  };
  for (const auto& [group, leaves] : groups) {
    CLI::App* g = app.add_subcommand(group, group + " commands");
    g->require_subcommand(1);
    for (const auto& leaf : leaves) {
      CLI::App* sub = g->add_subcommand(leaf);
      common(sub);
      sub->callback([&selected, name = group + " " + leaf] { selected = name; });
    }
  }
  CLI::App* fx = app.add_subcommand("fixtures", "shipped example data");
  fx->require_subcommand(1);
  CLI::App* fx_list = fx->add_subcommand("list");
  fx_list->add_option("--fixtures", fixtures_dir, "fixture directory");
  fx_list->add_option("-o,--output", output_path);
  fx_list->callback([&] { selected = "fixtures list"; });
  CLI::App* fx_run = fx->add_subcommand("run");
  fx_run->add_option("name", fixture_name, "fixture name")->required();
  fx_run->add_option("--fixtures", fixtures_dir, "fixture directory");
  fx_run->add_option("-o,--output", output_path);
  fx_run->callback([&] { selected = "fixtures run"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalid;
  }
  if (bound > 0) opt.bound = bound;
  if (!fixtures_dir.empty()) opt.fixtures_dir = fixtures_dir;

  Outcome outcome;
  try {
    if (selected == "fixtures list") {
      outcome = fixtures_list(opt);
    } else if (selected == "fixtures run") {
      outcome = fixtures_run(fixture_name, opt);
    } else {
      Json input;
      try {
        if (input_path.empty() || input_path == "-") {
          input = Json::parse(in);
        } else {
          std::ifstream f(input_path);
          if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + input_path);
          input = Json::parse(f);
        }
      } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
      }
      outcome = execute(selected, input, opt);
    }
  } catch (const Error& e) {
    outcome = Outcome{io::error_json(e), exit_code_for(e.code())};
  }

  std::string text = outcome.body.dump(2) + "\n";
  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(output_path);
    if (!f) {
      err << "cannot write " << output_path << "\n";
      return kInvalid;
    }
    f << text;
  }
  return outcome.exit_code;
}

}  // namespace valext::cli
