#include "multibase/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "multibase/error.hpp"
#include "multibase/json_io.hpp"
#include "multibase/verify.hpp"

namespace multibase::cli {

namespace {

struct Globals {
  std::string format = "json";
  int digits = 10;
  bool require_exact = false;
};

struct Outcome {
  Json body;
  int code = kExitOk;
};

void require_M(int M) {
  if (M < 1 || M > 1000) throw Error(ErrorCode::ParseError, "M must be in 1..1000, got " + std::to_string(M));
}

std::string seq_text(const DigitSeq& s, int M) { return s.to_string(M); }

void flatten(const Json& j, const std::string& key, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); });
    if (scalars) {
      out << key << ":";
      for (const auto& e : j) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
      out << "\n";
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

int default_digits() {
  if (const char* env = std::getenv("MULTIBASE_DIGITS")) {
    try {
      int d = std::stoi(env);
      if (d >= 1 && d <= 1000) return d;
    } catch (const std::exception&) {
    }
  }
  return 10;
}

Json alpha_json(const AlphaResult& a, int M) {
  Json j;
  j["decided"] = a.decided;
  if (a.decided) {
    j["alpha"] = seq_text(a.seq, M);
    j["admissible"] = is_admissible_alpha(a.seq);
  } else {
    j["status"] = std::string(error_code_name(ErrorCode::HorizonExceeded));
  }
  j["prefix"] = word_to_string(a.prefix, M >= 10);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for expansions in non-integer bases", "multibase"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.digits = default_digits();
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--digits", g.digits, "decimal digits in approximations")->check(CLI::Range(1, 1000));
  app.add_flag("--require-exact", g.require_exact, "exit 3 when a result is undecided");

  std::function<Outcome()> action;

  int M = 0;
  std::string base_spec, seq_spec, x_spec, variant_text, value_at, suite;
  int horizon = kDefaultAlphaHorizon, max_pre = 3, sweep_k = 8, depth = 128, k = 0, j = 0, u = 0, v = 0;
  std::uint64_t branches = 64;
  std::size_t budget = std::size_t{1} << 18;
  bool want_root = false;

  auto digits = [&] { return g.digits; };

  for (std::string name : {"p1", "p2", "q2"}) {
    auto* sub = app.add_subcommand(name, "critical base " + name + "(M)");
    sub->add_option("--M", M)->required();
    sub->callback([&, name] {
      action = [&, name] {
        require_M(M);
        AlgebraicReal q = name == "p1" ? p1(M) : name == "p2" ? p2(M) : q2(M);
        Json body{{"command", name}, {"M", M}};
        body.update(to_json(q, digits()));
        return Outcome{body};
      };
    });
  }

  auto* alpha = app.add_subcommand("alpha", "quasi-greedy expansion of 1");
  alpha->add_option("--M", M)->required();
  alpha->add_option("--base", base_spec)->required();
  alpha->add_option("--horizon", horizon)->check(CLI::Range(1, 100000));
  alpha->callback([&] {
    action = [&] {
      require_M(M);
      BaseContext ctx = make_context(M, parse_base_spec(base_spec), horizon);
      AlphaResult a = quasi_greedy_alpha(ctx, horizon);
      Json body{{"command", "alpha"}, {"M", M}, {"base", to_json(ctx.q, digits())}};
      body.update(alpha_json(a, M));
      return Outcome{body, !a.decided && g.require_exact ? kExitUndecided : kExitOk};
    };
  });

  auto* unique = app.add_subcommand("unique", "test uniqueness of an expansion");
  unique->add_option("--M", M)->required();
  unique->add_option("--base", base_spec)->required();
  unique->add_option("--seq", seq_spec)->required();
  unique->callback([&] {
    action = [&] {
      require_M(M);
      BaseContext ctx = make_context(M, parse_base_spec(base_spec));
      DigitSeq s = DigitSeq::parse(seq_spec);
      if (s.max_digit() > M) throw Error(ErrorCode::DigitOutOfRange, "digit exceeds M");
      bool is_unique = is_unique_expansion(s, ctx);
      return Outcome{Json{{"command", "unique"},
                          {"M", M},
                          {"base", to_json(ctx.q, digits())},
                          {"alpha", seq_text(ctx.alpha_seq(), M)},
                          {"seq", seq_text(s, M)},
                          {"unique", is_unique}}};
    };
  });

  auto* catalog = app.add_subcommand("catalog", "unique expansions in the window");
  catalog->add_option("--M", M)->required();
  catalog->add_option("--base", base_spec)->required();
  catalog->add_option("--max-preperiod", max_pre)->check(CLI::Range(0, 64));
  catalog->callback([&] {
    action = [&] {
      require_M(M);
      BaseContext ctx = make_context(M, parse_base_spec(base_spec));
      Json seqs = Json::array();
      for (const auto& s : unique_set_catalog(ctx, max_pre)) seqs.push_back(seq_text(s, M));
      return Outcome{Json{{"command", "catalog"},
                          {"M", M},
                          {"base", to_json(ctx.q, digits())},
                          {"alpha", seq_text(ctx.alpha_seq(), M)},
                          {"max_preperiod", max_pre},
                          {"count", seqs.size()},
                          {"sequences", seqs}}};
    };
  });

  auto* family = app.add_subcommand("family", "a two-expansion family");
  family->add_option("--M", M)->required();
  family->add_option("--variant", variant_text)->required();
  family->add_option("--k", k)->required();
  family->add_option("--j", j)->required();
  family->add_option("--u", u)->required();
  family->add_option("--v", v)->required();
  auto* root_flag = family->add_flag("--root", want_root, "compute the root above p1");
  family->add_option("--value-at", value_at, "rational or base spec")->excludes(root_flag);
  family->callback([&] {
    action = [&] {
      require_M(M);
      FamilyId id{parse_variant(variant_text), k, j, u, v};
      validate_family(id, M);
      LaurentForm lf = family_laurent(id, M);
      auto [left, right] = family_witness_sequences(id, M);
      Json body{{"command", "family"},
                {"M", M},
                {"family", to_string(id)},
                {"params", to_json(id)},
                {"laurent", {{"numerator", lf.numerator.to_string()}, {"shift", lf.shift}}},
                {"left", seq_text(left, M)},
                {"right", seq_text(right, M)},
                {"has_root", family_has_root(id, M)},
                {"criterion_closed_form", family_criterion_closed_form(id, M)}};
      if (want_root) body["root"] = to_json(family_root(id, M), digits());
      if (!value_at.empty()) {
        if (value_at.find(':') != std::string::npos) {
          AlgebraicReal q = parse_base_spec(value_at);
          body["value_at"] = Json{{"q", to_json(q, digits())}, {"value", to_json(family_value(id, M, q), digits())}};
        } else {
          Rational q = parse_rational(value_at);
          if (q == 0) throw Error(ErrorCode::DivisionByZero, "q = 0");
          Rational val = family_value(id, M, q);
          body["value_at"] = Json{{"q", to_string(q)}, {"value", to_string(val)}, {"decimal", to_decimal(val, digits())}};
        }
      }
      return Outcome{body};
    };
  });

  auto* b2 = app.add_subcommand("enumerate-b2", "bases in (p1, p2] with a two-expansion point");
  b2->add_option("--M", M)->required();
  b2->add_option("--sweep-k", sweep_k)->check(CLI::Range(1, 40));
  b2->callback([&] {
    action = [&] {
      require_M(M);
      Json bases = Json::array();
      for (const auto& w : enumerate_B2_window(M, sweep_k)) {
        bases.push_back(Json{{"base", to_json(w.base, digits())},
                             {"family", to_string(w.family)},
                             {"left", seq_text(w.left_seq, M)},
                             {"right", seq_text(w.right_seq, M)}});
      }
      return Outcome{Json{{"command", "enumerate-b2"},
                          {"M", M},
                          {"sweep_k", sweep_k},
                          {"p1", to_json(p1(M), digits())},
                          {"p2", to_json(p2(M), digits())},
                          {"count", bases.size()},
                          {"bases", bases}}};
    };
  });

  auto* count = app.add_subcommand("count", "count the expansions of a point");
  count->add_option("--M", M)->required();
  count->add_option("--base", base_spec)->required();
  count->add_option("--x", x_spec)->required();
  count->add_option("--depth", depth)->check(CLI::Range(1, 100000));
  count->add_option("--branches", branches)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  count->add_option("--budget", budget, "maximum number of states");
  count->callback([&] {
    action = [&] {
      require_M(M);
      BaseContext ctx = make_context(M, parse_base_spec(base_spec));
      FieldElement x = parse_point(x_spec, ctx);
      CountOptions opt{depth, branches, budget};
      CountResult res = count_expansions(x, ctx, opt);
      Json body{{"command", "count"}, {"M", M}};
      body.update(count_certificate(x_spec, res, ctx));
      body["x"] = to_json(x, digits());
      return Outcome{body, res.kind == CountKind::Undecided && g.require_exact ? kExitUndecided : kExitOk};
    };
  });

  auto* xk = app.add_subcommand("construct-xk", "the point with exactly k expansions at M = 2");
  xk->add_option("--k", k)->required()->check(CLI::Range(1, 10000));
  xk->callback([&] {
    action = [&] {
      ConstructedPoint pt = construct_xk(k);
      return Outcome{Json{{"command", "construct-xk"},
                          {"k", k},
                          {"M", 2},
                          {"base", to_json(pt.ctx.q, digits())},
                          {"seq", seq_text(pt.seq, 2)},
                          {"x", to_json(pt.x, digits())}}};
    };
  });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(names));
  verify->callback([&] {
    action = [&] {
      std::vector<std::string> which = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      Json reports = Json::array();
      bool ok = true;
      for (const auto& s : which) {
        SuiteReport r = run_suite(s);
        ok = ok && r.passed;
        Json checks = Json::array();
        for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        reports.push_back(Json{{"suite", r.suite}, {"passed", r.passed}, {"seconds", r.seconds}, {"checks", checks}});
      }
      Json body{{"command", "verify"}, {"passed", ok}, {"suites", reports}};
      return Outcome{body, ok ? kExitOk : kExitVerifyFailed};
    };
  });

  std::vector<const char*> argv{"multibase"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return kExitInputError;
  }

  try {
    Outcome o = action();
    if (g.format == "text") flatten(o.body, "", out);
    else out << o.body.dump(2) << "\n";
    return o.code;
  } catch (const Error& e) {
    err << Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return e.code() == ErrorCode::VerificationFailed ? kExitVerifyFailed : kExitInputError;
  }
}

}  // namespace multibase::cli
