// Command-line front end: form construction, identity verification,
// group enumeration, measure computation, searches and conjecture
// sweeps, with JSON (default), CSV (searches) or text output.

#include "zetaforms/forms.hpp"
#include "zetaforms/groups.hpp"
#include "zetaforms/measures.hpp"
#include "zetaforms/oddzeta.hpp"
#include "zetaforms/presets.hpp"
#include "zetaforms/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace zf;

namespace {

struct RunConfig {
  unsigned precision = 50;
  std::string format = "json";
  std::string out_path;
};

std::string real_str(const Real& x, int digits = 20) {
  return x.str(digits);
}

json rational_json(const Rational& x) { return to_string(x); }

json form_json(const LinearForm& f) {
  json j = json::object();
  for (const auto& [s, c] : f.coeff) {
    std::string key = s == 0 ? "const" : "zeta" + std::to_string(s);
    j[key] = to_string(c);
  }
  return j;
}

json measure_json(const MeasureReport& r) {
  json j;
  j["tau0"] = real_str(r.tau0.re);
  j["tau1"] = real_str(r.tau1.re);
  j["C0"] = real_str(r.c0);
  j["C1"] = real_str(r.c1);
  j["C2"] = real_str(r.c2);
  j["dpsi_integral"] = real_str(r.dpsi_integral);
  j["invsq_integral_exact"] = to_string(r.invsq_integral);
  j["m1"] = r.m1;
  j["m2"] = r.m2;
  j["m3"] = r.m3;
  j["orbit_size"] = r.orbit_size;
  if (r.mu) j["mu"] = real_str(*r.mu);
  j["verdict"] = r.verdict == Verdict::measure ? "measure" : "no-conclusion";
  return j;
}

int emit(const RunConfig& cfg, const std::string& command, const json& inputs,
         const json& exact, const json& numeric, const json& verdicts, double ms,
         const std::string& text_summary) {
  json out;
  out["command"] = command;
  out["inputs"] = inputs;
  out["exact"] = exact;
  json num = numeric;
  num["precision"] = cfg.precision;
  out["numeric"] = num;
  out["verdicts"] = verdicts;
  out["timings"] = {{"total_ms", ms}};

  std::string payload =
      cfg.format == "text" ? text_summary + "\n" : out.dump(2) + "\n";
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    f << payload;
  } else {
    std::cout << payload;
  }
  return 0;
}

Direction33 parse_d33(const std::vector<long>& alpha, const std::vector<long>& beta,
                      const std::string& preset) {
  if (!preset.empty()) {
    if (preset == "rv-zeta3") return presets::rv_zeta3();
    if (preset == "hata") return presets::hata();
    throw InvalidParams("unknown zeta(3) direction preset: " + preset);
  }
  if (alpha.size() != 4 || beta.size() != 4)
    throw InvalidParams("expected --alpha a1 a2 a3 a4 and --beta b1 b2 b3 b4");
  return Direction33{{alpha[0], alpha[1], alpha[2], alpha[3]},
                     {beta[0], beta[1], beta[2], beta[3]}};
}

Direction32 parse_d32(const std::vector<long>& alpha, const std::vector<long>& beta,
                      const std::string& preset) {
  if (!preset.empty()) {
    if (preset == "rv-zeta2") return presets::rv_zeta2();
    throw InvalidParams("unknown zeta(2) direction preset: " + preset);
  }
  if (alpha.size() != 3 || beta.size() != 3)
    throw InvalidParams("expected --alpha a1 a2 a3 and --beta b1 b2 b3");
  return Direction32{{alpha[0], alpha[1], alpha[2]}, {beta[0], beta[1], beta[2]}};
}

DirectionEta parse_eta(long r, long q, const std::vector<long>& eta,
                       const std::string& preset) {
  if (!preset.empty()) {
    presets::EtaPreset p;
    if (preset == "theorem3")
      p = presets::theorem3();
    else if (preset == "zu4-eight")
      p = presets::zu4_eight();
    else
      throw InvalidParams("unknown eta preset: " + preset);
    return DirectionEta{p.r, p.q, p.eta};
  }
  DirectionEta d{r, q, eta};
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hypergeometric linear forms in zeta values"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("ZETAFORMS_PRECISION")) cfg.precision = unsigned(std::atoi(env));
  app.add_option("--precision", cfg.precision, "working precision in decimal digits (>= 20)");
  app.add_option("--format", cfg.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_path, "output file (default stdout)");

  // shared option storage
  std::vector<long> opt_a, opt_b, opt_alpha, opt_beta, opt_h, opt_eta;
  std::string opt_preset, opt_kind = "z3", opt_orbit = "full";
  long opt_n = 1, opt_k = 5, opt_r = 3, opt_q = 13, opt_h0 = 0, opt_bound = 30,
       opt_keep = 10, opt_sweep_max = 0;
  bool opt_count_only = false, opt_relaxed = false;
  unsigned opt_digits = 14;

  auto add_ab = [&](CLI::App* c, size_t na) {
    c->add_option("--a", opt_a, "numerator parameters")->expected(int(na));
    c->add_option("--b", opt_b, "denominator parameters")->expected(int(na));
    c->add_option("--preset", opt_preset, "named preset");
    c->add_option("--n", opt_n, "scale for preset parameter families");
  };

  auto* c_form_z3 = app.add_subcommand("form-z3", "zeta(3) linear form from (a, b)");
  add_ab(c_form_z3, 4);
  auto* c_form_z2 = app.add_subcommand("form-z2", "zeta(2) linear form from (a, b)");
  add_ab(c_form_z2, 3);

  auto* c_form_odd = app.add_subcommand("form-odd", "well-poised odd zeta form");
  c_form_odd->set_help_flag("--help", "print help");
  c_form_odd->add_option("--r", opt_r, "odd derivative order");
  c_form_odd->add_option("--q", opt_q, "odd parameter count");
  c_form_odd->add_option("--h0", opt_h0, "h_0");
  c_form_odd->add_option("--h", opt_h, "h_1 .. h_q");
  c_form_odd->add_option("--preset", opt_preset, "eta preset evaluated at --n");
  c_form_odd->add_option("--n", opt_n, "scale");

  auto* c_apery = app.add_subcommand("apery", "Apery form at n");
  c_apery->add_option("--n", opt_n, "index")->required();
  auto* c_ball = app.add_subcommand("ball", "Ball well-poised form at n");
  c_ball->add_option("--n", opt_n, "index")->required();

  auto* c_bailey = app.add_subcommand("verify-bailey", "check the 7F6 identity");
  add_ab(c_bailey, 4);
  c_bailey->add_option("--digits", opt_digits, "residual tolerance 10^-digits");
  auto* c_whipple = app.add_subcommand("verify-whipple", "check the 6F5(-1) identity");
  add_ab(c_whipple, 3);
  c_whipple->add_option("--digits", opt_digits, "residual tolerance 10^-digits");

  auto* c_group = app.add_subcommand("group", "enumerate the permutation group");
  c_group->add_option("--kind", opt_kind, "z3 | z2")->check(CLI::IsMember({"z3", "z2"}));
  c_group->add_flag("--count-only", opt_count_only, "print only the order");

  auto* c_orbit = app.add_subcommand("orbit", "orbit collections of a direction");
  c_orbit->add_option("--kind", opt_kind, "z3 | z2")->check(CLI::IsMember({"z3", "z2"}));
  c_orbit->add_option("--alpha", opt_alpha, "direction alpha");
  c_orbit->add_option("--beta", opt_beta, "direction beta");
  c_orbit->add_option("--preset", opt_preset, "rv-zeta3 | rv-zeta2 | hata");
  c_orbit->add_option("--orbit", opt_orbit, "full | trivial");

  auto* c_mz3 = app.add_subcommand("measure-z3", "irrationality measure, zeta(3)");
  c_mz3->add_option("--alpha", opt_alpha, "alpha")->expected(4);
  c_mz3->add_option("--beta", opt_beta, "beta")->expected(4);
  c_mz3->add_option("--preset", opt_preset, "rv-zeta3 | hata");
  c_mz3->add_option("--orbit", opt_orbit, "full | trivial");

  auto* c_mz2 = app.add_subcommand("measure-z2", "irrationality measure, zeta(2)");
  c_mz2->add_option("--alpha", opt_alpha, "alpha")->expected(3);
  c_mz2->add_option("--beta", opt_beta, "beta")->expected(3);
  c_mz2->add_option("--preset", opt_preset, "rv-zeta2");

  auto* c_modd = app.add_subcommand("measure-odd", "odd zeta irrationality verdict");
  c_modd->add_option("--r", opt_r, "r (odd)");
  c_modd->add_option("--q", opt_q, "q (odd)");
  c_modd->add_option("--eta", opt_eta, "eta_0 .. eta_q");
  c_modd->add_option("--preset", opt_preset, "theorem3 | zu4-eight");

  app.add_subcommand("theorem1", "reproduce the zeta(3) record");
  app.add_subcommand("theorem2", "reproduce the zeta(2) record");
  app.add_subcommand("theorem3", "reproduce the four-odd-zeta verdict");

  auto* c_search = app.add_subcommand("search", "direction search");
  c_search->add_option("--kind", opt_kind, "z3 | z2")->check(CLI::IsMember({"z3", "z2"}));
  c_search->add_option("--bound", opt_bound, "sum bound");
  c_search->add_option("--keep", opt_keep, "ranking size");
  c_search->add_option("--orbit", opt_orbit, "full | trivial");
  c_search->add_flag("--relaxed", opt_relaxed, "allow sum(alpha) <= sum(beta)");

  auto* c_fkn = app.add_subcommand("fkn", "the F_{k,n} linear form");
  c_fkn->add_option("--k", opt_k, "odd k >= 3")->required();
  c_fkn->add_option("--n", opt_n, "index")->required();

  auto* c_slope = app.add_subcommand("slope", "log |F_{k,n}| / n");
  c_slope->add_option("--k", opt_k, "odd k >= 3")->required();
  c_slope->add_option("--n", opt_n, "index")->required();

  auto* c_conj = app.add_subcommand("conjecture", "contiguous-set conjecture checks");
  c_conj->set_help_flag("--help", "print help");
  c_conj->add_option("--r", opt_r, "r (odd)");
  c_conj->add_option("--q", opt_q, "q (odd)");
  c_conj->add_option("--h0", opt_h0, "single h_0 (with --h)");
  c_conj->add_option("--h", opt_h, "h_1 .. h_q");
  c_conj->add_option("--sweep-h0", opt_sweep_max, "sweep all h with h_0 up to this bound");

  CLI11_PARSE(app, argc, argv);

  if (cfg.precision < 20) {
    std::cerr << "precision must be at least 20 digits\n";
    return 2;
  }
  set_working_digits(cfg.precision);
  auto t_start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t_start)
        .count();
  };

  try {
    if (c_form_z3->parsed() || c_apery->parsed()) {
      ParamSet33 p;
      if (c_apery->parsed() || opt_preset == "apery") {
        p = presets::apery(opt_n);
      } else if (opt_preset == "rv-zeta3") {
        p = presets::rv_zeta3().at(opt_n);
      } else if (opt_preset == "hata") {
        p = presets::hata().at(opt_n);
      } else if (!opt_a.empty()) {
        p = ParamSet33{{opt_a[0], opt_a[1], opt_a[2], opt_a[3]},
                       {opt_b[0], opt_b[1], opt_b[2], opt_b[3]}};
      } else {
        throw InvalidParams("provide --a/--b or --preset");
      }
      FormZ3 f = build_form_z3(p);
      auto rep = check_integrality_z3(f);
      json exact;
      exact["A"] = f.A.str();
      exact["B"] = to_string(f.B);
      exact["form"] = form_json(f.form);
      exact["integrality"] = {{"m1", rep.m1},
                              {"m2", rep.m2},
                              {"multiplier", rep.multiplier.str()},
                              {"B_denominator", rep.b_denominator.str()},
                              {"cleared", rep.ok()}};
      json numeric;
      numeric["value"] = real_str(f.form.value(cfg.precision - 10));
      json verdicts = json::array();
      verdicts.push_back(rep.ok() ? "denominator-cleared" : "denominator-not-cleared");
      int rc = emit(cfg, c_apery->parsed() ? "apery" : "form-z3",
                    {{"a", opt_a}, {"b", opt_b}, {"preset", opt_preset}, {"n", opt_n}},
                    exact, numeric, verdicts, elapsed(),
                    "2A = " + to_string(2 * Rational(f.A)) + ", B = " + to_string(f.B));
      return rep.ok() ? rc : 1;
    }

    if (c_form_z2->parsed()) {
      ParamSet32 p;
      if (opt_preset == "apery") {
        p = presets::apery_z2(opt_n);
      } else if (opt_preset == "rv-zeta2") {
        p = presets::rv_zeta2().at(opt_n);
      } else if (!opt_a.empty()) {
        p = ParamSet32{{opt_a[0], opt_a[1], opt_a[2]}, {opt_b[0], opt_b[1], opt_b[2]}};
      } else {
        throw InvalidParams("provide --a/--b or --preset");
      }
      FormZ2 f = build_form_z2(p);
      auto rep = check_integrality_z2(f);
      json exact;
      exact["A"] = f.A.str();
      exact["B"] = to_string(f.B);
      exact["form"] = form_json(f.form);
      exact["integrality"] = {{"m1", rep.m1},
                              {"m2", rep.m2},
                              {"multiplier", rep.multiplier.str()},
                              {"cleared", rep.ok()}};
      json numeric;
      numeric["value"] = real_str(f.form.value(cfg.precision - 10));
      int rc = emit(cfg, "form-z2",
                    {{"a", opt_a}, {"b", opt_b}, {"preset", opt_preset}, {"n", opt_n}},
                    exact, numeric, json::array(), elapsed(),
                    "A = " + f.A.str() + ", B = " + to_string(f.B));
      return rep.ok() ? rc : 1;
    }

    if (c_form_odd->parsed() || c_ball->parsed()) {
      WellPoisedParams p;
      if (c_ball->parsed()) {
        p = fkn_params(3, opt_n);
      } else if (!opt_preset.empty()) {
        p = parse_eta(opt_r, opt_q, opt_eta, opt_preset).at(opt_n);
      } else {
        p.r = opt_r;
        p.q = opt_q;
        p.h0 = opt_h0;
        p.h = opt_h;
      }
      OddForm f = build_form_odd(p);
      json exact;
      exact["form"] = form_json(f.form);
      json verdicts = json::array();
      if (c_ball->parsed()) {
        LinearForm ap = linear_form_z3(presets::apery(opt_n));
        verdicts.push_back(f.form == ap ? "coincides-with-apery" : "differs-from-apery");
      }
      json numeric;
      numeric["value"] = real_str(f.form.value(cfg.precision - 10));
      return emit(cfg, c_ball->parsed() ? "ball" : "form-odd",
                  {{"r", p.r}, {"q", p.q}, {"h0", p.h0}, {"h", p.h}}, exact, numeric,
                  verdicts, elapsed(), "form computed");
    }

    if (c_bailey->parsed()) {
      ParamSet33 p;
      if (opt_preset == "apery")
        p = presets::apery(opt_n);
      else if (opt_preset == "rv-zeta3")
        p = presets::rv_zeta3().at(opt_n);
      else if (!opt_a.empty())
        p = ParamSet33{{opt_a[0], opt_a[1], opt_a[2], opt_a[3]},
                       {opt_b[0], opt_b[1], opt_b[2], opt_b[3]}};
      else
        throw InvalidParams("provide --a/--b or --preset");
      auto chk = verify_bailey(p, opt_digits);
      bool ok = chk.ok(opt_digits);
      json numeric = {{"lhs", real_str(chk.lhs)},
                      {"rhs", real_str(chk.rhs)},
                      {"residual", real_str(chk.residual)}};
      json verdicts = json::array({ok ? "identity-verified" : "identity-failed"});
      int rc = emit(cfg, "verify-bailey",
                    {{"a", opt_a}, {"b", opt_b}, {"preset", opt_preset}, {"n", opt_n}},
                    json::object(), numeric, verdicts, elapsed(),
                    "residual " + real_str(chk.residual, 6));
      return ok ? rc : 1;
    }

    if (c_whipple->parsed()) {
      ParamSet32 p;
      if (opt_preset == "apery")
        p = presets::apery_z2(opt_n);
      else if (opt_preset == "rv-zeta2")
        p = presets::rv_zeta2().at(opt_n);
      else if (!opt_a.empty())
        p = ParamSet32{{opt_a[0], opt_a[1], opt_a[2]}, {opt_b[0], opt_b[1], opt_b[2]}};
      else
        throw InvalidParams("provide --a/--b or --preset");
      auto chk = verify_whipple(p, opt_digits);
      bool ok = chk.ok(opt_digits);
      json numeric = {{"lhs", real_str(chk.lhs)},
                      {"rhs", real_str(chk.rhs)},
                      {"residual", real_str(chk.residual)}};
      json verdicts = json::array({ok ? "identity-verified" : "identity-failed"});
      int rc = emit(cfg, "verify-whipple",
                    {{"a", opt_a}, {"b", opt_b}, {"preset", opt_preset}, {"n", opt_n}},
                    json::object(), numeric, verdicts, elapsed(),
                    "residual " + real_str(chk.residual, 6));
      return ok ? rc : 1;
    }

    if (c_group->parsed()) {
      size_t order = 0, sub = 0;
      if (opt_kind == "z3") {
        std::vector<Perm> gens;
        for (Gen g : {Gen::A1, Gen::A2, Gen::A3, Gen::B, Gen::H}) gens.push_back(z3_perm(g));
        order = group_closure(gens).size();
        std::vector<Perm> g1;
        for (Gen g : {Gen::A1, Gen::A2, Gen::A3, Gen::B}) g1.push_back(z3_perm(g));
        g1.push_back(z3_perm_b12());
        sub = group_closure(g1).size();
      } else {
        std::vector<Perm> gens;
        for (GenZ2 g : {GenZ2::A1, GenZ2::A2, GenZ2::B, GenZ2::H})
          gens.push_back(z2_perm(g));
        order = group_closure(gens).size();
      }
      if (opt_count_only) {
        std::cout << order << "\n";
        return 0;
      }
      json exact = {{"order", order}};
      if (opt_kind == "z3") exact["subgroup_g1_order"] = sub;
      return emit(cfg, "group", {{"kind", opt_kind}}, exact, json::object(), json::array(),
                  elapsed(), "order " + std::to_string(order));
    }

    if (c_orbit->parsed()) {
      json exact;
      if (opt_kind == "z3") {
        Direction33 d = parse_d33(opt_alpha, opt_beta, opt_preset);
        OrbitMode mode = opt_orbit == "trivial" ? OrbitMode::ab_trivial : OrbitMode::full;
        OrbitZ3 orb = orbit_z3(d, mode);
        exact["m0_distinct"] = orb.count_distinct_m0();
        exact["m_distinct"] = orb.count_distinct_m();
        exact["m1"] = orb.m1;
        exact["m2"] = orb.m2;
        exact["m3"] = orb.m3;
        json cols = json::array();
        for (const auto& e : orb.m0) {
          auto nrm = e.dir.normalized();
          cols.push_back(std::vector<long>(nrm.begin(), nrm.end()));
        }
        exact["collections"] = cols;
      } else {
        Direction32 d = parse_d32(opt_alpha, opt_beta, opt_preset);
        OrbitZ2 orb = orbit_z2(d);
        exact["m_distinct"] = orb.count_distinct();
        exact["m1"] = orb.m1;
        exact["m2"] = orb.m2;
        exact["m3"] = orb.m3;
      }
      return emit(cfg, "orbit",
                  {{"kind", opt_kind}, {"preset", opt_preset}, {"alpha", opt_alpha},
                   {"beta", opt_beta}},
                  exact, json::object(), json::array(), elapsed(), exact.dump());
    }

    auto run_measure_z3 = [&](const Direction33& d, OrbitMode mode, const char* name) {
      MeasureReport r = measure_z3(d, mode, cfg.precision - 20);
      json verdicts = json::array();
      verdicts.push_back(r.verdict == Verdict::measure ? "measure" : "no-conclusion");
      return emit(cfg, name,
                  {{"alpha", std::vector<long>(d.alpha.begin(), d.alpha.end())},
                   {"beta", std::vector<long>(d.beta.begin(), d.beta.end())},
                   {"orbit", mode == OrbitMode::full ? "full" : "trivial"}},
                  {{"invsq_integral", to_string(r.invsq_integral)}}, measure_json(r),
                  verdicts, elapsed(),
                  r.mu ? "mu <= " + real_str(*r.mu, 12) : "no conclusion");
    };

    if (c_mz3->parsed()) {
      Direction33 d = parse_d33(opt_alpha, opt_beta, opt_preset);
      OrbitMode mode = (opt_orbit == "trivial" || opt_preset == "hata")
                           ? OrbitMode::ab_trivial
                           : OrbitMode::full;
      return run_measure_z3(d, mode, "measure-z3");
    }
    if (app.get_subcommand("theorem1")->parsed())
      return run_measure_z3(presets::rv_zeta3(), OrbitMode::full, "theorem1");

    auto run_measure_z2 = [&](const Direction32& d, const char* name) {
      MeasureReport r = measure_z2(d, cfg.precision - 20);
      json verdicts = json::array();
      verdicts.push_back(r.verdict == Verdict::measure ? "measure" : "no-conclusion");
      return emit(cfg, name,
                  {{"alpha", std::vector<long>(d.alpha.begin(), d.alpha.end())},
                   {"beta", std::vector<long>(d.beta.begin(), d.beta.end())}},
                  {{"invsq_integral", to_string(r.invsq_integral)}}, measure_json(r),
                  verdicts, elapsed(),
                  r.mu ? "mu <= " + real_str(*r.mu, 12) : "no conclusion");
    };

    if (c_mz2->parsed()) return run_measure_z2(parse_d32(opt_alpha, opt_beta, opt_preset), "measure-z2");
    if (app.get_subcommand("theorem2")->parsed())
      return run_measure_z2(presets::rv_zeta2(), "theorem2");

    auto run_measure_odd = [&](const DirectionEta& d, const char* name) {
      OddMeasureReport r = measure_odd(d, cfg.precision - 20);
      json numeric;
      numeric["tau0_re"] = real_str(r.tau0.re);
      numeric["tau0_im"] = real_str(r.tau0.im);
      numeric["C0"] = real_str(r.c0);
      numeric["C2"] = real_str(r.c2);
      numeric["dpsi_integral"] = real_str(r.dpsi_integral);
      json verdicts = json::array();
      if (r.irrational)
        verdicts.push_back("at least one of zeta(" + std::to_string(r.zeta_lo) + ").." +
                           "zeta(" + std::to_string(r.zeta_hi) + ") is irrational");
      else
        verdicts.push_back("no-conclusion");
      if (!r.hypotheses_ok) verdicts.push_back("saddle-hypotheses-flagged");
      return emit(cfg, name, {{"r", d.r}, {"q", d.q}, {"eta", d.eta}},
                  {{"m", r.m}, {"invsq_integral", to_string(r.invsq_integral)}}, numeric,
                  verdicts, elapsed(), verdicts[0].get<std::string>());
    };

    if (c_modd->parsed()) return run_measure_odd(parse_eta(opt_r, opt_q, opt_eta, opt_preset), "measure-odd");
    if (app.get_subcommand("theorem3")->parsed())
      return run_measure_odd(parse_eta(0, 0, {}, "theorem3"), "theorem3");

    if (c_search->parsed()) {
      std::string csv;
      json rows = json::array();
      if (opt_kind == "z3") {
        OrbitMode mode = opt_orbit == "trivial" ? OrbitMode::ab_trivial : OrbitMode::full;
        auto hits = search_directions_z3(opt_bound, mode, opt_relaxed, size_t(opt_keep));
        csv = "rank,mu,c0,c1,c2,alpha1,alpha2,alpha3,alpha4,beta1,beta2,beta3,beta4\n";
        int rank = 1;
        for (const auto& h : hits) {
          csv += std::to_string(rank) + "," + std::to_string(h.mu) + "," +
                 std::to_string(h.c0) + "," + std::to_string(h.c1) + "," +
                 std::to_string(h.c2);
          for (long v : h.canon) csv += "," + std::to_string(v);
          csv += "\n";
          rows.push_back({{"mu", h.mu}, {"canon", std::vector<long>(h.canon.begin(), h.canon.end())}});
          ++rank;
        }
      } else {
        auto hits = search_directions_z2(opt_bound, size_t(opt_keep));
        csv = "rank,mu,alpha1,alpha2,alpha3,beta1,beta2,beta3\n";
        int rank = 1;
        for (const auto& h : hits) {
          csv += std::to_string(rank) + "," + std::to_string(h.mu);
          for (long v : h.canon) csv += "," + std::to_string(v);
          csv += "\n";
          rows.push_back({{"mu", h.mu}, {"canon", std::vector<long>(h.canon.begin(), h.canon.end())}});
          ++rank;
        }
      }
      if (cfg.format == "csv" || cfg.format == "text") {
        if (!cfg.out_path.empty()) {
          std::ofstream f(cfg.out_path);
          f << csv;
        } else {
          std::cout << csv;
        }
        return 0;
      }
      return emit(cfg, "search", {{"kind", opt_kind}, {"bound", opt_bound}},
                  {{"ranking", rows}}, json::object(), json::array(), elapsed(), csv);
    }

    if (c_fkn->parsed()) {
      LinearForm f = f_kn(opt_k, opt_n);
      json exact = form_json(f);
      json numeric;
      numeric["value"] = real_str(f.value(cfg.precision - 10));
      return emit(cfg, "fkn", {{"k", opt_k}, {"n", opt_n}}, exact, numeric, json::array(),
                  elapsed(), exact.dump());
    }

    if (c_slope->parsed()) {
      double s = asymptotic_slope(opt_k, opt_n);
      json numeric = {{"slope", s}};
      if (opt_k == 5) numeric["limit_reference"] = -6.38364071;
      return emit(cfg, "slope", {{"k", opt_k}, {"n", opt_n}}, json::object(), numeric,
                  json::array(), elapsed(), "slope " + std::to_string(s));
    }

    if (c_conj->parsed()) {
      json results = json::array();
      bool all_ok = true;
      if (opt_sweep_max > 0) {
        long checked = 0;
        json counterexamples = json::array();
        for (long h0 = 2; h0 <= opt_sweep_max; ++h0) {
          std::vector<long> h(size_t(opt_q), 1);
          while (true) {
            WellPoisedParams p{opt_r, opt_q, h0, h};
            bool valid = true;
            try {
              p.validate();
            } catch (const InvalidParams&) {
              valid = false;
            }
            if (valid) {
              auto res = conjecture_check(p);
              ++checked;
              if (!res.ok) {
                all_ok = false;
                counterexamples.push_back(
                    {{"h0", h0}, {"h", h}, {"prime", res.failing_prime}});
              }
            }
            int i = int(opt_q) - 1;
            while (i >= 0 && h[size_t(i)] == h0 / 2) --i;
            if (i < 0) break;
            ++h[size_t(i)];
            for (size_t j = size_t(i) + 1; j < h.size(); ++j) h[j] = h[size_t(i)];
          }
        }
        results.push_back({{"checked", checked}, {"counterexamples", counterexamples}});
      } else {
        WellPoisedParams p{opt_r, opt_q, opt_h0, opt_h};
        auto res = conjecture_check(p);
        all_ok = res.ok;
        results.push_back({{"ok", res.ok},
                           {"maxima", res.maxima},
                           {"multiplier", res.multiplier.str()},
                           {"failing_prime", res.failing_prime}});
      }
      return emit(cfg, "conjecture", {{"r", opt_r}, {"q", opt_q}}, {{"results", results}},
                  json::object(),
                  json::array({all_ok ? "no-counterexample" : "counterexample-found"}),
                  elapsed(), all_ok ? "no counterexample" : "counterexample found");
    }
  } catch (const InvalidParams& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
