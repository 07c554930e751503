// Command-line front end: JSON on stdout, human summary on stderr.
#include "hivelab/character_tables.hpp"
#include "hivelab/errors.hpp"
#include "hivelab/golden.hpp"
#include "hivelab/horn_mc.hpp"
#include "hivelab/json_io.hpp"
#include "hivelab/kernel.hpp"
#include "hivelab/matriochka.hpp"
#include "hivelab/stretch.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace hivelab;

namespace {

struct TripleArgs {
  int n = 0;
  std::string lam, mu, nu;

  void attach(CLI::App* app, bool with_nu = true) {
    app->add_option("--n", n, "rank of SU(n)")->required();
    app->add_option("--lambda", lam, "Dynkin labels, comma separated")->required();
    app->add_option("--mu", mu, "Dynkin labels, comma separated")->required();
    if (with_nu) app->add_option("--nu", nu, "Dynkin labels, comma separated")->required();
  }
  Weight weight(const std::string& s) const { return Weight(n, parse_int_list(s)); }
  Triple triple() const { return Triple(weight(lam), weight(mu), weight(nu)); }
};

Variant parse_variant(const std::string& s) {
  if (s == "R" || s == "shifted") return Variant::Shifted;
  if (s == "Rhat" || s == "unshifted") return Variant::Unshifted;
  throw ParseError("variant must be R or Rhat, got '" + s + "'");
}

std::vector<double> to_doubles(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

void emit(const Json& j, const std::string& summary) {
  std::cout << j.dump() << '\n';
  if (!summary.empty()) std::cerr << summary << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hive-model LR coefficients, Horn kernels and stretching polynomials"};
  app.require_subcommand(1);
  int threads = 1;
  Count node_limit = 0;
  app.add_option("--threads", threads, "worker threads for counting and sampling")->check(CLI::PositiveNumber);
  app.add_option("--node-limit", node_limit, "backtracking node ceiling (env HIVELAB_NODE_LIMIT)");

  TripleArgs ta;
  bool flag_oracle = false, flag_shifted = false, flag_poly = false;
  std::string method = "closed-form", endpoint = "half", variant = "R", output, csv;
  int s_max = 4, bins = 0;
  std::size_t count = 100000;
  std::uint64_t seed = 1;
  std::string value_text, alpha_text, beta_text;

  auto* lr = app.add_subcommand("lr", "LR multiplicity by hive counting");
  ta.attach(lr);
  lr->add_flag("--oracle", flag_oracle, "also count LR tableaux");

  auto* hives = app.add_subcommand("hives", "enumerate all integral hives");
  ta.attach(hives);
  hives->add_option("--output", output, "write the hive list to this file");

  auto* tensor = app.add_subcommand("tensor", "decompose V_lambda x V_mu");
  ta.attach(tensor, false);

  auto* jn = app.add_subcommand("jn", "kernel J_n");
  ta.attach(jn);
  jn->add_flag("--shifted", flag_shifted, "evaluate at rho-shifted arguments");
  jn->add_option("--method", method, "closed-form | theorem1 | volume")
      ->check(CLI::IsMember({"closed-form", "theorem1", "volume"}));
  jn->add_option("--endpoint", endpoint, "SU(2) endpoint value: open | half")
      ->check(CLI::IsMember({"open", "half"}));

  auto* stretch = app.add_subcommand("stretch", "counts along the stretching ray");
  ta.attach(stretch);
  stretch->add_option("--s-max", s_max, "largest stretching factor")->check(CLI::PositiveNumber);
  stretch->add_flag("--polynomial", flag_poly, "also interpolate the stretching polynomial");

  auto* geometry = app.add_subcommand("geometry", "volume, boundary and interior points");
  ta.attach(geometry);

  auto* rn = app.add_subcommand("rn-table", "stored character expansions");
  int rn_n = 0;
  rn->add_option("--n", rn_n)->required();
  rn->add_option("--variant", variant, "R | Rhat");

  auto* checks = app.add_subcommand("checks", "consistency checks");
  checks->require_subcommand(1);
  int check_n = 0;
  auto* c_lemma3 = checks->add_subcommand("lemma3", "sum of r_kappa dim(kappa)");
  c_lemma3->add_option("--n", check_n)->required();
  auto* c_quant = checks->add_subcommand("quantization", "delta_n * value is integral");
  c_quant->add_option("--n", check_n)->required();
  c_quant->add_option("--value", value_text, "rational p/q")->required();
  auto* c_conj = checks->add_subcommand("conjecture2", "sign of stored coefficients");
  c_conj->add_option("--n", check_n)->required();
  auto* c_loc = checks->add_subcommand("localization", "lattice sum of the density");
  c_loc->add_option("--alpha", alpha_text)->required();
  c_loc->add_option("--beta", beta_text)->required();
  auto* c_mat = checks->add_subcommand("matriochka", "SU(3) multiplicity level sets");
  TripleArgs mat;
  mat.n = 3;
  c_mat->add_option("--lambda", mat.lam)->required();
  c_mat->add_option("--mu", mat.mu)->required();

  auto* sample = app.add_subcommand("sample", "Monte-Carlo spectra of A + B");
  auto* compare = app.add_subcommand("compare-density", "histogram versus analytic density");
  for (auto* sub : {sample, compare}) {
    sub->add_option("--alpha", alpha_text)->required();
    sub->add_option("--beta", beta_text)->required();
    sub->add_option("--count", count)->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed);
    sub->add_option("--csv", csv, "CSV output file");
  }
  compare->add_option("--bins", bins, "bins per free coordinate (default 50 for n=2, 30 for n=3)");

  auto* golden = app.add_subcommand("golden", "run the reference-value suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  HiveOptions& opts = default_hive_options();
  opts.threads = threads;
  if (const char* env = std::getenv("HIVELAB_NODE_LIMIT")) {
    try {
      opts.node_limit = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "HIVELAB_NODE_LIMIT is not a number\n";
      return 2;
    }
  }
  if (node_limit > 0) opts.node_limit = node_limit;

  try {
    if (*lr) {
      Triple t = ta.triple();
      Json j{{"multiplicity", count_hives(t, opts)}};
      if (flag_oracle) j["oracle"] = lr_oracle(t, opts);
      emit(j, "N = " + std::to_string(j["multiplicity"].get<Count>()));
    } else if (*hives) {
      auto list = enumerate_hives(ta.triple(), opts);
      if (!output.empty()) {
        std::ofstream(output) << Json(list).dump() << '\n';
        emit(Json{{"count", list.size()}, {"output", output}}, "");
      } else {
        emit(Json(list), "");
      }
      std::cerr << list.size() << " hives\n";
    } else if (*tensor) {
      auto r = tensor_polytope_report(ta.weight(ta.lam), ta.weight(ta.mu), opts);
      emit(Json(r), std::to_string(r.distinct) + " irreps, total multiplicity " +
                        std::to_string(r.total) + ", max " + std::to_string(r.max));
    } else if (*jn) {
      Triple t = ta.triple();
      Json j;
      if (method == "closed-form") {
        j["value"] = rational_json(jn_closed_form(
            kernel_input(t, flag_shifted), endpoint == "open" ? EndpointMode::Open : EndpointMode::Half));
      } else if (method == "theorem1") {
        auto r = theorem1(t, flag_shifted ? Variant::Shifted : Variant::Unshifted, opts);
        j["value"] = rational_json(r.value);
        for (const auto& term : r.terms)
          j["terms"].push_back({{"kappa", term.kappa}, {"r", rational_json(term.r)}, {"lr_sum", term.lr_sum}});
      } else {
        if (flag_shifted) throw Unsupported("the volume route gives the unshifted kernel only");
        j["value"] = rational_json(jn_via_volume(t, opts));
      }
      j["method"] = method;
      j["shifted"] = flag_shifted;
      emit(j, "J_" + std::to_string(t.n) + " = " + j["value"].get<std::string>());
    } else if (*stretch) {
      Triple t = ta.triple();
      Json j{{"counts", stretched_counts(t, s_max, opts)}};
      if (flag_poly) j["polynomial"] = poly_json(stretching_polynomial(t, opts));
      emit(j, "");
    } else if (*geometry) {
      auto g = geometry_report(ta.triple(), opts);
      emit(Json(g), "P(s) = " + to_string(g.polynomial));
    } else if (*rn) {
      emit(Json(rn_table(rn_n, parse_variant(variant))), "");
    } else if (*checks) {
      if (*c_lemma3) {
        auto r = lemma3_check(check_n);
        emit(Json{{"sum_r_dim", rational_json(r.sum_r_dim)},
                  {"sum_rhat_dim", rational_json(r.sum_rhat_dim)},
                  {"pass", r.pass}},
             r.pass ? "pass" : "FAIL");
      } else if (*c_quant) {
        bool ok = quantization_check(parse_rational(value_text), check_n);
        emit(Json{{"delta", quantization_delta(check_n).get_str()}, {"pass", ok}}, ok ? "pass" : "FAIL");
      } else if (*c_conj) {
        auto r = conjecture2_scan(check_n);
        emit(Json{{"min_r", rational_json(r.min_r)},
                  {"min_rhat", rational_json(r.min_rhat)},
                  {"nonnegative", r.nonnegative}},
             "");
      } else if (*c_loc) {
        auto r = localization_check(parse_int_list(alpha_text), parse_int_list(beta_text));
        emit(Json{{"sum", rational_json(r.sum)},
                  {"target", rational_json(r.target)},
                  {"points", r.points},
                  {"pass", r.pass}},
             r.pass ? "pass" : "FAIL");
      } else if (*c_mat) {
        auto r = matriochka_check(mat.weight(mat.lam), mat.weight(mat.mu), opts);
        Json levels = Json::array();
        for (const auto& l : r.levels)
          levels.push_back({{"m", l.m},
                            {"points", l.points},
                            {"hull_vertices", l.hull_vertices},
                            {"nested", l.nested},
                            {"lattice_convex", l.lattice_convex}});
        emit(Json{{"max_multiplicity", r.max_multiplicity}, {"levels", levels}, {"pass", r.pass}},
             r.pass ? "pass" : "FAIL");
      }
    } else if (*sample || *compare) {
      auto alpha = to_doubles(parse_int_list(alpha_text));
      auto beta = to_doubles(parse_int_list(beta_text));
      auto samples = sample_spectra(alpha, beta, count, seed, threads);
      double trace = max_trace_error(samples, alpha, beta);
      if (*sample) {
        Json j{{"count", samples.size()}, {"seed", seed}, {"max_trace_error", trace}};
        if (!csv.empty()) {
          std::ofstream f(csv);
          write_samples_csv(f, samples);
          j["csv"] = csv;
        } else {
          Json rows = Json::array();
          for (const auto& s : samples) rows.push_back(s.gamma);
          j["samples"] = rows;
        }
        emit(j, "");
      } else {
        int per_axis = bins > 0 ? bins : (alpha.size() == 2 ? 50 : 30);
        auto spec = horn_bounding_bins(alpha, beta, per_axis);
        auto c = compare_density(samples, alpha, beta, spec);
        Json j{{"count", c.samples},
               {"seed", seed},
               {"bins", spec.bins},
               {"lo", spec.lo},
               {"hi", spec.hi},
               {"l1_distance", c.l1_distance},
               {"analytic_total", c.analytic_total},
               {"empirical_outside", c.empirical_outside},
               {"max_trace_error", trace},
               {"empirical", c.empirical},
               {"analytic", c.analytic}};
        if (!csv.empty()) {
          std::ofstream f(csv);
          f << "cell,empirical,analytic\n";
          f.precision(17);
          for (std::size_t i = 0; i < c.empirical.size(); ++i)
            f << i << ',' << c.empirical[i] << ',' << c.analytic[i] << '\n';
          j["csv"] = csv;
        }
        emit(j, "L1 = " + std::to_string(c.l1_distance));
      }
    } else if (*golden) {
      auto results = run_golden_suite(opts);
      Json arr = Json::array();
      bool all = true;
      for (const auto& r : results) {
        arr.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
        all = all && r.pass;
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.actual << '\n';
      }
      emit(Json{{"results", arr}, {"pass", all}}, "");
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    emit(Json{{"error", e.name()}, {"detail", e.what()}}, e.name() + ": " + e.what());
    return 1;
  }
  return 0;
}
