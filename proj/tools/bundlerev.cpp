// Command-line front end. Exit codes: 0 success, 1 reproduction failure,
// 2 input error.

#include <bundlerev/buyer.hpp>
#include <bundlerev/constructions.hpp>
#include <bundlerev/continuous.hpp>
#include <bundlerev/io.hpp>
#include <bundlerev/randomized.hpp>
#include <bundlerev/render.hpp>
#include <bundlerev/reproduce.hpp>
#include <bundlerev/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace bundlerev;
using nlohmann::json;

constexpr int kOk = 0, kReproductionFailure = 1, kInputError = 2;

enum class Format { text, json, csv };

struct Output {
  std::string path;
  Format format = Format::text;

  void write(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(path);
    if (!out) throw InputError(path, "cannot write file");
    out << body;
  }
};

void add_output(CLI::App* cmd, Output& out, bool with_format = true) {
  if (with_format)
    cmd->add_option("--format", out.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}));
  cmd->add_option("--out", out.path, "Write to this file instead of stdout");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string bundle_label(std::uint32_t mask) { return mask == 0 ? "{}" : "{" + Bundle(mask).key() + "}"; }

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string menu, dist;
  Output out;
};

int run_eval(const EvalArgs& a) {
  const Menu m = load_menu(a.menu);
  const JointDistribution d = load_distribution(a.dist);
  if (m.items() != d.items()) throw InputError(a.menu, "menu has " + std::to_string(m.items()) + " items, distribution has " + std::to_string(d.items()));
  const Rational revenue = expected_revenue(m, d);
  const auto by_mask = sale_probabilities(m, d);
  std::vector<std::pair<std::uint32_t, Rational>> sales;  // nothing first, then canonical order
  auto prob_of = [&](std::uint32_t mask) {
    const auto it = by_mask.find(mask);
    return it == by_mask.end() ? Rational(0) : it->second;
  };
  sales.emplace_back(0, prob_of(0));
  for (Bundle b : canonical_bundles(m.items())) sales.emplace_back(b.mask(), prob_of(b.mask()));
  std::ostringstream s;
  switch (a.out.format) {
    case Format::json: {
      json probs = json::array();
      for (const auto& [mask, p] : sales) probs.push_back({{"bundle", bundle_label(mask)}, {"probability", to_string(p)}});
      json doc{{"menu", m.to_string()}, {"revenue", to_string(revenue)}, {"decimal", to_decimal(revenue).text}, {"sale_probabilities", probs}};
      s << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      s << "bundle,price,sale_probability\n";
      for (const auto& [mask, p] : sales)
        s << csv_field(bundle_label(mask)) << ',' << (mask ? to_string(m.price(Bundle(mask))) : "0") << ',' << to_string(p) << '\n';
      s << "revenue,," << to_string(revenue) << '\n';
      break;
    case Format::text:
      s << "menu     " << m.to_string() << '\n' << "revenue  " << to_display(revenue) << '\n';
      for (const auto& [mask, p] : sales) s << "  Pr[buy " << bundle_label(mask) << "] = " << to_display(p) << '\n';
      break;
  }
  a.out.write(s.str());
  return kOk;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string dist;
  std::vector<std::string> constraints;
  std::string grid = "integer";
  std::vector<std::string> max_prices;
  bool serial = false, no_pruning = false;
  Output out;
};

CandidateGrid load_grid_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open grid file");
  try {
    const json doc = read_json(in);
    const auto& order = canonical_bundles(n);
    if (!doc.contains("sets")) throw InputError("sets", "missing field \"sets\"");
    const json& sets = doc["sets"];
    std::vector<std::vector<Rational>> ordered(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::string key = order[k].key();
      const json* node = sets.is_array() ? (k < sets.size() ? &sets[k] : nullptr) : (sets.contains(key) ? &sets[key] : nullptr);
      if (!node || !node->is_array()) throw InputError("sets", "missing candidate list for bundle \"" + key + "\"");
      for (std::size_t j = 0; j < node->size(); ++j)
        ordered[k].push_back(parse_rational_field((*node)[j], "sets[\"" + key + "\"][" + std::to_string(j) + "]"));
    }
    return explicit_grid(n, std::move(ordered));
  } catch (const InputError& e) {
    throw InputError(path, e.what());
  }
}

int run_search(const SearchArgs& a) {
  const JointDistribution d = load_distribution(a.dist);
  CandidateGrid g = a.grid == "integer"        ? candidate_grid(d, GridMode::integer)
                    : a.grid == "support-sums" ? candidate_grid(d, GridMode::support_sums)
                                               : load_grid_file(a.grid, d.items());
  for (const auto& spec : a.max_prices) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw InputError("--max-price", "expected BUNDLE=PRICE such as 1,2=12, got '" + spec + "'");
    g = [&] {
      CandidateGrid copy = g;
      override_max_price(copy, Bundle::from_key(spec.substr(0, eq), d.items()), parse_rational(spec.substr(eq + 1)));
      return copy;
    }();
  }
  std::vector<SearchConstraint> constraints;
  for (const auto& c : a.constraints) constraints.push_back(parse_constraint(c));
  if (constraints.empty()) constraints.push_back(SearchConstraint::unrestricted);

  SearchOptions opts;
  opts.monotone_pruning = !a.no_pruning;
  std::vector<SearchResult> results;
  for (auto c : constraints) results.push_back(a.serial ? search_optimal_serial(d, c, g, opts) : search_optimal(d, c, g, opts));

  std::ostringstream s;
  switch (a.out.format) {
    case Format::json: {
      json rows = json::array();
      for (const auto& r : results)
        rows.push_back({{"constraint", to_string(r.constraint)},
                        {"grid", to_string(r.mode)},
                        {"menu", r.best.to_string()},
                        {"prices", to_json(r.best)["prices"]},
                        {"revenue", to_string(r.revenue)},
                        {"decimal", to_decimal(r.revenue).text},
                        {"menus_examined", r.menus_examined},
                        {"pruned", r.pruned},
                        {"seconds", r.seconds}});
      s << rows.dump(2) << '\n';
      break;
    }
    case Format::csv:
      s << "constraint,menu,revenue,decimal,menus_examined,seconds\n";
      for (const auto& r : results)
        s << to_string(r.constraint) << ',' << csv_field(r.best.to_string()) << ',' << to_string(r.revenue) << ','
          << to_decimal(r.revenue).text << ',' << r.menus_examined << ',' << fixed(r.seconds) << '\n';
      break;
    case Format::text:
      for (const auto& r : results)
        s << to_string(r.constraint) << ": " << r.best.to_string() << "  revenue " << to_display(r.revenue) << "  ("
          << r.menus_examined << " menus, " << fixed(r.seconds, 3) << " s)\n";
      break;
  }
  a.out.write(s.str());
  return kOk;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind, menu, dist;
  Output out;
};

int run_construct(const ConstructArgs& a) {
  const Menu m = load_menu(a.menu);
  const JointDistribution d = load_distribution(a.dist);
  if (m.items() != 2 || d.items() != 2) throw InputError("", "constructions need two-item menus and distributions");
  json doc;
  if (a.kind == "three-halves") {
    const auto split = three_halves_decomposition(m);
    const Rational rm = expected_revenue(m, d), ra = expected_revenue(split.additive, d), rb = expected_revenue(split.bundle_only, d);
    doc = {{"construction", "three-halves"},
           {"input", m.to_string()},
           {"input_revenue", to_string(rm)},
           {"additive", split.additive.to_string()},
           {"additive_revenue", to_string(ra)},
           {"bundle_only", split.bundle_only.to_string()},
           {"bundle_only_revenue", to_string(rb)},
           {"margin", to_string(ra + rb / 2 - rm)}};
  } else {
    const auto f1 = d.marginal(0), f2 = d.marginal(1);
    if (!(product({f1, f2}) == d)) throw InputError(a.dist, "this construction needs independent item values");
    if (a.kind == "symmetrize" && !(f1 == f2)) throw InputError(a.dist, "symmetrize needs identically distributed items");
    doc = (a.kind == "submodularize" ? submodularize2(m, f1, f2) : symmetrize2(m, f1)).to_json();
  }
  a.out.write(doc.dump(2) + '\n');
  return kOk;
}

// ---------------------------------------------------------------------------

struct ReproduceArgs {
  std::vector<std::string> targets;
  bool all = false;
  std::size_t cases = 1000;
  std::uint64_t seed = ReproduceOptions{}.seed;
  Output out;
};

int run_reproduce(const ReproduceArgs& a) {
  std::vector<std::string> targets = a.all ? reproduction_targets() : a.targets;
  if (targets.empty()) throw InputError("", "name a target or pass --all");
  ReproduceOptions opts;
  opts.property_cases = a.cases;
  opts.seed = a.seed;
  bool ok = true;
  json docs = json::array();
  std::ostringstream s;
  for (const auto& t : targets) {
    const auto rep = reproduce(t, opts);
    ok = ok && rep.pass();
    if (a.out.format == Format::json)
      docs.push_back(rep.to_json());
    else
      s << rep.to_text();
  }
  if (a.out.format == Format::json) s << docs.dump(2) << '\n';
  a.out.write(s.str());
  return ok ? kOk : kReproductionFailure;
}

// ---------------------------------------------------------------------------

struct PlotArgs {
  std::string menu;
  bool ascii = false;
  Output out;
};

int run_plot(const PlotArgs& a) {
  const Menu m = load_menu(a.menu);
  if (m.items() != 2) throw InputError(a.menu, "plots need a two-item menu");
  const auto p = region_partition_2(normalize(m));
  a.out.write(a.ascii ? render_ascii(p) : render_svg(p));
  return kOk;
}

// ---------------------------------------------------------------------------

struct ErArgs {
  double r1 = 1, r2 = 1;
  NumericParams params;
  std::vector<double> sweep;
  double points_per_decade = 500;
  Output out;
};

int run_er_gap(const ErArgs& a) {
  std::ostringstream s;
  if (!a.sweep.empty()) {
    const auto points = er_cap_sweep(a.r1, a.r2, a.sweep, a.points_per_decade);
    json rows = json::array();
    if (a.out.format == Format::csv) s << "cap,grid_points_1,grid_points_2,srev,brev,brev_over_srev\n";
    for (const auto& p : points) {
      if (a.out.format == Format::json)
        rows.push_back({{"cap", p.cap}, {"grid_points", {p.grid_points_1, p.grid_points_2}}, {"srev", p.srev}, {"brev", p.brev}, {"brev_over_srev", p.brev / p.srev}});
      else if (a.out.format == Format::csv)
        s << p.cap << ',' << p.grid_points_1 << ',' << p.grid_points_2 << ',' << p.srev << ',' << fixed(p.brev, 12) << ',' << fixed(p.brev / p.srev, 12) << '\n';
      else
        s << "cap " << p.cap << "  points " << p.grid_points_1 << "/" << p.grid_points_2 << "  brev " << fixed(p.brev, 12) << "  brev/srev " << fixed(p.brev / p.srev, 12) << '\n';
    }
    if (a.out.format == Format::json) s << rows.dump(2) << '\n';
    a.out.write(s.str());
    return kOk;
  }
  const auto r = numeric_gap_er(a.r1, a.r2, a.params);
  switch (a.out.format) {
    case Format::json:
      s << json{{"r1", r.r1}, {"r2", r.r2}, {"cap", r.cap}, {"grid_points", r.grid_points},
                {"srev", r.srev}, {"brev", r.brev}, {"drev", r.drev},
                {"drev_menu", {r.drev_menu.a, r.drev_menu.b, r.drev_menu.c}},
                {"brev_over_srev", r.brev_over_srev()}, {"drev_over_srev", r.drev_over_srev()},
                {"w", r.w}, {"drev_matches_brev", r.drev_matches_brev(a.params.tolerance)}}
               .dump(2)
        << '\n';
      break;
    case Format::csv:
      s << "cap,grid_points,srev,brev,drev,brev_over_srev,drev_over_srev,w\n"
        << r.cap << ',' << r.grid_points << ',' << r.srev << ',' << fixed(r.brev, 12) << ',' << fixed(r.drev, 12) << ','
        << fixed(r.brev_over_srev(), 12) << ',' << fixed(r.drev_over_srev(), 12) << ',' << fixed(r.w, 12) << '\n';
      break;
    case Format::text:
      s << "ER(" << r.r1 << ") x ER(" << r.r2 << "), cap " << r.cap << ", " << r.grid_points << " points\n"
        << "  srev       " << fixed(r.srev, 12) << '\n'
        << "  brev       " << fixed(r.brev, 12) << "  (brev/srev " << fixed(r.brev_over_srev(), 12) << ")\n"
        << "  drev       " << fixed(r.drev, 12) << "  at (" << fixed(r.drev_menu.a) << ", " << fixed(r.drev_menu.b) << ", " << fixed(r.drev_menu.c) << ")\n"
        << "  w          " << fixed(r.w, 12) << '\n';
      break;
  }
  a.out.write(s.str());
  return kOk;
}

// ---------------------------------------------------------------------------

struct LpArgs {
  std::string dist, menu, method = "floating";
  bool mechanism = false;
  Output out;
};

int run_lp(const LpArgs& a) {
  const JointDistribution d = load_distribution(a.dist);
  const auto r = lp_optimal(d, a.method == "exact" ? LpMethod::exact : LpMethod::floating);
  const auto ic = verify_ic_ir(r.mechanism, d);
  std::optional<Rational> menu_revenue;
  if (!a.menu.empty()) menu_revenue = expected_revenue(load_randomized_menu(a.menu), d);

  std::ostringstream s;
  if (a.out.format == Format::json) {
    json doc{{"types", d.size()}, {"method", a.method}, {"revenue", to_string(r.revenue)}, {"decimal", to_decimal(r.revenue).text},
             {"certified", r.certified}, {"fell_back", r.fell_back}, {"rounds", r.rounds}, {"rows", r.rows}, {"pivots", r.pivots},
             {"ic_ir_ok", ic.ok}};
    if (menu_revenue) doc["menu_revenue"] = to_string(*menu_revenue);
    if (a.mechanism) {
      json mech = json::array();
      for (std::size_t t = 0; t < d.size(); ++t) {
        json alloc = json::array();
        for (const auto& x : r.mechanism.alloc[t]) alloc.push_back(to_string(x));
        json values = json::array();
        for (const auto& v : d.atoms()[t].values.values()) values.push_back(to_string(v));
        mech.push_back({{"values", values}, {"alloc", alloc}, {"pay", to_string(r.mechanism.pay[t])}});
      }
      doc["mechanism"] = mech;
    }
    s << doc.dump(2) << '\n';
  } else {
    s << "types      " << d.size() << '\n'
      << "revenue    " << to_display(r.revenue) << '\n'
      << "method     " << a.method << (a.method == "floating" ? (r.certified ? " (certified exact)" : " (fell back to exact)") : "") << '\n'
      << "IC/IR      " << (ic.ok ? "hold" : "violated") << '\n';
    if (menu_revenue) s << "menu       " << to_display(*menu_revenue) << (*menu_revenue == r.revenue ? "  (equal)" : "  (differs)") << '\n';
    if (a.mechanism)
      for (std::size_t t = 0; t < d.size(); ++t) {
        s << "  " << d.atoms()[t].values.to_string() << " -> (";
        for (std::size_t i = 0; i < r.mechanism.alloc[t].size(); ++i) s << (i ? ", " : "") << to_string(r.mechanism.alloc[t][i]);
        s << ") pays " << to_string(r.mechanism.pay[t]) << '\n';
      }
  }
  a.out.write(s.str());
  return kOk;
}

// ---------------------------------------------------------------------------

struct FalseNameArgs {
  std::string menu, values, rule = "independent", picks;
  int k = 2;
  Output out;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
  return parts;
}

int run_false_name(const FalseNameArgs& a) {
  const RandomizedMenu m = load_randomized_menu(a.menu);
  std::vector<Rational> vals;
  for (const auto& p : split_commas(a.values)) vals.push_back(parse_rational(p));
  const Valuation v(vals);
  const CombinationRule rule = parse_rule(a.rule);
  const auto truthful = rchoice(m, v);

  std::ostringstream s;
  json doc{{"values", v.to_string()}, {"rule", to_string(rule)}, {"truthful_entry", truthful.index},
           {"truthful_utility", to_string(truthful.utility)}};
  if (!a.picks.empty()) {
    std::vector<std::size_t> picks;
    for (const auto& p : split_commas(a.picks)) picks.push_back(static_cast<std::size_t>(std::stoul(p)));
    const Rational u = false_name_utility(m, v, picks, rule);
    doc["picks"] = picks;
    doc["utility"] = to_string(u);
    doc["decimal"] = to_decimal(u).text;
    doc["improves"] = u > truthful.utility;
  } else {
    const auto dev = best_false_name_deviation(m, v, rule, a.k);
    doc["k"] = a.k;
    doc["picks"] = dev.picks;
    doc["utility"] = to_string(dev.utility);
    doc["decimal"] = to_decimal(dev.utility).text;
    doc["gain"] = to_string(dev.gain());
    doc["improves"] = dev.improves();
  }
  if (a.out.format == Format::json) {
    s << doc.dump(2) << '\n';
  } else {
    s << "truthful   entry " << truthful.index << ", utility " << to_display(truthful.utility) << '\n';
    s << "deviation  picks " << doc["picks"].dump() << ", utility " << to_display(parse_rational(doc["utility"].get<std::string>()))
      << (doc["improves"].get<bool>() ? "  (improves)" : "  (no gain)") << '\n';
  }
  a.out.write(s.str());
  return kOk;
}

// ---------------------------------------------------------------------------

struct GapArgs {
  std::string dist, grid = "support-sums";
  Output out;
};

int run_gap(const GapArgs& a) {
  const JointDistribution d = load_distribution(a.dist);
  const CandidateGrid g = a.grid == "integer" ? candidate_grid(d, GridMode::integer)
                          : a.grid == "support-sums" ? candidate_grid(d, GridMode::support_sums)
                                                     : load_grid_file(a.grid, d.items());
  const auto r = gap_report(d, g);
  const std::vector<std::pair<std::string, const SearchResult*>> rows{
      {"drev", &r.drev}, {"srev", &r.srev}, {"brev", &r.brev}, {"smdrev", &r.smdrev}, {"symdrev", &r.symdrev}};
  auto ratio_text = [&](const SearchResult& den) {
    const auto q = GapReport::ratio(r.drev, den);
    return q ? to_string(*q) : std::string("undefined");
  };
  std::ostringstream s;
  switch (a.out.format) {
    case Format::json: {
      json doc = json::object();
      for (const auto& [name, res] : rows)
        doc[name] = {{"menu", res->best.to_string()}, {"revenue", to_string(res->revenue)}, {"decimal", to_decimal(res->revenue).text}};
      doc["drev_over_srev"] = ratio_text(r.srev);
      doc["drev_over_brev"] = ratio_text(r.brev);
      doc["drev_over_smdrev"] = ratio_text(r.smdrev);
      doc["drev_over_symdrev"] = ratio_text(r.symdrev);
      s << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      s << "quantity,menu,revenue,decimal,drev_over_quantity\n";
      for (const auto& [name, res] : rows)
        s << name << ',' << csv_field(res->best.to_string()) << ',' << to_string(res->revenue) << ',' << to_decimal(res->revenue).text
          << ',' << ratio_text(*res) << '\n';
      break;
    case Format::text:
      for (const auto& [name, res] : rows)
        s << name << "  " << res->best.to_string() << "  " << to_display(res->revenue) << "  drev/" << name << " = " << ratio_text(*res) << '\n';
      break;
  }
  a.out.write(s.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Revenue-optimal deterministic and lottery menus for one additive buyer"};
  app.require_subcommand(1);
  std::function<int()> action;

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Expected revenue and sale probabilities of a menu");
  c_eval->add_option("menu", eval.menu, "Menu JSON")->required();
  c_eval->add_option("distribution", eval.dist, "Distribution JSON")->required();
  add_output(c_eval, eval.out);
  c_eval->callback([&] { action = [&] { return run_eval(eval); }; });

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Exhaustive revenue-optimal menu search");
  c_search->add_option("distribution", search.dist, "Distribution JSON")->required();
  c_search->add_option("--constraint", search.constraints, "unrestricted|symmetric|submodular|symmetric-submodular|additive|bundle-only (repeatable)");
  c_search->add_option("--grid", search.grid, "integer | support-sums | path to a grid JSON")->capture_default_str();
  c_search->add_option("--max-price", search.max_prices, "Cap a bundle's candidates, e.g. 1,2=12 (repeatable)");
  c_search->add_flag("--serial", search.serial, "Use the single-threaded reference search");
  c_search->add_flag("--no-pruning", search.no_pruning, "Disable monotone pruning");
  add_output(c_search, search.out);
  c_search->callback([&] { action = [&] { return run_search(search); }; });

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Apply a menu transformation and print its certificate");
  c_construct->add_option("kind", construct.kind, "submodularize | symmetrize | three-halves")
      ->required()
      ->check(CLI::IsMember({"submodularize", "symmetrize", "three-halves"}));
  c_construct->add_option("menu", construct.menu, "Two-item menu JSON")->required();
  c_construct->add_option("distribution", construct.dist, "Two-item distribution JSON")->required();
  add_output(c_construct, construct.out, false);
  c_construct->callback([&] { action = [&] { return run_construct(construct); }; });

  ReproduceArgs repro;
  auto* c_repro = app.add_subcommand("reproduce", "Run reproduction targets and print PASS/FAIL per check");
  c_repro->add_option("targets", repro.targets, "Target names")->check(CLI::IsMember(reproduction_targets()));
  c_repro->add_flag("--all", repro.all, "Run every target");
  c_repro->add_option("--cases", repro.cases, "Random cases per property target")->capture_default_str();
  c_repro->add_option("--seed", repro.seed, "Seed for property targets")->capture_default_str();
  add_output(c_repro, repro.out);
  c_repro->callback([&] { action = [&] { return run_reproduce(repro); }; });

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plot", "Region partition of a two-item menu (SVG, or ASCII)");
  c_plot->add_option("menu", plot.menu, "Two-item menu JSON")->required();
  c_plot->add_flag("--ascii", plot.ascii, "Character raster instead of SVG");
  add_output(c_plot, plot.out, false);
  c_plot->callback([&] { action = [&] { return run_plot(plot); }; });

  ErArgs er;
  auto* c_er = app.add_subcommand("er-gap", "Numeric srev / brev / drev for two equal revenue items");
  c_er->add_option("--r1", er.r1)->capture_default_str();
  c_er->add_option("--r2", er.r2)->capture_default_str();
  c_er->add_option("--cap", er.params.cap, "Truncation point")->capture_default_str();
  c_er->add_option("--grid-points", er.params.grid_points, "Atoms per marginal")->capture_default_str();
  c_er->add_option("--tolerance", er.params.tolerance, "Relative drev/brev agreement")->capture_default_str();
  c_er->add_option("--sweep", er.sweep, "Report brev for these caps instead (nested grids)");
  c_er->add_option("--points-per-decade", er.points_per_decade, "Grid density for --sweep")->capture_default_str();
  add_output(c_er, er.out);
  c_er->callback([&] { action = [&] { return run_er_gap(er); }; });

  LpArgs lp;
  auto* c_lp = app.add_subcommand("lp", "Revenue-optimal lottery mechanism by linear programming");
  c_lp->add_option("distribution", lp.dist, "Distribution JSON")->required();
  c_lp->add_option("--method", lp.method, "exact | floating")->check(CLI::IsMember({"exact", "floating"}))->capture_default_str();
  c_lp->add_option("--compare-menu", lp.menu, "Randomized menu JSON whose revenue is reported alongside");
  c_lp->add_flag("--mechanism", lp.mechanism, "Print every type's allocation and payment");
  add_output(c_lp, lp.out);
  c_lp->callback([&] { action = [&] { return run_lp(lp); }; });

  FalseNameArgs fn;
  auto* c_fn = app.add_subcommand("false-name", "Utility from buying several entries of a lottery menu");
  c_fn->add_option("menu", fn.menu, "Randomized menu JSON")->required();
  c_fn->add_option("--values", fn.values, "Buyer values, comma separated")->required();
  c_fn->add_option("--rule", fn.rule, "capped | independent")->check(CLI::IsMember({"capped", "independent"}))->capture_default_str();
  c_fn->add_option("--k", fn.k, "Largest number of purchases to enumerate (at most 3)")->capture_default_str();
  c_fn->add_option("--picks", fn.picks, "Evaluate these entry indices instead of searching, e.g. 1,2");
  add_output(c_fn, fn.out);
  c_fn->callback([&] { action = [&] { return run_false_name(fn); }; });

  GapArgs gap;
  auto* c_gap = app.add_subcommand("gap", "drev against srev, brev, smdrev and symdrev on one grid");
  c_gap->add_option("distribution", gap.dist, "Distribution JSON")->required();
  c_gap->add_option("--grid", gap.grid, "integer | support-sums | path to a grid JSON")->capture_default_str();
  add_output(c_gap, gap.out);
  c_gap->callback([&] { action = [&] { return run_gap(gap); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action();
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kReproductionFailure;
  } catch (const std::invalid_argument& e) {  // ModelError, InputError, parse failures
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
