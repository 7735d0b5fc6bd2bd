#include "concordia/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "concordia/catalog.hpp"
#include "concordia/error.hpp"
#include "concordia/golden.hpp"
#include "concordia/invariants.hpp"
#include "concordia/model_io.hpp"

namespace concordia {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KnotSource {
  std::string knot;
  std::string file;
  bool use_stdin = false;

  void attach(CLI::App* app) {
    app->add_option("--knot", knot, "catalog knot name");
    app->add_option("--file", file, "knot model JSON file");
    app->add_flag("--stdin", use_stdin, "read the knot model JSON from standard input");
  }

  KnotModel load(std::istream& in) const {
    int given = !knot.empty() + !file.empty() + use_stdin;
    if (given != 1) throw UsageError("give exactly one of --knot, --file, --stdin");
    if (!knot.empty()) return catalog_model(knot);
    std::string text;
    if (use_stdin) {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream f(file);
      if (!f) throw Error(ErrorCode::ParseError, "cannot read '" + file + "'");
      text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return parse_model_file(text).model();
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Var weight_var(const std::string& name) {
  auto v = var_from_name(name);
  if (!v || (*v != Var::x && *v != Var::y && *v != Var::u && *v != Var::q1 && *v != Var::q2 && *v != Var::q3))
    throw Error(ErrorCode::ParseError, "weights are assigned to x, y, u, q1, q2, q3 only, not '" + name + "'");
  return *v;
}

struct SigmaOptions {
  std::string example;
  std::string r;
  std::vector<std::string> subst;
  std::vector<std::string> weight;
  std::string lex;
  bool degenerate = false;

  void attach(CLI::App* app) {
    app->add_option("--example", example, "built-in base change: A, B, C, Cprime, D");
    app->add_option("--r", r, "parameter of example B, a rational in (0,1]");
    app->add_option("--subst", subst, "custom base change, repeated: --subst T0=1+y --subst T1=1+y ...");
    app->add_option("--weight", weight, "weight of a variable, repeated: --weight x=1/4 (or x=a:b for Q x Q)");
    app->add_option("--lex", lex, "use the value group Q x Q; the n-th listed variable weighs in coordinate n");
    app->add_flag("--degenerate", degenerate, "allow a custom base change with sigma(P) = 0 or sigma(V) = 0");
  }

  BaseChange make() const {
    if (!example.empty() && !subst.empty()) throw UsageError("give either --example or --subst, not both");
    std::optional<Rational> rr;
    if (!r.empty()) rr = Rational::parse(r);
    if (!example.empty()) return builtin(example, rr);
    if (subst.empty()) throw UsageError("a base change is required (--example or --subst)");
    std::array<RationalFunction, 4> images;
    std::array<bool, 4> seen{};
    for (const auto& arg : subst)
      for (const auto& item : split(arg, ';')) {
        auto eq = item.find('=');
        if (eq != 2 || item[0] != 'T' || item[1] < '0' || item[1] > '3')
          throw Error(ErrorCode::ParseError, "substitution '" + item + "' must look like T1=1+x");
        auto i = static_cast<std::size_t>(item[1] - '0');
        images[i] = parse_rational_function(item.substr(eq + 1));
        seen[i] = true;
      }
    for (std::size_t i = 0; i < 4; ++i)
      if (!seen[i]) throw Error(ErrorCode::ParseError, "substitution for T" + std::to_string(i) + " is missing");
    std::vector<Var> lex_order;
    for (const auto& name : split(lex, ',')) lex_order.push_back(weight_var(name));
    if (lex_order.size() > 2) throw Error(ErrorCode::ParseError, "--lex takes at most two variables");
    bool is_lex = !lex_order.empty();
    MonomialWeight w(is_lex ? ValueKind::Lex : ValueKind::Scalar);
    for (const auto& arg : weight)
      for (const auto& item : split(arg, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "weight '" + item + "' must look like x=1/4");
        Var var = weight_var(item.substr(0, eq));
        std::string text = item.substr(eq + 1);
        auto colon = text.find(':');
        if (colon != std::string::npos) {
          if (!is_lex) throw Error(ErrorCode::ParseError, "weight '" + item + "' is a pair but --lex is not given");
          w.set(var, Value::lex(Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1))));
        } else if (!is_lex) {
          w.set(var, Value::scalar(Rational::parse(text)));
        } else {
          auto pos = std::find(lex_order.begin(), lex_order.end(), var);
          if (pos == lex_order.end())
            throw Error(ErrorCode::ParseError, "variable in '" + item + "' is not listed in --lex");
          Rational a = Rational::parse(text);
          w.set(var, pos == lex_order.begin() ? Value::lex(a, 0) : Value::lex(0, a));
        }
      }
    return BaseChange("custom", images, w, degenerate);
  }
};

Ring parse_ring(const std::string& s) { return ring_from_name(s); }

std::string profile_text(const Profile& p) {
  std::ostringstream out;
  out << "samples:\n";
  for (const auto& [r, f] : p.samples) out << "  f_r(" << r.to_string() << ") = " << f.to_string() << "\n";
  out << "segments:\n";
  for (const auto& s : p.segments) {
    std::string formula;
    if (s.slope.is_zero()) {
      formula = s.intercept.to_string();
    } else {
      formula = (s.slope == Rational(1) ? std::string() : s.slope == Rational(-1) ? "-" : s.slope.to_string()) + "r";
      if (!s.intercept.is_zero())
        formula += (s.intercept < Rational(0) ? " - " + (-s.intercept).to_string() : " + " + s.intercept.to_string());
    }
    out << "  f_r = " << formula << " on [" << s.from.to_string() << ", " << s.to.to_string() << "]"
        << " (" << s.support << " samples)\n";
  }
  for (const auto& [a, b] : p.unresolved)
    out << "unresolved: (" << a.to_string() << ", " << b.to_string() << ")\n";
  out << "slope bound (heuristic): " << p.slope_bound.to_string()
      << (p.slopes_within_bound ? "" : " EXCEEDED by a fitted segment") << "\n";
  return out.str();
}

std::string csv_text(const Profile& p) {
  std::string s = "r,f_r\n";
  for (const auto& [r, f] : p.samples) s += r.to_string() + "," + f.to_string() + "\n";
  return s;
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"concordia: concordance invariants from chain complexes over F2 Laurent rings"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "apply a base change to a Laurent element");
  SigmaOptions eval_sigma;
  eval_sigma.attach(eval);
  std::string eval_element, eval_ring = "FULL";
  bool eval_ord = false;
  eval->add_option("--element", eval_element, "Laurent element, macros P Q V L allowed")->required();
  eval->add_option("--ring", eval_ring, "FULL or BN");
  eval->add_flag("--ord", eval_ord, "also print the ord of the result");

  // invariants
  auto* inv = app.add_subcommand("invariants", "ideals, f values and bounds for one knot model");
  KnotSource inv_src;
  inv_src.attach(inv);
  SigmaOptions inv_sigma;
  inv_sigma.attach(inv);

  // profile
  auto* prof = app.add_subcommand("profile", "sample r -> f_r and fit piecewise-linear segments");
  KnotSource prof_src;
  prof_src.attach(prof);
  std::string prof_samples = "1/8..1", prof_csv;
  int prof_depth = 4;
  prof->add_option("--samples", prof_samples, "\"step..last\" (multiples of step) or a comma separated list");
  prof->add_option("--depth", prof_depth, "extra evaluations per breakpoint");
  prof->add_option("--csv", prof_csv, "write r,f_r to this file ('-' for standard output)");

  // sum
  auto* sum = app.add_subcommand("sum", "connected sum of catalog knots");
  std::string sum_knots;
  sum->add_option("--knots", sum_knots, "comma separated catalog names")->required();
  SigmaOptions sum_sigma;
  sum_sigma.attach(sum);

  // membership
  auto* mem = app.add_subcommand("membership", "decide f in I for a fractional ideal I");
  std::string mem_ring = "BN", mem_ideal, mem_element;
  bool mem_ae = false;
  mem->add_option("--ring", mem_ring, "FULL or BN");
  mem->add_option("--ideal", mem_ideal, "comma separated generators")->required();
  mem->add_option("--element", mem_element, "element of the fraction field")->required();
  mem->add_flag("--ae", mem_ae, "rewrite generator names u -> L, w -> P first");

  // g-region
  auto* gr = app.add_subcommand("g-region", "pairs (g, d) with P^g V^d in the ideal");
  std::string gr_ring = "BN", gr_ideal;
  int gr_gmax = 4, gr_dmax = 4;
  bool gr_csv = false, gr_ae = false;
  gr->add_option("--ring", gr_ring, "FULL or BN");
  gr->add_option("--ideal", gr_ideal, "comma separated generators")->required();
  gr->add_option("--gmax", gr_gmax, "largest g");
  gr->add_option("--dmax", gr_dmax, "largest d");
  gr->add_flag("--csv", gr_csv, "print g,d,member rows instead of a grid");
  gr->add_flag("--ae", gr_ae, "rewrite generator names u -> L, w -> P first");

  // unknotting-bound
  auto* unk = app.add_subcommand("unknotting-bound", "torsion-order lower bound for the unknotting number");
  KnotSource unk_src;
  unk_src.attach(unk);
  SigmaOptions unk_sigma;
  unk_sigma.attach(unk);

  // catalog
  auto* cat = app.add_subcommand("catalog", "built-in knot models");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  auto* cat_show = cat->add_subcommand("show", "show one entry");
  std::string show_name;
  bool show_json = false;
  cat_show->add_option("name", show_name, "entry name")->required();
  cat_show->add_flag("--json", show_json, "emit the knot model file format");

  // verify
  auto* ver = app.add_subcommand("verify", "run the golden table of worked examples");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) {
      BaseChange sigma = eval_sigma.make();
      RationalFunction v = sigma.apply(parse_laurent_fraction(eval_element, parse_ring(eval_ring)));
      out << v.to_string() << "\n";
      if (eval_ord) out << "ord = " << (v.is_zero() ? std::string("undefined") : sigma.ord(v).to_string()) << "\n";
    } else if (inv->parsed()) {
      KnotModel k = inv_src.load(in);
      out << invariant_report(k, inv_sigma.make());
    } else if (prof->parsed()) {
      KnotModel k = prof_src.load(in);
      Profile p = f_profile(k, parse_samples(prof_samples), prof_depth);
      if (prof_csv == "-") {
        out << csv_text(p);
      } else {
        out << profile_text(p);
        if (!prof_csv.empty()) write_file(prof_csv, csv_text(p), out);
      }
    } else if (sum->parsed()) {
      auto names = split(sum_knots, ',');
      if (names.size() < 2) throw UsageError("--knots needs at least two names");
      KnotModel k = catalog_model(names[0]);
      for (std::size_t i = 1; i < names.size(); ++i) k = connected_sum(k, catalog_model(names[i]));
      out << invariant_report(k, sum_sigma.make());
    } else if (mem->parsed()) {
      Ring ring = parse_ring(mem_ring);
      std::string ideal = mem_ae ? ae_rewrite(mem_ideal) : mem_ideal;
      std::string element = mem_ae ? ae_rewrite(mem_element) : mem_element;
      bool in_ideal = FractionalIdeal::parse(ideal, ring).contains(parse_laurent_fraction(element, ring));
      out << (in_ideal ? "true" : "false") << "\n";
    } else if (gr->parsed()) {
      Ring ring = parse_ring(gr_ring);
      FractionalIdeal ideal = FractionalIdeal::parse(gr_ae ? ae_rewrite(gr_ideal) : gr_ideal, ring);
      auto region = g_region(ideal, gr_gmax, gr_dmax);
      auto has = [&](int g, int d) { return std::find(region.begin(), region.end(), std::pair{g, d}) != region.end(); };
      if (gr_csv) {
        out << "g,d,member\n";
        for (int g = 0; g <= gr_gmax; ++g)
          for (int d = 0; d <= gr_dmax; ++d) out << g << "," << d << "," << (has(g, d) ? 1 : 0) << "\n";
      } else {
        out << "ideal " << ideal.to_string() << "; '#' marks P^g " << (ring == Ring::BN ? "L" : "V")
            << "^d in the ideal\n";
        out << "g\\d";
        for (int d = 0; d <= gr_dmax; ++d) out << " " << d;
        out << "\n";
        for (int g = 0; g <= gr_gmax; ++g) {
          out << std::string(g < 10 ? 2 : 1, ' ') << g;
          for (int d = 0; d <= gr_dmax; ++d) out << std::string(std::to_string(d).size(), ' ') << (has(g, d) ? '#' : '.');
          out << "\n";
        }
        // (g, d) -> (g + 1, d - 1) closure inside the box, reported only
        bool closed = true;
        for (auto [g, d] : region)
          if (g < gr_gmax && d > 0 && !has(g + 1, d - 1)) closed = false;
        out << "closed under (g, d) -> (g+1, d-1) in this box: " << (closed ? "yes" : "no") << "\n";
      }
    } else if (unk->parsed()) {
      KnotModel k = unk_src.load(in);
      UnknottingBound u = unknotting_bound(k, unk_sigma.make());
      out << "tau = " << u.tau.to_string() << "\n";
      out << "lambda = " << u.lambda.to_string() << "\n";
      out << "unknotting number >= " << u.bound.to_string() << " (reduced-model bound)\n";
      const char* base = k.ring() == Ring::BN ? "<P,L>^" : "<P,V>^";
      for (const auto& [n, ok] : u.annihilation)
        out << base << n << " annihilates the rank-one torsion: " << (ok ? "true" : "false") << "\n";
    } else if (cat_list->parsed()) {
      for (const auto& n : catalog_names()) {
        CatalogEntry e = catalog_get(n);
        out << n << (e.conjecture ? " (conjecture)" : "") << "\n";
      }
    } else if (cat_show->parsed()) {
      CatalogEntry e = catalog_get(show_name);
      if (show_json) {
        out << to_json(to_model_file(e));
      } else {
        out << "name: " << e.name << "\n";
        out << "ring: " << ring_name(e.ring) << "\n";
        if (e.complex) {
          out << "degrees: " << e.complex->lo() << ".." << e.complex->hi() << "\n";
          for (int k = e.complex->lo() + 1; k <= e.complex->hi(); ++k) {
            LaurentMatrix d = e.complex->differential(k);
            for (std::size_t c = 0; c < d.cols(); ++c) {
              out << "  d(generator " << c + 1 << " of degree " << k - 1 << ") = (";
              for (std::size_t r = 0; r < d.rows(); ++r) out << (r ? ", " : "") << to_named_string(d(r, c));
              out << ")\n";
            }
          }
        }
        if (e.model) {
          const auto& cy = e.model->cycle;
          out << "cycle: degree " << cy.degree << ", (";
          for (std::size_t i = 0; i < cy.vector.size(); ++i) out << (i ? ", " : "") << to_named_string(cy.vector[i]);
          out << "), genus " << cy.genus << ", dplus " << cy.dplus << ", " << direction_name(cy.direction) << "\n";
        }
        if (!e.expected_ideal.empty()) {
          out << "expected ideal: <";
          for (std::size_t i = 0; i < e.expected_ideal.size(); ++i) out << (i ? ", " : "") << e.expected_ideal[i];
          out << ">\n";
        }
        out << "provenance: " << e.provenance << "\n";
        if (e.conjecture) out << "conjecture: yes\n";
      }
    } else if (ver->parsed()) {
      bool ok = true;
      for (const auto& row : golden_suite()) {
        bool conj = row.name.rfind("conjecture:", 0) == 0;
        if (!row.pass && !conj) ok = false;
        out << (row.pass ? "PASS" : conj ? "OPEN" : "FAIL") << "  " << row.name << "  [" << row.detail << "]\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace concordia
