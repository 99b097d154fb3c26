#include "burnside/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "burnside/cache.hpp"
#include "burnside/limits.hpp"
#include "burnside/parse.hpp"
#include "burnside/report.hpp"

namespace burnside {

namespace {

/// "at + b" display for elements of A(S2); canonical term list elsewhere.
std::string pretty(const BurnsideElement& x) {
  if (x.group() != symmetric_group(2)) return x.to_string();
  if (x.is_zero()) return "0";
  auto wrap = [](const Scalar& s, bool with_t) {
    std::string v = s.to_string();
    bool composite = v.find_first_of("+-/", 1) != std::string::npos;
    if (!with_t) return composite && v[0] == '-' ? v : v;
    if (composite) return "(" + v + ")t";
    if (v == "1") return std::string("t");
    if (v == "-1") return std::string("-t");
    return v + "t";
  };
  std::string out;
  Scalar a = x.coeff(0), b = x.coeff(1);
  if (!a.is_zero()) out += wrap(a, true);
  if (!b.is_zero()) {
    std::string bs = wrap(b, false);
    if (out.empty())
      out = bs;
    else if (bs[0] == '-')
      out += " - " + bs.substr(1);
    else
      out += " + " + bs;
  }
  return out;
}

/// Hom specs: "id@G", "incl@H>G" (carrier prefix), "unit@G" (e -> G),
/// "toe@G" (G -> e), "sign@S<n>", "pr1@AxB", "pr2@AxB", "diag@G".
GroupHom parse_hom(const std::string& spec) {
  auto at = spec.find('@');
  if (at == std::string::npos) throw ParseError("hom spec needs '@': " + spec);
  std::string kind = spec.substr(0, at);
  std::string rest = spec.substr(at + 1);
  if (kind == "id") return hom_identity(parse_group(rest));
  if (kind == "incl") {
    auto gt = rest.find('>');
    if (gt == std::string::npos) throw ParseError("incl needs 'H>G'");
    GroupPtr h = parse_group(rest.substr(0, gt));
    GroupPtr g = parse_group(rest.substr(gt + 1));
    std::vector<int> pts(h->degree());
    for (int i = 0; i < h->degree(); ++i) pts[i] = i;
    return hom_by_point_bijection(h, g, pts);
  }
  if (kind == "unit") return hom_trivial(trivial_group(), parse_group(rest));
  if (kind == "toe") return hom_trivial(parse_group(rest), trivial_group());
  if (kind == "sign") return sign_hom(parse_group(rest));
  if (kind == "diag") return diagonal_hom(parse_group(rest));
  if (kind == "pr1" || kind == "pr2") {
    auto x = rest.find('x');
    if (x == std::string::npos) throw ParseError("pr needs 'AxB'");
    const ProductGroup& p = direct_product(parse_group(rest.substr(0, x)),
                                           parse_group(rest.substr(x + 1)));
    return kind == "pr1" ? p.pr1 : p.pr2;
  }
  throw ParseError("unknown hom kind '" + kind + "'");
}

void print_element(std::ostream& out, const BurnsideElement& x, bool as_json) {
  if (as_json)
    out << element_to_json(x).dump() << "\n";
  else
    out << pretty(x) << "\n";
}

void print_virtual(std::ostream& out, const VirtualGSet& x) {
  auto classes = stabilizer_class_multiplicities(x);
  if (classes.empty()) {
    out << "0\n";
    return;
  }
  for (const auto& [sub, mult] : classes) {
    out << mult << "*[stabilizer order " << sub.order() << ", gens";
    for (int e : subgroup_generators(sub)) out << " " << perm_to_cycles(sub.parent->element(e));
    out << "]\n";
  }
}

int finish_report(const Report& rep, std::ostream& out, bool as_json, bool verbose) {
  if (as_json)
    out << report_to_json(rep).dump(2) << "\n";
  else
    out << render_report_text(rep, verbose);
  return rep.failures() > 0 ? 2 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Burnside-ring calculus: table of marks, power operations, "
               "beta-operations, obstruction checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string group_spec = "e", coeff = "Z";
  std::string elem_text, lhs_text, rhs_text, op_text, op2_text, with_text, hom_spec, sub_label;
  std::string mod_text = "2", cache_dir;
  int degree = 2, threads = 1;
  long bound_lattice = limits().lattice_order;
  long long bound_set = limits().set_size;
  bool as_json = false, verbose = false;

  app.add_option("--cache-dir", cache_dir, "lattice cache directory (or env BURNSIDE_CACHE)");
  app.add_option("--bound-lattice", bound_lattice, "max group order for subgroup lattices");
  app.add_option("--bound-set", bound_set, "max G-set carrier size");
  app.add_option("--threads", threads, "worker threads for checker grids");
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--verbose", verbose, "print passing report entries too");

  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_spec, "group spec, e.g. S3, C4, S2wrS2, S2xS3");
  };
  auto add_coeff = [&](CLI::App* cmd) {
    cmd->add_option("--coeff", coeff, "coefficient ring: Z, Z/<n>, Zi, Q");
  };

  CLI::App* marks = app.add_subcommand("marks", "table of marks with class legend");
  add_group(marks);
  CLI::App* classes = app.add_subcommand("classes", "subgroup class legend");
  add_group(classes);

  CLI::App* mulc = app.add_subcommand("mul", "product in A(G)");
  add_group(mulc);
  add_coeff(mulc);
  mulc->add_option("--lhs", lhs_text)->required();
  mulc->add_option("--rhs", rhs_text)->required();

  CLI::App* addc = app.add_subcommand("add", "sum in A(G)");
  add_group(addc);
  add_coeff(addc);
  addc->add_option("--lhs", lhs_text)->required();
  addc->add_option("--rhs", rhs_text)->required();

  CLI::App* restrictc = app.add_subcommand("restrict", "restriction along a homomorphism");
  add_coeff(restrictc);
  restrictc->add_option("--hom", hom_spec, "hom spec, e.g. incl@S2>S3")->required();
  restrictc->add_option("--elem", elem_text, "element over the hom target")->required();

  CLI::App* transferc = app.add_subcommand("transfer", "transfer from a subgroup");
  add_group(transferc);
  add_coeff(transferc);
  transferc->add_option("--sub", sub_label, "subgroup class label, e.g. H2_0")->required();
  transferc->add_option("--elem", elem_text, "element over the subgroup")->required();

  CLI::App* deflatec = app.add_subcommand("deflate", "deflation along a homomorphism");
  add_coeff(deflatec);
  deflatec->add_option("--hom", hom_spec)->required();
  deflatec->add_option("--elem", elem_text, "element over the hom source")->required();

  CLI::App* powc = app.add_subcommand("pow", "power operation P^m");
  add_group(powc);
  powc->add_option("--elem", elem_text)->required();
  powc->add_option("--degree", degree, "m");

  CLI::App* expsc = app.add_subcommand("exps", "exponential sequence P^0..P^N");
  add_group(expsc);
  expsc->add_option("--elem", elem_text)->required();
  expsc->add_option("--degree", degree, "N");

  CLI::App* thetac = app.add_subcommand("theta", "beta-operation theta(x)(a)");
  add_group(thetac);
  add_coeff(thetac);
  thetac->add_option("--op", op_text, "operator, e.g. \"[S2/e]\"")->required();
  thetac->add_option("--elem", elem_text)->required();

  CLI::App* theta2c = app.add_subcommand("theta2", "iterated operation theta^2(z)(c,d)");
  add_group(theta2c);
  theta2c->add_option("--op2", op2_text, "bidegree operator, e.g. \"[S1xS1/e]\"")->required();
  theta2c->add_option("--lhs", lhs_text)->required();
  theta2c->add_option("--rhs", rhs_text)->required();

  CLI::App* plethc = app.add_subcommand("plethysm", "plethysm x * y in the operator ring");
  plethc->add_option("--op", op_text)->required();
  plethc->add_option("--with", with_text)->required();

  CLI::App* opmulc = app.add_subcommand("opmul", "transfer product x . y in the operator ring");
  opmulc->add_option("--op", op_text)->required();
  opmulc->add_option("--with", with_text)->required();

  CLI::App* checkc = app.add_subcommand("check", "run a checker suite");
  std::string subject;
  checkc->add_option("subject", subject, "power | pairing | beta | additive | morphisms | candidate")
      ->required();
  add_group(checkc);
  checkc->add_option("--degree", degree, "operator degree bound");
  checkc->add_option("--mod", mod_text, "modulus n for candidate");

  CLI::App* obstructc = app.add_subcommand("obstruct", "non-existence obstruction computations");
  std::string target;
  obstructc->add_option("target", target, "zmod | gaussian")->required();
  obstructc->add_option("n", mod_text, "modulus for zmod");

  CLI::App* cachec = app.add_subcommand("cache", "compute and persist a subgroup lattice");
  add_group(cachec);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    limits().lattice_order = bound_lattice;
    limits().set_size = bound_set;
    if (cache_dir.empty()) {
      if (const char* env = std::getenv("BURNSIDE_CACHE")) cache_dir = env;
    }
    set_cache_directory(cache_dir);

    CoeffRing ring = CoeffRing::parse(coeff);

    if (marks->parsed() || classes->parsed()) {
      GroupPtr g = parse_group(group_spec);
      nlohmann::json j = marks_to_json(g);
      if (as_json) {
        out << j.dump(2) << "\n";
        return 0;
      }
      out << "group " << group_spec << ", " << j["classes"].size() << " subgroup classes\n";
      for (const auto& c : j["classes"]) {
        out << "  " << c["label"].get<std::string>() << ": order " << c["order"] << ", gens";
        for (const auto& s : c["generators"]) out << " " << s.get<std::string>();
        out << "\n";
      }
      if (marks->parsed()) {
        out << "marks (rows = coset spaces G/H, columns = fixing subgroups):\n[";
        const auto& rows = j["marks"];
        for (size_t r = 0; r < rows.size(); ++r) out << (r ? "," : "") << rows[r].dump();
        out << "]\n";
      }
      return 0;
    }

    if (mulc->parsed() || addc->parsed()) {
      GroupPtr g = parse_group(group_spec);
      BurnsideElement a = parse_element(lhs_text, g, ring);
      BurnsideElement b = parse_element(rhs_text, g, ring);
      print_element(out, mulc->parsed() ? mul(a, b) : a + b, as_json);
      return 0;
    }

    if (restrictc->parsed()) {
      GroupHom h = parse_hom(hom_spec);
      print_element(out, restrict_along(h, parse_element(elem_text, h.target, ring)), as_json);
      return 0;
    }

    if (transferc->parsed()) {
      GroupPtr g = parse_group(group_spec);
      const SubgroupClassTable& t = subgroup_classes(g);
      int cls = t.class_by_label(sub_label);
      if (cls < 0) throw ParseError("unknown class label " + sub_label);
      auto [hg, incl] = subgroup_as_group(t.class_reps()[cls]);
      print_element(out, transfer_along(incl, parse_element(elem_text, hg, ring)), as_json);
      return 0;
    }

    if (deflatec->parsed()) {
      GroupHom h = parse_hom(hom_spec);
      print_element(out, deflate(h, parse_element(elem_text, h.source, ring)), as_json);
      return 0;
    }

    if (powc->parsed() || expsc->parsed()) {
      GroupPtr g = parse_group(group_spec);
      BurnsideElement x = parse_element(elem_text, g, CoeffRing::integers());
      int lo = powc->parsed() ? degree : 0;
      for (int m = lo; m <= degree; ++m) {
        VirtualGSet v = power_virtual(x, m);
        if (expsc->parsed()) out << "P^" << m << ":\n";
        if (v.group->order() <= limits().lattice_order)
          print_element(out, decompose(v), as_json);
        else
          print_virtual(out, v);
      }
      return 0;
    }

    if (thetac->parsed()) {
      GroupPtr g = parse_group(group_spec);
      OperatorElement op = parse_operator(op_text);
      BurnsideElement a = parse_element(elem_text, g, ring);
      BurnsideElement value = theta(op, a);
      print_element(out, value, as_json);
      // closed form X^n/H for a single basis operator on an effective element
      if (op.parts.size() == 1 && ring == CoeffRing::integers()) {
        const auto& [n, part] = *op.parts.begin();
        if (part.coeffs().size() == 1 && part.coeffs().begin()->second.is_one() &&
            realize(a).effective()) {
          const SubgroupClassTable& t = subgroup_classes(symmetric_group(n));
          BurnsideElement closed =
              theta_closed_form(n, t.class_reps()[part.coeffs().begin()->first], a);
          out << "closed form X^" << n << "/H: " << pretty(closed)
              << (closed == value ? " (agrees)" : " (MISMATCH)") << "\n";
        }
      }
      return 0;
    }

    if (theta2c->parsed()) {
      GroupPtr g = parse_group(group_spec);
      OperatorElement2 z = parse_operator2(op2_text);
      BurnsideElement c = parse_element(lhs_text, g, CoeffRing::integers());
      BurnsideElement d = parse_element(rhs_text, g, CoeffRing::integers());
      print_element(out, theta2(z, c, d), as_json);
      return 0;
    }

    if (plethc->parsed() || opmulc->parsed()) {
      OperatorElement x = parse_operator(op_text);
      OperatorElement y = parse_operator(with_text);
      OperatorElement r = plethc->parsed() ? plethysm(x, y) : transfer_product(x, y);
      out << r.to_string() << "\n";
      return 0;
    }

    if (checkc->parsed()) {
      GroupPtr g = parse_group(group_spec);
      Report rep;
      if (subject == "power")
        rep = check_power_identities({trivial_group(), symmetric_group(2), symmetric_group(3)},
                                     degree, threads);
      else if (subject == "pairing")
        rep = check_pairing_axioms(default_pairing_corpus(), threads);
      else if (subject == "beta")
        rep = check_beta_axioms(g, degree, threads);
      else if (subject == "additive")
        rep = check_additive_axioms(g, degree, threads);
      else if (subject == "morphisms") {
        rep = check_morphisms(hom_by_point_bijection(symmetric_group(2), symmetric_group(3),
                                                     {0, 1}),
                              degree, threads);
        Report demo = transfer_morphism_demo();
        rep.notes.insert(rep.notes.end(), demo.notes.begin(), demo.notes.end());
        for (auto& e : demo.entries) rep.entries.push_back(std::move(e));
      } else if (subject == "candidate")
        rep = check_induced_candidate(g, mpz_class(mod_text), degree);
      else
        throw ParseError("unknown check subject '" + subject + "'");
      return finish_report(rep, out, as_json, verbose);
    }

    if (obstructc->parsed()) {
      Report rep;
      if (target == "zmod")
        rep = obstruction_zmodn(mpz_class(mod_text));
      else if (target == "gaussian")
        rep = obstruction_gaussian();
      else
        throw ParseError("unknown obstruction target '" + target + "'");
      for (const auto& n : rep.notes)
        if (!as_json) out << n << "\n";
      return finish_report(rep, out, as_json, true);
    }

    if (cachec->parsed()) {
      if (cache_directory().empty())
        throw Error("cache needs --cache-dir or BURNSIDE_CACHE");
      GroupPtr g = parse_group(group_spec);
      bool had = cache_load(g->fingerprint()).has_value();
      subgroup_classes(g);  // computes and stores on miss
      out << (had ? "hit: " : "stored: ") << cache_entry_path(g->fingerprint()) << "\n";
      if (as_json) out << marks_to_json(g).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace burnside
