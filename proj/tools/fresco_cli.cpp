#include "fresco/chgvar.hpp"
#include "fresco/classify3.hpp"
#include "fresco/fresco.hpp"
#include "fresco/io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace fresco;

namespace {

struct Options {
  std::vector<std::string> files;
  int order = -1;
  std::string delta, theta, param = "gamma";
  int i = 1, j = 2;
  std::optional<int> weight;
};

int working_order(const FrescoPresentation& p, const Options& o) {
  return std::max({p.order, default_order(p.lambdas), o.order});
}

FrescoPresentation load(const std::string& path, const Options& o) {
  FrescoPresentation p = read_presentation(path);
  if (o.order > p.order) p = extended(p, o.order);
  return p;
}

std::string format_vector(const SVec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << "  e" << i + 1 << ": " << format_sparse(v[i]) << "\n";
  return os.str();
}

ParamFn parameter(const Options& o) {
  if (o.param == "gamma") return gamma3;
  if (o.param == "alpha") return alpha2;
  if (o.param == "pi") {
    int i = o.i, j = o.j;
    return [i, j](const FrescoPresentation& p) { return pi_ij(p, i, j); };
  }
  throw CLI::ValidationError("--param", "expected gamma, alpha or pi");
}

std::string parameter_label(const Options& o) {
  if (o.param == "gamma") return "γ";
  if (o.param == "alpha") return "α";
  return "π(" + std::to_string(o.i) + "," + std::to_string(o.j) + ")";
}

void run(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "iso") {
    FrescoPresentation p1 = load(o.files[0], o), p2 = load(o.files[1], o);
    IsoResult r = is_isomorphic(p1, p2, o.order);
    switch (r.outcome) {
      case IsoResult::Outcome::Isomorphic: out << "isomorphic\n"; break;
      case IsoResult::Outcome::NotIsomorphic: out << "not isomorphic\n"; break;
      case IsoResult::Outcome::Inconclusive: out << "inconclusive\n"; break;
    }
    out << "reason: " << r.reason << "\n";
    out << "order: " << r.order << "\n";
    if (r.witness) out << "generator:\n" << format_vector(*r.witness);
    return;
  }

  FrescoPresentation p = load(o.files[0], o);
  if (cmd == "bernstein") {
    out << on_realization(p, working_order(p, o), [](const AbModule& m) {
      return format_poly(bernstein_polynomial(m, standard_generator(m)));
    }) << "\n";
  } else if (cmd == "jh") {
    out << format_presentation(on_realization(
        p, working_order(p, o), [](const AbModule& m) { return jh_factorize(m, standard_generator(m)); }));
  } else if (cmd == "push") {
    ChangeOfVariable cv = read_theta(o.theta);
    out << format_presentation(push_presentation(p, cv, std::max(push_order(p), o.order)));
  } else if (cmd == "ssp") {
    Submodule s = on_realization(p, working_order(p, o), [](const AbModule& m) { return semisimple_part(m); });
    out << "rank " << s.rank() << "\n";
    for (int c = 0; c < s.rank(); ++c) out << "generator " << c + 1 << ":\n" << format_vector(s.gens.column(c));
  } else if (cmd == "delta") {
    auto [dl, d] = on_realization(p, working_order(p, o), [](const AbModule& m) {
      return std::pair{delta(m), ss_depth(m)};
    });
    out << "δ = " << dl << "\n";
    out << "d = " << d << "\n";
  } else if (cmd == "dual") {
    Scalar d = parse_scalar(o.delta);
    out << format_presentation(on_realization(p, working_order(p, o), [&d](const AbModule& e) {
      AbModule m = dual_twisted(e, d);
      return jh_factorize(m, find_generator(m));
    }));
  } else if (cmd == "classify3") {
    Rank3NormalForm nf = normal_form_rank3(p);
    out << format_normal_form(nf);
    out << "check: " << (nf.check.is_true() ? "isomorphic" : nf.check.reason) << "\n";
  } else if (cmd == "gamma") {
    out << "γ = " << to_string(gamma3(p)) << "\n";
  } else if (cmd == "pi") {
    out << "π(" << o.i << "," << o.j << ") = " << to_string(pi_ij(p, o.i, o.j)) << "\n";
  } else if (cmd == "alpha2") {
    out << "α = " << to_string(alpha2(p)) << "\n";
  } else if (cmd == "versal") {
    VersalResult v = reduce_to_versal(p, o.order);
    out << format_presentation(v.pres);
    out << "generator:\n" << format_vector(v.generator);
  } else if (cmd == "probe") {
    ChangeOfVariable cv = read_theta(o.theta);
    ProbeReport r = quasi_invariance_probe(parameter(o), p, cv, o.order < 0 ? -1 : std::max(push_order(p), o.order));
    std::string name = parameter_label(o);
    out << name << " before = " << to_string(r.before) << "\n";
    out << name << " after = " << to_string(r.after) << "\n";
    out << "difference = " << to_string(r.difference) << "\n";
    if (r.ratio) out << "ratio = " << to_string(*r.ratio) << "\n";
    if (r.exponent) out << "exponent = " << *r.exponent << "\n";
    if (o.weight) {
      Scalar chi_w = 1;
      Scalar base = *o.weight >= 0 ? cv.chi() : 1 / cv.chi();
      for (int n = 0; n < std::abs(*o.weight); ++n) chi_w *= base;
      out << "weight " << *o.weight << ": " << (r.after == chi_w * r.before ? "consistent" : "inconsistent") << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on frescos given by presentations", "fresco"};
  app.require_subcommand(1);
  Options o;

  auto add_order = [&](CLI::App* c) {
    c->add_option("--order", o.order, "working order (raises the computed minimum, never lowers it)")
        ->check(CLI::NonNegativeNumber);
  };
  auto single = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("presentation", o.files, "presentation file")->required()->expected(1);
    add_order(c);
    return c;
  };

  single("bernstein", "Bernstein polynomial");
  single("jh", "principal Jordan-Hoelder presentation");
  single("push", "presentation after a change of variable")->add_option("--theta", o.theta, "theta file")->required();
  single("ssp", "semi-simple part");
  single("delta", "delta and d invariants");
  single("dual", "twisted dual")->add_option("--delta", o.delta, "twist")->required();
  single("classify3", "rank-3 normal form");
  single("gamma", "rank-3 gamma parameter");
  CLI::App* pi = single("pi", "pi_ij quasi-invariant");
  pi->add_option("--i", o.i)->required();
  pi->add_option("--j", o.j)->required();
  single("alpha2", "rank-2 alpha parameter");
  single("versal", "reduction to the versal support");
  CLI::App* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("presentations", o.files, "two presentation files")->required()->expected(2);
  add_order(iso);
  CLI::App* probe = single("probe", "quasi-invariance probe");
  probe->add_option("--param", o.param, "gamma, alpha or pi")->check(CLI::IsMember({"gamma", "alpha", "pi"}));
  probe->add_option("--theta", o.theta, "theta file")->required();
  probe->add_option("--i", o.i);
  probe->add_option("--j", o.j);
  probe->add_option("--weight", o.weight, "expected weight w, checked as after = chi^w before");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::ostringstream report;
  try {
    run(app.get_subcommands().front()->get_name(), o, report);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedShape& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Obstruction& e) {
    std::cout << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "obstruction: " << e.what() << "\n";
    return 2;
  }
  std::cout << report.str();
  return 0;
}
