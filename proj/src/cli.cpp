#include "gencheb/cli.hpp"

#include <array>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencheb/chebyshev.hpp"
#include "gencheb/errors.hpp"
#include "gencheb/euler.hpp"
#include "gencheb/gcn.hpp"
#include "gencheb/higher_order.hpp"
#include "gencheb/matrix_unit.hpp"
#include "gencheb/polytext.hpp"
#include "gencheb/verify.hpp"

namespace gencheb {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Options {
  long n = 0;
  long nmax = 24;
  std::string format = "text";
  std::uint64_t seed = 1;
  double tol = kDefaultTolerance;
  std::string method;
  std::string a = "-1";
  std::string b = "0";
  double a_num = -1.0;
  double b_num = 0.0;
  double phi = 0.0;
  double from = -2.0;
  double to = 2.0;
  long points = 41;
  std::string matrix = "1,0;0,1";
  std::string sizes = "1,16,256,1024";
  unsigned trials = 5;
  std::size_t samples = 20;
  bool timing = false;
};

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw UsageError("unknown format '" + name + "'");
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Row {
  long n;
  std::vector<std::pair<std::string, std::string>> fields;
};

/// Tabulated exact results. A single row in text mode prints bare values.
void emit_rows(std::ostream& out, Format format, const std::string& kind, const std::vector<Row>& rows,
               bool single) {
  switch (format) {
    case Format::json: {
      json items = json::array();
      for (const auto& row : rows) {
        json item = {{"n", row.n}};
        for (const auto& [k, v] : row.fields) item[k] = v;
        items.push_back(item);
      }
      out << json{{"schema", 1}, {"kind", kind}, {"items", items}}.dump() << '\n';
      return;
    }
    case Format::csv: {
      out << "n";
      if (!rows.empty()) {
        for (const auto& [k, v] : rows.front().fields) out << ',' << k;
      }
      out << '\n';
      for (const auto& row : rows) {
        out << row.n;
        for (const auto& [k, v] : row.fields) out << ',' << v;
        out << '\n';
      }
      return;
    }
    case Format::text:
      for (const auto& row : rows) {
        if (single && row.fields.size() == 1) {
          out << row.fields.front().second << '\n';
          continue;
        }
        if (!single) out << "n = " << row.n << '\n';
        for (const auto& [k, v] : row.fields) out << (single ? "" : "  ") << k << " = " << v << '\n';
      }
      return;
  }
}

void emit_record(std::ostream& out, Format format, const std::string& kind,
                 const std::vector<std::pair<std::string, std::string>>& fields) {
  if (format == Format::json) {
    json doc = {{"schema", 1}, {"kind", kind}};
    for (const auto& [k, v] : fields) doc[k] = v;
    out << doc.dump() << '\n';
  } else if (format == Format::csv) {
    for (std::size_t k = 0; k < fields.size(); ++k) out << (k ? "," : "") << fields[k].first;
    out << '\n';
    for (std::size_t k = 0; k < fields.size(); ++k) out << (k ? "," : "") << fields[k].second;
    out << '\n';
  } else {
    for (const auto& [k, v] : fields) out << k << " = " << v << '\n';
  }
}

int emit_report(std::ostream& out, Format format, const VerificationReport& report, bool timing) {
  if (format == Format::json) {
    out << to_json(report, timing).dump() << '\n';
  } else {
    std::vector<const VerificationReport*> rows;
    for (const auto& p : report.parts) rows.push_back(&p);
    rows.push_back(&report);
    if (format == Format::csv) {
      out << "suite,cases,failures" << (timing ? ",millis" : "") << '\n';
      for (const auto* r : rows) {
        out << r->suite << ',' << r->cases << ',' << r->failures.size();
        if (timing) out << ',' << num(r->millis);
        out << '\n';
      }
    } else {
      for (const auto& f : report.failures) {
        out << "FAIL " << f.case_name << ": expected " << f.expected << ", got " << f.actual << '\n';
      }
      for (const auto* r : rows) {
        out << r->suite << ": " << r->cases << " cases, " << r->failures.size() << " failures";
        if (timing) out << " (" << num(r->millis) << " ms)";
        out << '\n';
      }
    }
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

/// n-range selected by --n (single) or --nmax (table from `first`).
struct Range {
  long lo;
  long hi;
  bool single;
};

Range pick_range(const Options& o, bool n_given, long first = 0) {
  if (n_given) return {o.n, o.n, true};
  return {first, o.nmax, false};
}

std::string surd_text(const Surd<MultiPoly>& s) {
  if (s.surd.is_zero()) return render(s.rational);
  const std::string root = "sqrt(" + render(s.radicand) + ")";
  const bool negative = s.surd.is_constant() && s.surd.constant_term().is_real() &&
                        s.surd.constant_term().re().sign() < 0;
  const MultiPoly mag = negative ? -s.surd : s.surd;
  return render(s.rational) + (negative ? " - (" : " + (") + render(mag) + ")*" + root;
}

Mat2 parse_matrix(const std::string& text) {
  std::vector<GaussianRational> entries;
  std::size_t start = 0;
  const std::vector<std::string> none;
  while (start <= text.size()) {
    const std::size_t stop = text.find_first_of(",;", start);
    const std::string cell = text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    const MultiPoly value = parse_poly(cell, none);
    entries.push_back(value.constant_term());
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  if (entries.size() != 4) {
    throw UsageError("matrix must have 4 entries written as 'm11,m12;m21,m22'");
  }
  return Mat2{{entries[0], entries[1]}, {entries[2], entries[3]}};
}

std::string mat_text(const Mat2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::vector<long> parse_sizes(const std::string& text) {
  std::vector<long> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad exponent '" + item + "' in --sizes");
    }
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized complex numbers, Chebyshev polynomials and their identities", "gencheb"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  CLI::Option* n_opt = nullptr;
  const auto add_n = [&](CLI::App* sub) {
    auto* n = sub->add_option("--n", o.n, "index")->check(CLI::NonNegativeNumber);
    auto* nmax = sub->add_option("--nmax", o.nmax, "largest index of a table")->check(CLI::NonNegativeNumber);
    n->excludes(nmax);
    return n;
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_format(sub);
    return sub;
  };
  // Options are registered per leaf, so track which leaf's --n was used.
  std::vector<CLI::Option*> n_opts;
  const auto n_given = [&] {
    for (auto* opt : n_opts) {
      if (opt->count() > 0) return true;
    }
    return false;
  };
  const auto with_n = [&](CLI::App* sub) {
    n_opt = add_n(sub);
    n_opts.push_back(n_opt);
  };
  const auto fmt = [&] { return parse_format(o.format); };

  // gcn
  CLI::App* gcn = app.add_subcommand("gcn", "powers and conjugate roots of h^2 = a + b h");
  gcn->require_subcommand(1);
  {
    CLI::App* pow = leaf(gcn, "pow", "coefficients (a_n, b_n) of h^n");
    with_n(pow);
    pow->add_option("--a", o.a, "a as a polynomial in x");
    pow->add_option("--b", o.b, "b as a polynomial in x");
    pow->add_option("--method", o.method, "recurrence | matrix | binet");
    pow->callback([&] {
      action = [&] {
        const auto& vars = cheb_variables();
        const GcnUnit<MultiPoly> unit{parse_poly(o.a, vars), parse_poly(o.b, vars)};
        const PowerMethod method = parse_power_method(o.method.empty() ? "recurrence" : o.method);
        const Range r = pick_range(o, n_given());
        std::vector<Row> rows;
        for (long n = r.lo; n <= r.hi; ++n) {
          const auto c = gcn_power_coeffs(unit, n, method);
          rows.push_back({n, {{"a_n", render(c.a_n.with_variables(vars))}, {"b_n", render(c.b_n.with_variables(vars))}}});
        }
        emit_rows(out, fmt(), "gcn_pow", rows, r.single);
        return kExitOk;
      };
    });

    CLI::App* roots = leaf(gcn, "roots", "conjugate roots h+- = (b +- sqrt(b^2 + 4a))/2");
    roots->add_option("--a", o.a, "a as a polynomial in x");
    roots->add_option("--b", o.b, "b as a polynomial in x");
    roots->callback([&] {
      action = [&] {
        const auto& vars = cheb_variables();
        const GcnUnit<MultiPoly> unit{parse_poly(o.a, vars), parse_poly(o.b, vars)};
        const auto roots = conjugate_roots(unit);
        std::vector<std::pair<std::string, std::string>> fields{
            {"discriminant", render(roots.h_plus.radicand.with_variables(vars))},
            {"h_plus", surd_text(roots.h_plus)},
            {"h_minus", surd_text(roots.h_minus)},
            {"degenerate", roots.degenerate ? "true" : "false"}};
        if (unit.a.is_constant() && unit.b.is_constant() && unit.a.constant_term().is_real() &&
            unit.b.constant_term().is_real()) {
          const auto [hp, hm] = conjugate_roots_numeric(unit.a.constant_term().re().to_double(),
                                                        unit.b.constant_term().re().to_double());
          fields.emplace_back("h_plus_numeric", num(hp.real()) + (hp.imag() < 0 ? " - " : " + ") +
                                                    num(std::abs(hp.imag())) + "*i");
          fields.emplace_back("h_minus_numeric", num(hm.real()) + (hm.imag() < 0 ? " - " : " + ") +
                                                     num(std::abs(hm.imag())) + "*i");
        }
        emit_record(out, fmt(), "gcn_roots", fields);
        return kExitOk;
      };
    });
  }

  // euler
  CLI::App* euler = app.add_subcommand("euler", "Euler-like pair C(phi), S(phi)");
  euler->require_subcommand(1);
  {
    const auto unit_opts = [&](CLI::App* sub) {
      sub->add_option("--a", o.a_num, "unit coefficient a");
      sub->add_option("--b", o.b_num, "unit coefficient b");
    };
    CLI::App* series = leaf(euler, "series", "series summation");
    unit_opts(series);
    series->add_option("--phi", o.phi, "angle");
    series->add_option("--tol", o.tol, "tail tolerance")->check(CLI::PositiveNumber);
    series->callback([&] {
      action = [&] {
        const EulerPair e = euler_series({o.a_num, o.b_num}, o.phi, o.tol);
        emit_record(out, fmt(), "euler_series",
                    {{"phi", num(e.phi)}, {"C", num(e.C)}, {"S", num(e.S)}, {"terms", std::to_string(e.terms)}});
        return kExitOk;
      };
    });
    CLI::App* closed = leaf(euler, "closed", "closed form through h+-");
    unit_opts(closed);
    closed->add_option("--phi", o.phi, "angle");
    closed->callback([&] {
      action = [&] {
        const EulerPair e = euler_closed_form({o.a_num, o.b_num}, o.phi);
        emit_record(out, fmt(), "euler_closed", {{"phi", num(e.phi)}, {"C", num(e.C)}, {"S", num(e.S)}});
        return kExitOk;
      };
    });
    CLI::App* ode = leaf(euler, "ode", "residuals of C' = aS, S' = C + bS on a grid");
    unit_opts(ode);
    ode->add_option("--from", o.from, "grid start");
    ode->add_option("--to", o.to, "grid end");
    ode->add_option("--points", o.points, "grid size (>= 3)");
    ode->add_option("--tol", o.tol, "tail tolerance")->check(CLI::PositiveNumber);
    ode->callback([&] {
      action = [&] {
        if (o.points < 3) throw UsageError("--points must be at least 3");
        std::vector<double> grid;
        for (long k = 0; k < o.points; ++k) {
          grid.push_back(o.from + (o.to - o.from) * static_cast<double>(k) / static_cast<double>(o.points - 1));
        }
        const OdeResidualReport rep = ode_residual({o.a_num, o.b_num}, grid, o.tol);
        emit_record(out, fmt(), "euler_ode",
                    {{"points", std::to_string(rep.points)},
                     {"max_c_residual", num(rep.max_c_residual)},
                     {"max_s_residual", num(rep.max_s_residual)}});
        return kExitOk;
      };
    });
  }

  // cheb
  CLI::App* cheb = app.add_subcommand("cheb", "one-variable Chebyshev polynomials");
  cheb->require_subcommand(1);
  {
    const auto family = [&](const std::string& name, const std::string& help, auto make) {
      CLI::App* sub = leaf(cheb, name, help);
      with_n(sub);
      sub->callback([&, name, make] {
        action = [&, name, make] {
          const Range r = pick_range(o, n_given());
          std::vector<Row> rows;
          for (long n = r.lo; n <= r.hi; ++n) rows.push_back({n, make(n)});
          emit_rows(out, fmt(), "cheb_" + name, rows, r.single);
          return kExitOk;
        };
      });
    };
    using Fields = std::vector<std::pair<std::string, std::string>>;
    family("u", "U_n(x)", [](long n) { return Fields{{"U_n", render(cheb_U(n).poly)}}; });
    family("t", "T_n(x)", [](long n) { return Fields{{"T_n", render(cheb_T(n).poly)}}; });
    family("ab", "A_n, B_n with H^n = A_n + H B_n", [](long n) {
      const ChebCoeffPair ab = cheb_AB(n);
      return Fields{{"A_n", render(ab.A)}, {"B_n", render(ab.B)}};
    });
    family("companion", "Q(-1, 2x)^(n+1)", [](long n) {
      const auto q = cheb_companion_power(n);
      const auto& v = cheb_variables();
      return Fields{{"q11", render(q(0, 0).with_variables(v))},
                    {"q12", render(q(0, 1).with_variables(v))},
                    {"q21", render(q(1, 0).with_variables(v))},
                    {"q22", render(q(1, 1).with_variables(v))}};
    });

    CLI::App* verify = leaf(cheb, "verify", "exact and numeric Chebyshev identities");
    verify->add_option("--nmax", o.nmax, "largest n")->check(CLI::NonNegativeNumber);
    verify->add_flag("--timing", o.timing, "report wall time");
    verify->callback([&] {
      action = [&] { return emit_report(out, fmt(), verify_cheb({o.nmax, o.seed, o.tol, o.samples}), o.timing); };
    });
  }

  // mat
  CLI::App* mat = app.add_subcommand("mat", "2x2 matrices as generalized complex units");
  mat->require_subcommand(1);
  {
    CLI::App* decompose = leaf(mat, "decompose", "Pauli coordinates and gamma");
    decompose->add_option("--m", o.matrix, "matrix 'm11,m12;m21,m22'");
    decompose->callback([&] {
      action = [&] {
        const Mat2 m = parse_matrix(o.matrix);
        const PauliCoords c = pauli_decompose(m);
        emit_record(out, fmt(), "mat_decompose",
                    {{"alpha", c.alpha.to_string()},
                     {"beta1", c.beta1.to_string()},
                     {"beta2", c.beta2.to_string()},
                     {"beta3", c.beta3.to_string()},
                     {"gamma", c.gamma.to_string()},
                     {"det", m.determinant().to_string()}});
        return kExitOk;
      };
    });
    CLI::App* pow = leaf(mat, "pow", "M^n");
    pow->add_option("--m", o.matrix, "matrix 'm11,m12;m21,m22'");
    pow->add_option("--n", o.n, "exponent")->check(CLI::NonNegativeNumber);
    pow->add_option("--method", o.method, "chebyshev | squaring | general_recurrence");
    pow->callback([&] {
      action = [&] {
        const Mat2 m = parse_matrix(o.matrix);
        const MatPowerMethod method = parse_mat_power_method(o.method.empty() ? "squaring" : o.method);
        const Mat2 p = mat_power(m, o.n, method);
        emit_record(out, fmt(), "mat_pow",
                    {{"n", std::to_string(o.n)}, {"method", to_string(method)}, {"result", mat_text(p)}});
        return kExitOk;
      };
    });
    CLI::App* bench = leaf(mat, "bench", "chebyshev vs squaring timing (CSV)");
    bench->add_option("--m", o.matrix, "unimodular matrix 'm11,m12;m21,m22'");
    bench->add_option("--sizes", o.sizes, "comma-separated exponents");
    bench->add_option("--trials", o.trials, "timed repetitions per method");
    bench->callback([&] {
      action = [&] {
        const Mat2 m = parse_matrix(o.matrix);
        const std::vector<long> sizes = parse_sizes(o.sizes);
        const auto rows = bench_power(m, sizes, o.trials);
        if (fmt() == Format::json) {
          json items = json::array();
          for (const auto& r : rows) {
            items.push_back({{"method", r.method}, {"n", r.n}, {"median_ns", r.median_ns},
                             {"max_coeff_bits", r.max_coeff_bits}});
          }
          out << json{{"schema", 1}, {"kind", "mat_bench"}, {"items", items}}.dump() << '\n';
        } else {
          out << "method,n,median_ns,max_coeff_bits\n";
          for (const auto& r : rows) {
            out << r.method << ',' << r.n << ',' << num(r.median_ns) << ',' << r.max_coeff_bits << '\n';
          }
        }
        return kExitOk;
      };
    });
  }

  // u2
  CLI::App* u2 = app.add_subcommand("u2", "two-variable Chebyshev polynomials U^(2)_n(u, v)");
  u2->require_subcommand(1);
  {
    const auto route = [&](const std::string& name, const std::string& help, auto table) {
      CLI::App* sub = leaf(u2, name, help);
      with_n(sub);
      sub->callback([&, name, table] {
        action = [&, name, table] {
          const Range r = pick_range(o, n_given());
          const std::vector<TwoVarCheb> values = table(r.hi);
          std::vector<Row> rows;
          for (long n = r.lo; n <= r.hi; ++n) {
            rows.push_back({n, {{"U2_n", render(values[static_cast<std::size_t>(n)].poly)}}});
          }
          emit_rows(out, fmt(), "u2_" + name, rows, r.single);
          return kExitOk;
        };
      });
    };
    route("series", "coefficients of 1/(1 - u t + v t^2 - t^3)",
          [](long hi) { return u2_by_series(std::max(hi, 1L)); });
    route("rec", "three-term recurrence from seeds (0, 1, u)", [](long hi) { return u2_by_recurrence(hi); });
    route("laplace", "Gamma-integral of H^(3)_{n-1}(us, -vs, s)", [](long hi) {
      std::vector<TwoVarCheb> values{{0, MultiPoly(u2_variables())}};
      for (long n = 1; n <= hi; ++n) values.push_back(u2_by_laplace(n - 1));
      return values;
    });
    CLI::App* verify = leaf(u2, "verify", "triple agreement and cubic-power checks");
    verify->add_option("--nmax", o.nmax, "largest n")->check(CLI::NonNegativeNumber);
    verify->add_flag("--timing", o.timing, "report wall time");
    verify->callback([&] {
      action = [&] { return emit_report(out, fmt(), verify_u2({o.nmax, o.seed, o.tol, o.samples}), o.timing); };
    });
  }

  // hermite3
  {
    CLI::App* h3 = leaf(&app, "hermite3", "third-order Hermite polynomials H^(3)_n(x, y, z)");
    with_n(h3);
    h3->callback([&] {
      action = [&] {
        const Range r = pick_range(o, n_given());
        std::vector<Row> rows;
        for (long n = r.lo; n <= r.hi; ++n) rows.push_back({n, {{"H3_n", render(hermite3(n))}}});
        emit_rows(out, fmt(), "hermite3", rows, r.single);
        return kExitOk;
      };
    });
  }

  // verify
  CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
  verify->require_subcommand(1);
  {
    using Suite = VerificationReport (*)(const VerifyOptions&);
    const std::array<std::pair<const char*, Suite>, 6> suites{{{"all", verify_all},
                                                               {"gcn", verify_gcn},
                                                               {"euler", verify_euler},
                                                               {"cheb", verify_cheb},
                                                               {"mat", verify_mat},
                                                               {"u2", verify_u2}}};
    for (const auto& [name, suite] : suites) {
      CLI::App* sub = leaf(verify, name, std::string("suite ") + name);
      sub->add_option("--nmax", o.nmax, "largest index")->check(CLI::NonNegativeNumber);
      sub->add_option("--seed", o.seed, "seed of the randomized families");
      sub->add_option("--tol", o.tol, "series tail tolerance")->check(CLI::PositiveNumber);
      sub->add_option("--samples", o.samples, "random units/matrices per family");
      sub->add_flag("--timing", o.timing, "report wall time (output is then not reproducible)");
      const Suite run = suite;
      sub->callback([&, run] {
        action = [&, run] { return emit_report(out, fmt(), run({o.nmax, o.seed, o.tol, o.samples}), o.timing); };
      });
    }
  }

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("gencheb");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace gencheb
