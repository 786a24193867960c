#include "prdual/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "prdual/duality.hpp"
#include "prdual/errors.hpp"
#include "prdual/families.hpp"
#include "prdual/json_io.hpp"
#include "prdual/linalg.hpp"
#include "prdual/oracle.hpp"
#include "prdual/qmat_io.hpp"
#include "prdual/rado.hpp"
#include "prdual/semigroup.hpp"
#include "prdual/transfer.hpp"

namespace prdual::cli {

namespace {

std::string index_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

std::string partition_text(const std::vector<std::vector<std::size_t>>& p) {
  std::string out = "⟨";
  for (std::size_t t = 0; t < p.size(); ++t) out += (t ? "," : "") + index_set(p[t]);
  return out + "⟩";
}

std::string vector_text(const QVector& x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.size(); ++k) out += (k ? ", " : "") + x[k].str();
  return out + ")";
}

// Matrix as a .qmat block preceded by '#' comment lines, so text output
// re-parses with parse_qmat.
std::string qmat_block(const std::string& title, const QMatrix& m) {
  return "# " + title + "\n" + format_qmat(m);
}

const char* mode_name(SolutionMode m) { return m == SolutionMode::Kernel ? "kernel" : "image"; }

SolutionMode parse_mode(const std::string& s) {
  if (s == "kernel") return SolutionMode::Kernel;
  if (s == "image") return SolutionMode::Image;
  throw ParseError("mode must be 'kernel' or 'image'");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParseError("bad integer '" + tok + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + tok + "'");
    }
  }
  return out;
}

// --- report builders ------------------------------------------------------

Report cc_report(const QMatrix& a) {
  Report r;
  const auto cert = columns_condition(a);
  r.doc = {{"kind", "columns_condition"}, {"matrix", a}, {"verdict", cert.has_value()},
           {"certificate", cert ? json(*cert) : json(nullptr)}};
  std::ostringstream t;
  if (cert) {
    t << "columns condition: satisfied\ncertificate: " << partition_text(cert->partition) << "\n";
    for (std::size_t k = 0; k < cert->witnesses.size(); ++k) {
      const auto& w = cert->witnesses[k];
      t << "block " << k + 2 << " sum =";
      for (std::size_t i = 0; i < w.columns.size(); ++i)
        t << (i ? " + " : " ") << w.coefficients[i] << "*c" << w.columns[i];
      t << "\n";
    }
  } else {
    t << "columns condition: not satisfied\n";
  }
  r.text = t.str();
  r.code = cert ? kSuccess : kNegative;
  return r;
}

Report k2i_report(const QMatrix& b) {
  Report r;
  const auto p = kernel_projector(b);
  r.doc = {{"kind", "kernel_projector"}, {"B", b}, {"projector", p}};
  r.text = "# T = " + index_set(p.T) + "\n" + qmat_block("projector C (C^2 = C, K(B) = R(C))", p.C) +
           qmat_block("image matrix D (C with zero columns dropped)", p.D);
  return r;
}

Report i2k_report(const QMatrix& a) {
  Report r;
  const QMatrix b = image_to_kernel(a);
  const bool independent = independent_rows(a).size() == a.rows();
  r.doc = {{"kind", "image_to_kernel"}, {"A", a}, {"B", b},
           {"dependency", independent ? json(nullptr) : json(row_dependency(a))}};
  r.text = format_qmat(b);
  return r;
}

Report containment_report(const QMatrix& a, const SemigroupSpec& s) {
  Report r;
  const auto res = imgcontained_build(a, s);
  r.doc = {{"kind", "image_containment"}, {"A", a}, {"spec", s.str()}, {"deuber", res.block}, {"meta", res.meta}};
  r.text = "# scale d = " + res.meta.scale.str() + ", rank l = " + std::to_string(res.meta.rank) +
           ", c = " + res.meta.c.str() + "\n# lifted certificate " +
           partition_text(res.block.lifted_certificate.partition) + "\n" + qmat_block("D", res.block.D);
  return r;
}

Report sign_report(const QMatrix& a, const std::vector<int>& signs) {
  Report r;
  const auto sa = sign_adapter(a, {signs});
  r.doc = {{"kind", "sign_adapter"}, {"A", a},         {"signs", signs},
           {"col_order", sa.col_order}, {"E", sa.E}, {"E_inv", sa.E_inv}, {"C", sa.C}};
  r.text = "# column order " + index_set(sa.col_order) + "\n" + qmat_block("E", sa.E) +
           qmat_block("E^-1", sa.E_inv) + qmat_block("C = A E^-1", sa.C);
  return r;
}

Report projector_report(const QMatrix& a) {
  Report r;
  const QMatrix c = ipr_projector(a);
  r.doc = {{"kind", "ipr_projector"}, {"A", a}, {"C", c}};
  r.text = format_qmat(c);
  return r;
}

Report mpc_report(const MpcParams& p) {
  Report r;
  const QMatrix m = mpc_matrix(p);
  r.doc = {{"kind", "mpc"}, {"m", p.m}, {"p", p.p}, {"c", p.c}, {"matrix", m}};
  r.text = format_qmat(m);
  return r;
}

std::vector<Support> supports_for(const QMatrix& a, long n, SolutionMode mode, long denom_cap) {
  return mode == SolutionMode::Kernel ? kernel_supports(a, n) : image_supports(a, n, denom_cap);
}

Report window_report(const QMatrix& a, long n, int colors, SolutionMode mode, long denom_cap) {
  Report r;
  const auto w = window_pr(supports_for(a, n, mode, denom_cap), n, colors);
  r.doc = {{"kind", "window"}, {"matrix", a}, {"n", n}, {"colors", colors},
           {"mode", mode_name(mode)}, {"denom_cap", denom_cap}, {"result", w}};
  std::ostringstream t;
  if (w.verdict) {
    t << "verdict: true (every " << colors << "-coloring of {1.." << n << "} has a monochromatic "
      << mode_name(mode) << " solution)\n";
  } else {
    t << "verdict: false\nbad coloring: " << format_coloring(*w.bad_coloring) << "\n";
  }
  r.text = t.str();
  r.code = w.verdict ? kSuccess : kNegative;
  return r;
}

Report mono_report(const QMatrix& a, const Coloring& coloring, SolutionMode mode, long denom_cap) {
  Report r;
  const auto x = find_monochromatic(a, coloring, mode, denom_cap);
  r.doc = {{"kind", "monochromatic"}, {"matrix", a}, {"coloring", coloring}, {"mode", mode_name(mode)},
           {"denom_cap", denom_cap}, {"solution", x ? json(*x) : json(nullptr)}};
  r.text = x ? "monochromatic solution: x = " + vector_text(*x) + "\n" : "no monochromatic solution in window\n";
  r.code = x ? kSuccess : kNegative;
  return r;
}

Report member_report(const SemigroupSpec& s, const Rational& x) {
  Report r;
  const bool in = membership(s, x);
  r.doc = {{"kind", "membership"}, {"spec", s.str()}, {"value", x}, {"member", in}};
  r.text = x.str() + (in ? " is in " : " is not in ") + s.str() + "\n";
  r.code = in ? kSuccess : kNegative;
  return r;
}

Report ap_report(long d, std::size_t rows) {
  Report r;
  const QMatrix a = ap_matrix({d, rows});
  r.doc = {{"kind", "ap_family"}, {"d", d}, {"rows", rows}, {"A", a}};
  r.text = qmat_block("A: rows (1, l*d)", a);
  if (d >= 2) {
    const QMatrix ci = ap_integer_C(d, rows);
    r.doc["integer_C"] = ci;
    r.text += qmat_block("integer C with A(a,b) = C(2a+b, a+b)", ci);
  }
  if (rows >= 3) {
    const auto pair = ap_projector_pair(d, rows);
    r.doc["B"] = pair.B;
    r.doc["C"] = pair.C;
    r.doc["failure_x"] = pair.failure_x;
    r.text += qmat_block("B with K(B) = R(A)", pair.B) + qmat_block("C from the kernel projector of B", pair.C) +
              "# A x = C (1,2) forces x = " + vector_text(pair.failure_x) + "\n";
  }
  return r;
}

Report notg_report(const SemigroupSpec& s) {
  Report r;
  const auto g = check_notG(s);
  r.doc = {{"kind", "notg"},
           {"spec", g.spec},
           {"branch", g.branch},
           {"d", g.d},
           {"A", g.A},
           {"probe", g.probe},
           {"probe_image", g.probe_image},
           {"reduced_image", g.reduced_image},
           {"witness", g.witness},
           {"checks",
            {{"image_matches", g.image_matches},
             {"scaling_is_homogeneous", g.scaling_is_homogeneous},
             {"witness_solves", g.witness_solves},
             {"witness_outside", g.witness_outside}}},
           {"confirmed", g.confirmed()}};
  std::ostringstream t;
  t << "S = " << g.spec << ", branch " << g.branch << " (" << (g.branch == 1 ? "1 not in S" : "1 in S")
    << "), d = " << g.d << "\n"
    << qmat_block("A", g.A) << "# A " << vector_text(g.probe) << " = " << vector_text(g.probe_image) << "\n"
    << "# the only x with A x = " << vector_text(g.reduced_image) << " is " << vector_text(g.witness)
    << (g.witness_outside ? ", which is not in S^2" : ", which lies in S^2") << "\n"
    << "obstruction " << (g.confirmed() ? "confirmed" : "NOT confirmed") << "\n";
  r.text = t.str();
  r.code = g.confirmed() ? kSuccess : kNegative;
  return r;
}

}  // namespace

Report replay(const json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  auto mat = [&](const char* key) { return doc.at(key).get<QMatrix>(); };
  if (kind == "columns_condition") {
    Report r = cc_report(mat("matrix"));
    // Any certificate that verifies is accepted, canonical or not.
    if (!doc.at("certificate").is_null()) {
      const auto cert = doc.at("certificate").get<ColumnsCertificate>();
      if (verify_cc_certificate(mat("matrix"), cert)) r.doc["certificate"] = cert;
    }
    return r;
  }
  if (kind == "kernel_projector") return k2i_report(mat("B"));
  if (kind == "image_to_kernel") return i2k_report(mat("A"));
  if (kind == "image_containment")
    return containment_report(mat("A"), SemigroupSpec::parse(doc.at("spec").get<std::string>()));
  if (kind == "sign_adapter") return sign_report(mat("A"), doc.at("signs").get<std::vector<int>>());
  if (kind == "ipr_projector") return projector_report(mat("A"));
  if (kind == "mpc")
    return mpc_report({doc.at("m").get<std::size_t>(), doc.at("p").get<std::size_t>(), doc.at("c").get<std::size_t>()});
  if (kind == "window")
    return window_report(mat("matrix"), doc.at("n").get<long>(), doc.at("colors").get<int>(),
                         parse_mode(doc.at("mode").get<std::string>()), doc.at("denom_cap").get<long>());
  if (kind == "monochromatic")
    return mono_report(mat("matrix"), doc.at("coloring").get<Coloring>(), parse_mode(doc.at("mode").get<std::string>()),
                       doc.at("denom_cap").get<long>());
  if (kind == "membership")
    return member_report(SemigroupSpec::parse(doc.at("spec").get<std::string>()), doc.at("value").get<Rational>());
  if (kind == "ap_family") return ap_report(doc.at("d").get<long>(), doc.at("rows").get<std::size_t>());
  if (kind == "notg") return notg_report(SemigroupSpec::parse(doc.at("spec").get<std::string>()));
  throw ParseError("unknown report kind '" + kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernel/image partition regularity toolkit over Q", "prdual"};
  app.require_subcommand(1, 1);

  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "Emit the report as JSON");
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");

  std::string matrix_path;
  std::optional<Report> report;
  std::function<Report()> action;

  auto* cc = app.add_subcommand("cc", "Columns condition");
  cc->fallthrough();
  auto* cc_check = cc->add_subcommand("check", "Search for a columns-condition certificate");
  cc_check->fallthrough();
  cc_check->add_option("matrix", matrix_path, "Matrix (.qmat)")->required();
  cc_check->callback([&] { action = [&] { return cc_report(read_qmat(matrix_path)); }; });
  cc->require_subcommand(1, 1);

  auto* k2i = app.add_subcommand("dualize-k2i", "Kernel matrix B -> image matrix via the kernel projector");
  k2i->fallthrough();
  k2i->add_option("matrix", matrix_path, "Matrix B (.qmat)")->required();
  k2i->callback([&] { action = [&] { return k2i_report(read_qmat(matrix_path)); }; });

  std::string spec_literal, signs_literal;
  auto* i2k = app.add_subcommand("dualize-i2k", "Image matrix A -> kernel matrix B with K(B) = R(A)");
  i2k->fallthrough();
  i2k->add_option("matrix", matrix_path, "Matrix A (.qmat)")->required();
  auto* spec_opt = i2k->add_option("--spec", spec_literal, "Build the Deuber-style kernel system over this subgroup");
  auto* signs_opt = i2k->add_option("--signs", signs_literal, "Sign pattern a (comma separated) for the E-adapter");
  spec_opt->excludes(signs_opt);
  i2k->callback([&] {
    action = [&] {
      const QMatrix a = read_qmat(matrix_path);
      if (!spec_literal.empty()) return containment_report(a, SemigroupSpec::parse(spec_literal));
      if (!signs_literal.empty()) return sign_report(a, parse_int_list(signs_literal));
      return i2k_report(a);
    };
  });

  auto* proj = app.add_subcommand("projector", "Idempotent C with R(C) = R(A)");
  proj->fallthrough();
  proj->add_option("matrix", matrix_path, "Matrix A (.qmat)")->required();
  proj->callback([&] { action = [&] { return projector_report(read_qmat(matrix_path)); }; });

  MpcParams mpc_params;
  auto* mpc = app.add_subcommand("mpc", "Generate an (m,p,c) matrix");
  mpc->fallthrough();
  mpc->add_option("--m", mpc_params.m)->required();
  mpc->add_option("--p", mpc_params.p)->required();
  mpc->add_option("--c", mpc_params.c)->required();
  mpc->callback([&] { action = [&] { return mpc_report(mpc_params); }; });

  long n = 0, denom_cap = 1;
  int colors = 2;
  std::string mode = "kernel", coloring_literal, value_literal;
  auto* oracle = app.add_subcommand("oracle", "Finite-window ground truth");
  oracle->fallthrough();
  oracle->require_subcommand(1, 1);
  auto* window = oracle->add_subcommand("window", "Does every coloring of {1..N} force a monochromatic solution?");
  window->fallthrough();
  window->add_option("--matrix", matrix_path)->required();
  window->add_option("--n", n)->required();
  window->add_option("--colors", colors);
  window->add_option("--mode", mode)->check(CLI::IsMember({"kernel", "image"}));
  window->add_option("--denom-cap", denom_cap);
  window->callback([&] {
    action = [&] { return window_report(read_qmat(matrix_path), n, colors, parse_mode(mode), denom_cap); };
  });
  auto* mono = oracle->add_subcommand("mono", "Least monochromatic solution under a given coloring");
  mono->fallthrough();
  mono->add_option("--matrix", matrix_path)->required();
  mono->add_option("--coloring", coloring_literal, "JSON array of color indices, or a file holding one")->required();
  mono->add_option("--mode", mode)->check(CLI::IsMember({"kernel", "image"}));
  mono->add_option("--denom-cap", denom_cap);
  mono->callback([&] {
    action = [&] {
      std::string text = coloring_literal;
      if (!text.empty() && text.front() != '[') {
        std::ifstream in(text);
        if (!in) throw ParseError("cannot open coloring file '" + text + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      Coloring coloring;
      try {
        coloring = json::parse(text).get<Coloring>();
      } catch (const json::exception& e) {
        throw ParseError(std::string("bad coloring: ") + e.what());
      }
      return mono_report(read_qmat(matrix_path), coloring, parse_mode(mode), denom_cap);
    };
  });
  auto* member = oracle->add_subcommand("member", "Semigroup membership");
  member->fallthrough();
  member->add_option("--spec", spec_literal)->required();
  member->add_option("--value", value_literal)->required();
  member->callback([&] {
    action = [&] { return member_report(SemigroupSpec::parse(spec_literal), Rational::parse(value_literal)); };
  });

  std::string family_name;
  long family_d = 1;
  std::size_t family_rows = 5;
  auto* family = app.add_subcommand("family", "Built-in matrix families");
  family->fallthrough();
  family->add_option("--family", family_name)->required()->check(CLI::IsMember({"ap", "notg"}));
  family->add_option("--d", family_d);
  family->add_option("--rows", family_rows);
  family->add_option("--spec", spec_literal);
  family->callback([&] {
    action = [&] {
      if (family_name == "ap") return ap_report(family_d, family_rows);
      if (spec_literal.empty()) throw ParseError("--family notg needs --spec");
      return notg_report(SemigroupSpec::parse(spec_literal));
    };
  });

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Replay a JSON report and compare bit-exactly");
  verify->fallthrough();
  verify->add_option("report", report_path)->required();
  verify->add_option("--matrix", matrix_path, "Check a bare certificate against this matrix");
  verify->callback([&] {
    action = [&] {
      std::ifstream in(report_path);
      if (!in) throw ParseError("cannot open '" + report_path + "'");
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
      }
      Report r;
      if (!matrix_path.empty()) {
        const QMatrix a = read_qmat(matrix_path);
        const auto cert = doc.get<ColumnsCertificate>();
        const bool ok = verify_cc_certificate(a, cert);
        r.doc = {{"kind", "certificate_check"}, {"matrix", a}, {"certificate", cert}, {"valid", ok}};
        r.text = std::string("certificate ") + partition_text(cert.partition) + (ok ? " verifies\n" : " is rejected\n");
        r.code = ok ? kSuccess : kNegative;
        return r;
      }
      Report replayed = replay(doc);
      const bool same = replayed.doc == doc;
      r.doc = {{"kind", "replay"}, {"reproduced", same}, {"replayed_kind", doc.at("kind")}, {"exit_code", replayed.code}};
      r.text = std::string(same ? "reproduced" : "MISMATCH") + ": " + doc.at("kind").get<std::string>() +
               " report, replayed exit code " + std::to_string(replayed.code) + "\n";
      r.code = same ? kSuccess : kNegative;
      return r;
    };
  });

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "prdual: " << e.what() << "\n";
    return kUsage;
  }

  try {
    report = action();
  } catch (const json::exception& e) {
    err << "prdual: malformed report: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "prdual: " << e.what() << "\n";
    return kUsage;
  }

  const std::string body = as_json ? report->doc.dump(2) + "\n" : report->text;
  if (out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "prdual: cannot write '" << out_path << "'\n";
      return kUsage;
    }
    f << body;
  }
  return report->code;
}

}  // namespace prdual::cli
