#include "prdual/json_io.hpp"

#include "prdual/errors.hpp"

namespace prdual {

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (j.is_string()) r = Rational::parse(j.get<std::string>());
  else if (j.is_number_integer()) r = Rational(j.get<long>());
  else throw ParseError("rational must be a string or an integer");
}

void to_json(json& j, const QMatrix& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(m.row(i));
}

void from_json(const json& j, QMatrix& m) {
  // {"rows": u, "cols": v, "entries": [...]} keeps u x 0 shapes intact.
  if (j.is_object()) {
    const auto u = j.at("rows").get<std::size_t>(), v = j.at("cols").get<std::size_t>();
    const auto entries = j.at("entries").get<std::vector<QVector>>();
    if (entries.size() != u) throw ParseError("matrix row count mismatch");
    m = v == 0 ? QMatrix(u, 0) : QMatrix::from_rows(entries, v);
    return;
  }
  const auto rows = j.get<std::vector<QVector>>();
  m = rows.empty() ? QMatrix() : QMatrix::from_rows(rows, rows.front().size());
}

void to_json(json& j, const Witness& w) { j = {{"columns", w.columns}, {"coefficients", w.coefficients}}; }

void from_json(const json& j, Witness& w) {
  j.at("columns").get_to(w.columns);
  j.at("coefficients").get_to(w.coefficients);
}

void to_json(json& j, const ColumnsCertificate& c) {
  j = {{"partition", c.partition}, {"witnesses", c.witnesses}};
}

void from_json(const json& j, ColumnsCertificate& c) {
  j.at("partition").get_to(c.partition);
  c.witnesses = j.value("witnesses", std::vector<Witness>{});
}

namespace {
json shaped(const QMatrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", json(m)}}; }
}  // namespace

void to_json(json& j, const ProjectorResult& p) { j = {{"T", p.T}, {"C", p.C}, {"D", shaped(p.D)}}; }

void from_json(const json& j, ProjectorResult& p) {
  j.at("T").get_to(p.T);
  j.at("C").get_to(p.C);
  j.at("D").get_to(p.D);
}

void to_json(json& j, const DependencyResult& d) { j = {{"L", d.L}, {"J", d.J}, {"B", d.B}}; }

void from_json(const json& j, DependencyResult& d) {
  j.at("L").get_to(d.L);
  j.at("J").get_to(d.J);
  j.at("B").get_to(d.B);
}

void to_json(json& j, const DeuberBlock& b) {
  const std::size_t u = b.D.cols() / 3, rows_b = b.D.rows() - u;
  j = {{"D", b.D},
       {"c", b.c},
       {"blocks",
        {{"j", rows_b},
         {"u", u},
         {"layout", {{"B'", "O", "O"}, {"I", "cI", "-cI"}}}}},
       {"source_certificate", b.source_certificate},
       {"lifted_certificate", b.lifted_certificate}};
}

void from_json(const json& j, DeuberBlock& b) {
  j.at("D").get_to(b.D);
  j.at("c").get_to(b.c);
  j.at("source_certificate").get_to(b.source_certificate);
  j.at("lifted_certificate").get_to(b.lifted_certificate);
}

void to_json(json& j, const ContainmentMeta& m) {
  j = {{"scale", m.scale},         {"row_order", m.row_order}, {"col_order", m.col_order},
       {"rank", m.rank},           {"corner", m.corner},       {"c", m.c},
       {"source_cols", m.source_cols}};
}

void from_json(const json& j, ContainmentMeta& m) {
  j.at("scale").get_to(m.scale);
  j.at("row_order").get_to(m.row_order);
  j.at("col_order").get_to(m.col_order);
  j.at("rank").get_to(m.rank);
  j.at("corner").get_to(m.corner);
  j.at("c").get_to(m.c);
  j.at("source_cols").get_to(m.source_cols);
}

void to_json(json& j, const PRWitness& w) {
  j = {{"verdict", w.verdict}, {"mono_solution", nullptr}, {"bad_coloring", nullptr}};
  if (w.mono_solution) j["mono_solution"] = *w.mono_solution;
  if (w.bad_coloring) j["bad_coloring"] = *w.bad_coloring;
}

void from_json(const json& j, PRWitness& w) {
  j.at("verdict").get_to(w.verdict);
  w.mono_solution.reset();
  w.bad_coloring.reset();
  if (j.contains("mono_solution") && !j["mono_solution"].is_null()) w.mono_solution = j["mono_solution"].get<QVector>();
  if (j.contains("bad_coloring") && !j["bad_coloring"].is_null()) w.bad_coloring = j["bad_coloring"].get<Coloring>();
}

}  // namespace prdual
