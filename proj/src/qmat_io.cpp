#include "prdual/qmat_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "prdual/errors.hpp"

namespace prdual {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::size_t parse_count(const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad dimension '" + tok + "'");
  return std::stoul(tok);
}

}  // namespace

QMatrix parse_qmat(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty .qmat input");

  std::istringstream header(lines[0]);
  std::string us, vs, extra;
  if (!(header >> us >> vs) || (header >> extra)) throw ParseError("header must be 'u v'");
  const std::size_t u = parse_count(us), v = parse_count(vs);

  // A u x 0 matrix has empty rows, which the blank-line filter drops.
  if (v == 0) {
    if (lines.size() != 1) throw ParseError("unexpected entries in a matrix with 0 columns");
    return QMatrix(u, 0);
  }
  if (lines.size() != u + 1)
    throw ParseError("expected " + std::to_string(u) + " rows, found " +
                     std::to_string(lines.size() - 1));

  QMatrix m(u, v);
  for (std::size_t i = 0; i < u; ++i) {
    std::istringstream row(lines[i + 1]);
    std::string tok;
    std::size_t j = 0;
    while (row >> tok) {
      if (j == v) throw ParseError("row " + std::to_string(i) + " has more than " + std::to_string(v) + " entries");
      m(i, j++) = Rational::parse(tok);
    }
    if (j != v) throw ParseError("row " + std::to_string(i) + " has " + std::to_string(j) + " entries");
  }
  return m;
}

QMatrix read_qmat(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_qmat(buf.str());
}

std::string format_qmat(const QMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace prdual
