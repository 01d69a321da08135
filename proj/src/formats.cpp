#include "formats.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "error.hpp"

namespace gexp::formats {

namespace {

std::string strip_comments(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n') in_comment = false;
    else if (ch == '#') in_comment = true;
    if (!in_comment) out.push_back(ch);
  }
  return out;
}

long long to_ll(const std::string& tok, const char* what) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(errc::invalid, std::string("expected an integer for ") + what + ", got '" + tok + "'");
  }
  require(pos == tok.size(), errc::invalid,
          std::string("trailing characters in integer '") + tok + "'");
  return v;
}

}  // namespace

bracket::BracketAlgebra parse_algebra_text(const std::string& text) {
  std::istringstream in(strip_comments(text));
  std::string line;
  long long p = 0, dim = -1;
  std::vector<std::string> names;
  std::vector<std::pair<std::pair<uint32_t, uint32_t>, std::vector<long long>>> pairs;
  std::set<std::pair<uint32_t, uint32_t>> seen;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "p") {
      std::string tok;
      require(static_cast<bool>(ls >> tok), errc::invalid, "missing value after 'p'");
      p = to_ll(tok, "p");
    } else if (head == "dim") {
      std::string tok;
      require(static_cast<bool>(ls >> tok), errc::invalid, "missing value after 'dim'");
      dim = to_ll(tok, "dim");
      require(dim >= 1 && dim <= 16, errc::invalid, "dim must be between 1 and 16");
    } else if (head == "names") {
      require(dim >= 1, errc::invalid, "'names' must come after 'dim'");
      std::string tok;
      while (ls >> tok) names.push_back(tok);
      require(names.size() == static_cast<size_t>(dim), errc::invalid,
              "'names' must list one name per basis element");
    } else if (head == "bracket") {
      require(p >= 3 && dim >= 1, errc::invalid, "'bracket' must come after 'p' and 'dim'");
      std::string ti, tj, arrow;
      require(static_cast<bool>(ls >> ti >> tj >> arrow), errc::invalid,
              "bracket line needs 'bracket i j -> entries'");
      require(arrow == "->", errc::invalid, "expected '->' in bracket line");
      long long i = to_ll(ti, "bracket index"), j = to_ll(tj, "bracket index");
      require(i >= 0 && j >= 0 && i < dim && j < dim, errc::invalid,
              "bracket indices out of range");
      require(i < j, errc::invalid, "bracket lines must have i < j");
      std::vector<long long> entries;
      std::string tok;
      while (ls >> tok) entries.push_back(to_ll(tok, "bracket entry"));
      require(entries.size() == static_cast<size_t>(dim), errc::invalid,
              "bracket line needs one entry per basis element");
      auto key = std::make_pair(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
      require(seen.insert(key).second, errc::invalid, "duplicate bracket pair");
      pairs.emplace_back(key, std::move(entries));
    } else {
      fail(errc::invalid, "unknown directive '" + head + "'");
    }
  }

  require(p >= 3, errc::invalid, "file must set 'p' to an odd prime");
  require(dim >= 1, errc::invalid, "file must set 'dim'");
  auto f = fpla::PrimeField::make(static_cast<uint32_t>(p));
  auto alg = names.empty()
                 ? bracket::BracketAlgebra::zero(f, static_cast<uint32_t>(dim))
                 : bracket::BracketAlgebra::zero(f, static_cast<uint32_t>(dim), names);
  for (const auto& [key, entries] : pairs) alg.set_bracket_pair(key.first, key.second, entries);
  return alg;
}

cohom::GroupTable parse_group_table(const std::string& text) {
  std::istringstream in(strip_comments(text));
  std::string tok;
  require(static_cast<bool>(in >> tok), errc::invalid, "group table file is empty");
  long long n = to_ll(tok, "group order");
  require(n >= 1 && n <= 64, errc::invalid, "group order must be between 1 and 64");
  std::vector<uint32_t> table;
  table.reserve(static_cast<size_t>(n) * n);
  while (in >> tok) {
    long long v = to_ll(tok, "table entry");
    require(v >= 0 && v < n, errc::invalid, "table entry out of range");
    table.push_back(static_cast<uint32_t>(v));
  }
  require(table.size() == static_cast<size_t>(n) * n, errc::invalid,
          "group table needs exactly order*order entries");
  return cohom::GroupTable::from_table(std::move(table));
}

snf::ZMat parse_matrix_text(const std::string& text) {
  std::istringstream in(strip_comments(text));
  std::string tok;
  require(static_cast<bool>(in >> tok), errc::invalid, "matrix file is empty");
  long long rows = to_ll(tok, "row count");
  require(static_cast<bool>(in >> tok), errc::invalid, "matrix file needs a column count");
  long long cols = to_ll(tok, "column count");
  require(rows >= 0 && cols >= 0, errc::invalid, "matrix dimensions must be non-negative");
  require(rows <= 4096 && cols <= 4096, errc::invalid, "matrix dimensions too large");
  snf::ZMat m(static_cast<size_t>(rows), static_cast<size_t>(cols));
  size_t count = 0, total = static_cast<size_t>(rows) * static_cast<size_t>(cols);
  while (in >> tok) {
    require(count < total, errc::invalid, "matrix file has too many entries");
    size_t digits = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
    require(digits < tok.size(), errc::invalid, "bad matrix entry '" + tok + "'");
    for (size_t i = digits; i < tok.size(); ++i)
      require(std::isdigit(static_cast<unsigned char>(tok[i])), errc::invalid,
              "bad matrix entry '" + tok + "'");
    m.at(count / cols, count % cols) = snf::Int(tok);
    ++count;
  }
  require(count == total, errc::invalid, "matrix file has too few entries");
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), errc::invalid, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gexp::formats
