#include "lasserre/sdpa_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace lasserre {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

bool block_is_diagonal(const SdpProblem& p, int bk) {
  int n = p.block_sizes[static_cast<size_t>(bk)];
  if (n <= 1) return false;
  auto diag = [&](const Eigen::MatrixXd& m) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m(i, j) != 0.0) return false;
    return true;
  };
  if (!diag(p.objective[static_cast<size_t>(bk)])) return false;
  for (const auto& row : p.constraints)
    if (!diag(row[static_cast<size_t>(bk)])) return false;
  return true;
}

}  // namespace

void write_sdpa(const SdpProblem& p, std::ostream& os) {
  p.validate();
  const int m = p.num_constraints();
  const int nb = p.num_blocks();
  os << m << "\n" << nb << "\n";
  for (int bk = 0; bk < nb; ++bk) {
    if (bk) os << " ";
    int n = p.block_sizes[static_cast<size_t>(bk)];
    os << (block_is_diagonal(p, bk) ? -n : n);
  }
  os << "\n";
  for (int j = 0; j < m; ++j) {
    if (j) os << " ";
    os << fmt17(p.rhs[static_cast<size_t>(j)]);
  }
  os << "\n";
  auto emit = [&](int matno, int bk, const Eigen::MatrixXd& mat) {
    int n = p.block_sizes[static_cast<size_t>(bk)];
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (mat(i, j) != 0.0)
          os << matno << " " << (bk + 1) << " " << (i + 1) << " " << (j + 1) << " "
             << fmt17(mat(i, j)) << "\n";
  };
  for (int bk = 0; bk < nb; ++bk) emit(0, bk, p.objective[static_cast<size_t>(bk)]);
  for (int j = 0; j < m; ++j)
    for (int bk = 0; bk < nb; ++bk) emit(j + 1, bk, p.constraints[static_cast<size_t>(j)][static_cast<size_t>(bk)]);
}

void write_sdpa(const SdpProblem& p, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_sdpa: cannot open " + path);
  write_sdpa(p, os);
}

SdpaParseError::SdpaParseError(int line, int column, const std::string& token,
                               const std::string& what)
    : std::runtime_error("sdpa parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + " near '" + token + "': " + what),
      line_(line), column_(column), token_(token) {}

namespace {

struct Tokenizer {
  std::istream& is;
  int line = 1;
  int col = 0;
  std::string tok;
  int tok_line = 1, tok_col = 1;

  explicit Tokenizer(std::istream& s) : is(s) {}

  // SDPA treats , ( ) { } as separators; comment lines start with * or "
  bool next() {
    tok.clear();
    int c;
    while ((c = is.get()) != EOF) {
      ++col;
      if (c == '\n') {
        ++line;
        col = 0;
        continue;
      }
      if (c == '*' || c == '"') {  // comment to end of line
        while ((c = is.get()) != EOF && c != '\n') {}
        ++line;
        col = 0;
        continue;
      }
      if (std::isspace(c) || c == ',' || c == '(' || c == ')' || c == '{' || c == '}') continue;
      break;
    }
    if (c == EOF) return false;
    tok_line = line;
    tok_col = col;
    tok.push_back(static_cast<char>(c));
    while ((c = is.peek()) != EOF && !std::isspace(c) && c != ',' && c != '(' && c != ')' &&
           c != '{' && c != '}') {
      tok.push_back(static_cast<char>(is.get()));
      ++col;
    }
    return true;
  }

  long expect_int(const char* what) {
    if (!next()) throw SdpaParseError(line, col, "<eof>", std::string("expected ") + what);
    try {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw SdpaParseError(tok_line, tok_col, tok, std::string("expected integer ") + what);
    }
  }

  double expect_double(const char* what) {
    if (!next()) throw SdpaParseError(line, col, "<eof>", std::string("expected ") + what);
    try {
      size_t pos = 0;
      double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw SdpaParseError(tok_line, tok_col, tok, std::string("expected number ") + what);
    }
  }
};

}  // namespace

SdpProblem read_sdpa(std::istream& is) {
  Tokenizer tz(is);
  long m = tz.expect_int("mDIM");
  if (m < 0) throw SdpaParseError(tz.tok_line, tz.tok_col, tz.tok, "mDIM must be nonnegative");
  long nb = tz.expect_int("nBLOCK");
  if (nb < 0) throw SdpaParseError(tz.tok_line, tz.tok_col, tz.tok, "nBLOCK must be nonnegative");
  std::vector<int> sizes;
  std::vector<bool> diagonal;
  for (long bk = 0; bk < nb; ++bk) {
    long s = tz.expect_int("blockStruct entry");
    if (s == 0) throw SdpaParseError(tz.tok_line, tz.tok_col, tz.tok, "zero block size");
    sizes.push_back(static_cast<int>(std::abs(s)));
    diagonal.push_back(s < 0);
  }
  SdpProblem p = SdpProblem::zeros(sizes, static_cast<int>(m));
  for (long j = 0; j < m; ++j) p.rhs[static_cast<size_t>(j)] = tz.expect_double("objective entry");

  while (tz.next()) {
    auto as_int = [&](const char* what) {
      try {
        size_t pos = 0;
        long v = std::stol(tz.tok, &pos);
        if (pos != tz.tok.size()) throw std::invalid_argument("trailing");
        return v;
      } catch (const std::exception&) {
        throw SdpaParseError(tz.tok_line, tz.tok_col, tz.tok, std::string("expected integer ") + what);
      }
    };
    long matno = as_int("matno");
    long bk = tz.expect_int("blockno");
    long i = tz.expect_int("row");
    long j = tz.expect_int("column");
    double v = tz.expect_double("value");
    if (matno < 0 || matno > m)
      throw SdpaParseError(tz.tok_line, tz.tok_col, std::to_string(matno), "matno out of range");
    if (bk < 1 || bk > nb)
      throw SdpaParseError(tz.tok_line, tz.tok_col, std::to_string(bk), "blockno out of range");
    int n = sizes[static_cast<size_t>(bk - 1)];
    if (i < 1 || i > n || j < 1 || j > n || i > j)
      throw SdpaParseError(tz.tok_line, tz.tok_col,
                           std::to_string(i) + "," + std::to_string(j),
                           "indices must be 1-based upper triangle");
    if (diagonal[static_cast<size_t>(bk - 1)] && i != j)
      throw SdpaParseError(tz.tok_line, tz.tok_col, std::to_string(j),
                           "off-diagonal entry in a diagonal block");
    p.add_entry(static_cast<int>(matno) - 1, static_cast<int>(bk) - 1,
                static_cast<int>(i) - 1, static_cast<int>(j) - 1, v);
  }
  return p;
}

SdpProblem read_sdpa(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_sdpa: cannot open " + path);
  return read_sdpa(is);
}

}  // namespace lasserre
