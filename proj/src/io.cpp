#include "fresco/io.hpp"

#include <fstream>
#include <sstream>

namespace fresco {

ParseError::ParseError(int line_, const std::string& what)
    : std::invalid_argument("line " + std::to_string(line_) + ": " + what), line(line_) {}

namespace {

struct Line {
  int number;
  std::string keyword, rest;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream is(raw);
    std::string kw;
    if (!(is >> kw)) continue;
    std::string rest;
    std::getline(is, rest);
    out.push_back({n, kw, rest});
  }
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
  return std::stoi(tok);
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  return f;
}

}  // namespace

FrescoPresentation parse_presentation(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.size() < 2) throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'rank' and 'lambdas' lines");
  const Line& head = lines[0];
  if (head.keyword != "rank") throw ParseError(head.number, "expected 'rank k order N'");
  std::istringstream hs(head.rest);
  std::string k_tok, order_kw, n_tok, extra;
  hs >> k_tok >> order_kw >> n_tok;
  if (order_kw != "order" || (hs >> extra)) throw ParseError(head.number, "expected 'rank k order N'");
  int k = parse_int(k_tok, head.number, "rank");
  int N = parse_int(n_tok, head.number, "order");
  if (k < 1) throw ParseError(head.number, "rank must be positive");

  const Line& lam = lines[1];
  if (lam.keyword != "lambdas") throw ParseError(lam.number, "expected 'lambdas ...'");
  std::vector<Scalar> lambdas;
  std::istringstream ls(lam.rest);
  for (std::string t; ls >> t;) {
    try {
      lambdas.push_back(parse_scalar(t));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lam.number, e.what());
    }
  }
  if (static_cast<int>(lambdas.size()) != k)
    throw ParseError(lam.number, "expected " + std::to_string(k) + " lambdas, got " + std::to_string(lambdas.size()));

  std::vector<TruncSeries> S(k, TruncSeries::one(N));
  std::vector<bool> seen(k, false);
  for (size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.keyword != "S") throw ParseError(l.number, "unexpected keyword '" + l.keyword + "'");
    std::istringstream ss(l.rest);
    std::string j_tok;
    ss >> j_tok;
    int j = parse_int(j_tok, l.number, "S index");
    if (j < 1 || j > k) throw ParseError(l.number, "S index out of range 1.." + std::to_string(k));
    if (seen[j - 1]) throw ParseError(l.number, "S " + std::to_string(j) + " given twice");
    seen[j - 1] = true;
    std::string body;
    std::getline(ss, body);
    try {
      S[j - 1] = parse_sparse(body, N);
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.number, e.what());
    }
    if (S[j - 1][0] != 1) throw ParseError(l.number, "constant term of S " + std::to_string(j) + " must be 1");
  }
  try {
    return make_presentation(lambdas, S, N);
  } catch (const InvalidPresentation& e) {
    throw ParseError(lam.number, e.what());
  }
}

FrescoPresentation parse_presentation(const std::string& text) {
  std::istringstream is(text);
  return parse_presentation(is);
}

FrescoPresentation read_presentation(const std::string& path) {
  auto f = open(path);
  return parse_presentation(f);
}

ChangeOfVariable parse_theta(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.size() != 1 || lines[0].keyword != "theta")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected a single 'theta e:c ...' line");
  const Line& l = lines[0];
  int top = 1;
  std::istringstream is(l.rest);
  for (std::string t; is >> t;) {
    auto c = t.find(':');
    if (c == std::string::npos) throw ParseError(l.number, "expected exponent:coefficient, got '" + t + "'");
    top = std::max(top, parse_int(t.substr(0, c), l.number, "exponent"));
  }
  TruncSeries th(0);
  try {
    th = parse_sparse(l.rest, top);
  } catch (const std::invalid_argument& e) {
    throw ParseError(l.number, e.what());
  }
  if (th[0] != 0) throw ParseError(l.number, "theta must have no constant term");
  if (th[1] == 0) throw ParseError(l.number, "coefficient of a in theta must be nonzero");
  return ChangeOfVariable(th);
}

ChangeOfVariable parse_theta(const std::string& text) {
  std::istringstream is(text);
  return parse_theta(is);
}

ChangeOfVariable read_theta(const std::string& path) {
  auto f = open(path);
  return parse_theta(f);
}

std::string format_theta(const ChangeOfVariable& cv) { return "theta " + format_sparse(cv.theta); }

}  // namespace fresco
