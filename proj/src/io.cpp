#include "stablerank/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace stablerank {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string raw(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    // ':' separates a coefficient from its exponents; make it its own token.
    std::string spaced;
    for (char c : raw) {
      if (c == ':')
        spaced += " : ";
      else
        spaced += c;
    }
    std::istringstream is(spaced);
    Line line{number, {}};
    for (std::string tok; is >> tok;)
      line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
    if (end == text.size())
      break;
  }
  return lines;
}

int to_int(const std::string& tok, int line) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

Rational to_rational(const std::string& tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
}

std::vector<int> int_row(const Line& l, std::size_t expected, const char* what) {
  if (l.tokens.size() != expected)
    throw ParseError(l.number, std::string(what) + " needs " + std::to_string(expected) +
                                   " entries, got " + std::to_string(l.tokens.size()));
  std::vector<int> row;
  row.reserve(expected);
  for (const auto& t : l.tokens)
    row.push_back(to_int(t, l.number));
  return row;
}

int header_arg(const Line& header, std::size_t index) {
  int v = to_int(header.tokens[index], header.number);
  if (v < 1)
    throw ParseError(header.number, "header values must be >= 1");
  return v;
}

void require_header_arity(const Line& header, std::size_t args) {
  if (header.tokens.size() != args + 1)
    throw ParseError(header.number, "header '" + header.tokens[0] + "' takes " +
                                        std::to_string(args) + " argument(s)");
}

// Rejects a repeated row, reporting the line of the second occurrence.
template <typename Row>
void reject_duplicates(const std::vector<Row>& rows, const std::vector<int>& line_numbers,
                       const char* what) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rows[i] == rows[j])
        throw ParseError(line_numbers[i], std::string("duplicate ") + what);
}

int body_or_header_line(const std::vector<Line>& lines) {
  return lines.size() > 1 ? lines[1].number : lines[0].number;
}

// Constructors validate semantics (ranges, sums); attribute their errors to
// the first body line unless a finer line is known.
template <typename F>
auto construct(const std::vector<Line>& lines, F&& make) {
  try {
    return make();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(body_or_header_line(lines), e.what());
  }
}

InputDocument parse_tensor(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  require_header_arity(h, 2);
  const int d = header_arg(h, 1);
  const int n = header_arg(h, 2);
  std::vector<IndexTuple> tuples;
  std::vector<int> numbers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto row = int_row(lines[i], static_cast<std::size_t>(d), "support tuple");
    for (int j : row)
      if (j < 1 || j > n)
        throw ParseError(lines[i].number,
                         "index " + std::to_string(j) + " outside 1.." + std::to_string(n));
    tuples.push_back(std::move(row));
    numbers.push_back(lines[i].number);
  }
  if (tuples.empty())
    throw ParseError(h.number, "tensor has no support tuples");
  reject_duplicates(tuples, numbers, "support tuple");
  return construct(lines, [&] { return InputDocument(TensorSupport(d, n, std::move(tuples))); });
}

InputDocument parse_symm(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  require_header_arity(h, 2);
  const int d = header_arg(h, 1);
  const int n = header_arg(h, 2);
  std::vector<Exponent> exps;
  std::vector<int> numbers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto row = int_row(lines[i], static_cast<std::size_t>(n), "exponent vector");
    int sum = 0;
    for (int e : row) {
      if (e < 0)
        throw ParseError(lines[i].number, "negative exponent");
      sum += e;
    }
    if (sum != d)
      throw ParseError(lines[i].number, "exponents sum to " + std::to_string(sum) +
                                            ", expected " + std::to_string(d));
    exps.push_back(std::move(row));
    numbers.push_back(lines[i].number);
  }
  if (exps.empty())
    throw ParseError(h.number, "symmetric tensor has no support");
  reject_duplicates(exps, numbers, "exponent vector");
  return construct(lines, [&] { return InputDocument(SymmetricSupport(d, n, std::move(exps))); });
}

InputDocument parse_mideal(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  require_header_arity(h, 1);
  const int n = header_arg(h, 1);
  std::vector<Exponent> gens;
  std::vector<int> numbers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto row = int_row(lines[i], static_cast<std::size_t>(n), "generator");
    if (std::any_of(row.begin(), row.end(), [](int e) { return e < 0; }))
      throw ParseError(lines[i].number, "negative exponent");
    gens.push_back(std::move(row));
    numbers.push_back(lines[i].number);
  }
  if (gens.empty())
    throw ParseError(h.number, "monomial ideal has no generators");
  reject_duplicates(gens, numbers, "generator");
  return construct(lines, [&] { return InputDocument(MonomialIdeal(n, std::move(gens))); });
}

InputDocument parse_pideal(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  require_header_arity(h, 1);
  const int n = header_arg(h, 1);
  std::vector<SparsePolynomial> gens;
  SparsePolynomial current(n);
  bool open = false; // current generator has at least one term
  auto close = [&](int line) {
    if (!open)
      throw ParseError(line, "empty generator");
    gens.push_back(std::move(current));
    current = SparsePolynomial(n);
    open = false;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() == 1 && l.tokens[0] == "--") {
      close(l.number);
      continue;
    }
    if (l.tokens.size() != static_cast<std::size_t>(n) + 2 || l.tokens[1] != ":")
      throw ParseError(l.number, "term must read '<p>/<q> : e1 ... e" + std::to_string(n) + "'");
    Rational c = to_rational(l.tokens[0], l.number);
    if (sgn(c) == 0)
      throw ParseError(l.number, "zero coefficient");
    Exponent e;
    for (std::size_t j = 2; j < l.tokens.size(); ++j) {
      int x = to_int(l.tokens[j], l.number);
      if (x < 0)
        throw ParseError(l.number, "negative exponent");
      e.push_back(x);
    }
    if (current.terms().count(e))
      throw ParseError(l.number, "duplicate term in generator");
    current.add_term(e, c);
    open = true;
  }
  if (open)
    close(lines.back().number);
  if (gens.empty())
    throw ParseError(h.number, "polynomial ideal has no generators");
  return construct(lines, [&] { return InputDocument(PolyIdeal(n, std::move(gens))); });
}

InputDocument parse_matrix(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  require_header_arity(h, 1);
  const int n = header_arg(h, 1);
  RationalMatrix m;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != static_cast<std::size_t>(n))
      throw ParseError(l.number, "matrix row needs " + std::to_string(n) + " entries");
    RationalVector row;
    for (const auto& t : l.tokens)
      row.push_back(to_rational(t, l.number));
    m.push_back(std::move(row));
  }
  if (m.size() != static_cast<std::size_t>(n))
    throw ParseError(lines.back().number, "matrix needs " + std::to_string(n) + " rows, got " +
                                              std::to_string(m.size()));
  return construct(lines, [&] { return InputDocument(LinearChange(std::move(m))); });
}

template <typename Container>
void write_row(std::ostream& os, const Container& row) {
  bool first = true;
  for (const auto& x : row) {
    if (!first)
      os << ' ';
    first = false;
    os << x;
  }
  os << '\n';
}

} // namespace

std::string_view kind_name(const InputDocument& doc) {
  static constexpr std::string_view names[] = {"tensor", "symm", "mideal", "pideal", "matrix"};
  return names[doc.index()];
}

InputDocument parse_input(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty())
    throw ParseError(1, "empty input: expected a header line");
  const std::string& kind = lines[0].tokens[0];
  if (kind == "tensor")
    return parse_tensor(lines);
  if (kind == "symm")
    return parse_symm(lines);
  if (kind == "mideal")
    return parse_mideal(lines);
  if (kind == "pideal")
    return parse_pideal(lines);
  if (kind == "matrix")
    return parse_matrix(lines);
  throw ParseError(lines[0].number, "unknown header '" + kind + "'");
}

std::string serialize(const InputDocument& doc) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TensorSupport>) {
          os << "tensor " << v.order() << ' ' << v.dim() << '\n';
          for (const auto& t : v.tuples())
            write_row(os, t);
        } else if constexpr (std::is_same_v<T, SymmetricSupport>) {
          os << "symm " << v.degree() << ' ' << v.vars() << '\n';
          for (const auto& e : v.exponents())
            write_row(os, e);
        } else if constexpr (std::is_same_v<T, MonomialIdeal>) {
          os << "mideal " << v.vars() << '\n';
          for (const auto& g : v.generators())
            write_row(os, g);
        } else if constexpr (std::is_same_v<T, PolyIdeal>) {
          os << "pideal " << v.vars() << '\n';
          bool first = true;
          for (const auto& g : v.generators()) {
            if (!first)
              os << "--\n";
            first = false;
            for (const auto& [e, c] : g.terms()) {
              os << to_string(c) << " : ";
              write_row(os, e);
            }
          }
        } else {
          os << "matrix " << v.dim() << '\n';
          for (const auto& row : v.matrix()) {
            std::vector<std::string> cells;
            for (const auto& x : row)
              cells.push_back(to_string(x));
            write_row(os, cells);
          }
        }
      },
      doc);
  return os.str();
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

} // namespace stablerank
