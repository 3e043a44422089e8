#include "fpcat/presentation.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

#include "fpcat/normal_form.hpp"

namespace fpcat {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& message)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + message), line(l), column(c) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::string_view text;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    while (!text.empty()) {
      ++number;
      std::size_t end = text.find('\n');
      std::string_view line = text.substr(0, end);
      text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || line.front() == '#') continue;
      lines_.push_back({number, line});
    }
    last_line_ = number + 1;
  }

  bool done() const { return next_ == lines_.size(); }

  std::pair<std::size_t, std::vector<Token>> next(const char* expected) {
    if (done()) throw ParseError(last_line_, 1, std::string("unexpected end of input, expected ") + expected);
    const Line& line = lines_[next_++];
    std::vector<Token> tokens;
    std::size_t start = 0;
    while (true) {
      std::size_t end = line.text.find(' ', start);
      std::string_view tok = line.text.substr(start, end == std::string_view::npos ? end : end - start);
      if (tok.empty()) throw ParseError(line.number, start + 1, "expected a value separated by a single space");
      tokens.push_back({tok, start + 1});
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return {line.number, tokens};
  }

  void finish() {
    if (!done()) throw ParseError(lines_[next_].number, 1, "unexpected content after the last block");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 1;
};

std::size_t parse_size(std::size_t line, const Token& t) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return value;
}

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

Scalar parse_scalar(std::size_t line, const Token& t, const Ring& ring) {
  std::string_view s = t.text;
  std::string_view body = !s.empty() && s.front() == '-' ? s.substr(1) : s;
  std::size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError(line, t.column, "malformed entry '" + std::string(s) + "'");
  Scalar x;
  if (x.set_str(std::string(s), 10) != 0 || (!den.empty() && mpz_class(std::string(den)) == 0))
    throw ParseError(line, t.column, "malformed entry '" + std::string(s) + "'");
  x.canonicalize();
  if (!ring.contains(x))
    throw RingError(std::to_string(line) + ":" + std::to_string(t.column) + ": entry " + std::string(s) +
                    " is not an element of " + ring.name());
  return ring.normalize(x);
}

Ring parse_ring_line(Reader& in) {
  auto [line, tokens] = in.next("'ring <R>'");
  if (tokens.size() != 2 || tokens[0].text != "ring")
    throw ParseError(line, 1, "expected 'ring Z', 'ring Q' or 'ring Z/<n>'");
  try {
    return Ring::parse(tokens[1].text);
  } catch (const RingError& e) {
    throw RingError(std::to_string(line) + ":" + std::to_string(tokens[1].column) + ": " + e.what());
  }
}

Matrix parse_block(Reader& in, const Ring& ring, std::string_view keyword, std::size_t* header_line = nullptr) {
  std::string expected = "'" + std::string(keyword) + " <rows> <cols>'";
  auto [line, tokens] = in.next(expected.c_str());
  if (tokens.size() != 3 || tokens[0].text != keyword) throw ParseError(line, 1, "expected " + expected);
  if (header_line) *header_line = line;
  std::size_t rows = parse_size(line, tokens[1]), cols = parse_size(line, tokens[2]);
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows && cols > 0; ++i) {
    std::string what = "row " + std::to_string(i + 1) + " of " + std::to_string(rows);
    auto [row_line, row] = in.next(what.c_str());
    if (row.size() != cols) {
      std::size_t column = row.size() > cols ? row[cols].column : row.back().column + row.back().text.size();
      throw ParseError(row_line, column,
                       "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, parse_scalar(row_line, row[j], ring));
  }
  return m;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Reader in(text);
  Ring ring = parse_ring_line(in);
  Matrix m = parse_block(in, ring, "matrix");
  in.finish();
  return {ring, std::move(m)};
}

MorphismPresentation parse_morphism(std::string_view text) {
  Reader in(text);
  Ring ring = parse_ring_line(in);
  Matrix source = parse_block(in, ring, "matrix");
  Matrix target = parse_block(in, ring, "matrix");
  std::size_t map_line = 0;
  Matrix map = parse_block(in, ring, "map", &map_line);
  if (map.rows() != source.cols() || map.cols() != target.cols())
    throw ParseError(map_line, 5,
                     "map must be " + std::to_string(source.cols()) + "x" + std::to_string(target.cols()) +
                         " to match the generators");
  in.finish();
  return {{ring, std::move(source)}, {ring, std::move(target)}, std::move(map)};
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "ring " << p.ring.name() << "\nmatrix " << p.relations.rows() << " " << p.relations.cols() << "\n";
  for (std::size_t i = 0; i < p.relations.rows(); ++i) {
    for (std::size_t j = 0; j < p.relations.cols(); ++j) out << (j ? " " : "") << p.relations(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

CanonicalForm canonical_form(const Presentation& p) {
  const Matrix& rel = p.relations;
  CanonicalForm c;
  if (p.ring.is_rationals()) {
    std::size_t rank = 0;
    Matrix h = hnf(rel).h;
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (!h.row_range(i, 1).is_zero()) ++rank;
    c.free_rank = rel.cols() - rank;
    return c;
  }
  Ring z = Ring::integers();
  Matrix m(z, rel.rows(), rel.cols(), rel.entries());
  if (p.ring.is_integers_mod())
    m = stack(m, scale(Scalar(p.ring.modulus()), Matrix::identity(z, rel.cols())));
  Matrix s = snf(m).s;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) {
    mpz_class d = abs(s(i, i).get_num());
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) c.torsion.push_back(d);
  }
  c.free_rank = rel.cols() - nonzero;
  return c;
}

Presentation canonical_presentation(const CanonicalForm& c, const Ring& ring) {
  std::size_t t = c.torsion.size();
  Matrix m(ring, t, t + c.free_rank);
  for (std::size_t i = 0; i < t; ++i) m.set(i, i, ring.normalize(Scalar(c.torsion[i])));
  return {ring, std::move(m)};
}

std::string render_canonical(const CanonicalForm& c) {
  std::string s = "free " + std::to_string(c.free_rank) + "; torsion";
  for (const auto& d : c.torsion) s += " " + d.get_str();
  return s;
}

namespace {

nlohmann::json scalar_json(const Scalar& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

}  // namespace

std::string render_json(const CanonicalForm& c, const Ring& ring) {
  Presentation p = canonical_presentation(c, ring);
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t i = 0; i < p.relations.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < p.relations.cols(); ++j) row.push_back(scalar_json(p.relations(i, j)));
    matrix.push_back(std::move(row));
  }
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& d : c.torsion) torsion.push_back(scalar_json(Scalar(d)));
  nlohmann::json out = {
      {"ring", ring.name()},
      {"free_rank", c.free_rank},
      {"torsion", torsion},
      {"presentation",
       {{"ring", ring.name()}, {"rows", p.relations.rows()}, {"cols", p.relations.cols()}, {"matrix", matrix}}}};
  return out.dump();
}

}  // namespace fpcat
