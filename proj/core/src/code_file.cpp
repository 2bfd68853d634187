#include "rsconcat/code_file.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace rsconcat {

void store_code(std::ostream& os, const StabilizerCodeL& code) {
  const auto& p = code.params;
  os << "rsconcat-code " << kCodeFileVersion << '\n'
     << "m " << p.m << '\n'
     << "N " << p.N << '\n'
     << "K " << p.K << '\n'
     << "n " << p.n << '\n'
     << "k " << p.k << '\n'
     << "field " << code.field.degree() << ' ' << to_hex(code.field.modulus()) << '\n'
     << "basis";
  for (Element b : code.basis.elements()) os << ' ' << to_hex(b.bits);
  os << '\n' << "S " << code.s_matrix.size() << '\n';
  for (const auto& r : code.s_matrix.rows) os << r.to_string() << '\n';
  os << "N_L " << code.n_matrix.size() << '\n';
  for (const auto& r : code.n_matrix.rows) os << r.to_string() << '\n';
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  std::string next() {
    std::string line;
    if (!std::getline(is_, line)) throw ParseError(line_no_ + 1, "unexpected end of file");
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }
  std::size_t line() const { return line_no_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, what); }

  std::vector<std::string> fields(const std::string& key, std::size_t count) {
    std::istringstream ss(next());
    std::string k;
    ss >> k;
    if (k != key) fail("expected '" + key + "', found '" + k + "'");
    std::vector<std::string> out;
    for (std::string f; ss >> f;) out.push_back(f);
    if (count && out.size() != count) fail("'" + key + "' expects " + std::to_string(count) + " value(s)");
    return out;
  }

  long long integer(const std::string& text, int base = 10) const {
    std::string_view s = text;
    if (base == 16) {
      if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X')) fail("expected hex value, got '" + text + "'");
      s.remove_prefix(2);
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) fail("bad number '" + text + "'");
    return v;
  }

  int scalar(const std::string& key) { return static_cast<int>(integer(fields(key, 1)[0])); }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

BinaryMatrix read_rows(LineReader& in, std::size_t count, std::size_t n) {
  BinaryMatrix m{n, {}};
  m.rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto text = in.next();
    if (text.size() != 2 * n + 1) {
      in.fail("row has " + std::to_string(text.size()) + " characters, expected " +
              std::to_string(2 * n + 1));
    }
    try {
      m.rows.push_back(SymplecticVector::parse(text));
    } catch (const std::invalid_argument& e) {
      in.fail(e.what());
    }
  }
  return m;
}

}  // namespace

StabilizerCodeL load_code(std::istream& is) {
  LineReader in(is);
  const auto version = in.fields("rsconcat-code", 1);
  if (in.integer(version[0]) != kCodeFileVersion) in.fail("unsupported format version " + version[0]);

  CodeParameters p;
  p.m = in.scalar("m");
  p.N = in.scalar("N");
  p.K = in.scalar("K");
  p.n = in.scalar("n");
  p.k = in.scalar("k");
  if (p.n <= 0) in.fail("n must be positive");

  const auto field_spec = in.fields("field", 2);
  const auto degree = static_cast<int>(in.integer(field_spec[0]));
  const auto modulus = static_cast<std::uint32_t>(in.integer(field_spec[1], 16));
  std::optional<Field> field;
  try {
    field.emplace(degree, modulus);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  if (degree != 2 * p.m) in.fail("field degree " + std::to_string(degree) + " != 2m");

  std::vector<Element> beta;
  for (const auto& h : in.fields("basis", 0)) beta.push_back({static_cast<std::uint32_t>(in.integer(h, 16))});
  std::optional<SelfDualBasis> basis;
  try {
    basis.emplace(*field, std::move(beta));
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }

  const auto n = static_cast<std::size_t>(p.n);
  const auto s_count = static_cast<std::size_t>(in.scalar("S"));
  auto s_rows = read_rows(in, s_count, n);
  const auto n_count = static_cast<std::size_t>(in.scalar("N_L"));
  auto n_rows = read_rows(in, n_count, n);

  std::string rest;
  for (std::size_t line = in.line() + 1; std::getline(is, rest); ++line) {
    if (!rest.empty() && rest != "\r") throw ParseError(line, "trailing content after last row");
  }
  return StabilizerCodeL{p, *field, std::move(*basis), std::move(s_rows), std::move(n_rows), {}};
}

}  // namespace rsconcat
