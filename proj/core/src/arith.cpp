#include "farey/arith.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <tuple>

namespace farey {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EqualVertices: return "EqualVertices";
    case ErrorCode::WrongLevel: return "WrongLevel";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::NoSector: return "NoSector";
    case ErrorCode::DisconnectedBoundary: return "DisconnectedBoundary";
    case ErrorCode::UnpairedEdge: return "UnpairedEdge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int64(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  return value;
}

BigInt parse_bigint(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  BigInt value = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::pair<std::string_view, std::string_view> split_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "expected 'a/c', got '" + std::string(text) + "'");
  }
  return {text.substr(0, slash), text.substr(slash + 1)};
}

// x·a + y·b = gcd(a, b), with a, b >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_tuple(b, a - q * b);
    std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
  }
  return {a, x0, y0};
}

void check_level(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "level must be >= 2, got " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// FareyFraction

FareyFraction FareyFraction::canonical(std::int64_t a, std::int64_t c, int n) {
  check_level(n);
  std::int64_t num = mod(a, n);
  std::int64_t den = mod(c, n);
  if (std::gcd(std::gcd(num, den), static_cast<std::int64_t>(n)) != 1) {
    throw Error(ErrorCode::NotAVertex, std::to_string(a) + "/" + std::to_string(c) +
                                           " has gcd(a, c, n) != 1 at level " + std::to_string(n));
  }
  if (2 * den > n) {
    num = mod(-num, n);
    den = n - den;
  }
  if (den == 0 || 2 * den == n) {
    num = std::min(num, mod(-num, n));
  }
  return FareyFraction(static_cast<int>(num), static_cast<int>(den), n);
}

FareyFraction FareyFraction::parse(std::string_view text, int n) {
  auto [a, c] = split_fraction(trim(text));
  return canonical(parse_int64(a), parse_int64(c), n);
}

FareyFraction FareyFraction::translated(std::int64_t k) const {
  return canonical(num_ + mod(k, level_) * den_, den_, level_);
}

std::string FareyFraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const FareyFraction& f) { return os << f.str(); }

int cross_det(const FareyFraction& f, const FareyFraction& g) {
  if (f.level() != g.level()) {
    throw Error(ErrorCode::LevelMismatch,
                f.str() + " is at level " + std::to_string(f.level()) + ", " + g.str() + " at " +
                    std::to_string(g.level()));
  }
  const std::int64_t n = f.level();
  return static_cast<int>(mod(std::int64_t{f.num()} * g.den() - std::int64_t{g.num()} * f.den(), n));
}

bool is_adjacent(const FareyFraction& f, const FareyFraction& g) {
  const int det = cross_det(f, g);
  return det == 1 || det == f.level() - 1;
}

// ---------------------------------------------------------------------------
// ModMatrix

ModMatrix ModMatrix::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int n) {
  check_level(n);
  std::array<int, 4> e{static_cast<int>(mod(a, n)), static_cast<int>(mod(b, n)),
                       static_cast<int>(mod(c, n)), static_cast<int>(mod(d, n))};
  if (mod(std::int64_t{e[0]} * e[3] - std::int64_t{e[1]} * e[2], n) != 1 % n) {
    throw Error(ErrorCode::InvalidArgument, "determinant is not 1 mod " + std::to_string(n));
  }
  std::array<int, 4> neg{};
  for (int i = 0; i < 4; ++i) neg[i] = static_cast<int>(mod(-e[i], n));
  return ModMatrix(std::min(e, neg), n);
}

ModMatrix ModMatrix::identity(int n) { return make(1, 0, 0, 1, n); }
ModMatrix ModMatrix::translation(int n) { return make(1, 1, 0, 1, n); }
ModMatrix ModMatrix::inversion(int n) { return make(0, -1, 1, 0, n); }

ModMatrix ModMatrix::with_first_column(std::int64_t a, std::int64_t c, int n) {
  check_level(n);
  a = mod(a, n);
  c = mod(c, n);
  if (std::gcd(std::gcd(a, c), static_cast<std::int64_t>(n)) != 1) {
    throw Error(ErrorCode::NotAVertex, "first column is not unimodular mod " + std::to_string(n));
  }
  // Lift (a, c) to a coprime integer pair, then complete it over Z.
  for (std::int64_t s = 0; s < 64; ++s) {
    for (std::int64_t t = 0; t < 1024; ++t) {
      const std::int64_t la = a + s * n;
      const std::int64_t lc = c + t * n;
      auto [g, x, y] = ext_gcd(la, lc);
      if (g == 1) return make(la, -y, lc, x, n);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "could not complete first column");  // unreachable
}

std::vector<ModMatrix> ModMatrix::enumerate(int n) {
  check_level(n);
  std::vector<ModMatrix> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (mod(a * d - b * c, n) != 1 % n) continue;
          const ModMatrix m = make(a, b, c, d, n);
          if (m.e_ == std::array<int, 4>{a, b, c, d}) out.push_back(m);
        }
  return out;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  if (level_ != rhs.level_) throw Error(ErrorCode::LevelMismatch, "matrix levels differ");
  const std::int64_t a = e_[0], b = e_[1], c = e_[2], d = e_[3];
  const std::int64_t p = rhs.e_[0], q = rhs.e_[1], r = rhs.e_[2], s = rhs.e_[3];
  return make(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s, level_);
}

ModMatrix ModMatrix::inverse() const { return make(e_[3], -e_[1], -e_[2], e_[0], level_); }

std::string ModMatrix::str() const {
  return "[[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "],[" + std::to_string(e_[2]) +
         "," + std::to_string(e_[3]) + "]]";
}

FareyFraction mobius_mod(const ModMatrix& m, const FareyFraction& f) {
  if (m.level() != f.level()) throw Error(ErrorCode::LevelMismatch, "matrix and vertex levels differ");
  const std::int64_t x = f.num(), y = f.den();
  return FareyFraction::canonical(m.a() * x + m.b() * y, m.c() * x + m.d() * y, f.level());
}

// ---------------------------------------------------------------------------
// ExtRational / IntMatrix

ExtRational::ExtRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    if (num_ == 0) throw Error(ErrorCode::InvalidArgument, "0/0 is not an extended rational");
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

ExtRational ExtRational::parse(std::string_view text) {
  auto [a, c] = split_fraction(trim(text));
  return ExtRational(parse_bigint(a), parse_bigint(c));
}

std::string ExtRational::str() const { return num_.str() + "/" + den_.str(); }

std::ostream& operator<<(std::ostream& os, const ExtRational& q) { return os << q.str(); }

IntMatrix IntMatrix::operator*(const IntMatrix& r) const {
  return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
}

std::string IntMatrix::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::string digits;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ' ') continue;
    digits.push_back(ch);
  }
  std::vector<BigInt> parts;
  std::string_view rest = digits;
  while (true) {
    const auto comma = rest.find(',');
    parts.push_back(parse_bigint(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (parts.size() != 4) throw Error(ErrorCode::ParseError, "expected [[a,b],[c,d]]");
  return {parts[0], parts[1], parts[2], parts[3]};
}

ModMatrix IntMatrix::reduce(int n) const {
  auto r = [n](const BigInt& x) {
    BigInt m = x % n;
    if (m < 0) m += n;
    return m.convert_to<std::int64_t>();
  };
  return ModMatrix::make(r(a), r(b), r(c), r(d), n);
}

ExtRational mobius_exact(const IntMatrix& m, const ExtRational& q) {
  const BigInt det = m.det();
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::InvalidArgument, "matrix " + m.str() + " has determinant " + det.str());
  }
  return ExtRational(m.a * q.num() + m.b * q.den(), m.c * q.num() + m.d * q.den());
}

bool in_principal_congruence(const IntMatrix& m, int n) {
  check_level(n);
  auto r = [n](const BigInt& x) {
    BigInt v = x % n;
    if (v < 0) v += n;
    return v;
  };
  const BigInt a = r(m.a), b = r(m.b), c = r(m.c), d = r(m.d);
  if (b != 0 || c != 0) return false;
  return (a == 1 % n && d == 1 % n) || (a == (n - 1) % n && d == (n - 1) % n);
}

BigInt farey_det(const ExtRational& x, const ExtRational& y) {
  return x.num() * y.den() - y.num() * x.den();
}

}  // namespace farey
