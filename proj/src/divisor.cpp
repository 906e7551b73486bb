#include "blowup/divisor.hpp"

#include <cctype>
#include <sstream>

namespace blowup {

namespace {

void require_same_r(const DivisorClass& a, const DivisorClass& b) {
  if (a.r() != b.r()) {
    throw std::invalid_argument("dimension mismatch: classes live on X_" +
                                std::to_string(a.r()) + " and X_" +
                                std::to_string(b.r()));
  }
}

}  // namespace

bool DivisorClass::is_zero() const {
  if (d != 0) return false;
  for (const auto& m : mults)
    if (m != 0) return false;
  return true;
}

BigInt intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_r(a, b);
  BigInt acc = a.d * b.d;
  for (std::size_t i = 0; i < a.mults.size(); ++i) acc -= a.mults[i] * b.mults[i];
  return acc;
}

DivisorClass canonical_class(std::size_t r) {
  return DivisorClass::uniform(-3, -1, r);
}

BigInt vdim(const SurfaceContext& ctx, const DivisorClass& D) {
  if (ctx.r != D.r()) {
    throw std::invalid_argument("dimension mismatch: context r = " +
                                std::to_string(ctx.r) + ", divisor r = " +
                                std::to_string(D.r()));
  }
  const DivisorClass K = canonical_class(D.r());
  BigInt twice = intersect(D, D) - intersect(K, D);
  // D^2 - K.D is always even
  return ctx.p_a + twice / 2;
}

BigInt vdim(const DivisorClass& D) {
  return vdim(SurfaceContext{D.r(), 0}, D);
}

BigInt edim(const SurfaceContext& ctx, const DivisorClass& D) {
  BigInt v = vdim(ctx, D);
  return v < -1 ? BigInt(-1) : v;
}

BigInt edim(const DivisorClass& D) {
  return edim(SurfaceContext{D.r(), 0}, D);
}

DivisorClass scale(const BigInt& n, const DivisorClass& D) {
  DivisorClass out = D;
  out.d *= n;
  for (auto& m : out.mults) m *= n;
  return out;
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  require_same_r(a, b);
  DivisorClass out = a;
  out.d += b.d;
  for (std::size_t i = 0; i < b.mults.size(); ++i) out.mults[i] += b.mults[i];
  return out;
}

std::pair<BigInt, DivisorClass> primitive_part(const DivisorClass& D) {
  if (D.is_zero()) {
    throw std::invalid_argument("primitive_part: zero class has no primitive part");
  }
  BigInt g = abs(D.d);
  for (const auto& m : D.mults) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  }
  DivisorClass P = D;
  P.d /= g;
  for (auto& m : P.mults) m /= g;
  return {g, P};
}

namespace {

BigInt parse_int(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty integer in divisor string");
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) throw ParseError("bad integer '" + tok + "'");
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("bad integer '" + tok + "'");
  }
  return BigInt(tok);
}

unsigned long parse_count(const std::string& tok) {
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad repetition count '" + tok + "'");
  }
  if (tok.empty()) throw ParseError("empty repetition count");
  return std::stoul(tok);
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

DivisorClass parse_divisor(const std::string& s) {
  const std::string t = strip(s);
  if (t.empty()) throw ParseError("empty divisor string");
  const auto semi = t.find(';');
  DivisorClass out;
  out.d = parse_int(strip(t.substr(0, semi)));
  if (semi == std::string::npos) return out;
  std::string rest = strip(t.substr(semi + 1));
  if (rest.empty()) return out;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    const auto caret = item.find('^');
    if (caret == std::string::npos) {
      out.mults.push_back(parse_int(item));
    } else {
      BigInt m = parse_int(strip(item.substr(0, caret)));
      unsigned long n = parse_count(strip(item.substr(caret + 1)));
      if (n == 0) throw ParseError("repetition count must be positive");
      out.mults.insert(out.mults.end(), n, m);
    }
  }
  if (rest.back() == ',') throw ParseError("trailing comma in divisor string");
  return out;
}

std::string format_divisor(const DivisorClass& D) {
  std::string out = D.d.get_str() + ";";
  std::size_t i = 0;
  bool first = true;
  while (i < D.mults.size()) {
    std::size_t j = i;
    while (j < D.mults.size() && D.mults[j] == D.mults[i]) ++j;
    if (!first) out += ",";
    first = false;
    out += D.mults[i].get_str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace blowup
