#include "hypermorse/bounds.hpp"

#include "hypermorse/errors.hpp"
#include "hypermorse/rational.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace hypermorse {

namespace {

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0)) throw InputError(std::string(name) + " must be >= 0");
}

void require_lambda(double lambda) {
  if (!(lambda >= 1.0)) throw InputError("lambda must be >= 1");
}

double parse_real(const std::string& value) {
  // Rationals first so "1/3" works; fall back to ordinary floating point.
  try {
    return Rational::parse(value).to_double();
  } catch (const InputError&) {
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw InputError("malformed constant value '" + value + "'");
  }
  if (used != value.size()) throw InputError("malformed constant value '" + value + "'");
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

double MorseConstants::a2() const {
  const double ln2 = std::numbers::ln2;
  return 4.0 * (78.0 + (133.0 / ln2) * std::exp(157.0 * ln2 / a2_exponent_denominator));
}

double MorseConstants::contraction_rate() { return std::numbers::ln2 / 19.0; }

double MorseConstants::c0(double delta) { return (delta / 4.0) * std::exp(-157.0 * contraction_rate() / 2.0); }

void MorseConstants::set(const std::string& key, const std::string& value) {
  const double v = parse_real(value);
  if (key == "A2_exponent_denominator") {
    if (v != 38.0 && v != 28.0) throw InputError("A2_exponent_denominator must be 38 or 28");
    a2_exponent_denominator = static_cast<int>(v);
    return;
  }
  require_nonnegative(v, key.c_str());
  if (key == "A1")
    a1 = v;
  else if (key == "A3")
    a3 = v;
  else if (key == "A4")
    a4 = v;
  else if (key == "r0")
    r0 = v;
  else if (key == "r1")
    r1 = v;
  else if (key == "r2")
    r2 = v;
  else if (key == "r3")
    r3 = v;
  else if (key == "r4")
    r4 = v;
  else
    throw InputError("unknown constant '" + key + "'");
}

MorseConstants load_constants(std::istream& in, MorseConstants base) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("constants line " + std::to_string(line_no) + ": expected 'key = value'");
    base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

MorseConstants load_constants_file(const std::string& path, MorseConstants base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open constants file '" + path + "'");
  return load_constants(in, base);
}

double morse_bound(double lambda, double c, double delta, const MorseConstants& k) {
  require_lambda(lambda);
  require_nonnegative(c, "c");
  require_nonnegative(delta, "delta");
  return lambda * lambda * (k.a1 * c + k.a2() * delta);
}

double anti_morse_bound(double lambda, double c, double delta, const MorseConstants& k) {
  if (!(lambda > 1.0)) throw InputError("anti-Morse bound needs lambda > 1");
  require_nonnegative(c, "c");
  require_nonnegative(delta, "delta");
  return k.a3 * (c + delta) * std::log(lambda);
}

double contraction_bound(double mesh, double delta, double radius, double delta_length, const MorseConstants&) {
  if (!(mesh > 0.0)) throw InputError("contraction bound needs a positive mesh");
  require_nonnegative(delta, "delta");
  require_nonnegative(delta_length, "delta-length");
  if (delta == 0.0) return 0.0;
  if (radius < mesh + 58.0 * delta) throw DomainError("contraction bound needs radius >= mesh + 58 delta");
  const double r = std::floor((radius - mesh - 58.0 * delta) / (19.0 * delta)) * 19.0 * delta;
  const double decay = (4.0 * delta / mesh) * std::exp(-MorseConstants::contraction_rate() * r / delta) *
                       (delta_length + mesh);
  return std::max(decay, 8.0 * delta);
}

double prop1_bound(double lambda, double c, double radius, const MorseConstants& k) {
  if (!(radius >= 1.0)) throw InputError("displacement bound needs radius >= 1");
  return std::min(radius, morse_bound(lambda, c, 0.0, k) + c + lambda * (c + 1.0));
}

double thm3_bound(double lambda, double c, double delta, const MorseConstants& k) {
  if (!(lambda > 1.0)) throw InputError("displacement bound needs lambda > 1");
  require_nonnegative(c, "c");
  require_nonnegative(delta, "delta");
  const double c1 = c + delta;
  return std::max(k.r0, lambda * (k.r3 + c + c1 * std::log(lambda))) + k.r1 + k.r2 + k.r4;
}

double remark4_bound(double lambda, double c, double delta, const MorseConstants& k) {
  return morse_bound(lambda, c, delta, k) + k.r2;
}

} // namespace hypermorse
