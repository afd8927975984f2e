#pragma once

#include <iosfwd>
#include <string>

namespace hypermorse {

/// Every named constant the bound evaluators use, in one place.
struct MorseConstants {
  /// Coefficient of c in H / lambda^2: 4 * 78.
  double a1 = 312.0;
  /// Denominator d in the exponent e^{157 ln2 / d} of the delta coefficient (38 or 28).
  int a2_exponent_denominator = 38;
  /// Unspecified constants of the anti-Morse and displacement statements.
  double a3 = 1.0;
  double a4 = 1.0;
  /// Geodesic-richness constants.
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;

  /// Coefficient of delta in H / lambda^2: 4 (78 + (133 / ln2) e^{157 ln2 / d}).
  double a2() const;
  /// ln 2 / 19
  static double contraction_rate();
  /// (delta / 4) e^{-157 K / 2}
  static double c0(double delta);

  /// Sets a value by its key name ("A1", "A2_exponent_denominator", "A3", "A4", "r0".."r4").
  /// Throws InputError on unknown keys or malformed values.
  void set(const std::string& key, const std::string& value);
};

/// Reads "key = value" lines; '#' starts a comment. Unknown keys are errors.
MorseConstants load_constants(std::istream& in, MorseConstants base = {});
MorseConstants load_constants_file(const std::string& path, MorseConstants base = {});

/// H = lambda^2 (A1 c + A2 delta)
double morse_bound(double lambda, double c, double delta, const MorseConstants& k = {});

/// A3 (c + delta) ln lambda; lambda must exceed 1.
double anti_morse_bound(double lambda, double c, double delta, const MorseConstants& k = {});

/// Projection-length bound for a connected curve at distance >= radius from a
/// geodesic: max((4 delta / mesh) e^{-K r / delta} (L + mesh), 8 delta) with
/// r = floor((radius - mesh - 58 delta) / 19 delta) * 19 delta. Returns 0 for delta = 0.
double contraction_bound(double mesh, double delta, double radius, double delta_length, const MorseConstants& k = {});

/// Ball of radius R in a regular tree: min{R, H(lambda, c, 0) + c + lambda (c + 1)}.
double prop1_bound(double lambda, double c, double radius, const MorseConstants& k = {});

/// max(r0, lambda (r3 + c + (c + delta) ln lambda)) + r1 + r2 + r4; lambda must exceed 1.
double thm3_bound(double lambda, double c, double delta, const MorseConstants& k = {});

/// H(lambda, c, delta) + r2
double remark4_bound(double lambda, double c, double delta, const MorseConstants& k = {});

} // namespace hypermorse
