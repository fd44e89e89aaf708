#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

namespace dtwmean {

/// Index into the alphabet of a symbolic attribute space.
struct Symbol {
  int id = -1;
  auto operator<=>(const Symbol&) const = default;
};

/// One element of a time series: a real scalar, a real vector, or a symbol.
using Attribute = std::variant<double, std::vector<double>, Symbol>;

enum class AttrKind { Real, Vector, Symbol };

struct AttributeSpace {
  AttrKind kind = AttrKind::Real;
  int dim = 1;                        // Vector spaces
  std::vector<std::string> alphabet;  // Symbol spaces

  static AttributeSpace real();
  static AttributeSpace vectors(int dim);
  static AttributeSpace symbolic(std::vector<std::string> alphabet);

  int symbol_index(const std::string& name) const;  // -1 when unknown
  bool same_as(const AttributeSpace& other) const;
};

struct TimeSeries {
  std::vector<Attribute> elements;

  int length() const { return static_cast<int>(elements.size()); }

  static TimeSeries of_reals(std::vector<double> values);
  static TimeSeries of_vectors(std::vector<std::vector<double>> values);
  static TimeSeries of_symbols(std::vector<int> ids);
};

bool attribute_equal(const Attribute& a, const Attribute& b);
bool attribute_less(const Attribute& a, const Attribute& b);
bool series_equal(const TimeSeries& x, const TimeSeries& y);
bool series_lex_less(const TimeSeries& x, const TimeSeries& y);

struct LocalDistance {
  enum class Kind { SquaredEuclidean, NormInduced, DiscreteTable, XorZero };

  Kind kind = Kind::SquaredEuclidean;
  double norm_exponent = 2.0;              // NormInduced
  std::vector<std::vector<double>> table;  // DiscreteTable, symmetric, zero diagonal

  static LocalDistance squared_euclidean();
  static LocalDistance norm_induced(double exponent);
  static LocalDistance discrete_table(std::vector<std::vector<double>> table);
  static LocalDistance xor_zero();
};

struct MonotoneTransform {
  enum class Kind { Identity, SquareRoot };
  Kind kind = Kind::Identity;

  static MonotoneTransform identity() { return {Kind::Identity}; }
  static MonotoneTransform square_root() { return {Kind::SquareRoot}; }

  double apply(double u) const { return kind == Kind::SquareRoot ? std::sqrt(u) : u; }
};

/// A DTW space fixes the attribute set, the local distance between attributes
/// and the monotone transform applied to the minimal alignment cost.
struct DtwSpace {
  AttributeSpace attributes;
  LocalDistance local;
  MonotoneTransform transform;

  void check_attribute(const Attribute& a) const;
  void check_series(const TimeSeries& x) const;
};

double local_distance(const DtwSpace& space, const Attribute& a, const Attribute& b);

/// Power loss h(u) = w * u^p with w >= 0 and p >= 1. A zero weight makes the
/// loss identically zero; the corresponding series then never influences a
/// Frechet value.
struct LossFunction {
  double weight = 1.0;
  double exponent = 2.0;

  double apply(double u) const;
};

LossFunction power_loss(double weight, double exponent);
double loss_apply(const LossFunction& loss, double u);

// Common space configurations.
DtwSpace euclidean_space(int dim = 1);
DtwSpace norm_space(double exponent, int dim = 1);
DtwSpace xor_zero_space();
DtwSpace symbolic_space(std::vector<std::string> alphabet,
                        std::vector<std::vector<double>> table);

}  // namespace dtwmean
