#include "dtwmean/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dtwmean {

AttributeSpace AttributeSpace::real() { return {AttrKind::Real, 1, {}}; }

AttributeSpace AttributeSpace::vectors(int dim) {
  if (dim < 1) throw std::invalid_argument("vector attribute dimension must be >= 1");
  return {AttrKind::Vector, dim, {}};
}

AttributeSpace AttributeSpace::symbolic(std::vector<std::string> alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j])
        throw std::invalid_argument("alphabet symbols must be distinct: " + alphabet[i]);
  return {AttrKind::Symbol, 1, std::move(alphabet)};
}

int AttributeSpace::symbol_index(const std::string& name) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), name);
  return it == alphabet.end() ? -1 : static_cast<int>(it - alphabet.begin());
}

bool AttributeSpace::same_as(const AttributeSpace& other) const {
  return kind == other.kind && dim == other.dim && alphabet == other.alphabet;
}

TimeSeries TimeSeries::of_reals(std::vector<double> values) {
  TimeSeries x;
  x.elements.reserve(values.size());
  for (double v : values) x.elements.emplace_back(v);
  return x;
}

TimeSeries TimeSeries::of_vectors(std::vector<std::vector<double>> values) {
  TimeSeries x;
  x.elements.reserve(values.size());
  for (auto& v : values) x.elements.emplace_back(std::move(v));
  return x;
}

TimeSeries TimeSeries::of_symbols(std::vector<int> ids) {
  TimeSeries x;
  x.elements.reserve(ids.size());
  for (int id : ids) x.elements.emplace_back(Symbol{id});
  return x;
}

bool attribute_equal(const Attribute& a, const Attribute& b) { return a == b; }

bool attribute_less(const Attribute& a, const Attribute& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<double>(a))
    return std::get<double>(a) < std::get<double>(b);
  if (std::holds_alternative<std::vector<double>>(a))
    return std::get<std::vector<double>>(a) < std::get<std::vector<double>>(b);
  return std::get<Symbol>(a).id < std::get<Symbol>(b).id;
}

bool series_equal(const TimeSeries& x, const TimeSeries& y) {
  return x.elements == y.elements;
}

bool series_lex_less(const TimeSeries& x, const TimeSeries& y) {
  return std::lexicographical_compare(x.elements.begin(), x.elements.end(),
                                      y.elements.begin(), y.elements.end(),
                                      attribute_less);
}

LocalDistance LocalDistance::squared_euclidean() {
  return {Kind::SquaredEuclidean, 2.0, {}};
}

LocalDistance LocalDistance::norm_induced(double exponent) {
  if (exponent < 1.0) throw std::invalid_argument("norm exponent must be >= 1");
  return {Kind::NormInduced, exponent, {}};
}

LocalDistance LocalDistance::discrete_table(std::vector<std::vector<double>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("distance table must not be empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw std::invalid_argument("distance table must be square");
    if (table[i][i] != 0.0) throw std::invalid_argument("distance table diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] < 0.0) throw std::invalid_argument("distance table entries must be non-negative");
      if (table[i][j] != table[j][i]) throw std::invalid_argument("distance table must be symmetric");
    }
  }
  return {Kind::DiscreteTable, 2.0, std::move(table)};
}

LocalDistance LocalDistance::xor_zero() { return {Kind::XorZero, 2.0, {}}; }

void DtwSpace::check_attribute(const Attribute& a) const {
  switch (attributes.kind) {
    case AttrKind::Real:
      if (!std::holds_alternative<double>(a))
        throw std::invalid_argument("attribute is not a real scalar");
      return;
    case AttrKind::Vector: {
      if (!std::holds_alternative<std::vector<double>>(a))
        throw std::invalid_argument("attribute is not a real vector");
      const auto& v = std::get<std::vector<double>>(a);
      if (static_cast<int>(v.size()) != attributes.dim) {
        std::ostringstream msg;
        msg << "vector attribute dimension mismatch: expected " << attributes.dim
            << ", got " << v.size();
        throw std::invalid_argument(msg.str());
      }
      return;
    }
    case AttrKind::Symbol: {
      if (!std::holds_alternative<Symbol>(a))
        throw std::invalid_argument("attribute is not a symbol");
      const int id = std::get<Symbol>(a).id;
      if (id < 0 || id >= static_cast<int>(attributes.alphabet.size()))
        throw std::invalid_argument("symbol not in alphabet");
      return;
    }
  }
}

void DtwSpace::check_series(const TimeSeries& x) const {
  if (x.length() < 1) throw std::invalid_argument("time series must have length >= 1");
  for (const auto& a : x.elements) check_attribute(a);
}

namespace {

double scalar_of(const Attribute& a) { return std::get<double>(a); }

double squared_euclidean_of(const Attribute& a, const Attribute& b) {
  if (std::holds_alternative<double>(a)) {
    const double d = scalar_of(a) - scalar_of(b);
    return d * d;
  }
  const auto& u = std::get<std::vector<double>>(a);
  const auto& v = std::get<std::vector<double>>(b);
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    acc += d * d;
  }
  return acc;
}

double norm_of(const Attribute& a, const Attribute& b, double p) {
  if (std::holds_alternative<double>(a))
    return std::abs(scalar_of(a) - scalar_of(b));
  const auto& u = std::get<std::vector<double>>(a);
  const auto& v = std::get<std::vector<double>>(b);
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::pow(std::abs(u[i] - v[i]), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

double local_distance(const DtwSpace& space, const Attribute& a, const Attribute& b) {
  space.check_attribute(a);
  space.check_attribute(b);
  switch (space.local.kind) {
    case LocalDistance::Kind::SquaredEuclidean:
      if (space.attributes.kind == AttrKind::Symbol)
        throw std::invalid_argument("squared-euclidean distance needs real or vector attributes");
      return squared_euclidean_of(a, b);
    case LocalDistance::Kind::NormInduced:
      if (space.attributes.kind == AttrKind::Symbol)
        throw std::invalid_argument("norm-induced distance needs real or vector attributes");
      return norm_of(a, b, space.local.norm_exponent);
    case LocalDistance::Kind::DiscreteTable: {
      if (space.attributes.kind != AttrKind::Symbol)
        throw std::invalid_argument("discrete-table distance needs symbolic attributes");
      const int i = std::get<Symbol>(a).id;
      const int j = std::get<Symbol>(b).id;
      return space.local.table[i][j];
    }
    case LocalDistance::Kind::XorZero: {
      // Exact 0.0 is the distinguished gap element.
      if (space.attributes.kind != AttrKind::Real)
        throw std::invalid_argument("xor-zero distance needs real scalar attributes");
      const double u = scalar_of(a);
      const double v = scalar_of(b);
      const bool uz = u == 0.0;
      const bool vz = v == 0.0;
      if (uz && vz) return 0.0;
      if (uz != vz) return 1.0;
      const double d = u - v;
      return d * d;
    }
  }
  throw std::logic_error("unreachable local distance kind");
}

double LossFunction::apply(double u) const {
  if (u < 0.0) throw std::invalid_argument("loss argument must be non-negative");
  if (weight == 0.0) return 0.0;
  return weight * std::pow(u, exponent);
}

LossFunction power_loss(double weight, double exponent) {
  if (weight < 0.0) throw std::invalid_argument("loss weight must be non-negative");
  if (exponent < 1.0) throw std::invalid_argument("loss exponent must be >= 1");
  return {weight, exponent};
}

double loss_apply(const LossFunction& loss, double u) { return loss.apply(u); }

DtwSpace euclidean_space(int dim) {
  AttributeSpace attrs = dim == 1 ? AttributeSpace::real() : AttributeSpace::vectors(dim);
  return {attrs, LocalDistance::squared_euclidean(), MonotoneTransform::square_root()};
}

DtwSpace norm_space(double exponent, int dim) {
  AttributeSpace attrs = dim == 1 ? AttributeSpace::real() : AttributeSpace::vectors(dim);
  return {attrs, LocalDistance::norm_induced(exponent), MonotoneTransform::identity()};
}

DtwSpace xor_zero_space() {
  return {AttributeSpace::real(), LocalDistance::xor_zero(), MonotoneTransform::identity()};
}

DtwSpace symbolic_space(std::vector<std::string> alphabet,
                        std::vector<std::vector<double>> table) {
  auto attrs = AttributeSpace::symbolic(std::move(alphabet));
  if (table.size() != attrs.alphabet.size())
    throw std::invalid_argument("distance table size must match alphabet size");
  return {attrs, LocalDistance::discrete_table(std::move(table)),
          MonotoneTransform::identity()};
}

}  // namespace dtwmean
