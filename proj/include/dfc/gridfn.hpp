#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "dfc/gamma.hpp"
#include "dfc/rational.hpp"

namespace dfc {

/// The shifted integer grid {origin, origin+1, ...}.
struct Grid {
  Rational origin;

  Rational point(std::size_t k) const { return origin + Rational(static_cast<long>(k)); }
  /// Index of t on this grid, if t lies on it.
  std::optional<std::size_t> index_of(const Rational& t) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Finite window of a function on a shifted grid: values[k] = f(origin + k).
class GridFunction {
 public:
  /// Throws DomainError for an empty window.
  GridFunction(Rational origin, std::vector<GammaPolynomial> values);

  const Rational& origin() const noexcept { return grid_.origin; }
  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<GammaPolynomial>& values() const noexcept { return values_; }
  const GammaPolynomial& operator[](std::size_t k) const { return values_[k]; }
  /// Bounds-checked access; throws WindowTooShort.
  const GammaPolynomial& at(std::size_t k) const;
  Rational point(std::size_t k) const { return grid_.point(k); }

  /// First len samples; throws WindowTooShort if len exceeds size().
  GridFunction prefix(std::size_t len) const;

  /// Pointwise product on a shared origin, truncated to the shorter window.
  GridFunction pointwise_product(const GridFunction& other) const;
  /// c*this + other on a shared origin, truncated to the shorter window.
  GridFunction axpy(const Rational& c, const GridFunction& other) const;

  nlohmann::json to_json() const;
  static GridFunction from_json(const nlohmann::json& doc);

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  Grid grid_;
  std::vector<GammaPolynomial> values_;
};

/// Samples (s - a)^(mu) on the grid starting at a + mu: the value at index i
/// is falling(mu + i, mu). Throws DomainError if mu is a negative integer.
GridFunction sample_falling_power(const Rational& a, const Rational& mu, std::size_t len);

/// Tabulates source(k) for k = 0..len-1 on the grid starting at a.
GridFunction sample_closure(const Rational& a, std::size_t len,
                            const std::function<GammaPolynomial(std::size_t)>& source);

/// Window of rationals n/d with |n| <= 9 and 1 <= d <= 9, drawn from rng.
GridFunction random_rational_window(const Rational& a, std::size_t len, std::mt19937_64& rng);

/// n-th forward difference via the binomial-weighted sum. Origin is kept,
/// the window shrinks by n. Throws WindowTooShort unless n < size.
GridFunction delta_n(const GridFunction& f, std::size_t n);

}  // namespace dfc
