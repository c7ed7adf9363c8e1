#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "zfpoly/bigint.hpp"
#include "zfpoly/graph.hpp"

namespace zfp {

/// Coefficient array of the zero forcing polynomial: coeffs[i] = z(G;i).
///
/// The type itself only requires a nonempty coefficient array so that it can
/// also hold products and hand-written sequences; the structural facts
/// (coeffs[0] = 0 and coeffs[n] = 1 for n >= 1, coeffs[i] <= C(n,i)) hold for
/// every polynomial produced from a graph.
class ZfPolynomial {
 public:
  /// The order-0 polynomial 1, i.e. the polynomial of the empty graph.
  ZfPolynomial() : coeffs_{BigInt(1)} {}
  explicit ZfPolynomial(std::vector<BigInt> coeffs);
  static ZfPolynomial from_counts(std::span<const std::uint64_t> counts);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero outside [0, order()].
  const BigInt& coeff(int i) const noexcept;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  bool operator==(const ZfPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

inline constexpr int kDefaultEnumerationCap = 24;

struct EnumerationOptions {
  /// Largest order the 2^n enumeration accepts.
  int max_n = kDefaultEnumerationCap;
  /// Worker threads; 0 means one per hardware thread.
  unsigned jobs = 1;
};

/// Raw per-size counts of zero forcing sets by full subset enumeration.
std::vector<std::uint64_t> zero_forcing_counts(const Graph& g, const EnumerationOptions& options = {});

/// flags[S] = 1 iff the subset with bit pattern S is a zero forcing set; size 2^n.
std::vector<std::uint8_t> zero_forcing_flags(const Graph& g, const EnumerationOptions& options = {});

ZfPolynomial zf_polynomial(const Graph& g, const EnumerationOptions& options = {});

/// z(G;i) by enumerating only the i-subsets.
BigInt count_zfs(const Graph& g, int i, const EnumerationOptions& options = {});

ZfPolynomial multiply(const ZfPolynomial& p, const ZfPolynomial& q);

/// Product of the polynomials of the connected components; the cap applies per component.
ZfPolynomial zf_polynomial_by_components(const Graph& g, const EnumerationOptions& options = {});

/// Exact Horner evaluation.
Rational evaluate(const ZfPolynomial& p, const Rational& x);

/// Index of the first nonzero coefficient; throws PreconditionError for the zero array.
int zero_forcing_number(const ZfPolynomial& p);

/// The nonzero stretch weakly rises, then weakly falls, with no interior zero.
bool is_unimodal(const ZfPolynomial& p);

/// Human form such as "8x^3 + 5x^4 + x^5".
std::string to_pretty(const ZfPolynomial& p);

/// {"n": order, "coeffs": [decimal strings]}
nlohmann::json to_json(const ZfPolynomial& p);
/// Throws ParseError on schema violations.
ZfPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace zfp
