#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "algebra.hpp"
#include "tensor.hpp"

namespace d2hopf {

using Json = nlohmann::ordered_json;

/// Ground-field selector shared by the JSON input format, the catalog and
/// the command line.
struct FieldSpec {
  enum class Kind { rational, gfp };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  static FieldSpec rational() { return {}; }
  static FieldSpec gfp(std::uint64_t prime) {
    return {Kind::gfp, prime};
  }

  std::string name() const {
    return kind == Kind::rational ? "rational" : "gfp:" + std::to_string(p);
  }
  bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec field_spec_of(const RationalField&) {
  return FieldSpec::rational();
}
inline FieldSpec field_spec_of(const PrimeField& f) {
  return FieldSpec::gfp(f.p);
}

/// Parses the `field` block of an input document:
/// {"kind":"rational"} or {"kind":"gfp","p":<prime>}.
/// True when j is a nonnegative JSON integer, storing its value. Accepts
/// both the unsigned and the signed representation, since documents built
/// in code carry plain int literals.
inline bool json_uint(const Json& j, std::uint64_t& out) {
  if (j.is_number_unsigned()) {
    out = j.get<std::uint64_t>();
    return true;
  }
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    out = static_cast<std::uint64_t>(j.get<std::int64_t>());
    return true;
  }
  return false;
}

inline FieldSpec field_spec_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("field: expected an object with a \"kind\" string");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "gfp") {
    std::uint64_t p = 0;
    if (!j.contains("p") || !json_uint(j.at("p"), p) || p == 0)
      throw ParseError("field: gfp needs a positive integer \"p\"");
    FieldSpec fs = FieldSpec::gfp(p);
    PrimeField check(fs.p);  // validates the modulus
    return fs;
  }
  throw ParseError("field: unknown kind '" + kind + "'");
}

inline Json field_spec_to_json(const FieldSpec& fs) {
  Json j;
  j["kind"] = fs.kind == FieldSpec::Kind::rational ? "rational" : "gfp";
  if (fs.kind == FieldSpec::Kind::gfp) j["p"] = fs.p;
  return j;
}

/// Parses the command-line field flag: "q", "rational" or "gfp:<p>".
inline FieldSpec parse_field_flag(const std::string& s) {
  if (s == "q" || s == "rational") return FieldSpec::rational();
  if (s.rfind("gfp:", 0) == 0) {
    std::uint64_t p = 0;
    std::size_t used = 0;
    try {
      p = std::stoull(s.substr(4), &used);
    } catch (const std::exception&) {
      throw ParseError("field flag: bad modulus in '" + s + "'");
    }
    if (used != s.size() - 4)
      throw ParseError("field flag: bad modulus in '" + s + "'");
    PrimeField check(p);
    return FieldSpec::gfp(p);
  }
  throw ParseError("field flag: expected q or gfp:<p>, got '" + s + "'");
}

/// Applies the tensor-square ambient cap (dim A squared against
/// max_ambient_dim) at parse time, so oversized input is rejected as an
/// input error before any quotient is built.
inline void check_size_guard(std::size_t dim_a) {
  std::size_t cap = max_ambient_dim();
  if (dim_a * dim_a > cap)
    throw ParseError("size guard: the tensor square of a " +
                     std::to_string(dim_a) +
                     "-dimensional algebra has ambient dimension " +
                     std::to_string(dim_a * dim_a) + " > " +
                     std::to_string(cap) +
                     " (raise D2HOPF_MAX_DIM to override)");
}

namespace detail {

template <class F>
typename F::Elem parse_coeff(const F& f, const Json& j, const char* where) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer())
    return f.from_long(static_cast<long>(j.get<std::int64_t>()));
  throw ParseError(std::string(where) +
                   ": coefficients must be exact strings like \"3/2\" or "
                   "integers");
}

template <class F>
Vec<F> parse_coeff_list(const F& f, const Json& j, std::size_t n,
                        const char* where) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(std::string(where) + ": expected a list of " +
                     std::to_string(n) + " coefficients");
  Vec<F> v = vec_zero(f, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = parse_coeff(f, j.at(i), where);
  return v;
}

inline std::size_t parse_index(const Json& j, std::size_t n,
                               const char* where) {
  std::uint64_t v = 0;
  if (!json_uint(j, v) || v >= n)
    throw ParseError(std::string(where) + ": basis index out of range 0.." +
                     std::to_string(n - 1));
  return static_cast<std::size_t>(v);
}

/// Sparse operator table [a, r, c, coeff]: entry (r, c) of the matrix
/// attached to basis index a.
template <class F>
std::vector<Matrix<F>> parse_ops(const F& f, const Json& j, std::size_t na,
                                 std::size_t dim, const char* where) {
  if (!j.is_array())
    throw ParseError(std::string(where) + ": expected a list of quadruples");
  std::vector<Matrix<F>> ops(na, Matrix<F>(f, dim, dim));
  for (const auto& quad : j) {
    if (!quad.is_array() || quad.size() != 4)
      throw ParseError(std::string(where) +
                       ": entries must be [a, row, col, coeff]");
    std::size_t a = parse_index(quad.at(0), na, where);
    std::size_t r = parse_index(quad.at(1), dim, where);
    std::size_t c = parse_index(quad.at(2), dim, where);
    ops[a].at(r, c) = parse_coeff(f, quad.at(3), where);
  }
  return ops;
}

}  // namespace detail

/// One parsed input document: the extension itself plus the optional user
/// coefficient bimodule for the cochain suites.
template <class F>
struct ParsedInput {
  Extension<F> E;
  std::optional<Bimodule<F>> coefficients;
};

/// Loads an extension (and optional coefficient bimodule) from the JSON
/// structure-constant format. Malformed documents raise ParseError; algebra
/// and subalgebra defects raise StructureError.
template <class F>
ParsedInput<F> load_extension(const Json& j, F f) {
  if (!j.is_object()) throw ParseError("input: expected a JSON object");
  std::uint64_t dim_raw = 0;
  if (!j.contains("dim") || !json_uint(j.at("dim"), dim_raw) || dim_raw == 0)
    throw ParseError("input: \"dim\" must be a positive integer");
  const std::size_t n = static_cast<std::size_t>(dim_raw);
  check_size_guard(n);

  Algebra<F> A(f, n);
  if (!j.contains("unit"))
    throw ParseError("input: missing \"unit\" coefficient list");
  A.unit = detail::parse_coeff_list(f, j.at("unit"), n, "unit");

  if (!j.contains("mul") || !j.at("mul").is_array())
    throw ParseError("input: \"mul\" must be a list of [i, j, k, coeff]");
  for (const auto& quad : j.at("mul")) {
    if (!quad.is_array() || quad.size() != 4)
      throw ParseError("mul: entries must be [i, j, k, coeff]");
    std::size_t i = detail::parse_index(quad.at(0), n, "mul");
    std::size_t jj = detail::parse_index(quad.at(1), n, "mul");
    std::size_t k = detail::parse_index(quad.at(2), n, "mul");
    A.basis_product(i, jj)[k] = detail::parse_coeff(f, quad.at(3), "mul");
  }

  if (j.contains("labels")) {
    const auto& la = j.at("labels");
    if (!la.is_array() || la.size() != n)
      throw ParseError("labels: expected " + std::to_string(n) + " strings");
    for (const auto& s : la) {
      if (!s.is_string()) throw ParseError("labels: entries must be strings");
      A.labels.push_back(s.get<std::string>());
    }
  }

  if (!j.contains("subalgebra") || !j.at("subalgebra").is_array() ||
      j.at("subalgebra").empty())
    throw ParseError("input: \"subalgebra\" must be a nonempty list of "
                     "coefficient lists");
  Matrix<F> rows(f, j.at("subalgebra").size(), n);
  for (std::size_t r = 0; r < j.at("subalgebra").size(); ++r) {
    Vec<F> v =
        detail::parse_coeff_list(f, j.at("subalgebra").at(r), n, "subalgebra");
    for (std::size_t c = 0; c < n; ++c) rows.at(r, c) = v[c];
  }

  ParsedInput<F> out{Extension<F>::make(std::move(A), rows), std::nullopt};

  if (j.contains("bimodule")) {
    const auto& bj = j.at("bimodule");
    std::uint64_t pdim = 0;
    if (!bj.is_object() || !bj.contains("dim") ||
        !json_uint(bj.at("dim"), pdim) || pdim == 0)
      throw ParseError("bimodule: expected an object with a positive "
                       "\"dim\"");
    Bimodule<F> P;
    P.field = f;
    P.dim = static_cast<std::size_t>(pdim);
    if (!bj.contains("left") || !bj.contains("right"))
      throw ParseError("bimodule: needs \"left\" and \"right\" action "
                       "tables [a, row, col, coeff]");
    P.left = detail::parse_ops(f, bj.at("left"), n, P.dim, "bimodule left");
    P.right = detail::parse_ops(f, bj.at("right"), n, P.dim, "bimodule right");
    P.validate(out.E.A);
    out.coefficients = std::move(P);
  }
  return out;
}

/// Serializes an extension back to the structure-constant format. Sparse
/// products are emitted in row-major (i, j, k) order with exact coefficient
/// strings, so the output is canonical for a given extension.
template <class F>
Json extension_to_json(const Extension<F>& E) {
  const F& f = E.field();
  const std::size_t n = E.dimA();
  Json j;
  j["field"] = field_spec_to_json(field_spec_of(f));
  j["dim"] = n;
  Json unit = Json::array();
  for (std::size_t i = 0; i < n; ++i) unit.push_back(f.to_string(E.A.unit[i]));
  j["unit"] = std::move(unit);
  Json mul = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) {
      const Vec<F>& prod = E.A.basis_product(i, jj);
      for (std::size_t k = 0; k < n; ++k)
        if (!f.is_zero(prod[k]))
          mul.push_back(Json::array({i, jj, k, f.to_string(prod[k])}));
    }
  j["mul"] = std::move(mul);
  Json rows = Json::array();
  for (std::size_t r = 0; r < E.dimB(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < n; ++c)
      row.push_back(f.to_string(E.B.basis.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["subalgebra"] = std::move(rows);
  if (!E.A.labels.empty()) j["labels"] = E.A.labels;
  return j;
}

}  // namespace d2hopf
