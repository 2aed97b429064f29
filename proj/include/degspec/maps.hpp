#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "degspec/json_io.hpp"
#include "degspec/model.hpp"
#include "degspec/mpoly.hpp"
#include "degspec/qmatrix.hpp"

namespace degspec {

enum class MonomialVariety { P1k, Pk };

/// Torus map x_i -> x^(row i of A), read on (P^1)^k or on P^k.
struct MonomialMap {
  QMatrix exponents;
  MonomialVariety variety = MonomialVariety::P1k;

  // Checks a square integer matrix with nonzero determinant.
  static MonomialMap create(QMatrix a, MonomialVariety variety = MonomialVariety::P1k);
  std::size_t dim() const { return exponents.rows(); }
};

/// Action on N^p((P^1)^k) of the monomial map of A: |A|^T for p = 1 (column i
/// holds f*(h_i) = sum_j |A_ij| h_j), [|det A|] for p = k, identity for p = 0.
QMatrix monomial_action_p1k(const QMatrix& a, int p);

/// Action of the n-th iterate, computed from A^n.
QMatrix monomial_iterate_action(const QMatrix& a, unsigned n, int p);

/// Degree of the monomial map of A as a self-map of P^k (homogenization).
Integer monomial_degree_pk(const QMatrix& a);

/// Homogeneous self-map of P^k: k+1 integer polynomials in k+1 variables of
/// one common degree with no common factor. Construction always reduces.
class PolyMap {
 public:
  static PolyMap create(std::vector<MPoly> components);

  // Linear map x -> L x for an integer matrix L.
  static PolyMap linear(const QMatrix& l);
  static PolyMap identity(std::size_t k);
  // (x1 x2 ... , x0 x2 ..., ...): the standard Cremona involution of P^k.
  static PolyMap cremona(std::size_t k = 2);

  std::size_t dim() const { return components_.size() - 1; }
  int degree() const { return degree_; }
  const std::vector<MPoly>& components() const { return components_; }

  // Matrix of a degree-1 map; throws ParameterError otherwise.
  QMatrix linear_matrix() const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) = default;
  std::string to_string() const;

 private:
  friend PolyMap reduce_components(std::vector<MPoly> raw);
  PolyMap() = default;
  std::vector<MPoly> components_;
  int degree_ = 0;
};

/// f o g: substitutes g's components into f, then strips the common monomial
/// factor and the polynomial gcd (verified by exact division), normalizes the
/// integer content and the sign.
PolyMap compose_polymap(const PolyMap& f, const PolyMap& g);

int polymap_degree(const PolyMap& f);

/// Reduction step on raw components, exposed for tests.
PolyMap reduce_components(std::vector<MPoly> raw);

/// Asserted matrices of f* on N^p of a model.
struct MatrixAction {
  ModelPtr model;
  std::map<int, QMatrix> matrices;
  bool asserted_1_stable = false;
  std::map<int, bool> asserted_cone_preserving;

  bool has(int p) const { return matrices.count(p) > 0; }
  const QMatrix& at(int p) const;
  CycleClass apply(const CycleClass& u) const;
};

MatrixAction make_matrix_action(const ModelPtr& model, std::map<int, QMatrix> matrices);

/// {"model": ..., "M": {"1": [[..]], ...}, "asserted_1_stable": bool,
///  "asserted_cone_preserving": {"2": bool}}. The "model" key may be omitted
/// when `fallback` is given.
MatrixAction load_matrix_action(const ModelPtr& fallback, const Json& doc);

/// The monomial map on (P^1)^k as a matrix action on N^1 and N^k (and N^0).
MatrixAction monomial_matrix_action(const QMatrix& a, unsigned n = 1);

using MapDescriptor = std::variant<MonomialMap, PolyMap, MatrixAction>;

/// Map JSON: {"type": "monomial", "A": [[..]], "variety": "P1k" | "Pk"}
///         | {"type": "polynomial", "vars": k+1,
///            "components": [[{"exps": [..], "coef": c}, ...], ...]}
///         | {"type": "matrix_action", ...} (see load_matrix_action)
MapDescriptor map_from_json(const Json& doc, const ModelPtr& fallback_model = nullptr);
Json map_to_json(const MapDescriptor& map);

std::string map_kind(const MapDescriptor& map);

}  // namespace degspec
