#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "degspec/qmatrix.hpp"
#include "degspec/rational.hpp"

namespace degspec {

class VarietyModel;
using ModelPtr = std::shared_ptr<const VarietyModel>;

/// Pull/push data for a blowup pi: source -> target along a smooth center.
/// The constant c_E of the pull-push formulas is 1 (projective setting).
struct BlowdownData {
  ModelPtr target;
  std::vector<QMatrix> push;  // push[p]: N^p(source) -> N^p(target), p = 0..k
  std::vector<QMatrix> pull;  // pull[p]: N^p(target) -> N^p(source)
  QVector exceptional;        // E in N^1(source)
  QVector fiber;              // F in N^{k-1}(source), E.F = -1
  QVector center;             // W in N^2(target); zero when the center has codimension >= 3
  int center_codim = 2;
};

/// Raw tables for a model. products[{p, q}][i][j] holds the coordinates in
/// N^{p+q} of (basis i of N^p).(basis j of N^q), for every p + q <= k.
struct ModelData {
  std::string name;
  int dim = 0;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> labels;
  std::map<std::pair<int, int>, std::vector<std::vector<QVector>>> products;
  QVector degree;
  QVector ample;
  std::map<int, std::vector<QVector>> cones;
  std::optional<BlowdownData> blowdown;
};

/// Finite-rank model of the numerical groups N^0..N^k of a smooth projective
/// variety. Immutable; construct through VarietyModel::create, which checks
/// every structural invariant (unit, commutativity, associativity, positive
/// top self-intersection of the ample class, projection formula and
/// push.pull = id for the blowdown).
class VarietyModel : public std::enable_shared_from_this<VarietyModel> {
 public:
  static ModelPtr create(ModelData data);

  const std::string& name() const { return data_.name; }
  int dim() const { return data_.dim; }
  std::size_t rank(int p) const;
  const std::vector<std::size_t>& ranks() const { return data_.ranks; }
  const std::vector<std::string>& labels(int p) const;
  const QVector& product(int p, std::size_t i, int q, std::size_t j) const;
  const QVector& degree_functional() const { return data_.degree; }
  const QVector& ample() const { return data_.ample; }
  bool has_cone(int p) const { return data_.cones.count(p) > 0; }
  const std::vector<QVector>& cone_generators(int p) const;
  const std::optional<BlowdownData>& blowdown() const { return data_.blowdown; }
  const ModelData& data() const { return data_; }

 private:
  explicit VarietyModel(ModelData data) : data_(std::move(data)) {}
  void validate() const;
  ModelData data_;
};

/// A class in N^p of a model, as coordinates in the model's basis.
struct CycleClass {
  ModelPtr model;
  int codim = 0;
  QVector coords;

  CycleClass& operator+=(const CycleClass& other);
  CycleClass& operator-=(const CycleClass& other);
  CycleClass& operator*=(const Rational& s);
  friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
  friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
  friend CycleClass operator*(CycleClass a, const Rational& s) { return a *= s; }
  friend CycleClass operator*(const Rational& s, CycleClass a) { return a *= s; }
  friend bool operator==(const CycleClass& a, const CycleClass& b) {
    return a.model == b.model && a.codim == b.codim && a.coords == b.coords;
  }
  bool is_zero() const;
  std::string to_string() const;
};

CycleClass make_class(const ModelPtr& model, int codim, QVector coords);
CycleClass basis_class(const ModelPtr& model, int codim, std::size_t index);
CycleClass zero_class(const ModelPtr& model, int codim);
CycleClass unit_class(const ModelPtr& model);
CycleClass ample_class(const ModelPtr& model);

/// Built-in models: "P(k)" (k <= 4), "P1xP1xK(k)" (k <= 4), "BlP2(r)" (r <= 3),
/// "BlP3pt", "BlP3line".
ModelPtr make_model(const std::string& spec);
std::vector<std::string> builtin_model_specs();

CycleClass cup(const CycleClass& u, const CycleClass& v);
CycleClass power(const CycleClass& u, int n);
Rational degree0(const CycleClass& u);

/// deg(u) = deg0(u . ample^(k-p)).
Rational degree(const CycleClass& u);

CycleClass blowdown_pushforward(const CycleClass& u);
CycleClass blowup_pullback(const ModelPtr& source, const CycleClass& v);

/// Inertia of H(u, v) = deg(u.v.w^(k-2)) on N^1.
Signature hodge_signature(const ModelPtr& model, const CycleClass& w);

bool cone_contains(const CycleClass& u);

/// min deg(v1) + deg(v2) over u = v1 - v2 with v1, v2 in the generated cone.
Rational norm1(const CycleClass& u);

struct PsefDifference {
  CycleClass difference;  // push(a).push(a) - push(a.a) in N^2(target)
  CycleClass expected;    // (a.F)^2 W
  bool matches_expected = false;
  bool effective = false;
};

PsefDifference psef_difference(const CycleClass& alpha);

/// The four pull-push identities for alpha in N^1 of a blowup model:
/// push(E.E) = -W, pull(push(a)) = a + (a.F)E, push(a.E) = (a.F)W,
/// push(a)^2 - push(a^2) = (a.F)^2 W.
struct BlowupIdentities {
  bool push_exceptional_square = false;
  bool pull_push = false;
  bool push_times_exceptional = false;
  bool square_defect = false;
  bool all() const { return push_exceptional_square && pull_push && push_times_exceptional && square_defect; }
};

BlowupIdentities check_blowup_identities(const CycleClass& alpha);

}  // namespace degspec
