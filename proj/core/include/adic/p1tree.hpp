#pragma once
// The projective line over an algebraically closed field with value group
// Q^h, seen through finitely many classical centers and their log-distances.
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adic/gammagraph.hpp"
#include "adic/ordgroup.hpp"
#include "adic/plfun.hpp"
#include "adic/ranger.hpp"

namespace adic {

// Labels with pairwise log-distances delta(a,b) = log|a-b|; delta(a,a) = -inf.
class CenterConfig {
 public:
  CenterConfig() = default;
  CenterConfig(int rank, std::vector<std::string> labels);

  int rank() const { return rank_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index(const std::string& label) const;

  void set(std::size_t a, std::size_t b, GroupElem logdist);
  bool has(std::size_t a, std::size_t b) const;
  // Throws DomainError for a == b or a missing entry.
  const GroupElem& delta(std::size_t a, std::size_t b) const;
  // delta as a ranger, -inf on the diagonal.
  Ranger delta_ranger(std::size_t a, std::size_t b) const;

 private:
  int rank_ = 1;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::optional<GroupElem>>> delta_;
};

// Missing entries and triples whose two largest distances differ.
ValidationReport validate_config(const CenterConfig& c);

enum class P1Kind { Infinity, Classical, Monomial };

// Points are kept canonical: a monomial point stores the least label among
// the centers of its disc, radius -inf becomes classical.
class P1Point {
 public:
  static P1Point infinity() { return P1Point(P1Kind::Infinity, 0, std::nullopt); }
  static P1Point classical(std::size_t center) { return P1Point(P1Kind::Classical, center, std::nullopt); }
  static P1Point monomial(const CenterConfig& c, std::size_t center, const Ranger& logradius);

  P1Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == P1Kind::Infinity; }
  bool is_classical() const { return kind_ == P1Kind::Classical; }
  bool is_monomial() const { return kind_ == P1Kind::Monomial; }
  // Classical points, including infinity, and monomial points of principal radius.
  bool is_divisorial() const { return is_monomial() && radius_->is_principal(); }
  std::size_t center() const { return center_; }
  // -inf for finite classical points, +inf for infinity.
  Ranger radius(int rank) const;

  friend bool operator==(const P1Point&, const P1Point&) = default;
  friend bool operator<(const P1Point& x, const P1Point& y);

 private:
  P1Point(P1Kind k, std::size_t c, std::optional<Ranger> r) : kind_(k), center_(c), radius_(std::move(r)) {}
  P1Kind kind_;
  std::size_t center_;
  std::optional<Ranger> radius_;
};

std::string to_string(const CenterConfig& c, const P1Point& x);

Ranger radius(const CenterConfig& c, const P1Point& x);
// Equality read off from radii and center distances.
bool point_eq(const CenterConfig& c, const P1Point& x, const P1Point& y);
// The least point dominating both, infinity being the top.
P1Point meet(const CenterConfig& c, const P1Point& x, const P1Point& y);
// x lies on the path from y to infinity.
bool dominates(const CenterConfig& c, const P1Point& x, const P1Point& y);
// Length of [x, y] for divisorial points.
GroupElem distance(const CenterConfig& c, const P1Point& x, const P1Point& y);

// unit * prod (t - c_i)^{m_i}; unit_logabs is log|unit|.
struct FactoredFn {
  GroupElem unit_logabs;
  std::vector<std::pair<std::size_t, std::int64_t>> factors;
  std::int64_t degree() const;
};

FactoredFn multiply(const FactoredFn& f, const FactoredFn& g);

// log|f| at x. With `strict` a zero or pole of f raises DomainError instead
// of producing an infinite value.
ExtValue eval_abs(const CenterConfig& c, const FactoredFn& f, const P1Point& x, bool strict = false);

// Slope of log|f| along the path p_{a,r}, r increasing, just below q.
std::int64_t slope_and_degree(const CenterConfig& c, const FactoredFn& f, std::size_t center, const Ranger& q);

enum class BranchKind { Up, Down, Generic };

// Outward slope of log|f| along one branch at a divisorial point. Down
// branches are named by the least center they contain; one Generic entry
// stands for all branches without centers.
struct BranchSlope {
  BranchKind kind;
  std::size_t center = 0;
  std::int64_t slope = 0;
};

std::vector<BranchSlope> branch_slopes(const CenterConfig& c, const FactoredFn& f, const P1Point& x);

enum class ResidueField { Base, Transcendental };
enum class ValueGroup { Gamma, GammaPlusR };

struct PointInvariants {
  int E = 0;
  int F = 0;
  ValueGroup value_group = ValueGroup::Gamma;
  ResidueField residue_field = ResidueField::Base;
  int type_label = 1;
  // Type 3 only.
  std::optional<bool> symmetric_cut;
  // Type 6 exists only for discrete topologies.
  bool discrete_only = false;
};

PointInvariants classify_point(const CenterConfig& c, const P1Point& x);

// A strictly decreasing chain of discs D(center, r).
struct DiscChain {
  std::vector<std::pair<std::size_t, GroupElem>> discs;
};

// Throws DomainError unless each disc contains the next and radii decrease.
void validate_chain(const CenterConfig& c, const DiscChain& chain);

struct ChainLimit {
  // First disc that avoids every factor center; later values all agree.
  std::size_t from = 0;
  GroupElem value;
};

// The common value of log|f| along the tail of the chain, if the chain
// eventually leaves every factor center.
std::optional<ChainLimit> chain_limit(const CenterConfig& c, const DiscChain& chain, const FactoredFn& f);

enum class ComponentKind { Disc, Annulus, SemiInfiniteAnnulus };
const char* to_string(ComponentKind k);

// A connected component of the complement of a triangulation. Annuli are
// named by a skeleton edge; discs by their boundary vertex and the least
// center they contain ("inf" for the one containing infinity). Generic
// discs stand for the residue classes without centers.
struct ComplementComponent {
  ComponentKind kind;
  std::optional<std::size_t> edge;
  std::optional<std::size_t> vertex;
  std::string contains;
  bool generic = false;
};

struct Triangulation {
  std::vector<P1Point> vertices;
  GammaGraph skeleton;
  std::vector<ComplementComponent> components;
};

// The least triangulation containing the marked classical and divisorial points.
Triangulation triangulate(const CenterConfig& c, const std::vector<P1Point>& marked);

// A polynomial map known through its values on the source centers and the
// factorizations of f - b over the source centers for target centers b.
struct MapData {
  CenterConfig source;
  CenterConfig target;
  std::vector<std::size_t> image;
  std::map<std::size_t, FactoredFn> fiber;
  const FactoredFn& minus_value(std::size_t b) const;
};

// Throws DomainError on inconsistent data.
void validate_map(const MapData& f);

P1Point pushforward_point(const MapData& f, const P1Point& x);
// Preimages of a classical or monomial target point, sorted.
std::vector<P1Point> preimage_point(const MapData& f, const P1Point& y);

// The monomial path over `center` between radii lo <= hi.
struct TargetSegment {
  std::size_t center = 0;
  GroupElem lo, hi;
};

struct Pullback {
  GammaGraph graph;
  std::vector<P1Point> points;
  // Per edge: target radius as a function of the source radius along it.
  std::vector<PLFn> edge_maps;
};

Pullback pullback_skeleton(const MapData& f, const std::vector<TargetSegment>& delta);

struct SimultaneousTriangulation {
  std::vector<P1Point> source;
  std::vector<P1Point> target;
  int rounds = 0;
};

// Least (W, V) with f^{-1}(V) = W, V containing v0 and f(w0), W a
// triangulation of the source and V one of the target.
SimultaneousTriangulation simultaneous_triangulation(const MapData& f, const std::vector<P1Point>& w0,
                                                     const std::vector<P1Point>& v0, int max_rounds = 64);

}  // namespace adic
