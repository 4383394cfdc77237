#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "torusgraph/grid_embedding.hpp"

namespace torusgraph {

class InapplicableMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pushes `count` consecutive steps of an edge path (1 to 3 sides of one
/// unit cell) across that cell, replacing them with the remaining sides.
/// `turn` is +1 when the cell lies to the left of the path, -1 to the right.
struct CellSlide {
  std::size_t edge = 0;
  std::size_t start = 0;
  std::size_t count = 1;
  int turn = 1;

  friend bool operator==(const CellSlide&, const CellSlide&) = default;
};

/// Moves a vertex one unit step. If an incident path leaves along that
/// step, the path is shortened and the vertex's other incidence (at most
/// one) is lengthened by the step; otherwise the step must be free and the
/// vertex's single incidence (if any) is lengthened.
struct VertexSlide {
  std::size_t vertex = 0;
  Dir dir = Dir::Right;

  friend bool operator==(const VertexSlide&, const VertexSlide&) = default;
};

using Move = std::variant<CellSlide, VertexSlide>;

/// Result of a move: a valid embedding of the same abstract graph in which
/// every cycle keeps its homology class. Cell slides also keep edge lifts;
/// a vertex slide across the fundamental-domain boundary shifts the lifts
/// of its edges by a common vector. Throws InapplicableMove otherwise.
GridEmbedding apply_move(const GridEmbedding& e, const Move& m);

/// Every applicable move, cell slides first (by edge, start, count, turn),
/// then vertex slides (by vertex, direction).
std::vector<Move> applicable_moves(const GridEmbedding& e);

enum class CertificateKind {
  AvoidsMeridian,   // no image point on the grid circle x = c
  AvoidsLongitude,  // no image point on the grid circle y = c
  DualMeridian,     // the circle x = c + 1/2 meets the image at most once
  DualLongitude,    // the circle y = c + 1/2 meets the image at most once
};

struct TrivialityCertificate {
  CertificateKind kind = CertificateKind::AvoidsMeridian;
  int coordinate = 0;
  int crossings = 0;
  /// Dual certificate with one crossing where the rest of the image
  /// separates the two sides of the cut annulus.
  bool separated = false;
};

/// Terminal test of the reduction search. Avoiding a meridian or longitude
/// circle puts the image in an untwisted unknotted annulus, hence in a
/// sphere. A dual circle runs through cell centres and meets the image only
/// at midpoints of segments, which are edge interiors; when it meets the
/// image exactly once, the rest of the image sits in the complementary
/// annulus, on a sphere, and the crossing arc becomes an unknotted arc in the
/// ball on the other side of that sphere. If both ends of that arc lie on one
/// face of the rest, the arc can be laid back on the sphere. If the rest
/// separates them (a cycle parallel to the cut), `separated` is set: that
/// case leans on the arc being an overpass of a planar graph, not on the
/// face argument. Within one state, certificates that need no such step
/// are preferred.
std::optional<TrivialityCertificate> triviality_certificate(const GridEmbedding& e);

enum class ReductionOutcome { Reduced, Exhausted };

struct ReductionResult {
  ReductionOutcome outcome = ReductionOutcome::Exhausted;
  std::size_t states = 0;   // states dequeued
  std::size_t depth = 0;    // moves to the certified state when Reduced
  bool space_exhausted = false;  // every reachable state seen before the budget ran out
  std::optional<TrivialityCertificate> certificate;
  std::vector<Move> moves;  // a shortest move sequence when Reduced
};

/// Breadth-first search over moves from `e` with an exact visited set.
/// Reduced is a certificate of triviality; Exhausted is inconclusive. The
/// first certified state is returned, separated or not.
ReductionResult reduction_oracle(const GridEmbedding& e, std::size_t budget);

const char* to_string(CertificateKind k);
const char* to_string(ReductionOutcome o);

}  // namespace torusgraph
