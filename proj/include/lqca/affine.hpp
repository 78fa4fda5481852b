#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lqca/automaton.hpp"
#include "lqca/numerics.hpp"
#include "lqca/transfer.hpp"

namespace lqca {

/// How DynamicBasis::add eliminates the tail of T u.
enum class BasisUpdate {
  /// Householder reflection on components d..D-1; T stays orthogonal.
  householder,
  /// Row-swap pivot followed by the elimination shear
  /// v_i -= v_d u'_i / u'_d; T stays invertible but not orthogonal.
  shear,
};

/// Incrementally maintained basis of a linear subspace of R^D.
///
/// Represented by (T, B) with T invertible and T(span B) = R^d x {0}^(D-d),
/// so membership of u reduces to the last D - d components of T u vanishing.
/// Both requests touch only rows d..D-1 of T and cost O(D (D - d)).
class DynamicBasis {
 public:
  explicit DynamicBasis(std::size_t ambient, Tolerance tol = {},
                        BasisUpdate update = BasisUpdate::householder);

  std::size_t ambient_dim() const { return static_cast<std::size_t>(transform_.rows()); }
  std::size_t dim() const { return vectors_.size(); }
  const Eigen::MatrixXd& transform() const { return transform_; }
  const std::vector<Eigen::VectorXd>& vectors() const { return vectors_; }
  const std::vector<Word>& provenance() const { return provenance_; }

  /// u in span(B): every component d..D-1 of T u is at most
  /// membership_rel * max(||u||, 1) in magnitude.
  bool member(const Eigen::VectorXd& u) const;

  /// Replaces B by B + {u}. Throws std::invalid_argument when u is already
  /// in the span.
  void add(const Eigen::VectorXd& u, Word provenance = {});

  /// Scalar multiplications spent by member/add since construction.
  std::uint64_t multiplications() const { return multiplications_; }

 private:
  Eigen::VectorXd tail_image(const Eigen::VectorXd& u) const;
  bool tail_vanishes(const Eigen::VectorXd& tail, const Eigen::VectorXd& u) const;

  Eigen::MatrixXd transform_;
  std::vector<Eigen::VectorXd> vectors_;
  std::vector<Word> provenance_;
  Tolerance tol_;
  BasisUpdate update_;
  mutable std::uint64_t multiplications_ = 0;
};

/// Appends a trailing 1: v is in the affine hull of B iff lift(v) is in the
/// linear hull of lift(B).
Eigen::VectorXd lift(const Eigen::VectorXd& v);

struct ClosureVerdict {
  bool closed = true;
  /// Word b with <M_b l | r> != 1, present iff !closed.
  std::optional<Word> witness_word;
  /// Dimension of the lifted linear hull of the orbit of l.
  std::size_t final_dimension = 0;
  /// Generations that enlarged the basis.
  std::size_t iterations = 0;
  /// Orbit vectors M_b l kept as basis, with their words.
  std::vector<Eigen::VectorXd> basis;
  std::vector<Word> words;
};

/// Decides whether {u : <u|r> = 1} contains M_b l for every word b.
///
/// The orbit of l is explored breadth first, letters in index order; an
/// image joins the basis only if it leaves the current affine hull. When the
/// hull is stable every basis vector is tested against r and the first
/// failure (shortest generation) is returned as the witness. Expects
/// <l|r> = 1; otherwise the empty word is reported.
ClosureVerdict decide_closed(const Eigen::VectorXd& l, const Eigen::VectorXd& r,
                             std::span<const TransferOperator> ops, const Tolerance& tol = {},
                             BasisUpdate update = BasisUpdate::householder);

}  // namespace lqca
