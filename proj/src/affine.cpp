#include "lqca/affine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lqca {

DynamicBasis::DynamicBasis(std::size_t ambient, Tolerance tol, BasisUpdate update)
    : transform_(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(ambient),
                                           static_cast<Eigen::Index>(ambient))),
      tol_(tol),
      update_(update) {}

Eigen::VectorXd DynamicBasis::tail_image(const Eigen::VectorXd& u) const {
  const Eigen::Index n = transform_.rows();
  const auto d = static_cast<Eigen::Index>(dim());
  if (u.size() != n) throw std::invalid_argument("DynamicBasis: dimension mismatch");
  Eigen::VectorXd tail(n - d);
  for (Eigen::Index i = d; i < n; ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) s += transform_(i, j) * u(j);
    tail(i - d) = s;
  }
  multiplications_ += static_cast<std::uint64_t>((n - d) * n);
  return tail;
}

bool DynamicBasis::tail_vanishes(const Eigen::VectorXd& tail, const Eigen::VectorXd& u) const {
  multiplications_ += static_cast<std::uint64_t>(u.size());
  const double scale = std::max(u.norm(), 1.0);
  return tail.size() == 0 || tail.cwiseAbs().maxCoeff() <= tol_.membership_rel * scale;
}

bool DynamicBasis::member(const Eigen::VectorXd& u) const {
  return tail_vanishes(tail_image(u), u);
}

void DynamicBasis::add(const Eigen::VectorXd& u, Word provenance) {
  Eigen::VectorXd tail = tail_image(u);
  if (tail_vanishes(tail, u)) {
    throw std::invalid_argument("DynamicBasis::add: vector already lies in the span");
  }
  const Eigen::Index n = transform_.rows();
  const auto d = static_cast<Eigen::Index>(dim());
  const Eigen::Index t = n - d;

  Eigen::Index pivot = 0;
  tail.cwiseAbs().maxCoeff(&pivot);
  if (pivot != 0) {
    transform_.row(d).swap(transform_.row(d + pivot));
    std::swap(tail(0), tail(pivot));
  }

  if (t > 1) {
    if (update_ == BasisUpdate::householder) {
      // reflect tail onto alpha e_0 with v = tail - alpha e_0
      const double alpha = tail(0) >= 0.0 ? -tail.norm() : tail.norm();
      Eigen::VectorXd v = tail;
      v(0) -= alpha;
      const double vv = v.squaredNorm();
      multiplications_ += static_cast<std::uint64_t>(2 * t);
      for (Eigen::Index j = 0; j < n; ++j) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < t; ++i) s += v(i) * transform_(d + i, j);
        const double f = 2.0 * s / vv;
        for (Eigen::Index i = 0; i < t; ++i) transform_(d + i, j) -= f * v(i);
      }
      multiplications_ += static_cast<std::uint64_t>(n * (2 * t + 1));
    } else {
      for (Eigen::Index i = 1; i < t; ++i) {
        const double f = tail(i) / tail(0);
        for (Eigen::Index j = 0; j < n; ++j) transform_(d + i, j) -= f * transform_(d, j);
      }
      multiplications_ += static_cast<std::uint64_t>((t - 1) * (n + 1));
    }
  }

  vectors_.push_back(u);
  provenance_.push_back(std::move(provenance));
}

Eigen::VectorXd lift(const Eigen::VectorXd& v) {
  Eigen::VectorXd out(v.size() + 1);
  out.head(v.size()) = v;
  out(v.size()) = 1.0;
  return out;
}

ClosureVerdict decide_closed(const Eigen::VectorXd& l, const Eigen::VectorXd& r,
                             std::span<const TransferOperator> ops, const Tolerance& tol,
                             BasisUpdate update) {
  const Eigen::Index m = l.size();
  DynamicBasis basis(static_cast<std::size_t>(m + 1), tol, update);
  basis.add(lift(l), {});

  ClosureVerdict verdict;
  std::vector<std::size_t> frontier{0};
  while (true) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const Eigen::VectorXd head = basis.vectors()[idx].head(m);
      const Word parent = basis.provenance()[idx];
      for (const TransferOperator& op : ops) {
        Eigen::VectorXd image = lift(op.matrix * head);
        if (basis.member(image)) continue;
        Word word = parent;
        word.push_back(op.letter);
        basis.add(image, std::move(word));
        next.push_back(basis.dim() - 1);
      }
    }
    if (next.empty()) break;
    ++verdict.iterations;
    frontier = std::move(next);
  }

  verdict.final_dimension = basis.dim();
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Eigen::VectorXd head = basis.vectors()[i].head(m);
    const double inner = head.dot(r);
    const double scale = std::max(1.0, head.norm() * r.norm());
    if (verdict.closed && std::abs(inner - 1.0) > tol.membership_rel * scale) {
      verdict.closed = false;
      verdict.witness_word = basis.provenance()[i];
    }
    verdict.basis.push_back(head);
    verdict.words.push_back(basis.provenance()[i]);
  }
  return verdict;
}

}  // namespace lqca
