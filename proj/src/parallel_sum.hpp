#pragma once

#include <cstddef>
#include <vector>

#include "qqpft/quaternion.hpp"

namespace qqpft::detail {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Sum of term(i1, i2) over an n1 x n2 lattice. Rows are reduced in parallel
/// and combined serially in row order, so the result does not depend on the
/// thread count.
template <typename Term>
double lattice_sum(std::size_t n1, std::size_t n2, Term term) {
  std::vector<double> rows(n1, 0.0);
  const long rows_n = static_cast<long>(n1);
#pragma omp parallel for schedule(static)
  for (long i1 = 0; i1 < rows_n; ++i1) {
    CompensatedSum s;
    for (std::size_t i2 = 0; i2 < n2; ++i2) s.add(term(static_cast<std::size_t>(i1), i2));
    rows[static_cast<std::size_t>(i1)] = s.value();
  }
  CompensatedSum total;
  for (double r : rows) total.add(r);
  return total.value();
}

/// Quaternion-valued variant of lattice_sum.
template <typename Term>
Quaternion lattice_sum_q(std::size_t n1, std::size_t n2, Term term) {
  std::vector<Quaternion> rows(n1);
  const long rows_n = static_cast<long>(n1);
#pragma omp parallel for schedule(static)
  for (long i1 = 0; i1 < rows_n; ++i1) {
    CompensatedSum r, x, y, z;
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      const Quaternion q = term(static_cast<std::size_t>(i1), i2);
      r.add(q.r);
      x.add(q.x);
      y.add(q.y);
      z.add(q.z);
    }
    rows[static_cast<std::size_t>(i1)] = {r.value(), x.value(), y.value(), z.value()};
  }
  CompensatedSum r, x, y, z;
  for (const auto& q : rows) {
    r.add(q.r);
    x.add(q.x);
    y.add(q.y);
    z.add(q.z);
  }
  return {r.value(), x.value(), y.value(), z.value()};
}

}  // namespace qqpft::detail
