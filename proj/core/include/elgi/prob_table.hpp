#ifndef ELGI_PROB_TABLE_HPP
#define ELGI_PROB_TABLE_HPP

#include <vector>

namespace elgi {

// Nonnegative real table over outcome tuples at 1, 2, or 3 time indices.
// Each index runs over {0, ..., outcome_dim-1}. `mass` is the declared total:
// 1.0 for full tables, the branch probability for postselected branches.
// Entries in [-1e-9, 0) are clamped to zero on construction.
class ProbTable {
 public:
  ProbTable(int arity, int outcome_dim, double mass);

  int arity() const { return arity_; }
  int outcome_dim() const { return outcome_dim_; }
  double mass() const { return mass_; }
  void set_mass(double mass) { mass_ = mass; }

  double& at(int q1);
  double& at(int q1, int q2);
  double& at(int q1, int q2, int q3);
  double at(int q1) const;
  double at(int q1, int q2) const;
  double at(int q1, int q2, int q3) const;

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  double sum() const;

  // Clamps tiny negatives and checks the table invariants: entries >= -1e-9
  // before clamping and sum within 1e-9 of the declared mass. Throws
  // std::domain_error on violation.
  void validate();

 private:
  int arity_;
  int outcome_dim_;
  double mass_;
  std::vector<double> values_;
};

// Sum over the first index of an arity-2 table: P(q_j) = sum_i P(q_i, q_j).
ProbTable marginal_second(const ProbTable& table);
// Sum over the second index of an arity-2 table: P(q_i) = sum_j P(q_i, q_j).
ProbTable marginal_first(const ProbTable& table);

}  // namespace elgi

#endif  // ELGI_PROB_TABLE_HPP
