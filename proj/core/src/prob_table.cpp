#include "elgi/prob_table.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace elgi {

namespace {
constexpr double kClampTol = 1e-9;
constexpr double kMassTol = 1e-9;

std::size_t table_size(int arity, int outcome_dim) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(outcome_dim);
  return n;
}
}  // namespace

ProbTable::ProbTable(int arity, int outcome_dim, double mass)
    : arity_(arity), outcome_dim_(outcome_dim), mass_(mass) {
  if (arity < 1 || arity > 3) throw std::invalid_argument("ProbTable: arity must be 1, 2, or 3");
  if (outcome_dim < 2) throw std::invalid_argument("ProbTable: outcome_dim must be >= 2");
  values_.assign(table_size(arity, outcome_dim), 0.0);
}

double& ProbTable::at(int q1) {
  if (arity_ != 1) throw std::invalid_argument("ProbTable: arity-1 access on arity-" + std::to_string(arity_));
  return values_[static_cast<std::size_t>(q1)];
}

double& ProbTable::at(int q1, int q2) {
  if (arity_ != 2) throw std::invalid_argument("ProbTable: arity-2 access on arity-" + std::to_string(arity_));
  return values_[static_cast<std::size_t>(q1) * outcome_dim_ + q2];
}

double& ProbTable::at(int q1, int q2, int q3) {
  if (arity_ != 3) throw std::invalid_argument("ProbTable: arity-3 access on arity-" + std::to_string(arity_));
  return values_[(static_cast<std::size_t>(q1) * outcome_dim_ + q2) * outcome_dim_ + q3];
}

double ProbTable::at(int q1) const { return const_cast<ProbTable*>(this)->at(q1); }
double ProbTable::at(int q1, int q2) const { return const_cast<ProbTable*>(this)->at(q1, q2); }
double ProbTable::at(int q1, int q2, int q3) const {
  return const_cast<ProbTable*>(this)->at(q1, q2, q3);
}

double ProbTable::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

void ProbTable::validate() {
  for (auto& v : values_) {
    if (v < -kClampTol) {
      throw std::domain_error("ProbTable: entry " + std::to_string(v) + " below -1e-9");
    }
    if (v < 0.0) v = 0.0;
  }
  const double s = sum();
  if (std::abs(s - mass_) > kMassTol) {
    throw std::domain_error("ProbTable: sum " + std::to_string(s) + " deviates from declared mass " +
                            std::to_string(mass_));
  }
}

ProbTable marginal_second(const ProbTable& table) {
  if (table.arity() != 2) throw std::invalid_argument("marginal_second: arity-2 table required");
  ProbTable out(1, table.outcome_dim(), table.mass());
  for (int i = 0; i < table.outcome_dim(); ++i)
    for (int j = 0; j < table.outcome_dim(); ++j) out.at(j) += table.at(i, j);
  return out;
}

ProbTable marginal_first(const ProbTable& table) {
  if (table.arity() != 2) throw std::invalid_argument("marginal_first: arity-2 table required");
  ProbTable out(1, table.outcome_dim(), table.mass());
  for (int i = 0; i < table.outcome_dim(); ++i)
    for (int j = 0; j < table.outcome_dim(); ++j) out.at(i) += table.at(i, j);
  return out;
}

}  // namespace elgi
