#include "hvor/sparse_matrix.hpp"

#include <stdexcept>

namespace hvor {

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index");
  if (sgn(v) == 0) return;
  auto [it, fresh] = entries_.try_emplace({r, c}, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

Integer SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Integer(0) : it->second;
}

std::vector<std::vector<Integer>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_, Integer(0)));
  for (const auto& [k, v] : entries_) m[k.first][k.second] = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Integer>>& m) {
  SparseMatrix s(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) s.add(i, j, m[i][j]);
  }
  return s;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch in sparse product");
  std::vector<std::vector<std::pair<std::size_t, const Integer*>>> by_row(other.rows_);
  for (const auto& [k, v] : other.entries_) by_row[k.first].emplace_back(k.second, &v);
  SparseMatrix out(rows_, other.cols_);
  for (const auto& [k, v] : entries_) {
    for (const auto& [c, w] : by_row[k.second]) out.add(k.first, c, v * *w);
  }
  return out;
}

}  // namespace hvor
