#pragma once

#include <vector>

#include "homform/algebra.hpp"
#include "homform/errors.hpp"
#include "oracles.hpp"

namespace support {

using namespace homform;

inline oracle::Dense to_dense(const std::vector<SparseVector>& rows, Index cols) {
  oracle::Dense out;
  for (const auto& r : rows) {
    oracle::Vec v(cols);
    for (const auto& [i, x] : r.entries()) {
      if (!x.is_rational()) throw PreconditionError("oracle needs rational input");
      v[i] = x.a();
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline oracle::Dense to_dense(const Matrix& M) { return to_dense(M.row_list(), M.cols()); }
inline oracle::Dense to_dense(const Subspace& S) { return to_dense(S.basis(), S.ambient()); }

inline std::vector<std::size_t> to_size(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

inline Matrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> e;
  for (const auto& r : rows) {
    e.emplace_back();
    for (long x : r) e.back().emplace_back(x);
  }
  return Matrix::dense(e);
}

inline Matrix diag(const std::vector<Scalar>& d) {
  Matrix M(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) M.set(i, i, d[i]);
  return M;
}

}  // namespace support
