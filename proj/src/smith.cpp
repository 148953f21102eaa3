#include "garside/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace garside {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t r0, std::size_t r1) const {
  IntMatrix out(r1 - r0, cols_);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(r - r0, c) = at(r, c);
  return out;
}

IntMatrix IntMatrix::col_block(std::size_t c0, std::size_t c1) const {
  IntMatrix out(rows_, c1 - c0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = c0; c < c1; ++c) out.at(r, c - c0) = at(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const BigInt& x = a.at(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(l, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

class Reducer {
 public:
  Reducer(const IntMatrix& m, bool transforms) : a(m), track(transforms) {
    if (track) {
      u = IntMatrix::identity(m.rows());
      v = IntMatrix::identity(m.cols());
      vi = IntMatrix::identity(m.cols());
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    if (track)
      for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    if (track) {
      for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
      for (std::size_t c = 0; c < vi.cols(); ++c) std::swap(vi.at(i, c), vi.at(j, c));
    }
  }
  // row dst += c * row src
  void add_row(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(dst, k) += c * a.at(src, k);
    if (track)
      for (std::size_t k = 0; k < u.cols(); ++k) u.at(dst, k) += c * u.at(src, k);
  }
  // col dst += c * col src
  void add_col(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, dst) += c * a.at(k, src);
    if (track) {
      for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, dst) += c * v.at(k, src);
      for (std::size_t k = 0; k < vi.cols(); ++k) vi.at(src, k) -= c * vi.at(dst, k);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    if (track)
      for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }

  // Brings the smallest nonzero entry of the trailing block to (t,t).
  bool pivot_block(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const BigInt& x = a.at(i, j);
        if (x == 0) continue;
        BigInt ax = abs(x);
        if (!found || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Brings the smallest nonzero entry of row t / column t to (t,t).
  void pivot_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    BigInt best = abs(a.at(t, t));
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      if (a.at(i, t) != 0 && (best == 0 || abs(a.at(i, t)) < best)) {
        best = abs(a.at(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < a.cols(); ++j)
      if (a.at(t, j) != 0 && (best == 0 || abs(a.at(t, j)) < best)) {
        best = abs(a.at(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void run() {
    const std::size_t limit = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!pivot_block(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (a.at(i, t) == 0) continue;
          add_row(i, t, -BigInt(a.at(i, t) / a.at(t, t)));
          if (a.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a.at(t, j) == 0) continue;
          add_col(j, t, -BigInt(a.at(t, j) / a.at(t, t)));
          if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) {
          pivot_cross(t);
          continue;
        }
        bool divides_all = true;
        for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              add_row(t, i, 1);
              divides_all = false;
              break;
            }
        if (divides_all) break;
      }
      if (a.at(t, t) < 0) negate_row(t);
    }
    rank = t;
  }

  IntMatrix a;
  bool track;
  IntMatrix u, v, vi;
  std::size_t rank = 0;
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool transforms) {
  Reducer r(m, transforms);
  r.run();
  SmithResult out;
  out.rank = r.rank;
  for (std::size_t i = 0; i < r.rank; ++i) out.diagonal.push_back(r.a.at(i, i));
  if (transforms) {
    out.u = std::move(r.u);
    out.v = std::move(r.v);
    out.v_inverse = std::move(r.vi);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " x ") + p;
  return out;
}

AbelianGroup make_abelian_group(int free_rank, const std::vector<BigInt>& cyclic_orders) {
  IntMatrix d(cyclic_orders.size(), cyclic_orders.size());
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) d.at(i, i) = cyclic_orders[i];
  AbelianGroup g;
  g.free_rank = free_rank;
  for (const auto& x : smith_normal_form(d).diagonal)
    if (x > 1) g.torsion.push_back(x);
  return g;
}

AbelianGroup homology_from_ranks(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.cols() != d_out.rows()) throw std::invalid_argument("homology: differential shapes do not compose");
  const auto in = smith_normal_form(d_in);
  const auto out = smith_normal_form(d_out);
  AbelianGroup g;
  g.free_rank = static_cast<int>(d_in.cols() - in.rank - out.rank);
  for (const auto& x : out.diagonal)
    if (x > 1) g.torsion.push_back(x);
  return g;
}

AbelianGroup homology_from_kernel(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.cols() != d_out.rows()) throw std::invalid_argument("homology: differential shapes do not compose");
  const auto in = smith_normal_form(d_in, true);
  const IntMatrix coords = *in.v_inverse * d_out;
  if (!coords.row_block(0, in.rank).is_zero())
    throw std::logic_error("homology: image is not contained in the kernel");
  const IntMatrix relations = coords.row_block(in.rank, coords.rows());
  const auto s = smith_normal_form(relations);
  AbelianGroup g;
  g.free_rank = static_cast<int>(relations.rows() - s.rank);
  for (const auto& x : s.diagonal)
    if (x > 1) g.torsion.push_back(x);
  return g;
}

}  // namespace garside
