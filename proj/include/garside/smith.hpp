#pragma once

// Integer matrices, Smith normal form with optional unimodular transforms, and
// finitely generated abelian groups.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace garside {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  /// Rows [r0, r1) and all columns.
  IntMatrix row_block(std::size_t r0, std::size_t r1) const;
  /// All rows and columns [c0, c1).
  IntMatrix col_block(std::size_t c0, std::size_t c1) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// [[a,b,...],[...]]
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithResult {
  /// Nonzero invariant factors d_1 | d_2 | ... (all positive).
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
  /// With transforms: u * m * v is diagonal with `diagonal` leading, and
  /// v_inverse * v = I.
  std::optional<IntMatrix> u;
  std::optional<IntMatrix> v;
  std::optional<IntMatrix> v_inverse;
};

SmithResult smith_normal_form(const IntMatrix& m, bool transforms = false);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // each > 1, each dividing the next

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  /// "Z^2 x Z/2 x Z/6", "0" for the trivial group.
  std::string to_string() const;
};

/// Z^free x Z/c_1 x ... in invariant-factor form (orders <= 1 dropped).
AbelianGroup make_abelian_group(int free_rank, const std::vector<BigInt>& cyclic_orders);

/// ker(d_in) / im(d_out) where d_in: C -> C' and d_out: C'' -> C, columns
/// indexing the source basis. Uses ranks and the invariant factors of d_out.
AbelianGroup homology_from_ranks(const IntMatrix& d_in, const IntMatrix& d_out);

/// Same group through an explicit integral basis of ker(d_in) taken from the
/// column transform of its Smith form.
AbelianGroup homology_from_kernel(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace garside
