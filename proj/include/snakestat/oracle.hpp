#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "snakestat/cyclic_word.hpp"

namespace snakestat {

// Fuchsian representation of the surface group on the Poincare disk:
// side-pairing translations of the regular octagon with vertex angle
// pi/4.  Matrices are SU(1,1): [[alpha, beta], [conj(beta), conj(alpha)]].
class FuchsianRep {
 public:
  using Mat = Eigen::Matrix2cd;

  // Constructs the standard representation and verifies the relator
  // product; throws if the residual exceeds 1e-9.
  static const FuchsianRep& instance();

  const Mat& generator(Letter x) const { return gen_[idx(x)]; }
  Mat word_matrix(const CyclicWord& w) const;

  double relator_residual() const { return relator_residual_; }
  // Common translation length of the generators.
  double generator_translation_length() const { return gen_length_; }

  static double translation_length(const Mat& m);
  static bool hyperbolic(const Mat& m);

 private:
  FuchsianRep();
  std::array<Mat, 8> gen_;
  double relator_residual_ = 0;
  double gen_length_ = 0;
};

struct OracleOptions {
  double tube_radius = 6.0;    // conjugate axes kept within this distance
                               // of the fundamental segment
  double margin = 1e-7;        // near-tangency guard on the crossing data
  bool doubling_check = false; // re-run with tube_radius + 2, compare
};

// Transverse self-crossing count of the closed geodesic of the class of w
// (w fully reduced and nonempty).  Proper powers use the k-fold cover
// convention q^2 m + q - 1 over the primitive root.  Throws a
// precision_error if a crossing determinant falls inside the margin, and
// a logic error if the doubling check disagrees.
long long oracle_count(const CyclicWord& w, const OracleOptions& opt = {});

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace snakestat
