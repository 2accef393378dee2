#include "troposign/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace troposign {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_square(const SignedMat& a, const char* what) {
  if (!a.is_square()) throw Error(std::string(what) + " requires a square matrix");
}

bool odd_permutation(const std::vector<std::size_t>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 1;
}

}  // namespace

TropNum dot_trop(const TropVec& x, const TropVec& y) {
  require_same_length(x.size(), y.size());
  TropNum acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc = oplus(acc, otimes(x[i], y[i]));
  return acc;
}

SignedTrop dot_signed(const SignedVec& x, const TropVec& a) {
  require_same_length(x.size(), a.size());
  if (!is_signed_vec(x)) throw Error("dot_signed requires a signed vector");
  return SignedTrop::from_pair({dot_trop(positive_part(x), a), dot_trop(negative_part(x), a)});
}

SignedTrop frobenius(const SignedMat& x, const SignedMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error("frobenius: shape mismatch");
  SignedTrop acc;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) acc = oplus(acc, otimes(x(i, j), y(i, j)));
  return acc;
}

TropNum frobenius(const TropMat& x, const TropMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error("frobenius: shape mismatch");
  TropNum acc;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) acc = oplus(acc, otimes(x(i, j), y(i, j)));
  return acc;
}

IndexSet support(const TropVec& z) {
  IndexSet s;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i].is_finite()) s.push_back(i);
  return s;
}

TropVec restrict_to(const TropVec& z, const IndexSet& idx) {
  TropVec out(z.size());
  for (std::size_t i : idx) {
    if (i >= z.size()) throw Error("index " + std::to_string(i) + " out of range");
    out[i] = z[i];
  }
  return out;
}

TropVec restrict_complement(const TropVec& z, const IndexSet& idx) {
  TropVec out = z;
  for (std::size_t i : idx) {
    if (i >= z.size()) throw Error("index " + std::to_string(i) + " out of range");
    out[i] = TropNum();
  }
  return out;
}

bool is_signed_vec(const SignedVec& x) {
  return std::all_of(x.begin(), x.end(), [](const SignedTrop& v) { return is_signed(v); });
}

bool is_signed_mat(const SignedMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_signed(a(i, j))) return false;
  return true;
}

TropVec positive_part(const SignedVec& x) {
  TropVec out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(positive_part(v));
  return out;
}

TropVec negative_part(const SignedVec& x) {
  TropVec out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(negative_part(v));
  return out;
}

SignedVec combine_parts(const TropVec& plus, const TropVec& minus) {
  require_same_length(plus.size(), minus.size());
  SignedVec out;
  out.reserve(plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i)
    out.push_back(ominus(SignedTrop::pos(plus[i]), SignedTrop::pos(minus[i])));
  return out;
}

SignedVec embed_positive(const TropVec& x) {
  SignedVec out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(SignedTrop::pos(v));
  return out;
}

SignedMat embed_positive(const TropMat& x) {
  SignedMat out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = SignedTrop::pos(x(i, j));
  return out;
}

SignedMat identity_signed(std::size_t n) {
  SignedMat id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = SignedTrop::one();
  return id;
}

SignedMat multiply(const SignedMat& a, const SignedMat& b) {
  if (a.cols() != b.rows()) throw Error("multiply: inner dimension mismatch");
  SignedMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SignedTrop acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  return c;
}

TropMat multiply(const TropMat& a, const TropMat& b) {
  if (a.cols() != b.rows()) throw Error("multiply: inner dimension mismatch");
  TropMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      TropNum acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  return c;
}

SignedVec multiply(const SignedMat& a, const SignedVec& x) {
  require_same_length(a.cols(), x.size());
  SignedVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] = oplus(y[i], otimes(a(i, k), x[k]));
  return y;
}

SignedMat oplus(const SignedMat& a, const SignedMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("oplus: shape mismatch");
  SignedMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = oplus(a(i, j), b(i, j));
  return c;
}

SignedTrop quadratic_form(const SignedMat& a, const SignedVec& x) {
  require_square(a, "quadratic_form");
  require_same_length(a.rows(), x.size());
  SignedTrop acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      acc = oplus(acc, otimes(otimes(x[i], a(i, j)), x[j]));
  }
  return acc;
}

SignedTrop det_signed(const SignedMat& a) {
  require_square(a, "det_signed");
  const std::size_t n = a.rows();
  if (n > kMaxDetDimension) {
    throw Error("det_signed: permutation expansion limited to n <= " +
                std::to_string(kMaxDetDimension));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SignedTrop acc;
  do {
    SignedTrop term = SignedTrop::one();
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = otimes(term, a(i, perm[i]));
    if (term.is_zero()) continue;
    acc = oplus(acc, odd_permutation(perm) ? ominus(term) : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

SignedMat minor_matrix(const SignedMat& a, std::size_t row, std::size_t col) {
  if (a.rows() < 2 || a.cols() < 2) throw Error("minor of a matrix with a single row or column");
  SignedMat m(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, r = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

SignedMat comatrix(const SignedMat& a) {
  require_square(a, "comatrix");
  if (a.rows() < 2) throw Error("comatrix is not defined for a 1x1 matrix");
  const std::size_t n = a.rows();
  SignedMat com(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SignedTrop d = det_signed(minor_matrix(a, i, j));
      com(i, j) = (i + j) % 2 == 0 ? d : ominus(d);
    }
  return com;
}

SignedMat kleene_star(const SignedMat& c) {
  require_square(c, "kleene_star");
  const std::size_t n = c.rows();
  SignedMat star = identity_signed(n);
  SignedMat power = identity_signed(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = multiply(power, c);
    star = oplus(star, power);
  }
  return star;
}

}  // namespace troposign
