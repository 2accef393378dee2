#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "troposign/poly.hpp"

namespace troposign::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2 };

// Entry point of the troposign tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct CorpusSpec {
  std::string kind;  // psd, cp, copositive, polar, sat
  std::size_t n = 2;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  std::string out_dir;
};

// Writes the corpus and a manifest.json; returns the file names written
// (manifest last), relative to out_dir.
std::vector<std::string> gen_corpus(const CorpusSpec& spec);

// Rows for Neg(m) (m descending), 𝟘, then Pos(m) (m ascending), m on the grid
// lo, lo+step, …, hi. Columns: x, x_sign, x_mag, fx, fx_sign, fx_mag, dominant.
std::string plot_poly_tsv(const SignedPoly& f, const Rational& lo, const Rational& hi, const Rational& step);

}  // namespace troposign::cli
