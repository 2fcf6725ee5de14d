#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/rational.hpp"
#include "cosetgrowth/small_cancellation.hpp"

namespace cosetgrowth {

// Consecutive exponent run t1 t2^first t1 t2^(first+1) ... t1 t2^last.
struct ExponentRun {
  std::int64_t first = 0;
  std::int64_t last = 0;
  friend bool operator==(const ExponentRun&, const ExponentRun&) = default;
};

enum class RipsFamily { relator, conjugate_left, conjugate_right };

// One relator of H together with the data it was built from.
struct RipsRelator {
  RipsFamily family;
  std::size_t source_index;  // i: relator index (family 1) or x-generator index
  std::size_t t_index;       // j in {0, 1}; unused for family 1
  ExponentRun run;
};

// Output of the construction: H = < x_1..x_m, t1, t2 | ... > with
//   r_i       t1 t2^a_i ... t1 t2^b_i
//   x_i^-1 t_j x_i   t1 t2^c_ij ... t1 t2^d_ij
//   x_i t_j x_i^-1   t1 t2^e_ij ... t1 t2^f_ij
// and the quotient map H -> G killing t1, t2.
struct RipsData {
  Presentation source;
  Presentation result;
  std::vector<RipsRelator> relators;  // parallel to result.relators()
  std::size_t run_length = 0;         // Lambda: every run spans Lambda + 1 exponents
  Rational lambda;
  PieceReport certificate;

  std::size_t t1() const { return source.rank(); }
  std::size_t t2() const { return source.rank() + 1; }
};

struct RipsOptions {
  Rational lambda{1, 6};
  std::size_t initial_run_length = 4;
  std::size_t max_run_length = 1024;
};

// Chooses disjoint exponent runs, doubling the run length until the result
// satisfies C'(lambda). Throws Error(budget_exhausted) past max_run_length.
RipsData build_rips(const Presentation& g, const RipsOptions& options = {});

// Relators for a fixed run length, without certification.
RipsData assemble_rips(const Presentation& g, std::size_t run_length);

// Erase t-letters, keep x_i; the result is over G's generators.
Word beta_image(const Word& w, std::size_t source_rank);
inline Word beta_image(const Word& w, const RipsData& r) { return beta_image(w, r.source.rank()); }

// Generators of the kernel N of H -> G: {t1, t2}.
std::vector<Word> n_generators(const RipsData& r);

}  // namespace cosetgrowth
