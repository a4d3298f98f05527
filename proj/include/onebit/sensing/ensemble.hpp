#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "onebit/numkit/linear_operator.hpp"
#include "onebit/sensing/dense_rows.hpp"

namespace onebit::sensing {

/// The two arms of a paired phase-less sensing scheme. Row i of `first` and
/// row i of `second` form measurement pair i; both arms map C^n -> C^m.
struct PairedArms {
  OperatorPtr first;
  OperatorPtr second;

  std::size_t pairs() const { return first->rows(); }
  std::size_t dim() const { return first->cols(); }
  /// Both arms stacked: rows of `first` followed by rows of `second`.
  OperatorPtr stacked() const;
  void validate() const;
};

/// m pairs (a1_i, a2_i) of i.i.d. complex Gaussian vectors in C^n.
///
/// Row i of arm k is drawn from the stream (seed, kRows<k>, i), so any row can
/// be regenerated on its own and the two arms never share draws.
class PairedEnsemble {
 public:
  PairedEnsemble(std::size_t n, std::size_t m, std::uint64_t seed,
                 std::shared_ptr<const DenseRows> rows1, std::shared_ptr<const DenseRows> rows2);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::uint64_t seed() const { return seed_; }

  const DenseRows& rows1() const { return *rows1_; }
  const DenseRows& rows2() const { return *rows2_; }
  std::span<const Complex> row1(std::size_t i) const { return rows1_->row(i); }
  std::span<const Complex> row2(std::size_t i) const { return rows2_->row(i); }

  PairedArms arms() const { return {rows1_, rows2_}; }
  /// Pairs [begin, begin + count).
  PairedEnsemble block(std::size_t begin, std::size_t count) const;

 private:
  std::size_t n_;
  std::size_t m_;
  std::uint64_t seed_;
  std::shared_ptr<const DenseRows> rows1_;
  std::shared_ptr<const DenseRows> rows2_;
};

/// m i.i.d. complex Gaussian sensing vectors; rows from (seed, kRows, i).
class PlainEnsemble {
 public:
  PlainEnsemble(std::size_t n, std::size_t m, std::uint64_t seed,
                std::shared_ptr<const DenseRows> rows);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::uint64_t seed() const { return seed_; }
  const DenseRows& rows() const { return *rows_; }
  std::span<const Complex> row(std::size_t i) const { return rows_->row(i); }
  OperatorPtr op() const { return rows_; }
  PlainEnsemble block(std::size_t begin, std::size_t count) const;

 private:
  std::size_t n_;
  std::size_t m_;
  std::uint64_t seed_;
  std::shared_ptr<const DenseRows> rows_;
};

PairedEnsemble build_paired_ensemble(std::size_t n, std::size_t m, std::uint64_t seed);
PlainEnsemble build_plain_ensemble(std::size_t n, std::size_t m, std::uint64_t seed);

/// Ensembles serialize as a one-line JSON header; rows are regenerated from
/// the seed on load:
///   {"format":"onebit-ensemble","version":1,"kind":"paired","n":8,"m":100,"seed":7}
struct EnsembleHeader {
  std::string kind;  // "paired" or "plain"
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

void write_ensemble_header(std::ostream& os, const EnsembleHeader& header);
EnsembleHeader read_ensemble_header(std::istream& is);
EnsembleHeader header_of(const PairedEnsemble& ensemble);
EnsembleHeader header_of(const PlainEnsemble& ensemble);
PairedEnsemble regenerate_paired(const EnsembleHeader& header);
PlainEnsemble regenerate_plain(const EnsembleHeader& header);

}  // namespace onebit::sensing
