#include "onebit/sensing/ensemble.hpp"

#include <istream>
#include <json.hpp>
#include <ostream>
#include <string>

#include "onebit/errors.hpp"
#include "onebit/sensing/samplers.hpp"

namespace onebit::sensing {
namespace {

std::shared_ptr<const DenseRows> gaussian_rows(std::size_t n, std::size_t m, std::uint64_t seed,
                                               Purpose purpose) {
  std::vector<Complex> entries;
  entries.reserve(n * m);
  for (std::size_t i = 0; i < m; ++i) {
    Stream stream(seed, purpose, i);
    const ComplexVec row = sample_complex_gaussian(n, stream);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return std::make_shared<const DenseRows>(m, n, std::move(entries));
}

void require_shape(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw ConfigError("ensemble: n and m must be >= 1");
}

}  // namespace

OperatorPtr PairedArms::stacked() const {
  return std::make_shared<const StackedOperator>(std::vector<OperatorPtr>{first, second});
}

void PairedArms::validate() const {
  if (!first || !second) throw DimensionError("PairedArms: missing arm");
  if (first->rows() != second->rows() || first->cols() != second->cols()) {
    throw DimensionError("PairedArms: arms must have identical shapes");
  }
}

PairedEnsemble::PairedEnsemble(std::size_t n, std::size_t m, std::uint64_t seed,
                               std::shared_ptr<const DenseRows> rows1,
                               std::shared_ptr<const DenseRows> rows2)
    : n_(n), m_(m), seed_(seed), rows1_(std::move(rows1)), rows2_(std::move(rows2)) {
  if (!rows1_ || !rows2_ || rows1_->rows() != m || rows2_->rows() != m || rows1_->cols() != n ||
      rows2_->cols() != n) {
    throw DimensionError("PairedEnsemble: row shapes do not match (n, m)");
  }
}

PairedEnsemble PairedEnsemble::block(std::size_t begin, std::size_t count) const {
  return {n_, count, seed_, std::make_shared<const DenseRows>(rows1_->block(begin, count)),
          std::make_shared<const DenseRows>(rows2_->block(begin, count))};
}

PlainEnsemble::PlainEnsemble(std::size_t n, std::size_t m, std::uint64_t seed,
                             std::shared_ptr<const DenseRows> rows)
    : n_(n), m_(m), seed_(seed), rows_(std::move(rows)) {
  if (!rows_ || rows_->rows() != m || rows_->cols() != n) {
    throw DimensionError("PlainEnsemble: row shape does not match (n, m)");
  }
}

PlainEnsemble PlainEnsemble::block(std::size_t begin, std::size_t count) const {
  return {n_, count, seed_, std::make_shared<const DenseRows>(rows_->block(begin, count))};
}

PairedEnsemble build_paired_ensemble(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_shape(n, m);
  return {n, m, seed, gaussian_rows(n, m, seed, Purpose::kRows1),
          gaussian_rows(n, m, seed, Purpose::kRows2)};
}

PlainEnsemble build_plain_ensemble(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_shape(n, m);
  return {n, m, seed, gaussian_rows(n, m, seed, Purpose::kRows)};
}

void write_ensemble_header(std::ostream& os, const EnsembleHeader& header) {
  const nlohmann::ordered_json j = {{"format", "onebit-ensemble"}, {"version", 1},
                                    {"kind", header.kind},         {"n", header.n},
                                    {"m", header.m},               {"seed", header.seed}};
  os << j.dump() << '\n';
}

EnsembleHeader read_ensemble_header(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("ensemble header: ") + e.what());
  }
  if (j.value("format", "") != "onebit-ensemble" || j.value("version", 0) != 1) {
    throw ConfigError("ensemble header: unknown format or version");
  }
  EnsembleHeader h;
  h.kind = j.at("kind").get<std::string>();
  h.n = j.at("n").get<std::size_t>();
  h.m = j.at("m").get<std::size_t>();
  h.seed = j.at("seed").get<std::uint64_t>();
  if (h.kind != "paired" && h.kind != "plain") throw ConfigError("ensemble header: bad kind");
  return h;
}

EnsembleHeader header_of(const PairedEnsemble& e) { return {"paired", e.n(), e.m(), e.seed()}; }
EnsembleHeader header_of(const PlainEnsemble& e) { return {"plain", e.n(), e.m(), e.seed()}; }

PairedEnsemble regenerate_paired(const EnsembleHeader& h) {
  if (h.kind != "paired") throw ConfigError("regenerate_paired: header is not paired");
  return build_paired_ensemble(h.n, h.m, h.seed);
}

PlainEnsemble regenerate_plain(const EnsembleHeader& h) {
  if (h.kind != "plain") throw ConfigError("regenerate_plain: header is not plain");
  return build_plain_ensemble(h.n, h.m, h.seed);
}

}  // namespace onebit::sensing
