#include "gor/enumerate.hpp"

#include <limits>

#include "gor/errors.hpp"

namespace gor {

namespace {

std::int64_t clamp_to_int64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max()))
    return std::numeric_limits<std::int64_t>::max();
  return v.convert_to<std::int64_t>();
}

// Largest admissible value of delta_j given delta_{j-1} = prev.
std::int64_t growth_cap(std::int64_t prev, int j) {
  if (prev <= 0) return 0;
  return clamp_to_int64(macaulay_bound(prev, j - 1));
}

void check_args(int codim, int e) {
  if (codim < 1) throw InvalidDegree("codimension must be >= 1");
  if (e < 1) throw InvalidDegree("socle degree must be >= 1");
}

}  // namespace

SiEnumerator::SiEnumerator(int codim, int socle_degree)
    : codim_(codim), e_(socle_degree), half_(socle_degree / 2) {
  check_args(codim, socle_degree);
  delta_.assign(static_cast<std::size_t>(half_) + 1, 0);
  delta_[0] = 1;
  if (half_ >= 1) delta_[1] = codim_ - 1;
  // Socle degree 1 forces h = (1, 1).
  if (e_ == 1 && codim_ != 1) done_ = true;
}

std::int64_t SiEnumerator::bound_at(int j) const {
  return growth_cap(delta_[static_cast<std::size_t>(j - 1)], j);
}

HVector SiEnumerator::current() const {
  std::vector<std::int64_t> h(static_cast<std::size_t>(e_) + 1, 0);
  std::int64_t running = 0;
  for (int i = 0; i <= half_; ++i) {
    running += delta_[static_cast<std::size_t>(i)];
    h[static_cast<std::size_t>(i)] = running;
    h[static_cast<std::size_t>(e_ - i)] = running;
  }
  return HVector(std::move(h));
}

void SiEnumerator::advance() {
  for (int j = half_; j >= 2; --j) {
    auto& d = delta_[static_cast<std::size_t>(j)];
    if (d < bound_at(j)) {
      ++d;
      for (int k = j + 1; k <= half_; ++k) delta_[static_cast<std::size_t>(k)] = 0;
      return;
    }
  }
  done_ = true;
}

std::optional<HVector> SiEnumerator::next() {
  if (done_) return std::nullopt;
  HVector out = current();
  advance();
  return out;
}

std::vector<HVector> enumerate_si(int codim, int socle_degree) {
  std::vector<HVector> out;
  SiEnumerator en(codim, socle_degree);
  while (auto h = en.next()) out.push_back(std::move(*h));
  return out;
}

BigInt count_si(int codim, int socle_degree) {
  check_args(codim, socle_degree);
  const int half = socle_degree / 2;
  if (socle_degree == 1) return codim == 1 ? 1 : 0;
  if (half < 2) return 1;

  // cap[j]: largest possible delta_j over all admissible prefixes.
  std::vector<std::int64_t> cap(static_cast<std::size_t>(half) + 1, 0);
  cap[1] = codim - 1;
  for (int j = 2; j <= half; ++j)
    cap[static_cast<std::size_t>(j)] = growth_cap(cap[static_cast<std::size_t>(j - 1)], j);

  // prefix[w] = number of completions of positions > j summed over delta_j in 0..w.
  auto cap_at = [&](int j) { return static_cast<std::size_t>(cap[static_cast<std::size_t>(j)]); };
  std::vector<BigInt> prefix(cap_at(half) + 1);
  for (std::size_t w = 0; w < prefix.size(); ++w) prefix[w] = BigInt(w + 1);
  for (int j = half - 1; j >= 1; --j) {
    std::vector<BigInt> next(cap_at(j) + 1);
    BigInt running = 0;
    for (std::size_t v = 0; v < next.size(); ++v) {
      const auto b = static_cast<std::size_t>(growth_cap(static_cast<std::int64_t>(v), j + 1));
      running += prefix[std::min(b, prefix.size() - 1)];
      next[v] = running;
    }
    prefix = std::move(next);
  }
  const auto d1 = static_cast<std::size_t>(codim - 1);
  return prefix[d1] - (d1 == 0 ? BigInt(0) : prefix[d1 - 1]);
}

Codim4Status classify_codim4(const HVector& h) {
  return h.socle_degree() < 4 || h.value(4) <= 33 ? Codim4Status::kCharacterized
                                                   : Codim4Status::kUndetermined;
}

const char* to_string(Codim4Status s) {
  return s == Codim4Status::kCharacterized ? "CHARACTERIZED" : "UNDETERMINED";
}

GorensteinCodim4Enumerator::GorensteinCodim4Enumerator(int socle_degree, bool quartic_filter)
    : inner_(4, socle_degree), filter_(quartic_filter) {}

std::optional<LabeledHVector> GorensteinCodim4Enumerator::next() {
  while (auto h = inner_.next()) {
    const auto status = classify_codim4(*h);
    if (filter_ && status != Codim4Status::kCharacterized) continue;
    return LabeledHVector{std::move(*h), status};
  }
  return std::nullopt;
}

std::vector<HVector> enumerate_gorenstein_codim4(int socle_degree, bool quartic_filter) {
  std::vector<HVector> out;
  GorensteinCodim4Enumerator en(socle_degree, quartic_filter);
  while (auto l = en.next()) out.push_back(std::move(l->h));
  return out;
}

}  // namespace gor
