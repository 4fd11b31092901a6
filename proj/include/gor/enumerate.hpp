#pragma once

#include <optional>
#include <vector>

#include "gor/seqcomb.hpp"

namespace gor {

// Streams every SI-sequence with h_1 = codim and socle degree e, in
// lexicographic order on (h_2, h_3, ...). Entries are bounded by iterated
// Macaulay growth of the first difference, so the stream is finite.
class SiEnumerator {
 public:
  SiEnumerator(int codim, int socle_degree);

  std::optional<HVector> next();

 private:
  std::int64_t bound_at(int j) const;
  HVector current() const;
  void advance();

  int codim_;
  int e_;
  int half_;
  std::vector<std::int64_t> delta_;  // delta_[j] for 0 <= j <= half_
  bool done_ = false;
};

std::vector<HVector> enumerate_si(int codim, int socle_degree);

// Cardinality of the stream, computed by dynamic programming over the
// first difference without materializing vectors.
BigInt count_si(int codim, int socle_degree);

// Codimension-4 SI-sequences with h_4 <= 33 are exactly the Gorenstein
// h-vectors in that range; h_4 in {34, 35} is left open.
enum class Codim4Status { kCharacterized, kUndetermined };

Codim4Status classify_codim4(const HVector& h);
const char* to_string(Codim4Status s);

struct LabeledHVector {
  HVector h;
  Codim4Status status;
};

class GorensteinCodim4Enumerator {
 public:
  GorensteinCodim4Enumerator(int socle_degree, bool quartic_filter);
  std::optional<LabeledHVector> next();

 private:
  SiEnumerator inner_;
  bool filter_;
};

std::vector<HVector> enumerate_gorenstein_codim4(int socle_degree, bool quartic_filter);

}  // namespace gor
