#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace campaign {

/// Piece-wise aggregate of a series. `segment_width` is the number of source
/// points per segment, so L=35 with width 5 gives 7 values.
struct CoarseSeries {
  std::vector<double> values;
  std::size_t source_length = 0;
  std::size_t segment_width = 0;

  std::size_t segment_count() const { return values.size(); }
};

/// Segment means with width p; a trailing partial segment holds the remainder.
CoarseSeries paa(std::span<const double> series, std::size_t segment_width);

/// Exactly `segments` means, segment i spanning [floor(iL/w), floor((i+1)L/w)).
std::vector<double> paa_segments(std::span<const double> series, std::size_t segments);

/// Standard normal cumulative distribution and its inverse.
double normal_cdf(double x);
double normal_quantile(double p);

/// Cut points splitting N(0,1) into `alphabet_size` equiprobable intervals.
std::vector<double> gaussian_breakpoints(int alphabet_size);

struct SaxWord {
  std::vector<std::uint8_t> letters;
  int alphabet_size = 0;

  /// Base-alphabet integer packing, letters[0] most significant.
  std::uint32_t code() const;
  bool operator==(const SaxWord&) const = default;
};

/// z-normalize (zero variance -> zeros), reduce to `word_length` segments,
/// map each mean to the index of its breakpoint interval.
SaxWord sax_word(std::span<const double> series, std::size_t word_length, int alphabet_size);

}  // namespace campaign
