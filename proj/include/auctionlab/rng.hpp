#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace auctionlab {

// A reproducible random stream: identical (seed, stream id) pairs give
// identical draws. Distinct stream ids give independent streams.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // Gamma(shape, 1).
  double gamma(double shape);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

// Samples are processed in fixed-size chunks; chunk c always uses stream id
// c, so results do not depend on how chunks are scheduled across threads.
inline constexpr std::size_t kDefaultChunkSize = 1 << 14;

struct ChunkRange {
  std::size_t index;  // also the RNG stream id
  std::size_t begin;
  std::size_t end;
};

// Runs `body` once per chunk of [0, total) on up to `threads` worker threads
// (0 = hardware concurrency). `body` must only touch chunk-local state or
// per-chunk output slots.
void for_each_chunk(std::size_t total, std::size_t chunk_size,
                    const std::function<void(const ChunkRange&)>& body,
                    unsigned threads = 0);

}  // namespace auctionlab
