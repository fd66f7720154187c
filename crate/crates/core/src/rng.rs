//! Seeded, portable random streams.
//!
//! Every draw comes from ChaCha8 seeded with the caller's `u64` seed. Large
//! requests are cut into fixed chunks of [`CHUNK`] draws; chunk `k` reads
//! from stream `k` of the seeded generator. The output therefore depends
//! only on `(seed, n)` and not on how many threads process the chunks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const CHUNK: usize = 1 << 16;

pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `(stream index, length)` of each chunk covering `n` draws.
pub fn chunk_sizes(n: usize) -> Vec<(u64, usize)> {
    (0..n.div_ceil(CHUNK))
        .map(|k| (k as u64, CHUNK.min(n - k * CHUNK)))
        .collect()
}

/// Runs `f(stream, len)` on every chunk of an `n`-draw request, possibly in
/// parallel, and returns the per-chunk results in chunk order.
pub fn map_chunks<T, F>(n: usize, seed: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, usize) -> T + Sync,
{
    chunk_sizes(n)
        .into_par_iter()
        .map(|(index, len)| f(&mut substream(seed, index), len))
        .collect()
}
