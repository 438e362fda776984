//! Seeded, portable random number generation.
//!
//! The generator is splitmix64: a 64-bit counter advanced by the golden-ratio
//! increment `0x9E3779B97F4A7C15`, finalized by two xor-multiply rounds with
//! the constants `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`. Normal
//! deviates come from the Box-Muller transform. Both pieces are fixed by
//! these constants, so a given seed reproduces the same stream on every
//! platform (bit-for-bit for the integer stream; floating-point deviates
//! depend only on the platform's `ln`/`cos`/`sin`).

const GOLDEN: u64 = 0x9E3779B97F4A7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Deterministic random source. Identical seeds yield identical streams;
/// copies diverge independently from the moment they are made.
#[derive(Debug, Clone, PartialEq)]
pub struct SeededRng {
    seed: u64,
    state: u64,
    cached_normal: Option<f64>,
}

impl SeededRng {
    /// Name of the fixed algorithm, recorded in reports.
    pub const ALGORITHM: &'static str = "splitmix64+box-muller";

    pub fn new(seed: u64) -> Self {
        SeededRng {
            seed,
            state: seed,
            cached_normal: None,
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream for substream `index`, derived as
    /// `mix(seed ^ mix(index + GOLDEN))`. Used to run per-instance work in
    /// any order while keeping results deterministic.
    pub fn derive(&self, index: u64) -> SeededRng {
        SeededRng::new(mix(self.seed ^ mix(index.wrapping_add(GOLDEN))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform on `[0, 1)`, 53 significant bits.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `(0, 1]`; never zero, safe under `ln`.
    pub fn uniform_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int_range(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        lo + (self.next_u64() % (hi - lo + 1) as u64) as usize
    }

    /// Log-uniform on `[lo, hi]`, `0 < lo <= hi`.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        debug_assert!(lo > 0.0 && lo <= hi);
        (self.range(lo.ln(), hi.ln())).exp()
    }

    /// Standard normal deviate via Box-Muller; deviates are consumed in
    /// generated order, one transform feeding two draws.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.cached_normal.take() {
            return z;
        }
        let radius = (-2.0 * self.uniform_open().ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * self.uniform();
        self.cached_normal = Some(radius * angle.sin());
        radius * angle.cos()
    }
}
