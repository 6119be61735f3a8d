//! Reproducible `G(n,p)` sampling and exact graph log-probabilities.
//!
//! Each trial draws from its own ChaCha8 stream: the key comes from the
//! master seed and the 64-bit stream word from [`derive_stream`]. For a fixed
//! seed the stream word is a bijection of the trial index, so distinct
//! trials never share a stream and results do not depend on how trials are
//! split across workers.
//!
//! Edge slots are the pairs `(u, v)`, `u < v`, in row-major order:
//! `(0,1), (0,2), …, (0,n−1), (1,2), …`.

use libm::{floor, log, log1p};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::{Graph, GraphBuilder};

/// Edge probabilities at or below this use geometric skip sampling.
pub const SKIP_THRESHOLD: f64 = 0.1;

/// Errors from the sampler.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum SamplerError {
    /// `p` outside `[0, 1]` or NaN.
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
}

/// Identifies the random stream of one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedLineage {
    /// Experiment-wide seed.
    pub master_seed: u64,
    /// Trial number.
    pub trial_index: u64,
    /// ChaCha stream word derived from both.
    pub stream_id: u64,
}

impl SeedLineage {
    /// A fresh generator positioned at the start of this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(self.stream_id);
        rng
    }
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finaliser; a bijection on `u64`.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Lineage of trial `trial_index` under `master_seed`.
///
/// `stream_id = mix64(trial_index + golden · (master_seed + 1))`, which is
/// injective in `trial_index` for every seed.
pub fn derive_stream(master_seed: u64, trial_index: u64) -> SeedLineage {
    let offset = GOLDEN_GAMMA.wrapping_mul(master_seed.wrapping_add(1));
    SeedLineage {
        master_seed,
        trial_index,
        stream_id: mix64(trial_index.wrapping_add(offset)),
    }
}

/// Uniform draw from `[0, 1)` with 53 random bits.
#[inline]
fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Which algorithm fills the edge slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplingPath {
    /// Dense for `p > SKIP_THRESHOLD`, skip otherwise.
    Auto,
    /// One Bernoulli draw per slot.
    Dense,
    /// Geometric jumps between present edges.
    Skip,
}

fn check_p(p: f64) -> Result<(), SamplerError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(SamplerError::Probability(p))
    }
}

/// Samples `G(n,p)` for the given lineage.
pub fn sample_gnp(n: usize, p: f64, lineage: SeedLineage) -> Result<Graph, SamplerError> {
    sample_gnp_with(n, p, lineage, SamplingPath::Auto)
}

/// Samples `G(n,p)` along an explicit path. Both paths have the same
/// distribution but give different graphs for the same lineage.
pub fn sample_gnp_with(
    n: usize,
    p: f64,
    lineage: SeedLineage,
    path: SamplingPath,
) -> Result<Graph, SamplerError> {
    check_p(p)?;
    let mut rng = lineage.rng();
    let dense = match path {
        SamplingPath::Auto => p > SKIP_THRESHOLD,
        SamplingPath::Dense => true,
        SamplingPath::Skip => false,
    };
    let mut b = GraphBuilder::new(n);
    if p == 0.0 {
        return Ok(b.build());
    }
    if dense || p == 1.0 {
        for u in 0..n {
            for v in u + 1..n {
                if unit_f64(&mut rng) < p {
                    b.add_edge(u, v);
                }
            }
        }
    } else {
        fill_by_skipping(&mut b, n, p, &mut rng);
    }
    Ok(b.build())
}

/// Geometric skip sampling over the linearised slots: the gap to the next
/// present edge is `⌊ln U / ln(1−p)⌋` for `U` uniform on `(0, 1]`.
fn fill_by_skipping(b: &mut GraphBuilder, n: usize, p: f64, rng: &mut impl RngCore) {
    let ln_q = log1p(-p);
    // current slot is (u, v); `v` may run past the row end and is carried over
    let mut u = 0usize;
    let mut v = 0usize;
    loop {
        let r = 1.0 - unit_f64(rng);
        let gap = floor(log(r) / ln_q);
        if gap >= (n * n) as f64 {
            return;
        }
        v += gap as usize + 1;
        while u < n && v >= n {
            u += 1;
            v = v - n + u + 1;
        }
        if u + 1 >= n {
            return;
        }
        b.add_edge(u, v);
    }
}

/// `ln Pr(Γ)` under `G(n,p)`: `m ln p + (C(n,2) − m) ln(1 − p)`.
///
/// At `p ∈ {0, 1}` this is `0` for the forced graph and `−∞` otherwise.
pub fn graph_probability(g: &Graph, p: f64) -> Result<f64, SamplerError> {
    check_p(p)?;
    let slots = g.n() * g.n().saturating_sub(1) / 2;
    let present = g.m();
    let absent = slots - present;
    let ln_present = match (present, p) {
        (0, _) => 0.0,
        (_, 0.0) => f64::NEG_INFINITY,
        _ => present as f64 * log(p),
    };
    let ln_absent = match (absent, p) {
        (0, _) => 0.0,
        (_, 1.0) => f64::NEG_INFINITY,
        _ => absent as f64 * log1p(-p),
    };
    Ok(ln_present + ln_absent)
}
