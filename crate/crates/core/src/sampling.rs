//! Seeded Monte Carlo estimators used to cross-check the exact engines.
//!
//! A run of `samples` draws is split into a fixed number of streams; stream
//! `w` uses ChaCha8 seeded from `seed` with stream id `w`. Per-stream results
//! are integer counts, so the estimate depends only on
//! `(seed, samples, streams)` and not on how streams are scheduled.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Float, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::combinatorics::for_each_combination;
use crate::expectation::Measure;
use crate::par::map_reduce;
use crate::{BigRational, Error, Result};

/// Default number of random streams a run is split into.
pub const DEFAULT_STREAMS: usize = 16;

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    /// Sample mean.
    pub mean: f64,
    /// Standard error of the mean.
    pub std_error: f64,
    /// Number of draws.
    pub samples: u64,
}

impl McEstimate {
    /// `|mean - target|` in units of the standard error; infinite when the
    /// estimate has zero spread but misses the target.
    pub fn sigmas_from(&self, target: f64) -> f64 {
        let d = (self.mean - target).abs();
        if d == 0.0 {
            0.0
        } else {
            d / self.std_error
        }
    }
}

fn stream_rng(seed: u64, stream: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

fn stream_share(samples: u64, streams: usize, w: usize) -> u64 {
    let streams = streams as u64;
    let w = w as u64;
    samples / streams + u64::from(w < samples % streams)
}

/// Fraction of the simplex with vertex values `values` on which `φ < 0`,
/// estimated from uniform barycentric draws (normalized exponentials).
pub fn mc_volume_oracle(values: &[BigRational], samples: u64, seed: u64) -> Result<McEstimate> {
    mc_volume_oracle_with_streams(values, samples, seed, DEFAULT_STREAMS)
}

/// [`mc_volume_oracle`] with an explicit stream count.
pub fn mc_volume_oracle_with_streams(
    values: &[BigRational],
    samples: u64,
    seed: u64,
    streams: usize,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::ZeroSamples);
    }
    if values.is_empty() {
        return Err(Error::TooFew { n: 0, min: 1 });
    }
    let streams = streams.max(1);
    let q: Vec<f64> = values
        .iter()
        .map(|v| v.to_f64().unwrap_or(f64::NAN))
        .collect();
    let hits = map_reduce(
        streams,
        |w| {
            let mut rng = stream_rng(seed, w);
            let mut hits = 0u64;
            for _ in 0..stream_share(samples, streams, w) {
                // the normalizing sum is positive, so only the sign of Σ e_i q_i matters
                let phi: f64 = q.iter().map(|qi| rng.sample::<f64, _>(Exp1) * qi).sum();
                hits += u64::from(phi < 0.0);
            }
            hits
        },
        || 0,
        |a, b| a + b,
    );
    let mean = hits as f64 / samples as f64;
    Ok(McEstimate {
        mean,
        std_error: Float::sqrt(mean * (1.0 - mean) / samples as f64),
        samples,
    })
}

/// `b_p(M_ℓ)` for floating-point lengths.
///
/// Median subsets occur with probability zero under any continuous length
/// distribution, so this flavor does not count them: `b_p = a_p + a_{n-3-p}`.
pub fn betti_sampled(lengths: &[f64], p: usize) -> Result<u64> {
    let n = lengths.len();
    if n < 3 {
        return Err(Error::TooFew { n, min: 3 });
    }
    if p > n - 3 {
        return Err(Error::DegreeOutOfRange { p, max: n - 3 });
    }
    if let Some(pos) = lengths.iter().position(|l| !(*l > 0.0 && l.is_finite())) {
        return Err(Error::NonPositiveLength { index: pos + 1 });
    }
    let mut anchor = 0;
    for (i, l) in lengths.iter().enumerate() {
        if *l > lengths[anchor] {
            anchor = i;
        }
    }
    let mut others = Vec::with_capacity(n - 1);
    others.extend((0..n).filter(|&i| i != anchor).map(|i| lengths[i]));
    let total: f64 = lengths.iter().sum();
    Ok(short_sampled(&others, lengths[anchor], total, p + 1)
        + short_sampled(&others, lengths[anchor], total, n - 2 - p))
}

fn short_sampled(others: &[f64], anchor: f64, total: f64, cardinality: usize) -> u64 {
    let n = others.len() + 1;
    let inside = cardinality - 1;
    let outside = n - cardinality;
    let mut count = 0;
    if inside <= outside {
        for_each_combination(others.len(), inside, |idx| {
            let s = anchor + idx.iter().map(|&k| others[k]).sum::<f64>();
            count += u64::from(2.0 * s < total);
        });
    } else {
        for_each_combination(others.len(), outside, |idx| {
            let s: f64 = idx.iter().map(|&k| others[k]).sum();
            count += u64::from(2.0 * s > total);
        });
    }
    count
}

fn draw_lengths<R: Rng>(rng: &mut R, measure: Measure, out: &mut [f64]) {
    match measure {
        Measure::SimplexUniform => {
            let mut total = 0.0;
            for l in out.iter_mut() {
                *l = rng.sample(Exp1);
                total += *l;
            }
            for l in out.iter_mut() {
                *l /= total;
            }
        }
        Measure::CubeUniform => {
            for l in out.iter_mut() {
                // (0, 1]; a zero length has probability zero but would be rejected
                *l = 1.0 - rng.gen::<f64>();
            }
        }
    }
}

/// Monte Carlo estimate of `b_p(n, μ) = E_μ[b_p(M_ℓ)]`.
pub fn average_betti_mc(
    n: usize,
    p: usize,
    measure: Measure,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    average_betti_mc_with_streams(n, p, measure, samples, seed, DEFAULT_STREAMS)
}

/// [`average_betti_mc`] with an explicit stream count.
pub fn average_betti_mc_with_streams(
    n: usize,
    p: usize,
    measure: Measure,
    samples: u64,
    seed: u64,
    streams: usize,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::ZeroSamples);
    }
    if n < 3 {
        return Err(Error::TooFew { n, min: 3 });
    }
    if p > n - 3 {
        return Err(Error::DegreeOutOfRange { p, max: n - 3 });
    }
    let streams = streams.max(1);
    let (sum, sum_sq) = map_reduce(
        streams,
        |w| {
            let mut rng = stream_rng(seed, w);
            let mut lengths = vec![0.0; n];
            let (mut sum, mut sum_sq) = (0u128, 0u128);
            for _ in 0..stream_share(samples, streams, w) {
                draw_lengths(&mut rng, measure, &mut lengths);
                let b = u128::from(betti_sampled(&lengths, p).unwrap_or(0));
                sum += b;
                sum_sq += b * b;
            }
            (sum, sum_sq)
        },
        || (0, 0),
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    let count = u128::from(samples);
    let mean = sum as f64 / samples as f64;
    let std_error = if samples < 2 {
        0.0
    } else {
        // N·Σb² - (Σb)² is exact in integers
        let spread = (count * sum_sq - sum * sum) as f64;
        Float::sqrt(spread / (samples as f64 * (samples - 1) as f64) / samples as f64)
    };
    Ok(McEstimate {
        mean,
        std_error,
        samples,
    })
}
