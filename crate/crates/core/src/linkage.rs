//! Length vectors and the Betti numbers of their polygon spaces.
//!
//! A subset `J` of bars is *short* when `Σ_{i∈J} l_i < Σ_{i∉J} l_i`, *median* on
//! equality and *long* otherwise. Fix a longest bar `i`. With `a_p` the number
//! of short subsets of size `p + 1` containing `i` and `ã_p` the number of
//! median ones,
//!
//! ```text
//! b_p(M_ℓ) = a_p + ã_p + a_{n-3-p},   p = 0, …, n - 3.
//! ```
//!
//! When `n = 2p + 3` the two `a` terms coincide and are counted twice.
//!
//! All comparisons are exact: lengths are rescaled to a common denominator and
//! compared as integers (`i128` when the total fits, `BigInt` otherwise).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{binomial, for_each_combination};
use crate::par::map_reduce;
use crate::{BigRational, Error, Result};

/// Largest `n` for which [`betti_profile`] enumerates all `2^(n-1)` subsets.
pub const MAX_PROFILE_N: usize = 31;
/// Largest `n` accepted by [`is_generic`] (meet-in-the-middle over `2^(n/2)` sums).
pub const MAX_GENERIC_N: usize = 44;

/// Positive bar lengths `ℓ = (l_1, …, l_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthVector {
    lengths: Vec<BigRational>,
}

impl LengthVector {
    /// Validates that the vector is nonempty with every length positive.
    pub fn new(lengths: Vec<BigRational>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::EmptyLengths);
        }
        if let Some(pos) = lengths.iter().position(|l| !l.is_positive()) {
            return Err(Error::NonPositiveLength { index: pos + 1 });
        }
        Ok(LengthVector { lengths })
    }

    /// Convenience constructor from integer lengths.
    pub fn from_integers(lengths: &[i64]) -> Result<Self> {
        Self::new(
            lengths
                .iter()
                .map(|&l| BigRational::from_integer(l.into()))
                .collect(),
        )
    }

    /// Number of bars.
    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    /// The lengths, in bar order.
    pub fn lengths(&self) -> &[BigRational] {
        &self.lengths
    }

    fn weights(&self) -> Weights {
        let lcm = self
            .lengths
            .iter()
            .fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
        let ints: Vec<BigInt> = self
            .lengths
            .iter()
            .map(|l| l.numer() * (&lcm / l.denom()))
            .collect();
        let total: BigInt = ints.iter().sum();
        // doubled subset sums are compared against the total, so 2·total must fit
        let limit = BigInt::from(i128::MAX / 4);
        if total <= limit {
            let small = ints.iter().map(|w| w.to_i128().unwrap_or(0) * 2).collect();
            Weights::Small(small, total.to_i128().unwrap_or(0))
        } else {
            let doubled = ints.iter().map(|w| w * 2).collect();
            Weights::Big(doubled, total)
        }
    }
}

/// Doubled integer weights `2·w_i` and the total `Σ w_i`: `J` is short iff
/// `Σ_{i∈J} 2w_i < Σ w_i`.
enum Weights {
    Small(Vec<i128>, i128),
    Big(Vec<BigInt>, BigInt),
}

trait Weight:
    Clone + Ord + Zero + Send + Sync + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
}
impl Weight for i128 {}
impl Weight for BigInt {}

/// Betti numbers of one polygon space together with the subset counts behind them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    values: Vec<u64>,
    short: Vec<u64>,
    median: Vec<u64>,
}

impl BettiProfile {
    /// `b_0, …, b_{n-3}`.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `a_0, …, a_{n-3}`.
    pub fn short_counts(&self) -> &[u64] {
        &self.short
    }

    /// `ã_0, …, ã_{n-3}`.
    pub fn median_counts(&self) -> &[u64] {
        &self.median
    }

    /// `b_p`, or `None` when `p > n - 3`.
    pub fn betti(&self, p: usize) -> Option<u64> {
        self.values.get(p).copied()
    }

    /// Total Betti number `Σ b_p`.
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

/// True iff no signed sum `Σ ±l_i` vanishes, i.e. no subset is median.
pub fn is_generic(ell: &LengthVector) -> Result<bool> {
    if ell.n() > MAX_GENERIC_N {
        return Err(Error::TooLarge {
            n: ell.n(),
            max: MAX_GENERIC_N,
        });
    }
    Ok(match ell.weights() {
        Weights::Small(w, t) => !has_median(&w, &t),
        Weights::Big(w, t) => !has_median(&w, &t),
    })
}

// A median J and its complement are both median, so only subsets containing
// bar 0 need checking.
fn has_median<T: Weight>(w2: &[T], total: &T) -> bool {
    let rest = &w2[1..];
    let (left, right) = rest.split_at(rest.len() / 2);
    let mut left_sums = subset_sums(left);
    for s in &mut left_sums {
        *s += &w2[0];
    }
    left_sums.sort_unstable();
    subset_sums(right).into_iter().any(|r| {
        let mut need = total.clone();
        need -= &r;
        left_sums.binary_search(&need).is_ok()
    })
}

fn subset_sums<T: Weight>(w: &[T]) -> Vec<T> {
    let mut sums = vec![T::zero()];
    for x in w {
        let len = sums.len();
        for i in 0..len {
            let mut s = sums[i].clone();
            s += x;
            sums.push(s);
        }
    }
    sums
}

/// 1-based label of the first longest bar.
pub fn max_length_index(ell: &LengthVector) -> usize {
    let mut best = 0;
    for (i, l) in ell.lengths.iter().enumerate() {
        if *l > ell.lengths[best] {
            best = i;
        }
    }
    best + 1
}

fn check_class_args(ell: &LengthVector, cardinality: usize, anchor: usize) -> Result<()> {
    let n = ell.n();
    if cardinality > n {
        return Err(Error::CardinalityOutOfRange { cardinality, n });
    }
    if anchor == 0 || anchor > n {
        return Err(Error::IndexOutOfRange { index: anchor, n });
    }
    Ok(())
}

/// Number of short subsets `J` with `|J| = cardinality` and `anchor ∈ J`.
pub fn count_short(ell: &LengthVector, cardinality: usize, anchor: usize) -> Result<u64> {
    check_class_args(ell, cardinality, anchor)?;
    Ok(class_counts(ell, cardinality, anchor - 1).0)
}

/// Number of median subsets `J` with `|J| = cardinality` and `anchor ∈ J`.
pub fn count_median(ell: &LengthVector, cardinality: usize, anchor: usize) -> Result<u64> {
    check_class_args(ell, cardinality, anchor)?;
    Ok(class_counts(ell, cardinality, anchor - 1).1)
}

/// (short, median) counts for one cardinality class; `anchor` is 0-based.
fn class_counts(ell: &LengthVector, cardinality: usize, anchor: usize) -> (u64, u64) {
    match ell.weights() {
        Weights::Small(w, t) => class_counts_in(&w, &t, cardinality, anchor),
        Weights::Big(w, t) => class_counts_in(&w, &t, cardinality, anchor),
    }
}

fn class_counts_in<T: Weight>(
    w2: &[T],
    total: &T,
    cardinality: usize,
    anchor: usize,
) -> (u64, u64) {
    if cardinality == 0 {
        return (0, 0);
    }
    let n = w2.len();
    let others: Vec<usize> = (0..n).filter(|&i| i != anchor).collect();
    let inside = cardinality - 1;
    let outside = n - cardinality;
    let (mut short, mut median) = (0u64, 0u64);
    // enumerate whichever side of the partition is smaller
    if inside <= outside {
        for_each_combination(others.len(), inside, |idx| {
            let mut s = w2[anchor].clone();
            for &k in idx {
                s += &w2[others[k]];
            }
            match s.cmp(total) {
                Ordering::Less => short += 1,
                Ordering::Equal => median += 1,
                Ordering::Greater => {}
            }
        });
    } else {
        for_each_combination(others.len(), outside, |idx| {
            let mut s = T::zero();
            for &k in idx {
                s += &w2[others[k]];
            }
            match s.cmp(total) {
                Ordering::Greater => short += 1,
                Ordering::Equal => median += 1,
                Ordering::Less => {}
            }
        });
    }
    (short, median)
}

fn check_degree(n: usize, p: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFew { n, min: 3 });
    }
    if p > n - 3 {
        return Err(Error::DegreeOutOfRange { p, max: n - 3 });
    }
    Ok(())
}

/// `b_p(M_ℓ)`, anchored at the first longest bar.
pub fn betti(ell: &LengthVector, p: usize) -> Result<u64> {
    betti_with_anchor(ell, p, max_length_index(ell))
}

/// `b_p(M_ℓ)` computed with an explicit anchor bar. The anchor must be a
/// longest bar; any longest bar gives the same answer.
pub fn betti_with_anchor(ell: &LengthVector, p: usize, anchor: usize) -> Result<u64> {
    let n = ell.n();
    check_degree(n, p)?;
    if anchor == 0 || anchor > n {
        return Err(Error::IndexOutOfRange { index: anchor, n });
    }
    let (short, median) = class_counts(ell, p + 1, anchor - 1);
    let (dual, _) = class_counts(ell, n - 2 - p, anchor - 1);
    Ok(short + median + dual)
}

/// All Betti numbers `b_0, …, b_{n-3}` from one pass over the subsets that
/// contain the anchor bar.
pub fn betti_profile(ell: &LengthVector) -> Result<BettiProfile> {
    let n = ell.n();
    check_degree(n, 0)?;
    if n > MAX_PROFILE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_PROFILE_N,
        });
    }
    let anchor = max_length_index(ell) - 1;
    let (short, median) = match ell.weights() {
        Weights::Small(w, t) => bucket_all(&w, &t, anchor),
        Weights::Big(w, t) => bucket_all(&w, &t, anchor),
    };
    // short[c] / median[c] are indexed by cardinality c = p + 1
    let a: Vec<u64> = (0..=n - 3).map(|p| short[p + 1]).collect();
    let med: Vec<u64> = (0..=n - 3).map(|p| median[p + 1]).collect();
    let values = (0..=n - 3).map(|p| a[p] + med[p] + a[n - 3 - p]).collect();
    Ok(BettiProfile {
        values,
        short: a,
        median: med,
    })
}

const PREFIX_BITS: usize = 6;

/// Short and median counts per cardinality over every subset containing `anchor`.
/// The non-anchor bars are split into high "prefix" bits (one chunk each) and
/// low bits walked in Gray-code order.
fn bucket_all<T: Weight>(w2: &[T], total: &T, anchor: usize) -> (Vec<u64>, Vec<u64>) {
    let n = w2.len();
    let others: Vec<&T> = (0..n).filter(|&i| i != anchor).map(|i| &w2[i]).collect();
    let m = others.len();
    let high = PREFIX_BITS.min(m);
    let low = m - high;
    let chunk = |prefix: usize| {
        let mut short = vec![0u64; n + 1];
        let mut median = vec![0u64; n + 1];
        let mut s = w2[anchor].clone();
        let mut card = 1 + prefix.count_ones() as usize;
        for b in 0..high {
            if prefix >> b & 1 == 1 {
                s += others[low + b];
            }
        }
        let mut record = |s: &T, card: usize| match s.cmp(total) {
            Ordering::Less => short[card] += 1,
            Ordering::Equal => median[card] += 1,
            Ordering::Greater => {}
        };
        record(&s, card);
        for i in 1u64..(1u64 << low) {
            let bit = i.trailing_zeros() as usize;
            let gray = i ^ (i >> 1);
            if gray >> bit & 1 == 1 {
                s += others[bit];
                card += 1;
            } else {
                s -= others[bit];
                card -= 1;
            }
            record(&s, card);
        }
        (short, median)
    };
    map_reduce(
        1usize << high,
        chunk,
        || (Vec::new(), Vec::new()),
        |a, b| {
            if a.0.is_empty() {
                return b;
            }
            if b.0.is_empty() {
                return a;
            }
            let add = |x: Vec<u64>, y: Vec<u64>| x.iter().zip(&y).map(|(u, v)| u + v).collect();
            (add(a.0, b.0), add(a.1, b.1))
        },
    )
}

/// `C(n - 1, p)`, the Betti number `b_p` of the equilateral polygon space,
/// valid for `2p < n - 3`.
pub fn equilateral_reference(n: usize, p: usize) -> Result<u64> {
    if 2 * p + 3 >= n {
        return Err(Error::OutsideClosedForm { n, p });
    }
    binomial(n as u64 - 1, p as u64).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lv(xs: &[i64]) -> LengthVector {
        LengthVector::from_integers(xs).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Direct oracle: walk every subset of {0..n} as a bitmask and classify it.
    fn brute_counts(ell: &LengthVector, cardinality: usize, anchor0: usize) -> (u64, u64) {
        let n = ell.n();
        let total: BigRational = ell.lengths().iter().sum();
        let (mut short, mut median) = (0, 0);
        for mask in 0u32..(1 << n) {
            if mask >> anchor0 & 1 == 0 || mask.count_ones() as usize != cardinality {
                continue;
            }
            let s: BigRational = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ell.lengths()[i].clone())
                .sum();
            let twice = &s + &s;
            if twice < total {
                short += 1;
            } else if twice == total {
                median += 1;
            }
        }
        (short, median)
    }

    fn brute_betti(ell: &LengthVector, p: usize) -> u64 {
        let n = ell.n();
        let a = max_length_index(ell) - 1;
        let (s, m) = brute_counts(ell, p + 1, a);
        s + m + brute_counts(ell, n - 2 - p, a).0
    }

    #[test]
    fn genericity_examples() {
        assert!(is_generic(&lv(&[1, 1, 1])).unwrap());
        assert!(!is_generic(&lv(&[1, 1, 2])).unwrap());
        assert!(!is_generic(&lv(&[1, 2, 3, 4])).unwrap());
        assert!(is_generic(&lv(&[1, 1, 1, 1, 1])).unwrap());
        assert!(!is_generic(&lv(&[3, 1, 1, 1])).unwrap());
        let tiny = LengthVector::new(vec![q(1, 3), q(1, 6), q(1, 6)]).unwrap();
        assert!(!is_generic(&tiny).unwrap());
    }

    #[test]
    fn rejects_bad_lengths() {
        assert_eq!(LengthVector::new(vec![]), Err(Error::EmptyLengths));
        assert_eq!(
            LengthVector::from_integers(&[1, 0, 2]),
            Err(Error::NonPositiveLength { index: 2 })
        );
        assert_eq!(
            LengthVector::from_integers(&[1, -3]),
            Err(Error::NonPositiveLength { index: 2 })
        );
    }

    #[test]
    fn max_index_takes_first_maximum() {
        assert_eq!(max_length_index(&lv(&[1, 3, 3])), 2);
        assert_eq!(max_length_index(&lv(&[5, 1, 1])), 1);
        assert_eq!(max_length_index(&lv(&[2, 2, 2, 2])), 1);
    }

    #[test]
    fn short_and_median_examples() {
        assert_eq!(count_short(&lv(&[1, 1, 1]), 1, 1), Ok(1));
        assert_eq!(count_short(&lv(&[3, 1, 1, 1]), 1, 1), Ok(0));
        assert_eq!(count_short(&lv(&[1, 1, 1, 1, 1]), 2, 1), Ok(4));
        assert_eq!(count_median(&lv(&[3, 1, 1, 1]), 1, 1), Ok(1));
        assert_eq!(count_median(&lv(&[1, 1, 1]), 1, 1), Ok(0));
        assert_eq!(count_median(&lv(&[1, 1, 1, 1]), 2, 1), Ok(3));
        assert_eq!(count_short(&lv(&[1, 1, 1]), 0, 1), Ok(0));
        assert!(count_short(&lv(&[1, 1, 1]), 4, 1).is_err());
        assert!(count_short(&lv(&[1, 1, 1]), 1, 4).is_err());
        assert!(count_median(&lv(&[1, 1, 1]), 1, 0).is_err());
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(&lv(&[1; 9]), 1), Ok(8));
        let eps = q(1, 100);
        let mut v = vec![q(1, 1), q(1, 1), q(1, 1)];
        v.extend(core::iter::repeat_n(eps, 5));
        assert_eq!(betti(&LengthVector::new(v).unwrap(), 1), Ok(10));
        assert_eq!(betti(&lv(&[3, 1, 1, 1]), 0), Ok(1));
        assert_eq!(betti(&lv(&[1, 1, 1]), 0), Ok(2));
    }

    #[test]
    fn betti_domain_errors() {
        assert_eq!(
            betti(&lv(&[1, 1, 1]), 1),
            Err(Error::DegreeOutOfRange { p: 1, max: 0 })
        );
        assert_eq!(betti(&lv(&[1, 1]), 0), Err(Error::TooFew { n: 2, min: 3 }));
        assert_eq!(
            betti_profile(&lv(&[1, 1])),
            Err(Error::TooFew { n: 2, min: 3 })
        );
    }

    #[test]
    fn profile_examples() {
        // n = 2p + 3 = 5: b_1 = 2·a_1 + ã_1 = 8 by the literal formula
        let five = betti_profile(&lv(&[1; 5])).unwrap();
        assert_eq!(five.short_counts(), &[1, 4, 0]);
        assert_eq!(five.median_counts(), &[0, 0, 0]);
        assert_eq!(five.values(), &[1, 8, 1]);
        for p in 0..3 {
            assert_eq!(Some(brute_betti(&lv(&[1; 5]), p)), five.betti(p));
        }
        let nine = betti_profile(&lv(&[1; 9])).unwrap();
        assert_eq!(&nine.values()[..3], &[1, 8, 28]);
        let empty = betti_profile(&lv(&[10, 1, 1, 1])).unwrap();
        assert_eq!(empty.values(), &[0, 0]);
        assert_eq!(empty.total(), 0);
    }

    #[test]
    fn profile_matches_bruteforce_on_mixed_vectors() {
        let cases: &[&[i64]] = &[
            &[1, 2, 3, 4],
            &[5, 4, 3, 3, 2, 1],
            &[7, 1, 1, 1, 1, 1, 1, 2],
            &[2, 2, 2, 2, 2, 2, 2, 2, 1, 1],
            &[9, 8, 7, 6, 5, 4, 3, 2, 1],
            &[3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1],
        ];
        for &xs in cases {
            let ell = lv(xs);
            let prof = betti_profile(&ell).unwrap();
            for p in 0..=ell.n() - 3 {
                assert_eq!(prof.betti(p), Some(brute_betti(&ell, p)), "{xs:?} p={p}");
                assert_eq!(betti(&ell, p), Ok(brute_betti(&ell, p)), "{xs:?} p={p}");
            }
        }
    }

    #[test]
    fn big_weights_take_the_bigint_path() {
        let huge = BigInt::from(10u8).pow(40);
        let ell = LengthVector::new(vec![
            BigRational::from_integer(huge.clone()),
            BigRational::from_integer(huge.clone()),
            BigRational::from_integer(huge.clone()),
            BigRational::from_integer(huge),
        ])
        .unwrap();
        assert!(matches!(ell.weights(), Weights::Big(..)));
        assert!(!is_generic(&ell).unwrap());
        let small = lv(&[1, 1, 1, 1]);
        assert_eq!(betti_profile(&ell), betti_profile(&small));
        assert_eq!(
            betti_profile(&ell).unwrap().values(),
            &[brute_betti(&small, 0), brute_betti(&small, 1)]
        );
        assert_eq!(count_median(&ell, 2, 1), Ok(3));
    }

    #[test]
    fn equilateral_reference_values() {
        assert_eq!(equilateral_reference(9, 0), Ok(1));
        assert_eq!(equilateral_reference(9, 2), Ok(28));
        assert_eq!(equilateral_reference(100, 3), Ok(156_849));
        assert_eq!(
            equilateral_reference(9, 3),
            Err(Error::OutsideClosedForm { n: 9, p: 3 })
        );
    }

    #[test]
    fn genericity_matches_median_enumeration() {
        let cases: &[&[i64]] = &[
            &[1, 2, 3, 5, 8, 13],
            &[2, 3, 4, 5, 6, 9],
            &[1, 1, 1, 1],
            &[4, 4, 4, 5, 7],
        ];
        for &xs in cases {
            let ell = lv(xs);
            let any_median = (1..=ell.n()).any(|c| brute_counts(&ell, c, 0).1 > 0);
            assert_eq!(is_generic(&ell).unwrap(), !any_median, "{xs:?}");
        }
    }
}
