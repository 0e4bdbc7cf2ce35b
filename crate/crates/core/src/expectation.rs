//! Exact expected Betti numbers of a random linkage.
//!
//! For a permutation-invariant measure that ignores hyperplanes,
//!
//! ```text
//! b_p(n, μ) = Σ_J r_J
//! ```
//!
//! over the subsets `J ∋ 1` with `|J| = p + 1` or `|J| = n - 2 - p`, where
//! `r_J` is the fraction of simplex A (uniform lengths on the unit simplex) or
//! simplex B (uniform lengths on the unit cube) on which `φ_J < 0`. When
//! `n = 2p + 3` the two classes coincide and each `J` is counted twice.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinatorics::{binomial, Combinations};
use crate::par::map_reduce;
use crate::slice::{functional_values, Flavor};
use crate::subset::IndexSubset;
use crate::{BigRational, Error, Result};

/// Distribution of the length vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Uniform on the unit simplex `{l_i ≥ 0, Σ l_i = 1}`.
    SimplexUniform,
    /// Uniform on the unit cube `[0, 1]^n`.
    CubeUniform,
}

impl Measure {
    /// Simplex whose cut ratios realize this measure.
    pub fn flavor(self) -> Flavor {
        match self {
            Measure::SimplexUniform => Flavor::SimplexA,
            Measure::CubeUniform => Flavor::SimplexB,
        }
    }

    /// Short name used in tables: `simplex` or `cube`.
    pub fn name(self) -> &'static str {
        match self {
            Measure::SimplexUniform => "simplex",
            Measure::CubeUniform => "cube",
        }
    }
}

/// The two subset classes that contribute to `b_p(n, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetClasses {
    n: usize,
    p: usize,
}

impl SubsetClasses {
    /// Subsets `J ∋ 1` with `|J| = p + 1`.
    pub fn first(&self) -> ClassIter {
        ClassIter::new(self.n, self.p + 1)
    }

    /// Subsets `J ∋ 1` with `|J| = n - 2 - p`.
    pub fn second(&self) -> ClassIter {
        ClassIter::new(self.n, self.n - 2 - self.p)
    }

    /// True when both classes are the same set of subsets (`n = 2p + 3`).
    pub fn coincide(&self) -> bool {
        self.p + 1 == self.n - 2 - self.p
    }
}

/// Subsets of `{1, …, n}` containing 1 with a fixed cardinality.
#[derive(Debug, Clone)]
pub struct ClassIter {
    n: usize,
    rest: Combinations,
}

impl ClassIter {
    fn new(n: usize, cardinality: usize) -> Self {
        ClassIter {
            n,
            rest: Combinations::new(n - 1, cardinality - 1),
        }
    }
}

impl Iterator for ClassIter {
    type Item = IndexSubset;

    fn next(&mut self) -> Option<IndexSubset> {
        let idx = self.rest.next()?;
        let mut j = IndexSubset::empty(self.n);
        j.insert(1).ok()?;
        for i in idx {
            j.insert(i + 2).ok()?;
        }
        Some(j)
    }
}

fn check_range(n: usize, p: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFew { n, min: 3 });
    }
    if p > n - 3 {
        return Err(Error::DegreeOutOfRange { p, max: n - 3 });
    }
    Ok(())
}

/// Both subset classes for `(n, p)`, `0 ≤ p ≤ n - 3`.
pub fn subset_classes(n: usize, p: usize) -> Result<SubsetClasses> {
    check_range(n, p)?;
    Ok(SubsetClasses { n, p })
}

/// `r_J = n!·μ(H_J ∩ C^n)`, the fraction of A (or B) where `φ_J < 0`.
pub fn subset_volume_term(subset: &IndexSubset, measure: Measure) -> Result<BigRational> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    functional_values(subset, measure.flavor()).slice_ratio()
}

/// Exact `b_p(n, μ)` with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AverageReport {
    /// Number of bars.
    pub n: usize,
    /// Homological degree.
    pub p: usize,
    /// Length distribution.
    pub measure: Measure,
    /// `b_p(n, μ)`.
    pub exact: BigRational,
    /// `C(n - 1, p)`.
    pub binomial_ref: u64,
    /// `C(n - 1, p) - b_p(n, μ)`.
    pub gap: BigRational,
    /// Number of `r_J` terms summed, counting the coincident case twice.
    pub subset_term_count: usize,
    /// Sums over the `|J| = p + 1` and `|J| = n - 2 - p` classes.
    pub class_sums: [BigRational; 2],
    /// Smallest `r_J` in the `|J| = p + 1` class.
    pub first_class_min: BigRational,
    /// Largest `r_J` in the `|J| = n - 2 - p` class.
    pub second_class_max: BigRational,
}

struct ClassStats {
    sum: BigRational,
    min: BigRational,
    max: BigRational,
    count: usize,
}

fn class_stats(subsets: Vec<IndexSubset>, measure: Measure) -> ClassStats {
    let merged = map_reduce(
        subsets.len(),
        |i| {
            let r = functional_values(&subsets[i], measure.flavor())
                .slice_ratio()
                .expect("class subsets are nonempty and n >= 3");
            Some(ClassStats {
                sum: r.clone(),
                min: r.clone(),
                max: r,
                count: 1,
            })
        },
        || None,
        |a, b| match (a, b) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => Some(ClassStats {
                sum: a.sum + b.sum,
                min: a.min.min(b.min),
                max: a.max.max(b.max),
                count: a.count + b.count,
            }),
        },
    );
    merged.expect("each class has at least one subset")
}

/// Exact `b_p(n, μ)` as a sum of simplex cut ratios.
pub fn average_betti_exact(n: usize, p: usize, measure: Measure) -> Result<AverageReport> {
    let classes = subset_classes(n, p)?;
    let first = class_stats(classes.first().collect(), measure);
    let second = if classes.coincide() {
        ClassStats {
            sum: first.sum.clone(),
            min: first.min.clone(),
            max: first.max.clone(),
            count: first.count,
        }
    } else {
        class_stats(classes.second().collect(), measure)
    };
    let exact = &first.sum + &second.sum;
    let binomial_ref = binomial(n as u64 - 1, p as u64).ok_or(Error::Overflow)?;
    let gap = BigRational::from_integer(BigInt::from(binomial_ref)) - &exact;
    Ok(AverageReport {
        n,
        p,
        measure,
        exact,
        binomial_ref,
        gap,
        subset_term_count: first.count + second.count,
        class_sums: [first.sum, second.sum],
        first_class_min: first.min,
        second_class_max: second.max,
    })
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    /// The exact average and its gap to `C(n - 1, p)`.
    pub report: AverageReport,
    /// `|gap(n)| / |gap(n - 1)|`; `None` on the first row or after a zero gap.
    pub gap_ratio: Option<BigRational>,
}

/// Exact averages for `n = n_min, …, n_max` with successive gap ratios.
/// An empty range (`n_min > n_max`) yields no rows.
pub fn convergence_table(
    p: usize,
    n_min: usize,
    n_max: usize,
    measure: Measure,
) -> Result<Vec<ConvergenceRow>> {
    if n_min > n_max {
        return Ok(Vec::new());
    }
    let min = (p + 3).max(3);
    if n_min < min {
        return Err(Error::RangeStart { n_min, min });
    }
    let mut rows: Vec<ConvergenceRow> = Vec::new();
    for n in n_min..=n_max {
        let report = average_betti_exact(n, p, measure)?;
        let gap_ratio = rows.last().and_then(|prev| {
            let before = prev.report.gap.abs();
            (!before.is_zero()).then(|| report.gap.abs() / before)
        });
        rows.push(ConvergenceRow { report, gap_ratio });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn class_sizes() {
        let c = subset_classes(3, 0).unwrap();
        assert!(c.coincide());
        assert_eq!(
            c.first().collect::<Vec<_>>(),
            c.second().collect::<Vec<_>>()
        );
        assert_eq!(c.first().count(), 1);
        let c = subset_classes(5, 1).unwrap();
        assert!(c.coincide());
        assert_eq!((c.first().count(), c.second().count()), (4, 4));
        let c = subset_classes(6, 1).unwrap();
        assert!(!c.coincide());
        assert_eq!((c.first().count(), c.second().count()), (5, 10));
        assert!(c.first().all(|j| j.contains(1) && j.len() == 2));
        assert!(c.second().all(|j| j.contains(1) && j.len() == 3));
        assert_eq!(
            subset_classes(5, 3),
            Err(Error::DegreeOutOfRange { p: 3, max: 2 })
        );
        assert_eq!(subset_classes(2, 0), Err(Error::TooFew { n: 2, min: 3 }));
    }

    #[test]
    fn volume_terms() {
        let j = IndexSubset::from_members(3, [1]).unwrap();
        assert_eq!(subset_volume_term(&j, Measure::SimplexUniform), Ok(r(1, 4)));
        assert_eq!(subset_volume_term(&j, Measure::CubeUniform), Ok(r(1, 2)));
        for n in 1..7 {
            for m in [Measure::SimplexUniform, Measure::CubeUniform] {
                assert_eq!(subset_volume_term(&IndexSubset::full(n), m), Ok(r(0, 1)));
            }
        }
        assert_eq!(
            subset_volume_term(&IndexSubset::empty(3), Measure::CubeUniform),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn triangle_averages() {
        let a = average_betti_exact(3, 0, Measure::SimplexUniform).unwrap();
        assert_eq!(a.exact, r(1, 2));
        assert_eq!(a.class_sums, [r(1, 4), r(1, 4)]);
        assert_eq!(a.subset_term_count, 2);
        assert_eq!(a.gap, r(1, 2));
        let b = average_betti_exact(3, 0, Measure::CubeUniform).unwrap();
        assert_eq!(b.exact, r(1, 1));
        assert_eq!(b.gap, r(0, 1));
        assert!(average_betti_exact(4, 2, Measure::CubeUniform).is_err());
    }

    #[test]
    fn report_bounds() {
        for n in 3..9 {
            for p in 0..=n - 3 {
                for m in [Measure::SimplexUniform, Measure::CubeUniform] {
                    let rep = average_betti_exact(n, p, m).unwrap();
                    let upper = binomial(n as u64 - 1, p as u64).unwrap()
                        + binomial(n as u64 - 1, (n - 3 - p) as u64).unwrap();
                    assert!(!rep.exact.is_negative());
                    assert!(rep.exact <= BigRational::from_integer(upper.into()));
                    assert_eq!(&rep.class_sums[0] + &rep.class_sums[1], rep.exact);
                }
            }
        }
    }

    #[test]
    fn convergence_rows() {
        let rows = convergence_table(0, 3, 6, Measure::SimplexUniform).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows[0].gap_ratio.is_none());
        for w in rows.windows(2) {
            let ratio = w[1].gap_ratio.clone().unwrap();
            assert_eq!(ratio, w[1].report.gap.abs() / w[0].report.gap.abs());
        }
        assert!(convergence_table(1, 8, 7, Measure::CubeUniform)
            .unwrap()
            .is_empty());
        assert_eq!(
            convergence_table(1, 3, 7, Measure::CubeUniform),
            Err(Error::RangeStart { n_min: 3, min: 4 })
        );
    }
}
