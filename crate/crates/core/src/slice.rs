//! Volume fraction of a simplex cut by a half-space.
//!
//! Given a simplex `Σ` with vertices `v_0, …, v_n` and a linear functional `φ`,
//! everything here is a function of the vertex values `q_i = φ(v_i)` only:
//!
//! * distinct values: `r = Σ_{q_i<0} Π_{j≠i} q_i / (q_i - q_j)`;
//! * the CDF `r(x) = vol(Σ ∩ {φ < x}) / vol(Σ)` is the piecewise polynomial
//!   `Σ_{q_k<x} Π_{j≠k} (q_k - x) / (q_k - q_j)`;
//! * repeated values `Q_0 > … > Q_s` with multiplicities `k_l + 1`:
//!   `r = Σ_{Q_i<0} F_i Π_{j≠i} (Q_i / (Q_i - Q_j))^{k_j+1}` where `F_i` sums
//!   over the compositions `δ` of `k_i` into `s + 1` parts
//!   (see [`partitions`]):
//!   `F_i = Σ_δ C(n, δ_i) (-Q_i)^{k_i-δ_i} Π_{j≠i} C(k_j+δ_j, δ_j) (Q_i - Q_j)^{-δ_j}`.
//!
//! Vertex values equal to zero sit on the nonnegative side.
//!
//! The two simplices that carry the expectation problem are
//! `A = conv{c_0, …, c_n}` with `c_i = (1/i)(1, …, 1, 0, …, 0)` (`i` ones) and
//! `B = conv{c'_0, …, c'_n}` with `c'_i = i·c_i`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::binomial_big;
use crate::subset::IndexSubset;
use crate::{BigRational, Error, Result};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Which of the two ordered-cone simplices a functional is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Vertices `c_i`; cut ratios realize the uniform measure on the unit simplex.
    SimplexA,
    /// Vertices `c'_i = i·c_i`; cut ratios realize the uniform measure on the unit cube.
    SimplexB,
}

/// Vertices `c_0, …, c_n` of simplex A.
pub fn vertices_a(n: usize) -> Result<Vec<Vec<BigRational>>> {
    if n == 0 {
        return Err(Error::TooFew { n, min: 1 });
    }
    Ok((0..=n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    if k < i {
                        rat(1, i as i64)
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect())
}

/// Vertices `c'_0, …, c'_n` of simplex B (0/1 prefix vectors).
pub fn vertices_b(n: usize) -> Result<Vec<Vec<BigRational>>> {
    if n == 0 {
        return Err(Error::TooFew { n, min: 1 });
    }
    Ok((0..=n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    if k < i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect())
}

/// Values of `φ_J(ℓ) = Σ_{i∈J} l_i - Σ_{i∉J} l_i` on the vertices of A or B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSequence {
    values: Vec<BigRational>,
    flavor: Flavor,
}

impl QSequence {
    /// `q_0, …, q_n`.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Simplex the values were taken on.
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Fraction of the simplex where `φ_J < 0`.
    pub fn slice_ratio(&self) -> Result<BigRational> {
        slice_ratio(&self.values)
    }
}

/// `φ_J(c_i)` (A) or `φ_J(c'_i)` (B) for `i = 0, …, n`, where `n = J.n()`.
///
/// On A, `q_0 = 0` and `q_i = 2α_i(J) - 1`; on B, `q'_i = i·q_i` is an integer.
pub fn functional_values(subset: &IndexSubset, flavor: Flavor) -> QSequence {
    let counts = subset.prefix_counts();
    let values = counts
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let signed = 2 * k as i64 - i as i64;
            match flavor {
                Flavor::SimplexA if i == 0 => BigRational::zero(),
                Flavor::SimplexA => rat(signed, i as i64),
                Flavor::SimplexB => BigRational::from_integer(signed.into()),
            }
        })
        .collect();
    QSequence { values, flavor }
}

/// Densities `α_i(J) = |J ∩ {1, …, i}| / i` for `i = 1, …, n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensitySequence {
    alphas: Vec<BigRational>,
    subset: IndexSubset,
}

impl DensitySequence {
    /// `α_1, …, α_n` (the slice is 0-based: `alphas()[i - 1] = α_i`).
    pub fn alphas(&self) -> &[BigRational] {
        &self.alphas
    }

    /// The subset `J`.
    pub fn subset(&self) -> &IndexSubset {
        &self.subset
    }

    /// `|J|`.
    pub fn p(&self) -> usize {
        self.subset.len()
    }
}

/// Exact density sequence of `J`.
pub fn density_sequence(subset: &IndexSubset) -> DensitySequence {
    let counts = subset.prefix_counts();
    let alphas = (1..counts.len())
        .map(|i| rat(counts[i] as i64, i as i64))
        .collect();
    DensitySequence {
        alphas,
        subset: subset.clone(),
    }
}

/// Distinct vertex values `Q_0 > Q_1 > … > Q_s` with multiplicities `k_l + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupedValues {
    values: Vec<BigRational>,
    multiplicities: Vec<usize>,
}

impl GroupedValues {
    /// Checks strict decrease and positive multiplicities.
    pub fn new(values: Vec<BigRational>, multiplicities: Vec<usize>) -> Result<Self> {
        if values.is_empty()
            || values.len() != multiplicities.len()
            || multiplicities.contains(&0)
            || values.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(Error::MalformedGroups);
        }
        Ok(GroupedValues {
            values,
            multiplicities,
        })
    }

    /// `Q_0 > … > Q_s`.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// `k_0 + 1, …, k_s + 1`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Ambient dimension `n`: the simplex has `Σ (k_l + 1) = n + 1` vertices.
    pub fn dimension(&self) -> usize {
        self.multiplicities.iter().sum::<usize>() - 1
    }

    /// Index `m + 1` of the first strictly negative group (`s + 1` if none).
    pub fn negative_start(&self) -> usize {
        self.values.partition_point(|q| !q.is_negative())
    }

    /// The grouping of `-q`, still in decreasing order.
    pub fn negated(&self) -> GroupedValues {
        GroupedValues {
            values: self.values.iter().rev().map(|q| -q).collect(),
            multiplicities: self.multiplicities.iter().rev().copied().collect(),
        }
    }

    /// The flat list of vertex values, in decreasing order.
    pub fn expand(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(q, &m)| core::iter::repeat_n(q.clone(), m))
            .collect()
    }
}

/// Groups equal values (exact equality) in decreasing order.
pub fn group_values(values: &[BigRational]) -> GroupedValues {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = GroupedValues {
        values: Vec::new(),
        multiplicities: Vec::new(),
    };
    for q in sorted {
        if out.values.last() == Some(&q) {
            *out.multiplicities.last_mut().unwrap() += 1;
        } else {
            out.values.push(q);
            out.multiplicities.push(1);
        }
    }
    out
}

fn check_distinct(q: &[BigRational]) -> Result<Vec<BigRational>> {
    if q.len() < 2 {
        return Err(Error::TooFew { n: q.len(), min: 2 });
    }
    let mut sorted = q.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedValues);
    }
    Ok(sorted)
}

/// `Π_{j≠k} (q_k - x) / (q_k - q_j)`.
fn cdf_term(q: &[BigRational], k: usize, x: &BigRational) -> BigRational {
    let shifted = &q[k] - x;
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for (j, qj) in q.iter().enumerate() {
        if j != k {
            num *= &shifted;
            den *= &q[k] - qj;
        }
    }
    num / den
}

/// Fraction of the simplex where `φ < 0`, for pairwise distinct vertex values.
pub fn slice_ratio_distinct(q: &[BigRational]) -> Result<BigRational> {
    check_distinct(q)?;
    let zero = BigRational::zero();
    Ok((0..q.len())
        .filter(|&i| q[i].is_negative())
        .map(|i| cdf_term(q, i, &zero))
        .sum())
}

/// `r(x) = vol(Σ ∩ {φ < x}) / vol(Σ)` for pairwise distinct vertex values.
pub fn slice_cdf(q: &[BigRational], x: &BigRational) -> Result<BigRational> {
    check_distinct(q)?;
    Ok((0..q.len())
        .filter(|&k| q[k] < *x)
        .map(|k| cdf_term(q, k, x))
        .sum())
}

/// The `piece`-th polynomial of the CDF evaluated at `x`: the sum of the
/// terms belonging to the `piece` smallest vertex values. On
/// `[q_(piece-1), q_(piece)]` (sorted order) it coincides with [`slice_cdf`].
pub fn cdf_piece(q: &[BigRational], piece: usize, x: &BigRational) -> Result<BigRational> {
    let sorted = check_distinct(q)?;
    if piece > sorted.len() {
        return Err(Error::TooFew {
            n: sorted.len(),
            min: piece,
        });
    }
    Ok((0..piece).map(|k| cdf_term(&sorted, k, x)).sum())
}

/// All `δ: {0, …, s} → ℤ≥0` with `Σ δ_j = a`, i.e. compositions of `a` into
/// `s + 1` nonnegative parts; there are `C(s + a, a)` of them. Ordered with
/// the leading coordinate decreasing.
pub fn partitions(s: usize, a: usize) -> Vec<Vec<usize>> {
    fn fill(pos: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for d in (0..=left).rev() {
            cur[pos] = d;
            fill(pos + 1, left - d, cur, out);
        }
    }
    let mut out = Vec::new();
    fill(0, a, &mut vec![0; s + 1], &mut out);
    out
}

/// Sum over the compositions of `remaining` into the parts `tables[pos..]`
/// of `Π tables[j][δ_j]`.
fn sum_over_compositions(
    tables: &[Vec<BigRational>],
    pos: usize,
    remaining: usize,
    acc: &BigRational,
    out: &mut BigRational,
) {
    if pos + 1 == tables.len() {
        *out += acc * &tables[pos][remaining];
        return;
    }
    for d in 0..=remaining {
        let entry = &tables[pos][d];
        if entry.is_zero() {
            continue;
        }
        if entry.is_one() {
            sum_over_compositions(tables, pos + 1, remaining - d, acc, out);
        } else {
            sum_over_compositions(tables, pos + 1, remaining - d, &(acc * entry), out);
        }
    }
}

/// The correction factor `F_i` for group `i` (`F_i = 1` when `k_i = 0`).
fn correction_factor(g: &GroupedValues, i: usize, n: usize) -> BigRational {
    let k = g.multiplicities[i] - 1;
    if k == 0 {
        return BigRational::one();
    }
    let qi = &g.values[i];
    let minus_qi = -qi;
    // group i first, then every other group; entry d of a table is the
    // factor contributed by δ_j = d
    let mut tables = Vec::with_capacity(g.values.len());
    tables.push(
        (0..=k)
            .map(|d| BigRational::from_integer(binomial_big(n, d)) * minus_qi.pow((k - d) as i32))
            .collect::<Vec<_>>(),
    );
    for (j, qj) in g.values.iter().enumerate() {
        if j == i {
            continue;
        }
        let kj = g.multiplicities[j] - 1;
        let inv = (qi - qj).recip();
        let mut power = BigRational::one();
        let mut row = Vec::with_capacity(k + 1);
        for d in 0..=k {
            row.push(BigRational::from_integer(binomial_big(kj + d, d)) * &power);
            power *= &inv;
        }
        tables.push(row);
    }
    let mut total = BigRational::zero();
    sum_over_compositions(&tables, 0, k, &BigRational::one(), &mut total);
    total
}

fn confluent_unchecked(g: &GroupedValues) -> BigRational {
    let n = g.dimension();
    let mut r = BigRational::zero();
    for i in g.negative_start()..g.values.len() {
        let qi = &g.values[i];
        let mut prod = BigRational::one();
        for (j, qj) in g.values.iter().enumerate() {
            if j != i {
                let ratio = qi / (qi - qj);
                prod *= ratio.pow(g.multiplicities[j] as i32);
            }
        }
        r += correction_factor(g, i, n) * prod;
    }
    r
}

/// Fraction of the simplex where `φ < 0`, from grouped (possibly repeated) values.
pub fn slice_ratio_confluent(g: &GroupedValues) -> Result<BigRational> {
    // revalidate: the fields are private but a caller may have built `g` by hand
    let g = GroupedValues::new(g.values.clone(), g.multiplicities.clone())?;
    if g.dimension() == 0 {
        return Err(Error::TooFew { n: 1, min: 2 });
    }
    Ok(confluent_unchecked(&g))
}

/// Which side of the hyperplane the closed-form sum is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Sum over the groups with `Q < 0`.
    Negative,
    /// Sum over the groups with `Q > 0` for `-φ`, then take the complement.
    Positive,
}

/// Cut ratio evaluated on a fixed side. Both sides give the same exact value.
pub fn slice_ratio_on(q: &[BigRational], side: Side) -> Result<BigRational> {
    if q.len() < 2 {
        return Err(Error::TooFew { n: q.len(), min: 2 });
    }
    let g = group_values(q);
    if g.values.iter().all(|v| v.is_zero()) {
        // φ vanishes on the whole simplex; {φ < 0} is empty
        return Ok(BigRational::zero());
    }
    Ok(match side {
        Side::Negative => confluent_unchecked(&g),
        Side::Positive => BigRational::one() - confluent_unchecked(&g.negated()),
    })
}

/// Fraction of the simplex where `φ < 0`, picking the side with fewer
/// contributing groups.
pub fn slice_ratio(q: &[BigRational]) -> Result<BigRational> {
    if q.len() < 2 {
        return Err(Error::TooFew { n: q.len(), min: 2 });
    }
    let negative = q.iter().filter(|v| v.is_negative()).count();
    if negative == 0 {
        return Ok(BigRational::zero());
    }
    if negative == q.len() {
        return Ok(BigRational::one());
    }
    let g = group_values(q);
    let neg_groups = g.values.len() - g.negative_start();
    let pos_groups = g.values.iter().filter(|v| v.is_positive()).count();
    if neg_groups <= pos_groups {
        Ok(confluent_unchecked(&g))
    } else {
        Ok(BigRational::one() - confluent_unchecked(&g.negated()))
    }
}

/// Integer-valued helper for tests and callers building inputs by hand.
pub fn rationals(values: &[i64]) -> Vec<BigRational> {
    values
        .iter()
        .map(|&v| BigRational::from_integer(BigInt::from(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        rat(n, d)
    }

    /// Exact cut-ratio oracle: expand `x^n Π_{l≠i} (x - Q_l)^{-(k_l+1)}` as a
    /// truncated power series around `Q_i` and read off the coefficient of
    /// order `k_i`.
    fn taylor_oracle(g: &GroupedValues) -> BigRational {
        let n = g.dimension();
        let mut total = BigRational::zero();
        for i in g.negative_start()..g.values().len() {
            let qi = &g.values()[i];
            let k = g.multiplicities()[i] - 1;
            // x^n = (Q_i + t)^n
            let mut series: Vec<BigRational> = (0..=k)
                .map(|d| BigRational::from_integer(binomial_big(n, d)) * qi.pow((n - d) as i32))
                .collect();
            for (l, ql) in g.values().iter().enumerate() {
                if l == i {
                    continue;
                }
                // (c + t)^{-m} with c = Q_i - Q_l
                let c = qi - ql;
                let m = g.multiplicities()[l];
                let factor: Vec<BigRational> = (0..=k)
                    .map(|d| {
                        let sign = if d % 2 == 0 { r(1, 1) } else { r(-1, 1) };
                        sign * BigRational::from_integer(binomial_big(m + d - 1, d))
                            * c.pow(-((m + d) as i32))
                    })
                    .collect();
                let mut next = vec![BigRational::zero(); k + 1];
                for a in 0..=k {
                    for b in 0..=k - a {
                        next[a + b] += &series[a] * &factor[b];
                    }
                }
                series = next;
            }
            total += &series[k];
        }
        total
    }

    #[test]
    fn vertex_sets() {
        let a2 = vertices_a(2).unwrap();
        assert_eq!(
            a2,
            vec![
                rationals(&[0, 0]),
                rationals(&[1, 0]),
                vec![r(1, 2), r(1, 2)]
            ]
        );
        assert_eq!(vertices_a(3).unwrap()[2], vec![r(1, 2), r(1, 2), r(0, 1)]);
        assert_eq!(
            vertices_a(1).unwrap(),
            vec![rationals(&[0]), rationals(&[1])]
        );
        assert_eq!(
            vertices_b(2).unwrap(),
            vec![rationals(&[0, 0]), rationals(&[1, 0]), rationals(&[1, 1])]
        );
        assert_eq!(vertices_b(4).unwrap()[3], rationals(&[1, 1, 1, 0]));
        for n in 1..6 {
            assert!(vertices_b(n).unwrap()[0].iter().all(Zero::is_zero));
        }
        assert!(vertices_a(0).is_err() && vertices_b(0).is_err());
    }

    #[test]
    fn functional_values_match_direct_evaluation() {
        let j1 = IndexSubset::from_members(4, [1]).unwrap();
        assert_eq!(
            functional_values(&j1, Flavor::SimplexA).values(),
            &[r(0, 1), r(1, 1), r(0, 1), r(-1, 3), r(-1, 2)]
        );
        let j13 = IndexSubset::from_members(4, [1, 3]).unwrap();
        assert_eq!(
            functional_values(&j13, Flavor::SimplexB).values(),
            &rationals(&[0, 1, 0, 1, 0])[..]
        );
        let empty = IndexSubset::empty(3);
        assert_eq!(
            functional_values(&empty, Flavor::SimplexA).values(),
            &rationals(&[0, -1, -1, -1])[..]
        );

        // against the vertices themselves
        for members in [vec![1, 2], vec![2, 5], vec![1, 3, 4]] {
            let j = IndexSubset::from_members(5, members).unwrap();
            for (flavor, verts) in [
                (Flavor::SimplexA, vertices_a(5).unwrap()),
                (Flavor::SimplexB, vertices_b(5).unwrap()),
            ] {
                let q = functional_values(&j, flavor);
                for (v, qi) in verts.iter().zip(q.values()) {
                    let phi: BigRational = v
                        .iter()
                        .enumerate()
                        .map(|(k, x)| if j.contains(k + 1) { x.clone() } else { -x })
                        .sum();
                    assert_eq!(&phi, qi);
                }
            }
        }
    }

    #[test]
    fn densities() {
        let j = IndexSubset::from_members(5, [2, 4]).unwrap();
        let d = density_sequence(&j);
        assert_eq!(d.alphas(), &[r(0, 1), r(1, 2), r(1, 3), r(1, 2), r(2, 5)]);
        assert_eq!(d.p(), 2);
        let first = IndexSubset::from_members(8, 1..=3).unwrap();
        let d = density_sequence(&first);
        assert!(d.alphas()[..3].iter().all(One::is_one));
        assert_eq!(d.alphas().iter().filter(|a| a.is_one()).count(), 3);
        let odd = IndexSubset::from_members(9, [1, 3, 5, 7]).unwrap();
        let half = r(1, 2);
        assert_eq!(
            density_sequence(&odd)
                .alphas()
                .iter()
                .filter(|a| **a == half)
                .count(),
            4
        );
    }

    #[test]
    fn grouping() {
        let g = group_values(&[r(0, 1), r(1, 1), r(0, 1), r(-1, 3), r(-1, 2)]);
        assert_eq!(g.values(), &[r(1, 1), r(0, 1), r(-1, 3), r(-1, 2)]);
        assert_eq!(g.multiplicities(), &[1, 2, 1, 1]);
        assert_eq!(g.negative_start(), 2);
        let same = group_values(&rationals(&[7, 7, 7]));
        assert_eq!(
            (same.values().len(), same.multiplicities()),
            (1, &[3usize][..])
        );
        let g = group_values(&rationals(&[0, 1, 0, 1, 0]));
        assert_eq!(g.values(), &rationals(&[1, 0])[..]);
        assert_eq!(g.multiplicities(), &[2, 3]);
        assert_eq!(g.dimension(), 4);
        assert_eq!(g.negated().values(), &rationals(&[0, -1])[..]);
        assert_eq!(
            GroupedValues::new(rationals(&[1, 1]), vec![1, 1]),
            Err(Error::MalformedGroups)
        );
        assert_eq!(
            GroupedValues::new(rationals(&[1, 2]), vec![1, 1]),
            Err(Error::MalformedGroups)
        );
        assert_eq!(
            GroupedValues::new(rationals(&[2, 1]), vec![1, 0]),
            Err(Error::MalformedGroups)
        );
    }

    #[test]
    fn distinct_examples() {
        assert_eq!(slice_ratio_distinct(&rationals(&[-1, 1])), Ok(r(1, 2)));
        assert_eq!(slice_ratio_distinct(&rationals(&[-1, 1, 2])), Ok(r(1, 6)));
        assert_eq!(slice_ratio_distinct(&rationals(&[1, 2, 3])), Ok(r(0, 1)));
        assert_eq!(slice_ratio_distinct(&rationals(&[-1, -2, -3])), Ok(r(1, 1)));
        assert_eq!(
            slice_ratio_distinct(&rationals(&[-1, 1, 1])),
            Err(Error::RepeatedValues)
        );
        assert_eq!(
            slice_ratio_distinct(&rationals(&[-1])),
            Err(Error::TooFew { n: 1, min: 2 })
        );
    }

    #[test]
    fn triangle_clip_oracle() {
        // q = (-1, 1, 2) on the triangle (0,0),(1,0),(0,1) with φ affine.
        // φ = 0 crosses edge v0v1 at t = 1/2 and v0v2 at t = 1/3; the clipped
        // corner triangle has area fraction 1/2 · 1/3.
        assert_eq!(
            slice_ratio_distinct(&rationals(&[-1, 1, 2])),
            Ok(r(1, 2) * r(1, 3))
        );
    }

    #[test]
    fn cdf_examples() {
        assert_eq!(slice_cdf(&rationals(&[0, 1]), &r(1, 3)), Ok(r(1, 3)));
        assert_eq!(slice_cdf(&rationals(&[-1, 1, 2]), &r(0, 1)), Ok(r(1, 6)));
        assert_eq!(slice_cdf(&rationals(&[-1, 1, 2]), &r(2, 1)), Ok(r(1, 1)));
        assert_eq!(slice_cdf(&rationals(&[-1, 1, 2]), &r(-1, 1)), Ok(r(0, 1)));
        assert_eq!(slice_cdf(&rationals(&[-1, 1, 2]), &r(5, 1)), Ok(r(1, 1)));
        assert_eq!(cdf_piece(&rationals(&[2, -1, 1]), 1, &r(0, 1)), Ok(r(1, 6)));
        assert!(slice_cdf(&rationals(&[1, 1]), &r(0, 1)).is_err());
    }

    #[test]
    fn partition_sets() {
        assert_eq!(partitions(1, 1), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(partitions(3, 0), vec![vec![0; 4]]);
        assert_eq!(partitions(2, 2).len(), 6);
        for s in 0..5 {
            for a in 0..5 {
                let ps = partitions(s, a);
                assert_eq!(BigInt::from(ps.len()), binomial_big(s + a, a));
                assert!(ps
                    .iter()
                    .all(|d| d.len() == s + 1 && d.iter().sum::<usize>() == a));
            }
        }
    }

    #[test]
    fn confluent_examples() {
        let g = GroupedValues::new(rationals(&[1, -1]), vec![2, 1]).unwrap();
        assert_eq!(slice_ratio_confluent(&g), Ok(r(1, 4)));
        let g = GroupedValues::new(rationals(&[1, -1]), vec![1, 2]).unwrap();
        assert_eq!(correction_factor(&g, 1, 2), r(3, 2));
        assert_eq!(slice_ratio_confluent(&g), Ok(r(3, 4)));
        let g = GroupedValues::new(rationals(&[-1, -2, -5]), vec![2, 3, 1]).unwrap();
        assert_eq!(slice_ratio_confluent(&g), Ok(r(1, 1)));
        let point = GroupedValues::new(rationals(&[-1]), vec![1]).unwrap();
        assert!(slice_ratio_confluent(&point).is_err());
    }

    #[test]
    fn confluent_matches_taylor_oracle() {
        let cases: &[(&[i64], &[usize])] = &[
            (&[3, 1, -1, -2], &[2, 1, 3, 2]),
            (&[1, 0, -1], &[1, 3, 2]),
            (&[2, -1, -4], &[1, 4, 1]),
            (&[5, 0, -3, -7], &[3, 2, 2, 3]),
        ];
        for (vals, mults) in cases {
            let g = GroupedValues::new(rationals(vals), mults.to_vec()).unwrap();
            assert_eq!(
                slice_ratio_confluent(&g).unwrap(),
                taylor_oracle(&g),
                "{vals:?} {mults:?}"
            );
        }
    }

    #[test]
    fn dispatcher() {
        assert_eq!(slice_ratio(&rationals(&[-1, 1, 1])), Ok(r(1, 4)));
        assert_eq!(slice_ratio(&rationals(&[-1, -1, 1])), Ok(r(3, 4)));
        assert_eq!(slice_ratio(&rationals(&[-3, -1, -2])), Ok(r(1, 1)));
        assert_eq!(slice_ratio(&rationals(&[0, 0, 0])), Ok(r(0, 1)));
        assert_eq!(
            slice_ratio_on(&rationals(&[0, 0, 0]), Side::Positive),
            Ok(r(0, 1))
        );
        for q in [
            &[-1i64, 1, 1][..],
            &[0, 1, 0, -1],
            &[-2, -2, 3, 0, 5, 5, -1],
        ] {
            let q = rationals(q);
            assert_eq!(
                slice_ratio_on(&q, Side::Negative),
                slice_ratio_on(&q, Side::Positive)
            );
            assert_eq!(slice_ratio_on(&q, Side::Negative), slice_ratio(&q));
        }
        // broken-stick anchors at n = 3
        let j = IndexSubset::from_members(3, [1]).unwrap();
        assert_eq!(
            functional_values(&j, Flavor::SimplexA).slice_ratio(),
            Ok(r(1, 4))
        );
        assert_eq!(
            functional_values(&j, Flavor::SimplexB).slice_ratio(),
            Ok(r(1, 2))
        );
    }
}
