//! Exact integer matrices: Smith normal form and ranks over ℚ and 𝔽_p.
//!
//! All eliminations first run on `i64` with overflow checks and restart on
//! [`BigInt`] when an intermediate entry leaves the safe range. Nothing in
//! here ever touches floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse integer matrix in column-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    // per column: (row, value), sorted by row, no explicit zeros
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn from_dense<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            r,
            c,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, v)| (i, j, v.clone().into()))
            }),
        )
    }

    /// Duplicate positions are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Self {
        let mut columns: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); cols];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry ({i}, {j}) out of bounds");
            columns[j].push((i, v));
        }
        for col in &mut columns {
            col.sort_by_key(|(i, _)| *i);
            let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(col.len());
            for (i, v) in col.drain(..) {
                match merged.last_mut() {
                    Some((li, lv)) if *li == i => *lv += v,
                    _ => merged.push((i, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *col = merged;
        }
        Self { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.columns[col]
            .binary_search_by_key(&row, |(i, _)| *i)
            .map(|k| self.columns[col][k].1.clone())
            .unwrap_or_default()
    }

    pub fn column(&self, col: usize) -> &[(usize, BigInt)] {
        &self.columns[col]
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    fn to_dense_i64(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                let x = v.to_i64()?;
                if x.unsigned_abs() > SAFE_BOUND {
                    return None;
                }
                out[*i][j] = x;
            }
        }
        Some(out)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut entries = Vec::new();
        for (j, col) in other.columns.iter().enumerate() {
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    entries.push((*i, j, a * b));
                }
            }
        }
        IntegerMatrix::from_triplets(self.rows, other.cols, entries)
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let entries = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (j, *i, v.clone())));
        IntegerMatrix::from_triplets(self.cols, self.rows, entries)
    }
}

/// Entries of the `i64` fast path stay below this magnitude, so a single
/// product-and-subtract cannot wrap before the check sees it.
const SAFE_BOUND: u64 = 1 << 62;

/// Integer arithmetic used by the eliminations: exact on [`BigInt`], checked
/// on `i64`.
pub(crate) trait ExactInt: Clone + PartialEq {
    fn exact_zero() -> Self;
    fn vanishes(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    /// Truncating quotient.
    fn checked_quot(&self, d: &Self) -> Option<Self>;
    /// `self - q * x`.
    fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    /// `a * self - b * x`.
    fn checked_combine(&self, a: &Self, x: &Self, b: &Self) -> Option<Self>;
    fn exact_gcd(&self, other: &Self) -> Self;
    fn exact_div(&self, d: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

fn bounded(v: i128) -> Option<i64> {
    (v.unsigned_abs() <= SAFE_BOUND as u128).then_some(v as i64)
}

impl ExactInt for i64 {
    fn exact_zero() -> Self {
        0
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn checked_quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        bounded(*self as i128 - *q as i128 * *x as i128)
    }
    fn checked_combine(&self, a: &Self, x: &Self, b: &Self) -> Option<Self> {
        bounded(*a as i128 * *self as i128 - *b as i128 * *x as i128)
    }
    fn exact_gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn exact_zero() -> Self {
        Zero::zero()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn checked_quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn checked_combine(&self, a: &Self, x: &Self, b: &Self) -> Option<Self> {
        Some(a * self - b * x)
    }
    fn exact_gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Invariant factors `d₁ | d₂ | … | d_r` (all positive) and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let diagonal = match m.to_dense_i64() {
        Some(mut a) => diagonalize(&mut a).map(|d| d.iter().map(ExactInt::to_bigint).collect()),
        None => None,
    };
    let diagonal = diagonal.unwrap_or_else(|| {
        let mut a = m.to_dense();
        diagonalize(&mut a).expect("bigint arithmetic cannot overflow")
    });
    let mut factors: Vec<BigInt> = diagonal.into_iter().map(|d| d.abs()).collect();
    let r = factors.len();
    for i in 0..r {
        for j in i + 1..r {
            if factors[i].is_one() {
                break;
            }
            let g = factors[i].gcd(&factors[j]);
            let l = &factors[i] / &g * &factors[j];
            factors[i] = g;
            factors[j] = l;
        }
    }
    SmithForm {
        rank: r,
        invariant_factors: factors,
    }
}

/// Diagonalizes in place with minimum-magnitude pivoting and returns the
/// nonzero diagonal, or `None` if an `i64` entry would overflow.
fn diagonalize<T: ExactInt>(a: &mut [Vec<T>]) -> Option<Vec<T>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(a, t, (t..m).flat_map(|i| (t..n).map(move |j| (i, j))))
        else {
            break;
        };
        a.swap(t, pi);
        swap_cols(a, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].vanishes() {
                    continue;
                }
                let q = a[i][t].checked_quot(&a[t][t])?;
                for j in t..n {
                    if !a[t][j].vanishes() {
                        a[i][j] = a[i][j].checked_sub_mul(&q, &a[t][j])?;
                    }
                }
                dirty |= !a[i][t].vanishes();
            }
            for j in t + 1..n {
                if a[t][j].vanishes() {
                    continue;
                }
                let q = a[t][j].checked_quot(&a[t][t])?;
                for row in a[t..].iter_mut() {
                    if !row[t].vanishes() {
                        row[j] = row[j].checked_sub_mul(&q, &row[t])?;
                    }
                }
                dirty |= !a[t][j].vanishes();
            }
            if !dirty {
                break;
            }
            let line = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
            let (pi, pj) = min_entry(a, t, line).expect("dirty implies a nonzero entry");
            if pj == t {
                a.swap(t, pi);
            } else {
                swap_cols(a, t, pj);
            }
        }
        diag.push(a[t][t].clone());
    }
    Some(diag)
}

fn min_entry<T: ExactInt>(
    a: &[Vec<T>],
    _t: usize,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in positions {
        if a[i][j].vanishes() {
            continue;
        }
        if best.is_none_or(|(bi, bj)| a[i][j].magnitude_lt(&a[bi][bj])) {
            best = Some((i, j));
        }
    }
    best
}

fn swap_cols<T>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// Rank over ℚ by fraction-free elimination with row-content reduction.
pub fn rank_rational(m: &IntegerMatrix) -> usize {
    if let Some(mut a) = m.to_dense_i64() {
        if let Some(r) = rank_fraction_free(&mut a) {
            return r;
        }
    }
    rank_fraction_free(&mut m.to_dense()).expect("bigint arithmetic cannot overflow")
}

pub(crate) fn rank_fraction_free<T: ExactInt>(a: &mut [Vec<T>]) -> Option<usize> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n {
        if rank == m {
            break;
        }
        let pivot = (rank..m)
            .filter(|&i| !a[i][c].vanishes())
            .min_by(|&x, &y| {
                if a[x][c].magnitude_lt(&a[y][c]) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            });
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            if row[c].vanishes() {
                continue;
            }
            let g = prow[c].exact_gcd(&row[c]);
            let scale_row = prow[c].exact_div(&g);
            let scale_piv = row[c].exact_div(&g);
            let mut content = T::exact_zero();
            for j in c..n {
                row[j] = row[j].checked_combine(&scale_row, &prow[j], &scale_piv)?;
                content = content.exact_gcd(&row[j]);
            }
            if !content.vanishes() && content != one_like(&content) {
                for x in row[c..].iter_mut() {
                    *x = x.exact_div(&content);
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn one_like<T: ExactInt>(x: &T) -> T {
    x.exact_div(x)
}

/// Rank over 𝔽_p. `p` must be prime and below 2³¹.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = vec![vec![0; m.cols]; m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for (i, v) in col {
            let r = v.mod_floor(&pb);
            a[*i][j] = r.to_u64().expect("reduced below p");
        }
    }
    rank_dense_mod_p(&mut a, p)
}

pub(crate) fn rank_dense_mod_p(a: &mut [Vec<u64>], p: u64) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n {
        if rank == m {
            break;
        }
        let Some(pivot) = (rank..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_pow(a[rank][c], p - 2, p);
        for x in a[rank][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..n {
                row[j] = (row[j] + (p - f) * prow[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Brute-force determinantal divisors: gcd of all k×k minors.
    fn determinantal_divisors(a: &[Vec<i64>]) -> Vec<BigInt> {
        let m = a.len();
        let n = a.first().map_or(0, Vec::len);
        let mut out = Vec::new();
        for k in 1..=m.min(n) {
            let mut g = BigInt::zero();
            for rows in (0..m).combinations(k) {
                for cols in (0..n).combinations(k) {
                    let sub: Vec<Vec<BigInt>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| BigInt::from(a[i][j])).collect())
                        .collect();
                    g = g.gcd(&det(sub));
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(g);
        }
        out
    }

    /// Laplace expansion.
    fn det(a: Vec<Vec<BigInt>>) -> BigInt {
        let n = a.len();
        if n == 1 {
            return a[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if a[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &a[0][j] * det(minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn snf_examples() {
        let id = IntegerMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(smith_normal_form(&id).invariant_factors, big(&[1, 1, 1]));
        let d = IntegerMatrix::from_dense(&[vec![2, 0], vec![0, 4]]);
        assert_eq!(smith_normal_form(&d).invariant_factors, big(&[2, 4]));
        let d = IntegerMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&d).invariant_factors, big(&[1, 6]));
        let z = IntegerMatrix::zeros(3, 2);
        assert_eq!(smith_normal_form(&z).rank, 0);
    }

    #[test]
    fn snf_survives_i64_overflow() {
        // entries near 2^62 force the bigint path
        let huge = 1i64 << 61;
        let m = IntegerMatrix::from_dense(&[vec![huge, huge - 1], vec![huge - 3, huge + 5]]);
        let s = smith_normal_form(&m);
        let expected = determinantal_divisors(&[vec![huge, huge - 1], vec![huge - 3, huge + 5]]);
        assert_eq!(s.invariant_factors[0], expected[0]);
        assert_eq!(&s.invariant_factors[0] * &s.invariant_factors[1], expected[1].abs());
        let m = IntegerMatrix::from_dense(&[vec![BigInt::from(3).pow(90), BigInt::from(6)]]);
        assert_eq!(smith_normal_form(&m).invariant_factors, big(&[3]));
    }

    #[test]
    fn ranks_over_fields() {
        // hollow-triangle ∂₁
        let d1 = IntegerMatrix::from_dense(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(rank_rational(&d1), 2);
        assert_eq!(rank_mod_p(&d1, 2), 2);
        let two = IntegerMatrix::from_dense(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(rank_rational(&two), 2);
        assert_eq!(rank_mod_p(&two, 2), 0);
        assert_eq!(rank_mod_p(&two, 3), 2);
    }

    proptest! {
        #[test]
        fn snf_matches_minor_oracle(
            rows in 1usize..=6,
            cols in 1usize..=6,
            seed in proptest::collection::vec(-6i64..=6, 36),
        ) {
            let a: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 6 + j]).collect()).collect();
            let s = smith_normal_form(&IntegerMatrix::from_dense(&a));
            let dets = determinantal_divisors(&a);
            prop_assert_eq!(s.rank, dets.len());
            for w in s.invariant_factors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
            let mut prod = BigInt::one();
            for (k, d) in s.invariant_factors.iter().enumerate() {
                prop_assert!(d.is_positive());
                prod *= d;
                prop_assert_eq!(&prod, &dets[k].abs());
            }
            prop_assert_eq!(rank_rational(&IntegerMatrix::from_dense(&a)), s.rank);
        }

        #[test]
        fn mod_p_rank_matches_snf(
            rows in 1usize..=5,
            cols in 1usize..=5,
            seed in proptest::collection::vec(-9i64..=9, 25),
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
        ) {
            let a: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let m = IntegerMatrix::from_dense(&a);
            let s = smith_normal_form(&m);
            let pb = BigInt::from(p);
            let expected = s.invariant_factors.iter().filter(|d| !(*d % &pb).is_zero()).count();
            prop_assert_eq!(rank_mod_p(&m, p), expected);
        }
    }
}
