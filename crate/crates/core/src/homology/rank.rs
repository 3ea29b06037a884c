//! Exact rank of sparse integer matrices.
//!
//! Fraction-free row elimination: a row is reduced against a pivot row by
//! cross-multiplication, then divided by the gcd of its entries. Rows are
//! bucketed by leading column so each column is processed once. The `i64`
//! path runs with checked arithmetic and falls back to big integers on
//! overflow, so the result is always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix stored by rows; each row is sorted by column.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseIntMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    /// Appends a row given as `(column, value)` pairs in any order. Zero
    /// entries are dropped; repeated columns are summed.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut row: Vec<(usize, i64)> = entries.into_iter().collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            assert!(c < self.cols, "column {c} out of range {}", self.cols);
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|&(_, v)| v != 0);
        self.rows.push(merged);
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        let small: Vec<Vec<(usize, i64)>> = self.rows.clone();
        match eliminate(small, self.cols) {
            Some(r) => r,
            None => {
                let big = self
                    .rows
                    .iter()
                    .map(|row| row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
                    .collect();
                eliminate(big, self.cols).expect("big-integer elimination cannot overflow")
            }
        }
    }
}

trait Entry: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    // i64::MIN is rejected so that gcd and negation stay in range.
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other).filter(|&v| v != i64::MIN)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other).filter(|&v| v != i64::MIN)
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

type Row<T> = Vec<(usize, T)>;

/// Returns `None` if an intermediate value overflowed.
fn eliminate<T: Entry>(rows: Vec<Row<T>>, cols: usize) -> Option<usize> {
    let mut buckets: Vec<Vec<Row<T>>> = vec![Vec::new(); cols];
    for row in rows.into_iter().filter(|r| !r.is_empty()) {
        buckets[row[0].0].push(row);
    }
    let mut rank = 0;
    for col in 0..cols {
        let mut bucket = std::mem::take(&mut buckets[col]);
        if bucket.is_empty() {
            continue;
        }
        let pivot_at = (0..bucket.len())
            .min_by_key(|&i| (!bucket[i][0].1.is_unit(), bucket[i].len()))
            .expect("bucket is nonempty");
        let pivot = bucket.swap_remove(pivot_at);
        rank += 1;
        for row in bucket {
            let reduced = reduce(&row, &pivot)?;
            if let Some(&(lead, _)) = reduced.first() {
                buckets[lead].push(reduced);
            }
        }
    }
    Some(rank)
}

/// `(p/g) * row - (a/g) * pivot`, normalized by content, where `a` and `p`
/// are the leading entries of `row` and `pivot`.
fn reduce<T: Entry>(row: &Row<T>, pivot: &Row<T>) -> Option<Row<T>> {
    let a = &row[0].1;
    let p = &pivot[0].1;
    let g = a.gcd(p);
    let row_scale = p.div_exact(&g);
    let pivot_scale = a.div_exact(&g);

    let mut out: Row<T> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let next = match (row.get(i), pivot.get(j)) {
            (Some((rc, rv)), Some((pc, pv))) if rc == pc => {
                i += 1;
                j += 1;
                let lhs = rv.checked_mul(&row_scale)?;
                let rhs = pv.checked_mul(&pivot_scale)?;
                (*rc, lhs.checked_sub(&rhs)?)
            }
            (Some((rc, rv)), Some((pc, _))) if rc < pc => {
                i += 1;
                (*rc, rv.checked_mul(&row_scale)?)
            }
            (Some((rc, rv)), None) => {
                i += 1;
                (*rc, rv.checked_mul(&row_scale)?)
            }
            (_, Some((pc, pv))) => {
                j += 1;
                (*pc, pv.checked_mul(&pivot_scale)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }

    if let Some((_, first)) = out.first() {
        let content = out
            .iter()
            .skip(1)
            .fold(first.gcd(first), |acc, (_, v)| acc.gcd(v));
        if !content.is_unit() {
            for (_, v) in &mut out {
                *v = v.div_exact(&content);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank by brute force: the largest k with a nonzero k×k minor.
    fn brute_rank(dense: &[Vec<i64>]) -> usize {
        fn det(m: &[Vec<i128>]) -> i128 {
            if m.is_empty() {
                return 1;
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i128>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * m[0][j] * det(&minor)
                })
                .sum()
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut with = subsets(n - 1, k - 1);
            for s in &mut with {
                s.push(n - 1);
            }
            with.extend(subsets(n - 1, k));
            with
        }
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        for k in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let m: Vec<Vec<i128>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| dense[r][c] as i128).collect())
                        .collect();
                    if det(&m) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn sparse(dense: &[Vec<i64>]) -> SparseIntMatrix {
        let cols = dense.first().map_or(0, Vec::len);
        let mut m = SparseIntMatrix::new(cols);
        for row in dense {
            m.push_row(row.iter().enumerate().map(|(c, &v)| (c, v)));
        }
        m
    }

    #[test]
    fn hollow_triangle_incidence_rank_is_two() {
        let d1 = vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]];
        assert_eq!(brute_rank(&d1), 2);
        assert_eq!(sparse(&d1).rank(), 2);
    }

    #[test]
    fn empty_and_zero_matrices() {
        assert_eq!(SparseIntMatrix::new(0).rank(), 0);
        assert_eq!(sparse(&[vec![0, 0], vec![0, 0]]).rank(), 0);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 2 + 7;
        let m = sparse(&[vec![big, big - 1, 3], vec![big - 3, big, 5], vec![2, 7, big]]);
        assert_eq!(m.rank(), 3);
        let dependent = sparse(&[vec![big, 1], vec![big, 1]]);
        assert_eq!(dependent.rank(), 1);
    }

    proptest::proptest! {
        #[test]
        fn matches_minor_rank(
            dense in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 0..5)
        ) {
            let expected = brute_rank(&dense);
            let cols = dense.first().map_or(4, Vec::len);
            let mut m = SparseIntMatrix::new(cols);
            for row in &dense {
                m.push_row(row.iter().enumerate().map(|(c, &v)| (c, v)));
            }
            proptest::prop_assert_eq!(m.rank(), expected);
        }
    }
}
