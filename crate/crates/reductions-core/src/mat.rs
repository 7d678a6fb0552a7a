//! Exact dense matrices over a field, plus integer fast paths.
//!
//! The generic layer works over any [`Field`] (rationals or rational
//! functions) with deterministic first-nonzero pivoting, so the reduced row
//! echelon form is the canonical representative of a row space and all
//! outputs are reproducible bit for bit.
//!
//! For large integer matrices (the wedge-power systems), rank is computed
//! by fraction-free Bareiss elimination with per-row content stripping, and
//! there is a modular elimination path over word-size primes used for
//! certified rank lower bounds.

use num::bigint::BigInt;
use num::{Integer, One, Zero};
use std::fmt;

use crate::poly::PolyQ;
use crate::ratfunc::RatFunc;
use crate::scalar::Q;

/// Field operations needed by the elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Q {
    fn zero() -> Self {
        <Q as Zero>::zero()
    }
    fn one() -> Self {
        <Q as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        RatFunc::div(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
}

/// Dense rows-by-cols matrix over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Field> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{:?}", self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of row reduction: the reduced matrix, its rank, and the pivot
/// columns in increasing order.
pub struct Rref<T: Field> {
    pub mat: Mat<T>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<T: Field> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).add(other.at(r, c)))
    }

    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).sub(other.at(r, c)))
    }

    pub fn scale(&self, s: &T) -> Mat<T> {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).mul(s))
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Mat::<T>::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).add(&a.mul(b));
                    *out.at_mut(r, c) = v;
                }
            }
        }
        out
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc = acc.add(&self.at(r, c).mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form with deterministic pivoting: the pivot of
    /// each column is the first row (in order) with a nonzero entry. The
    /// output is the unique RREF of the row space.
    pub fn rref(&self) -> Rref<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..m.cols {
            if pr >= m.rows {
                break;
            }
            let Some(sel) = (pr..m.rows).find(|&r| !m.at(r, pc).is_zero()) else {
                continue;
            };
            if sel != pr {
                for c in 0..m.cols {
                    m.data.swap(sel * m.cols + c, pr * m.cols + c);
                }
            }
            let inv = T::one().div(m.at(pr, pc));
            for c in pc..m.cols {
                let v = m.at(pr, c).mul(&inv);
                *m.at_mut(pr, c) = v;
            }
            for r in 0..m.rows {
                if r == pr || m.at(r, pc).is_zero() {
                    continue;
                }
                let factor = m.at(r, pc).clone();
                for c in pc..m.cols {
                    let v = m.at(r, c).sub(&factor.mul(m.at(pr, c)));
                    *m.at_mut(r, c) = v;
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        Rref {
            rank: pivots.len(),
            mat: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : self * x^T = 0}`, one kernel vector per row, in the
    /// canonical free-column form derived from the RREF (free variable set
    /// to 1, pivots solved).
    pub fn kernel_basis(&self) -> Mat<T> {
        let red = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let mut out = Mat::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            *out.at_mut(k, fc) = T::one();
            for (pr, &pc) in red.pivots.iter().enumerate() {
                *out.at_mut(k, pc) = red.mat.at(pr, fc).neg();
            }
        }
        out
    }

    /// Determinant by elimination (square matrices).
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for p in 0..n {
            let Some(sel) = (p..n).find(|&r| !m.at(r, p).is_zero()) else {
                return T::zero();
            };
            if sel != p {
                for c in 0..n {
                    m.data.swap(sel * n + c, p * n + c);
                }
                det = det.neg();
            }
            let piv = m.at(p, p).clone();
            det = det.mul(&piv);
            for r in (p + 1)..n {
                if m.at(r, p).is_zero() {
                    continue;
                }
                let factor = m.at(r, p).div(&piv);
                for c in p..n {
                    let v = m.at(r, c).sub(&factor.mul(m.at(p, c)));
                    *m.at_mut(r, c) = v;
                }
            }
        }
        det
    }

    /// Inverse of a square invertible matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Mat<T>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = T::one();
        }
        let red = aug.rref();
        if red.rank < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |r, c| red.mat.at(r, n + c).clone()))
    }

    /// Does `v` lie in the row space?
    pub fn row_space_contains(&self, v: &[T]) -> bool {
        let mut rows: Vec<Vec<T>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let base_rank = self.rank();
        rows.push(v.to_vec());
        Mat::from_rows(rows).rank() == base_rank
    }
}

impl Mat<Q> {
    pub fn from_int_rows(rows: &[&[i64]]) -> Mat<Q> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::scalar::q(x)).collect())
                .collect(),
        )
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.at(i, i).clone()).fold(crate::scalar::q(0), |a, b| a + b)
    }

    /// Characteristic polynomial of a square matrix, monic of degree n,
    /// by the Faddeev-LeVerrier recurrence (exact over Q).
    pub fn charpoly(&self) -> PolyQ {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![crate::scalar::q(0); n + 1];
        coeffs[n] = crate::scalar::q(1);
        let mut m = Mat::<Q>::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = -m.trace() / crate::scalar::q(k as i64);
            for i in 0..n {
                let v = m.at(i, i).clone() + c.clone();
                *m.at_mut(i, i) = v;
            }
            coeffs[n - k] = c;
        }
        PolyQ::from_coeffs(coeffs)
    }

    /// Minimal polynomial: the monic generator of the dependences among
    /// I, m, m^2, ...; found as the first power expressible in the span of
    /// the previous ones.
    pub fn minpoly(&self) -> PolyQ {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let dim = n * n;
        let mut powers: Vec<Vec<Q>> = Vec::new();
        let mut cur = Mat::<Q>::identity(n);
        loop {
            powers.push(cur.data.clone());
            let k = powers.len() - 1;
            if k > 0 {
                // Is m^k in the span of I..m^{k-1}? Solve the linear system.
                let mut rows: Vec<Vec<Q>> = Vec::with_capacity(dim);
                for i in 0..dim {
                    let mut row: Vec<Q> = (0..k).map(|j| powers[j][i].clone()).collect();
                    row.push(powers[k][i].clone());
                    rows.push(row);
                }
                let sys = Mat::from_rows(rows);
                let red = sys.rref();
                if !red.pivots.contains(&k) {
                    // Solve for the combination; coefficients come from the rref.
                    let mut coeffs = vec![crate::scalar::q(0); k + 1];
                    coeffs[k] = crate::scalar::q(1);
                    for (pr, &pc) in red.pivots.iter().enumerate() {
                        coeffs[pc] = -red.mat.at(pr, k).clone();
                    }
                    return PolyQ::from_coeffs(coeffs);
                }
            }
            cur = cur.mul(self);
        }
    }
}

// ---------------------------------------------------------------------------
// Integer fast paths
// ---------------------------------------------------------------------------

/// Exact rank of an integer matrix by fraction-free (Bareiss-style)
/// elimination with per-row content stripping. Deterministic first-nonzero
/// pivoting; only rank is returned, so no final normalization is needed.
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut rank = 0usize;
    let nrows = m.len();
    for pc in 0..cols {
        if rank >= nrows {
            break;
        }
        let Some(sel) = (rank..nrows).find(|&r| !m[r][pc].is_zero()) else {
            continue;
        };
        m.swap(sel, rank);
        let (pivot_row, rest) = {
            let (a, b) = m.split_at_mut(rank + 1);
            (&a[rank], b)
        };
        let piv = pivot_row[pc].clone();
        for row in rest.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for c in pc..cols {
                row[c] = &row[c] * &piv - &f * &pivot_row[c];
            }
            // Strip content to keep entries small.
            let mut g = BigInt::zero();
            for c in pc..cols {
                if !row[c].is_zero() {
                    g = g.gcd(&row[c]);
                }
            }
            if g > BigInt::one() {
                for c in pc..cols {
                    row[c] = &row[c] / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix modulo a word-size prime. This is always a
/// lower bound for the rank over Q (a nonzero minor mod p is nonzero in Z).
pub fn modp_rank(rows: &[Vec<i64>], p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| reduce(x)).collect()).collect();
    modp_rank_u64(&mut m, cols, p)
}

/// Same as [`modp_rank`] with entries already reduced.
pub fn modp_rank_u64(m: &mut [Vec<u64>], cols: usize, p: u64) -> usize {
    let nrows = m.len();
    let mut rank = 0usize;
    let inv = |a: u64| -> u64 { pow_mod(a, p - 2, p) };
    for pc in 0..cols {
        if rank >= nrows {
            break;
        }
        let Some(sel) = (rank..nrows).find(|&r| m[r][pc] % p != 0) else {
            continue;
        };
        m.swap(sel, rank);
        let pinv = inv(m[rank][pc]);
        for c in pc..cols {
            m[rank][c] = mul_mod(m[rank][c], pinv, p);
        }
        let (pivot_row, rest) = {
            let (a, b) = m.split_at_mut(rank + 1);
            (a[rank].clone(), b)
        };
        for row in rest.iter_mut() {
            let f = row[pc];
            if f == 0 {
                continue;
            }
            for c in pc..cols {
                let sub = mul_mod(f, pivot_row[c], p);
                row[c] = (row[c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::util::SplitMix64;

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::<Q>::identity(4);
        let red = id.rref();
        assert_eq!(red.rank, 4);
        assert_eq!(red.pivots, vec![0, 1, 2, 3]);
        let z = Mat::<Q>::zero(3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().rows, 5);
    }

    #[test]
    fn rref_hand_example() {
        // rank 2 by hand row reduction
        let m = Mat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_idempotent() {
        let mut rng = SplitMix64::new(5);
        for _ in 0..25 {
            let m = Mat::from_fn(4, 6, |_, _| q(rng.int_in(-4, 4)));
            let r1 = m.rref().mat;
            let r2 = r1.rref().mat;
            assert_eq!(r1, r2);
        }
    }

    #[test]
    fn kernel_hand_example() {
        // [[1,1,0],[0,1,1]] has kernel spanned by (1,-1,1)
        let m = Mat::from_int_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows, 1);
        let v = k.row(0);
        // proportional to (1,-1,1)
        let s = v[0].clone();
        assert_eq!(v[1], -s.clone());
        assert_eq!(v[2], s);
    }

    #[test]
    fn rank_nullity_random() {
        let mut rng = SplitMix64::new(17);
        for _ in 0..100 {
            let r = rng.int_in(1, 6) as usize;
            let c = rng.int_in(1, 6) as usize;
            let m = Mat::from_fn(r, c, |_, _| crate::scalar::qr(rng.int_in(-6, 6), rng.int_in(1, 3)));
            let red = m.rref();
            let k = m.kernel_basis();
            assert_eq!(red.rank + k.rows, c);
            for i in 0..k.rows {
                assert!(m.apply(k.row(i)).iter().all(|x| Field::is_zero(x)));
            }
        }
    }

    #[test]
    fn charpoly_examples() {
        // diag(1,2,3,-6)
        let d = Mat::from_int_rows(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, -6]]);
        let cp = d.charpoly();
        let expect = PolyQ::from_ints(&[-1, 1])
            .mul(&PolyQ::from_ints(&[-2, 1]))
            .mul(&PolyQ::from_ints(&[-3, 1]))
            .mul(&PolyQ::from_ints(&[6, 1]));
        assert_eq!(cp, expect);
        assert_eq!(d.minpoly(), expect);

        // regular nilpotent Jordan block: x^4 for both
        let jordan = Mat::from_int_rows(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let x4 = PolyQ::monomial(q(1), 4);
        assert_eq!(jordan.charpoly(), x4);
        assert_eq!(jordan.minpoly(), x4);

        // E12 + E34: charpoly x^4, minpoly x^2
        let two_blocks = Mat::from_int_rows(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        assert_eq!(two_blocks.charpoly(), x4);
        assert_eq!(two_blocks.minpoly(), PolyQ::monomial(q(1), 2));
    }

    #[test]
    fn minpoly_divides_charpoly_conjugation_invariant() {
        let mut rng = SplitMix64::new(23);
        for _ in 0..20 {
            let m = Mat::from_fn(4, 4, |_, _| q(rng.int_in(-3, 3)));
            let cp = m.charpoly();
            let mp = m.minpoly();
            let (_, rem) = cp.div_rem(&mp);
            assert!(rem.is_zero());
            // conjugate by a unimodular matrix
            let g = crate::lie::unimodular(4, &mut rng, 6);
            let gi = g.inverse().unwrap();
            let conj = g.mul(&m).mul(&gi);
            assert_eq!(conj.charpoly(), cp);
            assert_eq!(conj.minpoly(), mp);
        }
    }

    #[test]
    fn int_and_modp_rank_agree_with_rational() {
        let mut rng = SplitMix64::new(31);
        for _ in 0..30 {
            let r = rng.int_in(2, 7) as usize;
            let c = rng.int_in(2, 7) as usize;
            let ints: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.int_in(-5, 5)).collect()).collect();
            let qm = Mat::from_rows(ints.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect());
            let big: Vec<Vec<BigInt>> = ints.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let want = qm.rank();
            assert_eq!(int_rank(&big), want);
            assert_eq!(modp_rank(&ints, 1_000_000_007), want);
        }
    }

    #[test]
    fn det_matches_charpoly_constant() {
        let mut rng = SplitMix64::new(41);
        for _ in 0..20 {
            let m = Mat::from_fn(3, 3, |_, _| q(rng.int_in(-4, 4)));
            let det = m.det();
            let cp = m.charpoly();
            // det = (-1)^n * cp(0)
            assert_eq!(det, -cp.eval(&q(0)));
        }
    }
}
