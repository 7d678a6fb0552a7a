//! Subspaces as points of Grassmannians: Plücker coordinates, projective
//! comparison, torus invariance, and limits of one-parameter families.
//!
//! Limits are taken in Plücker coordinates: the family's coordinate vector
//! over rational functions is divided by the minimal power of the parameter
//! and evaluated at 0, which always produces the coordinate vector of an
//! honest subspace (re-verified by reconstructing a basis and re-embedding).
//! Plücker indices run over k-subsets of the fixed `sl_n` basis in
//! colexicographic order.

use crate::lie::{self, LieSubspace};
use crate::mat::{Field, Mat};
use crate::ratfunc::RatFunc;
use crate::scalar::{q, Q};
use crate::util::{binomial, colex_rank, subsets_colex};
use crate::{Error, Result};

/// Plücker coordinates of a k-dimensional subspace of an N-dimensional
/// space, indexed by colex-ordered k-subsets. Defined up to global scale.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PluckerVector {
    pub ambient: usize,
    pub k: usize,
    pub coords: Vec<Q>,
}

impl PluckerVector {
    /// Projective equality: the two coordinate vectors are proportional.
    pub fn projectively_equal(&self, other: &PluckerVector) -> bool {
        if self.ambient != other.ambient || self.k != other.k {
            return false;
        }
        proportional(&self.coords, &other.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Are two vectors proportional (nonzero scalings allowed)?
pub fn proportional<T: Field>(a: &[T], b: &[T]) -> bool {
    assert_eq!(a.len(), b.len());
    let Some(i) = a.iter().position(|x| !Field::is_zero(x)) else {
        return b.iter().all(|x| Field::is_zero(x));
    };
    if Field::is_zero(&b[i]) {
        return false;
    }
    // cross-multiply: a[j] * b[i] == b[j] * a[i]
    for j in 0..a.len() {
        if a[j].mul(&b[i]) != b[j].mul(&a[i]) {
            return false;
        }
    }
    true
}

/// All maximal minors of a k x N coordinate matrix, in colex subset order.
pub fn wedge_coordinates<T: Field>(rows: &Mat<T>) -> Vec<T> {
    let k = rows.rows;
    let n = rows.cols;
    subsets_colex(n, k).iter().map(|s| minor(rows, s)).collect()
}

fn minor<T: Field>(m: &Mat<T>, cols: &[usize]) -> T {
    let k = cols.len();
    let sub = Mat::from_fn(k, k, |r, c| m.at(r, cols[c]).clone());
    sub.det()
}

/// Plücker vector of a traceless subspace, via the k x k minors of its
/// canonical `sl_n`-coordinate basis.
pub fn plucker(s: &LieSubspace) -> PluckerVector {
    let rows = s.sl_coordinate_rows();
    PluckerVector {
        ambient: rows.cols,
        k: rows.rows,
        coords: wedge_coordinates(&rows),
    }
}

/// A one-parameter family of k-dimensional subspaces of `sl_n`, given by
/// basis rows of n x n matrices with rational-function entries.
#[derive(Clone, Debug)]
pub struct CurveSubspace {
    pub n: usize,
    /// Basis elements as n x n matrices over rational functions.
    pub basis: Vec<Mat<RatFunc>>,
}

impl CurveSubspace {
    pub fn k(&self) -> usize {
        self.basis.len()
    }

    /// Builds the family from matrices over rational functions, requiring
    /// each to be traceless as a rational function.
    pub fn new(n: usize, basis: Vec<Mat<RatFunc>>) -> Result<CurveSubspace> {
        for (i, m) in basis.iter().enumerate() {
            if m.rows != n || m.cols != n {
                return Err(Error::Dimension(format!("curve basis element {i} is not {n}x{n}")));
            }
            let tr = (0..n).fold(RatFunc::zero(), |acc, d| acc.add(m.at(d, d)));
            if !tr.is_zero() {
                return Err(Error::Dimension(format!("curve basis element {i} has nonzero trace")));
            }
        }
        Ok(CurveSubspace { n, basis })
    }

    /// The family evaluated at a parameter value where all denominators
    /// are nonzero.
    pub fn eval(&self, t: &Q) -> Option<LieSubspace> {
        let mats: Option<Vec<Mat<Q>>> = self
            .basis
            .iter()
            .map(|m| {
                let mut out = Mat::zero(self.n, self.n);
                for r in 0..self.n {
                    for c in 0..self.n {
                        *out.at_mut(r, c) = m.at(r, c).eval(t)?;
                    }
                }
                Some(out)
            })
            .collect();
        Some(LieSubspace::span(self.n, &mats?))
    }

    /// First parameter value from 1, 2, 3, ... where the family has full
    /// rank and no denominator vanishes.
    pub fn generic_parameter(&self) -> Q {
        for t0 in 1..100 {
            let t = q(t0);
            if let Some(s) = self.eval(&t) {
                if s.dim() == self.k() {
                    return t;
                }
            }
        }
        panic!("no generic parameter value found in 1..100");
    }

    /// `sl_n` coordinates of the basis rows, as a k x (n^2-1) matrix over
    /// rational functions.
    pub fn sl_coordinate_rows(&self) -> Mat<RatFunc> {
        let n = self.n;
        let rows: Vec<Vec<RatFunc>> = self
            .basis
            .iter()
            .map(|m| {
                let mut coords = Vec::with_capacity(lie::sl_dim(n));
                for (i, j) in lie::offdiag_pairs(n) {
                    coords.push(m.at(i, j).clone());
                }
                let mut acc = RatFunc::zero();
                for i in 0..n - 1 {
                    acc = acc.add(m.at(i, i));
                    coords.push(acc.clone());
                }
                coords
            })
            .collect();
        Mat::from_rows(rows)
    }
}

/// Limit of the family at parameter 0, taken in Plücker coordinates:
/// compute the coordinate vector over rational functions, divide by the
/// minimal valuation power of the parameter, evaluate at 0, and extract a
/// basis of the limiting subspace. Errors if every Plücker coordinate
/// vanishes identically (a rank drop along the whole family).
pub fn limit_subspace(curve: &CurveSubspace) -> Result<LieSubspace> {
    let rows = curve.sl_coordinate_rows();
    let coords = wedge_coordinates(&rows);
    let min_val = coords
        .iter()
        .filter_map(|c| c.valuation())
        .min()
        .ok_or_else(|| Error::MalformedCurve("all Plücker coordinates vanish identically".to_string()))?;
    let limit: Vec<Q> = coords.iter().map(|c| c.shift(-min_val).eval_at_zero()).collect();
    let plk = PluckerVector {
        ambient: rows.cols,
        k: curve.k(),
        coords: limit,
    };
    let sub = subspace_from_plucker(curve.n, &plk)?;
    // Certify: re-embedding the recovered subspace must reproduce the
    // limiting coordinates projectively (this checks decomposability).
    let back = plucker(&sub);
    if !back.projectively_equal(&plk) {
        return Err(Error::MalformedCurve(
            "limiting Plücker vector is not decomposable".to_string(),
        ));
    }
    Ok(sub)
}

/// Reconstructs the subspace from a decomposable Plücker vector: with S0
/// the first subset carrying a nonzero coordinate, row r of a basis has
/// entries `v_r[j] = ± P(S0 with its r-th element replaced by j)`.
pub fn subspace_from_plucker(n: usize, p: &PluckerVector) -> Result<LieSubspace> {
    let subsets = subsets_colex(p.ambient, p.k);
    let s0_idx = p
        .coords
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::MalformedCurve("zero Plücker vector".to_string()))?;
    let s0 = &subsets[s0_idx];
    let mut rows = Vec::with_capacity(p.k);
    for r in 0..p.k {
        let mut row = vec![q(0); p.ambient];
        for j in 0..p.ambient {
            if let Some(pos) = s0.iter().position(|&x| x == j) {
                row[j] = if pos == r { p.coords[s0_idx].clone() } else { q(0) };
                continue;
            }
            // Replace the r-th element of S0 by j; sort and track the sign.
            let mut t: Vec<usize> = s0.clone();
            t[r] = j;
            let mut sign = 1i64;
            let mut idx = r;
            while idx + 1 < t.len() && t[idx] > t[idx + 1] {
                t.swap(idx, idx + 1);
                idx += 1;
                sign = -sign;
            }
            while idx > 0 && t[idx - 1] > t[idx] {
                t.swap(idx - 1, idx);
                idx -= 1;
                sign = -sign;
            }
            row[j] = p.coords[colex_rank(&t)].clone() * q(sign);
        }
        rows.push(row);
    }
    let mats: Vec<Mat<Q>> = rows.iter().map(|row| lie::sl_from_coords(n, row)).collect();
    let sub = LieSubspace::span(n, &mats);
    if sub.dim() != p.k {
        return Err(Error::MalformedCurve(format!(
            "Plücker reconstruction produced dimension {} instead of {}",
            sub.dim(),
            p.k
        )));
    }
    Ok(sub)
}

/// Is the subspace a direct sum of its intersections with the torus weight
/// spaces (the root lines `E_ij` and the diagonal Cartan)? Checked by
/// projecting every basis vector onto each weight component and testing
/// membership — exact rank counting, no eigen-decomposition.
pub fn torus_invariant(s: &LieSubspace) -> bool {
    let n = s.n;
    for m in s.basis_matrices() {
        for (i, j) in lie::offdiag_pairs(n) {
            if !m.at(i, j).is_zero() {
                let comp = lie::e_unit(n, i, j).scale(m.at(i, j));
                if !s.contains(&comp) {
                    return false;
                }
            }
        }
        let mut d = Mat::zero(n, n);
        for i in 0..n {
            *d.at_mut(i, i) = m.at(i, i).clone();
        }
        if !s.contains(&d) {
            return false;
        }
    }
    true
}

/// Number of Plücker coordinates for a subspace of this shape.
pub fn plucker_len(ambient: usize, k: usize) -> usize {
    binomial(ambient, k)
}
