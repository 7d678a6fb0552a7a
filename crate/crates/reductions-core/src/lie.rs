//! Structure of `gl_n` and `sl_n`: brackets, the projection from the
//! identity, centralizers, regularity, and Jordan data.
//!
//! Elements of `gl_n` are square matrices over Q ([`Mat<Q>`]); subspaces
//! carry a canonical reduced basis so that equality of subspaces is
//! equality of canonical forms. The fixed coordinate basis of `sl_n` is:
//! the off-diagonal matrix units `E_ij` (`i != j`) in row-major order,
//! followed by `H_i = E_ii - E_{i+1,i+1}` for `i = 1..n-1`. All wedge-power
//! modules downstream are indexed against this order.
//!
//! Jordan data is computed per squarefree multiplicity class of the
//! characteristic polynomial via gcd towers and rank sequences; no root
//! extraction is ever performed, so everything stays in Q even when the
//! eigenvalues are irrational.


use crate::mat::Mat;
use crate::poly::PolyQ;
use crate::scalar::{q, Q};
use crate::util::SplitMix64;
use crate::{Error, Result};

/// Ambient algebra selector for centralizers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ambient {
    Gl,
    Sl,
}

/// Matrix unit `E_ij` (1 at row i, column j), n x n, 0-based.
pub fn e_unit(n: usize, i: usize, j: usize) -> Mat<Q> {
    let mut m = Mat::zero(n, n);
    *m.at_mut(i, j) = q(1);
    m
}

/// Diagonal matrix from integer entries.
pub fn diag(entries: &[i64]) -> Mat<Q> {
    let n = entries.len();
    Mat::from_fn(n, n, |r, c| if r == c { q(entries[r]) } else { q(0) })
}

/// Lie bracket `xy - yx`.
pub fn bracket(x: &Mat<Q>, y: &Mat<Q>) -> Mat<Q> {
    x.mul(y).sub(&y.mul(x))
}

/// Projection from the identity: `x - (trace x / n) I`.
pub fn project_sl(x: &Mat<Q>) -> Mat<Q> {
    let n = x.rows;
    let shift = x.trace() / q(n as i64);
    let mut out = x.clone();
    for i in 0..n {
        let v = out.at(i, i).clone() - shift.clone();
        *out.at_mut(i, i) = v;
    }
    out
}

/// Dimension of `sl_n`.
pub fn sl_dim(n: usize) -> usize {
    n * n - 1
}

/// Index pairs of the off-diagonal part of the `sl_n` basis, row-major.
pub fn offdiag_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * n - n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                v.push((i, j));
            }
        }
    }
    v
}

/// The fixed basis of `sl_n` as matrices: `E_ij` (i != j) then `H_i`.
pub fn sl_basis(n: usize) -> Vec<Mat<Q>> {
    let mut out: Vec<Mat<Q>> = offdiag_pairs(n).into_iter().map(|(i, j)| e_unit(n, i, j)).collect();
    for i in 0..n - 1 {
        let mut h = Mat::zero(n, n);
        *h.at_mut(i, i) = q(1);
        *h.at_mut(i + 1, i + 1) = q(-1);
        out.push(h);
    }
    out
}

/// Coordinates of a traceless matrix in the fixed `sl_n` basis.
pub fn sl_coords(x: &Mat<Q>) -> Vec<Q> {
    let n = x.rows;
    assert!(crate::mat::Field::is_zero(&x.trace()), "sl coordinates of a non-traceless matrix");
    let mut coords = Vec::with_capacity(sl_dim(n));
    for (i, j) in offdiag_pairs(n) {
        coords.push(x.at(i, j).clone());
    }
    // H-coefficients are prefix sums of the diagonal.
    let mut acc = q(0);
    for i in 0..n - 1 {
        acc += x.at(i, i).clone();
        coords.push(acc.clone());
    }
    coords
}

/// Inverse of [`sl_coords`].
pub fn sl_from_coords(n: usize, coords: &[Q]) -> Mat<Q> {
    assert_eq!(coords.len(), sl_dim(n));
    let mut m = Mat::zero(n, n);
    for (k, (i, j)) in offdiag_pairs(n).into_iter().enumerate() {
        *m.at_mut(i, j) = coords[k].clone();
    }
    let h = &coords[n * n - n..];
    for i in 0..n {
        let hi = if i < n - 1 { h[i].clone() } else { q(0) };
        let prev = if i == 0 { q(0) } else { h[i - 1].clone() };
        *m.at_mut(i, i) = hi - prev;
    }
    m
}

/// Flattens an n x n matrix row-major into a plain coordinate vector.
pub fn flatten(x: &Mat<Q>) -> Vec<Q> {
    x.data.clone()
}

/// A subspace of `gl_n` (usually of `sl_n`) given by a basis of flattened
/// matrices, stored in canonical reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieSubspace {
    pub n: usize,
    canonical: Mat<Q>,
}

impl LieSubspace {
    /// Builds the subspace spanned by the given matrices; the stored basis
    /// is the RREF of their flattened span (rows of zero are dropped).
    pub fn span(n: usize, mats: &[Mat<Q>]) -> LieSubspace {
        let rows: Vec<Vec<Q>> = mats.iter().map(flatten).collect();
        let red = Mat::from_rows(rows).rref();
        let basis = Mat::from_fn(red.rank, n * n, |r, c| red.mat.at(r, c).clone());
        LieSubspace { n, canonical: basis }
    }

    pub fn dim(&self) -> usize {
        self.canonical.rows
    }

    /// Canonical basis as matrices.
    pub fn basis_matrices(&self) -> Vec<Mat<Q>> {
        (0..self.dim())
            .map(|r| Mat {
                rows: self.n,
                cols: self.n,
                data: self.canonical.row(r).to_vec(),
            })
            .collect()
    }

    /// The canonical flattened basis (dim x n^2).
    pub fn canonical_basis(&self) -> &Mat<Q> {
        &self.canonical
    }

    pub fn contains(&self, x: &Mat<Q>) -> bool {
        self.canonical.row_space_contains(&flatten(x))
    }

    pub fn is_traceless(&self) -> bool {
        self.basis_matrices().iter().all(|m| crate::mat::Field::is_zero(&m.trace()))
    }

    pub fn is_abelian(&self) -> bool {
        let mats = self.basis_matrices();
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                if !bracket(&mats[i], &mats[j]).is_zero_matrix() {
                    return false;
                }
            }
        }
        true
    }

    /// Coordinates of the canonical basis in the fixed `sl_n` basis
    /// (dim x (n^2-1)); requires a traceless subspace.
    pub fn sl_coordinate_rows(&self) -> Mat<Q> {
        let rows: Vec<Vec<Q>> = self.basis_matrices().iter().map(sl_coords).collect();
        Mat::from_rows(rows)
    }

    /// Conjugated subspace `g . self . g^{-1}`.
    pub fn conjugate(&self, g: &Mat<Q>) -> LieSubspace {
        let gi = g.inverse().expect("conjugator must be invertible");
        let mats: Vec<Mat<Q>> = self.basis_matrices().iter().map(|m| g.mul(m).mul(&gi)).collect();
        LieSubspace::span(self.n, &mats)
    }

    /// Transpose of every element; exchanges the primed and double-primed
    /// orbit families.
    pub fn transpose_subspace(&self) -> LieSubspace {
        let mats: Vec<Mat<Q>> = self.basis_matrices().iter().map(|m| m.transpose()).collect();
        LieSubspace::span(self.n, &mats)
    }

    /// A deterministic element: combination of the canonical basis with the
    /// given integer coefficients.
    pub fn element(&self, coeffs: &[i64]) -> Mat<Q> {
        assert_eq!(coeffs.len(), self.dim());
        let mut acc = Mat::zero(self.n, self.n);
        for (c, m) in coeffs.iter().zip(self.basis_matrices()) {
            acc = acc.add(&m.scale(&q(*c)));
        }
        acc
    }
}

/// Centralizer of `x` in `gl_n` or `sl_n`, as a canonical subspace: the
/// solution space of the linear system `[x, y] = 0` (plus `trace y = 0`
/// for `sl`).
pub fn centralizer(x: &Mat<Q>, ambient: Ambient) -> LieSubspace {
    let n = x.rows;
    let dim = n * n;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    // [x, y] = 0 coordinatewise: row per (output entry), column per y entry.
    // [x,y]_{rc} = sum_k x_{rk} y_{kc} - y_{rk} x_{kc}
    for r in 0..n {
        for c in 0..n {
            let mut row = vec![q(0); dim];
            for k in 0..n {
                row[k * n + c] += x.at(r, k).clone();
                row[r * n + k] -= x.at(k, c).clone();
            }
            rows.push(row);
        }
    }
    if ambient == Ambient::Sl {
        let mut tr = vec![q(0); dim];
        for i in 0..n {
            tr[i * n + i] = q(1);
        }
        rows.push(tr);
    }
    let kernel = Mat::from_rows(rows).kernel_basis();
    let mats: Vec<Mat<Q>> = (0..kernel.rows)
        .map(|r| Mat {
            rows: n,
            cols: n,
            data: kernel.row(r).to_vec(),
        })
        .collect();
    LieSubspace::span(n, &mats)
}

/// A matrix is regular exactly when its centralizer in `gl_n` has the
/// minimal dimension n (one Jordan block per eigenvalue).
pub fn is_regular(x: &Mat<Q>) -> bool {
    centralizer(x, Ambient::Gl).dim() == x.rows
}

/// Multiplicity partition of the eigenvalues of `x` (parts sorted
/// decreasingly), straight from the gcd tower of the characteristic
/// polynomial.
pub fn multiplicity_partition(x: &Mat<Q>) -> Vec<usize> {
    x.charpoly().multiplicity_partition()
}

/// Jordan data for one squarefree multiplicity class of the characteristic
/// polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JordanClass {
    /// Monic squarefree factor grouping the eigenvalues of this class.
    pub factor: PolyQ,
    /// Multiplicity of each of those eigenvalues in the charpoly.
    pub multiplicity: usize,
    /// Nullity sequence of `factor(x)^j`, j = 1..multiplicity.
    pub nullities: Vec<usize>,
    /// Jordan block sizes per eigenvalue of the class, when they are
    /// uniform across the class (always the case for a single eigenvalue).
    pub blocks_per_root: Option<Vec<usize>>,
}

/// Jordan data of `x`, one entry per squarefree multiplicity class, in
/// decreasing multiplicity order.
pub fn jordan_classes(x: &Mat<Q>) -> Vec<JordanClass> {
    let cp = x.charpoly();
    let mut classes = Vec::new();
    for (factor, mult) in cp.squarefree_decomposition() {
        let deg = factor.degree().unwrap();
        let roots = deg; // number of eigenvalues in this class over the closure
        let fx = eval_poly_at_matrix(&factor, x);
        let mut nullities = Vec::new();
        let mut pw = Mat::<Q>::identity(x.rows);
        for _ in 0..mult {
            pw = pw.mul(&fx);
            nullities.push(x.rows - pw.rank());
        }
        // blocks >= j (summed over the class) = nullity(f^j) - nullity(f^{j-1}),
        // in multiples of deg when uniform.
        let mut blocks = Vec::new();
        let mut uniform = true;
        let mut prev = 0usize;
        let mut per_size = Vec::new();
        for &nj in &nullities {
            per_size.push(nj - prev);
            prev = nj;
        }
        for j in 0..per_size.len() {
            let at_least_j = per_size[j];
            if at_least_j % roots != 0 {
                uniform = false;
                break;
            }
            let next = per_size.get(j + 1).copied().unwrap_or(0);
            for _ in 0..(at_least_j - next) / roots {
                blocks.push(j + 1);
            }
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        classes.push(JordanClass {
            factor,
            multiplicity: mult,
            nullities,
            blocks_per_root: if uniform { Some(blocks) } else { None },
        });
    }
    classes.sort_by(|a, b| b.multiplicity.cmp(&a.multiplicity).then(a.factor.coeffs.len().cmp(&b.factor.coeffs.len())));
    classes
}

fn eval_poly_at_matrix(p: &PolyQ, x: &Mat<Q>) -> Mat<Q> {
    let n = x.rows;
    let mut acc = Mat::<Q>::zero(n, n);
    for c in p.coeffs.iter().rev() {
        acc = acc.mul(x);
        for i in 0..n {
            let v = acc.at(i, i).clone() + c.clone();
            *acc.at_mut(i, i) = v;
        }
    }
    acc
}

/// Nilpotency check (exact): `x^n = 0`.
pub fn is_nilpotent(x: &Mat<Q>) -> bool {
    let n = x.rows;
    let mut pw = x.clone();
    for _ in 1..n {
        if pw.is_zero_matrix() {
            return true;
        }
        pw = pw.mul(x);
    }
    pw.is_zero_matrix()
}

/// True exactly when the flattened vectors `x, p(x^2), ..., p(x^{n-1})` are
/// linearly dependent, i.e. when the traceless `x` lies on the cone over
/// the variety of non-regular matrices.
pub fn is_nonregular_projected(x: &Mat<Q>) -> Result<bool> {
    let n = x.rows;
    if !crate::mat::Field::is_zero(&x.trace()) {
        return Err(Error::Dimension("expected a traceless matrix".to_string()));
    }
    let mut rows = Vec::new();
    let mut pw = x.clone();
    rows.push(flatten(&pw));
    for _ in 2..n {
        pw = pw.mul(x);
        rows.push(flatten(&project_sl(&pw)));
    }
    Ok(Mat::from_rows(rows).rank() < n - 1)
}

/// Deterministic unimodular matrix: a product of `steps` elementary shears
/// with small integer offsets, so the exact inverse is integral too.
pub fn unimodular(n: usize, rng: &mut SplitMix64, steps: usize) -> Mat<Q> {
    let mut g = Mat::<Q>::identity(n);
    for _ in 0..steps {
        let i = rng.int_in(0, n as i64 - 1) as usize;
        let mut j = rng.int_in(0, n as i64 - 1) as usize;
        if i == j {
            j = (j + 1) % n;
        }
        let c = rng.nonzero_in(2);
        let mut shear = Mat::<Q>::identity(n);
        *shear.at_mut(i, j) = q(c);
        g = g.mul(&shear);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_sl2_relation() {
        let n = 4;
        let e12 = e_unit(n, 0, 1);
        let e21 = e_unit(n, 1, 0);
        let h = bracket(&e12, &e21);
        let expect = diag(&[1, -1, 0, 0]);
        assert_eq!(h, expect);
        assert!(bracket(&e12, &e12).is_zero_matrix());
        // [diag(1,2,3,-6), E12] = (1-2) E12
        let d = diag(&[1, 2, 3, -6]);
        assert_eq!(bracket(&d, &e12), e12.scale(&q(-1)));
    }

    #[test]
    fn project_sl_examples() {
        let n = 4;
        let id = Mat::<Q>::identity(n);
        assert!(project_sl(&id).is_zero_matrix());
        let x = e_unit(n, 0, 1);
        assert_eq!(project_sl(&x), x);
        let d = diag(&[1, 0, 0, 0]);
        let p = project_sl(&d);
        assert_eq!(p.at(0, 0), &crate::scalar::qr(3, 4));
        assert_eq!(p.at(1, 1), &crate::scalar::qr(-1, 4));
        assert!(crate::mat::Field::is_zero(&p.trace()));
    }

    #[test]
    fn sl_coords_roundtrip() {
        let mut rng = SplitMix64::new(9);
        for n in [3usize, 4, 5] {
            for _ in 0..10 {
                let mut m = Mat::from_fn(n, n, |_, _| q(rng.int_in(-5, 5)));
                m = project_sl(&m);
                let coords = sl_coords(&m);
                assert_eq!(coords.len(), sl_dim(n));
                assert_eq!(sl_from_coords(n, &coords), m);
            }
        }
    }

    #[test]
    fn centralizer_dimensions() {
        // regular semisimple: dim 4 in gl_4
        let d = diag(&[1, 2, 3, -6]);
        assert_eq!(centralizer(&d, Ambient::Gl).dim(), 4);
        assert_eq!(centralizer(&d, Ambient::Sl).dim(), 3);
        assert!(is_regular(&d));
        // E12 in gl_4: partition (2,1,1) gives sum of squared conjugate parts = 10
        let x = e_unit(4, 0, 1);
        assert_eq!(centralizer(&x, Ambient::Gl).dim(), 10);
        assert!(!is_regular(&x));
        // regular nilpotent Jordan block
        let jordan = e_unit(4, 0, 1).add(&e_unit(4, 1, 2)).add(&e_unit(4, 2, 3));
        assert_eq!(centralizer(&jordan, Ambient::Gl).dim(), 4);
        assert!(is_regular(&jordan));
    }

    #[test]
    fn jordan_examples() {
        // E12 + E34: not regular, nilpotent partition (2,2)
        let x = e_unit(4, 0, 1).add(&e_unit(4, 2, 3));
        assert!(!is_regular(&x));
        assert!(is_nilpotent(&x));
        let classes = jordan_classes(&x);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].blocks_per_root, Some(vec![2, 2]));
        // regular nilpotent: partition (4)
        let jordan = e_unit(4, 0, 1).add(&e_unit(4, 1, 2)).add(&e_unit(4, 2, 3));
        assert!(is_regular(&jordan));
        let classes = jordan_classes(&jordan);
        assert_eq!(classes[0].blocks_per_root, Some(vec![4]));
        // degrees times multiplicities sum to n
        let mut rng = SplitMix64::new(77);
        for _ in 0..20 {
            let m = project_sl(&Mat::from_fn(4, 4, |_, _| q(rng.int_in(-2, 2))));
            let total: usize = jordan_classes(&m)
                .iter()
                .map(|c| c.factor.degree().unwrap() * c.multiplicity)
                .sum();
            assert_eq!(total, 4);
        }
    }

    #[test]
    fn nonregular_projected_examples() {
        assert!(is_nonregular_projected(&diag(&[1, 1, -1, -1])).unwrap());
        assert!(!is_nonregular_projected(&diag(&[1, 2, 3, -6])).unwrap());
        let jordan = e_unit(4, 0, 1).add(&e_unit(4, 1, 2)).add(&e_unit(4, 2, 3));
        assert!(!is_nonregular_projected(&jordan).unwrap());
    }

    #[test]
    fn nonregular_projected_agrees_with_regularity() {
        // The projected-powers dependence detects exactly non-regularity:
        // it holds iff the minimal polynomial has degree < n, iff the
        // centralizer is bigger than minimal. (For matrices with a repeated
        // eigenvalue in a single Jordan block, the characteristic
        // polynomial is non-squarefree yet the powers stay independent, so
        // the test is against regularity, not algebraic multiplicity.)
        let mut rng = SplitMix64::new(101);
        let mut seen_nonregular = 0;
        for k in 0..200 {
            let m = if k % 4 == 0 {
                // include semisimple samples with forced collisions
                let a = rng.int_in(-2, 2);
                let b = rng.int_in(-2, 2);
                diag(&[a, b, -a, -b])
            } else {
                project_sl(&Mat::from_fn(4, 4, |_, _| q(rng.int_in(-2, 2))))
            };
            let dep = is_nonregular_projected(&m).unwrap();
            assert_eq!(dep, !is_regular(&m));
            assert_eq!(dep, m.minpoly().degree().unwrap() < 4);
            if dep {
                // non-regular forces a repeated eigenvalue
                assert!(multiplicity_partition(&m).iter().any(|&p| p >= 2));
                seen_nonregular += 1;
            }
        }
        // the sample must exercise both branches
        assert!(seen_nonregular > 0 && seen_nonregular < 200);
    }

    #[test]
    fn centralizer_dim_is_conjugation_invariant() {
        let mut rng = SplitMix64::new(55);
        for _ in 0..10 {
            let m = Mat::from_fn(4, 4, |_, _| q(rng.int_in(-2, 2)));
            let g = unimodular(4, &mut rng, 8);
            let gi = g.inverse().unwrap();
            let c1 = centralizer(&m, Ambient::Gl).dim();
            let c2 = centralizer(&g.mul(&m).mul(&gi), Ambient::Gl).dim();
            assert_eq!(c1, c2);
        }
    }

    #[test]
    fn subspace_canonical_equality() {
        let a = LieSubspace::span(4, &[e_unit(4, 0, 1), e_unit(4, 0, 2)]);
        let b = LieSubspace::span(
            4,
            &[
                e_unit(4, 0, 1).add(&e_unit(4, 0, 2)),
                e_unit(4, 0, 1).sub(&e_unit(4, 0, 2)),
            ],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.is_abelian());
        assert!(a.contains(&e_unit(4, 0, 2)));
        assert!(!a.contains(&e_unit(4, 1, 0)));
    }
}
