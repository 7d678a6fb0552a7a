//! Univariate polynomials over the rationals, lowest degree first.
//!
//! Provides the arithmetic needed by rational functions and by the
//! root-multiplicity machinery: division with remainder, monic gcd, Yun's
//! squarefree decomposition, and the gcd-tower multiplicity partition. No
//! root extraction happens anywhere; everything stays in Q.

use num::{One, Zero};
use std::fmt;

use crate::scalar::{format_q, q, Q};

/// Dense univariate polynomial over Q; `coeffs[i]` multiplies `x^i`.
/// Trailing zero coefficients are trimmed, so `coeffs.last()` is nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq)]
pub struct PolyQ {
    pub coeffs: Vec<Q>,
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_q(c),
                1 => format!("{}*x", format_q(c)),
                _ => format!("{}*x^{}", format_q(c), i),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut p = PolyQ { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        PolyQ { coeffs }
    }

    /// Polynomial `x`.
    pub fn x() -> Self {
        PolyQ::monomial(Q::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        let mut p = PolyQ { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyQ::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree and returns `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    /// Order of vanishing at 0 (index of the first nonzero coefficient).
    pub fn ord0(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
            coeffs.push(a + b);
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Q) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Q::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyQ { coeffs }
    }

    /// Divides by `x^k`; requires ord0 >= k.
    pub fn shift_down(&self, k: usize) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        assert!(self.ord0().unwrap() >= k, "shift_down below valuation");
        PolyQ {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading();
        let mut rem = self.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading() / &lead;
            let k = rd - dd;
            quot[k] = c.clone();
            let sub = divisor.mul(&PolyQ::monomial(c, k));
            rem = rem.sub(&sub);
        }
        (PolyQ::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &PolyQ) -> PolyQ {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic normalization (zero stays zero).
    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let inv = Q::one() / self.leading();
        self.scale(&inv)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> PolyQ {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        PolyQ::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * q(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> PolyQ {
        let mut acc = PolyQ::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Squarefree decomposition by Yun's algorithm: returns pairs
    /// `(q_k, k)` with `self = lc * prod q_k^k`, each `q_k` monic squarefree
    /// and nonconstant, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyQ, usize)> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut out = Vec::new();
        let mut k = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            let ak = b.gcd(&d);
            if ak.degree().unwrap_or(0) > 0 {
                out.push((ak.clone(), k));
            }
            b = b.div_exact(&ak);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&ak);
            k += 1;
        }
        out
    }

    /// Multiset of root multiplicities over the algebraic closure, computed
    /// by the gcd tower `g_0 = f`, `g_{k+1} = gcd(g_k, g_k')`: the number of
    /// roots of multiplicity >= k is `deg g_{k-1} - deg g_k`. Returns the
    /// partition sorted in decreasing order. Constant polynomials give an
    /// empty multiset.
    pub fn multiplicity_partition(&self) -> Vec<usize> {
        assert!(!self.is_zero(), "multiplicity partition of zero polynomial");
        if self.degree().unwrap() == 0 {
            return Vec::new();
        }
        let mut g = self.monic();
        let mut at_least = Vec::new(); // at_least[k-1] = #roots of multiplicity >= k
        loop {
            let next = g.gcd(&g.derivative());
            let drop = g.degree().unwrap() - next.degree().unwrap_or(0);
            if drop == 0 {
                break;
            }
            at_least.push(drop);
            g = next;
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
        }
        let mut parts = Vec::new();
        for (k, &count) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(count - next) {
                parts.push(k + 1);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}
