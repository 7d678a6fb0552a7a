//! Rational functions in one parameter, the coefficient field for
//! degeneration curves.
//!
//! A value is `num/den` with `gcd(num, den) = 1` and `den` monic. The
//! valuation at the parameter value 0 (`ord0 num - ord0 den`) drives all
//! Grassmannian limits: a family is renormalized by a power of the
//! parameter so its lowest coordinate becomes finite and nonzero at 0.

use num::{One, Zero};
use std::fmt;

use crate::poly::PolyQ;
use crate::scalar::Q;

/// Rational function num/den over Q; den is monic and coprime to num.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    pub num: PolyQ,
    pub den: PolyQ,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl PolyQ {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeffs[0].is_one()
    }
}

impl RatFunc {
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: PolyQ::zero(),
                den: PolyQ::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let lead = den.leading();
        if !lead.is_one() {
            let inv = Q::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: PolyQ::zero(),
            den: PolyQ::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: PolyQ::one(),
            den: PolyQ::one(),
        }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFunc {
            num: p,
            den: PolyQ::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        RatFunc::from_poly(PolyQ::constant(c))
    }

    /// The parameter itself.
    pub fn t() -> Self {
        RatFunc::from_poly(PolyQ::x())
    }

    /// `t^k` for any integer k (negative powers allowed).
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc::from_poly(PolyQ::monomial(Q::one(), k as usize))
        } else {
            RatFunc {
                num: PolyQ::one(),
                den: PolyQ::monomial(Q::one(), (-k) as usize),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        assert!(!other.is_zero(), "division by zero rational function");
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Valuation at 0; `None` for the zero function (valuation +infinity).
    pub fn valuation(&self) -> Option<i64> {
        let vn = self.num.ord0()? as i64;
        let vd = self.den.ord0().unwrap() as i64;
        Some(vn - vd)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> RatFunc {
        self.mul(&RatFunc::t_pow(k))
    }

    /// Evaluates at a parameter value where the denominator is nonzero.
    pub fn eval(&self, t: &Q) -> Option<Q> {
        let d = self.den.eval(t);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t) / d)
        }
    }

    /// Value at 0; requires valuation >= 0.
    pub fn eval_at_zero(&self) -> Q {
        if self.is_zero() {
            return Q::zero();
        }
        let v = self.valuation().unwrap();
        assert!(v >= 0, "pole at 0");
        if v > 0 {
            return Q::zero();
        }
        // Clear the common power of t that num and den may share with 0.
        let k = self.num.ord0().unwrap().min(self.den.ord0().unwrap());
        let num = self.num.shift_down(k);
        let den = self.den.shift_down(k);
        num.coeffs[0].clone() / den.coeffs[0].clone()
    }
}
