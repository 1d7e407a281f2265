//! Dual numbers S[ε]/(ε²), the coefficient ring behind the tangent-space
//! functor: points of the group over S[ε] reducing to the identity mod ε
//! are exactly Lie algebra elements.

use std::fmt;

use crate::laurent::LaurentPoly;
use crate::ringaut::RingAut;
use crate::scalar::Scalar;

/// a + ε·b with a, b Laurent polynomials sharing one exponent denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualNumber {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
}

impl DualNumber {
    pub fn new(a: LaurentPoly, b: LaurentPoly) -> DualNumber {
        assert_eq!(a.denom(), b.denom(), "mixed exponent denominators");
        DualNumber { a, b }
    }

    pub fn zero(denom: u32) -> DualNumber {
        DualNumber::new(LaurentPoly::zero(denom), LaurentPoly::zero(denom))
    }

    pub fn one(denom: u32) -> DualNumber {
        DualNumber::new(LaurentPoly::one(denom), LaurentPoly::zero(denom))
    }

    pub fn from_real(a: LaurentPoly) -> DualNumber {
        let denom = a.denom();
        DualNumber::new(a, LaurentPoly::zero(denom))
    }

    pub fn eps(denom: u32) -> DualNumber {
        DualNumber::new(LaurentPoly::zero(denom), LaurentPoly::one(denom))
    }

    pub fn eps_times(b: LaurentPoly) -> DualNumber {
        let denom = b.denom();
        DualNumber::new(LaurentPoly::zero(denom), b)
    }

    pub fn denom(&self) -> u32 {
        self.a.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn add(&self, other: &DualNumber) -> DualNumber {
        DualNumber::new(self.a.add(&other.a), self.b.add(&other.b))
    }

    pub fn sub(&self, other: &DualNumber) -> DualNumber {
        DualNumber::new(self.a.sub(&other.a), self.b.sub(&other.b))
    }

    pub fn neg(&self) -> DualNumber {
        DualNumber::new(self.a.neg(), self.b.neg())
    }

    /// (a + εb)(c + εd) = ac + ε(ad + bc).
    pub fn mul(&self, other: &DualNumber) -> DualNumber {
        DualNumber::new(
            self.a.mul(&other.a),
            self.a.mul(&other.b).add(&self.b.mul(&other.a)),
        )
    }

    pub fn scale(&self, c: &Scalar) -> DualNumber {
        DualNumber::new(self.a.scale(c), self.b.scale(c))
    }

    pub fn scale_i64(&self, n: i64) -> DualNumber {
        DualNumber::new(self.a.scale_i64(n), self.b.scale_i64(n))
    }

    pub fn div_i64_exact(&self, n: i64) -> DualNumber {
        DualNumber::new(self.a.div_i64_exact(n), self.b.div_i64_exact(n))
    }

    /// Γ acts on S[ε] fixing ε.
    pub fn apply_aut(&self, g: &RingAut) -> DualNumber {
        DualNumber::new(g.apply(&self.a), g.apply(&self.b))
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "e*({})", self.b)
        } else {
            write!(f, "{} + e*({})", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_squares_to_zero() {
        let e = DualNumber::eps(1);
        assert!(e.mul(&e).is_zero());
    }

    #[test]
    fn first_order_expansion() {
        // (1 + εt)(1 − εt) = 1
        let denom = 1;
        let one = DualNumber::one(denom);
        let t = LaurentPoly::monomial(1, denom);
        let p = one.add(&DualNumber::eps_times(t.clone()));
        let q = one.sub(&DualNumber::eps_times(t));
        assert!(p.mul(&q).is_one());
    }

    #[test]
    fn automorphism_fixes_eps() {
        use crate::ringaut::{GaloisCase, RingSetup};
        let ii = RingSetup::new(GaloisCase::II);
        let x = DualNumber::new(LaurentPoly::monomial(1, 2), LaurentPoly::monomial(2, 2));
        let y = x.apply_aut(&ii.sigma);
        assert_eq!(y.a, LaurentPoly::monomial(1, 2).neg());
        assert_eq!(y.b, LaurentPoly::monomial(2, 2));
    }
}
