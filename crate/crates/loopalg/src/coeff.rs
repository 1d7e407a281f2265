//! One interface over the three coefficient rings that Lie elements and
//! group matrices are written against: exact field scalars, Laurent
//! polynomials, and dual numbers over them.
//!
//! Constructors carry the exponent denominator so generic code can mint
//! zeros and ones; scalar coefficients ignore it.

use std::fmt::{Debug, Display};

use crate::dual::DualNumber;
use crate::laurent::LaurentPoly;
use crate::ringaut::RingAut;
use crate::scalar::Scalar;

pub trait Coeff: Clone + PartialEq + Debug + Display {
    fn zero(denom: u32) -> Self;
    fn one(denom: u32) -> Self;
    fn from_i64(n: i64, denom: u32) -> Self;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale_i64(&self, n: i64) -> Self;
    /// Division by a nonzero integer; exact in all three rings.
    fn div_i64_exact(&self, n: i64) -> Self;
    fn mul_scalar(&self, c: &Scalar) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    /// Coefficient-wise action of a ring automorphism of S.
    fn apply_aut(&self, g: &RingAut) -> Self;
}

impl Coeff for Scalar {
    fn zero(_denom: u32) -> Scalar {
        Scalar::zero()
    }

    fn one(_denom: u32) -> Scalar {
        Scalar::one()
    }

    fn from_i64(n: i64, _denom: u32) -> Scalar {
        Scalar::from_int(n)
    }

    fn add(&self, other: &Scalar) -> Scalar {
        Scalar::add(self, other)
    }

    fn sub(&self, other: &Scalar) -> Scalar {
        Scalar::sub(self, other)
    }

    fn neg(&self) -> Scalar {
        Scalar::neg(self)
    }

    fn mul(&self, other: &Scalar) -> Scalar {
        Scalar::mul(self, other)
    }

    fn scale_i64(&self, n: i64) -> Scalar {
        Scalar::scale_i64(self, n)
    }

    fn div_i64_exact(&self, n: i64) -> Scalar {
        Scalar::div_i64_exact(self, n)
    }

    fn mul_scalar(&self, c: &Scalar) -> Scalar {
        Scalar::mul(self, c)
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }

    fn apply_aut(&self, g: &RingAut) -> Scalar {
        g.apply_scalar(self)
    }
}

impl Coeff for LaurentPoly {
    fn zero(denom: u32) -> LaurentPoly {
        LaurentPoly::zero(denom)
    }

    fn one(denom: u32) -> LaurentPoly {
        LaurentPoly::one(denom)
    }

    fn from_i64(n: i64, denom: u32) -> LaurentPoly {
        LaurentPoly::constant(Scalar::from_int(n), denom)
    }

    fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, other)
    }

    fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, other)
    }

    fn neg(&self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }

    fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, other)
    }

    fn scale_i64(&self, n: i64) -> LaurentPoly {
        LaurentPoly::scale_i64(self, n)
    }

    fn div_i64_exact(&self, n: i64) -> LaurentPoly {
        LaurentPoly::div_i64_exact(self, n)
    }

    fn mul_scalar(&self, c: &Scalar) -> LaurentPoly {
        LaurentPoly::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn is_one(&self) -> bool {
        LaurentPoly::is_one(self)
    }

    fn apply_aut(&self, g: &RingAut) -> LaurentPoly {
        g.apply(self)
    }
}

impl Coeff for DualNumber {
    fn zero(denom: u32) -> DualNumber {
        DualNumber::zero(denom)
    }

    fn one(denom: u32) -> DualNumber {
        DualNumber::one(denom)
    }

    fn from_i64(n: i64, denom: u32) -> DualNumber {
        DualNumber::from_real(LaurentPoly::constant(Scalar::from_int(n), denom))
    }

    fn add(&self, other: &DualNumber) -> DualNumber {
        DualNumber::add(self, other)
    }

    fn sub(&self, other: &DualNumber) -> DualNumber {
        DualNumber::sub(self, other)
    }

    fn neg(&self) -> DualNumber {
        DualNumber::neg(self)
    }

    fn mul(&self, other: &DualNumber) -> DualNumber {
        DualNumber::mul(self, other)
    }

    fn scale_i64(&self, n: i64) -> DualNumber {
        DualNumber::scale_i64(self, n)
    }

    fn div_i64_exact(&self, n: i64) -> DualNumber {
        DualNumber::div_i64_exact(self, n)
    }

    fn mul_scalar(&self, c: &Scalar) -> DualNumber {
        DualNumber::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        DualNumber::is_zero(self)
    }

    fn is_one(&self) -> bool {
        DualNumber::is_one(self)
    }

    fn apply_aut(&self, g: &RingAut) -> DualNumber {
        DualNumber::apply_aut(self, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_axioms_spot_check<C: Coeff>(denom: u32) {
        let two = C::from_i64(2, denom);
        let three = C::from_i64(3, denom);
        assert_eq!(two.add(&three), C::from_i64(5, denom));
        assert_eq!(two.mul(&three), C::from_i64(6, denom));
        assert_eq!(C::from_i64(6, denom).div_i64_exact(3), two);
        assert!(two.sub(&two).is_zero());
        assert!(C::one(denom).is_one());
        assert_eq!(two.neg(), C::from_i64(-2, denom));
    }

    #[test]
    fn all_three_rings_agree_on_integers() {
        ring_axioms_spot_check::<Scalar>(1);
        ring_axioms_spot_check::<LaurentPoly>(2);
        ring_axioms_spot_check::<DualNumber>(3);
    }
}
