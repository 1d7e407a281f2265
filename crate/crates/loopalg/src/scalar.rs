//! Exact scalars: rationals and elements of ℚ(ξ) with ξ² + ξ + 1 = 0.

use std::fmt;

use num::rational::BigRational;
use num::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Which field a scalar is considered to live in. `Rat` scalars always have
/// zero ξ-part; the tag is joined (ℚ ⊂ ℚ(ξ)) under arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum FieldTag {
    Rat,
    Cyc3,
}

impl FieldTag {
    pub fn join(self, other: FieldTag) -> FieldTag {
        if self == FieldTag::Cyc3 || other == FieldTag::Cyc3 {
            FieldTag::Cyc3
        } else {
            FieldTag::Rat
        }
    }
}

/// An element a + b·ξ of ℚ(ξ), reduced with respect to ξ² = −1 − ξ.
/// Equality compares values only; the field tag is bookkeeping.
#[derive(Debug, Clone)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
    field: FieldTag,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational, field: FieldTag) -> Scalar {
        debug_assert!(field == FieldTag::Cyc3 || im.is_zero());
        Scalar { re, im, field }
    }

    pub fn zero() -> Scalar {
        Scalar::from_int(0)
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
            field: FieldTag::Rat,
        }
    }

    /// p/q with q ≠ 0.
    pub fn rational(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
            field: FieldTag::Rat,
        }
    }

    pub fn from_ratio(r: BigRational) -> Scalar {
        Scalar {
            re: r,
            im: BigRational::zero(),
            field: FieldTag::Rat,
        }
    }

    /// The distinguished primitive cube root of unity.
    pub fn xi() -> Scalar {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
            field: FieldTag::Cyc3,
        }
    }

    /// ξ^k for any integer k (ξ⁰ = 1, ξ^{−1} = ξ²).
    pub fn xi_pow(k: i64) -> Scalar {
        match k.rem_euclid(3) {
            0 => Scalar {
                re: BigRational::one(),
                im: BigRational::zero(),
                field: FieldTag::Cyc3,
            },
            1 => Scalar::xi(),
            _ => Scalar {
                // ξ² = −1 − ξ
                re: -BigRational::one(),
                im: -BigRational::one(),
                field: FieldTag::Cyc3,
            },
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// Retag into ℚ(ξ) without changing the value.
    pub fn as_cyc3(&self) -> Scalar {
        Scalar {
            re: self.re.clone(),
            im: self.im.clone(),
            field: FieldTag::Cyc3,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
            field: self.field.join(other.field),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
            field: self.field.join(other.field),
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
            field: self.field,
        }
    }

    /// (a + bξ)(c + dξ) = (ac − bd) + (ad + bc − bd)ξ.
    pub fn mul(&self, other: &Scalar) -> Scalar {
        let (a, b) = (&self.re, &self.im);
        let (c, d) = (&other.re, &other.im);
        let bd = b * d;
        Scalar {
            re: a * c - &bd,
            im: a * d + b * c - &bd,
            field: self.field.join(other.field),
        }
    }

    pub fn scale_i64(&self, n: i64) -> Scalar {
        let n = BigRational::from_integer(BigInt::from(n));
        Scalar {
            re: &self.re * &n,
            im: &self.im * &n,
            field: self.field,
        }
    }

    /// The image under ξ ↦ ξ², the nontrivial automorphism of ℚ(ξ)/ℚ:
    /// conj(a + bξ) = (a − b) − bξ.
    pub fn conj(&self) -> Scalar {
        Scalar {
            re: &self.re - &self.im,
            im: -self.im.clone(),
            field: self.field,
        }
    }

    /// Field norm a² − ab + b², zero only at zero.
    pub fn norm(&self) -> BigRational {
        let (a, b) = (&self.re, &self.im);
        a * a - a * b + b * b
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Scalar {
            re: &c.re / &n,
            im: &c.im / &n,
            field: self.field,
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inverse().map(|inv| self.mul(&inv))
    }

    pub fn pow_i64(&self, k: i64) -> Scalar {
        if k == 0 {
            return Scalar::one();
        }
        let base = if k < 0 {
            self.inverse().expect("pow of zero with negative exponent")
        } else {
            self.clone()
        };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact quotient by an integer n ≠ 0.
    pub fn div_i64_exact(&self, n: i64) -> Scalar {
        assert!(n != 0, "division by zero");
        let n = BigRational::from_integer(BigInt::from(n));
        Scalar {
            re: &self.re / &n,
            im: &self.im / &n,
            field: self.field,
        }
    }

    /// Rational value as i64 if it is an integer in range; None otherwise.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.im.is_zero() || !self.re.denom().is_one() {
            return None;
        }
        let n = self.re.numer();
        i64::try_from(n.clone()).ok()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl Eq for Scalar {}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text: `p/q` for rational values, `(a+b*x)` (with x = ξ)
    /// when the ξ-part is nonzero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_rat(&self.re))
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            write!(
                f,
                "({}{}{}*x)",
                fmt_rat(&self.re),
                sign,
                fmt_rat(&self.im.abs())
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_satisfies_minimal_polynomial() {
        let xi = Scalar::xi();
        let lhs = xi.mul(&xi).add(&xi).add(&Scalar::one());
        assert!(lhs.is_zero());
    }

    #[test]
    fn xi_powers_cycle_with_period_three() {
        assert_eq!(Scalar::xi_pow(3), Scalar::one());
        assert_eq!(Scalar::xi_pow(-1), Scalar::xi_pow(2));
        assert_eq!(Scalar::xi_pow(4), Scalar::xi());
        assert_eq!(Scalar::xi().mul(&Scalar::xi_pow(2)), Scalar::one());
    }

    #[test]
    fn conjugation_is_the_nontrivial_automorphism() {
        let xi = Scalar::xi();
        assert_eq!(xi.conj(), Scalar::xi_pow(2));
        assert_eq!(xi.conj().conj(), xi);
        let a = Scalar::rational(3, 2).add(&Scalar::xi().scale_i64(-5));
        let b = Scalar::rational(-7, 3).add(&Scalar::xi().scale_i64(2));
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let a = Scalar::rational(3, 4).add(&Scalar::xi().scale_i64(-2));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_one());
        assert!(Scalar::zero().inverse().is_none());
    }

    #[test]
    fn xi_plus_xi_squared_is_minus_one() {
        let s = Scalar::xi().add(&Scalar::xi_pow(2));
        assert_eq!(s, Scalar::from_int(-1));
        assert!(s.is_rational());
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(Scalar::rational(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::from_int(7).to_string(), "7");
        assert_eq!(Scalar::xi().to_string(), "(0+1*x)");
        assert_eq!(Scalar::xi_pow(2).to_string(), "(-1-1*x)");
        // value-equal scalars render identically regardless of tag
        assert_eq!(Scalar::from_int(2).as_cyc3().to_string(), "2");
    }

    #[test]
    fn field_tag_joins_upward() {
        let s = Scalar::from_int(2).mul(&Scalar::xi());
        assert_eq!(s.field(), FieldTag::Cyc3);
        let t = Scalar::from_int(2).mul(&Scalar::from_int(3));
        assert_eq!(t.field(), FieldTag::Rat);
    }
}
