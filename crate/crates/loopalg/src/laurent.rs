//! Laurent polynomials in t^{1/r} with coefficients in ℚ or ℚ(ξ).
//!
//! Exponents are stored as integers k meaning t^{k/denom}, where `denom` is
//! fixed by the ambient ring (r = 1, 2, 3 here). Mixing denominators is a
//! programming error, not a user error, so binary ops assert on it.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    denom: u32,
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero(denom: u32) -> LaurentPoly {
        assert!(denom >= 1);
        LaurentPoly {
            denom,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(denom: u32) -> LaurentPoly {
        LaurentPoly::term(Scalar::one(), 0, denom)
    }

    /// t^{k/denom}.
    pub fn monomial(k: i64, denom: u32) -> LaurentPoly {
        LaurentPoly::term(Scalar::one(), k, denom)
    }

    /// c · t^{k/denom}.
    pub fn term(c: Scalar, k: i64, denom: u32) -> LaurentPoly {
        assert!(denom >= 1);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { denom, terms }
    }

    pub fn constant(c: Scalar, denom: u32) -> LaurentPoly {
        LaurentPoly::term(c, 0, denom)
    }

    pub fn from_terms(pairs: Vec<(i64, Scalar)>, denom: u32) -> LaurentPoly {
        let mut p = LaurentPoly::zero(denom);
        for (k, c) in pairs {
            p.add_term(k, &c);
        }
        p
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(Scalar::is_one).unwrap_or(false)
    }

    /// Coefficient of t^{k/denom}.
    pub fn coeff(&self, k: i64) -> Scalar {
        self.terms.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, k: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Scalar::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.denom, other.denom, "mixed exponent denominators");
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.denom, other.denom, "mixed exponent denominators");
        let mut out = LaurentPoly::zero(self.denom);
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                out.add_term(k1 + k2, &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.denom);
        }
        LaurentPoly {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, v)| (*k, v.mul(c))).collect(),
        }
    }

    pub fn scale_i64(&self, n: i64) -> LaurentPoly {
        if n == 0 {
            return LaurentPoly::zero(self.denom);
        }
        LaurentPoly {
            denom: self.denom,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.scale_i64(n)))
                .collect(),
        }
    }

    pub fn div_i64_exact(&self, n: i64) -> LaurentPoly {
        LaurentPoly {
            denom: self.denom,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.div_i64_exact(n)))
                .collect(),
        }
    }

    /// Multiply by t^{k/denom}.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            denom: self.denom,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.denom);
        for (k, c) in self.terms() {
            out.add_term(k, &f(c));
        }
        out
    }

    /// Re-express in a ring with a finer exponent denominator.
    pub fn with_denom(&self, denom: u32) -> LaurentPoly {
        assert!(denom.is_multiple_of(self.denom), "incompatible denominators");
        let q = (denom / self.denom) as i64;
        LaurentPoly {
            denom,
            terms: self.terms.iter().map(|(k, c)| (k * q, c.clone())).collect(),
        }
    }

    /// Lowest exponent, if nonzero.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }
}

fn fmt_exponent(k: i64, denom: u32) -> String {
    if k % denom as i64 == 0 {
        let e = k / denom as i64;
        if e >= 0 {
            format!("{e}")
        } else {
            format!("({e})")
        }
    } else {
        format!("({k}/{denom})")
    }
}

impl fmt::Display for LaurentPoly {
    /// Deterministic form: terms ascending by exponent, `c*t^e` with `c`
    /// dropped for ±1 and `t^0` dropped for constants.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.terms() {
            let part = if k == 0 {
                c.to_string()
            } else {
                let t = format!("t^{}", fmt_exponent(k, self.denom));
                if c.is_one() {
                    t
                } else if *c == Scalar::from_int(-1) {
                    format!("-{t}")
                } else {
                    format!("{c}*{t}")
                }
            };
            parts.push(part);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identities() {
        let t = LaurentPoly::monomial(1, 1);
        let tinv = LaurentPoly::monomial(-1, 1);
        assert!(t.mul(&tinv).is_one());
        let p = t.add(&LaurentPoly::one(1));
        let q = t.sub(&LaurentPoly::one(1));
        // (t+1)(t-1) = t^2 - 1
        let expect = LaurentPoly::monomial(2, 1).sub(&LaurentPoly::one(1));
        assert_eq!(p.mul(&q), expect);
    }

    #[test]
    fn cancellation_removes_terms() {
        let t = LaurentPoly::monomial(1, 2);
        assert!(t.sub(&t).is_zero());
        assert_eq!(t.sub(&t).num_terms(), 0);
    }

    #[test]
    fn fractional_exponents_multiply_additively() {
        let h = LaurentPoly::monomial(1, 2); // t^(1/2)
        assert_eq!(h.mul(&h), LaurentPoly::monomial(2, 2));
        assert_eq!(h.mul(&h).to_string(), "t^1");
    }

    #[test]
    fn display_is_canonical() {
        let p = LaurentPoly::from_terms(
            vec![
                (-2, Scalar::from_int(-3)),
                (0, Scalar::rational(1, 2)),
                (3, Scalar::from_int(1)),
            ],
            1,
        );
        assert_eq!(p.to_string(), "-3*t^(-2) + 1/2 + t^3");
        assert_eq!(LaurentPoly::zero(1).to_string(), "0");
        assert_eq!(LaurentPoly::monomial(1, 3).to_string(), "t^(1/3)");
        assert_eq!(
            LaurentPoly::term(Scalar::xi(), -1, 3).to_string(),
            "(0+1*x)*t^(-1/3)"
        );
    }

    #[test]
    fn with_denom_preserves_value() {
        let p = LaurentPoly::monomial(2, 1);
        let q = p.with_denom(3);
        assert_eq!(q, LaurentPoly::monomial(6, 3));
        assert_eq!(q.to_string(), "t^2");
    }
}
