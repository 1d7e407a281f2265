//! The base ring S = 𝕂[t^{±1/r}] and the finite group Γ acting on it.
//!
//! Four setups cover all the twists that occur:
//!
//! * `I`:    r = 1, 𝕂 = ℚ, Γ trivial.
//! * `II`:   r = 2, 𝕂 = ℚ, Γ = ℤ/2, σ′(t^{1/2}) = −t^{1/2}.
//! * `IIIa`: r = 3, 𝕂 = ℚ(ξ), Γ = ℤ/3, σ′(t^{1/3}) = ξ^{−1}·t^{1/3}, σ′(ξ) = ξ.
//! * `IIIb`: r = 3, 𝕂 = ℚ(ξ) but the fixed ring is defined over ℚ,
//!   Γ = ⟨σ′, ω′⟩ ≅ S₃ where ω′ conjugates ξ and fixes t^{1/3}.
//!
//! The multiplier ξ^{−1} (not ξ) is what makes a fixed element of degree k/r
//! carry the ξ^{k mod r}-eigenspace of the algebra automorphism.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{FieldTag, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaloisCase {
    I,
    II,
    IIIa,
    IIIb,
}

impl GaloisCase {
    pub fn r(self) -> u32 {
        match self {
            GaloisCase::I => 1,
            GaloisCase::II => 2,
            GaloisCase::IIIa | GaloisCase::IIIb => 3,
        }
    }

    /// Default setup for a twist order: for r = 3 this is the S₃ form over ℚ.
    pub fn for_r(r: u32) -> Result<GaloisCase> {
        match r {
            1 => Ok(GaloisCase::I),
            2 => Ok(GaloisCase::II),
            3 => Ok(GaloisCase::IIIb),
            _ => Err(Error::SetupMismatch(format!("unsupported twist order {r}"))),
        }
    }

    pub fn field(self) -> FieldTag {
        match self {
            GaloisCase::I | GaloisCase::II => FieldTag::Rat,
            GaloisCase::IIIa | GaloisCase::IIIb => FieldTag::Cyc3,
        }
    }

    /// Field over which the fixed objects are vector spaces.
    pub fn base_field(self) -> FieldTag {
        match self {
            GaloisCase::IIIa => FieldTag::Cyc3,
            _ => FieldTag::Rat,
        }
    }
}

impl fmt::Display for GaloisCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GaloisCase::I => "I",
            GaloisCase::II => "II",
            GaloisCase::IIIa => "IIIa",
            GaloisCase::IIIb => "IIIb",
        };
        write!(f, "{s}")
    }
}

/// A ring automorphism of S: optionally conjugate ξ in coefficients, and send
/// t^{1/denom} to multiplier·t^{1/denom}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingAut {
    pub conj_field: bool,
    pub multiplier: Scalar,
    pub denom: u32,
}

impl RingAut {
    pub fn identity(denom: u32) -> RingAut {
        RingAut {
            conj_field: false,
            multiplier: Scalar::one(),
            denom,
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.conj_field && self.multiplier.is_one()
    }

    pub fn apply_scalar(&self, c: &Scalar) -> Scalar {
        if self.conj_field {
            c.conj()
        } else {
            c.clone()
        }
    }

    pub fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        assert_eq!(p.denom(), self.denom, "automorphism for a different ring");
        let mut out = LaurentPoly::zero(self.denom);
        for (k, c) in p.terms() {
            let c = self.apply_scalar(c).mul(&self.multiplier.pow_i64(k));
            out.add_term(k, &c);
        }
        out
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &RingAut) -> RingAut {
        assert_eq!(self.denom, other.denom);
        RingAut {
            conj_field: self.conj_field ^ other.conj_field,
            multiplier: self.apply_scalar(&other.multiplier).mul(&self.multiplier),
            denom: self.denom,
        }
    }

    pub fn order(&self) -> u32 {
        let mut acc = self.clone();
        for n in 1..=6 {
            if acc.is_identity() {
                return n;
            }
            acc = self.compose(&acc);
        }
        panic!("automorphism of unexpected order");
    }
}

/// The ring S with its Γ-action.
#[derive(Debug, Clone)]
pub struct RingSetup {
    pub case: GaloisCase,
    pub denom: u32,
    pub field: FieldTag,
    pub sigma: RingAut,
    pub omega: Option<RingAut>,
}

impl RingSetup {
    pub fn new(case: GaloisCase) -> RingSetup {
        let denom = case.r();
        let sigma = match case {
            GaloisCase::I => RingAut::identity(1),
            GaloisCase::II => RingAut {
                conj_field: false,
                multiplier: Scalar::from_int(-1),
                denom: 2,
            },
            GaloisCase::IIIa | GaloisCase::IIIb => RingAut {
                conj_field: false,
                multiplier: Scalar::xi_pow(-1),
                denom: 3,
            },
        };
        let omega = match case {
            GaloisCase::IIIb => Some(RingAut {
                conj_field: true,
                multiplier: Scalar::one(),
                denom: 3,
            }),
            _ => None,
        };
        RingSetup {
            case,
            denom,
            field: case.field(),
            sigma,
            omega,
        }
    }

    /// Generators of Γ (identity omitted); checking fixedness against these
    /// suffices.
    pub fn generators(&self) -> Vec<RingAut> {
        let mut gens = Vec::new();
        if !self.sigma.is_identity() {
            gens.push(self.sigma.clone());
        }
        if let Some(w) = &self.omega {
            gens.push(w.clone());
        }
        gens
    }

    /// Every element of Γ.
    pub fn group_elements(&self) -> Vec<RingAut> {
        let id = RingAut::identity(self.denom);
        match self.case {
            GaloisCase::I => vec![id],
            GaloisCase::II => vec![id, self.sigma.clone()],
            GaloisCase::IIIa => {
                let s2 = self.sigma.compose(&self.sigma);
                vec![id, self.sigma.clone(), s2]
            }
            GaloisCase::IIIb => {
                let w = self.omega.clone().unwrap();
                let s = self.sigma.clone();
                let s2 = s.compose(&s);
                vec![
                    id,
                    s.clone(),
                    s2.clone(),
                    w.clone(),
                    w.compose(&s),
                    w.compose(&s2),
                ]
            }
        }
    }

    pub fn is_fixed(&self, p: &LaurentPoly) -> bool {
        self.generators().iter().all(|g| g.apply(p) == *p)
    }

    /// Basis over ℚ of the fixed ring R = S^Γ restricted to the window
    /// |m| ≤ d in integral powers of t. For cases I, II, IIIb this is
    /// {t^m}; for IIIa, whose fixed ring is ℚ(ξ)[t^{±1}], it is {t^m, ξ·t^m}.
    pub fn fixed_subring_basis(&self, d: i64) -> Vec<LaurentPoly> {
        assert!(d >= 0);
        let r = self.denom as i64;
        let mut out = Vec::new();
        for m in -d..=d {
            out.push(LaurentPoly::monomial(m * r, self.denom));
            if self.case == GaloisCase::IIIa {
                out.push(LaurentPoly::term(Scalar::xi(), m * r, self.denom));
            }
        }
        out
    }
}
