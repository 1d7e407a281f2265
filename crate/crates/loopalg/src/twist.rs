//! The Γ-action on 𝔤 ⊗ S and its fixed points.
//!
//! A setup couples a Chevalley basis with the ring S = 𝕂[t^{±1/r}]: the
//! distinguished generator σ acts as M ⊗ σ′ where M is the lift of the
//! pinned diagram automorphism, and in the S₃ case ω acts as M_ω ⊗ ω′ with
//! M_ω the lift of the transposition that conjugates the triality to its
//! inverse (the map π ↦ M_π is a homomorphism on diagram automorphisms, so
//! the S₃ relations hold on the nose).
//!
//! Because σ′ multiplies t^{1/r} by ξ^{−1}, an element v ⊗ t^{k/r} is
//! σ-fixed exactly when M v = ξ^{k mod r} v. Eigenspaces of M are built
//! directly from the orbits of its signed permutation, no elimination
//! involved; independent rank checks go through dense solves instead.

use crate::chevalley::{ChevalleyBasis, LieAutomorphism, LieElement, LoopElement};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{nullspace, Mat};
use crate::ringaut::{GaloisCase, RingAut, RingSetup};
use crate::roots::{twist_admissible, DiagramAutomorphism, FiniteType};
use crate::scalar::{FieldTag, Scalar};

/// One semilinear generator of Γ acting on 𝔤 ⊗ S.
#[derive(Debug, Clone)]
pub struct LoopAut {
    pub alg: LieAutomorphism,
    pub ring: RingAut,
}

impl LoopAut {
    pub fn apply<C: Coeff>(&self, v: &LieElement<C>) -> LieElement<C> {
        // the algebra part has integer signs, so it commutes with the
        // coefficient-wise ring action
        self.alg.apply(&v.apply_ring_aut(&self.ring))
    }
}

/// ζ^j for the twist order r (ζ = −1 for r = 2, ζ = ξ for r = 3).
pub fn unity_root(r: u32, j: i64) -> Scalar {
    match r {
        1 => Scalar::one(),
        2 => {
            if j.rem_euclid(2) == 0 {
                Scalar::one()
            } else {
                Scalar::from_int(-1)
            }
        }
        3 => Scalar::xi_pow(j),
        _ => panic!("twist order out of range"),
    }
}

/// Root of unity availability for a coefficient field.
pub fn eigenvalue_scalar(r: u32, j: i64, field: FieldTag) -> Result<Scalar> {
    if r == 3 && field == FieldTag::Rat {
        return Err(Error::FieldTooSmall(
            "order-3 eigenvalues need the cube root of unity ξ".to_string(),
        ));
    }
    Ok(unity_root(r, j))
}

/// Fixed vectors of one exponent t^{k/r}.
#[derive(Debug, Clone)]
pub struct FixedDegree {
    /// Exponent k of t^{k/r}.
    pub k: i64,
    pub vectors: Vec<LoopElement>,
}

#[derive(Debug, Clone)]
pub struct GaloisSetup {
    basis: ChevalleyBasis,
    ring: RingSetup,
    pi: DiagramAutomorphism,
    m: LieAutomorphism,
    m_omega: Option<LieAutomorphism>,
}

impl GaloisSetup {
    /// The default setup for a twist order: case I, II, or IIIb.
    pub fn standard(ftype: FiniteType, r: u32) -> Result<GaloisSetup> {
        GaloisSetup::with_case(ftype, GaloisCase::for_r(r)?)
    }

    pub fn with_case(ftype: FiniteType, case: GaloisCase) -> Result<GaloisSetup> {
        let r = case.r();
        twist_admissible(ftype, r)?;
        let basis = ChevalleyBasis::new(ftype)?;
        let pi = DiagramAutomorphism::for_type(ftype, r)?;
        let m = basis.lift(&pi);
        let m_omega = if case == GaloisCase::IIIb {
            let swap = DiagramAutomorphism::for_type(ftype, 2)?;
            let mw = basis.lift(&swap);
            // ω must conjugate σ to σ² for the S₃ action to close
            debug_assert_eq!(mw.compose(&m).compose(&mw), m.compose(&m));
            Some(mw)
        } else {
            None
        };
        Ok(GaloisSetup {
            basis,
            ring: RingSetup::new(case),
            pi,
            m,
            m_omega,
        })
    }

    pub fn basis(&self) -> &ChevalleyBasis {
        &self.basis
    }

    pub fn ring(&self) -> &RingSetup {
        &self.ring
    }

    pub fn case(&self) -> GaloisCase {
        self.ring.case
    }

    pub fn r(&self) -> u32 {
        self.ring.denom
    }

    pub fn pi(&self) -> &DiagramAutomorphism {
        &self.pi
    }

    pub fn m(&self) -> &LieAutomorphism {
        &self.m
    }

    pub fn m_omega(&self) -> Option<&LieAutomorphism> {
        self.m_omega.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Generators of Γ as semilinear maps on 𝔤 ⊗ S.
    pub fn gamma_generators(&self) -> Vec<LoopAut> {
        let mut gens = Vec::new();
        if self.r() > 1 {
            gens.push(LoopAut {
                alg: self.m.clone(),
                ring: self.ring.sigma.clone(),
            });
        }
        if let (Some(mw), Some(w)) = (&self.m_omega, &self.ring.omega) {
            gens.push(LoopAut {
                alg: mw.clone(),
                ring: w.clone(),
            });
        }
        gens
    }

    pub fn is_gamma_fixed<C: Coeff>(&self, v: &LieElement<C>) -> bool {
        self.gamma_generators().iter().all(|g| g.apply(v) == *v)
    }

    /// Basis of the ξ^j-eigenspace of M, assembled orbit by orbit: a cycle
    /// i_0 → i_1 → … of the signed permutation contributes the vector with
    /// coefficients c_0 = 1, c_{t+1} = ζ^{−j} s_t c_t, which closes up
    /// because the signs multiply to +1 around every cycle.
    pub fn eigenspace_basis(&self, j: u32) -> Vec<LieElement<Scalar>> {
        let r = self.r();
        let dim = self.dim();
        let mut out = Vec::new();
        let mut seen = vec![false; dim];
        for start in 0..dim {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut cur = self.m.target[start];
            while cur != start {
                seen[cur] = true;
                orbit.push(cur);
                cur = self.m.target[cur];
            }
            if orbit.len() == 1 {
                // ζ = sign: −1 only possible for r = 2 (signs cube to +1
                // under an order-3 automorphism)
                let s = self.m.sign[start];
                let home = if s == 1 {
                    0
                } else {
                    debug_assert_eq!(r, 2);
                    1
                };
                if j == home {
                    out.push(LieElement::unit(&self.basis, start, 1));
                }
                continue;
            }
            debug_assert_eq!(orbit.len() as u32, r);
            let mut v: LieElement<Scalar> = LieElement::zero(&self.basis, 1);
            let mut c = Scalar::one();
            let zeta_inv = unity_root(r, -(j as i64));
            for &idx in &orbit {
                v.coords[idx] = c.clone();
                c = c.mul(&zeta_inv).scale_i64(self.m.sign[idx]);
            }
            debug_assert_eq!(c, Scalar::one(), "sign product around a cycle");
            out.push(v);
        }
        out
    }

    pub fn eigenspace_dims(&self) -> Vec<usize> {
        (0..self.r())
            .map(|j| self.eigenspace_basis(j).len())
            .collect()
    }

    /// Projection onto the ξ^j-eigenspace: (1/r) Σ_t ζ^{−jt} M^t v.
    pub fn eigenprojection(&self, v: &LieElement<Scalar>, j: i64) -> LieElement<Scalar> {
        let r = self.r();
        let mut acc: LieElement<Scalar> = LieElement::zero(&self.basis, 1);
        let mut cur = v.clone();
        for t in 0..r as i64 {
            let w = cur.scale(&unity_root(r, -j * t));
            acc = acc.add(&w);
            cur = self.m.apply(&cur);
        }
        acc.div_i64_exact(r as i64)
    }

    /// v ⊗ t^{k/r}.
    pub fn embed_at(&self, v: &LieElement<Scalar>, k: i64) -> LoopElement {
        let r = self.r();
        LieElement::from_coords(
            v.coords
                .iter()
                .map(|c| LaurentPoly::term(c.clone(), k, r))
                .collect(),
            r,
        )
    }

    /// Basis of the Γ-fixed points at each exponent k with |k| ≤ d·r.
    /// Cases I, II, IIIa take eigenvectors directly; the S₃ case descends
    /// to ℚ through a rational solve on split coordinates.
    pub fn fixed_point_basis(&self, d: i64) -> Vec<FixedDegree> {
        assert!(d >= 0);
        let r = self.r() as i64;
        let per_residue: Vec<Vec<LieElement<Scalar>>> = (0..self.r() as i64)
            .map(|k| self.fixed_scalar_basis_at_residue(k))
            .collect();
        (-d * r..=d * r)
            .map(|k| {
                let res = k.rem_euclid(r) as usize;
                FixedDegree {
                    k,
                    vectors: per_residue[res]
                        .iter()
                        .map(|v| self.embed_at(v, k))
                        .collect(),
                }
            })
            .collect()
    }

    /// Scalar coordinates of the fixed vectors at exponents ≡ k (mod r).
    fn fixed_scalar_basis_at_residue(&self, k: i64) -> Vec<LieElement<Scalar>> {
        match self.case() {
            GaloisCase::I => (0..self.dim())
                .map(|i| LieElement::unit(&self.basis, i, 1))
                .collect(),
            GaloisCase::II | GaloisCase::IIIa => {
                let j = k.rem_euclid(self.r() as i64) as u32;
                self.eigenspace_basis(j)
            }
            GaloisCase::IIIb => self.descent_basis_at_residue(k),
        }
    }

    /// Solve the joint σ- and ω-fixedness conditions over ℚ by splitting
    /// every coordinate c = x + ξy into rational unknowns (x, y).
    fn descent_basis_at_residue(&self, k: i64) -> Vec<LieElement<Scalar>> {
        let n = self.dim();
        let mw = self.m_omega.as_ref().expect("S3 case has omega");
        // realified operators on (x_0..x_{n-1}, y_0..y_{n-1})
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(4 * n);
        let zeta = unity_root(3, -k); // multiplier ξ^{−k} applied after M
        let (za, zb) = (zeta.re().clone(), zeta.im().clone());
        let zeta_xi = zeta.mul(&Scalar::xi()); // image of the ξ-component
        let (wa, wb) = (zeta_xi.re().clone(), zeta_xi.im().clone());
        // σ-fixedness: ξ^{−k} M v − v = 0, real and ξ parts separately
        let mut sigma_rows = vec![vec![Scalar::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            let t = self.m.target[i];
            let s = self.m.sign[i];
            // x_i lands on (za + zb ξ) s at position t
            sigma_rows[t][i] = sigma_rows[t][i].add(&Scalar::from_ratio(za.clone()).scale_i64(s));
            sigma_rows[n + t][i] =
                sigma_rows[n + t][i].add(&Scalar::from_ratio(zb.clone()).scale_i64(s));
            // y_i lands on (wa + wb ξ) s at position t
            sigma_rows[t][n + i] =
                sigma_rows[t][n + i].add(&Scalar::from_ratio(wa.clone()).scale_i64(s));
            sigma_rows[n + t][n + i] =
                sigma_rows[n + t][n + i].add(&Scalar::from_ratio(wb.clone()).scale_i64(s));
        }
        for (i, row) in sigma_rows.iter_mut().enumerate() {
            row[i] = row[i].sub(&Scalar::one());
        }
        rows.extend(sigma_rows);
        // ω-fixedness: M_ω conj(v) − v = 0; conj(x + ξy) = (x − y) − ξy
        let mut omega_rows = vec![vec![Scalar::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            let t = mw.target[i];
            let s = mw.sign[i];
            omega_rows[t][i] = omega_rows[t][i].add(&Scalar::from_int(s));
            omega_rows[t][n + i] = omega_rows[t][n + i].add(&Scalar::from_int(-s));
            omega_rows[n + t][n + i] = omega_rows[n + t][n + i].add(&Scalar::from_int(-s));
        }
        for (i, row) in omega_rows.iter_mut().enumerate() {
            row[i] = row[i].sub(&Scalar::one());
        }
        rows.extend(omega_rows);

        let mat = Mat::from_rows(rows, 1);
        nullspace(&mat)
            .into_iter()
            .map(|sol| {
                let coords: Vec<Scalar> = (0..n)
                    .map(|i| sol[i].add(&Scalar::xi().mul(&sol[n + i])))
                    .collect();
                LieElement::from_coords(coords, 1)
            })
            .collect()
    }

    /// Independent count of the σ-fixed (and for the S₃ case fully
    /// Γ-fixed) vectors at exponent k, through a dense nullspace solve.
    pub fn fixed_dim_direct(&self, k: i64) -> usize {
        match self.case() {
            GaloisCase::I => self.dim(),
            GaloisCase::II | GaloisCase::IIIa => {
                let n = self.dim();
                let zeta = unity_root(self.r(), -k);
                let mut rows = vec![vec![Scalar::zero(); n]; n];
                for i in 0..n {
                    let t = self.m.target[i];
                    rows[t][i] = rows[t][i].add(&zeta.scale_i64(self.m.sign[i]));
                }
                for (i, row) in rows.iter_mut().enumerate() {
                    row[i] = row[i].sub(&Scalar::one());
                }
                nullspace(&Mat::from_rows(rows, 1)).len()
            }
            GaloisCase::IIIb => self.descent_basis_at_residue(k).len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(name: &str, r: u32) -> GaloisSetup {
        GaloisSetup::standard(FiniteType::parse(name).unwrap(), r).unwrap()
    }

    #[test]
    fn eigenspace_dimensions_match_the_folded_algebras() {
        assert_eq!(setup("A2", 2).eigenspace_dims(), vec![3, 5]);
        assert_eq!(setup("A3", 2).eigenspace_dims(), vec![10, 5]);
        assert_eq!(setup("D4", 2).eigenspace_dims(), vec![21, 7]);
        assert_eq!(setup("D4", 3).eigenspace_dims(), vec![14, 7, 7]);
        assert_eq!(setup("D5", 2).eigenspace_dims(), vec![36, 9]);
        assert_eq!(setup("E6", 2).eigenspace_dims(), vec![52, 26]);
        assert_eq!(setup("A1", 1).eigenspace_dims(), vec![3]);
    }

    #[test]
    fn eigenvectors_satisfy_the_eigenvalue_equation() {
        for (name, r) in [("A2", 2), ("D4", 3), ("E6", 2)] {
            let s = setup(name, r);
            for j in 0..r {
                let zeta = unity_root(r, j as i64);
                for v in s.eigenspace_basis(j) {
                    let mv = s.m().apply(&v);
                    assert_eq!(mv, v.scale(&zeta), "{name} r={r} j={j}");
                }
            }
        }
    }

    #[test]
    fn orbit_eigenspaces_match_dense_solves() {
        // the independent route: nullspace of (ζ^{−j}M − I) per residue
        for (name, r) in [("A2", 2), ("A3", 2), ("D4", 3), ("D4", 2)] {
            let s = setup(name, r);
            let dims = s.eigenspace_dims();
            for k in 0..r as i64 {
                assert_eq!(
                    s.fixed_dim_direct(k),
                    dims[k as usize],
                    "{name} r={r} k={k}"
                );
            }
        }
    }

    #[test]
    fn eigenspaces_fill_the_algebra() {
        for (name, r) in [("A2", 2), ("D4", 3), ("D5", 2)] {
            let s = setup(name, r);
            let total: usize = s.eigenspace_dims().iter().sum();
            assert_eq!(total, s.dim(), "{name}");
        }
    }

    #[test]
    fn fixed_basis_vectors_are_gamma_fixed() {
        for (name, r) in [("A1", 1), ("A2", 2), ("D4", 3), ("D4", 2)] {
            let s = setup(name, r);
            for degree in s.fixed_point_basis(1) {
                for v in &degree.vectors {
                    assert!(s.is_gamma_fixed(v), "{name} r={r} k={}", degree.k);
                }
            }
        }
    }

    #[test]
    fn fixed_counts_follow_the_degree_residue() {
        let s = setup("A2", 2);
        let counts: Vec<usize> = s
            .fixed_point_basis(1)
            .iter()
            .map(|d| d.vectors.len())
            .collect();
        assert_eq!(counts, vec![3, 5, 3, 5, 3]); // k = −2..2
        let s1 = setup("A1", 1);
        let counts1: Vec<usize> = s1
            .fixed_point_basis(1)
            .iter()
            .map(|d| d.vectors.len())
            .collect();
        assert_eq!(counts1, vec![3, 3, 3]);
    }

    #[test]
    fn s3_descent_matches_the_linear_case_rank() {
        // same per-degree counts over ℚ as the ℤ/3 form has over ℚ(ξ)
        let b = GaloisSetup::with_case(FiniteType::parse("D4").unwrap(), GaloisCase::IIIb).unwrap();
        let a = GaloisSetup::with_case(FiniteType::parse("D4").unwrap(), GaloisCase::IIIa).unwrap();
        for k in -3..=3i64 {
            assert_eq!(b.fixed_dim_direct(k), a.fixed_dim_direct(k), "k={k}");
        }
        let counts: Vec<usize> = b
            .fixed_point_basis(1)
            .iter()
            .map(|d| d.vectors.len())
            .collect();
        assert_eq!(counts, vec![14, 7, 7, 14, 7, 7, 14]);
    }

    #[test]
    fn s3_fixed_vectors_survive_both_generators() {
        let b = GaloisSetup::with_case(FiniteType::parse("D4").unwrap(), GaloisCase::IIIb).unwrap();
        let gens = b.gamma_generators();
        assert_eq!(gens.len(), 2);
        let degrees = b.fixed_point_basis(1);
        for degree in &degrees {
            for v in &degree.vectors {
                for g in &gens {
                    assert_eq!(g.apply(v), *v, "k={}", degree.k);
                }
            }
        }
    }

    #[test]
    fn unfixed_samples_are_rejected() {
        let s = setup("A2", 2);
        // M e_θ = −e_θ, so e_θ ⊗ 1 moves under σ
        let theta = LieElement::unit(s.basis(), s.basis().theta_e(), 1);
        let emb = s.embed_at(&theta, 0);
        assert!(!s.is_gamma_fixed(&emb));
        // but e_θ ⊗ t^{1/2} is fixed: (−1)·(−1) = 1
        let emb1 = s.embed_at(&theta, 1);
        assert!(s.is_gamma_fixed(&emb1));
    }

    #[test]
    fn field_requirements_are_enforced() {
        assert!(eigenvalue_scalar(3, 1, FieldTag::Rat).is_err());
        assert!(eigenvalue_scalar(3, 1, FieldTag::Cyc3).is_ok());
        assert!(eigenvalue_scalar(2, 1, FieldTag::Rat).is_ok());
    }
}
