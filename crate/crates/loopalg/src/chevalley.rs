//! The Chevalley basis of a finite simple Lie algebra with integral
//! structure constants, and lifts of diagram automorphisms to the algebra.
//!
//! Basis order: root vectors for positive roots by descending height, then
//! h_1..h_N, then negative root vectors mirrored (ascending height of the
//! underlying positive root). With this order ad e_α strictly raises the
//! basis index for every α > 0, so exponentials of positive root vectors
//! are upper unitriangular.
//!
//! Sign conventions: for each non-simple positive γ the decomposition
//! γ = α + β with α minimal (always simple) gets N_{α,β} = +(p+1), where p
//! is the length of the α-string below β. Every other constant follows from
//! antisymmetry, the Chevalley involution, and the Jacobi identity; the
//! consistency checks |N| = p+1 and Jacobi are exercised in tests.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::coeff::Coeff;
use crate::error::Result;
use crate::ringaut::RingAut;
use crate::roots::{DiagramAutomorphism, FiniteType, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisLabel {
    /// Root vector of the positive root with this index.
    E(usize),
    /// Cartan generator h_{i+1}.
    H(usize),
    /// Root vector of minus the positive root with this index.
    F(usize),
}

#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    rs: RootSystem,
    /// N_{α,β} keyed by positive root indices (i, j) with i < j.
    table: HashMap<(usize, usize), i64>,
}

impl ChevalleyBasis {
    pub fn new(ftype: FiniteType) -> Result<ChevalleyBasis> {
        let rs = RootSystem::new(ftype)?;
        Ok(ChevalleyBasis::from_root_system(rs))
    }

    pub fn from_root_system(rs: RootSystem) -> ChevalleyBasis {
        let mut basis = ChevalleyBasis {
            rs,
            table: HashMap::new(),
        };
        basis.fill_table();
        basis
    }

    fn fill_table(&mut self) {
        let n = self.rs.rank();
        let npos = self.rs.num_positive();
        for g in n..npos {
            let gamma = self.rs.positive(g).to_vec();
            let pairs = self.special_pairs(&gamma);
            let &(ia, ib) = pairs.first().expect("non-simple root decomposes");
            let alpha = self.rs.positive(ia).to_vec();
            let beta = self.rs.positive(ib).to_vec();
            debug_assert_eq!(self.rs.height(&alpha), 1, "extraspecial first is simple");
            let p = self.rs.string_p(&alpha, &beta);
            self.table.insert((ia, ib), p + 1);

            let n_ab = p + 1;
            let len_gamma = self.rs.len_sq(&gamma);
            for &(ix, iy) in &pairs[1..] {
                let xi = self.rs.positive(ix).to_vec();
                let eta = self.rs.positive(iy).to_vec();
                let neg_xi: Vec<i64> = xi.iter().map(|&c| -c).collect();
                // Jacobi on (α, β, −ξ), all three sums landing on η
                let mut t = 0i64;
                let b_minus_xi = diff(&beta, &xi);
                if self.rs.is_root(&b_minus_xi) {
                    t += self.n_const(&beta, &neg_xi) * self.n_const(&b_minus_xi, &alpha);
                }
                let a_minus_xi = diff(&alpha, &xi);
                if self.rs.is_root(&a_minus_xi) {
                    t += self.n_const(&neg_xi, &alpha) * self.n_const(&a_minus_xi, &beta);
                }
                assert!(t != 0, "special pair with vanishing bracket");
                let num = len_gamma * t;
                let den = self.rs.len_sq(&eta) * n_ab;
                assert_eq!(num % den, 0, "structure constant not integral");
                self.table.insert((ix, iy), num / den);
            }
        }
    }

    /// Ordered decompositions γ = ξ + η into positive roots with
    /// idx(ξ) < idx(η), ascending in idx(ξ); the first is extraspecial.
    fn special_pairs(&self, gamma: &[i64]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for ix in 0..self.rs.num_positive() {
            let xi = self.rs.positive(ix);
            let eta = diff(gamma, xi);
            if eta.iter().all(|&c| c >= 0) {
                if let Some(iy) = self.rs.positive_index(&eta) {
                    if ix < iy {
                        out.push((ix, iy));
                    }
                }
            }
        }
        out
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    pub fn dim(&self) -> usize {
        self.rs.dimension()
    }

    pub fn label(&self, flat: usize) -> BasisLabel {
        let p = self.num_positive();
        let n = self.rank();
        if flat < p {
            BasisLabel::E(p - 1 - flat)
        } else if flat < p + n {
            BasisLabel::H(flat - p)
        } else {
            BasisLabel::F(flat - p - n)
        }
    }

    pub fn flat(&self, label: BasisLabel) -> usize {
        let p = self.num_positive();
        let n = self.rank();
        match label {
            BasisLabel::E(i) => {
                debug_assert!(i < p);
                p - 1 - i
            }
            BasisLabel::H(i) => {
                debug_assert!(i < n);
                p + i
            }
            BasisLabel::F(i) => {
                debug_assert!(i < p);
                p + n + i
            }
        }
    }

    pub fn e_index(&self, pos: usize) -> usize {
        self.flat(BasisLabel::E(pos))
    }

    pub fn h_index(&self, i: usize) -> usize {
        self.flat(BasisLabel::H(i))
    }

    pub fn f_index(&self, pos: usize) -> usize {
        self.flat(BasisLabel::F(pos))
    }

    pub fn simple_e(&self, i: usize) -> usize {
        let idx = self
            .rs
            .positive_index(&self.rs.simple_root(i))
            .expect("simple root present");
        self.e_index(idx)
    }

    pub fn simple_f(&self, i: usize) -> usize {
        let idx = self
            .rs
            .positive_index(&self.rs.simple_root(i))
            .expect("simple root present");
        self.f_index(idx)
    }

    /// Flat index of e_θ; first in the basis by construction.
    pub fn theta_e(&self) -> usize {
        let idx = self
            .rs
            .positive_index(self.rs.highest_root())
            .expect("highest root present");
        let flat = self.e_index(idx);
        debug_assert_eq!(flat, 0);
        flat
    }

    pub fn theta_f(&self) -> usize {
        let idx = self
            .rs
            .positive_index(self.rs.highest_root())
            .expect("highest root present");
        self.f_index(idx)
    }

    pub fn basis_name(&self, flat: usize) -> String {
        match self.label(flat) {
            BasisLabel::E(p) => format!("e{}", coords_name(self.rs.positive(p))),
            BasisLabel::H(i) => format!("h[{}]", i + 1),
            BasisLabel::F(p) => format!("f{}", coords_name(self.rs.positive(p))),
        }
    }

    pub fn basis_names(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.basis_name(i)).collect()
    }

    /// The root of a root-vector basis index (sign included), None for h's.
    pub fn root_of(&self, flat: usize) -> Option<Vec<i64>> {
        match self.label(flat) {
            BasisLabel::E(p) => Some(self.rs.positive(p).to_vec()),
            BasisLabel::H(_) => None,
            BasisLabel::F(p) => Some(self.rs.positive(p).iter().map(|&c| -c).collect()),
        }
    }

    /// N_{x,y} for arbitrary roots (coordinates may be negative); zero when
    /// x + y is not a root.
    pub fn n_const(&self, x: &[i64], y: &[i64]) -> i64 {
        let s = RootSystem::sum_coords(x, y);
        assert!(s.iter().any(|&c| c != 0), "n_const needs x + y nonzero");
        if !self.rs.is_root(&s) {
            return 0;
        }
        let xs = self.rs.signed_index(x).expect("x is a root");
        let ys = self.rs.signed_index(y).expect("y is a root");
        match (xs.1, ys.1) {
            (1, 1) => self.n_pos(xs.0, ys.0),
            (-1, -1) => -self.n_pos(xs.0, ys.0),
            (1, -1) => self.n_mixed(x, &neg(y)),
            _ => -self.n_const(y, x),
        }
    }

    fn n_pos(&self, ix: usize, iy: usize) -> i64 {
        if ix < iy {
            *self.table.get(&(ix, iy)).expect("tabulated pair")
        } else {
            -*self.table.get(&(iy, ix)).expect("tabulated pair")
        }
    }

    /// N_{x,−b} for positive roots x ≠ b with x − b a root.
    fn n_mixed(&self, x: &[i64], b: &[i64]) -> i64 {
        let d = diff(x, b);
        let (_, sign) = self.rs.signed_index(&d).expect("difference is a root");
        if sign > 0 {
            // Chevalley involution plus the cyclic identity on (x, −b, b−x)
            let num = -self.n_const(b, &d) * self.rs.len_sq(&d);
            let den = self.rs.len_sq(x);
            assert_eq!(num % den, 0);
            num / den
        } else {
            self.n_mixed(b, x)
        }
    }

    /// Coroot α^∨ of a positive root, as integer coefficients over h_i.
    pub fn coroot(&self, pos: usize) -> Vec<i64> {
        let alpha = self.rs.positive(pos);
        let d_alpha = self.rs.len_sq(alpha) / 2;
        alpha
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let num = c * self.rs.symmetrizer(i);
                assert_eq!(num % d_alpha, 0, "coroot not integral");
                num / d_alpha
            })
            .collect()
    }

    /// [b_i, b_j] as a sparse integer combination of basis vectors.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        use BasisLabel::*;
        match (self.label(i), self.label(j)) {
            (H(_), H(_)) => vec![],
            (H(a), E(q)) => {
                let k = self.rs.pairing_simple(self.rs.positive(q), a);
                if k == 0 {
                    vec![]
                } else {
                    vec![(self.e_index(q), k)]
                }
            }
            (H(a), F(q)) => {
                let k = -self.rs.pairing_simple(self.rs.positive(q), a);
                if k == 0 {
                    vec![]
                } else {
                    vec![(self.f_index(q), k)]
                }
            }
            (E(_), H(_)) | (F(_), H(_)) => neg_sparse(self.bracket_basis(j, i)),
            (E(p), E(q)) => {
                if p == q {
                    return vec![];
                }
                let sum = RootSystem::sum_coords(self.rs.positive(p), self.rs.positive(q));
                match self.rs.positive_index(&sum) {
                    Some(s) => {
                        let n = self.n_pos_ordered(p, q);
                        vec![(self.e_index(s), n)]
                    }
                    None => vec![],
                }
            }
            (F(p), F(q)) => {
                if p == q {
                    return vec![];
                }
                let sum = RootSystem::sum_coords(self.rs.positive(p), self.rs.positive(q));
                match self.rs.positive_index(&sum) {
                    Some(s) => {
                        let n = -self.n_pos_ordered(p, q);
                        vec![(self.f_index(s), n)]
                    }
                    None => vec![],
                }
            }
            (E(p), F(q)) => {
                if p == q {
                    return self
                        .coroot(p)
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(a, &c)| (self.h_index(a), c))
                        .collect();
                }
                let x = self.rs.positive(p).to_vec();
                let b = self.rs.positive(q).to_vec();
                let d = diff(&x, &b);
                match self.rs.signed_index(&d) {
                    Some((s, 1)) => vec![(self.e_index(s), self.n_mixed(&x, &b))],
                    Some((s, _)) => vec![(self.f_index(s), self.n_mixed(&x, &b))],
                    None => vec![],
                }
            }
            (F(_), E(_)) => neg_sparse(self.bracket_basis(j, i)),
        }
    }

    fn n_pos_ordered(&self, p: usize, q: usize) -> i64 {
        if p < q {
            *self.table.get(&(p, q)).expect("tabulated pair")
        } else {
            -*self.table.get(&(q, p)).expect("tabulated pair")
        }
    }

    pub fn bracket<C: Coeff>(&self, a: &LieElement<C>, b: &LieElement<C>) -> LieElement<C> {
        assert_eq!(a.coords.len(), self.dim());
        assert_eq!(b.coords.len(), self.dim());
        let denom = a.denom;
        let mut out: LieElement<C> = LieElement::zero(self, denom);
        for (i, ca) in a.coords.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coords.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let prod = ca.mul(cb);
                for (k, n) in self.bracket_basis(i, j) {
                    out.coords[k] = out.coords[k].add(&prod.scale_i64(n));
                }
            }
        }
        out
    }

    /// Lift a diagram automorphism to the algebra, normalized to send
    /// simple generators to simple generators with coefficient +1.
    pub fn lift(&self, pi: &DiagramAutomorphism) -> LieAutomorphism {
        let n = self.rank();
        let npos = self.num_positive();
        let mut eps = vec![0i64; npos];
        for i in 0..n {
            let idx = self.rs.positive_index(&self.rs.simple_root(i)).unwrap();
            eps[idx] = 1;
        }
        for g in n..npos {
            let gamma = self.rs.positive(g).to_vec();
            let (ia, ib) = self.special_pairs(&gamma)[0];
            let alpha = self.rs.positive(ia).to_vec();
            let beta = self.rs.positive(ib).to_vec();
            let pa = pi.apply_root(&alpha);
            let pb = pi.apply_root(&beta);
            let n_orig = self.n_pos_ordered(ia, ib);
            let n_img = self.n_const(&pa, &pb);
            assert!(n_img != 0);
            let num = eps[ia] * eps[ib] * n_img;
            assert_eq!(num % n_orig, 0);
            let e = num / n_orig;
            assert!(e == 1 || e == -1, "lift sign must be a unit");
            eps[g] = e;
        }

        let dim = self.dim();
        let mut target = vec![0usize; dim];
        let mut sign = vec![0i64; dim];
        for p in 0..npos {
            let image = pi.apply_root(self.rs.positive(p));
            let ip = self
                .rs
                .positive_index(&image)
                .expect("positive roots stay positive");
            target[self.e_index(p)] = self.e_index(ip);
            sign[self.e_index(p)] = eps[p];
            target[self.f_index(p)] = self.f_index(ip);
            sign[self.f_index(p)] = eps[p];
        }
        for i in 0..n {
            target[self.h_index(i)] = self.h_index(pi.perm[i]);
            sign[self.h_index(i)] = 1;
        }
        LieAutomorphism { target, sign }
    }
}

fn coords_name(coords: &[i64]) -> String {
    let mut s = String::from("[");
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{c}");
    }
    s.push(']');
    s
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b.iter()).map(|(&x, &y)| x - y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|&c| -c).collect()
}

fn neg_sparse(v: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    v.into_iter().map(|(i, c)| (i, -c)).collect()
}

/// An element of 𝔤 ⊗ (coefficient ring), dense over the Chevalley basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement<C> {
    pub coords: Vec<C>,
    denom: u32,
}

impl<C: Coeff> LieElement<C> {
    pub fn zero(basis: &ChevalleyBasis, denom: u32) -> LieElement<C> {
        LieElement {
            coords: vec![C::zero(denom); basis.dim()],
            denom,
        }
    }

    pub fn unit(basis: &ChevalleyBasis, flat: usize, denom: u32) -> LieElement<C> {
        let mut v = LieElement::zero(basis, denom);
        v.coords[flat] = C::one(denom);
        v
    }

    pub fn from_coords(coords: Vec<C>, denom: u32) -> LieElement<C> {
        LieElement { coords, denom }
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(C::is_zero)
    }

    pub fn add(&self, other: &LieElement<C>) -> LieElement<C> {
        LieElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
            denom: self.denom,
        }
    }

    pub fn sub(&self, other: &LieElement<C>) -> LieElement<C> {
        LieElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
            denom: self.denom,
        }
    }

    pub fn neg(&self) -> LieElement<C> {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &C) -> LieElement<C> {
        self.map(|v| v.mul(c))
    }

    pub fn scale_i64(&self, n: i64) -> LieElement<C> {
        self.map(|v| v.scale_i64(n))
    }

    pub fn div_i64_exact(&self, n: i64) -> LieElement<C> {
        self.map(|v| v.div_i64_exact(n))
    }

    pub fn map(&self, f: impl Fn(&C) -> C) -> LieElement<C> {
        LieElement {
            coords: self.coords.iter().map(f).collect(),
            denom: self.denom,
        }
    }

    /// Coefficient-wise ring automorphism (the Γ-action on scalars).
    pub fn apply_ring_aut(&self, g: &RingAut) -> LieElement<C> {
        self.map(|c| c.apply_aut(g))
    }

    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn render(&self, basis: &ChevalleyBasis) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(basis.basis_name(i));
            } else {
                parts.push(format!("({})*{}", c, basis.basis_name(i)));
            }
        }
        parts.join(" + ")
    }
}

/// A signed basis permutation: basis vector i maps to sign[i] · b_{target[i]}.
/// Lifts of diagram automorphisms always take this shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAutomorphism {
    pub target: Vec<usize>,
    pub sign: Vec<i64>,
}

impl LieAutomorphism {
    pub fn identity(dim: usize) -> LieAutomorphism {
        LieAutomorphism {
            target: (0..dim).collect(),
            sign: vec![1; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    pub fn is_identity(&self) -> bool {
        self.target.iter().enumerate().all(|(i, &t)| i == t) && self.sign.iter().all(|&s| s == 1)
    }

    pub fn apply<C: Coeff>(&self, v: &LieElement<C>) -> LieElement<C> {
        assert_eq!(v.coords.len(), self.dim());
        let denom = v.denom;
        let mut out = vec![C::zero(denom); self.dim()];
        for (i, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[self.target[i]] = c.scale_i64(self.sign[i]);
        }
        LieElement {
            coords: out,
            denom,
        }
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &LieAutomorphism) -> LieAutomorphism {
        assert_eq!(self.dim(), other.dim());
        let mut target = vec![0usize; self.dim()];
        let mut sign = vec![0i64; self.dim()];
        for i in 0..self.dim() {
            target[i] = self.target[other.target[i]];
            sign[i] = other.sign[i] * self.sign[other.target[i]];
        }
        LieAutomorphism { target, sign }
    }

    pub fn inverse(&self) -> LieAutomorphism {
        let mut target = vec![0usize; self.dim()];
        let mut sign = vec![0i64; self.dim()];
        for i in 0..self.dim() {
            target[self.target[i]] = i;
            sign[self.target[i]] = self.sign[i];
        }
        LieAutomorphism { target, sign }
    }

    pub fn order(&self) -> u32 {
        let mut acc = self.clone();
        for n in 1..=12 {
            if acc.is_identity() {
                return n;
            }
            acc = self.compose(&acc);
        }
        panic!("automorphism of unexpected order");
    }
}

/// Elements of 𝔤 ⊗ S.
pub type LoopElement = LieElement<crate::laurent::LaurentPoly>;
