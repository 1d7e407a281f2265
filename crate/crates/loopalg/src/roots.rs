//! Finite root systems of types A through G: pinned Cartan matrices,
//! the closure of the simple roots under root strings, the invariant
//! bilinear form, and diagram automorphisms.
//!
//! Conventions, fixed once here and relied on everywhere above:
//!
//! * a_{ij} = ⟨α_j, α_i^∨⟩, so [h_i, e_β] = (Σ_j c_j a_{ij}) e_β for
//!   β = Σ_j c_j α_j.
//! * Symmetrizers d_i are the minimal positive integers with
//!   d_i a_{ij} = d_j a_{ji}, and (α_i, α_j) = d_i a_{ij}.
//! * Positive roots are ordered by height, ties broken by descending
//!   lexicographic order on simple-root coordinates.
//!
//! Node numbering is Bourbaki's: B_N ends short, C_N ends long, D_N forks
//! at node N−2, E-types chain 1-3-4-5-6(-7-8) with node 2 on node 4,
//! G_2 starts short, F_4 has long nodes 1, 2.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteType {
    pub letter: Letter,
    pub rank: usize,
}

impl FiniteType {
    pub fn new(letter: Letter, rank: usize) -> Result<FiniteType> {
        let t = FiniteType { letter, rank };
        t.validate()?;
        Ok(t)
    }

    /// Parse names like "A5", "d4", "E8".
    pub fn parse(s: &str) -> Result<FiniteType> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Letter::A,
            Some('B') => Letter::B,
            Some('C') => Letter::C,
            Some('D') => Letter::D,
            Some('E') => Letter::E,
            Some('F') => Letter::F,
            Some('G') => Letter::G,
            _ => return Err(Error::InvalidType(format!("cannot parse type {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(format!("cannot parse rank in {s:?}")))?;
        FiniteType::new(letter, rank)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self.letter {
            Letter::A => self.rank >= 1,
            Letter::B | Letter::C => self.rank >= 2,
            Letter::D => self.rank >= 4,
            Letter::E => (6..=8).contains(&self.rank),
            Letter::F => self.rank == 4,
            Letter::G => self.rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!(
                "{} is not a simple type",
                self.name()
            )));
        }
        if self.rank > MAX_RANK {
            return Err(Error::InvalidType(format!(
                "rank {} exceeds the supported maximum {}",
                self.rank, MAX_RANK
            )));
        }
        Ok(())
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter.as_char(), self.rank)
    }

    /// B_2 and C_2 name the same algebra; C_2 is the canonical spelling.
    pub fn canonical(&self) -> FiniteType {
        if self.letter == Letter::B && self.rank == 2 {
            FiniteType {
                letter: Letter::C,
                rank: 2,
            }
        } else {
            *self
        }
    }

    pub fn is_alias(&self) -> bool {
        self.canonical() != *self
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 1) / 2,
            Letter::B | Letter::C => n * n,
            Letter::D => n * (n - 1),
            Letter::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Letter::F => 24,
            Letter::G => 6,
        }
    }

    pub fn dimension(&self) -> usize {
        2 * self.num_positive_roots() + self.rank
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub n: usize,
    pub a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn for_type(ftype: FiniteType) -> CartanMatrix {
        let ftype = ftype.canonical();
        let n = ftype.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match ftype.letter {
            Letter::A => {
                for i in 0..n - 1 {
                    bond(i, i + 1, -1, -1);
                }
            }
            Letter::B => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                // last root short: a_{N,N-1} = -2
                bond(n - 2, n - 1, -1, -2);
            }
            Letter::C => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                // last root long: a_{N-1,N} = -2
                bond(n - 2, n - 1, -2, -1);
            }
            Letter::D => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(n - 3, n - 1, -1, -1);
            }
            Letter::E => {
                // chain 1-3-4-5-6(-7-8), node 2 attached to node 4
                let chain: Vec<usize> = match n {
                    6 => vec![0, 2, 3, 4, 5],
                    7 => vec![0, 2, 3, 4, 5, 6],
                    _ => vec![0, 2, 3, 4, 5, 6, 7],
                };
                for w in chain.windows(2) {
                    bond(w[0], w[1], -1, -1);
                }
                bond(1, 3, -1, -1);
            }
            Letter::F => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            Letter::G => {
                bond(0, 1, -3, -1);
            }
        }
        CartanMatrix { n, a }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// Minimal positive symmetrizers: d_i a_{ij} = d_j a_{ji}.
    pub fn symmetrizers(&self) -> Vec<i64> {
        // propagate ratios across bonds of the (connected) diagram, then
        // clear to minimal integers
        let n = self.n;
        let mut num = vec![0i64; n];
        let mut den = vec![0i64; n];
        num[0] = 1;
        den[0] = 1;
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || self.a[i][j] == 0 || num[j] != 0 {
                    continue;
                }
                // d_j = d_i * a_{ij} / a_{ji}
                num[j] = num[i] * self.a[i][j];
                den[j] = den[i] * self.a[j][i];
                if num[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                stack.push(j);
            }
        }
        assert!(num.iter().all(|&x| x > 0) && den.iter().all(|&x| x > 0));
        let lcm_den = den.iter().fold(1i64, |acc, &x| lcm(acc, x));
        let scaled: Vec<i64> = num
            .iter()
            .zip(&den)
            .map(|(&p, &q)| p * (lcm_den / q))
            .collect();
        let g = scaled.iter().fold(0i64, |acc, &x| gcd(acc, x));
        scaled.iter().map(|&x| x / g).collect()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// A finite root system: all roots in simple-root coordinates, indexed.
#[derive(Debug, Clone)]
pub struct RootSystem {
    requested: FiniteType,
    ftype: FiniteType,
    cartan: CartanMatrix,
    d: Vec<i64>,
    positives: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(requested: FiniteType) -> Result<RootSystem> {
        requested.validate()?;
        let ftype = requested.canonical();
        let cartan = CartanMatrix::for_type(ftype);
        let d = cartan.symmetrizers();
        let positives = close_positive_roots(&cartan);
        let index = positives
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let rs = RootSystem {
            requested,
            ftype,
            cartan,
            d,
            positives,
            index,
        };
        debug_assert_eq!(rs.positives.len(), ftype.num_positive_roots());
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.cartan.n
    }

    pub fn ftype(&self) -> FiniteType {
        self.ftype
    }

    pub fn requested_type(&self) -> FiniteType {
        self.requested
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn num_positive(&self) -> usize {
        self.positives.len()
    }

    pub fn dimension(&self) -> usize {
        2 * self.num_positive() + self.rank()
    }

    pub fn positive(&self, i: usize) -> &[i64] {
        &self.positives[i]
    }

    pub fn positives(&self) -> impl Iterator<Item = &[i64]> {
        self.positives.iter().map(Vec::as_slice)
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut c = vec![0i64; self.rank()];
        c[i] = 1;
        c
    }

    /// Index of a POSITIVE root in the (height, lex-desc) order.
    pub fn positive_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// (index, sign): positive roots as themselves, negatives by negation.
    pub fn signed_index(&self, coords: &[i64]) -> Option<(usize, i64)> {
        if let Some(&i) = self.index.get(coords) {
            return Some((i, 1));
        }
        let neg: Vec<i64> = coords.iter().map(|&c| -c).collect();
        self.index.get(&neg).map(|&i| (i, -1))
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.signed_index(coords).is_some()
    }

    pub fn height(&self, coords: &[i64]) -> i64 {
        coords.iter().sum()
    }

    /// ⟨β, α_i^∨⟩ for β in simple-root coordinates.
    pub fn pairing_simple(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan.a[i][j])
            .sum()
    }

    /// Invariant form (β, γ) normalized so short simple roots have (α,α)
    /// minimal; (α_i, α_j) = d_i a_{ij}.
    pub fn bilinear(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &bi) in beta.iter().enumerate() {
            if bi == 0 {
                continue;
            }
            for (j, &gj) in gamma.iter().enumerate() {
                if gj == 0 {
                    continue;
                }
                acc += bi * gj * self.d[i] * self.cartan.a[i][j];
            }
        }
        acc
    }

    pub fn len_sq(&self, coords: &[i64]) -> i64 {
        self.bilinear(coords, coords)
    }

    /// ⟨β, α^∨⟩ = 2(β,α)/(α,α) for an arbitrary root α.
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let num = 2 * self.bilinear(beta, alpha);
        let den = self.len_sq(alpha);
        assert_eq!(num % den, 0, "pairing not integral");
        num / den
    }

    pub fn reflect_simple(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let k = self.pairing_simple(coords, i);
        let mut out = coords.to_vec();
        out[i] -= k;
        out
    }

    /// Reflection in an arbitrary root α.
    pub fn reflect(&self, alpha: &[i64], coords: &[i64]) -> Vec<i64> {
        let k = self.pairing(coords, alpha);
        coords
            .iter()
            .zip(alpha.iter())
            .map(|(&c, &a)| c - k * a)
            .collect()
    }

    /// The highest root θ.
    pub fn highest_root(&self) -> &[i64] {
        let theta = self.positives.last().expect("nonempty root system");
        let h = self.height(theta);
        debug_assert!(
            self.positives
                .iter()
                .filter(|r| self.height(r) == h)
                .count()
                == 1
        );
        theta
    }

    /// p-value of the α-string through β: max k ≥ 0 with β − kα a root.
    pub fn string_p(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let mut k = 0i64;
        loop {
            let probe: Vec<i64> = beta
                .iter()
                .zip(alpha.iter())
                .map(|(&b, &a)| b - (k + 1) * a)
                .collect();
            if probe.iter().all(|&c| c == 0) || !self.is_root(&probe) {
                return k;
            }
            k += 1;
            assert!(k <= 4, "root strings have length at most 4");
        }
    }

    pub fn sum_coords(a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b.iter()).map(|(&x, &y)| x + y).collect()
    }
}

/// Build all positive roots level by level via root strings.
fn close_positive_roots(cartan: &CartanMatrix) -> Vec<Vec<i64>> {
    let n = cartan.n;
    let mut found: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut c = vec![0i64; n];
            c[i] = 1;
            c
        })
        .collect();
    for r in &level {
        found.insert(r.clone(), ());
    }
    let mut all: Vec<Vec<i64>> = level.clone();
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                // q = p − ⟨β, α_i^∨⟩ > 0 means β + α_i is a root
                let mut p = 0i64;
                loop {
                    let mut probe = beta.clone();
                    probe[i] -= p + 1;
                    if probe.iter().all(|&c| c == 0) || !found.contains_key(&probe) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = beta
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| c * cartan.a[i][j])
                    .sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains_key(&up) {
                        found.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

/// A symmetry of the Dynkin diagram, as the 0-indexed node map π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
    pub order: u32,
}

impl DiagramAutomorphism {
    pub fn identity(n: usize) -> DiagramAutomorphism {
        DiagramAutomorphism {
            perm: (0..n).collect(),
            order: 1,
        }
    }

    /// The canonical diagram automorphism of exact order r: the first in
    /// lexicographic order of one-line notation. Errors when the diagram
    /// has none of that order.
    pub fn for_type(ftype: FiniteType, r: u32) -> Result<DiagramAutomorphism> {
        let ftype = ftype.canonical();
        let cartan = CartanMatrix::for_type(ftype);
        if r == 1 {
            return Ok(DiagramAutomorphism::identity(cartan.n));
        }
        for perm in automorphism_candidates(ftype, &cartan) {
            if perm_order(&perm) == r && preserves_cartan(&cartan, &perm) {
                return Ok(DiagramAutomorphism { perm, order: r });
            }
        }
        Err(Error::UnsupportedAffineType(format!(
            "{} has no diagram automorphism of order {}",
            ftype.name(),
            r
        )))
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Push a root through the node permutation: coefficient c_i moves to
    /// position π(i).
    pub fn apply_root(&self, coords: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; coords.len()];
        for (i, &c) in coords.iter().enumerate() {
            out[self.perm[i]] = c;
        }
        out
    }

    /// Node orbits, ordered by smallest member; each orbit lists
    /// i, π(i), π²(i), ...
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut cur = self.perm[start];
            while cur != start {
                seen[cur] = true;
                orbit.push(cur);
                cur = self.perm[cur];
            }
            out.push(orbit);
        }
        out
    }
}

fn perm_order(perm: &[usize]) -> u32 {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut order = 1u32;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut cur = start;
        loop {
            seen[cur] = true;
            len += 1;
            cur = perm[cur];
            if cur == start {
                break;
            }
        }
        order = num::integer::lcm(order, len);
    }
    order
}

fn preserves_cartan(cartan: &CartanMatrix, perm: &[usize]) -> bool {
    let n = cartan.n;
    for i in 0..n {
        for j in 0..n {
            if cartan.a[perm[i]][perm[j]] != cartan.a[i][j] {
                return false;
            }
        }
    }
    true
}

/// Candidate permutations in lexicographic one-line order. Small ranks get
/// the full symmetric group; large ranks get the known symmetries, which
/// are still verified against the Cartan matrix before use.
fn automorphism_candidates(ftype: FiniteType, cartan: &CartanMatrix) -> Vec<Vec<usize>> {
    let n = cartan.n;
    if n <= 8 {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        let mut used = vec![false; n];
        gen_perms(n, &mut prefix, &mut used, &mut out);
        out
    } else {
        let identity: Vec<usize> = (0..n).collect();
        let mut cands = vec![identity];
        match ftype.letter {
            Letter::A => cands.push((0..n).rev().collect()),
            Letter::D => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                cands.push(p);
            }
            _ => {}
        }
        cands.sort();
        cands
    }
}

fn gen_perms(n: usize, prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        prefix.push(i);
        gen_perms(n, prefix, used, out);
        prefix.pop();
        used[i] = false;
    }
}

/// All diagram automorphisms of a type, identity included.
pub fn all_diagram_automorphisms(ftype: FiniteType) -> Vec<Vec<usize>> {
    let cartan = CartanMatrix::for_type(ftype.canonical());
    automorphism_candidates(ftype.canonical(), &cartan)
        .into_iter()
        .filter(|p| preserves_cartan(&cartan, p))
        .collect()
}

/// Is (type, r) one of the admissible twists?
pub fn twist_admissible(ftype: FiniteType, r: u32) -> Result<()> {
    ftype.validate()?;
    if !(1..=3).contains(&r) {
        return Err(Error::UnsupportedAffineType(format!(
            "twist order {r} out of range"
        )));
    }
    DiagramAutomorphism::for_type(ftype, r).map(|_| ())
}

/// Label like "D4^(3)" for the affine family member built from (type, r).
pub fn affine_label(ftype: FiniteType, r: u32) -> String {
    format!("{}^({})", ftype.name(), r)
}

/// The smallest member of each of the sixteen affine families. B2 and C2
/// name the same algebra, so those two rows coincide up to the alias.
pub fn minimal_representatives() -> Vec<(FiniteType, u32)> {
    let t = |letter, rank| FiniteType { letter, rank };
    vec![
        (t(Letter::A, 1), 1),
        (t(Letter::A, 2), 1),
        (t(Letter::A, 2), 2),
        (t(Letter::B, 2), 1),
        (t(Letter::C, 2), 1),
        (t(Letter::D, 4), 1),
        (t(Letter::D, 4), 2),
        (t(Letter::D, 4), 3),
        (t(Letter::D, 5), 1),
        (t(Letter::D, 5), 2),
        (t(Letter::G, 2), 1),
        (t(Letter::F, 4), 1),
        (t(Letter::E, 6), 1),
        (t(Letter::E, 6), 2),
        (t(Letter::E, 7), 1),
        (t(Letter::E, 8), 1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(FiniteType::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts_match_the_classification() {
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A5", 15),
            ("B3", 9),
            ("C2", 4),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(rs(name).num_positive(), count, "{name}");
        }
    }

    #[test]
    fn highest_roots_match_known_coordinates() {
        assert_eq!(rs("A2").highest_root(), &[1, 1]);
        assert_eq!(rs("G2").highest_root(), &[3, 2]);
        assert_eq!(rs("F4").highest_root(), &[2, 3, 4, 2]);
        assert_eq!(rs("D4").highest_root(), &[1, 2, 1, 1]);
        assert_eq!(rs("E8").height(rs("E8").highest_root()), 29);
    }

    #[test]
    fn roots_are_closed_under_simple_reflections() {
        for name in ["A3", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let r = rs(name);
            let roots: Vec<Vec<i64>> = r.positives().map(|p| p.to_vec()).collect();
            for beta in &roots {
                for i in 0..r.rank() {
                    assert!(r.is_root(&r.reflect_simple(i, beta)), "{name}");
                }
                // and under the reflection in θ
                assert!(r.is_root(&r.reflect(r.highest_root(), beta)), "{name}");
            }
        }
    }

    #[test]
    fn string_arithmetic_is_consistent() {
        // p − q = ⟨β, α_i^∨⟩ for every root β and simple α_i
        for name in ["B3", "G2", "F4", "D4"] {
            let r = rs(name);
            let roots: Vec<Vec<i64>> = r.positives().map(|p| p.to_vec()).collect();
            for beta in &roots {
                for i in 0..r.rank() {
                    let alpha = r.simple_root(i);
                    if beta == &alpha {
                        continue;
                    }
                    let p = r.string_p(&alpha, beta);
                    let mut q = 0i64;
                    loop {
                        let mut probe = beta.clone();
                        probe[i] += q + 1;
                        if !r.is_root(&probe) {
                            break;
                        }
                        q += 1;
                    }
                    assert_eq!(p - q, r.pairing_simple(beta, i), "{name}");
                }
            }
        }
    }

    #[test]
    fn root_lengths_come_in_at_most_two_sizes() {
        let b3 = rs("B3");
        assert_eq!(b3.len_sq(&b3.simple_root(0)), 4);
        assert_eq!(b3.len_sq(&b3.simple_root(2)), 2);
        let g2 = rs("G2");
        assert_eq!(g2.len_sq(&g2.simple_root(0)), 2);
        assert_eq!(g2.len_sq(&g2.simple_root(1)), 6);
        assert_eq!(g2.len_sq(g2.highest_root()), 6);
        let f4 = rs("F4");
        assert_eq!(f4.symmetrizer(0), 2);
        assert_eq!(f4.symmetrizer(3), 1);
    }

    #[test]
    fn b2_is_the_c2_alias() {
        let b2 = rs("B2");
        let c2 = rs("C2");
        assert_eq!(b2.cartan(), c2.cartan());
        assert_eq!(b2.cartan().a, vec![vec![2, -2], vec![-1, 2]]);
        assert!(b2.requested_type().is_alias());
        assert!(!c2.requested_type().is_alias());
        assert_eq!(b2.ftype().name(), "C2");
    }

    #[test]
    fn rejects_non_simple_ranks() {
        assert!(FiniteType::parse("D3").is_err());
        assert!(FiniteType::parse("E9").is_err());
        assert!(FiniteType::parse("F5").is_err());
        assert!(FiniteType::parse("B1").is_err());
        assert!(FiniteType::parse("A0").is_err());
        assert!(FiniteType::parse("H4").is_err());
        assert!(FiniteType::parse("A17").is_err());
    }

    #[test]
    fn canonical_automorphisms_are_the_pinned_ones() {
        let tri = DiagramAutomorphism::for_type(FiniteType::parse("D4").unwrap(), 3).unwrap();
        assert_eq!(tri.perm, vec![2, 1, 3, 0]);
        let d4_swap = DiagramAutomorphism::for_type(FiniteType::parse("D4").unwrap(), 2).unwrap();
        assert_eq!(d4_swap.perm, vec![0, 1, 3, 2]);
        let e6 = DiagramAutomorphism::for_type(FiniteType::parse("E6").unwrap(), 2).unwrap();
        assert_eq!(e6.perm, vec![5, 1, 4, 3, 2, 0]);
        let a2 = DiagramAutomorphism::for_type(FiniteType::parse("A2").unwrap(), 2).unwrap();
        assert_eq!(a2.perm, vec![1, 0]);
        let a9 = DiagramAutomorphism::for_type(FiniteType::parse("A9").unwrap(), 2).unwrap();
        assert_eq!(a9.perm, (0..9).rev().collect::<Vec<_>>());
        let d10 = DiagramAutomorphism::for_type(FiniteType::parse("D10").unwrap(), 2).unwrap();
        assert_eq!(d10.orbits().len(), 9);
    }

    #[test]
    fn inadmissible_twists_are_rejected() {
        for (name, r) in [
            ("A1", 2),
            ("B3", 2),
            ("C3", 2),
            ("G2", 2),
            ("F4", 2),
            ("E7", 2),
            ("E8", 2),
            ("A4", 3),
            ("D5", 3),
            ("E6", 3),
        ] {
            assert!(
                twist_admissible(FiniteType::parse(name).unwrap(), r).is_err(),
                "{name} r={r}"
            );
        }
        for (name, r) in [("A2", 2), ("A4", 2), ("D4", 3), ("D5", 2), ("E6", 2)] {
            assert!(
                twist_admissible(FiniteType::parse(name).unwrap(), r).is_ok(),
                "{name} r={r}"
            );
        }
    }

    #[test]
    fn d4_has_the_full_symmetric_group_of_the_fork() {
        assert_eq!(
            all_diagram_automorphisms(FiniteType::parse("D4").unwrap()).len(),
            6
        );
        assert_eq!(
            all_diagram_automorphisms(FiniteType::parse("E7").unwrap()).len(),
            1
        );
    }

    #[test]
    fn triality_permutes_roots_with_six_fixed() {
        let d4 = rs("D4");
        let tri = DiagramAutomorphism::for_type(d4.ftype(), 3).unwrap();
        let mut fixed = 0;
        for beta in d4.positives() {
            let image = tri.apply_root(beta);
            assert!(d4.is_root(&image));
            if image == beta {
                fixed += 1;
            }
        }
        assert_eq!(fixed, 3); // c_1 = c_3 = c_4: α_2, α_1+α_2+α_3+α_4, θ
    }

    #[test]
    fn sixteen_minimal_representatives() {
        let reps = minimal_representatives();
        assert_eq!(reps.len(), 16);
        for (t, r) in &reps {
            twist_admissible(*t, *r).unwrap();
        }
        assert_eq!(affine_label(reps[2].0, reps[2].1), "A2^(2)");
    }
}
