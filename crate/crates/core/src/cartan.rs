//! Cartan types and root-system data.
//!
//! Roots are integer vectors in the simple-root basis and weights are integer
//! vectors in the fundamental-weight basis. The Cartan matrix uses the
//! convention `cartan[i][j] = α_j(H_i)`, the pairing of the `j`-th simple
//! root with the `i`-th simple coroot, so column `j` is `α_j` written in
//! fundamental-weight coordinates. Simple roots are numbered as in Bourbaki.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One simple factor of a semisimple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub family: Family,
    pub rank: usize,
}

impl Factor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.valid_rank(rank) {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    /// Order of the Weyl group of this factor.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Cartan matrix of the factor, `m[i][j] = α_j(H_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n.saturating_sub(1) {
                    link(i - 1, i);
                }
                if n >= 3 {
                    link(n - 3, n - 1);
                }
            }
            Family::E => {
                // 1-3-4-5-6-..., with 2 attached to 4
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            Family::F | Family::G => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
        }
        match self.family {
            // α_n short
            Family::B if n >= 2 => m[n - 1][n - 2] = -2,
            // α_n long
            Family::C if n >= 2 => m[n - 2][n - 1] = -2,
            // α_1, α_2 long; α_3, α_4 short
            Family::F => m[2][1] = -2,
            // α_1 short, α_2 long
            Family::G => m[0][1] = -3,
            _ => {}
        }
        m
    }

    /// Squared root lengths of the simple roots up to a common scale, chosen
    /// so that `d[i] * cartan[i][j]` is symmetric.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
            _ => vec![1; n],
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A semisimple Cartan type: an ordered product of simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    factors: Vec<Factor>,
}

impl CartanType {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::MalformedType(String::new()));
        }
        for f in &factors {
            Factor::new(f.family, f.rank)?;
        }
        Ok(Self { factors })
    }

    /// Shorthand for a simple type, panicking on invalid input.
    pub fn simple(family: Family, rank: usize) -> Self {
        Self::new(vec![Factor::new(family, rank).expect("valid simple type")]).unwrap()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Order of the Weyl group, saturating at `u64::MAX`.
    pub fn weyl_order(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, f| acc.saturating_mul(f.weyl_order()))
    }

    /// Index of the first generator belonging to each factor.
    pub fn factor_offsets(&self) -> Vec<usize> {
        self.factors
            .iter()
            .scan(0, |acc, f| {
                let start = *acc;
                *acc += f.rank;
                Some(start)
            })
            .collect()
    }
}

/// Parses a product expression such as `A3`, `b2`, or `A1xA1`.
pub fn parse_type(spec: &str) -> Result<CartanType> {
    let malformed = || Error::MalformedType(spec.to_string());
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Err(malformed());
    }
    let mut factors = Vec::new();
    for part in trimmed.split(['x', 'X']) {
        let part = part.trim();
        let mut chars = part.chars();
        let family = chars
            .next()
            .and_then(Family::from_char)
            .ok_or_else(malformed)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let rank: usize = digits.parse().map_err(|_| malformed())?;
        factors.push(Factor::new(family, rank)?);
    }
    CartanType::new(factors)
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_type(s)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Root-system data for a (product of) simple Cartan type(s).
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    coxeter_numbers: Vec<u64>,
    factor_of: Vec<usize>,
}

impl RootSystem {
    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, sorted by height; the
    /// first `rank` entries are the simple roots in generator order.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.positive_roots[i]
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn coxeter_numbers(&self) -> &[u64] {
        &self.coxeter_numbers
    }

    /// The factor a generator belongs to.
    pub fn factor_of(&self, generator: usize) -> usize {
        self.factor_of[generator]
    }

    /// The weight δ (half the sum of positive roots), all ones in
    /// fundamental-weight coordinates.
    pub fn delta(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// Pairing of a root (simple-root coordinates) with the `i`-th simple coroot.
    pub fn coroot_pairing(&self, i: usize, root: &[i64]) -> i64 {
        self.cartan[i].iter().zip(root).map(|(a, c)| a * c).sum()
    }

    /// Simple reflection `s_i` applied to a root in simple-root coordinates.
    pub fn reflect_root(&self, i: usize, root: &[i64]) -> Vec<i64> {
        let p = self.coroot_pairing(i, root);
        let mut out = root.to_vec();
        out[i] -= p;
        out
    }

    /// `true` when generators `i` and `j` are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Coxeter exponent `m_ij`, the order of `s_i s_j`.
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> u64 {
        if i == j {
            return 1;
        }
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("crystallographic product {p}"),
        }
    }

    /// Invariant form `(α, β)` on roots in simple-root coordinates, scaled by
    /// the symmetrizer.
    pub fn root_inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for ((&ai, &d), row) in a.iter().zip(&self.symmetrizer).zip(&self.cartan) {
            if ai == 0 {
                continue;
            }
            acc += ai * d * row.iter().zip(b).map(|(&c, &bj)| c * bj).sum::<i64>();
        }
        acc
    }

    /// `⟨λ, β∨⟩` for a weight in fundamental-weight coordinates and a root.
    pub fn weight_coroot_pairing(&self, weight: &[i64], root: &[i64]) -> i64 {
        // (λ, α_j) = λ_j d_j
        let num: i64 = root
            .iter()
            .zip(weight)
            .zip(&self.symmetrizer)
            .map(|((c, l), d)| c * l * d)
            .sum();
        let norm = self.root_inner(root, root);
        debug_assert_eq!((2 * num) % norm, 0);
        2 * num / norm
    }
}

/// Builds the root system by closing the simple roots under simple reflections.
pub fn build_root_system(t: &CartanType) -> RootSystem {
    let rank = t.rank();
    let mut cartan = vec![vec![0i64; rank]; rank];
    let mut symmetrizer = Vec::with_capacity(rank);
    let mut factor_of = Vec::with_capacity(rank);
    for (fi, (factor, offset)) in t.factors().iter().zip(t.factor_offsets()).enumerate() {
        let block = factor.cartan_matrix();
        for i in 0..factor.rank {
            for j in 0..factor.rank {
                cartan[offset + i][offset + j] = block[i][j];
            }
            factor_of.push(fi);
        }
        symmetrizer.extend(factor.symmetrizer());
    }

    let coroot_pairing =
        |i: usize, root: &[i64]| -> i64 { cartan[i].iter().zip(root).map(|(a, c)| a * c).sum() };

    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone(), ());
        queue.push_back(e);
    }
    while let Some(root) = queue.pop_front() {
        for i in 0..rank {
            let p = coroot_pairing(i, &root);
            let mut image = root.clone();
            image[i] -= p;
            if image.iter().all(|&c| c >= 0) && !seen.contains_key(&image) {
                seen.insert(image.clone(), ());
                queue.push_back(image);
            }
        }
        roots.push(root);
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let root_index = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();

    let mut rs = RootSystem {
        cartan_type: t.clone(),
        cartan,
        symmetrizer,
        positive_roots: roots,
        root_index,
        coxeter_numbers: Vec::new(),
        factor_of,
    };
    rs.coxeter_numbers = (0..t.factors().len())
        .map(|fi| coxeter_element_order(&rs, fi))
        .collect();
    rs
}

/// Order of `s_first ⋯ s_last` for the generators of one factor, acting on
/// the root lattice.
fn coxeter_element_order(rs: &RootSystem, factor: usize) -> u64 {
    let gens: Vec<usize> = (0..rs.rank())
        .filter(|&g| rs.factor_of(g) == factor)
        .collect();
    let apply = |v: &[i64]| -> Vec<i64> {
        let mut out = v.to_vec();
        for &g in gens.iter().rev() {
            out = rs.reflect_root(g, &out);
        }
        out
    };
    let basis: Vec<Vec<i64>> = gens.iter().map(|&g| rs.simple_root(g).to_vec()).collect();
    let mut images = basis.clone();
    let mut order = 1;
    loop {
        images = images.iter().map(|v| apply(v)).collect();
        if images == basis {
            return order;
        }
        order += 1;
    }
}

/// Coxeter number of the `factor_index`-th simple factor.
pub fn coxeter_number(t: &CartanType, factor_index: usize) -> Result<u64> {
    let count = t.factors().len();
    if factor_index >= count {
        return Err(Error::IndexOutOfRange {
            index: factor_index,
            bound: count,
        });
    }
    let single = CartanType::new(vec![t.factors()[factor_index]])?;
    Ok(build_root_system(&single).coxeter_numbers()[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CartanType {
        parse_type(s).unwrap()
    }

    #[test]
    fn parses_products_case_insensitively() {
        assert_eq!(
            t("A2").factors(),
            &[Factor {
                family: Family::A,
                rank: 2
            }]
        );
        assert_eq!(
            t("a1XA1").factors(),
            &[
                Factor {
                    family: Family::A,
                    rank: 1
                },
                Factor {
                    family: Family::A,
                    rank: 1
                }
            ]
        );
        assert_eq!(t("b3 x g2").to_string(), "B3xG2");
    }

    #[test]
    fn rejects_bad_types() {
        assert_eq!(
            parse_type("E9"),
            Err(Error::InvalidRank {
                family: Family::E,
                rank: 9
            })
        );
        assert!(matches!(parse_type("F3"), Err(Error::InvalidRank { .. })));
        assert!(matches!(parse_type("D1"), Err(Error::InvalidRank { .. })));
        assert!(matches!(parse_type("A0"), Err(Error::InvalidRank { .. })));
        for bad in ["", "Q2", "A", "A2x", "2A", "A-1", "A2xxB2"] {
            assert!(
                matches!(parse_type(bad), Err(Error::MalformedType(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
        ];
        for (name, count) in expected {
            assert_eq!(build_root_system(&t(name)).num_positive(), count, "{name}");
        }
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(coxeter_number(&t("A2"), 0), Ok(3));
        assert_eq!(coxeter_number(&t("A4"), 0), Ok(5));
        assert_eq!(coxeter_number(&t("B2"), 0), Ok(4));
        assert_eq!(coxeter_number(&t("G2"), 0), Ok(6));
        assert_eq!(coxeter_number(&t("F4"), 0), Ok(12));
        assert_eq!(coxeter_number(&t("E8"), 0), Ok(30));
        assert_eq!(coxeter_number(&t("A1xB3"), 1), Ok(6));
        assert!(coxeter_number(&t("A2"), 1).is_err());
    }

    #[test]
    fn root_count_matches_rank_times_coxeter_over_two() {
        for name in ["A1", "A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let rs = build_root_system(&t(name));
            let h = rs.coxeter_numbers()[0] as usize;
            assert_eq!(rs.num_positive() * 2, rs.rank() * h, "{name}");
        }
    }

    #[test]
    fn cartan_structure() {
        for name in ["A3", "B3", "C3", "D4", "E6", "F4", "G2", "A2xB2"] {
            let rs = build_root_system(&t(name));
            let c = rs.cartan_matrix();
            let d = rs.symmetrizer();
            for i in 0..rs.rank() {
                assert_eq!(c[i][i], 2);
                for j in 0..rs.rank() {
                    assert_eq!(d[i] * c[i][j], d[j] * c[j][i], "{name} symmetrizer");
                }
            }
        }
    }

    #[test]
    fn closure_is_stable_under_reflections() {
        for name in ["B3", "G2", "F4", "D4"] {
            let rs = build_root_system(&t(name));
            for root in rs.positive_roots() {
                assert!(root.iter().all(|&c| c >= 0));
                for i in 0..rs.rank() {
                    let image = rs.reflect_root(i, root);
                    let neg: Vec<i64> = image.iter().map(|c| -c).collect();
                    assert!(rs.root_index(&image).is_some() || rs.root_index(&neg).is_some());
                }
            }
        }
    }

    #[test]
    fn coroot_pairing_with_delta_is_positive() {
        // ⟨δ, β∨⟩ is the coroot height, positive for all positive roots
        for name in ["B3", "C3", "G2", "F4"] {
            let rs = build_root_system(&t(name));
            for (i, root) in rs.positive_roots().iter().enumerate() {
                let p = rs.weight_coroot_pairing(&rs.delta(), root);
                assert!(p >= 1);
                if i < rs.rank() {
                    assert_eq!(p, 1);
                }
            }
        }
    }
}
