//! Homological invariants of thickenings, domains of discontinuity and
//! their compact quotients, as rank formulas over `W/W_D`.
//!
//! The topological meaning of these numbers assumes the setting in which
//! the underlying bundles are trivial (G-Fuchsian representations); the
//! formulas themselves are computed unconditionally.

use std::ops::{Add, Mul, Sub};

use num_traits::{Float, Num};
use serde::{Deserialize, Serialize};

use crate::bruhat::{BruhatOrder, Ideal};
use crate::error::{ensure, Error, Result};
use crate::families::{
    distinction_witness, distinction_witness_mu, lower_half_ideal, perm_length, principal_2n_ideal,
    Permutation, TypeA, Verify,
};
use crate::parabolic::Parabolic;

/// A polynomial with coefficients from degree 0, kept without trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Num + Clone> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^degree`
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `1 − t^degree`
    pub fn one_minus_power(degree: usize) -> Self {
        Self::one() - Self::monomial(T::one(), degree)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Exact division; fails unless the remainder is zero and every
    /// quotient coefficient divides exactly.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some(d) = divisor.degree() else {
            return Err(Error::InexactDivision);
        };
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let top = rem[i + d].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.clone() / lead.clone();
            if q.clone() * lead.clone() != top {
                return Err(Error::InexactDivision);
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * c.clone();
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }
}

impl<T: Num + Clone> Add for Polynomial<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Num + Clone> Sub for Polynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Num + Clone> Mul for Polynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<T: Num + Clone> std::iter::Product for Polynomial<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

/// Betti numbers `b_k` indexed by real degree `k`, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedRanks {
    ranks: Vec<u64>,
}

impl GradedRanks {
    pub fn new(mut ranks: Vec<u64>) -> Self {
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        Self { ranks }
    }

    /// Places `even[k]` in degree `2k`.
    pub fn from_even(even: &[u64]) -> Self {
        let mut ranks = vec![0; 2 * even.len()];
        for (k, &r) in even.iter().enumerate() {
            ranks[2 * k] = r;
        }
        Self::new(ranks)
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.ranks.get(degree).copied().unwrap_or(0)
    }

    /// `b_{2k}`
    pub fn even(&self, k: usize) -> u64 {
        self.get(2 * k)
    }

    /// The even-degree ranks `b_0, b_2, …`.
    pub fn even_ranks(&self) -> Vec<u64> {
        (0..self.ranks.len().div_ceil(2))
            .map(|k| self.even(k))
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    pub fn has_odd_support(&self) -> bool {
        self.ranks.iter().skip(1).step_by(2).any(|&r| r != 0)
    }

    pub fn to_polynomial(&self) -> crate::IntPoly {
        Polynomial::new(self.ranks.iter().map(|&r| r as i64).collect())
    }
}

/// `r_k(I)`: cosets of `I/W_D` by quotient length, indexed `0..=ℓ(w₀W_D)`.
pub fn coset_ranks(order: &BruhatOrder, p: &Parabolic, ideal: &Ideal) -> Result<Vec<u64>> {
    let g = order.group();
    let mut r = vec![0u64; p.max_quotient_length() + 1];
    for (_, len) in p.quotient_ideal(g, ideal)? {
        r[len] += 1;
    }
    Ok(r)
}

fn at(r: &[u64], k: isize) -> u64 {
    if k < 0 {
        0
    } else {
        r.get(k as usize).copied().unwrap_or(0)
    }
}

/// Homology of the model thickening `Φ^I`: rank `r_k` in degree `2k`, odd
/// degrees zero.
pub fn thickening_ranks(order: &BruhatOrder, p: &Parabolic, ideal: &Ideal) -> Result<GradedRanks> {
    Ok(GradedRanks::from_even(&coset_ranks(order, p, ideal)?))
}

fn orthogonal_invariant(order: &BruhatOrder, p: &Parabolic, ideal: &Ideal) -> Result<Ideal> {
    let perp = order.orthogonal(ideal)?;
    if !p.is_right_invariant(order.group(), &perp) {
        return Err(Error::NotInvariant { side: "right" });
    }
    Ok(perp)
}

/// Betti numbers of `Ω^I` for slim `I`:
/// `b_{2k} = r_{n−1−k}(I) + r_k(I⊥)` with `n = ℓ(w₀W_D)`, odd Betti numbers zero.
pub fn omega_betti(order: &BruhatOrder, p: &Parabolic, ideal: &Ideal) -> Result<GradedRanks> {
    if !order.classify(ideal)?.slim {
        return Err(Error::precondition("ideal is not slim"));
    }
    let r = coset_ranks(order, p, ideal)?;
    let perp = orthogonal_invariant(order, p, ideal)?;
    let r_perp = coset_ranks(order, p, &perp)?;
    let n = p.max_quotient_length() as isize;
    let even: Vec<u64> = (0..=n)
        .map(|k| at(&r, n - 1 - k) + at(&r_perp, k))
        .collect();
    Ok(GradedRanks::from_even(&even))
}

/// `χ(Ω^I) = |W/W_D|` for balanced `I`, checked against the Betti numbers.
pub fn euler_omega(order: &BruhatOrder, p: &Parabolic, ideal: &Ideal) -> Result<i64> {
    if !order.classify(ideal)?.balanced {
        return Err(Error::precondition("ideal is not balanced"));
    }
    let chi = omega_betti(order, p, ideal)?.euler_characteristic();
    let cosets = p.num_cosets() as i64;
    ensure(chi == cosets, "χ(Ω) = |W/W_D|", || {
        format!("χ = {chi}, |W/W_D| = {cosets}")
    })?;
    Ok(chi)
}

/// Homology of the quotient manifold `W ≅ S × Ω` (ranks only):
/// `b_k = b_k(Ω) + 2g·b_{k−1}(Ω) + b_{k−2}(Ω)`.
pub fn quotient_homology(omega: &GradedRanks, genus: u64) -> Result<GradedRanks> {
    if genus < 2 {
        return Err(Error::precondition(format!(
            "genus must be at least 2, got {genus}"
        )));
    }
    if omega.has_odd_support() {
        return Err(Error::precondition(
            "domain homology has odd-degree classes",
        ));
    }
    let len = omega.ranks().len() + 2;
    let b = |k: usize| omega.get(k);
    Ok(GradedRanks::new(
        (0..len)
            .map(|k| {
                b(k) + if k >= 1 { 2 * genus * b(k - 1) } else { 0 }
                    + if k >= 2 { b(k - 2) } else { 0 }
            })
            .collect(),
    ))
}

/// Checks `#{cosets of length k} = r_k(I) + r_{n−k}(I⊥)` for every `k`.
pub fn splitting_check(order: &BruhatOrder, p: &Parabolic, ideal: &Ideal) -> Result<bool> {
    let r = coset_ranks(order, p, ideal)?;
    let perp = orthogonal_invariant(order, p, ideal)?;
    let r_perp = coset_ranks(order, p, &perp)?;
    let counts = p.coset_length_counts(order.group());
    let n = p.max_quotient_length() as isize;
    Ok((0..=n).all(|k| counts[k as usize] == at(&r, k) + at(&r_perp, n - k)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HausdorffReport<F> {
    /// Upper bound `dim ξ(∂π) + 2·max ℓ(I/W_D)` on the limit set dimension.
    pub bound: F,
    /// `n = dim_C G/P_D`.
    pub n: usize,
    pub max_length: usize,
    /// `bound < 2n`: the domain is non-empty.
    pub nonempty: bool,
    /// `bound < 2n − 2`: `m_{2n−2}(Λ) = 0`.
    pub m_2n_minus_2_vanishes: bool,
    /// `bound < 2n − 4`: `m_{2n−4}(Λ) = 0`.
    pub m_2n_minus_4_vanishes: bool,
}

pub fn hausdorff_bound<F: Float>(
    order: &BruhatOrder,
    p: &Parabolic,
    ideal: &Ideal,
    curve_dim: F,
) -> Result<HausdorffReport<F>> {
    let two = F::one() + F::one();
    if !(curve_dim >= F::zero() && curve_dim <= two) {
        return Err(Error::precondition(
            "limit curve dimension must lie in [0, 2]",
        ));
    }
    if !order.classify(ideal)?.slim {
        return Err(Error::precondition("ideal is not slim"));
    }
    let lengths = p.quotient_ideal(order.group(), ideal)?;
    let max_length = lengths
        .iter()
        .map(|&(_, l)| l)
        .max()
        .ok_or_else(|| Error::precondition("ideal is empty"))?;
    let n = p.max_quotient_length();
    let as_f = |v: usize| F::from(v).expect("small integers are representable");
    let bound = curve_dim + as_f(2 * max_length);
    let below = |limit: isize| limit > 0 && bound < as_f(limit as usize);
    let n2 = 2 * n as isize;
    Ok(HausdorffReport {
        bound,
        n,
        max_length,
        nonempty: below(n2),
        m_2n_minus_2_vanishes: below(n2 - 2),
        m_2n_minus_4_vanishes: below(n2 - 4),
    })
}

/// Poincaré polynomial of the full flag variety of `C^m`:
/// `∏_{i=1}^{m−1} (1 − t^{2(i+1)}) / (1 − t²)^{m−1}`.
pub fn flag_poincare(m: usize) -> Result<crate::IntPoly> {
    if m == 0 {
        return Err(Error::precondition("need m ≥ 1"));
    }
    let numerator: crate::IntPoly = (1..m)
        .map(|i| Polynomial::one_minus_power(2 * (i + 1)))
        .product();
    divide_repeatedly(numerator, m - 1)
}

fn divide_repeatedly(mut p: crate::IntPoly, times: usize) -> Result<crate::IntPoly> {
    let d = Polynomial::one_minus_power(2);
    for _ in 0..times {
        p = p.div_exact(&d)?;
    }
    Ok(p)
}

/// Poincaré polynomial of `Ω_{2n}`:
/// `(1 + t^{2n−2})(1 − t^{2n}) ∏_{i=1}^{2n−2} (1 − t^{2(i+1)}) / (1 − t²)^{2n−1}`.
pub fn omega2n_closed_form(n: usize) -> Result<crate::IntPoly> {
    if n == 0 {
        return Err(Error::precondition("need n ≥ 1"));
    }
    let numerator = (Polynomial::one() + Polynomial::monomial(1, 2 * n - 2))
        * Polynomial::one_minus_power(2 * n)
        * (1..=2 * n - 2)
            .map(|i| Polynomial::one_minus_power(2 * (i + 1)))
            .product();
    divide_repeatedly(numerator, 2 * n - 1)
}

/// `b_{2k}(Ω_{1,n−1})`: `2n−2` if `k = n−2`, else `max(0, n−1−|n−k−2|)`.
pub fn incidence_betti(n: usize, k: usize) -> u64 {
    let (n, k) = (n as i64, k as i64);
    if k == n - 2 {
        (2 * n - 2) as u64
    } else {
        (n - 1 - (n - k - 2).abs()).max(0) as u64
    }
}

/// `(1 − t^{2(n−1)})² / (1 − t²)² + (n−1) t^{2n−4}`, the closed form of the
/// incidence Poincaré polynomial.
pub fn incidence_poincare(n: usize) -> Result<crate::IntPoly> {
    if n < 2 {
        return Err(Error::precondition("need n ≥ 2"));
    }
    let head = divide_repeatedly(Polynomial::one_minus_power(2 * (n - 1)).pow(2), 2)?;
    Ok(head + Polynomial::monomial((n - 1) as i64, 2 * n - 4))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctionReport {
    pub j: usize,
    /// `n = 2j+1`; the group is `S_{2n}`.
    pub n: usize,
    /// `k = j(4j+3)`, with `ℓ(w₀) = 2k+1`.
    pub k: usize,
    pub b_lower_half: u64,
    pub b_principal: u64,
    /// `#ℓ⁻¹(k)` in `S_{2n}`.
    pub middle_count: u64,
    pub strict: bool,
    /// The tuple μ as usually written, and its actual length.
    pub mu: Permutation,
    pub mu_length: usize,
    /// An element of `ℓ⁻¹(k) ∖ I_{2n}`.
    pub witness: Permutation,
}

/// Compares `b_{2k}(Ω_{1/2})` with `b_{2k}(Ω_{2n})` in `S_{2n}`, `n = 2j+1`.
/// The quotient manifolds' `b_{2k+1}` are `2g` times these, so a strict
/// inequality distinguishes them.
pub fn homotopy_distinction(j: usize, max_order: usize) -> Result<DistinctionReport> {
    if j == 0 {
        return Err(Error::precondition("need j ≥ 1"));
    }
    let n = 2 * j + 1;
    let k = j * (4 * j + 3);
    let a = TypeA::with_max_order(2 * n, max_order)?;
    let order = a.order();
    let g = a.group();
    ensure(g.max_length() == 2 * k + 1, "ℓ(w₀) = 2k+1", || {
        format!("ℓ(w₀) = {}", g.max_length())
    })?;
    let trivial = Parabolic::trivial(g);
    let half = lower_half_ideal(order, Verify::Always)?;
    let principal = principal_2n_ideal(&a, Verify::Always)?;
    let b_lower_half = omega_betti(order, &trivial, &half.ideal)?.even(k);
    let b_principal = omega_betti(order, &trivial, &principal.ideal)?.even(k);
    let middle_count = g.length_histogram()[k];
    ensure(
        b_lower_half == 2 * middle_count,
        "b_2k(Ω_1/2) = 2·#ℓ⁻¹(k)",
        || format!("{b_lower_half} vs 2·{middle_count}"),
    )?;
    let mu = distinction_witness_mu(j)?;
    let witness = distinction_witness(j)?;
    let w = a.elem(&witness)?;
    ensure(
        g.length(w) == k && !principal.ideal.contains(w),
        "witness lies in ℓ⁻¹(k) ∖ I_2n",
        || format!("{witness}"),
    )?;
    Ok(DistinctionReport {
        j,
        n,
        k,
        b_lower_half,
        b_principal,
        middle_count,
        strict: b_principal < b_lower_half,
        mu_length: perm_length(&mu),
        mu,
        witness,
    })
}
