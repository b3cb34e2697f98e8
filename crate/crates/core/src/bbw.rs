//! Borel–Bott–Weil combinatorics on integral weights.
//!
//! Weights are integer vectors in fundamental-weight coordinates, i.e.
//! `λ_i = λ(H_{α_i})`. `δ` is the all-ones vector. Inputs are taken in the
//! full lattice of algebraically integral weights; for groups that are not
//! simply connected the caller restricts to the analytically integral ones.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::weyl::{Elem, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegralWeight(pub Vec<i64>);

impl IntegralWeight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `δ`, half the sum of the positive roots.
    pub fn delta(rank: usize) -> Self {
        Self(vec![1; rank])
    }

    /// The `i`-th fundamental weight.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn check(&self, g: &WeylGroup) -> Result<()> {
        if self.0.len() != g.rank() {
            return Err(Error::precondition(format!(
                "weight has {} coordinates, rank is {}",
                self.0.len(),
                g.rank()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for IntegralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for IntegralWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate `{t}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

/// `s_j(λ) = λ − λ_j α_j`, with `α_j = Σ_i α_j(H_i) ω_i`.
fn reflect(g: &WeylGroup, j: usize, lambda: &mut [i64]) {
    let c = g.root_system().cartan_matrix();
    let lj = lambda[j];
    for (i, li) in lambda.iter_mut().enumerate() {
        *li -= lj * c[i][j];
    }
}

/// `w(λ)`.
pub fn weyl_act(g: &WeylGroup, w: Elem, lambda: &IntegralWeight) -> Result<IntegralWeight> {
    lambda.check(g)?;
    let w = g.check(w)?;
    let mut v = lambda.0.clone();
    for &s in g.reduced_word(w).letters().iter().rev() {
        reflect(g, s, &mut v);
    }
    Ok(IntegralWeight(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum WeightClass {
    /// The dominant representative of the orbit has a zero coordinate.
    NotRegular { dominant_form: IntegralWeight },
    /// `w(λ)` is strictly dominant for the unique `w`.
    Regular {
        w: Elem,
        length: usize,
        dominant_form: IntegralWeight,
    },
}

/// Finds `u` with `u(λ)` dominant by reflecting negative coordinates away.
fn dominant_form(g: &WeylGroup, lambda: &IntegralWeight) -> (Elem, IntegralWeight) {
    let mut v = lambda.0.clone();
    let mut u = g.identity();
    while let Some(i) = v.iter().position(|&c| c < 0) {
        reflect(g, i, &mut v);
        u = g.gen_mul(i, u);
    }
    (u, IntegralWeight(v))
}

pub fn classify_weight(g: &WeylGroup, lambda: &IntegralWeight) -> Result<WeightClass> {
    lambda.check(g)?;
    let (w, dominant) = dominant_form(g, lambda);
    debug_assert_eq!(weyl_act(g, w, lambda).ok(), Some(dominant.clone()));
    Ok(if dominant.is_strictly_dominant() {
        WeightClass::Regular {
            w,
            length: g.length(w),
            dominant_form: dominant,
        }
    } else {
        WeightClass::NotRegular {
            dominant_form: dominant,
        }
    })
}

/// `∏_{α>0} ⟨μ+δ, α∨⟩ / ⟨δ, α∨⟩` for dominant `μ`.
pub fn weyl_dimension(g: &WeylGroup, mu: &IntegralWeight) -> Result<u128> {
    mu.check(g)?;
    if !mu.is_dominant() {
        return Err(Error::precondition(format!("{mu} is not dominant")));
    }
    let rs = g.root_system();
    let shifted = mu.add(&IntegralWeight::delta(g.rank()));
    let delta = IntegralWeight::delta(g.rank());
    let dim = rs
        .positive_roots()
        .iter()
        .fold(Ratio::from_integer(1i128), |acc, root| {
            acc * Ratio::new(
                rs.weight_coroot_pairing(&shifted.0, root) as i128,
                rs.weight_coroot_pairing(&delta.0, root) as i128,
            )
        });
    ensure(
        dim.is_integer() && dim > Ratio::from_integer(0),
        "Weyl dimension formula is a positive integer",
        || format!("got {dim}"),
    )?;
    Ok(dim.to_integer() as u128)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum BbwCohomology {
    /// `H^i(G/B, L^λ) = 0` for every `i`.
    AllVanish,
    /// The only nonzero group, `H^degree`, is dual to the irreducible
    /// representation of highest weight `w(λ) − δ`.
    Nonzero {
        degree: usize,
        w: Elem,
        highest_weight: IntegralWeight,
        dimension: u128,
    },
}

/// Cohomology of `L^λ = L_{δ−λ}` on `G/B`.
pub fn bbw_cohomology(g: &WeylGroup, lambda: &IntegralWeight) -> Result<BbwCohomology> {
    Ok(match classify_weight(g, lambda)? {
        WeightClass::NotRegular { .. } => BbwCohomology::AllVanish,
        WeightClass::Regular {
            w,
            length,
            dominant_form,
        } => {
            let highest_weight = dominant_form.sub(&IntegralWeight::delta(g.rank()));
            let dimension = weyl_dimension(g, &highest_weight)?;
            BbwCohomology::Nonzero {
                degree: length,
                w,
                highest_weight,
                dimension,
            }
        }
    })
}

/// Which case of the sheaf-cohomology theorem applies to `p_*^Γ(L^λ)` on a
/// quotient `W = Γ\Ω` whose limit set satisfies `m_{2n−2k−2}(Λ) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SheafCase {
    /// (i) `λ` not regular: zero on `[0, k)`.
    NotRegular,
    /// (ii) `ℓ(w) > k`: zero on `[0, k)`.
    LongElement,
    /// `ℓ(w) = k`, which the theorem leaves out; the same spectral
    /// sequence argument gives zero on `[0, k)`.
    RegularAtThreshold,
    /// (iii) `0 < ℓ(w) < k`: zero below `ℓ(w)`, then group cohomology of `Γ`.
    ShortElement,
    /// (iv) `λ` regular dominant: `H^i ≅ H^i(Γ, H⁰(G/B, L^λ))` for `i < k`.
    Dominant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafReport {
    pub case: SheafCase,
    pub k: usize,
    pub cd: usize,
    /// `ℓ(w)` for regular `λ`.
    pub length: Option<usize>,
    /// Degrees `[ℓ(w), k)` where `H^i ≅ H^{i−ℓ(w)}(Γ, H^{ℓ(w)}(G/B, L^λ))`.
    pub group_window: Option<(usize, usize)>,
    /// Degrees `i` with `ℓ(w) + cd < i < k`, zero because group cohomology
    /// vanishes above the cohomological dimension. Given as `[lo, hi)`.
    pub vanishing_window: Option<(usize, usize)>,
    pub highest_weight: Option<IntegralWeight>,
}

impl SheafReport {
    /// Whether `H^i` is known to vanish, for `0 ≤ i < k`.
    pub fn known_zero(&self, i: usize) -> bool {
        if i >= self.k {
            return false;
        }
        let in_window = |w: Option<(usize, usize)>| w.is_some_and(|(lo, hi)| lo <= i && i < hi);
        !in_window(self.group_window) || in_window(self.vanishing_window)
    }
}

pub fn sheaf_cohomology_cases(
    g: &WeylGroup,
    lambda: &IntegralWeight,
    k: usize,
    cd: usize,
) -> Result<SheafReport> {
    if k == 0 {
        return Err(Error::precondition("need k ≥ 1"));
    }
    let report = |case, length, group_window: Option<(usize, usize)>, highest_weight| {
        let vanishing_window = group_window.and_then(|(lo, hi): (usize, usize)| {
            let start = lo + cd + 1;
            (start < hi).then_some((start, hi))
        });
        SheafReport {
            case,
            k,
            cd,
            length,
            group_window,
            vanishing_window,
            highest_weight,
        }
    };
    Ok(match bbw_cohomology(g, lambda)? {
        BbwCohomology::AllVanish => report(SheafCase::NotRegular, None, None, None),
        BbwCohomology::Nonzero {
            degree,
            highest_weight,
            ..
        } => {
            let hw = Some(highest_weight);
            match degree {
                0 => report(SheafCase::Dominant, Some(0), Some((0, k)), hw),
                l if l < k => report(SheafCase::ShortElement, Some(l), Some((l, k)), hw),
                l if l == k => report(SheafCase::RegularAtThreshold, Some(l), None, hw),
                l => report(SheafCase::LongElement, Some(l), None, hw),
            }
        }
    })
}
