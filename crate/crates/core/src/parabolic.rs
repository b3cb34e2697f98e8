//! Standard parabolic subgroups, minimal coset representatives and quotient
//! lengths.
//!
//! A parabolic is given by the generator subset that generates `W_P`
//! directly. For a flag type `Θ` in the sense of "`W_{P_Θ}` is generated by
//! the reflections of `Δ ∖ Θ`", pass the complement of `Θ`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bruhat::Ideal;
use crate::error::{Error, Result};
use crate::weyl::{Elem, WeylGroup};

#[derive(Debug, Clone)]
pub struct Parabolic {
    generators: Vec<usize>,
    subgroup: Vec<Elem>,
    min_reps: Vec<Elem>,
    coset_min: Vec<Elem>,
    coset_max: Vec<Elem>,
    max_quotient_length: usize,
}

/// Serialized form: the sorted generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParabolicSpec(pub Vec<usize>);

impl Parabolic {
    /// `W_P` generated by the simple reflections in `generators`.
    pub fn build(g: &WeylGroup, generators: &[usize]) -> Result<Self> {
        let gens: BTreeSet<usize> = generators
            .iter()
            .map(|&s| g.check_generator(s))
            .collect::<Result<_>>()?;
        let generators: Vec<usize> = gens.into_iter().collect();

        let mut seen = vec![false; g.order()];
        seen[0] = true;
        let mut subgroup = vec![Elem::IDENTITY];
        let mut i = 0;
        while i < subgroup.len() {
            let x = subgroup[i];
            for &s in &generators {
                let y = g.mul_gen(x, s);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    subgroup.push(y);
                }
            }
            i += 1;
        }
        subgroup.sort();

        let coset_min: Vec<Elem> = g
            .elements()
            .map(|x| strip(g, x, &generators, |g, x, s| g.is_right_descent(x, s)))
            .collect();
        let coset_max: Vec<Elem> = g
            .elements()
            .map(|x| strip(g, x, &generators, |g, x, s| !g.is_right_descent(x, s)))
            .collect();
        let min_reps: Vec<Elem> = g
            .elements()
            .filter(|&x| coset_min[x.index()] == x)
            .collect();
        let max_quotient_length = g.length(coset_min[g.w0().index()]);

        if min_reps.len() * subgroup.len() != g.order() {
            return Err(Error::verification(
                "|W^P| · |W_P| = |W|",
                format!("{} · {} ≠ {}", min_reps.len(), subgroup.len(), g.order()),
            ));
        }

        Ok(Self {
            generators,
            subgroup,
            min_reps,
            coset_min,
            coset_max,
            max_quotient_length,
        })
    }

    /// The trivial parabolic `W_P = {e}` (the Borel case).
    pub fn trivial(g: &WeylGroup) -> Self {
        Self::build(g, &[]).expect("empty generator set is valid")
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn spec(&self) -> ParabolicSpec {
        ParabolicSpec(self.generators.clone())
    }

    pub fn subgroup(&self) -> &[Elem] {
        &self.subgroup
    }

    /// Minimal coset representatives `W^P`, in id order.
    pub fn min_reps(&self) -> &[Elem] {
        &self.min_reps
    }

    pub fn num_cosets(&self) -> usize {
        self.min_reps.len()
    }

    /// The minimal element of `x W_P`.
    pub fn coset_min(&self, x: Elem) -> Elem {
        self.coset_min[x.index()]
    }

    /// The maximal element of `x W_P`.
    pub fn coset_max(&self, x: Elem) -> Elem {
        self.coset_max[x.index()]
    }

    /// `ℓ(x W_P)`, the length of the minimal representative.
    pub fn quotient_length(&self, g: &WeylGroup, x: Elem) -> usize {
        g.length(self.coset_min(x))
    }

    /// `ℓ(w₀ W_P)`, the complex dimension of `G/P`.
    pub fn max_quotient_length(&self) -> usize {
        self.max_quotient_length
    }

    /// Number of cosets of each quotient length.
    pub fn coset_length_counts(&self, g: &WeylGroup) -> Vec<u64> {
        let mut counts = vec![0u64; self.max_quotient_length + 1];
        for &r in &self.min_reps {
            counts[g.length(r)] += 1;
        }
        counts
    }

    pub fn is_right_invariant(&self, g: &WeylGroup, ideal: &Ideal) -> bool {
        ideal.members().iter().all(|x| {
            self.generators
                .iter()
                .all(|&s| ideal.contains(g.mul_gen(x, s)))
        })
    }

    pub fn is_left_invariant(&self, g: &WeylGroup, ideal: &Ideal) -> bool {
        ideal.members().iter().all(|x| {
            self.generators
                .iter()
                .all(|&s| ideal.contains(g.gen_mul(s, x)))
        })
    }

    /// The representatives in `W^P` lying in a right-`W_P`-invariant ideal,
    /// with their quotient lengths.
    pub fn quotient_ideal(&self, g: &WeylGroup, ideal: &Ideal) -> Result<Vec<(Elem, usize)>> {
        if !self.is_right_invariant(g, ideal) {
            return Err(Error::NotInvariant { side: "right" });
        }
        Ok(self
            .min_reps
            .iter()
            .filter(|&&r| ideal.contains(r))
            .map(|&r| (r, g.length(r)))
            .collect())
    }
}

/// Repeatedly right-multiplies by a generator satisfying `step` until none does.
fn strip(
    g: &WeylGroup,
    mut x: Elem,
    gens: &[usize],
    step: impl Fn(&WeylGroup, Elem, usize) -> bool,
) -> Elem {
    while let Some(&s) = gens.iter().find(|&&s| step(g, x, s)) {
        x = g.mul_gen(x, s);
    }
    x
}

/// The minimal element of the double coset `W_P x W_Q`, found by stripping
/// left descents in `P` and right descents in `Q`.
pub fn double_coset_min_rep(g: &WeylGroup, p: &Parabolic, q: &Parabolic, x: Elem) -> Result<Elem> {
    let mut x = g.check(x)?;
    loop {
        if let Some(&s) = p.generators().iter().find(|&&s| g.is_left_descent(s, x)) {
            x = g.gen_mul(s, x);
        } else if let Some(&s) = q.generators().iter().find(|&&s| g.is_right_descent(x, s)) {
            x = g.mul_gen(x, s);
        } else {
            return Ok(x);
        }
    }
}
