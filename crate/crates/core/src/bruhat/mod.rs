//! The Chevalley-Bruhat order on a Weyl group.
//!
//! Covering relations come from multiplying each element by every
//! reflection. For groups up to [`DEFAULT_DENSE_LIMIT`] elements the full
//! relation is stored as one "below" bitset per element, filled in
//! increasing length from the covers. Larger groups fall back to the lifting
//! property, which answers `x ≤ y` in `O(ℓ(y))` steps.

mod enumerate;
mod ideal;

use std::collections::BTreeSet;

use serde::Serialize;

pub use enumerate::{enumerate_balanced, EnumerationOptions, DEFAULT_ENUMERATION_MAX_ORDER};
pub use ideal::{Classification, Ideal, IdealDoc};

use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::weyl::{Elem, WeylGroup, Word};

/// Largest group for which the dense reachability table is built.
pub const DEFAULT_DENSE_LIMIT: usize = 50_000;

#[derive(Debug, Clone)]
pub struct BruhatOrder {
    group: WeylGroup,
    reflections: Vec<Elem>,
    lower_covers: Vec<Vec<Elem>>,
    upper_covers: Vec<Vec<Elem>>,
    below: Option<Vec<ElementSet>>,
    w0_left: Vec<Elem>,
}

impl BruhatOrder {
    pub fn build(group: WeylGroup) -> Self {
        Self::build_with_dense_limit(group, DEFAULT_DENSE_LIMIT)
    }

    /// Convenience: generate the group of `t` and its order.
    pub fn of_type(t: &CartanType) -> Result<Self> {
        Ok(Self::build(WeylGroup::of_type(t)?))
    }

    pub fn build_with_dense_limit(group: WeylGroup, dense_limit: usize) -> Self {
        let reflections = reflections(&group);
        let order = group.order();

        let mut lower_covers = vec![Vec::new(); order];
        let mut upper_covers = vec![Vec::new(); order];
        for y in group.elements() {
            let ly = group.length(y);
            if ly == 0 {
                continue;
            }
            let mut covers: Vec<Elem> = reflections
                .iter()
                .map(|&t| group.multiply(y, t))
                .filter(|&x| group.length(x) + 1 == ly)
                .collect();
            covers.sort_unstable();
            covers.dedup();
            for &x in &covers {
                upper_covers[x.index()].push(y);
            }
            lower_covers[y.index()] = covers;
        }

        let below = (order <= dense_limit).then(|| {
            // ids are sorted by length, so covers are always processed first
            let mut below: Vec<ElementSet> = Vec::with_capacity(order);
            for y in group.elements() {
                let mut set = ElementSet::empty(order);
                set.insert(y);
                for &x in &lower_covers[y.index()] {
                    set.union_with(&below[x.index()]);
                }
                below.push(set);
            }
            below
        });

        let w0_left = group.elements().map(|x| group.w0_mul(x)).collect();

        Self {
            group,
            reflections,
            lower_covers,
            upper_covers,
            below,
            w0_left,
        }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn into_group(self) -> WeylGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_dense(&self) -> bool {
        self.below.is_some()
    }

    /// All reflections `x s x⁻¹`, sorted by id.
    pub fn reflections(&self) -> &[Elem] {
        &self.reflections
    }

    /// Elements covered by `y`.
    pub fn lower_covers(&self, y: Elem) -> &[Elem] {
        &self.lower_covers[y.index()]
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: Elem) -> &[Elem] {
        &self.upper_covers[x.index()]
    }

    /// `w₀ · x`, tabulated.
    #[inline]
    pub fn w0_mul(&self, x: Elem) -> Elem {
        self.w0_left[x.index()]
    }

    /// `x ≤ y` in the Chevalley-Bruhat order.
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        match &self.below {
            Some(below) => below[y.index()].contains(x),
            None => self.leq_by_lifting(x, y),
        }
    }

    pub fn try_leq(&self, x: Elem, y: Elem) -> Result<bool> {
        self.group.check(x)?;
        self.group.check(y)?;
        Ok(self.leq(x, y))
    }

    /// `x ≤ y` via the lifting property: for a right descent `s` of `y`,
    /// `x ≤ y ⇔ xs ≤ ys` when `s` is also a descent of `x`, and
    /// `x ≤ y ⇔ x ≤ ys` otherwise.
    pub fn leq_by_lifting(&self, mut x: Elem, mut y: Elem) -> bool {
        let g = &self.group;
        loop {
            let (lx, ly) = (g.length(x), g.length(y));
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            if lx == 0 {
                return true;
            }
            let s = (0..g.rank())
                .find(|&s| g.is_right_descent(y, s))
                .expect("y ≠ e has a right descent");
            if g.is_right_descent(x, s) {
                x = g.mul_gen(x, s);
            }
            y = g.mul_gen(y, s);
        }
    }

    /// `x ≤ y` via the subword property: `x` is the product of some subword
    /// of a reduced word for `y`. Collects all subword products letter by
    /// letter.
    pub fn leq_by_subword(&self, x: Elem, y: Elem) -> bool {
        let g = &self.group;
        let mut reached = ElementSet::from_elems(self.order(), [g.identity()]);
        for &s in g.reduced_word(y).letters() {
            let next: Vec<Elem> = reached.iter().map(|z| g.mul_gen(z, s)).collect();
            for z in next {
                reached.insert(z);
            }
        }
        reached.contains(x)
    }

    /// The set of elements below `y`.
    pub fn below_set(&self, y: Elem) -> ElementSet {
        match &self.below {
            Some(below) => below[y.index()].clone(),
            None => self.down_closure([y]),
        }
    }

    /// Downward closure of a set of elements, by traversal of lower covers.
    pub fn down_closure(&self, gens: impl IntoIterator<Item = Elem>) -> ElementSet {
        let mut set = ElementSet::empty(self.order());
        let mut stack: Vec<Elem> = Vec::new();
        for x in gens {
            if !set.contains(x) {
                set.insert(x);
                stack.push(x);
            }
        }
        while let Some(y) = stack.pop() {
            for &x in self.lower_covers(y) {
                if !set.contains(x) {
                    set.insert(x);
                    stack.push(x);
                }
            }
        }
        set
    }

    /// `⟨x⟩ = {w : w ≤ x}`
    pub fn principal_ideal(&self, x: Elem) -> Ideal {
        Ideal::from_set_unchecked(self.below_set(x))
    }

    /// Union of the principal ideals of `gens`.
    pub fn ideal_generated_by(&self, gens: &[Elem]) -> Ideal {
        Ideal::from_set_unchecked(self.down_closure(gens.iter().copied()))
    }

    pub fn is_downward_closed(&self, set: &ElementSet) -> bool {
        set.iter()
            .all(|y| self.lower_covers(y).iter().all(|&x| set.contains(x)))
    }

    /// Validates a subset as an ideal.
    pub fn ideal(&self, set: ElementSet) -> Result<Ideal> {
        if set.universe() != self.order() {
            return Err(Error::precondition(format!(
                "set over {} elements, group has {}",
                set.universe(),
                self.order()
            )));
        }
        if let Some(y) = set
            .iter()
            .find(|&y| self.lower_covers(y).iter().any(|&x| !set.contains(x)))
        {
            return Err(Error::NotAnIdeal(format!(
                "{} is a member but something it covers is not",
                self.group.reduced_word(y)
            )));
        }
        Ok(Ideal::from_set_unchecked(set))
    }

    /// Members of `ideal` not dominated by any other member, in id order.
    /// The union of their principal ideals is checked to reproduce the ideal.
    pub fn minimal_generators(&self, ideal: &Ideal) -> Result<Vec<Elem>> {
        let members = ideal.members();
        if !self.is_downward_closed(members) {
            return Err(Error::NotAnIdeal("input is not downward closed".into()));
        }
        let gens: Vec<Elem> = members
            .iter()
            .filter(|&x| self.upper_covers(x).iter().all(|&y| !members.contains(y)))
            .collect();
        let rebuilt = self.down_closure(gens.iter().copied());
        if &rebuilt != members {
            return Err(Error::verification(
                "ideal is the union of principal ideals of its maximal elements",
                "union of generated principal ideals differs",
            ));
        }
        Ok(gens)
    }

    /// `I⊥ = w₀(W ∖ I)`
    pub fn orthogonal(&self, ideal: &Ideal) -> Result<Ideal> {
        if !self.is_downward_closed(ideal.members()) {
            return Err(Error::NotAnIdeal("input is not downward closed".into()));
        }
        let set = ElementSet::from_elems(
            self.order(),
            self.group
                .elements()
                .filter(|&x| !ideal.contains(x))
                .map(|x| self.w0_mul(x)),
        );
        if !self.is_downward_closed(&set) {
            return Err(Error::verification(
                "orthogonal of an ideal is an ideal",
                "w₀(W ∖ I) is not downward closed",
            ));
        }
        Ok(Ideal::from_set_unchecked(set))
    }

    pub fn classify(&self, ideal: &Ideal) -> Result<Classification> {
        let perp = self.orthogonal(ideal)?;
        let slim = ideal.members().is_subset(perp.members());
        let fat = perp.members().is_subset(ideal.members());
        Ok(Classification {
            slim,
            fat,
            balanced: slim && fat,
        })
    }

    /// `x ≤ w₀x`
    pub fn is_small(&self, x: Elem) -> bool {
        self.leq(x, self.w0_mul(x))
    }

    /// Checks smallness of every element of length at most `max_len`.
    pub fn short_small_report(&self, max_len: usize) -> SmallnessReport {
        let g = &self.group;
        let witnesses: Vec<Word> = g
            .elements()
            .take_while(|&x| g.length(x) <= max_len)
            .filter(|&x| !self.is_small(x))
            .map(|x| g.reduced_word(x))
            .collect();
        let min_h = g
            .root_system()
            .coxeter_numbers()
            .iter()
            .copied()
            .min()
            .unwrap_or(0);
        let predicted = match max_len {
            0 => Some(true),
            1 => Some(min_h >= 3),
            2 => Some(min_h >= 5),
            _ => None,
        };
        SmallnessReport {
            cartan_type: g.cartan_type().to_string(),
            max_len,
            all_small: witnesses.is_empty(),
            predicted_all_small: predicted,
            witnesses,
        }
    }

    /// The words of the minimal generators, sorted; the canonical key of an
    /// ideal.
    pub fn generator_words(&self, ideal: &Ideal) -> Result<Vec<Word>> {
        let mut words: Vec<Word> = self
            .minimal_generators(ideal)?
            .into_iter()
            .map(|x| self.group.reduced_word(x))
            .collect();
        words.sort();
        Ok(words)
    }
}

/// Result of checking that short elements are small.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallnessReport {
    pub cartan_type: String,
    pub max_len: usize,
    pub all_small: bool,
    /// What the short-elements theorem predicts from the factors' Coxeter
    /// numbers (every `h ≥ 3` for length 1, every `h ≥ 5` for length 2).
    pub predicted_all_small: Option<bool>,
    /// Reduced words of the non-small elements found.
    pub witnesses: Vec<Word>,
}

impl SmallnessReport {
    pub fn agrees_with_prediction(&self) -> bool {
        self.predicted_all_small.is_none_or(|p| p == self.all_small)
    }
}

/// Generates the group of `t` and checks smallness of every element of length
/// at most `max_len` (which must be 1 or 2).
pub fn verify_short_small(t: &CartanType, max_len: usize) -> Result<SmallnessReport> {
    if !(1..=2).contains(&max_len) {
        return Err(Error::precondition(format!(
            "max length {max_len} not in {{1, 2}}"
        )));
    }
    Ok(BruhatOrder::of_type(t)?.short_small_report(max_len))
}

/// All reflections, as the closure of the generators under conjugation by
/// generators.
fn reflections(g: &WeylGroup) -> Vec<Elem> {
    let mut found: BTreeSet<Elem> = (0..g.rank()).map(|i| g.generator(i)).collect();
    let mut frontier: Vec<Elem> = found.iter().copied().collect();
    while let Some(t) = frontier.pop() {
        for s in 0..g.rank() {
            let c = g.gen_mul(s, g.mul_gen(t, s));
            if found.insert(c) {
                frontier.push(c);
            }
        }
    }
    found.into_iter().collect()
}
