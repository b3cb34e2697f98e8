//! Type-A permutation combinatorics and the named ideal families: the lower
//! half of `W`, the incidence ideal `I_{1,n−1}` and the principal ideal
//! `I_{2n}`.
//!
//! Permutations are 0-based internally and 1-based at every boundary
//! (parsing, display, accessors taking positions).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bruhat::{BruhatOrder, Ideal};
use crate::cartan::{CartanType, Family};
use crate::error::{ensure, Error, Result};
use crate::parabolic::Parabolic;
use crate::set::ElementSet;
use crate::weyl::{Elem, WeylGroup, DEFAULT_MAX_TABLE_ENTRIES};

/// Default bound on `n!` for type-A contexts (`S₇`).
pub const DEFAULT_FAMILY_MAX_ORDER: usize = 5040;

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// From a 1-based one-line tuple.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self(one_line.iter().map(|v| v - 1).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// `(n, n−1, …, 1)`
    pub fn longest(n: usize) -> Self {
        Self((0..n).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `x(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    /// The 1-based one-line tuple.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// `A(x) = {i : x(i) < x(i+1)}`, 1-based.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.0[i - 1] < self.0[i])
            .collect()
    }

    /// Right multiplication by the adjacent transposition `s_i` (0-based),
    /// which swaps positions `i` and `i+1`.
    pub fn swap_positions(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// `x_{i,·}`: the sorted values `x(1), …, x(i)` (1-based values).
    fn sorted_prefix(&self, i: usize) -> Vec<usize> {
        let mut prefix: Vec<usize> = self.0[..i].iter().map(|v| v + 1).collect();
        prefix.sort_unstable();
        prefix
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&values)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

/// Number of inversions `#{(i,j) : i<j, x(i)>x(j)}`.
pub fn perm_length(p: &Permutation) -> usize {
    let v = &p.0;
    (0..v.len())
        .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
        .sum()
}

/// Bruhat comparison `x ≤ y` in `S_n` by the rank criterion:
/// `x_{i,j} ≤ y_{i,j}` for every ascent `i` of `y` and every `j ≤ i`.
pub fn rank_leq(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.size() != y.size() {
        return Err(Error::precondition(format!(
            "permutations of different sizes {} and {}",
            x.size(),
            y.size()
        )));
    }
    Ok(y.ascents().into_iter().all(|i| {
        x.sorted_prefix(i)
            .iter()
            .zip(y.sorted_prefix(i))
            .all(|(a, b)| *a <= b)
    }))
}

/// Whether family constructors check their defining theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verify {
    /// Check in debug builds only.
    #[default]
    Auto,
    Always,
    Never,
}

impl Verify {
    pub fn enabled(self) -> bool {
        match self {
            Verify::Auto => cfg!(debug_assertions),
            Verify::Always => true,
            Verify::Never => false,
        }
    }
}

/// An ideal together with its minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyIdeal {
    pub ideal: Ideal,
    pub generators: Vec<Elem>,
}

/// `W(A_{n−1}) = S_n` with the bijection between elements and permutations.
pub struct TypeA {
    n: usize,
    order: BruhatOrder,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
}

impl TypeA {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_max_order(n, DEFAULT_FAMILY_MAX_ORDER)
    }

    pub fn with_max_order(n: usize, max_order: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::precondition(format!("S_n needs n ≥ 2, got {n}")));
        }
        let needed = (1..=n as u64)
            .try_fold(1u64, |acc, k| acc.checked_mul(k))
            .unwrap_or(u64::MAX);
        if needed > max_order as u64 {
            return Err(Error::BudgetExceeded {
                what: "symmetric group order",
                needed,
                budget: max_order as u64,
            });
        }
        let t = CartanType::simple(Family::A, n - 1);
        let g = WeylGroup::generate_with_budget(
            crate::cartan::build_root_system(&t),
            DEFAULT_MAX_TABLE_ENTRIES,
        )?;
        let mut perms = vec![Permutation::identity(n); g.order()];
        for x in g.elements() {
            for i in 0..n - 1 {
                if !g.is_right_descent(x, i) {
                    let mut p = perms[x.index()].clone();
                    p.swap_positions(i);
                    perms[g.mul_gen(x, i).index()] = p;
                }
            }
        }
        let index: HashMap<Permutation, Elem> = g
            .elements()
            .map(|x| (perms[x.index()].clone(), x))
            .collect();
        ensure(index.len() == g.order(), "W(A_{n−1}) ≅ S_n", || {
            "element-to-permutation map is not injective".into()
        })?;
        for x in g.elements() {
            ensure(
                perm_length(&perms[x.index()]) == g.length(x),
                "length = inversions",
                || {
                    format!(
                        "{} has {} inversions but length {}",
                        perms[x.index()],
                        perm_length(&perms[x.index()]),
                        g.length(x)
                    )
                },
            )?;
        }
        Ok(Self {
            n,
            order: BruhatOrder::build(g),
            perms,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &BruhatOrder {
        &self.order
    }

    pub fn group(&self) -> &WeylGroup {
        self.order.group()
    }

    pub fn perm(&self, x: Elem) -> &Permutation {
        &self.perms[x.index()]
    }

    pub fn elem(&self, p: &Permutation) -> Result<Elem> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::precondition(format!("{p} is not in S_{}", self.n)))
    }

    fn ideal_where(&self, pred: impl Fn(&Permutation) -> bool) -> ElementSet {
        ElementSet::from_elems(
            self.group().order(),
            self.group().elements().filter(|&x| pred(self.perm(x))),
        )
    }

    /// `W_{1,n−1} = {w : w(1) = 1, w(n) = n}`, generated by `s_2, …, s_{n−2}`.
    pub fn incidence_parabolic(&self) -> Result<Parabolic> {
        let gens: Vec<usize> = (1..self.n.saturating_sub(2)).collect();
        Parabolic::build(self.group(), &gens)
    }
}

fn as_ideal(order: &BruhatOrder, set: ElementSet, theorem: &'static str) -> Result<Ideal> {
    order.ideal(set).map_err(|e| match e {
        Error::NotAnIdeal(detail) => Error::verification(theorem, detail),
        other => other,
    })
}

fn check_balanced(order: &BruhatOrder, ideal: &Ideal, theorem: &'static str) -> Result<()> {
    let c = order.classify(ideal)?;
    ensure(c.balanced, theorem, || {
        format!("ideal of size {} is not balanced", ideal.len())
    })
}

/// `I_{1/2} = {x : ℓ(x) ≤ (ℓ(w₀)−1)/2}` for `ℓ(w₀)` odd.
pub fn lower_half_ideal(order: &BruhatOrder, verify: Verify) -> Result<FamilyIdeal> {
    let g = order.group();
    let top = g.max_length();
    if top.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "ℓ(w₀) = {top} is even; use lower_half_with_selection"
        )));
    }
    let set = ElementSet::from_elems(g.order(), g.elements().filter(|&x| 2 * g.length(x) < top));
    let ideal = as_ideal(order, set, "lower half is an ideal")?;
    if verify.enabled() {
        check_balanced(order, &ideal, "lower half is balanced when ℓ(w₀) is odd")?;
    }
    let generators = order.minimal_generators(&ideal)?;
    Ok(FamilyIdeal { ideal, generators })
}

/// `I_{1/2,J} = W_{≤ k−1} ∪ J` for `ℓ(w₀) = 2k`, where `J` picks one element
/// from each pair `{x, w₀x}` of the middle level.
pub fn lower_half_with_selection(
    order: &BruhatOrder,
    selection: &[Elem],
    verify: Verify,
) -> Result<FamilyIdeal> {
    let g = order.group();
    let top = g.max_length();
    if top % 2 == 1 {
        return Err(Error::precondition(format!(
            "ℓ(w₀) = {top} is odd; use lower_half_ideal"
        )));
    }
    let k = top / 2;
    let mut chosen = ElementSet::empty(g.order());
    for &x in selection {
        let x = g.check(x)?;
        if g.length(x) != k {
            return Err(Error::precondition(format!(
                "{} has length {}, not the middle length {k}",
                g.reduced_word(x),
                g.length(x)
            )));
        }
        chosen.insert(x);
    }
    for x in g.elements().filter(|&x| g.length(x) == k) {
        if chosen.contains(x) == chosen.contains(g.w0_mul(x)) {
            return Err(Error::precondition(format!(
                "selection must contain exactly one of {} and {}",
                g.reduced_word(x),
                g.reduced_word(g.w0_mul(x))
            )));
        }
    }
    let mut set = ElementSet::from_elems(g.order(), g.elements().filter(|&x| g.length(x) < k));
    set.union_with(&chosen);
    let ideal = as_ideal(order, set, "lower half with selection is an ideal")?;
    if verify.enabled() {
        check_balanced(order, &ideal, "lower half with selection is balanced")?;
    }
    let generators = order.minimal_generators(&ideal)?;
    if verify.enabled() {
        ensure(
            selection.iter().all(|x| generators.contains(x)),
            "selection is among the minimal generators",
            || "a selected element is not maximal".into(),
        )?;
    }
    Ok(FamilyIdeal { ideal, generators })
}

/// `z_k = (k, …, k+1)` with the omitted values in decreasing order.
pub fn incidence_generator(n: usize, k: usize) -> Result<Permutation> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::precondition(format!(
            "need 1 ≤ k < n, got n = {n}, k = {k}"
        )));
    }
    let mut line = vec![k];
    line.extend((1..=n).rev().filter(|&v| v != k && v != k + 1));
    line.push(k + 1);
    Permutation::new(&line)
}

/// `I_{1,n−1} = {x ∈ S_n : x(1) < x(n)}`.
pub fn incidence_ideal(a: &TypeA, verify: Verify) -> Result<FamilyIdeal> {
    let n = a.n();
    let order = a.order();
    let set = a.ideal_where(|p| p.at(1) < p.at(n));
    let ideal = as_ideal(order, set, "incidence set is an ideal")?;
    let generators = order.minimal_generators(&ideal)?;
    if verify.enabled() {
        check_balanced(order, &ideal, "incidence ideal is balanced")?;
        let p = a.incidence_parabolic()?;
        ensure(
            p.is_right_invariant(a.group(), &ideal),
            "incidence ideal is right W_{1,n−1}-invariant",
            || "not a union of cosets".into(),
        )?;
        let mut expected = (1..n)
            .map(|k| a.elem(&incidence_generator(n, k)?))
            .collect::<Result<Vec<_>>>()?;
        expected.sort();
        ensure(
            generators == expected,
            "incidence ideal is minimally generated by z_1, …, z_{n−1}",
            || {
                let got: Vec<String> = generators.iter().map(|&x| a.perm(x).to_string()).collect();
                format!("minimal generators are {got:?}")
            },
        )?;
        for &z in &expected {
            ensure(
                2 * a.group().length(z) == (n - 1) * (n - 2),
                "ℓ(z_k) = (n−1)(n−2)/2",
                || format!("ℓ({}) = {}", a.perm(z), a.group().length(z)),
            )?;
        }
    }
    Ok(FamilyIdeal { ideal, generators })
}

/// `λ = (2n, 2n−1, …, n+2, n, …, 1, n+1)`.
pub fn principal_2n_generator(n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::precondition("need n ≥ 1"));
    }
    let mut line: Vec<usize> = (1..=2 * n).rev().filter(|&v| v != n + 1).collect();
    line.push(n + 1);
    Permutation::new(&line)
}

/// `I_{2n} = {w ∈ S_{2n} : w(2n) > n}`, principal with generator `λ`.
pub fn principal_2n_ideal(a: &TypeA, verify: Verify) -> Result<FamilyIdeal> {
    let m = a.n();
    if m % 2 == 1 {
        return Err(Error::precondition(format!(
            "S_{m} is not of the form S_2n"
        )));
    }
    let n = m / 2;
    let order = a.order();
    let set = a.ideal_where(|p| p.at(m) > n);
    let ideal = as_ideal(order, set, "I_2n is an ideal")?;
    let generators = order.minimal_generators(&ideal)?;
    if verify.enabled() {
        check_balanced(order, &ideal, "I_2n is balanced")?;
        let lambda = a.elem(&principal_2n_generator(n)?)?;
        ensure(generators == [lambda], "I_2n = ⟨λ⟩", || {
            let got: Vec<String> = generators.iter().map(|&x| a.perm(x).to_string()).collect();
            format!("minimal generators are {got:?}")
        })?;
        let g = a.group();
        ensure(
            g.length(lambda) + n == g.max_length(),
            "ℓ(λ) = ℓ(w₀) − n",
            || format!("ℓ(λ) = {}", g.length(lambda)),
        )?;
    }
    Ok(FamilyIdeal { ideal, generators })
}

/// `μ = (2j, …, j+1, 4j+2, j, …, 1, 4j+1, …, 2j+1)` in `S_{4j+2}`, with
/// `μ(2n) = n` for `n = 2j+1`, so `μ ∉ I_{2n}`.
///
/// Its length is `j(4j+3) + 1`, one more than the middle length
/// `k = j(4j+3)`; see [`distinction_witness`] for an element of length `k`.
pub fn distinction_witness_mu(j: usize) -> Result<Permutation> {
    if j == 0 {
        return Err(Error::precondition("need j ≥ 1"));
    }
    let mut line: Vec<usize> = (j + 1..=2 * j).rev().collect();
    line.push(4 * j + 2);
    line.extend((1..=j).rev());
    line.extend((2 * j + 1..=4 * j + 1).rev());
    let mu = Permutation::new(&line)?;
    let n = 2 * j + 1;
    ensure(mu.at(2 * n) == n, "μ(2n) = n, so μ ∉ I_2n", || {
        format!("μ(2n) = {}", mu.at(2 * n))
    })?;
    Ok(mu)
}

/// `μ` with `4j+2` moved one place right: length exactly `k = j(4j+3)` and
/// still `μ'(2n) = n`, so `μ' ∈ ℓ⁻¹(k) ∖ I_{2n}`.
pub fn distinction_witness(j: usize) -> Result<Permutation> {
    let mut mu = distinction_witness_mu(j)?;
    mu.swap_positions(j);
    ensure(
        perm_length(&mu) == j * (4 * j + 3),
        "ℓ(μ') = j(4j+3)",
        || format!("ℓ({mu}) = {}", perm_length(&mu)),
    )?;
    ensure(mu.at(mu.size()) == 2 * j + 1, "μ'(2n) = n", || {
        format!("{mu}")
    })?;
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_type;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_parsing() {
        assert_eq!(p("4,2,1,3").one_line(), vec![4, 2, 1, 3]);
        assert_eq!(p("(2, 1, 3)").to_string(), "2,1,3");
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        let json = serde_json::to_string(&p("3,1,2")).unwrap();
        assert_eq!(json, "\"3,1,2\"");
        assert_eq!(
            serde_json::from_str::<Permutation>(&json).unwrap(),
            p("3,1,2")
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(perm_length(&Permutation::identity(5)), 0);
        assert_eq!(perm_length(&Permutation::longest(6)), 15);
        assert_eq!(perm_length(&p("2,1,3")), 1);
        assert_eq!(perm_length(&p("4,2,1,3")), 4);
    }

    #[test]
    fn rank_criterion_examples() {
        assert!(rank_leq(&p("2,1,3"), &p("3,1,2")).unwrap());
        assert!(!rank_leq(&p("3,1,2"), &p("2,1,3")).unwrap());
        for y in ["1,2,3", "3,2,1", "2,3,1"] {
            assert!(rank_leq(&Permutation::identity(3), &p(y)).unwrap());
        }
        assert!(rank_leq(&p("1,2"), &p("1,2,3")).is_err());
    }

    #[test]
    fn rank_criterion_matches_bruhat_on_s4() {
        let a = TypeA::new(4).unwrap();
        let o = a.order();
        for x in a.group().elements() {
            for y in a.group().elements() {
                assert_eq!(rank_leq(a.perm(x), a.perm(y)).unwrap(), o.leq(x, y));
            }
        }
    }

    #[test]
    fn type_a_bijection() {
        let a = TypeA::new(4).unwrap();
        let g = a.group();
        assert_eq!(a.perm(g.w0()), &Permutation::longest(4));
        for x in g.elements() {
            assert_eq!(a.elem(a.perm(x)).unwrap(), x);
            // left multiplication by w₀ sends x(i) to n+1−x(i)
            let w = a.perm(g.w0_mul(x));
            assert!((1..=4).all(|i| w.at(i) == 5 - a.perm(x).at(i)));
        }
        assert!(TypeA::new(1).is_err());
        assert!(matches!(TypeA::new(8), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn lower_half_examples() {
        let a1 = BruhatOrder::of_type(&parse_type("A1").unwrap()).unwrap();
        let f = lower_half_ideal(&a1, Verify::Always).unwrap();
        assert_eq!(f.ideal.elements(), vec![Elem::IDENTITY]);

        let a2 = BruhatOrder::of_type(&parse_type("A2").unwrap()).unwrap();
        let f = lower_half_ideal(&a2, Verify::Always).unwrap();
        assert_eq!(f.ideal.len(), 3);
        assert_eq!(f.generators.len(), 2);

        let b2 = BruhatOrder::of_type(&parse_type("B2").unwrap()).unwrap();
        assert!(lower_half_ideal(&b2, Verify::Always).is_err());
    }

    #[test]
    fn lower_half_with_selection_examples() {
        let o = BruhatOrder::of_type(&parse_type("A1xA1").unwrap()).unwrap();
        let g = o.group();
        let s1 = g.generator(0);
        let f = lower_half_with_selection(&o, &[s1], Verify::Always).unwrap();
        let mut expected = vec![Elem::IDENTITY, s1];
        expected.sort();
        assert_eq!(f.ideal.elements(), expected);
        assert!(lower_half_with_selection(&o, &[s1, g.generator(1)], Verify::Always).is_err());
        assert!(lower_half_with_selection(&o, &[], Verify::Always).is_err());

        let o = BruhatOrder::of_type(&parse_type("B2").unwrap()).unwrap();
        let g = o.group();
        let middle: Vec<Elem> = g.elements().filter(|&x| g.length(x) == 2).collect();
        let j: Vec<Elem> = middle
            .iter()
            .copied()
            .filter(|&x| x < g.w0_mul(x))
            .collect();
        assert_eq!(j.len(), middle.len() / 2);
        let f = lower_half_with_selection(&o, &j, Verify::Always).unwrap();
        assert_eq!(f.ideal.len(), 4);
        assert!(lower_half_with_selection(&o, &[g.generator(0)], Verify::Always).is_err());
    }

    #[test]
    fn incidence_examples() {
        let a = TypeA::new(3).unwrap();
        let f = incidence_ideal(&a, Verify::Always).unwrap();
        let mut members: Vec<String> = f
            .ideal
            .elements()
            .iter()
            .map(|&x| a.perm(x).to_string())
            .collect();
        members.sort();
        assert_eq!(members, vec!["1,2,3", "1,3,2", "2,1,3"]);
        let gens: Vec<String> = f
            .generators
            .iter()
            .map(|&x| a.perm(x).to_string())
            .collect();
        assert!(gens.contains(&"1,3,2".to_string()) && gens.contains(&"2,1,3".to_string()));

        let a = TypeA::new(4).unwrap();
        let f = incidence_ideal(&a, Verify::Always).unwrap();
        assert_eq!(f.ideal.len(), 12);
        assert!(f.generators.iter().all(|&z| a.group().length(z) == 3));

        let a = TypeA::new(2).unwrap();
        assert_eq!(
            incidence_ideal(&a, Verify::Always)
                .unwrap()
                .ideal
                .elements(),
            vec![Elem::IDENTITY]
        );
        assert_eq!(incidence_generator(5, 2).unwrap(), p("2,5,4,1,3"));
    }

    #[test]
    fn incidence_coset_minimal_lengths() {
        // the minimal element of W(i,j) has length n+i−j−1
        let n = 5;
        let a = TypeA::new(n).unwrap();
        let par = a.incidence_parabolic().unwrap();
        for &r in par.min_reps() {
            let q = a.perm(r);
            let (i, j) = (q.at(1), q.at(n));
            if i < j {
                assert_eq!(a.group().length(r) + j + 1, n + i, "{q}");
            }
        }
    }

    #[test]
    fn principal_examples() {
        let a = TypeA::new(4).unwrap();
        let f = principal_2n_ideal(&a, Verify::Always).unwrap();
        assert_eq!(f.ideal.len(), 12);
        assert_eq!(a.perm(f.generators[0]), &p("4,2,1,3"));
        assert_eq!(a.group().length(f.generators[0]), 4);

        let a = TypeA::new(2).unwrap();
        let f = principal_2n_ideal(&a, Verify::Always).unwrap();
        assert_eq!(f.ideal.elements(), vec![Elem::IDENTITY]);
        assert_eq!(principal_2n_generator(1).unwrap(), p("1,2"));

        let a = TypeA::new(6).unwrap();
        let f = principal_2n_ideal(&a, Verify::Always).unwrap();
        assert_eq!(f.ideal.len(), 360);
        assert_eq!(a.group().length(f.generators[0]), 12);
        // membership w(2n) > n agrees with comparison against λ
        for x in a.group().elements() {
            assert_eq!(f.ideal.contains(x), a.order().leq(x, f.generators[0]));
        }
        assert!(principal_2n_ideal(&TypeA::new(5).unwrap(), Verify::Always).is_err());
    }

    #[test]
    fn mu_witness() {
        let mu = distinction_witness_mu(1).unwrap();
        assert_eq!(mu, p("2,6,1,5,4,3"));
        assert_eq!(mu.at(6), 3);
        // brute force: 2>1; 6>1,5,4,3; 5>4,3; 4>3
        assert_eq!(perm_length(&mu), 8);
        let fixed = distinction_witness(1).unwrap();
        assert_eq!(fixed, p("2,1,6,5,4,3"));
        assert_eq!(perm_length(&fixed), 7);
        for j in 1..=4 {
            let mu = distinction_witness_mu(j).unwrap();
            assert_eq!(mu.size(), 4 * j + 2);
            assert_eq!(perm_length(&mu), j * (4 * j + 3) + 1);
            assert_eq!(
                perm_length(&distinction_witness(j).unwrap()),
                j * (4 * j + 3)
            );
        }
        assert!(distinction_witness_mu(0).is_err());
    }

    proptest! {
        #[test]
        fn rank_criterion_matches_bruhat_on_s5(x in 0usize..120, y in 0usize..120) {
            thread_local! {
                static S5: TypeA = TypeA::new(5).unwrap();
            }
            S5.with(|a| {
                let (x, y) = (Elem::new(x), Elem::new(y));
                prop_assert_eq!(rank_leq(a.perm(x), a.perm(y)).unwrap(), a.order().leq(x, y));
                Ok(())
            })?;
        }
    }
}
