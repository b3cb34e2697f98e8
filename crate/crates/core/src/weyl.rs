//! The Weyl group as an explicit element table.
//!
//! Elements are identified by their signed action on the list of positive
//! roots. Generation is a breadth-first closure from the identity under right
//! multiplication by simple reflections, so element ids are sorted by length
//! and id 0 is the identity. Only the per-generator multiplication columns
//! are kept; general products are composed letter by letter.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{build_root_system, CartanType, RootSystem};
use crate::error::{ensure, Error, Result};

/// Default cap on `|W| · |Σ⁺|`, the number of signed-root table entries.
pub const DEFAULT_MAX_TABLE_ENTRIES: u64 = 10_000_000;

/// Element of a [`WeylGroup`], as a dense id into its tables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Elem(u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    #[inline]
    pub fn new(index: usize) -> Self {
        Elem(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A word in the simple reflections, as 0-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{g}")?;
        }
        Ok(())
    }
}

/// Signed index into the positive roots: `idx << 1 | negative`.
type SignedRoot = u16;

#[inline]
fn signed(idx: usize, negative: bool) -> SignedRoot {
    ((idx as u16) << 1) | negative as u16
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    roots: RootSystem,
    rank: usize,
    right: Vec<u32>,
    left: Vec<u32>,
    length: Vec<u32>,
    inverse: Vec<u32>,
    /// BFS parent and the generator that reaches the child from it.
    parent: Vec<(u32, u8)>,
    w0: Elem,
}

impl WeylGroup {
    /// Generates the group of a Cartan type under the default table budget.
    pub fn of_type(t: &CartanType) -> Result<Self> {
        Self::generate_with_budget(build_root_system(t), DEFAULT_MAX_TABLE_ENTRIES)
    }

    pub fn generate(rs: RootSystem) -> Result<Self> {
        Self::generate_with_budget(rs, DEFAULT_MAX_TABLE_ENTRIES)
    }

    pub fn generate_with_budget(rs: RootSystem, max_entries: u64) -> Result<Self> {
        let rank = rs.rank();
        let n_pos = rs.num_positive();
        let order = rs.cartan_type().weyl_order();
        let entries = order.saturating_mul(n_pos as u64);
        if entries > max_entries {
            return Err(Error::BudgetExceeded {
                what: "Weyl group table (|W|·|Σ⁺| entries)",
                needed: entries,
                budget: max_entries,
            });
        }
        let order = order as usize;

        // s_i on the positive roots
        let gen_action: Vec<Vec<SignedRoot>> = (0..rank)
            .map(|i| {
                rs.positive_roots()
                    .iter()
                    .map(|root| {
                        let image = rs.reflect_root(i, root);
                        match rs.root_index(&image) {
                            Some(k) => signed(k, false),
                            None => {
                                let neg: Vec<i64> = image.iter().map(|c| -c).collect();
                                signed(rs.root_index(&neg).expect("closed root system"), true)
                            }
                        }
                    })
                    .collect()
            })
            .collect();

        let mut actions: Vec<SignedRoot> = Vec::with_capacity(order * n_pos);
        let mut index: HashMap<Box<[SignedRoot]>, u32> = HashMap::with_capacity(order);
        let mut length = Vec::with_capacity(order);
        let mut parent = Vec::with_capacity(order);
        let mut right = vec![u32::MAX; order * rank];

        let identity: Vec<SignedRoot> = (0..n_pos).map(|j| signed(j, false)).collect();
        index.insert(identity.clone().into_boxed_slice(), 0);
        actions.extend_from_slice(&identity);
        length.push(0u32);
        parent.push((0u32, 0u8));

        let mut scratch = vec![0 as SignedRoot; n_pos];
        let mut x = 0usize;
        while x < length.len() {
            for (i, s) in gen_action.iter().enumerate() {
                {
                    let xa = &actions[x * n_pos..(x + 1) * n_pos];
                    // (x s)(β_j) = x(s β_j)
                    for (out, &sj) in scratch.iter_mut().zip(s) {
                        *out = xa[(sj >> 1) as usize] ^ (sj & 1);
                    }
                }
                let id = match index.get(scratch.as_slice()) {
                    Some(&id) => id,
                    None => {
                        let id = length.len() as u32;
                        index.insert(scratch.clone().into_boxed_slice(), id);
                        actions.extend_from_slice(&scratch);
                        length.push(length[x] + 1);
                        parent.push((x as u32, i as u8));
                        id
                    }
                };
                right[x * rank + i] = id;
            }
            x += 1;
        }
        ensure(length.len() == order, "Weyl group order", || {
            format!(
                "closure produced {} elements, expected {order}",
                length.len()
            )
        })?;

        let action = |x: usize| &actions[x * n_pos..(x + 1) * n_pos];
        let mut left = vec![0u32; order * rank];
        let mut inverse = vec![0u32; order];
        let mut w0 = None;
        for x in 0..order {
            let xa = action(x);
            let inversions = xa.iter().filter(|&&v| v & 1 == 1).count() as u32;
            ensure(
                inversions == length[x],
                "length equals root inversion count",
                || {
                    format!(
                        "element {x}: BFS depth {} vs {inversions} inversions",
                        length[x]
                    )
                },
            )?;
            if inversions as usize == n_pos {
                ensure(w0.is_none(), "unique longest element", || {
                    "two maximal elements".into()
                })?;
                w0 = Some(Elem::new(x));
            }
            for (i, s) in gen_action.iter().enumerate() {
                // (s x)(β_j) = s(x β_j)
                for (out, &v) in scratch.iter_mut().zip(xa) {
                    *out = s[(v >> 1) as usize] ^ (v & 1);
                }
                left[x * rank + i] = index[scratch.as_slice()];
            }
            for (j, &v) in xa.iter().enumerate() {
                scratch[(v >> 1) as usize] = signed(j, v & 1 == 1);
            }
            inverse[x] = index[scratch.as_slice()];
        }

        Ok(Self {
            roots: rs,
            rank,
            right,
            left,
            length,
            inverse,
            parent,
            w0: w0.expect("longest element exists"),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn cartan_type(&self) -> &CartanType {
        self.roots.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn w0(&self) -> Elem {
        self.w0
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator {
        (0..self.order()).map(Elem::new)
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if x.index() < self.order() {
            Ok(x)
        } else {
            Err(Error::IndexOutOfRange {
                index: x.index(),
                bound: self.order(),
            })
        }
    }

    pub fn check_generator(&self, s: usize) -> Result<usize> {
        if s < self.rank {
            Ok(s)
        } else {
            Err(Error::IndexOutOfRange {
                index: s,
                bound: self.rank,
            })
        }
    }

    /// The simple reflection `s_i` as an element.
    pub fn generator(&self, i: usize) -> Elem {
        self.mul_gen(Elem::IDENTITY, i)
    }

    #[inline]
    pub fn length(&self, x: Elem) -> usize {
        self.length[x.index()] as usize
    }

    pub fn max_length(&self) -> usize {
        self.length(self.w0)
    }

    /// `x · s_i`
    #[inline]
    pub fn mul_gen(&self, x: Elem, i: usize) -> Elem {
        Elem(self.right[x.index() * self.rank + i])
    }

    /// `s_i · x`
    #[inline]
    pub fn gen_mul(&self, i: usize, x: Elem) -> Elem {
        Elem(self.left[x.index() * self.rank + i])
    }

    #[inline]
    pub fn inverse(&self, x: Elem) -> Elem {
        Elem(self.inverse[x.index()])
    }

    /// `true` when `ℓ(x s_i) < ℓ(x)`.
    #[inline]
    pub fn is_right_descent(&self, x: Elem, i: usize) -> bool {
        self.length(self.mul_gen(x, i)) < self.length(x)
    }

    /// `true` when `ℓ(s_i x) < ℓ(x)`.
    #[inline]
    pub fn is_left_descent(&self, i: usize, x: Elem) -> bool {
        self.length(self.gen_mul(i, x)) < self.length(x)
    }

    /// Some reduced word, read off the BFS tree. Cheaper than
    /// [`reduced_word`](Self::reduced_word) but not canonical.
    fn tree_word(&self, mut x: Elem) -> Vec<usize> {
        let mut letters = Vec::with_capacity(self.length(x));
        while x != Elem::IDENTITY {
            let (p, i) = self.parent[x.index()];
            letters.push(i as usize);
            x = Elem(p);
        }
        letters.reverse();
        letters
    }

    pub fn multiply(&self, x: Elem, y: Elem) -> Elem {
        self.tree_word(y)
            .into_iter()
            .fold(x, |acc, i| self.mul_gen(acc, i))
    }

    pub fn try_multiply(&self, x: Elem, y: Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply(x, y))
    }

    /// Product of the letters of a word.
    pub fn evaluate(&self, word: &[usize]) -> Elem {
        word.iter()
            .fold(Elem::IDENTITY, |acc, &i| self.mul_gen(acc, i))
    }

    pub fn try_evaluate(&self, word: &[usize]) -> Result<Elem> {
        for &i in word {
            self.check_generator(i)?;
        }
        Ok(self.evaluate(word))
    }

    /// Canonical reduced word: the lexicographically smallest one, built by
    /// repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self, mut x: Elem) -> Word {
        let mut letters = Vec::with_capacity(self.length(x));
        while x != Elem::IDENTITY {
            let i = (0..self.rank)
                .find(|&i| self.is_left_descent(i, x))
                .expect("non-identity element has a descent");
            letters.push(i);
            x = self.gen_mul(i, x);
        }
        Word(letters)
    }

    /// `true` when the word's product has length equal to the word length.
    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.length(self.evaluate(word)) == word.len()
    }

    /// Multiplicative order of `x`.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != Elem::IDENTITY {
            acc = self.multiply(acc, x);
            k += 1;
        }
        k
    }

    /// Number of elements of each length.
    pub fn length_histogram(&self) -> Vec<u64> {
        let mut hist = vec![0u64; self.max_length() + 1];
        for &l in &self.length {
            hist[l as usize] += 1;
        }
        hist
    }

    /// Action of `x` on the positive roots, recomputed from a reduced word
    /// by applying simple reflections in root coordinates.
    pub fn root_images(&self, x: Elem) -> Vec<Vec<i64>> {
        let word = self.tree_word(x);
        self.roots
            .positive_roots()
            .iter()
            .map(|root| {
                word.iter()
                    .rev()
                    .fold(root.clone(), |acc, &i| self.roots.reflect_root(i, &acc))
            })
            .collect()
    }

    /// `|{α ∈ Σ⁺ : x(α) ∈ Σ⁻}|`, computed from the root action.
    pub fn inversion_count(&self, x: Elem) -> usize {
        self.root_images(x)
            .iter()
            .filter(|r| r.iter().any(|&c| c < 0))
            .count()
    }

    /// `w₀ · x`
    pub fn w0_mul(&self, x: Elem) -> Elem {
        // w₀ x = (x⁻¹ w₀)⁻¹
        self.inverse(self.multiply(self.inverse(x), self.w0))
    }

    /// `ℓ(w₀x)`, checked against `ℓ(w₀) − ℓ(x)`.
    pub fn left_w0_length(&self, x: Elem) -> Result<usize> {
        self.check(x)?;
        let l = self.length(self.w0_mul(x));
        ensure(
            l + self.length(x) == self.max_length(),
            "ℓ(w₀x) = ℓ(w₀) − ℓ(x)",
            || format!("ℓ(w₀x) = {l}, ℓ(x) = {}", self.length(x)),
        )?;
        Ok(l)
    }

    /// Splits the generators into two colour classes with no Dynkin edge
    /// inside either class.
    pub fn standard_bipartition(&self) -> Vec<bool> {
        let rs = &self.roots;
        let mut colour: Vec<Option<bool>> = vec![None; self.rank];
        for start in 0..self.rank {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for (u, slot) in colour.iter_mut().enumerate() {
                    if slot.is_none() && rs.adjacent(u, v) {
                        *slot = Some(!c);
                        stack.push(u);
                    }
                }
            }
        }
        colour.into_iter().map(Option::unwrap).collect()
    }

    /// The bipartite reduced word for `w₀`: per simple factor, `(ab)^{h/2}`
    /// for even Coxeter number `h`, `(ab)^{(h-1)/2} a` for odd `h`, where `a`
    /// and `b` are the products of the generators in each part. Factors are
    /// concatenated. `in_second[g]` says whether generator `g` lies in `b`.
    pub fn bipartite_w0_word(&self, in_second: &[bool]) -> Result<Word> {
        if in_second.len() != self.rank {
            return Err(Error::precondition(format!(
                "partition covers {} generators, group has {}",
                in_second.len(),
                self.rank
            )));
        }
        let rs = &self.roots;
        for i in 0..self.rank {
            for j in 0..self.rank {
                if rs.adjacent(i, j) && in_second[i] == in_second[j] {
                    return Err(Error::precondition(format!(
                        "generators {i} and {j} do not commute but share a part"
                    )));
                }
            }
        }
        let mut letters = Vec::with_capacity(self.max_length());
        for (fi, &h) in rs.coxeter_numbers().iter().enumerate() {
            let gens: Vec<usize> = (0..self.rank).filter(|&g| rs.factor_of(g) == fi).collect();
            let a: Vec<usize> = gens.iter().copied().filter(|&g| !in_second[g]).collect();
            let b: Vec<usize> = gens.iter().copied().filter(|&g| in_second[g]).collect();
            let h = h as usize;
            for _ in 0..h / 2 {
                letters.extend(&a);
                letters.extend(&b);
            }
            if h % 2 == 1 {
                letters.extend(&a);
            }
        }
        ensure(
            self.is_reduced(&letters),
            "bipartite word is reduced",
            || format!("word of length {} is not reduced", letters.len()),
        )?;
        ensure(
            self.evaluate(&letters) == self.w0,
            "bipartite word equals w₀",
            || "product differs from w₀".into(),
        )?;
        Ok(Word(letters))
    }

    /// Exchange/deletion: for a reduced word of `x` and a generator `s` with
    /// `ℓ(xs) = ℓ(x) − 1`, finds the first 0-based position `k` whose
    /// deletion yields a word for `xs`, and the conjugator `u` with
    /// `s_k = u s u⁻¹`.
    pub fn exchange_deletion(&self, word: &Word, s: usize) -> Result<ExchangeWitness> {
        self.check_generator(s)?;
        let x = self.try_evaluate(word.letters())?;
        if !self.is_reduced(word.letters()) {
            return Err(Error::precondition("word is not reduced"));
        }
        let xs = self.mul_gen(x, s);
        if self.length(xs) + 1 != self.length(x) {
            return Err(Error::precondition(format!(
                "ℓ(xs) = {} is not ℓ(x) − 1 = {}",
                self.length(xs),
                self.length(x) as i64 - 1
            )));
        }
        let letters = word.letters();
        for k in 0..letters.len() {
            let deleted: Vec<usize> = letters
                .iter()
                .enumerate()
                .filter_map(|(i, &g)| (i != k).then_some(g))
                .collect();
            if self.evaluate(&deleted) != xs {
                continue;
            }
            let u = self.evaluate(&letters[k + 1..]);
            let conj = self.multiply(self.mul_gen(u, s), self.inverse(u));
            ensure(
                conj == self.generator(letters[k]),
                "deleted letter is conjugate to s",
                || format!("u s u⁻¹ ≠ s_{}", letters[k]),
            )?;
            return Ok(ExchangeWitness {
                position: k,
                letter: letters[k],
                conjugator: u,
                result: Word(deleted),
            });
        }
        Err(Error::verification(
            "exchange condition",
            "no deletable letter found",
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeWitness {
    /// 0-based position of the deleted letter.
    pub position: usize,
    pub letter: usize,
    /// `u` with `s_letter = u s u⁻¹`.
    pub conjugator: Elem,
    /// The word with the letter removed; a reduced word for `xs`.
    pub result: Word,
}
