//! Backtracking enumeration of balanced ideals.
//!
//! A balanced ideal contains exactly one element of every pair `{x, w₀x}`.
//! Choosing `x` forces everything below `x` in and everything above `w₀x`
//! out. Small elements lie in every fat ideal, so they are forced in before
//! the search starts. With a right-invariance constraint the unit of choice
//! becomes a coset `xW_P`: choosing it forces everything below its maximum
//! in and everything above the minimum of `w₀xW_P` out.

use rayon::prelude::*;

use super::{BruhatOrder, Ideal};
use crate::error::{Error, Result};
use crate::parabolic::Parabolic;
use crate::set::ElementSet;
use crate::weyl::{Elem, Word};

/// Default bound on `|W|` for enumeration (the order of `W(F₄)`).
pub const DEFAULT_ENUMERATION_MAX_ORDER: usize = 1152;

/// Depth at which the search tree is split into independent parallel tasks.
const SPLIT_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_order: usize,
    pub parallel: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_ENUMERATION_MAX_ORDER,
            parallel: true,
        }
    }
}

struct Search {
    /// For each element `c`: what choosing `c` forces in and out.
    force_in: Vec<ElementSet>,
    force_out: Vec<ElementSet>,
    /// One representative per undecided unit, in processing order, paired
    /// with its partner.
    units: Vec<(Elem, Elem)>,
}

#[derive(Clone)]
struct State {
    inside: ElementSet,
    outside: ElementSet,
}

impl Search {
    fn apply(&self, state: &mut State, c: Elem) -> bool {
        let add_in = &self.force_in[c.index()];
        let add_out = &self.force_out[c.index()];
        if add_in.intersects(&state.outside)
            || add_out.intersects(&state.inside)
            || add_in.intersects(add_out)
        {
            return false;
        }
        state.inside.union_with(add_in);
        state.outside.union_with(add_out);
        true
    }

    fn next_unit(&self, state: &State, from: usize) -> Option<usize> {
        (from..self.units.len()).find(|&u| {
            !state.inside.contains(self.units[u].0) && !state.outside.contains(self.units[u].0)
        })
    }

    fn run(&self, state: State, from: usize, out: &mut Vec<ElementSet>) {
        let Some(u) = self.next_unit(&state, from) else {
            out.push(state.inside);
            return;
        };
        let (a, b) = self.units[u];
        for c in [a, b] {
            let mut next = state.clone();
            if self.apply(&mut next, c) {
                self.run(next, u + 1, out);
            }
        }
    }

    /// Expands the tree breadth-first to `depth` decisions, returning
    /// finished leaves and the open frontier.
    fn frontier(&self, root: State, depth: usize) -> (Vec<ElementSet>, Vec<(State, usize)>) {
        let mut done = Vec::new();
        let mut level = vec![(root, 0usize)];
        for _ in 0..depth {
            let mut next_level = Vec::new();
            for (state, from) in level {
                match self.next_unit(&state, from) {
                    None => done.push(state.inside),
                    Some(u) => {
                        let (a, b) = self.units[u];
                        for c in [a, b] {
                            let mut next = state.clone();
                            if self.apply(&mut next, c) {
                                next_level.push((next, u + 1));
                            }
                        }
                    }
                }
            }
            level = next_level;
        }
        (done, level)
    }
}

/// All balanced ideals (optionally also right-invariant under `parabolic`),
/// sorted by number of minimal generators, then by the sorted list of
/// generator reduced words. The result does not depend on `opts.parallel`.
pub fn enumerate_balanced(
    order: &BruhatOrder,
    parabolic: Option<&Parabolic>,
    opts: EnumerationOptions,
) -> Result<Vec<Ideal>> {
    let g = order.group();
    let n = g.order();
    if n > opts.max_order {
        return Err(Error::BudgetExceeded {
            what: "balanced-ideal enumeration (|W|)",
            needed: n as u64,
            budget: opts.max_order as u64,
        });
    }

    let below: Vec<ElementSet> = g.elements().map(|x| order.below_set(x)).collect();
    // up(x) = w₀ · below(w₀x)
    let above: Vec<ElementSet> = g
        .elements()
        .map(|x| {
            ElementSet::from_elems(
                n,
                below[order.w0_mul(x).index()]
                    .iter()
                    .map(|y| order.w0_mul(y)),
            )
        })
        .collect();
    let top = |x: Elem| parabolic.map_or(x, |p| p.coset_max(x));
    let force_in: Vec<ElementSet> = g
        .elements()
        .map(|c| below[top(c).index()].clone())
        .collect();
    let force_out: Vec<ElementSet> = g
        .elements()
        .map(|c| above[order.w0_mul(top(c)).index()].clone())
        .collect();

    let mut units: Vec<(Elem, Elem)> = g
        .elements()
        .filter(|&x| parabolic.is_none_or(|p| p.coset_min(x) == x))
        .filter_map(|x| {
            let partner = match parabolic {
                Some(p) => p.coset_min(order.w0_mul(x)),
                None => order.w0_mul(x),
            };
            (x <= partner).then_some((x, partner))
        })
        .collect();
    units.sort_by_key(|&(a, b)| (g.length(a).min(g.length(b)), a));

    let search = Search {
        force_in,
        force_out,
        units,
    };
    let mut root = State {
        inside: ElementSet::empty(n),
        outside: ElementSet::empty(n),
    };
    for x in g.elements().filter(|&x| order.is_small(x)) {
        if !search.apply(&mut root, x) {
            return Ok(Vec::new());
        }
    }

    let mut found = if opts.parallel {
        let (mut done, frontier) = search.frontier(root, SPLIT_DEPTH);
        let rest: Vec<Vec<ElementSet>> = frontier
            .into_par_iter()
            .map(|(state, from)| {
                let mut out = Vec::new();
                search.run(state, from, &mut out);
                out
            })
            .collect();
        done.extend(rest.into_iter().flatten());
        done
    } else {
        let mut out = Vec::new();
        search.run(root, 0, &mut out);
        out
    };
    found.sort();
    found.dedup();

    let mut keyed: Vec<((usize, Vec<Word>), Ideal)> = found
        .into_iter()
        .map(|set| {
            let ideal = Ideal::from_set_unchecked(set);
            let words = order.generator_words(&ideal)?;
            Ok(((words.len(), words), ideal))
        })
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));

    for (_, ideal) in &keyed {
        debug_assert!(order.is_downward_closed(ideal.members()));
        if 2 * ideal.len() != n || order.orthogonal(ideal)? != *ideal {
            return Err(Error::verification(
                "enumerated ideal is balanced",
                format!("ideal of size {} in group of order {n}", ideal.len()),
            ));
        }
    }
    Ok(keyed.into_iter().map(|(_, ideal)| ideal).collect())
}
