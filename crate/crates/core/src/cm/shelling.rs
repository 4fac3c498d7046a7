//! Backtracking search for a shelling order of a pure complex.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ternary::Ternary;

pub const DEFAULT_SHELLING_BUDGET: u64 = 1_000_000;

/// Outcome of the search. `order` lists facet positions (into
/// [`SimplicialComplex::facets`]) when a shelling was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingSearch {
    pub verdict: Ternary,
    pub order: Option<Vec<usize>>,
    pub nodes: u64,
}

pub fn is_shellable(complex: &SimplicialComplex, budget: u64) -> Result<Ternary> {
    Ok(find_shelling(complex, budget)?.verdict)
}

/// Explores orders facet by facet. A facet `F` may follow the set `S` when
/// `F ∩ ⋃S` is pure of codimension one in `F`. Whether that holds depends
/// only on `S` as a set, so dead ends are memoized by set.
pub fn find_shelling(complex: &SimplicialComplex, budget: u64) -> Result<ShellingSearch> {
    if !complex.is_pure() {
        return Err(Error::RequiresPure);
    }
    let mut search = Search {
        facets: complex.facets(),
        order: Vec::new(),
        used: BitSet::new(),
        dead: HashSet::new(),
        nodes: 0,
        budget,
    };
    let verdict = match search.extend() {
        Some(true) => Ternary::True,
        Some(false) => Ternary::False,
        None => Ternary::Unknown,
    };
    Ok(ShellingSearch {
        order: (verdict == Ternary::True).then(|| search.order.clone()),
        verdict,
        nodes: search.nodes,
    })
}

struct Search<'a> {
    facets: &'a [Face],
    order: Vec<usize>,
    used: BitSet,
    dead: HashSet<BitSet>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `None` when the budget ran out.
    fn extend(&mut self) -> Option<bool> {
        if self.order.len() == self.facets.len() {
            return Some(true);
        }
        if self.dead.contains(&self.used) {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        for f in 0..self.facets.len() {
            if self.used.contains(f) || !self.attaches(f) {
                continue;
            }
            self.used.insert(f);
            self.order.push(f);
            match self.extend() {
                Some(false) => {}
                other => return other,
            }
            self.order.pop();
            self.used.remove(f);
        }
        self.dead.insert(self.used.clone());
        Some(false)
    }

    fn attaches(&self, f: usize) -> bool {
        if self.order.is_empty() {
            return true;
        }
        let facet = &self.facets[f];
        // vertices v of F with F \ v inside some earlier facet
        let ridges: BitSet = self
            .order
            .iter()
            .map(|&g| facet.difference(&self.facets[g]))
            .filter(|d| d.len() == 1)
            .map(|d| d.first().expect("nonempty"))
            .collect();
        // every F ∩ G must sit inside one of those ridges
        self.order
            .iter()
            .all(|&g| !facet.difference(&self.facets[g]).is_disjoint(&ridges))
    }
}
