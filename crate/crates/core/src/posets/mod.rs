//! Finite posets given by cover relations.
//!
//! The transitive closure is stored as bit rows in both directions, so
//! comparisons and interval enumeration are set operations. Möbius values
//! are computed per bottom element on first use and kept.

mod lattice;

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::label::Label;

pub use lattice::LatticeStructure;

#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<Label>,
    covers: Vec<(usize, usize)>,
    /// `up[x] = {y : x <= y}`
    up: Vec<BitSet>,
    /// `down[y] = {x : x <= y}`
    down: Vec<BitSet>,
    /// a linear extension
    order: Vec<usize>,
    ranks: Option<Vec<usize>>,
    mobius: Vec<OnceLock<Vec<i64>>>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for FinitePoset {}

impl FinitePoset {
    /// Validates that labels are distinct, that the covers form an acyclic
    /// relation, and that no cover is implied by a longer chain.
    pub fn from_covers(elements: Vec<Label>, covers: &[(Label, Label)]) -> Result<Self> {
        let index = label_index(&elements)?;
        let lookup = |l: &Label| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let (a, b) = (lookup(a)?, lookup(b)?);
            if a == b {
                return Err(Error::InvalidPoset(format!("{} covers itself", elements[a])));
            }
            pairs.push((a, b));
        }
        pairs.sort_unstable();
        pairs.dedup();
        let poset = Self::build(elements, pairs.clone())?;
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| {
            // some z strictly between a and b
            poset.up[a]
                .intersection(&poset.down[b])
                .len()
                > 2
        }) {
            return Err(Error::InvalidPoset(format!(
                "{} < {} is implied by a longer chain and is not a cover",
                poset.labels[a], poset.labels[b]
            )));
        }
        Ok(poset)
    }

    /// Builds the poset of a reflexive, antisymmetric, transitive relation.
    pub fn from_order(elements: Vec<Label>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        label_index(&elements)?;
        let n = elements.len();
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq(a, b) {
                    continue;
                }
                if leq(b, a) {
                    return Err(Error::InvalidPoset(format!(
                        "{} and {} are mutually below each other",
                        elements[a], elements[b]
                    )));
                }
                let between = (0..n).any(|z| z != a && z != b && leq(a, z) && leq(z, b));
                if !between {
                    covers.push((a, b));
                }
            }
        }
        Self::build(elements, covers)
    }

    fn build(labels: Vec<Label>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut upper = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in &covers {
            upper[a].push(b);
            indegree[b] += 1;
        }
        // Kahn's algorithm; smallest index first keeps the extension canonical
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &upper[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() < n {
            return Err(Error::InvalidPoset("cover relation has a cycle".into()));
        }
        let mut up: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
        for &v in order.iter().rev() {
            for &w in &upper[v] {
                up[v] = up[v].union(&up[w]);
            }
        }
        let mut down: Vec<BitSet> = vec![BitSet::new(); n];
        for (x, ups) in up.iter().enumerate() {
            for y in ups.iter() {
                down[y].insert(x);
            }
        }
        let mut poset = Self {
            labels,
            covers,
            up,
            down,
            order,
            ranks: None,
            mobius: (0..n).map(|_| OnceLock::new()).collect(),
        };
        poset.ranks = poset.detect_ranks();
        Ok(poset)
    }

    /// `Some(ranks)` when every maximal chain has the same length.
    fn detect_ranks(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            lower[b].push(a);
            upper[a].push(b);
        }
        // (shortest, longest) saturated chains from a minimal element / to a maximal one
        let mut below = vec![(0usize, 0usize); n];
        for &v in &self.order {
            if let Some(lo) = lower[v].iter().map(|&u| below[u].0 + 1).min() {
                let hi = lower[v].iter().map(|&u| below[u].1 + 1).max().unwrap_or(0);
                below[v] = (lo, hi);
            }
        }
        let mut above = vec![(0usize, 0usize); n];
        for &v in self.order.iter().rev() {
            if let Some(lo) = upper[v].iter().map(|&u| above[u].0 + 1).min() {
                let hi = upper[v].iter().map(|&u| above[u].1 + 1).max().unwrap_or(0);
                above[v] = (lo, hi);
            }
        }
        let total = (0..n).map(|v| below[v].0 + above[v].0).next();
        let graded = (0..n).all(|v| {
            below[v].0 == below[v].1
                && above[v].0 == above[v].1
                && Some(below[v].0 + above[v].0) == total
        });
        graded.then(|| below.iter().map(|b| b.0).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &Label {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element(&self, label: &Label) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Cover pairs `(lower, upper)` as positions.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_labels(&self) -> Vec<(Label, Label)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `{y : x <= y}`
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// `{y : y <= x}`
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    /// A linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].len() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].len() == 1).collect()
    }

    /// The unique minimum, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.up[x].len() == self.len())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.down[x].len() == self.len())
    }

    pub fn is_graded(&self) -> bool {
        self.ranks.is_some()
    }

    /// Ranks counted from the minimal elements.
    pub fn ranks(&self) -> Result<&[usize]> {
        self.ranks.as_deref().ok_or(Error::Ungraded)
    }

    pub fn rank(&self, x: usize) -> Result<usize> {
        Ok(self.ranks()?[x])
    }

    /// Length of the longest chain, `-1` for the empty poset.
    pub fn length(&self) -> isize {
        self.maximal_chains()
            .iter()
            .map(|c| c.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// Every maximal chain, each listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut upper = vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            upper[a].push(b);
        }
        let mut chains = Vec::new();
        let mut stack: Vec<Vec<usize>> = self.minimal_elements().into_iter().map(|m| vec![m]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("chains are nonempty");
            if upper[last].is_empty() {
                chains.push(chain);
                continue;
            }
            for &next in upper[last].iter().rev() {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
        chains.sort();
        chains
    }

    /// The complex of chains, on the element labels.
    pub fn order_complex(&self) -> SimplicialComplex {
        if self.is_empty() {
            return SimplicialComplex::empty();
        }
        SimplicialComplex::from_facets(
            self.maximal_chains()
                .into_iter()
                .map(|c| c.into_iter().map(|x| self.labels[x].clone()).collect::<Vec<_>>()),
        )
    }

    /// `μ(x, y)`; requires `x <= y`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].to_string(),
                self.labels[y].to_string(),
            ));
        }
        Ok(self.mobius_from(x)[y])
    }

    pub fn mobius_labels(&self, x: &Label, y: &Label) -> Result<i64> {
        self.mobius(self.element(x)?, self.element(y)?)
    }

    /// `μ(x, ·)` on every element, zero off the up-set of `x`.
    pub fn mobius_from(&self, x: usize) -> &[i64] {
        self.mobius[x].get_or_init(|| {
            let mut mu = vec![0i64; self.len()];
            for &y in &self.order {
                if !self.leq(x, y) {
                    continue;
                }
                if y == x {
                    mu[y] = 1;
                    continue;
                }
                let interval = self.up[x].intersection(&self.down[y]);
                let sum = interval
                    .iter()
                    .filter(|&z| z != y)
                    .try_fold(0i64, |acc, z| acc.checked_add(mu[z]))
                    .expect("Möbius value overflows i64");
                mu[y] = -sum;
            }
            mu
        })
    }

    /// Subposet on the given elements with the inherited order.
    pub fn induced(&self, keep: &BitSet) -> FinitePoset {
        let kept: Vec<usize> = keep.iter().filter(|&x| x < self.len()).collect();
        let labels = kept.iter().map(|&x| self.labels[x].clone()).collect();
        Self::from_order(labels, |a, b| self.leq(kept[a], kept[b]))
            .expect("subposet of a valid poset")
    }

    /// Elements whose rank lies in `keep`.
    pub fn rank_selection(&self, keep: &BTreeSet<usize>) -> Result<FinitePoset> {
        let ranks = self.ranks()?;
        let chosen = (0..self.len()).filter(|&x| keep.contains(&ranks[x])).collect();
        Ok(self.induced(&chosen))
    }

    /// The closed interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> Result<FinitePoset> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].to_string(),
                self.labels[y].to_string(),
            ));
        }
        Ok(self.induced(&self.up[x].intersection(&self.down[y])))
    }

    /// Removes a unique bottom and a unique top when present.
    pub fn proper_part(&self) -> FinitePoset {
        let mut keep = BitSet::full(self.len());
        if let Some(b) = self.bottom() {
            keep.remove(b);
        }
        if let Some(t) = self.top() {
            keep.remove(t);
        }
        self.induced(&keep)
    }

    /// Adds a new minimum below everything; it becomes element `len()`.
    pub fn with_bottom(&self, label: Label) -> Result<FinitePoset> {
        let mut labels = self.labels.clone();
        labels.push(label);
        let b = self.len();
        let mut covers = self.covers.clone();
        covers.extend(self.minimal_elements().into_iter().map(|m| (b, m)));
        label_index(&labels)?;
        Self::build(labels, covers)
    }
}

fn label_index(labels: &[Label]) -> Result<HashMap<Label, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::LabelCollision(l.to_string()));
        }
    }
    Ok(index)
}

/// The Boolean lattice of subsets of `{1..n}`, elements labelled like `{1,3}`.
pub fn boolean_lattice(n: usize) -> FinitePoset {
    let masks: Vec<u32> = (0..1u32 << n).collect();
    let labels = masks
        .iter()
        .map(|&m| {
            let items: Vec<String> = (0..n).filter(|i| m & (1 << i) != 0).map(|i| (i + 1).to_string()).collect();
            Label::Name(format!("{{{}}}", items.join(",")))
        })
        .collect();
    FinitePoset::from_order(labels, |a, b| masks[a] & !masks[b] == 0).expect("subset order")
}

/// `0 < 1 < ... < n-1`
pub fn chain(n: usize) -> FinitePoset {
    FinitePoset::from_order((0..n).map(Label::from).collect(), |a, b| a <= b).expect("total order")
}
