//! A sound but incomplete check for simple connectivity.
//!
//! The edge-path group is presented with one generator per edge outside a
//! spanning tree of the 1-skeleton and one relator per triangle. The
//! presentation is then simplified by Tietze moves that eliminate a
//! generator occurring exactly once in some relator. Deciding triviality of
//! a finitely presented group is impossible in general, so the search is
//! capped and gives up with [`GroupStatus::Unknown`].

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{reduced_homology, Coefficients};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupStatus {
    Trivial,
    Nontrivial,
    Unknown,
}

/// Limits for the Tietze simplification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzeBudget {
    pub max_passes: usize,
    pub max_relator_len: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        Self {
            max_passes: 10_000,
            max_relator_len: 2_000,
        }
    }
}

pub fn fundamental_group_status(complex: &SimplicialComplex) -> Result<GroupStatus> {
    fundamental_group_status_with(complex, TietzeBudget::default())
}

/// `Trivial` only when the presentation simplifies to the empty one;
/// `Nontrivial` only with a witness (nonzero `H̃_1(Δ; ℤ)` or a free
/// presentation with generators left).
pub fn fundamental_group_status_with(
    complex: &SimplicialComplex,
    budget: TietzeBudget,
) -> Result<GroupStatus> {
    if !complex.is_connected() {
        return Err(Error::Disconnected);
    }
    if !reduced_homology(complex, Coefficients::Integers).is_trivial(1) {
        return Ok(GroupStatus::Nontrivial);
    }
    let mut presentation = Presentation::edge_path_group(complex);
    Ok(presentation.simplify(budget))
}

/// Generator `g` is written `g + 1`, its inverse `-(g + 1)`.
type Word = Vec<i32>;

struct Presentation {
    alive: Vec<bool>,
    relators: Vec<Word>,
}

impl Presentation {
    fn edge_path_group(complex: &SimplicialComplex) -> Self {
        let n = complex.num_vertices();
        let edges = complex.faces(1);
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            let v = e.to_vec();
            adj[v[0]].push(v[1]);
            adj[v[1]].push(v[0]);
        }
        // BFS spanning tree rooted at a vertex of maximum degree; for cones
        // this is the apex and every relator collapses to a single letter
        let root = (0..n).max_by_key(|&v| (adj[v].len(), std::cmp::Reverse(v))).unwrap_or(0);
        let mut in_tree = vec![false; n];
        let mut tree_edges = std::collections::HashSet::new();
        in_tree[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !in_tree[v] {
                    in_tree[v] = true;
                    tree_edges.insert((u.min(v), u.max(v)));
                    queue.push_back(v);
                }
            }
        }
        let mut generator: HashMap<(usize, usize), i32> = HashMap::new();
        for e in &edges {
            let v = e.to_vec();
            let key = (v[0], v[1]);
            if !tree_edges.contains(&key) {
                let id = generator.len() as i32 + 1;
                generator.insert(key, id);
            }
        }
        // oriented edge u -> v as a word
        let letter = |u: usize, v: usize| -> Option<i32> {
            if u < v {
                generator.get(&(u, v)).copied()
            } else {
                generator.get(&(v, u)).map(|g| -g)
            }
        };
        let relators = complex
            .faces(2)
            .iter()
            .map(|t| {
                let v = t.to_vec();
                [letter(v[0], v[1]), letter(v[1], v[2]), letter(v[2], v[0])]
                    .into_iter()
                    .flatten()
                    .collect::<Word>()
            })
            .collect();
        Self {
            alive: vec![true; generator.len()],
            relators,
        }
    }

    fn simplify(&mut self, budget: TietzeBudget) -> GroupStatus {
        for _ in 0..budget.max_passes {
            self.normalize();
            if !self.alive.iter().any(|&a| a) {
                return GroupStatus::Trivial;
            }
            if self.relators.is_empty() {
                // free group of positive rank
                return GroupStatus::Nontrivial;
            }
            let Some((r, letter_pos)) = self.best_elimination() else {
                return GroupStatus::Unknown;
            };
            if !self.eliminate(r, letter_pos, budget.max_relator_len) {
                return GroupStatus::Unknown;
            }
        }
        GroupStatus::Unknown
    }

    fn normalize(&mut self) {
        for r in &mut self.relators {
            cyclically_reduce(r);
        }
        self.relators.retain(|r| !r.is_empty());
        self.relators.sort();
        self.relators.dedup();
    }

    /// Shortest relator containing some generator exactly once, with the
    /// position of that letter.
    fn best_elimination(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, r) in self.relators.iter().enumerate() {
            if best.is_some_and(|(len, _, _)| r.len() >= len) {
                continue;
            }
            let mut counts: HashMap<i32, usize> = HashMap::new();
            for &l in r {
                *counts.entry(l.abs()).or_default() += 1;
            }
            if let Some(pos) = r.iter().position(|l| counts[&l.abs()] == 1) {
                best = Some((r.len(), ri, pos));
            }
        }
        best.map(|(_, ri, pos)| (ri, pos))
    }

    /// Solves relator `r` for the letter at `pos` and substitutes everywhere.
    fn eliminate(&mut self, r: usize, pos: usize, max_len: usize) -> bool {
        let rel = self.relators.swap_remove(r);
        let letter = rel[pos];
        let generator = letter.abs();
        // rel = u x^e v = 1  gives  x^e = (v u)^{-1}
        let vu: Word = rel[pos + 1..].iter().chain(rel[..pos].iter()).copied().collect();
        let replacement = if letter > 0 { inverse(&vu) } else { vu };
        let replacement_inv = inverse(&replacement);
        for other in &mut self.relators {
            if !other.iter().any(|l| l.abs() == generator) {
                continue;
            }
            let mut out = Word::with_capacity(other.len());
            for &l in other.iter() {
                if l == generator {
                    out.extend_from_slice(&replacement);
                } else if l == -generator {
                    out.extend_from_slice(&replacement_inv);
                } else {
                    out.push(l);
                }
            }
            cyclically_reduce(&mut out);
            if out.len() > max_len {
                return false;
            }
            *other = out;
        }
        self.alive[(generator - 1) as usize] = false;
        true
    }
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|l| -l).collect()
}

fn cyclically_reduce(w: &mut Word) {
    let mut stack: Word = Vec::with_capacity(w.len());
    for &l in w.iter() {
        if stack.last() == Some(&-l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    let (mut lo, mut hi) = (0, stack.len());
    while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    *w = stack[lo..hi].to_vec();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn spheres_are_simply_connected() {
        for n in 3..=5 {
            let s = SimplicialComplex::simplex_boundary(n);
            assert_eq!(fundamental_group_status(&s).unwrap(), GroupStatus::Trivial);
        }
        assert_eq!(
            fundamental_group_status(&corpus::cross_polytope_boundary(3)).unwrap(),
            GroupStatus::Trivial
        );
        // a single point and a tree have no generators at all
        let point = SimplicialComplex::from_facets([[1]]);
        assert_eq!(fundamental_group_status(&point).unwrap(), GroupStatus::Trivial);
    }

    #[test]
    fn circles_and_projective_plane_are_not() {
        assert_eq!(
            fundamental_group_status(&corpus::hollow_triangle()).unwrap(),
            GroupStatus::Nontrivial
        );
        assert_eq!(
            fundamental_group_status(&corpus::rp2_6()).unwrap(),
            GroupStatus::Nontrivial
        );
    }

    #[test]
    fn disconnected_input_is_an_error() {
        assert_eq!(
            fundamental_group_status(&corpus::two_disjoint_edges()),
            Err(Error::Disconnected)
        );
        assert_eq!(
            fundamental_group_status(&SimplicialComplex::empty()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn zero_budget_gives_unknown() {
        let s = SimplicialComplex::simplex_boundary(3);
        let budget = TietzeBudget {
            max_passes: 0,
            max_relator_len: 10,
        };
        assert_eq!(fundamental_group_status_with(&s, budget).unwrap(), GroupStatus::Unknown);
    }

    #[test]
    fn cyclic_reduction() {
        let mut w = vec![1, 2, -2, 3, -1];
        cyclically_reduce(&mut w);
        assert_eq!(w, vec![3]);
    }

    #[test]
    fn never_trivial_with_first_homology() {
        for c in corpus::random_corpus(21, 300, 7) {
            if !c.is_connected() {
                continue;
            }
            let status = fundamental_group_status(&c).unwrap();
            let h1 = reduced_homology(&c, Coefficients::Integers);
            if !h1.is_trivial(1) {
                assert_ne!(status, GroupStatus::Trivial);
            }
            // cones are contractible
            let apex = crate::label::Label::Name("apex".into());
            let cone = c.cone(apex).unwrap();
            assert_eq!(fundamental_group_status(&cone).unwrap(), GroupStatus::Trivial);
        }
    }
}
