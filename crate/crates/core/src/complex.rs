//! Finite abstract simplicial complexes.
//!
//! A complex is stored by its facets only. Vertices carry opaque [`Label`]s,
//! kept sorted; every face is a [`BitSet`] of positions into that sorted
//! label list. Faces are enumerated on demand.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::label::{format_labels, Label};

/// A face, as a set of vertex positions of its complex.
pub type Face = BitSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<Label>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from candidate facets.
    ///
    /// Duplicates and dominated sets are dropped, the vertex list is the
    /// sorted union, and an empty candidate list gives the complex `{∅}`.
    pub fn from_facets<I, F, L>(candidates: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        let sets: Vec<BTreeSet<Label>> = candidates
            .into_iter()
            .map(|f| f.into_iter().map(Into::into).collect())
            .collect();
        let vertices: Vec<Label> = sets
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<&Label, usize> =
            vertices.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let faces: Vec<Face> = sets
            .iter()
            .map(|s| s.iter().map(|l| index[l]).collect())
            .collect();
        Self::from_index_sets(&vertices, faces)
    }

    /// Builds a complex from an explicit vertex list and facet list.
    ///
    /// Every listed vertex must occur in some facet, and every facet vertex
    /// must be listed.
    pub fn with_vertices(vertices: &[Label], facets: &[Vec<Label>]) -> Result<Self> {
        let listed: BTreeSet<&Label> = vertices.iter().collect();
        if listed.len() != vertices.len() {
            return Err(Error::LabelCollision("duplicate vertex label".into()));
        }
        let used: BTreeSet<&Label> = facets.iter().flatten().collect();
        if let Some(extra) = used.difference(&listed).next() {
            return Err(Error::UnknownLabel(extra.to_string()));
        }
        if let Some(unused) = listed.difference(&used).next() {
            return Err(Error::InvalidInput(format!(
                "vertex {unused} appears in no facet"
            )));
        }
        Ok(Self::from_facets(facets.iter().map(|f| f.iter().cloned())))
    }

    /// Normalizes index sets over `labels` into a complex, compacting away
    /// unused labels.
    pub(crate) fn from_index_sets(labels: &[Label], sets: impl IntoIterator<Item = Face>) -> Self {
        let mut sets: Vec<Face> = sets.into_iter().collect();
        sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let mut kept: Vec<Face> = Vec::new();
        for s in sets {
            if !kept.iter().any(|k| s.is_subset(k)) {
                kept.push(s);
            }
        }
        if kept.is_empty() {
            kept.push(Face::new());
        }
        let used = kept.iter().fold(Face::new(), |acc, f| acc.union(f));
        let remap: HashMap<usize, usize> = used.iter().enumerate().map(|(new, old)| (old, new)).collect();
        let vertices = used.iter().map(|i| labels[i].clone()).collect();
        let mut facets: Vec<Face> = kept
            .iter()
            .map(|f| f.iter().map(|i| remap[&i]).collect())
            .collect();
        facets.sort();
        Self { vertices, facets }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            facets: vec![Face::new()],
        }
    }

    /// The full simplex on vertices `1..=n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets([(1..=n as i64).collect::<Vec<_>>()])
    }

    /// Boundary of the `n`-simplex, on vertices `1..=n+1`.
    pub fn simplex_boundary(n: usize) -> Self {
        let all: Vec<i64> = (1..=n as i64 + 1).collect();
        Self::from_facets((0..all.len()).map(|skip| {
            all.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect::<Vec<_>>()
        }))
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<Label>> {
        self.facets.iter().map(|f| self.face_labels(f)).collect()
    }

    pub fn face_labels(&self, face: &Face) -> Vec<Label> {
        face.iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub fn face_from_labels(&self, labels: &[Label]) -> Result<Face> {
        labels
            .iter()
            .map(|l| {
                self.vertices
                    .binary_search(l)
                    .map_err(|_| Error::UnknownLabel(l.to_string()))
            })
            .collect()
    }

    pub fn vertex_index(&self, label: &Label) -> Option<usize> {
        self.vertices.binary_search(label).ok()
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// All faces of dimension `k`, in lexicographic order.
    pub fn faces(&self, k: isize) -> Vec<Face> {
        if k < -1 || k > self.dim() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut out = BTreeSet::new();
        for f in &self.facets {
            if f.len() < size {
                continue;
            }
            let verts = f.to_vec();
            for combo in itertools::Itertools::combinations(verts.into_iter(), size) {
                out.insert(combo.into_iter().collect::<Face>());
            }
        }
        out.into_iter().collect()
    }

    /// All faces grouped by dimension: entry `k + 1` holds the `k`-faces.
    pub fn all_faces(&self) -> Vec<Vec<Face>> {
        let top = (self.dim() + 1) as usize;
        let mut by_size: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); top + 1];
        for f in &self.facets {
            let verts = f.to_vec();
            assert!(verts.len() < 32, "facet too large to enumerate");
            for mask in 0u32..(1 << verts.len()) {
                let face: Face = verts
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                by_size[face.len()].insert(face);
            }
        }
        by_size.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// `(f_{-1}, f_0, ..., f_dim)`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.all_faces().iter().map(|fs| fs.len() as u64).collect()
    }

    /// `link(F) = {G : G ∪ F ∈ Δ, G ∩ F = ∅}`.
    pub fn link(&self, face: &Face) -> Result<Self> {
        if face.last().is_some_and(|m| m >= self.vertices.len()) {
            return Err(Error::NotAFace(format!("{face:?}")));
        }
        if !self.contains_face(face) {
            return Err(Error::NotAFace(format_labels(&self.face_labels(face))));
        }
        let sets = self
            .facets
            .iter()
            .filter(|g| face.is_subset(g))
            .map(|g| g.difference(face));
        Ok(Self::from_index_sets(&self.vertices, sets))
    }

    pub fn link_of_labels(&self, labels: &[Label]) -> Result<Self> {
        let face = self
            .face_from_labels(labels)
            .map_err(|_| Error::NotAFace(format_labels(labels)))?;
        self.link(&face)
    }

    /// Subcomplex induced on a set of vertex positions.
    pub fn induced(&self, vertices: &Face) -> Result<Self> {
        if vertices.last().is_some_and(|m| m >= self.vertices.len()) {
            return Err(Error::NotASubset(format!("{vertices:?}")));
        }
        let sets = self.facets.iter().map(|f| f.intersection(vertices));
        Ok(Self::from_index_sets(&self.vertices, sets))
    }

    pub fn induced_by_labels(&self, labels: &[Label]) -> Result<Self> {
        let face = self
            .face_from_labels(labels)
            .map_err(|_| Error::NotASubset(format_labels(labels)))?;
        self.induced(&face)
    }

    /// Cone with a new apex vertex.
    pub fn cone(&self, apex: impl Into<Label>) -> Result<Self> {
        let apex = apex.into();
        if self.vertex_index(&apex).is_some() {
            return Err(Error::LabelCollision(apex.to_string()));
        }
        Ok(Self::from_facets(self.facet_labels().into_iter().map(|mut f| {
            f.push(apex.clone());
            f
        })))
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(shared) = self
            .vertices
            .iter()
            .find(|v| other.vertex_index(v).is_some())
        {
            return Err(Error::LabelCollision(shared.to_string()));
        }
        let left = self.facet_labels();
        let right = other.facet_labels();
        Ok(Self::from_facets(left.iter().flat_map(|a| {
            right.iter().map(move |b| a.iter().chain(b.iter()).cloned().collect::<Vec<_>>())
        })))
    }

    /// Renames vertices; the map must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(&Label) -> Label) -> Result<Self> {
        let renamed: Vec<Label> = self.vertices.iter().map(&map).collect();
        if renamed.iter().collect::<BTreeSet<_>>().len() != renamed.len() {
            return Err(Error::LabelCollision("relabeling is not injective".into()));
        }
        if self.dim() < 0 {
            return Ok(Self::empty());
        }
        Ok(Self::from_facets(
            self.facets
                .iter()
                .map(|f| f.iter().map(|i| renamed[i].clone()).collect::<Vec<_>>()),
        ))
    }

    pub fn is_pure(&self) -> bool {
        let size = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == size)
    }

    /// Every codimension-one face lies in exactly two facets.
    ///
    /// For a 0-dimensional complex the only codimension-one face is `∅`,
    /// so thinness means exactly two vertices.
    pub fn is_thin(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::RequiresPure);
        }
        if self.dim() < 0 {
            return Ok(true);
        }
        let mut counts: HashMap<Face, usize> = HashMap::new();
        for f in &self.facets {
            for v in f.iter() {
                let mut ridge = f.clone();
                ridge.remove(v);
                *counts.entry(ridge).or_default() += 1;
            }
        }
        Ok(counts.values().all(|&c| c == 2))
    }

    /// Adjacency lists on facet positions: two facets are adjacent when they
    /// have the same size and share all but one vertex.
    pub fn dual_graph(&self) -> Vec<Vec<usize>> {
        let m = self.facets.len();
        let mut adj = vec![Vec::new(); m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = (&self.facets[i], &self.facets[j]);
                if a.len() == b.len() && a.intersection(b).len() + 1 == a.len() {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        adj
    }

    pub fn is_dually_connected(&self) -> bool {
        is_connected_graph(&self.dual_graph())
    }

    pub fn is_pseudomanifold(&self) -> Result<bool> {
        Ok(self.is_thin()? && self.is_dually_connected())
    }

    /// Whether the underlying space is path-connected. `{∅}` is not.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for f in &self.facets {
            let vs = f.to_vec();
            for w in vs.windows(2) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
        }
        is_connected_graph(&adj)
    }

    /// `χ̃(Δ) = Σ_{k ≥ -1} (-1)^k f_k`.
    pub fn euler_characteristic_reduced(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }

    /// `h_k = Σ_i (-1)^{k-i} C(d-i, k-i) f_{i-1}` for `k = 0..=d`, `d = dim + 1`.
    pub fn h_vector(&self) -> Result<Vec<i64>> {
        if !self.is_pure() {
            return Err(Error::RequiresPure);
        }
        let f = self.f_vector();
        let d = f.len() - 1;
        Ok((0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let term = binomial(d - i, k - i) * f[i] as i64;
                        if (k - i) % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum()
            })
            .collect())
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

pub(crate) fn is_connected_graph(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == adj.len()
}
