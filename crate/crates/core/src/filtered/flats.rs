//! Matroids and their lattices of flats.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::matrix::{rank_rational, IntegerMatrix};
use crate::posets::{FinitePoset, LatticeStructure};
use crate::rational::Rational;

/// Subsets of the ground set are bit masks, so at most 64 elements.
pub const MAX_GROUND_SET: usize = 64;

pub trait Matroid: Sync {
    fn ground_labels(&self) -> Vec<String>;

    fn rank(&self, set: u64) -> usize;

    fn size(&self) -> usize {
        self.ground_labels().len()
    }

    /// `cl(S) = S ∪ {e : rank(S + e) = rank(S)}`
    fn closure(&self, set: u64) -> u64 {
        let r = self.rank(set);
        (0..self.size())
            .filter(|&e| set & (1 << e) == 0 && self.rank(set | 1 << e) == r)
            .fold(set, |acc, e| acc | 1 << e)
    }
}

/// Affine dependencies of points: the rank of a set is the linear rank of
/// the vectors `(1, p)`.
#[derive(Clone, Debug)]
pub struct LinearMatroid {
    labels: Vec<String>,
    /// homogenized coordinates scaled to integers
    vectors: Vec<Vec<BigInt>>,
}

impl LinearMatroid {
    pub fn from_points(config: &PointConfiguration) -> Result<Self> {
        config.validate()?;
        let vectors = config
            .points
            .iter()
            .map(|p| {
                let homogenized: Vec<Rational> =
                    std::iter::once(Rational::one()).chain(p.coords.iter().cloned()).collect();
                let lcm = homogenized
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                homogenized
                    .iter()
                    .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
                    .collect()
            })
            .collect();
        Ok(Self {
            labels: config.points.iter().map(|p| p.label.clone()).collect(),
            vectors,
        })
    }
}

impl Matroid for LinearMatroid {
    fn ground_labels(&self) -> Vec<String> {
        self.labels.clone()
    }

    fn size(&self) -> usize {
        self.labels.len()
    }

    fn rank(&self, set: u64) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.vectors.len())
            .filter(|&e| set & (1 << e) != 0)
            .map(|e| self.vectors[e].clone())
            .collect();
        if rows.is_empty() {
            return 0;
        }
        rank_rational(&IntegerMatrix::from_dense(&rows))
    }
}

/// The cycle matroid of a simple graph; elements are edges.
#[derive(Clone, Debug)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl GraphicMatroid {
    pub fn new(edges: &[(Label, Label)]) -> Result<Self> {
        let mut index: BTreeMap<&Label, usize> = BTreeMap::new();
        for (u, v) in edges {
            index.insert(u, 0);
            index.insert(v, 0);
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        let mut labels = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let (a, b) = (index[u], index[v]);
            if a == b {
                return Err(Error::InvalidInput(format!("loop at {u}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidInput(format!("parallel edge {u}-{v}")));
            }
            out.push((a, b));
            labels.push(format!("{u}{v}"));
        }
        Ok(Self {
            vertices: index.len(),
            edges: out,
            labels,
        })
    }

    /// The complete graph on `1..=n`.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<(Label, Label)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (Label::from(i), Label::from(j))))
            .collect();
        Self::new(&edges).expect("complete graphs are simple")
    }
}

impl Matroid for GraphicMatroid {
    fn ground_labels(&self) -> Vec<String> {
        self.labels.clone()
    }

    fn size(&self) -> usize {
        self.edges.len()
    }

    /// Size of a spanning forest of the chosen edges.
    fn rank(&self, set: u64) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0;
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if set & (1 << e) == 0 {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                rank += 1;
            }
        }
        rank
    }
}

/// `U_{r,n}`: every set of at most `r` elements is independent.
#[derive(Clone, Copy, Debug)]
pub struct UniformMatroid {
    pub n: usize,
    pub r: usize,
}

impl Matroid for UniformMatroid {
    fn ground_labels(&self) -> Vec<String> {
        (1..=self.n).map(|i| i.to_string()).collect()
    }

    fn size(&self) -> usize {
        self.n
    }

    fn rank(&self, set: u64) -> usize {
        (set.count_ones() as usize).min(self.r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    pub label: String,
    #[serde(with = "crate::rational::string_vec")]
    pub coords: Vec<Rational>,
    #[serde(default, with = "crate::rational::string_opt", skip_serializing_if = "Option::is_none")]
    pub weight: Option<Rational>,
}

/// Labelled points with exact rational coordinates, optionally weighted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfiguration {
    pub points: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genericity: Option<super::Genericity>,
}

impl PointConfiguration {
    pub fn validate(&self) -> Result<()> {
        let Some(first) = self.points.first() else {
            return Err(Error::InvalidInput("no points".into()));
        };
        if self.points.len() > MAX_GROUND_SET {
            return Err(Error::InvalidInput(format!("more than {MAX_GROUND_SET} points")));
        }
        let mut labels = BTreeSet::new();
        let mut coords = BTreeSet::new();
        for p in &self.points {
            if p.coords.len() != first.coords.len() {
                return Err(Error::InvalidInput(format!(
                    "point {} has {} coordinates, expected {}",
                    p.label,
                    p.coords.len(),
                    first.coords.len()
                )));
            }
            if !labels.insert(&p.label) {
                return Err(Error::LabelCollision(p.label.clone()));
            }
            if !coords.insert(&p.coords) {
                return Err(Error::InvalidInput(format!("point {} repeats a location", p.label)));
            }
        }
        Ok(())
    }

    /// Weights of all points, if every point has one.
    pub fn weights(&self) -> Option<Vec<Rational>> {
        self.points.iter().map(|p| p.weight.clone()).collect()
    }
}

/// Flats of a matroid ordered by inclusion, together with the lattice built
/// on them. Flat `i` of the lattice is poset element `i`.
#[derive(Clone, Debug)]
pub struct GeometricLatticeOfFlats {
    element_labels: Vec<String>,
    flats: Vec<u64>,
    ranks: Vec<usize>,
    lattice: LatticeStructure,
}

/// Enumerates flats breadth-first from `cl(∅)`: the flats covering `F` are
/// exactly the sets `cl(F + e)` for `e ∉ F`.
pub fn lattice_of_flats<M: Matroid + ?Sized>(matroid: &M) -> Result<GeometricLatticeOfFlats> {
    let labels = matroid.ground_labels();
    let n = labels.len();
    if n > MAX_GROUND_SET {
        return Err(Error::InvalidInput(format!("more than {MAX_GROUND_SET} elements")));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let start = matroid.closure(0);
    let mut found: HashMap<u64, usize> = HashMap::from([(start, matroid.rank(start))]);
    let mut covers = BTreeSet::new();
    let mut queue = VecDeque::from([start]);
    while let Some(flat) = queue.pop_front() {
        let mut rest = full & !flat;
        while rest != 0 {
            let e = rest.trailing_zeros();
            let next = matroid.closure(flat | 1 << e);
            rest &= !next;
            covers.insert((flat, next));
            if let std::collections::hash_map::Entry::Vacant(e) = found.entry(next) {
                e.insert(matroid.rank(next));
                queue.push_back(next);
            }
        }
    }
    let mut flats: Vec<u64> = found.keys().copied().collect();
    flats.sort_by_key(|&f| (found[&f], mask_indices(f)));
    let position: HashMap<u64, usize> = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let ranks: Vec<usize> = flats.iter().map(|f| found[f]).collect();
    let poset_labels: Vec<Label> = flats
        .iter()
        .map(|&f| Label::Name(flat_name(&labels, f)))
        .collect();
    let cover_labels: Vec<(Label, Label)> = covers
        .iter()
        .map(|(a, b)| (poset_labels[position[a]].clone(), poset_labels[position[b]].clone()))
        .collect();
    let poset = FinitePoset::from_covers(poset_labels, &cover_labels)?;
    let lattice = LatticeStructure::new(poset)?;
    if !lattice.is_geometric() || lattice.poset().ranks()? != ranks.as_slice() {
        return Err(Error::OracleDisagreement(
            "lattice of flats failed the geometric lattice check".into(),
        ));
    }
    Ok(GeometricLatticeOfFlats {
        element_labels: labels,
        flats,
        ranks,
        lattice,
    })
}

pub fn lattice_of_flats_from_points(config: &PointConfiguration) -> Result<GeometricLatticeOfFlats> {
    lattice_of_flats(&LinearMatroid::from_points(config)?)
}

pub fn lattice_of_flats_graphic(edges: &[(Label, Label)]) -> Result<GeometricLatticeOfFlats> {
    lattice_of_flats(&GraphicMatroid::new(edges)?)
}

/// Requires `1 <= r <= n`.
pub fn uniform_matroid(n: usize, r: usize) -> Result<GeometricLatticeOfFlats> {
    if r < 1 || r > n {
        return Err(Error::InvalidInput(format!("uniform matroid needs 1 <= r <= n, got r = {r}, n = {n}")));
    }
    lattice_of_flats(&UniformMatroid { n, r })
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1 << i) != 0).collect()
}

fn flat_name(labels: &[String], mask: u64) -> String {
    let names: Vec<&str> = mask_indices(mask).into_iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

impl GeometricLatticeOfFlats {
    pub fn element_labels(&self) -> &[String] {
        &self.element_labels
    }

    pub fn num_elements(&self) -> usize {
        self.element_labels.len()
    }

    /// Flats as element masks, ordered by rank then lexicographically.
    pub fn flats(&self) -> &[u64] {
        &self.flats
    }

    pub fn flat_elements(&self, flat: usize) -> Vec<usize> {
        mask_indices(self.flats[flat])
    }

    pub fn flat_label(&self, flat: usize) -> String {
        flat_name(&self.element_labels, self.flats[flat])
    }

    pub fn flat_rank(&self, flat: usize) -> usize {
        self.ranks[flat]
    }

    /// Flat index for an exact element mask.
    pub fn find_flat(&self, mask: u64) -> Option<usize> {
        self.flats.iter().position(|&f| f == mask)
    }

    /// Smallest flat containing the mask.
    pub fn closure(&self, mask: u64) -> usize {
        (0..self.flats.len())
            .find(|&i| mask & !self.flats[i] == 0)
            .expect("the top flat contains everything")
    }

    /// `r = ρ(1̂)`
    pub fn rank(&self) -> usize {
        self.ranks[self.top()]
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// Flats of rank 1.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.flats.len()).filter(|&i| self.ranks[i] == 1).collect()
    }

    pub fn flats_of_rank(&self, k: usize) -> Vec<usize> {
        (0..self.flats.len()).filter(|&i| self.ranks[i] == k).collect()
    }

    pub fn lattice(&self) -> &LatticeStructure {
        &self.lattice
    }

    pub fn poset(&self) -> &FinitePoset {
        self.lattice.poset()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    pub(crate) fn config(points: &[(&str, i64, i64)]) -> PointConfiguration {
        PointConfiguration {
            points: points
                .iter()
                .map(|&(l, x, y)| Point {
                    label: l.into(),
                    coords: vec![Rational::from_integer(x.into()), Rational::from_integer(y.into())],
                    weight: None,
                })
                .collect(),
            genericity: None,
        }
    }

    fn lines(l: &GeometricLatticeOfFlats) -> Vec<String> {
        l.flats_of_rank(2).into_iter().map(|f| l.flat_label(f)).collect()
    }

    #[test]
    fn triangles_and_lines() {
        let generic = lattice_of_flats_from_points(&config(&[("a", 0, 0), ("b", 1, 0), ("c", 0, 1)])).unwrap();
        assert_eq!(generic.rank(), 3);
        assert_eq!(generic.flats().len(), 8);
        let collinear = lattice_of_flats_from_points(&config(&[("a", 0, 0), ("b", 1, 1), ("c", 2, 2)])).unwrap();
        assert_eq!(collinear.rank(), 2);
        assert_eq!(collinear.flats().len(), 5);
        assert_eq!(
            collinear.lattice().characteristic_polynomial().unwrap().to_string(),
            "z^2 - 3z + 2"
        );
    }

    #[test]
    fn six_point_configuration() {
        let l = lattice_of_flats_from_points(&config(&[
            ("a", 0, 0),
            ("b", 2, 0),
            ("c", 4, 0),
            ("d", 1, 3),
            ("e", 0, 4),
            ("f", 0, 6),
        ]))
        .unwrap();
        assert_eq!(
            lines(&l),
            vec!["{a,b,c}", "{a,d}", "{a,e,f}", "{b,d,f}", "{b,e}", "{c,d,e}", "{c,f}"]
        );
    }

    #[test]
    fn graphic_and_uniform() {
        let k3 = lattice_of_flats(&GraphicMatroid::complete(3)).unwrap();
        assert_eq!(k3.flats().len(), 5);
        assert_eq!(k3.lattice().characteristic_polynomial().unwrap().to_string(), "z^2 - 3z + 2");
        let k4 = lattice_of_flats(&GraphicMatroid::complete(4)).unwrap();
        let sizes: Vec<usize> = k4.flats_of_rank(2).iter().map(|&f| k4.flat_elements(f).len()).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 3);
        // chromatic polynomial of K4 over z
        assert_eq!(
            k4.lattice().characteristic_polynomial().unwrap().to_string(),
            "z^3 - 6z^2 + 11z - 6"
        );
        let u36 = uniform_matroid(6, 3).unwrap();
        assert_eq!(u36.flats().len(), 1 + 6 + 15 + 1);
        let u12 = uniform_matroid(2, 1).unwrap();
        assert_eq!(u12.flats().len(), 2);
        assert!(uniform_matroid(3, 0).is_err());
        let parallel = GraphicMatroid::new(&[(1.into(), 2.into()), (2.into(), 1.into())]);
        assert!(parallel.is_err());
    }

    #[test]
    fn rejects_bad_configurations() {
        let mut c = config(&[("a", 0, 0), ("b", 0, 0)]);
        assert!(lattice_of_flats_from_points(&c).is_err());
        c.points[1].coords = vec![parse_rational("1/2").unwrap()];
        assert!(lattice_of_flats_from_points(&c).is_err());
        c.points.clear();
        assert!(lattice_of_flats_from_points(&c).is_err());
    }

    #[test]
    fn closure_oracle() {
        let matroids: Vec<Box<dyn Matroid>> = vec![
            Box::new(GraphicMatroid::complete(4)),
            Box::new(UniformMatroid { n: 5, r: 3 }),
            Box::new(
                LinearMatroid::from_points(&config(&[
                    ("a", 0, 0),
                    ("b", 1, 0),
                    ("c", 2, 0),
                    ("d", 0, 1),
                    ("e", 1, 1),
                    ("f", 5, 7),
                    ("g", 2, 2),
                ]))
                .unwrap(),
            ),
        ];
        for m in &matroids {
            let lattice = lattice_of_flats(m.as_ref()).unwrap();
            for s in 0..1u64 << m.size() {
                let c = m.closure(s);
                assert_eq!(m.closure(c), c);
                assert_eq!(m.rank(c), m.rank(s));
                assert_eq!(lattice.flats()[lattice.closure(s)], c);
            }
        }
    }
}
