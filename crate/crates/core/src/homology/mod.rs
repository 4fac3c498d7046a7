//! Reduced simplicial homology over ℤ, ℚ and 𝔽_p.
//!
//! Chain groups are indexed from dimension `-1` (the empty face) so that the
//! augmentation is part of the chain complex and everything computed here is
//! reduced homology. `H̃_{-1}({∅}) = ℤ` is reported like any other group.

mod fundamental_group;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::{rank_mod_p, rank_rational, smith_normal_form, IntegerMatrix};

pub use fundamental_group::{fundamental_group_status, fundamental_group_status_with, GroupStatus, TietzeBudget};

/// Coefficient ring: the integers, the rationals, or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    Prime(u32),
}

impl Coefficients {
    /// The prime field 𝔽_p; `p` must be prime and below 2³¹.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidCoefficients(format!("{p} is not a prime below 2^31")));
        }
        Ok(Coefficients::Prime(p as u32))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Coefficients::Integers)
    }

    /// 0 for ℤ and ℚ.
    pub fn characteristic(self) -> u32 {
        match self {
            Coefficients::Prime(p) => p,
            _ => 0,
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("z"),
            Coefficients::Rationals => f.write_str("q"),
            Coefficients::Prime(p) => write!(f, "f{p}"),
        }
    }
}

/// Accepts `z`, `q`, `fp:<p>` and the short form `f<p>`.
impl FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "z" => Ok(Coefficients::Integers),
            "q" => Ok(Coefficients::Rationals),
            _ => {
                let digits = s
                    .strip_prefix("fp:")
                    .or_else(|| s.strip_prefix('f'))
                    .ok_or_else(|| Error::InvalidCoefficients(s.clone()))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::InvalidCoefficients(s.clone()))?;
                Coefficients::prime(p)
            }
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Boundary maps `∂_0, …, ∂_dim`.
///
/// Faces of each dimension are ordered lexicographically by vertex
/// position; `∂_k` has rows indexed by `(k-1)`-faces and columns by
/// `k`-faces, with entry `(-1)^i` for omitting the `i`-th smallest vertex.
/// `∂_0` is the augmentation onto the empty face.
pub fn boundary_matrices(complex: &SimplicialComplex) -> Vec<IntegerMatrix> {
    boundary_matrices_of(&complex.all_faces())
}

pub(crate) fn boundary_matrices_of(faces: &[Vec<Face>]) -> Vec<IntegerMatrix> {
    (1..faces.len())
        .map(|level| {
            let lower: HashMap<&Face, usize> =
                faces[level - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
            let entries = faces[level].iter().enumerate().flat_map(|(j, face)| {
                let lower = &lower;
                face.iter().enumerate().map(move |(i, v)| {
                    let mut sub = face.clone();
                    sub.remove(v);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    (lower[&sub], j, BigInt::from(sign))
                })
            });
            IntegerMatrix::from_triplets(faces[level - 1].len(), faces[level].len(), entries)
        })
        .collect()
}

/// One reduced homology group: free rank plus torsion invariant factors.
/// Over a field the torsion list is always empty and `rank` is the Betti number.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Isomorphic to the coefficient ring itself.
    pub fn is_coefficient_ring(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl HomologyGroup {
    /// `ring` names the free summand, as in `Q^2` or `F2`.
    pub fn display_over(&self, ring: &str) -> String {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(ring.to_string()),
            r => parts.push(format!("{ring}^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_over("Z"))
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HomologyGroup", 2)?;
        s.serialize_field("rank", &self.rank)?;
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|d| match d.to_u64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(d.to_string()),
            })
            .collect();
        s.serialize_field("torsion", &torsion)?;
        s.end()
    }
}

/// Reduced homology in every dimension from `-1` to `dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    coefficients: Coefficients,
    groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    /// Highest dimension covered.
    pub fn top_dim(&self) -> isize {
        self.groups.len() as isize - 2
    }

    /// `H̃_i`; `None` outside `-1..=top_dim`, where the group is zero.
    pub fn group(&self, i: isize) -> Option<&HomologyGroup> {
        if i < -1 {
            return None;
        }
        self.groups.get((i + 1) as usize)
    }

    pub fn groups(&self) -> impl Iterator<Item = (isize, &HomologyGroup)> {
        self.groups.iter().enumerate().map(|(i, g)| (i as isize - 1, g))
    }

    pub fn rank(&self, i: isize) -> usize {
        self.group(i).map_or(0, |g| g.rank)
    }

    pub fn is_trivial(&self, i: isize) -> bool {
        self.group(i).is_none_or(HomologyGroup::is_trivial)
    }

    /// `H̃_i = 0` for every `i < k`.
    pub fn vanishes_below(&self, k: isize) -> bool {
        self.groups().take_while(|&(i, _)| i < k).all(|(_, g)| g.is_trivial())
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_trivial)
    }

    /// Homology of a `k`-sphere: the coefficient ring in degree `k`, zero elsewhere.
    pub fn is_sphere_like(&self, k: isize) -> bool {
        self.vanishes_below(k)
            && self.group(k).is_some_and(HomologyGroup::is_coefficient_ring)
            && self.groups().filter(|&(i, _)| i > k).all(|(_, g)| g.is_trivial())
    }

    /// `Σ (-1)^i rank H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups()
            .map(|(i, g)| if i.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.groups.len()))?;
        for (i, g) in self.groups() {
            map.serialize_entry(&i.to_string(), g)?;
        }
        map.end()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = match self.coefficients {
            Coefficients::Integers => "Z".to_string(),
            Coefficients::Rationals => "Q".to_string(),
            Coefficients::Prime(p) => format!("F{p}"),
        };
        for (i, g) in self.groups() {
            writeln!(f, "H_{i} = {}", g.display_over(&ring))?;
        }
        Ok(())
    }
}

pub fn reduced_homology(complex: &SimplicialComplex, coefficients: Coefficients) -> HomologyProfile {
    homology_of_faces(&complex.all_faces(), coefficients)
}

pub(crate) fn homology_of_faces(faces: &[Vec<Face>], coefficients: Coefficients) -> HomologyProfile {
    let boundaries = boundary_matrices_of(faces);
    // ranks[k] is the rank of ∂_k : C_k -> C_{k-1}, i.e. level k+1 -> level k
    let mut ranks = Vec::with_capacity(boundaries.len());
    let mut torsion = Vec::with_capacity(boundaries.len());
    for b in &boundaries {
        match coefficients {
            Coefficients::Integers => {
                let snf = smith_normal_form(b);
                ranks.push(snf.rank);
                torsion.push(snf.torsion());
            }
            Coefficients::Rationals => {
                ranks.push(rank_rational(b));
                torsion.push(Vec::new());
            }
            Coefficients::Prime(p) => {
                ranks.push(rank_mod_p(b, p.into()));
                torsion.push(Vec::new());
            }
        }
    }
    let groups = (0..faces.len())
        .map(|level| {
            let out_of = if level == 0 { 0 } else { ranks[level - 1] };
            let into = ranks.get(level).copied().unwrap_or(0);
            HomologyGroup {
                rank: faces[level].len() - out_of - into,
                torsion: torsion.get(level).cloned().unwrap_or_default(),
            }
        })
        .collect();
    HomologyProfile {
        coefficients,
        groups,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use num_traits::Zero;

    fn z_mod(n: i64) -> Vec<BigInt> {
        vec![BigInt::from(n)]
    }

    #[test]
    fn parses_coefficients() {
        assert_eq!("z".parse::<Coefficients>().unwrap(), Coefficients::Integers);
        assert_eq!("Q".parse::<Coefficients>().unwrap(), Coefficients::Rationals);
        assert_eq!("fp:3".parse::<Coefficients>().unwrap(), Coefficients::Prime(3));
        assert_eq!("f2".parse::<Coefficients>().unwrap(), Coefficients::Prime(2));
        assert!("fp:4".parse::<Coefficients>().is_err());
        assert!("f2147483659".parse::<Coefficients>().is_err());
        assert!("r".parse::<Coefficients>().is_err());
        assert_eq!(Coefficients::Prime(2147483647).to_string(), "f2147483647");
    }

    #[test]
    fn edge_boundary_signs() {
        let edge = SimplicialComplex::from_facets([[1, 2]]);
        let bs = boundary_matrices(&edge);
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].to_dense(), vec![vec![BigInt::from(1), BigInt::from(1)]]);
        assert_eq!(bs[1].to_dense(), vec![vec![BigInt::from(-1)], vec![BigInt::from(1)]]);
    }

    #[test]
    fn hollow_triangle_boundary_rank() {
        let bs = boundary_matrices(&corpus::hollow_triangle());
        assert_eq!((bs[1].rows(), bs[1].cols()), (3, 3));
        assert_eq!(rank_rational(&bs[1]), 2);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for c in corpus::random_corpus(11, 200, 7) {
            let bs = boundary_matrices(&c);
            for w in bs.windows(2) {
                assert!(w[0].mul(&w[1]).is_zero(), "{:?}", c.facet_labels());
            }
        }
    }

    #[test]
    fn empty_complex() {
        let h = reduced_homology(&SimplicialComplex::empty(), Coefficients::Integers);
        assert_eq!(h.top_dim(), -1);
        assert!(h.group(-1).unwrap().is_coefficient_ring());
        assert!(boundary_matrices(&SimplicialComplex::empty()).is_empty());
    }

    #[test]
    fn spheres() {
        for n in 1..=3 {
            let s = SimplicialComplex::simplex_boundary(n + 1);
            for coeff in [Coefficients::Integers, Coefficients::Rationals, Coefficients::Prime(2)] {
                let h = reduced_homology(&s, coeff);
                assert!(h.is_sphere_like(n as isize), "n={n} {coeff}");
            }
        }
    }

    #[test]
    fn projective_plane() {
        let rp2 = corpus::rp2_6();
        let h = reduced_homology(&rp2, Coefficients::Integers);
        assert!(h.is_trivial(0));
        assert_eq!(h.group(1).unwrap(), &HomologyGroup { rank: 0, torsion: z_mod(2) });
        assert!(h.is_trivial(2));
        assert_eq!(h.euler_characteristic(), rp2.euler_characteristic_reduced());

        let h2 = reduced_homology(&rp2, Coefficients::Prime(2));
        assert_eq!((h2.rank(0), h2.rank(1), h2.rank(2)), (0, 1, 1));
        let hq = reduced_homology(&rp2, Coefficients::Rationals);
        assert!(hq.is_acyclic());
    }

    #[test]
    fn cones_are_acyclic() {
        let cone = corpus::hollow_triangle().cone(4).unwrap();
        assert!(reduced_homology(&cone, Coefficients::Integers).is_acyclic());
    }

    #[test]
    fn euler_and_universal_coefficients_on_corpus() {
        for c in corpus::random_corpus(5, 300, 7) {
            let hz = reduced_homology(&c, Coefficients::Integers);
            assert_eq!(hz.euler_characteristic(), c.euler_characteristic_reduced());
            let hq = reduced_homology(&c, Coefficients::Rationals);
            for i in -1..=c.dim() {
                assert_eq!(hq.rank(i), hz.rank(i));
            }
            for p in [2u32, 3, 5] {
                let hp = reduced_homology(&c, Coefficients::Prime(p));
                let pb = BigInt::from(p);
                let divisible = |i: isize| {
                    hz.group(i)
                        .map_or(0, |g| g.torsion.iter().filter(|d| (*d % &pb).is_zero()).count())
                };
                for i in -1..=c.dim() {
                    assert_eq!(hp.rank(i), hz.rank(i) + divisible(i) + divisible(i - 1));
                }
            }
        }
    }

    #[test]
    fn serializes_profile() {
        let h = reduced_homology(&corpus::rp2_6(), Coefficients::Integers);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(
            json,
            r#"{"-1":{"rank":0,"torsion":[]},"0":{"rank":0,"torsion":[]},"1":{"rank":0,"torsion":[2]},"2":{"rank":0,"torsion":[]}}"#
        );
    }
}
