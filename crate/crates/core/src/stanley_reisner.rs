//! The Stanley-Reisner ring side: minimal nonfaces, graded Betti numbers by
//! Hochster's formula, and the depth and type read off the Betti table.
//!
//! `β_{i,j}(k[Δ]) = Σ_{|E| = j} dim_k H̃_{j-i-1}(Δ|_E; k)`, summed over all
//! vertex subsets `E`. No free resolution is ever built.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{homology_of_faces, reduced_homology, Coefficients};
use crate::label::Label;
use crate::polynomial::IntPolynomial;

pub const DEFAULT_VERTEX_CAP: usize = 20;

/// Subsets are enumerated as machine words, which bounds any cap.
const HARD_VERTEX_CAP: usize = 40;

/// Generators of the Stanley-Reisner ideal, one squarefree monomial per
/// minimal nonface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    vertices: Vec<Label>,
    generators: Vec<Face>,
}

impl MonomialIdeal {
    /// Supports as vertex positions, in lexicographic order.
    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn generator_labels(&self) -> Vec<Vec<Label>> {
        self.generators
            .iter()
            .map(|g| g.iter().map(|v| self.vertices[v].clone()).collect())
            .collect()
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MonomialIdeal", 1)?;
        s.serialize_field("generators", &self.generator_labels())?;
        s.end()
    }
}

/// Inclusion-minimal sets of vertices that are not faces.
pub fn minimal_nonfaces(complex: &SimplicialComplex) -> MonomialIdeal {
    let levels = complex.all_faces();
    let faces: HashSet<&Face> = levels.iter().flatten().collect();
    let n = complex.num_vertices();
    let mut generators = Vec::new();
    // a minimal nonface S is F + v with F = S \ max(S) a face
    for face in levels.iter().flatten() {
        let start = face.last().map_or(0, |m| m + 1);
        for v in start..n {
            let mut candidate = face.clone();
            candidate.insert(v);
            if faces.contains(&candidate) {
                continue;
            }
            let minimal = candidate.iter().all(|u| {
                let mut sub = candidate.clone();
                sub.remove(u);
                faces.contains(&sub)
            });
            if minimal {
                generators.push(candidate);
            }
        }
    }
    generators.sort();
    MonomialIdeal {
        vertices: complex.vertices().to_vec(),
        generators,
    }
}

/// Graded Betti numbers `β_{i,j}` of `k[Δ]` over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: Coefficients,
    n: usize,
    d: usize,
    /// `betti[i][j]`
    betti: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn field(&self) -> Coefficients {
        self.field
    }

    /// Number of variables.
    pub fn num_variables(&self) -> usize {
        self.n
    }

    /// Krull dimension `d = dim Δ + 1`.
    pub fn krull_dimension(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.betti.get(i).and_then(|row| row.get(j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(i, j, β_{i,j})` ordered by `i` then `j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.betti.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|&(_, &b)| b > 0)
                .map(move |(j, &b)| (i, j, b))
        })
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries().map(|(i, _, _)| i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.n - self.projective_dimension()
    }

    /// Rank of the last module in the minimal resolution.
    pub fn cm_type(&self) -> u64 {
        let pd = self.projective_dimension();
        self.betti[pd].iter().sum()
    }

    pub fn depth_type(&self) -> DepthType {
        DepthType {
            depth: self.depth(),
            projective_dimension: self.projective_dimension(),
            cm_type: self.cm_type(),
            krull_dimension: self.d,
        }
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the numerator of the Hilbert series over `(1-t)^n`.
    pub fn k_polynomial(&self) -> IntPolynomial {
        self.entries()
            .map(|(i, j, b)| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                IntPolynomial::monomial(sign * i64::try_from(b).expect("Betti number fits in i64"), j)
            })
            .sum()
    }

    /// Macaulay-style grid: rows indexed by `j - i`, columns by `i`, with a
    /// `total:` row and `.` for zero.
    pub fn macaulay_grid(&self) -> String {
        let pd = self.projective_dimension();
        let top_row = self.entries().map(|(i, j, _)| j - i).max().unwrap_or(0);
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let totals: Vec<u64> = (0..=pd).map(|i| self.betti[i].iter().sum()).collect();
        let mut rows: Vec<(String, Vec<String>)> = vec![(
            "".into(),
            (0..=pd).map(|i| i.to_string()).collect(),
        )];
        rows.push(("total:".into(), totals.iter().map(|&t| t.to_string()).collect()));
        for r in 0..=top_row {
            rows.push((
                format!("{r}:"),
                (0..=pd).map(|i| cell(self.get(i, i + r))).collect(),
            ));
        }
        let head = rows.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
        let width: Vec<usize> = (0..=pd)
            .map(|c| rows.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (h, cells) in rows {
            let _ = write!(out, "{h:>head$}");
            for (c, w) in cells.iter().zip(&width) {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            beta: u64,
        }
        let entries: Vec<Entry> = self.entries().map(|(i, j, beta)| Entry { i, j, beta }).collect();
        let mut s = serializer.serialize_struct("BettiTable", 7)?;
        s.serialize_field("field", &self.field)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("d", &self.d)?;
        s.serialize_field("pd", &self.projective_dimension())?;
        s.serialize_field("depth", &self.depth())?;
        s.serialize_field("type", &self.cm_type())?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthType {
    pub depth: usize,
    #[serde(rename = "pd")]
    pub projective_dimension: usize,
    #[serde(rename = "type")]
    pub cm_type: u64,
    #[serde(rename = "d")]
    pub krull_dimension: usize,
}

pub fn hochster_betti(complex: &SimplicialComplex, field: Coefficients) -> Result<BettiTable> {
    hochster_betti_with_cap(complex, field, DEFAULT_VERTEX_CAP)
}

pub fn hochster_betti_with_cap(
    complex: &SimplicialComplex,
    field: Coefficients,
    cap: usize,
) -> Result<BettiTable> {
    if !field.is_field() {
        return Err(Error::FieldRequired);
    }
    let n = complex.num_vertices();
    let cap = cap.min(HARD_VERTEX_CAP);
    if n > cap {
        return Err(Error::VertexCap { vertices: n, cap });
    }
    let levels = complex.all_faces();
    let words: Vec<Vec<u64>> = levels
        .iter()
        .map(|level| level.iter().map(Face::low_word).collect())
        .collect();
    let facets: Vec<u64> = complex.facets().iter().map(Face::low_word).collect();
    let empty = || vec![vec![0u64; n + 1]; n + 1];

    let betti = (0u64..1 << n)
        .into_par_iter()
        .fold(empty, |mut table, mask| {
            let j = mask.count_ones() as usize;
            // faces induce a simplex: only the empty set has homology
            if facets.iter().any(|&f| mask & !f == 0) {
                if mask == 0 {
                    table[0][0] += 1;
                }
                return table;
            }
            let mut restricted: Vec<Vec<Face>> = levels
                .iter()
                .zip(&words)
                .map(|(level, ws)| {
                    level
                        .iter()
                        .zip(ws)
                        .filter(|&(_, &w)| w & !mask == 0)
                        .map(|(f, _)| f.clone())
                        .collect()
                })
                .collect();
            while restricted.last().is_some_and(Vec::is_empty) {
                restricted.pop();
            }
            let h = homology_of_faces(&restricted, field);
            for (k, g) in h.groups() {
                if g.rank > 0 {
                    // k = j - i - 1
                    let i = (j as isize - k - 1) as usize;
                    table[i][j] += g.rank as u64;
                }
            }
            table
        })
        .reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        });

    Ok(BettiTable {
        field,
        n,
        d: (complex.dim() + 1) as usize,
        betti,
    })
}

pub fn depth_type(complex: &SimplicialComplex, field: Coefficients) -> Result<DepthType> {
    Ok(hochster_betti(complex, field)?.depth_type())
}

/// Depth equals Krull dimension.
pub fn is_cm_algebraic(complex: &SimplicialComplex, field: Coefficients) -> Result<bool> {
    let t = depth_type(complex, field)?;
    Ok(t.depth == t.krull_dimension)
}

/// Cohen-Macaulay of type 1.
pub fn is_gorenstein_algebraic(complex: &SimplicialComplex, field: Coefficients) -> Result<bool> {
    let t = depth_type(complex, field)?;
    Ok(t.depth == t.krull_dimension && t.cm_type == 1)
}

/// Gorenstein and not acyclic over the field.
pub fn is_gorenstein_star_algebraic(complex: &SimplicialComplex, field: Coefficients) -> Result<bool> {
    Ok(is_gorenstein_algebraic(complex, field)?
        && !reduced_homology(complex, field).is_acyclic())
}

/// Hilbert series numerator from the f-vector alone:
/// `Σ_i f_{i-1} t^i (1-t)^{n-i}`.
pub fn hilbert_numerator(complex: &SimplicialComplex) -> IntPolynomial {
    let n = complex.num_vertices();
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            let f = i64::try_from(f).expect("face count fits in i64");
            &IntPolynomial::monomial(f, i) * &IntPolynomial::binomial_power(1, -1, n - i)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm;
    use crate::corpus;

    const FIELDS: [Coefficients; 3] = [
        Coefficients::Rationals,
        Coefficients::Prime(2),
        Coefficients::Prime(3),
    ];

    fn labels(gens: Vec<Vec<Label>>) -> Vec<Vec<i64>> {
        gens.into_iter()
            .map(|g| {
                g.into_iter()
                    .map(|l| match l {
                        Label::Int(i) => i,
                        Label::Name(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn nonfaces() {
        let points = SimplicialComplex::from_facets([[1], [2]]);
        assert_eq!(labels(minimal_nonfaces(&points).generator_labels()), vec![vec![1, 2]]);
        assert_eq!(
            labels(minimal_nonfaces(&corpus::hollow_triangle()).generator_labels()),
            vec![vec![1, 2, 3]]
        );
        assert_eq!(
            labels(minimal_nonfaces(&corpus::cycle(4)).generator_labels()),
            vec![vec![1, 3], vec![2, 4]]
        );
        assert!(minimal_nonfaces(&SimplicialComplex::simplex(3)).generators().is_empty());
    }

    #[test]
    fn small_tables() {
        let points = SimplicialComplex::from_facets([[1], [2]]);
        let t = hochster_betti(&points, Coefficients::Rationals).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 1)]);
        assert_eq!(t.depth_type(), DepthType { depth: 1, projective_dimension: 1, cm_type: 1, krull_dimension: 1 });

        let t = hochster_betti(&corpus::hollow_triangle(), Coefficients::Rationals).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 3, 1)]);
        assert_eq!((t.depth(), t.krull_dimension(), t.cm_type()), (2, 2, 1));

        // complete intersection (x1 x3, x2 x4): Koszul complex 1, 2 t^2, t^4
        let t = hochster_betti(&corpus::cycle(4), Coefficients::Rationals).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
        assert!(is_gorenstein_star_algebraic(&corpus::cycle(4), Coefficients::Rationals).unwrap());

        let t = hochster_betti(&SimplicialComplex::simplex(3), Coefficients::Rationals).unwrap();
        assert_eq!(t.depth_type(), DepthType { depth: 3, projective_dimension: 0, cm_type: 1, krull_dimension: 3 });
    }

    #[test]
    fn projective_plane() {
        let rp2 = corpus::rp2_6();
        assert!(is_cm_algebraic(&rp2, Coefficients::Rationals).unwrap());
        assert!(!is_cm_algebraic(&rp2, Coefficients::Prime(2)).unwrap());
        assert!(!is_gorenstein_star_algebraic(&rp2, Coefficients::Rationals).unwrap());
        let cone = corpus::cycle(4).cone("apex").unwrap();
        assert!(is_gorenstein_algebraic(&cone, Coefficients::Rationals).unwrap());
        assert!(!is_gorenstein_star_algebraic(&cone, Coefficients::Rationals).unwrap());
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            hochster_betti(&corpus::cycle(4), Coefficients::Integers),
            Err(Error::FieldRequired)
        );
        assert_eq!(
            hochster_betti_with_cap(&corpus::cycle(5), Coefficients::Rationals, 4),
            Err(Error::VertexCap { vertices: 5, cap: 4 })
        );
    }

    #[test]
    fn grid() {
        let t = hochster_betti(&corpus::cycle(4), Coefficients::Rationals).unwrap();
        assert_eq!(
            t.macaulay_grid(),
            "       0 1 2\n\
             total: 1 2 1\n    \
             0: 1 . .\n    \
             1: . 2 .\n    \
             2: . . 1\n"
        );
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"field":"q","n":4,"d":2,"pd":2,"depth":2,"type":1,"entries":[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":2},{"i":2,"j":4,"beta":1}]}"#
        );
    }

    #[test]
    fn empty_complex() {
        let t = hochster_betti(&SimplicialComplex::empty(), Coefficients::Rationals).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        assert!(is_gorenstein_star_algebraic(&SimplicialComplex::empty(), Coefficients::Rationals).unwrap());
    }

    #[test]
    fn agrees_with_topology_on_corpus() {
        for c in corpus::random_corpus(17, 250, 6) {
            let n = c.num_vertices();
            let d = (c.dim() + 1) as usize;
            for k in FIELDS {
                let t = hochster_betti(&c, k).unwrap();
                let pd = t.projective_dimension();
                assert!(n - d <= pd && pd <= n);
                assert!(t.depth() <= d);
                assert_eq!(t.get(0, 0), 1);
                for (i, j, _) in t.entries() {
                    assert!(i <= j && j <= n);
                    assert!(j as isize - i as isize - 1 <= c.dim());
                }
                assert_eq!(t.k_polynomial(), hilbert_numerator(&c));
                let cm = t.depth() == d;
                assert_eq!(cm, cm::is_cm(&c, k));
                assert_eq!(
                    is_gorenstein_star_algebraic(&c, k).unwrap(),
                    cm::is_gorenstein_star(&c, k)
                );
                assert_eq!(is_gorenstein_algebraic(&c, k).unwrap(), cm::is_gorenstein(&c, k));
            }
        }
    }

    #[test]
    fn label_invariance() {
        for c in corpus::random_corpus(3, 40, 6) {
            let shifted = c.relabel(|l| Label::Name(format!("v{l}"))).unwrap();
            assert_eq!(
                hochster_betti(&c, Coefficients::Rationals).unwrap(),
                hochster_betti(&shifted, Coefficients::Rationals).unwrap()
            );
        }
    }
}
