//! Weight filtrations of geometric lattices.
//!
//! Each ground element carries an exact rational weight and a flat weighs
//! the sum over its elements. For a threshold `t` the filtered poset keeps
//! the flats of weight above `t`, always leaving out the bottom flat.

mod flats;

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cm;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::polynomial::IntPolynomial;
use crate::posets::FinitePoset;
use crate::rational::{format_rational, Rational};
use crate::ternary::Ternary;

pub use flats::{
    lattice_of_flats, lattice_of_flats_from_points, lattice_of_flats_graphic, uniform_matroid,
    GeometricLatticeOfFlats, GraphicMatroid, LinearMatroid, Matroid, Point, PointConfiguration,
    UniformMatroid, MAX_GROUND_SET,
};

/// Which weight coincidences are rejected.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Genericity {
    /// Distinct nonempty flats have distinct weights.
    #[default]
    Strict,
    /// No flat strictly between bottom and top has weight exactly `t`.
    Threshold,
}

#[derive(Clone, Debug)]
pub struct WeightedFiltration {
    lattice: GeometricLatticeOfFlats,
    weights: Vec<Rational>,
    flat_weights: Vec<Rational>,
    threshold: Rational,
    genericity: Genericity,
}

impl WeightedFiltration {
    /// `weights` has one entry per ground element.
    pub fn new(
        lattice: GeometricLatticeOfFlats,
        weights: Vec<Rational>,
        threshold: Rational,
        genericity: Genericity,
    ) -> Result<Self> {
        if weights.len() != lattice.num_elements() {
            return Err(Error::InvalidInput(format!(
                "{} weights for {} elements",
                weights.len(),
                lattice.num_elements()
            )));
        }
        let flat_weights = flat_weights(&lattice, &weights);
        let filtration = Self {
            lattice,
            weights,
            flat_weights,
            threshold,
            genericity,
        };
        filtration.validate()?;
        Ok(filtration)
    }

    fn validate(&self) -> Result<()> {
        let collision = match self.genericity {
            Genericity::Strict => strict_collision(&self.lattice, &self.flat_weights),
            Genericity::Threshold => {
                let (bottom, top) = (self.lattice.bottom(), self.lattice.top());
                (0..self.flat_weights.len())
                    .find(|&i| i != bottom && i != top && self.flat_weights[i] == self.threshold)
                    .map(|i| (i, i))
            }
        };
        match collision {
            None => Ok(()),
            Some((a, b)) => {
                let second = if a == b {
                    format!("threshold {}", format_rational(&self.threshold))
                } else {
                    self.lattice.flat_label(b)
                };
                Err(Error::NonGeneric {
                    first: self.lattice.flat_label(a),
                    second,
                    weight: format_rational(&self.flat_weights[a]),
                })
            }
        }
    }

    pub fn lattice(&self) -> &GeometricLatticeOfFlats {
        &self.lattice
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn flat_weight(&self, flat: usize) -> &Rational {
        &self.flat_weights[flat]
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    pub fn genericity(&self) -> Genericity {
        self.genericity
    }

    pub fn with_threshold(&self, threshold: Rational) -> Result<Self> {
        Self::new(self.lattice.clone(), self.weights.clone(), threshold, self.genericity)
    }

    /// The same lattice with every weight negated.
    pub fn mirrored(&self) -> Result<Self> {
        Self::new(
            self.lattice.clone(),
            self.weights.iter().map(|w| -w).collect(),
            self.threshold.clone(),
            self.genericity,
        )
    }

    /// Flats of weight above the threshold, other than the bottom flat.
    pub fn retained(&self) -> Vec<usize> {
        (0..self.flat_weights.len())
            .filter(|&i| i != self.lattice.bottom() && self.flat_weights[i] > self.threshold)
            .collect()
    }

    pub fn filtered_poset(&self) -> FinitePoset {
        self.lattice.poset().induced(&self.retained().into_iter().collect())
    }

    /// `Σ μ(0̂, x) z^{r - ρ(x)}` over the filtered poset with a bottom adjoined
    /// and ranks taken from the whole lattice.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let retained = self.retained();
        let poset = self
            .filtered_poset()
            .with_bottom(Label::Name("bottom".into()))
            .expect("flat labels are braced");
        let bottom = retained.len();
        let r = self.lattice.rank();
        let mu = poset.mobius_from(bottom);
        let mut terms = vec![IntPolynomial::monomial(1, r)];
        for (i, &flat) in retained.iter().enumerate() {
            terms.push(IntPolynomial::monomial(BigInt::from(mu[i]), r - self.lattice.flat_rank(flat)));
        }
        terms.into_iter().sum()
    }

    /// Checks that the order complex of the filtered poset is Cohen-Macaulay
    /// over ℤ, has the dimension of the proper part of the lattice (one more
    /// when the top flat survives), and whether its links are simply connected.
    /// Needs `t <= min(0, ω(E))`.
    pub fn check_cohen_macaulay(&self) -> Result<FiltrationCheck> {
        let total = &self.flat_weights[self.lattice.top()];
        if self.threshold > Rational::zero() || &self.threshold > total {
            return Err(Error::ThresholdPrecondition {
                threshold: format_rational(&self.threshold),
                total: format_rational(total),
            });
        }
        let delta = self.filtered_poset().order_complex();
        let (cm_over_z, homotopy_status) = cm::integral_cm_and_homotopy(&delta);
        let top_kept = total > &self.threshold;
        let expected = self.lattice.rank() as isize - 2 + isize::from(top_kept);
        Ok(FiltrationCheck {
            cm_over_z,
            dimension: delta.dim(),
            expected_dimension: expected,
            dim_preserved: delta.dim() == expected,
            homotopy_status,
        })
    }

    /// Positive atoms joined when some rank-`k` flat of weight above the
    /// threshold contains both. Needs `1 < k < r`.
    pub fn positive_flat_graph(&self, k: usize) -> Result<PositiveFlatGraph> {
        let r = self.lattice.rank();
        if k <= 1 || k >= r {
            return Err(Error::RankOutOfRange { k, rank: r });
        }
        let vertices: Vec<usize> = self
            .lattice
            .atoms()
            .into_iter()
            .filter(|&a| self.flat_weights[a] > self.threshold)
            .collect();
        let flats = self.lattice.flats();
        let heavy: Vec<u64> = self
            .lattice
            .flats_of_rank(k)
            .into_iter()
            .filter(|&x| self.flat_weights[x] > self.threshold)
            .map(|x| flats[x])
            .collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let both = flats[vertices[i]] | flats[vertices[j]];
                if heavy.iter().any(|&x| both & !x == 0) {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        Ok(PositiveFlatGraph {
            k,
            labels: vertices.iter().map(|&a| self.lattice.flat_label(a)).collect(),
            vertices,
            adjacency,
        })
    }

    /// Shortest walk between two positive points along positive lines.
    pub fn safe_walk(&self, from: &str, to: &str) -> Result<Vec<String>> {
        let graph = self.positive_flat_graph(2)?;
        let (p, q) = (graph.vertex(from)?, graph.vertex(to)?);
        match graph.shortest_path(p, q) {
            Some(path) => Ok(path.into_iter().map(|v| graph.labels[v].clone()).collect()),
            None => Err(graph.violation(p)),
        }
    }

    /// Largest distance in the positive rank-`k` flat graph. A disconnected
    /// graph is reported as [`Error::TheoremViolation`].
    pub fn diameter(&self, k: usize) -> Result<usize> {
        self.positive_flat_graph(k)?.diameter()
    }
}

fn flat_weights(lattice: &GeometricLatticeOfFlats, weights: &[Rational]) -> Vec<Rational> {
    (0..lattice.flats().len())
        .map(|f| lattice.flat_elements(f).iter().map(|&e| &weights[e]).sum())
        .collect()
}

fn strict_collision(lattice: &GeometricLatticeOfFlats, flat_weights: &[Rational]) -> Option<(usize, usize)> {
    let mut seen: BTreeMap<&Rational, usize> = BTreeMap::new();
    for (i, w) in flat_weights.iter().enumerate() {
        if i == lattice.bottom() {
            continue;
        }
        if let Some(&j) = seen.get(w) {
            return Some((j, i));
        }
        seen.insert(w, i);
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationCheck {
    pub cm_over_z: bool,
    pub dimension: isize,
    pub expected_dimension: isize,
    pub dim_preserved: bool,
    pub homotopy_status: Ternary,
}

/// Graph on the positive atoms; `adjacency` indexes into `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveFlatGraph {
    pub k: usize,
    /// atom flats of the lattice
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
    pub adjacency: Vec<Vec<usize>>,
}

impl PositiveFlatGraph {
    /// Accepts either the element label `a` or the flat label `{a}`.
    fn vertex(&self, name: &str) -> Result<usize> {
        let braced = format!("{{{name}}}");
        self.labels
            .iter()
            .position(|l| l == name || *l == braced)
            .ok_or_else(|| Error::NotPositive(name.to_string()))
    }

    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs.iter().filter(|&&j| j > i) {
                out.push((self.labels[i].clone(), self.labels[j].clone()));
            }
        }
        out
    }

    fn distances(&self, from: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut dist = vec![None; self.vertices.len()];
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = dist[u].map(|d| d + 1);
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let (dist, parent) = self.distances(from);
        dist[to]?;
        let mut path = vec![to];
        while *path.last().expect("nonempty") != from {
            path.push(parent[*path.last().expect("nonempty")]);
        }
        path.reverse();
        Some(path)
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.vertices.len() {
            let (dist, _) = self.distances(v);
            for d in &dist {
                match d {
                    Some(d) => best = best.max(*d),
                    None => return Err(self.violation(v)),
                }
            }
        }
        Ok(best)
    }

    fn violation(&self, start: usize) -> Error {
        let (dist, _) = self.distances(start);
        let (component, rest): (Vec<_>, Vec<_>) =
            (0..self.vertices.len()).partition(|&v| dist[v].is_some());
        Error::TheoremViolation {
            component: component.into_iter().map(|v| self.labels[v].clone()).collect(),
            rest: rest.into_iter().map(|v| self.labels[v].clone()).collect(),
        }
    }
}

/// Random integer weights summing to zero under which distinct nonempty
/// flats have distinct weights. The sampling range doubles after repeated
/// rejections.
pub fn random_generic_weights<R: Rng + ?Sized>(lattice: &GeometricLatticeOfFlats, rng: &mut R) -> Vec<Rational> {
    let n = lattice.num_elements();
    let mut range = (n as i64).max(4);
    loop {
        for _ in 0..32 {
            let mut w: Vec<i64> = (0..n.saturating_sub(1)).map(|_| rng.gen_range(-range..=range)).collect();
            w.push(-w.iter().sum::<i64>());
            let weights: Vec<Rational> = w.into_iter().map(|x| Rational::from_integer(x.into())).collect();
            if strict_collision(lattice, &flat_weights(lattice, &weights)).is_none() {
                return weights;
            }
        }
        range *= 2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterStatistics {
    pub draws: usize,
    pub seed: u64,
    pub k: usize,
    pub max_diameter: usize,
    pub histogram: BTreeMap<usize, usize>,
}

/// Diameters of the positive rank-`k` flat graph over random generic
/// zero-sum weightings at threshold 0. Draw `i` uses its own ChaCha stream,
/// so results do not depend on scheduling.
pub fn diameter_experiment(
    lattice: &GeometricLatticeOfFlats,
    draws: usize,
    seed: u64,
    k: usize,
) -> Result<DiameterStatistics> {
    let diameters: Vec<usize> = (0..draws)
        .into_par_iter()
        .map(|i| {
            let weights = random_generic_weights(lattice, &mut draw_rng(seed, i));
            WeightedFiltration::new(lattice.clone(), weights, Rational::zero(), Genericity::Strict)?
                .diameter(k)
        })
        .collect::<Result<_>>()?;
    let mut histogram = BTreeMap::new();
    for &d in &diameters {
        *histogram.entry(d).or_insert(0) += 1;
    }
    Ok(DiameterStatistics {
        draws,
        seed,
        k,
        max_diameter: diameters.iter().copied().max().unwrap_or(0),
        histogram,
    })
}

/// The generator for draw `i` of a seeded experiment.
pub fn draw_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

/// Whether the coefficients of a polynomial in `z` of degree `r` alternate
/// weakly in sign: `(-1)^{r-k} c_k >= 0`.
pub fn alternates_in_sign(p: &IntPolynomial) -> bool {
    let Some(r) = p.degree() else {
        return true;
    };
    p.coefficients().iter().enumerate().all(|(k, c)| {
        if (r - k) % 2 == 0 {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn figure() -> GeometricLatticeOfFlats {
        let pts = [("a", 0, 0), ("b", 2, 0), ("c", 4, 0), ("d", 1, 3), ("e", 0, 4), ("f", 0, 6)];
        let config = PointConfiguration {
            points: pts
                .iter()
                .map(|&(l, x, y)| Point {
                    label: l.into(),
                    coords: vec![Rational::from_integer(x.into()), Rational::from_integer(y.into())],
                    weight: None,
                })
                .collect(),
            genericity: None,
        };
        lattice_of_flats_from_points(&config).unwrap()
    }

    fn figure_weights() -> Vec<Rational> {
        ["1", "-4", "2", "3", "-6", "4"].iter().map(|s| q(s)).collect()
    }

    fn labels(w: &WeightedFiltration) -> Vec<String> {
        w.retained().iter().map(|&f| w.lattice().flat_label(f)).collect()
    }

    #[test]
    fn figure_weights_are_not_strictly_generic() {
        let err = WeightedFiltration::new(figure(), figure_weights(), q("0"), Genericity::Strict).unwrap_err();
        assert!(matches!(err, Error::NonGeneric { .. }));
    }

    #[test]
    fn positive_and_negative_parts() {
        let plus = WeightedFiltration::new(figure(), figure_weights(), q("0"), Genericity::Threshold).unwrap();
        assert_eq!(labels(&plus), vec!["{a}", "{c}", "{d}", "{f}", "{a,d}", "{b,d,f}", "{c,f}"]);
        assert_eq!(plus.characteristic_polynomial().to_string(), "z^3 - 4z^2 + 3z");
        let minus = plus.mirrored().unwrap();
        assert_eq!(
            labels(&minus),
            vec!["{b}", "{e}", "{a,b,c}", "{a,e,f}", "{b,e}", "{c,d,e}"]
        );
        assert_eq!(minus.characteristic_polynomial().to_string(), "z^3 - 2z^2 + z");

        let everything = plus.with_threshold(q("-100")).unwrap();
        assert_eq!(everything.retained().len(), figure().flats().len() - 1);
        assert_eq!(
            everything.characteristic_polynomial(),
            figure().lattice().characteristic_polynomial().unwrap()
        );
    }

    #[test]
    fn walks() {
        let plus = WeightedFiltration::new(figure(), figure_weights(), q("0"), Genericity::Threshold).unwrap();
        let g = plus.positive_flat_graph(2).unwrap();
        assert_eq!(
            g.edges(),
            vec![
                ("{a}".to_string(), "{d}".to_string()),
                ("{c}".to_string(), "{f}".to_string()),
                ("{d}".to_string(), "{f}".to_string())
            ]
        );
        assert_eq!(plus.safe_walk("a", "c").unwrap(), vec!["{a}", "{d}", "{f}", "{c}"]);
        assert_eq!(plus.safe_walk("d", "d").unwrap(), vec!["{d}"]);
        assert_eq!(plus.diameter(2).unwrap(), 3);
        assert!(matches!(plus.safe_walk("a", "b"), Err(Error::NotPositive(_))));
        assert!(matches!(plus.diameter(3), Err(Error::RankOutOfRange { k: 3, rank: 3 })));
    }

    #[test]
    fn cohen_macaulay_check() {
        let plus = WeightedFiltration::new(figure(), figure_weights(), q("0"), Genericity::Threshold).unwrap();
        let check = plus.check_cohen_macaulay().unwrap();
        assert!(check.cm_over_z && check.dim_preserved);
        assert_eq!(check.dimension, 1);
        assert_eq!(check.homotopy_status, Ternary::True);
        assert!(matches!(
            plus.with_threshold(q("1/2")).unwrap().check_cohen_macaulay(),
            Err(Error::ThresholdPrecondition { .. })
        ));
        // rank one: only the top flat, which the zero threshold removes
        let u12 = uniform_matroid(2, 1).unwrap();
        let w = WeightedFiltration::new(u12, vec![q("1"), q("-1")], q("0"), Genericity::Strict).unwrap();
        let check = w.check_cohen_macaulay().unwrap();
        assert_eq!((check.dimension, check.expected_dimension), (-1, -1));
        assert!(check.cm_over_z);
    }

    #[test]
    fn random_weights_are_generic_and_reproducible() {
        let k4 = lattice_of_flats(&GraphicMatroid::complete(4)).unwrap();
        let a = random_generic_weights(&k4, &mut draw_rng(7, 3));
        let b = random_generic_weights(&k4, &mut draw_rng(7, 3));
        assert_eq!(a, b);
        assert!(a.iter().sum::<Rational>().is_zero());
        WeightedFiltration::new(k4.clone(), a, q("0"), Genericity::Strict).unwrap();
        let stats = diameter_experiment(&k4, 20, 1, 2).unwrap();
        assert_eq!(stats, diameter_experiment(&k4, 20, 1, 2).unwrap());
        assert_eq!(stats.histogram.values().sum::<usize>(), 20);
    }

    #[test]
    fn sign_alternation() {
        assert!(alternates_in_sign(&IntPolynomial::new([0, 3, -4, 1])));
        assert!(!alternates_in_sign(&IntPolynomial::new([0, -3, -4, 1])));
    }
}
