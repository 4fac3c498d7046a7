//! Cohen-Macaulay and Gorenstein* tests via link homology.
//!
//! Every check here reduces to the reduced homology of links. Links that are
//! equal up to an order-preserving relabelling share one homology computation,
//! and distinct links are processed in parallel.

mod report;
mod shelling;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex};
use crate::homology::{
    fundamental_group_status_with, reduced_homology, Coefficients, GroupStatus, HomologyProfile,
    TietzeBudget,
};
use crate::ternary::Ternary;

pub use report::{classify, classify_with, ClassificationReport, ClassifyOptions, HIERARCHY_LABELS};
pub use shelling::{find_shelling, is_shellable, ShellingSearch, DEFAULT_SHELLING_BUDGET};

/// The distinct links of a complex, one per nonfacet face.
pub(crate) struct LinkTable {
    distinct: Vec<SimplicialComplex>,
}

impl LinkTable {
    pub(crate) fn new(complex: &SimplicialComplex) -> Self {
        let facets: BTreeSet<&Face> = complex.facets().iter().collect();
        let mut index: HashMap<Vec<Face>, usize> = HashMap::new();
        let mut distinct = Vec::new();
        // links of facets are {∅}, which passes every test here
        for level in complex.all_faces().into_iter().rev() {
            for face in level {
                if facets.contains(&face) {
                    continue;
                }
                let link = complex.link(&face).expect("face of the complex");
                let key = link.facets().to_vec();
                index.entry(key).or_insert_with(|| {
                    distinct.push(link);
                    distinct.len() - 1
                });
            }
        }
        Self { distinct }
    }

    pub(crate) fn survey(&self, coefficients: Coefficients) -> LinkSurvey<'_> {
        let profiles = self
            .distinct
            .par_iter()
            .map(|link| reduced_homology(link, coefficients))
            .collect();
        LinkSurvey {
            table: self,
            profiles,
        }
    }
}

/// Link homology over one coefficient ring.
pub(crate) struct LinkSurvey<'a> {
    table: &'a LinkTable,
    profiles: Vec<HomologyProfile>,
}

impl LinkSurvey<'_> {
    fn links(&self) -> impl Iterator<Item = (&SimplicialComplex, &HomologyProfile)> {
        self.table.distinct.iter().zip(&self.profiles)
    }

    pub(crate) fn is_cm(&self) -> bool {
        self.links().all(|(link, h)| h.vanishes_below(link.dim()))
    }

    pub(crate) fn is_gorenstein_star(&self) -> bool {
        self.links().all(|(link, h)| h.is_sphere_like(link.dim()))
    }

    /// Primes dividing some torsion coefficient of some link.
    pub(crate) fn torsion_primes(&self) -> BTreeSet<u64> {
        let mut primes = BTreeSet::new();
        for h in &self.profiles {
            for (_, g) in h.groups() {
                for d in &g.torsion {
                    prime_factors(d, &mut primes);
                }
            }
        }
        primes
    }
}

fn prime_factors(n: &BigInt, out: &mut BTreeSet<u64>) {
    let mut n = n.abs();
    let mut d = 2u64;
    while n > BigInt::one() {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            out.insert(n.to_u64().expect("torsion prime fits in u64"));
            return;
        }
        if n.is_multiple_of(&bd) {
            out.insert(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 1;
    }
}

/// Reisner's criterion: `H̃_i(link F) = 0` for all faces `F` and `i < dim link F`.
pub fn is_cm(complex: &SimplicialComplex, coefficients: Coefficients) -> bool {
    LinkTable::new(complex).survey(coefficients).is_cm()
}

/// Every link has the homology of a sphere of its own dimension.
pub fn is_gorenstein_star(complex: &SimplicialComplex, coefficients: Coefficients) -> bool {
    LinkTable::new(complex).survey(coefficients).is_gorenstein_star()
}

/// Cohen-Macaulay and thin, plus `χ̃ = (-1)^dim` away from characteristic 2.
pub fn is_gorenstein_star_v2(complex: &SimplicialComplex, coefficients: Coefficients) -> bool {
    structural_gorenstein_star(complex, coefficients, || is_cm(complex, coefficients))
}

fn structural_gorenstein_star(
    complex: &SimplicialComplex,
    coefficients: Coefficients,
    cm: impl FnOnce() -> bool,
) -> bool {
    if !complex.is_thin().unwrap_or(false) {
        return false;
    }
    let needs_euler = !matches!(coefficients, Coefficients::Integers | Coefficients::Prime(2));
    if needs_euler && !euler_condition(complex) {
        return false;
    }
    cm()
}

/// `χ̃(Δ) = (-1)^dim Δ`.
pub fn euler_condition(complex: &SimplicialComplex) -> bool {
    let sign = if complex.dim().rem_euclid(2) == 0 { 1 } else { -1 };
    complex.euler_characteristic_reduced() == sign
}

/// Removes the cone points: returns the subcomplex induced on the vertices
/// missing from some facet, and how many vertices were dropped.
pub fn gorenstein_core(complex: &SimplicialComplex) -> (SimplicialComplex, usize) {
    let facets = complex.facets();
    let apexes = facets[1..]
        .iter()
        .fold(facets[0].clone(), |acc, f| acc.intersection(f));
    let rest = Face::full(complex.num_vertices()).difference(&apexes);
    let core = complex.induced(&rest).expect("subset of the vertices");
    (core, apexes.len())
}

/// A multiple cone over a Gorenstein* complex, or a simplex.
pub fn is_gorenstein(complex: &SimplicialComplex, coefficients: Coefficients) -> bool {
    let (core, _) = gorenstein_core(complex);
    core.dim() < 0 || is_gorenstein_star(&core, coefficients)
}

/// Cohen-Macaulay over ℤ with simply connected links in dimension at least 2.
pub fn is_homotopy_cm(complex: &SimplicialComplex) -> Ternary {
    is_homotopy_cm_with(complex, TietzeBudget::default())
}

pub fn is_homotopy_cm_with(complex: &SimplicialComplex, budget: TietzeBudget) -> Ternary {
    let table = LinkTable::new(complex);
    homotopy_cm_from(&table, &table.survey(Coefficients::Integers), budget)
}

fn homotopy_cm_from(table: &LinkTable, integral: &LinkSurvey<'_>, budget: TietzeBudget) -> Ternary {
    if !integral.is_cm() {
        return Ternary::False;
    }
    // integral CM makes every link of dimension >= 1 connected
    let statuses: Vec<Ternary> = table
        .distinct
        .par_iter()
        .filter(|link| link.dim() >= 2)
        .map(|link| match fundamental_group_status_with(link, budget) {
            Ok(GroupStatus::Trivial) => Ternary::True,
            Ok(GroupStatus::Nontrivial) => Ternary::False,
            Ok(GroupStatus::Unknown) | Err(_) => Ternary::Unknown,
        })
        .collect();
    Ternary::all(statuses)
}

/// Cohen-Macaulayness over ℤ and homotopy Cohen-Macaulayness from one
/// pass over the links.
pub(crate) fn integral_cm_and_homotopy(complex: &SimplicialComplex) -> (bool, Ternary) {
    let table = LinkTable::new(complex);
    let integral = table.survey(Coefficients::Integers);
    let homotopy = homotopy_cm_from(&table, &integral, TietzeBudget::default());
    (integral.is_cm(), homotopy)
}

/// Homotopy Cohen-Macaulay and thin.
pub fn is_homotopy_gorenstein_star(complex: &SimplicialComplex) -> Ternary {
    let thin = complex.is_thin().unwrap_or(false);
    if !thin {
        return Ternary::False;
    }
    is_homotopy_cm(complex)
}
