use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::shelling::{find_shelling, DEFAULT_SHELLING_BUDGET};
use super::{euler_condition, homotopy_cm_from, structural_gorenstein_star, LinkTable};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{Coefficients, TietzeBudget};
use crate::label::Label;
use crate::ternary::Ternary;

/// Labels of the near-sphere hierarchy, strongest first.
///
/// - a: thin and shellable
/// - b: PL sphere (never decided)
/// - c: homotopy Gorenstein*
/// - d: homeomorphic to a sphere (never decided)
/// - e: Gorenstein* over ℤ
/// - f: Gorenstein* over some field
/// - g: pseudomanifold with `χ̃ = (-1)^dim`
/// - h: thin
pub const HIERARCHY_LABELS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub fields: Vec<Coefficients>,
    pub shelling_budget: u64,
    pub tietze: TietzeBudget,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            fields: vec![Coefficients::Rationals, Coefficients::Prime(2)],
            shelling_budget: DEFAULT_SHELLING_BUDGET,
            tietze: TietzeBudget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub dimension: isize,
    pub pure: bool,
    pub cm_over: BTreeMap<Coefficients, bool>,
    pub gorenstein_star_over: BTreeMap<Coefficients, bool>,
    pub homotopy_cm: Ternary,
    pub homotopy_gorenstein_star: Ternary,
    pub thin: bool,
    pub pseudomanifold: bool,
    pub euler_condition: bool,
    /// Pure shellability; `false` for nonpure input.
    pub shellable: Ternary,
    pub shelling_order: Option<Vec<Vec<Label>>>,
    pub hierarchy: BTreeMap<&'static str, Ternary>,
}

pub fn classify(complex: &SimplicialComplex, fields: &[Coefficients]) -> Result<ClassificationReport> {
    classify_with(
        complex,
        &ClassifyOptions {
            fields: fields.to_vec(),
            ..ClassifyOptions::default()
        },
    )
}

/// Fills every entry of the report, then checks the implications between
/// them. A failed check means two independent computations disagree and is
/// reported as [`Error::OracleDisagreement`].
pub fn classify_with(complex: &SimplicialComplex, options: &ClassifyOptions) -> Result<ClassificationReport> {
    let table = LinkTable::new(complex);
    let integral = table.survey(Coefficients::Integers);
    let pure = complex.is_pure();
    let thin = pure && complex.is_thin()?;
    let pseudomanifold = thin && complex.is_dually_connected();
    let euler = euler_condition(complex);

    // Gorenstein* over some field: ℚ covers every characteristic not
    // dividing link torsion, the remaining primes are checked directly.
    let mut rings: BTreeSet<Coefficients> = options.fields.iter().copied().collect();
    rings.insert(Coefficients::Integers);
    rings.insert(Coefficients::Rationals);
    for p in integral.torsion_primes() {
        if let Ok(k) = Coefficients::prime(p) {
            rings.insert(k);
        }
    }
    let mut cm = BTreeMap::new();
    let mut gor = BTreeMap::new();
    for &k in &rings {
        let (c, a) = if k == Coefficients::Integers {
            (integral.is_cm(), integral.is_gorenstein_star())
        } else {
            let survey = table.survey(k);
            (survey.is_cm(), survey.is_gorenstein_star())
        };
        let b = structural_gorenstein_star(complex, k, || c);
        if a != b {
            return Err(Error::OracleDisagreement(format!(
                "Gorenstein* over {k}: link homology says {a}, structure says {b}"
            )));
        }
        cm.insert(k, c);
        gor.insert(k, a);
    }

    let homotopy_cm = homotopy_cm_from(&table, &integral, options.tietze);
    let homotopy_gor = if thin { homotopy_cm } else { Ternary::False };
    let (shellable, shelling_order) = if pure {
        let found = find_shelling(complex, options.shelling_budget)?;
        let order = found
            .order
            .map(|o| o.iter().map(|&f| complex.face_labels(&complex.facets()[f])).collect());
        (found.verdict, order)
    } else {
        (Ternary::False, None)
    };

    let some_field = gor.iter().any(|(k, &g)| k.is_field() && g);
    let hierarchy = BTreeMap::from([
        ("a", Ternary::from(thin).and(shellable)),
        ("b", Ternary::Unknown),
        ("c", homotopy_gor),
        ("d", Ternary::Unknown),
        ("e", Ternary::from(gor[&Coefficients::Integers])),
        ("f", Ternary::from(some_field)),
        ("g", Ternary::from(pseudomanifold && euler)),
        ("h", Ternary::from(thin)),
    ]);

    let report = ClassificationReport {
        dimension: complex.dim(),
        pure,
        cm_over: options.fields.iter().map(|k| (*k, cm[k])).collect(),
        gorenstein_star_over: options.fields.iter().map(|k| (*k, gor[k])).collect(),
        homotopy_cm,
        homotopy_gorenstein_star: homotopy_gor,
        thin,
        pseudomanifold,
        euler_condition: euler,
        shellable,
        shelling_order,
        hierarchy,
    };
    check_consistency(complex, &report, &cm, &gor, &integral.torsion_primes())?;
    Ok(report)
}

fn check_consistency(
    complex: &SimplicialComplex,
    report: &ClassificationReport,
    cm: &BTreeMap<Coefficients, bool>,
    gor: &BTreeMap<Coefficients, bool>,
    torsion_primes: &BTreeSet<u64>,
) -> Result<()> {
    let disagree = |what: String| Err(Error::OracleDisagreement(what));
    let chain: Vec<(&str, Ternary)> = report
        .hierarchy
        .iter()
        .filter(|(label, _)| !matches!(**label, "b" | "d"))
        .map(|(l, v)| (*l, *v))
        .collect();
    for (i, &(strong, s)) in chain.iter().enumerate() {
        for &(weak, w) in &chain[i + 1..] {
            if s == Ternary::True && w == Ternary::False {
                return disagree(format!("hierarchy: ({strong}) holds but ({weak}) fails"));
            }
        }
    }
    for (k, &g) in gor {
        if g && !(cm[k] && report.pseudomanifold) {
            return disagree(format!("Gorenstein* over {k} without Cohen-Macaulay pseudomanifold"));
        }
    }
    if report.homotopy_cm == Ternary::True && !cm[&Coefficients::Integers] {
        return disagree("homotopy Cohen-Macaulay but not Cohen-Macaulay over Z".into());
    }
    if report.shellable == Ternary::True && !cm[&Coefficients::Integers] {
        return disagree("shellable but not Cohen-Macaulay over Z".into());
    }
    if report.pure && cm[&Coefficients::Integers] && !complex.is_dually_connected() {
        return disagree("Cohen-Macaulay but not dually connected".into());
    }
    for (k, &c) in cm {
        let p = k.characteristic();
        let q = cm[&Coefficients::Rationals];
        if (p == 0 || !torsion_primes.contains(&u64::from(p))) && *k != Coefficients::Integers && c != q {
            return disagree(format!("Cohen-Macaulay over {k} differs from Q without torsion"));
        }
        if *k == Coefficients::Integers && c && !cm.values().all(|&x| x) {
            return disagree("Cohen-Macaulay over Z but not over some field".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn hierarchy(report: &ClassificationReport) -> String {
        report
            .hierarchy
            .values()
            .map(|v| match v {
                Ternary::True => 'T',
                Ternary::False => 'F',
                Ternary::Unknown => '?',
            })
            .collect()
    }

    #[test]
    fn tetrahedron_boundary() {
        let s = SimplicialComplex::simplex_boundary(3);
        let r = classify(&s, &[Coefficients::Rationals, Coefficients::Prime(2)]).unwrap();
        assert_eq!(hierarchy(&r), "T?T?TTTT");
        assert!(r.cm_over.values().all(|&x| x));
        assert_eq!(r.shelling_order.as_ref().map(Vec::len), Some(4));
    }

    #[test]
    fn projective_plane() {
        let r = classify(
            &corpus::rp2_6(),
            &[Coefficients::Rationals, Coefficients::Prime(2), Coefficients::Integers],
        )
        .unwrap();
        assert_eq!(hierarchy(&r), "F?F?FFFT");
        assert!(r.cm_over[&Coefficients::Rationals]);
        assert!(!r.cm_over[&Coefficients::Prime(2)]);
        assert!(!r.gorenstein_star_over[&Coefficients::Rationals]);
        assert!(r.thin && r.pseudomanifold && !r.euler_condition);
        assert_eq!(r.shellable, Ternary::False);
    }

    #[test]
    fn solid_triangle() {
        let r = classify(&SimplicialComplex::simplex(3), &[Coefficients::Integers]).unwrap();
        assert!(!r.thin);
        assert!(r.cm_over[&Coefficients::Integers]);
        assert!(!r.gorenstein_star_over[&Coefficients::Integers]);
        assert_eq!(hierarchy(&r), "F?F?FFFF");
        assert_eq!(r.shellable, Ternary::True);
    }

    #[test]
    fn nonpure_input() {
        let c = SimplicialComplex::from_facets(vec![vec![1, 2, 3], vec![3, 4]]);
        let r = classify(&c, &[Coefficients::Rationals]).unwrap();
        assert!(!r.pure && !r.thin);
        assert_eq!(r.shellable, Ternary::False);
        assert_eq!(hierarchy(&r), "F?F?FFFF");
    }

    #[test]
    fn report_json_shape() {
        let r = classify(&corpus::cycle(4), &[Coefficients::Rationals, Coefficients::Prime(3)]).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["cm_over"]["q"], true);
        assert_eq!(v["gorenstein_star_over"]["f3"], true);
        assert_eq!(v["hierarchy"]["b"], "unknown");
        assert_eq!(v["homotopy_cm"], "true");
    }

    #[test]
    fn corpus_is_consistent() {
        let fields = [Coefficients::Integers, Coefficients::Rationals, Coefficients::Prime(2), Coefficients::Prime(3)];
        for c in corpus::random_corpus(13, 300, 7) {
            classify(&c, &fields).unwrap();
        }
    }
}
