use num_bigint::BigInt;

use super::FinitePoset;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;

/// A poset in which every pair has a join and a meet, with both tables
/// precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeStructure {
    poset: FinitePoset,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl LatticeStructure {
    pub fn new(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::NotALattice("empty poset".into()));
        }
        let least = |candidates: &BitSet, up: bool| -> Option<usize> {
            // the element of `candidates` comparable to all the others from the right side
            candidates.iter().find(|&z| {
                let reach = if up { poset.up_set(z) } else { poset.down_set(z) };
                candidates.is_subset(reach)
            })
        };
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for x in 0..n {
            for y in x..n {
                let name = || format!("{} and {}", poset.label(x), poset.label(y));
                let j = least(&poset.up_set(x).intersection(poset.up_set(y)), true)
                    .ok_or_else(|| Error::NotALattice(format!("no join of {}", name())))?;
                let m = least(&poset.down_set(x).intersection(poset.down_set(y)), false)
                    .ok_or_else(|| Error::NotALattice(format!("no meet of {}", name())))?;
                join[x][y] = j;
                join[y][x] = j;
                meet[x][y] = m;
                meet[y][x] = m;
            }
        }
        let bottom = poset.bottom().expect("lattices have a bottom");
        let top = poset.top().expect("lattices have a top");
        Ok(Self {
            poset,
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn into_poset(self) -> FinitePoset {
        self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.poset
            .covers()
            .iter()
            .filter(|&&(a, _)| a == self.bottom)
            .map(|&(_, b)| b)
            .collect()
    }

    /// `ρ(1̂)`
    pub fn rank(&self) -> Result<usize> {
        self.poset.rank(self.top)
    }

    /// Semimodular and atomistic.
    pub fn is_geometric(&self) -> bool {
        let Ok(rho) = self.poset.ranks() else {
            return false;
        };
        let n = self.poset.len();
        let semimodular = (0..n).all(|x| {
            (x..n).all(|y| rho[x] + rho[y] >= rho[self.meet(x, y)] + rho[self.join(x, y)])
        });
        if !semimodular {
            return false;
        }
        let atoms = self.atoms();
        (0..n).all(|x| {
            let below = atoms.iter().filter(|&&a| self.poset.leq(a, x));
            below.fold(self.bottom, |acc, &a| self.join(acc, a)) == x
        })
    }

    /// `χ(L; z) = Σ_x μ(0̂, x) z^{r - ρ(x)}`.
    pub fn characteristic_polynomial(&self) -> Result<IntPolynomial> {
        let rho = self.poset.ranks()?;
        let r = rho[self.top];
        let mu = self.poset.mobius_from(self.bottom);
        Ok((0..self.poset.len())
            .map(|x| IntPolynomial::monomial(BigInt::from(mu[x]), r - rho[x]))
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{boolean_lattice, chain};
    use super::*;
    use crate::label::Label;

    fn l(i: i64) -> Label {
        Label::Int(i)
    }

    #[test]
    fn boolean_lattices() {
        let b3 = LatticeStructure::new(boolean_lattice(3)).unwrap();
        assert!(b3.is_geometric());
        assert_eq!(b3.atoms().len(), 3);
        assert_eq!(b3.characteristic_polynomial().unwrap().to_string(), "z^3 - 3z^2 + 3z - 1");
        assert_eq!(b3.rank().unwrap(), 3);
    }

    #[test]
    fn three_point_line() {
        // 0̂ < a, b, c < 1̂
        let p = FinitePoset::from_covers(
            vec![l(0), l(1), l(2), l(3), l(4)],
            &[(l(0), l(1)), (l(0), l(2)), (l(0), l(3)), (l(1), l(4)), (l(2), l(4)), (l(3), l(4))],
        )
        .unwrap();
        assert_eq!(p.mobius(0, 4).unwrap(), 2);
        let lat = LatticeStructure::new(p).unwrap();
        assert!(lat.is_geometric());
        assert_eq!(lat.characteristic_polynomial().unwrap().to_string(), "z^2 - 3z + 2");
    }

    #[test]
    fn non_examples() {
        let n5 = FinitePoset::from_covers(
            vec![l(0), l(1), l(2), l(3), l(4)],
            &[(l(0), l(1)), (l(1), l(2)), (l(2), l(4)), (l(0), l(3)), (l(3), l(4))],
        )
        .unwrap();
        let n5 = LatticeStructure::new(n5).unwrap();
        assert!(!n5.is_geometric());
        assert_eq!(n5.characteristic_polynomial(), Err(Error::Ungraded));
        // a chain of length 2 is modular but not atomistic
        assert!(!LatticeStructure::new(chain(3)).unwrap().is_geometric());
        let two_tops = FinitePoset::from_covers(vec![l(0), l(1), l(2)], &[(l(0), l(1)), (l(0), l(2))]).unwrap();
        assert!(matches!(LatticeStructure::new(two_tops), Err(Error::NotALattice(_))));
    }

    #[test]
    fn joins_and_meets() {
        let b3 = LatticeStructure::new(boolean_lattice(3)).unwrap();
        let p = b3.poset();
        let idx = |s: &str| p.element(&Label::Name(s.into())).unwrap();
        assert_eq!(b3.join(idx("{1}"), idx("{2}")), idx("{1,2}"));
        assert_eq!(b3.meet(idx("{1,2}"), idx("{2,3}")), idx("{2}"));
        for x in 0..p.len() {
            for y in 0..p.len() {
                for z in 0..p.len() {
                    assert_eq!(b3.join(b3.join(x, y), z), b3.join(x, b3.join(y, z)));
                    assert_eq!(b3.meet(b3.meet(x, y), z), b3.meet(x, b3.meet(y, z)));
                }
            }
        }
    }
}
