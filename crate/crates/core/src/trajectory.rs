//! Trajectories of prime intervals and Jordan-Hölder permutations.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::perm::Permutation;
use crate::poset::{Chain, Lattice};

/// A covering pair `lo ≺ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeInterval {
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrajectoryError {
    #[error("Jordan-Hölder permutation undefined: {0}")]
    NotWellDefined(String),
    #[error("min-join formula does not give a permutation: {0:?}")]
    NotABijection(Vec<usize>),
}

/// A covering square `(bottom, a, b, top)` with `a < b` by id.
pub type CoveringSquare = (usize, usize, usize, usize);

/// All cover-preserving four-element boolean sublattices.
pub fn covering_squares(l: &Lattice) -> Vec<CoveringSquare> {
    let mut squares = Vec::new();
    for bottom in l.elements() {
        let ups = l.upper_covers(bottom);
        for (i, &a) in ups.iter().enumerate() {
            for &b in &ups[i + 1..] {
                let top = l.join(a, b);
                if l.is_cover(a, top) && l.is_cover(b, top) {
                    squares.push((bottom, a, b, top));
                }
            }
        }
    }
    squares
}

/// The partition of prime intervals into trajectories: the finest one in
/// which opposite sides of every covering square share a class.
#[derive(Debug, Clone)]
pub struct Trajectories {
    intervals: Vec<PrimeInterval>,
    index: HashMap<(usize, usize), usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<PrimeInterval>>,
}

impl Trajectories {
    pub fn compute(l: &Lattice) -> Self {
        let intervals: Vec<PrimeInterval> = l
            .covers()
            .iter()
            .map(|&(lo, hi)| PrimeInterval { lo, hi })
            .collect();
        let index: HashMap<(usize, usize), usize> = l
            .covers()
            .iter()
            .enumerate()
            .map(|(i, &pair)| (pair, i))
            .collect();
        let mut uf = UnionFind::<usize>::new(intervals.len());
        for (bottom, a, b, top) in covering_squares(l) {
            uf.union(index[&(bottom, a)], index[&(b, top)]);
            uf.union(index[&(bottom, b)], index[&(a, top)]);
        }
        // Class ids in order of each class's smallest interval.
        let mut class_of = vec![usize::MAX; intervals.len()];
        let mut root_class = HashMap::new();
        let mut classes: Vec<Vec<PrimeInterval>> = Vec::new();
        for (i, &p) in intervals.iter().enumerate() {
            let root = uf.find(i);
            let id = *root_class.entry(root).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of[i] = id;
            classes[id].push(p);
        }
        Trajectories {
            intervals,
            index,
            class_of,
            classes,
        }
    }

    pub fn classes(&self) -> &[Vec<PrimeInterval>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn intervals(&self) -> &[PrimeInterval] {
        &self.intervals
    }

    /// Class id of the prime interval `[lo, hi]`, if it is one.
    pub fn class_of(&self, lo: usize, hi: usize) -> Option<usize> {
        self.index.get(&(lo, hi)).map(|&i| self.class_of[i])
    }

    /// `π_{C,D}`: `i ↦ j` iff `[c_{i-1}, c_i]` and `[d_{j-1}, d_j]` share a
    /// trajectory. Fails unless every trajectory meets each chain in exactly
    /// the same number of prime intervals, at most one.
    pub fn jh_permutation(&self, c: &Chain, d: &Chain) -> Result<Permutation, TrajectoryError> {
        if c.length() != d.length() {
            return Err(TrajectoryError::NotWellDefined(format!(
                "chains have lengths {} and {}",
                c.length(),
                d.length()
            )));
        }
        let mut position_in_d = HashMap::new();
        for (j, (lo, hi)) in d.prime_intervals().enumerate() {
            let class = self.class_of(lo, hi).expect("chain steps are covers");
            if position_in_d.insert(class, j).is_some() {
                return Err(TrajectoryError::NotWellDefined(format!(
                    "trajectory {class} meets chain {:?} twice",
                    d.elems()
                )));
            }
        }
        let mut map = Vec::with_capacity(c.length());
        let mut hit = vec![false; c.length()];
        for (lo, hi) in c.prime_intervals() {
            let class = self.class_of(lo, hi).expect("chain steps are covers");
            let j = *position_in_d.get(&class).ok_or_else(|| {
                TrajectoryError::NotWellDefined(format!(
                    "trajectory of [{lo}, {hi}] misses chain {:?}",
                    d.elems()
                ))
            })?;
            if hit[j] {
                return Err(TrajectoryError::NotWellDefined(format!(
                    "trajectory {class} meets chain {:?} twice",
                    c.elems()
                )));
            }
            hit[j] = true;
            map.push(j);
        }
        Ok(Permutation::from_zero_based(map))
    }
}

/// `π_{C,D}` computed from trajectories.
pub fn jh_permutation(l: &Lattice, c: &Chain, d: &Chain) -> Result<Permutation, TrajectoryError> {
    Trajectories::compute(l).jh_permutation(c, d)
}

/// `π_{C,D}(i) = min{ j : c_{i-1} ∨ d_j = c_i ∨ d_j }`, without trajectories.
pub fn jh_permutation_minjoin(
    l: &Lattice,
    c: &Chain,
    d: &Chain,
) -> Result<Permutation, TrajectoryError> {
    let n = c.length();
    let images: Vec<usize> = (1..=n)
        .map(|i| {
            (0..=d.length())
                .find(|&j| l.join(c.at(i - 1), d.at(j)) == l.join(c.at(i), d.at(j)))
                .unwrap_or(0)
        })
        .collect();
    Permutation::from_one_line(&images).map_err(|_| TrajectoryError::NotABijection(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::named::*;

    fn chain_of(l: &Lattice, elems: &[usize]) -> Chain {
        Chain::new(l, elems.to_vec()).unwrap()
    }

    #[test]
    fn square_counts() {
        assert!(covering_squares(&chain(4)).is_empty());
        assert_eq!(covering_squares(&boolean(2)), vec![(0, 1, 2, 3)]);
        assert_eq!(covering_squares(&boolean(3)).len(), 6);
    }

    #[test]
    fn trajectory_classes() {
        let t = Trajectories::compute(&chain(3));
        assert_eq!(t.len(), 3);
        assert!(t.classes().iter().all(|c| c.len() == 1));
        let t = Trajectories::compute(&boolean(2));
        assert_eq!(
            t.classes().iter().map(Vec::len).collect::<Vec<_>>(),
            vec![2, 2]
        );
    }

    /// Union-find-free oracle for the cube: a prime interval `[s, s|bit]`
    /// belongs to the trajectory of its added bit.
    #[test]
    fn cube_trajectories_follow_directions() {
        let b3 = boolean(3);
        let t = Trajectories::compute(&b3);
        assert_eq!(t.len(), 3);
        for class in t.classes() {
            assert_eq!(class.len(), 4);
            let dirs: Vec<usize> = class.iter().map(|p| p.hi ^ p.lo).collect();
            assert!(dirs.iter().all(|&d| d == dirs[0]));
        }
    }

    // B_3 with atoms a = 1, b = 2, c = 4 (element ids are bitmasks).
    #[test]
    fn cube_permutations() {
        let b3 = boolean(3);
        let c1 = chain_of(&b3, &[0, 1, 3, 7]);
        let c2 = chain_of(&b3, &[0, 2, 3, 7]);
        let c3 = chain_of(&b3, &[0, 4, 6, 7]);
        assert!(jh_permutation(&b3, &c1, &c1).unwrap().is_identity());
        assert_eq!(
            jh_permutation(&b3, &c1, &c2).unwrap().one_line(),
            vec![2, 1, 3]
        );
        assert_eq!(
            jh_permutation(&b3, &c1, &c3).unwrap().one_line(),
            vec![3, 2, 1]
        );

        let p1 = chain_of(&b3, &[0, 1, 3, 7]);
        let p2 = chain_of(&b3, &[0, 2, 6, 7]);
        let p3 = chain_of(&b3, &[0, 4, 5, 7]);
        assert!(jh_permutation_minjoin(&b3, &c1, &c1).unwrap().is_identity());
        assert_eq!(
            jh_permutation_minjoin(&b3, &p1, &p2).unwrap().one_line(),
            vec![3, 1, 2]
        );
        assert_eq!(
            jh_permutation_minjoin(&b3, &p1, &p3).unwrap().one_line(),
            vec![2, 3, 1]
        );
    }

    #[test]
    fn diamond_is_refused() {
        let m3 = m3();
        let c = chain_of(&m3, &[0, 1, 4]);
        let d = chain_of(&m3, &[0, 2, 4]);
        assert!(matches!(
            jh_permutation(&m3, &c, &d),
            Err(TrajectoryError::NotWellDefined(_))
        ));
    }

    #[test]
    fn unequal_lengths_are_refused() {
        let n5 = n5();
        let c = chain_of(&n5, &[0, 1, 2, 4]);
        let d = chain_of(&n5, &[0, 3, 4]);
        assert!(jh_permutation(&n5, &c, &d).is_err());
    }
}
