//! Permutations of `{1..n}` in one-line notation.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..={len}", len = .0.len())]
    NotABijection(Vec<usize>),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A bijection of `{1..n}`. Composition is right to left:
/// `f.compose(&g)` maps `x` to `f(g(x))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images.
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation: `[2, 1, 3]` is `1↦2, 2↦1, 3↦3`.
    pub fn from_one_line(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotABijection(images.to_vec()));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            map: images.iter().map(|v| v - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(map: Vec<usize>) -> Self {
        debug_assert!(map.iter().copied().sorted().eq(0..map.len()));
        Permutation { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of `i ∈ {1..n}`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            map: other.map.iter().map(|&v| self.map[v]).collect(),
        })
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|map| Permutation { map })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_line(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn composition_is_right_to_left() {
        // f = (1 2), g = (1 3): 1↦3↦3, 2↦2↦1, 3↦1↦2.
        let f = p(&[2, 1, 3]);
        let g = p(&[3, 2, 1]);
        assert_eq!(f.compose(&g).unwrap(), p(&[3, 1, 2]));
    }

    #[test]
    fn identity_and_inverse() {
        let q = p(&[3, 1, 2]);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
        assert_eq!(Permutation::identity(3).compose(&q).unwrap(), q);
        assert_eq!(q.inverse(), p(&[2, 3, 1]));
    }

    #[test]
    fn errors() {
        assert!(Permutation::from_one_line(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert_eq!(
            p(&[1, 2]).compose(&p(&[1])),
            Err(PermError::DegreeMismatch(2, 1))
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<_> = Permutation::all(3).map(|q| q.one_line()).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![1, 2, 3]);
        assert_eq!(all[5], vec![3, 2, 1]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn json_is_one_based() {
        let q = p(&[2, 1, 3]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[2,1,3]");
        let back: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
    }

    proptest! {
        #[test]
        fn group_laws(seed in proptest::collection::vec(0usize..1000, 1..7)) {
            let n = seed.len();
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by_key(|&i| (seed[i], i));
            let f = Permutation::from_zero_based(idx);
            let g = f.compose(&f).unwrap();
            prop_assert!(f.inverse().compose(&f).unwrap().is_identity());
            prop_assert_eq!(g.inverse(), f.inverse().compose(&f.inverse()).unwrap());
            let h = g.compose(&f.inverse()).unwrap();
            prop_assert_eq!(h, f);
        }
    }
}
