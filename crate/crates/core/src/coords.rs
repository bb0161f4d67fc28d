//! Coordinates for join-distributive lattices.
//!
//! A tuple of permutations `π = (π_12, …, π_1k) ∈ S_n^{k-1}` determines the
//! lattice of its eligible tuples together with `k` distinguished maximal
//! chains (`eta`); conversely, a lattice with `k` maximal chains determines
//! the Jordan-Hölder permutations from its first chain to the others (`xi`).
//! The two maps are mutually inverse, and this module provides the tools to
//! certify that by enumeration.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::jd;
use crate::perm::{PermError, Permutation};
use crate::poset::{find_isomorphism, invariant_profile, Chain, Lattice, LatticeError, Profile};
use crate::trajectory::{Trajectories, TrajectoryError};

/// Default bound on the number of permutation vectors enumerated.
pub const DEFAULT_MAX_CASES: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoordError {
    #[error("need at least two chains, got {0}")]
    TooFewChains(usize),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("permutation {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("declared k = {declared} but {found} permutations given (expected k - 1)")]
    ChainCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Trajectory(#[from] TrajectoryError),
    #[error("not semimodular without cover-preserving diamonds: {0}")]
    NotCdf(String),
    #[error("not a join-distributive lattice with chains covering Jir: {0}")]
    NotLat(String),
    #[error("{cases} cases exceed the limit of {limit}")]
    SizeLimitExceeded { cases: String, limit: u128 },
}

/// `π = (π_12, π_13, …, π_1k)`, all of degree `n`, with `k ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermVectorJson", into = "PermVectorJson")]
pub struct PermVector {
    n: usize,
    perms: Vec<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct PermVectorJson {
    n: usize,
    k: usize,
    perms: Vec<Permutation>,
}

impl TryFrom<PermVectorJson> for PermVector {
    type Error = CoordError;

    fn try_from(raw: PermVectorJson) -> Result<Self, CoordError> {
        if raw.perms.len() + 1 != raw.k {
            return Err(CoordError::ChainCountMismatch {
                declared: raw.k,
                found: raw.perms.len(),
            });
        }
        PermVector::new(raw.n, raw.perms)
    }
}

impl From<PermVector> for PermVectorJson {
    fn from(v: PermVector) -> Self {
        PermVectorJson {
            n: v.n,
            k: v.k(),
            perms: v.perms,
        }
    }
}

impl PermVector {
    pub fn new(n: usize, perms: Vec<Permutation>) -> Result<Self, CoordError> {
        if n == 0 {
            return Err(CoordError::ZeroDegree);
        }
        if perms.is_empty() {
            return Err(CoordError::TooFewChains(1));
        }
        for (index, p) in perms.iter().enumerate() {
            if p.degree() != n {
                return Err(CoordError::DegreeMismatch {
                    index,
                    expected: n,
                    found: p.degree(),
                });
            }
        }
        Ok(PermVector { n, perms })
    }

    /// Convenience constructor from 1-based one-line notations.
    pub fn from_one_line(n: usize, perms: &[&[usize]]) -> Result<Self, CoordError> {
        let perms = perms
            .iter()
            .map(|p| Permutation::from_one_line(p))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, perms)
    }

    pub fn identity(n: usize, k: usize) -> Result<Self, CoordError> {
        if k < 2 {
            return Err(CoordError::TooFewChains(k));
        }
        Self::new(n, vec![Permutation::identity(n); k - 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.perms.len() + 1
    }

    /// `(π_12, …, π_1k)`.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// `π_1j` for `j ∈ 1..=k`; `π_11` is the identity.
    pub fn from_first(&self, j: usize) -> Permutation {
        if j == 1 {
            Permutation::identity(self.n)
        } else {
            self.perms[j - 2].clone()
        }
    }

    pub fn extend(&self) -> ExtendedVector {
        extend(self)
    }
}

/// The `k × k` matrix `π_ij = π_1j ∘ π_1i⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedVector {
    n: usize,
    k: usize,
    matrix: Vec<Permutation>,
}

impl ExtendedVector {
    /// `π_ij`, 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> &Permutation {
        &self.matrix[(i - 1) * self.k + (j - 1)]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

pub fn extend(v: &PermVector) -> ExtendedVector {
    let k = v.k();
    let firsts: Vec<Permutation> = (1..=k).map(|j| v.from_first(j)).collect();
    let inverses: Vec<Permutation> = firsts.iter().map(Permutation::inverse).collect();
    let mut matrix = Vec::with_capacity(k * k);
    for inv in &inverses {
        for first in &firsts {
            matrix.push(first.compose(inv).expect("equal degrees"));
        }
    }
    ExtendedVector { n: v.n, k, matrix }
}

/// Eligibility: `π_ij(x_i + 1) ≥ x_j + 1` whenever `x_i < n`.
pub fn is_eligible_ext(ext: &ExtendedVector, x: &[usize]) -> bool {
    let n = ext.n;
    if x.len() != ext.k || x.iter().any(|&c| c > n) {
        return false;
    }
    (0..ext.k)
        .filter(|&i| x[i] < n)
        .all(|i| (0..ext.k).all(|j| ext.get(i + 1, j + 1).apply(x[i] + 1) > x[j]))
}

pub fn is_eligible(v: &PermVector, x: &[usize]) -> bool {
    is_eligible_ext(&extend(v), x)
}

/// All eligible tuples, in lexicographic order, by filtering `{0..n}^k`.
pub fn eligible_tuples(v: &PermVector) -> Vec<Vec<usize>> {
    let ext = extend(v);
    (0..v.k())
        .map(|_| 0..=v.n)
        .multi_cartesian_product()
        .filter(|x| is_eligible_ext(&ext, x))
        .collect()
}

/// Eligible tuples generated from the suborbital vectors and the top by
/// componentwise minima; needs no scan of `{0..n}^k`.
pub fn eligible_tuples_by_meets(v: &PermVector) -> Vec<Vec<usize>> {
    let mut closed: BTreeSet<Vec<usize>> = suborbital_vectors(v).into_iter().collect();
    closed.insert(vec![v.n; v.k()]);
    let mut frontier: Vec<Vec<usize>> = closed.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        let current: Vec<Vec<usize>> = closed.iter().cloned().collect();
        for y in current {
            let m: Vec<usize> = x.iter().zip(&y).map(|(a, b)| *a.min(b)).collect();
            if closed.insert(m.clone()) {
                frontier.push(m);
            }
        }
    }
    closed.into_iter().collect()
}

/// `B(π)`: `(π_11(b) − 1, …, π_1k(b) − 1)` for `b ∈ 1..=n`, sorted.
pub fn suborbital_vectors(v: &PermVector) -> Vec<Vec<usize>> {
    let firsts: Vec<Permutation> = (1..=v.k()).map(|j| v.from_first(j)).collect();
    (1..=v.n)
        .map(|b| firsts.iter().map(|p| p.apply(b) - 1).collect())
        .sorted()
        .collect()
}

fn componentwise_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `feet(u)`: for each chain, the largest index `j` with `c_j ≤ u`.
pub fn feet_in(l: &Lattice, chains: &[Chain], u: usize) -> Vec<usize> {
    chains
        .iter()
        .map(|c| {
            c.elems()
                .iter()
                .rposition(|&e| l.leq(e, u))
                .expect("bottom lies below u")
        })
        .collect()
}

/// A lattice with `k ≥ 2` distinguished maximal chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainedLattice {
    lattice: Lattice,
    chains: Vec<Chain>,
}

impl ChainedLattice {
    pub fn new(lattice: Lattice, chains: Vec<Vec<usize>>) -> Result<Self, CoordError> {
        if chains.len() < 2 {
            return Err(CoordError::TooFewChains(chains.len()));
        }
        let chains = chains
            .into_iter()
            .map(|c| Chain::new(&lattice, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainedLattice { lattice, chains })
    }

    /// Requires semimodularity and no cover-preserving diamond.
    pub fn cdf(lattice: Lattice, chains: Vec<Vec<usize>>) -> Result<Self, CoordError> {
        let cl = Self::new(lattice, chains)?;
        cl.check_cdf()?;
        Ok(cl)
    }

    /// Requires join-distributivity and `Jir L ⊆ C_1 ∪ … ∪ C_k`.
    pub fn lat(lattice: Lattice, chains: Vec<Vec<usize>>) -> Result<Self, CoordError> {
        let cl = Self::new(lattice, chains)?;
        cl.check_lat()?;
        Ok(cl)
    }

    /// The lattice with a chain system covering `Jir L` chosen by
    /// [`chains_covering_jir`], padded to two chains when needed.
    pub fn covering_jir(lattice: Lattice) -> Result<Self, CoordError> {
        let mut chains: Vec<Vec<usize>> = chains_covering_jir(&lattice)
            .into_iter()
            .map(|c| c.elems().to_vec())
            .collect();
        if chains.len() < 2 {
            chains.push(chains[0].clone());
        }
        Self::new(lattice, chains)
    }

    pub fn check_cdf(&self) -> Result<(), CoordError> {
        let l = &self.lattice;
        if !jd::is_semimodular(l) {
            return Err(CoordError::NotCdf("lattice is not semimodular".into()));
        }
        if let Some(d) = jd::find_cover_preserving_diamond(l) {
            return Err(CoordError::NotCdf(format!(
                "cover-preserving diamond {d:?}"
            )));
        }
        Ok(())
    }

    pub fn check_lat(&self) -> Result<(), CoordError> {
        let l = &self.lattice;
        if !(jd::is_semimodular(l) && jd::is_meet_semidistributive(l)) {
            return Err(CoordError::NotLat(
                "lattice is not join-distributive".into(),
            ));
        }
        let missing: Vec<usize> = l
            .join_irreducibles()
            .into_iter()
            .filter(|&x| !self.chains.iter().any(|c| c.contains(x)))
            .collect();
        if !missing.is_empty() {
            return Err(CoordError::NotLat(format!(
                "join-irreducibles {missing:?} are on no chain"
            )));
        }
        Ok(())
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn k(&self) -> usize {
        self.chains.len()
    }

    /// Length of the lattice.
    pub fn n(&self) -> usize {
        self.lattice.length()
    }

    pub fn feet(&self, u: usize) -> Vec<usize> {
        feet_in(&self.lattice, &self.chains, u)
    }

    /// `c^{(i)}_{x_1} ∨ … ∨ c^{(k)}_{x_k}`.
    fn join_of_coordinates(&self, x: &[usize]) -> usize {
        self.lattice
            .join_all(self.chains.iter().zip(x).map(|(c, &xi)| c.at(xi)))
    }
}

/// `π(L; C_1, …, C_k)` as produced by [`eta`]: the chained lattice plus the
/// eligible tuple behind each element id.
#[derive(Debug, Clone)]
pub struct CoordinateLattice {
    pub chained: ChainedLattice,
    /// `tuples[id]`, sorted lexicographically.
    pub tuples: Vec<Vec<usize>>,
}

impl CoordinateLattice {
    pub fn id_of(&self, x: &[usize]) -> Option<usize> {
        self.tuples.binary_search_by(|t| t.as_slice().cmp(x)).ok()
    }
}

/// The lattice of eligible tuples under the componentwise order, with the
/// chains `C_i(π)` of tuples initial in their `i`-th component.
pub fn eta(v: &PermVector) -> CoordinateLattice {
    let tuples = eligible_tuples(v);
    let lattice = Lattice::from_order(tuples.len(), |a, b| {
        componentwise_leq(&tuples[a], &tuples[b])
    })
    .expect("eligible tuples form a lattice");
    let id_of = |x: &[usize]| {
        tuples
            .binary_search_by(|t| t.as_slice().cmp(x))
            .expect("meet of eligible tuples is eligible")
    };
    let chains: Vec<Vec<usize>> = (0..v.k())
        .map(|i| {
            (0..=v.n)
                .map(|t| {
                    // The least eligible tuple with i-th component t.
                    let least = tuples
                        .iter()
                        .filter(|x| x[i] == t)
                        .fold(vec![v.n; v.k()], |acc, x| {
                            acc.iter().zip(x).map(|(a, b)| *a.min(b)).collect()
                        });
                    id_of(&least)
                })
                .collect()
        })
        .collect();
    let chained = ChainedLattice::new(lattice, chains).expect("C_i(π) are maximal chains");
    CoordinateLattice { chained, tuples }
}

/// Jordan-Hölder permutations from the first chain to each of the others.
pub fn xi(cl: &ChainedLattice) -> Result<PermVector, CoordError> {
    let traj = Trajectories::compute(&cl.lattice);
    let first = &cl.chains[0];
    let perms = cl.chains[1..]
        .iter()
        .map(|c| traj.jh_permutation(first, c))
        .collect::<Result<Vec<_>, _>>()?;
    PermVector::new(cl.n(), perms)
}

/// Whether bumping any single coordinate of `x` strictly raises the join
/// `c^{(1)}_{x_1} ∨ … ∨ c^{(k)}_{x_k}`.
pub fn is_l_maximal(cl: &ChainedLattice, x: &[usize]) -> bool {
    let n = cl.n();
    if x.len() != cl.k() || x.iter().any(|&c| c > n) {
        return false;
    }
    let base = cl.join_of_coordinates(x);
    (0..cl.k()).filter(|&i| x[i] < n).all(|i| {
        let mut bumped = x.to_vec();
        bumped[i] += 1;
        cl.join_of_coordinates(&bumped) != base
    })
}

/// `xi(eta(v)) == v`.
pub fn roundtrip_perm(v: &PermVector) -> bool {
    xi(&eta(v).chained).as_ref() == Ok(v)
}

/// Checks that `u ↦ feet(u)` is an order isomorphism from `cl` onto
/// `eta(xi(cl))` carrying each `C_i` onto `C_i(π)`.
pub fn roundtrip_lattice(cl: &ChainedLattice) -> Result<bool, CoordError> {
    let v = xi(cl)?;
    let target = eta(&v);
    let l = cl.lattice();
    let tl = target.chained.lattice();
    if l.size() != tl.size() {
        return Ok(false);
    }
    let Some(mu) = l
        .elements()
        .map(|u| target.id_of(&cl.feet(u)))
        .collect::<Option<Vec<_>>>()
    else {
        return Ok(false);
    };
    if mu.iter().collect::<BTreeSet<_>>().len() != l.size() {
        return Ok(false);
    }
    for u in l.elements() {
        for w in l.elements() {
            if l.leq(u, w) != tl.leq(mu[u], mu[w]) {
                return Ok(false);
            }
        }
    }
    Ok(cl
        .chains()
        .iter()
        .zip(target.chained.chains())
        .all(|(c, tc)| {
            c.elems()
                .iter()
                .map(|&u| mu[u])
                .eq(tc.elems().iter().copied())
        }))
}

fn case_count(n: usize, k: usize) -> Option<u128> {
    let fact = (1..=n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i))?;
    (0..k - 1).try_fold(1u128, |acc, _| acc.checked_mul(fact))
}

/// All of `S_n^{k-1}`, lexicographic in `(π_12, …, π_1k)`.
pub fn enumerate_perm_vectors(
    n: usize,
    k: usize,
    max_cases: u128,
) -> Result<impl Iterator<Item = PermVector>, CoordError> {
    if n == 0 {
        return Err(CoordError::ZeroDegree);
    }
    if k < 2 {
        return Err(CoordError::TooFewChains(k));
    }
    match case_count(n, k) {
        Some(c) if c <= max_cases => {}
        other => {
            return Err(CoordError::SizeLimitExceeded {
                cases: other.map_or_else(|| format!("({n}!)^{}", k - 1), |c| c.to_string()),
                limit: max_cases,
            })
        }
    }
    let all: Vec<Permutation> = Permutation::all(n).collect();
    Ok((0..k - 1)
        .map(move |_| all.clone().into_iter())
        .multi_cartesian_product()
        .map(move |perms| PermVector { n, perms }))
}

/// Groups `S_n^{k-1}` by the isomorphism type of the bare `eta` lattice.
/// Classes are ordered by their first member.
pub fn same_lattice_classes(
    n: usize,
    k: usize,
    max_cases: u128,
) -> Result<Vec<Vec<PermVector>>, CoordError> {
    let mut classes: Vec<(Profile, Lattice, Vec<PermVector>)> = Vec::new();
    for v in enumerate_perm_vectors(n, k, max_cases)? {
        let lattice = eta(&v).chained.lattice;
        let profile = invariant_profile(&lattice);
        match classes
            .iter_mut()
            .find(|(p, rep, _)| *p == profile && find_isomorphism(rep, &lattice).is_some())
        {
            Some((_, _, members)) => members.push(v),
            None => classes.push((profile, lattice, vec![v])),
        }
    }
    Ok(classes.into_iter().map(|(_, _, members)| members).collect())
}

/// A minimum-size family of maximal chains covering `Jir L`: a Dilworth
/// partition of `Jir L` into chains, each extended to a maximal chain by
/// walking up through the smallest admissible cover. One valid choice among
/// many; the resulting coordinates depend on it.
pub fn chains_covering_jir(l: &Lattice) -> Vec<Chain> {
    let parts = l.chain_partition(&l.join_irreducibles());
    if parts.is_empty() {
        return vec![l
            .maximal_chains()
            .next()
            .expect("every lattice has a maximal chain")];
    }
    parts
        .into_iter()
        .map(|part| {
            let mut elems = vec![l.bottom()];
            for target in part.into_iter().chain([l.top()]) {
                let mut cur = *elems.last().expect("nonempty");
                while cur != target {
                    cur = *l
                        .upper_covers(cur)
                        .iter()
                        .find(|&&u| l.leq(u, target))
                        .expect("some cover lies below the target");
                    elems.push(cur);
                }
            }
            Chain::new(l, elems).expect("walk along covers from bottom to top")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::is_isomorphic;
    use crate::poset::named::*;

    fn pv(n: usize, perms: &[&[usize]]) -> PermVector {
        PermVector::from_one_line(n, perms).unwrap()
    }

    /// Brute force over `{0..n}^k`, straight from the definition, written
    /// without the extended matrix.
    fn eligible_oracle(v: &PermVector) -> Vec<Vec<usize>> {
        let k = v.k();
        let n = v.n();
        let mut out = Vec::new();
        let total = (n + 1).pow(k as u32);
        for code in 0..total {
            let mut x = vec![0; k];
            let mut c = code;
            for slot in x.iter_mut().rev() {
                *slot = c % (n + 1);
                c /= n + 1;
            }
            let ok = (1..=k).all(|i| {
                x[i - 1] == n
                    || (1..=k).all(|j| {
                        // π_ij(y) = π_1j(π_1i⁻¹(y))
                        let y = x[i - 1] + 1;
                        let pre = (1..=n).find(|&b| v.from_first(i).apply(b) == y).unwrap();
                        v.from_first(j).apply(pre) > x[j - 1]
                    })
            });
            if ok {
                out.push(x);
            }
        }
        out
    }

    fn transposition() -> PermVector {
        pv(3, &[&[2, 1, 3]])
    }

    #[test]
    fn oracle_matches_filter_and_meet_generation() {
        for v in enumerate_perm_vectors(3, 3, DEFAULT_MAX_CASES).unwrap() {
            let oracle = eligible_oracle(&v);
            assert_eq!(eligible_tuples(&v), oracle);
            assert_eq!(eligible_tuples_by_meets(&v), oracle);
        }
    }

    #[test]
    fn transposition_eligible_set() {
        let expected = vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![2, 2], vec![3, 3]];
        assert_eq!(eligible_oracle(&transposition()), expected);
        assert_eq!(eligible_tuples(&transposition()), expected);
        assert!(is_eligible(&transposition(), &[3, 3]));
        assert!(!is_eligible(&PermVector::identity(3, 2).unwrap(), &[1, 2]));
    }

    #[test]
    fn extended_vector() {
        let id = extend(&PermVector::identity(3, 3).unwrap());
        for i in 1..=3 {
            for j in 1..=3 {
                assert!(id.get(i, j).is_identity());
            }
        }
        let t = extend(&transposition());
        assert_eq!(t.get(2, 1).one_line(), vec![2, 1, 3]);
        let sigma = extend(&pv(3, &[&[3, 1, 2], &[2, 3, 1]]));
        assert_eq!(sigma.get(2, 3).one_line(), vec![3, 1, 2]);
    }

    #[test]
    fn transposition_lattice_and_chains() {
        let cl = eta(&transposition());
        let l = cl.chained.lattice();
        assert_eq!(l.size(), 5);
        let ids =
            |ts: &[[usize; 2]]| -> Vec<usize> { ts.iter().map(|t| cl.id_of(t).unwrap()).collect() };
        assert_eq!(
            cl.chained.chains()[0].elems(),
            ids(&[[0, 0], [1, 0], [2, 2], [3, 3]])
        );
        assert_eq!(
            cl.chained.chains()[1].elems(),
            ids(&[[0, 0], [0, 1], [2, 2], [3, 3]])
        );
        assert_eq!(l.meet_irreducibles().len(), 3);
        assert_eq!(l.width(&l.join_irreducibles()), 2);
        // Exhaustive antichain oracle for the width.
        let jir = l.join_irreducibles();
        let best = (0..1u32 << jir.len())
            .filter(|&s| {
                let pick: Vec<usize> = (0..jir.len())
                    .filter(|i| s & (1 << i) != 0)
                    .map(|i| jir[i])
                    .collect();
                pick.iter()
                    .tuple_combinations()
                    .all(|(&a, &b)| !l.leq(a, b) && !l.leq(b, a))
            })
            .map(u32::count_ones)
            .max()
            .unwrap();
        assert_eq!(best, 2);
    }

    #[test]
    fn identity_vector_gives_a_chain() {
        for k in 2..=4 {
            let cl = eta(&PermVector::identity(3, k).unwrap());
            assert!(is_isomorphic(cl.chained.lattice(), &chain(3)));
            assert!(cl
                .chained
                .chains()
                .iter()
                .all(|c| c == &cl.chained.chains()[0]));
        }
    }

    #[test]
    fn suborbitals() {
        assert_eq!(
            suborbital_vectors(&transposition()),
            vec![vec![0, 1], vec![1, 0], vec![2, 2]]
        );
        let id = PermVector::identity(3, 3).unwrap();
        assert_eq!(
            suborbital_vectors(&id),
            vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]
        );
    }

    #[test]
    fn feet_are_identity_on_eta() {
        let cl = eta(&pv(3, &[&[2, 1, 3], &[3, 2, 1]]));
        let l = cl.chained.lattice();
        assert_eq!(cl.chained.feet(l.bottom()), vec![0, 0, 0]);
        assert_eq!(cl.chained.feet(l.top()), vec![3, 3, 3]);
        for (id, t) in cl.tuples.iter().enumerate() {
            assert_eq!(&cl.chained.feet(id), t);
        }
    }

    #[test]
    fn decode_cube() {
        let b3 = boolean(3);
        let cl = ChainedLattice::cdf(
            b3.clone(),
            vec![vec![0, 1, 3, 7], vec![0, 2, 3, 7], vec![0, 4, 6, 7]],
        )
        .unwrap();
        assert_eq!(xi(&cl).unwrap(), pv(3, &[&[2, 1, 3], &[3, 2, 1]]));
        let primed = ChainedLattice::cdf(
            b3,
            vec![vec![0, 1, 3, 7], vec![0, 2, 6, 7], vec![0, 4, 5, 7]],
        )
        .unwrap();
        assert_eq!(xi(&primed).unwrap(), pv(3, &[&[3, 1, 2], &[2, 3, 1]]));
        assert!(is_l_maximal(&cl, &[0, 0, 0]));
        assert!(is_l_maximal(&cl, &[3, 3, 3]));
        assert!(roundtrip_lattice(&cl).unwrap());
        assert!(roundtrip_lattice(&primed).unwrap());
    }

    #[test]
    fn l_maximal_iff_eligible_on_cube() {
        let b3 = boolean(3);
        let cl = ChainedLattice::lat(
            b3,
            vec![vec![0, 1, 3, 7], vec![0, 2, 3, 7], vec![0, 4, 6, 7]],
        )
        .unwrap();
        let v = xi(&cl).unwrap();
        for x in (0..3).map(|_| 0..=3usize).multi_cartesian_product() {
            assert_eq!(is_l_maximal(&cl, &x), is_eligible(&v, &x), "{x:?}");
        }
    }

    #[test]
    fn roundtrips() {
        assert!(roundtrip_perm(&PermVector::identity(4, 2).unwrap()));
        assert!(roundtrip_perm(&pv(3, &[&[2, 1, 3], &[3, 2, 1]])));
        assert!(roundtrip_perm(&pv(3, &[&[3, 1, 2], &[2, 3, 1]])));
        let mut count = 0;
        for v in enumerate_perm_vectors(3, 3, DEFAULT_MAX_CASES).unwrap() {
            assert!(roundtrip_perm(&v), "{v:?}");
            count += 1;
        }
        assert_eq!(count, 36);
        for v in enumerate_perm_vectors(3, 2, DEFAULT_MAX_CASES).unwrap() {
            assert!(roundtrip_lattice(&eta(&v).chained).unwrap());
        }
        let c = chain(2);
        let cl = ChainedLattice::new(c, vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert!(roundtrip_lattice(&cl).unwrap());
        assert_eq!(xi(&cl).unwrap(), PermVector::identity(2, 2).unwrap());
    }

    #[test]
    fn enumeration_counts_and_limits() {
        assert_eq!(enumerate_perm_vectors(1, 2, 10).unwrap().count(), 1);
        assert_eq!(enumerate_perm_vectors(3, 2, 10).unwrap().count(), 6);
        assert_eq!(enumerate_perm_vectors(3, 3, 100).unwrap().count(), 36);
        assert!(matches!(
            enumerate_perm_vectors(3, 3, 35),
            Err(CoordError::SizeLimitExceeded { .. })
        ));
        assert!(matches!(
            enumerate_perm_vectors(40, 3, DEFAULT_MAX_CASES),
            Err(CoordError::SizeLimitExceeded { .. })
        ));
        let first: Vec<_> = enumerate_perm_vectors(3, 3, 100).unwrap().take(2).collect();
        assert!(first[0] < first[1]);
    }

    #[test]
    fn lattice_classes() {
        let classes = same_lattice_classes(3, 3, DEFAULT_MAX_CASES).unwrap();
        let pi = pv(3, &[&[2, 1, 3], &[3, 2, 1]]);
        let sigma = pv(3, &[&[3, 1, 2], &[2, 3, 1]]);
        assert!(classes
            .iter()
            .any(|c| c.contains(&pi) && c.contains(&sigma)));
        let k2 = same_lattice_classes(3, 2, DEFAULT_MAX_CASES).unwrap();
        let id = PermVector::identity(3, 2).unwrap();
        assert!(k2.iter().any(|c| c == &vec![id.clone()]));
        assert_eq!(same_lattice_classes(1, 2, 10).unwrap().len(), 1);
    }

    #[test]
    fn constructors_validate() {
        assert_eq!(PermVector::identity(3, 1), Err(CoordError::TooFewChains(1)));
        assert!(matches!(
            ChainedLattice::cdf(m3(), vec![vec![0, 1, 4], vec![0, 2, 4]]),
            Err(CoordError::NotCdf(_))
        ));
        assert!(matches!(
            ChainedLattice::lat(boolean(3), vec![vec![0, 1, 3, 7], vec![0, 2, 3, 7]]),
            Err(CoordError::NotLat(_))
        ));
        assert!(ChainedLattice::new(chain(2), vec![vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn json_shape() {
        let v = pv(3, &[&[2, 1, 3], &[3, 2, 1]]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"n":3,"k":3,"perms":[[2,1,3],[3,2,1]]}"#);
        assert_eq!(serde_json::from_str::<PermVector>(&s).unwrap(), v);
        assert!(
            serde_json::from_str::<PermVector>(r#"{"n":3,"k":2,"perms":[[2,1,3],[3,2,1]]}"#)
                .is_err()
        );
        assert!(serde_json::from_str::<PermVector>(r#"{"n":3,"k":2,"perms":[[2,1]]}"#).is_err());
    }

    #[test]
    fn covering_chains_cover_jir() {
        for l in [
            boolean(3),
            chain(3),
            eta(&transposition()).chained.lattice().clone(),
        ] {
            let chains = chains_covering_jir(&l);
            assert_eq!(chains.len(), l.width(&l.join_irreducibles()).max(1));
            for x in l.join_irreducibles() {
                assert!(chains.iter().any(|c| c.contains(x)));
            }
        }
    }
}
