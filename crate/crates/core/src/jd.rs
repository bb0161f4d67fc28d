//! Join-distributivity, decided independently through each of its classical
//! characterizations and cross-checked.
//!
//! Every check is exhaustive. With `m` elements: semimodularity is
//! `O(|covers|·m)`, meet-semidistributivity and the diamond search are
//! `O(m³)`, the `[x, x*]` checks are `O(m·|[x,x*]|³)` and `O(m·4^t)` for
//! `t` upper covers, and unique meet decompositions enumerate irredundant
//! subsets of the meet-irreducibles above each element.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::coords::{chains_covering_jir, feet_in};
use crate::poset::{Chain, Lattice};

/// The seven decidable characterizations; the eighth (cover-preserving
/// embedding into a distributive lattice) is witnessed by an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Characterization {
    /// Semimodular and meet-semidistributive.
    #[serde(rename = "a")]
    SemimodularMeetSemidistributive,
    /// Unique irredundant meet-decompositions into meet-irreducibles.
    #[serde(rename = "b")]
    UniqueMeetDecompositions,
    /// Every `[x, x*]` is distributive.
    #[serde(rename = "c")]
    UpstarDistributive,
    /// Every `[x, x*]` is boolean.
    #[serde(rename = "d")]
    UpstarBoolean,
    /// Every maximal chain has length `|Mir L|`.
    #[serde(rename = "e")]
    ChainLengthsEqualMir,
    /// Semimodular and diamond-free.
    #[serde(rename = "f")]
    SemimodularDiamondFree,
    /// Semimodular without cover-preserving diamonds.
    #[serde(rename = "g")]
    SemimodularNoCoverDiamond,
}

impl Characterization {
    pub const ALL: [Characterization; 7] = [
        Characterization::SemimodularMeetSemidistributive,
        Characterization::UniqueMeetDecompositions,
        Characterization::UpstarDistributive,
        Characterization::UpstarBoolean,
        Characterization::ChainLengthsEqualMir,
        Characterization::SemimodularDiamondFree,
        Characterization::SemimodularNoCoverDiamond,
    ];

    pub fn tag(self) -> char {
        match self {
            Characterization::SemimodularMeetSemidistributive => 'a',
            Characterization::UniqueMeetDecompositions => 'b',
            Characterization::UpstarDistributive => 'c',
            Characterization::UpstarBoolean => 'd',
            Characterization::ChainLengthsEqualMir => 'e',
            Characterization::SemimodularDiamondFree => 'f',
            Characterization::SemimodularNoCoverDiamond => 'g',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JdReport {
    pub verdicts: BTreeMap<Characterization, bool>,
    /// Counterexample for the first failing characterization.
    pub witness: Option<String>,
    pub join_distributive: bool,
    /// `Mir L ∖ ↑u` for every element `u`, as sorted element ids: a
    /// cover-preserving join-embedding into the powerset of `Mir L`.
    /// Present only for join-distributive lattices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JdError {
    #[error("characterizations disagree: {0:?}")]
    EquivalenceViolated(Box<JdReport>),
    #[error("lattice is not join-distributive")]
    NotJoinDistributive,
    #[error("join-irreducibles {0:?} lie on none of the chains")]
    ChainsDontCoverJir(Vec<usize>),
    #[error("embedding check failed: {0}")]
    EmbeddingInvalid(String),
}

fn semimodularity_violation(l: &Lattice) -> Option<String> {
    for &(x, y) in l.covers() {
        for z in l.elements() {
            let (a, b) = (l.join(x, z), l.join(y, z));
            if a != b && !l.is_cover(a, b) {
                return Some(format!(
                    "{x} ≺ {y} but {x}∨{z} = {a} is not covered by {y}∨{z} = {b}"
                ));
            }
        }
    }
    None
}

fn meet_semidistributivity_violation(l: &Lattice) -> Option<String> {
    for x in l.elements() {
        for y in l.elements() {
            let xy = l.meet(x, y);
            for z in y..l.size() {
                if l.meet(x, z) == xy && l.meet(x, l.join(y, z)) != xy {
                    return Some(format!(
                        "{x}∧{y} = {x}∧{z} = {xy} but {x}∧({y}∨{z}) = {}",
                        l.meet(x, l.join(y, z))
                    ));
                }
            }
        }
    }
    None
}

pub fn is_semimodular(l: &Lattice) -> bool {
    semimodularity_violation(l).is_none()
}

pub fn is_meet_semidistributive(l: &Lattice) -> bool {
    meet_semidistributivity_violation(l).is_none()
}

/// A diamond sublattice as `[bottom, x, y, z, top]`.
pub fn find_diamond(l: &Lattice) -> Option<[usize; 5]> {
    for x in l.elements() {
        for y in x + 1..l.size() {
            if l.leq(x, y) || l.leq(y, x) {
                continue;
            }
            let (b, t) = (l.meet(x, y), l.join(x, y));
            for z in y + 1..l.size() {
                if l.meet(x, z) == b && l.meet(y, z) == b && l.join(x, z) == t && l.join(y, z) == t
                {
                    return Some([b, x, y, z, t]);
                }
            }
        }
    }
    None
}

/// A diamond whose five covering relations are coverings of `l`.
pub fn find_cover_preserving_diamond(l: &Lattice) -> Option<[usize; 5]> {
    for b in l.elements() {
        let atoms = l.upper_covers(b);
        for (i, &x) in atoms.iter().enumerate() {
            for (j, &y) in atoms.iter().enumerate().skip(i + 1) {
                let t = l.join(x, y);
                if !l.is_cover(x, t) || !l.is_cover(y, t) {
                    continue;
                }
                for &z in &atoms[j + 1..] {
                    if l.join(x, z) == t && l.join(y, z) == t && l.is_cover(z, t) {
                        return Some([b, x, y, z, t]);
                    }
                }
            }
        }
    }
    None
}

pub fn has_diamond(l: &Lattice) -> bool {
    find_diamond(l).is_some()
}

pub fn has_cover_preserving_diamond(l: &Lattice) -> bool {
    find_cover_preserving_diamond(l).is_some()
}

fn upstar_distributivity_violation(l: &Lattice) -> Option<String> {
    for x in l.elements() {
        let iv = l.interval(x, l.up_star(x));
        for &a in &iv {
            for &b in &iv {
                for &c in &iv {
                    if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)) {
                        return Some(format!(
                            "[{x}, {}] is not distributive at ({a}, {b}, {c})",
                            l.up_star(x)
                        ));
                    }
                }
            }
        }
    }
    None
}

fn upstar_booleanity_violation(l: &Lattice) -> Option<String> {
    for x in l.elements() {
        let star = l.up_star(x);
        let atoms = l.upper_covers(x);
        let t = atoms.len();
        let iv = l.interval(x, star);
        let fail = || Some(format!("[{x}, {star}] is not boolean of rank {t}"));
        if t >= usize::BITS as usize || iv.len() != 1usize << t {
            return fail();
        }
        let images: Vec<usize> = (0..1usize << t)
            .map(|s| {
                l.join_all(
                    (0..t)
                        .filter(|i| s & (1 << i) != 0)
                        .map(|i| atoms[i])
                        .chain([x]),
                )
            })
            .collect();
        for s in 0..images.len() {
            for r in 0..images.len() {
                if (s & r == s) != l.leq(images[s], images[r]) {
                    return fail();
                }
            }
        }
    }
    None
}

pub fn upstar_interval_is_distributive(l: &Lattice) -> bool {
    upstar_distributivity_violation(l).is_none()
}

pub fn upstar_interval_is_boolean(l: &Lattice) -> bool {
    upstar_booleanity_violation(l).is_none()
}

fn shortest_chain_length(l: &Lattice) -> usize {
    let mut dist = vec![usize::MAX; l.size()];
    dist[l.bottom()] = 0;
    let mut queue = VecDeque::from([l.bottom()]);
    while let Some(x) = queue.pop_front() {
        for &y in l.upper_covers(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist[l.top()]
}

fn chain_length_violation(l: &Lattice) -> Option<String> {
    let mir = l.meet_irreducibles().len();
    let (lo, hi) = (shortest_chain_length(l), l.length());
    (lo != mir || hi != mir)
        .then(|| format!("maximal chains have lengths {lo}..={hi} but |Mir L| = {mir}"))
}

/// Every maximal chain has length `|Mir L|`. Uses shortest and longest
/// bottom-to-top paths rather than enumerating chains.
pub fn maximal_chain_lengths_equal_mir(l: &Lattice) -> bool {
    chain_length_violation(l).is_none()
}

/// Irredundant meet-decompositions of `x` by meet-irreducibles, stopping
/// once `limit` have been found.
pub fn irredundant_meet_decompositions(l: &Lattice, x: usize, limit: usize) -> Vec<Vec<usize>> {
    let above: Vec<usize> = l
        .meet_irreducibles()
        .into_iter()
        .filter(|&m| l.leq(x, m))
        .collect();
    let mut found = Vec::new();
    // Subsets of irredundant sets are irredundant, so a depth-first search
    // that only extends irredundant sets reaches all of them.
    fn irredundant(l: &Lattice, set: &[usize]) -> bool {
        let whole = l.meet_all(set.iter().copied());
        (0..set.len()).all(|i| {
            l.meet_all(
                set.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| v),
            ) != whole
        })
    }
    fn dfs(
        l: &Lattice,
        x: usize,
        above: &[usize],
        start: usize,
        current: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if found.len() >= limit {
            return;
        }
        if l.meet_all(current.iter().copied()) == x {
            found.push(current.clone());
            return;
        }
        for i in start..above.len() {
            current.push(above[i]);
            if irredundant(l, current) {
                dfs(l, x, above, i + 1, current, found, limit);
            }
            current.pop();
        }
    }
    dfs(l, x, &above, 0, &mut Vec::new(), &mut found, limit);
    found
}

fn meet_decomposition_violation(l: &Lattice) -> Option<String> {
    for x in l.elements() {
        let decomps = irredundant_meet_decompositions(l, x, 2);
        if decomps.len() != 1 {
            return Some(format!(
                "element {x} has {} irredundant meet-decompositions: {decomps:?}",
                if decomps.len() > 1 { "several" } else { "no" }
            ));
        }
    }
    None
}

pub fn has_unique_meet_decompositions(l: &Lattice) -> bool {
    meet_decomposition_violation(l).is_none()
}

/// Runs all seven characterizations and insists they agree. For
/// join-distributive input the report carries the embedding of
/// [`embed_into_boolean`]; the feet embedding over a chain system covering
/// `Jir L` is verified as well.
pub fn is_join_distributive(l: &Lattice) -> Result<JdReport, JdError> {
    let semimodular = semimodularity_violation(l);
    let verdict_of = |c: Characterization| -> Option<String> {
        use Characterization::*;
        match c {
            SemimodularMeetSemidistributive => semimodular
                .clone()
                .or_else(|| meet_semidistributivity_violation(l)),
            UniqueMeetDecompositions => meet_decomposition_violation(l),
            UpstarDistributive => upstar_distributivity_violation(l),
            UpstarBoolean => upstar_booleanity_violation(l),
            ChainLengthsEqualMir => chain_length_violation(l),
            SemimodularDiamondFree => semimodular
                .clone()
                .or_else(|| find_diamond(l).map(|d| format!("diamond {d:?}"))),
            SemimodularNoCoverDiamond => semimodular.clone().or_else(|| {
                find_cover_preserving_diamond(l).map(|d| format!("cover-preserving diamond {d:?}"))
            }),
        }
    };

    let mut verdicts = BTreeMap::new();
    let mut witness = None;
    for c in Characterization::ALL {
        let violation = verdict_of(c);
        verdicts.insert(c, violation.is_none());
        if witness.is_none() {
            witness = violation.map(|w| format!("({}) {w}", c.tag()));
        }
    }
    let join_distributive = verdicts[&Characterization::SemimodularMeetSemidistributive];
    let mut report = JdReport {
        verdicts,
        witness,
        join_distributive,
        embedding: None,
    };
    if report.verdicts.values().any(|&v| v != join_distributive) {
        return Err(JdError::EquivalenceViolated(Box::new(report)));
    }
    if join_distributive {
        verified_feet_embedding(l, &chains_covering_jir(l))?;
        report.embedding = Some(
            verified_boolean_embedding(l)?
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        );
    }
    Ok(report)
}

/// Join-distributivity of the order dual.
pub fn is_meet_distributive(l: &Lattice) -> Result<bool, JdError> {
    Ok(is_join_distributive(&l.dual())?.join_distributive)
}

/// `u ↦ feet(u)` into the `k`-th power of the `(n+1)`-element chain. The
/// map is checked to be an order-embedding that sends meets to
/// componentwise minima and covers to covers of its image. Joins are in
/// general not componentwise maxima.
pub fn embed_into_power_chain(l: &Lattice, chains: &[Chain]) -> Result<Vec<Vec<usize>>, JdError> {
    if semimodularity_violation(l).is_some() || meet_semidistributivity_violation(l).is_some() {
        return Err(JdError::NotJoinDistributive);
    }
    verified_feet_embedding(l, chains)
}

fn verified_feet_embedding(l: &Lattice, chains: &[Chain]) -> Result<Vec<Vec<usize>>, JdError> {
    let uncovered: Vec<usize> = l
        .join_irreducibles()
        .into_iter()
        .filter(|&x| !chains.iter().any(|c| c.contains(x)))
        .collect();
    if !uncovered.is_empty() {
        return Err(JdError::ChainsDontCoverJir(uncovered));
    }
    let feet: Vec<Vec<usize>> = l.elements().map(|u| feet_in(l, chains, u)).collect();

    let distinct: BTreeSet<&Vec<usize>> = feet.iter().collect();
    if distinct.len() != l.size() {
        return Err(JdError::EmbeddingInvalid(
            "feet map is not injective".into(),
        ));
    }
    let below = |a: &[usize], b: &[usize]| a.iter().zip(b).all(|(x, y)| x <= y);
    for u in l.elements() {
        for v in l.elements() {
            if l.leq(u, v) != below(&feet[u], &feet[v]) {
                return Err(JdError::EmbeddingInvalid(format!(
                    "feet does not reflect the order between {u} and {v}"
                )));
            }
            let min: Vec<usize> = feet[u]
                .iter()
                .zip(&feet[v])
                .map(|(a, b)| *a.min(b))
                .collect();
            if feet[l.meet(u, v)] != min {
                return Err(JdError::EmbeddingInvalid(format!(
                    "feet({u}∧{v}) = {:?} differs from {min:?}",
                    feet[l.meet(u, v)]
                )));
            }
        }
    }
    for &(u, v) in l.covers() {
        let strictly_between = feet
            .iter()
            .any(|w| w != &feet[u] && w != &feet[v] && below(&feet[u], w) && below(w, &feet[v]));
        if !below(&feet[u], &feet[v]) || strictly_between {
            return Err(JdError::EmbeddingInvalid(format!(
                "cover {u} ≺ {v} is not a cover of the image"
            )));
        }
    }
    Ok(feet)
}

/// `x ↦ Mir L ∖ ↑x` into the boolean lattice on `Mir L`, checked to be
/// injective, join-to-union, and cover-preserving in the full powerset.
pub fn embed_into_boolean(l: &Lattice) -> Result<Vec<BTreeSet<usize>>, JdError> {
    if semimodularity_violation(l).is_some() || meet_semidistributivity_violation(l).is_some() {
        return Err(JdError::NotJoinDistributive);
    }
    verified_boolean_embedding(l)
}

fn verified_boolean_embedding(l: &Lattice) -> Result<Vec<BTreeSet<usize>>, JdError> {
    let mir = l.meet_irreducibles();
    let image: Vec<BTreeSet<usize>> = l
        .elements()
        .map(|x| mir.iter().copied().filter(|&m| !l.leq(x, m)).collect())
        .collect();
    if image.iter().collect::<BTreeSet<_>>().len() != l.size() {
        return Err(JdError::EmbeddingInvalid(
            "boolean image is not injective".into(),
        ));
    }
    for u in l.elements() {
        for v in l.elements() {
            let union: BTreeSet<usize> = image[u].union(&image[v]).copied().collect();
            if image[l.join(u, v)] != union {
                return Err(JdError::EmbeddingInvalid(format!(
                    "{u}∨{v} does not map to a union"
                )));
            }
        }
    }
    for &(u, v) in l.covers() {
        if !image[u].is_subset(&image[v]) || image[v].len() != image[u].len() + 1 {
            return Err(JdError::EmbeddingInvalid(format!(
                "cover {u} ≺ {v} is not preserved"
            )));
        }
    }
    Ok(image)
}
