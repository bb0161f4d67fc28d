//! Antimatroids and convex geometries, and their translation to and from
//! join- and meet-distributive lattices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coords::{eta, suborbital_vectors, PermVector};
use crate::jd::{self, JdError};
use crate::poset::Lattice;

pub type PointSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("point label {0:?} appears twice in the ground set")]
    DuplicateLabel(String),
    #[error("member uses unknown point {0:?}")]
    UnknownPoint(String),
    #[error("the family of sets is empty")]
    EmptyFamily,
    #[error("lattice is not join-distributive")]
    NotJoinDistributive,
    #[error("lattice is not meet-distributive")]
    NotMeetDistributive,
    #[error("axiom violated: {0}")]
    Axiom(Violation),
    #[error(transparent)]
    Jd(#[from] JdError),
}

/// A finite ground set of labelled points with a nonempty family of subsets.
/// Points are stored as indices into the sorted label list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SetSystemJson", into = "SetSystemJson")]
pub struct SetSystem {
    ground: Vec<String>,
    family: BTreeSet<PointSet>,
}

#[derive(Serialize, Deserialize)]
struct SetSystemJson {
    ground: Vec<String>,
    family: Vec<Vec<String>>,
}

impl TryFrom<SetSystemJson> for SetSystem {
    type Error = StructureError;

    fn try_from(raw: SetSystemJson) -> Result<Self, StructureError> {
        SetSystem::new(raw.ground, raw.family)
    }
}

impl From<SetSystem> for SetSystemJson {
    fn from(s: SetSystem) -> Self {
        let family = s.family.iter().map(|m| s.labels_of(m)).collect();
        SetSystemJson {
            ground: s.ground,
            family,
        }
    }
}

impl SetSystem {
    pub fn new<S: Into<String>>(
        ground: Vec<S>,
        family: Vec<Vec<S>>,
    ) -> Result<Self, StructureError> {
        let mut labels: Vec<String> = ground.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(StructureError::DuplicateLabel(w[0].clone()));
        }
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut members = BTreeSet::new();
        for member in family {
            let mut set = PointSet::new();
            for p in member {
                let p: String = p.into();
                let &i = index
                    .get(p.as_str())
                    .ok_or(StructureError::UnknownPoint(p.clone()))?;
                set.insert(i);
            }
            members.insert(set);
        }
        Self::from_indices(labels, members)
    }

    fn from_indices(
        ground: Vec<String>,
        family: BTreeSet<PointSet>,
    ) -> Result<Self, StructureError> {
        if family.is_empty() {
            return Err(StructureError::EmptyFamily);
        }
        Ok(SetSystem { ground, family })
    }

    /// Relabels points with arbitrary labels, re-sorting into canonical form.
    fn relabelled(labels: Vec<String>, family: impl IntoIterator<Item = PointSet>) -> Self {
        let order: Vec<usize> = (0..labels.len())
            .sorted_by(|&a, &b| labels[a].cmp(&labels[b]))
            .collect();
        let mut new_index = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let ground = order.iter().map(|&i| labels[i].clone()).collect();
        let family = family
            .into_iter()
            .map(|m| m.iter().map(|&p| new_index[p]).collect())
            .collect();
        SetSystem::from_indices(ground, family).expect("nonempty family")
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn family(&self) -> &BTreeSet<PointSet> {
        &self.family
    }

    pub fn labels_of(&self, set: &PointSet) -> Vec<String> {
        set.iter().map(|&i| self.ground[i].clone()).collect()
    }

    fn full(&self) -> PointSet {
        (0..self.ground.len()).collect()
    }

    /// The system of complements `{E ∖ X : X ∈ F}`.
    pub fn complement(&self) -> SetSystem {
        let full = self.full();
        let family = self
            .family
            .iter()
            .map(|m| full.difference(m).copied().collect())
            .collect();
        SetSystem {
            ground: self.ground.clone(),
            family,
        }
    }

    /// The family ordered by inclusion; element `i` is the `i`-th member in
    /// the family's canonical order.
    pub fn inclusion_lattice(&self) -> Result<Lattice, StructureError> {
        let members: Vec<&PointSet> = self.family.iter().collect();
        Lattice::from_order(members.len(), |a, b| members[a].is_subset(members[b])).map_err(|e| {
            StructureError::Axiom(Violation::new(
                Axiom::NotALattice,
                vec![vec![e.to_string()]],
            ))
        })
    }

    fn closure_of(&self, x: &PointSet) -> PointSet {
        self.family
            .iter()
            .filter(|m| x.is_subset(m))
            .fold(None, |acc: Option<PointSet>, m| {
                Some(match acc {
                    None => m.clone(),
                    Some(a) => a.intersection(m).copied().collect(),
                })
            })
            .unwrap_or_else(|| self.full())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// The family is empty.
    Nonempty,
    /// Some nonempty feasible set has no removable point.
    Accessible,
    UnionClosed,
    /// Points lying in no feasible set.
    NoDummyPoints,
    IntersectionClosed,
    ContainsGround,
    /// The closure of the empty set is not empty.
    EmptyClosure,
    AntiExchange,
    /// Some closed `B ≠ E` has no one-point closed extension.
    OnePointExtension,
    NotALattice,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Nonempty => "nonempty family",
            Axiom::Accessible => "accessibility",
            Axiom::UnionClosed => "union closure",
            Axiom::NoDummyPoints => "no dummy points",
            Axiom::IntersectionClosed => "intersection closure",
            Axiom::ContainsGround => "ground set is closed",
            Axiom::EmptyClosure => "empty set is closed",
            Axiom::AntiExchange => "anti-exchange",
            Axiom::OnePointExtension => "one-point extension",
            Axiom::NotALattice => "inclusion order is a lattice",
        };
        f.write_str(name)
    }
}

/// A failed axiom together with the sets that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Vec<String>>,
}

impl Violation {
    fn new(axiom: Axiom, witness: Vec<Vec<String>>) -> Self {
        Violation { axiom, witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (witness {:?})", self.axiom, self.witness)
    }
}

pub fn check_antimatroid(s: &SetSystem) -> Result<(), Violation> {
    let w = |sets: &[&PointSet]| sets.iter().map(|m| s.labels_of(m)).collect::<Vec<_>>();
    if s.family.is_empty() {
        return Err(Violation::new(Axiom::Nonempty, vec![]));
    }
    for a in &s.family {
        if !a.is_empty()
            && !a.iter().any(|x| {
                let mut smaller = a.clone();
                smaller.remove(x);
                s.family.contains(&smaller)
            })
        {
            return Err(Violation::new(Axiom::Accessible, w(&[a])));
        }
    }
    for (a, b) in s.family.iter().tuple_combinations() {
        let union: PointSet = a.union(b).copied().collect();
        if !s.family.contains(&union) {
            return Err(Violation::new(Axiom::UnionClosed, w(&[a, b])));
        }
    }
    let covered: PointSet = s.family.iter().flatten().copied().collect();
    let dummies: PointSet = s.full().difference(&covered).copied().collect();
    if !dummies.is_empty() {
        return Err(Violation::new(Axiom::NoDummyPoints, w(&[&dummies])));
    }
    Ok(())
}

pub fn check_convex_geometry(s: &SetSystem) -> Result<(), Violation> {
    let w = |sets: &[&PointSet]| sets.iter().map(|m| s.labels_of(m)).collect::<Vec<_>>();
    let full = s.full();
    if !s.family.contains(&full) {
        return Err(Violation::new(Axiom::ContainsGround, vec![]));
    }
    for (a, b) in s.family.iter().tuple_combinations() {
        let meet: PointSet = a.intersection(b).copied().collect();
        if !s.family.contains(&meet) {
            return Err(Violation::new(Axiom::IntersectionClosed, w(&[a, b])));
        }
    }
    let empty_closure = s.closure_of(&PointSet::new());
    if !empty_closure.is_empty() {
        return Err(Violation::new(Axiom::EmptyClosure, w(&[&empty_closure])));
    }
    for a in &s.family {
        let outside: Vec<usize> = full.difference(a).copied().collect();
        for (&x, &y) in outside.iter().tuple_combinations() {
            let with = |p: usize| {
                let mut set = a.clone();
                set.insert(p);
                s.closure_of(&set)
            };
            if with(y).contains(&x) && with(x).contains(&y) {
                let (px, py) = (PointSet::from([x]), PointSet::from([y]));
                return Err(Violation::new(Axiom::AntiExchange, w(&[a, &px, &py])));
            }
        }
    }
    for b in s.family.iter().filter(|b| **b != full) {
        let extendable = full.difference(b).any(|&x| {
            let mut bigger = b.clone();
            bigger.insert(x);
            s.family.contains(&bigger)
        });
        if !extendable {
            return Err(Violation::new(Axiom::OnePointExtension, w(&[b])));
        }
    }
    Ok(())
}

/// A set system whose family is accessible, union-closed, and covers the
/// ground set (dummy points are rejected).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antimatroid(SetSystem);

/// A closure system with the anti-exchange property and `Φ(∅) = ∅`; the
/// family holds the closed sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexGeometry(SetSystem);

impl Antimatroid {
    pub fn new(s: SetSystem) -> Result<Self, Violation> {
        check_antimatroid(&s)?;
        Ok(Antimatroid(s))
    }

    pub fn system(&self) -> &SetSystem {
        &self.0
    }

    /// The complements of the feasible sets.
    pub fn dual(&self) -> ConvexGeometry {
        ConvexGeometry(self.0.complement())
    }
}

impl ConvexGeometry {
    pub fn new(s: SetSystem) -> Result<Self, Violation> {
        check_convex_geometry(&s)?;
        Ok(ConvexGeometry(s))
    }

    pub fn system(&self) -> &SetSystem {
        &self.0
    }

    /// `Φ(X)`, the least closed set containing `X`.
    pub fn closure(&self, x: &PointSet) -> PointSet {
        self.0.closure_of(x)
    }

    /// The complements of the closed sets.
    pub fn dual(&self) -> Antimatroid {
        Antimatroid(self.0.complement())
    }
}

/// Complementation of every member, the same ground set.
pub fn dualize(s: &SetSystem) -> SetSystem {
    s.complement()
}

/// The feasible sets under inclusion.
pub fn halojd(a: &Antimatroid) -> Lattice {
    a.0.inclusion_lattice()
        .expect("feasible sets of an antimatroid form a lattice")
}

/// The closed sets under inclusion.
pub fn halomd(g: &ConvexGeometry) -> Lattice {
    g.0.inclusion_lattice()
        .expect("closed sets of a convex geometry form a lattice")
}

/// Ground set `Mir L`, feasible sets `Mir L ∖ ↑x`. Points are labelled by
/// element id.
pub fn amat(l: &Lattice) -> Result<Antimatroid, StructureError> {
    if !jd::is_join_distributive(l)?.join_distributive {
        return Err(StructureError::NotJoinDistributive);
    }
    let mir = l.meet_irreducibles();
    let labels = mir.iter().map(|m| m.to_string()).collect();
    let family = l
        .elements()
        .map(|x| (0..mir.len()).filter(|&i| !l.leq(x, mir[i])).collect());
    Ok(Antimatroid(SetSystem::relabelled(labels, family)))
}

/// Ground set `Jir L`, closed sets `Jir L ∩ ↓x`. Points are labelled by
/// element id.
pub fn geom(l: &Lattice) -> Result<ConvexGeometry, StructureError> {
    if !jd::is_meet_distributive(l)? {
        return Err(StructureError::NotMeetDistributive);
    }
    let jir = l.join_irreducibles();
    let labels = jir.iter().map(|j| j.to_string()).collect();
    let family = l
        .elements()
        .map(|x| (0..jir.len()).filter(|&i| l.leq(jir[i], x)).collect());
    Ok(ConvexGeometry(SetSystem::relabelled(labels, family)))
}

/// Renders a coordinate vector as a point label, e.g. `(0,1)`.
pub fn vector_label(v: &[usize]) -> String {
    format!("({})", v.iter().join(","))
}

/// `A(π)`: ground set `B(π)`, feasible sets `U(x) = {y ∈ B(π) : x ≰ y}`
/// for `x` eligible.
pub fn antimatroid_from_perms(v: &PermVector) -> Antimatroid {
    let b = suborbital_vectors(v);
    let tuples = eta(v).tuples;
    let labels = b.iter().map(|y| vector_label(y)).collect();
    let family = tuples.iter().map(|x| {
        (0..b.len())
            .filter(|&i| !x.iter().zip(&b[i]).all(|(p, q)| p <= q))
            .collect::<PointSet>()
    });
    Antimatroid(SetSystem::relabelled(labels, family))
}

/// Width of the join-irreducibles of the feasible-set lattice.
pub fn convex_dimension(a: &Antimatroid) -> usize {
    let l = halojd(a);
    l.width(&l.join_irreducibles())
}

/// A bijection of ground sets carrying one family onto the other, found by
/// backtracking with degree pruning.
pub fn find_set_system_isomorphism(a: &SetSystem, b: &SetSystem) -> Option<Vec<usize>> {
    let n = a.ground.len();
    if n != b.ground.len() || a.family.len() != b.family.len() {
        return None;
    }
    let sizes = |s: &SetSystem| {
        s.family
            .iter()
            .map(BTreeSet::len)
            .sorted()
            .collect::<Vec<_>>()
    };
    if sizes(a) != sizes(b) {
        return None;
    }
    let degree = |s: &SetSystem, p: usize| s.family.iter().filter(|m| m.contains(&p)).count();
    let together = |s: &SetSystem, p: usize, q: usize| {
        s.family
            .iter()
            .filter(|m| m.contains(&p) && m.contains(&q))
            .count()
    };

    fn search(
        p: usize,
        a: &SetSystem,
        b: &SetSystem,
        image: &mut Vec<usize>,
        used: &mut [bool],
        degree: &dyn Fn(&SetSystem, usize) -> usize,
        together: &dyn Fn(&SetSystem, usize, usize) -> usize,
    ) -> bool {
        if p == a.ground.len() {
            let mapped: BTreeSet<PointSet> = a
                .family
                .iter()
                .map(|m| m.iter().map(|&x| image[x]).collect())
                .collect();
            return mapped == b.family;
        }
        for q in 0..b.ground.len() {
            if used[q] || degree(a, p) != degree(b, q) {
                continue;
            }
            if (0..p).any(|r| together(a, r, p) != together(b, image[r], q)) {
                continue;
            }
            image.push(q);
            used[q] = true;
            if search(p + 1, a, b, image, used, degree, together) {
                return true;
            }
            image.pop();
            used[q] = false;
        }
        false
    }

    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(0, a, b, &mut image, &mut used, &degree, &together).then_some(image)
}

pub fn set_systems_isomorphic(a: &SetSystem, b: &SetSystem) -> bool {
    find_set_system_isomorphism(a, b).is_some()
}
