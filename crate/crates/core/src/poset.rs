//! Finite lattices given by their covering relation.
//!
//! Elements are dense ids `0..size`. Construction validates the whole
//! structure up front (acyclic, transitively reduced, unique bounds, all
//! joins and meets exist), so every query afterwards is infallible.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Join and meet tables are materialized up to this many elements.
const TABLE_LIMIT: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Join => f.write_str("join"),
            BoundKind::Meet => f.write_str("meet"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("element id {0} is out of range for {1} elements")]
    InvalidElement(usize, usize),
    #[error("the covering relation has a cycle through element {0}")]
    CycleDetected(usize),
    #[error("pair ({0}, {1}) follows by transitivity and is not a cover")]
    NotTransitivelyReduced(usize, usize),
    #[error("elements {a} and {b} have no {kind}")]
    NoUniqueBound { a: usize, b: usize, kind: BoundKind },
    #[error("more than one minimal element: {0:?}")]
    MultipleBottoms(Vec<usize>),
    #[error("more than one maximal element: {0:?}")]
    MultipleTops(Vec<usize>),
    #[error("{0:?} is not a maximal chain")]
    NotAMaximalChain(Vec<usize>),
}

/// A finite lattice.
#[derive(Debug, Clone)]
pub struct Lattice {
    size: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    height: Vec<usize>,
    bottom: usize,
    top: usize,
    join_table: Option<Vec<u32>>,
    meet_table: Option<Vec<u32>>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.covers == other.covers
    }
}

impl Eq for Lattice {}

fn least_of(set: &FixedBitSet, up: &[FixedBitSet], height: &[usize]) -> Option<usize> {
    let cand = set.ones().min_by_key(|&x| height[x])?;
    set.is_subset(&up[cand]).then_some(cand)
}

fn greatest_of(set: &FixedBitSet, down: &[FixedBitSet], height: &[usize]) -> Option<usize> {
    let cand = set.ones().max_by_key(|&x| height[x])?;
    set.is_subset(&down[cand]).then_some(cand)
}

impl Lattice {
    /// Builds and validates a lattice from its covering pairs `(a, b)`, read
    /// as `a ≺ b`. Duplicate pairs are ignored.
    pub fn from_covers(size: usize, pairs: &[(usize, usize)]) -> Result<Self, LatticeError> {
        if size == 0 {
            return Err(LatticeError::Empty);
        }
        let mut covers = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= size {
                    return Err(LatticeError::InvalidElement(x, size));
                }
            }
            if a == b {
                return Err(LatticeError::CycleDetected(a));
            }
            covers.push((a, b));
        }
        covers.sort_unstable();
        covers.dedup();

        let mut upper = vec![Vec::new(); size];
        let mut lower = vec![Vec::new(); size];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        for list in lower.iter_mut() {
            list.sort_unstable();
        }

        // Kahn's algorithm, smallest id first so the order is deterministic.
        let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut ready: BTreeSet<usize> = (0..size).filter(|&x| indegree[x] == 0).collect();
        let mut topo = Vec::with_capacity(size);
        while let Some(x) = ready.pop_first() {
            topo.push(x);
            for &y in &upper[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        if topo.len() < size {
            let stuck = (0..size).find(|&x| indegree[x] > 0).unwrap_or(0);
            return Err(LatticeError::CycleDetected(stuck));
        }

        let mut down = vec![FixedBitSet::with_capacity(size); size];
        let mut height = vec![0usize; size];
        for &x in &topo {
            let mut set = FixedBitSet::with_capacity(size);
            set.insert(x);
            for &l in &lower[x] {
                set.union_with(&down[l]);
                height[x] = height[x].max(height[l] + 1);
            }
            down[x] = set;
        }
        let mut up = vec![FixedBitSet::with_capacity(size); size];
        for &x in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(size);
            set.insert(x);
            for &u in &upper[x] {
                set.union_with(&up[u]);
            }
            up[x] = set;
        }

        for &(a, b) in &covers {
            if upper[a].iter().any(|&x| x != b && up[x].contains(b)) {
                return Err(LatticeError::NotTransitivelyReduced(a, b));
            }
        }

        let bottoms: Vec<usize> = (0..size).filter(|&x| lower[x].is_empty()).collect();
        if bottoms.len() != 1 {
            return Err(LatticeError::MultipleBottoms(bottoms));
        }
        let tops: Vec<usize> = (0..size).filter(|&x| upper[x].is_empty()).collect();
        if tops.len() != 1 {
            return Err(LatticeError::MultipleTops(tops));
        }

        let tabulate = size <= TABLE_LIMIT;
        let mut join_table = tabulate.then(|| vec![0u32; size * size]);
        let mut meet_table = tabulate.then(|| vec![0u32; size * size]);
        let mut scratch = FixedBitSet::with_capacity(size);
        for a in 0..size {
            for b in a..size {
                scratch.clone_from(&up[a]);
                scratch.intersect_with(&up[b]);
                let j = least_of(&scratch, &up, &height).ok_or(LatticeError::NoUniqueBound {
                    a,
                    b,
                    kind: BoundKind::Join,
                })?;
                scratch.clone_from(&down[a]);
                scratch.intersect_with(&down[b]);
                let m =
                    greatest_of(&scratch, &down, &height).ok_or(LatticeError::NoUniqueBound {
                        a,
                        b,
                        kind: BoundKind::Meet,
                    })?;
                if let (Some(jt), Some(mt)) = (join_table.as_mut(), meet_table.as_mut()) {
                    jt[a * size + b] = j as u32;
                    jt[b * size + a] = j as u32;
                    mt[a * size + b] = m as u32;
                    mt[b * size + a] = m as u32;
                }
            }
        }

        Ok(Lattice {
            size,
            covers,
            upper,
            lower,
            up,
            down,
            height,
            bottom: bottoms[0],
            top: tops[0],
            join_table,
            meet_table,
        })
    }

    /// Builds a lattice on `0..size` from an order predicate, taking the
    /// transitive reduction as the covering relation.
    pub fn from_order<F>(size: usize, leq: F) -> Result<Self, LatticeError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let lt = |a: usize, b: usize| a != b && leq(a, b);
        let mut covers = Vec::new();
        for a in 0..size {
            for b in 0..size {
                if lt(a, b) && !(0..size).any(|c| lt(a, c) && lt(c, b)) {
                    covers.push((a, b));
                }
            }
        }
        Self::from_covers(size, &covers)
    }

    /// The subposet on `elems` (element `i` of the result is `elems[i]`),
    /// provided it is a lattice in its own right.
    pub fn induced(&self, elems: &[usize]) -> Result<Self, LatticeError> {
        Self::from_order(elems.len(), |a, b| self.leq(elems[a], elems[b]))
    }

    /// The order dual.
    pub fn dual(&self) -> Self {
        let flipped: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Self::from_covers(self.size, &flipped).expect("dual of a lattice is a lattice")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Covering pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper[a].binary_search(&b).is_ok()
    }

    /// The principal filter `↑x` as a bit set over element ids.
    pub fn filter(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// The principal ideal `↓x` as a bit set over element ids.
    pub fn ideal(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        match &self.join_table {
            Some(t) => t[a * self.size + b] as usize,
            None => {
                let mut ub = self.up[a].clone();
                ub.intersect_with(&self.up[b]);
                least_of(&ub, &self.up, &self.height).expect("validated lattice")
            }
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        match &self.meet_table {
            Some(t) => t[a * self.size + b] as usize,
            None => {
                let mut lb = self.down[a].clone();
                lb.intersect_with(&self.down[b]);
                greatest_of(&lb, &self.down, &self.height).expect("validated lattice")
            }
        }
    }

    /// Join of any number of elements; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, elems: I) -> usize {
        elems
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of any number of elements; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, elems: I) -> usize {
        elems.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn length(&self) -> usize {
        self.height[self.top]
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.lower[x].len() == 1)
            .collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.upper[x].len() == 1)
            .collect()
    }

    /// `x*`, the join of all upper covers of `x` (`x` itself for the top).
    pub fn up_star(&self, x: usize) -> usize {
        self.upper[x].iter().fold(x, |acc, &c| self.join(acc, c))
    }

    /// Elements of the interval `[lo, hi]`, ascending by id.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        let mut set = self.up[lo].clone();
        set.intersect_with(&self.down[hi]);
        set.ones().collect()
    }

    /// Every maximal chain exactly once, in lexicographic order of the
    /// element id sequences.
    pub fn maximal_chains(&self) -> MaximalChains<'_> {
        MaximalChains {
            lattice: self,
            path: vec![self.bottom],
            cursor: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// Smallest superset of `subset` closed under binary joins.
    pub fn join_closure(&self, subset: &[usize]) -> BTreeSet<usize> {
        let mut closed: BTreeSet<usize> = subset.iter().copied().collect();
        let mut frontier: Vec<usize> = closed.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            let current: Vec<usize> = closed.iter().copied().collect();
            for y in current {
                let j = self.join(x, y);
                if closed.insert(j) {
                    frontier.push(j);
                }
            }
        }
        closed
    }

    /// Size of a largest antichain inside `subset`, via Dilworth's theorem:
    /// `|S|` minus a maximum matching in the strict-order bipartite graph.
    pub fn width(&self, subset: &[usize]) -> usize {
        self.chain_partition(subset).len()
    }

    /// A partition of `subset` into the minimum number of chains, each
    /// listed in ascending order.
    pub fn chain_partition(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let elems: Vec<usize> = subset
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let adj: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| (0..elems.len()).filter(|&j| self.lt(a, elems[j])).collect())
            .collect();
        let owner = max_bipartite_matching(&adj, elems.len());
        let mut next = vec![None; elems.len()];
        for (r, o) in owner.iter().enumerate() {
            if let Some(l) = *o {
                next[l] = Some(r);
            }
        }
        (0..elems.len())
            .filter(|&r| owner[r].is_none())
            .map(|start| {
                let mut chain = vec![elems[start]];
                let mut cur = start;
                while let Some(r) = next[cur] {
                    chain.push(elems[r]);
                    cur = r;
                }
                chain
            })
            .collect()
    }
}

/// Kuhn's augmenting-path matching; `adj[l]` lists right vertices.
/// Returns, for each right vertex, its matched left vertex.
fn max_bipartite_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none_or(|o| augment(o, adj, seen, owner)) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right];
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(l, adj, &mut seen, &mut owner);
    }
    owner
}

/// A maximal chain `0 = c_0 ≺ c_1 ≺ … ≺ c_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain(Vec<usize>);

impl Chain {
    pub fn new(lattice: &Lattice, elems: Vec<usize>) -> Result<Self, LatticeError> {
        let ok = elems.first() == Some(&lattice.bottom())
            && elems.last() == Some(&lattice.top())
            && elems.iter().all(|&x| x < lattice.size())
            && elems.windows(2).all(|w| lattice.is_cover(w[0], w[1]));
        if ok {
            Ok(Chain(elems))
        } else {
            Err(LatticeError::NotAMaximalChain(elems))
        }
    }

    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    /// Number of covering steps.
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    /// `c_i`, for `i` in `0..=length`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    /// Prime intervals `[c_{i-1}, c_i]` for `i = 1..=length`.
    pub fn prime_intervals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }
}

pub struct MaximalChains<'a> {
    lattice: &'a Lattice,
    path: Vec<usize>,
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl MaximalChains<'_> {
    fn descend(&mut self) {
        while let Some(&x) = self.path.last() {
            if x == self.lattice.top {
                break;
            }
            self.path.push(self.lattice.upper[x][0]);
            self.cursor.push(0);
        }
    }
}

impl Iterator for MaximalChains<'_> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(Chain(self.path.clone()));
        }
        loop {
            let Some(c) = self.cursor.pop() else {
                self.done = true;
                return None;
            };
            self.path.pop();
            let parent = *self.path.last().expect("bottom stays on the path");
            let siblings = &self.lattice.upper[parent];
            if c + 1 < siblings.len() {
                self.path.push(siblings[c + 1]);
                self.cursor.push(c + 1);
                self.descend();
                return Some(Chain(self.path.clone()));
            }
        }
    }
}

/// Sorted per-element profile, equal for isomorphic lattices.
/// Sorted per-element isomorphism invariants.
pub type Profile = Vec<(usize, usize, usize, usize, usize)>;

pub fn invariant_profile(l: &Lattice) -> Profile {
    let mut profile: Vec<_> = l
        .elements()
        .map(|x| {
            (
                l.height(x),
                l.lower[x].len(),
                l.upper[x].len(),
                l.down[x].count_ones(..),
                l.up[x].count_ones(..),
            )
        })
        .collect();
    profile.sort_unstable();
    profile
}

/// An order isomorphism `a → b` if one exists (`iso[x]` is the image of
/// `x`). Exhaustive backtracking, pruned by per-element profiles.
pub fn find_isomorphism(a: &Lattice, b: &Lattice) -> Option<Vec<usize>> {
    if a.size != b.size || a.covers.len() != b.covers.len() {
        return None;
    }
    if invariant_profile(a) != invariant_profile(b) {
        return None;
    }
    let sig = |l: &Lattice, x: usize| {
        (
            l.height(x),
            l.lower[x].len(),
            l.upper[x].len(),
            l.down[x].count_ones(..),
            l.up[x].count_ones(..),
        )
    };
    let mut order: Vec<usize> = a.elements().collect();
    order.sort_by_key(|&x| (a.height(x), x));
    let candidates: Vec<Vec<usize>> = order
        .iter()
        .map(|&x| b.elements().filter(|&y| sig(b, y) == sig(a, x)).collect())
        .collect();

    fn search(
        depth: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        a: &Lattice,
        b: &Lattice,
        image: &mut [Option<usize>],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for &y in &candidates[depth] {
            if used[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&p| {
                let q = image[p].expect("assigned earlier");
                a.leq(p, x) == b.leq(q, y) && a.leq(x, p) == b.leq(y, q)
            });
            if !consistent {
                continue;
            }
            image[x] = Some(y);
            used[y] = true;
            if search(depth + 1, order, candidates, a, b, image, used) {
                return true;
            }
            image[x] = None;
            used[y] = false;
        }
        false
    }

    let mut image = vec![None; a.size];
    let mut used = vec![false; b.size];
    search(0, &order, &candidates, a, b, &mut image, &mut used)
        .then(|| image.into_iter().map(|y| y.expect("complete")).collect())
}

pub fn is_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Small named lattices used throughout tests and examples.
pub mod named {
    use super::Lattice;

    /// The chain `0 < 1 < … < n` of length `n`.
    pub fn chain(n: usize) -> Lattice {
        let covers: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
        Lattice::from_covers(n + 1, &covers).expect("chain")
    }

    /// The boolean lattice `2^t`; element ids are the subset bitmasks.
    pub fn boolean(t: usize) -> Lattice {
        let size = 1usize << t;
        let mut covers = Vec::new();
        for s in 0..size {
            for bit in 0..t {
                if s & (1 << bit) == 0 {
                    covers.push((s, s | (1 << bit)));
                }
            }
        }
        Lattice::from_covers(size, &covers).expect("boolean lattice")
    }

    /// The diamond: bottom 0, atoms 1, 2, 3, top 4.
    pub fn m3() -> Lattice {
        Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).expect("M3")
    }

    /// The pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    pub fn n5() -> Lattice {
        Lattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("N5")
    }

    /// The diamond with its top lifted by a two-step chain to a new top.
    pub fn m3_extended_top() -> Lattice {
        Lattice::from_covers(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (4, 5),
                (5, 6),
            ],
        )
        .expect("extended M3")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn trivial_lattice() {
        let l = Lattice::from_covers(1, &[]).unwrap();
        assert_eq!(l.bottom(), l.top());
        assert_eq!(l.length(), 0);
        assert_eq!(l.maximal_chains().count(), 1);
        assert_eq!(l.up_star(0), 0);
    }

    #[test]
    fn rejects_non_lattices() {
        assert_eq!(Lattice::from_covers(0, &[]), Err(LatticeError::Empty));
        assert_eq!(
            Lattice::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)]),
            Err(LatticeError::NotTransitivelyReduced(0, 2))
        );
        assert!(matches!(
            Lattice::from_covers(3, &[(0, 1), (1, 2), (2, 1)]),
            Err(LatticeError::CycleDetected(_))
        ));
        assert_eq!(
            Lattice::from_covers(3, &[(0, 2), (1, 2)]),
            Err(LatticeError::MultipleBottoms(vec![0, 1]))
        );
        assert_eq!(
            Lattice::from_covers(3, &[(0, 1), (0, 2)]),
            Err(LatticeError::MultipleTops(vec![1, 2]))
        );
        // Two atoms under two incomparable coatoms: no join for the atoms.
        let bowtie = [
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
        ];
        assert!(matches!(
            Lattice::from_covers(6, &bowtie),
            Err(LatticeError::NoUniqueBound {
                kind: BoundKind::Join,
                ..
            })
        ));
        assert_eq!(
            Lattice::from_covers(2, &[(0, 5)]),
            Err(LatticeError::InvalidElement(5, 2))
        );
    }

    #[test]
    fn diamond_joins_and_meets() {
        let m3 = m3();
        assert_eq!(m3.join(1, 2), 4);
        assert_eq!(m3.meet(1, 3), 0);
        assert_eq!(m3.meet(2, 2), 2);
        let c = chain(2);
        assert_eq!(c.join(1, 2), 2);
    }

    #[test]
    fn heights_and_irreducibles() {
        let b3 = boolean(3);
        assert_eq!(b3.length(), 3);
        assert_eq!(b3.height(b3.bottom()), 0);
        assert_eq!(m3().height(1), 1);
        assert_eq!(b3.join_irreducibles(), vec![1, 2, 4]);
        assert_eq!(b3.meet_irreducibles(), vec![3, 5, 6]);
        let c = chain(4);
        assert_eq!(c.join_irreducibles().len(), 4);
        assert_eq!(c.meet_irreducibles().len(), 4);
        assert_eq!(n5().length(), 3);
    }

    #[test]
    fn up_star_examples() {
        assert_eq!(boolean(3).up_star(0), 7);
        assert_eq!(m3().up_star(0), 4);
        let c = chain(3);
        for i in 0..3 {
            assert_eq!(c.up_star(i), i + 1);
        }
    }

    #[test]
    fn maximal_chain_counts() {
        assert_eq!(chain(3).maximal_chains().count(), 1);
        assert_eq!(boolean(3).maximal_chains().count(), 6);
        assert_eq!(m3().maximal_chains().count(), 3);
        let chains: Vec<_> = boolean(3).maximal_chains().collect();
        let mut sorted = chains.clone();
        sorted.sort();
        assert_eq!(chains, sorted);
        assert_eq!(chains[0].elems(), &[0, 1, 3, 7]);
    }

    #[test]
    fn join_closure_examples() {
        let b3 = boolean(3);
        assert_eq!(b3.join_closure(&[7]), BTreeSet::from([7]));
        assert_eq!(
            b3.join_closure(&[1, 2, 4]),
            BTreeSet::from([1, 2, 3, 4, 5, 6, 7])
        );
        let c = chain(4);
        assert_eq!(c.join_closure(&[1, 3]), BTreeSet::from([1, 3]));
    }

    #[test]
    fn width_examples() {
        assert_eq!(chain(4).width(&[0, 1, 2, 3, 4]), 1);
        let b3 = boolean(3);
        assert_eq!(b3.width(&b3.join_irreducibles()), 3);
        assert_eq!(b3.width(&[1, 2, 3, 4, 5, 6]), 3);
        assert_eq!(b3.width(&[]), 0);
    }

    #[test]
    fn chain_validation() {
        let b3 = boolean(3);
        assert!(Chain::new(&b3, vec![0, 1, 3, 7]).is_ok());
        assert!(Chain::new(&b3, vec![0, 3, 7]).is_err());
        assert!(Chain::new(&b3, vec![0, 1, 3]).is_err());
    }

    #[test]
    fn isomorphism_search() {
        assert!(is_isomorphic(
            &boolean(2),
            &m3().induced(&[0, 1, 2, 4]).unwrap()
        ));
        assert!(!is_isomorphic(&m3(), &n5()));
        assert!(is_isomorphic(&boolean(3), &boolean(3).dual()));
        let n5_dual = n5().dual();
        let iso = find_isomorphism(&n5(), &n5_dual).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(n5().leq(a, b), n5_dual.leq(iso[a], iso[b]));
            }
        }
    }

    #[test]
    fn induced_interval() {
        let b3 = boolean(3);
        let iv = b3.interval(1, 7);
        assert_eq!(iv, vec![1, 3, 5, 7]);
        assert!(is_isomorphic(&b3.induced(&iv).unwrap(), &boolean(2)));
    }
}
