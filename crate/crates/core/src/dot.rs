//! Hasse diagrams in Graphviz DOT.

use std::collections::BTreeMap;
use std::fmt::Write;

use itertools::Itertools;

use crate::coords::ChainedLattice;
use crate::poset::Lattice;

/// Nodes are labelled by `label(id)`, edges follow the covering pairs, and
/// nodes of equal height share a rank.
pub fn hasse_dot<F: Fn(usize) -> String>(l: &Lattice, label: F) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in l.elements() {
        writeln!(out, "  {x} [label=\"{}\"];", label(x)).unwrap();
    }
    for &(a, b) in l.covers() {
        writeln!(out, "  {a} -> {b} [arrowhead=none];").unwrap();
    }
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in l.elements() {
        ranks.entry(l.height(x)).or_default().push(x);
    }
    for level in ranks.values() {
        writeln!(out, "  {{ rank=same; {}; }}", level.iter().join("; ")).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn lattice_dot(l: &Lattice) -> String {
    hasse_dot(l, |x| x.to_string())
}

/// Nodes labelled by their feet vectors.
pub fn chained_dot(cl: &ChainedLattice) -> String {
    hasse_dot(cl.lattice(), |x| {
        format!("({})", cl.feet(x).iter().join(","))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::named::*;

    #[test]
    fn square() {
        let dot = lattice_dot(&boolean(2));
        assert_eq!(dot.matches("arrowhead").count(), 4);
        assert!(dot.contains("{ rank=same; 1; 2; }"));
        assert_eq!(dot, lattice_dot(&boolean(2)));
    }

    #[test]
    fn feet_labels() {
        let cl = ChainedLattice::new(boolean(2), vec![vec![0, 1, 3], vec![0, 2, 3]]).unwrap();
        let dot = chained_dot(&cl);
        assert!(dot.contains("1 [label=\"(1,0)\"]"));
        assert!(dot.contains("3 [label=\"(2,2)\"]"));
    }
}
