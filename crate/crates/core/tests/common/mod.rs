#![allow(dead_code)]

use std::collections::HashMap;

use jdlat::coords::{enumerate_perm_vectors, eta, PermVector, DEFAULT_MAX_CASES};
use jdlat::poset::{find_isomorphism, invariant_profile, named, Lattice, Profile};

/// Every permutation vector of degree `1..=max_n` with `k` chains.
pub fn perm_vectors(max_n: usize, ks: &[usize]) -> Vec<PermVector> {
    let mut out = Vec::new();
    for &k in ks {
        for n in 1..=max_n {
            out.extend(enumerate_perm_vectors(n, k, DEFAULT_MAX_CASES).unwrap());
        }
    }
    out
}

/// One representative per isomorphism class, in order of first appearance.
pub fn dedupe(lattices: impl IntoIterator<Item = Lattice>) -> Vec<Lattice> {
    let mut buckets: HashMap<Profile, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Lattice> = Vec::new();
    for l in lattices {
        let bucket = buckets.entry(invariant_profile(&l)).or_default();
        if bucket
            .iter()
            .any(|&i| find_isomorphism(&reps[i], &l).is_some())
        {
            continue;
        }
        bucket.push(reps.len());
        reps.push(l);
    }
    reps
}

/// The bare lattices of `eta(v)`, up to isomorphism.
pub fn eta_lattices(vectors: &[PermVector]) -> Vec<Lattice> {
    dedupe(vectors.iter().map(|v| eta(v).chained.lattice().clone()))
}

/// Named lattices known to be join-distributive.
pub fn named_positive() -> Vec<(String, Lattice)> {
    let mut out: Vec<(String, Lattice)> = (1..=3)
        .map(|t| (format!("B_{t}"), named::boolean(t)))
        .collect();
    out.extend((0..=5).map(|n| (format!("chain of length {n}"), named::chain(n))));
    out
}

pub fn named_negative() -> Vec<(String, Lattice)> {
    vec![
        ("M_3".into(), named::m3()),
        ("N_5".into(), named::n5()),
        ("M_3 with extended top".into(), named::m3_extended_top()),
    ]
}
