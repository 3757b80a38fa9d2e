//! Exhaustive catalogs of small lattices, pointed lattices, and residuated
//! lattices up to isomorphism, plus an independent counting oracle used to
//! validate the generator.
//!
//! Lattices are generated through their top-deleted reducts: a finite
//! lattice with at least two elements is exactly a finite meet-semilattice
//! with a new top adjoined, and meet-semilattices grow one maximal element
//! at a time.

use crate::bitset::Elem;
use crate::order::{lattice_isomorphism, FiniteLattice, PointedLattice};
use crate::rl::{enumerate_rls, FiniteRL, RlError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error(transparent)]
    Rl(#[from] RlError),
}

/// A complete list of pairwise non-isomorphic algebras up to a size bound.
#[derive(Debug, Clone)]
pub struct Catalog<A> {
    pub max_size: usize,
    pub algebras: Vec<A>,
    pub provenance: String,
}

fn provenance() -> String {
    format!("latkit {} levelwise generator", env!("CARGO_PKG_VERSION"))
}

// ------------------------------------------------------------------
// Canonical forms
// ------------------------------------------------------------------

fn refine_invariants(n: usize, leq: &[bool], unit: Option<Elem>) -> Vec<u64> {
    let le = |a: Elem, b: Elem| leq[a * n + b];
    let mut inv: Vec<u64> = (0..n)
        .map(|x| {
            let below = (0..n).filter(|&y| le(y, x)).count() as u64;
            let above = (0..n).filter(|&y| le(x, y)).count() as u64;
            let is_unit = (unit == Some(x)) as u64;
            is_unit << 32 | below << 16 | above
        })
        .collect();
    // two rounds of neighborhood refinement over the order relation
    for _ in 0..2 {
        let mut next = Vec::with_capacity(n);
        for x in 0..n {
            let mut lows: Vec<u64> = (0..n).filter(|&y| le(y, x)).map(|y| inv[y]).collect();
            let mut highs: Vec<u64> = (0..n).filter(|&y| le(x, y)).map(|y| inv[y]).collect();
            lows.sort_unstable();
            highs.sort_unstable();
            let mut h = std::collections::hash_map::DefaultHasher::new();
            use std::hash::{Hash, Hasher};
            (inv[x], lows, highs).hash(&mut h);
            next.push(h.finish());
        }
        inv = next;
    }
    inv
}

/// A canonical key for the (pointed) order: the minimal string formed by
/// the unit's position vector followed by the adjacency matrix, over all
/// permutations consistent with the element invariants.
pub fn canonical_key(n: usize, leq: &[bool], unit: Option<Elem>) -> Vec<u8> {
    let inv = refine_invariants(n, leq, unit);
    let mut order: Vec<Elem> = (0..n).collect();
    order.sort_by_key(|&x| inv[x]);
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for &x in &order {
        match classes.last_mut() {
            Some(c) if inv[c[0]] == inv[x] => c.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<Elem> = Vec::with_capacity(n);
    permute_classes(n, leq, unit, &classes, 0, 0, &mut perm, &mut best);
    best.expect("at least one permutation exists")
}

#[allow(clippy::too_many_arguments)]
fn permute_classes(
    n: usize,
    leq: &[bool],
    unit: Option<Elem>,
    classes: &[Vec<Elem>],
    class_idx: usize,
    used_mask: u32,
    perm: &mut Vec<Elem>,
    best: &mut Option<Vec<u8>>,
) {
    if class_idx == classes.len() {
        let mut key = Vec::with_capacity(n * n + n);
        for &a in perm.iter() {
            key.push((unit == Some(a)) as u8);
        }
        for &a in perm.iter() {
            for &b in perm.iter() {
                key.push(leq[a * n + b] as u8);
            }
        }
        if best.as_ref().map_or(true, |b| key < *b) {
            *best = Some(key);
        }
        return;
    }
    let class = &classes[class_idx];
    if class.iter().all(|&x| used_mask >> x & 1 == 1) {
        permute_classes(n, leq, unit, classes, class_idx + 1, used_mask, perm, best);
        return;
    }
    for &x in class {
        if used_mask >> x & 1 == 0 {
            perm.push(x);
            permute_classes(n, leq, unit, classes, class_idx, used_mask | 1 << x, perm, best);
            perm.pop();
        }
    }
}

fn lattice_key(l: &FiniteLattice) -> Vec<u8> {
    let n = l.size();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = l.leq(a, b);
        }
    }
    canonical_key(n, &leq, None)
}

fn pointed_key(p: &PointedLattice) -> Vec<u8> {
    let n = p.size();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = p.leq(a, b);
        }
    }
    canonical_key(n, &leq, Some(p.unit()))
}

// ------------------------------------------------------------------
// Levelwise generation
// ------------------------------------------------------------------

/// A meet-semilattice as a raw order matrix. Grows by adding a maximal
/// element over a chosen downset.
#[derive(Clone)]
struct Semilattice {
    n: usize,
    leq: Vec<bool>,
}

impl Semilattice {
    fn singleton() -> Self {
        Semilattice {
            n: 1,
            leq: vec![true],
        }
    }

    fn le(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n + b]
    }

    /// Valid downsets for a new maximal element: downward closed, and every
    /// element must see a maximum among the downset members below it (the
    /// meet of the new element with it).
    fn extensions(&self) -> Vec<Vec<bool>> {
        let n = self.n;
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let has = |x: Elem| mask >> x & 1 == 1;
            let downclosed = (0..n).all(|x| !has(x) || (0..n).all(|y| !self.le(y, x) || has(y)));
            if !downclosed {
                continue;
            }
            let meets_exist = (0..n).all(|s| {
                let below: Vec<Elem> = (0..n).filter(|&d| has(d) && self.le(d, s)).collect();
                below.iter().any(|&m| below.iter().all(|&d| self.le(d, m)))
            });
            if meets_exist {
                out.push((0..n).map(has).collect());
            }
        }
        out
    }

    fn extend(&self, downset: &[bool]) -> Semilattice {
        let n = self.n;
        let m = n + 1;
        let mut leq = vec![false; m * m];
        for a in 0..n {
            for b in 0..n {
                leq[a * m + b] = self.le(a, b);
            }
            if downset[a] {
                leq[a * m + n] = true;
            }
        }
        leq[n * m + n] = true;
        Semilattice { n: m, leq }
    }

    fn key(&self) -> Vec<u8> {
        canonical_key(self.n, &self.leq, None)
    }

    /// The lattice obtained by adjoining a top element.
    fn with_top(&self) -> FiniteLattice {
        let n = self.n;
        let m = n + 1;
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.le(a, b) {
                    pairs.push((a, b));
                }
            }
            pairs.push((a, n));
        }
        FiniteLattice::from_relation(m, &pairs, crate::order::RelationKind::Leq)
            .expect("a finite meet-semilattice with a top adjoined is a lattice")
    }
}

/// All lattices with exactly `n` elements, up to isomorphism.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>, EnumError> {
    if n == 0 || n > 8 {
        return Err(EnumError::CapacityExceeded(format!(
            "lattice enumeration supports sizes 1..=8, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![FiniteLattice::from_relation(
            1,
            &[],
            crate::order::RelationKind::Covers,
        )
        .expect("trivial lattice")]);
    }
    // grow meet-semilattices to n-1 elements, dedup per level
    let mut level = vec![Semilattice::singleton()];
    for _ in 1..n - 1 {
        let mut next = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for s in &level {
            for d in s.extensions() {
                let bigger = s.extend(&d);
                if seen.insert(bigger.key()) {
                    next.push(bigger);
                }
            }
        }
        level = next;
    }
    let mut out: Vec<(Vec<u8>, FiniteLattice)> = level
        .iter()
        .map(|s| {
            let l = s.with_top();
            (lattice_key(&l), l)
        })
        .collect();
    out.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(out.into_iter().map(|(_, l)| l).collect())
}

/// All pointed lattices with exactly `n` elements, up to unit-preserving
/// isomorphism: one unit choice per automorphism orbit of each lattice.
pub fn enumerate_pointed(n: usize) -> Result<Vec<PointedLattice>, EnumError> {
    let mut out = Vec::new();
    for lat in enumerate_lattices(n)? {
        let mut seen = std::collections::HashSet::new();
        for u in 0..n {
            let p = PointedLattice::new(lat.clone(), u).expect("unit in range");
            if seen.insert(pointed_key(&p)) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// All lattices of size 1..=max, smallest first.
pub fn lattice_catalog(max: usize) -> Result<Catalog<FiniteLattice>, EnumError> {
    let mut algebras = Vec::new();
    for n in 1..=max {
        algebras.extend(enumerate_lattices(n)?);
    }
    Ok(Catalog {
        max_size: max,
        algebras,
        provenance: provenance(),
    })
}

/// All pointed lattices of size 1..=max, smallest first.
pub fn pointed_catalog(max: usize) -> Result<Catalog<PointedLattice>, EnumError> {
    let mut algebras = Vec::new();
    for n in 1..=max {
        algebras.extend(enumerate_pointed(n)?);
    }
    Ok(Catalog {
        max_size: max,
        algebras,
        provenance: provenance(),
    })
}

/// Every residuated lattice over every pointed base of size 1..=max_base,
/// up to isomorphism (bases are pairwise non-isomorphic and multiplications
/// are deduplicated under base automorphisms).
pub fn rl_catalog(max_base: usize) -> Result<Catalog<FiniteRL>, EnumError> {
    let mut algebras = Vec::new();
    for base in pointed_catalog(max_base)?.algebras {
        algebras.extend(enumerate_rls(&base)?);
    }
    Ok(Catalog {
        max_size: max_base,
        algebras,
        provenance: provenance(),
    })
}

// ------------------------------------------------------------------
// Independent oracle
// ------------------------------------------------------------------

/// Counts lattices with exactly `n` elements by brute force: enumerate all
/// labeled strict orders on the non-bottom elements (pairwise relation
/// backtracking, keeping only transitively closed leaves), adjoin the
/// bottom, keep the orders that carry lattice structure, and deduplicate
/// with pairwise isomorphism tests. Shares no enumeration machinery with
/// the levelwise generator.
pub fn oracle_lattice_count(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    if n == 1 {
        return 1;
    }
    let m = n - 1; // elements above the adjoined bottom
    let mut reps: Vec<FiniteLattice> = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            pairs.push((i, j));
        }
    }
    let mut strict = vec![false; m * m];
    oracle_rec(m, &pairs, 0, &mut strict, &mut reps);
    reps.len()
}

fn oracle_rec(
    m: usize,
    pairs: &[(usize, usize)],
    idx: usize,
    strict: &mut Vec<bool>,
    reps: &mut Vec<FiniteLattice>,
) {
    if idx == pairs.len() {
        oracle_try_lattice(m, strict, reps);
        return;
    }
    let (i, j) = pairs[idx];
    // incomparable
    oracle_rec(m, pairs, idx + 1, strict, reps);
    // one strictly below the other
    for (a, b) in [(i, j), (j, i)] {
        strict[a * m + b] = true;
        oracle_rec(m, pairs, idx + 1, strict, reps);
        strict[a * m + b] = false;
    }
}

fn oracle_try_lattice(m: usize, strict: &[bool], reps: &mut Vec<FiniteLattice>) {
    // keep only transitively closed relations so each strict order is
    // visited exactly once
    let mut closed = strict.to_vec();
    for k in 0..m {
        for i in 0..m {
            if closed[i * m + k] {
                for j in 0..m {
                    if closed[k * m + j] {
                        closed[i * m + j] = true;
                    }
                }
            }
        }
    }
    if closed != strict {
        return;
    }
    let n = m + 1;
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for i in 0..m {
        leq[i + 1] = true; // row 0: adjoined bottom below everything
        for j in 0..m {
            if strict[i * m + j] {
                leq[(i + 1) * n + (j + 1)] = true;
            }
        }
    }
    let Ok(lat) = FiniteLattice::from_leq_closed(n, leq) else {
        return;
    };
    if reps
        .iter()
        .all(|r| lattice_isomorphism(r, &lat, None).is_none())
    {
        reps.push(lat);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn small_lattice_counts() {
        let expected = [1, 1, 1, 2, 5, 15];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                enumerate_lattices(n).unwrap().len(),
                want,
                "lattice count at size {n}"
            );
        }
    }

    #[test]
    fn oracle_agrees_on_small_sizes() {
        for n in 1..=6 {
            assert_eq!(
                enumerate_lattices(n).unwrap().len(),
                oracle_lattice_count(n),
                "disagreement at size {n}"
            );
        }
    }

    #[test]
    fn pointed_counts() {
        assert_eq!(enumerate_pointed(1).unwrap().len(), 1);
        assert_eq!(enumerate_pointed(2).unwrap().len(), 2);
        assert_eq!(enumerate_pointed(3).unwrap().len(), 3);
        // chain: 4 units; square: 3 orbits
        assert_eq!(enumerate_pointed(4).unwrap().len(), 7);
    }

    #[test]
    fn catalog_algebras_are_valid_and_distinct() {
        let cat = pointed_catalog(5).unwrap();
        for a in &cat.algebras {
            a.lattice().validate().unwrap();
        }
        for (i, a) in cat.algebras.iter().enumerate() {
            for b in &cat.algebras[i + 1..] {
                if a.size() == b.size() {
                    assert!(a.isomorphism_to(b).is_none(), "{a:?} and {b:?} isomorphic");
                }
            }
        }
    }

    #[test]
    fn catalog_contains_the_fixtures() {
        let cat = pointed_catalog(5).unwrap();
        for fixture in [
            fixtures::n5_left_pointed(),
            fixtures::n5_unital(),
            fixtures::m3_unital(),
            fixtures::boolean_square_unital(),
        ] {
            assert!(
                cat.algebras
                    .iter()
                    .any(|a| a.isomorphism_to(&fixture).is_some()),
                "missing {fixture:?}"
            );
        }
    }

    #[test]
    fn rl_catalog_small() {
        let cat = rl_catalog(3).unwrap();
        assert!(!cat.algebras.is_empty());
        for rl in &cat.algebras {
            assert!(rl.residuation_laws_hold());
        }
    }
}
