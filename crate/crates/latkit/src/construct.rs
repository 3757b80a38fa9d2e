//! Lattice-building constructions: unit adjunction, doubling at the unit,
//! prime covers, ideal completion, join-closure envelopes, direct products,
//! and the named fixtures used throughout the test suites.

use crate::bitset::{Elem, ElemSet};
use crate::order::{FiniteLattice, PointedLattice, RelationKind};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("unknown fixture name: {0}")]
    UnknownFixture(String),
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("seed set must be non-empty")]
    EmptySeed,
}

/// An injective unit-preserving lattice homomorphism between pointed lattices.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub map: Vec<Elem>,
}

impl Embedding {
    /// Checks injectivity and preservation of meet, join, and unit.
    pub fn verify(&self, source: &PointedLattice, target: &PointedLattice) -> Result<(), String> {
        let n = source.size();
        if self.map.len() != n {
            return Err("map length mismatch".into());
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && self.map[a] == self.map[b] {
                    return Err(format!("not injective: {a} and {b} collide"));
                }
                if self.map[source.meet(a, b)] != target.meet(self.map[a], self.map[b]) {
                    return Err(format!("meet not preserved at ({a},{b})"));
                }
                if self.map[source.join(a, b)] != target.join(self.map[a], self.map[b]) {
                    return Err(format!("join not preserved at ({a},{b})"));
                }
            }
        }
        if self.map[source.unit()] != target.unit() {
            return Err("unit not preserved".into());
        }
        Ok(())
    }
}

/// Appends a new top element designated as the unit. The result is integral
/// and prime-pointed.
pub fn adjoin_top_unit(l: &FiniteLattice) -> PointedLattice {
    let n = l.size();
    let mut pairs: Vec<(Elem, Elem)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if l.leq(a, b) {
                pairs.push((a, b));
            }
        }
        pairs.push((a, n));
    }
    let lat = FiniteLattice::from_relation(n + 1, &pairs, RelationKind::Leq)
        .expect("appending a top preserves lattice structure");
    PointedLattice::new(lat, n).expect("new top index in range")
}

/// Doubles the unit: inserts a fresh element directly below it, ordered
/// below exactly the elements at or above the unit and above exactly the
/// elements strictly below it. Returns the doubled algebra and the identity
/// embedding of the original.
pub fn double_at_one(a: &PointedLattice) -> (PointedLattice, Embedding) {
    let n = a.size();
    let u = a.unit();
    let low = n; // index of the new element
    let mut pairs: Vec<(Elem, Elem)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if a.leq(x, y) {
                pairs.push((x, y));
            }
        }
        if a.leq(x, u) && x != u {
            pairs.push((x, low));
        }
        if a.leq(u, x) {
            pairs.push((low, x));
        }
    }
    let lat = FiniteLattice::from_relation(n + 1, &pairs, RelationKind::Leq)
        .expect("doubling the unit preserves lattice structure");
    let doubled = PointedLattice::new(lat, u).expect("unit unchanged by doubling");
    let map = (0..n).collect();
    (doubled, Embedding { map })
}

/// The prime-pointed cover: the subalgebra of `A x 2` on
/// `{(a,0) : a in A} + {(p,1) : p >= unit}`, pointed at `(unit, 1)`.
/// Returns the cover and the first-projection surjection.
pub fn prime_cover(a: &PointedLattice) -> (PointedLattice, Vec<Elem>) {
    let n = a.size();
    let upper: Vec<Elem> = a.elems().filter(|&p| a.leq(a.unit(), p)).collect();
    // Elements: 0..n are (x,0); n.. are (upper[i],1).
    let m = n + upper.len();
    let at = |i: usize| -> (Elem, u8) {
        if i < n {
            (i, 0)
        } else {
            (upper[i - n], 1)
        }
    };
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let ((x, s), (y, t)) = (at(i), at(j));
            if a.leq(x, y) && s <= t {
                pairs.push((i, j));
            }
        }
    }
    let lat = FiniteLattice::from_relation(m, &pairs, RelationKind::Leq)
        .expect("prime cover is a sublattice of a product of lattices");
    let unit_idx = n + upper
        .iter()
        .position(|&p| p == a.unit())
        .expect("unit lies in its own upset");
    let cover = PointedLattice::new(lat, unit_idx).expect("unit index in range");
    let projection = (0..m).map(|i| at(i).0).collect();
    (cover, projection)
}

/// The lattice of all ideals ordered by inclusion, pointed at the downset of
/// the unit, together with the embedding `a -> downset(a)`. For the finite
/// inputs handled here the embedding is onto.
pub fn ideal_completion(a: &PointedLattice) -> Result<(PointedLattice, Embedding), ConstructError> {
    let n = a.size();
    if n > 16 {
        return Err(ConstructError::CapacityExceeded(format!(
            "ideal completion enumerates all downsets; size {n} > 16"
        )));
    }
    // Enumerate ideals directly from the definition: non-empty downsets
    // closed under binary joins.
    let mut ideals: Vec<ElemSet> = Vec::new();
    for mask in 1u32..(1 << n) {
        let set = ElemSet::from_elems(n, (0..n).filter(|&e| mask >> e & 1 == 1));
        let members: Vec<Elem> = set.iter().collect();
        let downclosed = members
            .iter()
            .all(|&x| a.elems().all(|y| !a.leq(y, x) || set.contains(y)));
        let join_closed = members
            .iter()
            .all(|&x| members.iter().all(|&y| set.contains(a.join(x, y))));
        if downclosed && join_closed {
            ideals.push(set);
        }
    }
    ideals.sort();
    let m = ideals.len();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if ideals[i].is_subset(&ideals[j]) {
                pairs.push((i, j));
            }
        }
    }
    let lat = FiniteLattice::from_relation(m, &pairs, RelationKind::Leq)
        .expect("ideals of a lattice ordered by inclusion form a lattice");
    let unit = ideals
        .iter()
        .position(|i| *i == a.lattice().downset(a.unit()))
        .expect("the downset of the unit is an ideal");
    let completed = PointedLattice::new(lat, unit).expect("unit index in range");
    let map = (0..n)
        .map(|e| {
            ideals
                .iter()
                .position(|i| *i == a.lattice().downset(e))
                .expect("principal downsets are ideals")
        })
        .collect();
    Ok((completed, Embedding { map }))
}

/// Join-closure envelope of a finite subset: closes `X + {1, meet(X) ^ 1}`
/// under joins. Joins agree with the ambient algebra; meets are recomputed
/// inside the closure. Returns the envelope and the map from seed elements
/// (ambient indices) to envelope indices.
pub fn fep_envelope(
    a: &PointedLattice,
    x: &ElemSet,
) -> Result<(PointedLattice, Vec<(Elem, Elem)>), ConstructError> {
    if x.is_empty() {
        return Err(ConstructError::EmptySeed);
    }
    let meet_x = a.lattice().meet_set(x.iter());
    let mut b = x.clone();
    b.insert(a.unit());
    b.insert(a.meet(meet_x, a.unit()));
    // Close under ambient joins.
    loop {
        let members: Vec<Elem> = b.iter().collect();
        let mut grew = false;
        for &p in &members {
            for &q in &members {
                let j = a.join(p, q);
                if !b.contains(j) {
                    b.insert(j);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let members: Vec<Elem> = b.iter().collect();
    let m = members.len();
    // Order restricts; meet is the greatest member below both, which exists
    // because the closure is finite, join-closed, and has a least element.
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if a.leq(members[i], members[j]) {
                pairs.push((i, j));
            }
        }
    }
    let lat = FiniteLattice::from_relation(m, &pairs, RelationKind::Leq)
        .expect("a finite join-closed set with a least element is a lattice");
    // Joins inside the envelope must agree with the ambient algebra.
    for i in 0..m {
        for j in 0..m {
            debug_assert_eq!(members[lat.join(i, j)], a.join(members[i], members[j]));
        }
    }
    let unit = members
        .iter()
        .position(|&e| e == a.unit())
        .expect("unit is seeded");
    let env = PointedLattice::new(lat, unit).expect("unit index in range");
    let embedding = x
        .iter()
        .map(|e| {
            (
                e,
                members
                    .iter()
                    .position(|&f| f == e)
                    .expect("seed elements persist"),
            )
        })
        .collect();
    Ok((env, embedding))
}

/// Direct product with componentwise order; the unit is the tuple of units.
pub fn direct_product(algebras: &[&PointedLattice]) -> Result<PointedLattice, ConstructError> {
    let mut size: usize = 1;
    for a in algebras {
        size = size.saturating_mul(a.size());
        if size > 4096 {
            return Err(ConstructError::CapacityExceeded(
                "direct product larger than 4096 elements".into(),
            ));
        }
    }
    let k = algebras.len();
    let decode = |mut i: usize| -> Vec<Elem> {
        let mut t = vec![0; k];
        for (j, a) in algebras.iter().enumerate().rev() {
            t[j] = i % a.size();
            i /= a.size();
        }
        t
    };
    let mut pairs = Vec::new();
    for i in 0..size {
        let ti = decode(i);
        for j in 0..size {
            let tj = decode(j);
            if (0..k).all(|c| algebras[c].leq(ti[c], tj[c])) {
                pairs.push((i, j));
            }
        }
    }
    let lat = FiniteLattice::from_relation(size.max(1), &pairs, RelationKind::Leq)
        .expect("products of lattices are lattices");
    let mut unit = 0;
    for a in algebras {
        unit = unit * a.size() + a.unit();
    }
    Ok(PointedLattice::new(lat, unit).expect("unit tuple in range"))
}

/// Named algebras used as running examples and in tests.
pub mod fixtures {
    use super::*;

    /// Pentagon with the two-element side's atom as the unit: the forbidden
    /// configuration for semiconic pointed lattices.
    /// Elements: 0=bottom, 1=atom (unit), 2, 3 on the long side, 4=top.
    pub fn n5_left_pointed() -> PointedLattice {
        let lat = FiniteLattice::from_relation(
            5,
            &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)],
            RelationKind::Covers,
        )
        .expect("pentagon covers");
        PointedLattice::new(lat, 1).expect("unit in range")
    }

    /// Pentagon pointed at its top.
    pub fn n5_unital() -> PointedLattice {
        let lat = n5_left_pointed();
        let top = lat.top();
        PointedLattice::new(lat.lattice().clone(), top).expect("top in range")
    }

    /// Five-element diamond pointed at its top. Elements: 0=bottom, 1..3 atoms, 4=top.
    pub fn m3_unital() -> PointedLattice {
        let lat = FiniteLattice::from_relation(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
            RelationKind::Covers,
        )
        .expect("diamond covers");
        PointedLattice::new(lat, 4).expect("unit in range")
    }

    /// The diamond with a new top appended as the unit.
    pub fn m3_plus_one() -> PointedLattice {
        adjoin_top_unit(m3_unital().lattice())
    }

    /// Four-element Boolean lattice pointed at its top.
    /// Elements: 0=bottom, 1, 2 atoms, 3=top.
    pub fn boolean_square_unital() -> PointedLattice {
        let lat =
            FiniteLattice::from_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], RelationKind::Covers)
                .expect("square covers");
        PointedLattice::new(lat, 3).expect("unit in range")
    }

    /// A `k`-element chain `0 < 1 < ... < k-1` pointed at `unit_pos`.
    pub fn chain(k: usize, unit_pos: Elem) -> PointedLattice {
        let pairs: Vec<(Elem, Elem)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        let lat = FiniteLattice::from_relation(k.max(1), &pairs, RelationKind::Covers)
            .expect("chain covers");
        PointedLattice::new(lat, unit_pos).expect("unit in range")
    }

    /// Looks up a fixture by CLI name: `n5_left_pointed`, `n5_unital`,
    /// `m3_unital`, `m3_plus_one`, `boolean_square_unital`, or `chain(k,pos)`.
    pub fn by_name(name: &str) -> Result<PointedLattice, ConstructError> {
        match name {
            "n5_left_pointed" => Ok(n5_left_pointed()),
            "n5_unital" => Ok(n5_unital()),
            "m3_unital" => Ok(m3_unital()),
            "m3_plus_one" => Ok(m3_plus_one()),
            "boolean_square_unital" => Ok(boolean_square_unital()),
            _ => {
                if let Some(args) = name
                    .strip_prefix("chain(")
                    .and_then(|rest| rest.strip_suffix(')'))
                {
                    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
                    if parts.len() == 2 {
                        if let (Ok(k), Ok(pos)) =
                            (parts[0].parse::<usize>(), parts[1].parse::<usize>())
                        {
                            if k >= 1 && pos < k {
                                return Ok(chain(k, pos));
                            }
                        }
                    }
                }
                Err(ConstructError::UnknownFixture(name.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fixtures::*;

    #[test]
    fn adjoin_top_examples() {
        let two = chain(2, 1);
        let three = adjoin_top_unit(two.lattice());
        assert_eq!(three.size(), 3);
        assert!(three.is_integral());
        assert!(three.is_prime_pointed());

        let m3p1 = m3_plus_one();
        assert_eq!(m3p1.size(), 6);
        assert!(m3p1.is_prime_pointed());

        let one = chain(1, 0);
        let two_again = adjoin_top_unit(one.lattice());
        assert!(two_again.isomorphism_to(&chain(2, 1)).is_some());
    }

    #[test]
    fn doubling_examples() {
        let (d, emb) = double_at_one(&chain(2, 1));
        assert_eq!(d.size(), 3);
        assert!(d.isomorphism_to(&chain(3, 2)).is_some());
        emb.verify(&chain(2, 1), &d).unwrap();

        let (d5, emb5) = double_at_one(&n5_left_pointed());
        assert_eq!(d5.size(), 6);
        emb5.verify(&n5_left_pointed(), &d5).unwrap();
        // the new element sits between the bottom and the unit
        let low = 5;
        assert!(d5.leq(d5.bottom(), low) && d5.leq(low, d5.unit()));
        assert!(d5.lattice().covers().contains(&(0, low)));
        assert!(d5.lattice().covers().contains(&(low, 1)));

        let (d1, _) = double_at_one(&chain(1, 0));
        assert!(d1.isomorphism_to(&chain(2, 1)).is_some());
    }

    #[test]
    fn doubling_preserves_conic() {
        for a in [chain(3, 1), n5_unital(), m3_unital()] {
            if a.is_conic() {
                let (d, _) = double_at_one(&a);
                assert!(d.is_conic());
            }
        }
    }

    #[test]
    fn prime_cover_examples() {
        let (c, proj) = prime_cover(&chain(1, 0));
        assert_eq!(c.size(), 2);
        assert!(c.is_prime_pointed());
        assert_eq!(proj, vec![0, 0]);

        let (c3, _) = prime_cover(&m3_unital());
        assert_eq!(c3.size(), 6);
        assert!(c3.is_prime_pointed());

        // square pointed at an atom: two elements above the unit
        let sq = PointedLattice::new(boolean_square_unital().lattice().clone(), 1).unwrap();
        let (csq, proj_sq) = prime_cover(&sq);
        assert_eq!(csq.size(), 6);
        assert!(csq.is_prime_pointed());
        // projection is a surjective homomorphism
        for i in 0..csq.size() {
            for j in 0..csq.size() {
                assert_eq!(proj_sq[csq.meet(i, j)], sq.meet(proj_sq[i], proj_sq[j]));
                assert_eq!(proj_sq[csq.join(i, j)], sq.join(proj_sq[i], proj_sq[j]));
            }
        }
        for target in sq.elems() {
            assert!(proj_sq.contains(&target));
        }
    }

    #[test]
    fn ideal_completion_is_iso_for_finite() {
        for a in [chain(2, 1), n5_left_pointed(), m3_unital()] {
            let (idl, emb) = ideal_completion(&a).unwrap();
            assert_eq!(idl.size(), a.size());
            emb.verify(&a, &idl).unwrap();
            assert!(a.isomorphism_to(&idl).is_some());
        }
    }

    #[test]
    fn join_prime_unit_stays_completely_join_prime_in_completion() {
        let a = n5_left_pointed();
        let (idl, _) = ideal_completion(&a).unwrap();
        assert!(idl.lattice().join_prime(idl.unit()));
    }

    #[test]
    fn fep_envelope_examples() {
        let n5 = n5_unital();
        let x = ElemSet::from_elems(5, [2, 4]); // {b, top}
        let (env, _) = fep_envelope(&n5, &x).unwrap();
        assert_eq!(env.size(), 2);

        let whole = ElemSet::full(5);
        let (env_all, _) = fep_envelope(&n5, &whole).unwrap();
        assert_eq!(env_all.size(), 5);

        // inside the diamond, {p, q} closes to a Boolean square
        let m3 = m3_unital();
        let (env_sq, _) = fep_envelope(&m3, &ElemSet::from_elems(5, [1, 2])).unwrap();
        assert_eq!(env_sq.size(), 4);
        assert!(env_sq
            .isomorphism_to(&boolean_square_unital())
            .is_some());
    }

    #[test]
    fn product_examples() {
        let two = chain(2, 1);
        let sq = direct_product(&[&two, &two]).unwrap();
        assert!(sq.isomorphism_to(&boolean_square_unital()).is_some());

        let one = chain(1, 0);
        let same = direct_product(&[&two, &one]).unwrap();
        assert!(same.isomorphism_to(&two).is_some());

        let mixed = direct_product(&[&chain(2, 1), &chain(2, 0)]).unwrap();
        assert_eq!(mixed.size(), 4);
        assert!(!mixed.is_integral());
        assert!(!mixed.is_dually_integral());
    }

    #[test]
    fn fixture_lookup() {
        assert!(fixtures::by_name("m3_plus_one").is_ok());
        assert!(fixtures::by_name("chain(4, 2)").is_ok());
        assert!(matches!(
            fixtures::by_name("octahedron"),
            Err(ConstructError::UnknownFixture(_))
        ));
    }
}
