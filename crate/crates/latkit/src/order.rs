//! Finite posets, lattices, and pointed lattices.
//!
//! The universe of every algebra is `{0..n-1}`. Order, meet, and join are
//! stored as dense tables; bottom and top are computed at construction time,
//! never assumed to sit at fixed indices.

use crate::bitset::{Elem, ElemSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not a lattice: elements {a} and {b} have no {kind}")]
    NotALattice { a: Elem, b: Elem, kind: BoundKind },
    #[error("element index {0} out of range for size {1}")]
    BadIndex(Elem, usize),
    #[error("size must be at least 1")]
    EmptyUniverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    LeastUpperBound,
    GreatestLowerBound,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::LeastUpperBound => write!(f, "least upper bound"),
            BoundKind::GreatestLowerBound => write!(f, "greatest lower bound"),
        }
    }
}

/// How the input pairs of [`FiniteLattice::from_relation`] are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// Pairs are covers `(lower, upper)`; the order is their reflexive-transitive closure.
    Covers,
    /// Pairs are arbitrary `a <= b` assertions; closure is still applied.
    Leq,
}

/// A finite lattice on `{0..n-1}` with dense order and operation tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteLattice(n={}, covers={:?})", self.n, self.covers())
    }
}

impl FiniteLattice {
    /// Builds a lattice from cover or order pairs, validating the result.
    pub fn from_relation(
        n: usize,
        pairs: &[(Elem, Elem)],
        kind: RelationKind,
    ) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::EmptyUniverse);
        }
        for &(a, b) in pairs {
            if a >= n {
                return Err(LatticeError::BadIndex(a, n));
            }
            if b >= n {
                return Err(LatticeError::BadIndex(b, n));
            }
        }
        let _ = kind; // both kinds take the reflexive-transitive closure
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            leq[a * n + b] = true;
        }
        // Floyd-Warshall style transitive closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "elements {i} and {j} lie on a cycle"
                    )));
                }
            }
        }
        Self::from_leq_closed(n, leq)
    }

    /// Builds a lattice from an already reflexive-transitive-antisymmetric
    /// order matrix, computing meet/join tables and bounds.
    pub fn from_leq_closed(n: usize, leq: Vec<bool>) -> Result<Self, LatticeError> {
        debug_assert_eq!(leq.len(), n * n);
        let le = |a: Elem, b: Elem| leq[a * n + b];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = Self::bound_of(n, &leq, a, b, BoundKind::GreatestLowerBound)
                    .ok_or(LatticeError::NotALattice {
                        a,
                        b,
                        kind: BoundKind::GreatestLowerBound,
                    })?;
                join[a * n + b] = Self::bound_of(n, &leq, a, b, BoundKind::LeastUpperBound).ok_or(
                    LatticeError::NotALattice {
                        a,
                        b,
                        kind: BoundKind::LeastUpperBound,
                    },
                )?;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for x in 1..n {
            bottom = meet[bottom * n + x];
            top = join[top * n + x];
        }
        for x in 0..n {
            if !le(bottom, x) || !le(x, top) {
                return Err(LatticeError::NotAPartialOrder(
                    "no global bounds after closure".into(),
                ));
            }
        }
        Ok(FiniteLattice {
            n,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    fn bound_of(n: usize, leq: &[bool], a: Elem, b: Elem, kind: BoundKind) -> Option<Elem> {
        let le = |x: Elem, y: Elem| leq[x * n + y];
        let candidates: Vec<Elem> = (0..n)
            .filter(|&c| match kind {
                BoundKind::GreatestLowerBound => le(c, a) && le(c, b),
                BoundKind::LeastUpperBound => le(a, c) && le(b, c),
            })
            .collect();
        candidates
            .iter()
            .copied()
            .find(|&m| {
                candidates.iter().all(|&c| match kind {
                    BoundKind::GreatestLowerBound => le(c, m),
                    BoundKind::LeastUpperBound => le(m, c),
                })
            })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.n + b]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.n + b]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn elems(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    /// Join of a set; the empty join is the bottom element.
    pub fn join_set(&self, set: impl IntoIterator<Item = Elem>) -> Elem {
        set.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set; the empty meet is the top element.
    pub fn meet_set(&self, set: impl IntoIterator<Item = Elem>) -> Elem {
        set.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// The cover relation: pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.leq(a, b) {
                    let strictly_between = (0..self.n)
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                    if !strictly_between {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    pub fn upset(&self, a: Elem) -> ElemSet {
        ElemSet::from_elems(self.n, self.elems().filter(|&x| self.leq(a, x)))
    }

    pub fn downset(&self, a: Elem) -> ElemSet {
        ElemSet::from_elems(self.n, self.elems().filter(|&x| self.leq(x, a)))
    }

    /// `a` is join prime: `x v y >= a` implies `x >= a` or `y >= a`.
    /// The bottom element satisfies this vacuously.
    pub fn join_prime(&self, a: Elem) -> bool {
        self.elems().all(|x| {
            self.elems().all(|y| {
                !self.leq(a, self.join(x, y)) || self.leq(a, x) || self.leq(a, y)
            })
        })
    }

    /// `a` is join irreducible: `x v y = a` implies `x = a` or `y = a`.
    pub fn join_irreducible(&self, a: Elem) -> bool {
        self.elems()
            .all(|x| self.elems().all(|y| self.join(x, y) != a || x == a || y == a))
    }

    /// `a` is meet irreducible: `x ^ y = a` implies `x = a` or `y = a`.
    pub fn meet_irreducible(&self, a: Elem) -> bool {
        self.elems()
            .all(|x| self.elems().all(|y| self.meet(x, y) != a || x == a || y == a))
    }

    /// `a` is meet prime: `x ^ y <= a` implies `x <= a` or `y <= a`.
    pub fn meet_prime(&self, a: Elem) -> bool {
        self.elems().all(|x| {
            self.elems().all(|y| {
                !self.leq(self.meet(x, y), a) || self.leq(x, a) || self.leq(y, a)
            })
        })
    }

    pub fn is_distributive(&self) -> bool {
        self.elems().all(|x| {
            self.elems().all(|y| {
                self.elems().all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    pub fn is_linear(&self) -> bool {
        self.elems()
            .all(|x| self.elems().all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// Checks every lattice axiom on the stored tables. Construction already
    /// guarantees these; exposed for audits over imported tables.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.n;
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(format!("order not reflexive at {a}"));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(format!("order not antisymmetric at ({a},{b})"));
                }
                let (m, j) = (self.meet(a, b), self.join(a, b));
                if m != self.meet(b, a) || j != self.join(b, a) {
                    return Err(format!("meet/join not commutative at ({a},{b})"));
                }
                if !self.leq(m, a) || !self.leq(m, b) || !self.leq(a, j) || !self.leq(b, j) {
                    return Err(format!("meet/join not bounding at ({a},{b})"));
                }
                if self.join(a, self.meet(a, b)) != a || self.meet(a, self.join(a, b)) != a {
                    return Err(format!("absorption fails at ({a},{b})"));
                }
                for c in 0..n {
                    if self.leq(c, a) && self.leq(c, b) && !self.leq(c, m) {
                        return Err(format!("meet({a},{b}) is not greatest"));
                    }
                    if self.leq(a, c) && self.leq(b, c) && !self.leq(j, c) {
                        return Err(format!("join({a},{b}) is not least"));
                    }
                    if self.meet(a, self.meet(b, c)) != self.meet(self.meet(a, b), c)
                        || self.join(a, self.join(b, c)) != self.join(self.join(a, b), c)
                    {
                        return Err(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
            if !self.leq(self.bottom, a) || !self.leq(a, self.top) {
                return Err(format!("bounds do not bound {a}"));
            }
        }
        Ok(())
    }

    /// The sublattice induced on `set` (which must be meet- and join-closed),
    /// reindexed. Returns the new lattice and the map new index -> old element.
    pub fn sublattice(&self, set: &ElemSet) -> (FiniteLattice, Vec<Elem>) {
        let old: Vec<Elem> = set.iter().collect();
        let m = old.len();
        let mut leq = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                leq[i * m + j] = self.leq(old[i], old[j]);
            }
        }
        let lat = FiniteLattice::from_leq_closed(m, leq)
            .expect("closed subset of a lattice must form a lattice");
        (lat, old)
    }
}

/// A property of a single element, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementProp {
    JoinIrreducible,
    JoinPrime,
    MeetIrreducible,
}

/// A structural property of a pointed lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralProp {
    Integral,
    DuallyIntegral,
    Conic,
    Linear,
    Distributive,
    PrimePointed,
    IrreduciblePointed,
}

/// Which cone of a pointed lattice to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeSign {
    /// The downset of the unit (an integral pointed lattice).
    Negative,
    /// The upset of the unit (a dually integral pointed lattice).
    Positive,
}

/// A finite lattice with a designated constant (the multiplicative unit
/// of any residuated expansion).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointedLattice {
    lattice: FiniteLattice,
    unit: Elem,
}

impl std::fmt::Debug for PointedLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PointedLattice(n={}, unit={}, covers={:?})",
            self.size(),
            self.unit,
            self.lattice.covers()
        )
    }
}

impl PointedLattice {
    pub fn new(lattice: FiniteLattice, unit: Elem) -> Result<Self, LatticeError> {
        if unit >= lattice.size() {
            return Err(LatticeError::BadIndex(unit, lattice.size()));
        }
        Ok(PointedLattice { lattice, unit })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lattice.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.meet(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.join(a, b)
    }

    pub fn bottom(&self) -> Elem {
        self.lattice.bottom()
    }

    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    pub fn elems(&self) -> std::ops::Range<Elem> {
        self.lattice.elems()
    }

    pub fn element_class(&self, a: Elem, prop: ElementProp) -> bool {
        match prop {
            ElementProp::JoinIrreducible => self.lattice.join_irreducible(a),
            ElementProp::JoinPrime => self.lattice.join_prime(a),
            ElementProp::MeetIrreducible => self.lattice.meet_irreducible(a),
        }
    }

    pub fn structural_class(&self, prop: StructuralProp) -> bool {
        match prop {
            StructuralProp::Integral => self.unit == self.lattice.top(),
            StructuralProp::DuallyIntegral => self.unit == self.lattice.bottom(),
            StructuralProp::Conic => self
                .elems()
                .all(|x| self.leq(x, self.unit) || self.leq(self.unit, x)),
            StructuralProp::Linear => self.lattice.is_linear(),
            StructuralProp::Distributive => self.lattice.is_distributive(),
            StructuralProp::PrimePointed => self.lattice.join_prime(self.unit),
            StructuralProp::IrreduciblePointed => self.lattice.join_irreducible(self.unit),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.structural_class(StructuralProp::Integral)
    }

    pub fn is_dually_integral(&self) -> bool {
        self.structural_class(StructuralProp::DuallyIntegral)
    }

    pub fn is_conic(&self) -> bool {
        self.structural_class(StructuralProp::Conic)
    }

    pub fn is_prime_pointed(&self) -> bool {
        self.structural_class(StructuralProp::PrimePointed)
    }

    pub fn is_irreducible_pointed(&self) -> bool {
        self.structural_class(StructuralProp::IrreduciblePointed)
    }

    /// The sublattice on the upset or downset of the unit, reindexed, with
    /// the unit carried along. Also returns the map new index -> old element.
    pub fn cone(&self, sign: ConeSign) -> (PointedLattice, Vec<Elem>) {
        let set = match sign {
            ConeSign::Negative => self.lattice.downset(self.unit),
            ConeSign::Positive => self.lattice.upset(self.unit),
        };
        let (lat, old) = self.lattice.sublattice(&set);
        let unit = old
            .iter()
            .position(|&e| e == self.unit)
            .expect("unit lies in both of its cones");
        (
            PointedLattice::new(lat, unit).expect("cone unit index in range"),
            old,
        )
    }

    /// All 1-filters (upsets containing the unit, closed under meets).
    /// In a finite lattice every filter is principal, so these are exactly
    /// the upsets of elements below the unit.
    pub fn one_filters(&self, prime_only: bool) -> Vec<ElemSet> {
        let mut out: Vec<(Elem, ElemSet)> = self
            .elems()
            .filter(|&f| self.leq(f, self.unit))
            .filter(|&f| !prime_only || self.lattice.join_prime(f))
            .map(|f| (f, self.lattice.upset(f)))
            .collect();
        // Decreasing generator order = increasing filter size.
        out.sort_by(|(_, s), (_, t)| s.len().cmp(&t.len()).then(s.cmp(t)));
        out.into_iter().map(|(_, s)| s).collect()
    }

    /// All ideals not containing the unit (principal downsets of elements
    /// not above the unit). `prime_only` keeps meet-prime generators.
    pub fn one_proper_ideals(&self, prime_only: bool) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = self
            .elems()
            .filter(|&a| !self.leq(self.unit, a))
            .filter(|&a| !prime_only || self.lattice.meet_prime(a))
            .map(|a| self.lattice.downset(a))
            .collect();
        out.sort_by(|s, t| s.len().cmp(&t.len()).then(s.cmp(t)));
        out
    }

    /// Is `set` a 1-filter of this algebra?
    pub fn is_one_filter(&self, set: &ElemSet) -> bool {
        if set.universe() != self.size() || !set.contains(self.unit) {
            return false;
        }
        let members: Vec<Elem> = set.iter().collect();
        members.iter().all(|&a| {
            self.elems().all(|x| !self.leq(a, x) || set.contains(x))
                && members.iter().all(|&b| set.contains(self.meet(a, b)))
        })
    }

    /// Is `set` a prime 1-filter (`a v b` in the filter forces `a` or `b` in)?
    pub fn is_prime_one_filter(&self, set: &ElemSet) -> bool {
        self.is_one_filter(set)
            && self.elems().all(|a| {
                self.elems().all(|b| {
                    !set.contains(self.join(a, b)) || set.contains(a) || set.contains(b)
                })
            })
    }

    /// A unit-preserving lattice isomorphism onto `other`, if one exists.
    /// Returns the image table `map[a in self] = b in other`.
    pub fn isomorphism_to(&self, other: &PointedLattice) -> Option<Vec<Elem>> {
        lattice_isomorphism(
            self.lattice(),
            other.lattice(),
            Some((self.unit, other.unit)),
        )
    }

    /// Unit-preserving automorphisms of this pointed lattice.
    pub fn automorphisms(&self) -> Vec<Vec<Elem>> {
        all_isomorphisms(self.lattice(), self.lattice(), Some((self.unit, self.unit)))
    }
}

/// Per-element invariant used to cut the isomorphism search space: must be
/// preserved by every isomorphism.
fn element_invariant(l: &FiniteLattice, a: Elem) -> (usize, usize, usize, usize, usize, usize) {
    let n = l.size();
    let below = (0..n).filter(|&x| l.leq(x, a)).count();
    let above = (0..n).filter(|&x| l.leq(a, x)).count();
    let covers_up = l.covers().iter().filter(|&&(x, _)| x == a).count();
    let covers_down = l.covers().iter().filter(|&&(_, y)| y == a).count();
    let ji = l.join_irreducible(a) as usize;
    let mi = l.meet_irreducible(a) as usize;
    (below, above, covers_up, covers_down, ji, mi)
}

fn iso_search(
    a: &FiniteLattice,
    b: &FiniteLattice,
    fixed: Option<(Elem, Elem)>,
    all: bool,
) -> Vec<Vec<Elem>> {
    let n = a.size();
    let mut found = Vec::new();
    if n != b.size() {
        return found;
    }
    let inv_a: Vec<_> = (0..n).map(|x| element_invariant(a, x)).collect();
    let inv_b: Vec<_> = (0..n).map(|x| element_invariant(b, x)).collect();
    {
        let mut sa = inv_a.clone();
        let mut sb = inv_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return found;
        }
    }
    // Assign images for elements in a fixed order, most constrained first.
    let mut order: Vec<Elem> = (0..n).collect();
    order.sort_by_key(|&x| {
        let same = inv_a.iter().filter(|&&i| i == inv_a[x]).count();
        (Some((x, x)) != fixed.map(|(u, _)| (u, x)), same)
    });
    if let Some((u, _)) = fixed {
        order.retain(|&x| x != u);
        order.insert(0, u);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(a: &FiniteLattice, b: &FiniteLattice, map: &[Elem], x: Elem) -> bool {
        let y = map[x];
        for z in 0..a.size() {
            let w = map[z];
            if w == usize::MAX {
                continue;
            }
            if a.leq(x, z) != b.leq(y, w) || a.leq(z, x) != b.leq(w, y) {
                return false;
            }
            // Meet/join must also land consistently when both images known.
            let m = map[a.meet(x, z)];
            if m != usize::MAX && m != b.meet(y, w) {
                return false;
            }
            let j = map[a.join(x, z)];
            if j != usize::MAX && j != b.join(y, w) {
                return false;
            }
        }
        true
    }

    fn rec(
        a: &FiniteLattice,
        b: &FiniteLattice,
        order: &[Elem],
        depth: usize,
        inv_a: &[(usize, usize, usize, usize, usize, usize)],
        inv_b: &[(usize, usize, usize, usize, usize, usize)],
        fixed: Option<(Elem, Elem)>,
        map: &mut Vec<Elem>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<Elem>>,
        all: bool,
    ) {
        if !all && !found.is_empty() {
            return;
        }
        if depth == order.len() {
            found.push(map.clone());
            return;
        }
        let x = order[depth];
        for y in 0..b.size() {
            if used[y] || inv_a[x] != inv_b[y] {
                continue;
            }
            if let Some((u, v)) = fixed {
                if (x == u) != (y == v) {
                    continue;
                }
            }
            map[x] = y;
            used[y] = true;
            if consistent(a, b, map, x) {
                rec(a, b, order, depth + 1, inv_a, inv_b, fixed, map, used, found, all);
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
    }

    rec(
        a, b, &order, 0, &inv_a, &inv_b, fixed, &mut map, &mut used, &mut found, all,
    );
    found
}

/// A lattice isomorphism `a -> b` (optionally pinning one element's image).
pub fn lattice_isomorphism(
    a: &FiniteLattice,
    b: &FiniteLattice,
    fixed: Option<(Elem, Elem)>,
) -> Option<Vec<Elem>> {
    iso_search(a, b, fixed, false).into_iter().next()
}

/// All isomorphisms `a -> b`; with `a == b` these are the automorphisms.
pub fn all_isomorphisms(
    a: &FiniteLattice,
    b: &FiniteLattice,
    fixed: Option<(Elem, Elem)>,
) -> Vec<Vec<Elem>> {
    iso_search(a, b, fixed, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn two_chain_from_covers() {
        let l = FiniteLattice::from_relation(2, &[(0, 1)], RelationKind::Covers).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        l.validate().unwrap();
    }

    #[test]
    fn pentagon_tables() {
        // bottom=0, a=1, top=4 on the left; 0 < 2 < 3 < 4 on the right.
        let l = FiniteLattice::from_relation(
            5,
            &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)],
            RelationKind::Covers,
        )
        .unwrap();
        assert_eq!(l.meet(1, 3), 0);
        assert_eq!(l.join(1, 2), 4);
        assert!(!l.is_distributive());
        l.validate().unwrap();
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        let err = FiniteLattice::from_relation(
            4,
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
            RelationKind::Covers,
        )
        .unwrap_err();
        // both bounds of the minimal pair fail; the witness pair is reported
        match err {
            LatticeError::NotALattice { a, b, .. } => assert_eq!((a, b), (0, 1)),
            other => panic!("expected NotALattice, got {other:?}"),
        }
    }

    #[test]
    fn cycle_is_rejected() {
        let err =
            FiniteLattice::from_relation(2, &[(0, 1), (1, 0)], RelationKind::Covers).unwrap_err();
        assert!(matches!(err, LatticeError::NotAPartialOrder(_)));
    }

    #[test]
    fn bottom_is_join_prime_and_irreducible() {
        for alg in [fixtures::n5_unital(), fixtures::m3_unital()] {
            let bot = alg.bottom();
            assert!(alg.lattice().join_prime(bot));
            assert!(alg.lattice().join_irreducible(bot));
        }
    }

    #[test]
    fn n5_left_atom_is_join_prime() {
        let a = fixtures::n5_left_pointed();
        assert!(a.lattice().join_prime(a.unit()));
        assert!(a.is_prime_pointed());
        assert!(!a.is_conic()); // b and the unit are incomparable
    }

    #[test]
    fn m3_plus_one_is_prime_pointed() {
        let a = fixtures::m3_plus_one();
        assert!(a.is_prime_pointed());
        assert!(a.is_integral());
    }

    #[test]
    fn pentagon_unital_structural() {
        let a = fixtures::n5_unital();
        assert!(a.is_integral());
        assert!(!a.structural_class(StructuralProp::Distributive));
    }

    #[test]
    fn cones_of_n5_left() {
        let a = fixtures::n5_left_pointed();
        let (neg, _) = a.cone(ConeSign::Negative);
        assert_eq!(neg.size(), 2);
        assert!(neg.is_integral());
        let (pos, _) = a.cone(ConeSign::Positive);
        assert_eq!(pos.size(), 2);
        assert!(pos.is_dually_integral());
    }

    #[test]
    fn cone_of_two_chain() {
        let c = fixtures::chain(2, 1);
        let (pos, _) = c.cone(ConeSign::Positive);
        assert_eq!(pos.size(), 1);
        let c0 = fixtures::chain(2, 0);
        let (neg, _) = c0.cone(ConeSign::Negative);
        assert_eq!(neg.size(), 1);
    }

    #[test]
    fn prime_filters_of_two_chain() {
        let c = fixtures::chain(2, 1);
        let fs = c.one_filters(true);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].len(), 1); // just the top
        assert_eq!(fs[1].len(), 2); // the total filter

        // unit at the bottom: only the total filter contains it
        let c0 = fixtures::chain(2, 0);
        assert_eq!(c0.one_filters(false).len(), 1);
        assert_eq!(c0.one_filters(false)[0].len(), 2);
    }

    #[test]
    fn prime_filters_of_n5_left() {
        let a = fixtures::n5_left_pointed();
        let fs = a.one_filters(true);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].iter().collect::<Vec<_>>(), vec![1, 4]); // upset of the atom
        assert_eq!(fs[1].len(), 5); // total
    }

    #[test]
    fn m3_has_no_prime_proper_ideal() {
        let a = fixtures::m3_unital();
        assert!(a.one_proper_ideals(true).is_empty());
        // but it has non-prime 1-proper ideals
        assert_eq!(a.one_proper_ideals(false).len(), 4);
    }

    #[test]
    fn n5_left_prime_ideal_is_complement_of_prime_filter() {
        let a = fixtures::n5_left_pointed();
        let ideals = a.one_proper_ideals(true);
        assert_eq!(ideals.len(), 1);
        let filters = a.one_filters(true);
        assert_eq!(ideals[0], filters[0].complement());
    }

    #[test]
    fn iso_respects_unit() {
        let top = fixtures::chain(2, 1);
        let bot = fixtures::chain(2, 0);
        assert!(top.isomorphism_to(&top).is_some());
        assert!(top.isomorphism_to(&bot).is_none());
    }

    #[test]
    fn m3_automorphisms() {
        let a = fixtures::m3_unital();
        // unit is the top; the three atoms permute freely
        assert_eq!(a.automorphisms().len(), 6);
    }
}
