//! Lattice congruences: generation, the full congruence lattice, quotients,
//! least congruences with a prescribed positive kernel, and the decision
//! procedures characterizing semi-prime-pointed lattices.

use crate::bitset::{Elem, ElemSet};
use crate::order::{FiniteLattice, PointedLattice};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("the given set is not a prime 1-filter")]
    NotAPrimeOneFilter,
}

/// A partition of `{0..n-1}` compatible with the algebra's operations.
/// Class ids are normalized by first occurrence, so equal partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    classes: Vec<u32>,
}

impl std::fmt::Debug for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.blocks()).finish()
    }
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Congruence {
            classes: (0..n as u32).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Congruence {
            classes: vec![0; n.max(1)],
        }
    }

    /// Normalizes an arbitrary class assignment into first-occurrence ids.
    pub fn from_class_vec(raw: &[usize]) -> Self {
        let width = raw.iter().max().map_or(0, |&m| m + 1);
        let mut rename: Vec<Option<u32>> = vec![None; width];
        let mut next = 0u32;
        let mut classes = Vec::with_capacity(raw.len());
        for &c in raw {
            let id = *rename[c].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            classes.push(id);
        }
        Congruence { classes }
    }

    pub fn size(&self) -> usize {
        self.classes.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.iter().map(|&c| c as usize).max().unwrap_or(0) + 1
    }

    #[inline]
    pub fn same(&self, a: Elem, b: Elem) -> bool {
        self.classes[a] == self.classes[b]
    }

    pub fn class_of(&self, a: Elem) -> usize {
        self.classes[a] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_classes() == 1
    }

    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (e, &c) in self.classes.iter().enumerate() {
            out[c as usize].push(e);
        }
        out
    }

    /// Meet in the congruence lattice: the common refinement.
    pub fn intersect(&self, other: &Congruence) -> Congruence {
        debug_assert_eq!(self.size(), other.size());
        let k = other.num_classes();
        let raw: Vec<usize> = (0..self.size())
            .map(|e| self.class_of(e) * k + other.class_of(e))
            .collect();
        Congruence::from_class_vec(&raw)
    }

    /// Does this partition refine `other` (every class fits inside one of `other`'s)?
    pub fn refines(&self, other: &Congruence) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let n = self.size();
        (0..n).all(|a| (a + 1..n).all(|b| !self.same(a, b) || other.same(a, b)))
    }

    /// All related pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.same(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Is this partition compatible with the lattice operations?
    pub fn is_lattice_congruence(&self, l: &FiniteLattice) -> bool {
        let n = l.size();
        (0..n).all(|a| {
            (0..n).all(|b| {
                !self.same(a, b)
                    || (0..n).all(|c| {
                        self.same(l.meet(a, c), l.meet(b, c))
                            && self.same(l.join(a, c), l.join(b, c))
                    })
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    fn to_congruence(&mut self) -> Congruence {
        let raw: Vec<usize> = (0..self.parent.len()).map(|e| self.find(e)).collect();
        Congruence::from_class_vec(&raw)
    }
}

/// Least equivalence containing `pairs` and closed under the given unary
/// maps (each a full table over the universe). Fixpoint of union-find
/// merging; for lattices the maps `x -> x ^ c` and `x -> x v c` suffice
/// to force compatibility.
pub fn close_under_translations(
    n: usize,
    pairs: &[(Elem, Elem)],
    unary_maps: &[Vec<Elem>],
) -> Congruence {
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in a + 1..n {
                if uf.find(a) == uf.find(b) {
                    for map in unary_maps {
                        changed |= uf.union(map[a], map[b]);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    uf.to_congruence()
}

fn lattice_translation_maps(l: &FiniteLattice) -> Vec<Vec<Elem>> {
    let n = l.size();
    let mut maps = Vec::with_capacity(2 * n);
    for c in 0..n {
        maps.push((0..n).map(|x| l.meet(x, c)).collect());
        maps.push((0..n).map(|x| l.join(x, c)).collect());
    }
    maps
}

/// Least lattice congruence containing the given pairs.
pub fn generated_congruence(a: &PointedLattice, pairs: &[(Elem, Elem)]) -> Congruence {
    close_under_translations(a.size(), pairs, &lattice_translation_maps(a.lattice()))
}

/// Join in the congruence lattice: the transitive closure of the union,
/// which is again a congruence.
pub fn congruence_join(a: &Congruence, b: &Congruence) -> Congruence {
    let n = a.size();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if a.same(x, y) || b.same(x, y) {
                uf.union(x, y);
            }
        }
    }
    uf.to_congruence()
}

/// The full congruence lattice, computed as the join closure of the
/// principal congruences together with the identity.
pub fn all_congruences(a: &PointedLattice) -> Result<Vec<Congruence>, CongruenceError> {
    let n = a.size();
    if n > 12 {
        return Err(CongruenceError::CapacityExceeded(format!(
            "congruence lattice computation capped at size 12, got {n}"
        )));
    }
    let mut seen: std::collections::HashSet<Congruence> = std::collections::HashSet::new();
    let mut list: Vec<Congruence> = Vec::new();
    let mut push = |c: Congruence, list: &mut Vec<Congruence>| {
        if seen.insert(c.clone()) {
            list.push(c);
            true
        } else {
            false
        }
    };
    push(Congruence::identity(n), &mut list);
    for x in 0..n {
        for y in x + 1..n {
            push(generated_congruence(a, &[(x, y)]), &mut list);
        }
    }
    let mut frontier = 0;
    while frontier < list.len() {
        let current = list[frontier].clone();
        frontier += 1;
        for i in 0..frontier.saturating_sub(1) {
            let joined = congruence_join(&current, &list[i]);
            push(joined, &mut list);
        }
    }
    list.sort_by_key(|c| (c.num_classes(), c.clone()));
    Ok(list)
}

/// Quotient pointed lattice and the element -> block map. The block order
/// is `[a] <= [b]` iff `(a v b, b)` lies in the congruence.
pub fn quotient(a: &PointedLattice, theta: &Congruence) -> (PointedLattice, Vec<Elem>) {
    debug_assert_eq!(theta.size(), a.size());
    let blocks = theta.blocks();
    let m = blocks.len();
    let reps: Vec<Elem> = blocks.iter().map(|b| b[0]).collect();
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = theta.same(a.join(reps[i], reps[j]), reps[j]);
        }
    }
    let lat = FiniteLattice::from_leq_closed(m, leq)
        .expect("quotient of a lattice by a congruence is a lattice");
    let unit = theta.class_of(a.unit());
    let map = (0..a.size()).map(|e| theta.class_of(e)).collect();
    (
        PointedLattice::new(lat, unit).expect("unit block in range"),
        map,
    )
}

/// The positive kernel of a congruence: elements whose block lies at or
/// above the unit block in the quotient. Always a 1-filter.
pub fn positive_kernel(a: &PointedLattice, theta: &Congruence) -> ElemSet {
    let u = a.unit();
    ElemSet::from_elems(
        a.size(),
        a.elems().filter(|&x| theta.same(a.join(u, x), x)),
    )
}

/// Least congruence whose positive kernel is the prime 1-filter `f`:
/// generated by the pairs `(f ^ 1, 1)` over the filter.
pub fn least_congruence_with_kernel(
    a: &PointedLattice,
    f: &ElemSet,
) -> Result<Congruence, CongruenceError> {
    if !a.is_prime_one_filter(f) {
        return Err(CongruenceError::NotAPrimeOneFilter);
    }
    let u = a.unit();
    let pairs: Vec<(Elem, Elem)> = f.iter().map(|x| (a.meet(x, u), u)).collect();
    Ok(generated_congruence(a, &pairs))
}

/// Least congruence with conic quotient and positive kernel `f`: adds the
/// collapsing pairs `(i ^ 1, i)` for elements outside the filter.
pub fn least_conic_congruence_with_kernel(
    a: &PointedLattice,
    f: &ElemSet,
) -> Result<Congruence, CongruenceError> {
    if !a.is_prime_one_filter(f) {
        return Err(CongruenceError::NotAPrimeOneFilter);
    }
    let u = a.unit();
    let mut pairs: Vec<(Elem, Elem)> = f.iter().map(|x| (a.meet(x, u), u)).collect();
    for i in a.elems() {
        if !f.contains(i) {
            pairs.push((a.meet(i, u), i));
        }
    }
    Ok(generated_congruence(a, &pairs))
}

/// `x v y >= 1 & x v z >= 1  implies  x v (y ^ z) >= 1`, checked on all triples.
pub fn up_distributive_at_1(a: &PointedLattice) -> bool {
    let u = a.unit();
    a.elems().all(|x| {
        a.elems().all(|y| {
            a.elems().all(|z| {
                !(a.leq(u, a.join(x, y)) && a.leq(u, a.join(x, z)))
                    || a.leq(u, a.join(x, a.meet(y, z)))
            })
        })
    })
}

/// `x v y = 1 & x v z = 1  implies  x v (y ^ z) = 1`.
pub fn join_semidistributive_at_1(a: &PointedLattice) -> bool {
    let u = a.unit();
    a.elems().all(|x| {
        a.elems().all(|y| {
            a.elems().all(|z| {
                !(a.join(x, y) == u && a.join(x, z) == u) || a.join(x, a.meet(y, z)) == u
            })
        })
    })
}

/// Decomposability at the unit: for every subset of size >= 2 joining to
/// the unit, the principal congruences to the unit intersect trivially.
pub fn decomposable_at_1(a: &PointedLattice) -> Result<bool, CongruenceError> {
    let n = a.size();
    if n > 10 {
        return Err(CongruenceError::CapacityExceeded(format!(
            "decomposability check capped at size 10, got {n}"
        )));
    }
    let u = a.unit();
    let principal: Vec<Congruence> = (0..n)
        .map(|x| generated_congruence(a, &[(x, u)]))
        .collect();
    let identity = Congruence::identity(n);

    // DFS over subsets. Once the partial join escapes the downset of the
    // unit no extension can join to exactly the unit; once the partial
    // intersection is the identity every extension passes.
    fn dfs(
        a: &PointedLattice,
        principal: &[Congruence],
        identity: &Congruence,
        next: Elem,
        count: usize,
        join_so_far: Option<Elem>,
        inter: Option<Congruence>,
    ) -> bool {
        let u = a.unit();
        if let Some(j) = join_so_far {
            if !a.leq(j, u) {
                return true;
            }
        }
        if let Some(i) = &inter {
            if i == identity {
                return true;
            }
        }
        if next == a.size() {
            return match (join_so_far, inter) {
                (Some(j), Some(i)) if count >= 2 && j == u => i == *identity,
                _ => true,
            };
        }
        // exclude `next`
        if !dfs(a, principal, identity, next + 1, count, join_so_far, inter.clone()) {
            return false;
        }
        // include `next`
        let j2 = Some(join_so_far.map_or(next, |j| a.join(j, next)));
        let i2 = Some(match &inter {
            None => principal[next].clone(),
            Some(i) => i.intersect(&principal[next]),
        });
        dfs(a, principal, identity, next + 1, count + 1, j2, i2)
    }

    Ok(dfs(a, &principal, &identity, 0, 0, None, None))
}

/// The quasi-equation `x1 v ... v xn >= 1  implies
/// (x1 ^ z) v ... v (xn ^ z) >= 1 ^ z`, checked exhaustively.
pub fn alpha_n_holds(a: &PointedLattice, n: usize) -> Result<bool, CongruenceError> {
    if !(2..=4).contains(&n) {
        return Err(CongruenceError::CapacityExceeded(format!(
            "arity for the meet-distribution quasi-equation must be 2..=4, got {n}"
        )));
    }
    let u = a.unit();
    let size = a.size();
    let mut tuple = vec![0usize; n];
    loop {
        let join_x = a.lattice().join_set(tuple.iter().copied());
        if a.leq(u, join_x) {
            for z in 0..size {
                let lhs = a
                    .lattice()
                    .join_set(tuple.iter().map(|&x| a.meet(x, z)));
                if !a.leq(a.meet(u, z), lhs) {
                    return Ok(false);
                }
            }
        }
        // next tuple
        let mut k = 0;
        loop {
            if k == n {
                return Ok(true);
            }
            tuple[k] += 1;
            if tuple[k] < size {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
    }
}

/// Is the algebra a subdirect product of quotients satisfying `quality`?
/// Returns a minimal witnessing family of congruences (greedily reduced)
/// when it is.
pub fn subdirect_into(
    a: &PointedLattice,
    quality: &dyn Fn(&PointedLattice) -> bool,
) -> Result<Option<Vec<Congruence>>, CongruenceError> {
    if a.size() > 10 {
        return Err(CongruenceError::CapacityExceeded(format!(
            "subdirect decomposition capped at size 10, got {}",
            a.size()
        )));
    }
    let candidates: Vec<Congruence> = all_congruences(a)?
        .into_iter()
        .filter(|theta| quality(&quotient(a, theta).0))
        .collect();
    let n = a.size();
    let identity = Congruence::identity(n);
    let mut inter = Congruence::total(n);
    for c in &candidates {
        inter = inter.intersect(c);
    }
    if inter != identity {
        return Ok(None);
    }
    // Greedy reduction, keeping the deterministic candidate order.
    let mut family = candidates;
    let mut i = 0;
    while i < family.len() {
        let mut without = Congruence::total(n);
        for (j, c) in family.iter().enumerate() {
            if j != i {
                without = without.intersect(c);
            }
        }
        if without == identity {
            family.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(Some(family))
}

/// Shorthand: subdirect product of prime-pointed lattices.
pub fn is_semi_prime_pointed(a: &PointedLattice) -> Result<bool, CongruenceError> {
    Ok(subdirect_into(a, &|q| q.is_prime_pointed())?.is_some())
}

/// Shorthand: subdirect product of irreducible-pointed lattices.
pub fn is_semi_irreducible_pointed(a: &PointedLattice) -> Result<bool, CongruenceError> {
    Ok(subdirect_into(a, &|q| q.is_irreducible_pointed())?.is_some())
}

/// Shorthand: subdirect product of conic pointed lattices.
pub fn is_semiconic(a: &PointedLattice) -> Result<bool, CongruenceError> {
    Ok(subdirect_into(a, &|q| q.is_conic())?.is_some())
}

/// The five equivalent characterizations of semi-prime-pointedness, each
/// computed by an independent route. A disagreement would falsify the
/// implementation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SppProfile {
    /// Subdirect product of prime-pointed quotients exists.
    pub subdirect: bool,
    /// Up-distributive and decomposable at the unit.
    pub updistributive_decomposable: bool,
    /// The binary meet-distribution quasi-equation plus decomposability.
    pub alpha_decomposable: bool,
    /// The kernel congruences of all prime 1-filters intersect trivially.
    pub kernel_congruences: bool,
    /// Finite form: every non-empty family of prime 1-filters meeting to
    /// the unit filter has trivially intersecting kernel congruences.
    pub filter_families: bool,
}

impl SppProfile {
    pub fn components(&self) -> [bool; 5] {
        [
            self.subdirect,
            self.updistributive_decomposable,
            self.alpha_decomposable,
            self.kernel_congruences,
            self.filter_families,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.components();
        c.iter().all(|&x| x == c[0])
    }
}

fn filter_family_condition(
    a: &PointedLattice,
    kernel_congruence: &dyn Fn(&PointedLattice, &ElemSet) -> Congruence,
) -> bool {
    let filters = a.one_filters(true);
    let unit_filter = a.lattice().upset(a.unit());
    let thetas: Vec<Congruence> = filters.iter().map(|f| kernel_congruence(a, f)).collect();
    let identity = Congruence::identity(a.size());
    let k = filters.len();
    for mask in 1u32..(1 << k) {
        let mut meet_f = ElemSet::full(a.size());
        let mut meet_theta = Congruence::total(a.size());
        for i in 0..k {
            if mask >> i & 1 == 1 {
                meet_f.intersect_with(&filters[i]);
                meet_theta = meet_theta.intersect(&thetas[i]);
            }
        }
        if meet_f == unit_filter && meet_theta != identity {
            return false;
        }
    }
    true
}

pub fn spp_profile(a: &PointedLattice) -> Result<SppProfile, CongruenceError> {
    let subdirect = is_semi_prime_pointed(a)?;
    let ud = up_distributive_at_1(a);
    let dec = decomposable_at_1(a)?;
    let alpha = alpha_n_holds(a, 2)?;
    let identity = Congruence::identity(a.size());
    let mut all_kernel = Congruence::total(a.size());
    for f in a.one_filters(true) {
        all_kernel = all_kernel
            .intersect(&least_congruence_with_kernel(a, &f).expect("filters are prime here"));
    }
    let families = ud
        && filter_family_condition(a, &|alg, f| {
            least_congruence_with_kernel(alg, f).expect("filters are prime here")
        });
    Ok(SppProfile {
        subdirect,
        updistributive_decomposable: ud && dec,
        alpha_decomposable: alpha && dec,
        kernel_congruences: all_kernel == identity,
        filter_families: families,
    })
}

/// The six equivalent characterizations of "semiconic and semi-prime-pointed".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiconicSppProfile {
    /// Semiconic (subdirect into conic) and semi-prime-pointed.
    pub semiconic_and_spp: bool,
    /// Subdirect product of conic prime-pointed quotients.
    pub subdirect_conic_prime: bool,
    /// Semiconic equations, up-distributive, decomposable.
    pub equations_updistributive_decomposable: bool,
    /// Semiconic equations, meet-distribution quasi-equation, decomposable.
    pub equations_alpha_decomposable: bool,
    /// The conic kernel congruences of all prime 1-filters meet trivially.
    pub conic_kernel_congruences: bool,
    /// Finite form: up-distributive and the all-prime-filters family has
    /// trivially intersecting conic kernel congruences.
    pub finite_form: bool,
}

impl SemiconicSppProfile {
    pub fn components(&self) -> [bool; 6] {
        [
            self.semiconic_and_spp,
            self.subdirect_conic_prime,
            self.equations_updistributive_decomposable,
            self.equations_alpha_decomposable,
            self.conic_kernel_congruences,
            self.finite_form,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.components();
        c.iter().all(|&x| x == c[0])
    }
}

/// The three semiconic equations (meet-distribution at the unit, its dual,
/// and the modular-style mixed law), checked exhaustively.
pub fn semiconic_equations(a: &PointedLattice) -> [bool; 3] {
    let u = a.unit();
    let eq1 = a.elems().all(|x| {
        a.elems()
            .all(|y| a.meet(u, a.join(x, y)) == a.join(a.meet(u, x), a.meet(u, y)))
    });
    let eq2 = a.elems().all(|x| {
        a.elems()
            .all(|y| a.join(u, a.meet(x, y)) == a.meet(a.join(u, x), a.join(u, y)))
    });
    let eq3 = a.elems().all(|x| {
        a.elems()
            .all(|y| a.meet(x, a.join(u, y)) == a.join(a.meet(x, u), a.meet(x, y)))
    });
    [eq1, eq2, eq3]
}

/// The cancellation quasi-equation: equal meets and joins with the unit
/// force equality.
pub fn semiconic_quasi_equation(a: &PointedLattice) -> bool {
    let u = a.unit();
    a.elems().all(|x| {
        a.elems().all(|y| {
            !(a.meet(u, x) == a.meet(u, y) && a.join(u, x) == a.join(u, y)) || x == y
        })
    })
}

pub fn semiconic_spp_profile(a: &PointedLattice) -> Result<SemiconicSppProfile, CongruenceError> {
    let spp = is_semi_prime_pointed(a)?;
    let semiconic = is_semiconic(a)?;
    let conic_prime = subdirect_into(a, &|q| q.is_conic() && q.is_prime_pointed())?.is_some();
    let eqs = semiconic_equations(a).iter().all(|&b| b);
    let ud = up_distributive_at_1(a);
    let dec = decomposable_at_1(a)?;
    let alpha = alpha_n_holds(a, 2)?;
    let identity = Congruence::identity(a.size());
    let mut all_kernel = Congruence::total(a.size());
    for f in a.one_filters(true) {
        all_kernel = all_kernel.intersect(
            &least_conic_congruence_with_kernel(a, &f).expect("filters are prime here"),
        );
    }
    let conic_kernels = all_kernel == identity;
    Ok(SemiconicSppProfile {
        semiconic_and_spp: semiconic && spp,
        subdirect_conic_prime: conic_prime,
        equations_updistributive_decomposable: eqs && ud && dec,
        equations_alpha_decomposable: eqs && alpha && dec,
        conic_kernel_congruences: conic_kernels,
        finite_form: ud && conic_kernels,
    })
}

/// The five equivalent definitions of a semiconic pointed lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiconicProfile {
    /// Subdirect product of conic quotients exists.
    pub subdirect: bool,
    /// The unit-fiber relations are congruences intersecting trivially.
    pub cone_congruences: bool,
    /// The three equations.
    pub equations: bool,
    /// First two equations plus the cancellation quasi-equation.
    pub quasi_equation: bool,
    /// First two equations plus no pentagon configuration pointed at the
    /// short side's atom.
    pub no_forbidden_pentagon: bool,
}

impl SemiconicProfile {
    pub fn components(&self) -> [bool; 5] {
        [
            self.subdirect,
            self.cone_congruences,
            self.equations,
            self.quasi_equation,
            self.no_forbidden_pentagon,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.components();
        c.iter().all(|&x| x == c[0])
    }
}

/// Does the algebra contain a pointed sublattice isomorphic to the pentagon
/// with the unit at the atom of its two-element side?
pub fn contains_forbidden_pentagon(a: &PointedLattice) -> bool {
    // Pattern: bot < u < top, bot < b < c < top, u incomparable to b and c,
    // with u the unit of the ambient algebra. Meets/joins must agree with
    // the pentagon's, making the image a sublattice.
    let u = a.unit();
    let n = a.size();
    for bot in 0..n {
        if !a.leq(bot, u) || bot == u {
            continue;
        }
        for b in 0..n {
            if b == bot || b == u || !a.leq(bot, b) {
                continue;
            }
            if a.leq(b, u) || a.leq(u, b) {
                continue;
            }
            for c in 0..n {
                if c == bot || c == u || c == b || !a.leq(b, c) {
                    continue;
                }
                if a.leq(c, u) || a.leq(u, c) {
                    continue;
                }
                for top in 0..n {
                    if top == bot || top == u || top == b || top == c {
                        continue;
                    }
                    if !a.leq(u, top) || !a.leq(c, top) {
                        continue;
                    }
                    let ok = a.meet(u, b) == bot
                        && a.meet(u, c) == bot
                        && a.join(u, b) == top
                        && a.join(u, c) == top
                        && a.meet(b, c) == b
                        && a.join(b, c) == c
                        && a.meet(bot, u) == bot
                        && a.join(u, top) == top;
                    if ok {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn semiconic_profile(a: &PointedLattice) -> Result<SemiconicProfile, CongruenceError> {
    let subdirect = is_semiconic(a)?;
    let u = a.unit();
    let n = a.size();
    // theta_down identifies elements with equal meet with the unit;
    // theta_up dually. They decompose the algebra over its cones exactly
    // when both are congruences meeting trivially.
    let down_raw: Vec<usize> = (0..n).map(|x| a.meet(u, x)).collect();
    let up_raw: Vec<usize> = (0..n).map(|x| a.join(u, x)).collect();
    let theta_down = Congruence::from_class_vec(&down_raw);
    let theta_up = Congruence::from_class_vec(&up_raw);
    let cone_congruences = theta_down.is_lattice_congruence(a.lattice())
        && theta_up.is_lattice_congruence(a.lattice())
        && theta_down.intersect(&theta_up) == Congruence::identity(n);
    let eqs = semiconic_equations(a);
    let quasi = semiconic_quasi_equation(a);
    Ok(SemiconicProfile {
        subdirect,
        cone_congruences,
        equations: eqs.iter().all(|&b| b),
        quasi_equation: eqs[0] && eqs[1] && quasi,
        no_forbidden_pentagon: eqs[0] && eqs[1] && !contains_forbidden_pentagon(a),
    })
}

/// Congruences whose quotient satisfies the quality predicate.
pub fn quality_congruences(
    a: &PointedLattice,
    quality: &dyn Fn(&PointedLattice) -> bool,
) -> Result<Vec<Congruence>, CongruenceError> {
    Ok(all_congruences(a)?
        .into_iter()
        .filter(|theta| quality(&quotient(a, theta).0))
        .collect())
}

/// Relative subdirect irreducibility with respect to the quasivariety cut
/// out by `quality` on quotients: no family (pair, when `finitely`) of
/// non-identity quality congruences intersects to the identity.
pub fn relatively_subdirectly_irreducible(
    a: &PointedLattice,
    quality: &dyn Fn(&PointedLattice) -> bool,
    finitely: bool,
) -> Result<bool, CongruenceError> {
    if a.size() > 10 {
        return Err(CongruenceError::CapacityExceeded(format!(
            "relative irreducibility capped at size 10, got {}",
            a.size()
        )));
    }
    let identity = Congruence::identity(a.size());
    let qc: Vec<Congruence> = quality_congruences(a, quality)?
        .into_iter()
        .filter(|c| *c != identity)
        .collect();
    if finitely {
        Ok(qc
            .iter()
            .all(|x| qc.iter().all(|y| x.intersect(y) != identity)))
    } else {
        let mut inter = Congruence::total(a.size());
        for c in &qc {
            inter = inter.intersect(c);
        }
        Ok(inter != identity)
    }
}

/// Relatively simple: exactly two quality congruences.
pub fn relatively_simple(
    a: &PointedLattice,
    quality: &dyn Fn(&PointedLattice) -> bool,
) -> Result<bool, CongruenceError> {
    Ok(quality_congruences(a, quality)?.len() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures::*;

    /// Independent oracle: all compatible partitions by brute force over
    /// restricted-growth strings.
    fn oracle_all_congruences(a: &PointedLattice) -> Vec<Congruence> {
        let n = a.size();
        let mut out = Vec::new();
        let mut raw = vec![0usize; n];
        fn rec(
            a: &PointedLattice,
            raw: &mut Vec<usize>,
            pos: usize,
            max_used: usize,
            out: &mut Vec<Congruence>,
        ) {
            let n = a.size();
            if pos == n {
                let c = Congruence::from_class_vec(raw);
                if c.is_lattice_congruence(a.lattice()) {
                    out.push(c);
                }
                return;
            }
            for v in 0..=max_used + 1 {
                raw[pos] = v;
                rec(a, raw, pos + 1, max_used.max(v), out);
            }
        }
        rec(a, &mut raw, 1, 0, &mut out);
        out.sort_by_key(|c| (c.num_classes(), c.clone()));
        out
    }

    #[test]
    fn generated_trivial_pair_is_identity() {
        let a = n5_unital();
        assert!(generated_congruence(&a, &[(2, 2)]).is_identity());
    }

    #[test]
    fn three_chain_principal() {
        let a = chain(3, 2);
        let theta = generated_congruence(&a, &[(1, 2)]);
        assert_eq!(theta.blocks(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn pentagon_principal_collapse() {
        // Collapsing the two elements of the long side drags nothing else.
        let a = n5_unital();
        let theta = generated_congruence(&a, &[(2, 3)]);
        assert_eq!(theta.blocks(), vec![vec![0], vec![1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn congruence_lattices_match_oracle() {
        for a in [
            chain(1, 0),
            chain(2, 1),
            chain(4, 2),
            boolean_square_unital(),
            n5_unital(),
            n5_left_pointed(),
            m3_unital(),
            m3_plus_one(),
        ] {
            let fast = all_congruences(&a).unwrap();
            let slow = oracle_all_congruences(&a);
            assert_eq!(fast, slow, "mismatch on {a:?}");
        }
    }

    #[test]
    fn m3_is_simple() {
        let a = m3_unital();
        assert_eq!(all_congruences(&a).unwrap().len(), 2);
    }

    #[test]
    fn quotient_by_identity_and_total() {
        let a = n5_left_pointed();
        let (q_id, _) = quotient(&a, &Congruence::identity(5));
        assert!(q_id.isomorphism_to(&a).is_some());
        let (q_tot, _) = quotient(&a, &Congruence::total(5));
        assert_eq!(q_tot.size(), 1);
    }

    #[test]
    fn quotient_pentagon_by_long_side_top() {
        let a = n5_unital();
        let theta = generated_congruence(&a, &[(3, 4)]);
        assert_eq!(theta.blocks(), vec![vec![0, 1], vec![2, 3, 4]]);
        let (q, _) = quotient(&a, &theta);
        assert!(q.isomorphism_to(&chain(2, 1)).is_some());
    }

    #[test]
    fn kernel_congruence_examples() {
        // unit filter of a prime-pointed algebra: all generators trivial
        let left = n5_left_pointed();
        let unit_up = left.lattice().upset(left.unit());
        assert!(least_congruence_with_kernel(&left, &unit_up)
            .unwrap()
            .is_identity());
        let a = n5_unital();

        let two = chain(2, 1);
        let whole = ElemSet::full(2);
        assert!(least_congruence_with_kernel(&two, &whole)
            .unwrap()
            .is_total());

        // pentagon-unital, filter above the long side's lower element
        // (the long side's upper element does not generate a prime filter:
        // the two atoms join above it)
        assert!(!a.is_prime_one_filter(&a.lattice().upset(3)));
        let f = a.lattice().upset(2);
        let theta = least_congruence_with_kernel(&a, &f).unwrap();
        assert_eq!(theta.blocks(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(positive_kernel(&a, &theta), f);
    }

    #[test]
    fn kernel_congruence_rejects_non_prime_filter() {
        let a = m3_unital();
        let top_only = a.lattice().upset(a.unit());
        // the unit filter of the diamond is a 1-filter but not prime
        assert!(!a.is_prime_one_filter(&top_only));
        assert!(matches!(
            least_congruence_with_kernel(&a, &top_only),
            Err(CongruenceError::NotAPrimeOneFilter)
        ));
    }

    #[test]
    fn conic_kernel_congruence_examples() {
        // On a conic algebra with the unit filter the extra generators are trivial.
        let c = chain(3, 1);
        let f = c.lattice().upset(1);
        assert!(least_conic_congruence_with_kernel(&c, &f)
            .unwrap()
            .is_identity());

        // On the left-pointed pentagon the collapse drags the top along:
        // the least congruence holding (bot, b) also holds (unit, top).
        let a = n5_left_pointed();
        let f = a.lattice().upset(1);
        let theta = least_conic_congruence_with_kernel(&a, &f).unwrap();
        assert_eq!(theta.blocks(), vec![vec![0, 2, 3], vec![1, 4]]);
        assert_eq!(positive_kernel(&a, &theta), f);
        let (q, _) = quotient(&a, &theta);
        assert!(q.is_conic());

        let two = chain(2, 1);
        assert!(
            least_conic_congruence_with_kernel(&two, &ElemSet::full(2))
                .unwrap()
                .is_total()
        );
    }

    #[test]
    fn positive_kernel_extremes() {
        let a = n5_unital();
        assert_eq!(
            positive_kernel(&a, &Congruence::identity(5)),
            a.lattice().upset(a.unit())
        );
        assert_eq!(positive_kernel(&a, &Congruence::total(5)), ElemSet::full(5));
    }

    #[test]
    fn updistributivity_examples() {
        assert!(up_distributive_at_1(&n5_unital()));
        assert!(!up_distributive_at_1(&m3_unital()));
        assert!(up_distributive_at_1(&n5_left_pointed())); // prime-pointed
    }

    #[test]
    fn semidistributivity_examples() {
        assert!(join_semidistributive_at_1(&n5_unital()));
        assert!(!join_semidistributive_at_1(&m3_unital()));
        assert!(join_semidistributive_at_1(&chain(2, 0)));
    }

    #[test]
    fn decomposability_examples() {
        assert!(decomposable_at_1(&n5_left_pointed()).unwrap()); // prime-pointed
        assert!(decomposable_at_1(&boolean_square_unital()).unwrap());
        assert!(!decomposable_at_1(&n5_unital()).unwrap());
    }

    #[test]
    fn alpha_examples() {
        assert!(!alpha_n_holds(&n5_unital(), 2).unwrap());
        assert!(alpha_n_holds(&boolean_square_unital(), 2).unwrap());
        assert!(alpha_n_holds(&chain(4, 2), 2).unwrap());
    }

    #[test]
    fn subdirect_examples() {
        let sq = boolean_square_unital();
        let witness = subdirect_into(&sq, &|q| q.is_prime_pointed())
            .unwrap()
            .expect("square is semi-prime-pointed");
        assert!(witness.len() <= 2);
        assert!(!is_semi_prime_pointed(&n5_unital()).unwrap());
        assert!(!is_semiconic(&n5_left_pointed()).unwrap());
    }

    #[test]
    fn spp_profiles() {
        let p = spp_profile(&boolean_square_unital()).unwrap();
        assert!(p.agree() && p.subdirect);
        let p = spp_profile(&m3_unital()).unwrap();
        assert!(p.agree() && !p.subdirect);
        let p = spp_profile(&n5_unital()).unwrap();
        assert!(p.agree() && !p.subdirect);
        assert!(up_distributive_at_1(&n5_unital()));
    }

    #[test]
    fn semiconic_spp_profiles() {
        let p = semiconic_spp_profile(&chain(3, 1)).unwrap();
        assert!(p.agree() && p.semiconic_and_spp);
        let p = semiconic_spp_profile(&n5_left_pointed()).unwrap();
        assert!(p.agree() && !p.semiconic_and_spp);
        let p = semiconic_spp_profile(&boolean_square_unital()).unwrap();
        assert!(p.agree() && p.semiconic_and_spp);
    }

    #[test]
    fn semiconic_profiles() {
        let p = semiconic_profile(&n5_left_pointed()).unwrap();
        assert!(p.agree() && !p.subdirect);
        assert!(contains_forbidden_pentagon(&n5_left_pointed()));

        let p = semiconic_profile(&chain(2, 1)).unwrap();
        assert!(p.agree() && p.subdirect);

        let m3p = PointedLattice::new(m3_unital().lattice().clone(), 1).unwrap();
        let p = semiconic_profile(&m3p).unwrap();
        assert!(p.agree() && !p.subdirect);
        // first equation already fails on the other two atoms
        assert!(!semiconic_equations(&m3p)[0]);
    }

    #[test]
    fn rsi_classification_examples() {
        let spp = |q: &PointedLattice| {
            up_distributive_at_1(q) && decomposable_at_1(q).unwrap_or(false)
        };
        // integral two-chain: relatively simple, hence r.s.i.
        assert!(relatively_simple(&chain(2, 1), &spp).unwrap());
        assert!(relatively_subdirectly_irreducible(&chain(2, 1), &spp, false).unwrap());
        // diamond plus unit: r.s.i. (the diamond is simple with reducible top)
        assert!(relatively_subdirectly_irreducible(&m3_plus_one(), &spp, false).unwrap());
        assert!(relatively_subdirectly_irreducible(&m3_plus_one(), &spp, true).unwrap());
        // integral three-chain: not r.s.i.
        assert!(!relatively_subdirectly_irreducible(&chain(3, 2), &spp, false).unwrap());
    }
}
