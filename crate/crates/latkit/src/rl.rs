//! Finite residuated lattices: validation with derived residuals, the
//! drastic multiplication, multiplicative 1-filters, one-sided congruences
//! and their correspondence with filters, the simplicity hierarchy, the
//! translated-axiom checks, and exhaustive enumeration over small bases.

use crate::bitset::{Elem, ElemSet};
use crate::congruence::{
    close_under_translations, congruence_join, positive_kernel, quotient, Congruence,
    CongruenceError,
};
use crate::logic::{holds, pre_transform, EvalError, KClass, TermAlgebra};
use crate::order::PointedLattice;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RlError {
    #[error("multiplication table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("table entry {0} out of range")]
    BadEntry(Elem),
    #[error("unit fails at {witness}: 1*x or x*1 differs from x")]
    UnitFails { witness: Elem },
    #[error("multiplication not monotone at ({a},{b},{c})")]
    NotMonotone { a: Elem, b: Elem, c: Elem },
    #[error("multiplication not associative at ({a},{b},{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("not residuated: {{y : {a}*y <= {b}}} has no maximum")]
    NotResiduated { a: Elem, b: Elem },
    #[error("no splitting pair: the unit is not join prime or is the bottom")]
    NoSplittingPair,
    #[error("filter is not normal; two-sided relation undefined")]
    NotNormal,
    #[error("the given set is not a multiplicative 1-filter")]
    NotAMultiplicativeFilter,
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}

/// A finite residuated lattice. The multiplication table is taken as input
/// and checked; both division tables are derived from it, never supplied.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRL {
    base: PointedLattice,
    mul: Vec<Elem>,
    ldiv: Vec<Elem>,
    rdiv: Vec<Elem>,
}

impl std::fmt::Debug for FiniteRL {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRL(base={:?}, mul={:?})", self.base, self.mul)
    }
}

impl FiniteRL {
    /// Validates monoid structure, order preservation, and residuation,
    /// deriving the division tables as the required maxima.
    pub fn new(base: PointedLattice, mul: Vec<Elem>) -> Result<Self, RlError> {
        let n = base.size();
        if mul.len() != n * n {
            return Err(RlError::TableShape {
                expected: n * n,
                got: mul.len(),
            });
        }
        if let Some(&e) = mul.iter().find(|&&e| e >= n) {
            return Err(RlError::BadEntry(e));
        }
        let m = |a: Elem, b: Elem| mul[a * n + b];
        let u = base.unit();
        for x in 0..n {
            if m(u, x) != x || m(x, u) != x {
                return Err(RlError::UnitFails { witness: x });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !base.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if !base.leq(m(a, c), m(b, c)) || !base.leq(m(c, a), m(c, b)) {
                        return Err(RlError::NotMonotone { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(RlError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut ldiv = vec![0; n * n];
        let mut rdiv = vec![0; n * n];
        for a in 0..n {
            for z in 0..n {
                // a \ z = max { y : a*y <= z }
                let ys: Vec<Elem> = (0..n).filter(|&y| base.leq(m(a, y), z)).collect();
                let max = ys
                    .iter()
                    .copied()
                    .find(|&cand| ys.iter().all(|&y| base.leq(y, cand)))
                    .ok_or(RlError::NotResiduated { a, b: z })?;
                ldiv[a * n + z] = max;
                // z / a = max { x : x*a <= z }
                let xs: Vec<Elem> = (0..n).filter(|&x| base.leq(m(x, a), z)).collect();
                let max = xs
                    .iter()
                    .copied()
                    .find(|&cand| xs.iter().all(|&x| base.leq(x, cand)))
                    .ok_or(RlError::NotResiduated { a, b: z })?;
                rdiv[z * n + a] = max;
            }
        }
        let rl = FiniteRL {
            base,
            mul,
            ldiv,
            rdiv,
        };
        debug_assert!(rl.residuation_laws_hold());
        Ok(rl)
    }

    pub fn base(&self) -> &PointedLattice {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn unit(&self) -> Elem {
        self.base.unit()
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.base.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.base.meet(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.base.join(a, b)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size() + b]
    }

    /// `a \ b`: the largest `y` with `a*y <= b`.
    #[inline]
    pub fn ldiv(&self, a: Elem, b: Elem) -> Elem {
        self.ldiv[a * self.size() + b]
    }

    /// `a / b`: the largest `x` with `x*b <= a`.
    #[inline]
    pub fn rdiv(&self, a: Elem, b: Elem) -> Elem {
        self.rdiv[a * self.size() + b]
    }

    pub fn elems(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn is_commutative(&self) -> bool {
        self.elems()
            .all(|a| self.elems().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn power(&self, a: Elem, k: usize) -> Elem {
        let mut acc = self.unit();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The residuation equivalences on all triples.
    pub fn residuation_laws_hold(&self) -> bool {
        self.elems().all(|x| {
            self.elems().all(|y| {
                self.elems().all(|z| {
                    let prod = self.leq(self.mul(x, y), z);
                    prod == self.leq(y, self.ldiv(x, z)) && prod == self.leq(x, self.rdiv(z, y))
                })
            })
        })
    }
}

impl TermAlgebra for FiniteRL {
    fn size(&self) -> usize {
        FiniteRL::size(self)
    }
    fn unit_elem(&self) -> Elem {
        self.unit()
    }
    fn leq_elems(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b)
    }
    fn meet_elems(&self, a: Elem, b: Elem) -> Elem {
        self.meet(a, b)
    }
    fn join_elems(&self, a: Elem, b: Elem) -> Elem {
        self.join(a, b)
    }
    fn mul_elems(&self, a: Elem, b: Elem) -> Option<Elem> {
        Some(self.mul(a, b))
    }
    fn ldiv_elems(&self, a: Elem, b: Elem) -> Option<Elem> {
        Some(self.ldiv(a, b))
    }
    fn rdiv_elems(&self, a: Elem, b: Elem) -> Option<Elem> {
        Some(self.rdiv(a, b))
    }
}

// ------------------------------------------------------------------
// The drastic multiplication
// ------------------------------------------------------------------

/// A splitting pair `(unit, coelement)`: the unit is not below the
/// coelement and every element is either above the unit or below the
/// coelement. Exists iff the unit is join prime and not the bottom.
pub fn find_splitting_pair(a: &PointedLattice) -> Option<(Elem, Elem)> {
    let u = a.unit();
    if !a.lattice().join_prime(u) {
        return None;
    }
    let below: Vec<Elem> = a.elems().filter(|&x| !a.leq(u, x)).collect();
    let co = a.lattice().join_set(below.iter().copied());
    let splits = !a.leq(u, co) && a.elems().all(|x| a.leq(u, x) || a.leq(x, co));
    splits.then_some((u, co))
}

/// The residual forced by the drastic multiplication, written out case by
/// case; used to cross-check the derived division tables.
fn drastic_residual(a: &PointedLattice, co: Elem, x: Elem, z: Elem) -> Elem {
    let u = a.unit();
    let x_hi = a.leq(u, x);
    let z_hi = a.leq(u, z);
    if !x_hi {
        if a.leq(x, z) {
            a.top()
        } else {
            co
        }
    } else if !z_hi {
        z
    } else if a.leq(x, z) {
        z
    } else {
        a.meet(z, co)
    }
}

/// Expands a pointed lattice with a splitting pair into a commutative RL
/// using the smallest residuated multiplication with the unit as identity:
/// below the unit everything multiplies to the bottom, above it to the join.
pub fn drastic_crl(a: &PointedLattice) -> Result<FiniteRL, RlError> {
    let (u, co) = find_splitting_pair(a).ok_or(RlError::NoSplittingPair)?;
    let n = a.size();
    let bot = a.bottom();
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let x_hi = a.leq(u, x);
            let y_hi = a.leq(u, y);
            mul[x * n + y] = match (x_hi, y_hi) {
                (false, false) => bot,
                (false, true) => x,
                (true, false) => y,
                (true, true) => a.join(x, y),
            };
        }
    }
    let rl = FiniteRL::new(a.clone(), mul)?;
    debug_assert!(rl.is_commutative());
    for x in 0..n {
        for z in 0..n {
            debug_assert_eq!(
                rl.ldiv(x, z),
                drastic_residual(a, co, x, z),
                "derived residual disagrees with the case table at ({x},{z})"
            );
        }
    }
    Ok(rl)
}

// ------------------------------------------------------------------
// Multiplicative 1-filters
// ------------------------------------------------------------------

/// All multiplicative 1-filters, smallest first. In a finite RL these are
/// the upsets of elements below the unit whose square sits above them
/// (`f*f >= f`).
pub fn mult_filters(rl: &FiniteRL) -> Vec<ElemSet> {
    let u = rl.unit();
    let mut out: Vec<ElemSet> = rl
        .elems()
        .filter(|&f| rl.leq(f, u) && rl.leq(f, rl.mul(f, f)))
        .map(|f| rl.base().lattice().upset(f))
        .collect();
    out.sort_by(|s, t| s.len().cmp(&t.len()).then(s.cmp(t)));
    out
}

pub fn is_mult_filter(rl: &FiniteRL, f: &ElemSet) -> bool {
    rl.base().is_one_filter(f) && f.iter().all(|x| f.iter().all(|y| f.contains(rl.mul(x, y))))
}

/// The multiplicative 1-filter generated by a set: powers of the meet of
/// the seed with the unit, stabilized.
pub fn fg_star(rl: &FiniteRL, seed: &ElemSet) -> ElemSet {
    debug_assert!(!seed.is_empty());
    let a = rl.base().lattice().meet_set(seed.iter());
    let mut c = rl.meet(rl.unit(), a);
    loop {
        let next = rl.mul(c, c);
        if next == c {
            break;
        }
        c = next;
    }
    rl.base().lattice().upset(c)
}

pub fn fg_star_single(rl: &FiniteRL, a: Elem) -> ElemSet {
    fg_star(rl, &ElemSet::singleton(rl.size(), a))
}

/// Join in the lattice of multiplicative 1-filters.
pub fn filter_join(rl: &FiniteRL, f: &ElemSet, g: &ElemSet) -> ElemSet {
    let mut seed = f.clone();
    seed.union_with(g);
    fg_star(rl, &seed)
}

/// Is `f` normal: `x\y` in the filter iff `y/x` is, for all pairs?
pub fn is_normal_filter(rl: &FiniteRL, f: &ElemSet) -> bool {
    rl.elems().all(|x| {
        rl.elems()
            .all(|y| f.contains(rl.ldiv(x, y)) == f.contains(rl.rdiv(y, x)))
    })
}

/// The conjugation characterization of normality: membership is preserved
/// by both conjugates `a \ (f*a)` and `(a*f) / a`.
pub fn is_normal_filter_by_conjugates(rl: &FiniteRL, f: &ElemSet) -> bool {
    f.iter().all(|x| {
        rl.elems()
            .all(|a| f.contains(rl.ldiv(a, rl.mul(x, a))) && f.contains(rl.rdiv(rl.mul(a, x), a)))
    })
}

// ------------------------------------------------------------------
// One-sided congruences
// ------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A lattice congruence closed under the translations of one or both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SidedCongruence {
    pub congruence: Congruence,
    pub side: Side,
}

fn side_translation_maps(rl: &FiniteRL, side: Side) -> Vec<Vec<Elem>> {
    let n = rl.size();
    let mut maps = Vec::new();
    for c in 0..n {
        maps.push((0..n).map(|x| rl.meet(x, c)).collect());
        maps.push((0..n).map(|x| rl.join(x, c)).collect());
        if side == Side::Left || side == Side::TwoSided {
            maps.push((0..n).map(|x| rl.mul(c, x)).collect());
            maps.push((0..n).map(|x| rl.ldiv(c, x)).collect());
        }
        if side == Side::Right || side == Side::TwoSided {
            maps.push((0..n).map(|x| rl.mul(x, c)).collect());
            maps.push((0..n).map(|x| rl.rdiv(x, c)).collect());
        }
    }
    maps
}

/// Is the partition closed under the side's defining translations?
pub fn is_sided_congruence(rl: &FiniteRL, theta: &Congruence, side: Side) -> bool {
    let maps = side_translation_maps(rl, side);
    let n = rl.size();
    (0..n).all(|a| {
        (a + 1..n).all(|b| !theta.same(a, b) || maps.iter().all(|m| theta.same(m[a], m[b])))
    })
}

/// The one-sided congruence induced by a multiplicative 1-filter: both
/// residuals of the pair must lie in the filter. For the two-sided case
/// the filter must be normal.
pub fn sided_theta(rl: &FiniteRL, f: &ElemSet, side: Side) -> Result<SidedCongruence, RlError> {
    if !is_mult_filter(rl, f) {
        return Err(RlError::NotAMultiplicativeFilter);
    }
    if side == Side::TwoSided && !is_normal_filter(rl, f) {
        return Err(RlError::NotNormal);
    }
    let n = rl.size();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let related = match side {
                Side::Left | Side::TwoSided => {
                    f.contains(rl.ldiv(x, y)) && f.contains(rl.ldiv(y, x))
                }
                Side::Right => f.contains(rl.rdiv(x, y)) && f.contains(rl.rdiv(y, x)),
            };
            if related {
                pairs.push((x, y));
            }
        }
    }
    let congruence = close_under_translations(n, &pairs, &[]);
    debug_assert!(is_sided_congruence(rl, &congruence, side));
    Ok(SidedCongruence { congruence, side })
}

/// All congruences of the given side, generated by closing principal pairs
/// under the side's translations and join-closing.
pub fn sided_congruences(rl: &FiniteRL, side: Side) -> Result<Vec<SidedCongruence>, RlError> {
    let n = rl.size();
    if n > 8 {
        return Err(RlError::CapacityExceeded(format!(
            "one-sided congruence lattices capped at size 8, got {n}"
        )));
    }
    let maps = side_translation_maps(rl, side);
    let mut seen = std::collections::HashSet::new();
    let mut list: Vec<Congruence> = Vec::new();
    let mut push = |c: Congruence, list: &mut Vec<Congruence>| {
        if seen.insert(c.clone()) {
            list.push(c);
        }
    };
    push(Congruence::identity(n), &mut list);
    for x in 0..n {
        for y in x + 1..n {
            push(close_under_translations(n, &[(x, y)], &maps), &mut list);
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
    Ok(list
        .into_iter()
        .map(|congruence| SidedCongruence { congruence, side })
        .collect())
}

/// The positive kernel of a one-sided congruence: elements at or above the
/// unit in the quotient order.
pub fn sided_kernel(rl: &FiniteRL, theta: &SidedCongruence) -> ElemSet {
    positive_kernel(rl.base(), &theta.congruence)
}

/// Cross-checks the lattice isomorphisms between multiplicative 1-filters
/// and one-sided congruence lattices, and between normal filters and the
/// two-sided congruence lattice.
#[derive(Debug, Clone, Default)]
pub struct ThetaIsoReport {
    pub filters: usize,
    pub normal_filters: usize,
    pub left_congruences: usize,
    pub right_congruences: usize,
    pub two_sided: usize,
    pub issues: Vec<String>,
}

impl ThetaIsoReport {
    pub fn ok(&self) -> bool {
        self.issues.is_empty()
    }
}

pub fn verify_theta_iso(rl: &FiniteRL) -> Result<ThetaIsoReport, RlError> {
    let filters = mult_filters(rl);
    let lcon = sided_congruences(rl, Side::Left)?;
    let rcon = sided_congruences(rl, Side::Right)?;
    let con = sided_congruences(rl, Side::TwoSided)?;
    let normal: Vec<&ElemSet> = filters.iter().filter(|f| is_normal_filter(rl, f)).collect();
    let mut report = ThetaIsoReport {
        filters: filters.len(),
        normal_filters: normal.len(),
        left_congruences: lcon.len(),
        right_congruences: rcon.len(),
        two_sided: con.len(),
        ..Default::default()
    };

    for (side, cons) in [(Side::Left, &lcon), (Side::Right, &rcon)] {
        if filters.len() != cons.len() {
            report.issues.push(format!(
                "{side:?}: {} filters vs {} congruences",
                filters.len(),
                cons.len()
            ));
        }
        for f in &filters {
            let theta = sided_theta(rl, f, side)?;
            if !cons.contains(&theta) {
                report
                    .issues
                    .push(format!("{side:?}: induced relation of {f:?} is not generated"));
            }
            let back = sided_kernel(rl, &theta);
            if back != *f {
                report
                    .issues
                    .push(format!("{side:?}: kernel round-trip fails for {f:?}"));
            }
        }
        for theta in cons {
            let f = sided_kernel(rl, theta);
            if !is_mult_filter(rl, &f) {
                report
                    .issues
                    .push(format!("{side:?}: kernel of {theta:?} is not a mult filter"));
                continue;
            }
            let again = sided_theta(rl, &f, side)?;
            if again.congruence != theta.congruence {
                report
                    .issues
                    .push(format!("{side:?}: congruence round-trip fails"));
            }
        }
        // order preservation both ways
        for f in &filters {
            for g in &filters {
                let tf = sided_theta(rl, f, side)?.congruence;
                let tg = sided_theta(rl, g, side)?.congruence;
                if f.is_subset(g) != tf.refines(&tg) {
                    report
                        .issues
                        .push(format!("{side:?}: order not preserved between filters"));
                }
            }
        }
    }

    // Two-sided congruences are exactly the left-and-right ones.
    let lset: std::collections::HashSet<&Congruence> = lcon.iter().map(|c| &c.congruence).collect();
    let rset: std::collections::HashSet<&Congruence> = rcon.iter().map(|c| &c.congruence).collect();
    for c in &con {
        if !lset.contains(&c.congruence) || !rset.contains(&c.congruence) {
            report
                .issues
                .push("two-sided congruence missing from a one-sided lattice".into());
        }
    }
    let both = lcon
        .iter()
        .map(|c| &c.congruence)
        .filter(|c| rset.contains(*c))
        .count();
    if both != con.len() {
        report.issues.push(format!(
            "left-and-right congruences: {} vs two-sided: {}",
            both,
            con.len()
        ));
    }

    // Normal filters correspond to two-sided congruences, and the
    // left/right isomorphism fixes them pointwise.
    if normal.len() != con.len() {
        report.issues.push(format!(
            "{} normal filters vs {} congruences",
            normal.len(),
            con.len()
        ));
    }
    for f in &filters {
        let l = sided_theta(rl, f, Side::Left)?.congruence;
        let r = sided_theta(rl, f, Side::Right)?.congruence;
        let normal_here = is_normal_filter(rl, f);
        if normal_here != (l == r) {
            report
                .issues
                .push(format!("normality mismatch with relation equality for {f:?}"));
        }
        if normal_here != is_normal_filter_by_conjugates(rl, f) {
            report
                .issues
                .push(format!("normality mismatch with conjugate closure for {f:?}"));
        }
        if normal_here && !con.iter().any(|c| c.congruence == l) {
            report
                .issues
                .push(format!("normal filter {f:?} not matched by a congruence"));
        }
    }
    Ok(report)
}

// ------------------------------------------------------------------
// Simplicity hierarchy
// ------------------------------------------------------------------

/// Simplicity and (finite) subdirect irreducibility flags, for both
/// two-sided and one-sided congruence lattices. The trivial algebra counts
/// as simple throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimplicityProfile {
    pub simple: bool,
    pub strongly_simple: bool,
    pub fsi: bool,
    pub strongly_fsi: bool,
    pub si: bool,
    pub strongly_si: bool,
    pub semisimple: bool,
    pub strongly_semisimple: bool,
}

fn fsi_of(list: &[Congruence], n: usize) -> bool {
    let identity = Congruence::identity(n);
    let proper: Vec<&Congruence> = list.iter().filter(|c| **c != identity).collect();
    proper
        .iter()
        .all(|x| proper.iter().all(|y| x.intersect(y) != identity))
}

fn si_of(list: &[Congruence], n: usize) -> bool {
    let identity = Congruence::identity(n);
    let mut inter = Congruence::total(n);
    let mut any = false;
    for c in list {
        if *c != identity {
            any = true;
            inter = inter.intersect(c);
        }
    }
    any && inter != identity
}

fn coatoms(list: &[Congruence], n: usize) -> Vec<&Congruence> {
    let total = Congruence::total(n);
    list.iter()
        .filter(|c| **c != total)
        .filter(|c| !list.iter().any(|d| *d != total && *d != **c && c.refines(d)))
        .collect()
}

pub fn simplicity_profile(rl: &FiniteRL) -> Result<SimplicityProfile, RlError> {
    let n = rl.size();
    if n == 1 {
        return Ok(SimplicityProfile {
            simple: true,
            strongly_simple: true,
            fsi: true,
            strongly_fsi: true,
            si: true,
            strongly_si: true,
            semisimple: true,
            strongly_semisimple: true,
        });
    }
    let con: Vec<Congruence> = sided_congruences(rl, Side::TwoSided)?
        .into_iter()
        .map(|c| c.congruence)
        .collect();
    let lcon: Vec<Congruence> = sided_congruences(rl, Side::Left)?
        .into_iter()
        .map(|c| c.congruence)
        .collect();
    let identity = Congruence::identity(n);
    let semisimple = {
        let mut inter = Congruence::total(n);
        for c in coatoms(&con, n) {
            inter = inter.intersect(c);
        }
        inter == identity
    };
    let strongly_semisimple = {
        let lcoatoms = coatoms(&lcon, n);
        let mut inter = Congruence::total(n);
        for c in &con {
            if lcoatoms.iter().any(|d| *d == c) {
                inter = inter.intersect(c);
            }
        }
        inter == identity
    };
    Ok(SimplicityProfile {
        simple: con.len() == 2,
        strongly_simple: lcon.len() == 2,
        fsi: fsi_of(&con, n),
        strongly_fsi: fsi_of(&lcon, n),
        si: si_of(&con, n),
        strongly_si: si_of(&lcon, n),
        semisimple,
        strongly_semisimple,
    })
}

// ------------------------------------------------------------------
// Translated-axiom classes
// ------------------------------------------------------------------

/// Does the RL satisfy the residuated translation of every axiom of the class?
pub fn left_pre_k(rl: &FiniteRL, k: &KClass) -> Result<bool, RlError> {
    for ax in &k.axioms {
        let pre = pre_transform(ax)
            .map_err(|_| RlError::CapacityExceeded("class axiom not positive universal".into()))?;
        if !holds(rl, &pre)?.as_bool() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is the filter a left K-filter: the quotient by its left congruence lies
/// in the class (as a pointed lattice)?
pub fn is_left_k_filter(rl: &FiniteRL, f: &ElemSet, k: &KClass) -> Result<bool, RlError> {
    let theta = sided_theta(rl, f, Side::Left)?;
    let (q, _) = quotient(rl.base(), &theta.congruence);
    Ok(k.contains(&q)?)
}

/// Meet-irreducible members of the (finite) lattice of multiplicative
/// 1-filters: not a proper intersection of two members.
pub fn meet_irreducible_filters(filters: &[ElemSet]) -> Vec<&ElemSet> {
    filters
        .iter()
        .filter(|f| {
            !filters.iter().any(|g| {
                filters.iter().any(|h| {
                    g != *f && h != *f && {
                        let mut i = g.clone();
                        i.intersect_with(h);
                        i == **f
                    }
                })
            })
        })
        .collect()
}

/// The four equivalent characterizations of the translated-axiom classes,
/// computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreKProfile {
    /// Satisfies the translated equations.
    pub translated_equations: bool,
    /// Every meet-irreducible multiplicative 1-filter is a left K-filter.
    pub meet_irreducibles_are_k: bool,
    /// The unit filter is an intersection of left K-filters.
    pub unit_filter_intersection: bool,
    /// Every multiplicative 1-filter is such an intersection.
    pub every_filter_intersection: bool,
}

impl PreKProfile {
    pub fn components(&self) -> [bool; 4] {
        [
            self.translated_equations,
            self.meet_irreducibles_are_k,
            self.unit_filter_intersection,
            self.every_filter_intersection,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.components();
        c.iter().all(|&x| x == c[0])
    }
}

pub fn pre_k_profile(rl: &FiniteRL, k: &KClass) -> Result<PreKProfile, RlError> {
    let n = rl.size();
    if n > 8 {
        return Err(RlError::CapacityExceeded(format!(
            "translated-axiom profile capped at size 8, got {n}"
        )));
    }
    let translated = left_pre_k(rl, k)?;
    let filters = mult_filters(rl);
    let mut k_filters = Vec::new();
    for f in &filters {
        if is_left_k_filter(rl, f, k)? {
            k_filters.push(f.clone());
        }
    }
    let mi = meet_irreducible_filters(&filters);
    let mut mi_are_k = true;
    for f in mi {
        if !k_filters.contains(f) {
            mi_are_k = false;
            break;
        }
    }
    let intersection_of_k_above = |f: &ElemSet| -> ElemSet {
        let mut inter = ElemSet::full(n);
        for g in &k_filters {
            if f.is_subset(g) {
                inter.intersect_with(g);
            }
        }
        inter
    };
    let unit_filter = rl.base().lattice().upset(rl.unit());
    let unit_ok = intersection_of_k_above(&unit_filter) == unit_filter;
    let every_ok = filters.iter().all(|f| intersection_of_k_above(f) == *f);
    Ok(PreKProfile {
        translated_equations: translated,
        meet_irreducibles_are_k: mi_are_k,
        unit_filter_intersection: unit_ok,
        every_filter_intersection: every_ok,
    })
}

/// The three equivalent forms of left prelinearity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrelinearProfile {
    pub translated_equation: bool,
    pub unit_meet_distribution_and_division_join: bool,
    pub distributive_and_division_join: bool,
}

impl PrelinearProfile {
    pub fn components(&self) -> [bool; 3] {
        [
            self.translated_equation,
            self.unit_meet_distribution_and_division_join,
            self.distributive_and_division_join,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.components();
        c.iter().all(|&x| x == c[0])
    }
}

fn rl_sentence(text: &str) -> crate::logic::Sentence {
    crate::logic::parse_sentence(text, crate::logic::Signature::Rl)
        .expect("built-in sentence parses")
}

pub fn prelinear_profile(rl: &FiniteRL) -> Result<PrelinearProfile, RlError> {
    let eq = holds(rl, &rl_sentence("1 ^ x \\ y v 1 ^ y \\ x = 1"))?.as_bool();
    let dist1 = holds(rl, &rl_sentence("1 ^ (x v y) = 1 ^ x v 1 ^ y"))?.as_bool();
    let divs = holds(rl, &rl_sentence("1 <= x \\ y v y \\ x"))?.as_bool();
    Ok(PrelinearProfile {
        translated_equation: eq,
        unit_meet_distribution_and_division_join: dist1 && divs,
        distributive_and_division_join: rl.base().lattice().is_distributive() && divs,
    })
}

/// The derived join-distribution law of left division, valid in every
/// left prelinear RL.
pub fn division_join_distribution(rl: &FiniteRL) -> Result<bool, RlError> {
    Ok(holds(rl, &rl_sentence("x \\ (y v z) = x \\ y v x \\ z"))?.as_bool())
}

/// The three equivalent forms of left preconicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreconicProfile {
    pub translated_equation: bool,
    pub unit_meet_distribution_and_division_join: bool,
    pub semiconic_reduct_and_division_join: bool,
}

impl PreconicProfile {
    pub fn components(&self) -> [bool; 3] {
        [
            self.translated_equation,
            self.unit_meet_distribution_and_division_join,
            self.semiconic_reduct_and_division_join,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.components();
        c.iter().all(|&x| x == c[0])
    }
}

pub fn preconic_profile(rl: &FiniteRL) -> Result<PreconicProfile, RlError> {
    let eq = holds(rl, &rl_sentence("1 ^ x \\ 1 v 1 ^ x = 1"))?.as_bool();
    let dist1 = holds(rl, &rl_sentence("1 ^ (x v y) = 1 ^ x v 1 ^ y"))?.as_bool();
    let divs = holds(rl, &rl_sentence("1 <= x \\ 1 v x"))?.as_bool();
    let semiconic = crate::congruence::is_semiconic(rl.base())?;
    Ok(PreconicProfile {
        translated_equation: eq,
        unit_meet_distribution_and_division_join: dist1 && divs,
        semiconic_reduct_and_division_join: semiconic && divs,
    })
}

// ------------------------------------------------------------------
// Quotients, products, and the semi-K property for RLs
// ------------------------------------------------------------------

/// Quotient by a two-sided congruence, with multiplication induced on blocks.
pub fn quotient_rl(rl: &FiniteRL, theta: &Congruence) -> Result<FiniteRL, RlError> {
    debug_assert!(is_sided_congruence(rl, theta, Side::TwoSided));
    let (base, map) = quotient(rl.base(), theta);
    let m = base.size();
    let blocks = theta.blocks();
    let reps: Vec<Elem> = blocks.iter().map(|b| b[0]).collect();
    let mut mul = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            mul[i * m + j] = map[rl.mul(reps[i], reps[j])];
        }
    }
    FiniteRL::new(base, mul)
}

/// Direct product of finite RLs: componentwise everything.
pub fn rl_direct_product(factors: &[&FiniteRL]) -> Result<FiniteRL, RlError> {
    let bases: Vec<&PointedLattice> = factors.iter().map(|r| r.base()).collect();
    let base = crate::construct::direct_product(&bases)
        .map_err(|e| RlError::CapacityExceeded(e.to_string()))?;
    let n = base.size();
    let k = factors.len();
    let decode = |mut i: usize| -> Vec<Elem> {
        let mut t = vec![0; k];
        for (j, r) in factors.iter().enumerate().rev() {
            t[j] = i % r.size();
            i /= r.size();
        }
        t
    };
    let encode = |t: &[Elem]| -> usize {
        let mut i = 0;
        for (j, r) in factors.iter().enumerate() {
            i = i * r.size() + t[j];
        }
        i
    };
    let mut mul = vec![0; n * n];
    for i in 0..n {
        let ti = decode(i);
        for j in 0..n {
            let tj = decode(j);
            let prod: Vec<Elem> = (0..k).map(|c| factors[c].mul(ti[c], tj[c])).collect();
            mul[i * n + j] = encode(&prod);
        }
    }
    FiniteRL::new(base, mul)
}

/// Is the RL a subdirect product of RLs whose pointed-lattice reduct lies
/// in the class?
pub fn is_semi_k_rl(rl: &FiniteRL, k: &KClass) -> Result<bool, RlError> {
    let n = rl.size();
    if n > 8 {
        return Err(RlError::CapacityExceeded(format!(
            "subdirect RL decomposition capped at size 8, got {n}"
        )));
    }
    let identity = Congruence::identity(n);
    let mut inter = Congruence::total(n);
    for theta in sided_congruences(rl, Side::TwoSided)? {
        let q = quotient_rl(rl, &theta.congruence)?;
        if k.contains(q.base())? {
            inter = inter.intersect(&theta.congruence);
        }
    }
    Ok(inter == identity)
}

// ------------------------------------------------------------------
// Enumeration of all RLs over a base
// ------------------------------------------------------------------

/// All residuated multiplications on the given pointed lattice, up to
/// unit-preserving automorphisms of the base. Backtracks over table cells
/// with monotonicity and partial associativity pruning; completed tables
/// go through full validation.
pub fn enumerate_rls(base: &PointedLattice) -> Result<Vec<FiniteRL>, RlError> {
    let n = base.size();
    if n > 5 {
        return Err(RlError::CapacityExceeded(format!(
            "multiplication enumeration capped at base size 5, got {n}"
        )));
    }
    let u = base.unit();
    let mut table: Vec<Option<Elem>> = vec![None; n * n];
    for x in 0..n {
        table[u * n + x] = Some(x);
        table[x * n + u] = Some(x);
    }
    let cells: Vec<(Elem, Elem)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != u && j != u)
        .collect();
    let autos = base.automorphisms();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();

    fn monotone_ok(base: &PointedLattice, table: &[Option<Elem>], i: Elem, j: Elem) -> bool {
        let n = base.size();
        let v = table[i * n + j].expect("cell just assigned");
        for a in 0..n {
            for b in 0..n {
                if let Some(w) = table[a * n + b] {
                    if base.leq(a, i) && base.leq(b, j) && !base.leq(w, v) {
                        return false;
                    }
                    if base.leq(i, a) && base.leq(j, b) && !base.leq(v, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn assoc_ok(table: &[Option<Elem>], n: usize, i: Elem, j: Elem) -> bool {
        let get = |a: Elem, b: Elem| table[a * n + b];
        // triples whose evaluation passes through the new cell (i, j)
        for c in 0..n {
            if let (Some(ij), Some(jc)) = (get(i, j), get(j, c)) {
                if let (Some(l), Some(r)) = (get(ij, c), get(i, jc)) {
                    if l != r {
                        return false;
                    }
                }
            }
            if let (Some(ci), Some(ij)) = (get(c, i), get(i, j)) {
                if let (Some(l), Some(r)) = (get(ci, j), get(c, ij)) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        base: &PointedLattice,
        cells: &[(Elem, Elem)],
        depth: usize,
        table: &mut Vec<Option<Elem>>,
        autos: &[Vec<Elem>],
        seen: &mut std::collections::HashSet<Vec<Elem>>,
        out: &mut Vec<FiniteRL>,
    ) {
        let n = base.size();
        if depth == cells.len() {
            let mul: Vec<Elem> = table.iter().map(|c| c.expect("table complete")).collect();
            if let Ok(rl) = FiniteRL::new(base.clone(), mul.clone()) {
                let canonical = autos
                    .iter()
                    .map(|phi| {
                        let mut t = vec![0; n * n];
                        for a in 0..n {
                            for b in 0..n {
                                t[phi[a] * n + phi[b]] = phi[mul[a * n + b]];
                            }
                        }
                        t
                    })
                    .min()
                    .expect("identity automorphism always present");
                if seen.insert(canonical) {
                    out.push(rl);
                }
            }
            return;
        }
        let (i, j) = cells[depth];
        for v in 0..n {
            table[i * n + j] = Some(v);
            if monotone_ok(base, table, i, j) && assoc_ok(table, n, i, j) {
                rec(base, cells, depth + 1, table, autos, seen, out);
            }
            table[i * n + j] = None;
        }
    }

    rec(base, &cells, 0, &mut table, &autos, &mut seen, &mut out);
    Ok(out)
}
