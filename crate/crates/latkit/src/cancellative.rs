//! Embeds any finite lattice, with a fresh unit on top, into a simple
//! integral cancellative commutative residuated lattice built from bounded
//! vectors of non-positive integers under addition.
//!
//! The carrier is the image of an interior operator on the vector algebra:
//! the zero vector (the unit), an encoded copy of the lattice inside
//! `{-2,-1}^X`, and everything at or below the constant `-2`. The encoding
//! coordinates are the meet-irreducible elements (top excluded), which
//! makes the element map join-preserving and the top the constant `-1`.

use crate::bitset::Elem;
use crate::construct::adjoin_top_unit;
use crate::order::FiniteLattice;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use thiserror::Error;

/// Seed for every randomized audit in this module.
pub const AUDIT_SEED: u64 = 0x4C41_544B_4954; // "LATKIT"

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CancellativeError {
    #[error("the trivial lattice has no meet-irreducible coordinates")]
    TrivialLattice,
}

/// A vector of non-positive integers indexed by the encoding coordinates.
pub type IntVector = Vec<i64>;

/// An element of the carrier: the unit, an encoded lattice element, or a
/// vector at or below the constant -2. Values are canonical: a vector equal
/// to some encoded lattice element is always tagged `Lat`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConeElement {
    Zero,
    Lat(Elem),
    Low(IntVector),
}

/// The coordinate encoding of a finite lattice into `{-2,-1}^X`.
#[derive(Debug, Clone)]
pub struct Encoding {
    lattice: FiniteLattice,
    /// The meet-irreducible elements other than the top, in index order.
    coords: Vec<Elem>,
    /// Per-element image: -1 at coordinates the element is not below.
    phi: Vec<IntVector>,
    lookup: HashMap<IntVector, Elem>,
}

impl Encoding {
    /// Builds the canonical encoding. The element map sends `a` to the
    /// vector with `-1` exactly at the meet-irreducibles not above `a`;
    /// it is injective, order-reflecting, and join-preserving, and sends
    /// the top to the constant `-1` and the bottom to the constant `-2`.
    pub fn build(lattice: &FiniteLattice) -> Result<Self, CancellativeError> {
        if lattice.size() < 2 {
            return Err(CancellativeError::TrivialLattice);
        }
        let coords: Vec<Elem> = lattice
            .elems()
            .filter(|&m| m != lattice.top() && lattice.meet_irreducible(m))
            .collect();
        let phi: Vec<IntVector> = lattice
            .elems()
            .map(|a| {
                coords
                    .iter()
                    .map(|&m| if lattice.leq(a, m) { -2 } else { -1 })
                    .collect()
            })
            .collect();
        let mut lookup = HashMap::new();
        for (a, v) in phi.iter().enumerate() {
            lookup.insert(v.clone(), a);
        }
        debug_assert_eq!(lookup.len(), lattice.size(), "encoding must be injective");
        Ok(Encoding {
            lattice: lattice.clone(),
            coords,
            phi,
            lookup,
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn phi(&self, a: Elem) -> &IntVector {
        &self.phi[a]
    }

    /// The underlying vector of a carrier element.
    pub fn vec_of(&self, x: &ConeElement) -> IntVector {
        match x {
            ConeElement::Zero => vec![0; self.dim()],
            ConeElement::Lat(a) => self.phi[*a].clone(),
            ConeElement::Low(v) => v.clone(),
        }
    }

    /// Canonical tagging of a carrier vector.
    pub fn classify(&self, v: IntVector) -> ConeElement {
        if v.iter().all(|&c| c == 0) {
            return ConeElement::Zero;
        }
        if let Some(&a) = self.lookup.get(&v) {
            return ConeElement::Lat(a);
        }
        debug_assert!(
            v.iter().all(|&c| c <= -2),
            "vector {v:?} lies outside the carrier"
        );
        ConeElement::Low(v)
    }

    /// The interior operator realizing the lattice inside `{-2,-1}^X`:
    /// the image of the largest element whose encoding lies below `v`.
    pub fn sigma(&self, v: &[i64]) -> Elem {
        debug_assert!(v.iter().all(|&c| (-2..=-1).contains(&c)));
        let below = self
            .lattice
            .elems()
            .filter(|&a| self.phi[a].iter().zip(v).all(|(&p, &c)| p <= c));
        self.lattice.join_set(below)
    }

    /// The interior operator whose image is the carrier: identity on the
    /// unit, the encoded interior on the band between -2 and 0, and the
    /// truncation by -2 below it.
    pub fn tau(&self, v: &[i64]) -> ConeElement {
        self.classify(self.tau_vec(v))
    }

    /// The vector of the interior, without tagging.
    pub fn tau_vec(&self, v: &[i64]) -> IntVector {
        debug_assert!(v.iter().all(|&c| c <= 0));
        if v.iter().all(|&c| c == 0) {
            return vec![0; self.dim()];
        }
        if v.iter().all(|&c| c >= -2) {
            let capped: IntVector = v.iter().map(|&c| c.min(-1)).collect();
            return self.phi[self.sigma(&capped)].clone();
        }
        v.iter().map(|&c| c.min(-2)).collect()
    }

    pub fn leq(&self, x: &ConeElement, y: &ConeElement) -> bool {
        self.vec_of(x)
            .iter()
            .zip(self.vec_of(y))
            .all(|(&a, b)| a <= b)
    }

    /// Multiplication: vector addition.
    pub fn mul(&self, x: &ConeElement, y: &ConeElement) -> ConeElement {
        match (x, y) {
            (ConeElement::Zero, _) => y.clone(),
            (_, ConeElement::Zero) => x.clone(),
            _ => {
                let v: IntVector = self
                    .vec_of(x)
                    .iter()
                    .zip(self.vec_of(y))
                    .map(|(&a, b)| a + b)
                    .collect();
                self.classify(v)
            }
        }
    }

    /// Join: pointwise maximum (the carrier is closed under it).
    pub fn join(&self, x: &ConeElement, y: &ConeElement) -> ConeElement {
        let v: IntVector = self
            .vec_of(x)
            .iter()
            .zip(self.vec_of(y))
            .map(|(&a, b)| a.max(b))
            .collect();
        self.classify(v)
    }

    /// Meet: the interior of the pointwise minimum.
    pub fn meet(&self, x: &ConeElement, y: &ConeElement) -> ConeElement {
        let v: IntVector = self
            .vec_of(x)
            .iter()
            .zip(self.vec_of(y))
            .map(|(&a, b)| a.min(b))
            .collect();
        self.tau(&v)
    }

    /// Residual: the interior of the truncated pointwise difference.
    pub fn residual(&self, x: &ConeElement, z: &ConeElement) -> ConeElement {
        let v: IntVector = self
            .vec_of(x)
            .iter()
            .zip(self.vec_of(z))
            .map(|(&a, b)| (b - a).min(0))
            .collect();
        self.tau(&v)
    }

    pub fn power(&self, x: &ConeElement, k: usize) -> ConeElement {
        if k == 0 {
            return ConeElement::Zero;
        }
        let v = self.vec_of(x);
        self.classify(v.iter().map(|&c| c * k as i64).collect())
    }
}

/// Checks that the unit-adjoined lattice embeds into the carrier: the new
/// top goes to the unit, every lattice element to its encoding, and meets,
/// joins, order, and the unit are preserved. Returns the violations.
pub fn verify_embedding(enc: &Encoding) -> Vec<String> {
    let mut issues = Vec::new();
    let l = enc.lattice();
    let n = l.size();
    let unital = adjoin_top_unit(l);
    let image = |a: Elem| -> ConeElement {
        if a == n {
            ConeElement::Zero
        } else {
            ConeElement::Lat(a)
        }
    };
    for a in 0..=n {
        for b in 0..=n {
            if a != b && image(a) == image(b) {
                issues.push(format!("images of {a} and {b} collide"));
            }
            if unital.leq(a, b) != enc.leq(&image(a), &image(b)) {
                issues.push(format!("order disagrees at ({a},{b})"));
            }
            if enc.meet(&image(a), &image(b)) != image(unital.meet(a, b)) {
                issues.push(format!("meet disagrees at ({a},{b})"));
            }
            if enc.join(&image(a), &image(b)) != image(unital.join(a, b)) {
                issues.push(format!("join disagrees at ({a},{b})"));
            }
        }
    }
    if image(unital.unit()) != ConeElement::Zero {
        issues.push("unit not preserved".into());
    }
    issues
}

/// Configuration for the bounded-exhaustive plus randomized audit.
#[derive(Debug, Clone, Copy)]
pub struct AuditOptions {
    /// Coordinate depth of the exhaustive fragment (vectors down to -bound).
    pub bound: i64,
    /// Number of seeded random triples with coordinates down to -2*bound.
    pub random_triples: usize,
    /// Cap on exhaustively checked triples; beyond it the fragment's triple
    /// space is strided deterministically down to this budget.
    pub triple_budget: usize,
    pub seed: u64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            bound: 8,
            random_triples: 10_000,
            triple_budget: 20_000_000,
            seed: AUDIT_SEED,
        }
    }
}

/// Outcome of the property audit over a fragment of the carrier.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub sample_size: usize,
    pub triples_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
    /// Largest exponent needed among all simplicity witnesses, with the
    /// number of witness pairs produced.
    pub max_simplicity_exponent: usize,
    pub simplicity_pairs: usize,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn push_violation(report: &mut AuditReport, msg: String) {
    if report.violations.len() < 20 {
        report.violations.push(msg);
    }
}

/// The deterministic sample: the unit, every encoded lattice element, and
/// every vector with coordinates in `[-bound, -2]`.
pub fn bounded_fragment(enc: &Encoding, bound: i64) -> Vec<ConeElement> {
    let dim = enc.dim();
    let mut out = vec![ConeElement::Zero];
    out.extend(enc.lattice().elems().map(ConeElement::Lat));
    let mut v = vec![-2i64; dim];
    loop {
        let elem = enc.classify(v.clone());
        if matches!(elem, ConeElement::Low(_)) {
            out.push(elem);
        }
        let mut k = 0;
        loop {
            if k == dim {
                return out;
            }
            v[k] -= 1;
            if v[k] >= -bound {
                break;
            }
            v[k] = -2;
            k += 1;
        }
    }
}

fn random_element(enc: &Encoding, rng: &mut ChaCha8Rng, depth: i64) -> ConeElement {
    let v: IntVector = (0..enc.dim()).map(|_| -rng.gen_range(0..=depth)).collect();
    enc.tau(&v)
}

/// Checks cancellativity, integrality, commutativity, the residuation law,
/// interior-operator and conuclear properties, and produces a simplicity
/// witness exponent for every sampled pair.
pub fn property_audit(enc: &Encoding, opts: AuditOptions) -> AuditReport {
    let sample = bounded_fragment(enc, opts.bound);
    let s = sample.len();
    let mut report = AuditReport {
        sample_size: s,
        triples_checked: 0,
        pairs_checked: 0,
        violations: Vec::new(),
        max_simplicity_exponent: 0,
        simplicity_pairs: 0,
    };

    // unary: integrality (the unit is the top)
    for x in &sample {
        if !enc.leq(x, &ConeElement::Zero) {
            push_violation(&mut report, format!("element above the unit: {x:?}"));
        }
    }

    // precomputed vectors; classification is a function of the vector, so
    // operation equality coincides with vector equality
    let vecs: Vec<IntVector> = sample.iter().map(|x| enc.vec_of(x)).collect();
    let dim = enc.dim();

    // pairs: commutativity and simplicity witnesses
    let mut scratch = vec![0i64; dim];
    for (fi, fv) in vecs.iter().enumerate() {
        for gv in &vecs {
            report.pairs_checked += 1;
            let mut comm = true;
            for d in 0..dim {
                scratch[d] = fv[d] + gv[d];
                comm &= scratch[d] == gv[d] + fv[d];
            }
            if !comm {
                push_violation(&mut report, format!("commutativity fails at ({fv:?},{gv:?})"));
            }
            if sample[fi] == ConeElement::Zero {
                continue;
            }
            // every non-unit element has all coordinates <= -1, so a high
            // enough power of f falls below g
            let k = fv
                .iter()
                .zip(gv)
                .map(|(&fc, &gc)| {
                    debug_assert!(fc <= -1);
                    let (need, per) = (-gc, -fc);
                    ((need + per - 1) / per) as usize
                })
                .max()
                .unwrap_or(0);
            if fv.iter().zip(gv).any(|(&fc, &gc)| k as i64 * fc > gc) {
                push_violation(
                    &mut report,
                    format!("simplicity witness {k} fails for ({fv:?},{gv:?})"),
                );
            } else {
                report.simplicity_pairs += 1;
                report.max_simplicity_exponent = report.max_simplicity_exponent.max(k);
            }
        }
    }

    // triples over the fragment: cancellativity, residuation, and
    // associativity, strided down to the budget when the cube is too large
    let total = s * s * s;
    let stride = total.div_ceil(opts.triple_budget).max(1);
    let mut idx = 0;
    let mut sum_xy = vec![0i64; dim];
    let mut diff = vec![0i64; dim];
    while idx < total {
        let (xv, rest) = (&vecs[idx / (s * s)], idx % (s * s));
        let (yv, zv) = (&vecs[rest / s], &vecs[rest % s]);
        report.triples_checked += 1;
        // cancellativity: x+y = x+z forces y = z on vectors
        if yv != zv && (0..dim).all(|d| xv[d] + yv[d] == xv[d] + zv[d]) {
            push_violation(&mut report, format!("cancellation fails at ({xv:?},{yv:?},{zv:?})"));
        }
        // residuation: x+y <= z iff y <= tau(min(z-x, 0))
        for d in 0..dim {
            sum_xy[d] = xv[d] + yv[d];
            diff[d] = (zv[d] - xv[d]).min(0);
        }
        let lhs = (0..dim).all(|d| sum_xy[d] <= zv[d]);
        let resid = enc.tau_vec(&diff);
        let rhs = (0..dim).all(|d| yv[d] <= resid[d]);
        if lhs != rhs {
            push_violation(&mut report, format!("residuation fails at ({xv:?},{yv:?},{zv:?})"));
        }
        // associativity of addition is coordinate arithmetic
        if (0..dim).any(|d| (xv[d] + yv[d]) + zv[d] != xv[d] + (yv[d] + zv[d])) {
            push_violation(&mut report, format!("associativity fails at ({xv:?},{yv:?},{zv:?})"));
        }
        idx += stride;
    }

    // seeded random triples, deeper than the exhaustive fragment
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_triples {
        let x = random_element(enc, &mut rng, 2 * opts.bound);
        let y = random_element(enc, &mut rng, 2 * opts.bound);
        let z = random_element(enc, &mut rng, 2 * opts.bound);
        report.triples_checked += 1;
        check_triple(enc, &x, &y, &z, &mut report);
        // conuclear inequality and interior properties on raw vectors
        let u: IntVector = (0..enc.dim())
            .map(|_| -rng.gen_range(0..=2 * opts.bound))
            .collect();
        let w: IntVector = (0..enc.dim())
            .map(|_| -rng.gen_range(0..=2 * opts.bound))
            .collect();
        let tu = enc.tau(&u);
        let tw = enc.tau(&w);
        let sum: IntVector = u.iter().zip(&w).map(|(&a, &b)| a + b).collect();
        if !enc.leq(&enc.mul(&tu, &tw), &enc.tau(&sum)) {
            push_violation(
                &mut report,
                format!("conuclear inequality fails at {u:?},{w:?}"),
            );
        }
        if !enc.vec_of(&tu).iter().zip(&u).all(|(&a, &b)| a <= b) {
            push_violation(&mut report, format!("interior not decreasing at {u:?}"));
        }
        if enc.tau(&enc.vec_of(&tu)) != tu {
            push_violation(&mut report, format!("interior not idempotent at {u:?}"));
        }
        if u.iter().zip(&w).all(|(&a, &b)| a <= b) && !enc.leq(&tu, &tw) {
            push_violation(&mut report, format!("interior not monotone at {u:?},{w:?}"));
        }
    }
    report
}

fn check_triple(
    enc: &Encoding,
    x: &ConeElement,
    y: &ConeElement,
    z: &ConeElement,
    report: &mut AuditReport,
) {
    // cancellativity: addition of vectors cancels
    if enc.mul(x, y) == enc.mul(x, z) && y != z {
        push_violation(report, format!("cancellation fails at ({x:?},{y:?},{z:?})"));
    }
    // residuation: x*y <= z iff y <= x\z
    let lhs = enc.leq(&enc.mul(x, y), z);
    let rhs = enc.leq(y, &enc.residual(x, z));
    if lhs != rhs {
        push_violation(report, format!("residuation fails at ({x:?},{y:?},{z:?})"));
    }
    // associativity of the induced product
    if enc.mul(&enc.mul(x, y), z) != enc.mul(x, &enc.mul(y, z)) {
        push_violation(report, format!("associativity fails at ({x:?},{y:?},{z:?})"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures::*;

    fn two_chain_encoding() -> Encoding {
        Encoding::build(chain(2, 1).lattice()).unwrap()
    }

    #[test]
    fn two_chain_coordinates() {
        let enc = two_chain_encoding();
        assert_eq!(enc.coords(), &[0]);
        assert_eq!(enc.phi(0), &vec![-2]);
        assert_eq!(enc.phi(1), &vec![-1]);
    }

    #[test]
    fn square_coordinates_and_join_preservation() {
        let sq = boolean_square_unital();
        let enc = Encoding::build(sq.lattice()).unwrap();
        assert_eq!(enc.coords(), &[1, 2]);
        assert_eq!(enc.phi(0), &vec![-2, -2]);
        assert_eq!(enc.phi(1), &vec![-2, -1]);
        assert_eq!(enc.phi(2), &vec![-1, -2]);
        assert_eq!(enc.phi(3), &vec![-1, -1]);
        // joins become pointwise maxima
        for a in 0..4 {
            for b in 0..4 {
                let max: IntVector = enc
                    .phi(a)
                    .iter()
                    .zip(enc.phi(b))
                    .map(|(&x, &y)| x.max(y))
                    .collect();
                assert_eq!(&max, enc.phi(sq.join(a, b)));
            }
        }
    }

    #[test]
    fn trivial_lattice_rejected() {
        assert!(matches!(
            Encoding::build(chain(1, 0).lattice()),
            Err(CancellativeError::TrivialLattice)
        ));
    }

    #[test]
    fn tau_cases() {
        let enc = two_chain_encoding();
        assert_eq!(enc.tau(&[0]), ConeElement::Zero);
        assert_eq!(enc.tau(&[-1]), ConeElement::Lat(1));
        assert_eq!(enc.tau(&[-2]), ConeElement::Lat(0));
        assert_eq!(enc.tau(&[-5]), ConeElement::Low(vec![-5]));
    }

    #[test]
    fn multiplication_examples() {
        let enc = two_chain_encoding();
        let top = ConeElement::Lat(1);
        // unit law
        assert_eq!(enc.mul(&ConeElement::Zero, &top), top);
        // the encoded top squares to the encoded bottom (both are -2)
        assert_eq!(enc.mul(&top, &top), ConeElement::Lat(0));
        assert_eq!(
            enc.mul(&ConeElement::Lat(0), &top),
            ConeElement::Low(vec![-3])
        );
    }

    #[test]
    fn residual_examples() {
        let enc = two_chain_encoding();
        // scalar: residual of -3 by -1 truncates to -2
        let r = enc.residual(&ConeElement::Lat(1), &ConeElement::Low(vec![-3]));
        assert_eq!(r, ConeElement::Lat(0));
        // low by top: difference +1 truncates to zero
        let r = enc.residual(&ConeElement::Low(vec![-2]), &ConeElement::Lat(1));
        assert_eq!(r, ConeElement::Zero);
        // x \ x is the unit on sampled elements
        for x in bounded_fragment(&enc, 5) {
            assert_eq!(enc.residual(&x, &x), ConeElement::Zero);
        }
    }

    #[test]
    fn meets_land_in_the_carrier() {
        let sq = boolean_square_unital();
        let enc = Encoding::build(sq.lattice()).unwrap();
        // encoded atoms meet at the encoded bottom, through the interior
        assert_eq!(
            enc.meet(&ConeElement::Lat(1), &ConeElement::Lat(2)),
            ConeElement::Lat(0)
        );
        assert_eq!(
            enc.meet(&ConeElement::Zero, &ConeElement::Low(vec![-4, -2])),
            ConeElement::Low(vec![-4, -2])
        );
    }

    #[test]
    fn embeddings_pass_for_small_lattices() {
        for a in [
            chain(2, 1),
            chain(3, 2),
            boolean_square_unital(),
            n5_unital(),
            m3_unital(),
        ] {
            let enc = Encoding::build(a.lattice()).unwrap();
            let issues = verify_embedding(&enc);
            assert!(issues.is_empty(), "{a:?}: {issues:?}");
        }
    }

    #[test]
    fn quick_audit_two_chain() {
        let enc = two_chain_encoding();
        let report = property_audit(
            &enc,
            AuditOptions {
                bound: 6,
                random_triples: 500,
                ..Default::default()
            },
        );
        assert!(report.ok(), "{:?}", report.violations);
        assert!(report.simplicity_pairs > 0);
        assert!(report.max_simplicity_exponent >= 5);
    }

    #[test]
    fn simplicity_witness_example() {
        let enc = two_chain_encoding();
        // the encoded top needs five factors to fall below -5
        let f = ConeElement::Lat(1);
        let g = ConeElement::Low(vec![-5]);
        assert!(enc.leq(&enc.power(&f, 5), &g));
        assert!(!enc.leq(&enc.power(&f, 4), &g));
    }
}
