//! Zero-divisors, nilradical and the conditions on `Z(R)` used by the
//! diameter and completeness characterizations.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::ideal::IdealLattice;
use crate::ring::FiniteRing;

/// `Z(R)`, including 0.
#[derive(Debug, Clone)]
pub struct ZeroDivisorSet {
    pub members: FixedBitSet,
    /// Lattice index of `Z(R)` when it is an ideal.
    pub ideal: Option<usize>,
    /// Primes contained in `Z(R)` that are maximal among such primes,
    /// present when their union is all of `Z(R)`.
    pub prime_cover: Option<Vec<usize>>,
}

impl ZeroDivisorSet {
    pub fn is_ideal(&self) -> bool {
        self.ideal.is_some()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

pub fn zero_divisor_set(ring: &FiniteRing, lattice: &IdealLattice) -> ZeroDivisorSet {
    let mut members = FixedBitSet::with_capacity(ring.order());
    for a in ring.elements() {
        if a == ring.zero() || ring.is_zero_divisor(a) {
            members.insert(a);
        }
    }
    let ideal = lattice.index_of(&members);

    let inside: Vec<usize> = lattice
        .primes()
        .into_iter()
        .filter(|&p| lattice.ideal(p).members().is_subset(&members))
        .collect();
    let maximal_inside: Vec<usize> = inside
        .iter()
        .copied()
        .filter(|&p| !inside.iter().any(|&q| q != p && lattice.contains(q, p)))
        .collect();
    let mut union = FixedBitSet::with_capacity(ring.order());
    for &p in &maximal_inside {
        union.union_with(lattice.ideal(p).members());
    }
    let prime_cover = (union == members).then_some(maximal_inside);

    ZeroDivisorSet {
        members,
        ideal,
        prime_cover,
    }
}

/// Nilpotent elements; always an ideal.
pub fn nilradical(ring: &FiniteRing, lattice: &IdealLattice) -> usize {
    let mut members = FixedBitSet::with_capacity(ring.order());
    for a in ring.elements() {
        if ring.is_nilpotent(a) {
            members.insert(a);
        }
    }
    lattice
        .index_of(&members)
        .expect("the nilpotent elements of a commutative ring form an ideal")
}

pub fn is_reduced(ring: &FiniteRing) -> bool {
    ring.elements()
        .all(|a| a == ring.zero() || !ring.is_nilpotent(a))
}

/// Boolean conditions on `Z(R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZrProfile {
    /// `ab = 0` for all `a, b ∈ Z(R)`.
    pub zsq_zero: bool,
    pub z_is_ideal: bool,
    pub z_is_prime_ideal: bool,
    /// Primes `P1 ≠ P2` with `P1 ∪ P2 = Z(R)` and `P1 ∩ P2 = (0)`.
    pub z_union_two_primes_meet_zero: bool,
    pub two_prime_witness: Option<(usize, usize)>,
    /// `|𝕀(P1)|`, `|𝕀(P2)|` for the witnessing primes.
    pub sub_ideal_counts: Option<(usize, usize)>,
}

impl ZrProfile {
    /// `Z(R)` is the union of two primes meeting in `(0)`, or a prime with
    /// nonzero square.
    pub fn diameter_two_condition(&self) -> bool {
        self.z_union_two_primes_meet_zero || (self.z_is_prime_ideal && !self.zsq_zero)
    }
}

pub fn zr_condition_profile(
    ring: &FiniteRing,
    lattice: &IdealLattice,
    zd: &ZeroDivisorSet,
) -> ZrProfile {
    let z: Vec<usize> = zd.members.ones().collect();
    let zsq_zero = z
        .iter()
        .enumerate()
        .all(|(k, &a)| z[k..].iter().all(|&b| ring.mul(a, b) == ring.zero()));
    let z_is_prime_ideal = zd.ideal.is_some_and(|i| lattice.is_prime(i));

    let primes = lattice.primes();
    let zero = lattice.zero_index();
    let mut witness = None;
    'search: for (k, &p) in primes.iter().enumerate() {
        if !lattice.ideal(p).members().is_subset(&zd.members) {
            continue;
        }
        for &q in &primes[k + 1..] {
            if !lattice.ideal(q).members().is_subset(&zd.members) {
                continue;
            }
            let mut union = lattice.ideal(p).members().clone();
            union.union_with(lattice.ideal(q).members());
            if union == zd.members && lattice.intersection(p, q) == zero {
                witness = Some((p, q));
                break 'search;
            }
        }
    }

    ZrProfile {
        zsq_zero,
        z_is_ideal: zd.is_ideal(),
        z_is_prime_ideal,
        z_union_two_primes_meet_zero: witness.is_some(),
        two_prime_witness: witness,
        sub_ideal_counts: witness
            .map(|(p, q)| (lattice.sub_ideal_count(p), lattice.sub_ideal_count(q))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_ideals;
    use crate::ring::{build_product, build_zmod};

    #[test]
    fn z6_is_covered_by_two_primes() {
        let z6 = build_zmod(6).unwrap();
        let lat = enumerate_ideals(&z6).unwrap();
        let zd = zero_divisor_set(&z6, &lat);
        assert_eq!(zd.members.ones().collect::<Vec<_>>(), vec![0, 2, 3, 4]);
        assert!(!zd.is_ideal());
        let cover = zd.prime_cover.clone().unwrap();
        assert_eq!(cover.len(), 2);
        assert_eq!(lat.intersection(cover[0], cover[1]), lat.zero_index());

        let profile = zr_condition_profile(&z6, &lat, &zd);
        assert!(profile.z_union_two_primes_meet_zero);
        let (p, q) = profile.two_prime_witness.unwrap();
        let mut labels = [lat.label(&z6, p), lat.label(&z6, q)];
        labels.sort();
        assert_eq!(labels, ["(2)", "(3)"]);
        assert_eq!(profile.sub_ideal_counts, Some((2, 2)));
        assert!(profile.diameter_two_condition());
    }

    #[test]
    fn z4_has_square_zero_zero_divisors() {
        let z4 = build_zmod(4).unwrap();
        let lat = enumerate_ideals(&z4).unwrap();
        let zd = zero_divisor_set(&z4, &lat);
        let profile = zr_condition_profile(&z4, &lat, &zd);
        assert!(profile.zsq_zero);
        assert!(profile.z_is_prime_ideal);
        assert!(!profile.diameter_two_condition());
    }

    #[test]
    fn z2_times_z9_meets_no_condition() {
        let r = build_product(&[build_zmod(2).unwrap(), build_zmod(9).unwrap()]).unwrap();
        let lat = enumerate_ideals(&r).unwrap();
        let zd = zero_divisor_set(&r, &lat);
        let profile = zr_condition_profile(&r, &lat, &zd);
        assert!(!profile.zsq_zero);
        assert!(!profile.z_is_prime_ideal);
        assert!(!profile.z_union_two_primes_meet_zero);
        assert!(zd.prime_cover.is_some());
    }

    #[test]
    fn nilradicals() {
        let r = build_product(&[build_zmod(2).unwrap(), build_zmod(4).unwrap()]).unwrap();
        let lat = enumerate_ideals(&r).unwrap();
        let nil = lat.ideal(nilradical(&r, &lat));
        let labels: Vec<&str> = nil.elements().map(|a| r.label(a)).collect();
        assert_eq!(labels, vec!["(0,0)", "(0,2)"]);
        assert!(!is_reduced(&r));
        assert!(is_reduced(&build_zmod(30).unwrap()));
    }
}
