use crate::error::{Limits, Result};
use crate::graph::{build_ag, build_zd, SimpleGraph};
use crate::ideal::{enumerate_ideals_with, IdealLattice};
use crate::invariants::{maximal_cliques, InvariantReport};
use crate::ring::FiniteRing;
use crate::zerodiv::{
    is_reduced, nilradical, zero_divisor_set, zr_condition_profile, ZeroDivisorSet, ZrProfile,
};

/// Facts about a direct factor `eR`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorFacts {
    pub order: usize,
    pub is_field: bool,
    pub is_domain: bool,
    /// `|A(eR)*|`.
    pub annihilating_ideals: usize,
}

/// `R ≅ eR × (1−e)R` for a nontrivial idempotent `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub idempotent: usize,
    pub left: FactorFacts,
    pub right: FactorFacts,
}

/// Everything the ring-level checks need, computed once per ring.
#[derive(Debug, Clone)]
pub struct RingAnalysis {
    pub ring: FiniteRing,
    pub lattice: IdealLattice,
    pub zero_divisors: ZeroDivisorSet,
    pub profile: ZrProfile,
    pub nilradical: usize,
    pub reduced: bool,
    pub ag: SimpleGraph,
    pub ag_report: InvariantReport,
    pub ag_cliques: Vec<Vec<usize>>,
    pub zd: SimpleGraph,
    /// Clique and chromatic numbers of `Γ(R)` are not computed.
    pub zd_report: InvariantReport,
    /// One entry per nontrivial idempotent, so each splitting appears in
    /// both orders.
    pub splittings: Vec<Splitting>,
    pub primitive_idempotents: usize,
}

impl RingAnalysis {
    pub fn new(ring: FiniteRing, limits: &Limits) -> Result<RingAnalysis> {
        let lattice = enumerate_ideals_with(&ring, limits)?;
        let zero_divisors = zero_divisor_set(&ring, &lattice);
        let profile = zr_condition_profile(&ring, &lattice, &zero_divisors);
        let nil = nilradical(&ring, &lattice);
        let ag = build_ag(&ring, &lattice);
        let ag_report = InvariantReport::compute(&ag, limits)?;
        let ag_cliques = maximal_cliques(&ag, limits)?;
        let zd = build_zd(&ring);
        let zd_report = InvariantReport::compute_basic(&zd);

        let idempotents = ring.idempotents();
        let mut splittings = Vec::new();
        for &e in &idempotents {
            if e == ring.zero() || e == ring.one() {
                continue;
            }
            let f = ring.sub(ring.one(), e);
            splittings.push(Splitting {
                idempotent: e,
                left: factor_facts(&ring.corner(e)?, limits)?,
                right: factor_facts(&ring.corner(f)?, limits)?,
            });
        }
        let primitive_idempotents = idempotents
            .iter()
            .filter(|&&e| e != ring.zero())
            .filter(|&&e| {
                idempotents
                    .iter()
                    .all(|&f| f == ring.zero() || f == e || ring.mul(f, e) != f)
            })
            .count();

        Ok(RingAnalysis {
            reduced: is_reduced(&ring),
            ring,
            lattice,
            zero_divisors,
            profile,
            nilradical: nil,
            ag,
            ag_report,
            ag_cliques,
            zd,
            zd_report,
            splittings,
            primitive_idempotents,
        })
    }

    pub fn name(&self) -> &str {
        self.ring.name()
    }

    pub fn is_local(&self) -> bool {
        self.lattice.is_local()
    }

    /// `R ≅ F1 × F2` with both factors fields.
    pub fn is_product_of_two_fields(&self) -> bool {
        self.splittings
            .iter()
            .any(|s| s.left.is_field && s.right.is_field)
    }

    /// `|A(R)*| = 1`.
    pub fn has_single_annihilating_ideal(&self) -> bool {
        self.lattice.annihilating_ideals().len() == 1
    }

    pub fn ag_labels(&self, vertices: &[usize]) -> String {
        labels(&self.ag, vertices)
    }

    pub fn zd_labels(&self, vertices: &[usize]) -> String {
        labels(&self.zd, vertices)
    }
}

pub(crate) fn labels(g: &SimpleGraph, vertices: &[usize]) -> String {
    let l: Vec<&str> = vertices.iter().map(|&v| g.label(v)).collect();
    format!("{{{}}}", l.join(", "))
}

fn factor_facts(ring: &FiniteRing, limits: &Limits) -> Result<FactorFacts> {
    let lattice = enumerate_ideals_with(ring, limits)?;
    Ok(FactorFacts {
        order: ring.order(),
        is_field: ring.is_field(),
        is_domain: ring.is_integral_domain(),
        annihilating_ideals: lattice.annihilating_ideals().len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_product, build_zmod};

    #[test]
    fn splittings_and_primitive_idempotents() {
        let z6 = build_zmod(6).unwrap();
        let a = RingAnalysis::new(z6, &Limits::default()).unwrap();
        assert_eq!(a.primitive_idempotents, 2);
        assert_eq!(a.splittings.len(), 2);
        assert!(a.is_product_of_two_fields());

        let z2 = build_zmod(2).unwrap();
        let r = build_product(&[z2.clone(), z2.clone(), z2]).unwrap();
        let a = RingAnalysis::new(r, &Limits::default()).unwrap();
        assert_eq!(a.primitive_idempotents, 3);
        assert!(!a.is_product_of_two_fields());

        let r = build_product(&[build_zmod(3).unwrap(), build_zmod(4).unwrap()]).unwrap();
        let a = RingAnalysis::new(r, &Limits::default()).unwrap();
        assert!(a
            .splittings
            .iter()
            .any(|s| s.left.is_field && s.right.annihilating_ideals == 1));

        let a = RingAnalysis::new(build_zmod(8).unwrap(), &Limits::default()).unwrap();
        assert_eq!(a.primitive_idempotents, 1);
        assert!(a.splittings.is_empty());
        assert!(a.is_local());
    }
}
