//! Ideals, ideal arithmetic and the full ideal lattice of a finite ring.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Limits, Result};
use crate::ring::{Element, FiniteRing, RingId};

/// An ideal stored as a bitset over element indices.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingId,
    members: FixedBitSet,
    generators: Vec<usize>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.members.hash(state);
    }
}

impl Ideal {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    /// Always false: every ideal contains zero.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// A small generating set, used for display and fast annihilator scans.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `(g1, g2, …)` using the ring's element labels.
    pub fn label(&self, ring: &FiniteRing) -> String {
        if self.generators.is_empty() {
            return format!("({})", ring.label(ring.zero()));
        }
        let gens: Vec<&str> = self.generators.iter().map(|&g| ring.label(g)).collect();
        format!("({})", gens.join(", "))
    }
}

fn principal_members(ring: &FiniteRing, a: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(ring.order());
    for r in ring.elements() {
        set.insert(ring.mul(r, a));
    }
    set
}

/// `K + P` for ideals given by members: a union of additive cosets of `K`.
fn sum_members(ring: &FiniteRing, k: &FixedBitSet, p: &FixedBitSet) -> FixedBitSet {
    let mut out = k.clone();
    let k_members: Vec<usize> = k.ones().collect();
    for t in p.ones() {
        if !out.contains(t) {
            for &x in &k_members {
                out.insert(ring.add(x, t));
            }
        }
    }
    out
}

/// Additive subgroup generated by a set of elements.
pub(crate) fn additive_closure(ring: &FiniteRing, seeds: &FixedBitSet) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(ring.order());
    out.insert(ring.zero());
    for s in seeds.ones() {
        if out.contains(s) {
            continue;
        }
        // out is a subgroup; adjoin s by adding cosets out + s, out + 2s, …
        let base: Vec<usize> = out.ones().collect();
        let mut shift = s;
        while !out.contains(shift) {
            for &x in &base {
                out.insert(ring.add(x, shift));
            }
            shift = ring.add(shift, s);
        }
    }
    out
}

fn generator_hint(
    ring: &FiniteRing,
    members: &FixedBitSet,
    principal: &mut dyn FnMut(usize) -> FixedBitSet,
) -> Vec<usize> {
    let size = members.count_ones(..);
    if size <= 1 {
        return Vec::new();
    }
    for a in members.ones() {
        if principal(a).count_ones(..) == size {
            return vec![a];
        }
    }
    let mut current = FixedBitSet::with_capacity(ring.order());
    current.insert(ring.zero());
    let mut gens = Vec::new();
    for a in members.ones() {
        if !current.contains(a) {
            gens.push(a);
            current = sum_members(ring, &current, &principal(a));
        }
    }
    gens
}

impl FiniteRing {
    fn make_ideal(&self, members: FixedBitSet) -> Ideal {
        let generators = generator_hint(self, &members, &mut |a| principal_members(self, a));
        Ideal {
            ring: self.id(),
            members,
            generators,
        }
    }

    fn check_own(&self, ideals: &[&Ideal]) -> Result<()> {
        if ideals.iter().all(|i| i.ring == self.id()) {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "ideal does not belong to ring `{}`",
                self.name()
            )))
        }
    }

    /// `Ra = {ra : r ∈ R}`.
    pub fn principal_ideal(&self, a: Element) -> Ideal {
        self.make_ideal(principal_members(self, a.index()))
    }

    /// Wraps a member set after checking it is an ideal.
    pub fn ideal_from_members(&self, members: impl IntoIterator<Item = usize>) -> Result<Ideal> {
        let mut set = FixedBitSet::with_capacity(self.order());
        for m in members {
            self.element(m)?;
            set.insert(m);
        }
        let closed = set.contains(self.zero())
            && set
                .ones()
                .all(|a| set.ones().all(|b| set.contains(self.add(a, b))))
            && set
                .ones()
                .all(|a| self.elements().all(|r| set.contains(self.mul(r, a))));
        if !closed {
            return Err(Error::Usage(format!(
                "member set is not an ideal of `{}`",
                self.name()
            )));
        }
        Ok(self.make_ideal(set))
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.principal_ideal(Element::zero_of(self))
    }

    pub fn unit_ideal(&self) -> Ideal {
        self.principal_ideal(Element::one_of(self))
    }

    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_own(&[i, j])?;
        Ok(self.make_ideal(sum_members(self, &i.members, &j.members)))
    }

    /// Additive closure of all pairwise products.
    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_own(&[i, j])?;
        let mut products = FixedBitSet::with_capacity(self.order());
        for a in i.members.ones() {
            for b in j.members.ones() {
                products.insert(self.mul(a, b));
            }
        }
        Ok(self.make_ideal(additive_closure(self, &products)))
    }

    /// `Ann(I) = {r : rI = (0)}`.
    pub fn annihilator(&self, i: &Ideal) -> Result<Ideal> {
        self.check_own(&[i])?;
        Ok(self.make_ideal(annihilator_members(self, &i.generators)))
    }

    /// Exhaustive primality scan: `I ≠ R` and `ab ∈ I ⇒ a ∈ I or b ∈ I`.
    pub fn is_prime_ideal(&self, i: &Ideal) -> Result<bool> {
        self.check_own(&[i])?;
        Ok(is_prime_members(self, &i.members))
    }
}

impl Element {
    pub(crate) fn zero_of(ring: &FiniteRing) -> Element {
        ring.element(ring.zero()).expect("zero is an element")
    }

    pub(crate) fn one_of(ring: &FiniteRing) -> Element {
        ring.element(ring.one()).expect("one is an element")
    }
}

fn annihilator_members(ring: &FiniteRing, generators: &[usize]) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(ring.order());
    for r in ring.elements() {
        if generators.iter().all(|&g| ring.mul(r, g) == ring.zero()) {
            set.insert(r);
        }
    }
    set
}

fn is_prime_members(ring: &FiniteRing, members: &FixedBitSet) -> bool {
    if members.contains(ring.one()) {
        return false;
    }
    let outside: Vec<usize> = ring.elements().filter(|&a| !members.contains(a)).collect();
    for (k, &a) in outside.iter().enumerate() {
        for &b in &outside[k..] {
            if members.contains(ring.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Every ideal of a ring together with annihilator, primality and
/// containment data. Ideals are ordered by size, then by member list, so
/// `(0)` comes first and `R` last.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring: RingId,
    ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    annihilators: Vec<usize>,
    prime: Vec<bool>,
    minimal_prime: Vec<bool>,
    maximal: Vec<bool>,
    annihilating: Vec<bool>,
    /// `below[i]` holds every `j` with `I_j ⊆ I_i`.
    below: Vec<FixedBitSet>,
    principal: Vec<usize>,
}

pub fn enumerate_ideals(ring: &FiniteRing) -> Result<IdealLattice> {
    enumerate_ideals_with(ring, &Limits::default())
}

/// Every ideal is a sum of principal ideals, so the lattice is the closure
/// of the distinct principal ideals under adding one more principal ideal.
pub fn enumerate_ideals_with(ring: &FiniteRing, limits: &Limits) -> Result<IdealLattice> {
    let n = ring.order();
    if n > limits.max_ring_order {
        return Err(Error::resource(
            ring.name(),
            format!(
                "ring order {n} exceeds the cap of {}",
                limits.max_ring_order
            ),
        ));
    }
    let principal_sets: Vec<FixedBitSet> = ring
        .elements()
        .map(|a| principal_members(ring, a))
        .collect();
    let mut distinct: Vec<FixedBitSet> = Vec::new();
    {
        let mut seen = HashMap::new();
        for p in &principal_sets {
            if !seen.contains_key(p) {
                seen.insert(p.clone(), ());
                distinct.push(p.clone());
            }
        }
    }

    let over_cap = || {
        Error::resource(
            ring.name(),
            format!("more than {} ideals", limits.max_ideals),
        )
    };
    if distinct.len() > limits.max_ideals {
        return Err(over_cap());
    }
    let mut found: HashMap<FixedBitSet, ()> = distinct.iter().map(|p| (p.clone(), ())).collect();
    let mut queue: Vec<FixedBitSet> = distinct.clone();
    while let Some(k) = queue.pop() {
        for p in &distinct {
            if p.is_subset(&k) {
                continue;
            }
            let s = sum_members(ring, &k, p);
            if !found.contains_key(&s) {
                found.insert(s.clone(), ());
                if found.len() > limits.max_ideals {
                    return Err(over_cap());
                }
                queue.push(s);
            }
        }
    }

    let mut sets: Vec<FixedBitSet> = found.into_keys().collect();
    sets.sort_by_cached_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    let index: HashMap<FixedBitSet, usize> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let principal: Vec<usize> = principal_sets.iter().map(|p| index[p]).collect();

    let ideals: Vec<Ideal> = sets
        .into_iter()
        .map(|members| {
            let generators = generator_hint(ring, &members, &mut |a| principal_sets[a].clone());
            Ideal {
                ring: ring.id(),
                members,
                generators,
            }
        })
        .collect();

    let annihilators: Vec<usize> = ideals
        .iter()
        .map(|i| index[&annihilator_members(ring, &i.generators)])
        .collect();
    let prime: Vec<bool> = ideals
        .iter()
        .map(|i| is_prime_members(ring, &i.members))
        .collect();
    let below: Vec<FixedBitSet> = ideals
        .iter()
        .map(|outer| {
            let mut row = FixedBitSet::with_capacity(ideals.len());
            for (j, inner) in ideals.iter().enumerate() {
                if inner.members.is_subset(&outer.members) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let count = ideals.len();
    let minimal_prime: Vec<bool> = (0..count)
        .map(|i| prime[i] && below[i].ones().all(|j| j == i || !prime[j]))
        .collect();
    let whole = count - 1;
    let maximal: Vec<bool> = (0..count)
        .map(|i| i != whole && (0..count).all(|j| j == i || j == whole || !below[j].contains(i)))
        .collect();
    let zero = 0;
    let annihilating: Vec<bool> = (0..count)
        .map(|i| i != zero && annihilators[i] != zero)
        .collect();

    Ok(IdealLattice {
        ring: ring.id(),
        ideals,
        index,
        annihilators,
        prime,
        minimal_prime,
        maximal,
        annihilating,
        below,
        principal,
    })
}

impl IdealLattice {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn index_of(&self, members: &FixedBitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        if ideal.ring != self.ring {
            return None;
        }
        self.index_of(&ideal.members)
    }

    pub fn principal_of(&self, a: usize) -> usize {
        self.principal[a]
    }

    pub fn annihilator(&self, i: usize) -> usize {
        self.annihilators[i]
    }

    pub fn is_prime(&self, i: usize) -> bool {
        self.prime[i]
    }

    pub fn is_minimal_prime(&self, i: usize) -> bool {
        self.minimal_prime[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    /// Membership in `A(R)*`: nonzero with nonzero annihilator.
    pub fn is_annihilating(&self, i: usize) -> bool {
        self.annihilating[i]
    }

    /// `I_inner ⊆ I_outer`.
    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        self.below[outer].contains(inner)
    }

    /// Ideals contained in `I_i`, `(0)` and `I_i` included; this is `|𝕀(I_i)|`.
    pub fn sub_ideal_count(&self, i: usize) -> usize {
        self.below[i].count_ones(..)
    }

    pub fn primes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.prime[i]).collect()
    }

    pub fn minimal_primes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.minimal_prime[i]).collect()
    }

    pub fn maximal_ideals(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maximal[i]).collect()
    }

    pub fn annihilating_ideals(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.annihilating[i]).collect()
    }

    pub fn is_local(&self) -> bool {
        self.maximal.iter().filter(|&&m| m).count() == 1
    }

    /// `I_i I_j = (0)`, i.e. `I_j ⊆ Ann(I_i)`.
    pub fn product_is_zero(&self, i: usize, j: usize) -> bool {
        self.contains(self.annihilators[i], j)
    }

    pub fn is_square_zero(&self, i: usize) -> bool {
        self.product_is_zero(i, i)
    }

    pub fn sum(&self, ring: &FiniteRing, i: usize, j: usize) -> usize {
        let s = sum_members(ring, &self.ideals[i].members, &self.ideals[j].members);
        self.index[&s]
    }

    pub fn product(&self, ring: &FiniteRing, i: usize, j: usize) -> usize {
        let mut products = FixedBitSet::with_capacity(ring.order());
        for &a in &self.ideals[i].generators {
            for &b in &self.ideals[j].generators {
                products.insert(ring.mul(a, b));
            }
        }
        // IJ is the ideal generated by products of generators
        let mut closure = FixedBitSet::with_capacity(ring.order());
        closure.insert(ring.zero());
        let mut acc = closure;
        for p in products.ones() {
            acc = sum_members(ring, &acc, &self.ideals[self.principal[p]].members);
        }
        self.index[&acc]
    }

    pub fn intersection(&self, i: usize, j: usize) -> usize {
        let mut s = self.ideals[i].members.clone();
        s.intersect_with(&self.ideals[j].members);
        self.index[&s]
    }

    pub fn label(&self, ring: &FiniteRing, i: usize) -> String {
        self.ideals[i].label(ring)
    }
}
