//! Ring-axiom validation.
//!
//! [`validate_ring_axioms`] avoids the cubic triple scan. It picks additive
//! generators `G` greedily (every element is a sum of generators) and checks:
//!
//! * additive associativity `(a+b)+g = a+(b+g)` for all `a, b` and `g ∈ G`;
//!   the set of elements `c` with `(a+b)+c = a+(b+c)` for all `a, b` is
//!   closed under `+`, so it is everything;
//! * distributivity `a(b+g) = ab+ag` for all `a, b` and `g ∈ G`; for fixed
//!   `a` the admissible `c` again form an additively closed set;
//! * multiplicative associativity on `G³` only, since `(xy)z - x(yz)` is
//!   additive in each argument once distributivity holds.
//!
//! Identity, commutativity and inverses are checked exhaustively (quadratic).
//! [`validate_ring_axioms_exhaustive`] is the plain cubic scan, used as an
//! oracle in tests.

use std::fmt;

use fixedbitset::FixedBitSet;

use super::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroEqualsOne,
    AdditiveIdentity {
        a: usize,
    },
    AdditiveCommutativity {
        a: usize,
        b: usize,
    },
    AdditiveInverse {
        a: usize,
    },
    AdditiveAssociativity {
        a: usize,
        b: usize,
        c: usize,
    },
    MultiplicativeIdentity {
        a: usize,
    },
    MultiplicativeCommutativity {
        a: usize,
        b: usize,
    },
    Distributivity {
        a: usize,
        b: usize,
        c: usize,
    },
    MultiplicativeAssociativity {
        a: usize,
        b: usize,
        c: usize,
    },
    BasisCommutativity {
        i: String,
        j: String,
    },
    BasisWellDefined {
        i: String,
        j: String,
        component: String,
    },
    BasisIdentity {
        i: String,
    },
    BasisAssociativity {
        i: String,
        j: String,
        k: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            ZeroEqualsOne => write!(f, "0 = 1"),
            AdditiveIdentity { a } => write!(f, "0 + a != a at element #{a}"),
            AdditiveCommutativity { a, b } => write!(f, "a + b != b + a at (#{a}, #{b})"),
            AdditiveInverse { a } => write!(f, "element #{a} has no additive inverse"),
            AdditiveAssociativity { a, b, c } => {
                write!(f, "(a+b)+c != a+(b+c) at (#{a}, #{b}, #{c})")
            }
            MultiplicativeIdentity { a } => write!(f, "1 * a != a at element #{a}"),
            MultiplicativeCommutativity { a, b } => write!(f, "ab != ba at (#{a}, #{b})"),
            Distributivity { a, b, c } => write!(f, "a(b+c) != ab+ac at (#{a}, #{b}, #{c})"),
            MultiplicativeAssociativity { a, b, c } => {
                write!(f, "(ab)c != a(bc) at (#{a}, #{b}, #{c})")
            }
            BasisCommutativity { i, j } => write!(f, "{i}*{j} != {j}*{i}"),
            BasisWellDefined { i, j, component } => write!(
                f,
                "{i}*{j} is not compatible with the additive order of {i} in component {component}"
            ),
            BasisIdentity { i } => write!(f, "1*{i} != {i}"),
            BasisAssociativity { i, j, k } => {
                write!(
                    f,
                    "({i}*{j})*{k} != {i}*({j}*{k}) on basis triple ({i}, {j}, {k})"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Additive generators the reduced checks ran over (empty for the
    /// exhaustive validator).
    pub generators: Vec<usize>,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

fn quadratic_checks(ring: &FiniteRing) -> Result<(), Violation> {
    let n = ring.order();
    let (zero, one) = (ring.zero(), ring.one());
    if zero == one {
        return Err(Violation::ZeroEqualsOne);
    }
    for a in 0..n {
        if ring.add(zero, a) != a || ring.add(a, zero) != a {
            return Err(Violation::AdditiveIdentity { a });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if ring.add(a, b) != ring.add(b, a) {
                return Err(Violation::AdditiveCommutativity { a, b });
            }
        }
    }
    for a in 0..n {
        if ring.try_neg(a).is_none() {
            return Err(Violation::AdditiveInverse { a });
        }
    }
    for a in 0..n {
        if ring.mul(one, a) != a || ring.mul(a, one) != a {
            return Err(Violation::MultiplicativeIdentity { a });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if ring.mul(a, b) != ring.mul(b, a) {
                return Err(Violation::MultiplicativeCommutativity { a, b });
            }
        }
    }
    Ok(())
}

/// Greedy additive generators: scan elements in index order and keep every
/// element not yet reachable as a sum of earlier picks.
pub(crate) fn additive_generators(ring: &FiniteRing) -> Vec<usize> {
    let n = ring.order();
    let mut reached = FixedBitSet::with_capacity(n);
    let mut frontier = Vec::new();
    let mut gens = Vec::new();
    for candidate in 0..n {
        if reached.contains(candidate) {
            continue;
        }
        gens.push(candidate);
        // everything reachable is closed under adding earlier generators, so
        // only the new generator and its translates need exploring
        frontier.clear();
        frontier.push(candidate);
        frontier.extend(reached.ones().map(|r| ring.add(r, candidate)));
        while let Some(x) = frontier.pop() {
            if reached.put(x) {
                continue;
            }
            for &g in &gens {
                let y = ring.add(x, g);
                if !reached.contains(y) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

pub fn validate_ring_axioms(ring: &FiniteRing) -> ValidationReport {
    if let Err(v) = quadratic_checks(ring) {
        return ValidationReport {
            generators: Vec::new(),
            violation: Some(v),
        };
    }
    let gens = additive_generators(ring);
    let violation = reduced_checks(ring, &gens).err();
    ValidationReport {
        generators: gens,
        violation,
    }
}

fn reduced_checks(ring: &FiniteRing, gens: &[usize]) -> Result<(), Violation> {
    let n = ring.order();
    for &c in gens {
        for a in 0..n {
            let ac = ring.add(a, c);
            for b in 0..n {
                if ring.add(ring.add(b, a), c) != ring.add(b, ac) {
                    return Err(Violation::AdditiveAssociativity { a: b, b: a, c });
                }
            }
        }
    }
    for &c in gens {
        for a in 0..n {
            let ac = ring.mul(a, c);
            for b in 0..n {
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ac) {
                    return Err(Violation::Distributivity { a, b, c });
                }
            }
        }
    }
    for &a in gens {
        for &b in gens {
            let ab = ring.mul(a, b);
            for &c in gens {
                if ring.mul(ab, c) != ring.mul(a, ring.mul(b, c)) {
                    return Err(Violation::MultiplicativeAssociativity { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Full triple scan over all elements.
pub fn validate_ring_axioms_exhaustive(ring: &FiniteRing) -> ValidationReport {
    let report = |violation| ValidationReport {
        generators: Vec::new(),
        violation,
    };
    if let Err(v) = quadratic_checks(ring) {
        return report(Some(v));
    }
    let n = ring.order();
    for a in 0..n {
        for b in 0..n {
            let ab_sum = ring.add(a, b);
            let ab = ring.mul(a, b);
            for c in 0..n {
                if ring.add(ab_sum, c) != ring.add(a, ring.add(b, c)) {
                    return report(Some(Violation::AdditiveAssociativity { a, b, c }));
                }
                if ring.mul(ab, c) != ring.mul(a, ring.mul(b, c)) {
                    return report(Some(Violation::MultiplicativeAssociativity { a, b, c }));
                }
                if ring.mul(a, ring.add(b, c)) != ring.add(ab, ring.mul(a, c)) {
                    return report(Some(Violation::Distributivity { a, b, c }));
                }
            }
        }
    }
    report(None)
}
