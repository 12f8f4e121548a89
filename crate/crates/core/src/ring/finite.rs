use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use super::spec::{poly_to_string, Constructor, RingSpec, StructureSpec};
use super::validate::{validate_ring_axioms, Violation};
use crate::error::{Error, Limits, Result};

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Process-unique identity of a built ring; ideals carry it so that
/// operations can reject ideals from a different ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingId(u64);

impl RingId {
    fn fresh() -> Self {
        RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// A checked element index of a particular ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

const NO_INVERSE: u32 = u32::MAX;

/// A finite commutative ring with identity stored as dense element-indexed
/// addition and multiplication tables.
#[derive(Clone)]
pub struct FiniteRing {
    id: RingId,
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    spec: Option<RingSpec>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from raw tables and validates the axioms.
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let ring = Self::from_tables_unchecked(name, add, mul, zero, one, labels)?;
        ring.checked()
    }

    /// Builds a ring from raw tables without checking the axioms. Only the
    /// table dimensions are verified; use [`validate_ring_axioms`] before
    /// relying on ring identities.
    pub fn from_tables_unchecked(
        name: impl Into<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let order = labels.len();
        let name = name.into();
        if order == 0
            || add.len() != order * order
            || mul.len() != order * order
            || zero >= order
            || one >= order
            || add.iter().chain(mul.iter()).any(|&v| v as usize >= order)
        {
            return Err(Error::InvalidSpec(format!(
                "`{name}`: tables do not match {order} labelled elements"
            )));
        }
        let mut neg = vec![NO_INVERSE; order];
        for (a, slot) in neg.iter_mut().enumerate() {
            if let Some(b) = (0..order).find(|&b| add[a * order + b] as usize == zero) {
                *slot = b as u32;
            }
        }
        Ok(FiniteRing {
            id: RingId::fresh(),
            name,
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            spec: None,
        })
    }

    fn checked(self) -> Result<Self> {
        let report = validate_ring_axioms(&self);
        match report.violation {
            None => Ok(self),
            Some(violation) => Err(Error::Axiom {
                ring: self.name.clone(),
                violation,
            }),
        }
    }

    fn with_spec(mut self, spec: RingSpec) -> Self {
        self.name = spec.name.clone();
        self.spec = Some(spec);
        self
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spec(&self) -> Option<&RingSpec> {
        self.spec.as_ref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn element(&self, index: usize) -> Result<Element> {
        if index < self.order {
            Ok(Element(index))
        } else {
            Err(Error::Usage(format!(
                "element index {index} out of range for `{}` of order {}",
                self.name, self.order
            )))
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    /// Additive inverse. Panics only on rings built unchecked whose additive
    /// structure is not a group.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        let n = self.neg[a];
        assert!(
            n != NO_INVERSE,
            "element {a} of `{}` has no additive inverse",
            self.name
        );
        n as usize
    }

    pub(crate) fn try_neg(&self, a: usize) -> Option<usize> {
        (self.neg[a] != NO_INVERSE).then_some(self.neg[a] as usize)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn pow(&self, a: usize, mut k: u32) -> usize {
        let mut acc = self.one;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.order).any(|b| self.mul(a, b) == self.one)
    }

    pub fn is_zero_divisor(&self, a: usize) -> bool {
        (0..self.order).any(|b| b != self.zero && self.mul(a, b) == self.zero)
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut p = a;
        for _ in 0..=self.order {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, a);
        }
        false
    }

    pub fn is_integral_domain(&self) -> bool {
        (0..self.order)
            .filter(|&a| a != self.zero)
            .all(|a| !self.is_zero_divisor(a))
    }

    /// A finite integral domain is a field, so this is the same scan.
    pub fn is_field(&self) -> bool {
        self.is_integral_domain()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// The ring `eR` with identity `e`, for an idempotent `e ∉ {0}`.
    pub fn corner(&self, e: usize) -> Result<FiniteRing> {
        if self.mul(e, e) != e || e == self.zero {
            return Err(Error::Usage(format!(
                "`{}` is not a nonzero idempotent of `{}`",
                self.labels[e], self.name
            )));
        }
        let mut members: Vec<usize> = (0..self.order).map(|r| self.mul(e, r)).collect();
        members.sort_unstable();
        members.dedup();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let k = members.len();
        let mut add = Vec::with_capacity(k * k);
        let mut mul = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                add.push(pos[self.add(a, b)] as u32);
                mul.push(pos[self.mul(a, b)] as u32);
            }
        }
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        FiniteRing::from_tables(
            format!("{}·{}", self.labels[e], self.name),
            add,
            mul,
            pos[self.zero],
            pos[e],
            labels,
        )
    }
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteRing> {
        self.build_with(&Limits::default())
    }

    pub fn build_with(&self, limits: &Limits) -> Result<FiniteRing> {
        self.check()?;
        let ring = match &self.constructor {
            Constructor::Zmod(n) => build_zmod_with(*n, limits)?,
            Constructor::Product(factors) => {
                let built = factors
                    .iter()
                    .map(|f| f.build_with(limits))
                    .collect::<Result<Vec<_>>>()?;
                build_product_with(&built, limits)?
            }
            Constructor::PolyQuotient { base_mod, modulus } => {
                let base = build_zmod_with(*base_mod, limits)?;
                build_poly_quotient_with(&base, modulus, limits)?
            }
            Constructor::Structure(s) => {
                build_structure_ring_with(&s.orders, s.one, &s.table, limits)?
            }
        };
        Ok(ring.with_spec(self.clone()))
    }
}

fn check_order(name: &str, order: u128, limits: &Limits) -> Result<usize> {
    if order > limits.max_ring_order as u128 {
        return Err(Error::resource(
            name,
            format!(
                "ring order {order} exceeds the cap of {} elements",
                limits.max_ring_order
            ),
        ));
    }
    Ok(order as usize)
}

pub fn build_zmod(n: u64) -> Result<FiniteRing> {
    build_zmod_with(n, &Limits::default())
}

pub fn build_zmod_with(n: u64, limits: &Limits) -> Result<FiniteRing> {
    let spec = RingSpec::zmod(n);
    spec.check()?;
    let n = check_order(&spec.name, n as u128, limits)?;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    let labels = (0..n).map(|a| a.to_string()).collect();
    Ok(FiniteRing::from_tables(spec.name.clone(), add, mul, 0, 1, labels)?.with_spec(spec))
}

pub fn build_product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    build_product_with(factors, &Limits::default())
}

/// Direct product with mixed-radix encoding; the first factor is the most
/// significant digit, so nested and flat products share their tables.
pub fn build_product_with(factors: &[FiniteRing], limits: &Limits) -> Result<FiniteRing> {
    let name = factors
        .iter()
        .map(|f| f.name.as_str())
        .collect::<Vec<_>>()
        .join("x");
    if factors.len() < 2 {
        return Err(Error::InvalidSpec(format!(
            "`{name}`: a product needs at least 2 factors, got {}",
            factors.len()
        )));
    }
    let total: u128 = factors.iter().map(|f| f.order as u128).product();
    let n = check_order(&name, total, limits)?;

    let digits: Vec<Vec<usize>> = (0..n)
        .map(|mut idx| {
            let mut d = vec![0; factors.len()];
            for (slot, f) in d.iter_mut().zip(factors).rev() {
                *slot = idx % f.order;
                idx /= f.order;
            }
            d
        })
        .collect();
    let encode = |d: &[usize]| {
        d.iter()
            .zip(factors)
            .fold(0, |acc, (&x, f)| acc * f.order + x)
    };

    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut buf = vec![0; factors.len()];
    for a in 0..n {
        for b in 0..n {
            for (i, f) in factors.iter().enumerate() {
                buf[i] = f.add(digits[a][i], digits[b][i]);
            }
            add.push(encode(&buf) as u32);
            for (i, f) in factors.iter().enumerate() {
                buf[i] = f.mul(digits[a][i], digits[b][i]);
            }
            mul.push(encode(&buf) as u32);
        }
    }
    let zero = encode(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
    let one = encode(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
    let labels = digits
        .iter()
        .map(|d| {
            let parts: Vec<&str> = d
                .iter()
                .zip(factors)
                .map(|(&x, f)| f.labels[x].as_str())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let ring = FiniteRing::from_tables(name, add, mul, zero, one, labels)?;
    let specs: Option<Vec<RingSpec>> = factors.iter().map(|f| f.spec.clone()).collect();
    Ok(match specs {
        Some(specs) => ring.with_spec(RingSpec::product(specs)),
        None => ring,
    })
}

pub fn build_poly_quotient(base: &FiniteRing, modulus: &[i64]) -> Result<FiniteRing> {
    build_poly_quotient_with(base, modulus, &Limits::default())
}

/// `Z_m[x] / (f)` for monic `f`; the base must be a ring built as `zmod`.
/// Element index is `Σ c_i m^i` with `c_0` the constant coefficient.
pub fn build_poly_quotient_with(
    base: &FiniteRing,
    modulus: &[i64],
    limits: &Limits,
) -> Result<FiniteRing> {
    let m = match base.spec.as_ref().map(|s| &s.constructor) {
        Some(Constructor::Zmod(m)) => *m,
        _ => {
            return Err(Error::InvalidSpec(format!(
                "poly_quotient base must be a Z_m ring, got `{}`",
                base.name
            )))
        }
    };
    let spec = RingSpec::poly_quotient(m, modulus.to_vec());
    spec.check()?;
    let d = modulus.len() - 1;
    let n = check_order(&spec.name, (m as u128).pow(d as u32), limits)?;
    let mi = m as i64;
    let f: Vec<i64> = modulus.iter().map(|c| c.rem_euclid(mi)).collect();

    let coeffs: Vec<Vec<i64>> = (0..n)
        .map(|mut idx| {
            (0..d)
                .map(|_| {
                    let c = (idx % m as usize) as i64;
                    idx /= m as usize;
                    c
                })
                .collect()
        })
        .collect();
    let encode = |c: &[i64]| {
        c.iter()
            .rev()
            .fold(0usize, |acc, &x| acc * m as usize + x as usize)
    };

    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut prod = vec![0i64; 2 * d];
    for a in 0..n {
        for b in 0..n {
            let sum: Vec<i64> = (0..d).map(|i| (coeffs[a][i] + coeffs[b][i]) % mi).collect();
            add.push(encode(&sum) as u32);

            prod.iter_mut().for_each(|c| *c = 0);
            for i in 0..d {
                for j in 0..d {
                    prod[i + j] = (prod[i + j] + coeffs[a][i] * coeffs[b][j]) % mi;
                }
            }
            for k in (d..2 * d - 1).rev() {
                let c = prod[k];
                if c != 0 {
                    for j in 0..d {
                        prod[k - d + j] = (prod[k - d + j] - c * f[j]).rem_euclid(mi);
                    }
                    prod[k] = 0;
                }
            }
            mul.push(encode(&prod[..d]) as u32);
        }
    }
    let labels = coeffs.iter().map(|c| poly_to_string(c, m)).collect();
    let one = if n > 1 { 1 } else { 0 };
    Ok(FiniteRing::from_tables(spec.name.clone(), add, mul, 0, one, labels)?.with_spec(spec))
}

const BASIS_NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];

/// Display names for a structure basis: the identity prints as a bare
/// coefficient, the rest as x, y, z, … in basis order.
pub(crate) fn basis_names(rank: usize, one: usize) -> Vec<String> {
    let mut next = 0;
    (0..rank)
        .map(|i| {
            if i == one {
                "1".to_string()
            } else {
                let name = BASIS_NAMES
                    .get(next)
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("e{i}"));
                next += 1;
                name
            }
        })
        .collect()
}

struct Structure<'a> {
    orders: &'a [u64],
    table: &'a [Vec<Vec<i64>>],
}

impl Structure<'_> {
    fn rank(&self) -> usize {
        self.orders.len()
    }

    fn multiply(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let k = self.rank();
        let mut out = vec![0i64; k];
        for i in 0..k {
            if u[i] == 0 {
                continue;
            }
            for j in 0..k {
                if v[j] == 0 {
                    continue;
                }
                let c = u[i] * v[j];
                for l in 0..k {
                    out[l] = (out[l] + c * self.table[i][j][l]) % self.orders[l] as i64;
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        e
    }

    /// Commutativity, well-definedness over the additive orders, identity
    /// and associativity on basis triples. Together with bilinear extension
    /// these give a commutative ring.
    fn check_basis(&self, one: usize, names: &[String]) -> std::result::Result<(), Violation> {
        let k = self.rank();
        for i in 0..k {
            for j in 0..k {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Violation::BasisCommutativity {
                        i: names[i].clone(),
                        j: names[j].clone(),
                    });
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let m = self.orders[l] as i64;
                    if (self.orders[i] as i64 * self.table[i][j][l]) % m != 0 {
                        return Err(Violation::BasisWellDefined {
                            i: names[i].clone(),
                            j: names[j].clone(),
                            component: names[l].clone(),
                        });
                    }
                }
            }
        }
        for j in 0..k {
            if self.table[one][j] != self.unit(j) {
                return Err(Violation::BasisIdentity {
                    i: names[j].clone(),
                });
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = self.multiply(&self.table[i][j], &self.unit(l));
                    let right = self.multiply(&self.unit(i), &self.table[j][l]);
                    if left != right {
                        return Err(Violation::BasisAssociativity {
                            i: names[i].clone(),
                            j: names[j].clone(),
                            k: names[l].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn build_structure_ring(
    orders: &[u64],
    one: usize,
    table: &[Vec<Vec<i64>>],
) -> Result<FiniteRing> {
    build_structure_ring_with(orders, one, table, &Limits::default())
}

/// Ring given by structure constants. Element index is mixed radix with
/// basis component 0 least significant.
pub fn build_structure_ring_with(
    orders: &[u64],
    one: usize,
    table: &[Vec<Vec<i64>>],
    limits: &Limits,
) -> Result<FiniteRing> {
    let spec = RingSpec::structure(
        "structure",
        StructureSpec {
            orders: orders.to_vec(),
            one,
            table: table.to_vec(),
        },
    );
    spec.check()?;
    let total: u128 = orders.iter().map(|&m| m as u128).product();
    let n = check_order(&spec.name, total, limits)?;
    let k = orders.len();
    let names = basis_names(k, one);
    let st = Structure { orders, table };
    st.check_basis(one, &names)
        .map_err(|violation| Error::Axiom {
            ring: spec.name.clone(),
            violation,
        })?;

    let coeffs: Vec<Vec<i64>> = (0..n)
        .map(|mut idx| {
            orders
                .iter()
                .map(|&m| {
                    let c = (idx % m as usize) as i64;
                    idx /= m as usize;
                    c
                })
                .collect()
        })
        .collect();
    let encode = |c: &[i64]| {
        c.iter()
            .zip(orders)
            .rev()
            .fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize)
    };
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let sum: Vec<i64> = (0..k)
                .map(|l| (coeffs[a][l] + coeffs[b][l]) % orders[l] as i64)
                .collect();
            add.push(encode(&sum) as u32);
            mul.push(encode(&st.multiply(&coeffs[a], &coeffs[b])) as u32);
        }
    }
    let labels = coeffs
        .iter()
        .map(|c| {
            let terms: Vec<String> = std::iter::once(one)
                .chain((0..k).filter(|&i| i != one))
                .filter(|&i| c[i] != 0)
                .map(|i| match (i == one, c[i]) {
                    (true, v) => v.to_string(),
                    (false, 1) => names[i].clone(),
                    (false, v) => format!("{v}{}", names[i]),
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let one_index = encode(&st.unit(one));
    Ok(FiniteRing::from_tables(spec.name.clone(), add, mul, 0, one_index, labels)?.with_spec(spec))
}
