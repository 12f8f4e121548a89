use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Declarative description of a finite commutative ring with identity.
///
/// The JSON form carries a `name` and exactly one constructor key:
/// `zmod`, `product`, `poly_quotient` or `structure`. Unknown keys are
/// rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct RingSpec {
    pub name: String,
    pub constructor: Constructor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constructor {
    Zmod(u64),
    Product(Vec<RingSpec>),
    /// `Z_base_mod[x] / (modulus)`, coefficients listed from the constant term up.
    PolyQuotient {
        base_mod: u64,
        modulus: Vec<i64>,
    },
    Structure(StructureSpec),
}

/// Structure constants over a basis `e_0..e_k`: the additive group is
/// `Z_{orders[0]} ⊕ … ⊕ Z_{orders[k]}` and `table[i][j]` is the coefficient
/// vector of `e_i · e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureSpec {
    pub orders: Vec<u64>,
    pub one: usize,
    pub table: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zmod: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<Vec<RingSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    poly_quotient: Option<RawPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    structure: Option<StructureSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoly {
    base_mod: u64,
    modulus: Vec<i64>,
}

impl TryFrom<RawSpec> for RingSpec {
    type Error = String;

    fn try_from(raw: RawSpec) -> std::result::Result<Self, String> {
        let mut found = Vec::new();
        if let Some(n) = raw.zmod {
            found.push(Constructor::Zmod(n));
        }
        if let Some(factors) = raw.product {
            found.push(Constructor::Product(factors));
        }
        if let Some(p) = raw.poly_quotient {
            found.push(Constructor::PolyQuotient {
                base_mod: p.base_mod,
                modulus: p.modulus,
            });
        }
        if let Some(s) = raw.structure {
            found.push(Constructor::Structure(s));
        }
        match found.len() {
            1 => Ok(RingSpec {
                name: raw.name,
                constructor: found.pop().unwrap(),
            }),
            0 => Err(format!(
                "ring `{}` has no constructor (expected one of zmod, product, poly_quotient, structure)",
                raw.name
            )),
            _ => Err(format!("ring `{}` has more than one constructor", raw.name)),
        }
    }
}

impl From<RingSpec> for RawSpec {
    fn from(spec: RingSpec) -> Self {
        let mut raw = RawSpec {
            name: spec.name,
            zmod: None,
            product: None,
            poly_quotient: None,
            structure: None,
        };
        match spec.constructor {
            Constructor::Zmod(n) => raw.zmod = Some(n),
            Constructor::Product(f) => raw.product = Some(f),
            Constructor::PolyQuotient { base_mod, modulus } => {
                raw.poly_quotient = Some(RawPoly { base_mod, modulus })
            }
            Constructor::Structure(s) => raw.structure = Some(s),
        }
        raw
    }
}

impl RingSpec {
    pub fn zmod(n: u64) -> Self {
        RingSpec {
            name: format!("Z{n}"),
            constructor: Constructor::Zmod(n),
        }
    }

    pub fn product(factors: Vec<RingSpec>) -> Self {
        let name = factors
            .iter()
            .map(|f| {
                if matches!(f.constructor, Constructor::Product(_)) {
                    format!("({})", f.name)
                } else {
                    f.name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("x");
        RingSpec {
            name,
            constructor: Constructor::Product(factors),
        }
    }

    pub fn poly_quotient(base_mod: u64, modulus: Vec<i64>) -> Self {
        let name = format!("Z{base_mod}[x]/({})", poly_to_string(&modulus, base_mod));
        RingSpec {
            name,
            constructor: Constructor::PolyQuotient { base_mod, modulus },
        }
    }

    pub fn structure(name: impl Into<String>, spec: StructureSpec) -> Self {
        RingSpec {
            name: name.into(),
            constructor: Constructor::Structure(spec),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring specs always serialize")
    }

    /// Checks the shape constraints that do not need the ring to be built.
    pub fn check(&self) -> Result<()> {
        match &self.constructor {
            Constructor::Zmod(n) if *n < 2 => Err(Error::InvalidSpec(format!(
                "`{}`: zmod modulus must be at least 2, got {n}",
                self.name
            ))),
            Constructor::Zmod(_) => Ok(()),
            Constructor::Product(f) if f.len() < 2 => Err(Error::InvalidSpec(format!(
                "`{}`: a product needs at least 2 factors, got {}",
                self.name,
                f.len()
            ))),
            Constructor::Product(f) => f.iter().try_for_each(RingSpec::check),
            Constructor::PolyQuotient { base_mod, modulus } => {
                if *base_mod < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "`{}`: poly_quotient base modulus must be at least 2",
                        self.name
                    )));
                }
                if modulus.len() < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "`{}`: modulus must have degree at least 1",
                        self.name
                    )));
                }
                let lead = modulus[modulus.len() - 1].rem_euclid(*base_mod as i64);
                if lead != 1 {
                    return Err(Error::InvalidSpec(format!(
                        "`{}`: modulus is not monic (leading coefficient {lead} mod {base_mod})",
                        self.name
                    )));
                }
                Ok(())
            }
            Constructor::Structure(s) => s.check(&self.name),
        }
    }
}

impl StructureSpec {
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    fn check(&self, name: &str) -> Result<()> {
        let k = self.orders.len();
        let bad = |msg: String| Err(Error::InvalidSpec(format!("`{name}`: {msg}")));
        if k == 0 {
            return bad("structure needs at least one basis element".into());
        }
        if let Some(m) = self.orders.iter().find(|&&m| m < 2) {
            return bad(format!("additive orders must be at least 2, got {m}"));
        }
        if self.one >= k {
            return bad(format!(
                "identity index {} out of range for {k} basis elements",
                self.one
            ));
        }
        if self.table.len() != k || self.table.iter().any(|row| row.len() != k) {
            return bad(format!("multiplication table must be {k}x{k}"));
        }
        for (i, row) in self.table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.len() != k {
                    return bad(format!("table[{i}][{j}] must have {k} coefficients"));
                }
                for (l, &c) in entry.iter().enumerate() {
                    if c < 0 || c as u64 >= self.orders[l] {
                        return bad(format!(
                            "table[{i}][{j}][{l}] = {c} is not reduced mod {}",
                            self.orders[l]
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Renders a coefficient list (constant term first) as a polynomial in `x`,
/// highest degree first.
pub(crate) fn poly_to_string(coeffs: &[i64], modulus: u64) -> String {
    let m = modulus as i64;
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        let c = c.rem_euclid(m);
        if c == 0 {
            continue;
        }
        let var = match deg {
            0 => String::new(),
            1 => "x".to_string(),
            d => format!("x^{d}"),
        };
        terms.push(match (c, deg) {
            (_, 0) => c.to_string(),
            (1, _) => var,
            _ => format!("{c}{var}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_constructor() {
        let z = RingSpec::from_json(r#"{"name": "Z12", "zmod": 12}"#).unwrap();
        assert_eq!(z.constructor, Constructor::Zmod(12));

        let p = RingSpec::from_json(
            r#"{"name": "Z2xZ4", "product": [{"name": "Z2", "zmod": 2}, {"name": "Z4", "zmod": 4}]}"#,
        )
        .unwrap();
        assert!(matches!(p.constructor, Constructor::Product(ref f) if f.len() == 2));

        let q = RingSpec::from_json(
            r#"{"name": "F4", "poly_quotient": {"base_mod": 2, "modulus": [1, 1, 1]}}"#,
        )
        .unwrap();
        assert_eq!(
            q.constructor,
            Constructor::PolyQuotient {
                base_mod: 2,
                modulus: vec![1, 1, 1]
            }
        );

        let s = RingSpec::from_json(
            r#"{"name": "F2", "structure": {"orders": [2], "one": 0, "table": [[[1]]]}}"#,
        )
        .unwrap();
        assert!(matches!(s.constructor, Constructor::Structure(_)));
    }

    #[test]
    fn rejects_unknown_and_ambiguous_fields() {
        assert!(RingSpec::from_json(r#"{"name": "Z4", "zmod": 4, "extra": 1}"#).is_err());
        assert!(RingSpec::from_json(r#"{"name": "Z4", "zmod": 4, "product": []}"#).is_err());
        assert!(RingSpec::from_json(r#"{"name": "Z4"}"#).is_err());
        assert!(RingSpec::from_json(
            r#"{"name": "q", "poly_quotient": {"base_mod": 2, "modulus": [1, 1], "x": 0}}"#
        )
        .is_err());
        assert!(RingSpec::from_json(r#"{"zmod": 4}"#).is_err());
    }

    #[test]
    fn json_round_trip_preserves_spec() {
        let spec = RingSpec::product(vec![
            RingSpec::zmod(2),
            RingSpec::poly_quotient(3, vec![0, 0, 1]),
        ]);
        let back = RingSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(spec, back);
        assert_eq!(spec.name, "Z2xZ3[x]/(x^2)");
    }

    #[test]
    fn shape_checks() {
        assert!(RingSpec::zmod(1).check().is_err());
        assert!(RingSpec::product(vec![RingSpec::zmod(2)]).check().is_err());
        assert!(RingSpec::poly_quotient(2, vec![1, 0, 2]).check().is_err());
        assert!(RingSpec::poly_quotient(3, vec![1]).check().is_err());
        assert!(RingSpec::poly_quotient(3, vec![1, 4]).check().is_ok());
    }

    #[test]
    fn polynomial_rendering() {
        assert_eq!(poly_to_string(&[1, 1, 1], 2), "x^2+x+1");
        assert_eq!(poly_to_string(&[0, 2], 3), "2x");
        assert_eq!(poly_to_string(&[0, 0], 3), "0");
        assert_eq!(poly_to_string(&[-1, 0, 1], 3), "x^2+2");
    }
}
