use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Holds,
    /// A stated hypothesis (or an implication's premise) is false.
    Vacuous,
    Violated,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "HOLDS",
            Outcome::Vacuous => "VACUOUS",
            Outcome::Violated => "VIOLATED",
        })
    }
}

/// One evaluated statement appearing in a theorem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub name: String,
    pub value: bool,
}

pub fn side(name: impl Into<String>, value: bool) -> Side {
    Side {
        name: name.into(),
        value,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    pub subject: String,
    pub verdict: Outcome,
    /// Hypotheses first, then the compared statements.
    pub sides: Vec<Side>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl TheoremVerdict {
    /// All compared sides (excluding hypotheses) share this value, for an
    /// equivalence that holds.
    pub fn shared_value(&self) -> Option<bool> {
        let compared: Vec<&Side> = self
            .sides
            .iter()
            .filter(|s| !s.name.starts_with("hyp:"))
            .collect();
        let first = compared.first()?.value;
        compared.iter().all(|s| s.value == first).then_some(first)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Outcome::Violated
    }
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.verdict, self.theorem_id, self.subject)?;
        let sides: Vec<String> = self
            .sides
            .iter()
            .map(|s| format!("{}={}", s.name, s.value))
            .collect();
        if !sides.is_empty() {
            write!(f, " [{}]", sides.join(", "))?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        for n in &self.notes {
            write!(f, " note: {n}")?;
        }
        Ok(())
    }
}

fn hyp_sides(hypotheses: &[Side]) -> Vec<Side> {
    hypotheses
        .iter()
        .map(|h| side(format!("hyp:{}", h.name), h.value))
        .collect()
}

/// All `sides` must agree when every hypothesis is true.
pub fn equivalence(
    id: &str,
    subject: &str,
    hypotheses: &[Side],
    sides: Vec<Side>,
) -> TheoremVerdict {
    let mut all = hyp_sides(hypotheses);
    let vacuous = hypotheses.iter().any(|h| !h.value);
    let agree = sides.windows(2).all(|w| w[0].value == w[1].value);
    let witness = (!vacuous && !agree).then(|| {
        let parts: Vec<String> = sides
            .iter()
            .map(|s| format!("{}={}", s.name, s.value))
            .collect();
        format!("sides disagree: {}", parts.join(", "))
    });
    all.extend(sides);
    TheoremVerdict {
        theorem_id: id.to_string(),
        subject: subject.to_string(),
        verdict: if vacuous {
            Outcome::Vacuous
        } else if agree {
            Outcome::Holds
        } else {
            Outcome::Violated
        },
        sides: all,
        witness,
        notes: Vec::new(),
    }
}

/// `premise ⇒ conclusion`; VACUOUS when the premise is false. The witness
/// closure runs only on violation.
pub fn implication(
    id: &str,
    subject: &str,
    premise: Side,
    conclusion: Side,
    witness: impl FnOnce() -> String,
) -> TheoremVerdict {
    let verdict = match (premise.value, conclusion.value) {
        (false, _) => Outcome::Vacuous,
        (true, true) => Outcome::Holds,
        (true, false) => Outcome::Violated,
    };
    TheoremVerdict {
        theorem_id: id.to_string(),
        subject: subject.to_string(),
        witness: (verdict == Outcome::Violated).then(witness),
        verdict,
        sides: vec![premise, conclusion],
        notes: Vec::new(),
    }
}
