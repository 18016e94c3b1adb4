use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Gate indices are 1-based, as in the text format.
pub type GateIndex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    Zero,
    One,
    And(GateIndex, GateIndex),
    Or(GateIndex, GateIndex),
}

/// A monotone circuit `g_1, ..., g_n`; binary gates only refer to earlier gates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    gates: Vec<Gate>,
}

/// Gate type `f(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateKind {
    And,
    Or,
    Zero,
    One,
}

/// Operand `ℓ(i)` or `r(i)`: an earlier gate, or a constant for constant gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operand {
    Gate(GateIndex),
    Zero,
    One,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>) -> Result<Self> {
        if gates.is_empty() {
            return Err(Error::Circuit {
                line: 0,
                message: "circuit has no gates".into(),
            });
        }
        for (pos, gate) in gates.iter().enumerate() {
            let i = pos + 1;
            if let Gate::And(j, k) | Gate::Or(j, k) = *gate {
                if j == 0 || k == 0 || j >= i || k >= i {
                    return Err(Error::Circuit {
                        line: i,
                        message: format!(
                            "gate {i} refers to gate {} which is not earlier",
                            if j == 0 || j >= i { j } else { k }
                        ),
                    });
                }
            }
        }
        Ok(Self { gates })
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Gate `g_i` (1-based).
    pub fn gate(&self, i: GateIndex) -> Gate {
        self.gates[i - 1]
    }

    pub fn kind(&self, i: GateIndex) -> GateKind {
        match self.gate(i) {
            Gate::Zero => GateKind::Zero,
            Gate::One => GateKind::One,
            Gate::And(..) => GateKind::And,
            Gate::Or(..) => GateKind::Or,
        }
    }

    /// `(ℓ(i), r(i))`.
    pub fn operands(&self, i: GateIndex) -> (Operand, Operand) {
        match self.gate(i) {
            Gate::Zero => (Operand::Zero, Operand::Zero),
            Gate::One => (Operand::One, Operand::One),
            Gate::And(j, k) | Gate::Or(j, k) => (Operand::Gate(j), Operand::Gate(k)),
        }
    }

    /// Values of all gates, in index order (entry `i - 1` is `g_i`).
    pub fn values(&self) -> Vec<bool> {
        let mut values: Vec<bool> = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let v = match *gate {
                Gate::Zero => false,
                Gate::One => true,
                Gate::And(j, k) => values[j - 1] && values[k - 1],
                Gate::Or(j, k) => values[j - 1] || values[k - 1],
            };
            values.push(v);
        }
        values
    }

    /// Value of an operand under `values`.
    pub fn operand_value(values: &[bool], op: Operand) -> bool {
        match op {
            Operand::Gate(j) => values[j - 1],
            Operand::Zero => false,
            Operand::One => true,
        }
    }
}

/// Value of the last gate.
pub fn evaluate(c: &Circuit) -> bool {
    *c.values().last().expect("nonempty circuit")
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, gate) in self.gates.iter().enumerate() {
            let i = pos + 1;
            match gate {
                Gate::Zero => writeln!(f, "{i} = 0")?,
                Gate::One => writeln!(f, "{i} = 1")?,
                Gate::And(j, k) => writeln!(f, "{i} = AND {j} {k}")?,
                Gate::Or(j, k) => writeln!(f, "{i} = OR {j} {k}")?,
            }
        }
        Ok(())
    }
}

/// Parses `i = 0`, `i = 1`, `i = AND j k`, `i = OR j k`, one gate per line with
/// indices `1, 2, ...` in order. Blank lines and `#` comments are ignored.
pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut gates = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Circuit { line, message };
        let (lhs, rhs) = content
            .split_once('=')
            .ok_or_else(|| err("expected `index = definition`".into()))?;
        let index: usize = lhs
            .trim()
            .parse()
            .map_err(|_| err(format!("bad gate index `{}`", lhs.trim())))?;
        let expected = gates.len() + 1;
        if index != expected {
            return Err(err(format!("expected gate {expected}, found gate {index}")));
        }
        let tokens: Vec<&str> = rhs.split_whitespace().collect();
        let operand = |tok: &str| -> Result<GateIndex> {
            let j: usize = tok.parse().map_err(|_| err(format!("bad operand `{tok}`")))?;
            if j == 0 || j >= index {
                return Err(err(format!("gate {index} refers to gate {j}, which is not earlier")));
            }
            Ok(j)
        };
        let gate = match tokens.as_slice() {
            ["0"] => Gate::Zero,
            ["1"] => Gate::One,
            [op, j, k] if op.eq_ignore_ascii_case("and") => Gate::And(operand(j)?, operand(k)?),
            [op, j, k] if op.eq_ignore_ascii_case("or") => Gate::Or(operand(j)?, operand(k)?),
            _ => return Err(err(format!("bad gate definition `{}`", rhs.trim()))),
        };
        gates.push(gate);
    }
    Circuit::new(gates)
}

/// A random circuit with `n` gates, determined by `(n, seed)`.
///
/// Gates 1 and 2 are constants. Each later gate is an AND, an OR or a constant
/// with probability 1/3 each; operands are uniform over earlier gates and
/// constants are 0 or 1 with probability 1/2.
pub fn random_circuit(n: usize, seed: u64) -> Circuit {
    assert!(n >= 1, "a circuit needs at least one gate");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gates = Vec::with_capacity(n);
    for i in 1..=n {
        let constant = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { Gate::One } else { Gate::Zero };
        let gate = if i <= 2 {
            constant(&mut rng)
        } else {
            match rng.gen_range(0..3) {
                0 => Gate::And(rng.gen_range(1..i), rng.gen_range(1..i)),
                1 => Gate::Or(rng.gen_range(1..i), rng.gen_range(1..i)),
                _ => constant(&mut rng),
            }
        };
        gates.push(gate);
    }
    Circuit::new(gates).expect("operands are earlier gates")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const SAMPLE: &str = "1 = 0\n2 = 1\n3 = AND 1 2\n4 = OR 3 3\n";

    #[test]
    fn parses_examples() {
        assert_eq!(parse_circuit("1 = 0").unwrap().gates(), &[Gate::Zero]);
        assert_eq!(
            parse_circuit("1 = 1\n2 = AND 1 1\n").unwrap().gates(),
            &[Gate::One, Gate::And(1, 1)]
        );
        let c = parse_circuit(SAMPLE).unwrap();
        assert_eq!(c.gates(), &[Gate::Zero, Gate::One, Gate::And(1, 2), Gate::Or(3, 3)]);
        assert_eq!(parse_circuit(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn rejects_bad_circuits() {
        for (text, line) in [
            ("1 = AND 1 1", 1),
            ("1 = 1\n3 = 0", 2),
            ("1 = 1\n2 = XOR 1 1", 2),
            ("1 = 1\n\n2 = OR 1 2", 3),
            ("one = 1", 1),
        ] {
            match parse_circuit(text) {
                Err(Error::Circuit { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(parse_circuit("# nothing\n").is_err());
    }

    #[test]
    fn evaluates() {
        assert!(evaluate(&parse_circuit("1 = 1").unwrap()));
        assert!(evaluate(&parse_circuit("1 = 1\n2 = 1\n3 = AND 1 2").unwrap()));
        assert!(!evaluate(&parse_circuit(SAMPLE).unwrap()));
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_circuit(12, 7), random_circuit(12, 7));
        assert!(matches!(random_circuit(1, 3).gates(), [Gate::Zero | Gate::One]));
        let c = random_circuit(12, 7);
        assert!(matches!(c.gate(1), Gate::Zero | Gate::One));
        assert!(matches!(c.gate(2), Gate::Zero | Gate::One));
    }
}
